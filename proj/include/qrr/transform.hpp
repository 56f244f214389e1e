#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qrr/report.hpp"
#include "qrr/series.hpp"

namespace qrr {

// n -> (sequence term to O(q^prec)).
using SeriesGenerator = std::function<TruncSeries(Exponent n, Exponent prec)>;

// (alpha_n, beta_n) with
//   beta_n = sum_{k=0..n} alpha_k / ((q)_{n-k} (a q)_{n+k}),  a = rel.
// Generators must be callable concurrently.
struct BaileyPair {
  Monomial rel;
  SeriesGenerator alpha;
  SeriesGenerator beta;
  std::string label;
};

// Slater's B(3), relative to a = q.
BaileyPair b3_pair();

// Closed forms after l - 2 chain steps from B(3) (l >= 2; l = 2 is B(3)).
TruncSeries b3_alpha_closed(Exponent l, Exponent n, Exponent prec);
TruncSeries b3_beta_closed(Exponent l, Exponent n, Exponent prec);

// Checks the defining relation for n = 0..n_max to O(q^prec).
IdentityReport bailey_verify(const BaileyPair& pair, Exponent n_max, Exponent prec);

// One step of the chain in its b, c -> infinity limit:
//   alpha'_n = a^n q^(n^2) alpha_n,
//   beta'_n  = sum_{k=0..n} a^k q^(k^2) beta_k / (q)_{n-k}.
BaileyPair bailey_chain_step(const BaileyPair& pair);

// Double sum against sum_{n>=0} q^(3n^2+2n)(1 - q^(2n+1)).
TruncSeries blb3_lhs(Exponent prec);
IdentityReport blb3_check(Exponent prec);

// (l-1)-fold sum over 0 <= n_1 <= ... <= n_{l-1} against the l-analogue.
TruncSeries genblb3_lhs(Exponent l, Exponent prec);
IdentityReport genblb3_check(Exponent l, Exponent prec);

// Single sum over a versus 1/(q)_inf times an (n-2)-fold sum; c has n-1
// entries. Both sides may start below q^0 when some c_k are negative.
TruncSeries lemma_key_lhs(Exponent n, const std::vector<Exponent>& c, Exponent prec);
TruncSeries lemma_key_rhs(Exponent n, const std::vector<Exponent>& c, Exponent prec);
IdentityReport lemma_key_check(Exponent n, const std::vector<Exponent>& c, Exponent prec);

// Exponent bookkeeping identity used when a partial-sum chain is
// re-indexed. j holds the indices after the shift i_k -> i_k - i_{k-1}.
bool sumtosum_check(const std::vector<Exponent>& j);
IdentityReport sumtosum_report(const std::vector<Exponent>& j);

}  // namespace qrr
