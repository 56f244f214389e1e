#pragma once

#include <span>
#include <vector>

#include "qrr/series.hpp"

namespace qrr {

// (t; q)_n = prod_{k=1..n} (1 - t q^(k-1)), truncated to O(q^prec).
// t.mag_exp may be negative, giving a finite Laurent object.
TruncSeries poch_finite(const Monomial& t, Exponent n, Exponent prec);

// (t; q)_inf. Requires t.mag_exp >= 1 (Divergent otherwise).
TruncSeries poch_inf(const Monomial& t, Exponent prec);

// (t; q^base)_inf = prod_{k>=0} (1 - t q^(k*base)). Requires t.mag_exp >= 1
// and base >= 1.
TruncSeries poch_inf_base(const Monomial& t, Exponent base, Exponent prec);

// (q^a; q^m)_inf.
TruncSeries poch_mod(Exponent a, Exponent m, Exponent prec);

// Shorthands for the ubiquitous (q)_n and (q)_inf.
TruncSeries qpoch(Exponent n, Exponent prec);
TruncSeries qpoch_inf(Exponent prec);

// 1/(q)_n. Zero for n < 0, matching the convention 1/(q)_n = 0 there.
TruncSeries inv_qpoch(Exponent n, Exponent prec);

// Power-series kernels on a dense coefficient window c[0..len) holding the
// coefficients of q^0 .. q^(len-1). They are exact: entry i depends only on
// entries <= i.

// c <- c * (1 - coef * q^e), e >= 1.
void mul_binomial_inplace(std::span<Coeff> c, const Coeff& coef, Exponent e);
// c <- c / (1 - q^k), k >= 1.
void div_one_minus_qk_inplace(std::span<Coeff> c, Exponent k);
// c <- c / (q)_n.
void div_qpoch_inplace(std::span<Coeff> c, Exponent n);
// c <- c * (q)_n.
void mul_qpoch_inplace(std::span<Coeff> c, Exponent n);
// acc[shift + i] += sign * src[i] for every index that lands inside acc.
void add_shifted(std::span<Coeff> acc, std::span<const Coeff> src, Exponent shift, int sign);

// 1/(q)_n for n = 0 .. prec, all truncated to O(q^prec). For n >= prec - 1
// the entries coincide with 1/(q)_inf, so lookups clamp.
class InvQPochTable {
 public:
  explicit InvQPochTable(Exponent prec);

  Exponent prec() const { return prec_; }
  // Coefficients of 1/(q)_n, n >= 0.
  std::span<const Coeff> operator()(Exponent n) const;

 private:
  Exponent prec_;
  std::vector<std::vector<Coeff>> rows_;
};

}  // namespace qrr
