#include "qrr/transform.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "qrr/classical.hpp"
#include "qrr/error.hpp"
#include "qrr/qpoch.hpp"

namespace qrr {

namespace {

using json = nlohmann::ordered_json;

void require_prec(Exponent prec) {
  if (prec < 1) throw Error(ErrorKind::InvalidArgument, "order must be at least 1");
}

// Caches generator values per n at the highest precision requested so far.
class SeriesCache {
 public:
  explicit SeriesCache(SeriesGenerator gen) : gen_(std::move(gen)) {}

  TruncSeries get(Exponent n, Exponent prec) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(n);
      if (it != cache_.end() && it->second.prec() >= prec) return it->second.truncated(prec);
    }
    TruncSeries v = gen_(n, prec);
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = cache_[n];
    if (slot.prec() < v.prec()) slot = v;
    return v;
  }

 private:
  SeriesGenerator gen_;
  std::mutex mu_;
  std::map<Exponent, TruncSeries> cache_;
};

SeriesGenerator cached(SeriesGenerator gen) {
  auto cache = std::make_shared<SeriesCache>(std::move(gen));
  return [cache](Exponent n, Exponent prec) { return cache->get(n, prec); };
}

// (1 - q^(2n+1)) (-1)^n q^e / (1 - q) with e = n(an + b)/2 given doubled.
TruncSeries b3_shape(Exponent n, Exponent doubled_exp, Exponent prec) {
  if (doubled_exp % 2 != 0) {
    throw Error(ErrorKind::NonIntegralExponent, "alpha exponent is not an integer");
  }
  const Exponent e = doubled_exp / 2;
  const Exponent len = std::max<Exponent>(prec - e, 1);
  std::vector<Coeff> w(static_cast<std::size_t>(len));
  w[0] = n % 2 == 0 ? 1 : -1;
  // (1 - q^(2n+1))/(1 - q) = 1 + q + ... + q^(2n).
  for (Exponent i = 1; i <= 2 * n && i < len; ++i) w[static_cast<std::size_t>(i)] = w[0];
  if (e >= prec) return TruncSeries::zero(prec);
  return TruncSeries::from_coeffs(std::move(w), 0).shifted(e);
}

}  // namespace

BaileyPair b3_pair() {
  BaileyPair p;
  p.rel = Monomial::q_power(1);
  p.alpha = [](Exponent n, Exponent prec) { return b3_shape(n, n * (3 * n + 1), prec); };
  p.beta = [](Exponent n, Exponent prec) { return inv_qpoch(n, prec); };
  p.label = "B3";
  return p;
}

TruncSeries b3_alpha_closed(Exponent l, Exponent n, Exponent prec) {
  if (l < 2) throw Error(ErrorKind::InvalidArgument, "closed form needs l >= 2");
  return b3_shape(n, (2 * l - 1) * n * n + (2 * l - 3) * n, prec);
}

TruncSeries b3_beta_closed(Exponent l, Exponent n, Exponent prec) {
  if (l < 2) throw Error(ErrorKind::InvalidArgument, "closed form needs l >= 2");
  require_prec(prec);
  std::vector<Coeff> acc(static_cast<std::size_t>(prec));
  // Chain n_1 <= n_2 <= ... <= n_{l-2} <= n_{l-1} = n, walked from the top.
  const Exponent free = l - 2;
  std::vector<Exponent> chain(static_cast<std::size_t>(free) + 1);
  chain[static_cast<std::size_t>(free)] = n;
  std::vector<Coeff> w;
  std::function<void(Exponent, Exponent)> walk = [&](Exponent k, Exponent e) {
    if (k < 0) {
      w.assign(static_cast<std::size_t>(prec - e), Coeff{});
      w[0] = 1;
      div_qpoch_inplace(w, chain[0]);
      for (Exponent t = 1; t <= free; ++t)
        div_qpoch_inplace(w, chain[static_cast<std::size_t>(t)] - chain[static_cast<std::size_t>(t - 1)]);
      add_shifted(acc, w, e, 1);
      return;
    }
    for (Exponent v = 0; v <= chain[static_cast<std::size_t>(k) + 1]; ++v) {
      const Exponent ee = e + v * (v + 1);
      if (ee >= prec) break;
      chain[static_cast<std::size_t>(k)] = v;
      walk(k - 1, ee);
    }
  };
  walk(free - 1, 0);
  return TruncSeries::from_coeffs(std::move(acc), 0);
}

IdentityReport bailey_verify(const BaileyPair& pair, Exponent n_max, Exponent prec) {
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be nonnegative");
  require_prec(prec);
  return timed([&] {
    Monomial aq = pair.rel;
    aq.mag_exp += 1;
    json params{{"pair", pair.label}, {"n_max", n_max}};
    IdentityReport last;
    for (Exponent n = 0; n <= n_max; ++n) {
      TruncSeries rhs = TruncSeries::zero(prec);
      for (Exponent k = 0; k <= n; ++k) {
        auto den = poch_finite(aq, n + k, prec) * qpoch(n - k, prec);
        rhs = rhs + pair.alpha(k, prec) * ts_invert(den);
      }
      last = compare_series("bailey-pair", params, pair.beta(n, prec), rhs, prec);
      if (!last.verified) {
        last.params["failed_n"] = n;
        return last;
      }
    }
    return last;
  });
}

BaileyPair bailey_chain_step(const BaileyPair& pair) {
  BaileyPair next;
  next.rel = pair.rel;
  next.label = pair.label + "'";
  const Monomial a = pair.rel;
  auto pow_coeff = [a](Exponent n) {
    Coeff c{1};
    const Coeff base = a.coefficient();
    for (Exponent i = 0; i < n; ++i) c *= base;
    return c;
  };
  auto alpha = pair.alpha;
  next.alpha = cached([alpha, a, pow_coeff](Exponent n, Exponent prec) {
    const Exponent shift = a.mag_exp * n + n * n;
    if (shift >= prec) return TruncSeries::zero(prec);
    auto base = alpha(n, prec - shift);
    return ts_scale(base, pow_coeff(n)).shifted(shift).truncated(std::min(prec, base.prec() + shift));
  });
  auto beta = pair.beta;
  next.beta = cached([beta, a, pow_coeff](Exponent n, Exponent prec) {
    TruncSeries acc = TruncSeries::zero(prec);
    for (Exponent k = 0; k <= n; ++k) {
      const Exponent shift = a.mag_exp * k + k * k;
      if (shift >= prec) break;
      auto term = beta(k, prec - shift) * inv_qpoch(n - k, prec - shift);
      acc = acc + ts_scale(term, pow_coeff(k)).shifted(shift);
    }
    return acc;
  });
  return next;
}

TruncSeries blb3_lhs(Exponent prec) { return genblb3_lhs(3, prec); }

IdentityReport blb3_check(Exponent prec) {
  return timed([&] {
    return compare_series("blb3", json::object(), blb3_lhs(prec), even_unilateral_sum(3, prec), prec);
  });
}

TruncSeries genblb3_lhs(Exponent l, Exponent prec) {
  if (l < 3) throw Error(ErrorKind::InvalidArgument, "genblb3 needs l >= 3");
  require_prec(prec);
  std::vector<Coeff> acc(static_cast<std::size_t>(prec));
  // chain[0..l-2] = n_1..n_{l-1}; the top one is fixed first.
  const auto top = static_cast<std::size_t>(l - 2);
  std::vector<Exponent> chain(top + 1);
  std::vector<Coeff> w;
  std::function<void(std::size_t, Exponent)> walk = [&](std::size_t k, Exponent e) {
    w.assign(static_cast<std::size_t>(prec - e), Coeff{});
    w[0] = 1;
    if (k == 0) {
      mul_qpoch_inplace(w, chain[top]);
      div_qpoch_inplace(w, chain[0]);
      for (std::size_t t = 1; t <= top; ++t) div_qpoch_inplace(w, chain[t] - chain[t - 1]);
      add_shifted(acc, w, e, chain[top] % 2 == 0 ? 1 : -1);
      return;
    }
    for (Exponent v = 0; v <= chain[k]; ++v) {
      const Exponent ee = e + v * (v + 1);
      if (ee >= prec) break;
      chain[k - 1] = v;
      walk(k - 1, ee);
    }
  };
  for (Exponent N = 0; N * (N + 1) / 2 < prec; ++N) {
    chain[top] = N;
    walk(top, N * (N + 1) / 2);
  }
  return TruncSeries::from_coeffs(std::move(acc), 0);
}

IdentityReport genblb3_check(Exponent l, Exponent prec) {
  return timed([&] {
    return compare_series("genblb3", json{{"l", l}}, genblb3_lhs(l, prec), even_unilateral_sum(l, prec), prec);
  });
}

namespace {

void check_lemma_args(Exponent n, const std::vector<Exponent>& c) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "lemma needs n >= 3");
  if (static_cast<Exponent>(c.size()) != n - 1) {
    throw Error(ErrorKind::InvalidArgument, "lemma needs exactly n - 1 values c_k");
  }
}

// Smallest value of the convex quadratic (A x^2 + B x)/2 over integers x >= lo.
Exponent min_doubled_quadratic(Exponent A, Exponent B, Exponent lo) {
  Exponent best = (A * lo * lo + B * lo) / 2;
  for (Exponent x = lo + 1;; ++x) {
    const Exponent v = (A * x * x + B * x) / 2;
    if (v > best) break;
    best = v;
  }
  return best;
}

}  // namespace

TruncSeries lemma_key_lhs(Exponent n, const std::vector<Exponent>& c, Exponent prec) {
  check_lemma_args(n, c);
  require_prec(prec);
  const Exponent C = std::accumulate(c.begin(), c.end(), Exponent{0});
  const Exponent a0 = std::max<Exponent>(0, -*std::min_element(c.begin(), c.end()));
  // f(a) = n a(a+1)/2 - a + a C, doubled: n a^2 + (n - 2 + 2C) a.
  const Exponent A = n, B = n - 2 + 2 * C;
  const Exponent lo = std::min<Exponent>(min_doubled_quadratic(A, B, a0), prec - 1);
  std::vector<Coeff> acc(static_cast<std::size_t>(prec - lo));
  std::vector<Coeff> w;
  for (Exponent a = a0;; ++a) {
    const Exponent f = (A * a * a + B * a) / 2;
    if (f >= prec) {
      if (2 * A * a + A + B > 0) break;  // increasing from here on
      continue;
    }
    w.assign(static_cast<std::size_t>(prec - f), Coeff{});
    w[0] = 1;
    div_qpoch_inplace(w, a);
    for (Exponent ck : c) div_qpoch_inplace(w, a + ck);
    add_shifted(acc, w, f - lo, (n * a) % 2 == 0 ? 1 : -1);
  }
  return TruncSeries::from_coeffs(std::move(acc), lo);
}

TruncSeries lemma_key_rhs(Exponent n, const std::vector<Exponent>& c, Exponent prec) {
  check_lemma_args(n, c);
  require_prec(prec);
  // In partial sums P_k = i_1 + ... + i_k (k = 1..n-2) the exponent splits
  // into g_k(P_k) = P_k(P_k+1)/2 + c_{k+1} P_k, with P_k >= max(P_{k-1}, -c_k).
  const auto m = static_cast<std::size_t>(n - 2);
  std::vector<Exponent> floor_k(m), min_g(m), suffix(m + 1, 0);
  for (std::size_t k = 0; k < m; ++k) {
    floor_k[k] = std::max<Exponent>(0, -c[k]);
    min_g[k] = min_doubled_quadratic(1, 1 + 2 * c[k + 1], floor_k[k]);
  }
  for (std::size_t k = m; k-- > 0;) suffix[k] = suffix[k + 1] + min_g[k];
  const Exponent lo = std::min<Exponent>(suffix[0], prec - 1);
  std::vector<Coeff> acc(static_cast<std::size_t>(prec - lo));
  std::vector<Exponent> P(m);
  std::vector<Coeff> w;
  std::function<void(std::size_t, Exponent, Exponent)> walk = [&](std::size_t k, Exponent prev, Exponent e) {
    if (k == m) {
      w.assign(static_cast<std::size_t>(prec - e), Coeff{});
      w[0] = 1;
      Exponent parity = 0;
      for (std::size_t t = 0; t < m; ++t) {
        div_qpoch_inplace(w, P[t] - (t == 0 ? 0 : P[t - 1]));
        div_qpoch_inplace(w, c[t] + P[t]);
        parity += P[t];
      }
      add_shifted(acc, w, e - lo, parity % 2 == 0 ? 1 : -1);
      return;
    }
    const Exponent vertex = -c[k + 1] - 1;  // g_k is decreasing below this
    for (Exponent v = std::max(prev, floor_k[k]);; ++v) {
      const Exponent g = (v * v + (1 + 2 * c[k + 1]) * v) / 2;
      if (e + g + suffix[k + 1] >= prec) {
        if (v > vertex) break;
        continue;
      }
      P[k] = v;
      walk(k + 1, v, e + g);
    }
  };
  walk(0, 0, 0);
  auto sum = TruncSeries::from_coeffs(std::move(acc), lo);
  return sum * ts_invert(qpoch_inf(prec - lo));
}

IdentityReport lemma_key_check(Exponent n, const std::vector<Exponent>& c, Exponent prec) {
  return timed([&] {
    return compare_series("lemma-key", json{{"n", n}, {"c", c}}, lemma_key_lhs(n, c, prec),
                          lemma_key_rhs(n, c, prec), prec);
  });
}

bool sumtosum_check(const std::vector<Exponent>& j) {
  const std::size_t n = j.size();
  if (n == 0) return true;
  // Original indices i_k = j_k - j_{k-1}, so their partial sums are j_k.
  std::vector<Exponent> i(n);
  for (std::size_t k = 0; k < n; ++k) i[k] = j[k] - (k == 0 ? 0 : j[k - 1]);
  // Everything doubled to stay in the integers.
  Exponent lhs = 0, prefix = 0;
  for (std::size_t k = 0; k < n; ++k) {
    lhs += 2 * j[k] * (1 + j[k]);
    lhs -= i[k] * (i[k] + 1);
    lhs -= 2 * i[k] * prefix;
    prefix += i[k];
  }
  Exponent rhs = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) rhs += 2 * j[k] * (j[k] + 1);
  rhs += j[n - 1] * (j[n - 1] + 1);
  return lhs == rhs;
}

IdentityReport sumtosum_report(const std::vector<Exponent>& j) {
  return timed([&] {
    IdentityReport r;
    r.identity_id = "sumtosum";
    r.params = json{{"i", j}};
    r.order = 0;
    r.verified = sumtosum_check(j);
    return r;
  });
}

}  // namespace qrr
