#include "qrr/classical.hpp"

#include <functional>

#include "qrr/error.hpp"
#include "qrr/qpoch.hpp"

namespace qrr {

namespace {

using json = nlohmann::ordered_json;

void require_prec(Exponent prec) {
  if (prec < 1) throw Error(ErrorKind::InvalidArgument, "order must be at least 1");
}

std::vector<Coeff> zeros(Exponent prec) { return std::vector<Coeff>(static_cast<std::size_t>(prec)); }

TruncSeries finish(std::vector<Coeff> c) { return TruncSeries::from_coeffs(std::move(c), 0); }

// Window of length prec - e holding 1/(q)_{n_1} ... 1/(q)_{n_k}.
std::vector<Coeff> denominators(std::initializer_list<Exponent> ns, Exponent len) {
  std::vector<Coeff> w(static_cast<std::size_t>(len));
  w[0] = 1;
  for (Exponent n : ns) div_qpoch_inplace(w, n);
  return w;
}

}  // namespace

TruncSeries h_series(Exponent b, Exponent prec) {
  if (b < 1) throw Error(ErrorKind::InvalidArgument, "h_b needs b >= 1");
  require_prec(prec);
  auto c = zeros(prec);
  auto exponent = [b](Exponent n) { return b * n * (n + 1) / 2 - n; };
  auto eps = [b](Exponent n) {
    if (b % 2 == 1) return n % 2 == 0 ? 1 : -1;
    return n >= 0 ? 1 : -1;
  };
  // The exponent is nondecreasing in |n| on each side for every b >= 1.
  for (Exponent n = 0;; ++n) {
    const Exponent e = exponent(n);
    if (e >= prec) break;
    c[static_cast<std::size_t>(e)] += eps(n);
  }
  for (Exponent n = -1;; --n) {
    const Exponent e = exponent(n);
    if (e >= prec) break;
    c[static_cast<std::size_t>(e)] += eps(n);
  }
  return finish(std::move(c));
}

TruncSeries rr_lhs(int s, Exponent prec) {
  if (s != 0 && s != 1) throw Error(ErrorKind::InvalidArgument, "Rogers-Ramanujan needs s in {0, 1}");
  require_prec(prec);
  auto c = zeros(prec);
  InvQPochTable inv(prec);
  for (Exponent n = 0; n * n + s * n < prec; ++n) add_shifted(c, inv(n), n * n + s * n, 1);
  return finish(std::move(c));
}

TruncSeries rr_product(int s, Exponent prec) {
  if (s != 0 && s != 1) throw Error(ErrorKind::InvalidArgument, "Rogers-Ramanujan needs s in {0, 1}");
  require_prec(prec);
  return ts_invert(poch_mod(1 + s, 5, prec) * poch_mod(4 - s, 5, prec));
}

IdentityReport rr_check(int s, Exponent prec) {
  return timed([&] {
    return compare_series("rr", json{{"s", s}}, rr_lhs(s, prec), rr_product(s, prec), prec);
  });
}

namespace {

void check_ag_params(int k, int i) {
  if (k < 2 || i < 1 || i > k) {
    throw Error(ErrorKind::InvalidArgument, "Andrews-Gordon needs k >= 2 and 1 <= i <= k");
  }
}

}  // namespace

TruncSeries ag_lhs(int k, int i, Exponent prec) {
  check_ag_params(k, i);
  require_prec(prec);
  auto c = zeros(prec);
  const int depth = k - 1;
  std::vector<Exponent> N(static_cast<std::size_t>(depth) + 1, 0);  // N[depth] = 0 sentinel
  std::vector<Coeff> w;
  // Fix N_1, N_2, ... in turn; N_j <= N_{j-1} and the exponent only grows.
  std::function<void(int, Exponent, Exponent)> walk = [&](int j, Exponent bound, Exponent e) {
    if (j == depth) {
      w.assign(static_cast<std::size_t>(prec - e), Coeff{});
      w[0] = 1;
      for (int t = 0; t < depth; ++t) div_qpoch_inplace(w, N[t] - N[t + 1]);
      add_shifted(c, w, e, 1);
      return;
    }
    for (Exponent v = 0; v <= bound; ++v) {
      // N_j contributes N_j^2, plus N_j when j >= i (1-based).
      const Exponent term = v * v + (j + 1 >= i ? v : 0);
      if (e + term >= prec) break;
      N[static_cast<std::size_t>(j)] = v;
      walk(j + 1, v, e + term);
    }
    N[static_cast<std::size_t>(j)] = 0;
  };
  walk(0, prec, 0);
  return finish(std::move(c));
}

TruncSeries ag_product(int k, int i, Exponent prec) {
  check_ag_params(k, i);
  require_prec(prec);
  const Exponent m = 2 * k + 1;
  return poch_mod(i, m, prec) * poch_mod(m - i, m, prec) * poch_mod(m, m, prec) * ts_invert(qpoch_inf(prec));
}

IdentityReport ag_check(int k, int i, Exponent prec) {
  return timed([&] {
    return compare_series("ag", json{{"k", k}, {"i", i}}, ag_lhs(k, i, prec), ag_product(k, i, prec), prec);
  });
}

IdentityReport euler1_check(Exponent m, Exponent prec) {
  if (m < 1) throw Error(ErrorKind::Divergent, "Euler identities need t = q^m with m >= 1");
  require_prec(prec);
  return timed([&] {
    auto c = zeros(prec);
    InvQPochTable inv(prec);
    for (Exponent n = 0; n * m < prec; ++n) add_shifted(c, inv(n), n * m, 1);
    auto rhs = ts_invert(poch_inf(Monomial::q_power(m), prec));
    return compare_series("euler1", json{{"m", m}}, finish(std::move(c)), rhs, prec);
  });
}

IdentityReport euler2_check(Exponent m, Exponent prec) {
  if (m < 1) throw Error(ErrorKind::Divergent, "Euler identities need t = q^m with m >= 1");
  require_prec(prec);
  return timed([&] {
    auto c = zeros(prec);
    InvQPochTable inv(prec);
    for (Exponent n = 0;; ++n) {
      const Exponent e = m * n + n * (n - 1) / 2;
      if (e >= prec) break;
      add_shifted(c, inv(n), e, n % 2 == 0 ? 1 : -1);
    }
    auto rhs = poch_inf(Monomial::q_power(m), prec);
    return compare_series("euler2", json{{"m", m}}, finish(std::move(c)), rhs, prec);
  });
}

TruncSeries andy_lhs(Exponent A, Exponent prec) {
  require_prec(prec);
  auto c = zeros(prec);
  // 1/(q)_{n+A} vanishes until n >= -A; from there n(n+A) only grows.
  for (Exponent n = std::max<Exponent>(0, -A);; ++n) {
    const Exponent e = n * n + A * n;
    if (e >= prec) break;
    auto w = denominators({n, n + A}, prec - e);
    add_shifted(c, w, e, 1);
  }
  return finish(std::move(c));
}

IdentityReport andy_check(Exponent A, Exponent prec) {
  return timed([&] {
    return compare_series("andy", json{{"A", A}}, andy_lhs(A, prec), ts_invert(qpoch_inf(prec)), prec);
  });
}

IdentityReport qbt_check(const Monomial& t, Exponent K) {
  if (K < 0) throw Error(ErrorKind::InvalidArgument, "q-binomial theorem needs K >= 0");
  return timed([&] {
    const Exponent m = t.mag_exp;
    // After clearing (q)_K both sides are Laurent polynomials of degree at
    // most this bound; agreement past it is equality.
    const Exponent order = K * (K + std::abs(m)) + K * (K - 1) / 2 + K + 1;
    Exponent lo = 0;
    for (Exponent n = 0; n <= K; ++n) lo = std::min(lo, n * m + n * (n - 1) / 2);
    TruncSeries lhs = TruncSeries::zero(order, lo);
    const Coeff base = t.coefficient();
    Coeff tn{1};
    for (Exponent n = 0; n <= K; ++n) {
      const Exponent e = n * m + n * (n - 1) / 2;
      if (e < order) {
        Coeff coef = n % 2 == 0 ? tn : Coeff(-tn);
        auto w = denominators({n, K - n}, order - e);
        for (auto& x : w) x *= coef;
        lhs = lhs + TruncSeries::from_coeffs(std::move(w), 0).shifted(e);
      }
      tn *= base;
    }
    auto num = poch_finite(t, K, order);
    auto rhs = num * inv_qpoch(K, order - std::min<Exponent>(num.offset(), 0));
    json params{{"t", json{{"sign", t.sign}, {"exp", t.mag_exp}, {"scale", t.scale}}}, {"K", K}};
    return compare_series("qbt", params, lhs, rhs, order);
  });
}

namespace {

void check_jtp(Exponent alpha, Exponent beta, int sigma) {
  if (alpha < 1) throw Error(ErrorKind::InvalidArgument, "triple product needs alpha >= 1");
  if (sigma != 1 && sigma != -1) throw Error(ErrorKind::InvalidArgument, "sigma must be +1 or -1");
  if ((alpha - beta) % 2 != 0) {
    throw Error(ErrorKind::NonIntegralExponent, "alpha and beta must have the same parity");
  }
  if ((alpha - std::abs(beta)) / 2 < 1) {
    throw Error(ErrorKind::Divergent, "triple product needs (alpha - |beta|)/2 >= 1");
  }
}

}  // namespace

TruncSeries jtp_sum(Exponent alpha, Exponent beta, int sigma, Exponent prec) {
  check_jtp(alpha, beta, sigma);
  require_prec(prec);
  const Exponent uprec = 2 * prec;
  auto c = zeros(uprec);
  auto add = [&](Exponent n) {
    const Exponent e = alpha * n * n + beta * n;
    if (e >= uprec) return false;
    c[static_cast<std::size_t>(e)] += (sigma < 0 && n % 2 != 0) ? -1 : 1;
    return true;
  };
  for (Exponent n = 0; add(n); ++n) {}
  for (Exponent n = -1; add(n); --n) {}
  return contract_power(finish(std::move(c)), 2);
}

TruncSeries jtp_product(Exponent alpha, Exponent beta, int sigma, Exponent prec) {
  check_jtp(alpha, beta, sigma);
  require_prec(prec);
  const Exponent uprec = 2 * prec;
  // In u: (-sigma u^(alpha+beta); u^(2 alpha)) (-sigma u^(alpha-beta); u^(2 alpha)) (u^(2 alpha); u^(2 alpha)).
  auto p1 = poch_inf_base(Monomial::q_power(alpha + beta, -sigma), 2 * alpha, uprec);
  auto p2 = poch_inf_base(Monomial::q_power(alpha - beta, -sigma), 2 * alpha, uprec);
  auto p3 = poch_inf_base(Monomial::q_power(2 * alpha), 2 * alpha, uprec);
  return contract_power(p1 * p2 * p3, 2);
}

IdentityReport jtp_check(Exponent alpha, Exponent beta, int sigma, Exponent prec) {
  return timed([&] {
    return compare_series("jtp", json{{"alpha", alpha}, {"beta", beta}, {"sigma", sigma}},
                          jtp_sum(alpha, beta, sigma, prec), jtp_product(alpha, beta, sigma, prec), prec);
  });
}

IdentityReport h_odd_product_check(Exponent b, Exponent prec) {
  if (b < 3 || b % 2 == 0) throw Error(ErrorKind::InvalidArgument, "needs odd b >= 3");
  return timed([&] {
    return compare_series("h-odd-product", json{{"b", b}}, h_series(b, prec), jtp_product(b, b - 2, -1, prec),
                          prec);
  });
}

TruncSeries even_unilateral_sum(Exponent p, Exponent prec) {
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "needs p >= 1");
  require_prec(prec);
  auto c = zeros(prec);
  for (Exponent n = 0;; ++n) {
    const Exponent e = p * n * n + (p - 1) * n;
    if (e >= prec) break;
    c[static_cast<std::size_t>(e)] += 1;
    if (e + 2 * n + 1 < prec) c[static_cast<std::size_t>(e + 2 * n + 1)] -= 1;
  }
  return finish(std::move(c));
}

IdentityReport h_even_unilateral_check(Exponent p, Exponent prec) {
  return timed([&] {
    return compare_series("h-even-unilateral", json{{"p", p}}, even_unilateral_sum(p, prec),
                          h_series(2 * p, prec), prec);
  });
}

IdentityReport negab_check(Exponent a, Exponent b) {
  if (a < 0 || b < 0) throw Error(ErrorKind::InvalidArgument, "negab needs a, b >= 0");
  return timed([&] {
    // Both sides times (q)_a are Laurent polynomials of degree <= 0.
    const Exponent order = 1 + a + b;
    auto num = poch_finite(Monomial::q_power(-a - b), a, order);
    auto lhs = num * inv_qpoch(a, order - num.offset());
    const Exponent shift = -a * (a + 1) / 2 - a * b;
    auto binom = qpoch(a + b, order - shift) * inv_qpoch(a, order - shift) * inv_qpoch(b, order - shift);
    auto rhs = ts_scale(binom, Coeff(a % 2 == 0 ? 1 : -1)).shifted(shift);
    return compare_series("negab", json{{"a", a}, {"b", b}}, lhs, rhs, order);
  });
}

}  // namespace qrr
