#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qrr/error.hpp"
#include "qrr/qpoch.hpp"
#include "qrr/series.hpp"

using namespace qrr;

namespace {

TruncSeries poly(std::vector<long> c, Exponent prec, Exponent offset = 0) {
  std::vector<Coeff> v(c.begin(), c.end());
  return TruncSeries::from_coeffs(std::move(v), offset, prec);
}

TruncSeries random_series(std::mt19937_64& rng, Exponent length) {
  std::uniform_int_distribution<int> off(-3, 3);
  std::uniform_int_distribution<long> val(-50, 50);
  const Exponent o = off(rng);
  std::vector<Coeff> c(static_cast<std::size_t>(length));
  for (auto& x : c) x = val(rng);
  return TruncSeries::from_coeffs(std::move(c), o);
}

std::vector<long> as_longs(const TruncSeries& s, Exponent from, Exponent to) {
  std::vector<long> out;
  for (Exponent e = from; e < to; ++e) out.push_back(static_cast<long>(s[e]));
  return out;
}

}  // namespace

TEST_CASE("addition keeps the smaller precision") {
  auto s = poly({1, -1}, 5) + poly({0, 1}, 7);
  CHECK(s.prec() == 5);
  CHECK(as_longs(s, 0, 5) == std::vector<long>{1, 0, 0, 0, 0});
  auto d = poly({1, 0, 1}, 4) + poly({1, 0, 1}, 4);
  CHECK(as_longs(d, 0, 4) == std::vector<long>{2, 0, 2, 0});
  auto z = poly({3, 4}, 6) + TruncSeries::zero(6);
  CHECK(z == poly({3, 4}, 6));
}

TEST_CASE("multiplication tracks offsets and precision") {
  auto p = poly({1, -1}, 10) * poly({1, 0, -1}, 10);
  CHECK(as_longs(p, 0, 5) == std::vector<long>{1, -1, -1, 1, 0});
  auto a = poly({2, 3}, 8, 2);
  auto b = poly({1, 1}, 6, -1);
  auto c = a * b;
  CHECK(c.offset() == 1);
  CHECK(c.prec() == std::min<Exponent>(8 - 1, 6 + 2));
  CHECK(a * TruncSeries::one(20) == a.truncated(8));

  // (1 - q) times the explicit geometric series.
  const std::size_t n = 30;
  auto g = oracle::geometric(1, n);
  auto gs = TruncSeries::from_coeffs(std::vector<Coeff>(g.begin(), g.end()), 0);
  CHECK(equal_to_order(poly({1, -1}, 30) * gs, TruncSeries::one(30), 30).equal);
}

TEST_CASE("inversion") {
  auto inv = ts_invert(poly({1, -1}, 12));
  for (Exponent e = 0; e < 12; ++e) CHECK(inv[e] == 1);

  auto p = ts_invert(qpoch_inf(8));
  CHECK(as_longs(p, 0, 8) == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15});

  auto s = poly({-1, 4, 0, 7}, 9, 2);
  auto back = ts_invert(ts_invert(s));
  CHECK(equal_to_order(back, s, s.prec()).equal);

  CHECK_THROWS_AS(ts_invert(poly({2, 1}, 4)), Error);
  try {
    ts_invert(poly({2, 1}, 4));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvertible);
  }
  CHECK_THROWS_AS(ts_invert(TruncSeries::zero(5)), Error);
}

TEST_CASE("Laurent inversion shifts the offset") {
  auto s = poly({1, 1}, 10, 3);  // q^3 + q^4
  auto inv = ts_invert(s);
  CHECK(inv.offset() == -3);
  auto prod = s * inv;
  CHECK(equal_to_order(prod, TruncSeries::one(prod.prec()), prod.prec()).equal);
}

TEST_CASE("finite Pochhammer") {
  auto p = poch_finite(Monomial::q_power(1), 2, 10);
  CHECK(as_longs(p, 0, 5) == std::vector<long>{1, -1, -1, 1, 0});
  CHECK(poch_finite(Monomial::q_power(7, -1), 0, 5) == TruncSeries::one(5));
  auto l = poch_finite(Monomial::q_power(-3), 1, 4);
  CHECK(l.offset() == -3);
  CHECK(l[-3] == -1);
  CHECK(l[0] == 1);
  CHECK(l[-2] == 0);

  // Recursion (t)_{n+1} = (t)_n (1 - t q^n).
  for (Exponent m : {-4, -1, 0, 1, 3}) {
    for (Exponent n = 0; n < 6; ++n) {
      const Monomial t = Monomial::q_power(m, m % 2 == 0 ? 1 : -1);
      auto lhs = poch_finite(t, n + 1, 20);
      auto rhs = poch_finite(t, n, 40) *
                 (TruncSeries::one(60) - TruncSeries::monomial(t.coefficient(), m + n, 60).shifted(0));
      CHECK(equal_to_order(lhs, rhs, 20).equal);
    }
  }
}

TEST_CASE("infinite Pochhammer") {
  auto e = qpoch_inf(13);
  CHECK(as_longs(e, 0, 13) == std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1});
  CHECK(as_longs(poch_inf(Monomial::q_power(2), 3), 0, 3) == std::vector<long>{1, 0, -1});
  CHECK_THROWS_AS(poch_inf(Monomial::q_power(0), 5), Error);
  CHECK(poch_mod(1, 1, 40) == qpoch_inf(40));
  CHECK(as_longs(poch_mod(5, 5, 6), 0, 6) == std::vector<long>{1, 0, 0, 0, 0, -1});
  CHECK_THROWS_AS(poch_mod(0, 5, 6), Error);

  auto direct = oracle::product(1, 1, 1, 80);
  auto ours = qpoch_inf(80);
  for (Exponent i = 0; i < 80; ++i) CHECK(ours[i] == direct[static_cast<std::size_t>(i)]);
}

TEST_CASE("partition oracle for 1/(q)_inf") {
  auto p = oracle::partition_counts(60);
  auto inv = ts_invert(qpoch_inf(61));
  for (int n = 0; n <= 60; ++n) CHECK(inv[n] == p[static_cast<std::size_t>(n)]);
  InvQPochTable table(61);
  for (int n = 0; n <= 60; ++n) CHECK(table(500)[static_cast<std::size_t>(n)] == p[static_cast<std::size_t>(n)]);
}

TEST_CASE("1/(q)_n via kernels matches explicit products") {
  for (long m : {0L, 1L, 2L, 5L, 9L, 40L}) {
    auto ref = oracle::inv_qpoch(m, 30);
    auto ours = inv_qpoch(m, 30);
    for (Exponent i = 0; i < 30; ++i) CHECK(ours[i] == ref[static_cast<std::size_t>(i)]);
  }
  CHECK(inv_qpoch(-1, 10).is_zero());

  std::vector<Coeff> w(25);
  w[0] = 1;
  div_qpoch_inplace(w, 6);
  mul_qpoch_inplace(w, 6);
  CHECK(w[0] == 1);
  for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i] == 0);
}

TEST_CASE("substitute and contract powers") {
  auto s = substitute_power(poly({1, -1}, 4), 2);
  CHECK(s.prec() == 8);
  CHECK(as_longs(s, 0, 4) == std::vector<long>{1, 0, -1, 0});
  auto e = qpoch_inf(5);
  CHECK(substitute_power(e, 1) == e);
  auto e3 = substitute_power(e, 3);
  CHECK(e3.prec() == 15);
  CHECK(as_longs(e3, 0, 7) == std::vector<long>{1, 0, 0, -1, 0, 0, -1});
  CHECK(substitute_power(substitute_power(e, 2), 3) == substitute_power(e, 6));
  CHECK(contract_power(e3, 3) == e);
  CHECK_THROWS_AS(contract_power(poly({1, 1}, 4), 2), Error);
}

TEST_CASE("equal_to_order reports the first mismatch") {
  const Exponent n = 9;
  auto a = TruncSeries::one(n);
  auto b = a + TruncSeries::monomial(Coeff{1}, n - 1, n);
  auto r = equal_to_order(a, b, n);
  CHECK_FALSE(r.equal);
  REQUIRE(r.first_mismatch.has_value());
  CHECK(*r.first_mismatch == n - 1);
  CHECK(r.lhs == 0);
  CHECK(r.rhs == 1);
  CHECK(equal_to_order(a, a, n).equal);
  CHECK_THROWS_AS(equal_to_order(a, b, n + 1), Error);
}

TEST_CASE("text rendering") {
  CHECK(qpoch_inf(7).to_string() == "1 - q - q^2 + q^5 + O(q^7)");
  CHECK(poly({0, 2, -3}, 3).to_string() == "2*q - 3*q^2 + O(q^3)");
  CHECK(TruncSeries::zero(4).to_string() == "O(q^4)");
  CHECK(poly({1}, 0, -2).to_string() == "q^-2 + O(q^0)");
}

TEST_CASE("coefficient access beyond precision throws") {
  auto s = poly({1, 2}, 2);
  CHECK(s[-5] == 0);
  CHECK_THROWS_AS(s[2], Error);
  CHECK_THROWS_AS(s.truncated(3), Error);
  CHECK(s.truncated(0).prec() == 0);
}

TEST_CASE("ring laws on random series") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> len(1, 15);
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = random_series(rng, len(rng));
    auto b = random_series(rng, len(rng));
    auto c = random_series(rng, len(rng));
    auto ab = a * b;
    auto ba = b * a;
    REQUIRE(equal_to_order(ab, ba, ab.prec()).equal);
    auto left = (a * b) * c;
    auto right = a * (b * c);
    const Exponent n = std::min(left.prec(), right.prec());
    REQUIRE(equal_to_order(left, right, n).equal);
    auto dist_l = a * (b + c);
    auto dist_r = a * b + a * c;
    const Exponent m = std::min(dist_l.prec(), dist_r.prec());
    REQUIRE(equal_to_order(dist_l, dist_r, m).equal);
    REQUIRE((a + b) == (b + a));
    auto s1 = (a + b) + c;
    auto s2 = a + (b + c);
    REQUIRE(s1 == s2);
  }
}

TEST_CASE("random unit series invert") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> val(-9, 9);
  std::uniform_int_distribution<int> shift(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Coeff> c(20);
    c[0] = trial % 2 == 0 ? 1 : -1;
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = val(rng);
    auto a = TruncSeries::from_coeffs(std::move(c), shift(rng));
    auto prod = a * ts_invert(a);
    REQUIRE(equal_to_order(prod, TruncSeries::one(prod.prec()), prod.prec()).equal);
  }
}
