#include "qrr/qpoch.hpp"

#include <algorithm>

#include "qrr/error.hpp"

namespace qrr {

void mul_binomial_inplace(std::span<Coeff> c, const Coeff& coef, Exponent e) {
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "mul_binomial_inplace: e must be >= 1");
  const auto step = static_cast<std::size_t>(e);
  if (step >= c.size()) return;
  // Walk downward so each read sees the old value.
  Coeff scratch;
  for (std::size_t i = c.size(); i-- > step;) {
    if (c[i - step].is_zero()) continue;
    if (coef == 1) {
      c[i] -= c[i - step];
    } else {
      boost::multiprecision::multiply(scratch, coef, c[i - step]);
      c[i] -= scratch;
    }
  }
}

void div_one_minus_qk_inplace(std::span<Coeff> c, Exponent k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "div_one_minus_qk_inplace: k must be >= 1");
  const auto step = static_cast<std::size_t>(k);
  for (std::size_t i = step; i < c.size(); ++i) c[i] += c[i - step];
}

void div_qpoch_inplace(std::span<Coeff> c, Exponent n) {
  // Factors 1/(1-q^k) with k >= len act as the identity on the window.
  const Exponent top = std::min<Exponent>(n, static_cast<Exponent>(c.size()) - 1);
  for (Exponent k = 1; k <= top; ++k) div_one_minus_qk_inplace(c, k);
}

void mul_qpoch_inplace(std::span<Coeff> c, Exponent n) {
  const Exponent top = std::min<Exponent>(n, static_cast<Exponent>(c.size()) - 1);
  const Coeff one{1};
  for (Exponent k = 1; k <= top; ++k) mul_binomial_inplace(c, one, k);
}

void add_shifted(std::span<Coeff> acc, std::span<const Coeff> src, Exponent shift, int sign) {
  if (shift < 0) throw Error(ErrorKind::InvalidArgument, "add_shifted: negative shift");
  const auto s = static_cast<std::size_t>(shift);
  if (s >= acc.size()) return;
  const std::size_t n = std::min(src.size(), acc.size() - s);
  if (sign >= 0) {
    for (std::size_t i = 0; i < n; ++i) acc[s + i] += src[i];
  } else {
    for (std::size_t i = 0; i < n; ++i) acc[s + i] -= src[i];
  }
}

namespace {

// prod_{k=0}^{count-1} (1 - t q^(k*step)) with t.mag_exp >= 1 or the product
// finite. Factors are applied to a plain window starting at q^0.
TruncSeries product_window(const Monomial& t, Exponent step, Exponent count, Exponent prec) {
  std::vector<Coeff> c(static_cast<std::size_t>(std::max<Exponent>(prec, 1)));
  c[0] = 1;
  const Coeff coef = t.coefficient();
  for (Exponent k = 0; k < count; ++k) {
    const Exponent e = t.mag_exp + k * step;
    if (e >= prec) break;
    mul_binomial_inplace(c, coef, e);
  }
  return TruncSeries::from_coeffs(std::move(c), 0, std::max<Exponent>(prec, 1));
}

}  // namespace

TruncSeries poch_finite(const Monomial& t, Exponent n, Exponent prec) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "poch_finite: n must be nonnegative");
  if (n == 0 || t.scale == 0) return TruncSeries::one(std::max<Exponent>(prec, 1));
  if (t.mag_exp >= 1) return product_window(t, 1, n, prec);
  // Some factors carry q^0 or negative powers: multiply factor by factor as
  // finite Laurent polynomials. The result is exact, so truncate at the end.
  Exponent lo = 0;
  for (Exponent k = 0; k < n; ++k) lo += std::min<Exponent>(0, t.mag_exp + k);
  const Exponent hi = std::max<Exponent>(prec, 1);
  TruncSeries acc = TruncSeries::one(hi - lo);
  const Coeff coef = t.coefficient();
  for (Exponent k = 0; k < n; ++k) {
    const Exponent e = t.mag_exp + k;
    std::vector<Coeff> f(static_cast<std::size_t>(std::abs(e) + 1));
    Exponent off = 0;
    if (e >= 0) {
      f.front() = 1;
      f.back() -= coef;
    } else {
      off = e;
      f.front() = -coef;
      f.back() += 1;
    }
    // Pad so the factor is known far enough that products stay exact up to hi.
    TruncSeries factor = TruncSeries::from_coeffs(std::move(f), off, hi - lo + 1 + std::abs(off));
    acc = ts_mul(acc, factor);
  }
  if (acc.prec() < hi) {
    throw Error(ErrorKind::InsufficientPrecision, "poch_finite: internal precision shortfall");
  }
  return acc.truncated(hi);
}

TruncSeries poch_inf(const Monomial& t, Exponent prec) { return poch_inf_base(t, 1, prec); }

TruncSeries poch_inf_base(const Monomial& t, Exponent base, Exponent prec) {
  if (base < 1) throw Error(ErrorKind::Divergent, "infinite product needs base >= 1");
  if (t.mag_exp < 1 && t.scale != 0) {
    throw Error(ErrorKind::Divergent,
                "infinite product (t; q)_inf needs t of positive q-valuation, got q^" +
                    std::to_string(t.mag_exp));
  }
  const Exponent count = prec;  // factors past this one are 1 mod q^prec
  return product_window(t, base, count, prec);
}

TruncSeries poch_mod(Exponent a, Exponent m, Exponent prec) {
  if (a < 1 || m < 1) {
    throw Error(ErrorKind::Divergent, "(q^a; q^m)_inf needs a >= 1 and m >= 1");
  }
  return poch_inf_base(Monomial::q_power(a), m, prec);
}

TruncSeries qpoch(Exponent n, Exponent prec) { return poch_finite(Monomial::q_power(1), n, prec); }

TruncSeries qpoch_inf(Exponent prec) { return poch_inf(Monomial::q_power(1), prec); }

TruncSeries inv_qpoch(Exponent n, Exponent prec) {
  const Exponent p = std::max<Exponent>(prec, 1);
  if (n < 0) return TruncSeries::zero(p);
  std::vector<Coeff> c(static_cast<std::size_t>(p));
  c[0] = 1;
  div_qpoch_inplace(c, n);
  return TruncSeries::from_coeffs(std::move(c), 0);
}

InvQPochTable::InvQPochTable(Exponent prec) : prec_(std::max<Exponent>(prec, 1)) {
  const auto len = static_cast<std::size_t>(prec_);
  rows_.reserve(len);
  std::vector<Coeff> row(len);
  row[0] = 1;
  rows_.push_back(row);
  for (Exponent n = 1; n < prec_; ++n) {
    div_one_minus_qk_inplace(row, n);
    rows_.push_back(row);
  }
}

std::span<const Coeff> InvQPochTable::operator()(Exponent n) const {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "InvQPochTable: negative index");
  const auto i = static_cast<std::size_t>(std::min<Exponent>(n, prec_ - 1));
  return rows_[i];
}

}  // namespace qrr
