#include "qrr/series.hpp"

#include <algorithm>
#include <sstream>

#include "qrr/error.hpp"

namespace qrr {

namespace {

const Coeff& zero_coeff() {
  static const Coeff z{0};
  return z;
}

void require_prec_above(Exponent offset, Exponent prec, const char* where) {
  if (prec <= offset) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(where) + ": precision " + std::to_string(prec) +
                    " must exceed offset " + std::to_string(offset));
  }
}

// acc += x * y with the common +-1 cases kept off the multiplier.
inline void add_product(Coeff& acc, const Coeff& x, const Coeff& y, Coeff& scratch) {
  if (x == 1) {
    acc += y;
  } else if (x == -1) {
    acc -= y;
  } else {
    boost::multiprecision::multiply(scratch, x, y);
    acc += scratch;
  }
}

}  // namespace

Coeff Monomial::coefficient() const {
  Coeff c{scale};
  if (sign < 0) c = -c;
  return c;
}

TruncSeries::TruncSeries() : offset_(0), coeffs_(1) {}

TruncSeries::TruncSeries(Exponent offset, std::vector<Coeff> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {}

TruncSeries TruncSeries::zero(Exponent prec, Exponent offset) {
  require_prec_above(offset, prec, "zero");
  return TruncSeries(offset, std::vector<Coeff>(static_cast<std::size_t>(prec - offset)));
}

TruncSeries TruncSeries::one(Exponent prec) { return monomial(Coeff{1}, 0, prec); }

TruncSeries TruncSeries::monomial(const Coeff& c, Exponent e, Exponent prec) {
  if (e >= prec) return zero(prec, std::min<Exponent>(0, prec - 1));
  TruncSeries s = zero(prec, e);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::from_coeffs(std::vector<Coeff> coeffs, Exponent offset) {
  if (coeffs.empty()) {
    throw Error(ErrorKind::InvalidArgument, "from_coeffs: empty coefficient list");
  }
  return TruncSeries(offset, std::move(coeffs));
}

TruncSeries TruncSeries::from_coeffs(std::vector<Coeff> coeffs, Exponent offset, Exponent prec) {
  require_prec_above(offset, prec, "from_coeffs");
  coeffs.resize(static_cast<std::size_t>(prec - offset));
  return TruncSeries(offset, std::move(coeffs));
}

const Coeff& TruncSeries::operator[](Exponent e) const {
  if (e < offset_) return zero_coeff();
  if (e >= prec()) {
    throw Error(ErrorKind::InsufficientPrecision,
                "coefficient of q^" + std::to_string(e) + " requested from a series known to O(q^" +
                    std::to_string(prec()) + ")");
  }
  return coeffs_[static_cast<std::size_t>(e - offset_)];
}

std::optional<Exponent> TruncSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return offset_ + static_cast<Exponent>(i);
  }
  return std::nullopt;
}

TruncSeries TruncSeries::truncated(Exponent new_prec) const {
  if (new_prec > prec()) {
    throw Error(ErrorKind::InsufficientPrecision,
                "cannot raise precision from " + std::to_string(prec()) + " to " +
                    std::to_string(new_prec));
  }
  if (new_prec <= offset_) {
    // Everything that remains is the O() term; keep a single known zero slot
    // below new_prec so the invariant prec > offset holds.
    return zero(new_prec, new_prec - 1);
  }
  std::vector<Coeff> c(coeffs_.begin(), coeffs_.begin() + (new_prec - offset_));
  return TruncSeries(offset_, std::move(c));
}

TruncSeries TruncSeries::shifted(Exponent k) const { return TruncSeries(offset_ + k, coeffs_); }

TruncSeries TruncSeries::trimmed() const {
  auto v = valuation();
  if (!v || *v == offset_) return *this;
  std::vector<Coeff> c(coeffs_.begin() + (*v - offset_), coeffs_.end());
  return TruncSeries(*v, std::move(c));
}

std::vector<Coeff> TruncSeries::prefix(std::size_t count) const {
  std::vector<Coeff> out;
  for (Exponent e = 0; e < static_cast<Exponent>(count) && e < prec(); ++e) out.push_back((*this)[e]);
  return out;
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Coeff& c = coeffs_[i];
    if (c.is_zero()) continue;
    const Exponent e = offset_ + static_cast<Exponent>(i);
    const bool negative = c < 0;
    const Coeff mag = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  if (!first) os << " + ";
  os << "O(q^" << prec() << ")";
  return os.str();
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  if (a.prec() != b.prec()) return false;
  const Exponent lo = std::min(a.offset(), b.offset());
  for (Exponent e = lo; e < a.prec(); ++e) {
    if (a[e] != b[e]) return false;
  }
  return true;
}

TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b) {
  const Exponent off = std::min(a.offset(), b.offset());
  const Exponent prec = std::min(a.prec(), b.prec());
  std::vector<Coeff> c(static_cast<std::size_t>(prec - off));
  for (Exponent e = off; e < prec; ++e) {
    Coeff& slot = c[static_cast<std::size_t>(e - off)];
    slot = a[e];
    slot += b[e];
  }
  return TruncSeries::from_coeffs(std::move(c), off);
}

TruncSeries ts_neg(const TruncSeries& a) {
  std::vector<Coeff> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x = -x;
  return TruncSeries::from_coeffs(std::move(c), a.offset());
}

TruncSeries ts_sub(const TruncSeries& a, const TruncSeries& b) { return ts_add(a, ts_neg(b)); }

TruncSeries ts_scale(const TruncSeries& a, const Coeff& k) {
  std::vector<Coeff> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= k;
  return TruncSeries::from_coeffs(std::move(c), a.offset());
}

TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b) {
  const Exponent off = a.offset() + b.offset();
  const Exponent prec = std::min(a.prec() + b.offset(), b.prec() + a.offset());
  const std::size_t len = static_cast<std::size_t>(prec - off);
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  std::vector<Coeff> c(len);
  Coeff scratch;
  for (std::size_t i = 0; i < len && i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < len; ++j) {
      if (bc[j].is_zero()) continue;
      add_product(c[i + j], ac[i], bc[j], scratch);
    }
  }
  return TruncSeries::from_coeffs(std::move(c), off);
}

TruncSeries ts_invert(const TruncSeries& a) {
  auto v = a.valuation();
  if (!v) throw Error(ErrorKind::NotInvertible, "the zero series has no inverse");
  const Coeff& lead = a[*v];
  if (lead != 1 && lead != -1) {
    throw Error(ErrorKind::NotInvertible, "lowest nonzero coefficient is not +-1");
  }
  // a = q^v * u with u a unit of the power-series ring, u known to length n.
  const std::size_t n = static_cast<std::size_t>(a.prec() - *v);
  auto u = a.coeffs().subspan(static_cast<std::size_t>(*v - a.offset()));
  const bool lead_positive = lead == 1;
  std::vector<Coeff> b(n);
  b[0] = lead;
  Coeff acc;
  Coeff scratch;
  for (std::size_t m = 1; m < n; ++m) {
    acc = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      if (u[k].is_zero() || b[m - k].is_zero()) continue;
      add_product(acc, u[k], b[m - k], scratch);
    }
    b[m] = lead_positive ? Coeff(-acc) : acc;
  }
  return TruncSeries::from_coeffs(std::move(b), -*v);
}

TruncSeries ts_pow(const TruncSeries& a, unsigned k) {
  if (k == 0) return TruncSeries::one(std::max<Exponent>(a.prec(), 1));
  TruncSeries result = a;
  for (unsigned i = 1; i < k; ++i) result = ts_mul(result, a);
  return result;
}

TruncSeries substitute_power(const TruncSeries& s, Exponent k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "substitute_power: k must be >= 1");
  if (k == 1) return s;
  const Exponent off = s.offset() * k;
  const Exponent prec = s.prec() * k;
  std::vector<Coeff> c(static_cast<std::size_t>(prec - off));
  auto src = s.coeffs();
  for (std::size_t i = 0; i < src.size(); ++i) c[i * static_cast<std::size_t>(k)] = src[i];
  return TruncSeries::from_coeffs(std::move(c), off);
}

namespace {
Exponent floor_div(Exponent a, Exponent b) {
  Exponent q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
Exponent ceil_div(Exponent a, Exponent b) { return -floor_div(-a, b); }
}  // namespace

TruncSeries contract_power(const TruncSeries& s, Exponent k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "contract_power: k must be >= 1");
  if (k == 1) return s;
  for (Exponent e = s.offset(); e < s.prec(); ++e) {
    if (e % k != 0 && !s[e].is_zero()) {
      throw Error(ErrorKind::NonIntegralExponent,
                  "coefficient of q^" + std::to_string(e) + " is not on a multiple of " +
                      std::to_string(k));
    }
  }
  const Exponent off = ceil_div(s.offset(), k);
  const Exponent prec = ceil_div(s.prec(), k);
  std::vector<Coeff> c(static_cast<std::size_t>(prec - off));
  for (Exponent x = off; x < prec; ++x) c[static_cast<std::size_t>(x - off)] = s[x * k];
  return TruncSeries::from_coeffs(std::move(c), off);
}

Agreement equal_to_order(const TruncSeries& a, const TruncSeries& b, Exponent order) {
  if (order > a.prec() || order > b.prec()) {
    throw Error(ErrorKind::InsufficientPrecision,
                "comparison to O(q^" + std::to_string(order) + ") but series are known to O(q^" +
                    std::to_string(std::min(a.prec(), b.prec())) + ")");
  }
  Agreement out;
  const Exponent lo = std::min(a.offset(), b.offset());
  for (Exponent e = lo; e < order; ++e) {
    if (a[e] != b[e]) {
      out.equal = false;
      out.first_mismatch = e;
      out.lhs = a[e];
      out.rhs = b[e];
      break;
    }
  }
  return out;
}

}  // namespace qrr
