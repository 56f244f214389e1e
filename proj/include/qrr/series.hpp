#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qrr {

using Coeff = boost::multiprecision::cpp_int;
using Exponent = std::int64_t;

// scale * sign * q^mag_exp. The only kind of free parameter a Pochhammer
// symbol accepts here.
struct Monomial {
  int sign = 1;
  Exponent mag_exp = 0;
  std::uint64_t scale = 1;

  static Monomial q_power(Exponent e, int sign = 1) { return Monomial{sign, e, 1}; }

  Coeff coefficient() const;
  bool is_unit() const { return scale == 1; }
};

// A truncated formal Laurent series sum_{e >= offset} c_e q^e + O(q^prec).
//
// Coefficients of q^e are exact for every offset <= e < prec and exactly zero
// below offset. Values are immutable once built; every operation returns a
// new series.
class TruncSeries {
 public:
  // The zero series known to O(q).
  TruncSeries();

  static TruncSeries zero(Exponent prec, Exponent offset = 0);
  static TruncSeries one(Exponent prec);
  static TruncSeries monomial(const Coeff& c, Exponent e, Exponent prec);
  // coeffs[i] is the coefficient of q^(offset + i); prec = offset + size.
  static TruncSeries from_coeffs(std::vector<Coeff> coeffs, Exponent offset = 0);
  // Pads with zeros or drops trailing entries so that the result has the
  // requested precision.
  static TruncSeries from_coeffs(std::vector<Coeff> coeffs, Exponent offset, Exponent prec);

  Exponent offset() const { return offset_; }
  Exponent prec() const { return offset_ + static_cast<Exponent>(coeffs_.size()); }

  // Coefficient of q^e. Zero below the offset; InsufficientPrecision at or
  // above prec.
  const Coeff& operator[](Exponent e) const;
  std::span<const Coeff> coeffs() const { return coeffs_; }

  std::optional<Exponent> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  TruncSeries truncated(Exponent prec) const;
  TruncSeries shifted(Exponent k) const;
  // Same series with the offset moved up to the valuation (or kept if zero).
  TruncSeries trimmed() const;
  // Coefficients of q^0 .. q^(count-1) (for report prefixes).
  std::vector<Coeff> prefix(std::size_t count) const;

  // "1 - q - q^2 + q^5 + O(q^8)"
  std::string to_string() const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

 private:
  TruncSeries(Exponent offset, std::vector<Coeff> coeffs);

  Exponent offset_ = 0;
  std::vector<Coeff> coeffs_;
};

TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_neg(const TruncSeries& a);
TruncSeries ts_scale(const TruncSeries& a, const Coeff& c);
// Schoolbook convolution, O(len(a) * len(b)).
TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b);
// Requires the lowest nonzero coefficient to be +1 or -1.
TruncSeries ts_invert(const TruncSeries& a);
TruncSeries ts_pow(const TruncSeries& a, unsigned k);

inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return ts_add(a, b); }
inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return ts_sub(a, b); }
inline TruncSeries operator-(const TruncSeries& a) { return ts_neg(a); }
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return ts_mul(a, b); }

// q -> q^k.
TruncSeries substitute_power(const TruncSeries& s, Exponent k);
// Inverse of substitute_power: q^k -> q. Throws NonIntegralExponent when a
// nonzero coefficient sits on an exponent that is not a multiple of k.
TruncSeries contract_power(const TruncSeries& s, Exponent k);

struct Agreement {
  bool equal = true;
  std::optional<Exponent> first_mismatch;
  Coeff lhs;
  Coeff rhs;
};

// Compares coefficients of q^e for all e < order. Throws
// InsufficientPrecision when order exceeds either precision.
Agreement equal_to_order(const TruncSeries& a, const TruncSeries& b, Exponent order);

}  // namespace qrr
