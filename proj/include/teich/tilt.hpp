#pragma once

#include "teich/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace teich {

/// Element of the monoid algebra F_p[t^Q>=0] with finite support, a model of
/// the valuation ring of the tilt. Coefficients live in the prime field and
/// every stored coefficient is nonzero; the zero element has empty support.
class TiltElement {
 public:
  using Coeff = std::uint32_t;
  using Terms = std::map<Rat, Coeff>;

  explicit TiltElement(long p);

  static TiltElement zero(long p) { return TiltElement(p); }
  static TiltElement one(long p) { return monomial(p, Rat(0)); }
  static TiltElement monomial(long p, const Rat& exponent, long coeff = 1);
  static TiltElement from_terms(long p, const std::vector<std::pair<Rat, long>>& terms);

  long prime() const noexcept { return p_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Adds coeff * t^exponent, reducing mod p.
  TiltElement& add_term(const Rat& exponent, long coeff);

  friend bool operator==(const TiltElement& a, const TiltElement& b) {
    return a.p_ == b.p_ && a.terms_ == b.terms_;
  }

 private:
  long p_;
  Terms terms_;
};

/// Valuation in Q u {+inf}; +inf is the valuation of zero.
class TiltVal {
 public:
  TiltVal(Rat value) : value_(std::move(value)) {}  // NOLINT(implicit)

  static TiltVal infinity() { return TiltVal(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  const Rat& value() const;

  friend TiltVal operator+(const TiltVal& a, const TiltVal& b);
  friend std::strong_ordering operator<=>(const TiltVal& a, const TiltVal& b);
  friend bool operator==(const TiltVal& a, const TiltVal& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  TiltVal() = default;
  std::optional<Rat> value_;
};

/// Minimum exponent of the support (Gauss valuation with v(t) = 1).
TiltVal tilt_val(const TiltElement& x);

TiltElement tilt_mul(const TiltElement& x, const TiltElement& y);
TiltElement tilt_add(const TiltElement& x, const TiltElement& y);
TiltElement tilt_pow(const TiltElement& x, unsigned long k);

/// phi^n: scales every exponent by p^n. Coefficients are fixed since they lie
/// in the prime field.
TiltElement tilt_frobenius(const TiltElement& x, long n);

/// Compares valuations inside the common value group of the tilt; values taken
/// from different untilts are meaningful to compare only through this map.
std::strong_ordering untilt_val_compare(const TiltVal& vx, const TiltVal& vy);

inline TiltElement operator*(const TiltElement& x, const TiltElement& y) { return tilt_mul(x, y); }
inline TiltElement operator+(const TiltElement& x, const TiltElement& y) { return tilt_add(x, y); }

}  // namespace teich
