#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "pmx/field.hpp"

namespace pmx {

/// Degree of the zero polynomial. Far enough below any real degree that
/// adding a shift keeps it below every shifted degree of a nonzero entry.
constexpr int kNegInfDeg = std::numeric_limits<int>::min() / 4;

/// Dense univariate polynomial over a prime field, coefficients ascending,
/// canonical (no stored leading zeros). Immutable-by-convention value type;
/// the mutating helpers exist for the elimination inner loops.
class Poly {
 public:
  explicit Poly(Fp f) : f_(f) {}
  /// Normalizes: trims leading zeros, reduces nothing (coefficients must
  /// already be canonical residues; throws ShapeError otherwise).
  Poly(Fp f, std::vector<uint32_t> coeffs);

  static Poly constant(Fp f, uint32_t c);
  static Poly monomial(Fp f, uint32_t c, int degree);

  const Fp& field() const { return f_; }
  bool is_zero() const { return c_.empty(); }

  /// True degree; kNegInfDeg for the zero polynomial.
  int deg() const { return c_.empty() ? kNegInfDeg : (int)c_.size() - 1; }
  /// Overbar degree: like deg() but 0 for the zero polynomial.
  int deg_bar() const { return c_.empty() ? 0 : (int)c_.size() - 1; }

  uint32_t coeff(int i) const {
    return (i < 0 || i >= (int)c_.size()) ? 0u : c_[i];
  }
  uint32_t lc() const { return c_.empty() ? 0u : c_.back(); }
  uint32_t eval0() const { return coeff(0); }
  uint32_t eval(uint32_t x) const;
  const std::vector<uint32_t>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const {
    return f_ == o.f_ && c_ == o.c_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(uint32_t c) const;
  /// Multiply by x^k (k >= 0).
  Poly shifted(int k) const;
  /// this mod x^k.
  Poly low(int k) const;
  /// this div x^k.
  Poly high(int k) const;

  /// this += c * x^k * src. The workhorse of every column operation.
  void add_scaled_shifted(const Poly& src, uint32_t c, int k);

 private:
  void trim();
  Fp f_;
  std::vector<uint32_t> c_;
};

/// Quotient and remainder with deg r < deg b; throws DivisionByZeroError
/// when b = 0.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

/// Exact quotient; throws StructuralError when the remainder is nonzero.
Poly divexact(const Poly& a, const Poly& b);

/// Splits a nonzero polynomial as lambda * m with m monic.
std::pair<Poly, uint32_t> monic(const Poly& a);

Poly gcd(const Poly& a, const Poly& b);

}  // namespace pmx
