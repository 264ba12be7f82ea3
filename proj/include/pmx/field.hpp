#pragma once

#include <cstdint>

#include "pmx/errors.hpp"

namespace pmx {

/// Prime field Z/pZ with 2 <= p < 2^31.
///
/// Elements are canonical residues in [0, p) stored as uint32_t; products go
/// through a 64-bit intermediate, which cannot overflow for p < 2^31.
/// Immutable after construction, safe to share across threads.
class Fp {
 public:
  /// Throws ShapeError unless p is a prime in [2, 2^31).
  explicit Fp(uint32_t p);

  uint32_t modulus() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const {
    return a >= b ? a - b : a + (p_ - b);
  }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  }

  /// Canonical residue of an arbitrary signed value.
  uint32_t reduce(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  uint32_t pow(uint32_t a, uint64_t e) const;

  /// Multiplicative inverse; throws DivisionByZeroError on 0.
  uint32_t inv(uint32_t a) const;

  bool operator==(const Fp& other) const { return p_ == other.p_; }
  bool operator!=(const Fp& other) const { return p_ != other.p_; }

  /// Deterministic Miller-Rabin, valid for the whole uint32 range.
  static bool is_prime(uint32_t n);

 private:
  uint32_t p_;
};

}  // namespace pmx
