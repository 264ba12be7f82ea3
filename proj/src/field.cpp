#include "pmx/field.hpp"

namespace pmx {

namespace {

uint64_t pow_mod64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = (__uint128_t)r * a % m;
    a = (__uint128_t)a * a % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool Fp::is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t q : {2u, 3u, 5u, 7u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases {2,3,5,7} decide primality for every n < 3,215,031,751.
  for (uint32_t a : {2u, 3u, 5u, 7u}) {
    uint64_t x = pow_mod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = (__uint128_t)x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Fp::Fp(uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31))
    throw ShapeError("field modulus out of range [2, 2^31)");
  if (!is_prime(p)) throw ShapeError("field modulus is not prime");
}

uint32_t Fp::pow(uint32_t a, uint64_t e) const {
  return static_cast<uint32_t>(pow_mod64(a, e, p_));
}

uint32_t Fp::inv(uint32_t a) const {
  if (a == 0) throw DivisionByZeroError("inverse of zero field element");
  return pow(a, p_ - 2);
}

}  // namespace pmx
