#include "pmx/poly.hpp"

#include <algorithm>

namespace pmx {

Poly::Poly(Fp f, std::vector<uint32_t> coeffs) : f_(f), c_(std::move(coeffs)) {
  for (uint32_t c : c_)
    if (c >= f_.modulus())
      throw ShapeError("coefficient not a canonical residue");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(Fp f, uint32_t c) {
  Poly r(f);
  if (c != 0) r.c_.push_back(c);
  return r;
}

Poly Poly::monomial(Fp f, uint32_t c, int degree) {
  Poly r(f);
  if (c != 0) {
    r.c_.assign(degree + 1, 0);
    r.c_.back() = c;
  }
  return r;
}

uint32_t Poly::eval(uint32_t x) const {
  uint32_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = f_.add(f_.mul(acc, x), *it);
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  if (f_ != o.f_) throw ShapeError("modulus mismatch");
  Poly r(f_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = f_.add(coeff((int)i), o.coeff((int)i));
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  if (f_ != o.f_) throw ShapeError("modulus mismatch");
  Poly r(f_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = f_.sub(coeff((int)i), o.coeff((int)i));
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(f_);
  r.c_.resize(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_.neg(c_[i]);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (f_ != o.f_) throw ShapeError("modulus mismatch");
  Poly r(f_);
  if (is_zero() || o.is_zero()) return r;
  const uint64_t p = f_.modulus();
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const uint64_t ci = c_[i];
    for (size_t j = 0; j < o.c_.size(); ++j) {
      uint64_t v = r.c_[i + j] + ci * o.c_[j] % p;
      r.c_[i + j] = (uint32_t)(v >= p ? v - p : v);
    }
  }
  r.trim();
  return r;
}

Poly Poly::scaled(uint32_t c) const {
  Poly r(f_);
  if (c == 0) return r;
  r.c_.resize(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_.mul(c_[i], c);
  return r;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw ShapeError("negative shift");
  Poly r(f_);
  if (is_zero()) return r;
  r.c_.assign(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
  return r;
}

Poly Poly::low(int k) const {
  Poly r(f_);
  if (k <= 0) return r;
  size_t len = std::min(c_.size(), (size_t)k);
  r.c_.assign(c_.begin(), c_.begin() + len);
  r.trim();
  return r;
}

Poly Poly::high(int k) const {
  Poly r(f_);
  if (k <= 0) return *this;
  if ((size_t)k >= c_.size()) return r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

void Poly::add_scaled_shifted(const Poly& src, uint32_t c, int k) {
  if (c == 0 || src.is_zero()) return;
  if (c_.size() < src.c_.size() + k) c_.resize(src.c_.size() + k, 0);
  for (size_t i = 0; i < src.c_.size(); ++i)
    c_[i + k] = f_.add(c_[i + k], f_.mul(src.c_[i], c));
  trim();
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) throw ShapeError("modulus mismatch");
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  const Fp& f = a.field();
  if (a.deg() < b.deg()) return {Poly(f), a};
  std::vector<uint32_t> rem(a.coeffs());
  std::vector<uint32_t> quo(a.deg() - b.deg() + 1, 0);
  uint32_t ilc = f.inv(b.lc());
  for (int i = (int)quo.size() - 1; i >= 0; --i) {
    uint32_t q = f.mul(rem[i + b.deg()], ilc);
    quo[i] = q;
    if (q == 0) continue;
    for (int j = 0; j <= b.deg(); ++j)
      rem[i + j] = f.sub(rem[i + j], f.mul(q, b.coeff(j)));
  }
  rem.resize(b.deg() >= 0 ? b.deg() : 0);
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly divexact(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw StructuralError("division expected to be exact");
  return q;
}

std::pair<Poly, uint32_t> monic(const Poly& a) {
  if (a.is_zero()) throw DivisionByZeroError("monic of zero polynomial");
  uint32_t lambda = a.lc();
  return {a.scaled(a.field().inv(lambda)), lambda};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = divrem(u, v).second;
    u = v;
    v = r;
  }
  if (u.is_zero()) return u;
  return monic(u).first;
}

}  // namespace pmx
