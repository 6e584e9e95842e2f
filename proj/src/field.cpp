#include "frobex/field.hpp"

#include <random>

namespace frobex {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t default_prime_for(std::uint64_t ell) {
  if (ell == 0) throw FieldError("ell must be positive");
  std::uint64_t p = 101 + (ell - 100 % ell) % ell;
  while (!is_prime(p)) p += ell;
  return p;
}

void RootField::validate(std::uint64_t p, std::uint64_t ell) {
  if (!is_prime(p)) throw FieldError("p = " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) throw FieldError("p must be below 2^32");
  if (ell == 0 || (p - 1) % ell != 0) {
    throw FieldError("ell = " + std::to_string(ell) + " does not divide p - 1 = " + std::to_string(p - 1));
  }
}

RootField RootField::create(std::uint64_t p, std::uint64_t ell, std::uint64_t seed) {
  validate(p, ell);
  RootField field(p, ell, 1);
  if (ell == 1) return field;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Scalar> pick(1, p - 1);
  for (;;) {
    Scalar candidate = field.pow(pick(rng), (p - 1) / ell);
    if (field.order(candidate) == ell) {
      field.zeta_ = candidate;
      return field;
    }
  }
}

RootField RootField::with_zeta(std::uint64_t p, std::uint64_t ell, Scalar zeta) {
  validate(p, ell);
  RootField field(p, ell, zeta % p);
  if (field.zeta_ == 0 || field.order(field.zeta_) != ell) {
    throw FieldError(std::to_string(zeta) + " is not a primitive " + std::to_string(ell) + "-th root of unity mod " +
                     std::to_string(p));
  }
  return field;
}

Scalar RootField::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  return static_cast<Scalar>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
}

Scalar RootField::pow(Scalar a, std::uint64_t e) const {
  Scalar result = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Scalar RootField::inv(Scalar a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

Scalar RootField::zeta_pow(std::int64_t k) const {
  std::int64_t e = k % static_cast<std::int64_t>(ell_);
  if (e < 0) e += static_cast<std::int64_t>(ell_);
  return pow(zeta_, static_cast<std::uint64_t>(e));
}

std::uint64_t RootField::order(Scalar a) const {
  if (a % p_ == 0) throw std::domain_error("order of zero");
  std::uint64_t n = p_ - 1;
  std::uint64_t rest = n;
  for (std::uint64_t f = 2; rest > 1; ++f) {
    if (f * f > rest) f = rest;
    if (rest % f != 0) continue;
    while (rest % f == 0) rest /= f;
    while (n % f == 0 && pow(a, n / f) == 1) n /= f;
  }
  return n;
}

std::string describe(const RootField& field) {
  return "F_" + std::to_string(field.p()) + " (ell=" + std::to_string(field.ell()) +
         ", zeta=" + std::to_string(field.zeta()) + ")";
}

}  // namespace frobex
