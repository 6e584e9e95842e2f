#pragma once

// Prime fields F_p carrying a distinguished primitive ell-th root of unity.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frobex {

using Scalar = std::uint64_t;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/// Smallest prime p >= 101 with ell | p - 1.
std::uint64_t default_prime_for(std::uint64_t ell);

inline constexpr std::uint64_t kDefaultSeed = 1;

class RootField {
 public:
  /// Requires p prime (< 2^32) and ell | p - 1. zeta is found by raising
  /// seeded random elements to (p-1)/ell until the order is exactly ell.
  static RootField create(std::uint64_t p, std::uint64_t ell, std::uint64_t seed = kDefaultSeed);
  /// Pins zeta; throws unless it has exact order ell.
  static RootField with_zeta(std::uint64_t p, std::uint64_t ell, Scalar zeta);

  std::uint64_t p() const { return p_; }
  std::uint64_t ell() const { return ell_; }
  Scalar zeta() const { return zeta_; }

  Scalar reduce(std::int64_t v) const;
  Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
  Scalar sub(Scalar a, Scalar b) const { return (a + p_ - b) % p_; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
  Scalar pow(Scalar a, std::uint64_t e) const;
  Scalar inv(Scalar a) const;
  /// zeta^k for any integer k (reduced mod ell).
  Scalar zeta_pow(std::int64_t k) const;
  /// Exact multiplicative order of a nonzero element.
  std::uint64_t order(Scalar a) const;

  bool operator==(const RootField& other) const = default;

 private:
  RootField(std::uint64_t p, std::uint64_t ell, Scalar zeta) : p_(p), ell_(ell), zeta_(zeta) {}
  static void validate(std::uint64_t p, std::uint64_t ell);

  std::uint64_t p_ = 2;
  std::uint64_t ell_ = 1;
  Scalar zeta_ = 1;
};

std::string describe(const RootField& field);

}  // namespace frobex
