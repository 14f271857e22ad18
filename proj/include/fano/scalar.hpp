#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace fano {

/// Returns true when p is an odd prime below 2^31.
bool is_odd_prime(std::uint64_t p) noexcept;

/// Throws FieldError unless p is an odd prime.
void require_odd_prime(std::uint64_t p);

/// An element of either the rationals or a prime field F_p.
///
/// Rationals are kept in lowest terms with positive denominator, residues
/// in [0, p). A rational meets an F_p element by reduction mod p, so integer
/// literals work in either field; two different primes never mix.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpz_class& value) : q_(value) {}
  explicit Scalar(const mpq_class& value);

  static Scalar rational(long num, long den);
  static Scalar modp(std::int64_t value, std::uint32_t p);
  static Scalar modp(const mpq_class& value, std::uint32_t p);

  /// Parses "num/den", "num" (decimal, leading '-' allowed).
  /// With p > 0 the value is reduced into F_p.
  static Scalar parse(std::string_view text, std::uint32_t p = 0);

  /// 0 for the rationals.
  std::uint32_t prime() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  bool is_zero() const noexcept { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const noexcept { return p_ == 0 ? q_ == 1 : r_ == 1; }

  const mpq_class& rational_value() const;
  std::uint64_t residue() const;

  /// The same value viewed in F_p (p = 0 leaves rationals unchanged).
  Scalar in_field(std::uint32_t p) const;

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Total order used only for deterministic sorting (not a field order in F_p).
  friend std::strong_ordering order(const Scalar& a, const Scalar& b);

  /// "num/den" or "num" for rationals, the residue for F_p.
  std::string to_string() const;

 private:
  void unify(Scalar& other);
  void lift_to(std::uint32_t p);

  std::uint32_t p_ = 0;
  std::uint64_t r_ = 0;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vector = std::vector<Scalar>;

/// Common prime of a collection of scalars (0 if all rational). Throws
/// FieldError on two distinct primes.
std::uint32_t common_prime(const Vector& values);
std::uint32_t common_prime(std::uint32_t a, std::uint32_t b);

}  // namespace fano
