#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace ssb {

bool is_prime(std::uint64_t n);

/// Throws InvalidParams unless `characteristic` is 0 or a prime below 2^31.
void check_characteristic(std::uint64_t characteristic);

/// Element of the prime field of the given characteristic: an exact
/// rational when the characteristic is 0, a residue otherwise.
///
/// Binary operations between a characteristic-0 value and a characteristic-p
/// value reduce the rational into F_p first; mixing two different primes is
/// an error.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t value, std::uint32_t characteristic = 0);  // NOLINT
  Scalar(const mpq_class& value, std::uint32_t characteristic = 0);

  std::uint32_t characteristic() const noexcept { return char_; }
  bool is_zero() const noexcept { return char_ == 0 ? sgn(q_) == 0 : res_ == 0; }
  bool is_one() const noexcept { return char_ == 0 ? q_ == 1 : res_ == 1; }

  /// Residue in [0, p) for prime characteristic.
  std::uint64_t residue() const noexcept { return res_; }
  const mpq_class& rational() const noexcept { return q_; }

  Scalar in_characteristic(std::uint32_t characteristic) const;

  Scalar inverse() const;
  Scalar pow(std::uint64_t exponent) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  void unify(Scalar& other);

  std::uint32_t char_ = 0;
  std::uint64_t res_ = 0;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace ssb
