#include "ssb/scalar.hpp"

#include <ostream>

#include "ssb/errors.hpp"

namespace ssb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void check_characteristic(std::uint64_t characteristic) {
  if (characteristic == 0) return;
  if (characteristic >= (1ULL << 31) || !is_prime(characteristic)) {
    throw Error(ErrorKind::InvalidParams,
                "characteristic must be 0 or a prime below 2^31, got " +
                    std::to_string(characteristic));
  }
}

namespace {

std::uint64_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Scalar::Scalar(std::int64_t value, std::uint32_t characteristic) : char_(characteristic) {
  if (char_ == 0) {
    q_ = mpq_class(mpz_class(static_cast<long>(value)));
  } else {
    std::int64_t r = value % static_cast<std::int64_t>(char_);
    if (r < 0) r += char_;
    res_ = static_cast<std::uint64_t>(r);
  }
}

Scalar::Scalar(const mpq_class& value, std::uint32_t characteristic) : char_(characteristic) {
  if (char_ == 0) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  std::uint64_t den = reduce_mpz(value.get_den(), char_);
  if (den == 0) {
    throw Error(ErrorKind::InvalidParams,
                "coefficient " + value.get_str() + " has denominator divisible by " +
                    std::to_string(char_));
  }
  res_ = reduce_mpz(value.get_num(), char_) * powmod(den, char_ - 2, char_) % char_;
}

Scalar Scalar::in_characteristic(std::uint32_t characteristic) const {
  if (characteristic == char_) return *this;
  if (char_ != 0) {
    throw Error(ErrorKind::InvalidParams, "cannot move a residue mod " + std::to_string(char_) +
                                              " to characteristic " +
                                              std::to_string(characteristic));
  }
  return Scalar(q_, characteristic);
}

void Scalar::unify(Scalar& other) {
  if (char_ == other.char_) return;
  if (char_ == 0) {
    *this = in_characteristic(other.char_);
  } else if (other.char_ == 0) {
    other = other.in_characteristic(char_);
  } else {
    throw Error(ErrorKind::InvalidParams, "mixed characteristics " + std::to_string(char_) +
                                              " and " + std::to_string(other.char_));
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  Scalar out = *this;
  if (char_ == 0) {
    out.q_ = 1 / q_;
  } else {
    out.res_ = powmod(res_, char_ - 2, char_);
  }
  return out;
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  Scalar out(1, char_);
  Scalar base = *this;
  while (exponent) {
    if (exponent & 1) out *= base;
    base *= base;
    exponent >>= 1;
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (char_ == 0) {
    out.q_ = -q_;
  } else if (res_ != 0) {
    out.res_ = char_ - res_;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (char_ != other.char_) {
    Scalar o = other;
    unify(o);
    return *this += o;
  }
  if (char_ == 0) {
    q_ += other.q_;
  } else {
    res_ += other.res_;
    if (res_ >= char_) res_ -= char_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  if (char_ != other.char_) {
    Scalar o = other;
    unify(o);
    return *this *= o;
  }
  if (char_ == 0) {
    q_ *= other.q_;
  } else {
    res_ = res_ * other.res_ % char_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.char_ == b.char_) return a.char_ == 0 ? a.q_ == b.q_ : a.res_ == b.res_;
  Scalar x = a;
  Scalar y = b;
  x.unify(y);
  return x == y;
}

std::string Scalar::str() const { return char_ == 0 ? q_.get_str() : std::to_string(res_); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace ssb
