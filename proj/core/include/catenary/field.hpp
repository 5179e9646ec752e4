#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace catenary {

/// Field elements are exact rationals. Over a prime field they are kept
/// reduced to integers in [0, p).
using Scalar = mpq_class;

/// The coefficient field K: either Q or F_p.
class Field {
 public:
  enum class Kind { rationals, prime_field };

  static Field rationals() { return Field(Kind::rationals, 0); }
  /// Throws ParameterError unless p is prime.
  static Field prime(std::uint32_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::rationals; }
  std::uint32_t characteristic() const noexcept { return p_; }

  /// Maps an arbitrary rational into canonical form for this field.
  /// Over F_p a denominator divisible by p is a ParameterError.
  Scalar normalize(const Scalar& value) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// "Q" or "F7".
  std::string name() const;
  std::string render(const Scalar& value) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Scalar reduce(const mpz_class& value) const;

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace catenary
