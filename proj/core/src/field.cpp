#include "catenary/field.hpp"

#include "catenary/error.hpp"

namespace catenary {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::context: return "context";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::degenerate_input: return "degenerate_input";
    case ErrorKind::undefined_dimension: return "undefined_dimension";
    case ErrorKind::unsupported_input: return "unsupported_input";
    case ErrorKind::resource: return "resource";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::parse: return "parse";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw ParameterError("field characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(Kind::prime_field, p);
}

Scalar Field::reduce(const mpz_class& value) const {
  mpz_class r = value % p_;
  if (r < 0) r += p_;
  return Scalar(r);
}

Scalar Field::normalize(const Scalar& value) const {
  if (is_rationals()) {
    Scalar v = value;
    v.canonicalize();
    return v;
  }
  mpz_class num = value.get_num();
  mpz_class den = value.get_den();
  if (den % p_ == 0) {
    throw ParameterError("denominator " + den.get_str() + " is zero in F" + std::to_string(p_));
  }
  mpz_class den_inv;
  mpz_class modulus(p_);
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  return reduce(num * den_inv);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return a + b;
  return reduce(a.get_num() + b.get_num());
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return a - b;
  return reduce(a.get_num() - b.get_num());
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return a * b;
  return reduce(a.get_num() * b.get_num());
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rationals()) return -a;
  return reduce(-a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw ParameterError("division by zero in " + name());
  if (is_rationals()) return 1 / a;
  mpz_class r;
  mpz_class modulus(p_);
  mpz_class value = a.get_num();
  mpz_invert(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return Scalar(r);
}

std::string Field::name() const {
  return is_rationals() ? std::string("Q") : "F" + std::to_string(p_);
}

std::string Field::render(const Scalar& value) const { return value.get_str(); }

}  // namespace catenary
