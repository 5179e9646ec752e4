#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catenary/field.hpp"

namespace catenary {

/// Ordered, duplicate-free list of indeterminate names.
class VariableContext {
 public:
  explicit VariableContext(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VariableContext& a, const VariableContext& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

/// Exponent vector. Ordering operators compare exponent vectors
/// lexicographically so monomials can key standard containers; use
/// MonomialOrder for term orders.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const noexcept { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
  std::uint64_t total_degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// this / divisor; the divisor must divide this.
  Monomial quotient(const Monomial& divisor) const;
  std::vector<std::size_t> support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  std::vector<std::uint32_t> exponents_;
  std::uint64_t degree_ = 0;
};

/// Term orders. `elimination(k)` compares the first k variables by grevlex
/// and breaks ties with grevlex on the remaining ones, so any polynomial
/// whose leading monomial is free of the first block lies entirely outside
/// that block.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, elimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::elimination, block);
  }

  MonomialOrder() = default;

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }
  std::string name() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_ = Kind::grevlex;
  std::size_t block_ = 0;
};

/// Throws ContextError when the exponent vectors differ in length.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& order);

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// K[x_1..x_v] with a fixed term order.
class PolyRing {
 public:
  static RingPtr make(Field field, std::shared_ptr<const VariableContext> variables,
                      MonomialOrder order = MonomialOrder::grevlex());
  static RingPtr make(Field field, std::vector<std::string> names,
                      MonomialOrder order = MonomialOrder::grevlex());

  const Field& field() const noexcept { return field_; }
  const VariableContext& variables() const noexcept { return *variables_; }
  const std::shared_ptr<const VariableContext>& variables_ptr() const noexcept {
    return variables_;
  }
  std::size_t nvars() const noexcept { return variables_->size(); }
  const MonomialOrder& order() const noexcept { return order_; }

  RingPtr with_order(MonomialOrder order) const;

  /// Same field and variable names; the order may differ.
  bool same_context(const PolyRing& other) const;

  std::string describe() const;

 private:
  PolyRing(Field field, std::shared_ptr<const VariableContext> variables, MonomialOrder order)
      : field_(field), variables_(std::move(variables)), order_(order) {}

  Field field_;
  std::shared_ptr<const VariableContext> variables_;
  MonomialOrder order_;
};

struct Term {
  Scalar coefficient;
  Monomial monomial;
};

/// Sparse polynomial with terms sorted strictly descending under the ring's
/// order, no zero coefficients, no repeated monomials. Structural equality
/// is mathematical equality.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  /// Normalizes: coefficients mapped into the field, like terms merged,
  /// zeros dropped, terms sorted.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, Monomial m, const Scalar& coefficient = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// A single term (coefficient arbitrary).
  bool is_term() const noexcept { return terms_.size() == 1; }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Scalar& leading_coefficient() const { return leading_term().coefficient; }
  std::uint64_t total_degree() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Scalar& c, const Monomial& m) const;
  /// this - c * m * g, computed by a single merge.
  Polynomial minus_term_times(const Scalar& c, const Monomial& m, const Polynomial& g) const;
  Polynomial monic() const;

  /// Same polynomial re-sorted for another order over the same context.
  Polynomial in_ring(const RingPtr& ring) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  struct Sorted {};
  Polynomial(RingPtr ring, std::vector<Term> terms, Sorted)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Throws ContextError unless a and b share variables, field and order.
void require_same_ring(const Polynomial& a, const Polynomial& b);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum q_i g_i + r with no term of r divisible by
/// any leading monomial of the divisors. Divisors are tried in list order.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors);

/// f / g when g divides f exactly; throws ParameterError otherwise.
Polynomial exact_quotient(const Polynomial& f, const Polynomial& g);

}  // namespace catenary
