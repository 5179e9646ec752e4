#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catenary/groebner.hpp"
#include "catenary/poly.hpp"

namespace catenary {

/// A prime generated by a subset of the variables, stored as a bit set over
/// variable indices (so at most 64 variables).
class MonomialPrime {
 public:
  static constexpr std::size_t max_vars = 64;

  MonomialPrime() = default;
  explicit MonomialPrime(std::uint64_t bits) : bits_(bits) {}
  MonomialPrime(std::initializer_list<std::size_t> indices);
  static MonomialPrime from_indices(const std::vector<std::size_t>& indices);
  /// The maximal ideal of a ring with n variables.
  static MonomialPrime all(std::size_t n);

  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(std::size_t index) const noexcept { return (bits_ >> index) & 1U; }
  bool contains(const MonomialPrime& other) const noexcept {
    return (other.bits_ & ~bits_) == 0;
  }
  MonomialPrime with(std::size_t index) const noexcept {
    return MonomialPrime(bits_ | (std::uint64_t{1} << index));
  }
  MonomialPrime without(std::size_t index) const noexcept {
    return MonomialPrime(bits_ & ~(std::uint64_t{1} << index));
  }
  std::vector<std::size_t> indices() const;

  /// "(x, y1)"; the zero ideal renders as "(0)".
  std::string to_string(const VariableContext& vars) const;
  std::vector<std::string> names(const VariableContext& vars) const;

  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
  /// Canonical order: fewer variables first, then by sorted index list.
  friend std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b);

 private:
  std::uint64_t bits_ = 0;
};

/// A monomial ideal kept as its unique minimal generating set, sorted by
/// degree and then descending exponent vector.
class MonomialIdeal {
 public:
  MonomialIdeal(std::shared_ptr<const VariableContext> context, std::vector<Monomial> generators);

  /// The monomial ideal equal to `ideal`, if its reduced basis is monomial.
  static std::optional<MonomialIdeal> from_ideal(const Ideal& ideal, const Budget& budget = {});
  static MonomialIdeal from_prime(std::shared_ptr<const VariableContext> context,
                                  const MonomialPrime& prime);

  const std::shared_ptr<const VariableContext>& context() const noexcept { return context_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  std::size_t nvars() const noexcept { return context_->size(); }

  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_unit() const noexcept;
  bool is_squarefree() const noexcept;
  /// Exponents truncated to 1.
  MonomialIdeal radical() const;
  bool contains(const Monomial& m) const;
  /// I ⊆ P: every generator involves a variable of P.
  bool contained_in(const MonomialPrime& prime) const;
  MonomialIdeal plus(const Monomial& m) const;

  Ideal to_ideal(const RingPtr& ring) const;
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return *a.context_ == *b.context_ && a.generators_ == b.generators_;
  }

 private:
  std::shared_ptr<const VariableContext> context_;
  std::vector<Monomial> generators_;
};

/// Irreducible monomial ideal (x_i^{a_i} : a_i > 0); `powers[i] == 0` means
/// x_i does not occur.
struct IrreducibleComponent {
  std::vector<std::uint32_t> powers;

  MonomialPrime radical() const;
  /// This component is contained in `other`.
  bool contained_in(const IrreducibleComponent& other) const;

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  friend auto operator<=>(const IrreducibleComponent&, const IrreducibleComponent&) = default;
};

/// Irredundant irreducible decomposition by recursive splitting
/// (I + (m' m'')) = (I + m') ∩ (I + m'') for coprime m', m''.
/// Requires a proper ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);

/// Minimal primes as minimal vertex covers of the generator supports,
/// sorted canonically. Requires a proper ideal.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);

/// Ass(R/I): radicals of the irredundant irreducible components, sorted
/// canonically. Requires a proper ideal.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);

/// (I : m) for a monomial m.
MonomialIdeal monomial_quotient(const MonomialIdeal& ideal, const Monomial& m);
/// I ∩ J, generated by pairwise lcms.
MonomialIdeal monomial_intersection(const MonomialIdeal& i, const MonomialIdeal& j);

/// Decides P ∈ Ass(R/I) without decomposing I: localize at P and test
/// whether (I_P : P) strictly contains I_P.
bool is_associated_prime(const MonomialIdeal& ideal, const MonomialPrime& prime);

struct Localization {
  /// The localized ideal over the variables of the prime.
  MonomialIdeal ideal;
  /// Original indices of the retained variables, in declared order.
  std::vector<std::size_t> variables;
};

/// Inverts the variables outside `prime`: each generator drops its factors
/// outside the prime. Throws DegenerateInputError if some generator becomes
/// a unit (the prime does not contain I, so the localization vanishes).
Localization localize(const MonomialIdeal& ideal, const MonomialPrime& prime);

}  // namespace catenary
