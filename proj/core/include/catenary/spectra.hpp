#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "catenary/groebner.hpp"
#include "catenary/monomial_ideal.hpp"

namespace catenary {

/// The monomial primes containing a monomial ideal I, ordered by inclusion.
/// A variable subset S is a node iff every generator of I involves a
/// variable of S. The poset is graded by |S| with top M.
///
/// Nodes are enumerated eagerly up to 12 variables and on first request
/// above that. Copies share state; the value is immutable once built.
class SpecPoset {
 public:
  static constexpr std::size_t eager_limit = 12;

  const MonomialIdeal& ideal() const noexcept;
  const VariableContext& variables() const noexcept { return *ideal().context(); }
  std::size_t nvars() const noexcept;
  MonomialPrime top() const;

  const std::vector<MonomialPrime>& minimal_primes() const noexcept;
  const std::vector<MonomialPrime>& associated_primes() const noexcept;

  bool contains(const MonomialPrime& q) const;
  bool is_minimal(const MonomialPrime& q) const;
  bool is_associated(const MonomialPrime& q) const;
  /// dim(T/Q) = v - |Q|.
  std::size_t quotient_dimension(const MonomialPrime& q) const;

  std::vector<MonomialPrime> upper_covers(const MonomialPrime& q) const;
  std::vector<MonomialPrime> lower_covers(const MonomialPrime& q) const;

  /// All nodes in canonical order (materialized on first call).
  const std::vector<MonomialPrime>& nodes() const;
  bool materialized() const;

 private:
  friend SpecPoset build_poset(const MonomialIdeal& ideal, const Budget& budget);
  struct State;
  explicit SpecPoset(std::shared_ptr<State> state) : state_(std::move(state)) {}

  std::shared_ptr<State> state_;
};

/// Throws ResourceError above `budget.max_poset_vars` variables and
/// DegenerateInputError for the unit ideal.
SpecPoset build_poset(const MonomialIdeal& ideal, const Budget& budget = {});

/// ht Q = max over minimal P ⊆ Q of dim(T/P) - dim(T/Q); T/P is a power
/// series ring and complete local rings are catenary.
std::size_t height(const SpecPoset& poset, const MonomialPrime& q);

/// Strictly increasing list of monomial primes.
struct PrimeChain {
  std::vector<MonomialPrime> primes;

  std::size_t length() const noexcept { return primes.empty() ? 0 : primes.size() - 1; }
  /// Every step adds exactly one variable.
  bool saturated() const;
  std::string to_string(const VariableContext& vars) const;

  friend bool operator==(const PrimeChain&, const PrimeChain&) = default;
};

/// Saturated chain P ⊊ Q_1 ⊊ ... ⊊ Q_{n-1} ⊊ M of length n = dim(T/P) in
/// which no Q_i is associated and P is the only minimal prime below each
/// Q_i. At each step variables lying in no other minimal prime are tried
/// first, then the rest, each group in declared order; dead ends backtrack.
///
/// Requires P minimal, dim(T/P) ≥ 1 and M ∉ Ass (ParameterError otherwise).
/// Throws InfeasibleError naming the deepest step that had no admissible
/// choice when no such chain exists among monomial primes.
PrimeChain construct_chain(const SpecPoset& poset, const MonomialPrime& start);

/// Independent checks of a construct_chain result: endpoints, saturation,
/// membership, Ass-avoidance (by localization, not by decomposition) and the
/// unique-minimal-prime property. Returns the list of violations.
std::vector<std::string> verify_chain(const MonomialIdeal& ideal, const PrimeChain& chain,
                                      const MonomialPrime& start);

/// Multiset {dim(T/P) : P ∈ Min T}, sorted descending.
std::vector<std::size_t> noncat_profile(const MonomialIdeal& ideal);
std::vector<std::size_t> noncat_profile(const SpecPoset& poset);

/// DOT digraph of the whole poset (bottom to top). Minimal primes are
/// filled, associated primes drawn bold red, M double-bordered; edges of
/// `highlight` chains are coloured.
std::string emit_dot(const SpecPoset& poset, std::span<const PrimeChain> highlight = {});

/// DOT digraph of the given chains only (shared nodes merged). Marks are
/// applied when `poset` is given.
std::string emit_dot(std::span<const PrimeChain> chains, const VariableContext& vars,
                     const SpecPoset* poset = nullptr);

}  // namespace catenary
