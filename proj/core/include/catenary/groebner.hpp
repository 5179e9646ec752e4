#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "catenary/poly.hpp"

namespace catenary {

/// Search and step budgets. Every search the library runs is bounded by one
/// of these, and exhausting a budget is reported, never turned into a guess.
struct Budget {
  /// Reduction steps allowed in a single Groebner basis computation.
  std::size_t gb_steps = 200000;
  /// Candidates tried when searching for a regular element.
  std::size_t regular_candidates = 200;
  /// Largest variable count for which the monomial prime poset is built.
  std::size_t max_poset_vars = 16;
};

/// Reduced Groebner basis of the ideal generated by `generators` under the
/// order of `ring`: monic, inter-reduced, sorted by descending leading
/// monomial. The unit ideal yields {1}, the zero ideal the empty list.
/// Throws ResourceError when `budget.gb_steps` reduction steps are exceeded.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators,
                                       const RingPtr& ring, const Budget& budget = {});

/// Fully reduced normal form of f modulo a Groebner basis.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

/// An ideal of K[x_1..x_v] with a write-once cache of reduced Groebner
/// bases (one per order). Copies share the cache; access is synchronized.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// The ideal of all variables.
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  /// Reduced basis under the ring's own order.
  const std::vector<Polynomial>& groebner_basis(const Budget& budget = {}) const;
  const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order,
                                                const Budget& budget = {}) const;

  bool is_zero(const Budget& budget = {}) const;
  bool is_unit(const Budget& budget = {}) const;
  /// True when the reduced basis consists of monomials.
  bool is_monomial(const Budget& budget = {}) const;

  Ideal plus(const Ideal& other) const;
  Ideal plus(const Polynomial& f) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::vector<Polynomial>>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Normal form of f modulo I (zero iff f lies in I).
Polynomial reduce(const Polynomial& f, const Ideal& ideal, const Budget& budget = {});
bool contains(const Ideal& ideal, const Polynomial& f, const Budget& budget = {});
/// I ⊆ J.
bool is_subset(const Ideal& i, const Ideal& j, const Budget& budget = {});
/// Reduced bases coincide under the order of I's ring.
bool ideal_equal(const Ideal& i, const Ideal& j, const Budget& budget = {});

/// I ∩ J by eliminating t from t·I + (1-t)·J.
Ideal ideal_intersection(const Ideal& i, const Ideal& j, const Budget& budget = {});
/// (I : f) = {g | g f ∈ I}; (I : 0) is the unit ideal.
Ideal ideal_quotient(const Ideal& i, const Polynomial& f, const Budget& budget = {});
/// (I : J) as the intersection of (I : f) over the generators f of J.
Ideal ideal_quotient(const Ideal& i, const Ideal& j, const Budget& budget = {});

/// f is a non-zero-divisor on K[x]/I, tested by (I : f) = I.
/// Throws DegenerateInputError when f ∈ I.
bool is_regular_element(const Ideal& ideal, const Polynomial& f, const Budget& budget = {});

/// Krull dimension of K[x]/I from maximal independent variable sets of the
/// leading-term ideal. Throws UndefinedDimensionError for the unit ideal.
std::size_t krull_dimension(const Ideal& ideal, const Budget& budget = {});

/// Largest set of variables no leading monomial of `leading` is supported
/// in; exposed for the dimension computation and its tests.
std::vector<std::size_t> maximal_independent_set(std::span<const Monomial> leading,
                                                 std::size_t nvars);

/// Depth-zero test: M = (x_1..x_v) is associated to K[x]/I iff (I : M) ⊋ I.
bool maximal_ideal_associated(const Ideal& ideal, const Budget& budget = {});

enum class DepthStatus { at_least_two, below_two, inconclusive };

struct DepthCertificate {
  DepthStatus status = DepthStatus::inconclusive;
  /// Depth zero: M ∈ Ass(R/I), decided before any candidate search.
  bool depth_zero = false;
  /// The first regular element found. For `at_least_two`, M ∉ Ass(R/(I+f));
  /// for `below_two` (with depth_zero false), M ∈ Ass(R/(I+f)).
  std::optional<Polynomial> regular_element;
  std::size_t candidates_tried = 0;
};

/// Candidate sequence used by regular-element searches: single variables in
/// declared order, then sums of two distinct variables, then sums of three,
/// and so on, truncated at `limit`.
std::vector<Polynomial> regular_element_candidates(const RingPtr& ring, std::size_t limit);

/// Decides depth(R/I) ≥ 2 with a certificate. A verdict of `below_two` is
/// only returned when certified: either M ∈ Ass(R/I), or a regular f was
/// found with M ∈ Ass(R/(I+f)). If no candidate within the budget is
/// regular the result is `inconclusive`.
///
/// `known_zero_divisor`, when given, lets a caller with extra structure
/// (e.g. the associated primes of a monomial ideal) skip candidates without
/// a colon computation. The candidate finally used is always certified by
/// the colon test.
DepthCertificate depth_at_least_two(
    const Ideal& ideal, const Budget& budget = {},
    const std::function<bool(const Polynomial&)>& known_zero_divisor = {});

}  // namespace catenary
