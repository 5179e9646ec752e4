#include "catenary/groebner.hpp"

#include <algorithm>
#include <cstdint>

#include "catenary/error.hpp"

namespace catenary {

namespace {

class StepCounter {
 public:
  explicit StepCounter(std::size_t limit) : limit_(limit) {}

  void tick() {
    if (++used_ > limit_) {
      throw ResourceError("Groebner basis step budget of " + std::to_string(limit_) +
                          " reduction steps exceeded");
    }
  }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

// Full reduction (leading and tail terms) of f by `basis`.
Polynomial full_reduce(const Polynomial& f, std::span<const Polynomial> basis,
                       StepCounter* counter, std::size_t skip = SIZE_MAX) {
  const Field& field = f.ring()->field();
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == skip) continue;
      const auto& g = basis[i];
      if (!g.leading_monomial().divides(lt.monomial)) continue;
      if (counter) counter->tick();
      p = p.minus_term_times(field.div(lt.coefficient, g.leading_coefficient()),
                             lt.monomial.quotient(g.leading_monomial()), g);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      p = p - Polynomial::monomial(p.ring(), lt.monomial, lt.coefficient);
    }
  }
  return Polynomial(f.ring(), std::move(remainder));
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

std::vector<Polynomial> buchberger(std::vector<Polynomial> basis, const RingPtr& ring,
                                   StepCounter& counter) {
  const MonomialOrder& order = ring->order();
  std::vector<CriticalPair> pairs;
  // pending[j][i] (i < j): the pair (i, j) has been created but not handled.
  std::vector<std::vector<bool>> pending;

  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return static_cast<bool>(pending[b][a]);
  };

  auto add_element = [&](Polynomial g) {
    const std::size_t k = basis.size();
    pending.emplace_back(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      pairs.push_back({i, k, basis[i].leading_monomial().lcm(g.leading_monomial())});
      pending[k][i] = true;
    }
    basis.push_back(std::move(g));
  };

  std::vector<Polynomial> seeds = std::move(basis);
  basis.clear();
  for (auto& g : seeds) add_element(std::move(g));

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first; ties by creation order.
    std::size_t best = 0;
    for (std::size_t p = 1; p < pairs.size(); ++p) {
      auto c = order.compare(pairs[p].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && std::tie(pairs[p].j, pairs[p].i) <
                                  std::tie(pairs[best].j, pairs[best].i))) {
        best = p;
      }
    }
    CriticalPair pair = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    pending[pair.j][pair.i] = false;

    const Polynomial& f = basis[pair.i];
    const Polynomial& g = basis[pair.j];
    // Product criterion.
    if (f.leading_monomial().coprime(g.leading_monomial())) continue;
    // Chain criterion.
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis[k].leading_monomial().divides(pair.lcm)) continue;
      chain = !is_pending(pair.i, k) && !is_pending(pair.j, k);
    }
    if (chain) continue;

    counter.tick();
    Polynomial s = f.times_term(1, pair.lcm.quotient(f.leading_monomial()))
                       .minus_term_times(1, pair.lcm.quotient(g.leading_monomial()), g);
    Polynomial h = full_reduce(s, basis, &counter);
    if (h.is_zero()) continue;
    h = h.monic();
    if (h.is_constant()) return {Polynomial::constant(ring, 1)};
    add_element(std::move(h));
  }
  return basis;
}

std::vector<Polynomial> make_reduced(std::vector<Polynomial> basis, StepCounter& counter) {
  // Minimal basis: drop elements whose leading monomial is a multiple of
  // another's (the earlier element wins on ties).
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = basis[i].leading_monomial();
      const auto& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    reduced.push_back(full_reduce(minimal[i], minimal, &counter, i).monic());
  }
  const MonomialOrder& order = reduced.empty() ? MonomialOrder() : reduced.front().ring()->order();
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return reduced;
}

}  // namespace

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators,
                                       const RingPtr& ring, const Budget& budget) {
  std::vector<Polynomial> input;
  for (const auto& g : generators) {
    Polynomial h = g.in_ring(ring);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Polynomial::constant(ring, 1)};
    input.push_back(h.monic());
  }
  if (input.empty()) return {};
  StepCounter counter(budget.gb_steps);
  auto basis = buchberger(std::move(input), ring, counter);
  if (basis.size() == 1 && basis.front().is_constant()) return basis;
  return make_reduced(std::move(basis), counter);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  for (const auto& g : basis) require_same_ring(f, g);
  return full_reduce(f, basis, nullptr);
}

// Ideal ---------------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  generators_.reserve(generators.size());
  for (auto& g : generators) {
    if (!g.ring()->same_context(*ring_)) {
      throw ContextError("generator '" + g.to_string() + "' is not in " + ring_->describe());
    }
    generators_.push_back(g.in_ring(ring_));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

const std::vector<Polynomial>& Ideal::groebner_basis(const Budget& budget) const {
  return groebner_basis(ring_->order(), budget);
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order,
                                                     const Budget& budget) const {
  std::lock_guard lock(cache_->mutex);
  for (const auto& [o, basis] : cache_->bases) {
    if (o == order) return basis;
  }
  RingPtr target = ring_->order() == order ? ring_ : ring_->with_order(order);
  auto basis = catenary::groebner_basis(generators_, target, budget);
  cache_->bases.emplace_back(order, std::move(basis));
  return cache_->bases.back().second;
}

bool Ideal::is_zero(const Budget& budget) const { return groebner_basis(budget).empty(); }

bool Ideal::is_unit(const Budget& budget) const {
  const auto& gb = groebner_basis(budget);
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_monomial(const Budget& budget) const {
  for (const auto& g : groebner_basis(budget)) {
    if (!g.is_term()) return false;
  }
  return true;
}

Ideal Ideal::plus(const Ideal& other) const {
  std::vector<Polynomial> gens = generators_;
  for (const auto& g : other.generators_) gens.push_back(g.in_ring(ring_));
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::plus(const Polynomial& f) const {
  std::vector<Polynomial> gens = generators_;
  gens.push_back(f.in_ring(ring_));
  return Ideal(ring_, std::move(gens));
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += generators_[i].to_string();
  }
  if (generators_.empty()) s += "0";
  return s + ")";
}

// Ideal calculus ------------------------------------------------------------

Polynomial reduce(const Polynomial& f, const Ideal& ideal, const Budget& budget) {
  Polynomial g = f.in_ring(ideal.ring());
  return normal_form(g, ideal.groebner_basis(budget));
}

bool contains(const Ideal& ideal, const Polynomial& f, const Budget& budget) {
  return reduce(f, ideal, budget).is_zero();
}

bool is_subset(const Ideal& i, const Ideal& j, const Budget& budget) {
  for (const auto& g : i.generators()) {
    if (!contains(j, g, budget)) return false;
  }
  return true;
}

bool ideal_equal(const Ideal& i, const Ideal& j, const Budget& budget) {
  if (!i.ring()->same_context(*j.ring())) {
    throw ContextError("ideals from different contexts");
  }
  const auto& a = i.groebner_basis(i.ring()->order(), budget);
  const auto& b = j.groebner_basis(i.ring()->order(), budget);
  return a == b;
}

namespace {

std::string fresh_name(const VariableContext& vars) {
  std::string name = "_t";
  while (vars.index_of(name)) name += "_";
  return name;
}

// Embeds f into a ring with `shift` new variables in front.
Polynomial embed(const Polynomial& f, const RingPtr& target, std::size_t shift) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(shift, 0);
    e.insert(e.end(), t.monomial.exponents().begin(), t.monomial.exponents().end());
    terms.push_back(Term{t.coefficient, Monomial(std::move(e))});
  }
  return Polynomial(target, std::move(terms));
}

Polynomial project(const Polynomial& f, const RingPtr& target, std::size_t shift) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    const auto& e = t.monomial.exponents();
    terms.push_back(Term{t.coefficient, Monomial(std::vector<std::uint32_t>(e.begin() + shift, e.end()))});
  }
  return Polynomial(target, std::move(terms));
}

}  // namespace

Ideal ideal_intersection(const Ideal& i, const Ideal& j, const Budget& budget) {
  if (!i.ring()->same_context(*j.ring())) {
    throw ContextError("ideals from different contexts");
  }
  const RingPtr& ring = i.ring();
  if (i.is_zero(budget) || j.is_zero(budget)) return Ideal::zero(ring);
  if (i.is_unit(budget)) return Ideal(ring, j.generators());
  if (j.is_unit(budget)) return i;

  std::vector<std::string> names{fresh_name(ring->variables())};
  const auto& old = ring->variables().names();
  names.insert(names.end(), old.begin(), old.end());
  RingPtr ext = PolyRing::make(ring->field(), std::move(names), MonomialOrder::elimination(1));

  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : i.groebner_basis(budget)) gens.push_back(t * embed(g, ext, 1));
  for (const auto& g : j.groebner_basis(budget)) gens.push_back(one_minus_t * embed(g, ext, 1));

  std::vector<Polynomial> out;
  for (const auto& g : catenary::groebner_basis(gens, ext, budget)) {
    if (g.leading_monomial()[0] == 0) out.push_back(project(g, ring, 1));
  }
  return Ideal(ring, std::move(out));
}

Ideal ideal_quotient(const Ideal& i, const Polynomial& f, const Budget& budget) {
  const RingPtr& ring = i.ring();
  Polynomial g = f.in_ring(ring);
  if (g.is_zero()) return Ideal::unit(ring);
  if (i.is_zero(budget)) return Ideal::zero(ring);
  if (g.is_constant()) return i;
  Ideal meet = ideal_intersection(i, Ideal(ring, {g}), budget);
  std::vector<Polynomial> gens;
  gens.reserve(meet.generators().size());
  for (const auto& h : meet.generators()) gens.push_back(exact_quotient(h, g));
  return Ideal(ring, std::move(gens));
}

Ideal ideal_quotient(const Ideal& i, const Ideal& j, const Budget& budget) {
  std::optional<Ideal> acc;
  for (const auto& f : j.generators()) {
    if (f.is_zero()) continue;
    Ideal q = ideal_quotient(i, f, budget);
    acc = acc ? ideal_intersection(*acc, q, budget) : q;
  }
  return acc ? *acc : Ideal::unit(i.ring());
}

bool is_regular_element(const Ideal& ideal, const Polynomial& f, const Budget& budget) {
  if (contains(ideal, f, budget)) {
    throw DegenerateInputError("'" + f.to_string() + "' lies in the ideal; it represents 0");
  }
  return is_subset(ideal_quotient(ideal, f, budget), ideal, budget);
}

// Dimension -----------------------------------------------------------------

std::vector<std::size_t> maximal_independent_set(std::span<const Monomial> leading,
                                                 std::size_t nvars) {
  if (nvars > 64) throw ResourceError("dimension search supports at most 64 variables");
  std::vector<std::uint64_t> supports;
  for (const auto& m : leading) {
    std::uint64_t s = 0;
    for (std::size_t v : m.support()) s |= std::uint64_t{1} << v;
    if (s == 0) return {};  // unit ideal: nothing is independent
    supports.push_back(s);
  }
  auto independent = [&](std::uint64_t set) {
    for (auto s : supports) {
      if ((s & ~set) == 0) return false;
    }
    return true;
  };

  std::uint64_t best = 0;
  std::size_t best_size = 0;
  bool found = false;
  // Include-first depth-first search over variables; the first maximum
  // found is lexicographically earliest.
  auto search = [&](auto&& self, std::size_t index, std::uint64_t set, std::size_t size) -> void {
    if (found && size + (nvars - index) <= best_size) return;
    if (index == nvars) {
      best = set;
      best_size = size;
      found = true;
      return;
    }
    std::uint64_t with = set | (std::uint64_t{1} << index);
    if (independent(with)) self(self, index + 1, with, size + 1);
    self(self, index + 1, set, size);
  };
  search(search, 0, 0, 0);

  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars; ++v) {
    if (best & (std::uint64_t{1} << v)) out.push_back(v);
  }
  return out;
}

std::size_t krull_dimension(const Ideal& ideal, const Budget& budget) {
  if (ideal.is_unit(budget)) {
    throw UndefinedDimensionError("the unit ideal has no Krull dimension");
  }
  std::vector<Monomial> leading;
  for (const auto& g : ideal.groebner_basis(budget)) leading.push_back(g.leading_monomial());
  return maximal_independent_set(leading, ideal.ring()->nvars()).size();
}

// Depth ---------------------------------------------------------------------

bool maximal_ideal_associated(const Ideal& ideal, const Budget& budget) {
  if (ideal.is_unit(budget)) {
    throw DegenerateInputError("the unit ideal has no associated primes");
  }
  // With no variables M = (0) and (I : 0) is the unit ideal.
  if (ideal.ring()->nvars() == 0) return true;
  Ideal colon = ideal_quotient(ideal, Ideal::maximal(ideal.ring()), budget);
  return !is_subset(colon, ideal, budget);
}

std::vector<Polynomial> regular_element_candidates(const RingPtr& ring, std::size_t limit) {
  std::vector<Polynomial> out;
  const std::size_t n = ring->nvars();
  for (std::size_t k = 1; k <= n && out.size() < limit; ++k) {
    // Index combinations of size k in lexicographic order.
    std::vector<std::size_t> combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i;
    while (out.size() < limit) {
      std::vector<Term> terms;
      for (std::size_t v : combo) terms.push_back(Term{1, Monomial::variable(n, v)});
      out.emplace_back(ring, std::move(terms));
      std::size_t pos = k;
      while (pos > 0 && combo[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++combo[pos - 1];
      for (std::size_t i = pos; i < k; ++i) combo[i] = combo[i - 1] + 1;
    }
  }
  return out;
}

DepthCertificate depth_at_least_two(const Ideal& ideal, const Budget& budget,
                                    const std::function<bool(const Polynomial&)>& known_zero_divisor) {
  DepthCertificate cert;
  if (maximal_ideal_associated(ideal, budget)) {
    cert.status = DepthStatus::below_two;
    cert.depth_zero = true;
    return cert;
  }
  for (const auto& f : regular_element_candidates(ideal.ring(), budget.regular_candidates)) {
    ++cert.candidates_tried;
    if (contains(ideal, f, budget)) continue;
    if (known_zero_divisor && known_zero_divisor(f)) continue;
    if (!is_regular_element(ideal, f, budget)) continue;
    // depth(R/(I+f)) = depth(R/I) - 1 for a regular f in M.
    bool drop = maximal_ideal_associated(ideal.plus(f), budget);
    cert.status = drop ? DepthStatus::below_two : DepthStatus::at_least_two;
    cert.regular_element = f;
    return cert;
  }
  cert.status = DepthStatus::inconclusive;
  return cert;
}

}  // namespace catenary
