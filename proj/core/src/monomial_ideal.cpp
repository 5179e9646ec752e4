#include "catenary/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "catenary/error.hpp"

namespace catenary {

// MonomialPrime -------------------------------------------------------------

MonomialPrime::MonomialPrime(std::initializer_list<std::size_t> indices) {
  for (auto i : indices) bits_ |= std::uint64_t{1} << i;
}

MonomialPrime MonomialPrime::from_indices(const std::vector<std::size_t>& indices) {
  std::uint64_t bits = 0;
  for (auto i : indices) {
    if (i >= max_vars) throw ResourceError("monomial primes support at most 64 variables");
    bits |= std::uint64_t{1} << i;
  }
  return MonomialPrime(bits);
}

MonomialPrime MonomialPrime::all(std::size_t n) {
  if (n > max_vars) throw ResourceError("monomial primes support at most 64 variables");
  return MonomialPrime(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::size_t MonomialPrime::size() const noexcept {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<std::size_t> MonomialPrime::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < max_vars; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::string> MonomialPrime::names(const VariableContext& vars) const {
  std::vector<std::string> out;
  for (auto i : indices()) out.push_back(vars.name(i));
  return out;
}

std::string MonomialPrime::to_string(const VariableContext& vars) const {
  if (empty()) return "(0)";
  std::string s = "(";
  bool first = true;
  for (const auto& n : names(vars)) {
    if (!first) s += ", ";
    s += n;
    first = false;
  }
  return s + ")";
}

std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.indices() <=> b.indices();
}

// MonomialIdeal -------------------------------------------------------------

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) out.push_back(std::move(m));
  }
  return out;
}

std::uint64_t support_bits(const Monomial& m) {
  std::uint64_t s = 0;
  for (auto i : m.support()) s |= std::uint64_t{1} << i;
  return s;
}

void require_proper(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_unit()) throw DegenerateInputError(std::string(what) + " of the unit ideal");
  if (ideal.nvars() > MonomialPrime::max_vars) {
    throw ResourceError("monomial engine supports at most 64 variables");
  }
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::shared_ptr<const VariableContext> context,
                             std::vector<Monomial> generators)
    : context_(std::move(context)) {
  for (const auto& m : generators) {
    if (m.size() != context_->size()) throw ContextError("monomial does not match context");
  }
  generators_ = minimalize(std::move(generators));
}

std::optional<MonomialIdeal> MonomialIdeal::from_ideal(const Ideal& ideal, const Budget& budget) {
  if (!ideal.is_monomial(budget)) return std::nullopt;
  std::vector<Monomial> gens;
  for (const auto& g : ideal.groebner_basis(budget)) gens.push_back(g.leading_monomial());
  return MonomialIdeal(ideal.ring()->variables_ptr(), std::move(gens));
}

MonomialIdeal MonomialIdeal::from_prime(std::shared_ptr<const VariableContext> context,
                                        const MonomialPrime& prime) {
  std::vector<Monomial> gens;
  const std::size_t n = context->size();
  for (auto i : prime.indices()) {
    if (i >= n) throw ContextError("prime mentions a variable outside the context");
    gens.push_back(Monomial::variable(n, i));
  }
  return MonomialIdeal(std::move(context), std::move(gens));
}

bool MonomialIdeal::is_unit() const noexcept {
  return !generators_.empty() && generators_.front().is_one();
}

bool MonomialIdeal::is_squarefree() const noexcept {
  for (const auto& g : generators_) {
    for (auto e : g.exponents()) {
      if (e > 1) return false;
    }
  }
  return true;
}

MonomialIdeal MonomialIdeal::radical() const {
  std::vector<Monomial> gens;
  for (const auto& g : generators_) {
    std::vector<std::uint32_t> e = g.exponents();
    for (auto& x : e) x = x > 0 ? 1 : 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(context_, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contained_in(const MonomialPrime& prime) const {
  return std::all_of(generators_.begin(), generators_.end(), [&](const Monomial& g) {
    return (support_bits(g) & prime.bits()) != 0;
  });
}

MonomialIdeal MonomialIdeal::plus(const Monomial& m) const {
  std::vector<Monomial> gens = generators_;
  gens.push_back(m);
  return MonomialIdeal(context_, std::move(gens));
}

Ideal MonomialIdeal::to_ideal(const RingPtr& ring) const {
  if (!(ring->variables() == *context_)) throw ContextError("ring does not match monomial context");
  std::vector<Polynomial> gens;
  for (const auto& g : generators_) gens.push_back(Polynomial::monomial(ring, g));
  return Ideal(ring, std::move(gens));
}

std::string MonomialIdeal::to_string() const {
  if (generators_.empty()) return "(0)";
  RingPtr ring = PolyRing::make(Field::rationals(), context_);
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += Polynomial::monomial(ring, generators_[i]).to_string();
  }
  return s + ")";
}

// Decompositions ------------------------------------------------------------

MonomialPrime IrreducibleComponent::radical() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (powers[i] > 0) bits |= std::uint64_t{1} << i;
  }
  return MonomialPrime(bits);
}

bool IrreducibleComponent::contained_in(const IrreducibleComponent& other) const {
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (powers[i] == 0) continue;
    if (other.powers[i] == 0 || other.powers[i] > powers[i]) return false;
  }
  return true;
}

namespace {

using ComponentMemo = std::map<std::vector<Monomial>, std::vector<IrreducibleComponent>>;

const std::vector<IrreducibleComponent>& split(const std::vector<Monomial>& gens, std::size_t n,
                                               ComponentMemo& memo) {
  if (auto it = memo.find(gens); it != memo.end()) return it->second;

  std::vector<IrreducibleComponent> result;
  auto mixed = std::find_if(gens.begin(), gens.end(),
                            [](const Monomial& m) { return m.support().size() >= 2; });
  if (mixed == gens.end()) {
    IrreducibleComponent c{std::vector<std::uint32_t>(n, 0)};
    for (const auto& m : gens) {
      auto s = m.support();
      c.powers[s.front()] = m[s.front()];
    }
    result.push_back(std::move(c));
  } else {
    const std::size_t v = mixed->support().front();
    Monomial power = Monomial::variable(n, v, (*mixed)[v]);
    Monomial rest = mixed->quotient(power);
    std::vector<Monomial> left = gens;
    left.push_back(power);
    std::vector<Monomial> right = gens;
    right.push_back(rest);
    left = minimalize(std::move(left));
    right = minimalize(std::move(right));
    for (const auto* side : {&left, &right}) {
      const auto& part = split(*side, n, memo);
      result.insert(result.end(), part.begin(), part.end());
    }
  }
  return memo.emplace(gens, std::move(result)).first->second;
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  require_proper(ideal, "irreducible decomposition");
  ComponentMemo memo;
  std::vector<IrreducibleComponent> all = split(ideal.generators(), ideal.nvars(), memo);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  // Irreducible monomial ideals are meet-prime, so a component is redundant
  // exactly when it contains another component.
  std::vector<IrreducibleComponent> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < all.size() && !redundant; ++j) {
      if (i != j && all[j].contained_in(all[i])) redundant = true;
    }
    if (!redundant) out.push_back(all[i]);
  }
  return out;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
  require_proper(ideal, "minimal primes");
  std::vector<std::uint64_t> supports;
  for (const auto& g : ideal.generators()) supports.push_back(support_bits(g));

  std::vector<std::uint64_t> covers;
  auto covered_by_known = [&](std::uint64_t set) {
    return std::any_of(covers.begin(), covers.end(),
                       [&](std::uint64_t c) { return (c & ~set) == 0; });
  };
  auto search = [&](auto&& self, std::uint64_t cover) -> void {
    if (covered_by_known(cover)) return;
    auto open = std::find_if(supports.begin(), supports.end(),
                             [&](std::uint64_t s) { return (s & cover) == 0; });
    if (open == supports.end()) {
      // Drop previously found covers that strictly contain this one.
      std::erase_if(covers, [&](std::uint64_t c) { return (cover & ~c) == 0; });
      covers.push_back(cover);
      return;
    }
    for (std::size_t v = 0; v < MonomialPrime::max_vars; ++v) {
      if ((*open >> v) & 1U) self(self, cover | (std::uint64_t{1} << v));
    }
  };
  search(search, 0);

  std::vector<MonomialPrime> out;
  for (auto c : covers) out.emplace_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  std::vector<MonomialPrime> out;
  for (const auto& c : irreducible_decomposition(ideal)) out.push_back(c.radical());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MonomialIdeal monomial_quotient(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<std::uint32_t> e(g.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = g[i] > m[i] ? g[i] - m[i] : 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.context(), std::move(gens));
}

MonomialIdeal monomial_intersection(const MonomialIdeal& i, const MonomialIdeal& j) {
  std::vector<Monomial> gens;
  for (const auto& a : i.generators()) {
    for (const auto& b : j.generators()) gens.push_back(a.lcm(b));
  }
  return MonomialIdeal(i.context(), std::move(gens));
}

bool is_associated_prime(const MonomialIdeal& ideal, const MonomialPrime& prime) {
  if (!ideal.contained_in(prime)) return false;
  const MonomialIdeal local = localize(ideal, prime).ideal;
  const std::size_t n = local.nvars();
  if (n == 0) return true;  // I_P = (0) in a field: the zero ideal is associated
  std::optional<MonomialIdeal> colon;
  for (std::size_t v = 0; v < n; ++v) {
    MonomialIdeal q = monomial_quotient(local, Monomial::variable(n, v));
    colon = colon ? monomial_intersection(*colon, q) : q;
  }
  // (I : P) ⊋ I iff some generator of the colon lies outside I.
  return std::any_of(colon->generators().begin(), colon->generators().end(),
                     [&](const Monomial& g) { return !local.contains(g); });
}

Localization localize(const MonomialIdeal& ideal, const MonomialPrime& prime) {
  const std::size_t n = ideal.nvars();
  std::vector<std::size_t> keep;
  std::vector<std::string> names;
  for (auto i : prime.indices()) {
    if (i >= n) throw ContextError("prime mentions a variable outside the context");
    keep.push_back(i);
    names.push_back(ideal.context()->name(i));
  }
  auto ctx = std::make_shared<const VariableContext>(std::move(names));
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<std::uint32_t> e;
    e.reserve(keep.size());
    for (auto i : keep) e.push_back(g[i]);
    Monomial m(std::move(e));
    if (m.is_one()) {
      throw DegenerateInputError("localization at " + prime.to_string(*ideal.context()) +
                                 " is the zero ring: the prime does not contain the ideal");
    }
    gens.push_back(std::move(m));
  }
  return Localization{MonomialIdeal(std::move(ctx), std::move(gens)), std::move(keep)};
}

}  // namespace catenary
