#include "catenary/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>

#include "catenary/error.hpp"

namespace catenary {

struct SpecPoset::State {
  State(MonomialIdeal i, std::vector<MonomialPrime> min, std::vector<MonomialPrime> ass)
      : ideal(std::move(i)), minimal(std::move(min)), associated(std::move(ass)) {}

  MonomialIdeal ideal;
  std::vector<MonomialPrime> minimal;
  std::vector<MonomialPrime> associated;
  std::once_flag once;
  std::atomic<bool> built{false};
  std::vector<MonomialPrime> nodes;
};

namespace {

std::vector<MonomialPrime> enumerate_nodes(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  if (n > 30) throw ResourceError("refusing to enumerate 2^" + std::to_string(n) + " poset nodes");
  std::vector<MonomialPrime> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    MonomialPrime q(bits);
    if (ideal.contained_in(q)) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SpecPoset build_poset(const MonomialIdeal& ideal, const Budget& budget) {
  if (ideal.is_unit()) throw DegenerateInputError("the unit ideal has no primes");
  if (ideal.nvars() > budget.max_poset_vars) {
    throw ResourceError("poset over " + std::to_string(ideal.nvars()) +
                        " variables exceeds the cap of " + std::to_string(budget.max_poset_vars));
  }
  auto state = std::make_shared<SpecPoset::State>(ideal, minimal_primes(ideal),
                                                  associated_primes(ideal));
  SpecPoset poset(state);
  if (ideal.nvars() <= SpecPoset::eager_limit) poset.nodes();
  return poset;
}

const MonomialIdeal& SpecPoset::ideal() const noexcept { return state_->ideal; }
std::size_t SpecPoset::nvars() const noexcept { return state_->ideal.nvars(); }
MonomialPrime SpecPoset::top() const { return MonomialPrime::all(nvars()); }

const std::vector<MonomialPrime>& SpecPoset::minimal_primes() const noexcept {
  return state_->minimal;
}
const std::vector<MonomialPrime>& SpecPoset::associated_primes() const noexcept {
  return state_->associated;
}

bool SpecPoset::contains(const MonomialPrime& q) const {
  return top().contains(q) && state_->ideal.contained_in(q);
}

bool SpecPoset::is_minimal(const MonomialPrime& q) const {
  return std::binary_search(state_->minimal.begin(), state_->minimal.end(), q);
}

bool SpecPoset::is_associated(const MonomialPrime& q) const {
  return std::binary_search(state_->associated.begin(), state_->associated.end(), q);
}

std::size_t SpecPoset::quotient_dimension(const MonomialPrime& q) const {
  return nvars() - q.size();
}

std::vector<MonomialPrime> SpecPoset::upper_covers(const MonomialPrime& q) const {
  std::vector<MonomialPrime> out;
  if (!contains(q)) return out;
  for (std::size_t v = 0; v < nvars(); ++v) {
    if (!q.contains(v)) out.push_back(q.with(v));
  }
  return out;
}

std::vector<MonomialPrime> SpecPoset::lower_covers(const MonomialPrime& q) const {
  std::vector<MonomialPrime> out;
  if (!contains(q)) return out;
  for (auto v : q.indices()) {
    MonomialPrime r = q.without(v);
    if (contains(r)) out.push_back(r);
  }
  return out;
}

const std::vector<MonomialPrime>& SpecPoset::nodes() const {
  std::call_once(state_->once, [this] {
    state_->nodes = enumerate_nodes(state_->ideal);
    state_->built = true;
  });
  return state_->nodes;
}

bool SpecPoset::materialized() const { return state_->built; }

std::size_t height(const SpecPoset& poset, const MonomialPrime& q) {
  if (!poset.contains(q)) {
    throw ParameterError(q.to_string(poset.variables()) + " does not contain the ideal");
  }
  std::size_t best = 0;
  for (const auto& p : poset.minimal_primes()) {
    if (q.contains(p)) best = std::max(best, q.size() - p.size());
  }
  return best;
}

// Chains --------------------------------------------------------------------

bool PrimeChain::saturated() const {
  for (std::size_t i = 1; i < primes.size(); ++i) {
    if (!primes[i].contains(primes[i - 1]) || primes[i].size() != primes[i - 1].size() + 1) {
      return false;
    }
  }
  return true;
}

std::string PrimeChain::to_string(const VariableContext& vars) const {
  std::string s;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) s += " < ";
    s += primes[i].to_string(vars);
  }
  return s;
}

PrimeChain construct_chain(const SpecPoset& poset, const MonomialPrime& start) {
  const auto& vars = poset.variables();
  if (!poset.is_minimal(start)) {
    throw ParameterError(start.to_string(vars) + " is not a minimal prime of the ideal");
  }
  const MonomialPrime top = poset.top();
  if (start == top) throw ParameterError("dim(T/P) = 0: no chain to build");
  if (poset.is_associated(top)) {
    throw ParameterError("the maximal ideal is associated; chain construction needs depth > 0");
  }

  std::vector<MonomialPrime> others;
  std::uint64_t other_vars = 0;
  for (const auto& p : poset.minimal_primes()) {
    if (p == start) continue;
    others.push_back(p);
    other_vars |= p.bits();
  }
  auto admissible = [&](const MonomialPrime& q) {
    if (poset.is_associated(q)) return false;
    return std::none_of(others.begin(), others.end(),
                        [&](const MonomialPrime& p) { return q.contains(p); });
  };

  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < poset.nvars(); ++v) {
    if (!((other_vars >> v) & 1U)) order.push_back(v);
  }
  for (std::size_t v = 0; v < poset.nvars(); ++v) {
    if ((other_vars >> v) & 1U) order.push_back(v);
  }

  const std::size_t interior = poset.quotient_dimension(start) - 1;
  std::vector<MonomialPrime> path{start};
  std::size_t deepest_failure = 1;
  std::map<std::uint64_t, bool> dead;  // interior nodes known not to complete

  auto extend = [&](auto&& self, const MonomialPrime& current) -> bool {
    const std::size_t step = path.size();
    if (step > interior) return true;
    bool any = false;
    for (auto v : order) {
      if (current.contains(v)) continue;
      MonomialPrime next = current.with(v);
      if (dead.count(next.bits()) || !admissible(next)) continue;
      any = true;
      path.push_back(next);
      if (self(self, next)) return true;
      path.pop_back();
      dead[next.bits()] = true;
    }
    if (!any) deepest_failure = std::max(deepest_failure, step);
    return false;
  };

  if (!extend(extend, start)) {
    throw InfeasibleError("no admissible monomial prime at step " +
                              std::to_string(deepest_failure) + " of the chain from " +
                              start.to_string(vars),
                          deepest_failure);
  }
  path.push_back(top);
  return PrimeChain{std::move(path)};
}

std::vector<std::string> verify_chain(const MonomialIdeal& ideal, const PrimeChain& chain,
                                      const MonomialPrime& start) {
  std::vector<std::string> problems;
  const auto& vars = *ideal.context();
  const MonomialPrime top = MonomialPrime::all(ideal.nvars());
  if (chain.primes.empty()) return {"chain is empty"};
  if (chain.primes.front() != start) problems.push_back("chain does not start at the given prime");
  if (chain.primes.back() != top) problems.push_back("chain does not end at the maximal ideal");
  if (!chain.saturated()) problems.push_back("chain is not saturated");
  if (chain.length() != ideal.nvars() - start.size()) {
    problems.push_back("chain length differs from dim(T/P)");
  }

  // start must contain I and be minimal: dropping any variable loses I.
  if (!ideal.contained_in(start)) {
    problems.push_back("start does not contain the ideal");
  } else {
    for (auto v : start.indices()) {
      if (ideal.contained_in(start.without(v))) {
        problems.push_back("start is not a minimal prime");
        break;
      }
    }
  }

  for (std::size_t i = 1; i + 1 < chain.primes.size(); ++i) {
    const auto& q = chain.primes[i];
    const std::string name = q.to_string(vars);
    if (!ideal.contained_in(q)) {
      problems.push_back(name + " does not contain the ideal");
      continue;
    }
    if (is_associated_prime(ideal, q)) problems.push_back(name + " is associated");
    // Q lies over a minimal prime other than `start` iff removing some
    // variable of `start` from Q still leaves a prime containing I.
    for (auto v : start.indices()) {
      if (ideal.contained_in(q.without(v))) {
        problems.push_back(name + " contains a second minimal prime");
        break;
      }
    }
  }
  return problems;
}

std::vector<std::size_t> noncat_profile(const MonomialIdeal& ideal) {
  std::vector<std::size_t> out;
  for (const auto& p : minimal_primes(ideal)) out.push_back(ideal.nvars() - p.size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<std::size_t> noncat_profile(const SpecPoset& poset) {
  std::vector<std::size_t> out;
  for (const auto& p : poset.minimal_primes()) out.push_back(poset.quotient_dimension(p));
  std::sort(out.rbegin(), out.rend());
  return out;
}

// DOT -----------------------------------------------------------------------

namespace {

const char* const kChainColours[] = {"blue", "darkgreen", "purple", "darkorange", "brown"};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string node_attributes(const MonomialPrime& q, const VariableContext& vars,
                            const SpecPoset* poset) {
  std::string attrs = "label=" + quote(q.to_string(vars));
  if (!poset) return attrs;
  if (poset->is_minimal(q)) attrs += ", style=filled, fillcolor=lightblue";
  if (poset->is_associated(q)) attrs += ", color=red, penwidth=2";
  if (q == poset->top()) attrs += ", peripheries=2";
  return attrs;
}

std::string render(const std::vector<MonomialPrime>& nodes,
                   const std::vector<std::pair<MonomialPrime, MonomialPrime>>& plain_edges,
                   std::span<const PrimeChain> chains, const VariableContext& vars,
                   const SpecPoset* poset) {
  std::map<std::uint64_t, std::size_t> id;
  for (std::size_t i = 0; i < nodes.size(); ++i) id[nodes[i].bits()] = i;

  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> chain_edge;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    const auto& p = chains[c].primes;
    for (std::size_t i = 1; i < p.size(); ++i) chain_edge.emplace(std::make_pair(p[i - 1].bits(), p[i].bits()), c);
  }

  std::ostringstream out;
  out << "digraph spec {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [" << node_attributes(nodes[i], vars, poset) << "];\n";
  }
  for (const auto& [lo, hi] : plain_edges) {
    out << "  n" << id.at(lo.bits()) << " -> n" << id.at(hi.bits());
    auto it = chain_edge.find({lo.bits(), hi.bits()});
    if (it != chain_edge.end()) {
      out << " [color=" << kChainColours[it->second % std::size(kChainColours)] << ", penwidth=2]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string emit_dot(const SpecPoset& poset, std::span<const PrimeChain> highlight) {
  const auto& nodes = poset.nodes();
  std::vector<std::pair<MonomialPrime, MonomialPrime>> edges;
  for (const auto& q : nodes) {
    for (const auto& r : poset.upper_covers(q)) edges.emplace_back(q, r);
  }
  std::sort(edges.begin(), edges.end());
  return render(nodes, edges, highlight, poset.variables(), &poset);
}

std::string emit_dot(std::span<const PrimeChain> chains, const VariableContext& vars,
                     const SpecPoset* poset) {
  std::vector<MonomialPrime> nodes;
  std::vector<std::pair<MonomialPrime, MonomialPrime>> edges;
  for (const auto& c : chains) {
    nodes.insert(nodes.end(), c.primes.begin(), c.primes.end());
    for (std::size_t i = 1; i < c.primes.size(); ++i) edges.emplace_back(c.primes[i - 1], c.primes[i]);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return render(nodes, edges, chains, vars, poset);
}

}  // namespace catenary
