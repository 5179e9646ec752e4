#include "catenary/analyzer.hpp"

#include <algorithm>

#include "catenary/error.hpp"

namespace catenary {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "no";
    case Verdict::yes: return "yes";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::unsupported: return "unsupported";
  }
  return "?";
}

const char* to_string(Semantics s) {
  return s == Semantics::monomial_exact ? "monomial-exact" : "unverified-completion";
}

Verdict verdict_and(Verdict a, Verdict b) {
  if (a == Verdict::no || b == Verdict::no) return Verdict::no;
  if (a == Verdict::unsupported || b == Verdict::unsupported) return Verdict::unsupported;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::yes;
}

Verdict verdict_or(Verdict a, Verdict b) {
  if (a == Verdict::yes || b == Verdict::yes) return Verdict::yes;
  if (a == Verdict::unsupported || b == Verdict::unsupported) return Verdict::unsupported;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::no;
}

Verdict verdict_not(Verdict a) {
  if (a == Verdict::yes) return Verdict::no;
  if (a == Verdict::no) return Verdict::yes;
  return a;
}

namespace {

Verdict all_of(std::initializer_list<Verdict> vs) {
  Verdict out = Verdict::yes;
  for (auto v : vs) out = verdict_and(out, v);
  return out;
}

bool vanishes_at_origin(const Polynomial& f) {
  return std::none_of(f.terms().begin(), f.terms().end(),
                      [](const Term& t) { return t.monomial.is_one(); });
}

/// f restricted to the sums-of-variables shape used by regular element
/// candidates: the set of variables it sums, if it is one.
std::optional<MonomialPrime> variable_sum_support(const Polynomial& f) {
  std::uint64_t bits = 0;
  for (const auto& t : f.terms()) {
    if (t.coefficient != 1 || t.monomial.total_degree() != 1) return std::nullopt;
    bits |= std::uint64_t{1} << t.monomial.support().front();
  }
  return MonomialPrime(bits);
}

/// A sum of the variables in S is a zero divisor on R/I, I monomial, iff it
/// lies in an associated prime, i.e. iff S sits inside one.
std::function<bool(const Polynomial&)> ass_prefilter(std::vector<MonomialPrime> ass) {
  return [ass = std::move(ass)](const Polynomial& f) {
    auto s = variable_sum_support(f);
    if (!s) return false;
    return std::any_of(ass.begin(), ass.end(), [&](const MonomialPrime& p) { return p.contains(*s); });
  };
}

/// The localization of a monomial ideal at a monomial prime as an ideal of
/// the polynomial ring over the prime's variables.
Ideal localized_ideal(const RingPtr& ring, const Localization& loc) {
  std::vector<std::string> names;
  for (auto i : loc.variables) names.push_back(ring->variables().name(i));
  RingPtr local = PolyRing::make(ring->field(), std::move(names), ring->order());
  std::vector<Polynomial> gens;
  for (const auto& g : loc.ideal.generators()) gens.push_back(Polynomial::monomial(local, g));
  return Ideal(local, std::move(gens));
}

DepthCertificate local_depth(const RingPtr& ring, const MonomialIdeal& ideal,
                             const MonomialPrime& q, const Budget& budget) {
  Localization loc = localize(ideal, q);
  Ideal local = localized_ideal(ring, loc);
  std::vector<MonomialPrime> ass;
  if (!loc.ideal.is_zero()) ass = associated_primes(loc.ideal);
  return depth_at_least_two(local, budget, ass_prefilter(std::move(ass)));
}

/// f rewritten over `target`, matching variables by name.
Polynomial transfer(const Polynomial& f, const RingPtr& target) {
  const auto& from = f.ring()->variables();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(target->nvars(), 0);
    for (auto i : t.monomial.support()) {
      auto j = target->variables().index_of(from.name(i));
      if (!j) throw ContextError("variable " + from.name(i) + " missing from " + target->describe());
      e[*j] = t.monomial[i];
    }
    terms.push_back(Term{t.coefficient, Monomial(std::move(e))});
  }
  return Polynomial(target, std::move(terms));
}

/// First candidate regular on R/(I + x) over the ring of `local`.
std::optional<Polynomial> regular_modulo(const Ideal& local, const Polynomial& x,
                                         const Budget& budget) {
  Ideal quotient = local.plus(transfer(x, local.ring()));
  for (const auto& f : regular_element_candidates(local.ring(), budget.regular_candidates)) {
    if (contains(quotient, f, budget)) continue;
    if (is_regular_element(quotient, f, budget)) return f;
  }
  return std::nullopt;
}

/// Q ∈ Ass(R/(I + x_i + x_j)) for monomial I and i ≠ j both in Q. Setting
/// x_j = -x_i sends I to a monomial ideal I' of the ring without x_j, and
/// R/(I + x_i + x_j) ≅ K[x without x_j]/I'.
bool associated_modulo_binomial(const MonomialIdeal& ideal, const MonomialPrime& q,
                                std::size_t i, std::size_t j) {
  const std::size_t n = ideal.nvars();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) {
    if (k != j) names.push_back(ideal.context()->name(k));
  }
  auto context = std::make_shared<const VariableContext>(std::move(names));
  auto reindex = [&](std::size_t k) { return k < j ? k : k - 1; };
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<std::uint32_t> e(n - 1, 0);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      e[reindex(k)] = g[k];
    }
    e[reindex(i)] += g[j];
    gens.emplace_back(std::move(e));
  }
  MonomialIdeal image(context, std::move(gens));
  std::uint64_t bits = 0;
  for (auto k : q.indices()) {
    if (k != j) bits |= std::uint64_t{1} << reindex(k);
  }
  if (image.is_unit()) return false;
  return is_associated_prime(image, MonomialPrime(bits));
}

/// Q ∉ Ass(T/xT) for an x of the shape produced by the witness search.
bool avoids_ass_modulo(const MonomialIdeal& ideal, const MonomialPrime& q, const Polynomial& x) {
  auto s = variable_sum_support(x);
  if (!s || s->size() > 2 || s->empty()) {
    throw ParameterError("expected a variable or a sum of two variables: " + x.to_string());
  }
  auto idx = s->indices();
  if (idx.size() == 1) {
    MonomialIdeal quotient = ideal.plus(Monomial::variable(ideal.nvars(), idx[0]));
    return !is_associated_prime(quotient, q);
  }
  return !associated_modulo_binomial(ideal, q, idx[0], idx[1]);
}

std::optional<MonomialPrime> first_min_in_range(const RingFacts& facts, std::size_t lower) {
  for (const auto& p : facts.minimal_primes()) {
    const std::size_t d = facts.nvars() - p.size();
    if (lower < d && d < facts.dim()) return p;
  }
  return std::nullopt;
}

/// Some P ∈ Min with lower < dim(T/P) < dim T.
Verdict exists_min_in_range(const RingFacts& facts, std::size_t lower) {
  if (facts.dim() <= lower + 1) return Verdict::no;
  if (!facts.monomial()) return Verdict::unsupported;
  return verdict_of(first_min_in_range(facts, lower).has_value());
}

Verdict depth_ge1(const RingFacts& facts) { return verdict_of(!facts.maximal_associated()); }

Verdict depth_ge2(const RingFacts& facts) {
  switch (facts.depth().status) {
    case DepthStatus::at_least_two: return Verdict::yes;
    case DepthStatus::below_two: return Verdict::no;
    case DepthStatus::inconclusive: return Verdict::inconclusive;
  }
  return Verdict::inconclusive;
}

Verdict equidimensional(const RingFacts& facts) {
  const auto& profile = facts.profile();
  if (profile.empty()) return Verdict::unsupported;
  return verdict_of(profile.front() == profile.back());
}

/// Interior nodes admissible for a chain out of P: they contain I, are not
/// associated and contain no minimal prime other than P.
bool admissible(const SpecPoset& poset, const MonomialPrime& P, const MonomialPrime& q) {
  if (!poset.contains(q) || q == poset.top() || poset.is_associated(q)) return false;
  return std::none_of(poset.minimal_primes().begin(), poset.minimal_primes().end(),
                      [&](const MonomialPrime& m) { return m != P && q.contains(m); });
}

}  // namespace

bool RingFacts::characteristic_zero() const noexcept {
  return presentation_.ring->field().is_rationals();
}

RingFacts RingFacts::compute(const RingPresentation& presentation, const Budget& budget) {
  if (!presentation.ring) throw ParameterError("ring presentation without a ring");
  const RingPtr& ring = presentation.ring;
  RingPresentation p = presentation;
  for (auto& g : p.generators) {
    if (!g.ring()->same_context(*ring)) throw ContextError("generator from another ring");
    g = g.in_ring(ring);
  }
  Ideal ideal(ring, p.generators);
  if (ideal.is_unit(budget)) throw DegenerateInputError("the unit ideal defines the zero ring");
  for (const auto& g : p.generators) {
    if (!vanishes_at_origin(g)) {
      throw UnsupportedInputError("generator " + g.to_string() +
                                  " does not vanish at the origin; only ideals inside "
                                  "(x_1..x_v) are supported");
    }
  }

  RingFacts facts(std::move(p), ideal, budget);
  const std::size_t v = ring->nvars();
  facts.monomial_ = MonomialIdeal::from_ideal(ideal, budget);
  facts.field_ = ideal_equal(ideal, Ideal::maximal(ring), budget);
  facts.maximal_associated_ = maximal_ideal_associated(ideal, budget);

  if (facts.monomial_) {
    const MonomialIdeal& m = *facts.monomial_;
    facts.minimal_ = catenary::minimal_primes(m);
    facts.associated_ = catenary::associated_primes(m);
    std::size_t smallest = v;
    for (const auto& q : facts.minimal_) {
      smallest = std::min(smallest, q.size());
      facts.profile_.push_back(v - q.size());
    }
    facts.dim_ = v - smallest;
    std::sort(facts.profile_.begin(), facts.profile_.end(), std::greater<>());
    facts.dvr_ = v >= 1 && m.generators().size() == v - 1 &&
                 std::all_of(m.generators().begin(), m.generators().end(),
                             [](const Monomial& g) { return g.total_degree() == 1; });
    if (v <= budget.max_poset_vars) {
      facts.poset_ = build_poset(m, budget);
    } else {
      facts.notes_.push_back("prime poset not built: " + std::to_string(v) +
                             " variables exceed max-poset-vars " +
                             std::to_string(budget.max_poset_vars));
    }
  } else {
    facts.dim_ = krull_dimension(ideal, budget);
    bool homogeneous = std::all_of(facts.presentation_.generators.begin(),
                                   facts.presentation_.generators.end(),
                                   [](const Polynomial& g) { return g.is_homogeneous(); });
    if (!homogeneous) {
      facts.notes_.push_back("dim is that of K[x]/I, an upper bound for dim T");
    }
    if (!facts.presentation_.components.empty()) {
      std::vector<Ideal> comps;
      for (const auto& c : facts.presentation_.components) {
        std::vector<Polynomial> gens;
        for (const auto& g : c) gens.push_back(g.in_ring(ring));
        if (!std::all_of(gens.begin(), gens.end(), vanishes_at_origin)) {
          throw UnsupportedInputError("a component does not vanish at the origin");
        }
        comps.emplace_back(ring, std::move(gens));
      }
      Ideal meet = comps.front();
      for (std::size_t i = 1; i < comps.size(); ++i) meet = ideal_intersection(meet, comps[i], budget);
      if (!ideal_equal(meet, ideal, budget)) {
        throw ParameterError("the supplied components do not intersect to the ideal");
      }
      for (std::size_t i = 0; i < comps.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < comps.size() && !redundant; ++j) {
          if (i == j || !is_subset(comps[j], comps[i], budget)) continue;
          // Equal components: keep the first copy only.
          redundant = !is_subset(comps[i], comps[j], budget) || j < i;
        }
        if (!redundant) facts.profile_.push_back(krull_dimension(comps[i], budget));
      }
      std::sort(facts.profile_.begin(), facts.profile_.end(), std::greater<>());
      facts.notes_.push_back("supplied components taken to be prime for equidimensionality");
    }
  }

  std::function<bool(const Polynomial&)> prefilter;
  if (facts.monomial_) prefilter = ass_prefilter(facts.associated_);
  facts.depth_ = depth_at_least_two(ideal, budget, prefilter);
  if (!facts.characteristic_zero()) {
    facts.notes_.push_back("char_p: regularity remark check unavailable");
  }
  return facts;
}

Verdict check_domain_completion(const RingFacts& facts) {
  if (facts.is_field()) return Verdict::yes;
  return depth_ge1(facts);
}

DomainCheck check_noncat_domain(const RingFacts& facts) {
  DomainCheck out;
  out.verdict = verdict_and(check_domain_completion(facts), exists_min_in_range(facts, 1));
  if (out.verdict != Verdict::yes) return out;
  out.P = first_min_in_range(facts, 1);
  if (!facts.poset()) {
    out.detail = "chain not constructed: prime poset unavailable";
    return out;
  }
  try {
    out.chain = construct_chain(*facts.poset(), *out.P);
  } catch (const InfeasibleError& e) {
    out.detail = std::string("chain not constructed: ") + e.what();
  }
  return out;
}

UfdCompletionCheck check_ufd_completion(const RingFacts& facts) {
  UfdCompletionCheck out;
  out.depth = facts.depth();
  if (facts.is_field()) {
    out.verdict = Verdict::yes;
    out.reason = "field";
  } else if (facts.is_dvr()) {
    out.verdict = Verdict::yes;
    out.reason = "dvr";
  } else {
    out.verdict = depth_ge2(facts);
    out.reason = "depth";
  }
  return out;
}

UfdWitnessSearch ufd_witness_search(const RingFacts& facts, const MonomialPrime& P) {
  UfdWitnessSearch out;
  if (!facts.monomial() || !facts.poset()) {
    out.detail = facts.monomial() ? "prime poset unavailable" : "non-monomial ideal";
    return out;
  }
  const SpecPoset& poset = *facts.poset();
  const MonomialIdeal& ideal = *facts.monomial();
  const std::size_t n = facts.nvars() - P.size();
  if (depth_ge2(facts) != Verdict::yes || !poset.is_minimal(P) || n <= 2 || n >= facts.dim()) {
    out.verdict = Verdict::no;
    out.detail = "precondition fails: needs depth T > 1 and P ∈ Min T with 2 < dim(T/P) < dim T";
    return out;
  }

  PrimeChain chain;
  try {
    chain = construct_chain(poset, P);
  } catch (const InfeasibleError& e) {
    out.verdict = Verdict::inconclusive;
    out.detail = std::string("no monomial chain: ") + e.what();
    return out;
  }
  const MonomialPrime below = chain.primes[n - 2];

  // The chain's own Q' first, then the other admissible covers of Q_{n-2}.
  std::vector<MonomialPrime> targets{chain.primes[n - 1]};
  for (const auto& q : poset.upper_covers(below)) {
    if (q != targets.front() && admissible(poset, P, q)) targets.push_back(q);
  }

  const RingPtr& ring = facts.presentation().ring;
  const std::size_t v = facts.nvars();
  std::vector<Polynomial> xs;
  const auto& ass = facts.associated_primes();
  auto in_some_ass = [&](const MonomialPrime& s) {
    return std::any_of(ass.begin(), ass.end(), [&](const MonomialPrime& p) { return p.contains(s); });
  };
  for (auto i : below.indices()) {
    if (!in_some_ass(MonomialPrime{i})) xs.push_back(Polynomial::variable(ring, i));
  }
  auto idx = below.indices();
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (in_some_ass(MonomialPrime{idx[a], idx[b]})) continue;
      xs.push_back(Polynomial::variable(ring, idx[a]) + Polynomial::variable(ring, idx[b]));
    }
  }

  for (const auto& q : targets) {
    if (v - q.size() != 1 || height(poset, q) + 1 >= facts.dim()) continue;
    DepthCertificate local = local_depth(ring, ideal, q, facts.budget());
    if (local.status != DepthStatus::at_least_two) continue;
    Ideal local_ideal = localized_ideal(ring, localize(ideal, q));
    for (const auto& x : xs) {
      if (!is_regular_element(facts.ideal(), x, facts.budget())) continue;
      if (!avoids_ass_modulo(ideal, q, x)) continue;
      auto y = regular_modulo(local_ideal, x, facts.budget());
      if (!y) continue;
      PrimeChain witness_chain = chain;
      witness_chain.primes[n - 1] = q;
      out.verdict = Verdict::yes;
      out.witness = UfdWitness{q, std::move(witness_chain), x, std::move(*y), std::move(local)};
      return out;
    }
  }
  out.verdict = Verdict::inconclusive;
  out.detail = "no certified Q' above " + below.to_string(poset.variables());
  return out;
}

UfdCheck check_noncat_ufd(const RingFacts& facts) {
  UfdCheck out;
  out.verdict = verdict_and(depth_ge2(facts), exists_min_in_range(facts, 2));
  if (out.verdict != Verdict::yes) return out;
  out.P = first_min_in_range(facts, 2);
  out.search = ufd_witness_search(facts, *out.P);
  return out;
}

ForcedCatenary check_forced_catenary(const RingFacts& facts) {
  ForcedCatenary out;
  const Verdict lech_i = Verdict::yes;
  const Verdict domain_iii = verdict_not(exists_min_in_range(facts, 1));
  const Verdict ufd_iii = verdict_not(exists_min_in_range(facts, 2));
  Verdict some_dim_two = Verdict::unsupported;
  if (facts.dim() < 2) {
    some_dim_two = Verdict::no;
  } else if (facts.monomial()) {
    some_dim_two = verdict_of(std::any_of(
        facts.minimal_primes().begin(), facts.minimal_primes().end(),
        [&](const MonomialPrime& p) { return facts.nvars() - p.size() == 2; }));
  }
  out.domain_forced = all_of({lech_i, depth_ge1(facts), domain_iii});
  out.ufd_forced = all_of({lech_i, depth_ge2(facts), ufd_iii});
  out.mixed = all_of({verdict_of(facts.dim() > 3), lech_i, depth_ge2(facts), ufd_iii, some_dim_two});
  return out;
}

Verdict check_universal_catenarity_obstruction(const RingFacts& facts) {
  return verdict_not(equidimensional(facts));
}

RegularityCheck check_regularity_at_min(const RingFacts& facts) {
  RegularityCheck out;
  if (!facts.monomial()) {
    out.detail = "non-monomial ideal";
    return out;
  }
  if (!facts.characteristic_zero()) {
    out.detail = "char_p: regularity remark check unavailable";
    return out;
  }
  if (facts.minimal_primes() != facts.associated_primes()) {
    out.detail = "Ass T differs from Min T";
    return out;
  }
  const auto& vars = *facts.monomial()->context();
  for (const auto& p : facts.minimal_primes()) {
    Localization loc = localize(*facts.monomial(), p);
    const auto& gens = loc.ideal.generators();
    bool is_prime_ideal = gens.size() == p.size() &&
                          std::all_of(gens.begin(), gens.end(),
                                      [](const Monomial& g) { return g.total_degree() == 1; });
    if (!is_prime_ideal) {
      out.verdict = Verdict::no;
      out.detail = "the " + p.to_string(vars) + "-primary component is not prime";
      return out;
    }
  }
  out.verdict = Verdict::yes;
  return out;
}

AnalysisReport analyze(const RingPresentation& presentation, const Budget& budget) {
  RingFacts facts = RingFacts::compute(presentation, budget);
  AnalysisReport r;
  r.ring = facts.presentation();
  r.dim = facts.dim();
  r.semantics = facts.monomial() ? Semantics::monomial_exact : Semantics::unverified_completion;
  r.notes = facts.notes();
  r.depth = facts.depth();
  r.witnesses.regular_element = facts.depth().regular_element;

  if (facts.monomial()) {
    r.primes_known = true;
    for (const auto& p : facts.minimal_primes()) {
      r.minimal_primes.push_back({p, facts.nvars() - p.size(), p.size()});
    }
    r.associated_primes = facts.associated_primes();
  } else {
    r.unsupported.push_back("minimal and associated primes: no primary decomposition for "
                            "non-monomial ideals");
  }
  r.profile = facts.profile();

  Conditions& c = r.conditions;
  c.lech_i = Verdict::yes;
  c.depth_ge1 = depth_ge1(facts);
  c.lech_ii = facts.is_field() ? Verdict::yes : c.depth_ge1;
  c.depth_ge2 = depth_ge2(facts);
  c.exists_P_domain = exists_min_in_range(facts, 1);
  c.exists_P_ufd = exists_min_in_range(facts, 2);
  c.equidimensional = equidimensional(facts);
  r.notes.push_back("lech_i holds: T contains a field");
  if (c.depth_ge2 == Verdict::inconclusive) {
    r.inconclusive.push_back("depth_ge2: no regular element among " +
                             std::to_string(r.depth.candidates_tried) + " candidates");
  }

  Verdicts& v = r.verdicts;
  v.domain_completion = check_domain_completion(facts);

  DomainCheck domain = check_noncat_domain(facts);
  v.noncat_domain = domain.verdict;
  r.witnesses.P = domain.P;
  r.witnesses.chain = domain.chain;
  if (!domain.detail.empty()) r.inconclusive.push_back("noncat_domain witness: " + domain.detail);

  UfdCompletionCheck ufd_completion = check_ufd_completion(facts);
  v.ufd_completion = ufd_completion.verdict;
  if (ufd_completion.reason != "depth") r.notes.push_back("ufd_completion: T is a " + ufd_completion.reason);

  UfdCheck ufd = check_noncat_ufd(facts);
  v.noncat_ufd = ufd.verdict;
  r.witnesses.ufd_P = ufd.P;
  r.witnesses.ufd = ufd.search.witness;
  if (ufd.verdict == Verdict::yes && !ufd.search.witness) {
    r.inconclusive.push_back("noncat_ufd witness prime: " + ufd.search.detail);
  }

  ForcedCatenary forced = check_forced_catenary(facts);
  v.forced_cat_domain = forced.domain_forced;
  v.forced_cat_ufd = forced.ufd_forced;
  v.mixed_class = forced.mixed;
  v.universally_catenary_obstructed = check_universal_catenarity_obstruction(facts);
  RegularityCheck regularity = check_regularity_at_min(facts);
  v.regularity_at_min = regularity.verdict;
  if (regularity.verdict == Verdict::unsupported) {
    r.unsupported.push_back("regularity_at_min: " + regularity.detail);
  } else if (!regularity.detail.empty()) {
    r.notes.push_back("regularity_at_min: " + regularity.detail);
  }

  const std::pair<const char*, Verdict> named[] = {
      {"exists_P_domain", c.exists_P_domain},
      {"exists_P_ufd", c.exists_P_ufd},
      {"equidimensional", c.equidimensional},
      {"noncat_domain", v.noncat_domain},
      {"noncat_ufd", v.noncat_ufd},
      {"forced_cat_domain", v.forced_cat_domain},
      {"forced_cat_ufd", v.forced_cat_ufd},
      {"mixed_class", v.mixed_class},
      {"universally_catenary_obstructed", v.universally_catenary_obstructed},
  };
  for (const auto& [name, verdict] : named) {
    if (verdict == Verdict::unsupported) r.unsupported.push_back(name);
    if (verdict == Verdict::inconclusive) r.inconclusive.push_back(name);
  }

  auto violations = check_implications(r);
  if (!violations.empty()) {
    std::string msg = "analyzer verdicts are inconsistent:";
    for (const auto& s : violations) msg += " " + s + ";";
    throw InternalError(msg);
  }
  return r;
}

std::vector<std::string> check_implications(const AnalysisReport& r) {
  std::vector<std::string> out;
  const Verdicts& v = r.verdicts;
  auto yes = [](Verdict x) { return x == Verdict::yes; };
  auto no = [](Verdict x) { return x == Verdict::no; };
  auto require = [&](bool ok, const char* what) {
    if (!ok) out.emplace_back(what);
  };

  require(!yes(v.noncat_ufd) || yes(v.noncat_domain), "noncat_ufd => noncat_domain");
  require(!yes(v.noncat_domain) || no(v.forced_cat_domain), "noncat_domain => !forced_cat_domain");
  require(!yes(v.noncat_ufd) || no(v.forced_cat_ufd), "noncat_ufd => !forced_cat_ufd");
  require(!yes(v.noncat_domain) || yes(v.universally_catenary_obstructed),
          "noncat_domain => universally_catenary_obstructed");
  require(!yes(v.noncat_ufd) || r.dim > 3, "noncat_ufd => dim T > 3");
  require(!(yes(v.ufd_completion) && r.dim <= 3) || no(v.noncat_ufd),
          "ufd_completion and dim T <= 3 => !noncat_ufd");
  require(!yes(v.noncat_domain) || yes(v.domain_completion), "noncat_domain => domain_completion");
  require(!yes(v.noncat_ufd) || yes(v.ufd_completion), "noncat_ufd => ufd_completion");
  require(!yes(v.forced_cat_domain) || no(v.noncat_domain), "forced_cat_domain => !noncat_domain");
  require(!yes(v.forced_cat_ufd) || no(v.noncat_ufd), "forced_cat_ufd => !noncat_ufd");
  require(!yes(v.mixed_class) || (yes(v.noncat_domain) && yes(v.forced_cat_ufd)),
          "mixed_class => noncat_domain and forced_cat_ufd");

  require(!yes(v.noncat_domain) || r.witnesses.P.has_value(), "noncat_domain carries P");
  require(!yes(v.noncat_ufd) || r.witnesses.ufd_P.has_value(), "noncat_ufd carries P");
  require(!yes(v.noncat_ufd) || r.witnesses.regular_element.has_value(),
          "noncat_ufd carries a regular element");
  require(!yes(r.conditions.depth_ge2) || r.witnesses.regular_element.has_value(),
          "depth_ge2 carries a regular element");
  return out;
}

std::vector<std::string> verify_report(const AnalysisReport& r, const Budget& budget) {
  std::vector<std::string> out;
  const RingPtr& ring = r.ring.ring;
  const std::size_t v = ring->nvars();
  Ideal ideal = r.ring.ideal();
  const auto& vars = ring->variables();
  const std::size_t dim = krull_dimension(ideal, budget);
  if (dim != r.dim) {
    out.push_back("dim T disagrees with the Groebner computation");
  }

  if (r.verdicts.domain_completion == Verdict::yes && maximal_ideal_associated(ideal, budget) &&
      !ideal_equal(ideal, Ideal::maximal(ring), budget)) {
    out.push_back("domain_completion: M is associated and T is not a field");
  }

  if (r.depth.depth_zero && !maximal_ideal_associated(ideal, budget)) {
    out.push_back("depth certificate: M is not associated");
  }
  if (const auto& f = r.depth.regular_element) {
    if (!is_regular_element(ideal, *f, budget)) {
      out.push_back("depth certificate: " + f->to_string() + " is a zero divisor");
    } else {
      bool drop = maximal_ideal_associated(ideal.plus(*f), budget);
      if (drop != (r.depth.status == DepthStatus::below_two)) {
        out.push_back("depth certificate: M ∈ Ass(T/fT) disagrees with the status");
      }
    }
  }

  if (const auto& f = r.witnesses.regular_element; f && !is_regular_element(ideal, *f, budget)) {
    out.push_back("regular element witness: " + f->to_string() + " is a zero divisor");
  }

  std::optional<MonomialIdeal> monomial = MonomialIdeal::from_ideal(ideal, budget);
  auto check_min = [&](const MonomialPrime& p, std::size_t lower, const char* what) {
    if (!monomial || !monomial->contained_in(p)) {
      out.push_back(std::string(what) + ": P does not contain I");
      return;
    }
    for (auto i : p.indices()) {
      if (monomial->contained_in(p.without(i))) {
        out.push_back(std::string(what) + ": P is not minimal");
        return;
      }
    }
    const std::size_t d = v - p.size();
    if (!(lower < d && d < dim)) out.push_back(std::string(what) + ": dim(T/P) out of range");
  };

  if (r.verdicts.noncat_domain == Verdict::yes && r.witnesses.P) {
    check_min(*r.witnesses.P, 1, "noncat_domain");
    if (r.witnesses.chain && monomial) {
      for (const auto& s : verify_chain(*monomial, *r.witnesses.chain, *r.witnesses.P)) {
        out.push_back("noncat_domain chain: " + s);
      }
    }
  }

  if (r.verdicts.noncat_ufd == Verdict::yes && r.witnesses.ufd_P) {
    check_min(*r.witnesses.ufd_P, 2, "noncat_ufd");
    if (dim <= 3) out.push_back("noncat_ufd: dim T <= 3");
    if (r.depth.status != DepthStatus::at_least_two) out.push_back("noncat_ufd: depth not certified");
  }

  if (const auto& w = r.witnesses.ufd; w && monomial) {
    const MonomialPrime& q = w->prime;
    if (!monomial->contained_in(q)) out.push_back("ufd witness: Q' does not contain I");
    if (v - q.size() != 1) out.push_back("ufd witness: dim(T/Q') != 1");
    Localization loc = localize(*monomial, q);
    Ideal local = localized_ideal(ring, loc);
    const std::size_t ht = krull_dimension(local, budget);
    if (ht + 1 >= dim) out.push_back("ufd witness: ht Q' + 1 >= dim T");
    if (!is_regular_element(ideal, w->x, budget)) out.push_back("ufd witness: x is a zero divisor");
    if (!avoids_ass_modulo(*monomial, q, w->x)) out.push_back("ufd witness: Q' ∈ Ass(T/xT)");
    try {
      Ideal modulo_x = local.plus(transfer(w->x, local.ring()));
      Polynomial y = transfer(w->y, local.ring());
      if (contains(modulo_x, y, budget) || !is_regular_element(modulo_x, y, budget)) {
        out.push_back("ufd witness: y is not regular on T_Q'/x");
      }
    } catch (const ContextError&) {
      out.push_back("ufd witness: x or y uses a variable inverted at Q'");
    }
    const auto& f = w->local_depth.regular_element;
    if (w->local_depth.status != DepthStatus::at_least_two || !f) {
      out.push_back("ufd witness: local depth not certified");
    } else {
      try {
        Polynomial yl = transfer(*f, local.ring());
        if (!is_regular_element(local, yl, budget) ||
            maximal_ideal_associated(local.plus(yl), budget)) {
          out.push_back("ufd witness: local depth certificate fails");
        }
      } catch (const ContextError&) {
        out.push_back("ufd witness: local depth element uses a variable inverted at Q'");
      }
    }
    if (r.witnesses.ufd_P) {
      for (const auto& s : verify_chain(*monomial, w->chain, *r.witnesses.ufd_P)) {
        out.push_back("ufd witness chain: " + s);
      }
    }
  }

  if (r.verdicts.regularity_at_min == Verdict::yes && monomial) {
    for (const auto& m : r.minimal_primes) {
      Localization loc = localize(*monomial, m.prime);
      if (!(loc.ideal == MonomialIdeal::from_prime(loc.ideal.context(),
                                                   MonomialPrime::all(loc.variables.size())))) {
        out.push_back("regularity_at_min: I is not prime at " + m.prime.to_string(vars));
      }
    }
  }
  return out;
}

}  // namespace catenary
