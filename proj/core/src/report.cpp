#include "catenary/report.hpp"

#include "json.hpp"

#include <sstream>

#include "catenary/error.hpp"

namespace catenary {

using nlohmann::json;

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "dot") return Format::dot;
  return std::nullopt;
}

namespace {

MonomialPrime prime_from_names(const VariableContext& vars, const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  for (const auto& n : names) {
    auto i = vars.index_of(n);
    if (!i) throw ParameterError("unknown variable '" + n + "'");
    idx.push_back(*i);
  }
  return MonomialPrime::from_indices(idx);
}

MonomialIdeal require_monomial(const RingPresentation& p, const Budget& budget, const char* what) {
  auto m = MonomialIdeal::from_ideal(p.ideal(), budget);
  if (!m) {
    throw UnsupportedInputError(std::string(what) + " needs a monomial ideal; " + p.name +
                                " is not monomial");
  }
  if (m->is_unit()) throw DegenerateInputError("the unit ideal defines the zero ring");
  return *m;
}

json verdict_json(Verdict v) {
  switch (v) {
    case Verdict::yes: return true;
    case Verdict::no: return false;
    default: return to_string(v);
  }
}

json prime_json(const MonomialPrime& p, const VariableContext& vars) { return p.names(vars); }

json chain_json(const PrimeChain& c, const VariableContext& vars) {
  json out = json::array();
  for (const auto& p : c.primes) out.push_back(prime_json(p, vars));
  return out;
}

const char* depth_status(DepthStatus s) {
  switch (s) {
    case DepthStatus::at_least_two: return "at_least_two";
    case DepthStatus::below_two: return "below_two";
    case DepthStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

json depth_json(const DepthCertificate& d) {
  json out;
  out["status"] = depth_status(d.status);
  out["depth_zero"] = d.depth_zero;
  out["regular_element"] = d.regular_element ? json(d.regular_element->to_string()) : json(nullptr);
  out["candidates_tried"] = d.candidates_tried;
  return out;
}

json ring_json(const RingPresentation& p) {
  if (!p.ring) return nullptr;
  json out;
  out["name"] = p.name;
  out["field"] = p.ring->field().name();
  out["variables"] = p.ring->variables().names();
  out["order"] = p.ring->order().name();
  json gens = json::array();
  for (const auto& g : p.generators) gens.push_back(g.to_string());
  out["ideal"] = gens;
  if (!p.components.empty()) {
    json comps = json::array();
    for (const auto& c : p.components) {
      json cj = json::array();
      for (const auto& g : c) cj.push_back(g.to_string());
      comps.push_back(cj);
    }
    out["components"] = comps;
  }
  return out;
}

json report_object(const AnalysisReport& r) {
  static const VariableContext no_vars{std::vector<std::string>{}};
  const VariableContext& vars = r.ring.ring ? r.ring.ring->variables() : no_vars;
  json out;
  out["ring"] = ring_json(r.ring);
  out["dim"] = r.dim;
  out["semantics"] = to_string(r.semantics);

  json mins = json::array();
  for (const auto& m : r.minimal_primes) {
    mins.push_back({{"gens", prime_json(m.prime, vars)}, {"dim", m.dim}, {"height", m.height}});
  }
  out["minimal_primes"] = r.primes_known ? mins : json(nullptr);
  json ass = json::array();
  for (const auto& p : r.associated_primes) ass.push_back(prime_json(p, vars));
  out["associated_primes"] = r.primes_known ? ass : json(nullptr);
  out["profile"] = r.profile.empty() ? json(nullptr) : json(r.profile);

  const Conditions& c = r.conditions;
  out["conditions"] = {
      {"lech_i", verdict_json(c.lech_i)},
      {"lech_ii", verdict_json(c.lech_ii)},
      {"depth_ge1", verdict_json(c.depth_ge1)},
      {"depth_ge2", verdict_json(c.depth_ge2)},
      {"exists_P_domain", verdict_json(c.exists_P_domain)},
      {"exists_P_ufd", verdict_json(c.exists_P_ufd)},
      {"equidimensional", verdict_json(c.equidimensional)},
  };
  const Verdicts& v = r.verdicts;
  out["verdicts"] = {
      {"domain_completion", verdict_json(v.domain_completion)},
      {"noncat_domain", verdict_json(v.noncat_domain)},
      {"ufd_completion", verdict_json(v.ufd_completion)},
      {"noncat_ufd", verdict_json(v.noncat_ufd)},
      {"forced_cat_domain", verdict_json(v.forced_cat_domain)},
      {"forced_cat_ufd", verdict_json(v.forced_cat_ufd)},
      {"mixed_class", verdict_json(v.mixed_class)},
      {"universally_catenary_obstructed", verdict_json(v.universally_catenary_obstructed)},
      {"regularity_at_min", verdict_json(v.regularity_at_min)},
  };

  const Witnesses& w = r.witnesses;
  json wj;
  wj["P"] = w.P ? prime_json(*w.P, vars) : json(nullptr);
  wj["chain"] = w.chain ? chain_json(*w.chain, vars) : json(nullptr);
  wj["regular_element"] = w.regular_element ? json(w.regular_element->to_string()) : json(nullptr);
  wj["ufd_P"] = w.ufd_P ? prime_json(*w.ufd_P, vars) : json(nullptr);
  wj["ufd_witness_prime"] = w.ufd ? prime_json(w.ufd->prime, vars) : json(nullptr);
  if (w.ufd) {
    wj["ufd_witness"] = {{"chain", chain_json(w.ufd->chain, vars)},
                         {"x", w.ufd->x.to_string()},
                         {"y", w.ufd->y.to_string()},
                         {"local_depth", depth_json(w.ufd->local_depth)}};
  } else {
    wj["ufd_witness"] = nullptr;
  }
  out["witnesses"] = wj;
  out["depth"] = depth_json(r.depth);
  out["inconclusive"] = r.inconclusive;
  out["unsupported"] = r.unsupported;
  out["notes"] = r.notes;
  return out;
}

json result_object(const CommandResult& r) {
  json out;
  switch (r.kind) {
    case CommandKind::analyze:
    case CommandKind::family:
      out = report_object(*r.report);
      if (r.family) {
        out["family"] = r.family->to_string();
        out["expected_mismatches"] = r.expected_mismatches;
      }
      break;
    case CommandKind::profile:
      out["profile"] = r.profile;
      break;
    case CommandKind::poset: {
      const auto& vars = r.poset->variables();
      json nodes = json::array();
      for (const auto& q : r.poset->nodes()) {
        nodes.push_back({{"prime", prime_json(q, vars)},
                         {"rank", q.size()},
                         {"minimal", r.poset->is_minimal(q)},
                         {"associated", r.poset->is_associated(q)}});
      }
      out["nodes"] = nodes;
      json edges = json::array();
      for (const auto& q : r.poset->nodes()) {
        for (const auto& u : r.poset->upper_covers(q)) {
          edges.push_back({prime_json(q, vars), prime_json(u, vars)});
        }
      }
      out["edges"] = edges;
      break;
    }
    case CommandKind::chain: {
      const auto& vars = r.presentation->ring->variables();
      out["chain"] = chain_json(*r.chain, vars);
      out["length"] = r.chain->length();
      break;
    }
  }
  out["command"] = to_string(r.kind);
  out["target"] = r.target;
  return out;
}

std::string verdict_text(Verdict v) { return to_string(v); }

std::string primes_text(const std::vector<MonomialPrime>& ps, const VariableContext& vars) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += ps[i].to_string(vars);
  }
  return s.empty() ? "-" : s;
}

std::string profile_text(const std::vector<std::size_t>& profile) {
  if (profile.empty()) return "unknown";
  std::string s = "{";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(profile[i]);
  }
  return s + "}";
}

void row(std::ostringstream& os, const std::string& key, const std::string& value, int width = 34) {
  os << "  " << key;
  for (int i = static_cast<int>(key.size()); i < width; ++i) os << ' ';
  os << value << "\n";
}

std::string report_text(const AnalysisReport& r) {
  std::ostringstream os;
  const auto& vars = r.ring.ring->variables();
  std::string gens;
  for (std::size_t i = 0; i < r.ring.generators.size(); ++i) {
    if (i) gens += ", ";
    gens += r.ring.generators[i].to_string();
  }
  os << "ring " << r.ring.ring->describe() << ", " << r.ring.name << " = (" << gens << ")\n";
  row(os, "dim T", std::to_string(r.dim));
  row(os, "semantics", to_string(r.semantics));
  if (r.primes_known) {
    os << "minimal primes\n";
    for (const auto& m : r.minimal_primes) {
      row(os, m.prime.to_string(vars),
          "dim " + std::to_string(m.dim) + ", height " + std::to_string(m.height));
    }
    row(os, "associated primes", primes_text(r.associated_primes, vars));
  }
  row(os, "profile", profile_text(r.profile));

  const Conditions& c = r.conditions;
  os << "conditions\n";
  row(os, "lech_i", verdict_text(c.lech_i));
  row(os, "lech_ii", verdict_text(c.lech_ii));
  row(os, "depth_ge1", verdict_text(c.depth_ge1));
  row(os, "depth_ge2", verdict_text(c.depth_ge2));
  row(os, "exists_P_domain", verdict_text(c.exists_P_domain));
  row(os, "exists_P_ufd", verdict_text(c.exists_P_ufd));
  row(os, "equidimensional", verdict_text(c.equidimensional));

  const Verdicts& v = r.verdicts;
  os << "verdicts\n";
  row(os, "domain_completion", verdict_text(v.domain_completion));
  row(os, "noncat_domain", verdict_text(v.noncat_domain));
  row(os, "ufd_completion", verdict_text(v.ufd_completion));
  row(os, "noncat_ufd", verdict_text(v.noncat_ufd));
  row(os, "forced_cat_domain", verdict_text(v.forced_cat_domain));
  row(os, "forced_cat_ufd", verdict_text(v.forced_cat_ufd));
  row(os, "mixed_class", verdict_text(v.mixed_class));
  row(os, "universally_catenary_obstructed", verdict_text(v.universally_catenary_obstructed));
  row(os, "regularity_at_min", verdict_text(v.regularity_at_min));

  const Witnesses& w = r.witnesses;
  os << "witnesses\n";
  row(os, "P", w.P ? w.P->to_string(vars) : "-");
  row(os, "chain", w.chain ? w.chain->to_string(vars) : "-");
  row(os, "regular element", w.regular_element ? w.regular_element->to_string() : "-");
  row(os, "depth", depth_status(r.depth.status));
  row(os, "ufd P", w.ufd_P ? w.ufd_P->to_string(vars) : "-");
  if (w.ufd) {
    row(os, "ufd witness prime Q'", w.ufd->prime.to_string(vars));
    row(os, "ufd chain", w.ufd->chain.to_string(vars));
    row(os, "regular sequence x, y in T_Q'", w.ufd->x.to_string() + ", " + w.ufd->y.to_string());
  } else {
    row(os, "ufd witness prime Q'", "-");
  }
  for (const auto& s : r.inconclusive) os << "inconclusive: " << s << "\n";
  for (const auto& s : r.unsupported) os << "unsupported: " << s << "\n";
  for (const auto& s : r.notes) os << "note: " << s << "\n";
  return os.str();
}

std::string result_text(const CommandResult& r) {
  std::ostringstream os;
  switch (r.kind) {
    case CommandKind::analyze:
      os << report_text(*r.report);
      break;
    case CommandKind::family:
      os << "family " << r.family->to_string() << "\n" << report_text(*r.report);
      if (r.expected_mismatches.empty()) {
        os << "matches the predicted report\n";
      } else {
        for (const auto& m : r.expected_mismatches) os << "mismatch: " << m << "\n";
      }
      break;
    case CommandKind::profile:
      os << "profile " << r.target << " " << profile_text(r.profile) << "\n";
      break;
    case CommandKind::poset: {
      const auto& vars = r.poset->variables();
      os << "poset " << r.target << ": " << r.poset->nodes().size() << " primes\n";
      for (const auto& q : r.poset->nodes()) {
        std::string marks;
        if (r.poset->is_minimal(q)) marks += " minimal";
        if (r.poset->is_associated(q)) marks += " associated";
        row(os, q.to_string(vars), "rank " + std::to_string(q.size()) + marks);
      }
      break;
    }
    case CommandKind::chain:
      os << "chain " << r.target << " (length " << r.chain->length()
         << "): " << r.chain->to_string(r.presentation->ring->variables()) << "\n";
      break;
  }
  return os.str();
}

std::string result_dot(const CommandResult& r) {
  if (r.kind == CommandKind::chain) {
    std::vector<PrimeChain> chains{*r.chain};
    return emit_dot(chains, r.presentation->ring->variables(), r.poset ? &*r.poset : nullptr);
  }
  if (!r.poset) {
    throw UnsupportedInputError("dot output needs the prime poset of a monomial ideal");
  }
  std::vector<PrimeChain> highlight;
  if (r.report) {
    if (r.report->witnesses.chain) highlight.push_back(*r.report->witnesses.chain);
    if (r.report->witnesses.ufd) highlight.push_back(r.report->witnesses.ufd->chain);
  }
  return emit_dot(*r.poset, highlight);
}

}  // namespace

CommandResult execute(const Command& command, const Budget& budget) {
  CommandResult out;
  out.kind = command.kind;
  out.target = command.target;
  out.presentation = command.presentation;
  const RingPresentation& p = *command.presentation;
  auto attach_poset = [&] {
    if (auto m = MonomialIdeal::from_ideal(p.ideal(), budget);
        m && p.ring->nvars() <= budget.max_poset_vars) {
      out.poset = build_poset(*m, budget);
    }
  };
  switch (command.kind) {
    case CommandKind::analyze:
      out.report = analyze(p, budget);
      attach_poset();
      break;
    case CommandKind::family:
      out.report = analyze(p, budget);
      out.family = command.family;
      if (command.instance) out.expected_mismatches = compare(command.instance->expected, *out.report);
      attach_poset();
      break;
    case CommandKind::profile: {
      RingFacts facts = RingFacts::compute(p, budget);
      if (facts.profile().empty()) {
        throw UnsupportedInputError("profile needs a monomial ideal or a decomposition into components");
      }
      out.profile = facts.profile();
      attach_poset();
      break;
    }
    case CommandKind::poset:
      out.poset = build_poset(require_monomial(p, budget, "poset"), budget);
      break;
    case CommandKind::chain: {
      out.poset = build_poset(require_monomial(p, budget, "chain"), budget);
      out.chain = construct_chain(*out.poset, prime_from_names(p.ring->variables(), command.from));
      break;
    }
  }
  return out;
}

std::string report_json(const AnalysisReport& report, int indent) {
  return report_object(report).dump(indent);
}

std::string emit(const CommandResult& result, Format format) {
  switch (format) {
    case Format::text: return result_text(result);
    case Format::json: return result_object(result).dump(2) + "\n";
    case Format::dot: return result_dot(result);
  }
  return "";
}

std::string emit(std::span<const CommandResult> results, Format format) {
  if (format == Format::json && results.size() != 1) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(result_object(r));
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (i && format == Format::text) out += "\n";
    out += emit(results[i], format);
  }
  return out;
}

}  // namespace catenary
