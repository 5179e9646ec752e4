#include "catenary/families.hpp"

#include <array>

#include "catenary/error.hpp"

namespace catenary {

namespace {

struct KindInfo {
  FamilyKind kind;
  const char* name;
  std::size_t arity;
};

constexpr std::array<KindInfo, 5> kinds{{
    {FamilyKind::example_domain, "example_domain", 0},
    {FamilyKind::example_catenary, "example_catenary", 1},
    {FamilyKind::example_ufd, "example_ufd", 2},
    {FamilyKind::chain_pair, "chain_pair", 2},
    {FamilyKind::ufd_chain_pair, "ufd_chain_pair", 2},
}};

const KindInfo& info(FamilyKind kind) {
  for (const auto& k : kinds) {
    if (k.kind == kind) return k;
  }
  throw InternalError("unknown family kind");
}

void require(bool ok, const std::string& spec, const char* inequality) {
  if (!ok) throw ParameterError(spec + ": requires " + inequality);
}

/// Variables x, y1..ya, z1..zb and I = (x y1, .., x ya).
RingPresentation glued(std::size_t a, std::size_t b) {
  std::vector<std::string> names{"x"};
  for (std::size_t i = 1; i <= a; ++i) names.push_back("y" + std::to_string(i));
  for (std::size_t i = 1; i <= b; ++i) names.push_back("z" + std::to_string(i));
  RingPtr ring = PolyRing::make(Field::rationals(), std::move(names));
  Polynomial x = Polynomial::variable(ring, 0);
  std::vector<Polynomial> gens;
  for (std::size_t i = 1; i <= a; ++i) gens.push_back(x * Polynomial::variable(ring, i));
  return RingPresentation{ring, std::move(gens), {}, "I"};
}

MonomialPrime range(std::size_t from, std::size_t to) {
  std::uint64_t bits = 0;
  for (std::size_t i = from; i < to; ++i) bits |= std::uint64_t{1} << i;
  return MonomialPrime(bits);
}

}  // namespace

const char* family_name(FamilyKind kind) { return info(kind).name; }

std::optional<FamilyKind> family_kind(std::string_view name) {
  for (const auto& k : kinds) {
    if (name == k.name) return k.kind;
  }
  return std::nullopt;
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& k : kinds) out.emplace_back(k.name);
  return out;
}

std::string FamilySpec::to_string() const {
  std::string s = family_name(kind);
  if (params.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(params[i]);
  }
  return s + ")";
}

FamilyInstance instantiate(const FamilySpec& spec) {
  const KindInfo& k = info(spec.kind);
  const std::string label = spec.to_string();
  if (spec.params.size() != k.arity) {
    throw ParameterError(label + ": expected " + std::to_string(k.arity) + " parameter(s)");
  }
  FamilyInstance out{spec, {}, {}};
  ExpectedReport& e = out.expected;
  switch (spec.kind) {
    case FamilyKind::example_domain: {
      RingPtr ring = PolyRing::make(Field::rationals(), {"x", "y", "z", "v"});
      Polynomial x = Polynomial::variable(ring, 0);
      out.presentation = RingPresentation{
          ring, {x * Polynomial::variable(ring, 1), x * Polynomial::variable(ring, 2)}, {}, "I"};
      e.dim = 3;
      e.profile = {3, 2};
      e.noncat_domain = Verdict::yes;
      e.noncat_ufd = Verdict::no;
      e.regularity_at_min = Verdict::yes;
      e.universally_catenary_obstructed = Verdict::yes;
      e.chains = {{MonomialPrime{1, 2}, 2}};
      break;
    }
    case FamilyKind::example_catenary: {
      const auto n = spec.params[0];
      require(n > 1, label, "n > 1");
      require(n < 64, label, "n < 64 (at most 64 variables)");
      out.presentation = glued(static_cast<std::size_t>(n), 0);
      const auto un = static_cast<std::size_t>(n);
      e.dim = un;
      e.profile = {un, 1};
      e.noncat_domain = Verdict::no;
      e.forced_cat_domain = Verdict::yes;
      e.universally_catenary_obstructed = Verdict::yes;
      break;
    }
    case FamilyKind::example_ufd:
    case FamilyKind::chain_pair:
    case FamilyKind::ufd_chain_pair: {
      std::int64_t a = 0;
      std::int64_t b = 0;
      if (spec.kind == FamilyKind::example_ufd) {
        a = spec.params[0];
        b = spec.params[1];
        require(a > 1, label, "a > 1");
        require(b > 1, label, "b > 1");
      } else {
        const auto m = spec.params[0];
        const auto n = spec.params[1];
        if (spec.kind == FamilyKind::chain_pair) {
          require(1 < m, label, "1 < m");
        } else {
          require(2 < m, label, "2 < m");
        }
        require(m < n, label, "m < n");
        a = n - m + 1;
        b = m - 1;
      }
      require(a < 64 && b < 64 && 1 + a + b <= 64, label, "at most 64 variables");
      const auto ua = static_cast<std::size_t>(a);
      const auto ub = static_cast<std::size_t>(b);
      out.presentation = glued(ua, ub);
      e.dim = ua + ub;
      e.profile = {ua + ub, ub + 1};
      e.noncat_domain = Verdict::yes;
      e.noncat_ufd = verdict_of(ub + 1 > 2);
      e.universally_catenary_obstructed = Verdict::yes;
      e.regularity_at_min = Verdict::yes;
      e.chains = {{MonomialPrime{0}, ua + ub}, {range(1, 1 + ua), ub + 1}};
      if (ub + 1 > 2) e.ufd_witness_prime = range(1, 1 + ua + ub);
      break;
    }
  }
  out.presentation.name = "I";
  return out;
}

std::vector<std::string> compare(const ExpectedReport& e, const AnalysisReport& r) {
  std::vector<std::string> out;
  auto check = [&](const char* field, const std::optional<Verdict>& want, Verdict got) {
    if (want && *want != got) {
      out.push_back(std::string(field) + ": expected " + to_string(*want) + ", got " +
                    to_string(got));
    }
  };
  if (e.dim && *e.dim != r.dim) {
    out.push_back("dim: expected " + std::to_string(*e.dim) + ", got " + std::to_string(r.dim));
  }
  if (!e.profile.empty() && e.profile != r.profile) out.push_back("profile differs");
  check("noncat_domain", e.noncat_domain, r.verdicts.noncat_domain);
  check("noncat_ufd", e.noncat_ufd, r.verdicts.noncat_ufd);
  check("forced_cat_domain", e.forced_cat_domain, r.verdicts.forced_cat_domain);
  check("universally_catenary_obstructed", e.universally_catenary_obstructed,
        r.verdicts.universally_catenary_obstructed);
  check("regularity_at_min", e.regularity_at_min, r.verdicts.regularity_at_min);
  if (e.ufd_witness_prime) {
    if (!r.witnesses.ufd || r.witnesses.ufd->prime != *e.ufd_witness_prime) {
      out.push_back("ufd witness prime differs");
    }
  }
  return out;
}

}  // namespace catenary
