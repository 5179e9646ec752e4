#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catenary/analyzer.hpp"

namespace catenary {

/// Named example rings K[[x, y1.., z1..]]/((x) ∩ (y1..ya)) over the
/// rationals, plus the ring K[[x,y,z,v]]/((x) ∩ (y,z)).
enum class FamilyKind {
  /// K[[x,y,z,v]]/((x) ∩ (y,z)).
  example_domain,
  /// K[[x,y1..yn]]/((x) ∩ (y1..yn)), n > 1.
  example_catenary,
  /// K[[x,y1..ya,z1..zb]]/((x) ∩ (y1..ya)), a, b > 1.
  example_ufd,
  /// The example_ufd shape with a = n-m+1, b = m-1 for 1 < m < n: saturated
  /// chains of lengths n and m from the two minimal primes.
  chain_pair,
  /// As chain_pair with 2 < m < n.
  ufd_chain_pair,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::example_domain;
  std::vector<std::int64_t> params;

  static FamilySpec domain() { return {FamilyKind::example_domain, {}}; }
  static FamilySpec catenary(std::int64_t n) { return {FamilyKind::example_catenary, {n}}; }
  static FamilySpec ufd(std::int64_t a, std::int64_t b) { return {FamilyKind::example_ufd, {a, b}}; }
  static FamilySpec chains(std::int64_t m, std::int64_t n) { return {FamilyKind::chain_pair, {m, n}}; }
  static FamilySpec ufd_chains(std::int64_t m, std::int64_t n) {
    return {FamilyKind::ufd_chain_pair, {m, n}};
  }

  /// "example_ufd(2,3)".
  std::string to_string() const;
};

const char* family_name(FamilyKind kind);
std::optional<FamilyKind> family_kind(std::string_view name);
/// Names of all kinds, for diagnostics.
std::vector<std::string> family_names();

/// Verdicts and invariants predicted for a family instance.
/// Unset fields are not predicted.
struct ExpectedReport {
  std::optional<std::size_t> dim;
  std::vector<std::size_t> profile;
  std::optional<Verdict> noncat_domain;
  std::optional<Verdict> noncat_ufd;
  std::optional<Verdict> forced_cat_domain;
  std::optional<Verdict> universally_catenary_obstructed;
  std::optional<Verdict> regularity_at_min;
  /// Minimal primes from which saturated chains of the given length start.
  std::vector<std::pair<MonomialPrime, std::size_t>> chains;
  std::optional<MonomialPrime> ufd_witness_prime;
};

struct FamilyInstance {
  FamilySpec spec;
  RingPresentation presentation;
  ExpectedReport expected;
};

/// Throws ParameterError naming the violated inequality (e.g. "a > 1") or
/// the wrong parameter count.
FamilyInstance instantiate(const FamilySpec& spec);

/// Field-by-field differences between an analysis and the prediction.
std::vector<std::string> compare(const ExpectedReport& expected, const AnalysisReport& report);

}  // namespace catenary
