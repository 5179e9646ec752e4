#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catenary/groebner.hpp"
#include "catenary/monomial_ideal.hpp"
#include "catenary/spectra.hpp"

namespace catenary {

/// Four-valued verdict. `inconclusive` means a bounded search ran out;
/// `unsupported` means the input class has no decision procedure here.
enum class Verdict { no, yes, inconclusive, unsupported };

const char* to_string(Verdict v);
inline Verdict verdict_of(bool b) { return b ? Verdict::yes : Verdict::no; }

/// Kleene connectives. A certain `no` (for and) or `yes` (for or) wins;
/// otherwise `unsupported` dominates `inconclusive`.
Verdict verdict_and(Verdict a, Verdict b);
Verdict verdict_or(Verdict a, Verdict b);
Verdict verdict_not(Verdict a);

/// T = K[[x_1..x_v]] / I, with I given by polynomial generators that vanish
/// at the origin.
struct RingPresentation {
  RingPtr ring;
  std::vector<Polynomial> generators;
  /// Optional decomposition I = C_1 ∩ ... ∩ C_k supplied by the user. For
  /// non-monomial ideals the components are taken to be prime and used only
  /// for equidimensionality.
  std::vector<std::vector<Polynomial>> components;
  std::string name = "I";

  Ideal ideal() const { return Ideal(ring, generators); }
};

enum class Semantics { monomial_exact, unverified_completion };
const char* to_string(Semantics s);

struct MinimalPrimeInfo {
  MonomialPrime prime;
  /// dim(T/P).
  std::size_t dim = 0;
  /// Height of P in the ambient power series ring (its number of variables).
  std::size_t height = 0;
};

struct Conditions {
  Verdict lech_i = Verdict::yes;
  Verdict lech_ii = Verdict::unsupported;
  Verdict depth_ge1 = Verdict::unsupported;
  Verdict depth_ge2 = Verdict::unsupported;
  /// Some P ∈ Min T with 1 < dim(T/P) < dim T.
  Verdict exists_P_domain = Verdict::unsupported;
  /// Some P ∈ Min T with 2 < dim(T/P) < dim T.
  Verdict exists_P_ufd = Verdict::unsupported;
  Verdict equidimensional = Verdict::unsupported;
};

struct Verdicts {
  Verdict domain_completion = Verdict::unsupported;
  Verdict noncat_domain = Verdict::unsupported;
  Verdict ufd_completion = Verdict::unsupported;
  Verdict noncat_ufd = Verdict::unsupported;
  Verdict forced_cat_domain = Verdict::unsupported;
  Verdict forced_cat_ufd = Verdict::unsupported;
  Verdict mixed_class = Verdict::unsupported;
  Verdict universally_catenary_obstructed = Verdict::unsupported;
  Verdict regularity_at_min = Verdict::unsupported;
};

/// Certificate that T_{Q'} has depth at least two, where dim(T/Q') = 1 and
/// ht Q' + 1 < dim T.
struct UfdWitness {
  MonomialPrime prime;
  /// The chain P ⊊ ... ⊊ Q' ⊊ M it was taken from.
  PrimeChain chain;
  /// T-regular element of Q_{n-2} with Q' ∉ Ass(T/xT).
  Polynomial x;
  /// Element of Q' regular on T_{Q'}/x T_{Q'}, written over the variables
  /// of Q', so x, y is a T_{Q'}-regular sequence.
  Polynomial y;
  /// Depth certificate of the localization of T at Q' (over the variables
  /// of Q').
  DepthCertificate local_depth;
};

struct Witnesses {
  /// Minimal prime with 1 < dim(T/P) < dim T and a chain from it.
  std::optional<MonomialPrime> P;
  std::optional<PrimeChain> chain;
  /// Regular element of the depth certificate.
  std::optional<Polynomial> regular_element;
  /// Minimal prime with 2 < dim(T/P) < dim T.
  std::optional<MonomialPrime> ufd_P;
  std::optional<UfdWitness> ufd;
};

struct AnalysisReport {
  RingPresentation ring;
  std::size_t dim = 0;
  Semantics semantics = Semantics::unverified_completion;
  /// Minimal and associated primes; empty unless the ideal is monomial.
  bool primes_known = false;
  std::vector<MinimalPrimeInfo> minimal_primes;
  std::vector<MonomialPrime> associated_primes;
  /// {dim(T/P) : P ∈ Min T} sorted descending; empty when unknown.
  std::vector<std::size_t> profile;
  Conditions conditions;
  Verdicts verdicts;
  Witnesses witnesses;
  DepthCertificate depth;
  std::vector<std::string> inconclusive;
  std::vector<std::string> unsupported;
  std::vector<std::string> notes;
};

/// Facts about T shared by every check, computed once.
class RingFacts {
 public:
  /// Throws DegenerateInputError for the unit ideal and UnsupportedInputError
  /// when a generator does not vanish at the origin.
  static RingFacts compute(const RingPresentation& presentation, const Budget& budget = {});

  const RingPresentation& presentation() const noexcept { return presentation_; }
  const Ideal& ideal() const noexcept { return ideal_; }
  const Budget& budget() const noexcept { return budget_; }
  std::size_t nvars() const noexcept { return presentation_.ring->nvars(); }
  bool characteristic_zero() const noexcept;

  /// dim T (for non-monomial, non-homogeneous input: dim K[x]/I, an upper bound).
  std::size_t dim() const noexcept { return dim_; }
  bool is_field() const noexcept { return field_; }
  /// T ≅ K[[y]]: I is generated by all variables but one.
  bool is_dvr() const noexcept { return dvr_; }
  /// M ∈ Ass T.
  bool maximal_associated() const noexcept { return maximal_associated_; }

  const std::optional<MonomialIdeal>& monomial() const noexcept { return monomial_; }
  /// Present for monomial ideals within the poset budget.
  const std::optional<SpecPoset>& poset() const noexcept { return poset_; }
  const std::vector<MonomialPrime>& minimal_primes() const noexcept { return minimal_; }
  const std::vector<MonomialPrime>& associated_primes() const noexcept { return associated_; }
  /// Profile from Min (monomial) or from user components (non-monomial);
  /// empty if neither is available.
  const std::vector<std::size_t>& profile() const noexcept { return profile_; }

  /// The depth(T) ≥ 2 search (regular-element candidates that lie in an
  /// associated prime are skipped when the primes are known).
  const DepthCertificate& depth() const noexcept { return depth_; }

  const std::vector<std::string>& notes() const noexcept { return notes_; }

 private:
  RingFacts(RingPresentation presentation, Ideal ideal, Budget budget)
      : presentation_(std::move(presentation)), ideal_(std::move(ideal)), budget_(budget) {}

  RingPresentation presentation_;
  Ideal ideal_;
  Budget budget_;
  std::size_t dim_ = 0;
  bool field_ = false;
  bool dvr_ = false;
  bool maximal_associated_ = false;
  std::optional<MonomialIdeal> monomial_;
  std::optional<SpecPoset> poset_;
  std::vector<MonomialPrime> minimal_;
  std::vector<MonomialPrime> associated_;
  std::vector<std::size_t> profile_;
  DepthCertificate depth_;
  std::vector<std::string> notes_;
};

struct DomainCheck {
  Verdict verdict = Verdict::unsupported;
  std::optional<MonomialPrime> P;
  std::optional<PrimeChain> chain;
  std::string detail;
};

struct UfdCompletionCheck {
  Verdict verdict = Verdict::unsupported;
  /// "field", "dvr", or "depth".
  std::string reason;
  DepthCertificate depth;
};

struct UfdWitnessSearch {
  Verdict verdict = Verdict::unsupported;
  std::optional<UfdWitness> witness;
  std::string detail;
};

struct UfdCheck {
  Verdict verdict = Verdict::unsupported;
  std::optional<MonomialPrime> P;
  UfdWitnessSearch search;
};

struct ForcedCatenary {
  Verdict domain_forced = Verdict::unsupported;
  Verdict ufd_forced = Verdict::unsupported;
  Verdict mixed = Verdict::unsupported;
};

struct RegularityCheck {
  Verdict verdict = Verdict::unsupported;
  std::string detail;
};

/// Lech: yes iff M ∉ Ass T, or T is a field.
Verdict check_domain_completion(const RingFacts& facts);
/// Lech plus some P ∈ Min with 1 < dim(T/P) < dim T; witness P and a chain.
DomainCheck check_noncat_domain(const RingFacts& facts);
/// Field, DVR, or a certified depth(T) ≥ 2.
UfdCompletionCheck check_ufd_completion(const RingFacts& facts);
/// Searches Q' with dim(T/Q') = 1, ht Q' + 1 < dim T and a depth-two
/// certificate for T_{Q'}, starting from the chain out of `P`.
/// Requires a monomial ideal with depth(T) ≥ 2 and 2 < dim(T/P) < dim T.
UfdWitnessSearch ufd_witness_search(const RingFacts& facts, const MonomialPrime& P);
/// depth(T) ≥ 2 and some P ∈ Min with 2 < dim(T/P) < dim T.
UfdCheck check_noncat_ufd(const RingFacts& facts);
ForcedCatenary check_forced_catenary(const RingFacts& facts);
/// T is nonequidimensional.
Verdict check_universal_catenarity_obstruction(const RingFacts& facts);
/// Ass = Min, characteristic zero, and I_P = P T_P for every minimal P.
RegularityCheck check_regularity_at_min(const RingFacts& facts);

/// Runs every check. Throws InternalError if the result violates
/// check_implications.
AnalysisReport analyze(const RingPresentation& presentation, const Budget& budget = {});

/// Violations of the verdict implication lattice and of verdict/witness
/// coherence; empty when consistent.
std::vector<std::string> check_implications(const AnalysisReport& report);

/// Re-verifies every witness of `report` from scratch (chains, colon tests,
/// localizations). Returns the failures.
std::vector<std::string> verify_report(const AnalysisReport& report, const Budget& budget = {});

}  // namespace catenary
