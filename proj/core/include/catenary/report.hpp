#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catenary/analyzer.hpp"
#include "catenary/script.hpp"

namespace catenary {

enum class Format { text, json, dot };
std::optional<Format> parse_format(std::string_view name);

/// Outcome of one script command.
struct CommandResult {
  CommandKind kind = CommandKind::analyze;
  std::string target;
  std::shared_ptr<const RingPresentation> presentation;
  /// analyze, family.
  std::optional<AnalysisReport> report;
  /// family: the parameters and the differences from the predicted report.
  std::optional<FamilySpec> family;
  std::vector<std::string> expected_mismatches;
  /// profile.
  std::vector<std::size_t> profile;
  /// poset, chain, and monomial analyses.
  std::optional<SpecPoset> poset;
  /// chain.
  std::optional<PrimeChain> chain;
};

/// Runs a parsed command. Errors propagate (UnsupportedInputError for
/// commands that need a monomial ideal, ParameterError for a chain start
/// that is not a minimal prime, InfeasibleError, ResourceError).
CommandResult execute(const Command& command, const Budget& budget = {});

/// JSON text of an analysis report. Verdicts are true/false, or the strings
/// "inconclusive" / "unsupported".
std::string report_json(const AnalysisReport& report, int indent = 2);

std::string emit(const CommandResult& result, Format format);
/// Several results: text blocks separated by blank lines, one JSON array
/// (a single object for one result), or consecutive DOT graphs.
std::string emit(std::span<const CommandResult> results, Format format);

}  // namespace catenary
