#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hkfun/decomposer.hpp"
#include "hkfun/hk_engine.hpp"

namespace hkfun {

inline constexpr const char* kToolName = "hkfun";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Command { kHk, kGhk, kLcProbe, kDecompose, kVerify, kSelfcheck };
std::string to_string(Command command);
/// Throws PreconditionError for an unknown name.
Command parse_command(std::string_view name);

enum class ReportFormat { kTable, kCsv, kJson };
std::string to_string(ReportFormat format);
ReportFormat parse_format(std::string_view name);

/// Everything one invocation needs. Unset optionals take the per-ring
/// defaults when the job runs.
struct JobSpec {
  Command command = Command::kGhk;
  /// `ring p=.. vars=..[ quotient=..]` header line.
  std::string ring_text;
  /// Comma-separated generators.
  std::string ideal_text;
  std::optional<unsigned> n_max;
  std::vector<std::uint64_t> q_list;
  std::uint64_t seed = 1;
  unsigned degree = 1;
  unsigned retries = 8;
  /// decompose: "general", "dim1" or "dim2".
  std::string method = "general";
  /// Candidates tried first by element selection.
  std::vector<std::string> elements;
  /// verify: text of a decompose JSON report.
  std::string combination_text;
  std::optional<std::size_t> budget;
  bool ratios = false;
  bool timing = false;
};

/// Reads `ring ...` and `ideal ...` lines into `spec`; blank lines and
/// lines starting with '#' are skipped. ParseError positions are byte
/// offsets into `text`.
void parse_input_document(std::string_view text, JobSpec& spec);

/// Parses a `ring p=<p> vars=<a,b>[ quotient=<f;g>]` header.
RingSpecPtr parse_ring_header(std::string_view text);

struct SeriesResult {
  HKSeries series;
  std::vector<RatioEntry> ratios;
};

struct DecomposeResult {
  std::string method;
  Decomposition decomposition;
};

struct VerifyResult {
  SignedCombination combination;
  Certificate certificate;
};

struct SelfcheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelfcheckResult {
  std::vector<SelfcheckItem> items;
  bool all_pass() const;
};

using ReportPayload = std::variant<SeriesResult, LCReport, DecomposeResult, VerifyResult, SelfcheckResult>;

struct ReportDocument {
  JobSpec job;
  /// null for selfcheck
  RingSpecPtr ring;
  std::optional<Ideal> ideal;
  /// Resolved parameters.
  unsigned n_max = 0;
  std::vector<std::uint64_t> q_list;
  ReportPayload payload;
  std::optional<double> seconds;
};

/// Runs the job. Library errors propagate unchanged.
ReportDocument run_job(const JobSpec& spec);

/// Byte-stable rendering; timing appears only when the job asked for it.
std::string emit_report(const ReportDocument& doc, ReportFormat format);

/// Reads the terms of a combination back from a decompose or verify JSON
/// report. Throws PreconditionError when the payload has no terms.
SignedCombination read_combination(std::string_view json_text, const RingSpecPtr& ring);

/// The built-in invariant corpus.
SelfcheckResult run_selfcheck();

/// 0 when the payload was computed (including failed verification), and for
/// a passing selfcheck; 1 for a failing selfcheck.
int exit_status(const ReportDocument& doc);

}  // namespace hkfun
