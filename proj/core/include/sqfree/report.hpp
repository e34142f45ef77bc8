#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sqfree/betti.hpp"
#include "sqfree/grading.hpp"
#include "sqfree/local_cohomology.hpp"
#include "sqfree/matrix_file.hpp"
#include "sqfree/monomial_ideal.hpp"

namespace sqfree {

using Json = nlohmann::ordered_json;

struct GradingReport {
  bool multigraded = false;
  /// Alternating walk through the entry graph, 1-based, e.g. "r1 c1 r2 c2".
  std::string inconsistency;
  std::size_t components = 0;
  std::vector<std::size_t> column_component;
  std::vector<std::size_t> row_component;
  std::vector<ExponentVector> base_gammas;
  std::vector<ExponentVector> base_betas;
  bool squarefree = false;
  bool uniform_rank = false;
  /// The solution in use (canonical or overridden); empty if none.
  std::vector<ExponentVector> gammas;
  std::vector<ExponentVector> betas;
  friend bool operator==(const GradingReport&, const GradingReport&) = default;
};

struct IdealReport {
  std::vector<IndexSet> generators;
  std::vector<IndexSet> facets;
  friend bool operator==(const IdealReport&, const IdealReport&) = default;
};

struct AnnihilatorReport {
  std::string method;
  std::vector<IndexSet> generators;
  friend bool operator==(const AnnihilatorReport&, const AnnihilatorReport&) = default;
};

struct DimensionReport {
  int krull = -1;
  std::optional<int> min_local_cohomology;
  std::optional<int> max_local_cohomology;
  std::optional<int> projective_dimension;
  friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

struct LocalCohomologyRow {
  IndexSet plus;
  IndexSet minus;
  std::map<int, std::size_t> dims;
  friend bool operator==(const LocalCohomologyRow&, const LocalCohomologyRow&) = default;
};

struct VerificationReport {
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Everything a CLI run reports. Sections a command does not compute stay
/// empty and are omitted from the JSON.
struct InvariantReport {
  std::string command;
  MatrixFile input;
  std::vector<std::size_t> order;  // 1-based, lowest priority first
  std::optional<GradingReport> grading;
  std::optional<std::vector<IdealReport>> ideals;
  std::optional<AnnihilatorReport> annihilator;
  std::optional<DimensionReport> dimension;
  std::optional<std::vector<BettiEntry>> betti;
  std::optional<std::vector<LocalCohomologyRow>> local_cohomology;
  std::optional<VerificationReport> verification;
  /// Command-specific payload (basis, reduce, gen).
  Json details;
  std::vector<std::string> warnings;
  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

Json to_json(const InvariantReport& report);
/// Throws InputError on a malformed document.
InvariantReport report_from_json(const Json& json);
/// Two-space indented JSON with a trailing newline.
std::string render_json(const InvariantReport& report);

Json index_set_json(IndexSet set);
Json exponent_json(const ExponentVector& a);

}  // namespace sqfree
