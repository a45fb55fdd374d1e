#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gsc/graph.hpp"

namespace gsc {

struct ParseFailure {
  long line_number = 0;  // 1-based within the corpus
  std::string message;
};

struct Counterexample {
  std::string graph6;
  std::string detail;
};

struct GraphWitness {
  std::string graph6;
  std::string witness_json;
};

/// Outcome of one corpus run. processed == passed + failed, and
/// counterexamples has exactly `failed` entries. Merging two reports of the
/// same check adds counters and concatenates lists, so chunked runs fold
/// into the same totals in any grouping.
struct VerificationReport {
  std::string check;      // which property was verified
  std::string corpus_id;  // where the lines came from
  long processed = 0;
  long skipped = 0;
  long passed = 0;
  long failed = 0;
  std::vector<ParseFailure> parse_errors;
  std::vector<Counterexample> counterexamples;
  std::vector<GraphWitness> witnesses;  // only when collect_witnesses is set
  double wall_ms = 0.0;

  void merge(const VerificationReport& other);
  bool clean() const { return failed == 0 && parse_errors.empty(); }
};

struct VerifyOptions {
  int parallelism = 0;   // 0 = one thread per hardware thread
  int chunk_size = 1024;  // lines per work unit
  bool collect_witnesses = false;

  /// Only for the cut-vertex-avoidance check: restrict which admissible x
  /// are exercised per graph. Empty = every admissible vertex.
  std::function<bool(const Graph&, int)> x_filter;
};

/// Every connected graph with m <= 2n-4 has a stable cutset. Lines out of
/// that regime, disconnected graphs, and empty lines are skipped; malformed
/// lines are recorded and processing continues.
VerificationReport verify_theorem1(const std::vector<std::string>& lines,
                                   const std::string& corpus_id,
                                   const VerifyOptions& options = {});
VerificationReport verify_theorem1(std::istream& corpus, const std::string& corpus_id,
                                   const VerifyOptions& options = {});

/// Every connected graph with m <= 2n-4 has, for every vertex x that is not
/// its only cut vertex, a stable cutset avoiding x. All admissible x are
/// exercised per graph (subject to options.x_filter).
VerificationReport verify_corollary3(const std::vector<std::string>& lines,
                                     const std::string& corpus_id,
                                     const VerifyOptions& options = {});
VerificationReport verify_corollary3(std::istream& corpus, const std::string& corpus_id,
                                     const VerifyOptions& options = {});

/// Every connected graph with n >= 3 and m <= 2n-3 has a stable cutset or
/// is generated from triangles and prisms; at m == 2n-3 exactly one of the
/// two holds and certificates are re-checked.
VerificationReport verify_theorem5(const std::vector<std::string>& lines,
                                   const std::string& corpus_id,
                                   const VerifyOptions& options = {});
VerificationReport verify_theorem5(std::istream& corpus, const std::string& corpus_id,
                                   const VerifyOptions& options = {});

/// One-line human-readable summary (plus one line per counterexample).
std::string summarize(const VerificationReport& report);

}  // namespace gsc
