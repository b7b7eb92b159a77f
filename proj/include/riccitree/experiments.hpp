#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riccitree/jsonio.hpp"
#include "riccitree/spectral.hpp"
#include "riccitree/tree.hpp"

namespace riccitree {

// One checked fact.  Rows with an expected value pass iff
// |computed - expected| <= tol; predicate rows (no expected value) set pass
// directly and use `computed` as the reported measurement.
struct ExperimentRow {
  std::string params;
  std::string claim;
  double computed = 0.0;
  std::optional<double> expected;
  double tol = 0.0;
  bool pass = false;
};

struct ExperimentReport {
  std::string id;
  std::vector<ExperimentRow> rows;
  long runtime_ms = 0;

  bool all_pass() const;
};

// Known experiment ids, in canonical order.
const std::vector<std::string>& experiment_ids();

// Runs one named experiment.  Throws UnknownExperiment for unknown ids.
ExperimentReport reproduce(const std::string& id);

// Trees whose Ricci matrices share a characteristic polynomial without being
// isomorphic.
struct CospectralClass {
  int n = 0;
  std::vector<std::string> members;  // canonical codes, sorted
  SpectrumFingerprint fingerprint;
};

// Exhaustive search over all free trees with n <= max_n (max 17): bucket by
// the float spectrum rounded to 1e-8, then confirm candidate buckets by
// exact rational charpoly equality.  Float ties that fail exact confirmation
// are logged to stderr.  Result is independent of enumeration order.
std::vector<CospectralClass> cospectral_search(int max_n, bool parallel = true);

// The known 17-vertex pair with equal Ricci charpolys, in a fixed labeling.
std::pair<Tree, Tree> cospectral_pair_trees();

// Serializations.  JSON omits runtime_ms so identical results are
// byte-identical; the text table prints it in a footer.
Json to_json(const ExperimentReport& rep);
std::string to_table(const ExperimentReport& rep);
std::string to_csv(const ExperimentReport& rep);
Json to_json(const std::vector<CospectralClass>& classes);

}  // namespace riccitree
