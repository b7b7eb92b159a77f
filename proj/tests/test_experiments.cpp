#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "riccitree/canonical.hpp"
#include "riccitree/error.hpp"
#include "riccitree/experiments.hpp"
#include "riccitree/jsonio.hpp"
#include "riccitree/spectral.hpp"

using namespace riccitree;

TEST_CASE("the experiment registry is stable") {
  const std::vector<std::string>& ids = experiment_ids();
  CHECK(ids.size() == 12);
  std::set<std::string> uniq(ids.begin(), ids.end());
  CHECK(uniq.size() == ids.size());
  CHECK(uniq.count("tmk_table") == 1);
  CHECK(uniq.count("bounds_scan") == 1);
  CHECK_THROWS_AS(reproduce("no_such_experiment"), Error);
}

TEST_CASE("a cheap experiment runs green end to end") {
  ExperimentReport rep = reproduce("caterpillar_figure");
  CHECK(rep.id == "caterpillar_figure");
  CHECK(!rep.rows.empty());
  CHECK(rep.all_pass());
  for (const ExperimentRow& r : rep.rows)
    if (r.expected) CHECK(std::abs(r.computed - *r.expected) <= r.tol);
}

TEST_CASE("report serializers carry every row") {
  ExperimentReport rep = reproduce("tmk_table");
  Json j = to_json(rep);
  std::string dumped = j.dump(2);
  CHECK(dumped.find("\"id\": \"tmk_table\"") != std::string::npos);
  // runtime is deliberately absent from JSON so output bytes are reproducible
  CHECK(dumped.find("runtime") == std::string::npos);
  CHECK(to_json(rep).dump(2) == dumped);  // serialization itself is a pure function

  std::string table = to_table(rep);
  std::string csv = to_csv(rep);
  size_t rows_in_csv = 0;
  for (char c : csv)
    if (c == '\n') ++rows_in_csv;
  CHECK(rows_in_csv == rep.rows.size() + 1);  // header + one line per row
  CHECK(table.find("PASS") != std::string::npos);
  CHECK(csv.find("tmk_table") == std::string::npos);  // csv has no id column, rows only
}

TEST_CASE("cospectral pair: different trees, identical exact spectrum") {
  auto [t1, t2] = cospectral_pair_trees();
  CHECK(t1.n == 17);
  CHECK(t2.n == 17);
  CHECK(canonical_code(t1) != canonical_code(t2));
  SpectrumFingerprint f1 = full_spectrum(build_ricci_matrix(t1));
  SpectrumFingerprint f2 = full_spectrum(build_ricci_matrix(t2));
  REQUIRE(f1.charpoly.size() == f2.charpoly.size());
  for (size_t i = 0; i < f1.charpoly.size(); ++i) CHECK(f1.charpoly[i] == f2.charpoly[i]);
}

TEST_CASE("cospectral search comes back empty below 17 and validates max_n") {
  CHECK(cospectral_search(10).empty());
  CHECK_THROWS_AS(cospectral_search(18), Error);
}
