#include <cmath>
#include <vector>

#include "doctest.h"
#include "heckeeta/analytic.hpp"
#include "heckeeta/golden.hpp"
#include "heckeeta/qseries.hpp"
#include "heckeeta/reports.hpp"

using namespace heckeeta;

TEST_CASE("published eta coefficients are reproduced") {
  const auto checks = verify_table(golden_eta_table(), {});
  REQUIRE(checks.size() == 75);
  for (const auto& c : checks) CHECK_MESSAGE(c.passed, "D=" << c.D << " N=" << c.N);
}

TEST_CASE("published tau_5 values: the first five agree, the sixth printed value is tau_5(7)") {
  const auto checks = verify_table({}, golden_tau5());
  REQUIRE(checks.size() == 6);
  for (int i = 0; i < 5; ++i) CHECK_MESSAGE(checks[i].passed, "N=" << checks[i].N);
  const TableCheck& sixth = checks[5];
  CHECK(sixth.N == 6);
  CHECK_FALSE(sixth.passed);
  CHECK(sixth.actual == RingElem(-6552, -3760));
  CHECK(delta5_series(6)[6] == sixth.expected);
}

TEST_CASE("a corrupted entry is reported as a failure") {
  std::vector<GoldenEntry> entries(golden_eta_table().begin(), golden_eta_table().end());
  entries[7].b += 2;
  const auto checks = verify_table(entries, {});
  int failures = 0;
  for (const auto& c : checks) failures += c.passed ? 0 : 1;
  CHECK(failures == 1);
  for (const auto& c : checks) {
    if (c.D != entries[7].D || c.N != entries[7].N) continue;
    CHECK_FALSE(c.passed);
    CHECK(c.expected == RingElem(BigInt(entries[7].a), BigInt(entries[7].b)));
    CHECK(c.actual != c.expected);
  }
}

TEST_CASE("oracle report") {
  const OracleReport r = oracle_check(5, 20);
  CHECK(r.passed());
  CHECK(r.rows.size() == 21);
  CHECK_FALSE(r.first_divergence.has_value());
}

TEST_CASE("sign report") {
  const QSeries f = eta_series(5, 60);
  const SignReport r = signs_report(5, 60);
  REQUIRE(r.signs.size() == 61);
  CHECK(r.signs[0] == 1);
  CHECK(r.signs[1] == -1);
  CHECK(r.signs[3] == -1);
  int last = 0, changes = 0;
  for (int n = 0; n <= 60; ++n) {
    const double v = f.ctx().embed_double(f[n]);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    CHECK(r.signs[n] == s);
    if (s != 0) {
      if (last != 0 && s != last) ++changes;
      last = s;
    }
  }
  CHECK(r.count() == changes);
  CHECK(r.changes.front() == 1);
}

TEST_CASE("growth report") {
  const GrowthReport r = growth_report(5, 300);
  CHECK(r.slope > 0);
  CHECK(r.window_hi == 300);
  for (const auto& p : r.points) CHECK(p.sqrt_N == doctest::Approx(std::sqrt(p.N)));
  CHECK(r.points.size() + r.zero_indices.size() == 300);
  const GrowthReport w = growth_report(5, 300, 100, 200);
  CHECK(w.window_lo == 100);
  CHECK(w.window_hi == 200);
}

TEST_CASE("modularity sampling is deterministic and within range") {
  const auto a = verify_modularity(13, 5, 300, 1e-6);
  const auto b = verify_modularity(13, 5, 300, 1e-6);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].z.re() == b[i].z.re());
    CHECK(a[i].z.im() == b[i].z.im());
    CHECK(a[i].z.im() >= 0.5);
    CHECK(a[i].z.im() <= 1.5);
    CHECK(std::abs(a[i].z.re()) <= std::sqrt(13.0) / 2);
    CHECK(a[i].inversion.passed);
    CHECK(a[i].translation.passed);
  }
  const auto c = verify_modularity(13, 5, 300, 1e-6, 7);
  CHECK(c[0].z.re() != a[0].z.re());
}

TEST_CASE("eta grid") {
  const auto rows = eta_grid(5, -1.0, 1.0, 0.5, 1.5, 3, 2, 200);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) {
    const HalfPlanePoint z(r.re, r.im);
    CHECK(std::abs(r.eta_z - eval_eta_numeric(5, z, 200)) < 1e-14);
    CHECK(std::abs(r.eta_inv - eval_eta_numeric(5, z.inverted(), 200)) < 1e-14);
  }
  CHECK(rows.front().re == doctest::Approx(-1.0));
  CHECK(rows.back().re == doctest::Approx(1.0));
}
