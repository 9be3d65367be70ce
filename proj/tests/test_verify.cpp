#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracle_util.hpp"
#include "ramc/constants.hpp"
#include "ramc/verify.hpp"

using namespace ramc;
using namespace ramc::verify;

namespace {
const double kFourLn2 = 2.772588722239781;
}

TEST_CASE("grid machinery", "[verify]") {
  CHECK_THROWS_AS(make_axis("x", 0.0, 1.0, 1), domain_error);
  CHECK_THROWS_AS(make_axis("x", 1.0, 0.5, 5), domain_error);
  CHECK_THROWS_AS(make_axis("x", 0.0, 1.0, 5, Spacing::log), domain_error);
  const GridSpec tri = default_ab_triangle_grid();
  for (const GridPoint& pt : grid_points(tri))
    CHECK(pt.at("a") + pt.at("b") <= 1.0);
  const std::vector<double> pts = axis_points(make_axis("x", 0.5, 2.0, 7, Spacing::log));
  CHECK(pts.front() == 0.5);
  CHECK(pts.back() == 2.0);
  CHECK(pts.size() == 7);
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i] > pts[i - 1]);
}

TEST_CASE("absolute monotonicity check passes in scope", "[verify]") {
  const CheckReport sym = check_absolute_monotonicity(make_params(0.5, 0.5),
                                                      kFourLn2, 2000);
  CHECK(sym.status == CheckStatus::pass);
  CHECK(sym.worst_margin >= -1e-13);
  const CheckReport edge = check_absolute_monotonicity(make_params(0.3, 0.6),
                                                       2.0, 2000);
  CHECK(edge.status == CheckStatus::pass);
}

TEST_CASE("absolute monotonicity check fails beyond R", "[verify]") {
  // p = B = pi > R: alpha_1 = -S(pi)/pi^2 < 0
  const Params half = make_params(0.5, 0.5);
  const CheckReport rep = check_absolute_monotonicity(half, kPi, 50);
  CHECK(rep.status == CheckStatus::fail);
  CHECK(rep.details.find("exploratory") != std::string::npos);
  const SQuadratic s = s_quadratic(half);
  const double alpha1 = -s.eval(kPi) / (kPi * kPi);
  CHECK(alpha1 < 0.0);
  CHECK(rep.worst_margin == Catch::Approx(alpha1).epsilon(1e-10));
  CHECK(rep.witness.at("n") == 1.0);
}

TEST_CASE("limit of d_n", "[verify]") {
  const CheckReport rep = check_limit_dn(make_params(0.5, 0.5), 2.0, 100000);
  CHECK(rep.status == CheckStatus::pass);
  // p > R: the check still passes (it tracks the limit R - p, here negative)
  const CheckReport beyond =
      check_limit_dn(make_params(0.5, 0.5), kFourLn2 + 1.0, 20000);
  CHECK(beyond.status == CheckStatus::pass);
}

TEST_CASE("S lemmas and case constants", "[verify]") {
  const CheckReport rep = check_s_lemmas(default_ab_triangle_grid());
  CHECK(rep.status == CheckStatus::pass);
  CHECK(rep.worst_margin > 0.0);
  const SLemmaCaseConstants k = s_lemma_case_constants();
  CHECK(k.q14 == Catch::Approx(0.9843826446590862).epsilon(1e-11));
  CHECK(k.d14 == Catch::Approx(1.8531675560963612).epsilon(1e-11));
  CHECK(k.q716 == Catch::Approx(0.9207149088626686).epsilon(1e-11));
  CHECK(k.d716 == Catch::Approx(1.5585338775422035).epsilon(1e-11));
  CHECK(k.r716 == Catch::Approx(-1.2653762763342513).epsilon(1e-11));
  CHECK(k.bound1 == Catch::Approx(0.17929191301832512).epsilon(1e-9));
  CHECK(k.bound2 == Catch::Approx(0.03591685091958159).epsilon(1e-8));
  CHECK(k.bound3 == Catch::Approx(0.03727018529931259).epsilon(1e-8));
}

TEST_CASE("q_c ratio is decreasing with unit limit", "[verify]") {
  for (double c : {0.5, 1.0, 1.5, 2.0}) {
    const CheckReport rep = check_prop_qc(c, default_half_grid("x", 0.5 * c));
    INFO(rep.details);
    CHECK(rep.status == CheckStatus::pass);
  }
  // c = 1 midpoint closed form is 4 ln 2 / pi
  const double q_mid = ramanujan_c({1.0, 0.5}) / beta_c({1.0, 0.5});
  CHECK(q_mid == Catch::Approx(0.8825424006106064).epsilon(1e-12));
  // beyond c = 2 the midpoint value turns negative
  const CheckReport wide = check_prop_qc(3.0, default_half_grid("x", 1.5));
  CHECK(q_diag(1.5) < 0.0);
  CHECK(wide.status == CheckStatus::pass);
}

TEST_CASE("delta_c positivity and derivative signs", "[verify]") {
  for (double c : {0.5, 1.0, 2.0}) {
    const CheckReport rep = check_prop_delta(c, default_open_grid("x", c));
    INFO(rep.details);
    CHECK(rep.status == CheckStatus::pass);
  }
}

TEST_CASE("R-tilde monotone pattern and closed forms", "[verify]") {
  for (double c : {0.5, 1.0, 2.0}) {
    for (int n : {1, 2}) {
      const CheckReport rep = check_prop_rtilde(c, n, default_open_grid("x", c));
      INFO(rep.details);
      CHECK(rep.status == CheckStatus::pass);
    }
  }
  // endpoint and midpoint closed forms at c = 1, n = 1
  const double endpoint = -digamma(2.0) - digamma(1.0) - 2.0 * kEulerGamma;
  CHECK(endpoint == Catch::Approx(-1.0).epsilon(1e-13));
  const double mid = -2.0 * digamma(0.5) - 2.0 * kEulerGamma - 4.0;
  CHECK(mid == Catch::Approx(kFourLn2 - 4.0).epsilon(1e-12));
  CHECK(mid < 0.0);
}

TEST_CASE("diagonal ratio maps", "[verify]") {
  const CheckReport rep =
      check_diag_props(interval_grid("x", 1e-4, 20.0, 199, Spacing::log));
  INFO(rep.details);
  CHECK(rep.status == CheckStatus::pass);
  CHECK(std::abs(d_diag(1e-4) - 2.0 * kZeta3) <= 1e-2);
  CHECK(std::abs(2.0 * r_diag(1e-4) + kPi * kPi / 3.0) <= 1e-2);
  CHECK(q_diag(0.5) == Catch::Approx(0.8825424006106064).epsilon(1e-12));
}

TEST_CASE("elliptic bound checks", "[verify]") {
  const CheckReport rep = check_k_bounds(
      interval_grid("r", 1e-6, 1.0 - 1e-6, 199, Spacing::linear));
  INFO(rep.details);
  CHECK(rep.status == CheckStatus::pass);
}

TEST_CASE("exploratory conjecture scan", "[verify]") {
  const CheckReport rep = explore_kanother(
      interval_grid("x", 1e-6, 1.0 - 1e-6, 99, Spacing::linear), 50);
  CHECK(rep.status == CheckStatus::inconclusive);  // by design
  CHECK(rep.worst_margin >= 0.0);                  // no violation found
  const std::vector<double> coeffs = kanother_ratio_coeffs(50);
  CHECK(coeffs[0] == Catch::Approx(0.024009367084414302).epsilon(1e-12));
  for (double v : coeffs) CHECK(v >= 0.0);
}

TEST_CASE("division agreement check", "[verify]") {
  const CheckReport rep =
      check_alpha_division_agreement(make_params(0.4, 0.45), 2.3, 1500);
  CHECK(rep.status == CheckStatus::pass);
}

TEST_CASE("reports are deterministic", "[verify]") {
  const GridSpec grid = interval_grid("r", 1e-6, 1.0 - 1e-6, 49, Spacing::linear);
  const CheckReport first = check_k_bounds(grid);
  const CheckReport second = check_k_bounds(grid);
  CHECK(first.worst_margin == second.worst_margin);
  CHECK(first.witness == second.witness);
  CHECK(first.details == second.details);
  CHECK(first.status == second.status);
}
