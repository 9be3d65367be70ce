#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracle_util.hpp"
#include "ramc/coeffs.hpp"
#include "ramc/constants.hpp"
#include "ramc/errors.hpp"
#include "ramc/oracles.hpp"

using namespace ramc;

namespace {
const double kFourLn2 = 2.772588722239781;

double pochhammer(double v, int n) {
  double out = 1.0;
  for (int k = 0; k < n; ++k) out *= v + k;
  return out;
}
}  // namespace

TEST_CASE("w sequence", "[coeffs]") {
  const Params half = make_params(0.5, 0.5);
  const std::vector<double> w = w_sequence(half, 8);
  CHECK(w[0] == 1.0);
  CHECK(w[1] == Catch::Approx(0.25).epsilon(1e-15));
  CHECK(w[2] == Catch::Approx(9.0 / 64.0).epsilon(1e-15));
  // cross-check against the Pochhammer form (a)_n (b)_n / ((a+b)_n n!)
  for (int n = 0; n <= 8; ++n) {
    const double ref = pochhammer(0.5, n) * pochhammer(0.5, n) /
                       (pochhammer(1.0, n) * pochhammer(1.0, n));
    CHECK(w[n] == Catch::Approx(ref).epsilon(1e-13));
  }
  const Params ones = make_params(1.0, 1.0);
  const std::vector<double> w1 = w_sequence(ones, 10);
  for (int n = 0; n <= 10; ++n)
    CHECK(w1[n] == Catch::Approx(1.0 / (n + 1.0)).epsilon(1e-14));
  for (double v : w) CHECK(v > 0.0);
}

TEST_CASE("u sequences", "[coeffs]") {
  const Params half = make_params(0.5, 0.5);
  const USequences seq = u_sequences(half, kFourLn2, 2000);
  CHECK(seq.u_star[0] == Catch::Approx(0.369003931350012).epsilon(1e-12));
  CHECK(seq.u_star[1] == Catch::Approx(-0.2146018366025517).epsilon(1e-12));
  for (std::size_t n = 1; n < seq.u.size(); ++n)
    CHECK(seq.u[n] - seq.u[n - 1] == Catch::Approx(seq.u_star[n]).margin(1e-15));
  // u*_k <= 0 for k >= 1 in theorem scope; partial sums decrease toward R - p
  const double target = ramanujan_r(0.5, 0.5) - kFourLn2;  // 0
  for (std::size_t k = 1; k < seq.u_star.size(); ++k) CHECK(seq.u_star[k] <= 0.0);
  for (std::size_t n = 1; n < seq.u.size(); ++n) CHECK(seq.u[n] < seq.u[n - 1]);
  CHECK(seq.u.back() > target);
  // p = B makes u*_0 vanish
  const USequences at_b = u_sequences(half, beta(0.5, 0.5), 4);
  CHECK(at_b.u_star[0] == 0.0);
}

TEST_CASE("u partial sums approach R - p", "[coeffs]") {
  const Params prm = make_params(0.3, 0.45);
  const double p = 2.1;
  const USequences seq = u_sequences(prm, p, 100000);
  const double target = ramanujan_r(prm.a, prm.b) - p;
  CHECK(std::abs(seq.u.back() - target) <= 1e-4);
}

TEST_CASE("alpha seeds and closed forms at the symmetric point", "[coeffs]") {
  const Params half = make_params(0.5, 0.5);
  const std::vector<double> alpha = alpha_sequence(half, kFourLn2, 3);
  CHECK(alpha[0] == Catch::Approx(0.13309003545679846).epsilon(1e-13));
  CHECK(alpha[1] == Catch::Approx(0.007686700562442355).epsilon(1e-12));
  CHECK(alpha[2] == Catch::Approx(0.007919257260033143).epsilon(1e-12));
  CHECK(alpha[3] == Catch::Approx(0.004878268854052458).epsilon(1e-12));
}

TEST_CASE("alpha recurrence agrees with the division oracle", "[coeffs]") {
  testutil::Rng rng(31415);
  for (int trial = 0; trial < 10; ++trial) {
    const double a = rng.uniform(0.05, 0.9);
    const double b = rng.uniform(0.05, std::min(0.95, 1.0 - a));
    const Params prm = make_params(a, b);
    const double r_val = ramanujan_r(a, b);
    const double p = 2.0 + (r_val - 2.0) * rng.uniform(0.0, 1.0);
    const std::vector<double> rec = alpha_sequence(prm, p, 800);
    const std::vector<double> div = oracles::alpha_by_division(prm, p, 800);
    for (std::size_t n = 0; n < rec.size(); ++n)
      CHECK(std::abs(rec[n] - div[n]) <=
            std::max(1e-12, 1e-12 * std::abs(rec[n])));
  }
}

TEST_CASE("alpha partial sums increase to ab", "[coeffs]") {
  const Params prm = make_params(0.3, 0.5);
  const double r_val = ramanujan_r(0.3, 0.5);
  const std::vector<double> alpha = alpha_sequence(prm, r_val, 2000);
  KahanSum partial;
  double prev = -1.0;
  for (double v : alpha) {
    partial.add(v);
    CHECK(partial.value() >= prev);
    prev = partial.value();
    CHECK(partial.value() <= prm.a * prm.b + 1e-10);
  }
  // the tail decays only logarithmically; N = 2000 carries ~3/4 of the mass
  CHECK(partial.value() > 0.7 * prm.a * prm.b);
}

TEST_CASE("d and theta sequences", "[coeffs]") {
  const Params prm = make_params(0.35, 0.55);
  const double p = 2.0;
  const DThetaSequences dt = d_theta_sequences(prm, p, 4000);
  // identity d_n - d_{n-1} = (theta_n - 1)/n
  for (std::int64_t n = 2; n <= 4000; ++n)
    CHECK(std::abs(dt.d[n] - dt.d[n - 1] - (dt.theta[n] - 1.0) / n) <= 1e-12);
  for (std::int64_t n = 2; n <= 4000; ++n) {
    CHECK(dt.theta[n] > dt.theta[n - 1]);
    CHECK(dt.theta[n] < 1.0);
    CHECK(dt.d[n] < dt.d[n - 1]);
    CHECK(dt.d[n] > 0.0);  // p <= R in theorem scope
  }
}

TEST_CASE("d_n approaches R - p", "[coeffs]") {
  const Params half = make_params(0.5, 0.5);
  const DThetaSequences dt = d_theta_sequences(half, 2.0, 100000);
  const double target = ramanujan_r(0.5, 0.5) - 2.0;
  CHECK(std::abs(dt.d[100000] - target) <= 1e-3);
  // necessity: for p > R the limit R - p < 0 shows up in the tail
  const double p_big = ramanujan_r(0.5, 0.5) + 0.5;
  const DThetaSequences neg = d_theta_sequences(half, p_big, 100000);
  CHECK(neg.d[100000] < 0.0);
}

TEST_CASE("S quadratic", "[coeffs]") {
  const Params half = make_params(0.5, 0.5);
  const SQuadratic s = s_quadratic(half);
  CHECK(s.coeff0 == Catch::Approx(kPi).epsilon(1e-13));
  CHECK(s.eval(0.0) > 0.0);
  CHECK(s.eval(2.0) == Catch::Approx(-0.7123889803846899).epsilon(1e-12));
  CHECK(s.eval(ramanujan_r(0.5, 0.5)) < 0.0);
  CHECK(s.p1 < 2.0);
  CHECK(2.0 < ramanujan_r(0.5, 0.5));
  CHECK(ramanujan_r(0.5, 0.5) < s.p2);
  CHECK(std::abs(s.eval(s.p1)) <= 1e-10);
  CHECK(std::abs(s.eval(s.p2)) <= 1e-10);
}

TEST_CASE("admissible p interval", "[coeffs]") {
  const PInterval half = admissible_p(make_params(0.5, 0.5));
  CHECK(half.lo == 2.0);
  CHECK(half.hi == Catch::Approx(2.772588722239781).epsilon(1e-12));
  CHECK(half.nonempty);
  const PInterval quarter = admissible_p(make_params(0.25, 0.25));
  CHECK(quarter.hi == Catch::Approx(7.3004757369494655).epsilon(1e-12));
  CHECK_THROWS_AS(admissible_p(make_params(0.2, 0.9)), scope_error);
}

TEST_CASE("E-set membership", "[coeffs]") {
  const Params half = make_params(0.5, 0.5);
  const EMembership at2 = e_membership(half, 2.0, 100);
  CHECK((at2.e1 && at2.e2 && at2.e3 && at2.e4));
  CHECK(at2.e3_probe_consistent);
  const EMembership beyond = e_membership(half, kFourLn2 + 0.5, 100);
  CHECK_FALSE(beyond.e3);
  const EMembership low = e_membership(half, 1.0, 100);
  CHECK_FALSE(low.e4);
  CHECK_THROWS_AS(e_membership(half, 2.0, 1), domain_error);
}

TEST_CASE("size cap", "[coeffs]") {
  const Params half = make_params(0.5, 0.5);
  CHECK_THROWS_AS(w_sequence(half, 100, 50), size_error);
  CHECK_THROWS_AS(alpha_sequence(half, 2.0, kDefaultMaxN + 1), size_error);
}

TEST_CASE("coeff table is aligned", "[coeffs]") {
  const Params prm = make_params(0.4, 0.5);
  const CoeffTable t = build_coeff_table(prm, 2.2, 64);
  CHECK(t.w.size() == 65);
  CHECK(t.u_star.size() == 65);
  CHECK(t.u.size() == 65);
  CHECK(t.alpha.size() == 65);
  CHECK(t.d.size() == 65);
  CHECK(t.theta.size() == 65);
  CHECK(t.w[0] == 1.0);
  CHECK(std::isnan(t.d[0]));
  CHECK(std::isnan(t.theta[0]));
  CHECK(t.alpha[0] == Catch::Approx(beta(0.4, 0.5) / 2.2 - 1.0).epsilon(1e-14));
  // d entries agree with their definition from u
  for (std::int64_t n = 1; n <= 63; ++n)
    CHECK(t.d[n] == Catch::Approx((n + 1.0) * t.u[n + 1] - n * t.u[n]).margin(1e-12));
}
