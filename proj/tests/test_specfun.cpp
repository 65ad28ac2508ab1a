#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "slnfit/specfun.hpp"

using namespace slnfit;

TEST_CASE("norm_pdf basics") {
    CHECK(norm_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-15));
    CHECK(norm_pdf(1.0) == norm_pdf(-1.0));
    CHECK(norm_pdf(2.0) == doctest::Approx(std::exp(-2.0) / std::sqrt(2.0 * std::numbers::pi))
                               .epsilon(1e-15));
    CHECK(norm_pdf(40.0) == 0.0);  // underflow, not an error
}

TEST_CASE("norm_cdf values and symmetry") {
    CHECK(norm_cdf(0.0) == 0.5);
    CHECK(norm_cdf(8.0) > 1.0 - 1e-15);
    // high-precision erf oracle value
    CHECK(norm_cdf(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-15));

    for (double x : {0.0, 0.13, 0.5, 1.0, 2.0, 3.5, 5.0, 7.0, 10.0, 20.0}) {
        CHECK(std::abs(norm_cdf(x) + norm_cdf(-x) - 1.0) < 1e-15);
    }
}

TEST_CASE("norm_quantile round trip and symmetry") {
    CHECK(norm_quantile(0.5) == 0.0);
    // bisection-oracle value
    CHECK(norm_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-14));

    const std::vector<double> grid = {1e-9, 1e-7, 1e-5, 1e-3, 0.02,  0.1,
                                      0.3,  0.5,  0.7,  0.9,  0.999, 1.0 - 1e-9};
    for (double p : grid) {
        CHECK(std::abs(norm_cdf(norm_quantile(p)) - p) < 1e-12);
        CHECK(std::abs(norm_quantile(p) + norm_quantile(1.0 - p)) < 1e-13);
    }

    // agreement with an independent bisection inversion of norm_cdf
    for (double p : {1e-4, 0.2, 0.8}) {
        const double q_oracle = oracle::bisect([](double x) { return norm_cdf(x); }, p, -10.0, 10.0);
        CHECK(norm_quantile(p) == doctest::Approx(q_oracle).epsilon(1e-11));
    }

    CHECK_THROWS_AS(norm_quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(norm_quantile(1.0), std::domain_error);
    CHECK_THROWS_AS(norm_quantile(-0.1), std::domain_error);
    CHECK_THROWS_AS(norm_quantile(1.5), std::domain_error);
}

TEST_CASE("norm_quantile deep tails") {
    for (double p : {1e-300, 1e-200, 1e-100, 1e-20}) {
        const double q = norm_quantile(p);
        CHECK(q < 0.0);
        CHECK(std::abs(norm_logcdf(q) - std::log(p)) < 1e-10 * std::abs(std::log(p)));
    }
}

TEST_CASE("norm_logcdf matches log(norm_cdf) where both are accurate") {
    for (double x : {-0.5, -1.0, -3.0, -8.0, -20.0, 0.7, 2.0}) {
        CHECK(norm_logcdf(x) ==
              doctest::Approx(std::log(norm_cdf(x))).epsilon(1e-12));
    }
    // deep tail: compare against the asymptotic expansion ln(phi(x)/|x| (1 - 1/x^2 + 3/x^4))
    const double x = -50.0;
    const double expect = -0.5 * x * x - std::log(-x * std::sqrt(2.0 * std::numbers::pi)) +
                          std::log1p(-1.0 / (x * x) + 3.0 / (x * x * x * x));
    CHECK(norm_logcdf(x) == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("norm_quantile_logp") {
    // consistency with the linear-domain quantile
    for (double p : {1e-3, 0.3, 1e-12}) {
        CHECK(norm_quantile_logp(std::log(p)) ==
              doctest::Approx(norm_quantile(p)).epsilon(1e-13));
    }
    // far below the representable range of p itself
    for (double L : {-800.0, -5000.0, -1e5}) {
        const double q = norm_quantile_logp(L);
        CHECK(std::abs(norm_logcdf(q) - L) < 1e-10 * std::abs(L));
    }
    CHECK_THROWS_AS(norm_quantile_logp(0.0), std::domain_error);
    CHECK_THROWS_AS(norm_quantile_logp(0.5), std::domain_error);
}

TEST_CASE("erfcx continuity and small-argument value") {
    CHECK(erfcx(0.0) == 1.0);
    CHECK(erfcx(1.0) == doctest::Approx(std::exp(1.0) * std::erfc(1.0)).epsilon(1e-15));
    // across the series switchover: the direct product is still representable
    CHECK(erfcx(25.5) == doctest::Approx(std::exp(25.5 * 25.5) * std::erfc(25.5)).epsilon(1e-11));
    CHECK(erfcx(100.0) == doctest::Approx(1.0 / (100.0 * std::sqrt(std::numbers::pi))).epsilon(1e-4));
}

TEST_CASE("owens_t trivial and golden values") {
    CHECK(owens_t(0.3, 0.0) == 0.0);
    CHECK(owens_t(-5.0, 0.0) == 0.0);
    CHECK(owens_t(0.0, 1.0) == doctest::Approx(0.125).epsilon(1e-14));
    // trapezoid-oracle goldens
    CHECK(owens_t(1.0, 1.0) == doctest::Approx(0.0667418821657009666).epsilon(1e-13));
    CHECK(owens_t(0.5, 2.0) == doctest::Approx(0.141580603653978393).epsilon(1e-13));
    CHECK(owens_t(2.0, 0.5) == doctest::Approx(0.00862507798552150713).epsilon(1e-13));
}

TEST_CASE("owens_t identities on grids") {
    // T(0, a) = arctan(a) / (2 pi)
    for (double a : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0}) {
        CHECK(std::abs(owens_t(0.0, a) - std::atan(a) / (2.0 * std::numbers::pi)) < 1e-14);
    }
    // 2 T(x, 1) = Phi(x) (1 - Phi(x))
    for (double x : {0.0, 0.3, 1.0, 2.0, 3.0, 5.0}) {
        CHECK(std::abs(2.0 * owens_t(x, 1.0) - norm_cdf(x) * (1.0 - norm_cdf(x))) < 1e-12);
    }
    // odd in a, even in x
    for (double x : {0.0, 0.7, 2.5}) {
        for (double a : {0.2, 1.7, 12.0}) {
            CHECK(owens_t(x, -a) == -owens_t(x, a));
            CHECK(owens_t(-x, a) == owens_t(x, a));
        }
    }
}

TEST_CASE("owens_t agrees with the trapezoid oracle over the working domain") {
    for (double x = -8.0; x <= 8.01; x += 2.0) {
        for (double a : {-30.0, -9.0, -2.0, -1.0, -0.3, 0.5, 1.0, 3.0, 11.0, 30.0}) {
            const double got = owens_t(x, a);
            const double want = oracle::owen_t(x, a);
            CHECK(std::abs(got - want) < 1e-10);
        }
    }
}

TEST_CASE("owens_t_scaled carries the Gaussian prefactor exactly") {
    for (double x : {0.5, 1.5, 2.0}) {
        for (double a : {0.4, 2.0, 25.0}) {
            const double want = oracle::owen_t(x, a) * std::exp(0.5 * x * x);
            CHECK(owens_t_scaled(x, a) == doctest::Approx(want).epsilon(1e-11));
        }
    }
}
