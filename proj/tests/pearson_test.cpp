#include "triage/pearson.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "support/test_support.hpp"
#include "triage/quadrature.hpp"

using namespace triage;
using testsup::beta_moments;

namespace {

double rel_err(double actual, double expected) {
    if (expected == 0.0) return std::abs(actual);
    return std::abs(actual - expected) / std::abs(expected);
}

}  // namespace

TEST_CASE("central_moments hand-computed cases") {
    SUBCASE("constant sample") {
        const std::vector<double> xs{4.5, 4.5, 4.5};
        const Moments m = central_moments(xs);
        CHECK(m.mu1 == doctest::Approx(4.5));
        CHECK(m.mu2 == 0.0);
        CHECK(m.mu3 == 0.0);
        CHECK(m.mu4 == 0.0);
        CHECK(m.n == 3);
    }
    SUBCASE("1..5") {
        const std::vector<double> xs{1, 2, 3, 4, 5};
        const Moments m = central_moments(xs);
        CHECK(m.mu1 == doctest::Approx(3.0).epsilon(1e-15));
        CHECK(m.mu2 == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(m.mu3 == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(m.mu4 == doctest::Approx(6.8).epsilon(1e-15));
    }
    SUBCASE("0,0,1") {
        const std::vector<double> xs{0, 0, 1};
        const Moments m = central_moments(xs);
        CHECK(rel_err(m.mu1, 1.0 / 3.0) < 1e-15);
        CHECK(rel_err(m.mu2, 2.0 / 9.0) < 1e-14);
        CHECK(rel_err(m.mu3, 2.0 / 27.0) < 1e-14);
        CHECK(rel_err(m.mu4, 2.0 / 27.0) < 1e-14);
    }
    SUBCASE("empty sample throws") {
        CHECK_THROWS_AS(central_moments({}), std::invalid_argument);
    }
}

TEST_CASE("shape_stats examples") {
    SUBCASE("symmetric moments") {
        const auto s = shape_stats(Moments{1.0, 2.0, 0.0, 8.0, 10});
        REQUIRE(s.ok());
        CHECK(s->skewness == 0.0);
        CHECK(s->kappa == 0.0);
    }
    SUBCASE("0,0,1 sample") {
        const auto s = shape_stats(central_moments(std::vector<double>{0, 0, 1}));
        REQUIRE(s.ok());
        CHECK(rel_err(s->skewness, 1.0 / std::sqrt(2.0)) < 1e-12);
        CHECK(rel_err(s->kurtosis, 1.5) < 1e-12);
        CHECK(rel_err(s->kappa, -0.125) < 1e-12);
    }
    SUBCASE("exact Beta(2,3) moments") {
        const auto s = shape_stats(beta_moments(2, 3));
        REQUIRE(s.ok());
        CHECK(rel_err(s->skewness, 2.0 / 7.0) < 1e-12);
        CHECK(rel_err(s->kurtosis, 33.0 / 14.0) < 1e-12);
        CHECK(rel_err(s->kappa, -1.0 / 24.0) < 1e-12);
    }
    SUBCASE("zero variance reported") {
        const auto s = shape_stats(Moments{1.0, 0.0, 0.0, 0.0, 3});
        CHECK_FALSE(s.ok());
        CHECK(s.error == FitError::zero_variance);
    }
    SUBCASE("kappa denominator zero reported distinctly") {
        // 2*Ku - 3*Sk^2 - 6 = 0 at Sk^2 = 1, Ku = 4.5 (gamma-shaped moments)
        const auto s = shape_stats(Moments{0.0, 1.0, 1.0, 4.5, 100});
        CHECK_FALSE(s.ok());
        CHECK(s.error == FitError::kappa_denominator_zero);
    }
}

TEST_CASE("select_type thresholds") {
    auto type_of = [](double kappa) {
        return select_type(ShapeStats{0.1, 3.0, kappa});
    };
    CHECK(type_of(-0.125) == FamilyType::type_one);
    CHECK(type_of(0.0) == FamilyType::boundary);
    CHECK(type_of(2.5) == FamilyType::type_six);
    CHECK(type_of(0.32) == FamilyType::type_four);
    CHECK(type_of(1.0) == FamilyType::boundary);
    CHECK(type_of(1.0 + 1e-12) == FamilyType::boundary);
    CHECK(type_of(-1e-12) == FamilyType::boundary);
}

TEST_CASE("ode_coefficients") {
    SUBCASE("symmetric moments give b = a1 = 0") {
        const auto c = ode_coefficients(Moments{0.0, 2.0, 0.0, 8.0, 10});
        REQUIRE(c.ok());
        CHECK(c->b == 0.0);
        CHECK(c->a1 == 0.0);
    }
    SUBCASE("exact Beta(2,3) values") {
        const auto c = ode_coefficients(beta_moments(2, 3));
        REQUIRE(c.ok());
        CHECK(rel_err(c->b, 1.0 / 15.0) < 1e-12);
        CHECK(rel_err(c->a0, 0.08) < 1e-12);
        CHECK(rel_err(c->a2, -1.0 / 3.0) < 1e-12);
        CHECK(c->a1 == c->b);
    }
    SUBCASE("zero variance rejected") {
        CHECK(ode_coefficients(Moments{0.0, 0.0, 0.0, 0.0, 2}).error ==
              FitError::zero_variance);
    }
    SUBCASE("vanishing common denominator rejected") {
        // exact U(0,1) moments sit on the D = 0 surface
        CHECK(ode_coefficients(Moments{0.5, 1.0 / 12.0, 0.0, 1.0 / 80.0, 1}).error ==
              FitError::unsupported_shape);
    }
}

TEST_CASE("ODE consistency: log-density slope matches the coefficient form") {
    // d/dx ln f(x), by central differences, must equal
    // -(b + t) / (a0 + a1 t + a2 t^2) with t = x - mu1.
    const Moments m = beta_moments(2, 3);
    const auto fit = fit_type1(m);
    const auto coeffs = ode_coefficients(m);
    REQUIRE(fit.ok());
    REQUIRE(coeffs.ok());

    const double lo = fit->support_lower();
    const double hi = fit->support_upper();
    const double step = 1e-6 * (hi - lo);
    for (int i = 1; i <= 100; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / 101.0;
        const double fd =
            (log_pdf(*fit, x + step) - log_pdf(*fit, x - step)) / (2.0 * step);
        const double t = x - m.mu1;
        const double rhs =
            -(coeffs->b + t) / (coeffs->a0 + coeffs->a1 * t + coeffs->a2 * t * t);
        CHECK(std::abs(fd - rhs) < 1e-6);
    }
}

TEST_CASE("quadratic roots sit at the centred support endpoints") {
    testsup::BetaSampler sampler(0xb0015u);
    for (int trial = 0; trial < 5; ++trial) {
        const auto xs = sampler.draw(2 + trial % 3, 3 + trial % 2, 20000);
        const Moments m = central_moments(xs);
        const auto fit = fit_type1(m);
        const auto coeffs = ode_coefficients(m);
        REQUIRE(fit.ok());
        REQUIRE(coeffs.ok());
        const double disc =
            std::sqrt(coeffs->a1 * coeffs->a1 - 4.0 * coeffs->a2 * coeffs->a0);
        const double r1 = (-coeffs->a1 - disc) / (2.0 * coeffs->a2);
        const double r2 = (-coeffs->a1 + disc) / (2.0 * coeffs->a2);
        const double span = fit->c1 + fit->c2;
        CHECK(std::abs(std::min(r1, r2) - (fit->support_lower() - m.mu1)) < 1e-8 * span);
        CHECK(std::abs(std::max(r1, r2) - (fit->support_upper() - m.mu1)) < 1e-8 * span);
    }
}

TEST_CASE("fit_type1 reproduces the closed-form Beta(2,3) parameters") {
    const auto fit = fit_type1(beta_moments(2, 3));
    REQUIRE(fit.ok());
    CHECK(rel_err(fit->h, 5.0) < 1e-9);
    CHECK(rel_err(fit->g1, 1.0) < 1e-9);
    CHECK(rel_err(fit->g2, 2.0) < 1e-9);
    CHECK(rel_err(fit->c1, 1.0 / 3.0) < 1e-9);
    CHECK(rel_err(fit->c2, 2.0 / 3.0) < 1e-9);
    CHECK(rel_err(fit->m0, 1.0 / 3.0) < 1e-9);
    CHECK(rel_err(fit->a0_norm, 16.0 / 9.0) < 1e-9);
    CHECK(std::abs(fit->support_lower()) < 1e-9);
    CHECK(std::abs(fit->support_upper() - 1.0) < 1e-9);
    CHECK(rel_err(fit->stats.kappa, -1.0 / 24.0) < 1e-9);
}

TEST_CASE("fit_type1 closed-form checks for other Beta shapes") {
    SUBCASE("Beta(3,2): mirrored exponents") {
        const auto fit = fit_type1(beta_moments(3, 2));
        REQUIRE(fit.ok());
        CHECK(rel_err(fit->g1, 2.0) < 1e-9);
        CHECK(rel_err(fit->g2, 1.0) < 1e-9);
        CHECK(rel_err(fit->m0, 2.0 / 3.0) < 1e-9);
        CHECK(std::abs(fit->support_lower()) < 1e-9);
        CHECK(std::abs(fit->support_upper() - 1.0) < 1e-9);
    }
    SUBCASE("Beta(4,3)") {
        const auto fit = fit_type1(beta_moments(4, 3));
        REQUIRE(fit.ok());
        CHECK(rel_err(fit->h, 7.0) < 1e-9);
        CHECK(rel_err(fit->g1, 3.0) < 1e-9);
        CHECK(rel_err(fit->g2, 2.0) < 1e-9);
        CHECK(rel_err(fit->a0_norm, 2.0736) < 1e-9);
    }
}

TEST_CASE("fit_type1 symmetric moments give a symmetric model") {
    const auto fit = fit_type1(beta_moments(2, 2));
    REQUIRE(fit.ok());
    CHECK(fit->g1 == fit->g2);
    CHECK(fit->c1 == fit->c2);
    CHECK(fit->m0 == 0.5);
    CHECK(rel_err(fit->g1, 1.0) < 1e-9);
    CHECK(rel_err(fit->a0_norm, 1.5) < 1e-9);
}

TEST_CASE("fit_type1 handles the uniform limit (both exponents zero)") {
    // Exact U(0,1) moments: mu2 = 1/12, mu4 = 1/80, kurtosis 1.8, h = 2.
    const Moments m{0.5, 1.0 / 12.0, 0.0, 1.0 / 80.0, 1};
    const auto fit = fit_type1(m);
    REQUIRE(fit.ok());
    CHECK(std::abs(fit->g1) < 1e-12);
    CHECK(std::abs(fit->g2) < 1e-12);
    CHECK(rel_err(fit->c1, 0.5) < 1e-9);
    CHECK(rel_err(fit->a0_norm, 1.0) < 1e-9);
}

TEST_CASE("fit_type1 failure modes") {
    SUBCASE("type IV moments refused") {
        // Sk^2 = 1, Ku = 6 -> kappa = 81/252, inside (0, 1)
        const auto fit = fit_type1(Moments{0.0, 1.0, 1.0, 6.0, 50});
        CHECK(fit.error == FitError::not_type_one);
    }
    SUBCASE("type VI moments refused") {
        // Sk^2 = 4, Ku = 10 -> kappa ~ 3.02
        const auto fit = fit_type1(Moments{0.0, 1.0, 2.0, 10.0, 50});
        CHECK(fit.error == FitError::not_type_one);
    }
    SUBCASE("two-point symmetric sample hits the exponent bound") {
        const auto fit = fit_type1(central_moments(std::vector<double>{0, 1}));
        CHECK(fit.error == FitError::exponent_out_of_range);
    }
    SUBCASE("heavy-tailed symmetric moments hit the exponent bound") {
        const auto fit = fit_type1(Moments{0.0, 1.0, 0.0, 4.0, 50});
        CHECK(fit.error == FitError::exponent_out_of_range);
    }
    SUBCASE("J-shaped moment sets have no mode-anchored support") {
        const std::vector<double> pool{2, 5, 6, 11, 2, 5, 6, 11, 2, 5, 6, 11};
        const auto fit = fit_type1(central_moments(pool));
        CHECK(fit.error == FitError::nonpositive_half_width);
    }
    SUBCASE("zero variance propagates") {
        CHECK(fit_type1(Moments{1.0, 0.0, 0.0, 0.0, 5}).error == FitError::zero_variance);
    }
    SUBCASE("kappa denominator zero propagates") {
        CHECK(fit_type1(Moments{0.0, 1.0, 1.0, 4.5, 100}).error ==
              FitError::kappa_denominator_zero);
    }
}

TEST_CASE("pdf and log_pdf") {
    const auto fit = fit_type1(beta_moments(2, 3));
    REQUIRE(fit.ok());
    const PearsonType1Model& model = *fit;

    SUBCASE("density at the mode equals a0_norm") {
        CHECK(pdf(model, model.m0) == model.a0_norm);
    }
    SUBCASE("closed-form value at 0.5") {
        CHECK(rel_err(pdf(model, 0.5), 1.5) < 1e-9);
    }
    SUBCASE("zero outside the support") {
        CHECK(pdf(model, model.m0 - model.c1 - 1.0) == 0.0);
        CHECK(pdf(model, model.support_upper() + 0.25) == 0.0);
    }
    SUBCASE("log_pdf at the mode is log a0_norm") {
        CHECK(log_pdf(model, model.m0) == model.log_a0);
    }
    SUBCASE("log_pdf floor outside the support") {
        CHECK(log_pdf(model, model.m0 - model.c1 - 1.0) == kLogFloor);
        CHECK(log_pdf(model, -5.0, -100.0) == -100.0);
    }
    SUBCASE("exp(log_pdf) is consistent with pdf inside the support") {
        for (double x : {0.05, 0.25, 0.5, 0.75, 0.95}) {
            CHECK(rel_err(std::exp(log_pdf(model, x)), pdf(model, x)) < 1e-12);
        }
    }
}

TEST_CASE("normalization integrates fitted densities to one") {
    SUBCASE("Beta(2,3) fit") {
        const auto fit = fit_type1(beta_moments(2, 3));
        REQUIRE(fit.ok());
        CHECK(std::abs(normalization(*fit) - 1.0) < 1e-6);
    }
    SUBCASE("symmetric fit") {
        const auto fit = fit_type1(beta_moments(2, 2));
        REQUIRE(fit.ok());
        CHECK(std::abs(normalization(*fit) - 1.0) < 1e-6);
    }
    SUBCASE("doubled a0 scales the integral linearly") {
        auto fit = fit_type1(beta_moments(2, 3));
        REQUIRE(fit.ok());
        PearsonType1Model doubled = *fit;
        doubled.a0_norm *= 2.0;
        doubled.log_a0 += std::log(2.0);
        CHECK(std::abs(normalization(doubled) - 2.0) < 2e-6);
    }
}

TEST_CASE("moment recovery: fitted density reproduces the input moments") {
    for (auto [a, b] : {std::pair{2.0, 3.0}, {2.0, 2.0}, {4.0, 3.0}, {3.0, 5.0}}) {
        const Moments m = beta_moments(a, b);
        const auto fit = fit_type1(m);
        REQUIRE(fit.ok());
        const double lo = fit->support_lower() + 1e-12 * (fit->c1 + fit->c2);
        const double hi = fit->support_upper() - 1e-12 * (fit->c1 + fit->c2);
        const double mean =
            integrate([&](double x) { return x * pdf(*fit, x); }, lo, hi, 1e-10).value;
        const double var = integrate([&](double x) {
                               const double d = x - m.mu1;
                               return d * d * pdf(*fit, x);
                           }, lo, hi, 1e-10).value;
        const double third = integrate([&](double x) {
                                 const double d = x - m.mu1;
                                 return d * d * d * pdf(*fit, x);
                             }, lo, hi, 1e-10).value;
        CHECK(std::abs(mean - m.mu1) < 1e-6);
        CHECK(std::abs(var - m.mu2) < 1e-6);
        CHECK(std::abs(third - m.mu3) < 1e-5);
    }
}

TEST_CASE("scale and shift equivariance of the exact-moment fit") {
    const Moments base = beta_moments(2, 3);
    auto transform = [](const Moments& m, double s, double t) {
        return Moments{s * m.mu1 + t, s * s * m.mu2, s * s * s * m.mu3,
                       s * s * s * s * m.mu4, m.n};
    };
    const auto f0 = fit_type1(base);
    REQUIRE(f0.ok());
    for (auto [s, t] : {std::pair{2.0, 0.5}, {1.7, -0.3}, {0.25, 10.0}}) {
        const auto f1 = fit_type1(transform(base, s, t));
        REQUIRE(f1.ok());
        CHECK(rel_err(f1->g1, f0->g1) < 1e-9);
        CHECK(rel_err(f1->g2, f0->g2) < 1e-9);
        CHECK(rel_err(f1->stats.kappa, f0->stats.kappa) < 1e-9);
        CHECK(rel_err(f1->c1, s * f0->c1) < 1e-9);
        CHECK(rel_err(f1->c2, s * f0->c2) < 1e-9);
        CHECK(rel_err(f1->m0, s * f0->m0 + t) < 1e-9);
    }
}

TEST_CASE("type soundness: Beta samples select Type I for all shapes 2..5") {
    testsup::BetaSampler sampler(0x7e57ed5eedULL);
    for (int a = 2; a <= 5; ++a) {
        for (int b = 2; b <= 5; ++b) {
            const auto xs = sampler.draw(a, b, 100000);
            const auto s = shape_stats(central_moments(xs));
            REQUIRE(s.ok());
            CHECK(s->kappa < 0.0);
            CHECK(select_type(*s) == FamilyType::type_one);
        }
    }
}

TEST_CASE("Monte Carlo fit lands near the true Beta(2,3) parameters") {
    testsup::BetaSampler sampler(0x23u);
    const auto xs = sampler.draw(2, 3, 100000);
    const auto fit = fit_type1(central_moments(xs));
    REQUIRE(fit.ok());
    CHECK(fit->stats.kappa < 0.0);
    CHECK(fit->g1 > 0.85);
    CHECK(fit->g1 < 1.15);
    CHECK(fit->g2 > 1.7);
    CHECK(fit->g2 < 2.3);
    CHECK(std::abs(fit->support_lower()) < 0.05);
    CHECK(std::abs(fit->support_upper() - 1.0) < 0.05);
}

TEST_CASE("sample moments satisfy the classical inequalities") {
    std::mt19937_64 eng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> xs(20 + trial);
        for (auto& x : xs)
            x = static_cast<double>(eng() % 1000) / 100.0;
        const Moments m = central_moments(xs);
        CHECK(m.mu2 >= 0.0);
        CHECK(m.mu4 >= m.mu2 * m.mu2 - 1e-12);  // Cauchy-Schwarz
        if (m.mu2 > 0.0) {
            const auto s = shape_stats(m);
            if (s.ok()) CHECK(s->kurtosis >= 1.0 - 1e-12);
        }
    }
}
