#include "triage/pearson.hpp"

#include <cmath>
#include <stdexcept>

#include "triage/quadrature.hpp"

namespace triage {

std::string_view to_string(FamilyType t) {
    switch (t) {
        case FamilyType::type_one: return "type-I";
        case FamilyType::type_four: return "type-IV";
        case FamilyType::type_six: return "type-VI";
        case FamilyType::boundary: return "boundary";
    }
    return "?";
}

std::string_view to_string(FitError e) {
    switch (e) {
        case FitError::none: return "none";
        case FitError::empty_sample: return "empty_sample";
        case FitError::too_few_samples: return "too_few_samples";
        case FitError::zero_variance: return "zero_variance";
        case FitError::too_few_distinct: return "too_few_distinct";
        case FitError::kappa_denominator_zero: return "kappa_denominator_zero";
        case FitError::not_type_one: return "not_type_one";
        case FitError::h_singularity: return "h_singularity";
        case FitError::unsupported_shape: return "unsupported_shape";
        case FitError::exponent_out_of_range: return "exponent_out_of_range";
        case FitError::nonpositive_half_width: return "nonpositive_half_width";
    }
    return "?";
}

Moments central_moments(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("central_moments: empty sample");
    Moments m;
    m.n = samples.size();
    double sum = 0.0;
    for (double x : samples) sum += x;
    m.mu1 = sum / static_cast<double>(m.n);
    double s2 = 0.0, s3 = 0.0, s4 = 0.0;
    for (double x : samples) {
        const double d = x - m.mu1;
        const double d2 = d * d;
        s2 += d2;
        s3 += d2 * d;
        s4 += d2 * d2;
    }
    const double inv_n = 1.0 / static_cast<double>(m.n);
    m.mu2 = s2 * inv_n;
    m.mu3 = s3 * inv_n;
    m.mu4 = s4 * inv_n;
    return m;
}

FitOutcome<ShapeStats> shape_stats(const Moments& m) {
    if (!(m.mu2 > 0.0)) return {std::nullopt, FitError::zero_variance};
    ShapeStats s;
    s.skewness = m.mu3 / (m.mu2 * std::sqrt(m.mu2));
    s.kurtosis = m.mu4 / (m.mu2 * m.mu2);
    const double sk2 = s.skewness * s.skewness;
    const double denom =
        4.0 * (4.0 * s.kurtosis - 3.0 * sk2) * (2.0 * s.kurtosis - 3.0 * sk2 - 6.0);
    if (denom == 0.0) return {std::nullopt, FitError::kappa_denominator_zero};
    const double kp3 = s.kurtosis + 3.0;
    s.kappa = sk2 * kp3 * kp3 / denom;
    return {s, FitError::none};
}

FamilyType select_type(const ShapeStats& s) {
    if (s.kappa < -kKappaEpsilon) return FamilyType::type_one;
    if (s.kappa > kKappaEpsilon && s.kappa < 1.0 - kKappaEpsilon)
        return FamilyType::type_four;
    if (s.kappa > 1.0 + kKappaEpsilon) return FamilyType::type_six;
    return FamilyType::boundary;
}

FitOutcome<PearsonOdeCoeffs> ode_coefficients(const Moments& m) {
    if (!(m.mu2 > 0.0)) return {std::nullopt, FitError::zero_variance};
    const double mu2 = m.mu2, mu3 = m.mu3, mu4 = m.mu4;
    const double d = 10.0 * mu2 * mu4 - 18.0 * mu2 * mu2 * mu2 - 12.0 * mu3 * mu3;
    if (d == 0.0) return {std::nullopt, FitError::unsupported_shape};
    PearsonOdeCoeffs c;
    c.b = mu3 * (mu4 + 3.0 * mu2 * mu2) / d;
    c.a1 = c.b;
    c.a0 = mu2 * (4.0 * mu2 * mu4 - 3.0 * mu3 * mu3) / d;
    c.a2 = (2.0 * mu2 * mu4 - 3.0 * mu3 * mu3 - 6.0 * mu2 * mu2 * mu2) / d;
    return {c, FitError::none};
}

FitOutcome<PearsonType1Model> fit_type1(const Moments& m) {
    auto shape = shape_stats(m);
    if (!shape.ok()) return {std::nullopt, shape.error};
    const ShapeStats& s = *shape;

    const FamilyType type = select_type(s);
    const bool symmetric_limit =
        type == FamilyType::boundary && s.skewness == 0.0 && s.kappa <= 0.0;
    if (type != FamilyType::type_one && !symmetric_limit)
        return {std::nullopt, FitError::not_type_one};

    const double sk2 = s.skewness * s.skewness;
    const double h_den = 6.0 + 3.0 * sk2 - 2.0 * s.kurtosis;
    if (h_den == 0.0) return {std::nullopt, FitError::h_singularity};
    const double h = (6.0 * s.kurtosis - 6.0 * sk2 - 6.0) / h_den;

    const double radical = sk2 * (h + 2.0) * (h + 2.0) + 16.0 * h + 16.0;

    // Signed split of the exponent pair around h/2 - 1; the left exponent g1
    // takes the minus branch, which reproduces the closed-form Beta supports.
    double t = 0.0;
    if (s.skewness != 0.0) {
        if (!(radical > 0.0)) return {std::nullopt, FitError::unsupported_shape};
        t = 0.5 * h * (h + 2.0) * s.skewness / std::sqrt(radical);
    }
    const double g1 = 0.5 * h - 1.0 - t;
    const double g2 = 0.5 * h - 1.0 + t;
    if (!(g1 > -1.0) || !(g2 > -1.0))
        return {std::nullopt, FitError::exponent_out_of_range};
    if (!(radical > 0.0)) return {std::nullopt, FitError::unsupported_shape};

    const double span = 0.5 * std::sqrt(m.mu2 * radical);
    double c1, c2, m0;
    if (m.mu3 == 0.0) {
        c1 = c2 = 0.5 * span;
        m0 = m.mu1;
    } else {
        if (h == 2.0) return {std::nullopt, FitError::h_singularity};
        c1 = span * g1 / (g1 + g2);
        c2 = span - c1;
        m0 = m.mu1 - 0.5 * m.mu3 * (h + 2.0) / (m.mu2 * (h - 2.0));
    }
    if (!(c1 > 0.0) || !(c2 > 0.0))
        return {std::nullopt, FitError::nonpositive_half_width};

    // Normalisation in log space: the density is a shifted, scaled
    // Beta(g1+1, g2+1), so
    //   ln A0 = g1 ln c1 + g2 ln c2 - (g1+g2+1) ln(c1+c2) - ln B(g1+1, g2+1)
    // with the convention 0 * ln 0 = 0 when an exponent is exactly zero.
    auto xlogy = [](double x, double y) { return x == 0.0 ? 0.0 : x * std::log(y); };
    const double log_beta = std::lgamma(g1 + 1.0) + std::lgamma(g2 + 1.0) -
                            std::lgamma(g1 + g2 + 2.0);
    const double log_a0 = xlogy(g1, c1) + xlogy(g2, c2) -
                          (g1 + g2 + 1.0) * std::log(span) - log_beta;
    if (!std::isfinite(log_a0)) return {std::nullopt, FitError::unsupported_shape};

    PearsonType1Model model;
    model.m0 = m0;
    model.c1 = c1;
    model.c2 = c2;
    model.g1 = g1;
    model.g2 = g2;
    model.log_a0 = log_a0;
    model.a0_norm = std::exp(log_a0);
    model.h = h;
    model.stats = s;
    model.n = m.n;
    return {model, FitError::none};
}

double log_pdf(const PearsonType1Model& model, double x, double floor) {
    if (!(x > model.support_lower() && x < model.support_upper())) return floor;
    auto xlogy = [](double g, double y) { return g == 0.0 ? 0.0 : g * std::log(y); };
    const double u = (x - model.m0);
    return model.log_a0 + xlogy(model.g1, 1.0 + u / model.c1) +
           xlogy(model.g2, 1.0 - u / model.c2);
}

double pdf(const PearsonType1Model& model, double x) {
    if (!(x > model.support_lower() && x < model.support_upper())) return 0.0;
    return std::exp(log_pdf(model, x));
}

double normalization(const PearsonType1Model& model) {
    const double pull = 1e-12 * (model.c1 + model.c2);
    const double lo = model.support_lower() + pull;
    const double hi = model.support_upper() - pull;
    auto result = integrate([&](double x) { return pdf(model, x); }, lo, hi, 1e-9);
    if (!result.converged)
        throw std::runtime_error("normalization: quadrature did not converge");
    return result.value;
}

}  // namespace triage
