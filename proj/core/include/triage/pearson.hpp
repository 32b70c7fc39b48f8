#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace triage {

/// First four central moments of a sample, population convention (divide by n).
struct Moments {
    double mu1 = 0.0;  // mean
    double mu2 = 0.0;  // variance
    double mu3 = 0.0;
    double mu4 = 0.0;
    std::size_t n = 0;
};

struct ShapeStats {
    double skewness = 0.0;  // mu3 / mu2^(3/2)
    double kurtosis = 0.0;  // mu4 / mu2^2, non-excess
    double kappa = 0.0;     // family selection criterion
};

/// Pearson family members distinguished by kappa.  Only Type I is fittable;
/// the others are reported for diagnostics.
enum class FamilyType { type_one, type_four, type_six, boundary };

/// Tolerance around the kappa = 0 and kappa = 1 family boundaries.
inline constexpr double kKappaEpsilon = 1e-9;

FamilyType select_type(const ShapeStats& s);
std::string_view to_string(FamilyType t);

/// Failure reasons shared by the moment pipeline and cluster-level fitting.
enum class FitError {
    none,
    empty_sample,
    too_few_samples,
    zero_variance,
    too_few_distinct,
    kappa_denominator_zero,
    not_type_one,
    h_singularity,
    unsupported_shape,
    exponent_out_of_range,
    nonpositive_half_width,
};

std::string_view to_string(FitError e);

template <class T>
struct FitOutcome {
    std::optional<T> value;
    FitError error = FitError::none;

    bool ok() const { return value.has_value(); }
    const T& operator*() const { return *value; }
    const T* operator->() const { return &*value; }
};

/// Coefficients of the density relation
///   d/dx ln f(x) = -(b + t) / (a0 + a1 t + a2 t^2),   t = x - mu1.
/// In this mean-centred convention a1 equals b; both fields are kept so the
/// quadratic can be evaluated directly.
struct PearsonOdeCoeffs {
    double b = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
};

/// Fitted Type-I density
///   f(x) = A0 (1 + (x-m0)/c1)^g1 (1 - (x-m0)/c2)^g2
/// on the open support (m0-c1, m0+c2).
struct PearsonType1Model {
    double m0 = 0.0;       // stationary point of the density (mode or antimode)
    double c1 = 0.0;       // left half-width, > 0
    double c2 = 0.0;       // right half-width, > 0
    double g1 = 0.0;       // left exponent, > -1
    double g2 = 0.0;       // right exponent, > -1
    double a0_norm = 0.0;  // density value at m0
    double log_a0 = 0.0;
    double h = 0.0;        // auxiliary: g1 + g2 + 2
    ShapeStats stats;
    std::size_t n = 0;     // sample count behind the moments

    double support_lower() const { return m0 - c1; }
    double support_upper() const { return m0 + c2; }
};

/// Throws std::invalid_argument on an empty sample.
Moments central_moments(std::span<const double> samples);

/// Fails with zero_variance or kappa_denominator_zero.
FitOutcome<ShapeStats> shape_stats(const Moments& m);

/// Standard-form coefficients from the first four moments.  Fails with
/// zero_variance or a vanishing common denominator (unsupported_shape).
FitOutcome<PearsonOdeCoeffs> ode_coefficients(const Moments& m);

/// Method-of-moments Type-I fit.  Requires kappa < 0, or the symmetric
/// boundary case (skewness exactly 0, kappa <= 0) which fits as the
/// symmetric limit.
FitOutcome<PearsonType1Model> fit_type1(const Moments& m);

/// Value returned by log_pdf outside the open support; roughly the log of
/// the smallest positive normal double, so likelihood sums stay finite.
inline constexpr double kLogFloor = -690.0;

double log_pdf(const PearsonType1Model& model, double x, double floor = kLogFloor);

/// Zero outside the open support; evaluated in log space inside it.
double pdf(const PearsonType1Model& model, double x);

/// Adaptive-quadrature integral of the density over its support with the
/// endpoints pulled in by 1e-12 * (c1 + c2).  Throws std::runtime_error if
/// the quadrature does not converge within its interval budget.
double normalization(const PearsonType1Model& model);

}  // namespace triage
