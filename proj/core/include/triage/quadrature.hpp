#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace triage {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    std::size_t intervals = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (positive abscissae).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
void gauss_kronrod_15(const F& f, double a, double b, double& result, double& error) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fsum = f(center - dx) + f(center + dx);
        resk += fsum * kWgk[i];
        if (i % 2 == 1) resg += fsum * kWg[i / 2];
    }
    result = resk * half;
    error = std::abs((resk - resg) * half);
}

}  // namespace detail

/// Globally adaptive quadrature: bisects the interval with the largest error
/// estimate until the estimated total error drops below abs_tol or the
/// interval budget is exhausted.
template <class F>
QuadratureResult integrate(const F& f, double lo, double hi, double abs_tol = 1e-9,
                           std::size_t max_intervals = 4096) {
    struct Piece {
        double a, b, value, error;
    };
    QuadratureResult out;
    if (!(lo < hi)) {
        out.converged = true;
        return out;
    }

    std::vector<Piece> pieces;
    Piece first{lo, hi, 0.0, 0.0};
    detail::gauss_kronrod_15(f, lo, hi, first.value, first.error);
    pieces.push_back(first);
    double total_error = first.error;

    while (total_error > abs_tol && pieces.size() < max_intervals) {
        auto worst = std::max_element(pieces.begin(), pieces.end(),
                                      [](const Piece& x, const Piece& y) {
                                          return x.error < y.error;
                                      });
        const Piece p = *worst;
        const double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b) break;  // interval no longer splittable
        Piece left{p.a, mid, 0.0, 0.0};
        Piece right{mid, p.b, 0.0, 0.0};
        detail::gauss_kronrod_15(f, left.a, left.b, left.value, left.error);
        detail::gauss_kronrod_15(f, right.a, right.b, right.value, right.error);
        total_error += left.error + right.error - p.error;
        *worst = left;
        pieces.push_back(right);
    }

    for (const auto& p : pieces) out.value += p.value;
    out.error_estimate = total_error;
    out.converged = total_error <= abs_tol;
    out.intervals = pieces.size();
    return out;
}

}  // namespace triage
