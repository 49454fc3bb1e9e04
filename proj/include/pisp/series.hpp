#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "pisp/errors.hpp"

namespace pisp {

using cplx = std::complex<double>;

// Complex samples on a uniform frequency grid, endpoints inclusive.
struct ComplexSeries {
    double k_min = 0.0;
    double k_max = 0.0;
    std::vector<cplx> values;

    ComplexSeries() = default;
    ComplexSeries(double kmin, double kmax, std::vector<cplx> v)
        : k_min(kmin), k_max(kmax), values(std::move(v)) {}

    std::size_t size() const { return values.size(); }
    double dk() const { return (k_max - k_min) / double(values.size() - 1); }
    double k_at(std::size_t i) const { return k_min + dk() * double(i); }

    void check() const;
};

// Samples on a uniform time grid over [0, t_max], endpoints inclusive.
struct TimeTrace {
    double t_max = 0.0;
    std::vector<cplx> values;

    TimeTrace() = default;
    TimeTrace(double tmax, std::size_t n) : t_max(tmax), values(n, cplx(0.0, 0.0)) {}
    TimeTrace(double tmax, std::vector<cplx> v) : t_max(tmax), values(std::move(v)) {}

    std::size_t size() const { return values.size(); }
    double dt() const { return t_max / double(values.size() - 1); }
    double t_at(std::size_t i) const { return dt() * double(i); }

    void check() const;
};

// Axis-aligned rectangle in the complex plane, used as a zero-search window.
struct RectRegion {
    double re_min = 0.0;
    double re_max = 0.0;
    double im_min = 0.0;
    double im_max = 0.0;

    void check(bool upper_half = false) const;
    double width() const { return re_max - re_min; }
    double height() const { return im_max - im_min; }
    bool contains(cplx z) const {
        return z.real() > re_min && z.real() < re_max && z.imag() > im_min && z.imag() < im_max;
    }
};

// Uniform grid helper, endpoints inclusive.
std::vector<double> linspace(double a, double b, std::size_t n);

// Builds a series by sampling f on a uniform grid over [k_min, k_max].
template <typename F>
ComplexSeries sample_series(double k_min, double k_max, std::size_t n, F&& f) {
    std::vector<cplx> v(n);
    const double h = (k_max - k_min) / double(n - 1);
    for (std::size_t i = 0; i < n; ++i) v[i] = f(k_min + h * double(i));
    return ComplexSeries(k_min, k_max, std::move(v));
}

// Discrete L2 norm with trapezoid weights over the trace grid.
double l2_norm(const TimeTrace& tr);
double l2_distance(const TimeTrace& a, const TimeTrace& b);
double l2_norm(const ComplexSeries& s);
double l2_distance(const ComplexSeries& a, const ComplexSeries& b);

// Max |a_i - b_i| over samples.
double sup_distance(const ComplexSeries& a, const ComplexSeries& b);

bool all_finite(const std::vector<cplx>& v);
bool all_finite(const std::vector<double>& v);

// Max |p(-k) - conj(p(k))| over the grid; requires a symmetric grid
// (k_min = -k_max, odd sample count).
double hermitian_defect(const ComplexSeries& s);

} // namespace pisp
