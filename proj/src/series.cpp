#include "pisp/series.hpp"

#include <algorithm>

namespace pisp {

void ComplexSeries::check() const {
    require(values.size() >= 2, "series: need at least 2 samples");
    require(k_min < k_max, "series: k_min must be < k_max");
    require(all_finite(values), "series: values must be finite");
}

void TimeTrace::check() const {
    require(t_max > 0.0, "trace: t_max must be positive");
    require(values.size() >= 2, "trace: need at least 2 samples");
    require(all_finite(values), "trace: values must be finite");
}

void RectRegion::check(bool upper_half) const {
    require(re_min < re_max, "region: re_min must be < re_max");
    require(im_min < im_max, "region: im_min must be < im_max");
    if (upper_half) require(im_min >= 0.0, "region: upper-half-plane search needs im_min >= 0");
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    require(n >= 2, "linspace: need at least 2 points");
    std::vector<double> v(n);
    const double h = (b - a) / double(n - 1);
    for (std::size_t i = 0; i < n; ++i) v[i] = a + h * double(i);
    v.back() = b;
    return v;
}

namespace {

double trapezoid_l2(const std::vector<cplx>& v, double h) {
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double w = (i == 0 || i + 1 == v.size()) ? 0.5 : 1.0;
        acc += w * std::norm(v[i]);
    }
    return std::sqrt(acc * h);
}

} // namespace

double l2_norm(const TimeTrace& tr) { return trapezoid_l2(tr.values, tr.dt()); }

double l2_distance(const TimeTrace& a, const TimeTrace& b) {
    require(a.size() == b.size() && std::abs(a.t_max - b.t_max) < 1e-12 * (1.0 + std::abs(a.t_max)),
            "l2_distance: trace grids differ");
    std::vector<cplx> d(a.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.values[i] - b.values[i];
    return trapezoid_l2(d, a.dt());
}

double l2_norm(const ComplexSeries& s) { return trapezoid_l2(s.values, s.dk()); }

double l2_distance(const ComplexSeries& a, const ComplexSeries& b) {
    require(a.size() == b.size(), "l2_distance: series sizes differ");
    std::vector<cplx> d(a.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.values[i] - b.values[i];
    return trapezoid_l2(d, a.dk());
}

double sup_distance(const ComplexSeries& a, const ComplexSeries& b) {
    require(a.size() == b.size(), "sup_distance: series sizes differ");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

bool all_finite(const std::vector<cplx>& v) {
    return std::all_of(v.begin(), v.end(),
                       [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

double hermitian_defect(const ComplexSeries& s) {
    require(s.size() % 2 == 1, "hermitian_defect: need odd sample count (k=0 on grid)");
    require(std::abs(s.k_min + s.k_max) < 1e-12 * (1.0 + std::abs(s.k_max)),
            "hermitian_defect: grid must be symmetric about k=0");
    const std::size_t n = s.size();
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        m = std::max(m, std::abs(s.values[n - 1 - i] - std::conj(s.values[i])));
    return m;
}

} // namespace pisp
