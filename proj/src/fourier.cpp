#include "pisp/fourier.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "pisp/special.hpp"

namespace pisp {

namespace {

constexpr double kPi = 3.141592653589793;

// Exact panel moments for int_{-h}^{h} u^j e^{-i u t} du, j = 0,1,2.
// I0 and I2 are real and even in t, I1 is imaginary and odd in t.
struct PanelMoments {
    double i0;
    double i1_im; // I1 = i * i1_im
    double i2;
};

PanelMoments panel_moments(double h, double t) {
    PanelMoments m{};
    const double theta = h * t;
    if (std::abs(theta) < 0.1) {
        const double th2 = theta * theta;
        m.i0 = 2.0 * h * (1.0 - th2 / 6.0 + th2 * th2 / 120.0 - th2 * th2 * th2 / 5040.0);
        m.i1_im = 2.0 * h * h *
                  (-theta / 3.0 + theta * th2 / 30.0 - theta * th2 * th2 / 840.0 +
                   theta * th2 * th2 * th2 / 45360.0);
        m.i2 = 2.0 * h * h * h * (1.0 / 3.0 - th2 / 10.0 + th2 * th2 / 168.0 - th2 * th2 * th2 / 6480.0);
    } else {
        const double s = std::sin(theta), c = std::cos(theta);
        m.i0 = 2.0 * s / t;
        m.i1_im = 2.0 * (theta * c - s) / (t * t);
        m.i2 = 2.0 * h * h * s / t - 4.0 * (s - theta * c) / (t * t * t);
    }
    return m;
}

// int_a^b p(k) e^{sign * i k t} dk over parabolic panels on a uniform grid.
// Values must have odd length (an even number of half-steps).
cplx filon_integral(const std::vector<cplx>& f, double a, double h, double t, int sign) {
    const std::size_t n = f.size();
    const PanelMoments m = panel_moments(h, t);
    // e^{-i m_j t} with m_j the panel centers, stepped by e^{-i 2h t}
    const double st = double(sign) * t;
    cplx phase = std::polar(1.0, st * (a + h));
    const cplx step = std::polar(1.0, st * 2.0 * h);
    // Moments above are for e^{-iut}; for e^{+iut} they conjugate, flipping I1.
    const cplx mom1 = cplx(0.0, sign < 0 ? m.i1_im : -m.i1_im);
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j + 2 < n; j += 2) {
        const cplx fm = f[j], f0 = f[j + 1], fp = f[j + 2];
        const cplx b = (fp - fm) / (2.0 * h);
        const cplx c = (fp - 2.0 * f0 + fm) / (2.0 * h * h);
        acc += phase * (f0 * m.i0 + b * mom1 + c * m.i2);
        phase *= step;
    }
    return acc;
}

// Least-squares fit of p(k) ~ sum_{m=1..order} c_m k^{-m} on the outermost
// grid samples. For hermitian input only the positive end exists; the
// coefficients are then projected onto the hermitian constraint
// (-1)^m c_m = conj(c_m).
std::vector<cplx> fit_tail(const ComplexSeries& p, int order, double fraction, bool hermitian) {
    const double k_hi = std::abs(p.k_max);
    const double k_lo = (1.0 - fraction) * k_hi;
    std::vector<double> ks;
    std::vector<cplx> vs;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double k = p.k_at(i);
        if (std::abs(k) >= k_lo) {
            ks.push_back(k);
            vs.push_back(p.values[i]);
        }
    }
    require(ks.size() >= std::size_t(2 * order), "tail fit: too few samples in the fit window");
    Eigen::MatrixXcd A(ks.size(), order);
    Eigen::VectorXcd b(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) {
        double pw = 1.0;
        for (int m = 0; m < order; ++m) {
            pw /= ks[i];
            A(Eigen::Index(i), m) = cplx(pw, 0.0);
        }
        b(Eigen::Index(i)) = vs[i];
    }
    Eigen::VectorXcd c = A.colPivHouseholderQr().solve(b);
    std::vector<cplx> out(order);
    for (int m = 0; m < order; ++m) {
        cplx cm = c(m);
        if (hermitian) {
            const double sgn = (m % 2 == 0) ? -1.0 : 1.0; // m index 0 is k^-1
            cm = 0.5 * (cm + sgn * std::conj(cm));
        }
        out[m] = cm;
    }
    return out;
}

// Closed-form contribution of int_{|k|>K} sum_m c_m k^{-m} e^{-ikt} dk / 2pi,
// valid for t >= 0. Uses the recurrence on the half-line tail integrals
// T_m = int_K^inf k^{-m} e^{-ikt} dk combined with the mirrored tail, which
// leaves only Im(T_odd) and Re(T_even); the cosine-integral parts cancel.
cplx tail_value(const std::vector<cplx>& c, double K, double t) {
    const double x = K * t;
    // S = pi/2 - Si(x); at t = 0 the odd-term jump takes its symmetric value 0.
    const double S = (t == 0.0) ? 0.0 : sine_integral_tail(x);
    const double cs = std::cos(x), sn = std::sin(x);
    double A = -S; // Im T_1
    double Km = K; // K^m
    cplx acc = c.size() > 0 ? c[0] * cplx(0.0, 2.0 * A) : cplx(0.0, 0.0);
    for (std::size_t m = 1; m < c.size(); ++m) {
        const double dm = double(m);
        if (m % 2 == 1) {
            A = cs / (dm * Km) + (t / dm) * A; // Re T_{m+1}
            acc += c[m] * (2.0 * A);
        } else {
            A = -sn / (dm * Km) - (t / dm) * A; // Im T_{m+1}
            acc += c[m] * cplx(0.0, 2.0 * A);
        }
        Km *= K;
    }
    return acc / (2.0 * kPi);
}

} // namespace

TimeTrace fourier_synthesize(const ComplexSeries& p, double t_max, std::size_t n_t,
                             const SynthesisOptions& opt) {
    p.check();
    require(n_t >= 2, "fourier_synthesize: need at least 2 output samples");
    require(p.size() % 2 == 1, "fourier_synthesize: need an odd sample count (parabolic panels)");
    const bool half = opt.hermitian_input;
    if (half) {
        require(std::abs(p.k_min) < 1e-12 * p.k_max,
                "fourier_synthesize: hermitian input must start at k = 0");
    } else {
        require(std::abs(p.k_min + p.k_max) < 1e-12 * (1.0 + std::abs(p.k_max)),
                "fourier_synthesize: grid must be symmetric about k = 0 (non-uniform or "
                "one-sided grids are rejected)");
    }
    const double k_hi = p.k_max;
    const double dt = t_max / double(n_t - 1);
    require(dt <= kPi / k_hi * (1.0 + 1e-9),
            "fourier_synthesize: t-grid violates Nyquist (dt > pi/k_max)");

    std::vector<cplx> tail_c;
    if (opt.tail_correction) {
        require(opt.tail_order >= 1 && opt.tail_order <= 4, "tail order must be in 1..4");
        tail_c = fit_tail(p, opt.tail_order, opt.tail_fit_fraction, half);
    }

    TimeTrace out(t_max, n_t);
    const double h = p.dk();
    for (std::size_t it = 0; it < n_t; ++it) {
        const double t = dt * double(it);
        cplx val;
        if (half) {
            const cplx pos = filon_integral(p.values, 0.0, h, t, -1);
            val = cplx(pos.real() / kPi, 0.0);
        } else {
            val = filon_integral(p.values, p.k_min, h, t, -1) / (2.0 * kPi);
        }
        if (!tail_c.empty()) val += tail_value(tail_c, k_hi, t);
        out.values[it] = val;
    }
    return out;
}

ComplexSeries fourier_forward(const TimeTrace& v, double k_min, double k_max, std::size_t n_k) {
    v.check();
    require(n_k >= 2, "fourier_forward: need at least 2 output samples");
    require(v.size() % 2 == 1, "fourier_forward: need an odd sample count (parabolic panels)");
    const double h = v.dt();
    std::vector<cplx> out(n_k);
    const double dk = (k_max - k_min) / double(n_k - 1);
    for (std::size_t ik = 0; ik < n_k; ++ik) {
        const double k = k_min + dk * double(ik);
        out[ik] = filon_integral(v.values, 0.0, h, k, +1);
    }
    return ComplexSeries(k_min, k_max, std::move(out));
}

cplx pole_inverse_transform(cplx d, int s, double t) {
    require(d.imag() > 0.0, "pole_inverse_transform: pole parameter must lie in the upper half plane");
    require(s >= 1, "pole_inverse_transform: order must be >= 1");
    const double H = heaviside(t);
    if (H == 0.0) return cplx(0.0, 0.0);
    double fact = 1.0;
    for (int j = 2; j < s; ++j) fact *= double(j);
    const cplx mi(0.0, -1.0);
    cplx pw(1.0, 0.0);
    for (int j = 0; j < s; ++j) pw *= mi;
    const double ts = (s == 1) ? 1.0 : std::pow(t, s - 1);
    return H * pw / fact * ts * std::exp(mi * std::conj(d) * t);
}

} // namespace pisp
