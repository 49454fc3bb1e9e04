#pragma once

#include "pisp/series.hpp"

namespace pisp {

// Controls the large-|k| truncation handling of the synthesis quadrature.
// When enabled, p is fitted to sum_m c_m k^-m on the outer fraction of the
// grid and the |k| > k_max remainder of the transform integral is added in
// closed form. Without it the truncation error is O(1/k_max) near jumps.
struct SynthesisOptions {
    bool tail_correction = false;
    int tail_order = 3;              // number of k^-m terms, 1..4
    double tail_fit_fraction = 0.15; // fit window = outermost fraction of the grid
    bool hermitian_input = false;    // input on [0, k_max], extend by p(-k) = conj p(k)
};

// v(t) = (1/2pi) int p(k) e^{-ikt} dk over the sampled grid, evaluated on a
// uniform t-grid over [0, t_max]. Piecewise-parabolic (Filon) panels with
// exact oscillatory moments, so accuracy does not degrade with k_max * t.
// p must be sampled on a symmetric grid [-k_max, k_max] with an odd sample
// count, or on [0, k_max] with hermitian_input set.
TimeTrace fourier_synthesize(const ComplexSeries& p, double t_max, std::size_t n_t,
                             const SynthesisOptions& opt = {});

// F(v)(k) = int_0^{t_max} v(t) e^{ikt} dt on a uniform k-grid.
ComplexSeries fourier_forward(const TimeTrace& v, double k_min, double k_max, std::size_t n_k);

// Closed form of the inverse transform of 1/(k - conj(d))^s for d in the
// upper half plane: H(t) (-i)^s / (s-1)! t^{s-1} exp(-i conj(d) t).
cplx pole_inverse_transform(cplx d, int s, double t);

} // namespace pisp
