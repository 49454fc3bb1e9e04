#pragma once

#include <functional>

#include "pisp/series.hpp"

namespace pisp {

using VolterraKernel = std::function<cplx(double t, double tau)>;

// Second-kind Volterra solve lambda(t) = rhs(t) + int_0^t K(t,tau) lambda(tau) dtau
// by composite-trapezoid marching on the rhs grid. A homogeneous rhs yields the
// identically zero trace exactly. Throws when the step is too coarse for the
// kernel (|dt K(t,t)/2| approaching 1).
TimeTrace volterra_solve(const VolterraKernel& kernel, const TimeTrace& rhs);

} // namespace pisp
