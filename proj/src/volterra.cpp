#include "pisp/volterra.hpp"

#include <cmath>

namespace pisp {

TimeTrace volterra_solve(const VolterraKernel& kernel, const TimeTrace& rhs) {
    rhs.check();
    const std::size_t n = rhs.size();
    const double dt = rhs.dt();
    TimeTrace out(rhs.t_max, n);
    out.values[0] = rhs.values[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double t = rhs.t_at(i);
        cplx acc = 0.5 * kernel(t, 0.0) * out.values[0];
        for (std::size_t j = 1; j < i; ++j) acc += kernel(t, rhs.t_at(j)) * out.values[j];
        const cplx diag = 0.5 * dt * kernel(t, t);
        require(std::abs(diag) < 0.5,
                "volterra_solve: step too coarse for the kernel's diagonal scale "
                "(|dt K(t,t)/2| >= 0.5); refine the grid");
        out.values[i] = (rhs.values[i] + dt * acc) / (1.0 - diag);
    }
    return out;
}

} // namespace pisp
