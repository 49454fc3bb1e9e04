#pragma once

#include <functional>
#include <vector>

#include "pisp/series.hpp"

namespace pisp {

using AnalyticFn = std::function<cplx(cplx)>;

struct WindingOptions {
    int boundary_samples = 4096;   // total samples around the rectangle
    double fd_step_factor = 0.1;   // derivative step as a fraction of boundary spacing
    double min_boundary_rel = 1e-9; // |p| floor relative to the boundary median
};

// Number of zeros (with multiplicity) of an analytic function inside a
// rectangle, by winding-number quadrature of p'/p over the boundary with
// finite-difference derivatives. Throws when a zero sits too close to the
// contour (boundary modulus below threshold, or non-integral winding).
int count_zeros(const AnalyticFn& p, const RectRegion& region, const WindingOptions& opt = {});

struct LocatedZero {
    cplx position;
    int multiplicity = 1;
};

struct ZeroSearchOptions {
    WindingOptions winding{};
    double cell_tolerance = 1e-6;   // stop subdividing below this cell diameter
    double cluster_radius = 1e-3;   // merge zeros closer than this
    int max_zeros = 64;             // safety cap on the total count
    int newton_iterations = 30;
};

// Locates all zeros inside the region by recursive bisection on the winding
// count, first-moment centroid estimates, and Newton polish. Multiple zeros
// are reported once with their multiplicity.
std::vector<LocatedZero> find_zeros(const AnalyticFn& p, const RectRegion& region,
                                    const ZeroSearchOptions& opt = {});

} // namespace pisp
