#include "pisp/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace pisp {

namespace {

constexpr double kTwoPi = 6.283185307179586;

struct BoundarySample {
    cplx z;
    cplx tangent; // unit tangent times arc step
};

std::vector<BoundarySample> boundary_samples(const RectRegion& r, int total) {
    const double w = r.width(), h = r.height();
    const double perim = 2.0 * (w + h);
    auto edge_count = [&](double len) {
        return std::max(8, int(std::lround(double(total) * len / perim)));
    };
    const int nw = edge_count(w), nh = edge_count(h);
    std::vector<BoundarySample> out;
    out.reserve(std::size_t(2 * (nw + nh)));
    auto add_edge = [&](cplx a, cplx b, int n) {
        const cplx d = (b - a) / double(n);
        for (int i = 0; i < n; ++i) out.push_back({a + d * (double(i) + 0.5), d});
    };
    const cplx bl(r.re_min, r.im_min), br(r.re_max, r.im_min);
    const cplx tr(r.re_max, r.im_max), tl(r.re_min, r.im_max);
    add_edge(bl, br, nw);
    add_edge(br, tr, nh);
    add_edge(tr, tl, nw);
    add_edge(tl, bl, nh);
    return out;
}

// Winding quadrature of (1/2pi i) contour-int z^pow p'/p dz.
cplx contour_moment(const AnalyticFn& p, const RectRegion& region, const WindingOptions& opt,
                    int pow) {
    auto samples = boundary_samples(region, opt.boundary_samples);
    std::vector<double> mods(samples.size());
    std::vector<cplx> vals(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        vals[i] = p(samples[i].z);
        mods[i] = std::abs(vals[i]);
    }
    std::vector<double> sorted(mods);
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];
    const double floor_abs = opt.min_boundary_rel * (median + 1e-300);
    for (double m : mods)
        require(m > floor_abs,
                "count_zeros: boundary modulus below threshold (zero near contour); perturb the region");

    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const cplx dz = samples[i].tangent;
        const cplx step = dz * opt.fd_step_factor;
        const cplx deriv = (p(samples[i].z + step) - p(samples[i].z - step)) / (2.0 * step);
        cplx zfac(1.0, 0.0);
        for (int q = 0; q < pow; ++q) zfac *= samples[i].z;
        acc += zfac * deriv / vals[i] * dz;
    }
    return acc / cplx(0.0, kTwoPi);
}

int winding_count(const AnalyticFn& p, const RectRegion& region, const WindingOptions& opt) {
    const cplx w = contour_moment(p, region, opt, 0);
    const double n = w.real();
    const long r = std::lround(n);
    require(std::abs(n - double(r)) < 0.25 && std::abs(w.imag()) < 0.25,
            "count_zeros: winding number is not integral (zero near contour); perturb the region");
    require(r >= 0, "count_zeros: negative winding; input has poles inside the region");
    return int(r);
}

cplx newton_polish(const AnalyticFn& p, cplx z0, int multiplicity, int iters, double trust) {
    cplx z = z0;
    for (int it = 0; it < iters; ++it) {
        const double d = 1e-7 * (1.0 + std::abs(z));
        const cplx pv = p(z);
        const cplx dv = (p(z + d) - p(z - d)) / (2.0 * d);
        if (std::abs(dv) == 0.0) break;
        const cplx step = double(multiplicity) * pv / dv;
        if (!(std::isfinite(step.real()) && std::isfinite(step.imag()))) break;
        const cplx zn = z - step;
        if (std::abs(zn - z0) > trust) break; // keep the contour estimate
        z = zn;
        if (std::abs(step) < 1e-13 * (1.0 + std::abs(z))) break;
    }
    return std::abs(p(z)) <= std::abs(p(z0)) ? z : z0;
}

} // namespace

int count_zeros(const AnalyticFn& p, const RectRegion& region, const WindingOptions& opt) {
    region.check();
    return winding_count(p, region, opt);
}

std::vector<LocatedZero> find_zeros(const AnalyticFn& p, const RectRegion& region,
                                    const ZeroSearchOptions& opt) {
    region.check();
    std::vector<LocatedZero> found;
    std::deque<std::pair<RectRegion, int>> queue;

    auto robust_count = [&](const RectRegion& r) { return winding_count(p, r, opt.winding); };

    queue.push_back({region, robust_count(region)});
    int total = queue.back().second;
    require(total <= opt.max_zeros, "find_zeros: zero count exceeds the configured cap");

    const double split_fracs[] = {0.5, 0.46, 0.54, 0.42, 0.58, 0.38, 0.62};

    while (!queue.empty()) {
        auto [r, n] = queue.front();
        queue.pop_front();
        if (n == 0) continue;
        const double diam = std::max(r.width(), r.height());
        const bool terminal = (n == 1 && diam < 1e-2 * (1.0 + std::abs(r.re_max))) ||
                              diam < opt.cluster_radius;
        if (terminal) {
            const cplx centroid = contour_moment(p, r, opt.winding, 1) / double(n);
            const cplx z = newton_polish(p, centroid, n, opt.newton_iterations, 4.0 * diam + 1e-6);
            found.push_back({z, n});
            continue;
        }
        const bool split_re = r.width() >= r.height();
        bool done = false;
        for (double frac : split_fracs) {
            RectRegion a = r, b = r;
            if (split_re) {
                const double cut = r.re_min + frac * r.width();
                a.re_max = cut;
                b.re_min = cut;
            } else {
                const double cut = r.im_min + frac * r.height();
                a.im_max = cut;
                b.im_min = cut;
            }
            try {
                const int na = robust_count(a);
                const int nb = robust_count(b);
                if (na + nb == n) {
                    queue.push_back({a, na});
                    queue.push_back({b, nb});
                    done = true;
                    break;
                }
            } catch (const Error&) {
                continue; // zero on this cut; try another fraction
            }
        }
        require(done, "find_zeros: failed to isolate zeros (repeated near-cut failures)");
    }

    // Merge clusters closer than the cluster radius.
    std::vector<LocatedZero> merged;
    for (const auto& z : found) {
        bool absorbed = false;
        for (auto& m : merged) {
            if (std::abs(m.position - z.position) < opt.cluster_radius) {
                m.position = (m.position * double(m.multiplicity) +
                              z.position * double(z.multiplicity)) /
                             double(m.multiplicity + z.multiplicity);
                m.multiplicity += z.multiplicity;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(z);
    }
    std::sort(merged.begin(), merged.end(), [](const LocatedZero& a, const LocatedZero& b) {
        if (a.position.real() != b.position.real()) return a.position.real() < b.position.real();
        return a.position.imag() < b.position.imag();
    });
    return merged;
}

} // namespace pisp
