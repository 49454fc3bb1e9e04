#include <doctest.h>

#include <cmath>
#include <random>

#include "pisp/fourier.hpp"
#include "pisp/special.hpp"

using namespace pisp;

namespace {

const cplx I(0.0, 1.0);

// Independent quadrature oracle for Si(x): composite Simpson on sin(u)/u.
double si_oracle(double x) {
    const int n = 20000; // even
    const double h = x / n;
    auto f = [](double u) { return u == 0.0 ? 1.0 : std::sin(u) / u; };
    double acc = f(0.0) + f(x);
    for (int i = 1; i < n; ++i) acc += f(i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

ComplexSeries rational_pole_series(cplx d, int s, double k_max, std::size_t n) {
    return sample_series(-k_max, k_max, n, [&](double k) {
        return 1.0 / std::pow(cplx(k, 0.0) - std::conj(d), s);
    });
}

} // namespace

TEST_CASE("sine integral matches quadrature oracle across the series/asymptotic split") {
    for (double x : {0.3, 2.0, 7.5, 15.9, 16.1, 40.0, 300.0, 997.0}) {
        CHECK(sine_integral(x) == doctest::Approx(si_oracle(x)).epsilon(1e-9));
    }
    CHECK(sine_integral(0.0) == 0.0);
    CHECK(sine_integral(-2.0) == doctest::Approx(-si_oracle(2.0)).epsilon(1e-12));
    CHECK(sine_integral_tail(1000.0) ==
          doctest::Approx(M_PI / 2 - si_oracle(1000.0)).epsilon(1e-6));
}

TEST_CASE("pole_inverse_transform closed form") {
    // d = i, s = 1, t = 1 -> -i e^{-1}
    const cplx v1 = pole_inverse_transform(I, 1, 1.0);
    CHECK(std::abs(v1 - (-I * std::exp(-1.0))) < 1e-15);
    // t < 0 -> 0
    CHECK(pole_inverse_transform(I, 1, -0.5) == cplx(0.0, 0.0));
    // H(0) = 1/2 convention
    CHECK(std::abs(pole_inverse_transform(I, 1, 0.0) - (-I * 0.5)) < 1e-15);
    // d = 1+i, s = 2, t = 1 -> -e^{-1}(cos 1 - i sin 1)
    const cplx v2 = pole_inverse_transform(cplx(1.0, 1.0), 2, 1.0);
    const cplx want = -std::exp(-1.0) * cplx(std::cos(1.0), -std::sin(1.0));
    CHECK(std::abs(v2 - want) < 1e-15);
    CHECK(std::abs(v2 - cplx(-0.1988, 0.3096)) < 5e-4);
    CHECK_THROWS(pole_inverse_transform(cplx(1.0, -0.5), 1, 1.0));
    CHECK_THROWS(pole_inverse_transform(I, 0, 1.0));
}

TEST_CASE("fourier_synthesize reproduces the pole transform examples") {
    // p(k) = 1/(k+i) = 1/(k - conj(i)) on |k| <= 200, t = 1
    auto p1 = rational_pole_series(I, 1, 200.0, 16385);
    auto v1 = fourier_synthesize(p1, 2.0, 201);
    const cplx want1 = -I * std::exp(-1.0);
    CHECK(std::abs(v1.values[100] - want1) < 1e-3);

    // Same with the tail correction: much tighter.
    SynthesisOptions tail;
    tail.tail_correction = true;
    auto v1t = fourier_synthesize(p1, 2.0, 201, tail);
    CHECK(std::abs(v1t.values[100] - want1) < 1e-6);

    // p(k) = 1/(k+i)^2, t = 2 -> -2 e^{-2}
    auto p2 = rational_pole_series(I, 2, 200.0, 16385);
    auto v2 = fourier_synthesize(p2, 2.0, 201);
    CHECK(std::abs(v2.values[200] - cplx(-2.0 * std::exp(-2.0), 0.0)) < 1e-3);

    // p == 0 -> v == 0
    auto z = sample_series(-50.0, 50.0, 1001, [](double) { return cplx(0.0, 0.0); });
    auto vz = fourier_synthesize(z, 1.0, 101);
    for (auto& x : vz.values) CHECK(std::abs(x) == 0.0);
}

TEST_CASE("pole transform lattice: L2([0,5]) <= 1e-3 at k_max = 200") {
    SynthesisOptions tail;
    tail.tail_correction = true;
    const std::size_t n_t = 1024 + 1;
    for (int s : {1, 2, 3}) {
        for (cplx d : {cplx(0.0, 1.0), cplx(1.0, 1.0), cplx(2.0, 0.5)}) {
            auto p = rational_pole_series(d, s, 200.0, 16385);
            auto v = fourier_synthesize(p, 5.0, n_t, tail);
            TimeTrace ref(5.0, n_t);
            for (std::size_t i = 0; i < n_t; ++i)
                ref.values[i] = pole_inverse_transform(d, s, ref.t_at(i));
            const double err = l2_distance(v, ref);
            INFO("s=", s, " d=", d.real(), "+", d.imag(), "i err=", err);
            CHECK(err <= 1e-3);
        }
    }
}

TEST_CASE("synthesis is linear") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto pa = rational_pole_series(cplx(0.5, 1.0), 1, 40.0, 513);
    auto pb = rational_pole_series(cplx(-1.0, 2.0), 2, 40.0, 513);
    const cplx a(u(rng), u(rng));
    ComplexSeries mix = pa;
    for (std::size_t i = 0; i < mix.size(); ++i)
        mix.values[i] = a * pa.values[i] + pb.values[i];
    auto va = fourier_synthesize(pa, 3.0, 101);
    auto vb = fourier_synthesize(pb, 3.0, 101);
    auto vm = fourier_synthesize(mix, 3.0, 101);
    for (std::size_t i = 0; i < vm.size(); ++i)
        CHECK(std::abs(vm.values[i] - (a * va.values[i] + vb.values[i])) < 1e-12);
}

TEST_CASE("forward/inverse round trip on a band-limited causal bump") {
    const double t_max = 4.0;
    const std::size_t n_t = 2049;
    TimeTrace v(t_max, n_t);
    for (std::size_t i = 0; i < n_t; ++i) {
        const double t = v.t_at(i);
        v.values[i] = std::exp(-std::pow((t - 2.0) / 0.25, 2));
    }
    auto spec = fourier_forward(v, -60.0, 60.0, 4097);
    auto back = fourier_synthesize(spec, t_max, n_t);
    CHECK(l2_distance(back, v) / l2_norm(v) < 1e-8);
}

TEST_CASE("hermitian half-grid input gives a real trace matching the full grid") {
    // p = F(e^{-t} H(t)) = 1/(1 - ik), hermitian.
    auto full = sample_series(-150.0, 150.0, 12289,
                              [](double k) { return 1.0 / cplx(1.0, -k); });
    auto half = sample_series(0.0, 150.0, 6145, [](double k) { return 1.0 / cplx(1.0, -k); });
    SynthesisOptions opt_half;
    opt_half.hermitian_input = true;
    opt_half.tail_correction = true;
    SynthesisOptions opt_full;
    opt_full.tail_correction = true;
    auto vf = fourier_synthesize(full, 3.0, 301, opt_full);
    auto vh = fourier_synthesize(half, 3.0, 301, opt_half);
    for (std::size_t i = 0; i < vf.size(); ++i) {
        CHECK(std::abs(vh.values[i] - vf.values[i]) < 2e-5);
        CHECK(std::abs(vh.values[i].imag()) == 0.0);
    }
    // And against the closed form e^{-t} away from the jump.
    for (std::size_t i = 30; i < vh.size(); ++i) {
        CHECK(std::abs(vh.values[i].real() - std::exp(-vh.t_at(i))) < 2e-4);
    }
}

TEST_CASE("grid validation errors") {
    auto p = rational_pole_series(I, 1, 100.0, 1025);
    // Nyquist violation: dt = 0.1 > pi/100
    CHECK_THROWS(fourier_synthesize(p, 10.0, 11));
    // Even sample count (no parabolic panels)
    auto even = sample_series(-100.0, 100.0, 1024, [](double) { return cplx(1.0, 0.0); });
    CHECK_THROWS(fourier_synthesize(even, 1.0, 101));
    // One-sided grid without the hermitian flag
    auto onesided = sample_series(10.0, 100.0, 1025, [](double) { return cplx(1.0, 0.0); });
    CHECK_THROWS(fourier_synthesize(onesided, 1.0, 101));
}
