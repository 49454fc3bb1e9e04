#include "pisp/hilbert.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>

#include "pisp/errors.hpp"

namespace pisp {

namespace {
// FFTW plan creation is not thread safe; execution of distinct plans is.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

std::vector<double> hilbert_transform(const std::vector<double>& f,
                                      std::vector<std::string>* warnings) {
    require(f.size() >= 4, "hilbert_transform: need at least 4 samples");
    const std::size_t n = f.size();

    if (warnings) {
        double mean = 0.0;
        for (double x : f) mean += x;
        mean /= double(n);
        double var = 0.0;
        for (double x : f) var += (x - mean) * (x - mean);
        const double sd = std::sqrt(var / double(n));
        if (std::abs(mean) > 5.0 * (sd + 1e-300))
            warnings->push_back("hilbert_transform: DC-dominated input; principal-value "
                                "convolution is ill-conditioned without detrending");
    }

    std::vector<double> in(f);
    const std::size_t nc = n / 2 + 1;
    std::vector<std::complex<double>> spec(nc);
    fftw_plan fwd, bwd;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fwd = fftw_plan_dft_r2c_1d(int(n), in.data(),
                                   reinterpret_cast<fftw_complex*>(spec.data()), FFTW_ESTIMATE);
    }
    fftw_execute(fwd);

    // -i * sgn(omega) on positive-frequency bins; DC and Nyquist go to zero.
    spec[0] = 0.0;
    for (std::size_t j = 1; j < nc; ++j) {
        if (n % 2 == 0 && j == n / 2) {
            spec[j] = 0.0;
        } else {
            spec[j] = std::complex<double>(0.0, -1.0) * spec[j];
        }
    }

    std::vector<double> out(n);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        bwd = fftw_plan_dft_c2r_1d(int(n), reinterpret_cast<fftw_complex*>(spec.data()),
                                   out.data(), FFTW_ESTIMATE);
    }
    fftw_execute(bwd);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
    }
    for (double& x : out) x /= double(n);
    return out;
}

std::vector<double> tukey_window(std::size_t n, double fraction) {
    require(fraction >= 0.0 && fraction <= 0.5, "tukey_window: fraction must be in [0, 0.5]");
    std::vector<double> w(n, 1.0);
    const std::size_t m = std::size_t(fraction * double(n));
    for (std::size_t i = 0; i < m; ++i) {
        const double x = 0.5 * (1.0 - std::cos(M_PI * double(i) / double(m)));
        w[i] = x;
        w[n - 1 - i] = x;
    }
    return w;
}

} // namespace pisp
