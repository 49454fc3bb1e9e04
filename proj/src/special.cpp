#include "pisp/special.hpp"

#include <cmath>

namespace pisp {

namespace {

constexpr double kPiHalf = 1.5707963267948966;

// Auxiliary asymptotic sums: Si(x) = pi/2 - f(x) cos x - g(x) sin x with
// f ~ (1/x) sum (-1)^n (2n)!/x^{2n}, g ~ (1/x^2) sum (-1)^n (2n+1)!/x^{2n}.
// Truncated at the smallest term; adequate beyond the series crossover.
void asymptotic_fg(double x, double& f, double& g) {
    const double x2 = x * x;
    double term_f = 1.0, term_g = 1.0;
    double sf = 0.0, sg = 0.0;
    double sign = 1.0;
    double fact_even = 1.0; // (2n)!
    double fact_odd = 1.0;  // (2n+1)!
    double pow_x = 1.0;     // x^{2n}
    double prev_f = 1e300, prev_g = 1e300;
    for (int n = 0; n < 12; ++n) {
        if (n > 0) {
            fact_even *= double(2 * n) * double(2 * n - 1);
            fact_odd *= double(2 * n + 1) * double(2 * n);
            pow_x *= x2;
        } else {
            fact_odd = 1.0;
        }
        term_f = fact_even / pow_x;
        term_g = fact_odd / pow_x;
        if (term_f > prev_f || term_g > prev_g) break; // divergence onset
        sf += sign * term_f;
        sg += sign * term_g;
        prev_f = term_f;
        prev_g = term_g;
        sign = -sign;
    }
    f = sf / x;
    g = sg / x2;
}

} // namespace

double sine_integral(double x) {
    if (x < 0.0) return -sine_integral(-x);
    if (x == 0.0) return 0.0;
    if (x <= 16.0) {
        // Taylor series sum (-1)^n x^{2n+1} / ((2n+1)(2n+1)!)
        const double x2 = x * x;
        double term = x;
        double sum = 0.0;
        for (int n = 0;; ++n) {
            sum += term / double(2 * n + 1);
            const double next = -term * x2 / (double(2 * n + 2) * double(2 * n + 3));
            if (std::abs(next) < 1e-18 * (1.0 + std::abs(sum))) break;
            term = next;
            if (n > 60) break;
        }
        return sum;
    }
    return kPiHalf - sine_integral_tail(x);
}

double sine_integral_tail(double x) {
    if (x <= 16.0) return kPiHalf - sine_integral(x);
    double f = 0.0, g = 0.0;
    asymptotic_fg(x, f, g);
    return f * std::cos(x) + g * std::sin(x);
}

} // namespace pisp
