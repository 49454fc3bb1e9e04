#pragma once

namespace pisp {

// Sine integral Si(x) = int_0^x sin(u)/u du, x >= 0.
double sine_integral(double x);

// Complementary form pi/2 - Si(x), computed without cancellation for large x.
double sine_integral_tail(double x);

// Heaviside step with the symmetric convention H(0) = 1/2.
inline double heaviside(double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? 0.0 : 0.5); }

} // namespace pisp
