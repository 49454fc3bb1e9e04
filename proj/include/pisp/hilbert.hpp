#pragma once

#include <string>
#include <vector>

namespace pisp {

// Discrete Hilbert transform H(f)(k) = (1/pi) P.V. int f(tau)/(k - tau) dtau
// on a uniform grid, evaluated spectrally (multiplier -i sgn(omega); DC and
// Nyquist bins are zeroed). Input should decay or be windowed at the ends.
// A DC-dominated input is flagged in *warnings when provided.
std::vector<double> hilbert_transform(const std::vector<double>& f,
                                      std::vector<std::string>* warnings = nullptr);

// Tukey (tapered-cosine) window, taper covering `fraction` of each end.
std::vector<double> tukey_window(std::size_t n, double fraction);

} // namespace pisp
