#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hardy {

/// Exponential sum on two independent equispaced grids:
///
///   S_k = sum_j c_j exp(-i (w0 + k dw) (x0 + j dx)),   k = 0..K-1
///
/// The product dw * dx is unconstrained (fractional FFT). Uses the chirp
/// factorization  e^{-i a b} = e^{-i a^2/2} e^{-i b^2/2} e^{i (a-b)^2/2}
/// and one zero-padded cyclic convolution, O((L+K) log(L+K)).
std::vector<std::complex<double>> chirp_sum(std::span<const std::complex<double>> coeffs,
                                            double x0, double dx, double w0, double dw, int K);

} // namespace hardy
