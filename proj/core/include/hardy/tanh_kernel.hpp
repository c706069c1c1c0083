#pragma once

// Scalar kernels shared by the interpolation formula, the baselines and the
// potential diagnostics. All of them stay finite for large arguments.

namespace hardy {

/// log cosh(y) without overflow.
double log_cosh(double y);

/// log |tanh(y)|; -inf at y == 0.
double log_abs_tanh(double y);

/// log sech^2(y) = -2 log cosh(y).
double log_sech2(double y);

/// Extended-precision variants for accumulating long products.
long double log_cosh(long double y);
long double log_abs_tanh(long double y);
long double log_sech2(long double y);

/// pi / (4 d), the scale of the strip Green kernel tanh(pi (x - a) / (4 d)).
double strip_scale(double d);

} // namespace hardy
