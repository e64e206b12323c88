#pragma once

namespace jarnik {

double log_beta(double a, double b);
double beta(double a, double b);

/// Regularized incomplete beta I_z(a, b) = B_z(a, b) / B(a, b).
///
/// Evaluated with the modified Lentz continued fraction, switching to
/// I_z(a,b) = 1 - I_{1-z}(b,a) when z > (a+1)/(a+b+2). Absolute error is
/// below 1e-12 for 0 <= z <= 1 and a, b in [1e-3, 1e3].
/// Throws std::domain_error when a <= 0, b <= 0, or z outside [0, 1].
double reg_inc_beta(double z, double a, double b);

/// Incomplete beta B_z(a, b).
double inc_beta(double z, double a, double b);

}  // namespace jarnik
