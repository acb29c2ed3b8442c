#pragma once

#include <Eigen/Dense>
#include <vector>

namespace h2cruise {

/// Evaluate sum_k coeffs[k] x^k (Horner).
double polyval(const Eigen::VectorXd& coeffs, double x);

/// Derivative of the above at x.
double polyval_deriv(const Eigen::VectorXd& coeffs, double x);

/// All real roots of the polynomial with coefficients coeffs[0..n] (low to
/// high degree), sorted ascending. Companion-matrix eigenvalues after a
/// variable rescaling that balances the coefficient spread, then Newton
/// polishing; near-coincident roots are merged.
std::vector<double> real_polynomial_roots(const Eigen::VectorXd& coeffs);

}  // namespace h2cruise
