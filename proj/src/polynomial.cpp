#include "h2cruise/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace h2cruise {

double polyval(const Eigen::VectorXd& coeffs, double x) {
    double acc = 0.0;
    for (Eigen::Index k = coeffs.size() - 1; k >= 0; --k) {
        acc = acc * x + coeffs[k];
    }
    return acc;
}

double polyval_deriv(const Eigen::VectorXd& coeffs, double x) {
    double acc = 0.0;
    for (Eigen::Index k = coeffs.size() - 1; k >= 1; --k) {
        acc = acc * x + coeffs[k] * static_cast<double>(k);
    }
    return acc;
}

namespace {

// Magnitude scale of the evaluation sum_k |c_k| |x|^k, for relative residuals.
double eval_scale(const Eigen::VectorXd& coeffs, double x) {
    double acc = 0.0;
    const double ax = std::abs(x);
    for (Eigen::Index k = coeffs.size() - 1; k >= 0; --k) {
        acc = acc * ax + std::abs(coeffs[k]);
    }
    return std::max(acc, 1e-300);
}

double newton_polish(const Eigen::VectorXd& coeffs, double x) {
    for (int it = 0; it < 60; ++it) {
        const double p = polyval(coeffs, x);
        if (std::abs(p) <= 1e-15 * eval_scale(coeffs, x)) break;
        const double dp = polyval_deriv(coeffs, x);
        if (dp == 0.0) break;
        const double step = p / dp;
        x -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

}  // namespace

std::vector<double> real_polynomial_roots(const Eigen::VectorXd& coeffs) {
    // drop trailing coefficients that are zero relative to the largest one
    const double cmax = coeffs.size() ? coeffs.cwiseAbs().maxCoeff() : 0.0;
    Eigen::Index degree = coeffs.size() - 1;
    while (degree > 0 && std::abs(coeffs[degree]) <= 1e-300 * std::max(cmax, 1.0)) {
        --degree;
    }
    if (degree < 1 || cmax == 0.0) return {};

    // rescale v = s*u so the companion matrix entries stay O(1); the
    // coefficient spread here covers ~13 decades otherwise
    double scale = 0.0;
    for (Eigen::Index k = 0; k < degree; ++k) {
        if (coeffs[k] != 0.0) {
            const double cand = std::pow(std::abs(coeffs[k] / coeffs[degree]),
                                         1.0 / static_cast<double>(degree - k));
            scale = std::max(scale, cand);
        }
    }
    if (scale <= 0.0 || !std::isfinite(scale)) scale = 1.0;

    Eigen::VectorXd monic(degree);  // -b_k/b_n for the scaled polynomial
    double spow = 1.0;
    std::vector<double> scaled(static_cast<std::size_t>(degree) + 1);
    for (Eigen::Index k = 0; k <= degree; ++k) {
        scaled[static_cast<std::size_t>(k)] = coeffs[k] * spow;
        spow *= scale;
    }
    for (Eigen::Index k = 0; k < degree; ++k) {
        monic[k] = -scaled[static_cast<std::size_t>(k)] /
                   scaled[static_cast<std::size_t>(degree)];
    }

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
    for (Eigen::Index i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    companion.col(degree - 1) = monic;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    const auto eigenvalues = solver.eigenvalues();

    std::vector<double> roots;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        const double re = eigenvalues[i].real() * scale;
        const double im = eigenvalues[i].imag() * scale;
        if (std::abs(im) > 1e-6 * (1.0 + std::abs(re))) continue;
        const double polished = newton_polish(coeffs, re);
        // keep only candidates that actually solve the polynomial
        if (std::abs(polyval(coeffs, polished)) >
            1e-8 * eval_scale(coeffs, polished)) {
            continue;
        }
        roots.push_back(polished);
    }
    std::sort(roots.begin(), roots.end());
    // merge near-coincident roots (complex pairs collapsing onto the axis)
    std::vector<double> unique;
    for (double r : roots) {
        if (unique.empty() ||
            std::abs(r - unique.back()) > 1e-9 * std::max(1.0, std::abs(r))) {
            unique.push_back(r);
        }
    }
    return unique;
}

}  // namespace h2cruise
