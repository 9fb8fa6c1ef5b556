#pragma once

#include <Eigen/Dense>

namespace dkfhtw {

/// Orthonormal Legendre basis on [-1, 1]:
///   psi_i(x) = sqrt((2i - 1) / 2) * P_{i-1}(x),  i = 1..q+1,
/// so that \int_{-1}^{1} psi_i psi_j = delta_ij. Evaluation uses the stable
/// three-term recurrence; extrapolation outside [-1, 1] is allowed.
class LegendreBasis {
public:
    explicit LegendreBasis(int degree);

    int degree() const { return degree_; }
    int size() const { return degree_ + 1; }

    /// Values of psi_1..psi_{q+1} at x.
    Eigen::VectorXd eval(double x) const;

    /// Row r = basis values at xs[r]; shape (xs.size(), q+1).
    Eigen::MatrixXd eval_many(const Eigen::VectorXd& xs) const;

private:
    int degree_;
};

/// Gauss-Legendre rule on [-1, 1] with n nodes (exact for degree 2n-1),
/// computed by Golub-Welsch.
struct QuadratureRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};
QuadratureRule gauss_legendre(int n);

/// Chebyshev-Gauss nodes cos((2k-1)pi/(2n)), k = 1..n, scaled to [-a, a].
Eigen::VectorXd chebyshev_nodes(int n, double a);

} // namespace dkfhtw
