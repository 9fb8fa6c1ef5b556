#include "dkfhtw/basis.hpp"

#include <cmath>

#include "dkfhtw/errors.hpp"

namespace dkfhtw {

LegendreBasis::LegendreBasis(int degree) : degree_(degree) {
    if (degree < 0) throw ConfigError("LegendreBasis: degree must be >= 0");
}

Eigen::VectorXd LegendreBasis::eval(double x) const {
    const int n = size();
    Eigen::VectorXd psi(n);
    double p_prev = 1.0; // P_0
    psi[0] = std::sqrt(0.5) * p_prev;
    if (n == 1) return psi;
    double p = x; // P_1
    psi[1] = std::sqrt(1.5) * p;
    for (int k = 1; k + 1 < n; ++k) {
        // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
        double p_next = ((2 * k + 1) * x * p - k * p_prev) / (k + 1);
        p_prev = p;
        p = p_next;
        psi[k + 1] = std::sqrt((2.0 * (k + 1) + 1.0) / 2.0) * p;
    }
    return psi;
}

Eigen::MatrixXd LegendreBasis::eval_many(const Eigen::VectorXd& xs) const {
    Eigen::MatrixXd out(xs.size(), size());
    for (Eigen::Index r = 0; r < xs.size(); ++r) out.row(r) = eval(xs[r]);
    return out;
}

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw ConfigError("gauss_legendre: n must be >= 1");
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        double b = k / std::sqrt(4.0 * k * k - 1.0);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    QuadratureRule rule;
    rule.nodes = es.eigenvalues();
    rule.weights.resize(n);
    for (int k = 0; k < n; ++k) {
        double v = es.eigenvectors()(0, k);
        rule.weights[k] = 2.0 * v * v;
    }
    return rule;
}

Eigen::VectorXd chebyshev_nodes(int n, double a) {
    if (n < 1) throw ConfigError("chebyshev_nodes: n must be >= 1");
    Eigen::VectorXd xs(n);
    for (int k = 1; k <= n; ++k)
        xs[k - 1] = a * std::cos((2.0 * k - 1.0) * M_PI / (2.0 * n));
    return xs;
}

} // namespace dkfhtw
