#pragma once

#include <Eigen/Dense>

namespace dkfhtw {

/// Centered log-ratio map: s_i = log(pi_i) - mean_j log(pi_j).
/// Requires pi strictly positive and summing to 1 within 1e-9.
Eigen::VectorXd clr_forward(const Eigen::VectorXd& pi);

/// Inverse of clr: softmax with max-subtraction.
Eigen::VectorXd clr_inverse(const Eigen::VectorXd& s);

/// Wavelet coefficients of one sample. `coeffs` holds the detail
/// coefficients c_{k,l} serialized level-major, coarsest level first:
///   (c_{1,0}, c_{1,1}, c_{2,1}, ..., c_{1,L-1}, ..., c_{2^{L-1},L-1}),
/// i.e. flat index = (2^l - 1) + (k - 1). Length is 2^L - 1; the scaling
/// coefficient y_0 is dropped (it vanishes for zero-sum inputs).
struct WaveletVector {
    Eigen::VectorXd coeffs;
    int levels = 0; // L
};

/// Haar cascade including the scaling coefficient; no zero-sum check.
/// Returns y_0 and fills coeffs. Used as the transform kernel and by the
/// orthogonality oracle.
double dwt_forward_full(const Eigen::VectorXd& s, int spatial_dim, Eigen::VectorXd& coeffs);

/// Forward Haar transform of a zero-sum vector. 1D: iterated pairwise
/// average/difference cascade. 2D: separable Haar per level on the m x m
/// grid (row-major), detail sub-bands serialized LH, HL, HH in raster order
/// and re-indexed into the level-major layout (LH of coarsening step u maps
/// to tree level 2(J-u), HL then HH to level 2(J-u)+1, with J = L/2).
/// Errors if |y_0| > 1e-10.
WaveletVector dwt_forward(const Eigen::VectorXd& s, int spatial_dim);

/// Inverse transform; reinserts y_0 = 0.
Eigen::VectorXd dwt_inverse(const WaveletVector& w, int spatial_dim);

/// Per-coordinate affine map fitted to sample bounds, sending [lo_i, hi_i]
/// onto [-target, target] (target = 0.9).
struct AffineBox {
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;
    double target = 0.9;

    Eigen::VectorXd apply(const Eigen::VectorXd& y) const;
    Eigen::VectorXd invert(const Eigen::VectorXd& c) const;
    /// In-place variants used in row-matrix pipelines.
    void apply_rows(Eigen::MatrixXd& ys) const;
};

/// Fits per-coordinate min/max bounds over sample rows, expanded
/// symmetrically by a 5% margin of the spread. A coordinate with zero
/// spread gets the interval [v - 1e-6, v + 1e-6] so the map stays
/// invertible; such coordinates are listed in `degenerate`.
AffineBox fit_box(const Eigen::MatrixXd& samples, std::vector<int>* degenerate = nullptr);

/// End-to-end coordinate pipeline pi <-> c for a fixed discretization.
struct CoordPipeline {
    int levels = 0;      // L, with 2^L cells
    int spatial_dim = 1; // 1 or 2
    AffineBox box;

    int cells() const { return 1 << levels; }
    int dim() const { return (1 << levels) - 1; }

    Eigen::VectorXd to_coords(const Eigen::VectorXd& pi) const;
    Eigen::VectorXd from_coords(const Eigen::VectorXd& c) const;
};

} // namespace dkfhtw
