#pragma once

#include <vector>

#include <Eigen/Dense>

namespace dkfhtw {

/// Dense row-major tensor of small order (the tree has degree <= 3, so
/// cores have at most 4 modes). Last mode is contiguous.
struct NdTensor {
    std::vector<Eigen::Index> dims;
    Eigen::VectorXd data;

    NdTensor() = default;
    explicit NdTensor(std::vector<Eigen::Index> d);

    Eigen::Index order() const { return static_cast<Eigen::Index>(dims.size()); }
    Eigen::Index size() const { return data.size(); }

    Eigen::Index outer(Eigen::Index mode) const;
    Eigen::Index inner(Eigen::Index mode) const;

    double& at(const std::vector<Eigen::Index>& idx);
    double at(const std::vector<Eigen::Index>& idx) const;

    /// Sum over `mode` against v (length dims[mode]); drops the mode.
    NdTensor contract_mode(Eigen::Index mode, const Eigen::VectorXd& v) const;

    /// Applies matrix M (new_n x dims[mode]) along `mode`.
    NdTensor mode_multiply(Eigen::Index mode, const Eigen::MatrixXd& M) const;

    /// Keeps the first `count` slices of `mode`.
    NdTensor slice_mode(Eigen::Index mode, Eigen::Index count) const;

    /// out.dims[j] = dims[perm[j]]; out(idx) = (*this)(idx o perm).
    NdTensor permute(const std::vector<Eigen::Index>& perm) const;
};

/// Contracts a's LAST mode with b's mode `b_mode`. Result modes are
/// a.dims[:-1] followed by b.dims with `b_mode` removed (original order).
NdTensor contract_last_with_mode(const NdTensor& a, const NdTensor& b, Eigen::Index b_mode);

} // namespace dkfhtw
