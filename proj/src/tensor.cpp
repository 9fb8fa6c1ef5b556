#include "dkfhtw/tensor.hpp"

#include "dkfhtw/errors.hpp"

namespace dkfhtw {

namespace {
using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
}

NdTensor::NdTensor(std::vector<Eigen::Index> d) : dims(std::move(d)) {
    Eigen::Index n = 1;
    for (Eigen::Index s : dims) n *= s;
    data = Eigen::VectorXd::Zero(n);
}

Eigen::Index NdTensor::outer(Eigen::Index mode) const {
    Eigen::Index n = 1;
    for (Eigen::Index j = 0; j < mode; ++j) n *= dims[j];
    return n;
}

Eigen::Index NdTensor::inner(Eigen::Index mode) const {
    Eigen::Index n = 1;
    for (Eigen::Index j = mode + 1; j < order(); ++j) n *= dims[j];
    return n;
}

double& NdTensor::at(const std::vector<Eigen::Index>& idx) {
    Eigen::Index flat = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) flat = flat * dims[j] + idx[j];
    return data[flat];
}

double NdTensor::at(const std::vector<Eigen::Index>& idx) const {
    return const_cast<NdTensor*>(this)->at(idx);
}

NdTensor NdTensor::contract_mode(Eigen::Index mode, const Eigen::VectorXd& v) const {
    if (v.size() != dims[mode]) throw NumericalError("contract_mode: size mismatch");
    const Eigen::Index out_n = outer(mode), n = dims[mode], in_n = inner(mode);
    std::vector<Eigen::Index> nd = dims;
    nd.erase(nd.begin() + mode);
    NdTensor out(nd);
    for (Eigen::Index o = 0; o < out_n; ++o) {
        Eigen::Map<const RowMat> block(data.data() + o * n * in_n, n, in_n);
        Eigen::Map<Eigen::VectorXd>(out.data.data() + o * in_n, in_n) =
            block.transpose() * v;
    }
    return out;
}

NdTensor NdTensor::mode_multiply(Eigen::Index mode, const Eigen::MatrixXd& M) const {
    if (M.cols() != dims[mode]) throw NumericalError("mode_multiply: size mismatch");
    const Eigen::Index out_n = outer(mode), n = dims[mode], in_n = inner(mode);
    std::vector<Eigen::Index> nd = dims;
    nd[mode] = M.rows();
    NdTensor out(nd);
    for (Eigen::Index o = 0; o < out_n; ++o) {
        Eigen::Map<const RowMat> block(data.data() + o * n * in_n, n, in_n);
        Eigen::Map<RowMat> res(out.data.data() + o * M.rows() * in_n, M.rows(), in_n);
        res = M * block;
    }
    return out;
}

NdTensor NdTensor::slice_mode(Eigen::Index mode, Eigen::Index count) const {
    const Eigen::Index out_n = outer(mode), n = dims[mode], in_n = inner(mode);
    std::vector<Eigen::Index> nd = dims;
    nd[mode] = count;
    NdTensor out(nd);
    for (Eigen::Index o = 0; o < out_n; ++o)
        out.data.segment(o * count * in_n, count * in_n) =
            data.segment(o * n * in_n, count * in_n);
    return out;
}

NdTensor NdTensor::permute(const std::vector<Eigen::Index>& perm) const {
    const Eigen::Index k = order();
    std::vector<Eigen::Index> nd(k);
    for (Eigen::Index j = 0; j < k; ++j) nd[j] = dims[perm[j]];
    NdTensor out(nd);
    // Strides of the source, in row-major layout.
    std::vector<Eigen::Index> stride(k, 1);
    for (Eigen::Index j = k - 2; j >= 0; --j) stride[j] = stride[j + 1] * dims[j + 1];
    std::vector<Eigen::Index> idx(k, 0);
    for (Eigen::Index flat = 0; flat < out.size(); ++flat) {
        Eigen::Index src = 0;
        for (Eigen::Index j = 0; j < k; ++j) src += idx[j] * stride[perm[j]];
        out.data[flat] = data[src];
        for (Eigen::Index j = k - 1; j >= 0; --j) {
            if (++idx[j] < nd[j]) break;
            idx[j] = 0;
        }
    }
    return out;
}

NdTensor contract_last_with_mode(const NdTensor& a, const NdTensor& b, Eigen::Index b_mode) {
    const Eigen::Index r = a.dims.back();
    if (r != b.dims[b_mode]) throw NumericalError("contract_last_with_mode: size mismatch");
    const Eigen::Index a_rows = a.size() / r;
    const Eigen::Index b_out = b.outer(b_mode), b_in = b.inner(b_mode);
    std::vector<Eigen::Index> nd(a.dims.begin(), a.dims.end() - 1);
    for (Eigen::Index j = 0; j < b.order(); ++j)
        if (j != b_mode) nd.push_back(b.dims[j]);
    NdTensor out(nd);
    // out[ar, bo, bi] = sum_r a[ar, r] * b[bo, r, bi]
    Eigen::Map<const RowMat> A(a.data.data(), a_rows, r);
    for (Eigen::Index bo = 0; bo < b_out; ++bo) {
        Eigen::Map<const RowMat> B(b.data.data() + bo * r * b_in, r, b_in);
        RowMat prod = A * B; // a_rows x b_in
        for (Eigen::Index ar = 0; ar < a_rows; ++ar)
            Eigen::Map<RowMat>(out.data.data(), a_rows, b_out * b_in)
                .block(ar, bo * b_in, 1, b_in) = prod.row(ar);
    }
    return out;
}

} // namespace dkfhtw
