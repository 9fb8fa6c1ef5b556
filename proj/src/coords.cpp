#include "dkfhtw/coords.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "dkfhtw/errors.hpp"

namespace dkfhtw {

namespace {

constexpr double kSqrt2Inv = 0.70710678118654752440084436210485;

int levels_for(Eigen::Index d, int spatial_dim) {
    int L = 0;
    while ((Eigen::Index{1} << L) < d) ++L;
    if ((Eigen::Index{1} << L) != d)
        throw ConfigError("wavelet transform: length " + std::to_string(d) +
                          " is not a power of two");
    if (spatial_dim == 2 && (L % 2) != 0)
        throw ConfigError("2D wavelet transform: length must be a square (even L)");
    if (spatial_dim != 1 && spatial_dim != 2)
        throw ConfigError("wavelet transform: spatial_dim must be 1 or 2");
    return L;
}

} // namespace

Eigen::VectorXd clr_forward(const Eigen::VectorXd& pi) {
    const Eigen::Index d = pi.size();
    double sum = pi.sum();
    if (std::abs(sum - 1.0) > 1e-9)
        throw ConfigError("clr_forward: input sums to " + std::to_string(sum) +
                          ", expected 1 within 1e-9");
    Eigen::VectorXd s(d);
    double mean_log = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
        if (!(pi[i] > 0.0))
            throw NumericalError("clr_forward: component " + std::to_string(i) +
                                 " is not strictly positive (" + std::to_string(pi[i]) + ")");
        s[i] = std::log(pi[i]);
        mean_log += s[i];
    }
    mean_log /= static_cast<double>(d);
    s.array() -= mean_log;
    return s;
}

Eigen::VectorXd clr_inverse(const Eigen::VectorXd& s) {
    double smax = s.maxCoeff();
    Eigen::VectorXd pi = (s.array() - smax).exp();
    pi /= pi.sum();
    return pi;
}

namespace {

/// One 1D cascade; input length d = 2^L, writes details level-major.
double haar_1d(const Eigen::VectorXd& s, int L, Eigen::VectorXd& coeffs) {
    const Eigen::Index d = s.size();
    coeffs.resize(d - 1);
    Eigen::VectorXd y = s;
    for (int l = L - 1; l >= 0; --l) {
        const Eigen::Index half = Eigen::Index{1} << l;
        const Eigen::Index offset = half - 1; // level-major slot of level l
        Eigen::VectorXd y_next(half);
        for (Eigen::Index j = 0; j < half; ++j) {
            y_next[j] = (y[2 * j] + y[2 * j + 1]) * kSqrt2Inv;
            coeffs[offset + j] = (y[2 * j] - y[2 * j + 1]) * kSqrt2Inv;
        }
        y.swap(y_next);
    }
    return y[0];
}

void haar_1d_inverse(double y0, const Eigen::VectorXd& coeffs, int L, Eigen::VectorXd& s) {
    Eigen::VectorXd y(1);
    y[0] = y0;
    for (int l = 0; l < L; ++l) {
        const Eigen::Index half = Eigen::Index{1} << l;
        const Eigen::Index offset = half - 1;
        Eigen::VectorXd y_next(2 * half);
        for (Eigen::Index j = 0; j < half; ++j) {
            y_next[2 * j] = (y[j] + coeffs[offset + j]) * kSqrt2Inv;
            y_next[2 * j + 1] = (y[j] - coeffs[offset + j]) * kSqrt2Inv;
        }
        y.swap(y_next);
    }
    s = y;
}

/// Separable 2D cascade on an m x m row-major grid. Per coarsening step u
/// (u = 1..J, J = L/2) the LH band fills tree level 2(J-u), then HL and HH
/// fill level 2(J-u)+1, each band in raster order.
double haar_2d(const Eigen::VectorXd& s, int L, Eigen::VectorXd& coeffs) {
    const int J = L / 2;
    const Eigen::Index m = Eigen::Index{1} << J;
    coeffs.resize((Eigen::Index{1} << L) - 1);
    Eigen::MatrixXd g(m, m);
    for (Eigen::Index r = 0; r < m; ++r)
        for (Eigen::Index c = 0; c < m; ++c) g(r, c) = s[r * m + c];

    for (int u = 1; u <= J; ++u) {
        const Eigen::Index M = m >> (u - 1); // input block size
        const Eigen::Index H = M / 2;
        // Rows: average (A) / difference (D) over column pairs.
        Eigen::MatrixXd A(M, H), D(M, H);
        for (Eigen::Index r = 0; r < M; ++r)
            for (Eigen::Index c = 0; c < H; ++c) {
                A(r, c) = (g(r, 2 * c) + g(r, 2 * c + 1)) * kSqrt2Inv;
                D(r, c) = (g(r, 2 * c) - g(r, 2 * c + 1)) * kSqrt2Inv;
            }
        // Columns on A -> LL, LH; on D -> HL, HH.
        Eigen::MatrixXd LL(H, H), LH(H, H), HL(H, H), HH(H, H);
        for (Eigen::Index r = 0; r < H; ++r)
            for (Eigen::Index c = 0; c < H; ++c) {
                LL(r, c) = (A(2 * r, c) + A(2 * r + 1, c)) * kSqrt2Inv;
                LH(r, c) = (A(2 * r, c) - A(2 * r + 1, c)) * kSqrt2Inv;
                HL(r, c) = (D(2 * r, c) + D(2 * r + 1, c)) * kSqrt2Inv;
                HH(r, c) = (D(2 * r, c) - D(2 * r + 1, c)) * kSqrt2Inv;
            }
        const int l_lh = 2 * (J - u);
        const Eigen::Index off_lh = (Eigen::Index{1} << l_lh) - 1;
        const Eigen::Index off_hl = (Eigen::Index{1} << (l_lh + 1)) - 1;
        const Eigen::Index band = H * H;
        for (Eigen::Index r = 0; r < H; ++r)
            for (Eigen::Index c = 0; c < H; ++c) {
                coeffs[off_lh + r * H + c] = LH(r, c);
                coeffs[off_hl + r * H + c] = HL(r, c);
                coeffs[off_hl + band + r * H + c] = HH(r, c);
            }
        g = LL;
    }
    return g(0, 0);
}

void haar_2d_inverse(double y0, const Eigen::VectorXd& coeffs, int L, Eigen::VectorXd& s) {
    const int J = L / 2;
    const Eigen::Index m = Eigen::Index{1} << J;
    Eigen::MatrixXd g(1, 1);
    g(0, 0) = y0;
    for (int u = J; u >= 1; --u) {
        const Eigen::Index H = m >> u;
        const Eigen::Index M = 2 * H;
        const int l_lh = 2 * (J - u);
        const Eigen::Index off_lh = (Eigen::Index{1} << l_lh) - 1;
        const Eigen::Index off_hl = (Eigen::Index{1} << (l_lh + 1)) - 1;
        const Eigen::Index band = H * H;
        // Undo the column transform: rebuild A and D.
        Eigen::MatrixXd A(M, H), D(M, H);
        for (Eigen::Index r = 0; r < H; ++r)
            for (Eigen::Index c = 0; c < H; ++c) {
                double ll = g(r, c);
                double lh = coeffs[off_lh + r * H + c];
                double hl = coeffs[off_hl + r * H + c];
                double hh = coeffs[off_hl + band + r * H + c];
                A(2 * r, c) = (ll + lh) * kSqrt2Inv;
                A(2 * r + 1, c) = (ll - lh) * kSqrt2Inv;
                D(2 * r, c) = (hl + hh) * kSqrt2Inv;
                D(2 * r + 1, c) = (hl - hh) * kSqrt2Inv;
            }
        // Undo the row transform.
        Eigen::MatrixXd next(M, M);
        for (Eigen::Index r = 0; r < M; ++r)
            for (Eigen::Index c = 0; c < H; ++c) {
                next(r, 2 * c) = (A(r, c) + D(r, c)) * kSqrt2Inv;
                next(r, 2 * c + 1) = (A(r, c) - D(r, c)) * kSqrt2Inv;
            }
        g = next;
    }
    s.resize(m * m);
    for (Eigen::Index r = 0; r < m; ++r)
        for (Eigen::Index c = 0; c < m; ++c) s[r * m + c] = g(r, c);
}

} // namespace

double dwt_forward_full(const Eigen::VectorXd& s, int spatial_dim, Eigen::VectorXd& coeffs) {
    const int L = levels_for(s.size(), spatial_dim);
    return spatial_dim == 1 ? haar_1d(s, L, coeffs) : haar_2d(s, L, coeffs);
}

WaveletVector dwt_forward(const Eigen::VectorXd& s, int spatial_dim) {
    WaveletVector w;
    w.levels = levels_for(s.size(), spatial_dim);
    double y0 = dwt_forward_full(s, spatial_dim, w.coeffs);
    if (std::abs(y0) > 1e-10)
        throw NumericalError("dwt_forward: scaling coefficient y0 = " + std::to_string(y0) +
                             " exceeds 1e-10; input is not zero-sum");
    return w;
}

Eigen::VectorXd dwt_inverse(const WaveletVector& w, int spatial_dim) {
    const Eigen::Index d = w.coeffs.size() + 1;
    const int L = levels_for(d, spatial_dim);
    if (L != w.levels && w.levels != 0)
        throw ConfigError("dwt_inverse: level count inconsistent with coefficient length");
    Eigen::VectorXd s;
    if (spatial_dim == 1)
        haar_1d_inverse(0.0, w.coeffs, L, s);
    else
        haar_2d_inverse(0.0, w.coeffs, L, s);
    return s;
}

Eigen::VectorXd AffineBox::apply(const Eigen::VectorXd& y) const {
    return (2.0 * target) * (y - lo).cwiseQuotient(hi - lo) -
           Eigen::VectorXd::Constant(y.size(), target);
}

Eigen::VectorXd AffineBox::invert(const Eigen::VectorXd& c) const {
    return lo + (c.array() + target).matrix().cwiseProduct(hi - lo) / (2.0 * target);
}

void AffineBox::apply_rows(Eigen::MatrixXd& ys) const {
    Eigen::ArrayXd scale = (2.0 * target) / (hi - lo).array();
    for (Eigen::Index r = 0; r < ys.rows(); ++r)
        ys.row(r) = ((ys.row(r).transpose() - lo).array() * scale - target).matrix().transpose();
}

AffineBox fit_box(const Eigen::MatrixXd& samples, std::vector<int>* degenerate) {
    if (samples.rows() < 2) throw ConfigError("fit_box: need at least 2 samples");
    AffineBox box;
    box.lo = samples.colwise().minCoeff();
    box.hi = samples.colwise().maxCoeff();
    if (degenerate) degenerate->clear();
    for (Eigen::Index j = 0; j < box.lo.size(); ++j) {
        double spread = box.hi[j] - box.lo[j];
        if (spread > 0.0) {
            box.lo[j] -= 0.025 * spread;
            box.hi[j] += 0.025 * spread;
        } else {
            box.lo[j] -= 1e-6;
            box.hi[j] += 1e-6;
            if (degenerate) degenerate->push_back(static_cast<int>(j));
        }
    }
    return box;
}

Eigen::VectorXd CoordPipeline::to_coords(const Eigen::VectorXd& pi) const {
    WaveletVector w = dwt_forward(clr_forward(pi), spatial_dim);
    return box.apply(w.coeffs);
}

Eigen::VectorXd CoordPipeline::from_coords(const Eigen::VectorXd& c) const {
    WaveletVector w;
    w.levels = levels;
    w.coeffs = box.invert(c);
    return clr_inverse(dwt_inverse(w, spatial_dim));
}

} // namespace dkfhtw
