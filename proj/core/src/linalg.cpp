#include "sketchbench/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "sketchbench/randbits.hpp"

namespace sketchbench {

namespace {

constexpr double kRankThreshold = 1e-10;

// Stream ids for the generators below; arbitrary fixed tags.
constexpr std::uint64_t kStreamOrthonormal = 0x6f72746f6e6f726dull;
constexpr std::uint64_t kStreamSpiked = 0x7370696b65640000ull;

}  // namespace

QrResult qr_factor(const DenseMatrix& a) {
    const Index n = a.rows(), d = a.cols();
    if (n < d || d < 1) throw DimensionError("qr_factor: need n >= d >= 1");

    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    QrResult out;
    out.q = qr.householderQ() * Eigen::MatrixXd::Identity(n, d);
    out.t = Eigen::MatrixXd(qr.matrixQR().topRows(d).triangularView<Eigen::Upper>());
    for (Index j = 0; j < d; ++j) {
        if (out.t(j, j) < 0) {
            out.t.row(j) *= -1.0;
            out.q.col(j) *= -1.0;
        }
    }

    // Rank gate on T (same singular values as A).
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(out.t);
    const auto& sv = svd.singularValues();
    if (!(sv(0) > 0) || sv(d - 1) <= kRankThreshold * sv(0))
        throw RankDeficientError("qr_factor: matrix is numerically rank deficient");
    return out;
}

SpectrumSet singular_values(const DenseMatrix& a) {
    const Index m = a.rows(), d = a.cols();
    SpectrumSet out;
    out.values.assign(static_cast<std::size_t>(d), 0.0);
    const Index k = std::min(m, d);
    Eigen::MatrixXd gram;
    if (m >= d)
        gram = a.transpose() * a;
    else
        gram = a * a.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();  // ascending
    for (Index i = 0; i < k; ++i) {
        const double lambda = std::max(0.0, ev(ev.size() - k + i));
        out.values[static_cast<std::size_t>(d - k + i)] = std::sqrt(lambda);
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

SpectrumSet symmetric_eigenvalues(const DenseMatrix& x) {
    if (x.rows() != x.cols()) throw DimensionError("symmetric_eigenvalues: square matrix required");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x, Eigen::EigenvaluesOnly);
    SpectrumSet out;
    out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    return out;
}

namespace {

double directed_hausdorff(const std::vector<double>& from, const std::vector<double>& to) {
    double worst = 0;
    for (double x : from) {
        auto it = std::lower_bound(to.begin(), to.end(), x);
        double best = std::numeric_limits<double>::infinity();
        if (it != to.end()) best = std::min(best, *it - x);
        if (it != to.begin()) best = std::min(best, x - *std::prev(it));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double hausdorff_distance(const SpectrumSet& a, const SpectrumSet& b) {
    if (a.values.empty() || b.values.empty()) throw EmptySetError("hausdorff_distance: empty spectrum");
    return std::max(directed_hausdorff(a.values, b.values), directed_hausdorff(b.values, a.values));
}

DenseMatrix random_orthonormal(Index n, Index d, std::uint64_t seed) {
    if (n < d || d < 1) throw DimensionError("random_orthonormal: need n >= d >= 1");
    BitSource src(seed, kStreamOrthonormal);
    DenseMatrix g(n, d);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < d; ++j) g(i, j) = gaussian(src);
    return qr_factor(g).q;
}

DenseMatrix spiked_orthonormal(Index n, Index d, Index heavy_rows, std::uint64_t seed) {
    if (!(1 <= heavy_rows && heavy_rows <= d && d <= n))
        throw DimensionError("spiked_orthonormal: need 1 <= heavy_rows <= d <= n");
    DenseMatrix b = DenseMatrix::Zero(n, d);
    for (Index i = 0; i < heavy_rows; ++i) b(i, i) = 1.0;
    const Index tail = n - heavy_rows;
    if (tail > 0) {
        BitSource src(seed, kStreamSpiked);
        DenseMatrix g(tail, d);
        for (Index i = 0; i < tail; ++i)
            for (Index j = 0; j < d; ++j) g(i, j) = gaussian(src);
        // delta * ||G||_F <= 1/4 bounds the Gram perturbation, which pins the
        // heavy-row leverage scores at >= 1/(1 + 1/16) deterministically.
        const double fnorm = g.norm();
        const double delta = fnorm > 0 ? 0.25 / fnorm : 0.0;
        b.bottomRows(tail) = delta * g;
    }
    return qr_factor(b).q;
}

CsrMatrix CsrMatrix::from_triplets(Index rows, Index cols, std::vector<Triplet> triplets) {
    if (rows < 0 || cols < 0) throw DimensionError("CsrMatrix: negative dimensions");
    for (const auto& t : triplets) {
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw DimensionError("CsrMatrix: triplet out of range");
    }
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    CsrMatrix out;
    out.rows = rows;
    out.cols = cols;
    out.offsets.assign(static_cast<std::size_t>(rows) + 1, 0);
    out.indices.reserve(triplets.size());
    out.values.reserve(triplets.size());

    std::size_t i = 0;
    for (Index r = 0; r < rows; ++r) {
        while (i < triplets.size() && triplets[i].row == r) {
            const std::int64_t c = triplets[i].col;
            double v = 0;
            while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c) {
                v += triplets[i].value;
                ++i;
            }
            if (v != 0.0) {
                out.indices.push_back(c);
                out.values.push_back(v);
            }
        }
        out.offsets[static_cast<std::size_t>(r) + 1] = static_cast<std::int64_t>(out.indices.size());
    }
    return out;
}

DenseMatrix CsrMatrix::multiply(const DenseMatrix& rhs) const {
    if (rhs.rows() != cols) throw DimensionError("CsrMatrix::multiply: dimension mismatch");
    DenseMatrix out = DenseMatrix::Zero(rows, rhs.cols());
    for (Index r = 0; r < rows; ++r) {
        auto row = out.row(r);
        for (std::int64_t k = offsets[static_cast<std::size_t>(r)]; k < offsets[static_cast<std::size_t>(r) + 1]; ++k) {
            row += values[static_cast<std::size_t>(k)] * rhs.row(indices[static_cast<std::size_t>(k)]);
        }
    }
    return out;
}

DenseMatrix CsrMatrix::to_dense() const {
    DenseMatrix out = DenseMatrix::Zero(rows, cols);
    for (Index r = 0; r < rows; ++r)
        for (std::int64_t k = offsets[static_cast<std::size_t>(r)]; k < offsets[static_cast<std::size_t>(r) + 1]; ++k)
            out(r, indices[static_cast<std::size_t>(k)]) = values[static_cast<std::size_t>(k)];
    return out;
}

}  // namespace sketchbench
