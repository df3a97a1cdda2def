#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "sketchbench/errors.hpp"

namespace sketchbench {

using Index = Eigen::Index;
using DenseMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

/// Finite multiset of reals (singular values or symmetric eigenvalues),
/// sorted ascending.
struct SpectrumSet {
    std::vector<double> values;

    double min() const { return values.front(); }
    double max() const { return values.back(); }
};

struct QrResult {
    DenseMatrix q;  // n x d, orthonormal columns
    DenseMatrix t;  // d x d, upper triangular, nonnegative diagonal
};

/// Householder QR of a full-column-rank n x d matrix (n >= d), A = Q T.
/// Column signs are fixed so diag(T) >= 0. Throws RankDeficientError when
/// smin(A) <= 1e-10 * smax(A).
QrResult qr_factor(const DenseMatrix& a);

/// All cols(A) singular values, ascending. Computed from the smaller Gram
/// matrix; accurate to ~1e-8 relative, which is the contract.
SpectrumSet singular_values(const DenseMatrix& a);

/// Eigenvalues of a symmetric matrix, ascending.
SpectrumSet symmetric_eigenvalues(const DenseMatrix& x);

/// max over either set of the distance to the nearest point of the other.
double hausdorff_distance(const SpectrumSet& a, const SpectrumSet& b);

/// QR orthonormalization of an i.i.d. Gaussian n x d matrix; the sign
/// convention makes the result deterministic in the seed, the distribution is
/// rotation invariant.
DenseMatrix random_orthonormal(Index n, Index d, std::uint64_t seed);

/// Orthonormal n x d matrix whose first heavy_rows rows each carry leverage
/// score >= 0.9: near-identity block rows followed by a small Gaussian block,
/// then orthonormalized. Requires 1 <= heavy_rows <= d <= n.
DenseMatrix spiked_orthonormal(Index n, Index d, Index heavy_rows, std::uint64_t seed);

/// Compressed sparse row storage; column indices strictly increasing within
/// each row, no explicit zeros.
struct CsrMatrix {
    Index rows = 0;
    Index cols = 0;
    std::vector<std::int64_t> offsets;  // rows + 1, nondecreasing
    std::vector<std::int64_t> indices;
    std::vector<double> values;

    struct Triplet {
        std::int64_t row;
        std::int64_t col;
        double value;
    };

    /// Build from triplets: duplicates are summed, exact zeros compacted away.
    static CsrMatrix from_triplets(Index rows, Index cols, std::vector<Triplet> triplets);

    Index nnz() const { return static_cast<Index>(values.size()); }

    /// this * rhs for a dense right factor (rhs.rows() == cols).
    DenseMatrix multiply(const DenseMatrix& rhs) const;

    DenseMatrix to_dense() const;
};

}  // namespace sketchbench
