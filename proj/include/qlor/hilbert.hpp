#pragma once

// Finite-dimensional complex linear algebra substrate: subspaces of C^d held
// as orthonormal bases, projectors derived on demand, tolerance-aware rank
// decisions, and seeded random generation for reproducible experiments.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qlor {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InvalidProjector : Error {
    using Error::Error;
};

// Raised when a computed quantity violates its own postcondition.
struct NumericalFailure : Error {
    using Error::Error;
};

/// Numerical cutoffs. eps_rank gates rank/singular-direction decisions,
/// eps_eq gates matrix/vector equality (Frobenius/Euclidean norm), eps_prob
/// gates probability comparisons. Matrix comparisons and eigenvalue windows
/// scale with the ambient dimension.
class Tolerance {
  public:
    Tolerance(double eps_rank = 1e-10, double eps_eq = 1e-9, double eps_prob = 1e-9)
        : eps_rank_(eps_rank), eps_eq_(eps_eq), eps_prob_(eps_prob) {
        for (double e : {eps_rank, eps_eq, eps_prob}) {
            if (!(e > 0.0 && e < 1e-3)) {
                throw std::invalid_argument("tolerance out of range (0, 1e-3): " + std::to_string(e));
            }
        }
    }

    double eps_rank() const { return eps_rank_; }
    double eps_eq() const { return eps_eq_; }
    double eps_prob() const { return eps_prob_; }

    double matrix_eq(Index ambient_dim) const { return eps_eq_ * static_cast<double>(ambient_dim); }
    double eigen_window(Index ambient_dim) const { return eps_rank_ * static_cast<double>(ambient_dim); }

  private:
    double eps_rank_;
    double eps_eq_;
    double eps_prob_;
};

inline bool approx_equal(const Matrix& a, const Matrix& b, double eps) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return (a - b).norm() <= eps;
}

namespace detail {

inline void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

// Rotates each column so its largest-magnitude entry (first index on ties)
// is real and positive. Fixes the arbitrary phase of eigenvector bases.
inline void canonicalize_column_phases(Matrix& basis) {
    for (Index j = 0; j < basis.cols(); ++j) {
        Index imax = 0;
        basis.col(j).cwiseAbs().maxCoeff(&imax);
        const Complex pivot = basis(imax, j);
        const double mag = std::abs(pivot);
        if (mag > 0.0) basis.col(j) *= std::conj(pivot) / mag;
    }
}

} // namespace detail

/// A closed subspace of C^d, stored as a d x k matrix with orthonormal
/// columns. k = 0 encodes the zero subspace {0}.
class Subspace {
  public:
    explicit Subspace(Index ambient_dim) : basis_(Matrix::Zero(ambient_dim, 0)) {
        if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be positive");
    }

    explicit Subspace(Matrix basis, const Tolerance& tol = {}) : basis_(std::move(basis)) {
        if (basis_.rows() < 1) throw std::invalid_argument("ambient dimension must be positive");
        if (basis_.cols() > basis_.rows()) {
            throw std::invalid_argument("subspace dimension exceeds ambient dimension");
        }
        detail::require_finite(basis_, "subspace basis");
        const Matrix gram = basis_.adjoint() * basis_;
        if (!approx_equal(gram, Matrix::Identity(basis_.cols(), basis_.cols()), tol.matrix_eq(basis_.rows()))) {
            throw std::invalid_argument("subspace basis is not orthonormal");
        }
    }

    static Subspace zero(Index ambient_dim) { return Subspace(ambient_dim); }

    static Subspace full(Index ambient_dim) {
        return Subspace(Matrix::Identity(ambient_dim, ambient_dim));
    }

    /// Span of the coordinate vectors e_i for the given 0-based indices.
    static Subspace coordinate(Index ambient_dim, const std::vector<Index>& indices) {
        if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be positive");
        Matrix basis = Matrix::Zero(ambient_dim, static_cast<Index>(indices.size()));
        for (std::size_t j = 0; j < indices.size(); ++j) {
            const Index i = indices[j];
            if (i < 0 || i >= ambient_dim) {
                throw std::invalid_argument("coordinate index " + std::to_string(i) + " out of range for dimension " +
                                            std::to_string(ambient_dim));
            }
            for (std::size_t k = 0; k < j; ++k) {
                if (indices[k] == i) throw std::invalid_argument("duplicate coordinate index " + std::to_string(i));
            }
            basis(i, static_cast<Index>(j)) = Complex(1.0, 0.0);
        }
        return Subspace(std::move(basis));
    }

    Index ambient_dim() const { return basis_.rows(); }
    Index dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

  private:
    Matrix basis_;
};

/// P = sum_i b_i b_i^dagger; Hermitian, idempotent, trace = dim.
inline Matrix projector(const Subspace& s) {
    return s.basis() * s.basis().adjoint();
}

/// Modified Gram-Schmidt over the columns, in input order, with one
/// re-orthogonalization pass. Columns whose residual norm falls at or below
/// eps_rank after projection onto previously accepted directions are dropped.
inline Subspace orthonormalize(const Matrix& columns, const Tolerance& tol = {}) {
    if (columns.rows() < 1) throw std::invalid_argument("ambient dimension must be positive");
    detail::require_finite(columns, "orthonormalize input");
    const Index d = columns.rows();
    Matrix basis(d, std::min(columns.cols(), d));
    Index accepted = 0;
    for (Index j = 0; j < columns.cols(); ++j) {
        Vector r = columns.col(j);
        for (int pass = 0; pass < 2; ++pass) {
            if (accepted > 0) {
                auto b = basis.leftCols(accepted);
                r -= b * (b.adjoint() * r);
            }
        }
        const double norm = r.norm();
        if (norm <= tol.eps_rank()) continue;
        if (accepted == basis.cols()) break; // numerically impossible past full rank
        basis.col(accepted++) = r / norm;
    }
    return Subspace(basis.leftCols(accepted).eval(), tol);
}

inline Subspace orthonormalize(Index ambient_dim, const std::vector<Vector>& vectors, const Tolerance& tol = {}) {
    Matrix columns(ambient_dim, static_cast<Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != ambient_dim) {
            throw DimensionMismatch("orthonormalize: vector " + std::to_string(j) + " has dimension " +
                                    std::to_string(vectors[j].size()) + ", expected " + std::to_string(ambient_dim));
        }
        columns.col(static_cast<Index>(j)) = vectors[j];
    }
    return orthonormalize(columns, tol);
}

/// All vectors must share one ambient dimension (taken from the first).
inline Subspace orthonormalize(const std::vector<Vector>& vectors, const Tolerance& tol = {}) {
    if (vectors.empty()) throw std::invalid_argument("orthonormalize: empty input without ambient dimension");
    return orthonormalize(vectors.front().size(), vectors, tol);
}

/// Recovers the subspace a projector projects onto, via eigendecomposition,
/// keeping the eigenvalues within eps_rank (scaled by dimension) of 1.
inline Subspace subspace_from_projector(const Matrix& P, const Tolerance& tol = {}) {
    if (P.rows() != P.cols()) throw InvalidProjector("projector must be square");
    if (P.rows() < 1) throw InvalidProjector("projector must be nonempty");
    if (!P.allFinite()) throw InvalidProjector("projector has non-finite entries");
    const Index d = P.rows();
    const double eps = tol.matrix_eq(d);
    if (!approx_equal(P, P.adjoint(), eps)) throw InvalidProjector("projector is not Hermitian");
    if (!approx_equal(P * P, P, eps)) throw InvalidProjector("projector is not idempotent");

    const Matrix hermitized = 0.5 * (P + P.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitized);
    if (eig.info() != Eigen::Success) throw NumericalFailure("eigendecomposition failed");

    const double window = tol.eigen_window(d);
    Index count = 0;
    for (Index i = 0; i < d; ++i) {
        if (std::abs(eig.eigenvalues()(i) - 1.0) <= window) ++count;
    }
    Matrix basis(d, count);
    Index j = 0;
    for (Index i = 0; i < d; ++i) {
        if (std::abs(eig.eigenvalues()(i) - 1.0) <= window) basis.col(j++) = eig.eigenvectors().col(i);
    }
    detail::canonicalize_column_phases(basis);
    return Subspace(std::move(basis), tol);
}

namespace detail {

inline Vector gaussian_vector(Index dim, std::mt19937_64& gen) {
    std::normal_distribution<double> n01(0.0, 1.0);
    Vector v(dim);
    for (Index i = 0; i < dim; ++i) {
        const double re = n01(gen);
        const double im = n01(gen);
        v(i) = Complex(re, im);
    }
    return v;
}

} // namespace detail

/// Haar-like random subspace: orthonormalizes seeded complex Gaussian
/// vectors. Deterministic for a fixed seed.
inline Subspace random_subspace(Index ambient_dim, Index dim, std::uint64_t seed, const Tolerance& tol = {}) {
    if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be positive");
    if (dim < 0 || dim > ambient_dim) {
        throw std::invalid_argument("subspace dimension " + std::to_string(dim) + " out of range [0, " +
                                    std::to_string(ambient_dim) + "]");
    }
    std::mt19937_64 gen(seed);
    Matrix basis(ambient_dim, dim);
    Index accepted = 0;
    int attempts = 0;
    while (accepted < dim) {
        if (++attempts > 32 * (static_cast<int>(dim) + 1)) {
            throw NumericalFailure("random_subspace: could not draw enough independent directions");
        }
        Vector r = detail::gaussian_vector(ambient_dim, gen);
        for (int pass = 0; pass < 2; ++pass) {
            if (accepted > 0) {
                auto b = basis.leftCols(accepted);
                r -= b * (b.adjoint() * r);
            }
        }
        const double norm = r.norm();
        if (norm <= tol.eps_rank()) continue; // resample a degenerate draw
        basis.col(accepted++) = r / norm;
    }
    return Subspace(std::move(basis), tol);
}

inline Matrix random_unitary(Index dim, std::uint64_t seed) {
    return random_subspace(dim, dim, seed).basis();
}

inline Vector random_unit_vector(Index dim, std::uint64_t seed) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    std::mt19937_64 gen(seed);
    Vector v = detail::gaussian_vector(dim, gen);
    double norm = v.norm();
    while (norm <= 1e-30) { // astronomically unlikely
        v = detail::gaussian_vector(dim, gen);
        norm = v.norm();
    }
    return v / norm;
}

} // namespace qlor
