#pragma once

// The quantum-logic layer: propositions as closed subspaces, the lattice
// connectives (implication, meet, join, orthocomplement), truth as
// certainty, compatibility, and the constructive witnesses showing where
// disjunction and negation leave classical logic.

#include "qlor/hilbert.hpp"

#include <optional>

namespace qlor {

// NotTrue deliberately does not mean "false": quantum falsity is a separate
// check (is_true of the complement).
enum class TruthStatus { True, NotTrue };

inline const char* to_string(TruthStatus t) {
    return t == TruthStatus::True ? "True" : "NotTrue";
}

struct Proposition {
    std::string label;
    Subspace subspace;

    Index ambient_dim() const { return subspace.ambient_dim(); }
    Index dim() const { return subspace.dim(); }
};

/// A pure state: unit vector of C^d.
class State {
  public:
    explicit State(Vector v, const Tolerance& tol = {}) : vector_(std::move(v)) {
        if (vector_.size() < 1) throw std::invalid_argument("state must live in a positive dimension");
        if (!vector_.allFinite()) throw std::invalid_argument("state has non-finite entries");
        if (std::abs(vector_.norm() - 1.0) > tol.eps_eq()) {
            throw std::invalid_argument("state vector is not normalized (norm " + std::to_string(vector_.norm()) + ")");
        }
    }

    /// Normalizes v; rejects (near-)zero vectors.
    static State normalized(const Vector& v, const Tolerance& tol = {}) {
        const double norm = v.norm();
        if (!(norm > tol.eps_rank())) throw std::invalid_argument("cannot normalize a zero vector");
        return State(v / norm, tol);
    }

    const Vector& vector() const { return vector_; }
    Index dim() const { return vector_.size(); }

  private:
    Vector vector_;
};

namespace detail {

inline void require_same_ambient(const Proposition& a, const Proposition& b, const char* op) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DimensionMismatch(std::string(op) + ": ambient dimensions differ (" + std::to_string(a.ambient_dim()) +
                                " vs " + std::to_string(b.ambient_dim()) + ")");
    }
}

// Eigenspace of P_a + P_b for eigenvalues within the rank window of `target`.
// target = 2 is the intersection of the ranges, target = 0 the intersection
// of the kernels.
inline Subspace projector_sum_eigenspace(const Matrix& sum, double target, const Tolerance& tol) {
    const Index d = sum.rows();
    Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (sum + sum.adjoint()));
    if (eig.info() != Eigen::Success) throw NumericalFailure("eigendecomposition failed");
    const double window = tol.eigen_window(d);
    Index count = 0;
    for (Index i = 0; i < d; ++i) {
        if (std::abs(eig.eigenvalues()(i) - target) <= window) ++count;
    }
    Matrix basis(d, count);
    Index j = 0;
    for (Index i = 0; i < d; ++i) {
        if (std::abs(eig.eigenvalues()(i) - target) <= window) basis.col(j++) = eig.eigenvectors().col(i);
    }
    canonicalize_column_phases(basis);
    return Subspace(std::move(basis), tol);
}

inline Subspace intersect(const Subspace& a, const Subspace& b, const Tolerance& tol) {
    const Matrix sum = a.basis() * a.basis().adjoint() + b.basis() * b.basis().adjoint();
    return projector_sum_eigenspace(sum, 2.0, tol);
}

} // namespace detail

/// a -> b iff M_a is contained in M_b, tested as P_b P_a = P_a.
inline bool implies(const Proposition& a, const Proposition& b, const Tolerance& tol = {}) {
    detail::require_same_ambient(a, b, "implies");
    const Matrix pa = projector(a.subspace);
    const Matrix pb = projector(b.subspace);
    return approx_equal(pb * pa, pa, tol.matrix_eq(a.ambient_dim()));
}

/// M_{a AND b} = M_a intersect M_b, computed as the eigenvalue-2 eigenspace
/// of P_a + P_b (stable for non-commuting projectors, unlike the product).
inline Proposition meet(const Proposition& a, const Proposition& b, const Tolerance& tol = {}) {
    detail::require_same_ambient(a, b, "meet");
    return {"(" + a.label + " ∧ " + b.label + ")", detail::intersect(a.subspace, b.subspace, tol)};
}

/// M_{a OR b} = closure of the span of M_a and M_b.
inline Proposition join(const Proposition& a, const Proposition& b, const Tolerance& tol = {}) {
    detail::require_same_ambient(a, b, "join");
    Matrix stacked(a.ambient_dim(), a.dim() + b.dim());
    stacked << a.subspace.basis(), b.subspace.basis();
    return {"(" + a.label + " ∨ " + b.label + ")", orthonormalize(stacked, tol)};
}

/// M_{NOT a} = the orthogonal complement of M_a.
inline Proposition complement(const Proposition& a, const Tolerance& tol = {}) {
    const Index d = a.ambient_dim();
    const Matrix p = Matrix::Identity(d, d) - projector(a.subspace);
    return {"¬" + a.label, subspace_from_projector(p, tol)};
}

/// True iff the yes outcome is certain: P_a v_p = v_p.
inline TruthStatus is_true(const Proposition& a, const State& p, const Tolerance& tol = {}) {
    if (a.ambient_dim() != p.dim()) {
        throw DimensionMismatch("is_true: proposition dimension " + std::to_string(a.ambient_dim()) +
                                " vs state dimension " + std::to_string(p.dim()));
    }
    const Vector residual = projector(a.subspace) * p.vector() - p.vector();
    return residual.norm() <= tol.eps_eq() ? TruthStatus::True : TruthStatus::NotTrue;
}

/// Compatible iff the projectors commute: P_a P_b = P_b P_a.
inline bool is_compatible(const Proposition& a, const Proposition& b, const Tolerance& tol = {}) {
    detail::require_same_ambient(a, b, "is_compatible");
    const Matrix pa = projector(a.subspace);
    const Matrix pb = projector(b.subspace);
    return approx_equal(pa * pb, pb * pa, tol.matrix_eq(a.ambient_dim()));
}

/// A state making a OR b true while neither a nor b is true: the normalized
/// sum of unit vectors x in M_a and y in M_b, both orthogonal to the common
/// part M_a intersect M_b. Empty when one proposition implies the other (no
/// witness exists in this construction family).
inline std::optional<State> disjunction_witness(const Proposition& a, const Proposition& b, const Tolerance& tol = {}) {
    detail::require_same_ambient(a, b, "disjunction_witness");
    if (implies(a, b, tol) || implies(b, a, tol)) return std::nullopt;
    const Subspace common = detail::intersect(a.subspace, b.subspace, tol);
    const Index d = a.ambient_dim();
    const Matrix off_common = Matrix::Identity(d, d) - common.basis() * common.basis().adjoint();
    // M_a minus the common part: eigenvalue-2 eigenspace of P_a + (I - P_common).
    const Subspace a_only = detail::projector_sum_eigenspace(projector(a.subspace) + off_common, 2.0, tol);
    const Subspace b_only = detail::projector_sum_eigenspace(projector(b.subspace) + off_common, 2.0, tol);
    if (a_only.dim() == 0 || b_only.dim() == 0) {
        throw NumericalFailure("disjunction_witness: side subspace unexpectedly empty");
    }
    const Vector x = a_only.basis().col(0);
    const Vector y = b_only.basis().col(0);
    return State::normalized(x + y, tol);
}

/// A state making both a and NOT a not true: (u + w)/sqrt(2) with u the
/// first basis vector of M_a and w the first of its complement. Empty for
/// the zero subspace and the full space.
inline std::optional<State> negation_witness(const Proposition& a, const Tolerance& tol = {}) {
    if (a.dim() == 0 || a.dim() == a.ambient_dim()) return std::nullopt;
    const Proposition not_a = complement(a, tol);
    const Vector u = a.subspace.basis().col(0);
    const Vector w = not_a.subspace.basis().col(0);
    return State((u + w) / std::sqrt(2.0), tol);
}

/// Proposition equality is projector equality, never basis equality.
inline bool equivalent(const Proposition& a, const Proposition& b, const Tolerance& tol = {}) {
    detail::require_same_ambient(a, b, "equivalent");
    return approx_equal(projector(a.subspace), projector(b.subspace), tol.matrix_eq(a.ambient_dim()));
}

} // namespace qlor
