#pragma once

// Operational layer for compatible propositions: the joint yes-no experiment,
// Born-rule outcome distributions, the EPR-like correlation state built from
// the superposition principle, and distribution-based truth tables.

#include "qlor/logic.hpp"

#include <array>
#include <cmath>

namespace qlor {

struct IncompatiblePropositions : Error {
    using Error::Error;
};

struct NoEprState : Error {
    using Error::Error;
};

enum class JointOutcome { YY, YN, NY, NN };

inline const char* to_string(JointOutcome o) {
    switch (o) {
        case JointOutcome::YY: return "yy";
        case JointOutcome::YN: return "yn";
        case JointOutcome::NY: return "ny";
        default: return "nn";
    }
}

/// The joint experiment testing two compatible propositions at once. The
/// four eigenvalues tag the outcomes (yes,yes), (yes,no), (no,yes), (no,no)
/// and must be pairwise distinct so outcomes stay identifiable.
class JointMeasurement {
  public:
    JointMeasurement(Proposition a, Proposition b, std::array<double, 4> eigenvalues = {1.0, 2.0, 3.0, 4.0},
                     const Tolerance& tol = {})
        : a_(std::move(a)), b_(std::move(b)), eigenvalues_(eigenvalues) {
        if (!is_compatible(a_, b_, tol)) {
            throw IncompatiblePropositions("propositions '" + a_.label + "' and '" + b_.label +
                                           "' are not compatible (projectors do not commute)");
        }
        for (int i = 0; i < 4; ++i) {
            if (!std::isfinite(eigenvalues_[i])) throw std::invalid_argument("eigenvalues must be finite");
            for (int j = i + 1; j < 4; ++j) {
                if (eigenvalues_[i] == eigenvalues_[j]) {
                    throw std::invalid_argument("outcome eigenvalues must be pairwise distinct");
                }
            }
        }
    }

    const Proposition& a() const { return a_; }
    const Proposition& b() const { return b_; }
    const std::array<double, 4>& eigenvalues() const { return eigenvalues_; }
    Index ambient_dim() const { return a_.ambient_dim(); }

  private:
    Proposition a_;
    Proposition b_;
    std::array<double, 4> eigenvalues_;
};

/// The four product projectors P_aP_b, P_a(1-P_b), (1-P_a)P_b,
/// (1-P_a)(1-P_b), in outcome order YY, YN, NY, NN. For a compatible pair
/// they are mutually orthogonal projectors resolving the identity.
inline std::array<Matrix, 4> outcome_projectors(const Proposition& a, const Proposition& b) {
    detail::require_same_ambient(a, b, "outcome_projectors");
    const Index d = a.ambient_dim();
    const Matrix pa = projector(a.subspace);
    const Matrix pb = projector(b.subspace);
    const Matrix qa = Matrix::Identity(d, d) - pa;
    const Matrix qb = Matrix::Identity(d, d) - pb;
    return {pa * pb, pa * qb, qa * pb, qa * qb};
}

/// H = l1 P_aP_b + l2 P_a(1-P_b) + l3 (1-P_a)P_b + l4 (1-P_a)(1-P_b).
inline Matrix joint_operator(const JointMeasurement& m) {
    const auto regions = outcome_projectors(m.a(), m.b());
    Matrix h = Matrix::Zero(m.ambient_dim(), m.ambient_dim());
    for (int k = 0; k < 4; ++k) h += m.eigenvalues()[k] * regions[k];
    return h;
}

/// Probabilities of (yes,yes), (yes,no), (no,yes), (no,no).
class OutcomeDistribution {
  public:
    OutcomeDistribution(double yy, double yn, double ny, double nn, const Tolerance& tol = {})
        : p_{yy, yn, ny, nn} {
        for (double p : p_) {
            if (!std::isfinite(p) || p < -tol.eps_prob() || p > 1.0 + tol.eps_prob()) {
                throw std::invalid_argument("outcome probability out of [0, 1]: " + std::to_string(p));
            }
        }
        if (std::abs(yy + yn + ny + nn - 1.0) > tol.eps_prob()) {
            throw std::invalid_argument("outcome probabilities do not sum to 1");
        }
    }

    double yy() const { return p_[0]; }
    double yn() const { return p_[1]; }
    double ny() const { return p_[2]; }
    double nn() const { return p_[3]; }
    double probability(JointOutcome o) const { return p_[static_cast<int>(o)]; }

  private:
    std::array<double, 4> p_;
};

/// Born rule over the four outcome regions: each probability is the squared
/// norm of the correspondingly projected state.
inline OutcomeDistribution outcome_distribution(const JointMeasurement& m, const State& p, const Tolerance& tol = {}) {
    if (m.ambient_dim() != p.dim()) {
        throw DimensionMismatch("outcome_distribution: measurement dimension " + std::to_string(m.ambient_dim()) +
                                " vs state dimension " + std::to_string(p.dim()));
    }
    const auto regions = outcome_projectors(m.a(), m.b());
    std::array<double, 4> prob{};
    for (int k = 0; k < 4; ++k) prob[k] = (regions[k] * p.vector()).squaredNorm();
    return OutcomeDistribution(prob[0], prob[1], prob[2], prob[3], tol);
}

/// The EPR-like correlation state v = (x + y)/sqrt(2), with x a unit vector
/// in the range of P_a(1-P_b) and y one in the range of (1-P_a)P_b (the
/// first basis column of each, fixing the construction). The resulting
/// outcome distribution is (0, 1/2, 1/2, 0): only anti-correlated outcomes.
inline State epr_state(const Proposition& a, const Proposition& b, const Tolerance& tol = {}) {
    detail::require_same_ambient(a, b, "epr_state");
    if (!is_compatible(a, b, tol)) {
        throw IncompatiblePropositions("epr_state: propositions '" + a.label + "' and '" + b.label +
                                       "' are not compatible");
    }
    const auto regions = outcome_projectors(a, b);
    const Subspace range_yn = subspace_from_projector(regions[1], tol);
    const Subspace range_ny = subspace_from_projector(regions[2], tol);
    if (range_yn.dim() == 0 && range_ny.dim() == 0) {
        throw NoEprState("no EPR state: both P_a(1-P_b) and (1-P_a)P_b have zero range");
    }
    if (range_yn.dim() == 0) throw NoEprState("no EPR state: P_a(1-P_b) has zero range");
    if (range_ny.dim() == 0) throw NoEprState("no EPR state: (1-P_a)P_b has zero range");

    const Vector x = range_yn.basis().col(0);
    const Vector y = range_ny.basis().col(0);
    State v((x + y) / std::sqrt(2.0), tol);

    const auto dist = outcome_distribution(JointMeasurement(a, b, {1, 2, 3, 4}, tol), v, tol);
    if (std::abs(dist.yy()) > tol.eps_prob() || std::abs(dist.yn() - 0.5) > tol.eps_prob() ||
        std::abs(dist.ny() - 0.5) > tol.eps_prob() || std::abs(dist.nn()) > tol.eps_prob()) {
        throw NumericalFailure("epr_state: constructed state does not have the (0, 1/2, 1/2, 0) distribution");
    }
    return v;
}

/// Distribution-based truth table: the conjunction is true iff (yes,yes) is
/// certain; the disjunction is true iff (no,no) is impossible.
inline std::pair<TruthStatus, TruthStatus> truth_from_distribution(const OutcomeDistribution& d,
                                                                   const Tolerance& tol = {}) {
    const TruthStatus conjunction = d.yy() >= 1.0 - tol.eps_prob() ? TruthStatus::True : TruthStatus::NotTrue;
    const TruthStatus disjunction = d.nn() <= tol.eps_prob() ? TruthStatus::True : TruthStatus::NotTrue;
    return {conjunction, disjunction};
}

/// True when the joint experiment can only give (yes,no) or (no,yes), and
/// both actually occur with nonzero probability.
inline bool is_epr_correlated(const JointMeasurement& m, const State& p, const Tolerance& tol = {}) {
    const auto d = outcome_distribution(m, p, tol);
    return d.yy() <= tol.eps_prob() && d.nn() <= tol.eps_prob() && d.yn() > tol.eps_prob() &&
           d.ny() > tol.eps_prob();
}

struct OutcomeCounts {
    std::uint64_t yy = 0;
    std::uint64_t yn = 0;
    std::uint64_t ny = 0;
    std::uint64_t nn = 0;

    std::uint64_t total() const { return yy + yn + ny + nn; }
};

namespace detail {

inline JointOutcome draw_outcome(const OutcomeDistribution& dist, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double u = u01(gen);
    double cumulative = dist.yy();
    if (u < cumulative) return JointOutcome::YY;
    cumulative += dist.yn();
    if (u < cumulative) return JointOutcome::YN;
    cumulative += dist.ny();
    if (u < cumulative) return JointOutcome::NY;
    return JointOutcome::NN;
}

} // namespace detail

/// One Born-rule draw by inverse-transform sampling; deterministic per seed.
inline JointOutcome sample_outcome(const JointMeasurement& m, const State& p, std::uint64_t seed,
                                   const Tolerance& tol = {}) {
    const auto dist = outcome_distribution(m, p, tol);
    std::mt19937_64 gen(seed);
    return detail::draw_outcome(dist, gen);
}

/// n draws from one seeded generator; the first draw equals
/// sample_outcome(m, p, seed).
inline OutcomeCounts sample_outcomes(const JointMeasurement& m, const State& p, std::uint64_t n, std::uint64_t seed,
                                     const Tolerance& tol = {}) {
    const auto dist = outcome_distribution(m, p, tol);
    std::mt19937_64 gen(seed);
    OutcomeCounts counts;
    for (std::uint64_t i = 0; i < n; ++i) {
        switch (detail::draw_outcome(dist, gen)) {
            case JointOutcome::YY: ++counts.yy; break;
            case JointOutcome::YN: ++counts.yn; break;
            case JointOutcome::NY: ++counts.ny; break;
            case JointOutcome::NN: ++counts.nn; break;
        }
    }
    return counts;
}

} // namespace qlor
