#pragma once

// Seeded invariant suites over the logic, measurement, and vessels modules.
// Each suite draws reproducible random instances and records every violated
// property together with the seed that produced it.

#include "qlor/vessels.hpp"

#include <algorithm>
#include <sstream>

namespace qlor {

struct PropertyFailure {
    std::string property;
    std::uint64_t seed = 0;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::vector<PropertyFailure> failures;

    bool passed() const { return failures.empty(); }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
    return splitmix64(splitmix64(a) ^ splitmix64(b + 0x517cc1b727220a95ULL) ^ (c * 0x2545f4914f6cdd1dULL));
}

class SuiteRecorder {
  public:
    explicit SuiteRecorder(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& property, std::uint64_t seed, const std::string& detail = "") {
        ++result_.checks;
        if (!ok) result_.failures.push_back({property, seed, detail});
    }

    SuiteResult take() { return std::move(result_); }

  private:
    SuiteResult result_;
};

} // namespace detail

/// Two compatible propositions: spans of coordinate index sets conjugated by
/// a shared random unitary. With require_epr_ranges, each proposition keeps
/// a direction the other excludes, so the EPR construction applies.
inline std::pair<Proposition, Proposition> random_compatible_pair(Index d, std::uint64_t seed,
                                                                  bool require_epr_ranges = false,
                                                                  const Tolerance& tol = {}) {
    if (d < 1 || (require_epr_ranges && d < 2)) {
        throw std::invalid_argument("ambient dimension too small for a compatible pair");
    }
    std::mt19937_64 gen(detail::splitmix64(seed));
    std::uniform_int_distribution<int> region(0, 3); // both, a only, b only, neither
    std::vector<Index> in_a;
    std::vector<Index> in_b;
    for (Index i = 0; i < d; ++i) {
        int r = region(gen);
        if (require_epr_ranges && i == 0) r = 1;
        if (require_epr_ranges && i == 1) r = 2;
        if (r == 0 || r == 1) in_a.push_back(i);
        if (r == 0 || r == 2) in_b.push_back(i);
    }
    const Matrix u = random_unitary(d, detail::mix_seed(seed, 0xa11ce));
    auto pick = [&](const std::vector<Index>& indices) {
        Matrix basis(d, static_cast<Index>(indices.size()));
        for (std::size_t j = 0; j < indices.size(); ++j) basis.col(static_cast<Index>(j)) = u.col(indices[j]);
        return Subspace(std::move(basis), tol);
    };
    return {Proposition{"a", pick(in_a)}, Proposition{"b", pick(in_b)}};
}

/// Lattice and truth properties of the logic connectives, 100 seeded trials
/// per ambient dimension in {2, 3, 4, 6, 8}.
inline SuiteResult logic_suite(std::uint64_t base_seed = 0, const Tolerance& tol = {}) {
    detail::SuiteRecorder rec("logic");
    const Index dims[] = {2, 3, 4, 6, 8};
    for (Index d : dims) {
        const double eps = tol.matrix_eq(d);
        std::mt19937_64 dim_gen(detail::mix_seed(base_seed, static_cast<std::uint64_t>(d)));
        std::uniform_int_distribution<Index> any_dim(0, d);
        for (int trial = 0; trial < 100; ++trial) {
            const std::uint64_t seed = detail::mix_seed(base_seed, static_cast<std::uint64_t>(d), trial + 1);
            const Proposition a{"a", random_subspace(d, any_dim(dim_gen), detail::mix_seed(seed, 1), tol)};
            const Proposition b{"b", random_subspace(d, any_dim(dim_gen), detail::mix_seed(seed, 2), tol)};
            const Proposition c{"c", random_subspace(d, any_dim(dim_gen), detail::mix_seed(seed, 3), tol)};

            const Proposition ab_meet = meet(a, b, tol);
            const Proposition ab_join = join(a, b, tol);
            const Proposition not_a = complement(a, tol);
            const Proposition not_b = complement(b, tol);

            rec.check(ab_join.dim() + ab_meet.dim() == a.dim() + b.dim(), "dimension formula", seed,
                      "dim(join)=" + std::to_string(ab_join.dim()) + " dim(meet)=" + std::to_string(ab_meet.dim()));
            rec.check(approx_equal(projector(complement(ab_join, tol).subspace),
                                   projector(meet(not_a, not_b, tol).subspace), eps),
                      "De Morgan", seed);
            rec.check(approx_equal(projector(complement(not_a, tol).subspace), projector(a.subspace), eps),
                      "double complement", seed);

            // Orthomodularity on a constructed a <= b pair.
            {
                const Proposition big = join(a, c, tol);
                const bool ortho = implies(a, big, tol) &&
                                   approx_equal(projector(join(a, meet(big, not_a, tol), tol).subspace),
                                                projector(big.subspace), eps);
                rec.check(ortho, "orthomodularity", seed);
            }

            // Truth properties over a batch of generic and aligned states.
            std::vector<State> states;
            states.emplace_back(random_unit_vector(d, detail::mix_seed(seed, 4)));
            if (ab_meet.dim() > 0) states.emplace_back(Vector(ab_meet.subspace.basis().col(0)));
            if (a.dim() > 0) states.emplace_back(Vector(a.subspace.basis().col(0)));
            if (b.dim() > 0) states.emplace_back(Vector(b.subspace.basis().col(0)));
            if (not_a.dim() > 0) states.emplace_back(Vector(not_a.subspace.basis().col(0)));
            for (const State& p : states) {
                const bool a_true = is_true(a, p, tol) == TruthStatus::True;
                const bool b_true = is_true(b, p, tol) == TruthStatus::True;
                const bool meet_true = is_true(ab_meet, p, tol) == TruthStatus::True;
                const bool join_true = is_true(ab_join, p, tol) == TruthStatus::True;
                rec.check(meet_true == (a_true && b_true), "conjunction is classical", seed);
                rec.check(!(a_true || b_true) || join_true, "disjunction one-way", seed);
                const bool not_a_true = is_true(not_a, p, tol) == TruthStatus::True;
                rec.check(!not_a_true || !a_true, "negation one-way", seed);
                const Proposition big = join(a, c, tol);
                rec.check(!a_true || is_true(big, p, tol) == TruthStatus::True, "implication is classical", seed);
            }

            // Whenever neither implies the other, a witness refutes the
            // converse of disjunction one-way.
            if (!implies(a, b, tol) && !implies(b, a, tol)) {
                const auto w = disjunction_witness(a, b, tol);
                const bool ok = w.has_value() && is_true(ab_join, *w, tol) == TruthStatus::True &&
                                is_true(a, *w, tol) == TruthStatus::NotTrue &&
                                is_true(b, *w, tol) == TruthStatus::NotTrue;
                rec.check(ok, "disjunction witness", seed);
            }
            if (a.dim() > 0 && a.dim() < d) {
                const auto w = negation_witness(a, tol);
                const bool ok = w.has_value() && is_true(a, *w, tol) == TruthStatus::NotTrue &&
                                is_true(not_a, *w, tol) == TruthStatus::NotTrue;
                rec.check(ok, "negation witness", seed);
            }

            // Compatible pairs collapse to the product/sum identities.
            {
                const auto [ca, cb] = random_compatible_pair(d, detail::mix_seed(seed, 5), false, tol);
                const Matrix pa = projector(ca.subspace);
                const Matrix pb = projector(cb.subspace);
                rec.check(approx_equal(projector(meet(ca, cb, tol).subspace), pa * pb, eps),
                          "compatible meet is projector product", seed);
                rec.check(approx_equal(projector(join(ca, cb, tol).subspace), pa + pb - pa * pb, eps),
                          "compatible join is projector sum", seed);
            }
        }
    }
    return rec.take();
}

/// Joint-measurement properties: spectral tagging of the outcome regions,
/// the product-projector resolution of the identity, distribution-based vs
/// lattice truth, the EPR construction, and Born-rule sampling.
inline SuiteResult measurement_suite(std::uint64_t base_seed = 0, const Tolerance& tol = {}) {
    detail::SuiteRecorder rec("measurement");

    for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t seed = detail::mix_seed(base_seed, 0x5bec, trial);
        std::mt19937_64 gen(seed);
        const Index d = 2 + static_cast<Index>(gen() % 7);
        const auto [a, b] = random_compatible_pair(d, detail::mix_seed(seed, 1), false, tol);
        const JointMeasurement m(a, b, {1, 2, 3, 4}, tol);
        const Matrix h = joint_operator(m);
        const auto regions = outcome_projectors(a, b);

        rec.check(approx_equal(h, h.adjoint(), tol.matrix_eq(d)), "joint operator Hermitian", seed);
        Matrix sum = Matrix::Zero(d, d);
        bool orthogonal = true;
        bool idempotent = true;
        for (int i = 0; i < 4; ++i) {
            sum += regions[i];
            idempotent = idempotent && approx_equal(regions[i] * regions[i], regions[i], tol.matrix_eq(d));
            for (int j = 0; j < 4; ++j) {
                if (i != j) {
                    orthogonal = orthogonal &&
                                 approx_equal(regions[i] * regions[j], Matrix::Zero(d, d), tol.matrix_eq(d));
                }
            }
        }
        rec.check(idempotent, "outcome projectors idempotent", seed);
        rec.check(orthogonal, "outcome projectors mutually orthogonal", seed);
        rec.check(approx_equal(sum, Matrix::Identity(d, d), tol.matrix_eq(d)), "outcome projectors resolve identity",
                  seed);

        bool spectral = true;
        for (int k = 0; k < 4; ++k) {
            const Subspace range = subspace_from_projector(regions[k], tol);
            for (Index col = 0; col < range.dim(); ++col) {
                const Vector v = range.basis().col(col);
                spectral = spectral && (h * v - m.eigenvalues()[k] * v).norm() <= tol.matrix_eq(d);
            }
        }
        rec.check(spectral, "spectral consistency", seed);
    }

    for (int trial = 0; trial < 100; ++trial) {
        const std::uint64_t seed = detail::mix_seed(base_seed, 0x7ab1e, trial);
        std::mt19937_64 gen(seed);
        const Index d = 2 + static_cast<Index>(gen() % 7);
        const auto [a, b] = random_compatible_pair(d, detail::mix_seed(seed, 1), false, tol);
        const JointMeasurement m(a, b, {1, 2, 3, 4}, tol);
        const Proposition ab_meet = meet(a, b, tol);
        const Proposition ab_join = join(a, b, tol);

        std::vector<State> states;
        states.emplace_back(random_unit_vector(d, detail::mix_seed(seed, 2)));
        if (ab_meet.dim() > 0) states.emplace_back(Vector(ab_meet.subspace.basis().col(0)));
        if (ab_join.dim() > 0) states.emplace_back(Vector(ab_join.subspace.basis().col(0)));
        if (ab_join.dim() < d) {
            states.emplace_back(Vector(complement(ab_join, tol).subspace.basis().col(0)));
        }
        for (const State& p : states) {
            const auto [conj, disj] = truth_from_distribution(outcome_distribution(m, p, tol), tol);
            rec.check(conj == is_true(ab_meet, p, tol) && disj == is_true(ab_join, p, tol),
                      "truth table matches lattice truth", seed);
        }
    }

    for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t seed = detail::mix_seed(base_seed, 0xe9e, trial);
        std::mt19937_64 gen(seed);
        const Index d = 2 + static_cast<Index>(gen() % 7);
        const auto [a, b] = random_compatible_pair(d, detail::mix_seed(seed, 1), true, tol);
        const State v = epr_state(a, b, tol);
        const JointMeasurement m(a, b, {1, 2, 3, 4}, tol);
        const bool ok = is_epr_correlated(m, v, tol) && is_true(join(a, b, tol), v, tol) == TruthStatus::True &&
                        is_true(a, v, tol) == TruthStatus::NotTrue && is_true(b, v, tol) == TruthStatus::NotTrue;
        rec.check(ok, "EPR state anti-correlated and nonclassical", seed);
    }

    // Sampling soundness: empirical cell frequencies within 5 sigma of the
    // exact distribution (zero-probability cells must stay empty).
    for (int trial = 0; trial < 4; ++trial) {
        const std::uint64_t seed = detail::mix_seed(base_seed, 0x5a3, trial);
        std::mt19937_64 gen(seed);
        const Index d = 2 + static_cast<Index>(gen() % 7);
        const auto [a, b] = random_compatible_pair(d, detail::mix_seed(seed, 1), true, tol);
        const JointMeasurement m(a, b, {1, 2, 3, 4}, tol);
        const State p = trial % 2 == 0 ? epr_state(a, b, tol)
                                       : State(random_unit_vector(d, detail::mix_seed(seed, 2)));
        const auto dist = outcome_distribution(m, p, tol);
        const std::uint64_t n = 100000;
        const auto counts = sample_outcomes(m, p, n, detail::mix_seed(seed, 3), tol);
        const std::uint64_t observed[4] = {counts.yy, counts.yn, counts.ny, counts.nn};
        const double expected[4] = {dist.yy(), dist.yn(), dist.ny(), dist.nn()};
        bool ok = true;
        for (int k = 0; k < 4; ++k) {
            const double sigma = std::sqrt(std::max(expected[k] * (1.0 - expected[k]), 0.0) / static_cast<double>(n));
            const double freq = static_cast<double>(observed[k]) / static_cast<double>(n);
            ok = ok && std::abs(freq - expected[k]) <= 5.0 * sigma + 1e-12;
        }
        rec.check(ok, "sampling matches exact distribution", seed);
    }

    return rec.take();
}

/// Vessels-of-water properties: conservation, impossible outcomes, the
/// analytic (no,no) mass below twice the threshold, monotonicity of
/// (yes,yes) in the volume, and the structural parallel with the Hilbert
/// EPR state.
inline SuiteResult vessels_suite(std::uint64_t base_seed = 0, const Tolerance& tol = {}) {
    detail::SuiteRecorder rec("vessels");
    const double threshold = 10.0;

    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t seed = detail::mix_seed(base_seed, 0xc0, trial);
        std::mt19937_64 gen(seed);
        const double volume = static_cast<double>(gen() % 400) / 4.0;
        const VesselState s(volume);
        const SplitOutcome o = pour(s, detail::mix_seed(seed, 1));
        const bool conserved = o.left >= 0.0 && o.right >= 0.0 &&
                               std::abs(o.left + o.right - volume) <= 1e-12 * (volume + 1.0);
        rec.check(conserved, "pour conserves the total volume", seed);
    }

    // Between threshold and twice the threshold: (yes,yes) is impossible and
    // (no,no) carries the analytic mass 2t/V - 1.
    for (double volume : {12.0, 15.0, 18.0}) {
        const std::uint64_t seed = detail::mix_seed(base_seed, 0xb1, static_cast<std::uint64_t>(volume));
        const VesselState s(volume);
        const auto counts = vessel_counts(s, threshold, 100000, seed);
        rec.check(counts.yy == 0, "yes-yes impossible below twice the threshold", seed,
                  "V=" + std::to_string(volume));
        const double p_nn = 2.0 * threshold / volume - 1.0;
        const double sigma = std::sqrt(p_nn * (1.0 - p_nn) / 100000.0);
        const double freq = static_cast<double>(counts.nn) / 100000.0;
        rec.check(std::abs(freq - p_nn) <= 5.0 * sigma, "no-no frequency matches its analytic mass", seed,
                  "V=" + std::to_string(volume));
        const auto small = vessel_counts(s, threshold, 100, detail::mix_seed(seed, 2));
        rec.check(small.yn > 0 && small.ny > 0, "both single-sided outcomes occur", seed);
    }

    // At exactly twice the threshold both extremes vanish ((no,no) would
    // need the split fraction to hit 1/2 exactly).
    for (std::uint64_t n : {std::uint64_t{1}, std::uint64_t{100}, std::uint64_t{100000}}) {
        const std::uint64_t seed = detail::mix_seed(base_seed, 0xb2, n);
        const auto counts = vessel_counts(VesselState(2.0 * threshold), threshold, n, seed);
        rec.check(counts.yy == 0 && counts.nn == 0, "only anti-correlated outcomes at twice the threshold", seed,
                  "n=" + std::to_string(n));
    }

    // P(yes,yes) nondecreasing in the volume under shared seeds.
    {
        const std::uint64_t seed = detail::mix_seed(base_seed, 0xb3);
        double previous = -1.0;
        bool monotone = true;
        for (double volume : {20.0, 25.0, 30.0, 40.0}) {
            const auto dist = empirical_distribution(VesselState(volume), threshold, 100000, seed, tol);
            monotone = monotone && dist.yy() >= previous;
            previous = dist.yy();
        }
        rec.check(monotone, "yes-yes frequency nondecreasing in volume", seed);
    }

    // The 20-liter vessel reproduces the Hilbert EPR truth pattern.
    {
        const std::uint64_t seed = detail::mix_seed(base_seed, 0xb4);
        const auto report = vessel_truth(VesselState(20.0), threshold, 100000, seed, tol);
        const Proposition a{"a", Subspace::coordinate(4, {0, 1})};
        const Proposition b{"b", Subspace::coordinate(4, {0, 2})};
        const State v = epr_state(a, b, tol);
        const auto dist = outcome_distribution(JointMeasurement(a, b, {1, 2, 3, 4}, tol), v, tol);
        const auto [conj, disj] = truth_from_distribution(dist, tol);
        const bool same_pattern = report.a == is_true(a, v, tol) && report.b == is_true(b, v, tol) &&
                                  report.conjunction == conj && report.disjunction == disj &&
                                  report.disjunction == TruthStatus::True &&
                                  report.conjunction == TruthStatus::NotTrue;
        rec.check(same_pattern, "vessel truth pattern matches the Hilbert EPR state", seed);
    }

    return rec.take();
}

/// All suites, sorted by name (stable aggregation for concurrent runs).
inline std::vector<SuiteResult> run_all_suites(std::uint64_t base_seed = 0, const Tolerance& tol = {}) {
    std::vector<SuiteResult> suites;
    suites.push_back(logic_suite(base_seed, tol));
    suites.push_back(measurement_suite(base_seed, tol));
    suites.push_back(vessels_suite(base_seed, tol));
    std::sort(suites.begin(), suites.end(), [](const SuiteResult& x, const SuiteResult& y) { return x.name < y.name; });
    return suites;
}

} // namespace qlor
