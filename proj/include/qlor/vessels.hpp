#pragma once

// Macroscopic model: connected vessels of water whose joint pouring
// measurement exhibits EPR-like correlations and a nonclassical disjunction
// without any Hilbert space. The hidden split fraction is uniform on (0,1);
// the paper-level claims depend only on its support.

#include "qlor/measurement.hpp"

namespace qlor {

struct VesselState {
    double total_volume = 0.0; // liters

    explicit VesselState(double volume) : total_volume(volume) {
        if (!std::isfinite(volume) || volume < 0.0) {
            throw std::invalid_argument("vessel volume must be finite and nonnegative");
        }
    }
};

struct SplitOutcome {
    double left = 0.0;
    double right = 0.0;
};

enum class VesselSide { Left, Right };

/// "There is more than `threshold` liters of water at `side`."
struct VesselProposition {
    VesselSide side = VesselSide::Left;
    double threshold = 10.0;

    VesselProposition(VesselSide s, double t = 10.0) : side(s), threshold(t) {
        if (!std::isfinite(t) || t < 0.0) throw std::invalid_argument("threshold must be finite and nonnegative");
    }

    bool holds(const SplitOutcome& o) const {
        return (side == VesselSide::Left ? o.left : o.right) > threshold;
    }
};

namespace detail {

inline double split_fraction(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double f = u01(gen);
    while (f <= 0.0 || f >= 1.0) f = u01(gen); // open interval
    return f;
}

inline SplitOutcome split(const VesselState& s, double fraction) {
    const double left = fraction * s.total_volume;
    return {left, s.total_volume - left}; // conserves the total bit-exactly
}

} // namespace detail

/// Pours both sides at once: a hidden fraction f ~ U(0,1) goes left, the
/// rest right. Deterministic per seed.
inline SplitOutcome pour(const VesselState& s, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    return detail::split(s, detail::split_fraction(gen));
}

/// Strict thresholds: an exact (t, t) split is (no, no).
inline JointOutcome classify(const SplitOutcome& o, double threshold) {
    const bool left_yes = o.left > threshold;
    const bool right_yes = o.right > threshold;
    if (left_yes && right_yes) return JointOutcome::YY;
    if (left_yes) return JointOutcome::YN;
    if (right_yes) return JointOutcome::NY;
    return JointOutcome::NN;
}

inline OutcomeCounts vessel_counts(const VesselState& s, double threshold, std::uint64_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample count must be at least 1");
    std::mt19937_64 gen(seed);
    OutcomeCounts counts;
    for (std::uint64_t i = 0; i < n; ++i) {
        switch (classify(detail::split(s, detail::split_fraction(gen)), threshold)) {
            case JointOutcome::YY: ++counts.yy; break;
            case JointOutcome::YN: ++counts.yn; break;
            case JointOutcome::NY: ++counts.ny; break;
            case JointOutcome::NN: ++counts.nn; break;
        }
    }
    return counts;
}

inline OutcomeDistribution distribution_from_counts(const OutcomeCounts& c, const Tolerance& tol = {}) {
    const double n = static_cast<double>(c.total());
    if (!(n > 0)) throw std::invalid_argument("empty outcome counts");
    return OutcomeDistribution(static_cast<double>(c.yy) / n, static_cast<double>(c.yn) / n,
                               static_cast<double>(c.ny) / n, static_cast<double>(c.nn) / n, tol);
}

/// Outcome frequencies of n seeded pours.
inline OutcomeDistribution empirical_distribution(const VesselState& s, double threshold, std::uint64_t n,
                                                  std::uint64_t seed, const Tolerance& tol = {}) {
    return distribution_from_counts(vessel_counts(s, threshold, n, seed), tol);
}

/// Truth over the sampled corpus. Truth means certainty: a proposition is
/// true only if every one of the n outcomes confirmed it.
struct VesselTruthReport {
    TruthStatus a = TruthStatus::NotTrue;
    TruthStatus b = TruthStatus::NotTrue;
    TruthStatus conjunction = TruthStatus::NotTrue;
    TruthStatus disjunction = TruthStatus::NotTrue;
    OutcomeCounts counts;
};

inline VesselTruthReport vessel_truth(const VesselState& s, double threshold, std::uint64_t n, std::uint64_t seed,
                                      const Tolerance& tol = {}) {
    const OutcomeCounts counts = vessel_counts(s, threshold, n, seed);
    const OutcomeDistribution dist = distribution_from_counts(counts, tol);
    VesselTruthReport report;
    report.counts = counts;
    report.a = dist.yy() + dist.yn() >= 1.0 - tol.eps_prob() ? TruthStatus::True : TruthStatus::NotTrue;
    report.b = dist.yy() + dist.ny() >= 1.0 - tol.eps_prob() ? TruthStatus::True : TruthStatus::NotTrue;
    const auto [conj, disj] = truth_from_distribution(dist, tol);
    report.conjunction = conj;
    report.disjunction = disj;
    return report;
}

} // namespace qlor
