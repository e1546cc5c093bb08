// qlor — command-line front end for the quantum-logic toy models.
//
// Six subcommands: epr, witness, negation, vessels, concept, check. Each
// prints a JSON report to stdout and a short human summary to stderr.
// Exit codes: 0 success, 2 validation/usage error, 1 internal failure
// (including failed invariant suites under `check`).

#include <qlor/qlor.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace qlor;

Tolerance tolerance_from_env() {
    const char* raw = std::getenv("QLOR_EPS");
    if (raw == nullptr || *raw == '\0') return {};
    char* end = nullptr;
    const double eps = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(eps > 0.0) || !(eps < 1e-3)) {
        throw std::invalid_argument("QLOR_EPS must be a number in (0, 1e-3), got \"" + std::string(raw) + "\"");
    }
    return Tolerance(1e-10, eps, 1e-9);
}

std::vector<Index> parse_indices(const std::string& text) {
    std::vector<Index> indices;
    if (text.empty()) return indices;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string token = text.substr(pos, comma - pos);
        std::size_t used = 0;
        long long value = -1;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("expected a comma-separated list of indices, got \"" + text + "\"");
        }
        if (used != token.size() || value < 0) {
            throw std::invalid_argument("expected a comma-separated list of indices, got \"" + text + "\"");
        }
        indices.push_back(static_cast<Index>(value));
        pos = comma + 1;
    }
    return indices;
}

std::array<double, 4> parse_eigenvalues(const std::string& text) {
    std::array<double, 4> values{};
    std::size_t pos = 0;
    for (int k = 0; k < 4; ++k) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string token = text.substr(pos, comma - pos);
        std::size_t used = 0;
        try {
            values[static_cast<std::size_t>(k)] = std::stod(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("expected four comma-separated eigenvalues, got \"" + text + "\"");
        }
        if (used != token.size() || (k < 3 && comma == text.size()) || (k == 3 && comma != text.size())) {
            throw std::invalid_argument("expected four comma-separated eigenvalues, got \"" + text + "\"");
        }
        pos = comma + 1;
    }
    return values;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return Json::parse(in);
}

// Resolves the ambient dimension and the two propositions from coordinate
// index lists, with projector files as the general-case escape hatch.
struct PropositionFlags {
    std::string indices;
    std::string file;
};

Index resolve_dimension(Index dim_flag, bool dim_set, const std::optional<Matrix>& first,
                        const std::optional<Matrix>& second) {
    for (const auto& m : {first, second}) {
        if (!m) continue;
        if (dim_set && m->rows() != dim_flag) {
            throw std::invalid_argument("projector file dimension " + std::to_string(m->rows()) +
                                        " does not match --dim " + std::to_string(dim_flag));
        }
        return m->rows();
    }
    return dim_flag;
}

Proposition build_proposition(const std::string& label, Index dim, const PropositionFlags& flags,
                              const std::optional<Matrix>& loaded, const Tolerance& tol) {
    if (loaded) {
        if (loaded->rows() != dim) {
            throw std::invalid_argument("projector for " + label + " has dimension " + std::to_string(loaded->rows()) +
                                        ", expected " + std::to_string(dim));
        }
        return Proposition{label, subspace_from_projector(*loaded, tol)};
    }
    return Proposition{label, Subspace::coordinate(dim, parse_indices(flags.indices))};
}

Json proposition_summary(const Proposition& p) {
    return Json{{"label", p.label}, {"dim", p.dim()}};
}

void emit(const Json& report, const std::string& output_path) {
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!output_path.empty()) {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + output_path);
        out << text;
    }
}

int run_epr(Index dim, const PropositionFlags& fa, const PropositionFlags& fb, const std::array<double, 4>& lambda,
            std::uint64_t samples, std::uint64_t seed, const std::string& output, bool dim_set,
            const Tolerance& tol) {
    const auto ma = fa.file.empty() ? std::nullopt : std::optional<Matrix>(matrix_from_json(load_json_file(fa.file)));
    const auto mb = fb.file.empty() ? std::nullopt : std::optional<Matrix>(matrix_from_json(load_json_file(fb.file)));
    const Index d = resolve_dimension(dim, dim_set, ma, mb);
    const Proposition a = build_proposition("a", d, fa, ma, tol);
    const Proposition b = build_proposition("b", d, fb, mb, tol);

    const JointMeasurement m(a, b, lambda, tol);
    const State v = epr_state(a, b, tol);
    const OutcomeDistribution dist = outcome_distribution(m, v, tol);
    const auto [conj, disj] = truth_from_distribution(dist, tol);
    const TruthStatus ta = is_true(a, v, tol);
    const TruthStatus tb = is_true(b, v, tol);

    Json report{{"command", "epr"},
                {"dim", d},
                {"seed", seed},
                {"a", proposition_summary(a)},
                {"b", proposition_summary(b)},
                {"eigenvalues", lambda},
                {"state", vector_to_json(v.vector())},
                {"distribution", distribution_to_json(dist)},
                {"truth", Json{{"a", truth_to_json(ta)},
                               {"b", truth_to_json(tb)},
                               {"and", truth_to_json(conj)},
                               {"or", truth_to_json(disj)}}},
                {"epr_correlated", is_epr_correlated(m, v, tol)}};
    if (samples > 0) {
        const OutcomeCounts counts = sample_outcomes(m, v, samples, seed, tol);
        report["samples"] = counts_to_json(counts, samples, seed);
    }
    emit(report, output);

    std::cerr << "EPR state in dimension " << d << ": yy=" << dist.yy() << " yn=" << dist.yn() << " ny=" << dist.ny()
              << " nn=" << dist.nn() << "; a " << to_string(ta) << ", b " << to_string(tb) << ", a∧b "
              << to_string(conj) << ", a∨b " << to_string(disj) << "\n";
    return 0;
}

int run_witness(Index dim, const PropositionFlags& fa, const PropositionFlags& fb, const std::string& output,
                bool dim_set, const Tolerance& tol) {
    const auto ma = fa.file.empty() ? std::nullopt : std::optional<Matrix>(matrix_from_json(load_json_file(fa.file)));
    const auto mb = fb.file.empty() ? std::nullopt : std::optional<Matrix>(matrix_from_json(load_json_file(fb.file)));
    const Index d = resolve_dimension(dim, dim_set, ma, mb);
    const Proposition a = build_proposition("a", d, fa, ma, tol);
    const Proposition b = build_proposition("b", d, fb, mb, tol);

    const auto w = disjunction_witness(a, b, tol);
    Json report{{"command", "witness"},
                {"dim", d},
                {"a", proposition_summary(a)},
                {"b", proposition_summary(b)},
                {"witness", nullptr},
                {"truth", nullptr}};
    if (w) {
        report["witness"] = vector_to_json(w->vector());
        report["truth"] = Json{{"a", truth_to_json(is_true(a, *w, tol))},
                               {"b", truth_to_json(is_true(b, *w, tol))},
                               {"or", truth_to_json(is_true(join(a, b, tol), *w, tol))}};
    }
    emit(report, output);

    if (w) {
        std::cerr << "witness found: a∨b True while a and b are NotTrue (dimension " << d << ")\n";
    } else {
        std::cerr << "no witness: one proposition implies the other, so a∨b behaves classically\n";
    }
    return 0;
}

int run_negation(Index dim, const PropositionFlags& fa, const std::string& output, bool dim_set,
                 const Tolerance& tol) {
    const auto ma = fa.file.empty() ? std::nullopt : std::optional<Matrix>(matrix_from_json(load_json_file(fa.file)));
    const Index d = resolve_dimension(dim, dim_set, ma, std::nullopt);
    const Proposition a = build_proposition("a", d, fa, ma, tol);

    const auto w = negation_witness(a, tol);
    Json report{{"command", "negation"},
                {"dim", d},
                {"a", proposition_summary(a)},
                {"witness", nullptr},
                {"truth", nullptr}};
    if (w) {
        report["witness"] = vector_to_json(w->vector());
        report["truth"] = Json{{"a", truth_to_json(is_true(a, *w, tol))},
                               {"not_a", truth_to_json(is_true(complement(a, tol), *w, tol))}};
    }
    emit(report, output);

    if (w) {
        std::cerr << "witness found: both a and ¬a are NotTrue (dimension " << d << ")\n";
    } else {
        std::cerr << "no witness: a is trivial (zero or full), so negation behaves classically\n";
    }
    return 0;
}

int run_vessels(double volume, double threshold, std::uint64_t samples, std::uint64_t seed, const std::string& output,
                const Tolerance& tol) {
    if (!std::isfinite(threshold) || threshold <= 0.0) {
        throw std::invalid_argument("--threshold must be a positive finite volume");
    }
    const VesselState s(volume);
    const VesselTruthReport truth = vessel_truth(s, threshold, samples, seed, tol);
    const OutcomeDistribution dist = distribution_from_counts(truth.counts, tol);

    const Json report{{"volume", volume},
                      {"threshold", threshold},
                      {"n", samples},
                      {"distribution", distribution_to_json(dist)},
                      {"truth", Json{{"a", truth_to_json(truth.a)},
                                     {"b", truth_to_json(truth.b)},
                                     {"and", truth_to_json(truth.conjunction)},
                                     {"or", truth_to_json(truth.disjunction)}}}};
    emit(report, output);

    std::cerr << "V=" << volume << " t=" << threshold << " n=" << samples << ": yy=" << dist.yy()
              << " yn=" << dist.yn() << " ny=" << dist.ny() << " nn=" << dist.nn() << "; a " << to_string(truth.a)
              << ", b " << to_string(truth.b) << ", a∧b " << to_string(truth.conjunction) << ", a∨b "
              << to_string(truth.disjunction) << "\n";
    return 0;
}

int run_concept(Index instances, const std::string& output, const Tolerance& tol) {
    if (instances < 1) throw std::invalid_argument("--instances must be at least 1");
    const Index n = instances;
    std::vector<Proposition> props;
    props.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        props.push_back(Proposition{"a" + std::to_string(i + 1), Subspace::coordinate(n, {i})});
    }
    const State v(Vector::Constant(n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0)), tol);

    Json instance_truth = Json::array();
    Proposition disjunction = props.front();
    for (Index i = 0; i < n; ++i) {
        instance_truth.push_back(truth_to_json(is_true(props[static_cast<std::size_t>(i)], v, tol)));
        if (i > 0) disjunction = join(disjunction, props[static_cast<std::size_t>(i)], tol);
    }
    const TruthStatus disj = is_true(disjunction, v, tol);

    const Json report{{"command", "concept"},
                      {"instances", n},
                      {"state", vector_to_json(v.vector())},
                      {"instance_truth", instance_truth},
                      {"disjunction", truth_to_json(disj)}};
    emit(report, output);

    std::cerr << n << " orthogonal instances in superposition: each instance "
              << to_string(is_true(props.front(), v, tol)) << ", the " << n << "-fold disjunction "
              << to_string(disj) << "\n";
    return 0;
}

int run_check(std::uint64_t seed, const std::string& output, const Tolerance& tol) {
    const std::vector<SuiteResult> suites = run_all_suites(seed, tol);
    bool passed = true;
    for (const SuiteResult& s : suites) passed = passed && s.passed();

    const Json report{{"command", "check"}, {"seed", seed}, {"passed", passed}, {"suites", suites_to_json(suites)}};
    emit(report, output);

    for (const SuiteResult& s : suites) {
        std::cerr << "suite " << s.name << ": " << s.checks << " checks, " << s.failures.size() << " failures\n";
        for (const PropertyFailure& f : s.failures) {
            std::cerr << "  FAIL " << s.name << ": " << f.property << " (seed " << f.seed << ")"
                      << (f.detail.empty() ? "" : " " + f.detail) << "\n";
        }
    }
    return passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-logic toy models: EPR-type correlations, the nonclassical or/not, and the vessels of water"};
    app.require_subcommand(1);

    Index dim = 4;
    PropositionFlags fa{"0,1", ""};
    PropositionFlags fb{"0,2", ""};
    std::string eigenvalues_text = "1,2,3,4";
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string output;
    double volume = 20.0;
    double threshold = 10.0;
    Index instances = 5;

    CLI::App* epr = app.add_subcommand("epr", "Construct the EPR-like correlation state for two compatible propositions");
    epr->add_option("--dim", dim, "ambient dimension");
    epr->add_option("--a", fa.indices, "coordinate indices spanning a (comma-separated, 0-based)");
    epr->add_option("--b", fb.indices, "coordinate indices spanning b");
    epr->add_option("--a-file", fa.file, "JSON projector file for a (overrides --a)");
    epr->add_option("--b-file", fb.file, "JSON projector file for b (overrides --b)");
    epr->add_option("--eigenvalues", eigenvalues_text, "four joint-outcome eigenvalues");
    epr->add_option("--samples", samples, "draw this many seeded outcomes");
    epr->add_option("--seed", seed, "random seed for sampling");
    epr->add_option("--output", output, "also write the JSON report to this path");

    CLI::App* witness = app.add_subcommand("witness", "Find a state making a∨b true while neither a nor b is");
    witness->add_option("--dim", dim, "ambient dimension");
    witness->add_option("--a", fa.indices, "coordinate indices spanning a");
    witness->add_option("--b", fb.indices, "coordinate indices spanning b");
    witness->add_option("--a-file", fa.file, "JSON projector file for a");
    witness->add_option("--b-file", fb.file, "JSON projector file for b");
    witness->add_option("--output", output, "also write the JSON report to this path");

    CLI::App* negation = app.add_subcommand("negation", "Find a state making both a and ¬a not true");
    negation->add_option("--dim", dim, "ambient dimension");
    negation->add_option("--a", fa.indices, "coordinate indices spanning a");
    negation->add_option("--a-file", fa.file, "JSON projector file for a");
    negation->add_option("--output", output, "also write the JSON report to this path");

    CLI::App* vessels = app.add_subcommand("vessels", "Sample the vessels-of-water joint experiment");
    vessels->add_option("--volume", volume, "total volume in liters");
    vessels->add_option("--threshold", threshold, "per-side threshold in liters");
    vessels->add_option("--samples", samples, "number of pours (default 100000)");
    vessels->add_option("--seed", seed, "random seed");
    vessels->add_option("--output", output, "also write the JSON report to this path");

    CLI::App* concept_cmd = app.add_subcommand("concept", "Superpose n orthogonal instances of a concept");
    concept_cmd->add_option("--instances", instances, "number of orthogonal instances");
    concept_cmd->add_option("--output", output, "also write the JSON report to this path");

    CLI::App* check = app.add_subcommand("check", "Run the seeded invariant suites");
    check->add_option("--seed", seed, "base seed for all suites");
    check->add_option("--output", output, "also write the JSON report to this path");

    try {
        app.parse(argc, argv);

        const Tolerance tol = tolerance_from_env();
        if (app.got_subcommand(epr)) {
            return run_epr(dim, fa, fb, parse_eigenvalues(eigenvalues_text), samples, seed, output,
                           epr->count("--dim") > 0, tol);
        }
        if (app.got_subcommand(witness)) {
            return run_witness(dim, fa, fb, output, witness->count("--dim") > 0, tol);
        }
        if (app.got_subcommand(negation)) {
            if (negation->count("--a") == 0) fa.indices = "0";
            const Index d = negation->count("--dim") > 0 ? dim : 2;
            return run_negation(d, fa, output, negation->count("--dim") > 0, tol);
        }
        if (app.got_subcommand(vessels)) {
            if (vessels->count("--samples") == 0) samples = 100000;
            return run_vessels(volume, threshold, samples, seed, output, tol);
        }
        if (app.got_subcommand(concept_cmd)) {
            return run_concept(instances, output, tol);
        }
        if (app.got_subcommand(check)) {
            return run_check(seed, output, tol);
        }
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const NumericalFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidProjector& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IncompatiblePropositions& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NoEprState& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
