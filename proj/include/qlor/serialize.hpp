#pragma once

// JSON encodings shared by the CLI and the tests. Complex matrices travel as
// {"rows", "cols", "re", "im"} with row-major coefficient arrays; vectors are
// single-column matrices.

#include "qlor/checks.hpp"

#include <json.hpp>

namespace qlor {

using Json = nlohmann::json;

inline Json matrix_to_json(const Matrix& m) {
    std::vector<double> re;
    std::vector<double> im;
    re.reserve(static_cast<std::size_t>(m.size()));
    im.reserve(static_cast<std::size_t>(m.size()));
    for (Index r = 0; r < m.rows(); ++r) {
        for (Index c = 0; c < m.cols(); ++c) {
            re.push_back(m(r, c).real());
            im.push_back(m(r, c).imag());
        }
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

inline Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("re") || !j.contains("im")) {
        throw std::invalid_argument("matrix JSON must carry rows, cols, re, im");
    }
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) {
        throw std::invalid_argument("matrix rows/cols must be integers");
    }
    const Index rows = j["rows"].get<Index>();
    const Index cols = j["cols"].get<Index>();
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix rows/cols must be nonnegative");
    if (!j["re"].is_array() || !j["im"].is_array()) throw std::invalid_argument("matrix re/im must be arrays");
    const auto expected = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    if (j["re"].size() != expected || j["im"].size() != expected) {
        throw std::invalid_argument("matrix re/im length must equal rows*cols");
    }
    Matrix m(rows, cols);
    std::size_t k = 0;
    for (Index r = 0; r < rows; ++r) {
        for (Index c = 0; c < cols; ++c, ++k) {
            if (!j["re"][k].is_number() || !j["im"][k].is_number()) {
                throw std::invalid_argument("matrix coefficients must be numbers");
            }
            m(r, c) = Complex(j["re"][k].get<double>(), j["im"][k].get<double>());
        }
    }
    if (!m.allFinite()) throw std::invalid_argument("matrix coefficients must be finite");
    return m;
}

inline Json vector_to_json(const Vector& v) { return matrix_to_json(v); }

inline Vector vector_from_json(const Json& j) {
    const Matrix m = matrix_from_json(j);
    if (m.cols() != 1) throw std::invalid_argument("vector JSON must have a single column");
    return m.col(0);
}

inline Json distribution_to_json(const OutcomeDistribution& d) {
    return Json{{"yy", d.yy()}, {"yn", d.yn()}, {"ny", d.ny()}, {"nn", d.nn()}};
}

inline OutcomeDistribution distribution_from_json(const Json& j, const Tolerance& tol = {}) {
    for (const char* key : {"yy", "yn", "ny", "nn"}) {
        if (!j.contains(key) || !j[key].is_number()) {
            throw std::invalid_argument("distribution JSON must carry numeric yy, yn, ny, nn");
        }
    }
    return OutcomeDistribution(j["yy"].get<double>(), j["yn"].get<double>(), j["ny"].get<double>(),
                               j["nn"].get<double>(), tol);
}

inline Json counts_to_json(const OutcomeCounts& c, std::uint64_t n, std::uint64_t seed) {
    return Json{{"counts", Json{{"yy", c.yy}, {"yn", c.yn}, {"ny", c.ny}, {"nn", c.nn}}}, {"n", n}, {"seed", seed}};
}

inline Json truth_to_json(TruthStatus t) { return Json(to_string(t)); }

inline Json suites_to_json(const std::vector<SuiteResult>& suites) {
    Json arr = Json::array();
    for (const SuiteResult& s : suites) {
        Json failures = Json::array();
        for (const PropertyFailure& f : s.failures) {
            failures.push_back(Json{{"property", f.property}, {"seed", f.seed}, {"detail", f.detail}});
        }
        arr.push_back(Json{{"name", s.name}, {"checks", s.checks}, {"failures", failures}});
    }
    return arr;
}

} // namespace qlor
