#include <catch2/catch_amalgamated.hpp>

#include <qlor/serialize.hpp>

using namespace qlor;

TEST_CASE("matrices round-trip through the JSON wire format", "[serialize]") {
    Matrix m(2, 3);
    m << Complex(1.0, -0.5), Complex(0.0, 2.0), Complex(3.25, 0.0), Complex(-1.0, 0.0), Complex(0.5, 0.5),
        Complex(0.0, -4.0);

    const Json j = matrix_to_json(m);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 3);
    REQUIRE(j["re"].size() == 6);
    REQUIRE(j["im"].size() == 6);
    // Row-major order: the (0,1) entry lands at flat index 1.
    CHECK(j["re"][1].get<double>() == 0.0);
    CHECK(j["im"][1].get<double>() == 2.0);

    const Matrix back = matrix_from_json(j);
    CHECK((back - m).norm() == 0.0);

    // Through text, too: dump/parse keeps doubles exact.
    const Matrix reparsed = matrix_from_json(Json::parse(j.dump()));
    CHECK((reparsed - m).norm() == 0.0);
}

TEST_CASE("malformed matrix JSON is rejected", "[serialize]") {
    const Json good = matrix_to_json(Matrix::Identity(2, 2));

    Json missing = good;
    missing.erase("im");
    CHECK_THROWS_AS(matrix_from_json(missing), std::invalid_argument);

    Json short_re = good;
    short_re["re"] = {1.0, 0.0, 0.0};
    CHECK_THROWS_AS(matrix_from_json(short_re), std::invalid_argument);

    Json bad_entry = good;
    bad_entry["re"][0] = "one";
    CHECK_THROWS_AS(matrix_from_json(bad_entry), std::invalid_argument);

    Json bad_shape = good;
    bad_shape["rows"] = "two";
    CHECK_THROWS_AS(matrix_from_json(bad_shape), std::invalid_argument);

    Json negative = good;
    negative["rows"] = -2;
    CHECK_THROWS_AS(matrix_from_json(negative), std::invalid_argument);

    Json infinite = good;
    infinite["re"][0] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(matrix_from_json(infinite), std::invalid_argument);

    CHECK_THROWS_AS(matrix_from_json(Json::array()), std::invalid_argument);
}

TEST_CASE("vectors are single-column matrices", "[serialize]") {
    Vector v(2);
    v << Complex(1.0, 0.0), Complex(0.0, 1.0);
    const Json j = vector_to_json(v);
    CHECK(j["cols"] == 1);
    CHECK((vector_from_json(j) - v).norm() == 0.0);

    CHECK_THROWS_AS(vector_from_json(matrix_to_json(Matrix::Identity(2, 2))), std::invalid_argument);
}

TEST_CASE("distributions and counts serialize with the yy/yn/ny/nn keys", "[serialize]") {
    const OutcomeDistribution d(0.0, 0.5, 0.5, 0.0);
    const Json j = distribution_to_json(d);
    CHECK(j == Json({{"yy", 0.0}, {"yn", 0.5}, {"ny", 0.5}, {"nn", 0.0}}));
    CHECK(distribution_from_json(j).yn() == 0.5);
    CHECK_THROWS_AS(distribution_from_json(Json{{"yy", 1.0}}), std::invalid_argument);

    OutcomeCounts counts;
    counts.yn = 3;
    counts.ny = 1;
    const Json c = counts_to_json(counts, 4, 9);
    CHECK(c["counts"]["yn"] == 3);
    CHECK(c["n"] == 4);
    CHECK(c["seed"] == 9);

    CHECK(truth_to_json(TruthStatus::True) == Json("True"));
    CHECK(truth_to_json(TruthStatus::NotTrue) == Json("NotTrue"));
}

TEST_CASE("suite results serialize for the check report", "[serialize]") {
    SuiteResult suite;
    suite.name = "logic";
    suite.checks = 5;
    suite.failures.push_back({"dimension formula", 42, "dim mismatch"});
    const Json j = suites_to_json({suite});
    REQUIRE(j.is_array());
    CHECK(j[0]["name"] == "logic");
    CHECK(j[0]["checks"] == 5);
    CHECK(j[0]["failures"][0]["seed"] == 42);
    CHECK(j[0]["failures"][0]["property"] == "dimension formula");
}
