#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <sstream>

#include "ncmax/harness.hpp"
#include "ncmax/io.hpp"

using namespace ncmax;

TEST_CASE("profile JSON round trip, order insensitive") {
    SpectralProfile p({{3.0, 1.0}, {1.0, 1.0}});
    SpectralProfile back = profile_from_json(profile_to_json(p));
    REQUIRE(back.size() == 2);
    CHECK(back.atoms()[0].value == 3.0);
    CHECK(back.atoms()[1].weight == 1.0);

    auto j = nlohmann::json::parse(
        R"({"atoms":[{"value":1.0,"weight":1.0},{"value":3.0,"weight":0.5},{"value":3.0,"weight":0.5}]})");
    SpectralProfile q = profile_from_json(j);
    REQUIRE(q.size() == 2);
    CHECK(q.atoms()[0].value == 3.0);
    CHECK(q.atoms()[0].weight == 1.0);

    CHECK_THROWS(profile_from_json(nlohmann::json::parse(R"({"atoms":[{"value":-1,"weight":1}]})")));
    CHECK_THROWS(profile_from_json(nlohmann::json::parse(R"({"noatoms":[]})")));
}

TEST_CASE("step function CSV round trip") {
    StepFunction f({1.0, 2.0}, {3.0, 1.0});
    std::string csv = step_to_csv(f);
    std::istringstream in(csv);
    StepFunction back = step_from_csv(in);
    REQUIRE(back.pieces() == 2);
    CHECK(back(0.5) == 3.0);
    CHECK(back(1.5) == 1.0);
    CHECK(back(2.5) == 0.0);

    std::istringstream bad("t,v\n2,1\n1,3\n");
    CHECK_THROWS(step_from_csv(bad));
}

TEST_CASE("matrix CSV and JSON") {
    std::istringstream in("1,2\n3,4\n");
    DenseMatrix m = matrix_from_csv(in);
    REQUIRE(m.rows == 2);
    REQUIRE(m.cols == 2);
    CHECK(m.at(1, 0) == 3.0);

    DenseMatrix back = matrix_from_json(matrix_to_json(m));
    CHECK(back.at(0, 1) == 2.0);

    std::istringstream ragged("1,2\n3\n");
    CHECK_THROWS(matrix_from_csv(ragged));
}

TEST_CASE("report JSON schema and determinism") {
    ReportDocument r = run_suite("theorem-16", 50, 42);
    nlohmann::json j = r.to_json();
    CHECK(j.at("schema") == "ncmax/1");
    CHECK(j.at("suite") == "theorem-16");
    CHECK(j.at("trials") == 50);
    CHECK(j.at("seed") == 42);
    CHECK(j.at("passed") == true);
    CHECK(j.at("violations").is_array());
    CHECK(j.at("extremalRatio").is_number());
    CHECK(j.contains("runtimeMillis"));

    ReportDocument r2 = run_suite("theorem-16", 50, 42);
    nlohmann::json a = r.to_json(), b = r2.to_json();
    a.erase("runtimeMillis");
    b.erase("runtimeMillis");
    CHECK(a.dump() == b.dump());  // byte-identical modulo the timer

    CHECK_THROWS_AS(run_suite("no-such-suite", 10, 1), std::invalid_argument);
}

TEST_CASE("every suite passes a short run") {
    for (const char* name : {"theorem-16", "decomposition", "sublinearity", "triangle-svf",
                             "weak-type", "linf-contraction", "hardy-constants",
                             "norms-triangle", "oracle-ma", "oracle-mu"}) {
        ReportDocument r = run_suite(name, 25, 7);
        INFO(name);
        CHECK(r.passed);
        CHECK(r.violations.empty());
    }
}

TEST_CASE("extremal ratio bounds for the main bound suite") {
    ReportDocument r = run_suite("theorem-16", 200, 42);
    CHECK(r.extremal_ratio >= 1.0 - 1e-12);
    CHECK(r.extremal_ratio <= 16.0 + 1e-9);
    CHECK_FALSE(r.extremal_witness.empty());
}

TEST_CASE("worked-example scans") {
    ReportDocument e1 = run_example(1);
    CHECK(e1.passed);
    nlohmann::json w1 = nlohmann::json::parse(e1.extremal_witness);
    CHECK(w1.at("floorInfRatio").get<double>() > 0.0);
    CHECK(std::isfinite(w1.at("rangeSupRatio").get<double>()));

    ReportDocument e2 = run_example(2);
    CHECK(e2.passed);
    nlohmann::json w2 = nlohmann::json::parse(e2.extremal_witness);
    double c1 = w2.at("c1").get<double>(), c2 = w2.at("c2").get<double>();
    CHECK(c1 > 0.0);
    CHECK(c1 <= c2);
    CHECK(std::isfinite(c2));

    CHECK_THROWS_AS(run_example(3), std::invalid_argument);
}

TEST_CASE("curve emission marks left limits") {
    StepFunction f({1.0, 2.0}, {3.0, 1.0});
    std::string out = emit_curve_step(f, 16, 0.1, 4.0);
    CHECK(out.find("t,value\n") == 0);
    CHECK(out.find("1-,3") != std::string::npos);  // left limit at the jump
    CHECK(out.find("1,1") != std::string::npos);

    CesaroCurve c = cesaro(f);
    std::string cout_ = emit_curve_cesaro(c, 16, 0.1, 4.0);
    CHECK(cout_.find("t,value\n") == 0);
    bool no_left_limit_rows = cout_.find("-,") == std::string::npos;
    CHECK(no_left_limit_rows);  // continuous curve: no marker rows
}
