#include <doctest.h>

#include "johnson/io.hpp"

using namespace johnson;

TEST_CASE("vertex function JSON round trip is byte-stable") {
    const JohnsonParams p(6, 3);
    VertexFunction f(p);
    f[0] = make_rat(-3, 6);  // stored canonically as -1/2
    f[7] = Rat(4);
    const std::string text = vertex_function_to_json(f);
    CHECK(text.find("\"-1/2\"") != std::string::npos);
    CHECK(text.find("\"4\"") != std::string::npos);

    const VertexFunction g = vertex_function_from_json(text);
    CHECK(g == f);
    CHECK(vertex_function_to_json(g) == text);
}

TEST_CASE("vertex function JSON validation") {
    CHECK_THROWS(vertex_function_from_json("{\"n\": 6, \"w\": 3, \"values\": [\"1\"]}"));
    CHECK_THROWS(vertex_function_from_json("{\"n\": 5, \"w\": 3, \"values\": []}"));
    CHECK_THROWS(vertex_function_from_json("not json"));
    // denominator zero is rejected on parse
    CHECK_THROWS(rat_from_string("1/0"));
    CHECK(rat_from_string("6/4") == make_rat(3, 2));
    CHECK(to_string(rat_from_string("-6/4")) == "-3/2");
}

TEST_CASE("restriction JSON round trip") {
    const JohnsonParams p(6, 3);
    std::vector<std::pair<Vertex, Rat>> values{
        {Vertex::parse("111000"), make_rat(1, 3)},
        {Vertex::parse("110100"), Rat(-2)},
    };
    const std::string text = restriction_to_json(p, values);
    const auto back = restriction_from_json(text);
    REQUIRE(back.size() == 2);
    CHECK(back[0].first == values[0].first);
    CHECK(back[0].second == values[0].second);
    CHECK(back[1].first == values[1].first);
    CHECK(back[1].second == values[1].second);

    CHECK_THROWS(restriction_from_json("{\"n\":6,\"w\":3,\"values\":[[\"1100\",\"1\"]]}"));
}

TEST_CASE("verdict CSV rows") {
    CHECK(verdict_csv_header() ==
          "n,w,i,r,criterion_verdict,oracle_verdict,agreement,failing_k1,failing_k2,which_F\n");
    VerdictRow row;
    row.n = 9;
    row.w = 3;
    row.i = 1;
    row.r = 2;
    row.criterion_verdict = Verdict::NotReconstructible;
    row.oracle_verdict = Verdict::NotReconstructible;
    row.agreement = true;
    row.failing_k = {0, 0};
    row.failing_which = '1';
    CHECK(verdict_csv_row(row) == "9,3,1,2,NotReconstructible,NotReconstructible,true,0,0,F1\n");

    VerdictRow clean;
    clean.n = 9;
    clean.w = 3;
    clean.i = 1;
    clean.r = 1;
    clean.criterion_verdict = Verdict::Reconstructible;
    clean.oracle_verdict = Verdict::Reconstructible;
    clean.agreement = true;
    CHECK(verdict_csv_row(clean) == "9,3,1,1,Reconstructible,Reconstructible,true,,,\n");
}

TEST_CASE("criterion report rendering") {
    const CriterionReport rep = criterion(1, 2, JohnsonParams(9, 3));
    const std::string text = criterion_report_text(rep);
    CHECK(text.find("NotReconstructible") != std::string::npos);
    CHECK(text.find("F1(0,0) = 0") != std::string::npos);

    const std::string js = criterion_report_json(rep);
    CHECK(js.find("\"verdict\": \"NotReconstructible\"") != std::string::npos);
    CHECK(js.find("\"failing_k1\": 0") != std::string::npos);
    // exact rationals rendered as p/q strings
    const std::string js2 = criterion_report_json(criterion(1, 1, JohnsonParams(9, 3)));
    CHECK(js2.find("\"1/2\"") != std::string::npos);
}
