#include "helpers.hpp"

#include "smae/error.hpp"
#include "smae/report.hpp"

#include <doctest.h>

using namespace testing;

namespace {

ReportDocument worked_document()
{
    const char* text = "0,x*y+1,1,p*q ; 1,1,0,x*y";
    const Distribution2 d = dist(text);
    const AttachedObjects o = attach(d);
    const InvariantReport r = build_invariant_report(d, o, {});
    ReportDocument doc = make_document({"dist", text, "1"}, d, o, r);
    doc.elapsed_ms = 12.5;
    doc.extra["seed"] = "1";
    return doc;
}

} // namespace

TEST_CASE("report contents")
{
    const ReportDocument doc = worked_document();
    REQUIRE(doc.invariants.count("I"));
    CHECK(doc.invariants.at("I").size() == 9u);
    CHECK(S(doc.invariants.at("I")[0].c_str()) == S("1 - 2*x*y"));
    CHECK(doc.invariants.at("Zij").size() == 4u);
    CHECK(doc.r.has_value());
    CHECK(doc.verdicts.count("linearizable"));
    CHECK(doc.verdicts.count("log_linearizable"));
    CHECK(doc.version == kToolVersion);
}

TEST_CASE("json round trip")
{
    const ReportDocument doc = worked_document();
    const nlohmann::json j = to_json(doc);
    CHECK(from_json(nlohmann::json::parse(j.dump())) == doc);
    CHECK(j.contains("meta"));
    CHECK(j["invariants"].contains("special"));
    CHECK(j["verdicts"].contains("special_form"));
    nlohmann::json bad = j;
    bad.erase("classes");
    CHECK_THROWS_AS(from_json(bad), Error);
    CHECK_THROWS_AS(from_json(nlohmann::json::parse("[1, 2]")), Error);
}

TEST_CASE("text and json carry the same values")
{
    const ReportDocument doc = worked_document();
    const std::string text = to_text(doc);
    const nlohmann::json j = to_json(doc);
    for (const auto& [k, vs] : doc.invariants)
        for (std::size_t i = 0; i < vs.size(); ++i) {
            CHECK(j["invariants"][k][i].get<std::string>() == vs[i]);
            CHECK(text.find(vs[i]) != std::string::npos);
        }
    for (const auto& [k, v] : doc.objects)
        CHECK(text.find(k + " = " + v) != std::string::npos);
}

TEST_CASE("operator document")
{
    const VectorValuedForm a = parse_operator("0,0,-1,0; 0,0,0,1; 1,0,0,0; 0,-1,0,0", ctx());
    const ReportDocument doc = make_operator_document({"operator-a", "", "1"}, a, *standard_symplectic());
    CHECK(doc.extra.at("operator_kind") == "elliptic");
    CHECK(doc.invariants.at("Jtilde").size() == 9u);
    CHECK(from_json(to_json(doc)) == doc);
    // Row i lists the i-th components of the images of the coordinate fields.
    CHECK(doc.objects.at("A") == "0, 0, -1, 0 ; 0, 0, 0, 1 ; 1, 0, 0, 0 ; 0, -1, 0, 0");
}
