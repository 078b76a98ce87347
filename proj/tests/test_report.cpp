#include <doctest.h>

#include <json.hpp>

#include "lieq/catalog.hpp"
#include "lieq/report.hpp"

using namespace lieq;

namespace {

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("text and machine renderings carry the same content") {
    const auto r = h2_report(catalog("sim2"), "catalog:sim2");
    const auto text = render(r, ReportFormat::Text);
    CHECK(contains(text, "dim H2 = 1"));
    CHECK(contains(text, "C(J3,K3) = 1"));
    CHECK(r.exit_code == 0);

    const auto doc = nlohmann::json::parse(render(r, ReportFormat::Machine));
    CHECK(doc["verb"] == "h2");
    CHECK(doc["source"] == "catalog:sim2");
    CHECK(doc["verdict"] == "value");
    CHECK(doc["exit_code"] == 0);
    CHECK(doc["warnings"].is_array());
    REQUIRE(doc["sections"].is_array());
    bool found = false;
    for (const auto& s : doc["sections"])
        for (const auto& row : s["rows"]) {
            std::string joined;
            for (const auto& cell : row)
                joined += (joined.empty() ? "" : " ") + cell.get<std::string>();
            CHECK(contains(text, joined));
            found = found || joined == "dim H2 = 1";
        }
    CHECK(found);
}

TEST_CASE("check report verdicts") {
    CHECK(check_report(catalog("sim2"), "s").verdict == "pass");
    StructureTensor t = catalog("sim2").tensor();
    Vector v(4);
    v[0] = Scalar::i();
    v[2] = Scalar::i();
    t.set(0, 3, v);
    const auto bad = check_report(LieAlgebra("bad", catalog("sim2").generators(), t), "b");
    CHECK(bad.verdict == "fail");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("contract report") {
    const auto r = contract_report(catalog("lorentz-t"), "catalog:lorentz-t", {4, std::nullopt}, ContractRoute::Both);
    const auto text = render(r, ReportFormat::Text);
    CHECK(r.exit_code == 0);
    CHECK(contains(text, "route_agreement = true"));
    CHECK(contains(text, "[T1,K3] = i*T1"));
    CHECK(contains(text, "[J3,Tt1] = i*Tt2"));
    const auto bad = contract_report(catalog("lorentz-jk"), "x", {2, std::nullopt}, ContractRoute::Formula);
    CHECK(bad.exit_code == 1);
    CHECK(bad.verdict == "fail");
}

TEST_CASE("rsets, quotient and catalog reports") {
    const auto rs = render(rsets_report(catalog("poincare11"), "p"), ReportFormat::Text);
    CHECK(contains(rs, "flagged = K"));
    const auto q = quotient_report(catalog("isim2"), "i", {"P0", "P1", "P2", "P3"});
    CHECK(q.exit_code == 0);
    CHECK(contains(render(q, ReportFormat::Text), "ideal = true"));
    const auto notideal = quotient_report(catalog("sim2"), "s", {"K3"});
    CHECK(notideal.exit_code == 1);
    CHECK(render(catalog_report("sim2"), ReportFormat::Text) == "algebra sim2\ngenerators: T1 T2 J3 K3\n"
                                                                  "bracket T1 J3 = -i*T2\n"
                                                                  "bracket T1 K3 = i*T1\n"
                                                                  "bracket T2 J3 = i*T1\n"
                                                                  "bracket T2 K3 = i*T2\n");
    CHECK_THROWS_AS(catalog_report("nope"), UnknownAlgebra);
}

TEST_CASE("rep-verify and inhom reports") {
    const auto lor = rep_verify_report("lorentz");
    CHECK(lor.exit_code == 0);
    CHECK(rep_verify_report("sim2").exit_code == 0);
    CHECK_THROWS_AS(rep_verify_report("galilei"), InvalidArgument);
    const auto inhom = inhom_solve_report();
    CHECK(inhom.verdict == "pass");
    CHECK(contains(render(inhom, ReportFormat::Text), "linear block"));
}

TEST_CASE("error report") {
    const auto e = error_report("h2", "x.alg", "x.alg:3: bad scalar");
    CHECK(e.exit_code == 2);
    CHECK(e.verdict == "error");
    const auto doc = nlohmann::json::parse(render(e, ReportFormat::Machine));
    CHECK(doc["exit_code"] == 2);
}
