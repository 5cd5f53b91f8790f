#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "sforge/selftest.hpp"
#include "sforge/serialize.hpp"

using namespace sforge;

namespace {
FieldCtx& ctx33() {
    static FieldCtx ctx(TowerParams{3, 1, 3, 2});
    return ctx;
}

json load_schema() {
    for (const char* path : {"schema/report.schema.json", "../schema/report.schema.json",
                             "../../schema/report.schema.json"}) {
        std::ifstream in(path);
        if (in) return json::parse(in);
    }
    FAIL("report schema not found");
    return {};
}

/// Minimal structural validation: every "required" key of the schema object is
/// present, and enum-valued fields take an allowed value.
void check_required(const json& schema_obj, const json& value) {
    if (schema_obj.contains("required"))
        for (const auto& key : schema_obj["required"])
            CHECK_MESSAGE(value.contains(key.get<std::string>()),
                          "missing key " << key.get<std::string>());
    if (schema_obj.contains("properties"))
        for (auto& [key, sub] : schema_obj["properties"].items())
            if (sub.contains("enum") && value.contains(key)) {
                bool found = false;
                for (const auto& opt : sub["enum"])
                    if (opt == value[key]) found = true;
                CHECK_MESSAGE(found, "enum violation at " << key);
            }
}
} // namespace

TEST_CASE("element and map serialization round trips") {
    const FieldCtx& f = ctx33();
    for (std::uint32_t v = 0; v < f.size(); v += 7) {
        Elem a{v};
        CHECK(elem_from_json(f, elem_to_json(f, a)) == a);
    }
    LinearizedMap m = linpoly::zero_map(f);
    for (int i = 0; i < f.n(); ++i) m.c[i] = f.pow(f.generator(), i + 2);
    CHECK(linmap_from_json(f, linmap_to_json(f, m)) == m);
}

TEST_CASE("field serialization carries the full context") {
    const FieldCtx& f = ctx33();
    json j = field_to_json(f);
    CHECK(j["p"] == 3);
    CHECK(j["h"] == 1);
    CHECK(j["ell"] == 3);
    CHECK(j["n"] == 6);
    CHECK(j["q"] == 3);
    CHECK(j["modulus"].size() == 7);
    json schema = load_schema();
    check_required(schema["$defs"]["field"], j);
}

TEST_CASE("triples and certificates match the published schema shape") {
    const FieldCtx& f = ctx33();
    json schema = load_schema();
    FamilyIsotopism fi = family_isotopism(f);
    json tj = triple_to_json(f, fi.triple);
    check_required(schema["$defs"]["triple"], tj);
    CHECK(tj["status"] == "verified");
    CHECK(tj["strong"] == false);
    StrongIsoCertificate cert = decide_strong(f);
    json cj = certificate_to_json(f, cert);
    check_required(schema["$defs"]["certificate"], cj);
    CHECK(cj["verdict"] == "not-exists");
    CHECK(cj["flags"]["no_solution"] == true);
}

TEST_CASE("refutation witnesses serialize") {
    const FieldCtx& f = ctx33();
    LMPTBParams lp = make_lmptb_params(f);
    Presemifield p = lmptb(f, lp, resolve_gbounds(f, lp));
    Presemifield b = bhb(f, make_bhb_params(f, choose_beta_bar(f), 2));
    IsotopismTriple t = make_triple(p, b, linpoly::identity(f), linpoly::identity(f),
                                    linpoly::identity(f));
    verify_isotopism(p, b, t);
    json tj = triple_to_json(f, t);
    CHECK(tj["status"] == "refuted");
    REQUIRE(tj.contains("witness"));
    CHECK(tj["witness"].contains("x"));
    CHECK(tj["witness"].contains("y"));
}

TEST_CASE("selftest reports are deterministic for a fixed seed") {
    SelftestOptions opts;
    opts.seed = 42;
    opts.max_field_bits = 10; // keep this unit test quick: only 3^6 suites
    SelftestReport a = run_selftest(opts);
    SelftestReport b = run_selftest(opts);
    REQUIRE(a.suites.size() == b.suites.size());
    for (std::size_t i = 0; i < a.suites.size(); ++i) {
        CHECK(a.suites[i].name == b.suites[i].name);
        CHECK(a.suites[i].status == b.suites[i].status);
    }
    CHECK(a.ok == b.ok);
}
