/**
 * @file test_dump.cpp
 * @brief Serialization round trips for factors, headers and type labels.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "yrm/dump.hpp"

#include <filesystem>
#include <fstream>

using namespace yrm;

namespace {

nlohmann::json dump_of(UniversalR& R, const std::vector<FactorKind>& kinds) {
    DumpHeader h;
    h.type = type_label(R.yangian().lie().cartan());
    h.N = R.config().N;
    h.hbar_order = R.config().hbar_order;
    std::vector<nlohmann::json> lists;
    for (FactorKind k : kinds) {
        h.factors.push_back(factor_name(k));
        lists.push_back(factor_records(R.yangian(), R.factor(k)));
    }
    return make_dump(h, lists);
}

}  // namespace

TEST_CASE("every factor survives save and load") {
    const std::vector<FactorKind> all{FactorKind::Minus, FactorKind::Zero, FactorKind::Plus, FactorKind::Full};
    for (const auto& [type, N, M] : {std::tuple{"A1", 3, HPoly::kNoTrunc}, std::tuple{"A2", 2, HPoly::kNoTrunc}, std::tuple{"A1", 3, 2}}) {
        Yangian Y(LieData::build(CartanDatum::named(type)));
        UniversalR R(Y, RConfig{N, M, ZetaTarget::Ones, {}});
        const nlohmann::json d = dump_of(R, all);
        const nlohmann::json reparsed = nlohmann::json::parse(dump_text(d));
        for (FactorKind k : all) {
            RFactor f = load_factor(Y, reparsed, k);
            CHECK_MESSAGE(f.series == R.factor(k).series, type << " " << factor_name(k));
            if (k == FactorKind::Minus || k == FactorKind::Plus) CHECK(f.blocks == R.factor(k).blocks);
        }
        CHECK(dump_text(dump_of(R, all)) == dump_text(d));
    }
}

TEST_CASE("records are sorted and rationals are strings") {
    Yangian Y(LieData::build(CartanDatum::named("A1")));
    UniversalR R(Y, RConfig{2});
    const nlohmann::json recs = factor_records(Y, R.zero());
    REQUIRE(recs.size() > 1);
    for (std::size_t i = 1; i < recs.size(); ++i) CHECK(recs[i - 1]["z_power"] <= recs[i]["z_power"]);
    bool found = false;
    for (const auto& r : recs)
        if (r["z_power"] == -1) {
            CHECK(r["left_monomial"] == "h[1,0]");
            CHECK(r["coeff"] == "1/2*h");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("N = 0 dump is the identity record") {
    Yangian Y(LieData::build(CartanDatum::named("G2")));
    UniversalR R(Y, RConfig{0});
    const nlohmann::json recs = factor_records(Y, R.full());
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["z_power"] == 0);
    CHECK(recs[0]["coeff"] == "1");
    CHECK(recs[0]["left_monomial"] == "1");
}

TEST_CASE("version mismatch and corrupt dumps are rejected") {
    Yangian Y(LieData::build(CartanDatum::named("A1")));
    UniversalR R(Y, RConfig{1});
    nlohmann::json d = dump_of(R, {FactorKind::Minus});
    d["header"]["order_version"] = "pbw-v0";
    CHECK_THROWS_AS(load_factor(Y, d, FactorKind::Minus), std::invalid_argument);
    d = dump_of(R, {FactorKind::Minus});
    CHECK_THROWS_AS(load_factor(Y, d, FactorKind::Zero), std::invalid_argument);
    d["records"][0]["left_monomial"] = "q[1,0]";
    CHECK_THROWS(load_factor(Y, d, FactorKind::Minus));
    d = dump_of(R, {FactorKind::Minus});
    d["header"].erase("N");
    CHECK_THROWS_AS(load_factor(Y, d, FactorKind::Minus), std::invalid_argument);
}

TEST_CASE("type labels round-trip") {
    for (const char* t : {"A1", "A2", "A3", "B2", "G2"}) CHECK(type_label(cartan_from_label(t)) == t);
    CartanDatum c = CartanDatum::from_matrix({{2, -1}, {-2, 2}});
    const std::string label = type_label(c);
    CHECK(label == "cartan[2,-1;-2,2]d[2,1]");
    CartanDatum back = cartan_from_label(label);
    CHECK(back.a == c.a);
    CHECK(back.d == c.d);
    CHECK_THROWS_AS(cartan_from_label("cartan[2,-1;-1]d[1,1]"), std::invalid_argument);
    CHECK_THROWS_AS(cartan_from_label("cartan[2,-1"), std::invalid_argument);
}

TEST_CASE("atomic writes replace the target") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "yrm_test_dump";
    fs::remove_all(dir);
    const fs::path p = dir / "sub" / "x.json";
    write_atomic(p, "first\n");
    write_atomic(p, "second\n");
    std::ifstream in(p);
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(s == "second\n");
    int files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir / "sub")) ++files;
    CHECK(files == 1);
    CHECK_THROWS_AS(read_json_file(dir / "missing.json"), std::runtime_error);
    fs::remove_all(dir);
}

TEST_CASE("reports serialize with status strings") {
    Report r{{"unitarity", "A1 N=2", true, ""}, {"cabling", "A1 N=2", false, "z^-2 at ..."}};
    nlohmann::json j = report_to_json(r);
    CHECK(j[0]["status"] == "pass");
    CHECK(j[1]["status"] == "fail");
    CHECK(j[1]["first_discrepancy"] == "z^-2 at ...");
    CHECK(report_pretty(r).find("FAIL  cabling") != std::string::npos);
}
