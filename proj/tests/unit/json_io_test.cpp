#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>

#include "sset/constructions.hpp"
#include "sset/json_io.hpp"

using namespace sset;
using nlohmann::json;

TEST_CASE("operator documents round-trip") {
    for (const MonotoneMap& f :
         {identity_map(3), face_map(1, 2), degeneracy_map(0, 1), collapse_map(4)}) {
        CHECK(monotone_map_from_json(to_json(f)) == f);
    }
    CHECK_THROWS_AS(monotone_map_from_json(json{{"to", 2}}), SSetError);
    CHECK_THROWS_AS(monotone_map_from_json(json::array()), SSetError);
}

TEST_CASE("identity operators are elided from face documents") {
    FinSSet d1 = standard_simplex(1);
    EZSimplex nd = d1.nd(d1.nondeg(1).front());
    json j = to_json(nd);
    CHECK_FALSE(j.contains("op"));
    CHECK(ez_from_json(j, 1) == nd);

    EZSimplex deg{degeneracy_map(0, 0), d1.nondeg(0).front()};
    json jd = to_json(deg);
    CHECK(jd.contains("op"));
    CHECK(ez_from_json(jd, 1) == deg);
}

TEST_CASE("simplicial set documents round-trip byte-identically") {
    for (const FinSSet& X : {standard_simplex(3), boundary(2),
                             quotient(standard_simplex(1), boundary(1)).obj,
                             product(standard_simplex(1), standard_simplex(1)).obj}) {
        const std::string text = emit(X);
        FinSSet back = sset_from_json(json::parse(text));
        CHECK(emit(back) == text);
        CHECK(back.counts() == X.counts());
        CHECK(validate(back).ok());
    }
}

TEST_CASE("simplices are emitted sorted by dimension then identifier") {
    json j = to_json(standard_simplex(2));
    const auto& arr = j.at("simplices");
    REQUIRE(arr.size() == 7);
    int last_dim = -1;
    std::string last_id;
    for (const auto& s : arr) {
        int d = s.at("dim").get<int>();
        std::string id = s.at("id").get<std::string>();
        CHECK((d > last_dim || (d == last_dim && id > last_id)));
        last_dim = d;
        last_id = id;
    }
}

TEST_CASE("map documents round-trip") {
    FinSSet b2 = boundary(2);
    FinSSet d2 = standard_simplex(2);
    SSetMap inc = inclusion_map(b2, d2);
    const std::string text = emit(inc);
    SSetMap back = sset_map_from_json(json::parse(text));
    CHECK(emit(back) == text);
    CHECK(validate_map(back).ok());

    SSetMap c = constant_map(d2, d2, d2.nondeg(0).front());
    SSetMap cback = sset_map_from_json(json::parse(emit(c)));
    CHECK(validate_map(cback).ok());
    CHECK(emit(cback) == emit(c));
}

TEST_CASE("malformed documents are rejected with clear messages") {
    CHECK_THROWS_AS(sset_from_json(json{{"name", "x"}}), SSetError);
    CHECK_THROWS_WITH_AS(
        sset_from_json(json::parse(R"({"simplices":[
            {"id":"a","dim":0,"faces":[]},
            {"id":"a","dim":0,"faces":[]}]})")),
        "duplicate simplex identifier: a", SSetError);
    // Assignment for a simplex the source does not have.
    json m = json::parse(R"({"source":{"simplices":[{"id":"p","dim":0,"faces":[]}]},
                             "target":{"simplices":[{"id":"q","dim":0,"faces":[]}]},
                             "assign":{"zz":{"base":"q"}}})");
    CHECK_THROWS_AS(sset_map_from_json(m), SSetError);
}

TEST_CASE("file helpers write and read back") {
    const std::string path = "json_io_test_tmp.json";
    FinSSet X = boundary(2);
    write_file(path, emit(X));
    FinSSet back = read_sset_file(path);
    CHECK(emit(back) == emit(X));
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_sset_file("does_not_exist.json"), SSetError);
}
