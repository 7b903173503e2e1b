#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "sset/delta.hpp"

using namespace sset;

namespace {

// Enumerate all monotone maps [s] -> [t] by walking weakly increasing lists.
std::vector<MonotoneMap> all_maps(int s, int t) {
    std::vector<MonotoneMap> out;
    std::vector<int> v(s + 1, 0);
    while (true) {
        out.emplace_back(t, v);
        int i = s;
        while (i >= 0 && v[i] == t) --i;
        if (i < 0) break;
        ++v[i];
        for (int j = i + 1; j <= s; ++j) v[j] = v[i];
    }
    return out;
}

}  // namespace

TEST_CASE("constructors and basic predicates") {
    CHECK(identity_map(2).is_identity());
    CHECK(identity_map(2).is_epi());
    CHECK(identity_map(2).is_mono());
    CHECK(identity_map(0).values == std::vector<int>{0});

    MonotoneMap d1 = face_map(1, 2);  // [1] -> [2] skipping 1
    CHECK(d1.values == std::vector<int>{0, 2});
    CHECK(d1.is_mono());
    CHECK_FALSE(d1.is_epi());

    MonotoneMap s0 = degeneracy_map(0, 1);  // [2] -> [1] repeating 0
    CHECK(s0.values == std::vector<int>{0, 0, 1});
    CHECK(s0.is_epi());
    CHECK_FALSE(s0.is_mono());

    CHECK(collapse_map(3).values == std::vector<int>(4, 0));
    CHECK(vertex_map({0, 2}, 3).values == std::vector<int>{0, 2});

    CHECK_THROWS_AS(face_map(3, 2), DeltaError);
    CHECK_THROWS_AS(vertex_map({2, 1}, 3), DeltaError);
    CHECK_THROWS_AS(MonotoneMap(2, {0, 3}), DeltaError);
    CHECK_THROWS_AS(MonotoneMap(2, {1, 0}), DeltaError);
}

TEST_CASE("string form is compact and canonical") {
    CHECK(face_map(0, 1).str() == "1>1");
    CHECK(degeneracy_map(0, 0).str() == "0,0>0");
    CHECK(identity_map(2).str() == "0,1,2>2");
}

TEST_CASE("composition is associative and unital on a sample") {
    MonotoneMap f = face_map(2, 3);
    MonotoneMap g = degeneracy_map(0, 2);
    MonotoneMap h = face_map(1, 3);
    // f o g: [3] -> [3] through [2]
    CHECK(compose(f, g).target_dim() == 3);
    CHECK(compose(compose(f, g), face_map(0, 3)) == compose(f, compose(g, face_map(0, 3))));
    CHECK(compose(h, identity_map(2)) == h);
    CHECK(compose(identity_map(3), h) == h);
    CHECK_THROWS_AS(compose(f, f), DeltaError);
}

TEST_CASE("cosimplicial identities") {
    // d_j d_i = d_i d_{j-1} for i < j (as cofaces into [n]).
    for (int n = 2; n <= 4; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                CHECK(compose(face_map(j, n), face_map(i, n - 1)) ==
                      compose(face_map(i, n), face_map(j - 1, n - 1)));
    // s_j d_j = id = s_j d_{j+1}.
    for (int n = 1; n <= 4; ++n)
        for (int j = 0; j < n; ++j) {
            CHECK(compose(degeneracy_map(j, n - 1), face_map(j, n)) == identity_map(n - 1));
            CHECK(compose(degeneracy_map(j, n - 1), face_map(j + 1, n)) == identity_map(n - 1));
        }
    // s_i s_j = s_{j+1} s_i for i <= j (as codegeneracies).
    for (int n = 0; n <= 3; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                CHECK(compose(degeneracy_map(j, n), degeneracy_map(i, n + 1)) ==
                      compose(degeneracy_map(i, n), degeneracy_map(j + 1, n + 1)));
}

TEST_CASE("epi-mono factorization is correct and unique on all small maps") {
    for (int s = 0; s <= 4; ++s) {
        for (int t = 0; t <= 4; ++t) {
            for (const MonotoneMap& f : all_maps(s, t)) {
                auto [epi, mono] = epi_mono_factor(f);
                CHECK(epi.is_epi());
                CHECK(mono.is_mono());
                CHECK(compose(mono, epi) == f);
                // The epi targets exactly the image size minus one.
                CHECK(epi.target_dim() == mono.source_dim());
                if (f.is_epi()) CHECK(mono.is_identity());
                if (f.is_mono()) CHECK(epi.is_identity());
            }
        }
    }
}

TEST_CASE("ordering is a strict total order on maps of fixed shape") {
    auto maps = all_maps(2, 2);
    for (const auto& a : maps)
        for (const auto& b : maps) {
            const bool lt = a < b, gt = b < a, eq = a == b;
            CHECK((lt + gt + eq) == 1);
        }
}
