#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sset/constructions.hpp"
#include "sset/digraph.hpp"

using namespace sset;

namespace {

FinSSet circle() { return quotient(standard_simplex(1), boundary(1)).obj; }

}  // namespace

TEST_CASE("the associated graph of a standard simplex") {
    DiGraph g0 = associated_graph(standard_simplex(0));
    CHECK(g0.vertices.size() == 1);
    CHECK(g0.edges.empty());

    DiGraph g2 = associated_graph(standard_simplex(2));
    CHECK(g2.vertices.size() == 3);
    REQUIRE(g2.edges.size() == 3);
    // Edge i,j runs from vertex i (= d_1) to vertex j (= d_0).
    for (const Edge& e : g2.edges) CHECK(e.src < e.dst);
}

TEST_CASE("acyclicity verdicts and closed-trail witnesses") {
    CHECK(is_acyclic(standard_simplex(3)));
    CHECK(is_acyclic(boundary(3)));

    FinSSet c = circle();
    CHECK_FALSE(is_acyclic(c));
    auto trail = find_closed_trail(associated_graph(c));
    REQUIRE(trail.has_value());
    CHECK(trail->size() == 1);  // a single self-loop edge
    CHECK((*trail)[0].src == (*trail)[0].dst);

    // A closed trail is closed: consecutive sources and targets match up.
    FinSSet t = product(c, c).obj;
    auto tt = find_closed_trail(associated_graph(t));
    REQUIRE(tt.has_value());
    for (size_t i = 0; i < tt->size(); ++i)
        CHECK((*tt)[i].dst == (*tt)[(i + 1) % tt->size()].src);
}

TEST_CASE("a preorder with a two-element loop gives a cyclic nerve") {
    Preorder P;
    P.elements = {"a", "b"};
    P.leq = {{"a", "a"}, {"b", "b"}, {"a", "b"}, {"b", "a"}};
    FinSSet N = nerve_truncated(P, 1);
    CHECK(validate(N).ok());
    CHECK_FALSE(is_acyclic(N));
    auto trail = find_closed_trail(associated_graph(N));
    REQUIRE(trail.has_value());
    CHECK(trail->size() == 2);
}

TEST_CASE("DOT export round-trips through the parser") {
    for (const FinSSet& X : {standard_simplex(2), circle(), boundary(3)}) {
        DiGraph g = associated_graph(X);
        DiGraph back = digraph_from_dot(g.dot());
        CHECK(back.vertices == g.vertices);
        CHECK(back.edges == g.edges);
        CHECK(digraph_isomorphic(g, back));
    }
    CHECK_FALSE(digraph_isomorphic(associated_graph(standard_simplex(1)),
                                   associated_graph(circle())));
}

TEST_CASE("connected components") {
    Coproduct cp = coproduct({standard_simplex(1), standard_simplex(0)});
    auto comps = connected_components(cp.obj);
    CHECK(comps.size() == 2);
    CHECK(connected_components(standard_simplex(3)).size() == 1);
}

TEST_CASE("min_order is reachability and throws on cyclic input") {
    FinSSet d2 = standard_simplex(2);
    VertexOrder o = min_order(d2);
    CHECK(validate_order(o).ok());
    CHECK(o.less("0", "1"));
    CHECK(o.less("0", "2"));
    CHECK(o.less("1", "2"));
    CHECK_FALSE(o.less("2", "0"));
    CHECK(o.is_total());

    // On a disjoint union the minimum ordering is partial.
    Coproduct cp = coproduct({standard_simplex(1), standard_simplex(1)});
    VertexOrder p = min_order(cp.obj);
    CHECK_FALSE(p.is_total());
    CHECK(p.less("c0:0", "c0:1"));
    CHECK_FALSE(p.less("c0:0", "c1:1"));

    try {
        min_order(circle());
        FAIL("expected NotAcyclicError");
    } catch (const NotAcyclicError& e) {
        CHECK_FALSE(e.witness.empty());
    }
}

TEST_CASE("refine_to_total produces a valid total extension") {
    Coproduct cp = coproduct({standard_simplex(1), standard_simplex(1)});
    VertexOrder p = min_order(cp.obj);
    VertexOrder t = refine_to_total(p);
    CHECK(t.is_total());
    CHECK(validate_order(t).ok());
    // The refinement preserves the original relation.
    for (const auto& [a, b] : p.lt) CHECK(t.less(a, b));
    // Deterministic: running it twice gives the same relation.
    CHECK(refine_to_total(p).lt == t.lt);
}

TEST_CASE("validate_order rejects non-increasing edges and cycles") {
    FinSSet d1 = standard_simplex(1);
    VertexOrder o;
    o.carrier = d1;
    // Empty relation: the edge 0 -> 1 does not increase.
    CHECK_FALSE(validate_order(o).ok());
    o.lt = {{"0", "1"}};
    CHECK(validate_order(o).ok());
    o.lt = {{"0", "1"}, {"1", "0"}};
    CHECK_FALSE(validate_order(o).ok());
}

TEST_CASE("below slices the carrier by comparison against a vertex") {
    FinSSet d2 = standard_simplex(2);
    VertexOrder o = min_order(d2);
    FinSSet lt1 = below(d2, o, "1", Cmp::LT);
    CHECK(lt1.counts() == std::vector<int>{1});
    CHECK(lt1.has("0"));
    FinSSet le1 = below(d2, o, "1", Cmp::LE);
    CHECK(le1.counts() == std::vector<int>{2, 1});
    FinSSet gt1 = below(d2, o, "1", Cmp::GT);
    CHECK(gt1.counts() == std::vector<int>{1});
    CHECK(gt1.has("2"));
    FinSSet ge0 = below(d2, o, "0", Cmp::GE);
    CHECK(ge0.size() == d2.size());
}
