#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sset/constructions.hpp"
#include "sset/digraph.hpp"
#include "sset/ktheory.hpp"
#include "sset/verify.hpp"

using namespace sset;

namespace {

FinSSet circle() { return quotient(standard_simplex(1), boundary(1)).obj; }

EdgeCocycle circle_cocycle(const std::string& group, long long label) {
    FinSSet c = circle();
    EdgeCocycle z;
    z.base = c;
    z.group = parse_group(group);
    z.label[c.nondeg(1).front()] = {label};
    return z;
}

}  // namespace

TEST_CASE("finite abelian groups parse, reduce, and enumerate") {
    FinAbGroup g = parse_group("Z/2 x Z");
    CHECK(g.str() == "Z/2 x Z");
    CHECK(g.factors == std::vector<long long>{2, 0});
    CHECK_FALSE(g.is_finite());
    CHECK_THROWS_AS(g.elements(), SSetError);
    CHECK(g.reduce({3, -1}) == FinAbGroup::Elem{1, -1});
    CHECK(g.add({1, 2}, {1, 3}) == FinAbGroup::Elem{0, 5});
    CHECK(g.add({1, 2}, g.neg({1, 2})) == g.zero());
    CHECK(g.str(g.zero()) == "(0,0)");

    FinAbGroup z4 = parse_group("Z/4");
    CHECK(z4.is_finite());
    CHECK(z4.elements().size() == 4);
    CHECK(z4.span({{2}}).size() == 2);
    CHECK(z4.span({{1}}).size() == 4);
    CHECK(z4.span({}).size() == 1);

    CHECK(parse_group("0").factors.empty());
    CHECK(parse_group("Z").str() == "Z");
    CHECK_THROWS_AS(parse_group("Z/1"), SSetError);
    CHECK_THROWS_AS(parse_group("banana"), SSetError);
}

TEST_CASE("cocycle validation on the 2-simplex") {
    FinSSet d2 = standard_simplex(2);
    // z(d_1 a) = z(d_2 a) + z(d_0 a): the long edge carries the sum.
    EdgeCocycle good{d2, parse_group("Z"), {{"0,1", {1}}, {"1,2", {2}}, {"0,2", {3}}}};
    CHECK(validate_cocycle(good).ok());
    EdgeCocycle bad{d2, parse_group("Z"), {{"0,1", {1}}, {"1,2", {1}}, {"0,2", {1}}}};
    CHECK_FALSE(validate_cocycle(bad).ok());

    // Degenerate edges carry zero.
    CHECK(good.label_of(EZSimplex{degeneracy_map(0, 0), "0"}) == good.group.zero());
    CHECK(good.label_of(d2.nd("0,2")) == FinAbGroup::Elem{3});
}

TEST_CASE("the Z/3 covering of the circle is the 3-cycle") {
    Covering c = covering(circle_cocycle("Z/3", 1));
    CHECK(validate(c.total).ok());
    CHECK(validate_map(c.proj).ok());
    CHECK(c.total.counts() == std::vector<int>{3, 3});
    CHECK(connected_components(c.total).size() == 1);
    auto trail = find_closed_trail(associated_graph(c.total));
    REQUIRE(trail.has_value());
    CHECK(trail->size() == 3);
    // The fiber over each base simplex has |G| elements.
    std::map<std::string, int> fiber_size;
    for (const auto& [id, y] : c.proj.assign) ++fiber_size[y.base];
    for (const auto& [b, n] : fiber_size) CHECK(n == 3);
    // Unique lifting of edges: one outgoing edge per total vertex.
    std::map<std::string, int> out;
    for (const Edge& e : associated_graph(c.total).edges) ++out[e.src];
    for (const auto& [v, n] : out) CHECK(n == 1);
}

TEST_CASE("connectivity of the covering matches generation by the labels") {
    // 2 does not generate Z/4: the double cover splits off.
    Covering c = covering(circle_cocycle("Z/4", 2));
    CHECK(c.total.counts() == std::vector<int>{4, 4});
    CHECK(connected_components(c.total).size() == 2);

    Covering d = covering(circle_cocycle("Z/5", 2));
    CHECK(connected_components(d.total).size() == 1);
}

TEST_CASE("subgroup and base-subset restrictions") {
    EdgeCocycle z = circle_cocycle("Z/4", 2);
    // Restricting the fiber to <2> = {0, 2} keeps the closed double cover.
    Covering s = covering(z, std::vector<FinAbGroup::Elem>{{2}});
    CHECK(s.total.counts() == std::vector<int>{2, 2});
    CHECK(connected_components(s.total).size() == 1);
    // The subgroup <1> restriction is no restriction at all.
    Covering full = covering(z, std::vector<FinAbGroup::Elem>{{1}});
    CHECK(full.total.counts() == covering(z).total.counts());

    // Restricting the base to the vertex keeps only the fiber over it.
    const std::string v = z.base.nondeg(0).front();
    Covering b = covering(z, {}, std::set<std::string>{v});
    CHECK(b.total.counts() == std::vector<int>{4});

    // A covering over an invalid cocycle is refused.
    FinSSet d2 = standard_simplex(2);
    EdgeCocycle bad{d2, parse_group("Z/2"), {{"0,1", {1}}, {"1,2", {1}}, {"0,2", {1}}}};
    CHECK_THROWS_AS(covering(bad), SSetError);
}

TEST_CASE("s_dot of a small category with cofibrations and equivalences") {
    SConstructionData d;
    d.objects = {"0", "A", "B", "C"};
    d.zero = "0";
    d.cofiber = {{"A", "B", "C"}};
    d.weq = {{"A", "B"}};
    d.validate();

    FinSSet S = s_dot(d);
    CHECK(validate(S).ok());
    // One vertex, an edge per nonzero object, a triangle per cofiber triple
    // and per weak equivalence.
    CHECK(S.counts() == std::vector<int>{1, 3, 2});

    // K_0 from the presentation agrees with ab(pi_1) of the s_dot object.
    CHECK(k0(d).str() == "Z");
    CHECK(pi1(S, "0").abelianization() == k0(d));

    // Restriction to a subcategory drops edges and triangles.
    d.T = std::set<std::string>{"0", "A"};
    FinSSet ST = s_dot(d, true);
    CHECK(validate(ST).ok());
    CHECK(ST.counts() == std::vector<int>{1, 1});

    SConstructionData broken = d;
    broken.zero = "missing";
    CHECK_THROWS_AS(broken.validate(), SSetError);
    broken = d;
    broken.weq = {{"A", "ghost"}};
    CHECK_THROWS_AS(broken.validate(), SSetError);
}

TEST_CASE("bifiltered fixtures: total versus componentwise equivalences") {
    SConstructionData total = bifiltered_with_total_weqs(3);
    CHECK(total.objects.size() == 10);  // pairs (a, b) with a + b <= 3
    CHECK(total.cofiber.size() == 35);
    CHECK(total.weq.size() == 6);
    CHECK(k0(total).str() == "Z");

    SConstructionData comp = bifiltered_with_componentwise_weqs(3);
    CHECK(comp.objects == total.objects);
    CHECK(comp.cofiber == total.cofiber);
    CHECK(comp.weq.empty());
    CHECK(k0(comp).str() == "Z^2");

    // The Hurewicz cross-check holds for both fixtures.
    CHECK(pi1(s_dot(total), "0").abelianization() == k0(total));
    CHECK(pi1(s_dot(comp), "0").abelianization() == k0(comp));

    // The collapse is monotone in the bound.
    CHECK(k0(bifiltered_with_total_weqs(2)).str() == "Z");
    CHECK(k0(bifiltered_with_componentwise_weqs(2)).str() == "Z^2");
}
