// Constructors for finite simplicial sets: standard simplices, boundaries,
// nerves, spanned subcomplexes, coproducts, products, pullbacks, pushouts,
// quotients, cylinders and mapping cylinders, skeleta.

#ifndef SSET_CONSTRUCTIONS_HPP
#define SSET_CONSTRUCTIONS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sset/sset.hpp"

namespace sset {

/// A finite preorder (reflexive, transitive); a poset when antisymmetric.
struct Preorder {
    std::vector<std::string> elements;
    std::set<std::pair<std::string, std::string>> leq;  // pairs (a,b) with a <= b

    bool le(const std::string& a, const std::string& b) const {
        return a == b || leq.count({a, b}) != 0;
    }
    bool is_antisymmetric() const;
    /// Throws unless reflexivity/transitivity hold and all labels are declared.
    void validate() const;
};

FinSSet standard_simplex(int n);
FinSSet boundary(int n);  // boundary(0) is the empty simplicial set

/// Nerve of a poset; throws if the preorder is not antisymmetric.
FinSSet nerve(const Preorder& P);
/// Nerve of a preorder, materialized only in dimensions <= d.
FinSSet nerve_truncated(const Preorder& P, int d);

/// The simplicial map src -> nerve determined by a vertex assignment
/// (monotone on every simplex); throws when the image chain is missing.
SSetMap map_into_nerve(const FinSSet& src, const FinSSet& target_nerve,
                       const std::map<std::string, std::string>& on_vertices);

/// Largest subcomplex whose simplices have all vertices in S.
FinSSet spanned(const FinSSet& X, const std::set<std::string>& S);

FinSSet skeleton(const FinSSet& X, int d);

struct Coproduct {
    FinSSet obj;
    std::vector<SSetMap> injections;
};

/// Disjoint union; identifiers are prefixed "label:".  Default labels are
/// "c0", "c1", ...
Coproduct coproduct(const std::vector<FinSSet>& parts,
                    const std::vector<std::string>& labels = {});

/// Map out of a coproduct assembled from per-summand maps (common target).
SSetMap coproduct_map(const Coproduct& co, const std::vector<SSetMap>& components);

/// The constant map collapsing X to a vertex of Y.
SSetMap constant_map(const FinSSet& X, const FinSSet& Y, const std::string& vertex);

struct Span {
    FinSSet obj;
    SSetMap pr1;
    SSetMap pr2;
};

/// Product with projections; non-degenerate simplices are jointly injective
/// pairs of EZ simplices over non-degenerate bases (shuffle enumeration).
Span product(const FinSSet& X, const FinSSet& Y);

/// Pullback of f: X -> Z, g: Y -> Z along a common target.
Span pullback(const SSetMap& f, const SSetMap& g);

/// Classifying map of an n-simplex a of Y (a in EZ form, total dim n).
SSetMap classifying_map(const FinSSet& Y, const EZSimplex& a);

/// f/(a,n): the pullback of f along the classifying map of a.
/// pr1 projects to the source of f, pr2 to the standard n-simplex.
Span fiber_over(const SSetMap& f, const EZSimplex& a);

struct Pushout {
    FinSSet obj;
    SSetMap from_b;
    SSetMap from_c;
    /// For each non-degenerate class: a representative (side 'B'/'C', base id).
    std::map<std::string, std::pair<char, std::string>> rep;
};

/// Degreewise set pushout of B <- A -> C computed by union-find; legs may be
/// non-injective.  Class identifiers are derived from sorted member ids.
Pushout pushout(const SSetMap& f /* A -> B */, const SSetMap& g /* A -> C */);

/// The unique map out of a pushout determined by hb: B -> T, hc: C -> T.
/// The caller guarantees hb o f = hc o g.
SSetMap induced_from_pushout(const Pushout& po, const SSetMap& hb, const SSetMap& hc);

struct QuotientResult {
    FinSSet obj;
    SSetMap proj;
};

/// X/A, the pushout X u_A pt; A must be a subcomplex of X.
QuotientResult quotient(const FinSSet& X, const FinSSet& A);

Span cylinder(const FinSSet& X);  // product(X, standard_simplex(1))

/// X = X x {eps} -> X x Delta^1 for eps in {0, 1}.
SSetMap end_inclusion(const FinSSet& X, int eps);

struct MappingCylinder {
    FinSSet cyl;
    SSetMap include_source;  // A = A x {0} -> cyl
    SSetMap include_target;  // B -> cyl
    SSetMap collapse;        // cyl -> B
};

MappingCylinder mapping_cylinder(const SSetMap& f /* A -> B */);

/// Y u_{X x {0}} X x Delta^1 u_{X x {1}} Z for a diagram Y <- X -> Z.
FinSSet double_mapping_cylinder(const SSetMap& f /* X -> Y */, const SSetMap& g /* X -> Z */);

}  // namespace sset

#endif
