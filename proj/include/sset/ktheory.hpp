// Abelian-group-labelled coverings and a small K-theoretic playground:
// edge cocycles and the coverings they classify, the 2-truncated s-dot
// construction of a category with cofibrations and weak equivalences, and
// K_0 computed from its defining presentation.

#ifndef SSET_KTHEORY_HPP
#define SSET_KTHEORY_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sset/matrix.hpp"
#include "sset/sset.hpp"

namespace sset {

/// A finite direct sum of cyclic groups Z/k (k >= 2) and Z (factor 0),
/// with elements as integer tuples reduced componentwise.
struct FinAbGroup {
    std::vector<long long> factors;  // 0 means Z; k >= 2 means Z/k

    using Elem = std::vector<long long>;

    Elem zero() const { return Elem(factors.size(), 0); }
    Elem reduce(Elem e) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    bool is_finite() const;
    /// All elements; throws for infinite groups.
    std::vector<Elem> elements() const;
    /// Closure of a generating set under the group operations.
    std::vector<Elem> span(const std::vector<Elem>& gens) const;
    std::string str(const Elem& e) const;  // "0", "1", or "(1,0)"
    std::string str() const;               // "Z/2 x Z"
};

/// Parse "Z", "Z/4", "Z/2 x Z/2", "Z x Z/3" (factors separated by 'x').
FinAbGroup parse_group(const std::string& text);

/// A G-valued simplicial 1-cocycle given on the non-degenerate edges
/// (degenerate edges carry 0).
struct EdgeCocycle {
    FinSSet base;
    FinAbGroup group;
    std::map<std::string, FinAbGroup::Elem> label;

    FinAbGroup::Elem label_of(const EZSimplex& edge) const;
};

/// Cocycle condition on every non-degenerate 2-simplex:
/// z(d_1 a) = z(d_2 a) + z(d_0 a).
ValidationReport validate_cocycle(const EdgeCocycle& z);

struct Covering {
    FinSSet total;
    SSetMap proj;
};

/// The covering classified by a cocycle.  Simplices are pairs (x, g) with
/// identifiers "x@g"; the 0-th face shifts g by the label of the leading
/// edge.  Optional restrictions: a subgroup (given by generators) for the
/// fiber, and a subset of base simplices (the result is the largest
/// face-closed part over the subset).
Covering covering(const EdgeCocycle& z,
                  const std::optional<std::vector<FinAbGroup::Elem>>& subgroup_gens = {},
                  const std::optional<std::set<std::string>>& base_subset = {});

/// A category with cofibrations and weak equivalences, tabulated: objects,
/// a zero object, the cofiber triples (A, B, B/A), and the weak
/// equivalences.  T optionally restricts to a subcategory.
struct SConstructionData {
    std::vector<std::string> objects;
    std::string zero;
    std::vector<std::array<std::string, 3>> cofiber;       // (A, B, C): A >-> B ->> C
    std::vector<std::pair<std::string, std::string>> weq;  // (A, B): A ~ B
    std::optional<std::set<std::string>> T;

    void validate() const;
};

/// 2-truncation of the s-dot simplicial set: one vertex, an edge per
/// nonzero object, a triangle per cofiber triple and per weak equivalence.
FinSSet s_dot(const SConstructionData& data, bool restrict_T = false);

/// K_0: the free abelian group on the objects modulo [B] = [A] + [C] for
/// cofiber triples, [A] = [B] for weak equivalences, and [0] = 0.
AbelianInvariants k0(const SConstructionData& data);

/// Pairs (a, b) with a + b <= bound, split cofiber triples, and weak
/// equivalences (a, b) ~ (a + b, 0); K_0 collapses to Z.
SConstructionData bifiltered_with_total_weqs(int bound);

/// Same objects and cofibrations, but only componentwise (identity) weak
/// equivalences; K_0 stays Z x Z.
SConstructionData bifiltered_with_componentwise_weqs(int bound);

}  // namespace sset

#endif
