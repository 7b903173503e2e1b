// The directed graph associated with a simplicial set (vertices X_0, edges
// the non-degenerate 1-simplices, source d_1, target d_0), trail and
// acyclicity queries, and the ordered-simplicial-set layer.

#ifndef SSET_DIGRAPH_HPP
#define SSET_DIGRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sset/sset.hpp"

namespace sset {

struct Edge {
    std::string id;
    std::string src;
    std::string dst;
    bool operator==(const Edge&) const = default;
};

struct DiGraph {
    std::set<std::string> vertices;
    std::vector<Edge> edges;  // sorted by id

    std::string dot() const;
};

DiGraph associated_graph(const FinSSet& X);

/// Parse a DOT document produced by DiGraph::dot().
DiGraph digraph_from_dot(const std::string& text);

bool digraph_isomorphic(const DiGraph& G, const DiGraph& H);

/// A closed trail (t(e_i) = s(e_{i+1}), s(e_1) = t(e_n)), length >= 1, or
/// nothing; one exists iff the graph has a directed cycle.
std::optional<std::vector<Edge>> find_closed_trail(const DiGraph& G);

bool is_acyclic(const DiGraph& G);
bool is_acyclic(const FinSSet& X);

/// Components of the undirected reachability relation on G_X.
std::vector<std::set<std::string>> connected_components(const FinSSet& X);

/// A strict partial order on the vertices of a carrier such that every
/// non-degenerate edge strictly increases.
struct VertexOrder {
    FinSSet carrier;
    std::set<std::pair<std::string, std::string>> lt;  // pairs (a,b) with a < b
    bool is_total() const;
    bool less(const std::string& a, const std::string& b) const { return lt.count({a, b}); }
};

struct NotAcyclicError : SSetError {
    std::vector<Edge> witness;
    explicit NotAcyclicError(std::vector<Edge> w)
        : SSetError("simplicial set is not acyclic"), witness(std::move(w)) {}
};

/// The minimum ordering: a < b iff a trail from a to b exists.
/// Throws NotAcyclicError (with a closed-trail witness) on cyclic input.
VertexOrder min_order(const FinSSet& X);

ValidationReport validate_order(const VertexOrder& o);

/// Deterministic extension to a total order (Kahn's algorithm with
/// lexicographic tie-break).
VertexOrder refine_to_total(const VertexOrder& o);

enum class Cmp { LT, LE, GT, GE };

/// Spanned subcomplex on the comparison set {u : u <op> v}.
FinSSet below(const FinSSet& X, const VertexOrder& o, const std::string& v, Cmp mode);

}  // namespace sset

#endif
