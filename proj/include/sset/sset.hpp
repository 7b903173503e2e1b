// Finite simplicial sets in Eilenberg-Zilber normal form.
//
// A FinSSet stores only its non-degenerate simplices; every simplex of the
// presheaf is reachable as an EZSimplex value (surjective operator applied
// to a stored base).  All orderings are lexicographic on (dim, identifier)
// so every operation is deterministic.

#ifndef SSET_SSET_HPP
#define SSET_SSET_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sset/delta.hpp"

namespace sset {

struct SSetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A simplex in EZ normal form: a surjective operator applied to a
/// non-degenerate base.  Non-degenerate iff op is the identity.
struct EZSimplex {
    MonotoneMap op;    // [n] ->> [m], m = dim of base
    std::string base;  // identifier of a non-degenerate m-simplex

    int total_dim() const { return op.source_dim(); }
    bool is_nondegenerate() const { return op.is_identity(); }

    bool operator==(const EZSimplex&) const = default;
    bool operator<(const EZSimplex& o) const {
        if (base != o.base) return base < o.base;
        return op < o.op;
    }
    std::string str() const { return op.str() + "@" + base; }
};

struct SimplexRecord {
    int dim = 0;
    std::vector<EZSimplex> faces;  // d_0..d_n; empty for dim 0
};

struct FinSSet {
    std::string name;
    std::map<std::string, SimplexRecord> simplices;

    bool has(const std::string& id) const { return simplices.count(id) != 0; }
    const SimplexRecord& at(const std::string& id) const;

    /// EZSimplex wrapping a stored non-degenerate simplex with identity op.
    EZSimplex nd(const std::string& id) const;

    int dim() const;
    std::vector<int> counts() const;
    std::vector<std::string> nondeg(int n) const;
    /// All identifiers sorted by (dim, id).
    std::vector<std::string> ordered_ids() const;
    /// Vertex identifiers of a stored simplex, in simplex order (length dim+1).
    std::vector<std::string> vertices_of(const std::string& id) const;
    size_t size() const { return simplices.size(); }
};

/// X(f)(x) in EZ normal form; f must target the total dimension of x.
EZSimplex apply_operator(const FinSSet& X, const EZSimplex& x, const MonotoneMap& f);

struct Violation {
    std::string simplex;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

/// Checks all structural invariants, including the simplicial identities
/// d_i d_j = d_{j-1} d_i (i<j) after EZ renormalization.
ValidationReport validate(const FinSSet& X);

/// A morphism of finite simplicial sets, given on non-degenerate simplices.
struct SSetMap {
    FinSSet source;
    FinSSet target;
    std::map<std::string, EZSimplex> assign;

    /// Image of an arbitrary simplex of the source, in EZ normal form.
    EZSimplex apply(const EZSimplex& x) const;
};

ValidationReport validate_map(const SSetMap& f);

SSetMap identity_sset_map(const FinSSet& X);

/// g after f; requires f.target and g.source to agree simplex-for-simplex.
SSetMap compose(const SSetMap& g, const SSetMap& f);

/// True if every simplex of A is a simplex of X with identical faces.
bool is_subcomplex(const FinSSet& A, const FinSSet& X);

/// Inclusion map of a subcomplex (shared identifiers).
SSetMap inclusion_map(const FinSSet& A, const FinSSet& X);

/// Largest subcomplex of X whose simplices only touch the given ids.
/// (ids must be closed under faces for the result to contain them all.)
FinSSet full_subcomplex(const FinSSet& X, const std::vector<std::string>& ids);

/// True if every assigned simplex of f lands in the subcomplex A of f.target.
bool maps_into(const SSetMap& f, const FinSSet& A);

/// Restrict f to a subcomplex A of its source.
SSetMap restrict_map(const SSetMap& f, const FinSSet& A);

/// Structural equality up to renaming of non-degenerate simplices
/// (backtracking search; intended for desk-scale objects).
bool isomorphic(const FinSSet& X, const FinSSet& Y);

}  // namespace sset

#endif
