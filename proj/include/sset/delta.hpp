// Arithmetic of morphisms in the simplex category: weakly increasing
// value lists with unique epi-mono factorization.

#ifndef SSET_DELTA_HPP
#define SSET_DELTA_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace sset {

struct DeltaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A morphism [n] -> [m] in the simplex category, stored by its value list.
/// `values[i]` is the image of i; `target` is m.  The empty value list is
/// the (unique) map out of [-1].
struct MonotoneMap {
    int target = 0;
    std::vector<int> values;

    MonotoneMap() = default;
    MonotoneMap(int target_dim, std::vector<int> vals);

    int source_dim() const { return static_cast<int>(values.size()) - 1; }
    int target_dim() const { return target; }

    bool is_identity() const;
    bool is_epi() const;   // attains every element of 0..target
    bool is_mono() const;  // strictly increasing

    bool operator==(const MonotoneMap&) const = default;
    bool operator<(const MonotoneMap& o) const;

    /// Compact canonical print, e.g. "0,0,1>1".
    std::string str() const;
};

MonotoneMap identity_map(int n);
MonotoneMap face_map(int i, int n);        // coface [n-1] -> [n] skipping i
MonotoneMap degeneracy_map(int i, int n);  // codegeneracy [n+1] -> [n] repeating i

/// The unique map [n] ->> [0].
MonotoneMap collapse_map(int n);

/// The map [k] -> [n] picking out the strictly increasing vertex list `verts`.
MonotoneMap vertex_map(const std::vector<int>& verts, int n);

/// f after g, i.e. (f o g)(i) = f(g(i)); requires g.target == f.source.
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

struct EpiMono {
    MonotoneMap epi;
    MonotoneMap mono;
};

/// Unique factorization f = mono o epi with epi surjective, mono injective.
EpiMono epi_mono_factor(const MonotoneMap& f);

}  // namespace sset

#endif
