#include "sset/delta.hpp"

#include <algorithm>

namespace sset {

MonotoneMap::MonotoneMap(int target_dim, std::vector<int> vals)
    : target(target_dim), values(std::move(vals)) {
    if (target < 0) throw DeltaError("MonotoneMap: negative target dimension");
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0 || values[i] > target)
            throw DeltaError("MonotoneMap: value out of range");
        if (i > 0 && values[i] < values[i - 1])
            throw DeltaError("MonotoneMap: values not weakly increasing");
    }
}

bool MonotoneMap::is_identity() const {
    if (static_cast<int>(values.size()) != target + 1) return false;
    for (int i = 0; i <= target; ++i)
        if (values[i] != i) return false;
    return true;
}

bool MonotoneMap::is_epi() const {
    int next = 0;
    for (int v : values) {
        if (v == next) ++next;
        else if (v > next) return false;
    }
    return next == target + 1;
}

bool MonotoneMap::is_mono() const {
    for (size_t i = 1; i < values.size(); ++i)
        if (values[i] <= values[i - 1]) return false;
    return true;
}

bool MonotoneMap::operator<(const MonotoneMap& o) const {
    if (target != o.target) return target < o.target;
    return values < o.values;
}

std::string MonotoneMap::str() const {
    std::string s;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values[i]);
    }
    s += '>';
    s += std::to_string(target);
    return s;
}

MonotoneMap identity_map(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i;
    return MonotoneMap(n, std::move(v));
}

MonotoneMap face_map(int i, int n) {
    if (n < 1 || i < 0 || i > n) throw DeltaError("face_map: index out of range");
    std::vector<int> v;
    v.reserve(n);
    for (int j = 0; j <= n; ++j)
        if (j != i) v.push_back(j);
    return MonotoneMap(n, std::move(v));
}

MonotoneMap degeneracy_map(int i, int n) {
    if (n < 0 || i < 0 || i > n) throw DeltaError("degeneracy_map: index out of range");
    std::vector<int> v;
    v.reserve(n + 2);
    for (int j = 0; j <= n + 1; ++j) v.push_back(j <= i ? std::min(j, i) : j - 1);
    return MonotoneMap(n, std::move(v));
}

MonotoneMap collapse_map(int n) {
    return MonotoneMap(0, std::vector<int>(n + 1, 0));
}

MonotoneMap vertex_map(const std::vector<int>& verts, int n) {
    return MonotoneMap(n, verts);
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
    if (g.target != f.source_dim())
        throw DeltaError("compose: dimension mismatch (" + g.str() + " then " + f.str() + ")");
    std::vector<int> v;
    v.reserve(g.values.size());
    for (int x : g.values) v.push_back(f.values[x]);
    return MonotoneMap(f.target, std::move(v));
}

EpiMono epi_mono_factor(const MonotoneMap& f) {
    std::vector<int> image = f.values;
    image.erase(std::unique(image.begin(), image.end()), image.end());
    int r = static_cast<int>(image.size()) - 1;
    std::vector<int> epi_vals;
    epi_vals.reserve(f.values.size());
    for (int x : f.values) {
        int idx = static_cast<int>(std::lower_bound(image.begin(), image.end(), x) - image.begin());
        epi_vals.push_back(idx);
    }
    return EpiMono{MonotoneMap(r, std::move(epi_vals)), MonotoneMap(f.target, std::move(image))};
}

}  // namespace sset
