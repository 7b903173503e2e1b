#include "sset/sset.hpp"

#include <algorithm>
#include <set>

namespace sset {

const SimplexRecord& FinSSet::at(const std::string& id) const {
    auto it = simplices.find(id);
    if (it == simplices.end()) throw SSetError("unknown simplex identifier: " + id);
    return it->second;
}

EZSimplex FinSSet::nd(const std::string& id) const {
    return EZSimplex{identity_map(at(id).dim), id};
}

int FinSSet::dim() const {
    int d = -1;
    for (const auto& [id, rec] : simplices) d = std::max(d, rec.dim);
    return d;
}

std::vector<int> FinSSet::counts() const {
    std::vector<int> c(dim() + 1, 0);
    for (const auto& [id, rec] : simplices) ++c[rec.dim];
    return c;
}

std::vector<std::string> FinSSet::nondeg(int n) const {
    std::vector<std::string> out;
    for (const auto& [id, rec] : simplices)
        if (rec.dim == n) out.push_back(id);
    return out;
}

std::vector<std::string> FinSSet::ordered_ids() const {
    std::vector<std::string> out;
    out.reserve(simplices.size());
    for (const auto& [id, rec] : simplices) out.push_back(id);
    std::sort(out.begin(), out.end(), [this](const std::string& a, const std::string& b) {
        int da = simplices.at(a).dim, db = simplices.at(b).dim;
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

std::vector<std::string> FinSSet::vertices_of(const std::string& id) const {
    const int n = at(id).dim;
    std::vector<std::string> out;
    out.reserve(n + 1);
    for (int k = 0; k <= n; ++k)
        out.push_back(apply_operator(*this, nd(id), vertex_map({k}, n)).base);
    return out;
}

namespace {

// X(mono)(base) for an injective operator, resolved through stored faces.
EZSimplex resolve_mono(const FinSSet& X, const std::string& base, const MonotoneMap& mono) {
    if (mono.is_identity()) return X.nd(base);
    // Strip the largest missing value j: mono = face_map(j, p) o mono'.
    const int p = mono.target_dim();
    int j = p;
    {
        std::set<int> img(mono.values.begin(), mono.values.end());
        while (img.count(j)) --j;
    }
    std::vector<int> vals;
    vals.reserve(mono.values.size());
    for (int v : mono.values) vals.push_back(v > j ? v - 1 : v);
    MonotoneMap rest(p - 1, std::move(vals));
    const EZSimplex& face = X.at(base).faces.at(j);
    return apply_operator(X, face, rest);
}

}  // namespace

EZSimplex apply_operator(const FinSSet& X, const EZSimplex& x, const MonotoneMap& f) {
    if (f.target_dim() != x.total_dim())
        throw SSetError("apply_operator: operator " + f.str() + " does not target dim " +
                        std::to_string(x.total_dim()));
    auto [epi, mono] = epi_mono_factor(compose(x.op, f));
    EZSimplex y = resolve_mono(X, x.base, mono);
    return EZSimplex{compose(y.op, epi), y.base};
}

std::string ValidationReport::str() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& v : violations) {
        if (!s.empty()) s += '\n';
        s += "at " + v.simplex + ": " + v.message;
    }
    return s;
}

ValidationReport validate(const FinSSet& X) {
    ValidationReport rep;
    auto bad = [&rep](const std::string& id, const std::string& msg) {
        rep.violations.push_back({id, msg});
    };
    // Structural pass first; the identity pass assumes well-formed records.
    for (const auto& [id, rec] : X.simplices) {
        if (rec.dim < 0) {
            bad(id, "negative dimension");
            continue;
        }
        const size_t want = rec.dim == 0 ? 0 : static_cast<size_t>(rec.dim) + 1;
        if (rec.faces.size() != want) {
            bad(id, "expected " + std::to_string(want) + " faces, found " +
                        std::to_string(rec.faces.size()));
            continue;
        }
        for (size_t i = 0; i < rec.faces.size(); ++i) {
            const EZSimplex& f = rec.faces[i];
            const std::string where = id + " (face " + std::to_string(i) + ")";
            if (!f.op.is_epi()) {
                bad(where, "face operator " + f.op.str() + " is not surjective");
                continue;
            }
            if (f.total_dim() != rec.dim - 1) {
                bad(where, "face has total dimension " + std::to_string(f.total_dim()));
                continue;
            }
            if (!X.has(f.base)) {
                bad(where, "unknown base " + f.base);
                continue;
            }
            if (X.at(f.base).dim != f.op.target_dim())
                bad(where, "base dimension does not match operator target");
        }
    }
    if (!rep.ok()) return rep;
    for (const auto& [id, rec] : X.simplices) {
        const int n = rec.dim;
        if (n < 2) continue;  // the identities compare maps to X_{n-2}
        for (int j = 1; j <= n; ++j) {
            for (int i = 0; i < j; ++i) {
                EZSimplex lhs, rhs;
                try {
                    lhs = apply_operator(X, rec.faces[j], face_map(i, n - 1));
                    rhs = apply_operator(X, rec.faces[i], face_map(j - 1, n - 1));
                } catch (const std::exception& e) {
                    bad(id, std::string("face evaluation failed: ") + e.what());
                    continue;
                }
                if (!(lhs == rhs))
                    bad(id, "simplicial identity d_" + std::to_string(i) + " d_" +
                                std::to_string(j) + " violated: " + lhs.str() + " vs " + rhs.str());
            }
        }
    }
    return rep;
}

EZSimplex SSetMap::apply(const EZSimplex& x) const {
    auto it = assign.find(x.base);
    if (it == assign.end()) throw SSetError("SSetMap: no assignment for " + x.base);
    return apply_operator(target, it->second, x.op);
}

ValidationReport validate_map(const SSetMap& f) {
    ValidationReport rep;
    auto bad = [&rep](const std::string& id, const std::string& msg) {
        rep.violations.push_back({id, msg});
    };
    for (const auto& [id, rec] : f.source.simplices) {
        auto it = f.assign.find(id);
        if (it == f.assign.end()) {
            bad(id, "no assignment");
            continue;
        }
        const EZSimplex& y = it->second;
        if (!f.target.has(y.base)) {
            bad(id, "assigned base " + y.base + " not in target");
            continue;
        }
        if (!y.op.is_epi() || f.target.at(y.base).dim != y.op.target_dim()) {
            bad(id, "assigned simplex " + y.str() + " is not in EZ form");
            continue;
        }
        if (y.total_dim() != rec.dim) {
            bad(id, "dimension not preserved");
            continue;
        }
        for (int i = 0; i <= rec.dim && rec.dim > 0; ++i) {
            EZSimplex lhs, rhs;
            try {
                lhs = f.apply(rec.faces[i]);
                rhs = apply_operator(f.target, y, face_map(i, rec.dim));
            } catch (const std::exception& e) {
                bad(id, std::string("face image failed: ") + e.what());
                continue;
            }
            if (!(lhs == rhs))
                bad(id, "does not commute with d_" + std::to_string(i) + ": " + lhs.str() +
                            " vs " + rhs.str());
        }
    }
    return rep;
}

SSetMap identity_sset_map(const FinSSet& X) {
    SSetMap f;
    f.source = X;
    f.target = X;
    for (const auto& [id, rec] : X.simplices) f.assign[id] = X.nd(id);
    return f;
}

namespace {
bool same_object(const FinSSet& A, const FinSSet& B) {
    if (A.simplices.size() != B.simplices.size()) return false;
    for (const auto& [id, rec] : A.simplices) {
        auto it = B.simplices.find(id);
        if (it == B.simplices.end()) return false;
        if (it->second.dim != rec.dim || !(it->second.faces == rec.faces)) return false;
    }
    return true;
}
}  // namespace

SSetMap compose(const SSetMap& g, const SSetMap& f) {
    if (!same_object(f.target, g.source))
        throw SSetError("compose: middle objects disagree");
    SSetMap h;
    h.source = f.source;
    h.target = g.target;
    for (const auto& [id, y] : f.assign) h.assign[id] = g.apply(y);
    return h;
}

bool is_subcomplex(const FinSSet& A, const FinSSet& X) {
    for (const auto& [id, rec] : A.simplices) {
        auto it = X.simplices.find(id);
        if (it == X.simplices.end()) return false;
        if (it->second.dim != rec.dim || !(it->second.faces == rec.faces)) return false;
    }
    return true;
}

SSetMap inclusion_map(const FinSSet& A, const FinSSet& X) {
    if (!is_subcomplex(A, X)) throw SSetError("inclusion_map: not a subcomplex");
    SSetMap f;
    f.source = A;
    f.target = X;
    for (const auto& [id, rec] : A.simplices) f.assign[id] = X.nd(id);
    return f;
}

FinSSet full_subcomplex(const FinSSet& X, const std::vector<std::string>& ids) {
    std::set<std::string> keep;
    for (const auto& id : ids)
        if (X.has(id)) keep.insert(id);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = keep.begin(); it != keep.end();) {
            bool all = true;
            for (const auto& f : X.at(*it).faces)
                if (!keep.count(f.base)) {
                    all = false;
                    break;
                }
            if (!all) {
                it = keep.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }
    FinSSet A;
    A.name = X.name;
    for (const auto& id : keep) A.simplices[id] = X.at(id);
    return A;
}

bool maps_into(const SSetMap& f, const FinSSet& A) {
    for (const auto& [id, y] : f.assign)
        if (!A.has(y.base)) return false;
    return true;
}

SSetMap restrict_map(const SSetMap& f, const FinSSet& A) {
    SSetMap g;
    g.source = A;
    g.target = f.target;
    for (const auto& [id, rec] : A.simplices) g.assign[id] = f.assign.at(id);
    return g;
}

namespace {

bool iso_search(const FinSSet& X, const FinSSet& Y, const std::vector<std::string>& xs,
                size_t k, std::map<std::string, std::string>& m, std::set<std::string>& used) {
    if (k == xs.size()) return true;
    const std::string& x = xs[k];
    const SimplexRecord& rx = X.at(x);
    for (const auto& [y, ry] : Y.simplices) {
        if (ry.dim != rx.dim || used.count(y)) continue;
        bool fit = true;
        for (size_t i = 0; i < rx.faces.size() && fit; ++i) {
            const EZSimplex& fx = rx.faces[i];
            const EZSimplex& fy = ry.faces[i];
            fit = fx.op == fy.op && m.at(fx.base) == fy.base;
        }
        if (!fit) continue;
        m[x] = y;
        used.insert(y);
        if (iso_search(X, Y, xs, k + 1, m, used)) return true;
        m.erase(x);
        used.erase(y);
    }
    return false;
}

}  // namespace

bool isomorphic(const FinSSet& X, const FinSSet& Y) {
    if (X.counts() != Y.counts()) return false;
    std::vector<std::string> xs = X.ordered_ids();
    std::map<std::string, std::string> m;
    std::set<std::string> used;
    return iso_search(X, Y, xs, 0, m, used);
}

}  // namespace sset
