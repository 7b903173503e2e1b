#include "sset/constructions.hpp"

#include <algorithm>
#include <functional>

namespace sset {

namespace {

std::string subset_id(const std::vector<int>& verts) {
    std::string s;
    for (size_t i = 0; i < verts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(verts[i]);
    }
    return s;
}

void add_subset_simplex(FinSSet& X, const std::vector<int>& verts) {
    SimplexRecord rec;
    rec.dim = static_cast<int>(verts.size()) - 1;
    if (rec.dim > 0) {
        for (size_t i = 0; i < verts.size(); ++i) {
            std::vector<int> face = verts;
            face.erase(face.begin() + static_cast<long>(i));
            rec.faces.push_back(EZSimplex{identity_map(rec.dim - 1), subset_id(face)});
        }
    }
    X.simplices[subset_id(verts)] = std::move(rec);
}

void subsets_rec(int n, int from, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& emit) {
    if (!cur.empty()) emit(cur);
    for (int i = from; i <= n; ++i) {
        cur.push_back(i);
        subsets_rec(n, i + 1, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

FinSSet standard_simplex(int n) {
    if (n < 0) throw SSetError("standard_simplex: n must be >= 0");
    FinSSet X;
    X.name = "delta" + std::to_string(n);
    std::vector<int> cur;
    subsets_rec(n, 0, cur, [&X](const std::vector<int>& s) { add_subset_simplex(X, s); });
    return X;
}

FinSSet boundary(int n) {
    if (n < 0) throw SSetError("boundary: n must be >= 0");
    FinSSet X;
    X.name = "boundary" + std::to_string(n);
    std::vector<int> cur;
    subsets_rec(n, 0, cur, [&X, n](const std::vector<int>& s) {
        if (static_cast<int>(s.size()) <= n) add_subset_simplex(X, s);
    });
    return X;
}

bool Preorder::is_antisymmetric() const {
    for (const auto& [a, b] : leq)
        if (a != b && leq.count({b, a})) return false;
    return true;
}

void Preorder::validate() const {
    std::set<std::string> decl(elements.begin(), elements.end());
    for (const auto& [a, b] : leq) {
        if (!decl.count(a) || !decl.count(b))
            throw SSetError("preorder relation uses undeclared element");
    }
    for (const auto& [a, b] : leq)
        for (const auto& [c, d] : leq)
            if (b == c && a != d && !leq.count({a, d}))
                throw SSetError("preorder is not transitive: " + a + " <= " + b + " <= " + d);
}

namespace {

std::string chain_id(const std::vector<std::string>& chain) {
    std::string s;
    for (size_t i = 0; i < chain.size(); ++i) {
        if (i) s += '<';
        s += chain[i];
    }
    return s;
}

// Collapse adjacent equal entries; returns the codegeneracy pattern.
std::pair<MonotoneMap, std::vector<std::string>> chain_collapse(
    const std::vector<std::string>& chain) {
    std::vector<std::string> reduced;
    std::vector<int> sigma;
    for (const auto& e : chain) {
        if (reduced.empty() || reduced.back() != e) reduced.push_back(e);
        sigma.push_back(static_cast<int>(reduced.size()) - 1);
    }
    return {MonotoneMap(static_cast<int>(reduced.size()) - 1, std::move(sigma)), reduced};
}

void add_chain_simplex(FinSSet& X, const std::vector<std::string>& chain) {
    SimplexRecord rec;
    rec.dim = static_cast<int>(chain.size()) - 1;
    if (rec.dim > 0) {
        for (size_t i = 0; i < chain.size(); ++i) {
            std::vector<std::string> sub = chain;
            sub.erase(sub.begin() + static_cast<long>(i));
            auto [sigma, reduced] = chain_collapse(sub);
            rec.faces.push_back(EZSimplex{sigma, chain_id(reduced)});
        }
    }
    X.simplices[chain_id(chain)] = std::move(rec);
}

}  // namespace

FinSSet nerve(const Preorder& P) {
    P.validate();
    if (!P.is_antisymmetric()) throw SSetError("nerve: preorder is not antisymmetric");
    FinSSet X;
    X.name = "nerve";
    std::vector<std::string> sorted = P.elements;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::string> chain;
    std::function<void()> extend = [&]() {
        if (!chain.empty()) add_chain_simplex(X, chain);
        for (const auto& e : sorted) {
            if (!chain.empty() && !(chain.back() != e && P.le(chain.back(), e))) continue;
            chain.push_back(e);
            extend();
            chain.pop_back();
        }
    };
    extend();
    return X;
}

SSetMap map_into_nerve(const FinSSet& src, const FinSSet& target_nerve,
                       const std::map<std::string, std::string>& on_vertices) {
    SSetMap f;
    f.source = src;
    f.target = target_nerve;
    for (const auto& [id, rec] : src.simplices) {
        std::vector<std::string> chain;
        for (const auto& v : src.vertices_of(id)) {
            auto it = on_vertices.find(v);
            if (it == on_vertices.end())
                throw SSetError("map_into_nerve: no image for vertex " + v);
            chain.push_back(it->second);
        }
        auto [sigma, reduced] = chain_collapse(chain);
        std::string cid = chain_id(reduced);
        if (!target_nerve.has(cid))
            throw SSetError("map_into_nerve: image chain " + cid + " is not in the nerve");
        f.assign[id] = EZSimplex{sigma, cid};
    }
    return f;
}

FinSSet nerve_truncated(const Preorder& P, int d) {
    P.validate();
    if (d < 0) return FinSSet{"nerve_trunc", {}};
    FinSSet X;
    X.name = "nerve_trunc";
    std::vector<std::string> sorted = P.elements;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::string> chain;
    std::function<void()> extend = [&]() {
        if (!chain.empty()) add_chain_simplex(X, chain);
        if (static_cast<int>(chain.size()) == d + 1) return;
        for (const auto& e : sorted) {
            if (!chain.empty() && !(chain.back() != e && P.le(chain.back(), e))) continue;
            chain.push_back(e);
            extend();
            chain.pop_back();
        }
    };
    extend();
    return X;
}

FinSSet spanned(const FinSSet& X, const std::set<std::string>& S) {
    for (const auto& v : S)
        if (!X.has(v) || X.at(v).dim != 0) throw SSetError("spanned: unknown vertex " + v);
    std::vector<std::string> keep;
    for (const auto& [id, rec] : X.simplices) {
        bool all = true;
        for (const auto& v : X.vertices_of(id))
            if (!S.count(v)) {
                all = false;
                break;
            }
        if (all) keep.push_back(id);
    }
    FinSSet A = full_subcomplex(X, keep);
    A.name = X.name + "_spanned";
    return A;
}

FinSSet skeleton(const FinSSet& X, int d) {
    if (d < -1) throw SSetError("skeleton: d must be >= -1");
    FinSSet A;
    A.name = X.name + "_skel" + std::to_string(d);
    for (const auto& [id, rec] : X.simplices)
        if (rec.dim <= d) A.simplices[id] = rec;
    return A;
}

Coproduct coproduct(const std::vector<FinSSet>& parts, const std::vector<std::string>& labels) {
    std::vector<std::string> labs = labels;
    if (labs.empty())
        for (size_t i = 0; i < parts.size(); ++i) labs.push_back("c" + std::to_string(i));
    if (labs.size() != parts.size()) throw SSetError("coproduct: label count mismatch");
    Coproduct co;
    co.obj.name = "coproduct";
    for (size_t i = 0; i < parts.size(); ++i) {
        const std::string& pre = labs[i];
        for (const auto& [id, rec] : parts[i].simplices) {
            SimplexRecord r2 = rec;
            for (auto& f : r2.faces) f.base = pre + ":" + f.base;
            co.obj.simplices[pre + ":" + id] = std::move(r2);
        }
    }
    for (size_t i = 0; i < parts.size(); ++i) {
        SSetMap inj;
        inj.source = parts[i];
        inj.target = co.obj;
        for (const auto& [id, rec] : parts[i].simplices)
            inj.assign[id] = EZSimplex{identity_map(rec.dim), labs[i] + ":" + id};
        co.injections.push_back(std::move(inj));
    }
    return co;
}

SSetMap coproduct_map(const Coproduct& co, const std::vector<SSetMap>& components) {
    if (components.size() != co.injections.size())
        throw SSetError("coproduct_map: component count mismatch");
    SSetMap f;
    f.source = co.obj;
    f.target = components.empty() ? FinSSet{} : components[0].target;
    for (size_t i = 0; i < components.size(); ++i) {
        for (const auto& [id, y] : co.injections[i].assign) {
            // id is the original identifier in part i; its coproduct id is y.base
            f.assign[y.base] = components[i].assign.at(id);
        }
    }
    return f;
}

SSetMap constant_map(const FinSSet& X, const FinSSet& Y, const std::string& vertex) {
    if (!Y.has(vertex) || Y.at(vertex).dim != 0)
        throw SSetError("constant_map: " + vertex + " is not a vertex of the target");
    SSetMap f;
    f.source = X;
    f.target = Y;
    for (const auto& [id, rec] : X.simplices)
        f.assign[id] = EZSimplex{collapse_map(rec.dim), vertex};
    return f;
}

namespace {

std::string pair_id(const EZSimplex& a, const EZSimplex& b) {
    return "(" + a.str() + "|" + b.str() + ")";
}

struct JointForm {
    MonotoneMap sigma;
    EZSimplex left;
    EZSimplex right;
};

// EZ normal form of a pair of simplices of a product: collapse the positions
// where both operators repeat.
JointForm joint_normalize(const EZSimplex& u, const EZSimplex& v) {
    const int t = u.total_dim();
    std::vector<int> sigma;
    std::vector<int> lv, rv;
    int next = -1;
    for (int i = 0; i <= t; ++i) {
        bool repeat = i > 0 && u.op.values[i] == u.op.values[i - 1] &&
                      v.op.values[i] == v.op.values[i - 1];
        if (!repeat) {
            ++next;
            lv.push_back(u.op.values[i]);
            rv.push_back(v.op.values[i]);
        }
        sigma.push_back(next);
    }
    return JointForm{MonotoneMap(next, std::move(sigma)),
                     EZSimplex{MonotoneMap(u.op.target, std::move(lv)), u.base},
                     EZSimplex{MonotoneMap(v.op.target, std::move(rv)), v.base}};
}

// All jointly injective pairs of surjections [k] ->> [p], [k] ->> [q]
// (monotone staircases with unit or diagonal steps), in a fixed order.
void shuffles(int p, int q,
              const std::function<void(const MonotoneMap&, const MonotoneMap&)>& emit) {
    std::vector<int> a{0}, b{0};
    std::function<void()> step = [&]() {
        if (a.back() == p && b.back() == q) {
            emit(MonotoneMap(p, a), MonotoneMap(q, b));
            return;
        }
        if (a.back() < p) {
            a.push_back(a.back() + 1);
            b.push_back(b.back());
            step();
            a.pop_back();
            b.pop_back();
        }
        if (b.back() < q) {
            a.push_back(a.back());
            b.push_back(b.back() + 1);
            step();
            a.pop_back();
            b.pop_back();
        }
        if (a.back() < p && b.back() < q) {
            a.push_back(a.back() + 1);
            b.push_back(b.back() + 1);
            step();
            a.pop_back();
            b.pop_back();
        }
    };
    step();
}

struct PairCell {
    EZSimplex left;
    EZSimplex right;
};

Span span_of_pairs(const FinSSet& X, const FinSSet& Y,
                   const std::function<bool(const EZSimplex&, const EZSimplex&)>& admit,
                   const std::string& name) {
    Span sp;
    sp.obj.name = name;
    std::map<std::string, PairCell> cells;
    for (const auto& xid : X.ordered_ids()) {
        const int p = X.at(xid).dim;
        for (const auto& yid : Y.ordered_ids()) {
            const int q = Y.at(yid).dim;
            shuffles(p, q, [&](const MonotoneMap& s1, const MonotoneMap& s2) {
                EZSimplex u{s1, xid}, v{s2, yid};
                if (!admit(u, v)) return;
                cells[pair_id(u, v)] = PairCell{u, v};
            });
        }
    }
    for (const auto& [id, cell] : cells) {
        SimplexRecord rec;
        rec.dim = cell.left.total_dim();
        if (rec.dim > 0) {
            for (int i = 0; i <= rec.dim; ++i) {
                EZSimplex fu = apply_operator(X, cell.left, face_map(i, rec.dim));
                EZSimplex fv = apply_operator(Y, cell.right, face_map(i, rec.dim));
                JointForm jf = joint_normalize(fu, fv);
                std::string fid = pair_id(jf.left, jf.right);
                if (!cells.count(fid))
                    throw SSetError("internal: product face " + fid + " missing");
                rec.faces.push_back(EZSimplex{jf.sigma, fid});
            }
        }
        sp.obj.simplices[id] = std::move(rec);
    }
    sp.pr1.source = sp.obj;
    sp.pr1.target = X;
    sp.pr2.source = sp.obj;
    sp.pr2.target = Y;
    for (const auto& [id, cell] : cells) {
        sp.pr1.assign[id] = cell.left;
        sp.pr2.assign[id] = cell.right;
    }
    return sp;
}

}  // namespace

Span product(const FinSSet& X, const FinSSet& Y) {
    return span_of_pairs(
        X, Y, [](const EZSimplex&, const EZSimplex&) { return true; },
        "(" + X.name + " x " + Y.name + ")");
}

Span pullback(const SSetMap& f, const SSetMap& g) {
    ValidationReport dummy;
    // common-target check is structural
    {
        FinSSet a = f.target, b = g.target;
        if (!is_subcomplex(a, b) || !is_subcomplex(b, a))
            throw SSetError("pullback: targets disagree");
    }
    return span_of_pairs(
        f.source, g.source,
        [&](const EZSimplex& u, const EZSimplex& v) { return f.apply(u) == g.apply(v); },
        "pullback");
}

SSetMap classifying_map(const FinSSet& Y, const EZSimplex& a) {
    if (!Y.has(a.base) || Y.at(a.base).dim != a.op.target_dim())
        throw SSetError("classifying_map: simplex not in target");
    const int n = a.total_dim();
    SSetMap cm;
    cm.source = standard_simplex(n);
    cm.target = Y;
    for (const auto& [id, rec] : cm.source.simplices) {
        std::vector<int> verts;
        size_t pos = 0;
        while (pos < id.size()) {
            size_t comma = id.find(',', pos);
            if (comma == std::string::npos) comma = id.size();
            verts.push_back(std::stoi(id.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        cm.assign[id] = apply_operator(Y, a, vertex_map(verts, n));
    }
    return cm;
}

Span fiber_over(const SSetMap& f, const EZSimplex& a) {
    return pullback(f, classifying_map(f.target, a));
}

namespace {

std::vector<MonotoneMap> gen_surjections(int n, int m) {
    // monotone surjections [n] ->> [m], lexicographically ordered
    std::vector<MonotoneMap> out;
    std::vector<int> v{0};
    std::function<void()> rec = [&]() {
        if (static_cast<int>(v.size()) == n + 1) {
            if (v.back() == m) out.emplace_back(m, v);
            return;
        }
        v.push_back(v.back());
        rec();
        v.pop_back();
        if (v.back() < m) {
            v.push_back(v.back() + 1);
            rec();
            v.pop_back();
        }
    };
    if (n >= m && m >= 0) rec();
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    int add() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
};

}  // namespace

Pushout pushout(const SSetMap& f, const SSetMap& g) {
    if (!is_subcomplex(f.source, g.source) || !is_subcomplex(g.source, f.source))
        throw SSetError("pushout: legs have different sources");
    const FinSSet& A = f.source;
    const FinSSet& B = f.target;
    const FinSSet& C = g.target;
    const int N = std::max(B.dim(), C.dim());

    UnionFind uf;
    std::map<std::string, int> index;
    std::vector<std::pair<char, EZSimplex>> elems;
    auto intern = [&](char side, const EZSimplex& e) {
        std::string key = std::string(1, side) + "|" + e.str();
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = uf.add();
        index.emplace(std::move(key), id);
        elems.push_back({side, e});
        return id;
    };

    for (const auto& aid : A.ordered_ids()) {
        const int m = A.at(aid).dim;
        for (int n = m; n <= N; ++n) {
            for (const auto& w : gen_surjections(n, m)) {
                EZSimplex src{w, aid};
                uf.unite(intern('B', f.apply(src)), intern('C', g.apply(src)));
            }
        }
    }

    // Classes: root -> sorted member list.  Elements not interned are
    // singleton classes.
    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < static_cast<int>(uf.parent.size()); ++i)
        classes[uf.find(i)].push_back(i);

    auto lookup = [&](char side, const EZSimplex& e) -> int {
        auto it = index.find(std::string(1, side) + "|" + e.str());
        return it == index.end() ? -1 : uf.find(it->second);
    };

    // Class of the identity element of a non-degenerate base; returns the
    // canonical name if non-degenerate, else a degenerate member to chase.
    struct ClassInfo {
        bool nondeg = true;
        std::string name;          // when nondeg
        char deg_side = 0;         // when degenerate
        EZSimplex deg_member;      // member with non-identity operator
        char rep_side = 0;         // side of the name representative
        std::string rep_base;
    };
    std::map<std::pair<char, std::string>, ClassInfo> ci_cache;
    auto class_info = [&](char side, const std::string& base) -> const ClassInfo& {
        auto hit = ci_cache.find({side, base});
        if (hit != ci_cache.end()) return hit->second;
        ClassInfo ci;
        int root = lookup(side, EZSimplex{identity_map(side == 'B' ? B.at(base).dim
                                                                   : C.at(base).dim),
                                          base});
        if (root < 0) {
            ci.name = std::string(1, side) + ":" + base;
            ci.rep_side = side;
            ci.rep_base = base;
            return ci_cache[{side, base}] = std::move(ci);
        }
        std::string best;
        char best_side = 0;
        std::string best_base;
        for (int e : classes.at(root)) {
            const auto& [s, ez] = elems[e];
            if (!ez.op.is_identity()) {
                if (ci.nondeg || std::string(1, s) + "|" + ez.str() <
                                     std::string(1, ci.deg_side) + "|" + ci.deg_member.str()) {
                    ci.nondeg = false;
                    ci.deg_side = s;
                    ci.deg_member = ez;
                }
            } else {
                std::string cand = std::string(1, s) + ":" + ez.base;
                if (best.empty() || cand < best) {
                    best = cand;
                    best_side = s;
                    best_base = ez.base;
                }
            }
        }
        ci.name = best;
        ci.rep_side = best_side;
        ci.rep_base = best_base;
        return ci_cache[{side, base}] = std::move(ci);
    };

    // EZ normal form in the pushout of the element op @ base on a side.
    std::function<EZSimplex(char, MonotoneMap, std::string)> ez_of =
        [&](char side, MonotoneMap op, std::string base) -> EZSimplex {
        const ClassInfo& ci = class_info(side, base);
        if (ci.nondeg) return EZSimplex{std::move(op), ci.name};
        return ez_of(ci.deg_side, compose(ci.deg_member.op, op), ci.deg_member.base);
    };

    Pushout po;
    po.obj.name = "pushout";
    auto harvest = [&](char side, const FinSSet& S) {
        for (const auto& [id, rec] : S.simplices) {
            const ClassInfo& ci = class_info(side, id);
            if (!ci.nondeg) continue;
            if (po.obj.has(ci.name)) continue;  // merged classes appear once
            SimplexRecord out;
            out.dim = side == 'B' ? B.at(ci.rep_base).dim : C.at(ci.rep_base).dim;
            const FinSSet& host = ci.rep_side == 'B' ? B : C;
            for (const auto& fz : host.at(ci.rep_base).faces)
                out.faces.push_back(ez_of(ci.rep_side, fz.op, fz.base));
            po.obj.simplices[ci.name] = std::move(out);
            po.rep[ci.name] = {ci.rep_side, ci.rep_base};
        }
    };
    harvest('B', B);
    harvest('C', C);

    po.from_b.source = B;
    po.from_b.target = po.obj;
    for (const auto& [id, rec] : B.simplices)
        po.from_b.assign[id] = ez_of('B', identity_map(rec.dim), id);
    po.from_c.source = C;
    po.from_c.target = po.obj;
    for (const auto& [id, rec] : C.simplices)
        po.from_c.assign[id] = ez_of('C', identity_map(rec.dim), id);
    return po;
}

SSetMap induced_from_pushout(const Pushout& po, const SSetMap& hb, const SSetMap& hc) {
    SSetMap h;
    h.source = po.obj;
    h.target = hb.target;
    for (const auto& [id, sb] : po.rep) {
        const auto& [side, base] = sb;
        h.assign[id] = side == 'B' ? hb.assign.at(base) : hc.assign.at(base);
    }
    return h;
}

QuotientResult quotient(const FinSSet& X, const FinSSet& A) {
    if (!is_subcomplex(A, X)) throw SSetError("quotient: A is not a subcomplex of X");
    FinSSet pt = standard_simplex(0);
    Pushout po = pushout(inclusion_map(A, X), constant_map(A, pt, "0"));
    po.obj.name = X.name + "_mod_" + A.name;
    QuotientResult q;
    q.obj = po.obj;
    q.proj = po.from_b;
    q.proj.target.name = po.obj.name;
    return q;
}

Span cylinder(const FinSSet& X) { return product(X, standard_simplex(1)); }

SSetMap end_inclusion(const FinSSet& X, int eps) {
    if (eps != 0 && eps != 1) throw SSetError("end_inclusion: end must be 0 or 1");
    Span cyl = cylinder(X);
    SSetMap f;
    f.source = X;
    f.target = cyl.obj;
    const std::string v = std::to_string(eps);
    for (const auto& [id, rec] : X.simplices) {
        EZSimplex left{identity_map(rec.dim), id};
        EZSimplex right{collapse_map(rec.dim), v};
        f.assign[id] = EZSimplex{identity_map(rec.dim), pair_id(left, right)};
    }
    return f;
}

MappingCylinder mapping_cylinder(const SSetMap& f) {
    const FinSSet& A = f.source;
    const FinSSet& B = f.target;
    Span cyl = cylinder(A);
    SSetMap e0 = end_inclusion(A, 0);
    SSetMap e1 = end_inclusion(A, 1);
    Pushout po = pushout(e1, f);
    MappingCylinder mc;
    mc.cyl = po.obj;
    mc.cyl.name = "cyl(" + A.name + "->" + B.name + ")";
    mc.include_source = compose(po.from_b, e0);
    mc.include_target = po.from_c;
    mc.collapse = induced_from_pushout(po, compose(f, cyl.pr1), identity_sset_map(B));
    return mc;
}

FinSSet double_mapping_cylinder(const SSetMap& f, const SSetMap& g) {
    const FinSSet& X = f.source;
    Coproduct ends = coproduct({X, X}, {"0", "1"});
    Span cyl = cylinder(X);
    SSetMap to_cyl = coproduct_map(ends, {end_inclusion(X, 0), end_inclusion(X, 1)});
    to_cyl.target = cyl.obj;
    Coproduct yz = coproduct({f.target, g.target}, {"Y", "Z"});
    SSetMap to_yz =
        coproduct_map(ends, {compose(yz.injections[0], f), compose(yz.injections[1], g)});
    FinSSet out = pushout(to_cyl, to_yz).obj;
    out.name = "double_cyl";
    return out;
}

}  // namespace sset
