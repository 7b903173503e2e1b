#include "sset/verify.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include "sset/constructions.hpp"

namespace sset {

namespace {

size_t cdim(const ChainComplex& c, int n) {
    if (n < 0 || n >= static_cast<int>(c.basis.size())) return 0;
    return c.basis[static_cast<size_t>(n)].size();
}

IntMatrix bnd(const ChainComplex& c, int n) {
    if (n >= 1 && n < static_cast<int>(c.boundary.size())) return c.boundary[static_cast<size_t>(n)];
    return IntMatrix(cdim(c, n - 1), cdim(c, n));
}

// Pre-factored integer linear solver for repeated right-hand sides.
struct Solver {
    Smith s;
    explicit Solver(const IntMatrix& a) : s(smith_normal_form(a)) {}
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const {
        std::vector<Int> pb = s.p.apply(b);
        std::vector<Int> y(s.q.rows);
        for (size_t i = 0; i < pb.size(); ++i) {
            if (i < s.rank) {
                if (pb[i] % s.d.at(i, i) != 0) return std::nullopt;
                y[i] = pb[i] / s.d.at(i, i);
            } else if (pb[i] != 0) {
                return std::nullopt;
            }
        }
        return s.q.apply(y);
    }
};

std::vector<Int> column(const IntMatrix& m, size_t j) {
    std::vector<Int> v(m.rows);
    for (size_t i = 0; i < m.rows; ++i) v[i] = m.at(i, j);
    return v;
}

}  // namespace

ChainComplex chain_complex(const FinSSet& X) {
    ChainComplex c;
    int D = X.size() ? X.dim() : -1;
    for (int n = 0; n <= D; ++n) c.basis.push_back(X.nondeg(n));
    std::vector<std::map<std::string, size_t>> index(c.basis.size());
    for (size_t n = 0; n < c.basis.size(); ++n)
        for (size_t i = 0; i < c.basis[n].size(); ++i) index[n][c.basis[n][i]] = i;
    for (int n = 0; n <= D; ++n) {
        size_t sn = static_cast<size_t>(n);
        IntMatrix m(n == 0 ? 0 : c.basis[sn - 1].size(), c.basis[sn].size());
        if (n > 0) {
            for (size_t j = 0; j < c.basis[sn].size(); ++j) {
                const SimplexRecord& rec = X.at(c.basis[sn][j]);
                for (int i = 0; i <= n; ++i) {
                    const EZSimplex& face = rec.faces[static_cast<size_t>(i)];
                    if (!face.is_nondegenerate()) continue;
                    m.at(index[sn - 1].at(face.base), j) += (i % 2 == 0) ? 1 : -1;
                }
            }
        }
        c.boundary.push_back(std::move(m));
    }
    return c;
}

std::vector<AbelianInvariants> homology(const FinSSet& X) {
    ChainComplex c = chain_complex(X);
    std::vector<AbelianInvariants> H;
    for (int n = 0; n < static_cast<int>(c.basis.size()); ++n) {
        Smith low = smith_normal_form(bnd(c, n));
        Smith high = smith_normal_form(bnd(c, n + 1));
        AbelianInvariants inv;
        inv.rank = static_cast<long long>(cdim(c, n)) - static_cast<long long>(low.rank) -
                   static_cast<long long>(high.rank);
        inv.torsion = high.torsion();
        H.push_back(std::move(inv));
    }
    return H;
}

std::vector<AbelianInvariants> reduced_homology(const FinSSet& X) {
    std::vector<AbelianInvariants> H = homology(X);
    if (!H.empty()) H[0].rank -= 1;
    return H;
}

long long euler_char(const FinSSet& X) {
    long long chi = 0;
    std::vector<int> cnt = X.counts();
    for (size_t n = 0; n < cnt.size(); ++n) chi += (n % 2 == 0) ? cnt[n] : -cnt[n];
    return chi;
}

AbelianInvariants GroupPresentation::abelianization() const {
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < generators.size(); ++i) index[generators[i]] = i;
    IntMatrix rel(generators.size(), relators.size());
    for (size_t j = 0; j < relators.size(); ++j)
        for (const auto& [g, e] : relators[j]) rel.at(index.at(g), j) += e;
    return cokernel_invariants(rel, generators.size());
}

GroupPresentation pi1(const FinSSet& X, const std::string& base) {
    if (!X.has(base) || X.at(base).dim != 0) throw SSetError("pi1: unknown base vertex " + base);
    // undirected adjacency on vertices via non-degenerate edges
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> adj;  // v -> (w, edge)
    std::vector<std::string> edges = X.nondeg(1);
    for (const auto& e : edges) {
        const SimplexRecord& rec = X.at(e);
        adj[rec.faces[1].base].push_back({rec.faces[0].base, e});
        adj[rec.faces[0].base].push_back({rec.faces[1].base, e});
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
    std::set<std::string> tree;     // spanning-tree edge ids
    std::set<std::string> visited;  // vertices reached
    std::queue<std::string> work;
    visited.insert(base);
    work.push(base);
    while (!work.empty()) {
        std::string v = work.front();
        work.pop();
        for (const auto& [w, e] : adj[v])
            if (visited.insert(w).second) {
                tree.insert(e);
                work.push(w);
            }
    }
    for (const auto& v : X.nondeg(0))
        if (!visited.count(v)) throw SSetError("pi1: input is not connected (vertex " + v + ")");

    GroupPresentation p;
    p.generators = edges;
    for (const auto& e : tree) p.relators.push_back(Word{{e, 1}});
    auto letter = [](const EZSimplex& f, int sign) {
        Word w;
        if (f.is_nondegenerate()) w.push_back({f.base, sign});
        return w;
    };
    for (const auto& t : X.nondeg(2)) {
        const SimplexRecord& rec = X.at(t);
        Word w = letter(rec.faces[2], 1);
        Word w0 = letter(rec.faces[0], 1);
        Word w1 = letter(rec.faces[1], -1);
        w.insert(w.end(), w0.begin(), w0.end());
        w.insert(w.end(), w1.begin(), w1.end());
        p.relators.push_back(std::move(w));
    }
    return p;
}

namespace {

Word invert_word(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->first, -it->second});
    return out;
}

Word free_reduce(const Word& w) {
    Word out;
    for (const auto& l : w) {
        if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word cyclic_reduce(Word w) {
    w = free_reduce(w);
    while (w.size() >= 2 && w.front().first == w.back().first &&
           w.front().second == -w.back().second) {
        w.erase(w.begin());
        w.pop_back();
        w = free_reduce(w);
    }
    return w;
}

// Canonical representative among all rotations of w and of w^{-1}.
Word canonical_cyclic(const Word& w) {
    if (w.empty()) return w;
    Word best = w;
    for (const Word& cand : {w, invert_word(w)}) {
        Word rot = cand;
        for (size_t i = 0; i < cand.size(); ++i) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot < best) best = rot;
        }
    }
    return best;
}

// Replace every occurrence of generator g by the word rep (for g^{+1}).
Word substitute(const Word& w, const std::string& g, const Word& rep) {
    Word out;
    for (const auto& l : w) {
        if (l.first != g) {
            out.push_back(l);
        } else if (l.second == 1) {
            out.insert(out.end(), rep.begin(), rep.end());
        } else {
            Word inv = invert_word(rep);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return free_reduce(out);
}

}  // namespace

GroupPresentation tietze_simplify(GroupPresentation p, int budget) {
    int moves = 0;
    auto spend = [&]() { return moves++ < budget; };
    bool changed = true;
    while (changed && moves < budget) {
        changed = false;
        // normalize relators
        for (Word& r : p.relators) r = cyclic_reduce(r);
        std::vector<Word> keep;
        std::set<Word> seen;
        for (Word& r : p.relators) {
            if (r.empty()) continue;
            if (seen.insert(canonical_cyclic(r)).second) keep.push_back(std::move(r));
        }
        if (keep.size() != p.relators.size()) changed = true;
        p.relators = std::move(keep);

        // eliminate a generator that some relator determines uniquely,
        // shortest relator first
        std::vector<size_t> order(p.relators.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            if (p.relators[a].size() != p.relators[b].size()) return p.relators[a].size() < p.relators[b].size();
            return p.relators[a] < p.relators[b];
        });
        for (size_t ri : order) {
            const Word r = p.relators[ri];
            std::string g;
            size_t pos = 0;
            bool found = false;
            for (size_t i = 0; i < r.size() && !found; ++i) {
                size_t count = 0;
                for (const auto& l : r)
                    if (l.first == r[i].first) ++count;
                if (count == 1) {
                    g = r[i].first;
                    pos = i;
                    found = true;
                }
            }
            if (!found || !spend()) continue;
            // solve r = 1 for g: g^{eps} = (prefix)^{-1} (suffix)^{-1}
            Word rot = r;
            std::rotate(rot.begin(), rot.begin() + static_cast<long>(pos), rot.end());
            // rot = g^{eps} . tail  =>  g^{eps} = tail^{-1}
            Word rep = invert_word(Word(rot.begin() + 1, rot.end()));
            if (rot[0].second == -1) rep = invert_word(rep);
            p.relators.erase(p.relators.begin() + static_cast<long>(ri));
            for (Word& other : p.relators) other = substitute(other, g, rep);
            p.generators.erase(std::remove(p.generators.begin(), p.generators.end(), g),
                               p.generators.end());
            changed = true;
            break;
        }
    }
    for (Word& r : p.relators) r = cyclic_reduce(r);
    std::erase_if(p.relators, [](const Word& r) { return r.empty(); });
    return p;
}

bool greedy_collapse_to_point(const FinSSet& X) {
    if (X.size() == 0) return false;
    // occurrence counts of each simplex as an identity-operator face of a
    // live simplex, maintained incrementally
    std::map<std::string, int> occ;
    std::map<std::string, std::vector<std::string>> cofaces;  // face -> cofaces (with multiplicity)
    std::set<std::string> live;
    for (const auto& [id, rec] : X.simplices) {
        live.insert(id);
        for (const EZSimplex& f : rec.faces)
            if (f.is_nondegenerate()) {
                ++occ[f.base];
                cofaces[f.base].push_back(id);
            }
    }
    auto rank = [&X](const std::string& id) { return std::pair<int, std::string>{X.at(id).dim, id}; };
    std::set<std::pair<int, std::string>> candidates;  // potential free faces, by (dim, id)
    for (const auto& id : live)
        if (occ[id] == 1) candidates.insert(rank(id));
    auto drop = [&](const std::string& id) {
        live.erase(id);
        candidates.erase(rank(id));
        for (const EZSimplex& f : X.at(id).faces) {
            if (!f.is_nondegenerate() || !live.count(f.base)) continue;
            if (--occ[f.base] == 1) candidates.insert(rank(f.base));
        }
    };
    while (!candidates.empty()) {
        auto [d, id] = *candidates.begin();
        candidates.erase(candidates.begin());
        if (!live.count(id) || occ[id] != 1) continue;
        std::string tau;
        for (const auto& cf : cofaces[id])
            if (live.count(cf)) tau = cf;
        if (tau.empty()) continue;  // the unique occurrence died with its coface
        drop(id);
        drop(tau);
    }
    return live.size() == 1 && X.at(*live.begin()).dim == 0;
}

ContractibilityCertificate contractibility_certificate(const FinSSet& X) {
    ContractibilityCertificate c;
    if (X.size() == 0) {
        c.verdict = Contractibility::Refuted;
        c.reason = "empty";
        return c;
    }
    if (connected_components(X).size() != 1) {
        c.verdict = Contractibility::Refuted;
        c.reason = "not connected";
        return c;
    }
    if (greedy_collapse_to_point(X)) {
        c.verdict = Contractibility::Certified;
        c.reason = "collapses to a point";
        return c;
    }
    std::vector<AbelianInvariants> H = reduced_homology(X);
    for (size_t n = 0; n < H.size(); ++n)
        if (!H[n].is_trivial()) {
            c.verdict = Contractibility::Refuted;
            c.reason = "reduced H_" + std::to_string(n) + " = " + H[n].str();
            return c;
        }
    GroupPresentation p = tietze_simplify(pi1(X, X.nondeg(0).front()));
    if (p.generators.empty()) {
        c.verdict = Contractibility::Certified;
        c.reason = "simply connected with trivial reduced homology";
        return c;
    }
    c.verdict = Contractibility::HomologyPointOnly;
    c.reason = "acyclic, but the fundamental group presentation did not simplify away";
    return c;
}

FiberReport fiber_condition(const SSetMap& f, int d) {
    FiberReport rep;
    for (const auto& id : f.target.ordered_ids()) {
        int n = f.target.at(id).dim;
        if (n > d) continue;
        Span F = fiber_over(f, f.target.nd(id));
        FiberVerdict v;
        v.simplex = id;
        v.dim = n;
        v.cert = contractibility_certificate(F.obj);
        switch (v.cert.verdict) {
            case Contractibility::Certified: ++rep.certified; break;
            case Contractibility::HomologyPointOnly: ++rep.homology_point_only; break;
            case Contractibility::Refuted: ++rep.refuted; break;
        }
        rep.fibers.push_back(std::move(v));
    }
    return rep;
}

InducedHomology induced_homology_map(const SSetMap& f) {
    ChainComplex cx = chain_complex(f.source);
    ChainComplex cy = chain_complex(f.target);
    InducedHomology out;
    int D = static_cast<int>(std::max(cx.basis.size(), cy.basis.size()));
    for (int n = 0; n < D; ++n) {
        size_t sx = cdim(cx, n), sy = cdim(cy, n);
        // chain map in degree n
        std::map<std::string, size_t> yindex;
        if (n < static_cast<int>(cy.basis.size()))
            for (size_t i = 0; i < cy.basis[static_cast<size_t>(n)].size(); ++i)
                yindex[cy.basis[static_cast<size_t>(n)][i]] = i;
        IntMatrix F(sy, sx);
        if (n < static_cast<int>(cx.basis.size()))
            for (size_t j = 0; j < sx; ++j) {
                const EZSimplex& img = f.assign.at(cx.basis[static_cast<size_t>(n)][j]);
                if (img.is_nondegenerate()) F.at(yindex.at(img.base), j) = 1;
            }
        IntMatrix KX = kernel_basis(bnd(cx, n));
        IntMatrix KY = kernel_basis(bnd(cy, n));
        Solver solx(KX), soly(KY);
        auto in_basis = [](const Solver& s, const IntMatrix& K, const std::vector<Int>& b,
                           const char* what) {
            auto z = s.solve(b);
            if (!z) throw SSetError(std::string("induced_homology_map: ") + what +
                                    " is not a cycle combination");
            z->resize(K.cols);
            return *z;
        };
        IntMatrix bx1 = bnd(cx, n + 1), by1 = bnd(cy, n + 1);
        IntMatrix RX(KX.cols, bx1.cols), RY(KY.cols, by1.cols);
        for (size_t j = 0; j < bx1.cols; ++j) {
            std::vector<Int> z = in_basis(solx, KX, column(bx1, j), "source boundary");
            for (size_t i = 0; i < KX.cols; ++i) RX.at(i, j) = z[i];
        }
        for (size_t j = 0; j < by1.cols; ++j) {
            std::vector<Int> z = in_basis(soly, KY, column(by1, j), "target boundary");
            for (size_t i = 0; i < KY.cols; ++i) RY.at(i, j) = z[i];
        }
        IntMatrix M(KY.cols, KX.cols);
        for (size_t j = 0; j < KX.cols; ++j) {
            std::vector<Int> z = in_basis(soly, KY, F.apply(column(KX, j)), "image of a cycle");
            for (size_t i = 0; i < KY.cols; ++i) M.at(i, j) = z[i];
        }
        AbelianInvariants hx = cokernel_invariants(RX, KX.cols);
        AbelianInvariants hy = cokernel_invariants(RY, KY.cols);
        // iso of finitely generated abelian groups: equal invariants and
        // surjectivity (such groups are Hopfian)
        bool iso = hx == hy && cokernel_invariants(M.hstack(RY), KY.cols).is_trivial();
        if (!iso && out.first_failure < 0) out.first_failure = n;
        out.matrices.push_back(std::move(M));
        out.source.push_back(std::move(hx));
        out.target.push_back(std::move(hy));
    }
    return out;
}

std::string InstanceReport::str() const {
    if (ok()) return "ok\n";
    std::ostringstream os;
    for (const auto& v : violations)
        os << "(" << v.tag << ") " << v.where << ": " << v.message << "\n";
    return os.str();
}

namespace {

bool same_sset(const FinSSet& A, const FinSSet& B) {
    return is_subcomplex(A, B) && is_subcomplex(B, A);
}

}  // namespace

InstanceReport check_instance(const MainTheoremInstance& inst) {
    InstanceReport rep;
    auto pre = [&](const std::string& where, const std::string& msg) {
        rep.violations.push_back({"pre", where, msg});
    };
    for (const auto& [label, obj] :
         std::vector<std::pair<std::string, const FinSSet*>>{
             {"X", &inst.X}, {"Y", &inst.Y}, {"K", &inst.K}, {"L", &inst.L}}) {
        ValidationReport r = validate(*obj);
        if (!r.ok()) pre(label, "invalid simplicial set: " + r.violations.front().message);
    }
    if (!is_subcomplex(inst.Y, inst.X)) pre("Y", "not a subcomplex of X");
    if (!is_subcomplex(inst.L, inst.K)) pre("L", "not a subcomplex of K");
    if (!same_sset(inst.order.carrier, inst.K)) pre("order", "carrier is not K");
    if (!inst.order.is_total()) pre("order", "not a total order");
    if (!validate_order(inst.order).ok()) pre("order", "not an admissible edge-increasing order");
    if (!inst.K.has(inst.v) || inst.K.at(inst.v).dim != 0) pre("v", "not a vertex of K");
    if (!rep.ok()) return rep;

    for (const auto& [label, m] : std::vector<std::pair<std::string, const SSetMap*>>{
             {"phi", &inst.phi}, {"psi", &inst.psi}, {"lift", &inst.lift}, {"H", &inst.H}}) {
        ValidationReport r = validate_map(*m);
        if (!r.ok()) pre(label, "not a simplicial map: " + r.violations.front().message);
    }
    if (!same_sset(inst.phi.source, inst.K) || !same_sset(inst.phi.target, inst.X))
        pre("phi", "expected a map K -> X");
    if (!same_sset(inst.psi.source, inst.K) || !same_sset(inst.psi.target, inst.X))
        pre("psi", "expected a map K -> X");
    if (!maps_into(restrict_map(inst.phi, inst.L), inst.Y))
        pre("phi", "does not send L into Y");
    if (!maps_into(restrict_map(inst.psi, inst.L), inst.Y))
        pre("psi", "does not send L into Y");
    Span cyl = cylinder(inst.K);
    if (!same_sset(inst.H.source, cyl.obj) || !same_sset(inst.H.target, inst.X))
        pre("H", "expected a map K x Delta^1 -> X");
    FinSSet Kv = below(inst.K, inst.order, inst.v, inst.dual ? Cmp::GT : Cmp::LT);
    if (!same_sset(inst.lift.source, Kv))
        pre("lift", inst.dual ? "source is not K_{>v}" : "source is not K_{<v}");
    if (!same_sset(inst.lift.target, inst.Y)) pre("lift", "target is not Y");
    if (!rep.ok()) return rep;

    // (a) the lift agrees with phi below v (above v in the dual case)
    for (const auto& [id, rec] : Kv.simplices) {
        (void)rec;
        if (inst.lift.assign.at(id) != inst.phi.assign.at(id))
            rep.violations.push_back({"a", id, "lift(" + id + ") = " +
                                                   inst.lift.assign.at(id).str() +
                                                   " differs from phi(" + id + ") = " +
                                                   inst.phi.assign.at(id).str()});
    }

    // (b) H restricts to phi and psi on the two ends of the cylinder
    SSetMap e0 = end_inclusion(inst.K, 0);
    SSetMap e1 = end_inclusion(inst.K, 1);
    const SSetMap& at0 = inst.dual ? inst.psi : inst.phi;
    const SSetMap& at1 = inst.dual ? inst.phi : inst.psi;
    for (const auto& [id, rec] : inst.K.simplices) {
        (void)rec;
        EZSimplex h0 = inst.H.apply(e0.assign.at(id));
        EZSimplex h1 = inst.H.apply(e1.assign.at(id));
        if (h0 != at0.assign.at(id))
            rep.violations.push_back({"b", id, "H(-, 0) = " + h0.str() + " differs from " +
                                                   at0.assign.at(id).str()});
        if (h1 != at1.assign.at(id))
            rep.violations.push_back({"b", id, "H(-, 1) = " + h1.str() + " differs from " +
                                                   at1.assign.at(id).str()});
    }

    // (c) H sends L x Delta^1 into Y
    for (const auto& [id, rec] : cyl.obj.simplices) {
        (void)rec;
        if (!inst.L.has(cyl.pr1.assign.at(id).base)) continue;
        const EZSimplex& img = inst.H.assign.at(id);
        if (!inst.Y.has(img.base))
            rep.violations.push_back({"c", id, "H(" + id + ") = " + img.str() + " leaves Y"});
    }

    // (d) psi lands in Y on K_{<=v} (K_{>=v} in the dual case)
    FinSSet Kle = below(inst.K, inst.order, inst.v, inst.dual ? Cmp::GE : Cmp::LE);
    for (const auto& [id, rec] : Kle.simplices) {
        (void)rec;
        const EZSimplex& img = inst.psi.assign.at(id);
        if (!inst.Y.has(img.base))
            rep.violations.push_back({"d", id, "psi(" + id + ") = " + img.str() + " leaves Y"});
    }
    return rep;
}

}  // namespace sset
