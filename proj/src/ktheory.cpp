#include "sset/ktheory.hpp"

#include <algorithm>
#include <sstream>

#include "sset/constructions.hpp"

namespace sset {

FinAbGroup::Elem FinAbGroup::reduce(Elem e) const {
    if (e.size() != factors.size()) throw SSetError("group element has wrong arity");
    for (size_t i = 0; i < factors.size(); ++i)
        if (factors[i] > 0) e[i] = ((e[i] % factors[i]) + factors[i]) % factors[i];
    return e;
}

FinAbGroup::Elem FinAbGroup::add(const Elem& a, const Elem& b) const {
    Elem c = a;
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.at(i);
    return reduce(c);
}

FinAbGroup::Elem FinAbGroup::neg(const Elem& a) const {
    Elem c = a;
    for (auto& x : c) x = -x;
    return reduce(c);
}

bool FinAbGroup::is_finite() const {
    return std::all_of(factors.begin(), factors.end(), [](long long k) { return k > 0; });
}

std::vector<FinAbGroup::Elem> FinAbGroup::elements() const {
    if (!is_finite()) throw SSetError("cannot enumerate an infinite group " + str());
    std::vector<Elem> out{zero()};
    for (size_t i = 0; i < factors.size(); ++i) {
        std::vector<Elem> next;
        for (const Elem& e : out)
            for (long long v = 0; v < factors[i]; ++v) {
                Elem f = e;
                f[i] = v;
                next.push_back(std::move(f));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FinAbGroup::Elem> FinAbGroup::span(const std::vector<Elem>& gens) const {
    std::set<Elem> seen{zero()};
    std::vector<Elem> work{zero()};
    const size_t cap = 100000;
    while (!work.empty()) {
        Elem e = work.back();
        work.pop_back();
        for (const Elem& g : gens)
            for (const Elem& n : {add(e, g), add(e, neg(g))})
                if (seen.insert(n).second) {
                    if (seen.size() > cap) throw SSetError("subgroup closure is not finite");
                    work.push_back(n);
                }
    }
    return {seen.begin(), seen.end()};
}

std::string FinAbGroup::str(const Elem& e) const {
    if (e.empty()) return "0";
    if (e.size() == 1) return std::to_string(e[0]);
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    return s + ")";
}

std::string FinAbGroup::str() const {
    if (factors.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += factors[i] == 0 ? "Z" : "Z/" + std::to_string(factors[i]);
    }
    return s;
}

FinAbGroup parse_group(const std::string& text) {
    FinAbGroup G;
    std::string token;
    auto flush = [&]() {
        size_t a = token.find_first_not_of(" \t");
        if (a == std::string::npos) throw SSetError("parse_group: empty factor in " + text);
        size_t b = token.find_last_not_of(" \t");
        std::string t = token.substr(a, b - a + 1);
        token.clear();
        if (t == "0") return;  // trivial factor
        if (t == "Z") {
            G.factors.push_back(0);
            return;
        }
        if (t.rfind("Z/", 0) == 0) {
            long long k = std::stoll(t.substr(2));
            if (k < 2) throw SSetError("parse_group: modulus must be >= 2 in " + text);
            G.factors.push_back(k);
            return;
        }
        throw SSetError("parse_group: cannot parse factor '" + t + "'");
    };
    for (char c : text) {
        if (c == 'x' && token.find('Z') != std::string::npos) {
            flush();
        } else {
            token += c;
        }
    }
    if (token.find_first_not_of(" \t") != std::string::npos || G.factors.empty()) flush();
    return G;
}

FinAbGroup::Elem EdgeCocycle::label_of(const EZSimplex& edge) const {
    if (!edge.is_nondegenerate()) return group.zero();
    auto it = label.find(edge.base);
    if (it == label.end()) throw SSetError("cocycle: unlabelled edge " + edge.base);
    return it->second;
}

ValidationReport validate_cocycle(const EdgeCocycle& z) {
    ValidationReport rep;
    for (const auto& e : z.base.nondeg(1)) {
        auto it = z.label.find(e);
        if (it == z.label.end())
            rep.violations.push_back({e, "edge " + e + " has no label"});
        else if (it->second.size() != z.group.factors.size())
            rep.violations.push_back({e, "label of " + e + " has the wrong arity"});
    }
    if (!rep.ok()) return rep;
    for (const auto& t : z.base.nondeg(2)) {
        const SimplexRecord& rec = z.base.at(t);
        FinAbGroup::Elem lhs = z.label_of(rec.faces[1]);
        FinAbGroup::Elem rhs = z.group.add(z.label_of(rec.faces[2]), z.label_of(rec.faces[0]));
        if (lhs != rhs)
            rep.violations.push_back(
                {t, "cocycle condition fails on " + t + ": " + z.group.str(lhs) +
                        " != " + z.group.str(rhs)});
    }
    return rep;
}

Covering covering(const EdgeCocycle& z,
                  const std::optional<std::vector<FinAbGroup::Elem>>& subgroup_gens,
                  const std::optional<std::set<std::string>>& base_subset) {
    ValidationReport vr = validate_cocycle(z);
    if (!vr.ok()) throw SSetError("covering: " + vr.violations.front().message);
    std::vector<FinAbGroup::Elem> fiber =
        subgroup_gens ? z.group.span(*subgroup_gens) : z.group.elements();
    auto pair_id = [&](const std::string& x, const FinAbGroup::Elem& g) {
        return x + "@" + z.group.str(g);
    };

    // the 0-th face of (x, g) shifts g by the label of the leading edge of x
    auto shift = [&](const std::string& x) {
        int n = z.base.at(x).dim;
        EZSimplex lead = apply_operator(z.base, z.base.nd(x), vertex_map({0, 1}, n));
        return z.label_of(lead);
    };

    std::set<FinAbGroup::Elem> fiber_set(fiber.begin(), fiber.end());
    std::set<std::pair<std::string, FinAbGroup::Elem>> live;
    for (const auto& [x, rec] : z.base.simplices) {
        (void)rec;
        if (base_subset && !base_subset->count(x)) continue;
        for (const auto& g : fiber) live.insert({x, g});
    }
    // prune until face-closed: a pair may only reference pairs that exist
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = live.begin(); it != live.end();) {
            const auto& [x, g] = *it;
            const SimplexRecord& rec = z.base.at(x);
            bool ok = true;
            for (int i = 0; rec.dim > 0 && i <= rec.dim && ok; ++i) {
                const EZSimplex& f = rec.faces[static_cast<size_t>(i)];
                FinAbGroup::Elem h = i == 0 ? z.group.add(g, shift(x)) : g;
                if (!live.count({f.base, h}) || !fiber_set.count(h)) ok = false;
            }
            if (!ok) {
                it = live.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }

    Covering cov;
    cov.total.name = z.base.name.empty() ? "covering" : z.base.name + "~";
    for (const auto& [x, g] : live) {
        const SimplexRecord& base_rec = z.base.at(x);
        SimplexRecord rec;
        rec.dim = base_rec.dim;
        for (int i = 0; i <= base_rec.dim && base_rec.dim > 0; ++i) {
            const EZSimplex& f = base_rec.faces[static_cast<size_t>(i)];
            FinAbGroup::Elem h = i == 0 ? z.group.add(g, shift(x)) : g;
            rec.faces.push_back(EZSimplex{f.op, pair_id(f.base, h)});
        }
        cov.total.simplices[pair_id(x, g)] = std::move(rec);
    }
    cov.proj.source = cov.total;
    cov.proj.target = z.base;
    for (const auto& [x, g] : live)
        cov.proj.assign[pair_id(x, g)] = z.base.nd(x);
    return cov;
}

void SConstructionData::validate() const {
    std::set<std::string> obj(objects.begin(), objects.end());
    if (obj.size() != objects.size()) throw SSetError("s_dot data: duplicate object");
    if (!obj.count(zero)) throw SSetError("s_dot data: zero object is not declared");
    for (const auto& t : cofiber)
        for (const auto& o : t)
            if (!obj.count(o)) throw SSetError("s_dot data: unknown object " + o + " in a cofiber triple");
    for (const auto& [a, b] : weq)
        if (!obj.count(a) || !obj.count(b))
            throw SSetError("s_dot data: unknown object in a weak equivalence");
    if (T)
        for (const auto& o : *T)
            if (!obj.count(o)) throw SSetError("s_dot data: unknown object " + o + " in T");
}

FinSSet s_dot(const SConstructionData& data, bool restrict_T) {
    data.validate();
    auto allowed = [&](const std::string& o) {
        return o == data.zero || !restrict_T || !data.T || data.T->count(o) != 0;
    };
    FinSSet X;
    X.name = "s_dot";
    X.simplices["0"] = SimplexRecord{0, {}};
    auto edge_ez = [&](const std::string& o) {
        if (o == data.zero) return EZSimplex{MonotoneMap(0, {0, 0}), "0"};
        return EZSimplex{identity_map(1), "e:" + o};
    };
    for (const auto& o : data.objects) {
        if (o == data.zero || !allowed(o)) continue;
        X.simplices["e:" + o] =
            SimplexRecord{1, {EZSimplex{identity_map(0), "0"}, EZSimplex{identity_map(0), "0"}}};
    }
    for (const auto& [a, b, c] : data.cofiber) {
        if (!allowed(a) || !allowed(b) || !allowed(c)) continue;
        X.simplices["c:" + a + "|" + b + "|" + c] =
            SimplexRecord{2, {edge_ez(c), edge_ez(b), edge_ez(a)}};
    }
    for (const auto& [a, b] : data.weq) {
        if (!allowed(a) || !allowed(b)) continue;
        X.simplices["w:" + a + "|" + b] =
            SimplexRecord{2, {EZSimplex{MonotoneMap(0, {0, 0}), "0"}, edge_ez(b), edge_ez(a)}};
    }
    return X;
}

AbelianInvariants k0(const SConstructionData& data) {
    data.validate();
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < data.objects.size(); ++i) index[data.objects[i]] = i;
    size_t cols = data.cofiber.size() + data.weq.size() + 1;
    IntMatrix rel(data.objects.size(), cols);
    size_t j = 0;
    for (const auto& [a, b, c] : data.cofiber) {
        rel.at(index.at(b), j) += 1;
        rel.at(index.at(a), j) -= 1;
        rel.at(index.at(c), j) -= 1;
        ++j;
    }
    for (const auto& [a, b] : data.weq) {
        rel.at(index.at(a), j) += 1;
        rel.at(index.at(b), j) -= 1;
        ++j;
    }
    rel.at(index.at(data.zero), j) = 1;
    return cokernel_invariants(rel, data.objects.size());
}

namespace {

std::string pair_obj(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

SConstructionData bifiltered_base(int bound) {
    SConstructionData d;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; a + b <= bound; ++b) d.objects.push_back(pair_obj(a, b));
    d.zero = pair_obj(0, 0);
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; a + b <= bound; ++b)
            for (int c = 0; a + b + c <= bound; ++c)
                for (int e = 0; a + b + c + e <= bound; ++e)
                    d.cofiber.push_back({pair_obj(a, b), pair_obj(a + c, b + e), pair_obj(c, e)});
    return d;
}

}  // namespace

SConstructionData bifiltered_with_total_weqs(int bound) {
    SConstructionData d = bifiltered_base(bound);
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; a + b <= bound; ++b)
            if (b != 0) d.weq.push_back({pair_obj(a, b), pair_obj(a + b, 0)});
    return d;
}

SConstructionData bifiltered_with_componentwise_weqs(int bound) {
    return bifiltered_base(bound);  // only identities are componentwise
}

}  // namespace sset
