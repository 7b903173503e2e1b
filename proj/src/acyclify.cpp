#include "sset/acyclify.hpp"

#include <algorithm>

#include "sset/digraph.hpp"

namespace sset {

AcyclifyResult acyclify(const FinSSet& X) {
    ValidationReport vr = validate(X);
    if (!vr.ok()) throw SSetError("acyclify: invalid input: " + vr.violations.front().message);
    AcyclifyResult res;
    if (X.size() == 0) {
        res.tilde.name = X.name + "~";
        res.proj.source = res.tilde;
        res.proj.target = X;
        return res;
    }

    // start from one standard simplex per non-degenerate simplex of X
    std::vector<std::string> ids = X.ordered_ids();
    std::vector<FinSSet> parts;
    std::vector<SSetMap> components;
    for (const auto& id : ids) {
        parts.push_back(standard_simplex(X.at(id).dim));
        components.push_back(classifying_map(X, X.nd(id)));
    }
    Coproduct co = coproduct(parts, ids);
    FinSSet K = co.obj;
    SSetMap pi = coproduct_map(co, components);

    // glue in the cylinder of each fiber, top dimension first
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) {
        const std::string& id = *it;
        Span F = fiber_over(pi, X.nd(id));
        MappingCylinder mc = mapping_cylinder(F.pr2);
        Pushout po = pushout(F.pr1, mc.include_source);
        SSetMap hc = compose(classifying_map(X, X.nd(id)), mc.collapse);
        pi = induced_from_pushout(po, pi, hc);
        K = po.obj;
        res.trace.push_back(AcyclifyStep{id, F.obj.counts(), K.counts()});
    }

    K.name = X.name + "~";
    res.tilde = K;
    res.proj = pi;
    res.proj.source = res.tilde;
    return res;
}

AcyclifyCheck check_result(const FinSSet& X, const AcyclifyResult& r, bool deep) {
    AcyclifyCheck c;
    c.acyclic = is_acyclic(r.tilde);
    c.map_valid = validate_map(r.proj).ok() && is_subcomplex(r.proj.target, X) &&
                  is_subcomplex(X, r.proj.target);
    if (!c.map_valid) return c;  // fibers are only meaningful along a valid map
    c.fibers = fiber_condition(r.proj, X.size() ? X.dim() : 0);
    if (!deep) return c;

    auto check_fiber = [&](const EZSimplex& a, const std::string& what) {
        ContractibilityCertificate cert = contractibility_certificate(fiber_over(r.proj, a).obj);
        if (cert.verdict == Contractibility::Refuted)
            c.deep_failures.push_back("fiber over " + what + ": " + cert.reason);
    };
    for (const auto& id : X.ordered_ids()) {
        int n = X.at(id).dim;
        if (n <= 2)
            for (int i = 0; i <= n; ++i) {
                MonotoneMap s = degeneracy_map(i, n);
                check_fiber(EZSimplex{s, id}, s.str() + "@" + id);
            }
        if (n <= 1) {
            MonotoneMap s2 = compose(degeneracy_map(0, n), degeneracy_map(0, n + 1));
            check_fiber(EZSimplex{s2, id}, s2.str() + "@" + id);
        }
    }
    // base change along the classifying map of each small simplex: the
    // pulled-back projection must be a homology equivalence
    for (const auto& id : X.ordered_ids()) {
        if (X.at(id).dim > 2) continue;
        Span F = fiber_over(r.proj, X.nd(id));
        InducedHomology h = induced_homology_map(F.pr2);
        if (!h.iso())
            c.deep_failures.push_back("base change over " + id +
                                      ": not a homology isomorphism in degree " +
                                      std::to_string(h.first_failure));
    }
    return c;
}

}  // namespace sset
