// Python bindings for the main operations.  Structured data crosses the
// boundary as the canonical JSON documents; small queries return native
// Python values.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sset/acyclify.hpp"
#include "sset/constructions.hpp"
#include "sset/digraph.hpp"
#include "sset/json_io.hpp"
#include "sset/ktheory.hpp"
#include "sset/verify.hpp"

namespace py = pybind11;
using namespace sset;

namespace {

Preorder make_preorder(const std::vector<std::string>& elements,
                       const std::vector<std::pair<std::string, std::string>>& leq) {
    Preorder P;
    P.elements = elements;
    for (const auto& p : leq) P.leq.insert(p);
    bool changed = true;
    while (changed) {
        changed = false;
        auto snapshot = P.leq;
        for (const auto& [a, b] : snapshot)
            for (const auto& [c, d] : snapshot)
                if (b == c && P.leq.insert({a, d}).second) changed = true;
    }
    return P;
}

std::vector<std::string> homology_strs(const FinSSet& X) {
    std::vector<std::string> out;
    for (const auto& h : homology(X)) out.push_back(h.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_sset, m) {
    m.doc() = "exact computations with finite simplicial sets";

    py::register_exception<SSetError>(m, "SSetError");
    py::register_exception<DeltaError>(m, "DeltaError");

    py::class_<FinSSet>(m, "FinSSet")
        .def_static("from_json", [](const std::string& text) {
            return sset_from_json(nlohmann::json::parse(text));
        })
        .def("to_json", [](const FinSSet& X) { return emit(X); })
        .def("size", &FinSSet::size)
        .def("dim", &FinSSet::dim)
        .def("counts", &FinSSet::counts)
        .def_readonly("name", &FinSSet::name)
        .def("__repr__", [](const FinSSet& X) {
            return "<FinSSet " + (X.name.empty() ? "?" : X.name) + ", " +
                   std::to_string(X.size()) + " cells>";
        });

    py::class_<SSetMap>(m, "SSetMap")
        .def_static("from_json", [](const std::string& text) {
            return sset_map_from_json(nlohmann::json::parse(text));
        })
        .def("to_json", [](const SSetMap& f) { return emit(f); })
        .def_readonly("source", &SSetMap::source)
        .def_readonly("target", &SSetMap::target);

    m.def("delta", &standard_simplex, py::arg("n"));
    m.def("boundary", &boundary, py::arg("n"));
    m.def("nerve", [](const std::vector<std::string>& elements,
                      const std::vector<std::pair<std::string, std::string>>& leq) {
        return nerve(make_preorder(elements, leq));
    });
    m.def("quotient", [](const FinSSet& X, const FinSSet& A) { return quotient(X, A).obj; });
    m.def("product", [](const FinSSet& X, const FinSSet& Y) { return product(X, Y).obj; });
    m.def("coproduct", [](const std::vector<FinSSet>& parts) { return coproduct(parts).obj; });
    m.def("skeleton", &skeleton);

    m.def("validate", [](const FinSSet& X) { return validate(X).str(); });
    m.def("isomorphic", &isomorphic);
    m.def("dot", [](const FinSSet& X) { return associated_graph(X).dot(); });
    m.def("is_acyclic", py::overload_cast<const FinSSet&>(&is_acyclic));
    m.def("homology", &homology_strs);
    m.def("euler_char", &euler_char);
    m.def("pi1_abelianized",
          [](const FinSSet& X, const std::string& base) {
              return pi1(X, base).abelianization().str();
          });

    m.def("acyclify", [](const FinSSet& X) {
        AcyclifyResult r = acyclify(X);
        return py::make_tuple(r.tilde, r.proj);
    });
    m.def("check_fibers", [](const SSetMap& f, int max_dim) {
        FiberReport rep = fiber_condition(f, max_dim);
        std::map<std::string, std::string> out;
        for (const auto& v : rep.fibers)
            out[v.simplex] = v.cert.verdict == Contractibility::Certified ? "certified"
                             : v.cert.verdict == Contractibility::HomologyPointOnly
                                 ? "homology-point"
                                 : "refuted";
        return out;
    });

    m.def("covering", [](const FinSSet& base, const std::string& group,
                         const std::map<std::string, std::vector<long long>>& labels) {
        EdgeCocycle z;
        z.base = base;
        z.group = parse_group(group);
        for (const auto& [e, v] : labels) z.label[e] = v;
        Covering cov = covering(z);
        return py::make_tuple(cov.total, cov.proj);
    });

    m.def("k0", [](const std::vector<std::string>& objects, const std::string& zero,
                   const std::vector<std::array<std::string, 3>>& cofiber,
                   const std::vector<std::pair<std::string, std::string>>& weq) {
        SConstructionData d;
        d.objects = objects;
        d.zero = zero;
        d.cofiber = cofiber;
        d.weq = weq;
        return k0(d).str();
    });
}
