#include "sset/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sset/acyclify.hpp"
#include "sset/constructions.hpp"
#include "sset/digraph.hpp"
#include "sset/json_io.hpp"
#include "sset/ktheory.hpp"
#include "sset/verify.hpp"

namespace sset {

namespace {

using nlohmann::json;

Preorder preorder_from_json(const json& j) {
    Preorder P;
    P.elements = j.at("elements").get<std::vector<std::string>>();
    for (const auto& pair : j.value("leq", json::array())) {
        if (!pair.is_array() || pair.size() != 2)
            throw SSetError("poset document: \"leq\" entries must be pairs");
        P.leq.insert({pair[0].get<std::string>(), pair[1].get<std::string>()});
    }
    // close transitively so hand-written relation tables are accepted
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [a, b] : std::set<std::pair<std::string, std::string>>(P.leq))
            for (const auto& [c, d] : std::set<std::pair<std::string, std::string>>(P.leq))
                if (b == c && P.leq.insert({a, d}).second) changed = true;
    }
    return P;
}

// --- build-expression grammar: delta(n) | boundary(n) | quotient(e1,e2) |
// nerve(posetfile) | prod(e1,e2) | coprod(e,...) | skel(e,d) ---
struct ExprParser {
    std::string text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw SSetError("build expression, position " + std::to_string(pos) + ": " + msg);
    }
    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    void expect(char c) {
        skip();
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    std::string ident() {
        skip();
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected a name");
        return text.substr(start, pos - start);
    }
    int number() {
        skip();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoi(text.substr(start, pos - start));
    }
    std::string filename() {
        skip();
        size_t start = pos;
        while (pos < text.size() && text[pos] != ')' && text[pos] != ',') ++pos;
        std::string f = text.substr(start, pos - start);
        while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back()))) f.pop_back();
        if (f.empty()) fail("expected a file name");
        return f;
    }

    FinSSet parse() {
        FinSSet X = expr();
        skip();
        if (pos != text.size()) fail("trailing input");
        return X;
    }

    FinSSet expr() {
        std::string head = ident();
        expect('(');
        FinSSet out;
        if (head == "delta") {
            out = standard_simplex(number());
        } else if (head == "boundary") {
            out = boundary(number());
        } else if (head == "quotient") {
            FinSSet x = expr();
            expect(',');
            FinSSet a = expr();
            out = quotient(x, a).obj;
        } else if (head == "nerve") {
            out = nerve(preorder_from_json(read_json_file(filename())));
        } else if (head == "prod") {
            FinSSet a = expr();
            expect(',');
            FinSSet b = expr();
            out = product(a, b).obj;
        } else if (head == "coprod") {
            std::vector<FinSSet> parts{expr()};
            skip();
            while (pos < text.size() && text[pos] == ',') {
                ++pos;
                parts.push_back(expr());
            }
            out = coproduct(parts).obj;
        } else if (head == "skel") {
            FinSSet a = expr();
            expect(',');
            out = skeleton(a, number());
        } else {
            fail("unknown constructor '" + head + "'");
        }
        expect(')');
        return out;
    }
};

FinAbGroup::Elem elem_from_json(const json& j, size_t arity) {
    FinAbGroup::Elem e;
    if (j.is_number_integer())
        e.push_back(j.get<long long>());
    else
        e = j.get<FinAbGroup::Elem>();
    if (e.size() != arity) throw SSetError("group element has wrong arity in input");
    return e;
}

EdgeCocycle cocycle_from_json(const json& j) {
    EdgeCocycle z;
    z.base = sset_from_json(j.at("base"));
    z.group = parse_group(j.at("group").get<std::string>());
    for (const auto& [edge, val] : j.at("labels").items())
        z.label[edge] = elem_from_json(val, z.group.factors.size());
    return z;
}

SConstructionData sdata_from_json(const json& j) {
    SConstructionData d;
    d.objects = j.at("objects").get<std::vector<std::string>>();
    d.zero = j.at("zero").get<std::string>();
    for (const auto& t : j.value("cofiber", json::array())) {
        if (!t.is_array() || t.size() != 3)
            throw SSetError("\"cofiber\" entries must be triples [A, B, C]");
        d.cofiber.push_back({t[0].get<std::string>(), t[1].get<std::string>(),
                             t[2].get<std::string>()});
    }
    for (const auto& p : j.value("weq", json::array())) {
        if (!p.is_array() || p.size() != 2)
            throw SSetError("\"weq\" entries must be pairs [A, B]");
        d.weq.push_back({p[0].get<std::string>(), p[1].get<std::string>()});
    }
    if (j.contains("T")) {
        std::set<std::string> T;
        for (const auto& o : j.at("T")) T.insert(o.get<std::string>());
        d.T = std::move(T);
    }
    return d;
}

std::map<std::string, EZSimplex> assign_from_json(const json& j, const FinSSet& source) {
    std::map<std::string, EZSimplex> assign;
    for (const auto& [id, y] : j.items()) {
        if (!source.has(id)) throw SSetError("assignment for unknown simplex " + id);
        assign[id] = ez_from_json(y, source.at(id).dim);
    }
    return assign;
}

MainTheoremInstance instance_from_json(const json& j) {
    MainTheoremInstance inst;
    inst.X = sset_from_json(j.at("X"));
    inst.Y = sset_from_json(j.at("Y"));
    inst.K = sset_from_json(j.at("K"));
    inst.L = sset_from_json(j.at("L"));
    inst.v = j.at("v").get<std::string>();
    inst.dual = j.value("dual", false);
    std::vector<std::string> order = j.at("order").get<std::vector<std::string>>();
    inst.order.carrier = inst.K;
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t k = i + 1; k < order.size(); ++k) inst.order.lt.insert({order[i], order[k]});
    auto make = [&](const char* key, const FinSSet& src, const FinSSet& tgt) {
        SSetMap f;
        f.source = src;
        f.target = tgt;
        f.assign = assign_from_json(j.at(key), src);
        return f;
    };
    inst.phi = make("phi", inst.K, inst.X);
    inst.psi = make("psi", inst.K, inst.X);
    inst.lift = make("lift", below(inst.K, inst.order, inst.v, inst.dual ? Cmp::GT : Cmp::LT),
                     inst.Y);
    inst.H = make("H", cylinder(inst.K).obj, inst.X);
    return inst;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& [g, e] : w) {
        if (!s.empty()) s += ' ';
        s += g;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

void emit_or_print(const FinSSet& X, const std::string& path, std::ostream& out) {
    if (path.empty())
        out << emit(X);
    else
        write_file(path, emit(X));
}

void print_witness(const std::vector<Edge>& trail, std::ostream& out) {
    out << "closed trail:";
    for (const auto& e : trail) out << " " << e.id;
    out << "\n";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with finite simplicial sets"};
    app.require_subcommand(1);
    int exit_code = 0;
    std::function<void()> action;

    // validate
    {
        auto* c = app.add_subcommand("validate", "check the invariants of a simplicial set file");
        auto in = std::make_shared<std::string>();
        c->add_option("input", *in, "simplicial set file")->required();
        c->callback([&, in] {
            action = [&, in] {
                ValidationReport r = validate(read_sset_file(*in));
                if (r.ok()) {
                    out << "ok\n";
                } else {
                    out << r.str();
                    exit_code = 1;
                }
            };
        });
    }
    // build
    {
        auto* c = app.add_subcommand("build", "construct a simplicial set from an expression");
        auto expr = std::make_shared<std::string>();
        auto o = std::make_shared<std::string>();
        c->add_option("expr", *expr,
                      "delta(n) | boundary(n) | quotient(e1,e2) | nerve(posetfile) | "
                      "prod(e1,e2) | coprod(e,...) | skel(e,d)")
            ->required();
        c->add_option("-o,--output", *o, "output file (stdout when omitted)");
        c->callback([&, expr, o] {
            action = [&, expr, o] {
                ExprParser p{*expr};
                emit_or_print(p.parse(), *o, out);
            };
        });
    }
    // graph
    {
        auto* c = app.add_subcommand("graph", "the associated directed graph");
        auto in = std::make_shared<std::string>();
        auto dot = std::make_shared<bool>(false);
        c->add_option("input", *in)->required();
        c->add_flag("--dot", *dot, "emit DOT instead of a summary");
        c->callback([&, in, dot] {
            action = [&, in, dot] {
                DiGraph G = associated_graph(read_sset_file(*in));
                if (*dot) {
                    out << G.dot();
                } else {
                    out << "vertices: " << G.vertices.size() << "\n";
                    out << "edges: " << G.edges.size() << "\n";
                    for (const auto& e : G.edges)
                        out << "  " << e.id << ": " << e.src << " -> " << e.dst << "\n";
                }
            };
        });
    }
    // acyclic
    {
        auto* c = app.add_subcommand("acyclic", "decide acyclicity; prints a witness if not");
        auto in = std::make_shared<std::string>();
        c->add_option("input", *in)->required();
        c->callback([&, in] {
            action = [&, in] {
                DiGraph G = associated_graph(read_sset_file(*in));
                if (auto trail = find_closed_trail(G)) {
                    print_witness(*trail, out);
                    exit_code = 1;
                } else {
                    out << "acyclic\n";
                }
            };
        });
    }
    // order
    {
        auto* c = app.add_subcommand("order", "the minimum vertex order of an acyclic input");
        auto in = std::make_shared<std::string>();
        auto total = std::make_shared<bool>(false);
        c->add_option("input", *in)->required();
        c->add_flag("--total", *total, "refine to a total order and print it as a list");
        c->callback([&, in, total] {
            action = [&, in, total] {
                FinSSet X = read_sset_file(*in);
                try {
                    VertexOrder o = min_order(X);
                    if (*total) {
                        o = refine_to_total(o);
                        // recover the linear sequence from the pair set
                        std::vector<std::string> vs;
                        for (const auto& [id, rec] : X.simplices)
                            if (rec.dim == 0) vs.push_back(id);
                        std::sort(vs.begin(), vs.end(), [&](const auto& a, const auto& b) {
                            return o.less(a, b);
                        });
                        for (size_t i = 0; i < vs.size(); ++i)
                            out << (i ? " < " : "") << vs[i];
                        out << "\n";
                    } else {
                        for (const auto& [a, b] : o.lt) out << a << " < " << b << "\n";
                    }
                } catch (const NotAcyclicError& e) {
                    print_witness(e.witness, out);
                    exit_code = 1;
                }
            };
        });
    }
    // acyclify
    {
        auto* c = app.add_subcommand("acyclify", "acyclic replacement with contractible fibers");
        auto in = std::make_shared<std::string>();
        auto o = std::make_shared<std::string>();
        auto mapf = std::make_shared<std::string>();
        auto tracef = std::make_shared<std::string>();
        auto check = std::make_shared<bool>(false);
        auto deep = std::make_shared<bool>(false);
        c->add_option("input", *in)->required();
        c->add_option("-o,--output", *o, "output file for the acyclic total object");
        c->add_option("--map", *mapf, "output file for the projection");
        c->add_option("--trace", *tracef, "output file for the step trace (JSON)");
        c->add_flag("--check", *check, "re-verify the result");
        c->add_flag("--deep-check", *deep, "re-verify including degenerate/base-change spot checks");
        c->callback([&, in, o, mapf, tracef, check, deep] {
            action = [&, in, o, mapf, tracef, check, deep] {
                FinSSet X = read_sset_file(*in);
                AcyclifyResult r = acyclify(X);
                emit_or_print(r.tilde, *o, out);
                if (!mapf->empty()) write_file(*mapf, emit(r.proj));
                if (!tracef->empty()) {
                    json arr = json::array();
                    for (const auto& s : r.trace)
                        arr.push_back(json{{"simplex", s.simplex},
                                           {"fiber_counts", s.fiber_counts},
                                           {"total_counts", s.total_counts}});
                    write_file(*tracef, arr.dump(2) + "\n");
                }
                if (*check || *deep) {
                    AcyclifyCheck rep = check_result(X, r, *deep);
                    if (rep.ok()) {
                        out << "check: ok (" << rep.fibers.certified << " fibers certified, "
                            << rep.fibers.homology_point_only << " homology-point-only)\n";
                    } else {
                        if (!rep.acyclic) out << "check: total object is not acyclic\n";
                        if (!rep.map_valid) out << "check: projection is not a valid map\n";
                        for (const auto& f : rep.fibers.fibers)
                            if (f.cert.verdict == Contractibility::Refuted)
                                out << "check: fiber over " << f.simplex << ": "
                                    << f.cert.reason << "\n";
                        for (const auto& m : rep.deep_failures) out << "check: " << m << "\n";
                        exit_code = 1;
                    }
                }
            };
        });
    }
    // homology
    {
        auto* c = app.add_subcommand("homology", "integral simplicial homology");
        auto in = std::make_shared<std::string>();
        c->add_option("input", *in)->required();
        c->callback([&, in] {
            action = [&, in] {
                std::vector<AbelianInvariants> H = homology(read_sset_file(*in));
                for (size_t n = 0; n < H.size(); ++n)
                    out << "H_" << n << " = " << H[n].str() << "\n";
            };
        });
    }
    // pi1
    {
        auto* c = app.add_subcommand("pi1", "edge-path fundamental group presentation");
        auto in = std::make_shared<std::string>();
        auto base = std::make_shared<std::string>();
        auto raw = std::make_shared<bool>(false);
        c->add_option("input", *in)->required();
        c->add_option("--base", *base, "base vertex")->required();
        c->add_flag("--raw", *raw, "skip simplification");
        c->callback([&, in, base, raw] {
            action = [&, in, base, raw] {
                GroupPresentation p = pi1(read_sset_file(*in), *base);
                if (!*raw) p = tietze_simplify(p);
                out << "generators:";
                for (const auto& g : p.generators) out << " " << g;
                out << "\nrelators:\n";
                for (const auto& r : p.relators) out << "  " << word_str(r) << "\n";
                out << "abelianization: " << p.abelianization().str() << "\n";
            };
        });
    }
    // check-fibers
    {
        auto* c = app.add_subcommand("check-fibers", "contractibility certificates for fibers");
        auto mapf = std::make_shared<std::string>();
        auto maxdim = std::make_shared<int>(2);
        c->add_option("--map", *mapf, "map file")->required();
        c->add_option("--max-dim", *maxdim, "largest base simplex dimension");
        c->callback([&, mapf, maxdim] {
            action = [&, mapf, maxdim] {
                FiberReport rep = fiber_condition(read_map_file(*mapf), *maxdim);
                for (const auto& f : rep.fibers) {
                    const char* verdict =
                        f.cert.verdict == Contractibility::Certified ? "certified"
                        : f.cert.verdict == Contractibility::HomologyPointOnly
                            ? "homology-point"
                            : "refuted";
                    out << f.simplex << ": " << verdict << " (" << f.cert.reason << ")\n";
                }
                if (!rep.ok()) exit_code = 1;
            };
        });
    }
    // check-instance
    {
        auto* c = app.add_subcommand("check-instance", "verify lifting/homotopy witness data");
        auto in = std::make_shared<std::string>();
        auto dual = std::make_shared<bool>(false);
        c->add_option("input", *in, "instance file (JSON)")->required();
        c->add_flag("--dual", *dual, "check the dual form");
        c->callback([&, in, dual] {
            action = [&, in, dual] {
                MainTheoremInstance inst = instance_from_json(read_json_file(*in));
                if (*dual) inst.dual = true;
                InstanceReport rep = check_instance(inst);
                out << rep.str();
                if (!rep.ok()) exit_code = 1;
            };
        });
    }
    // product / pushout / pullback / quotient
    {
        auto* c = app.add_subcommand("product", "binary product");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto o = std::make_shared<std::string>();
        c->add_option("left", *a)->required();
        c->add_option("right", *b)->required();
        c->add_option("-o,--output", *o);
        c->callback([&, a, b, o] {
            action = [&, a, b, o] {
                emit_or_print(product(read_sset_file(*a), read_sset_file(*b)).obj, *o, out);
            };
        });
    }
    {
        auto* c = app.add_subcommand("pushout", "pushout of B <- A -> C from two map files");
        auto f = std::make_shared<std::string>();
        auto g = std::make_shared<std::string>();
        auto o = std::make_shared<std::string>();
        c->add_option("f", *f, "map A -> B")->required();
        c->add_option("g", *g, "map A -> C")->required();
        c->add_option("-o,--output", *o);
        c->callback([&, f, g, o] {
            action = [&, f, g, o] {
                emit_or_print(pushout(read_map_file(*f), read_map_file(*g)).obj, *o, out);
            };
        });
    }
    {
        auto* c = app.add_subcommand("pullback", "pullback of X -> Z <- Y from two map files");
        auto f = std::make_shared<std::string>();
        auto g = std::make_shared<std::string>();
        auto o = std::make_shared<std::string>();
        c->add_option("f", *f, "map X -> Z")->required();
        c->add_option("g", *g, "map Y -> Z")->required();
        c->add_option("-o,--output", *o);
        c->callback([&, f, g, o] {
            action = [&, f, g, o] {
                emit_or_print(pullback(read_map_file(*f), read_map_file(*g)).obj, *o, out);
            };
        });
    }
    {
        auto* c = app.add_subcommand("quotient", "X/A for a subcomplex A of X");
        auto x = std::make_shared<std::string>();
        auto a = std::make_shared<std::string>();
        auto o = std::make_shared<std::string>();
        c->add_option("X", *x)->required();
        c->add_option("A", *a)->required();
        c->add_option("-o,--output", *o);
        c->callback([&, x, a, o] {
            action = [&, x, a, o] {
                emit_or_print(quotient(read_sset_file(*x), read_sset_file(*a)).obj, *o, out);
            };
        });
    }
    // nerve
    {
        auto* c = app.add_subcommand("nerve", "nerve of a poset file");
        auto in = std::make_shared<std::string>();
        auto o = std::make_shared<std::string>();
        auto trunc = std::make_shared<int>(-1);
        c->add_option("input", *in, "poset file (JSON)")->required();
        c->add_option("-o,--output", *o);
        c->add_option("-d,--truncate", *trunc, "truncate to dimensions <= d (preorders allowed)");
        c->callback([&, in, o, trunc] {
            action = [&, in, o, trunc] {
                Preorder P = preorder_from_json(read_json_file(*in));
                emit_or_print(*trunc >= 0 ? nerve_truncated(P, *trunc) : nerve(P), *o, out);
            };
        });
    }
    // cover
    {
        auto* c = app.add_subcommand("cover", "covering space classified by an edge cocycle");
        auto in = std::make_shared<std::string>();
        auto o = std::make_shared<std::string>();
        auto mapf = std::make_shared<std::string>();
        c->add_option("input", *in, "cocycle file (JSON)")->required();
        c->add_option("-o,--output", *o);
        c->add_option("--map", *mapf, "output file for the covering projection");
        c->callback([&, in, o, mapf] {
            action = [&, in, o, mapf] {
                json j = read_json_file(*in);
                EdgeCocycle z = cocycle_from_json(j);
                std::optional<std::vector<FinAbGroup::Elem>> gens;
                if (j.contains("subgroup")) {
                    gens.emplace();
                    for (const auto& g : j.at("subgroup"))
                        gens->push_back(elem_from_json(g, z.group.factors.size()));
                }
                std::optional<std::set<std::string>> subset;
                if (j.contains("restrict")) {
                    subset.emplace();
                    for (const auto& s : j.at("restrict")) subset->insert(s.get<std::string>());
                }
                Covering cov = covering(z, gens, subset);
                emit_or_print(cov.total, *o, out);
                if (!mapf->empty()) write_file(*mapf, emit(cov.proj));
            };
        });
    }
    // sdot / k0
    {
        auto* c = app.add_subcommand("sdot", "2-truncated s-dot object of tabulated data");
        auto in = std::make_shared<std::string>();
        auto o = std::make_shared<std::string>();
        auto restrict_T = std::make_shared<bool>(false);
        c->add_option("input", *in, "data file (JSON)")->required();
        c->add_option("-o,--output", *o);
        c->add_flag("--restrict-T", *restrict_T, "keep only simplices with entries in T");
        c->callback([&, in, o, restrict_T] {
            action = [&, in, o, restrict_T] {
                emit_or_print(s_dot(sdata_from_json(read_json_file(*in)), *restrict_T), *o, out);
            };
        });
    }
    {
        auto* c = app.add_subcommand("k0", "K_0 of tabulated cofibration/weq data");
        auto in = std::make_shared<std::string>();
        c->add_option("input", *in, "data file (JSON)")->required();
        c->callback([&, in] {
            action = [&, in] { out << k0(sdata_from_json(read_json_file(*in))).str() << "\n"; };
        });
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    try {
        action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace sset
