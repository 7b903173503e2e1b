#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "sset/cli.hpp"
#include "sset/constructions.hpp"
#include "sset/json_io.hpp"
#include "sset/verify.hpp"

using namespace sset;
using nlohmann::json;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = run_cli(std::move(args), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Files created by a test case, removed on scope exit.
struct TempFiles {
    std::vector<std::string> paths;
    ~TempFiles() {
        for (const auto& p : paths) std::remove(p.c_str());
    }
    const std::string& put(const std::string& path, const std::string& contents) {
        write_file(path, contents);
        paths.push_back(path);
        return paths.back();
    }
};

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("argument errors exit with code 2") {
    CHECK(run({"no-such-verb"}).code == 2);
    CHECK(run({"validate"}).code == 2);  // missing required input
    CHECK(run({}).code == 2);
    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "Usage"));
}

TEST_CASE("validate") {
    TempFiles tmp;
    tmp.put("cli_ok.json", emit(standard_simplex(2)));
    RunResult ok = run({"validate", "cli_ok.json"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "ok\n");

    FinSSet broken = standard_simplex(2);
    broken.simplices[broken.nondeg(2).front()].faces.pop_back();
    tmp.put("cli_bad.json", emit(broken));
    RunResult bad = run({"validate", "cli_bad.json"});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "expected 3 faces"));

    CHECK(run({"validate", "cli_missing.json"}).code == 2);
}

TEST_CASE("build evaluates the expression grammar") {
    RunResult d2 = run({"build", "delta(2)"});
    CHECK(d2.code == 0);
    CHECK(d2.out == emit(standard_simplex(2)));

    RunResult loop = run({"build", "quotient(delta(1), boundary(1))"});
    CHECK(loop.code == 0);
    CHECK(sset_from_json(json::parse(loop.out)).counts() == std::vector<int>{1, 1});

    RunResult prod = run({"build", "prod(delta(1), delta(1))"});
    CHECK(sset_from_json(json::parse(prod.out)).counts() == std::vector<int>{4, 5, 2});

    RunResult co = run({"build", "coprod(delta(0), delta(0), delta(1))"});
    CHECK(sset_from_json(json::parse(co.out)).counts() == std::vector<int>{4, 1});

    RunResult sk = run({"build", "skel(delta(3), 1)"});
    CHECK(sset_from_json(json::parse(sk.out)).counts() == std::vector<int>{4, 6});

    TempFiles tmp;
    tmp.put("cli_poset.json", R"({"elements": ["a", "b"], "leq": [["a", "b"]]})");
    RunResult nv = run({"build", "nerve(cli_poset.json)"});
    CHECK(nv.code == 0);
    CHECK(sset_from_json(json::parse(nv.out)).counts() == std::vector<int>{2, 1});

    CHECK(run({"build", "frobnicate(3)"}).code == 2);
    CHECK(run({"build", "delta(2"}).code == 2);

    tmp.paths.push_back("cli_built.json");
    RunResult written = run({"build", "boundary(2)", "-o", "cli_built.json"});
    CHECK(written.code == 0);
    CHECK(written.out.empty());
    CHECK(emit(read_sset_file("cli_built.json")) == emit(boundary(2)));
}

TEST_CASE("graph summaries and DOT export") {
    TempFiles tmp;
    tmp.put("cli_d2.json", emit(standard_simplex(2)));
    RunResult sum = run({"graph", "cli_d2.json"});
    CHECK(sum.code == 0);
    CHECK(contains(sum.out, "vertices: 3"));
    CHECK(contains(sum.out, "edges: 3"));
    CHECK(contains(sum.out, "0,1: 0 -> 1"));

    RunResult dot = run({"graph", "cli_d2.json", "--dot"});
    CHECK(dot.code == 0);
    CHECK(contains(dot.out, "digraph"));
}

TEST_CASE("acyclic verdicts carry witnesses and exit codes") {
    TempFiles tmp;
    tmp.put("cli_d1.json", emit(standard_simplex(1)));
    RunResult yes = run({"acyclic", "cli_d1.json"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "acyclic\n");

    tmp.put("cli_loop.json", emit(quotient(standard_simplex(1), boundary(1)).obj));
    RunResult no = run({"acyclic", "cli_loop.json"});
    CHECK(no.code == 1);
    CHECK(contains(no.out, "closed trail: B:0,1"));
}

TEST_CASE("order prints the minimum order or a witness") {
    TempFiles tmp;
    tmp.put("cli_d2.json", emit(standard_simplex(2)));
    RunResult total = run({"order", "cli_d2.json", "--total"});
    CHECK(total.code == 0);
    CHECK(total.out == "0 < 1 < 2\n");
    RunResult pairs = run({"order", "cli_d2.json"});
    CHECK(contains(pairs.out, "0 < 2"));

    tmp.put("cli_loop.json", emit(quotient(standard_simplex(1), boundary(1)).obj));
    RunResult no = run({"order", "cli_loop.json"});
    CHECK(no.code == 1);
    CHECK(contains(no.out, "closed trail"));
}

TEST_CASE("acyclify with artifacts and self-check") {
    TempFiles tmp;
    tmp.put("cli_d0.json", emit(standard_simplex(0)));
    tmp.paths.push_back("cli_tilde.json");
    tmp.paths.push_back("cli_proj.json");
    tmp.paths.push_back("cli_trace.json");
    RunResult r = run({"acyclify", "cli_d0.json", "-o", "cli_tilde.json", "--map",
                       "cli_proj.json", "--trace", "cli_trace.json", "--check"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "check: ok (1 fibers certified"));
    CHECK(isomorphic(read_sset_file("cli_tilde.json"), standard_simplex(1)));
    CHECK(validate_map(read_map_file("cli_proj.json")).ok());
}

TEST_CASE("acyclify trace is well-formed") {
    TempFiles tmp;
    tmp.put("cli_b1.json", emit(boundary(1)));
    tmp.paths.push_back("cli_trace.json");
    RunResult r = run({"acyclify", "cli_b1.json", "--trace", "cli_trace.json"});
    CHECK(r.code == 0);
    json trace = read_json_file("cli_trace.json");
    REQUIRE(trace.is_array());
    CHECK(trace.size() == 2);
    CHECK(trace[0].contains("simplex"));
    CHECK(trace[0].contains("fiber_counts"));
    CHECK(trace[0].contains("total_counts"));
}

TEST_CASE("homology and pi1 output") {
    TempFiles tmp;
    tmp.put("cli_loop.json", emit(quotient(standard_simplex(1), boundary(1)).obj));
    RunResult h = run({"homology", "cli_loop.json"});
    CHECK(h.code == 0);
    CHECK(h.out == "H_0 = Z\nH_1 = Z\n");

    RunResult p = run({"pi1", "cli_loop.json", "--base", "B:0"});
    CHECK(p.code == 0);
    CHECK(contains(p.out, "abelianization: Z"));

    RunResult raw = run({"pi1", "cli_loop.json", "--base", "B:0", "--raw"});
    CHECK(raw.code == 0);
    CHECK(contains(raw.out, "generators: B:0,1"));

    CHECK(run({"pi1", "cli_loop.json", "--base", "nope"}).code == 2);
}

TEST_CASE("check-fibers verdict lines and exit codes") {
    TempFiles tmp;
    FinSSet d0 = standard_simplex(0);
    tmp.put("cli_col.json", emit(constant_map(standard_simplex(1), d0, "0")));
    RunResult ok = run({"check-fibers", "--map", "cli_col.json", "--max-dim", "0"});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "0: certified"));

    tmp.put("cli_colb.json", emit(constant_map(boundary(2), d0, "0")));
    RunResult bad = run({"check-fibers", "--map", "cli_colb.json", "--max-dim", "0"});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "refuted"));
}

TEST_CASE("check-instance reads the witness document") {
    // The passing package on the nerve of {0 < 1}: phi = id, psi = constant
    // at the top vertex, H the max homotopy, v the bottom vertex.
    Preorder P;
    P.elements = {"0", "1"};
    P.leq = {{"0", "0"}, {"1", "1"}, {"0", "1"}};
    FinSSet N = nerve(P);
    Span cyl = cylinder(N);
    std::map<std::string, std::string> hv;
    for (const auto& v : cyl.obj.nondeg(0)) {
        const std::string a = cyl.pr1.assign.at(v).base;
        const std::string t = cyl.pr2.assign.at(v).base;
        hv[v] = (a == "1" || t == "1") ? "1" : "0";
    }
    SSetMap H = map_into_nerve(cyl.obj, N, hv);
    auto assign_json = [](const SSetMap& f) {
        json a = json::object();
        for (const auto& [id, y] : f.assign) a[id] = to_json(y);
        return a;
    };
    json doc{{"X", to_json(N)},
             {"Y", to_json(full_subcomplex(N, {"1"}))},
             {"K", to_json(N)},
             {"L", to_json(full_subcomplex(N, {"1"}))},
             {"order", json::array({"0", "1"})},
             {"v", "0"},
             {"phi", assign_json(identity_sset_map(N))},
             {"psi", assign_json(constant_map(N, N, "1"))},
             {"lift", json::object()},
             {"H", assign_json(H)}};
    TempFiles tmp;
    tmp.put("cli_inst.json", doc.dump(2) + "\n");
    RunResult ok = run({"check-instance", "cli_inst.json"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "ok\n");

    // Mutate psi so the homotopy end no longer matches.
    doc["psi"] = assign_json(identity_sset_map(N));
    tmp.put("cli_inst_bad.json", doc.dump(2) + "\n");
    RunResult bad = run({"check-instance", "cli_inst_bad.json"});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "(b)"));
}

TEST_CASE("product, pushout, pullback, quotient verbs") {
    TempFiles tmp;
    tmp.put("cli_d1.json", emit(standard_simplex(1)));
    tmp.put("cli_b1.json", emit(boundary(1)));

    RunResult prod = run({"product", "cli_d1.json", "cli_d1.json"});
    CHECK(prod.code == 0);
    CHECK(sset_from_json(json::parse(prod.out)).counts() == std::vector<int>{4, 5, 2});

    tmp.put("cli_inc.json", emit(inclusion_map(boundary(1), standard_simplex(1))));
    RunResult po = run({"pushout", "cli_inc.json", "cli_inc.json"});
    CHECK(po.code == 0);
    CHECK(sset_from_json(json::parse(po.out)).counts() == std::vector<int>{2, 2});

    tmp.put("cli_id1.json", emit(identity_sset_map(standard_simplex(1))));
    RunResult pb = run({"pullback", "cli_id1.json", "cli_id1.json"});
    CHECK(pb.code == 0);
    CHECK(isomorphic(sset_from_json(json::parse(pb.out)), standard_simplex(1)));

    RunResult q = run({"quotient", "cli_d1.json", "cli_b1.json"});
    CHECK(q.code == 0);
    CHECK(sset_from_json(json::parse(q.out)).counts() == std::vector<int>{1, 1});

    // A non-subcomplex quotient is an input error.
    tmp.put("cli_d2.json", emit(standard_simplex(2)));
    CHECK(run({"quotient", "cli_d1.json", "cli_d2.json"}).code == 2);
}

TEST_CASE("nerve verb with truncation for preorders") {
    TempFiles tmp;
    tmp.put("cli_pos.json", R"({"elements": ["a", "b", "c"],
                                "leq": [["a", "b"], ["b", "c"]]})");
    RunResult nv = run({"nerve", "cli_pos.json"});
    CHECK(nv.code == 0);
    CHECK(isomorphic(sset_from_json(json::parse(nv.out)), standard_simplex(2)));

    tmp.put("cli_pre.json", R"({"elements": ["a", "b"],
                                "leq": [["a", "b"], ["b", "a"]]})");
    CHECK(run({"nerve", "cli_pre.json"}).code == 2);  // not antisymmetric
    RunResult tr = run({"nerve", "cli_pre.json", "-d", "1"});
    CHECK(tr.code == 0);
    CHECK(sset_from_json(json::parse(tr.out)).dim() == 1);
}

TEST_CASE("cover verb with subgroup and base restrictions") {
    FinSSet loop = quotient(standard_simplex(1), boundary(1)).obj;
    json base = to_json(loop);
    TempFiles tmp;
    tmp.put("cli_z3.json", json{{"base", base},
                                {"group", "Z/3"},
                                {"labels", {{"B:0,1", 1}}}}
                               .dump(2));
    tmp.paths.push_back("cli_cov_proj.json");
    RunResult c = run({"cover", "cli_z3.json", "--map", "cli_cov_proj.json"});
    CHECK(c.code == 0);
    CHECK(sset_from_json(json::parse(c.out)).counts() == std::vector<int>{3, 3});
    CHECK(validate_map(read_map_file("cli_cov_proj.json")).ok());

    tmp.put("cli_z4.json", json{{"base", base},
                                {"group", "Z/4"},
                                {"labels", {{"B:0,1", 2}}},
                                {"subgroup", json::array({2})}}
                               .dump(2));
    RunResult s = run({"cover", "cli_z4.json"});
    CHECK(s.code == 0);
    CHECK(sset_from_json(json::parse(s.out)).counts() == std::vector<int>{2, 2});

    tmp.put("cli_z4r.json", json{{"base", base},
                                 {"group", "Z/4"},
                                 {"labels", {{"B:0,1", 2}}},
                                 {"restrict", json::array({"B:0"})}}
                                .dump(2));
    RunResult r = run({"cover", "cli_z4r.json"});
    CHECK(r.code == 0);
    CHECK(sset_from_json(json::parse(r.out)).counts() == std::vector<int>{4});
}

TEST_CASE("sdot and k0 verbs") {
    json data{{"objects", json::array({"0", "A", "B", "C"})},
              {"zero", "0"},
              {"cofiber", json::array({json::array({"A", "B", "C"})})},
              {"weq", json::array({json::array({"A", "B"})})}};
    TempFiles tmp;
    tmp.put("cli_sdata.json", data.dump(2));
    RunResult s = run({"sdot", "cli_sdata.json"});
    CHECK(s.code == 0);
    CHECK(sset_from_json(json::parse(s.out)).counts() == std::vector<int>{1, 3, 2});

    RunResult k = run({"k0", "cli_sdata.json"});
    CHECK(k.code == 0);
    CHECK(k.out == "Z\n");

    data["T"] = json::array({"0", "A"});
    tmp.put("cli_sdata_t.json", data.dump(2));
    RunResult st = run({"sdot", "cli_sdata_t.json", "--restrict-T"});
    CHECK(st.code == 0);
    CHECK(sset_from_json(json::parse(st.out)).counts() == std::vector<int>{1, 1});
}
