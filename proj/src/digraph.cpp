#include "sset/digraph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "sset/constructions.hpp"

namespace sset {

DiGraph associated_graph(const FinSSet& X) {
    DiGraph G;
    for (const auto& [id, rec] : X.simplices) {
        if (rec.dim == 0) G.vertices.insert(id);
        if (rec.dim == 1)
            G.edges.push_back(Edge{id, rec.faces[1].base, rec.faces[0].base});
    }
    std::sort(G.edges.begin(), G.edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    return G;
}

namespace {
std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}
}  // namespace

std::string DiGraph::dot() const {
    std::ostringstream os;
    os << "digraph G {\n";
    for (const auto& v : vertices) os << "  " << dot_quote(v) << ";\n";
    for (const auto& e : edges)
        os << "  " << dot_quote(e.src) << " -> " << dot_quote(e.dst)
           << " [label=" << dot_quote(e.id) << "];\n";
    os << "}\n";
    return os.str();
}

DiGraph digraph_from_dot(const std::string& text) {
    DiGraph G;
    std::istringstream in(text);
    std::string line;
    auto unquote = [](const std::string& s, size_t& pos) {
        if (pos >= s.size() || s[pos] != '"') throw SSetError("DOT parse: expected quote");
        std::string out;
        for (++pos; pos < s.size() && s[pos] != '"'; ++pos) {
            if (s[pos] == '\\') ++pos;
            out += s[pos];
        }
        if (pos >= s.size()) throw SSetError("DOT parse: unterminated string");
        ++pos;
        return out;
    };
    while (std::getline(in, line)) {
        size_t pos = line.find('"');
        if (pos == std::string::npos) continue;
        std::string first = unquote(line, pos);
        size_t arrow = line.find("->", pos);
        if (arrow == std::string::npos) {
            G.vertices.insert(first);
            continue;
        }
        pos = line.find('"', arrow);
        std::string second = unquote(line, pos);
        pos = line.find('"', pos);
        if (pos == std::string::npos) throw SSetError("DOT parse: edge without label");
        std::string label = unquote(line, pos);
        G.edges.push_back(Edge{label, first, second});
        G.vertices.insert(first);
        G.vertices.insert(second);
    }
    std::sort(G.edges.begin(), G.edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    return G;
}

bool digraph_isomorphic(const DiGraph& G, const DiGraph& H) {
    if (G.vertices.size() != H.vertices.size() || G.edges.size() != H.edges.size()) return false;
    std::vector<std::string> gv(G.vertices.begin(), G.vertices.end());
    std::vector<std::string> hv(H.vertices.begin(), H.vertices.end());
    auto edge_multiset = [](const DiGraph& D, const std::map<std::string, int>& num) {
        std::vector<std::pair<int, int>> es;
        for (const auto& e : D.edges) es.push_back({num.at(e.src), num.at(e.dst)});
        std::sort(es.begin(), es.end());
        return es;
    };
    std::map<std::string, int> hnum;
    for (size_t i = 0; i < hv.size(); ++i) hnum[hv[i]] = static_cast<int>(i);
    auto htarget = edge_multiset(H, hnum);
    std::vector<int> perm(gv.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    do {
        std::map<std::string, int> gnum;
        for (size_t i = 0; i < gv.size(); ++i) gnum[gv[i]] = perm[i];
        if (edge_multiset(G, gnum) == htarget) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return gv.empty() ? H.vertices.empty() : false;
}

std::optional<std::vector<Edge>> find_closed_trail(const DiGraph& G) {
    // Depth-first cycle search with colors; edges explored in id order so
    // the witness is deterministic.
    std::map<std::string, std::vector<const Edge*>> out;
    for (const auto& e : G.edges) out[e.src].push_back(&e);
    std::map<std::string, int> color;  // 0 white, 1 gray, 2 black
    std::vector<const Edge*> stack;
    std::function<std::optional<std::vector<Edge>>(const std::string&)> dfs =
        [&](const std::string& v) -> std::optional<std::vector<Edge>> {
        color[v] = 1;
        for (const Edge* e : out[v]) {
            if (color[e->dst] == 1) {
                // cycle: suffix of the stack from e->dst, plus e
                std::vector<Edge> trail;
                size_t start = 0;
                for (size_t i = 0; i < stack.size(); ++i)
                    if (stack[i]->src == e->dst) start = i;
                for (size_t i = start; i < stack.size(); ++i) trail.push_back(*stack[i]);
                trail.push_back(*e);
                // trim to the actual cycle: walk back from the end
                std::vector<Edge> cycle;
                std::string head = e->dst;
                for (const auto& ed : trail)
                    if (!cycle.empty() || ed.src == head) cycle.push_back(ed);
                return cycle;
            }
            if (color[e->dst] == 0) {
                stack.push_back(e);
                if (auto r = dfs(e->dst)) return r;
                stack.pop_back();
            }
        }
        color[v] = 2;
        return std::nullopt;
    };
    for (const auto& v : G.vertices) {
        if (color[v] == 0) {
            stack.clear();
            if (auto r = dfs(v)) return r;
        }
    }
    return std::nullopt;
}

bool is_acyclic(const DiGraph& G) { return !find_closed_trail(G).has_value(); }
bool is_acyclic(const FinSSet& X) { return is_acyclic(associated_graph(X)); }

std::vector<std::set<std::string>> connected_components(const FinSSet& X) {
    DiGraph G = associated_graph(X);
    std::map<std::string, std::string> parent;
    std::function<std::string(const std::string&)> find = [&](const std::string& v) {
        std::string r = v;
        while (parent[r] != r) r = parent[r];
        return r;
    };
    for (const auto& v : G.vertices) parent[v] = v;
    for (const auto& e : G.edges) {
        std::string a = find(e.src), b = find(e.dst);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::string, std::set<std::string>> comps;
    for (const auto& v : G.vertices) comps[find(v)].insert(v);
    std::vector<std::set<std::string>> out;
    for (auto& [r, s] : comps) out.push_back(std::move(s));
    return out;
}

bool VertexOrder::is_total() const {
    std::vector<std::string> vs;
    for (const auto& [id, rec] : carrier.simplices)
        if (rec.dim == 0) vs.push_back(id);
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!less(vs[i], vs[j]) && !less(vs[j], vs[i])) return false;
    return true;
}

VertexOrder min_order(const FinSSet& X) {
    DiGraph G = associated_graph(X);
    if (auto trail = find_closed_trail(G)) throw NotAcyclicError(*trail);
    // transitive closure of the edge relation
    VertexOrder o;
    o.carrier = X;
    std::map<std::string, std::set<std::string>> succ;
    for (const auto& e : G.edges) succ[e.src].insert(e.dst);
    for (const auto& v : G.vertices) {
        std::vector<std::string> work(succ[v].begin(), succ[v].end());
        std::set<std::string> reach;
        while (!work.empty()) {
            std::string u = work.back();
            work.pop_back();
            if (!reach.insert(u).second) continue;
            for (const auto& w : succ[u]) work.push_back(w);
        }
        for (const auto& u : reach) o.lt.insert({v, u});
    }
    return o;
}

ValidationReport validate_order(const VertexOrder& o) {
    ValidationReport rep;
    for (const auto& [a, b] : o.lt) {
        if (o.less(b, a) || a == b)
            rep.violations.push_back({a, "order is not a strict partial order at (" + a + ", " + b + ")"});
        for (const auto& [c, d] : o.lt)
            if (b == c && !o.less(a, d))
                rep.violations.push_back({a, "order is not transitive: " + a + " < " + b + " < " + d});
    }
    for (const auto& [id, rec] : o.carrier.simplices) {
        if (rec.dim != 1) continue;
        const std::string& src = rec.faces[1].base;
        const std::string& dst = rec.faces[0].base;
        if (!o.less(src, dst))
            rep.violations.push_back(
                {id, "edge " + id + " from " + src + " to " + dst + " is not increasing"});
    }
    return rep;
}

VertexOrder refine_to_total(const VertexOrder& o) {
    std::vector<std::string> vs;
    for (const auto& [id, rec] : o.carrier.simplices)
        if (rec.dim == 0) vs.push_back(id);
    std::sort(vs.begin(), vs.end());
    std::map<std::string, int> indeg;
    std::map<std::string, std::set<std::string>> succ;
    for (const auto& v : vs) indeg[v] = 0;
    for (const auto& [a, b] : o.lt) {
        if (succ[a].insert(b).second) ++indeg[b];
    }
    std::vector<std::string> order;
    std::set<std::string> ready;
    for (const auto& v : vs)
        if (indeg[v] == 0) ready.insert(v);
    while (!ready.empty()) {
        std::string v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (const auto& u : succ[v])
            if (--indeg[u] == 0) ready.insert(u);
    }
    if (order.size() != vs.size()) throw SSetError("refine_to_total: order has a cycle");
    VertexOrder t;
    t.carrier = o.carrier;
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j) t.lt.insert({order[i], order[j]});
    return t;
}

FinSSet below(const FinSSet& X, const VertexOrder& o, const std::string& v, Cmp mode) {
    if (!X.has(v) || X.at(v).dim != 0) throw SSetError("below: unknown vertex " + v);
    std::set<std::string> S;
    for (const auto& [id, rec] : X.simplices) {
        if (rec.dim != 0) continue;
        bool in = false;
        switch (mode) {
            case Cmp::LT: in = o.less(id, v); break;
            case Cmp::LE: in = id == v || o.less(id, v); break;
            case Cmp::GT: in = o.less(v, id); break;
            case Cmp::GE: in = id == v || o.less(v, id); break;
        }
        if (in) S.insert(id);
    }
    return spanned(X, S);
}

}  // namespace sset
