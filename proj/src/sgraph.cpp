#include "sgtoric/sgraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace sgtoric {

SignedGraph::SignedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n <= 0) throw std::invalid_argument("SignedGraph: vertex count must be positive");
    inc_.assign(n + 1, {});
    std::vector<bool> seen(edges_.size() + 1, false);
    std::set<std::pair<int, int>> pairs;
    if (edges_.size() > static_cast<size_t>(std::numeric_limits<int>::max()))
        throw std::invalid_argument("SignedGraph: too many edges");
    for (const Edge& e : edges_) {
        if (e.id < 1 || e.id > static_cast<int>(edges_.size()))
            throw std::invalid_argument("SignedGraph: edge ids must be dense 1..m (got " +
                                        std::to_string(e.id) + ")");
        if (seen[e.id]) throw std::invalid_argument("SignedGraph: duplicate edge id " + std::to_string(e.id));
        seen[e.id] = true;
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            throw std::invalid_argument("SignedGraph: edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("SignedGraph: loop edge " + std::to_string(e.id));
        if (e.tau_u != 1 && e.tau_u != -1) throw std::invalid_argument("SignedGraph: sign not +-1");
        if (e.tau_v != 1 && e.tau_v != -1) throw std::invalid_argument("SignedGraph: sign not +-1");
        auto key = std::minmax(e.u, e.v);
        if (!pairs.insert(key).second)
            throw std::invalid_argument("SignedGraph: parallel edge between " + std::to_string(e.u) +
                                        " and " + std::to_string(e.v));
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (const Edge& e : edges_) {
        inc_[e.u].push_back(e.id);
        inc_[e.v].push_back(e.id);
    }
}

const Edge& SignedGraph::edge(int id) const {
    if (id < 1 || id > edge_count()) throw std::invalid_argument("unknown edge id " + std::to_string(id));
    return edges_[id - 1];
}

const std::vector<int>& SignedGraph::incident(int v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    return inc_[v];
}

int SignedGraph::tau(int edge_id, int v) const {
    const Edge& e = edge(edge_id);
    if (v == e.u) return e.tau_u;
    if (v == e.v) return e.tau_v;
    throw std::invalid_argument("vertex " + std::to_string(v) + " not incident to edge " +
                                std::to_string(edge_id));
}

int SignedGraph::sigma(int edge_id) const {
    const Edge& e = edge(edge_id);
    return -e.tau_u * e.tau_v;
}

std::optional<int> SignedGraph::find_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return std::nullopt;
    for (int id : inc_[u]) {
        const Edge& e = edges_[id - 1];
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return id;
    }
    return std::nullopt;
}

SignedGraph SignedGraph::with_tau(int edge_id, int v, int sign) const {
    std::vector<Edge> es = edges_;
    Edge& e = es[edge(edge_id).id - 1];
    if (v == e.u)
        e.tau_u = sign;
    else if (v == e.v)
        e.tau_v = sign;
    else
        throw std::invalid_argument("vertex not incident to edge");
    return SignedGraph(n_, std::move(es));
}

SignedGraph SignedGraph::negate_vertex(int v) const {
    std::vector<Edge> es = edges_;
    for (int id : incident(v)) {
        Edge& e = es[id - 1];
        (v == e.u ? e.tau_u : e.tau_v) *= -1;
    }
    return SignedGraph(n_, std::move(es));
}

SignedGraph SignedGraph::negate_edge(int id) const {
    std::vector<Edge> es = edges_;
    es[edge(id).id - 1].tau_u *= -1;
    es[edge(id).id - 1].tau_v *= -1;
    return SignedGraph(n_, std::move(es));
}

int SignedMultigraph::tau(int edge_index, int v) const {
    const MEdge& e = edges.at(edge_index);
    if (v == e.u) return e.tau_u;
    if (v == e.v) return e.tau_v;
    throw std::invalid_argument("vertex not incident to multigraph edge");
}

std::vector<int> SignedMultigraph::vertices_used() const {
    std::set<int> s;
    for (const MEdge& e : edges) {
        s.insert(e.u);
        s.insert(e.v);
    }
    return {s.begin(), s.end()};
}

namespace {

int parse_sign_token(const std::string& tok, int line) {
    if (tok == "+1" || tok == "+") return 1;
    if (tok == "-1" || tok == "-") return -1;
    throw ParseError(line, "sign token must be +1/-1 (or +/-), got '" + tok + "'");
}

}  // namespace

SignedGraph parse_signed_graph(std::string_view text, SignMode mode,
                               const std::vector<std::pair<int, int>>& orient_tails) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool header = false;
    int n = -1;
    std::vector<Edge> edges;
    std::map<int, int> tails(orient_tails.begin(), orient_tails.end());
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "sg") {
            int ver = 0;
            if (!(ls >> ver) || ver != 1) throw ParseError(lineno, "expected 'sg 1' header");
            header = true;
        } else if (kw == "n") {
            if (!(ls >> n) || n <= 0) throw ParseError(lineno, "bad vertex count");
        } else if (kw == "e") {
            Edge e;
            if (!(ls >> e.id >> e.u >> e.v)) throw ParseError(lineno, "edge line needs: e <id> <u> <v> [tau_u tau_v]");
            std::string su, sv;
            bool have_signs = static_cast<bool>(ls >> su);
            if (have_signs && !(ls >> sv)) throw ParseError(lineno, "edge line has tau_u but no tau_v");
            switch (mode) {
                case SignMode::Explicit:
                    if (!have_signs) throw ParseError(lineno, "edge line missing tau tokens");
                    e.tau_u = parse_sign_token(su, lineno);
                    e.tau_v = parse_sign_token(sv, lineno);
                    break;
                case SignMode::AllPlus:
                    e.tau_u = e.tau_v = 1;
                    break;
                case SignMode::Orient: {
                    auto it = tails.find(e.id);
                    int tail = (it != tails.end()) ? it->second : e.u;
                    if (tail != e.u && tail != e.v)
                        throw ParseError(lineno, "orient tail is not an endpoint of edge " + std::to_string(e.id));
                    e.tau_u = (tail == e.u) ? 1 : -1;
                    e.tau_v = (tail == e.v) ? 1 : -1;
                    break;
                }
            }
            if (e.u == e.v) throw ParseError(lineno, "loop edge " + std::to_string(e.id));
            edges.push_back(e);
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (!header) throw ParseError(0, "missing 'sg 1' header");
    if (n < 0) throw ParseError(0, "missing 'n' line");
    try {
        return SignedGraph(n, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(0, ex.what());
    }
}

std::string to_sg_text(const SignedGraph& g) {
    std::ostringstream os;
    os << "sg 1\n";
    os << "n " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges())
        os << "e " << e.id << ' ' << e.u << ' ' << e.v << ' ' << (e.tau_u > 0 ? "+1" : "-1") << ' '
           << (e.tau_v > 0 ? "+1" : "-1") << "\n";
    return os.str();
}

IntMatrix incidence_matrix(const SignedGraph& g) {
    IntMatrix a(g.vertex_count(), g.edge_count());
    for (const Edge& e : g.edges()) {
        a(e.u - 1, e.id - 1) = e.tau_u;
        a(e.v - 1, e.id - 1) = e.tau_v;
    }
    return a;
}

std::vector<std::vector<int>> connected_components(const SignedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n + 1, -1);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= n; ++s) {
        if (comp[s] >= 0) continue;
        int c = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<int> q{s};
        comp[s] = c;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            out[c].push_back(v);
            for (int id : g.incident(v)) {
                const Edge& e = g.edge(id);
                int w = (e.u == v) ? e.v : e.u;
                if (comp[w] < 0) {
                    comp[w] = c;
                    q.push_back(w);
                }
            }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

int bipartite_count(const SignedGraph& g, const std::vector<int>& deleted) {
    const int n = g.vertex_count();
    std::vector<bool> gone(n + 1, false);
    for (int v : deleted) gone.at(v) = true;
    std::vector<int> color(n + 1, -1);
    int count = 0;
    for (int s = 1; s <= n; ++s) {
        if (gone[s] || color[s] >= 0) continue;
        bool bip = true;
        std::deque<int> q{s};
        color[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int id : g.incident(v)) {
                const Edge& e = g.edge(id);
                int w = (e.u == v) ? e.v : e.u;
                if (gone[w]) continue;
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    q.push_back(w);
                } else if (color[w] == color[v]) {
                    bip = false;
                }
            }
        }
        if (bip) ++count;
    }
    return count;
}

std::vector<bool> component_has_odd_closed_walk(const SignedGraph& g) {
    // Potentials over sigma: component is balanced iff pot(u)*pot(v) = sigma(e)
    // is consistent on all edges; Lemma-level fact reduces the walk test to cycles.
    const int n = g.vertex_count();
    std::vector<int> pot(n + 1, 0), comp(n + 1, -1);
    std::vector<bool> odd;
    for (int s = 1; s <= n; ++s) {
        if (comp[s] >= 0) continue;
        int c = static_cast<int>(odd.size());
        odd.push_back(false);
        comp[s] = c;
        pot[s] = 1;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int id : g.incident(v)) {
                const Edge& e = g.edge(id);
                int w = (e.u == v) ? e.v : e.u;
                if (comp[w] < 0) {
                    comp[w] = c;
                    pot[w] = pot[v] * g.sigma(id);
                    q.push_back(w);
                } else if (pot[v] * pot[w] != g.sigma(id)) {
                    odd[c] = true;
                }
            }
        }
    }
    return odd;
}

bool has_odd_closed_walk(const SignedGraph& g) {
    auto f = component_has_odd_closed_walk(g);
    return std::any_of(f.begin(), f.end(), [](bool b) { return b; });
}

namespace {

// BFS spanning tree edge ids, in a deterministic order.
std::vector<int> bfs_tree_edges(const SignedGraph& g) {
    const int n = g.vertex_count();
    std::vector<bool> vis(n + 1, false);
    std::vector<int> tree;
    for (int s = 1; s <= n; ++s) {
        if (vis[s]) continue;
        vis[s] = true;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int id : g.incident(v)) {
                const Edge& e = g.edge(id);
                int w = (e.u == v) ? e.v : e.u;
                if (!vis[w]) {
                    vis[w] = true;
                    tree.push_back(id);
                    q.push_back(w);
                }
            }
        }
    }
    return tree;
}

SignedGraph with_sigma(const SignedGraph& g, const std::vector<int>& sig) {
    std::vector<Edge> es = g.edges();
    for (Edge& e : es) {
        e.tau_u = 1;
        e.tau_v = -sig[e.id];  // sigma = -tau_u*tau_v
    }
    return SignedGraph(g.vertex_count(), std::move(es));
}

}  // namespace

std::vector<SignedGraph> sign_class_representatives(const SignedGraph& g) {
    if (connected_components(g).size() != 1)
        throw std::invalid_argument("sign_class_representatives: graph must be connected");
    const int m = g.edge_count();
    auto tree = bfs_tree_edges(g);
    std::vector<bool> in_tree(m + 1, false);
    for (int id : tree) in_tree[id] = true;
    std::vector<int> cotree;
    for (int id = 1; id <= m; ++id)
        if (!in_tree[id]) cotree.push_back(id);
    if (cotree.size() > 30) throw BudgetExceeded("sign class enumeration: too many co-tree edges");
    std::vector<SignedGraph> reps;
    for (unsigned long mask = 0; mask < (1ul << cotree.size()); ++mask) {
        std::vector<int> sig(m + 1, 1);
        for (size_t i = 0; i < cotree.size(); ++i)
            if (mask & (1ul << i)) sig[cotree[i]] = -1;
        reps.push_back(with_sigma(g, sig));
    }
    return reps;
}

int sign_class_index(const SignedGraph& g) {
    if (connected_components(g).size() != 1)
        throw std::invalid_argument("sign_class_index: graph must be connected");
    const int n = g.vertex_count(), m = g.edge_count();
    auto tree = bfs_tree_edges(g);
    std::vector<bool> in_tree(m + 1, false);
    for (int id : tree) in_tree[id] = true;
    // Potentials with sigma forced to +1 on the tree.
    std::vector<int> pot(n + 1, 0);
    pot[1] = 1;
    std::deque<int> q{1};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int id : g.incident(v)) {
            if (!in_tree[id]) continue;
            const Edge& e = g.edge(id);
            int w = (e.u == v) ? e.v : e.u;
            if (pot[w] == 0) {
                pot[w] = pot[v] * g.sigma(id);
                q.push_back(w);
            }
        }
    }
    int idx = 0, bit = 0;
    for (int id = 1; id <= m; ++id) {
        if (in_tree[id]) continue;
        const Edge& e = g.edge(id);
        int s = g.sigma(id) * pot[e.u] * pot[e.v];  // switching-invariant fundamental product
        if (s < 0) idx |= (1 << bit);
        ++bit;
    }
    return idx;
}

bool is_ear(const SignedGraph& g, const VertexPath& p, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    const auto& vs = p.verts;
    if (vs.size() < 3) return fail("ear must have length >= 2");
    for (size_t i = 0; i + 1 < vs.size(); ++i)
        if (!g.find_edge(vs[i], vs[i + 1]))
            return fail("no edge between " + std::to_string(vs[i]) + " and " + std::to_string(vs[i + 1]));
    std::set<int> distinct(vs.begin(), vs.end());
    if (distinct.size() != vs.size()) return fail("path repeats a vertex");
    for (size_t i = 1; i + 1 < vs.size(); ++i)
        if (g.degree(vs[i]) != 2)
            return fail("internal vertex " + std::to_string(vs[i]) + " has degree != 2");
    if (g.find_edge(vs.front(), vs.back())) return fail("chord v0-vt present");
    return true;
}

std::vector<VertexPath> find_ears(const SignedGraph& g) {
    // All induced paths whose internal vertices have degree 2; grow maximal
    // degree-2 chains and take subpaths of length >= 2 with nonadjacent ends.
    std::vector<VertexPath> out;
    std::set<std::vector<int>> seen;
    const int n = g.vertex_count();
    for (int v = 1; v <= n; ++v) {
        if (g.degree(v) != 2) continue;
        // Extend to a maximal chain through v.
        std::vector<int> chain{v};
        bool wrapped = false;
        for (int dir = 0; dir < 2 && !wrapped; ++dir) {
            int prev = v;
            int cur = [&] {
                const Edge& e = g.edge(g.incident(v)[dir]);
                return e.u == v ? e.v : e.u;
            }();
            while (g.degree(cur) == 2 && cur != v) {
                if (dir == 0)
                    chain.push_back(cur);
                else
                    chain.insert(chain.begin(), cur);
                int nxt = -1;
                for (int id : g.incident(cur)) {
                    const Edge& e = g.edge(id);
                    int w = (e.u == cur) ? e.v : e.u;
                    if (w != prev) nxt = w;
                }
                prev = cur;
                cur = nxt;
            }
            if (cur == v) {
                wrapped = true;  // component is a bare cycle, no ear ends
                break;
            }
            if (dir == 0)
                chain.push_back(cur);
            else
                chain.insert(chain.begin(), cur);
        }
        if (wrapped) continue;
        // Subpaths with at least one internal vertex.
        for (size_t i = 0; i + 2 < chain.size(); ++i) {
            for (size_t j = i + 2; j < chain.size(); ++j) {
                std::vector<int> sub(chain.begin() + i, chain.begin() + j + 1);
                bool internal_ok = true;
                for (size_t k = 1; k + 1 < sub.size(); ++k)
                    if (g.degree(sub[k]) != 2) internal_ok = false;
                if (!internal_ok) continue;
                if (g.find_edge(sub.front(), sub.back())) continue;
                auto key = sub;
                if (key.back() < key.front()) std::reverse(key.begin(), key.end());
                if (seen.insert(key).second) out.push_back({sub});
            }
        }
    }
    return out;
}

EarContraction contract_ear(const SignedGraph& g, const VertexPath& p) {
    std::string why;
    if (!is_ear(g, p, &why)) throw std::invalid_argument("not an ear: " + why);
    const auto& vs = p.verts;
    std::set<int> internal(vs.begin() + 1, vs.end() - 1);
    EarContraction out;
    out.vertex_map.assign(g.vertex_count() + 1, 0);
    int nv = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (!internal.count(v)) out.vertex_map[v] = ++nv;
    out.edge_map.assign(g.edge_count() + 1, 0);
    std::vector<Edge> es;
    int ne = 0;
    for (const Edge& e : g.edges()) {
        if (internal.count(e.u) || internal.count(e.v)) continue;
        Edge ne2 = e;
        ne2.id = ++ne;
        ne2.u = out.vertex_map[e.u];
        ne2.v = out.vertex_map[e.v];
        out.edge_map[e.id] = ne2.id;
        es.push_back(ne2);
    }
    Edge star;
    star.id = ++ne;
    star.u = out.vertex_map[vs.front()];
    star.v = out.vertex_map[vs.back()];
    star.tau_u = star.tau_v = 1;  // sign intentionally unset; see lift/project
    es.push_back(star);
    out.star_edge_id = star.id;
    out.graph = SignedGraph(nv, std::move(es));
    return out;
}

SignedGraph lift_sign_contraction(const SignedGraph& g, const VertexPath& p,
                                  const EarContraction& c, const SignedGraph& g_star) {
    std::string why;
    if (!is_ear(g, p, &why)) throw std::invalid_argument("not an ear: " + why);
    if (g_star.vertex_count() != c.graph.vertex_count() || g_star.edge_count() != c.graph.edge_count())
        throw std::invalid_argument("g_star does not match the contraction");
    const auto& vs = p.verts;
    const int t = static_cast<int>(vs.size()) - 1;
    std::vector<Edge> es = g.edges();
    for (Edge& e : es) {
        int mapped = c.edge_map[e.id];
        if (mapped != 0) {
            const Edge& se = g_star.edge(mapped);
            // endpoints correspond through vertex_map
            e.tau_u = (c.vertex_map[e.u] == se.u) ? se.tau_u : se.tau_v;
            e.tau_v = (c.vertex_map[e.v] == se.u) ? se.tau_u : se.tau_v;
        }
    }
    auto set_tau = [&](int u, int v, int at, int sign) {
        int id = *g.find_edge(u, v);
        Edge& e = es[id - 1];
        (at == e.u ? e.tau_u : e.tau_v) = sign;
    };
    int star_u = c.vertex_map[vs.front()];
    const Edge& star = g_star.edge(c.star_edge_id);
    int tau_star_v0 = (star.u == star_u) ? star.tau_u : star.tau_v;
    int tau_star_vt = (star.u == star_u) ? star.tau_v : star.tau_u;
    set_tau(vs[0], vs[1], vs[0], tau_star_v0);
    set_tau(vs[t - 1], vs[t], vs[t], tau_star_vt);
    for (int i = 1; i <= t - 1; ++i) {
        set_tau(vs[i], vs[i + 1], vs[i], 1);
        set_tau(vs[i - 1], vs[i], vs[i], -1);
    }
    return SignedGraph(g.vertex_count(), std::move(es));
}

EarContraction project_sign_subdivision(const SignedGraph& g, const VertexPath& p) {
    std::string why;
    if (!is_ear(g, p, &why)) throw std::invalid_argument("not an ear: " + why);
    const auto& vs = p.verts;
    const int t = static_cast<int>(vs.size()) - 1;
    if (t < 3) throw std::invalid_argument("project_sign_subdivision needs an ear of length >= 3");
    VertexPath q{std::vector<int>(vs.begin(), vs.end() - 1)};
    if (g.find_edge(q.verts.front(), q.verts.back()))
        throw std::invalid_argument("q = p - v_t is not an ear (chord v0-v_{t-1})");
    // Number of balanced sections of p in (G,tau).
    std::vector<int> pedges;
    for (int i = 0; i < t; ++i) pedges.push_back(*g.find_edge(vs[i], vs[i + 1]));
    int unb = 0;
    for (int i = 1; i <= t - 1; ++i)
        if (g.tau(pedges[i - 1], vs[i]) * g.tau(pedges[i], vs[i]) == 1) ++unb;
    int k = unb + 1;

    EarContraction c = contract_ear(g, q);
    std::vector<Edge> es = c.graph.edges();
    // Copied signs are already right for off-ear edges and for (v_{t-1}v_t, v_t).
    Edge& star = es[c.star_edge_id - 1];
    int v0_new = c.vertex_map[vs[0]];
    int vt1_new = c.vertex_map[vs[t - 1]];
    (star.u == v0_new ? star.tau_u : star.tau_v) = g.tau(pedges[0], vs[0]);
    (star.u == vt1_new ? star.tau_u : star.tau_v) = 1;
    int last_id = c.edge_map[pedges[t - 1]];
    Edge& last = es[last_id - 1];
    (last.u == vt1_new ? last.tau_u : last.tau_v) = (k % 2 == 0) ? 1 : -1;
    c.graph = SignedGraph(c.graph.vertex_count(), std::move(es));
    return c;
}

SignedGraph subdivide_edge(const SignedGraph& g, int id, int times) {
    if (times < 1) throw std::invalid_argument("subdivide_edge: times must be >= 1");
    const Edge old = g.edge(id);
    std::vector<Edge> es;
    int ne = 0;
    for (const Edge& e : g.edges()) {
        if (e.id == id) continue;
        Edge e2 = e;
        e2.id = ++ne;
        es.push_back(e2);
    }
    int n = g.vertex_count();
    std::vector<int> path{old.u};
    for (int i = 0; i < times; ++i) path.push_back(++n);
    path.push_back(old.v);
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        Edge e;
        e.id = ++ne;
        e.u = path[i];
        e.v = path[i + 1];
        e.tau_u = (i == 0) ? old.tau_u : 1;
        e.tau_v = (i + 2 == path.size()) ? old.tau_v : 1;
        es.push_back(e);
    }
    return SignedGraph(n, std::move(es));
}

}  // namespace sgtoric
