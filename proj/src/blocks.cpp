#include "sgtoric/blocks.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stack>

namespace sgtoric {

namespace {

// Edge-list view shared by SignedGraph and SignedMultigraph.
struct EdgeView {
    int u, v;
    int id;  // reported id (edge id / edge index)
};

struct BlockAccum {
    int n = 0;
    std::vector<EdgeView> edges;
};

// Iterative Hopcroft–Tarjan; parallel edges are distinct (a 2-cycle is a block).
BlockTree decompose(const BlockAccum& in) {
    const int n = in.n;
    std::vector<std::vector<int>> inc(n + 1);  // incident edge indices
    for (size_t i = 0; i < in.edges.size(); ++i) {
        inc[in.edges[i].u].push_back(static_cast<int>(i));
        inc[in.edges[i].v].push_back(static_cast<int>(i));
    }
    std::vector<int> disc(n + 1, 0), low(n + 1, 0), comp(n + 1, -1);
    std::vector<bool> edge_used(in.edges.size(), false);
    std::stack<int> estack;  // edge indices
    BlockTree out;
    int timer = 0;
    int ncomp = 0;

    struct Frame {
        int v, parent_edge;
        size_t next;
        int children = 0;
    };

    auto pop_block = [&](int until_edge, int compIdx) {
        Block b;
        std::set<int> vs;
        for (;;) {
            int ei = estack.top();
            estack.pop();
            b.edge_ids.push_back(in.edges[ei].id);
            vs.insert(in.edges[ei].u);
            vs.insert(in.edges[ei].v);
            if (ei == until_edge) break;
        }
        b.vertices.assign(vs.begin(), vs.end());
        b.is_edge = (b.edge_ids.size() == 1);
        std::sort(b.edge_ids.begin(), b.edge_ids.end());
        out.blocks.push_back(std::move(b));
        out.component_of_block.push_back(compIdx);
    };

    for (int s = 1; s <= n; ++s) {
        if (disc[s] || inc[s].empty()) {
            if (!disc[s] && inc[s].empty()) comp[s] = ncomp++;  // isolated vertex, no block
            continue;
        }
        int compIdx = ncomp++;
        std::stack<Frame> st;
        disc[s] = low[s] = ++timer;
        comp[s] = compIdx;
        st.push({s, -1, 0});
        while (!st.empty()) {
            Frame& f = st.top();
            if (f.next < inc[f.v].size()) {
                int ei = inc[f.v][f.next++];
                if (ei == f.parent_edge || edge_used[ei]) continue;
                const EdgeView& e = in.edges[ei];
                int w = (e.u == f.v) ? e.v : e.u;
                edge_used[ei] = true;
                estack.push(ei);
                if (!disc[w]) {
                    disc[w] = low[w] = ++timer;
                    comp[w] = compIdx;
                    st.push({w, ei, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                st.pop();
                if (!st.empty()) {
                    Frame& pf = st.top();
                    ++pf.children;
                    low[pf.v] = std::min(low[pf.v], low[v]);
                    // pf.v separates; edges back to pe form one block
                    if (low[v] >= disc[pf.v]) pop_block(pe, compIdx);
                }
            }
        }
    }
    // v is a cut vertex iff it lies in >= 2 blocks.
    std::vector<int> nblocks(n + 1, 0);
    for (const Block& b : out.blocks)
        for (int v : b.vertices) ++nblocks[v];
    out.cut_vertices.clear();
    for (int v = 1; v <= n; ++v)
        if (nblocks[v] >= 2) out.cut_vertices.push_back(v);
    out.block_cuts.assign(out.blocks.size(), {});
    for (size_t b = 0; b < out.blocks.size(); ++b)
        for (int v : out.blocks[b].vertices)
            if (nblocks[v] >= 2) out.block_cuts[b].push_back(v);
    return out;
}

bool block_bipartite(const BlockAccum& in, const Block& b) {
    std::map<int, int> color;
    if (b.vertices.empty()) return true;
    std::map<int, std::vector<std::pair<int, int>>> adj;  // v -> (w)
    for (int id : b.edge_ids) {
        // id is the index into in.edges for this call path
        const EdgeView& e = in.edges[id];
        adj[e.u].push_back({e.v, id});
        adj[e.v].push_back({e.u, id});
    }
    std::deque<int> q{b.vertices.front()};
    color[b.vertices.front()] = 0;
    bool bip = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (auto [w, id] : adj[v]) {
            auto it = color.find(w);
            if (it == color.end()) {
                color[w] = 1 - color[v];
                q.push_back(w);
            } else if (it->second == color[v]) {
                bip = false;
            }
        }
    }
    return bip;
}

}  // namespace

std::vector<int> BlockTree::nonedge_blocks_in_component(int comp) const {
    std::vector<int> out;
    for (size_t b = 0; b < blocks.size(); ++b)
        if (component_of_block[b] == comp && !blocks[b].is_edge) out.push_back(static_cast<int>(b));
    return out;
}

bool BlockTree::is_cut_vertex(int v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

int BlockTree::cut_vertex_towards(int b, int b2) const {
    // BFS on the block-cut incidence structure from b to b2; the answer is the
    // first cut vertex on the path out of b.
    if (b == b2) throw std::invalid_argument("cut_vertex_towards: same block");
    std::map<int, std::vector<int>> blocks_of_cut;
    for (size_t i = 0; i < blocks.size(); ++i)
        for (int v : block_cuts[i]) blocks_of_cut[v].push_back(static_cast<int>(i));
    // nodes: blocks (0..B-1); edges via shared cut vertices
    std::vector<int> prev_cut(blocks.size(), -1), prev_block(blocks.size(), -1);
    std::deque<int> q{b};
    std::vector<bool> vis(blocks.size(), false);
    vis[b] = true;
    while (!q.empty()) {
        int cur = q.front();
        q.pop_front();
        if (cur == b2) {
            int back = cur;
            while (prev_block[back] != b) back = prev_block[back];
            return prev_cut[back];
        }
        for (int v : block_cuts[cur]) {
            for (int nb : blocks_of_cut[v]) {
                if (vis[nb]) continue;
                vis[nb] = true;
                prev_cut[nb] = v;
                prev_block[nb] = cur;
                q.push_back(nb);
            }
        }
    }
    throw std::invalid_argument("cut_vertex_towards: blocks not in the same component");
}

BlockTree block_decomposition(const SignedGraph& g) {
    BlockAccum acc;
    acc.n = g.vertex_count();
    for (const Edge& e : g.edges()) acc.edges.push_back({e.u, e.v, e.id});
    // decompose() reports in.edges[i].id; build a parallel index copy for the
    // bipartite check (which wants indices).
    BlockAccum idx = acc;
    for (size_t i = 0; i < idx.edges.size(); ++i) idx.edges[i].id = static_cast<int>(i);
    BlockTree t = decompose(acc);
    for (Block& b : t.blocks) {
        Block tmp = b;
        tmp.edge_ids.clear();
        for (int id : b.edge_ids) tmp.edge_ids.push_back(id - 1);  // edge ids are 1-based, dense
        b.bipartite = block_bipartite(idx, tmp);
    }
    return t;
}

BlockTree block_decomposition(const SignedMultigraph& g) {
    BlockAccum acc;
    acc.n = g.n;
    for (size_t i = 0; i < g.edges.size(); ++i)
        acc.edges.push_back({g.edges[i].u, g.edges[i].v, static_cast<int>(i)});
    BlockTree t = decompose(acc);
    for (Block& b : t.blocks) b.bipartite = block_bipartite(acc, b);
    return t;
}

Subgraph induced_subgraph(const SignedGraph& g, const std::vector<int>& verts) {
    Subgraph out;
    std::vector<int> newid(g.vertex_count() + 1, 0);
    out.vertex_of_new.assign(1, 0);
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted) {
        newid[v] = static_cast<int>(out.vertex_of_new.size());
        out.vertex_of_new.push_back(v);
    }
    std::vector<Edge> es;
    out.edge_of_new.assign(1, 0);
    for (const Edge& e : g.edges()) {
        if (!newid[e.u] || !newid[e.v]) continue;
        Edge e2 = e;
        e2.id = static_cast<int>(out.edge_of_new.size());
        e2.u = newid[e.u];
        e2.v = newid[e.v];
        out.edge_of_new.push_back(e.id);
        es.push_back(e2);
    }
    out.graph = SignedGraph(static_cast<int>(sorted.size()), std::move(es));
    return out;
}

Subgraph block_subgraph(const SignedGraph& g, const Block& b) {
    // A block is an induced structure on its vertex set except when chords of
    // other blocks... blocks share at most a vertex, so induced is safe for
    // edges, but keep only the block's own edges to be exact.
    Subgraph out;
    std::vector<int> newid(g.vertex_count() + 1, 0);
    out.vertex_of_new.assign(1, 0);
    for (int v : b.vertices) {
        newid[v] = static_cast<int>(out.vertex_of_new.size());
        out.vertex_of_new.push_back(v);
    }
    std::vector<Edge> es;
    out.edge_of_new.assign(1, 0);
    for (int id : b.edge_ids) {
        const Edge& e = g.edge(id);
        Edge e2 = e;
        e2.id = static_cast<int>(out.edge_of_new.size());
        e2.u = newid[e.u];
        e2.v = newid[e.v];
        out.edge_of_new.push_back(e.id);
        es.push_back(e2);
    }
    out.graph = SignedGraph(static_cast<int>(b.vertices.size()), std::move(es));
    return out;
}

bool is_biconnected(const SignedGraph& g) {
    if (g.vertex_count() < 3) return false;
    auto t = block_decomposition(g);
    return t.blocks.size() == 1 && !t.blocks[0].is_edge &&
           t.blocks[0].vertices.size() == static_cast<size_t>(g.vertex_count());
}

}  // namespace sgtoric
