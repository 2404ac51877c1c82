#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgtoric/intmat.hpp"

namespace sgtoric {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what) : std::runtime_error(what), line(line_) {}
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An edge with its two incidence signs. tau_u is tau(e, u), tau_v is tau(e, v).
struct Edge {
    int id = 0;
    int u = 0, v = 0;
    int tau_u = 1, tau_v = 1;
};

/// Simple signed graph. Vertices 1..n, edge ids dense 1..m, no loops.
class SignedGraph {
public:
    SignedGraph() = default;
    SignedGraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(int id) const;
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& incident(int v) const;

    int tau(int edge_id, int v) const;
    /// Derived edge sign: sigma(e) = -tau(e,u) * tau(e,v).
    int sigma(int edge_id) const;

    std::optional<int> find_edge(int u, int v) const;
    bool adjacent(int u, int v) const { return find_edge(u, v).has_value(); }
    int degree(int v) const { return static_cast<int>(incident(v).size()); }

    SignedGraph with_tau(int edge_id, int v, int sign) const;
    SignedGraph negate_vertex(int v) const;  // flip tau(e,v) for all e at v
    SignedGraph negate_edge(int e) const;    // flip both incidences of e

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> inc_;
};

/// Multigraph derived from walks ([w]) and kernel vectors (G_b). Edges keep the
/// id of the underlying graph edge; parallel copies allowed, loops not.
struct MEdge {
    int orig_id = 0;
    int u = 0, v = 0;
    int tau_u = 1, tau_v = 1;
};

struct SignedMultigraph {
    int n = 0;  // vertex universe 1..n (isolated vertices permitted)
    std::vector<MEdge> edges;

    int tau(int edge_index, int v) const;
    std::vector<int> vertices_used() const;
};

enum class SignMode { Explicit, AllPlus, Orient };

/// Parse the `.sg` text format. With AllPlus/Orient the tau tokens are
/// optional and any present ones are replaced by the synthesized sign.
/// orient_tails maps edge id -> tail vertex (tau(e,tail)=+1, head -1);
/// edges not listed default to tail = first endpoint.
SignedGraph parse_signed_graph(std::string_view text, SignMode mode = SignMode::Explicit,
                               const std::vector<std::pair<int, int>>& orient_tails = {});

std::string to_sg_text(const SignedGraph& g);

/// Incidence matrix A(G,tau): entry (i,j) = tau(e_j, v_i) if incident else 0.
IntMatrix incidence_matrix(const SignedGraph& g);

/// b(G): number of connected components that are bipartite, after deleting
/// the vertices in `deleted` (which may be empty).
int bipartite_count(const SignedGraph& g, const std::vector<int>& deleted = {});

std::vector<std::vector<int>> connected_components(const SignedGraph& g);

/// Per-component flag: does the component contain an odd closed walk?
/// Computed from BFS potentials over sigma; a component has one iff it is
/// not sigma-balanced.
std::vector<bool> component_has_odd_closed_walk(const SignedGraph& g);
bool has_odd_closed_walk(const SignedGraph& g);

/// Representatives of derived-sign classes: sigma fixed to +1 on a BFS
/// spanning tree, all 2^(m-n+1) choices on co-tree edges. Connected input.
std::vector<SignedGraph> sign_class_representatives(const SignedGraph& g);

/// Index (into sign_class_representatives order) of the class a given signed
/// graph falls in, by fundamental-cycle sigma products.
int sign_class_index(const SignedGraph& g);

/// An ear: path v0 e1 v1 ... et vt with t >= 2, all internal degrees 2,
/// and v0 vt not an edge of G.
struct VertexPath {
    std::vector<int> verts;
};

bool is_ear(const SignedGraph& g, const VertexPath& p, std::string* why = nullptr);
std::vector<VertexPath> find_ears(const SignedGraph& g);

struct EarContraction {
    SignedGraph graph;              // G/p; sign of the new edge defaulted to (+1,+1)
    int star_edge_id = 0;           // id of the added v0-vt edge in `graph`
    std::vector<int> vertex_map;    // old vertex -> new vertex (0 = deleted)
    std::vector<int> edge_map;      // old edge id -> new edge id (0 = deleted)
};

/// G/p: delete internal ear vertices, add a fresh edge v0-vt.
EarContraction contract_ear(const SignedGraph& g, const VertexPath& p);

/// Lift a sign through a contraction: given tau* on G/p, produce tau on G.
/// Off-ear edges copy tau*; tau(v0v1,v0)=tau*(e*,v0), tau(v_{t-1}v_t,vt)=tau*(e*,vt);
/// internal incidences get +1 forward / -1 backward.
SignedGraph lift_sign_contraction(const SignedGraph& g, const VertexPath& p,
                                  const EarContraction& c, const SignedGraph& g_star);

/// Project the sign of G onto G/q where q = p minus its last vertex (t >= 3).
/// The surviving last ear edge gets (-1)^k at v_{t-1}, where k is the number
/// of balanced sections of p in (G,tau).
EarContraction project_sign_subdivision(const SignedGraph& g, const VertexPath& p);

/// Subdivide edge `e` `times` times; new vertices get ids n+1.. in path order.
/// New edges carry tau = +1 at the fresh incidences and copy tau at u and v.
SignedGraph subdivide_edge(const SignedGraph& g, int e, int times = 1);

}  // namespace sgtoric
