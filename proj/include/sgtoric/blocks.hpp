#pragma once

#include <vector>

#include "sgtoric/sgraph.hpp"

namespace sgtoric {

struct Block {
    std::vector<int> vertices;   // sorted
    std::vector<int> edge_ids;   // for SignedGraph: edge ids; for multigraphs: edge indices
    bool is_edge = false;        // single-edge block (bridge)
    bool bipartite = true;
};

struct BlockTree {
    std::vector<Block> blocks;
    std::vector<int> cut_vertices;              // sorted
    std::vector<std::vector<int>> block_cuts;   // per block: its cut vertices
    std::vector<int> component_of_block;        // connected component index per block

    std::vector<int> nonedge_blocks_in_component(int comp) const;
    bool is_cut_vertex(int v) const;
    /// The cut vertex of blocks[b] nearest to blocks[b2] along the block-cut tree.
    int cut_vertex_towards(int b, int b2) const;
};

/// Biconnected components (blocks are maximal 2-connected subgraphs and bridges).
BlockTree block_decomposition(const SignedGraph& g);
BlockTree block_decomposition(const SignedMultigraph& g);

/// Extract a block as a standalone SignedGraph with dense relabeling.
struct Subgraph {
    SignedGraph graph;
    std::vector<int> vertex_of_new;  // new vertex -> old vertex (index 1..)
    std::vector<int> edge_of_new;    // new edge id -> old edge id (index 1..)
};
Subgraph block_subgraph(const SignedGraph& g, const Block& b);

/// Induced subgraph on a vertex set.
Subgraph induced_subgraph(const SignedGraph& g, const std::vector<int>& verts);

bool is_biconnected(const SignedGraph& g);

}  // namespace sgtoric
