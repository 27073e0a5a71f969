#pragma once

#include <vector>

#include "ramsey/ellentuck.hpp"  // Rel
#include "ramsey/error.hpp"
#include "ramsey/space_id.hpp"

namespace ramsey {

/// Block i of the dimension-n hypercube generating sequence: all n-tuples
/// over {0..side-1}, side = i+1, with the n coordinatewise linear orders.
struct GridBlock {
  int dim = 2;
  int side = 1;

  long long point_count() const;
  std::vector<std::vector<int>> points() const;  // lex order
};

/// Block i of the clique-free generating sequence: i+1 vertices, parts
/// interleaved along the vertex order (v mod (bound-1)), complete between
/// parts. Never contains a clique of size `bound`.
struct GraphBlock {
  int clique_bound = 3;
  int vertices = 1;

  bool has_edge(int u, int v) const;
};

GridBlock grid_block(int dim, int i);
GraphBlock graph_block(int clique_bound, int i);

/// Canonical class of an unordered pair inside one block.
struct GridPairClass {
  std::vector<Rel> rels;  // per coordinate, lex-smaller point first

  std::string key() const;
  friend bool operator==(const GridPairClass&, const GridPairClass&) = default;
};

enum class GraphPairClass { edge, nonedge };

GridPairClass grid_pair_class(const GridBlock& block, const std::vector<int>& a,
                              const std::vector<int>& b);
GraphPairClass graph_pair_class(const GraphBlock& block, int u, int v);

/// Distinct pair classes realized in a sufficiently large block, stabilized
/// over the block index (two quiet increments stop the growth).
long long count_pair_classes(const SpaceId& space, int max_block_index = 24);

struct EmbeddedBlock {
  int location = 0;  // index of the host block in the generating sequence
  // Grid: selected coordinate values per axis; graph: selected vertices.
  std::vector<std::vector<int>> axis_values;
  std::vector<int> vertex_set;
};

/// The approximation built from an increasing index set B: entry j is the
/// order-initial copy of block j inside block B[j].
std::vector<EmbeddedBlock> embed_subset(const SpaceId& space,
                                        const std::vector<int>& B);

/// True iff every block of `inner` is blockwise contained in a block of
/// `outer` at the same location (the nested-copy property).
bool blockwise_contained(const std::vector<EmbeddedBlock>& inner,
                         const std::vector<EmbeddedBlock>& outer);

/// Degree for pairs by direct enumeration over a two-block approximation:
/// within-block classes plus the single split class.
long long degree_bruteforce_pairs(const SpaceId& space);

}  // namespace ramsey
