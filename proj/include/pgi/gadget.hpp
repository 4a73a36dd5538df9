#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pgi/series.hpp"

namespace pgi {

// Tuple-flattened node label: a sequence of atoms. For trees built from a
// series over n elements, atoms 1..n are group elements (tree leaves), atoms
// above n encode internal cosets, and negative atoms are gadget symbols.
// Flattening makes label concatenation realize (x,(y,z)) = ((x,y),z) = (x,y,z).
using Label = std::vector<int>;

constexpr int kAtomGadgetRoot = 0;
constexpr int kAtomLeft = -1;
constexpr int kAtomRight = -2;
constexpr int kAtomEquals = -3;

// Coset atom for level i >= 1 with minimal representative rep, over a group
// of order n. Injective and disjoint from element atoms 1..n.
constexpr int coset_atom(int n, int level, int rep) { return n + level * (n + 1) + rep; }

struct TreeNode {
  int id;      // equals the node's index
  int parent;  // -1 for the root
  int depth;
  Label label;
};

class RootedTree {
 public:
  explicit RootedTree(std::vector<TreeNode> nodes);

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(int id) const { return nodes_[id]; }
  int size() const { return static_cast<int>(nodes_.size()); }
  int root() const { return root_; }
  const std::vector<int>& children(int id) const { return children_[id]; }
  bool is_leaf(int id) const { return children_[id].empty(); }
  std::vector<int> leaf_ids() const;
  int height() const;

 private:
  std::vector<TreeNode> nodes_;
  std::vector<std::vector<int>> children_;
  int root_ = -1;
};

// One node per coset in U_i G/G_i; root G, leaves the singletons (= group
// elements); edges by coset containment.
RootedTree build_coset_tree(const CompositionSeries& s);

// Glues a copy of t2 onto every leaf of t1, identifying the copy's root with
// the leaf. New vertices are labeled by concatenation (tuple flattening).
RootedTree leaf_product(const RootedTree& t1, const RootedTree& t2);

// The multiplication gadget: a root with three children colored left, right,
// equals.
RootedTree build_gadget_M();

enum class VertexColor : std::uint8_t { Internal = 0, Left = 1, Right = 2, Equals = 3 };
enum class EdgeKind : std::uint8_t { Tree = 0, Cross = 1 };

struct ColoredGraph {
  int vertex_count = 0;
  std::vector<VertexColor> colors;          // size vertex_count
  std::vector<std::pair<int, int>> edges;   // u < v, sorted, unique, 0-based
  std::vector<EdgeKind> edge_kinds;         // parallel to edges; diagnostic only; may be empty
  std::vector<Label> provenance;            // construction labels; may be empty

  // Normalizes/validates: simple graph, endpoints in range, edges sorted.
  static ColoredGraph make(int vertex_count, std::vector<VertexColor> colors,
                           std::vector<std::pair<int, int>> edges,
                           std::vector<EdgeKind> kinds = {},
                           std::vector<Label> provenance = {});

  int edge_count() const { return static_cast<int>(edges.size()); }
};

// X(S): T(S) (.) T(S) (.) M as tree edges plus, for every ordered pair
// (x, y), the cross path (x,y,left) - (y,x,right) - (xy,y,equals). Vertex
// numbering is deterministic: tree vertices by (depth, label), then gadget
// leaves by (x, y, symbol).
ColoredGraph build_X(const CompositionSeries& s);

// X(phi) = phi (.) phi (.) id_M as an explicit vertex bijection from X(s) to
// X(s2), verified color- and edge-preserving before return. Throws
// NotSeriesIso when phi fails to map each G_i onto H_i.
std::vector<int> map_series_iso_to_graph_iso(const IsoMap& phi, const CompositionSeries& s,
                                             const CompositionSeries& s2);

// Relabels vertices (perm[v] = new id). Provenance and edge kinds are
// dropped: the result carries structure only.
ColoredGraph permute_graph(const ColoredGraph& g, const std::vector<int>& perm);

// Text format: "p cgraph V E", V lines "n <vertex> <color-id>", E lines
// "e <u> <v>" with u < v, vertices 1-based, lines sorted. Bit-exact.
void write_colored_graph(std::ostream& out, const ColoredGraph& g);
std::string colored_graph_text(const ColoredGraph& g);
ColoredGraph read_colored_graph(std::istream& in);

}  // namespace pgi
