#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgi/gadget.hpp"

namespace pgi {

// Ordered partition of the vertex set; class ids contiguous from 0. A stable
// coloring is equitable: all vertices of a class see the same multiset of
// neighbor classes.
struct Coloring {
  std::vector<int> class_of;
  int num_classes = 0;
};

// One class per declared vertex color present in the graph.
Coloring initial_coloring(const ColoredGraph& g);

// Coarsest equitable refinement of init; class ids renumbered by
// (old class, sorted neighbor-class signature). Idempotent.
Coloring color_refine(const ColoredGraph& g, const Coloring& init);

inline bool is_discrete(const Coloring& c) {
  return c.num_classes == static_cast<int>(c.class_of.size());
}

struct CanonicalCertificate {
  std::vector<int> position;            // position[v] = canonical index of v
  std::vector<std::uint8_t> encoding;   // invariant byte string
  std::string hex() const;
};

// Encoding layout: u32be vertex count, per-vertex declared color byte in the
// given order, u32be edge count, relabeled edges (u32be, u32be) sorted.
std::vector<std::uint8_t> encode_with_order(const ColoredGraph& g,
                                            const std::vector<int>& position);

// Exact canonical form via refinement + individualization backtracking with
// automorphism pruning; the certificate is the lexicographically least
// encoding over the leaves of the search tree.
CanonicalCertificate canonical_form(const ColoredGraph& g);

// The graph relabeled into certificate order (structure only: provenance and
// edge kinds dropped).
ColoredGraph apply_canonical_order(const ColoredGraph& g, const CanonicalCertificate& cert);

bool is_graph_isomorphism(const ColoredGraph& g1, const ColoredGraph& g2,
                          const std::vector<int>& map);

// Matches canonical orders when the encodings agree; verified before return.
std::optional<std::vector<int>> isomorphism_from_certificates(const ColoredGraph& g1,
                                                              const CanonicalCertificate& c1,
                                                              const ColoredGraph& g2,
                                                              const CanonicalCertificate& c2);

// Some color- and edge-preserving bijection, or nullopt. Consistent with
// canonical_form equality by construction.
std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& g1, const ColoredGraph& g2);

// Isomorphism-invariant summary of the refined partition (class sizes,
// colors, quotient adjacency). A mismatch settles non-isomorphism without a
// search; used as a prefilter.
std::vector<int> equitable_signature(const ColoredGraph& g);

}  // namespace pgi
