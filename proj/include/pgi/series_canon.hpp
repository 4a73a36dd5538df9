#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgi/graph_canon.hpp"

namespace pgi {

struct SeriesIso {
  IsoMap phi;
  std::vector<bool> level_check;  // phi[G_i] == H_i, per level, all true
};

// Restriction of an explicit graph isomorphism theta : X(s) -> X(s2) to the
// group-element vertices, verified multiplicative and level-preserving.
// Throws InternalContradiction if the restriction fails verification.
// x1 and x2 must be the provenance-carrying graphs built from s and s2.
SeriesIso series_iso_from_graph_iso(const CompositionSeries& s, const ColoredGraph& x1,
                                    const CompositionSeries& s2, const ColoredGraph& x2,
                                    const std::vector<int>& theta);

// Builds X(s), X(s2), finds a colored-graph isomorphism, restricts it.
std::optional<SeriesIso> series_isomorphic(const CompositionSeries& s,
                                           const CompositionSeries& s2);

struct CanonicalSeries {
  GroupTable group_table;               // relabeled multiplication table
  std::vector<std::vector<int>> chain;  // ascending element lists over relabeled ids
  CanonicalCertificate source_certificate;

  // Group file text followed by one chain line ("{1} < ... < {...}").
  // The byte-comparable payload.
  std::string to_text() const;
};

// Y: reads the group and chain back out of a graph isomorphic to some X(S),
// using structure only (no provenance). The input's vertex order is taken as
// the certificate order; elements are numbered 1..n along it. Throws
// MalformedGraph when the cone/gadget structure is inconsistent.
CanonicalSeries reconstruct_series(const ColoredGraph& a);

// Y o Can_Graph o X.
CanonicalSeries canon_series(const CompositionSeries& s);

}  // namespace pgi
