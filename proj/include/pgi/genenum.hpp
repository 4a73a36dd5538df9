#pragma once

#include <optional>
#include <vector>

#include "pgi/group.hpp"

namespace pgi {

// Ordered generating sequence; entries distinct element ids.
struct OrderedGenSeq {
  std::vector<int> gens;
};

// Word order <_g realized by breadth-first traversal of the Cayley graph from
// the identity, scanning elements in rank order and generators in index
// order. Minimal words are stored as BFS-tree back pointers.
struct WordRank {
  std::vector<int> rank;     // rank[x] in 1..n; slot 0 unused
  std::vector<int> by_rank;  // by_rank[r] = element of rank r; slot 0 unused
  std::vector<int> pred;     // predecessor element on the minimal word; 0 at identity
  std::vector<int> letter;   // generator index appended (0-based); -1 at identity

  std::vector<int> word(int x) const;  // generator indices, identity -> empty
};

// Throws NotGenerating when the sequence reaches fewer than n elements.
WordRank word_ranks(const GroupTable& g, const OrderedGenSeq& gens);

// M_g: the table relabeled by rank under <_g, validated before return.
GroupTable canonical_table(const GroupTable& g, const OrderedGenSeq& gens);

// First (lexicographically) minimal generating sequence, found by brute force
// over subsets of size 1, 2, ...
OrderedGenSeq minimal_generating_sequence(const GroupTable& g);

// All ordered generating sequences of length k with distinct entries, in
// lexicographic order.
std::vector<OrderedGenSeq> generating_sequences_of_length(const GroupTable& g, int k);

// Generator enumeration: images of a minimal generating sequence, extended by
// word evaluation and verified.
std::optional<IsoMap> gen_enum_iso(const GroupTable& g, const GroupTable& h);

// Lexicographically least M_g over all ordered generating sequences of length
// rank(G).
GroupTable gen_enum_canon(const GroupTable& g);

}  // namespace pgi
