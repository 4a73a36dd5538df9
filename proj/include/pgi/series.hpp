#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgi/group.hpp"

namespace pgi {

// Tower {identity} = G_0 < G_1 < ... < G_m = G, every step normal of prime
// index. chain.front() is trivial, chain.back() the whole group.
struct CompositionSeries {
  const GroupTable* group;
  std::vector<Subgroup> chain;

  int length() const { return static_cast<int>(chain.size()) - 1; }
};

// Checks all CompositionSeries invariants from scratch; never trusts how the
// chain was built. On failure fills *why (when given) with the first problem.
bool is_valid_composition_series(const GroupTable& g,
                                 const std::vector<Subgroup>& chain,
                                 std::string* why = nullptr);

struct SeriesEnumStats {
  // Complete chains generated by the extension procedure, counted before
  // deduplication.
  std::uint64_t paths_explored = 0;
};

// Exhaustive, duplicate-free, deterministically ordered list of all
// composition series. Chain extension: grow the head G_k by <G_k u {x}> over
// minimal representatives x of the nontrivial cosets of G_k, keeping
// prime-index normal extensions only.
std::vector<CompositionSeries> enumerate_composition_series(
    const GroupTable& g, SeriesEnumStats* stats = nullptr);

// prod_{k=0}^{floor(log_p n)-1} floor(n / p^k) with p the smallest prime
// divisor of n. Every factor is exact for prime-power n; floor is the stated
// convention otherwise. Throws Overflow past uint64 range.
std::uint64_t candidate_chain_bound(int n, int p);
std::uint64_t candidate_chain_bound(const GroupTable& g);

// "{1} < {1,3} < {1,2,3,4}" with sorted element ids.
std::string series_to_string(const CompositionSeries& s);

}  // namespace pgi
