#include "pgi/series.hpp"

#include <algorithm>
#include <sstream>

namespace pgi {

namespace {

bool is_prime(int k) {
  if (k < 2) return false;
  for (int d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

}  // namespace

bool is_valid_composition_series(const GroupTable& g,
                                 const std::vector<Subgroup>& chain,
                                 std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (chain.empty()) return fail("empty chain");
  if (chain.front().elements() != std::vector<int>{g.identity()})
    return fail("chain does not start at the trivial subgroup");
  if (chain.back().size() != g.order()) return fail("chain does not end at the full group");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const Subgroup& a = chain[i];
    const Subgroup& b = chain[i + 1];
    for (int x : a.elements())
      if (!b.contains(x)) return fail("level " + std::to_string(i) + " not contained in next");
    if (a.size() == b.size()) return fail("chain not strictly increasing");
    if (b.size() % a.size() != 0) return fail("index not integral");
    if (!is_prime(b.size() / a.size()))
      return fail("index " + std::to_string(b.size() / a.size()) + " not prime at level " +
                  std::to_string(i));
    if (!is_normal(g, a, b)) return fail("level " + std::to_string(i) + " not normal in next");
  }
  return true;
}

std::vector<CompositionSeries> enumerate_composition_series(const GroupTable& g,
                                                            SeriesEnumStats* stats) {
  const int n = g.order();
  std::vector<std::vector<std::vector<int>>> found;  // chains as element lists
  std::uint64_t paths = 0;

  std::vector<Subgroup> chain;
  chain.push_back(Subgroup(g, {g.identity()}));

  // Depth <= log2 n <= 64 by the prime-index step, so plain recursion is fine.
  auto extend = [&](auto&& self) -> void {
    Subgroup top = chain.back();  // by value: growing the chain reallocates
    if (top.size() == n) {
      ++paths;
      std::vector<std::vector<int>> key;
      key.reserve(chain.size());
      for (const Subgroup& s : chain) key.push_back(s.elements());
      found.push_back(std::move(key));
      return;
    }
    CosetPartition cos = left_cosets(g, top);
    for (const std::vector<int>& coset : cos.cosets) {
      int rep = coset.front();
      if (top.contains(rep)) continue;
      std::vector<int> seed = top.elements();
      seed.push_back(rep);
      Subgroup cand = subgroup_generated(g, seed);
      if (!is_prime(cand.size() / top.size())) continue;
      if (!is_normal(g, top, cand)) continue;
      chain.push_back(std::move(cand));
      self(self);
      chain.pop_back();
    }
  };
  extend(extend);

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  std::vector<CompositionSeries> out;
  out.reserve(found.size());
  for (const auto& key : found) {
    CompositionSeries s{&g, {}};
    s.chain.reserve(key.size());
    for (const auto& elems : key) s.chain.push_back(Subgroup(g, elems));
    out.push_back(std::move(s));
  }
  if (stats) stats->paths_explored = paths;
  return out;
}

std::uint64_t candidate_chain_bound(int n, int p) {
  if (n < 2 || p < 2) throw Error(ErrKind::BadParameters, "need n >= 2 and p >= 2");
  int levels = 0;
  {
    long long pw = 1;
    while (pw * p <= n) {
      pw *= p;
      ++levels;
    }
  }
  std::uint64_t bound = 1;
  std::uint64_t pk = 1;
  for (int k = 0; k < levels; ++k) {
    std::uint64_t factor = static_cast<std::uint64_t>(n) / pk;
    std::uint64_t next;
    if (__builtin_mul_overflow(bound, factor, &next))
      throw Error(ErrKind::Overflow, "chain bound exceeds 64 bits");
    bound = next;
    pk *= static_cast<std::uint64_t>(p);
  }
  return bound;
}

std::uint64_t candidate_chain_bound(const GroupTable& g) {
  GroupProfile pr = profile(g);
  return candidate_chain_bound(pr.order, pr.smallest_prime);
}

std::string series_to_string(const CompositionSeries& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.chain.size(); ++i) {
    if (i) os << " < ";
    os << '{';
    const auto& e = s.chain[i].elements();
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j) os << ',';
      os << e[j];
    }
    os << '}';
  }
  return os.str();
}

}  // namespace pgi
