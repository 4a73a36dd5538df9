#include "pgi/genenum.hpp"

#include <algorithm>
#include <numeric>

namespace pgi {

namespace {

// BFS word assignment; returns false when gens do not generate.
bool try_word_ranks(const GroupTable& g, const OrderedGenSeq& gens, WordRank& out) {
  const int n = g.order();
  out.rank.assign(n + 1, 0);
  out.by_rank.assign(n + 1, 0);
  out.pred.assign(n + 1, 0);
  out.letter.assign(n + 1, -1);

  int next_rank = 0;
  std::vector<int> queue;
  queue.reserve(n);
  auto visit = [&](int x, int from, int gi) {
    if (out.rank[x]) return;
    out.rank[x] = ++next_rank;
    out.by_rank[next_rank] = x;
    out.pred[x] = from;
    out.letter[x] = gi;
    queue.push_back(x);
  };
  visit(g.identity(), 0, -1);
  const int k = static_cast<int>(gens.gens.size());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int gi = 0; gi < k; ++gi) visit(g.mul(x, gens.gens[gi]), x, gi);
  }
  return next_rank == n;
}

void check_gen_seq(const GroupTable& g, const OrderedGenSeq& gens) {
  std::vector<char> seen(g.order() + 1, 0);
  for (int x : gens.gens) {
    if (x < 1 || x > g.order()) throw Error(ErrKind::BadInput, "generator id out of range");
    if (seen[x]) throw Error(ErrKind::BadInput, "duplicate generator");
    seen[x] = 1;
  }
}

bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - (k - 1 - i)) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> WordRank::word(int x) const {
  std::vector<int> w;
  while (letter[x] != -1) {
    w.push_back(letter[x]);
    x = pred[x];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

WordRank word_ranks(const GroupTable& g, const OrderedGenSeq& gens) {
  check_gen_seq(g, gens);
  WordRank out;
  if (!try_word_ranks(g, gens, out))
    throw Error(ErrKind::NotGenerating, "sequence generates a proper subgroup");
  return out;
}

GroupTable canonical_table(const GroupTable& g, const OrderedGenSeq& gens) {
  WordRank wr = word_ranks(g, gens);
  const int n = g.order();
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      raw[wr.rank[x] - 1][wr.rank[y] - 1] = wr.rank[g.mul(x, y)];
  return GroupTable::validate(raw);
}

OrderedGenSeq minimal_generating_sequence(const GroupTable& g) {
  const int n = g.order();
  if (n == 1) return OrderedGenSeq{{}};
  for (int k = 1; k <= n; ++k) {
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 1);
    do {
      if (subgroup_generated(g, c).size() == n) return OrderedGenSeq{c};
    } while (next_combination(c, n));
  }
  throw Error(ErrKind::InternalContradiction, "group not generated by itself");
}

std::vector<OrderedGenSeq> generating_sequences_of_length(const GroupTable& g, int k) {
  const int n = g.order();
  std::vector<OrderedGenSeq> out;
  if (k == 0) {
    if (n == 1) out.push_back(OrderedGenSeq{{}});
    return out;
  }
  std::vector<int> tuple(k, 0);
  std::vector<char> used(n + 1, 0);
  WordRank scratch;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      OrderedGenSeq seq{tuple};
      if (try_word_ranks(g, seq, scratch)) out.push_back(std::move(seq));
      return;
    }
    for (int x = 1; x <= n; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      tuple[pos] = x;
      self(self, pos + 1);
      used[x] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

std::optional<IsoMap> gen_enum_iso(const GroupTable& g, const GroupTable& h) {
  const int n = g.order();
  if (h.order() != n) return std::nullopt;
  if (n == 1) {
    IsoMap phi{{0, h.identity()}};
    return phi;
  }
  OrderedGenSeq gens = minimal_generating_sequence(g);
  const int k = static_cast<int>(gens.gens.size());
  WordRank wr = word_ranks(g, gens);
  std::vector<int> gen_order(k);
  for (int i = 0; i < k; ++i) gen_order[i] = g.element_order(gens.gens[i]);
  std::vector<int> h_ord(n + 1);
  for (int y = 1; y <= n; ++y) h_ord[y] = h.element_order(y);

  std::vector<int> images(k, 1);
  for (;;) {
    bool order_match = true;
    for (int i = 0; i < k && order_match; ++i)
      order_match = h_ord[images[i]] == gen_order[i];
    if (order_match) {
      // Extend along BFS words: phi(x) = phi(pred(x)) * image(letter(x)).
      IsoMap phi{std::vector<int>(n + 1, 0)};
      phi.forward[g.identity()] = h.identity();
      std::vector<char> hit(n + 1, 0);
      hit[h.identity()] = 1;
      bool ok = true;
      for (int r = 2; r <= n && ok; ++r) {
        int x = wr.by_rank[r];
        int y = h.mul(phi.forward[wr.pred[x]], images[wr.letter[x]]);
        if (hit[y])
          ok = false;  // not injective
        else {
          phi.forward[x] = y;
          hit[y] = 1;
        }
      }
      for (int a = 1; a <= n && ok; ++a)
        for (int b = 1; b <= n && ok; ++b)
          ok = phi.forward[g.mul(a, b)] == h.mul(phi.forward[a], phi.forward[b]);
      if (ok) {
        if (!is_isomorphism(g, h, phi))
          throw Error(ErrKind::InternalContradiction, "gen_enum_iso verification failed");
        return phi;
      }
    }
    // Next image tuple in lexicographic order over H^k.
    int i = k - 1;
    while (i >= 0 && images[i] == n) {
      images[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++images[i];
  }
  return std::nullopt;
}

GroupTable gen_enum_canon(const GroupTable& g) {
  const int n = g.order();
  if (n == 1) return GroupTable::validate({{1}});
  int r = rank(g);
  std::optional<GroupTable> best;
  for (const OrderedGenSeq& seq : generating_sequences_of_length(g, r)) {
    GroupTable m = canonical_table(g, seq);
    if (!best || m.flat() < best->flat()) best = std::move(m);
  }
  if (!best) throw Error(ErrKind::InternalContradiction, "no generating sequence found");
  return *best;
}

}  // namespace pgi
