#include "pgi/graph_canon.hpp"

#include <algorithm>
#include <set>

namespace pgi {

namespace {

struct Csr {
  std::vector<int> start;  // size V+1
  std::vector<int> adj;    // size 2E
};

Csr build_csr(const ColoredGraph& g) {
  Csr c;
  c.start.assign(g.vertex_count + 1, 0);
  for (auto [u, v] : g.edges) {
    ++c.start[u + 1];
    ++c.start[v + 1];
  }
  for (int v = 0; v < g.vertex_count; ++v) c.start[v + 1] += c.start[v];
  c.adj.resize(g.edges.size() * 2);
  std::vector<int> fill = c.start;
  for (auto [u, v] : g.edges) {
    c.adj[fill[u]++] = v;
    c.adj[fill[v]++] = u;
  }
  return c;
}

Coloring refine_with_csr(const ColoredGraph& g, const Csr& csr, const Coloring& init) {
  const int n = g.vertex_count;
  Coloring cur = init;
  cur.class_of.resize(n);
  if (n == 0) return cur;

  std::vector<int> sig(csr.adj.size());
  std::vector<int> order(n);
  std::vector<int> next(n);
  for (;;) {
    for (int v = 0; v < n; ++v) {
      for (int i = csr.start[v]; i < csr.start[v + 1]; ++i)
        sig[i] = cur.class_of[csr.adj[i]];
      std::sort(sig.begin() + csr.start[v], sig.begin() + csr.start[v + 1]);
    }
    for (int v = 0; v < n; ++v) order[v] = v;
    auto key_less = [&](int a, int b) {
      if (cur.class_of[a] != cur.class_of[b]) return cur.class_of[a] < cur.class_of[b];
      return std::lexicographical_compare(
          sig.begin() + csr.start[a], sig.begin() + csr.start[a + 1],
          sig.begin() + csr.start[b], sig.begin() + csr.start[b + 1]);
    };
    auto key_equal = [&](int a, int b) {
      return cur.class_of[a] == cur.class_of[b] &&
             csr.start[a + 1] - csr.start[a] == csr.start[b + 1] - csr.start[b] &&
             std::equal(sig.begin() + csr.start[a], sig.begin() + csr.start[a + 1],
                        sig.begin() + csr.start[b]);
    };
    std::sort(order.begin(), order.end(), key_less);
    int classes = 0;
    next[order[0]] = 0;
    for (int i = 1; i < n; ++i) {
      if (!key_equal(order[i - 1], order[i])) ++classes;
      next[order[i]] = classes;
    }
    ++classes;
    if (next == cur.class_of) {
      cur.num_classes = classes;
      return cur;
    }
    cur.class_of = next;
    cur.num_classes = classes;
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { reset(); }
  void reset() {
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

struct CanonSearch {
  CanonSearch(const ColoredGraph& graph, const Csr& adjacency, int vertices)
      : g(graph), csr(adjacency), n(vertices) {}

  const ColoredGraph& g;
  const Csr& csr;
  int n;

  std::vector<std::uint8_t> best_enc;
  std::vector<int> best_pos;
  bool have_best = false;
  std::vector<std::uint8_t> first_enc;
  std::vector<int> first_pos;
  bool have_first = false;

  static constexpr std::size_t kMaxAutos = 64;
  std::vector<std::vector<int>> autos;
  std::set<std::vector<int>> auto_keys;

  void record_automorphism(const std::vector<int>& pos_a, const std::vector<int>& pos_b) {
    if (autos.size() >= kMaxAutos) return;
    std::vector<int> inv_b(n);
    for (int v = 0; v < n; ++v) inv_b[pos_b[v]] = v;
    std::vector<int> sigma(n);
    bool identity = true;
    for (int v = 0; v < n; ++v) {
      sigma[v] = inv_b[pos_a[v]];
      identity = identity && sigma[v] == v;
    }
    if (identity) return;
    if (!auto_keys.insert(sigma).second) return;
    // Equal encodings imply sigma is an automorphism; pruning soundness rides
    // on it, so check anyway.
    if (!is_graph_isomorphism(g, g, sigma))
      throw Error(ErrKind::InternalContradiction, "leaf collision is not an automorphism");
    autos.push_back(std::move(sigma));
  }

  void leaf(const Coloring& c) {
    const std::vector<int>& pos = c.class_of;  // discrete: class = position
    std::vector<std::uint8_t> enc = encode_with_order(g, pos);
    if (!have_first) {
      first_enc = enc;
      first_pos = pos;
      have_first = true;
    } else if (enc == first_enc) {
      record_automorphism(pos, first_pos);
    }
    if (!have_best || enc < best_enc) {
      best_enc = std::move(enc);
      best_pos = pos;
      have_best = true;
    } else if (enc == best_enc && best_pos != pos) {
      record_automorphism(pos, best_pos);
    }
  }

  void descend(const Coloring& c, std::vector<int>& path) {
    if (c.num_classes == n) {
      leaf(c);
      return;
    }
    // Target cell: smallest non-singleton class, ties to the smallest id.
    std::vector<int> size_of(c.num_classes, 0);
    for (int v = 0; v < n; ++v) ++size_of[c.class_of[v]];
    int target = -1;
    for (int cl = 0; cl < c.num_classes; ++cl)
      if (size_of[cl] > 1 && (target == -1 || size_of[cl] < size_of[target])) target = cl;
    std::vector<int> members;
    members.reserve(size_of[target]);
    for (int v = 0; v < n; ++v)
      if (c.class_of[v] == target) members.push_back(v);

    UnionFind uf(n);
    std::size_t built_with = 0;
    auto rebuild = [&] {
      uf.reset();
      for (const auto& a : autos) {
        bool fixes_path = true;
        for (int p : path)
          if (a[p] != p) {
            fixes_path = false;
            break;
          }
        if (!fixes_path) continue;
        for (int v = 0; v < n; ++v) uf.unite(v, a[v]);
      }
      built_with = autos.size();
    };
    rebuild();

    std::vector<int> tried;
    Coloring child;
    child.class_of.resize(n);
    for (int v : members) {
      if (built_with != autos.size()) rebuild();
      bool pruned = false;
      for (int t : tried)
        if (uf.find(t) == uf.find(v)) {
          pruned = true;
          break;
        }
      if (pruned) continue;
      tried.push_back(v);
      for (int u = 0; u < n; ++u)
        child.class_of[u] = 2 * c.class_of[u] + (u == v ? 0 : 1);
      Coloring refined = refine_with_csr(g, csr, child);
      path.push_back(v);
      descend(refined, path);
      path.pop_back();
    }
  }
};

void push_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

// Per-class summary of an equitable coloring: (size, declared color,
// sorted (neighbor class, count) list). Isomorphism-invariant because class
// ids are canonically renumbered.
std::vector<int> quotient_signature(const ColoredGraph& g, const Coloring& c) {
  std::vector<int> rep(c.num_classes, -1);
  std::vector<int> size_of(c.num_classes, 0);
  for (int v = 0; v < g.vertex_count; ++v) {
    if (rep[c.class_of[v]] == -1) rep[c.class_of[v]] = v;
    ++size_of[c.class_of[v]];
  }
  Csr csr = build_csr(g);
  std::vector<int> sig;
  for (int cl = 0; cl < c.num_classes; ++cl) {
    sig.push_back(size_of[cl]);
    sig.push_back(static_cast<int>(g.colors[rep[cl]]));
    std::vector<int> neigh;
    int v = rep[cl];
    for (int i = csr.start[v]; i < csr.start[v + 1]; ++i)
      neigh.push_back(c.class_of[csr.adj[i]]);
    std::sort(neigh.begin(), neigh.end());
    sig.push_back(static_cast<int>(neigh.size()));
    sig.insert(sig.end(), neigh.begin(), neigh.end());
  }
  return sig;
}

}  // namespace

Coloring initial_coloring(const ColoredGraph& g) {
  std::vector<int> present;
  for (VertexColor c : g.colors) present.push_back(static_cast<int>(c));
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  Coloring c;
  c.class_of.resize(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) {
    int col = static_cast<int>(g.colors[v]);
    c.class_of[v] = static_cast<int>(
        std::lower_bound(present.begin(), present.end(), col) - present.begin());
  }
  c.num_classes = static_cast<int>(present.size());
  return c;
}

Coloring color_refine(const ColoredGraph& g, const Coloring& init) {
  if (static_cast<int>(init.class_of.size()) != g.vertex_count)
    throw Error(ErrKind::BadInput, "coloring size mismatch");
  Csr csr = build_csr(g);
  return refine_with_csr(g, csr, init);
}

std::vector<std::uint8_t> encode_with_order(const ColoredGraph& g,
                                            const std::vector<int>& position) {
  const int n = g.vertex_count;
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[position[v]] = v;
  std::vector<std::uint8_t> out;
  out.reserve(4 + n + 4 + g.edges.size() * 8);
  push_u32(out, static_cast<std::uint32_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(static_cast<std::uint8_t>(g.colors[inv[i]]));
  std::vector<std::pair<int, int>> mapped;
  mapped.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    int a = position[u], b = position[v];
    if (a > b) std::swap(a, b);
    mapped.emplace_back(a, b);
  }
  std::sort(mapped.begin(), mapped.end());
  push_u32(out, static_cast<std::uint32_t>(mapped.size()));
  for (auto [a, b] : mapped) {
    push_u32(out, static_cast<std::uint32_t>(a));
    push_u32(out, static_cast<std::uint32_t>(b));
  }
  return out;
}

std::string CanonicalCertificate::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(encoding.size() * 2);
  for (std::uint8_t b : encoding) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xf]);
  }
  return s;
}

CanonicalCertificate canonical_form(const ColoredGraph& g) {
  if (g.vertex_count == 0) {
    std::vector<std::uint8_t> enc;
    push_u32(enc, 0);
    push_u32(enc, 0);
    return {{}, std::move(enc)};
  }
  Csr csr = build_csr(g);
  Coloring c0 = refine_with_csr(g, csr, initial_coloring(g));
  CanonSearch search(g, csr, g.vertex_count);
  std::vector<int> path;
  search.descend(c0, path);
  return {std::move(search.best_pos), std::move(search.best_enc)};
}

ColoredGraph apply_canonical_order(const ColoredGraph& g, const CanonicalCertificate& cert) {
  return permute_graph(g, cert.position);
}

bool is_graph_isomorphism(const ColoredGraph& g1, const ColoredGraph& g2,
                          const std::vector<int>& map) {
  if (g1.vertex_count != g2.vertex_count) return false;
  if (static_cast<int>(map.size()) != g1.vertex_count) return false;
  if (g1.edges.size() != g2.edges.size()) return false;
  std::vector<char> hit(g2.vertex_count, 0);
  for (int v = 0; v < g1.vertex_count; ++v) {
    int w = map[v];
    if (w < 0 || w >= g2.vertex_count || hit[w]) return false;
    hit[w] = 1;
    if (g1.colors[v] != g2.colors[w]) return false;
  }
  std::set<std::pair<int, int>> e2(g2.edges.begin(), g2.edges.end());
  for (auto [u, v] : g1.edges) {
    int a = map[u], b = map[v];
    if (a > b) std::swap(a, b);
    if (!e2.count({a, b})) return false;
  }
  return true;
}

std::optional<std::vector<int>> isomorphism_from_certificates(const ColoredGraph& g1,
                                                              const CanonicalCertificate& c1,
                                                              const ColoredGraph& g2,
                                                              const CanonicalCertificate& c2) {
  if (c1.encoding != c2.encoding) return std::nullopt;
  std::vector<int> inv2(g2.vertex_count);
  for (int v = 0; v < g2.vertex_count; ++v) inv2[c2.position[v]] = v;
  std::vector<int> map(g1.vertex_count);
  for (int v = 0; v < g1.vertex_count; ++v) map[v] = inv2[c1.position[v]];
  if (!is_graph_isomorphism(g1, g2, map))
    throw Error(ErrKind::InternalContradiction,
                "equal certificates produced a non-isomorphism");
  return map;
}

std::vector<int> equitable_signature(const ColoredGraph& g) {
  if (g.vertex_count == 0) return {};
  Coloring r = color_refine(g, initial_coloring(g));
  return quotient_signature(g, r);
}

std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& g1,
                                                 const ColoredGraph& g2) {
  if (g1.vertex_count != g2.vertex_count || g1.edges.size() != g2.edges.size())
    return std::nullopt;
  {
    auto a = g1.colors;
    auto b = g2.colors;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  if (g1.vertex_count == 0) return std::vector<int>{};
  if (equitable_signature(g1) != equitable_signature(g2)) return std::nullopt;
  CanonicalCertificate c1 = canonical_form(g1);
  CanonicalCertificate c2 = canonical_form(g2);
  return isomorphism_from_certificates(g1, c1, g2, c2);
}

}  // namespace pgi
