#include "pgi/series_canon.hpp"

#include <algorithm>
#include <sstream>

namespace pgi {

SeriesIso series_iso_from_graph_iso(const CompositionSeries& s, const ColoredGraph& x1,
                                    const CompositionSeries& s2, const ColoredGraph& x2,
                                    const std::vector<int>& theta) {
  const GroupTable& g = *s.group;
  const GroupTable& h = *s2.group;
  const int n = g.order();
  if (x1.provenance.empty() || x2.provenance.empty())
    throw Error(ErrKind::BadInput, "restriction needs provenance-carrying graphs");

  auto element_of = [n](const Label& l) {
    return l.size() == 1 && l[0] >= 1 && l[0] <= n ? l[0] : 0;
  };
  std::vector<int> vertex_of_g(n + 1, -1);
  for (int v = 0; v < x1.vertex_count; ++v)
    if (int x = element_of(x1.provenance[v])) vertex_of_g[x] = v;

  IsoMap phi{std::vector<int>(n + 1, 0)};
  for (int x = 1; x <= n; ++x) {
    int image_vertex = theta[vertex_of_g[x]];
    int y = element_of(x2.provenance[image_vertex]);
    if (y == 0)
      throw Error(ErrKind::InternalContradiction,
                  "graph isomorphism does not restrict to group elements");
    phi.forward[x] = y;
  }

  if (!is_isomorphism(g, h, phi))
    throw Error(ErrKind::InternalContradiction,
                "restricted map is not a group isomorphism");
  const int m = s.length();
  std::vector<bool> level_check;
  for (int i = 0; i <= m; ++i) {
    bool ok = s.chain[i].size() == s2.chain[i].size();
    for (int x : s.chain[i].elements()) ok = ok && s2.chain[i].contains(phi(x));
    if (!ok)
      throw Error(ErrKind::InternalContradiction,
                  "restricted map moves level " + std::to_string(i));
    level_check.push_back(ok);
  }
  return SeriesIso{std::move(phi), std::move(level_check)};
}

std::optional<SeriesIso> series_isomorphic(const CompositionSeries& s,
                                           const CompositionSeries& s2) {
  if (s.group->order() != s2.group->order() || s.length() != s2.length())
    return std::nullopt;
  ColoredGraph x1 = build_X(s);
  ColoredGraph x2 = build_X(s2);
  std::optional<std::vector<int>> theta = find_isomorphism(x1, x2);
  if (!theta) return std::nullopt;
  return series_iso_from_graph_iso(s, x1, s2, x2, *theta);
}

std::string CanonicalSeries::to_text() const {
  std::ostringstream os;
  write_group_file(os, group_table);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) os << " < ";
    os << '{';
    for (std::size_t j = 0; j < chain[i].size(); ++j) {
      if (j) os << ',';
      os << chain[i][j];
    }
    os << '}';
  }
  os << '\n';
  return os.str();
}

namespace {

constexpr int kInf = 1 << 29;

struct TreeView {
  std::vector<std::vector<int>> adj;       // tree edges only
  std::vector<std::vector<int>> cross;     // gadget-gadget edges
  std::vector<char> gadget;                // 1 for colored leaves
};

Error malformed(const std::string& m) { return Error(ErrKind::MalformedGraph, m); }

TreeView split_edges(const ColoredGraph& a) {
  const int v_count = a.vertex_count;
  TreeView t;
  t.adj.assign(v_count, {});
  t.cross.assign(v_count, {});
  t.gadget.assign(v_count, 0);
  for (int v = 0; v < v_count; ++v)
    t.gadget[v] = a.colors[v] != VertexColor::Internal;
  for (auto [u, v] : a.edges) {
    if (t.gadget[u] && t.gadget[v]) {
      t.cross[u].push_back(v);
      t.cross[v].push_back(u);
    } else {
      t.adj[u].push_back(v);
      t.adj[v].push_back(u);
    }
  }
  return t;
}

// The root is the unique vertex with all gadget leaves at equal tree
// distance. Rerooting pass: min/max distance to any gadget vertex.
int find_root(const ColoredGraph& a, const TreeView& t) {
  const int n = a.vertex_count;
  std::size_t tree_edges = 0;
  for (int v = 0; v < n; ++v) tree_edges += t.adj[v].size();
  tree_edges /= 2;
  if (tree_edges != static_cast<std::size_t>(n) - 1)
    throw malformed("tree edge count is not V-1");

  std::vector<int> order, parent(n, -1);
  std::vector<char> seen(n, 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int w : t.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        order.push_back(w);
      }
  }
  if (static_cast<int>(order.size()) != n) throw malformed("tree disconnected");

  std::vector<int> dmin(n, kInf), dmax(n, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (t.gadget[v]) {
      dmin[v] = 0;
      dmax[v] = 0;
    }
    if (parent[v] != -1) {
      if (dmin[v] != kInf) dmin[parent[v]] = std::min(dmin[parent[v]], dmin[v] + 1);
      if (dmax[v] != -1) dmax[parent[v]] = std::max(dmax[parent[v]], dmax[v] + 1);
    }
  }
  std::vector<int> umin(n, kInf), umax(n, -1);
  for (int v : order) {
    // Children's "upward" values: combine v's own up-value, v as a target,
    // and the best sibling subtrees (two-best trick).
    int b1min = kInf, b2min = kInf, b1max = -1, b2max = -1;
    for (int w : t.adj[v]) {
      if (w == parent[v]) continue;
      int cm = dmin[w] == kInf ? kInf : dmin[w] + 1;
      if (cm < b1min) {
        b2min = b1min;
        b1min = cm;
      } else if (cm < b2min) {
        b2min = cm;
      }
      int cx = dmax[w] == -1 ? -1 : dmax[w] + 1;
      if (cx > b1max) {
        b2max = b1max;
        b1max = cx;
      } else if (cx > b2max) {
        b2max = cx;
      }
    }
    for (int w : t.adj[v]) {
      if (w == parent[v]) continue;
      int cm = dmin[w] == kInf ? kInf : dmin[w] + 1;
      int cx = dmax[w] == -1 ? -1 : dmax[w] + 1;
      int sib_min = cm == b1min ? b2min : b1min;
      int sib_max = cx == b1max ? b2max : b1max;
      int best_min = std::min(umin[v], sib_min);
      if (t.gadget[v]) best_min = 0;
      int best_max = std::max(umax[v], sib_max);
      if (t.gadget[v]) best_max = std::max(best_max, 0);
      umin[w] = best_min == kInf ? kInf : best_min + 1;
      umax[w] = best_max == -1 ? -1 : best_max + 1;
    }
  }

  int root = -1;
  for (int v = 0; v < n; ++v) {
    int lo = std::min(dmin[v], umin[v]);
    int hi = std::max(dmax[v], umax[v]);
    if (lo == hi && lo != kInf) {
      if (root != -1) throw malformed("root is not unique");
      root = v;
    }
  }
  if (root == -1) throw malformed("no root with equidistant leaves");
  return root;
}

}  // namespace

CanonicalSeries reconstruct_series(const ColoredGraph& a) {
  const int v_count = a.vertex_count;
  if (v_count < 4) throw malformed("too few vertices");
  TreeView t = split_edges(a);
  for (int v = 0; v < v_count; ++v)
    if (t.gadget[v] && t.adj[v].size() != 1)
      throw malformed("gadget leaf without a unique tree parent");

  int root = find_root(a, t);
  if (t.gadget[root]) throw malformed("root is gadget-colored");

  std::vector<int> depth(v_count, -1), parent(v_count, -1), order;
  order.push_back(root);
  depth[root] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int w : t.adj[v])
      if (depth[w] == -1) {
        depth[w] = depth[v] + 1;
        parent[w] = v;
        order.push_back(w);
      }
  }
  int height = 0;
  for (int v = 0; v < v_count; ++v) height = std::max(height, depth[v]);
  if (height < 1 || height % 2 == 0) throw malformed("tree height is not 2m+1");
  const int m = (height - 1) / 2;

  std::vector<int> child_count(v_count, 0);
  for (int v = 0; v < v_count; ++v)
    if (parent[v] != -1) ++child_count[parent[v]];
  for (int v = 0; v < v_count; ++v) {
    if (t.gadget[v]) {
      if (depth[v] != height) throw malformed("gadget leaf at wrong depth");
      if (child_count[v] != 0) throw malformed("gadget leaf with children");
    } else {
      if (depth[v] > 2 * m) throw malformed("internal vertex below pair level");
      if (child_count[v] == 0) throw malformed("internal vertex is a tree leaf");
    }
  }
  // Pair level: each depth-2m vertex carries one gadget leaf of each color.
  for (int v = 0; v < v_count; ++v) {
    if (t.gadget[v] || depth[v] != 2 * m) continue;
    int l = 0, r = 0, e = 0;
    for (int w : t.adj[v]) {
      if (w == parent[v]) continue;
      if (!t.gadget[w]) throw malformed("pair vertex with internal child");
      if (a.colors[w] == VertexColor::Left) ++l;
      if (a.colors[w] == VertexColor::Right) ++r;
      if (a.colors[w] == VertexColor::Equals) ++e;
    }
    if (l != 1 || r != 1 || e != 1) throw malformed("pair vertex gadget colors wrong");
  }

  // Group elements: internal vertices at depth m, numbered 1..n in vertex order.
  std::vector<int> elements;
  for (int v = 0; v < v_count; ++v)
    if (!t.gadget[v] && depth[v] == m) elements.push_back(v);
  const int n = static_cast<int>(elements.size());
  if (n < 1) throw malformed("no element vertices");
  std::vector<int> element_index(v_count, 0);
  for (int i = 0; i < n; ++i) element_index[elements[i]] = i + 1;

  long long want = static_cast<long long>(n) * n;
  int count_l = 0, count_r = 0, count_e = 0;
  for (int v = 0; v < v_count; ++v) {
    if (a.colors[v] == VertexColor::Left) ++count_l;
    if (a.colors[v] == VertexColor::Right) ++count_r;
    if (a.colors[v] == VertexColor::Equals) ++count_e;
  }
  if (count_l != want || count_r != want || count_e != want)
    throw malformed("gadget color counts are not n^2 each");

  // Ancestor at depth m, for everything at or below depth m.
  std::vector<int> anc_m(v_count, -1);
  for (int v : order) {
    if (depth[v] == m)
      anc_m[v] = v;
    else if (depth[v] > m)
      anc_m[v] = anc_m[parent[v]];
  }

  // Cross-path shape: left 1 edge to right; right 1 left + 1 equals; equals
  // 1 edge to right.
  for (int v = 0; v < v_count; ++v) {
    if (!t.gadget[v]) continue;
    const auto& cr = t.cross[v];
    auto color_count = [&](VertexColor c) {
      int k = 0;
      for (int w : cr)
        if (a.colors[w] == c) ++k;
      return k;
    };
    switch (a.colors[v]) {
      case VertexColor::Left:
        if (cr.size() != 1 || color_count(VertexColor::Right) != 1)
          throw malformed("left leaf cross edges wrong");
        break;
      case VertexColor::Right:
        if (cr.size() != 2 || color_count(VertexColor::Left) != 1 ||
            color_count(VertexColor::Equals) != 1)
          throw malformed("right leaf cross edges wrong");
        break;
      case VertexColor::Equals:
        if (cr.size() != 1 || color_count(VertexColor::Right) != 1)
          throw malformed("equals leaf cross edges wrong");
        break;
      default:
        break;
    }
  }

  // Read one multiplication fact per left leaf.
  std::vector<std::vector<int>> raw(n, std::vector<int>(n, 0));
  for (int l = 0; l < v_count; ++l) {
    if (a.colors[l] != VertexColor::Left) continue;
    int rv = t.cross[l][0];
    int ev = -1;
    for (int w : t.cross[rv])
      if (a.colors[w] == VertexColor::Equals) ev = w;
    int x = element_index[anc_m[l]];
    int y = element_index[anc_m[rv]];
    int z = element_index[anc_m[ev]];
    if (x == 0 || y == 0 || z == 0) throw malformed("cross path without element ancestor");
    if (raw[x - 1][y - 1] != 0) throw malformed("duplicate multiplication fact");
    raw[x - 1][y - 1] = z;
  }
  for (const auto& row : raw)
    for (int v : row)
      if (v == 0) throw malformed("missing multiplication fact");

  GroupTable table = [&] {
    try {
      return GroupTable::validate(raw);
    } catch (const Error& e) {
      throw malformed(std::string("recovered table fails group validation: ") + e.what());
    }
  }();

  // Chain level i: elements sharing the identity's ancestor at depth m-i.
  int identity_vertex = elements[table.identity() - 1];
  std::vector<int> id_anc(m + 1);  // id_anc[i] = ancestor of identity at depth m-i
  {
    int v = identity_vertex;
    for (int i = 0; i <= m; ++i) {
      id_anc[i] = v;
      v = parent[v];
    }
  }
  std::vector<std::vector<int>> chain_sets(m + 1);
  for (int idx = 0; idx < n; ++idx) {
    int v = elements[idx];
    for (int i = 0; i <= m; ++i) {
      if (v == id_anc[i]) chain_sets[i].push_back(idx + 1);
      v = parent[v];
    }
  }

  std::vector<Subgroup> chain;
  try {
    for (const auto& elems : chain_sets) chain.push_back(Subgroup(table, elems));
  } catch (const Error& e) {
    throw malformed(std::string("recovered level is not a subgroup: ") + e.what());
  }
  std::string why;
  if (!is_valid_composition_series(table, chain, &why))
    throw malformed("recovered chain invalid: " + why);

  std::vector<int> identity_perm(v_count);
  for (int v = 0; v < v_count; ++v) identity_perm[v] = v;
  std::vector<std::uint8_t> enc = encode_with_order(a, identity_perm);
  CanonicalCertificate cert{std::move(identity_perm), std::move(enc)};
  return CanonicalSeries{std::move(table), std::move(chain_sets), std::move(cert)};
}

CanonicalSeries canon_series(const CompositionSeries& s) {
  ColoredGraph x = build_X(s);
  CanonicalCertificate cert = canonical_form(x);
  ColoredGraph a = apply_canonical_order(x, cert);
  CanonicalSeries out = reconstruct_series(a);
  out.source_certificate = std::move(cert);
  return out;
}

}  // namespace pgi
