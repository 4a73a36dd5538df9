#include "pgi/gadget.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pgi {

RootedTree::RootedTree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {
  const int n = static_cast<int>(nodes_.size());
  children_.assign(n, {});
  std::set<Label> labels;
  for (int i = 0; i < n; ++i) {
    const TreeNode& t = nodes_[i];
    if (t.id != i) throw Error(ErrKind::BadInput, "tree node id mismatch");
    if (!labels.insert(t.label).second)
      throw Error(ErrKind::BadInput, "duplicate tree label");
    if (t.parent == -1) {
      if (root_ != -1) throw Error(ErrKind::BadInput, "two roots");
      root_ = i;
      if (t.depth != 0) throw Error(ErrKind::BadInput, "root depth nonzero");
    } else {
      if (t.parent < 0 || t.parent >= n) throw Error(ErrKind::BadInput, "bad parent id");
      if (t.depth != nodes_[t.parent].depth + 1)
        throw Error(ErrKind::BadInput, "depth not parent depth + 1");
      children_[t.parent].push_back(i);
    }
  }
  if (root_ == -1) throw Error(ErrKind::BadInput, "no root");
}

std::vector<int> RootedTree::leaf_ids() const {
  std::vector<int> out;
  for (const TreeNode& t : nodes_)
    if (children_[t.id].empty()) out.push_back(t.id);
  return out;
}

int RootedTree::height() const {
  int h = 0;
  for (const TreeNode& t : nodes_) h = std::max(h, t.depth);
  return h;
}

RootedTree build_coset_tree(const CompositionSeries& s) {
  const GroupTable& g = *s.group;
  const int n = g.order();
  const int m = s.length();

  // Depth d holds the cosets of G_{m-d}, ordered by minimal representative.
  std::vector<TreeNode> nodes;
  std::map<std::pair<int, int>, int> id_of;  // (depth, rep) -> node id
  for (int d = 0; d <= m; ++d) {
    const Subgroup& level = s.chain[m - d];
    CosetPartition cos = left_cosets(g, level);
    for (const std::vector<int>& coset : cos.cosets) {
      int rep = coset.front();
      int level_index = m - d;
      Label label;
      if (level_index == 0)
        label = {rep};  // singleton coset = group element
      else
        label = {coset_atom(n, level_index, rep)};
      int parent = -1;
      if (d > 0) {
        // Parent: the coset of G_{m-d+1} containing rep.
        const Subgroup& up = s.chain[m - d + 1];
        int up_rep = rep;
        for (int a : up.elements()) up_rep = std::min(up_rep, g.mul(rep, a));
        parent = id_of.at({d - 1, up_rep});
      }
      int id = static_cast<int>(nodes.size());
      id_of[{d, rep}] = id;
      nodes.push_back(TreeNode{id, parent, d, std::move(label)});
    }
  }
  return RootedTree(std::move(nodes));
}

RootedTree leaf_product(const RootedTree& t1, const RootedTree& t2) {
  std::vector<TreeNode> nodes = t1.nodes();
  const std::vector<int> leaves = t1.leaf_ids();

  // Index t2's non-root nodes in id order.
  std::vector<int> non_root;
  std::vector<int> non_root_index(t2.size(), -1);
  for (const TreeNode& t : t2.nodes())
    if (t.id != t2.root()) {
      non_root_index[t.id] = static_cast<int>(non_root.size());
      non_root.push_back(t.id);
    }

  const int base = t1.size();
  const int copy_size = static_cast<int>(non_root.size());
  auto new_id = [&](int leaf_index, int t2_node) {
    return base + leaf_index * copy_size + non_root_index[t2_node];
  };

  for (std::size_t li = 0; li < leaves.size(); ++li) {
    const TreeNode& leaf = t1.node(leaves[li]);
    for (int y : non_root) {
      const TreeNode& src = t2.node(y);
      Label label = leaf.label;
      label.insert(label.end(), src.label.begin(), src.label.end());
      int parent = src.parent == t2.root() ? leaf.id
                                           : new_id(static_cast<int>(li), src.parent);
      int id = static_cast<int>(nodes.size());
      nodes.push_back(TreeNode{id, parent, leaf.depth + src.depth, std::move(label)});
    }
  }
  return RootedTree(std::move(nodes));
}

RootedTree build_gadget_M() {
  std::vector<TreeNode> nodes;
  nodes.push_back(TreeNode{0, -1, 0, {kAtomGadgetRoot}});
  nodes.push_back(TreeNode{1, 0, 1, {kAtomLeft}});
  nodes.push_back(TreeNode{2, 0, 1, {kAtomRight}});
  nodes.push_back(TreeNode{3, 0, 1, {kAtomEquals}});
  return RootedTree(std::move(nodes));
}

ColoredGraph ColoredGraph::make(int vertex_count, std::vector<VertexColor> colors,
                                std::vector<std::pair<int, int>> edges,
                                std::vector<EdgeKind> kinds,
                                std::vector<Label> provenance) {
  if (static_cast<int>(colors.size()) != vertex_count)
    throw Error(ErrKind::BadInput, "color count mismatch");
  if (!kinds.empty() && kinds.size() != edges.size())
    throw Error(ErrKind::BadInput, "edge kind count mismatch");
  if (!provenance.empty() && static_cast<int>(provenance.size()) != vertex_count)
    throw Error(ErrKind::BadInput, "provenance count mismatch");
  for (auto& [u, v] : edges) {
    if (u == v) throw Error(ErrKind::BadInput, "self loop");
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw Error(ErrKind::BadInput, "edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  // Sort edges, carrying kinds along.
  std::vector<int> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return edges[a] < edges[b]; });
  std::vector<std::pair<int, int>> se;
  std::vector<EdgeKind> sk;
  se.reserve(edges.size());
  for (int i : order) {
    se.push_back(edges[i]);
    if (!kinds.empty()) sk.push_back(kinds[i]);
  }
  for (std::size_t i = 0; i + 1 < se.size(); ++i)
    if (se[i] == se[i + 1]) throw Error(ErrKind::BadInput, "duplicate edge");
  ColoredGraph g;
  g.vertex_count = vertex_count;
  g.colors = std::move(colors);
  g.edges = std::move(se);
  g.edge_kinds = std::move(sk);
  g.provenance = std::move(provenance);
  return g;
}

ColoredGraph build_X(const CompositionSeries& s) {
  const GroupTable& g = *s.group;
  const int n = g.order();

  RootedTree t = build_coset_tree(s);
  RootedTree tt = leaf_product(t, t);
  RootedTree full = leaf_product(tt, build_gadget_M());

  auto is_gadget = [](const Label& l) { return l.back() < 0; };
  auto sym_rank = [](int atom) { return -atom - 1; };  // left 0, right 1, equals 2
  // Ordered pair a gadget leaf hangs under. For n = 1 the second copy of the
  // single-node T collapses into the first, so the pair label degenerates.
  auto pair_of = [&](const TreeNode& gadget) {
    const Label& leaf = full.node(gadget.parent).label;
    return std::pair(leaf[0], leaf.size() >= 2 ? leaf[1] : leaf[0]);
  };

  // Tree vertices by (depth, label), then gadget leaves by (x, y, symbol).
  std::vector<int> internal_nodes, gadget_nodes;
  for (const TreeNode& nd : full.nodes())
    (is_gadget(nd.label) ? gadget_nodes : internal_nodes).push_back(nd.id);
  std::sort(internal_nodes.begin(), internal_nodes.end(), [&](int a, int b) {
    const TreeNode& x = full.node(a);
    const TreeNode& y = full.node(b);
    return std::tie(x.depth, x.label) < std::tie(y.depth, y.label);
  });
  std::sort(gadget_nodes.begin(), gadget_nodes.end(), [&](int a, int b) {
    const TreeNode& x = full.node(a);
    const TreeNode& y = full.node(b);
    return std::tuple_cat(pair_of(x), std::tuple(sym_rank(x.label.back()))) <
           std::tuple_cat(pair_of(y), std::tuple(sym_rank(y.label.back())));
  });

  const int vcount = full.size();
  std::vector<int> vid(vcount, -1);
  int next = 0;
  for (int id : internal_nodes) vid[id] = next++;
  for (int id : gadget_nodes) vid[id] = next++;

  std::vector<VertexColor> colors(vcount, VertexColor::Internal);
  std::vector<Label> prov(vcount);
  std::map<std::tuple<int, int, int>, int> gadget_by_pair;
  for (const TreeNode& nd : full.nodes()) {
    prov[vid[nd.id]] = nd.label;
    if (is_gadget(nd.label)) {
      switch (nd.label.back()) {
        case kAtomLeft: colors[vid[nd.id]] = VertexColor::Left; break;
        case kAtomRight: colors[vid[nd.id]] = VertexColor::Right; break;
        default: colors[vid[nd.id]] = VertexColor::Equals; break;
      }
      auto [px, py] = pair_of(nd);
      gadget_by_pair[{px, py, nd.label.back()}] = vid[nd.id];
    }
  }

  std::vector<std::pair<int, int>> edges;
  std::vector<EdgeKind> kinds;
  for (const TreeNode& nd : full.nodes())
    if (nd.parent != -1) {
      edges.emplace_back(vid[nd.parent], vid[nd.id]);
      kinds.push_back(EdgeKind::Tree);
    }
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      int l = gadget_by_pair.at({x, y, kAtomLeft});
      int r = gadget_by_pair.at({y, x, kAtomRight});
      int e = gadget_by_pair.at({g.mul(x, y), y, kAtomEquals});
      edges.emplace_back(l, r);
      kinds.push_back(EdgeKind::Cross);
      edges.emplace_back(r, e);
      kinds.push_back(EdgeKind::Cross);
    }

  return ColoredGraph::make(vcount, std::move(colors), std::move(edges), std::move(kinds),
                            std::move(prov));
}

std::vector<int> map_series_iso_to_graph_iso(const IsoMap& phi, const CompositionSeries& s,
                                             const CompositionSeries& s2) {
  const GroupTable& g = *s.group;
  const GroupTable& h = *s2.group;
  const int n = g.order();
  if (h.order() != n || s.length() != s2.length())
    throw Error(ErrKind::NotSeriesIso, "series shapes differ");
  if (!is_isomorphism(g, h, phi))
    throw Error(ErrKind::NotSeriesIso, "map is not a group isomorphism");
  const int m = s.length();
  for (int i = 0; i <= m; ++i) {
    for (int x : s.chain[i].elements())
      if (!s2.chain[i].contains(phi(x)))
        throw Error(ErrKind::NotSeriesIso,
                    "phi[G_" + std::to_string(i) + "] != H_" + std::to_string(i));
  }

  // Atom map: elements through phi; coset (i, rep) to the image coset's
  // minimal representative; gadget symbols fixed.
  auto map_atom = [&](int atom) {
    if (atom < 0) return atom;
    if (atom >= 1 && atom <= n) return phi(atom);
    int off = atom - n - 1;
    int level = off / (n + 1);
    int rep = off % (n + 1) + 1;
    int best = h.order() + 1;
    for (int a : s.chain[level].elements()) best = std::min(best, phi(g.mul(rep, a)));
    return coset_atom(n, level, best);
  };

  ColoredGraph x1 = build_X(s);
  ColoredGraph x2 = build_X(s2);
  std::map<Label, int> target;
  for (int v = 0; v < x2.vertex_count; ++v) target[x2.provenance[v]] = v;

  std::vector<int> theta(x1.vertex_count, -1);
  for (int v = 0; v < x1.vertex_count; ++v) {
    Label image;
    image.reserve(x1.provenance[v].size());
    for (int atom : x1.provenance[v]) image.push_back(map_atom(atom));
    auto it = target.find(image);
    if (it == target.end())
      throw Error(ErrKind::InternalContradiction, "mapped label missing in target graph");
    theta[v] = it->second;
  }

  // Verify: bijective, color-preserving, edge-preserving.
  std::vector<char> hit(x2.vertex_count, 0);
  for (int v = 0; v < x1.vertex_count; ++v) {
    if (hit[theta[v]]) throw Error(ErrKind::InternalContradiction, "mapped bijection collision");
    hit[theta[v]] = 1;
    if (x1.colors[v] != x2.colors[theta[v]])
      throw Error(ErrKind::InternalContradiction, "mapped color mismatch");
  }
  std::set<std::pair<int, int>> e2(x2.edges.begin(), x2.edges.end());
  if (x1.edges.size() != x2.edges.size())
    throw Error(ErrKind::InternalContradiction, "edge count mismatch");
  for (auto [u, v] : x1.edges) {
    int a = theta[u], b = theta[v];
    if (a > b) std::swap(a, b);
    if (!e2.count({a, b}))
      throw Error(ErrKind::InternalContradiction, "mapped edge missing");
  }
  return theta;
}

ColoredGraph permute_graph(const ColoredGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count)
    throw Error(ErrKind::BadPermutation, "permutation size mismatch");
  std::vector<char> hit(g.vertex_count, 0);
  for (int v : perm) {
    if (v < 0 || v >= g.vertex_count || hit[v])
      throw Error(ErrKind::BadPermutation, "not a permutation");
    hit[v] = 1;
  }
  std::vector<VertexColor> colors(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) colors[perm[v]] = g.colors[v];
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
  return ColoredGraph::make(g.vertex_count, std::move(colors), std::move(edges));
}

void write_colored_graph(std::ostream& out, const ColoredGraph& g) {
  out << "p cgraph " << g.vertex_count << ' ' << g.edges.size() << '\n';
  for (int v = 0; v < g.vertex_count; ++v)
    out << "n " << (v + 1) << ' ' << static_cast<int>(g.colors[v]) << '\n';
  for (auto [u, v] : g.edges) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

std::string colored_graph_text(const ColoredGraph& g) {
  std::ostringstream os;
  write_colored_graph(os, g);
  return os.str();
}

ColoredGraph read_colored_graph(std::istream& in) {
  std::string tag;
  if (!(in >> tag) || tag != "p") throw Error(ErrKind::BadInput, "missing p line");
  std::string kind;
  long long v = 0, e = 0;
  if (!(in >> kind >> v >> e) || kind != "cgraph" || v < 0 || e < 0)
    throw Error(ErrKind::BadInput, "bad p line");
  std::vector<VertexColor> colors(v, VertexColor::Internal);
  std::vector<char> seen(v, 0);
  for (long long i = 0; i < v; ++i) {
    long long id, c;
    if (!(in >> tag >> id >> c) || tag != "n") throw Error(ErrKind::BadInput, "bad n line");
    if (id < 1 || id > v || c < 0 || c > 3) throw Error(ErrKind::BadInput, "bad n line values");
    if (seen[id - 1]) throw Error(ErrKind::BadInput, "duplicate vertex line");
    seen[id - 1] = 1;
    colors[id - 1] = static_cast<VertexColor>(c);
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(e);
  for (long long i = 0; i < e; ++i) {
    long long a, b;
    if (!(in >> tag >> a >> b) || tag != "e") throw Error(ErrKind::BadInput, "bad e line");
    if (a < 1 || a > v || b < 1 || b > v || a == b)
      throw Error(ErrKind::BadInput, "bad edge endpoints");
    edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  return ColoredGraph::make(static_cast<int>(v), std::move(colors), std::move(edges));
}

}  // namespace pgi
