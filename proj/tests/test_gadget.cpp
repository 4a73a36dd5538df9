#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "pgi/driver.hpp"
#include "pgi/gadget.hpp"

using namespace pgi;
using namespace pgi::testing;

namespace {

GroupTable cyclic(int m) { return generate_family({Family::DirectProduct, 0, 0, {m}}); }

CompositionSeries first_series(const GroupTable& g) {
  return enumerate_composition_series(g).front();
}

RootedTree two_leaf_star(int a, int b, int root_atom) {
  std::vector<TreeNode> nodes;
  nodes.push_back(TreeNode{0, -1, 0, {root_atom}});
  nodes.push_back(TreeNode{1, 0, 1, {a}});
  nodes.push_back(TreeNode{2, 0, 1, {b}});
  return RootedTree(std::move(nodes));
}

int max_degree(const ColoredGraph& g) {
  std::vector<int> deg(g.vertex_count, 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  return *std::max_element(deg.begin(), deg.end());
}

}  // namespace

TEST_CASE("coset tree shapes") {
  GroupTable triv = validate_group({{1}});
  CHECK(build_coset_tree(first_series(triv)).size() == 1);

  GroupTable c2 = cyclic(2);
  RootedTree t2 = build_coset_tree(first_series(c2));
  CHECK(t2.size() == 3);
  CHECK(t2.height() == 1);

  GroupTable c4 = cyclic(4);
  RootedTree t4 = build_coset_tree(first_series(c4));
  CHECK(t4.size() == 7);  // 1 + 2 + 4
  CHECK(t4.height() == 2);
}

TEST_CASE("leaf product with a single-node tree keeps the left factor") {
  GroupTable c4 = cyclic(4);
  RootedTree t = build_coset_tree(first_series(c4));
  RootedTree single(std::vector<TreeNode>{TreeNode{0, -1, 0, {99}}});
  RootedTree out = leaf_product(t, single);
  CHECK(out.size() == t.size());
}

TEST_CASE("leaf product of two 2-leaf stars") {
  RootedTree out = leaf_product(two_leaf_star(1, 2, 10), two_leaf_star(1, 2, 10));
  CHECK(out.size() == 7);  // 3 + 2*2
  CHECK(out.leaf_ids().size() == 4);
}

TEST_CASE("leaf product associativity instance") {
  GroupTable c2 = cyclic(2);
  RootedTree t = build_coset_tree(first_series(c2));
  RootedTree m = build_gadget_M();
  RootedTree left = leaf_product(leaf_product(t, t), m);
  RootedTree right = leaf_product(t, leaf_product(t, m));
  REQUIRE(left.size() == right.size());
  std::set<Label> l1, l2;
  std::map<Label, Label> parent1, parent2;  // label -> parent label
  for (const TreeNode& nd : left.nodes()) {
    l1.insert(nd.label);
    if (nd.parent != -1) parent1[nd.label] = left.node(nd.parent).label;
  }
  for (const TreeNode& nd : right.nodes()) {
    l2.insert(nd.label);
    if (nd.parent != -1) parent2[nd.label] = right.node(nd.parent).label;
  }
  CHECK(l1 == l2);
  CHECK(parent1 == parent2);
}

TEST_CASE("gadget M") {
  RootedTree m = build_gadget_M();
  CHECK(m.size() == 4);
  CHECK(m.children(m.root()).size() == 3);
  CHECK(m.leaf_ids().size() == 3);
  for (int leaf : m.leaf_ids()) CHECK(m.node(leaf).depth == 1);
}

TEST_CASE("X for cyclic-2") {
  GroupTable c2 = cyclic(2);
  ColoredGraph x = build_X(first_series(c2));
  CHECK(x.vertex_count == 19);  // 7 in T(.)T plus 3n^2 gadget leaves
  int tree = 0, cross = 0;
  for (EdgeKind k : x.edge_kinds) (k == EdgeKind::Tree ? tree : cross)++;
  CHECK(tree == 18);
  CHECK(cross == 8);
}

TEST_CASE("X color counts are n^2 per gadget color") {
  for (const GroupTable& g : {cyclic(2), cyclic(4), cyclic(6)}) {
    ColoredGraph x = build_X(first_series(g));
    int n = g.order();
    int l = 0, r = 0, e = 0;
    for (VertexColor c : x.colors) {
      if (c == VertexColor::Left) ++l;
      if (c == VertexColor::Right) ++r;
      if (c == VertexColor::Equals) ++e;
    }
    CHECK(l == n * n);
    CHECK(r == n * n);
    CHECK(e == n * n);
  }
}

TEST_CASE("degree bound max(p+1, 4) for corpus p-groups") {
  for (const auto& [name, g] : corpus_p_groups27()) {
    INFO(name);
    int p = profile(g).smallest_prime;
    for (const CompositionSeries& s : enumerate_composition_series(g)) {
      ColoredGraph x = build_X(s);
      CHECK(max_degree(x) <= std::max(p + 1, 4));
    }
  }
}

TEST_CASE("size bound 7 n^2") {
  for (const auto& [name, g] : corpus16()) {
    INFO(name);
    for (const CompositionSeries& s : enumerate_composition_series(g)) {
      ColoredGraph x = build_X(s);
      CHECK(x.vertex_count <= 7 * g.order() * g.order());
    }
  }
}

TEST_CASE("cross edges connect equal-depth vertices") {
  GroupTable d4 = generate_family({Family::Dihedral, 0, 4, {}});
  CompositionSeries s = first_series(d4);
  ColoredGraph x = build_X(s);
  // All cross edges join gadget leaves, which sit at the unique lowest level.
  for (std::size_t i = 0; i < x.edges.size(); ++i)
    if (x.edge_kinds[i] == EdgeKind::Cross) {
      CHECK(x.colors[x.edges[i].first] != VertexColor::Internal);
      CHECK(x.colors[x.edges[i].second] != VertexColor::Internal);
    }
}

TEST_CASE("left-right path uniqueness") {
  // Exactly one left-right path between each ordered pair of element nodes:
  // one cross edge colored (left,right) under each (x, y) subtree pair.
  for (const GroupTable& g : {cyclic(2), cyclic(4)}) {
    CompositionSeries s = first_series(g);
    ColoredGraph x = build_X(s);
    const int n = g.order();
    // element vertex of a: provenance {a}; gadget (a,b,left) lives under a.
    std::map<std::pair<int, int>, int> count;
    for (std::size_t i = 0; i < x.edges.size(); ++i) {
      if (x.edge_kinds[i] != EdgeKind::Cross) continue;
      auto [u, v] = x.edges[i];
      VertexColor cu = x.colors[u], cv = x.colors[v];
      if (cu > cv) {
        std::swap(u, v);
        std::swap(cu, cv);
      }
      if (cu == VertexColor::Left && cv == VertexColor::Right) {
        const Label& lu = x.provenance[u];  // (x, y, left)
        const Label& lv = x.provenance[v];  // (y, x, right): sits under y
        CHECK(lv[0] == lu[1]);
        CHECK(lv[1] == lu[0]);
        ++count[{lu[0], lu[1]}];
      }
    }
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) CHECK(count[{a, b}] == 1);
  }
}

TEST_CASE("map_series_iso_to_graph_iso identity") {
  GroupTable c4 = cyclic(4);
  CompositionSeries s = first_series(c4);
  IsoMap id{{0, 1, 2, 3, 4}};
  std::vector<int> theta = map_series_iso_to_graph_iso(id, s, s);
  for (std::size_t v = 0; v < theta.size(); ++v) CHECK(theta[v] == static_cast<int>(v));
}

TEST_CASE("map_series_iso_to_graph_iso on cyclic-4 inversion") {
  GroupTable c4 = cyclic(4);
  CompositionSeries s = first_series(c4);
  // g -> g^3: ids 1,2,3,4 are e,g,g^2,g^3
  IsoMap phi{{0, 1, 4, 3, 2}};
  std::vector<int> theta = map_series_iso_to_graph_iso(phi, s, s);
  ColoredGraph x = build_X(s);
  CHECK(is_graph_isomorphism(x, x, theta));
}

TEST_CASE("map_series_iso_to_graph_iso on a Klein transposition") {
  GroupTable klein = generate_family({Family::ElementaryAbelian, 2, 2, {}});
  // ids: 1 = (0,0), 2 = (0,1), 3 = (1,0), 4 = (1,1)
  auto all = enumerate_composition_series(klein);
  // pick the series through {1,2}; swap 3 and 4 fixes it
  const CompositionSeries* s = nullptr;
  for (const auto& cand : all)
    if (cand.chain[1].elements() == std::vector<int>{1, 2}) s = &cand;
  REQUIRE(s != nullptr);
  IsoMap swap34{{0, 1, 2, 4, 3}};
  std::vector<int> theta = map_series_iso_to_graph_iso(swap34, *s, *s);
  ColoredGraph x = build_X(*s);
  CHECK(is_graph_isomorphism(x, x, theta));
}

TEST_CASE("map_series_iso_to_graph_iso rejects a non-series iso") {
  GroupTable klein = generate_family({Family::ElementaryAbelian, 2, 2, {}});
  auto all = enumerate_composition_series(klein);
  REQUIRE(all.size() == 3);
  // swap 2 and 3 moves {1,2} off itself
  IsoMap swap23{{0, 1, 3, 2, 4}};
  const CompositionSeries* s = nullptr;
  for (const auto& cand : all)
    if (cand.chain[1].elements() == std::vector<int>{1, 2}) s = &cand;
  REQUIRE(s != nullptr);
  CHECK_THROWS_AS((void)map_series_iso_to_graph_iso(swap23, *s, *s), Error);
}

TEST_CASE("functoriality on automorphism pairs") {
  GroupTable c4 = cyclic(4);
  CompositionSeries s = first_series(c4);
  IsoMap inv{{0, 1, 4, 3, 2}};
  std::vector<int> ti = map_series_iso_to_graph_iso(inv, s, s);
  // inv o inv = identity, so X(inv) o X(inv) must be the identity map
  std::vector<int> composed(ti.size());
  for (std::size_t v = 0; v < ti.size(); ++v) composed[v] = ti[ti[v]];
  for (std::size_t v = 0; v < composed.size(); ++v)
    CHECK(composed[v] == static_cast<int>(v));
}

TEST_CASE("colored graph text format round trip and exact bytes") {
  GroupTable c2 = cyclic(2);
  ColoredGraph x = build_X(first_series(c2));
  std::string text = colored_graph_text(x);
  std::istringstream in(text);
  ColoredGraph back = read_colored_graph(in);
  CHECK(back.vertex_count == x.vertex_count);
  CHECK(back.edges == x.edges);
  CHECK(back.colors == x.colors);

  // Golden file, cross paths hand-checked against the C2 table.
  const std::string golden =
      "p cgraph 19 26\n"
      "n 1 0\nn 2 0\nn 3 0\nn 4 0\nn 5 0\nn 6 0\nn 7 0\n"
      "n 8 1\nn 9 2\nn 10 3\nn 11 1\nn 12 2\nn 13 3\n"
      "n 14 1\nn 15 2\nn 16 3\nn 17 1\nn 18 2\nn 19 3\n"
      "e 1 2\ne 1 3\ne 2 4\ne 2 5\ne 3 6\ne 3 7\n"
      "e 4 8\ne 4 9\ne 4 10\ne 5 11\ne 5 12\ne 5 13\n"
      "e 6 14\ne 6 15\ne 6 16\ne 7 17\ne 7 18\ne 7 19\n"
      "e 8 9\ne 9 10\ne 11 15\ne 12 14\ne 12 16\ne 13 18\ne 15 19\ne 17 18\n";
  CHECK(text == golden);
}

TEST_CASE("graph iso mapping respects composition of automorphisms") {
  // C8 automorphisms g -> g^3 and g -> g^5 fix the unique series; their
  // mapped graph isomorphisms must compose like the group maps do.
  GroupTable c8 = cyclic(8);
  CompositionSeries s = first_series(c8);
  auto power_map = [&](int k) {
    IsoMap phi{std::vector<int>(9, 0)};
    for (int e = 0; e < 8; ++e) phi.forward[1 + e] = 1 + (e * k) % 8;
    return phi;
  };
  IsoMap phi = power_map(3), psi = power_map(5);
  IsoMap composed{std::vector<int>(9, 0)};
  for (int x = 1; x <= 8; ++x) composed.forward[x] = psi.forward[phi.forward[x]];
  std::vector<int> t_phi = map_series_iso_to_graph_iso(phi, s, s);
  std::vector<int> t_psi = map_series_iso_to_graph_iso(psi, s, s);
  std::vector<int> t_comp = map_series_iso_to_graph_iso(composed, s, s);
  for (std::size_t v = 0; v < t_phi.size(); ++v)
    CHECK(t_comp[v] == t_psi[t_phi[v]]);
}
