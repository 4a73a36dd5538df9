#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "pgi/driver.hpp"
#include "pgi/series_canon.hpp"

using namespace pgi;
using namespace pgi::testing;

namespace {

GroupTable cyclic(int m) { return generate_family({Family::DirectProduct, 0, 0, {m}}); }

CompositionSeries first_series(const GroupTable& g) {
  return enumerate_composition_series(g).front();
}

// The image series of s under a relabeling perm of its group, as a series of
// relabeled.
CompositionSeries image_series(const CompositionSeries& s, const GroupTable& relabeled,
                               const std::vector<int>& perm) {
  CompositionSeries out{&relabeled, {}};
  for (const Subgroup& level : s.chain) {
    std::vector<int> mapped;
    for (int x : level.elements()) mapped.push_back(perm[x]);
    std::sort(mapped.begin(), mapped.end());
    out.chain.push_back(Subgroup(relabeled, mapped));
  }
  return out;
}

}  // namespace

TEST_CASE("series_isomorphic on identical series") {
  GroupTable c4 = cyclic(4);
  CompositionSeries s = first_series(c4);
  auto si = series_isomorphic(s, s);
  REQUIRE(si.has_value());
  CHECK(std::all_of(si->level_check.begin(), si->level_check.end(), [](bool b) { return b; }));
  CHECK(is_isomorphism(c4, c4, si->phi));
}

TEST_CASE("the Q8 series through <i> and <j> are isomorphic") {
  GroupTable q8 = generate_family({Family::Quaternion, 0, 0, {}});
  auto all = enumerate_composition_series(q8);
  REQUIRE(all.size() == 3);
  // ids: 1,-1,i,-i,j,-j,k,-k; <i> = {1,2,3,4}, <j> = {1,2,5,6}
  const CompositionSeries* si_series = nullptr;
  const CompositionSeries* sj_series = nullptr;
  for (const auto& s : all) {
    if (s.chain[2].elements() == std::vector<int>{1, 2, 3, 4}) si_series = &s;
    if (s.chain[2].elements() == std::vector<int>{1, 2, 5, 6}) sj_series = &s;
  }
  REQUIRE(si_series != nullptr);
  REQUIRE(sj_series != nullptr);
  auto iso = series_isomorphic(*si_series, *sj_series);
  REQUIRE(iso.has_value());
  // cross-check with the independent oracle
  CHECK(oracle_series_iso(*si_series, *sj_series).has_value());
}

TEST_CASE("series of non-isomorphic groups are never isomorphic") {
  GroupTable c4 = cyclic(4);
  GroupTable klein = generate_family({Family::ElementaryAbelian, 2, 2, {}});
  for (const auto& s : enumerate_composition_series(c4))
    for (const auto& s2 : enumerate_composition_series(klein)) {
      CHECK_FALSE(series_isomorphic(s, s2).has_value());
      CHECK_FALSE(oracle_series_iso(s, s2).has_value());
    }
}

TEST_CASE("series_isomorphic agrees with the oracle on order-8 series pairs") {
  std::vector<GroupTable> groups;
  groups.push_back(cyclic(8));
  groups.push_back(generate_family({Family::Dihedral, 0, 4, {}}));
  groups.push_back(generate_family({Family::Quaternion, 0, 0, {}}));
  std::vector<std::vector<CompositionSeries>> per_group;
  for (const GroupTable& g : groups) per_group.push_back(enumerate_composition_series(g));
  int checked = 0;
  for (std::size_t a = 0; a < per_group.size(); ++a)
    for (std::size_t b = a; b < per_group.size(); ++b)
      for (const auto& s1 : per_group[a])
        for (const auto& s2 : per_group[b]) {
          bool mine = series_isomorphic(s1, s2).has_value();
          bool oracle = oracle_series_iso(s1, s2).has_value();
          CHECK(mine == oracle);
          ++checked;
        }
  CHECK(checked >= 50);
}

TEST_CASE("reconstruct_series round trips X for cyclic-2") {
  GroupTable c2 = cyclic(2);
  CompositionSeries s = first_series(c2);
  CanonicalSeries out = reconstruct_series(build_X(s));
  CHECK(out.group_table.flat() == std::vector<int>{1, 2, 2, 1});
  REQUIRE(out.chain.size() == 2);
  CHECK(out.chain[0] == std::vector<int>{1});
  CHECK(out.chain[1] == std::vector<int>{1, 2});
}

TEST_CASE("reconstruct_series handles the trivial group") {
  GroupTable triv = validate_group({{1}});
  CanonicalSeries out = reconstruct_series(build_X(first_series(triv)));
  CHECK(out.group_table.order() == 1);
  CHECK(out.chain.size() == 1);
}

TEST_CASE("reconstruct_series on canonically relabeled graphs recovers the group") {
  for (const auto& [name, g] : corpus16()) {
    if (g.order() > 9) continue;
    INFO(name);
    for (const CompositionSeries& s : enumerate_composition_series(g)) {
      ColoredGraph x = build_X(s);
      CanonicalCertificate cert = canonical_form(x);
      CanonicalSeries out = reconstruct_series(apply_canonical_order(x, cert));
      CHECK(brute_force_iso(out.group_table, g).has_value());
      std::vector<Subgroup> chain;
      for (const auto& elems : out.chain) chain.push_back(Subgroup(out.group_table, elems));
      std::string why;
      CHECK_MESSAGE(is_valid_composition_series(out.group_table, chain, &why), why);
    }
  }
}

TEST_CASE("reconstruct_series rejects a graph with a deleted cross edge") {
  GroupTable c2 = cyclic(2);
  ColoredGraph x = build_X(first_series(c2));
  // drop one cross edge touching an equals leaf
  std::vector<std::pair<int, int>> edges;
  bool dropped = false;
  for (std::size_t i = 0; i < x.edges.size(); ++i) {
    auto [u, v] = x.edges[i];
    bool equals_cross =
        x.edge_kinds[i] == EdgeKind::Cross &&
        (x.colors[u] == VertexColor::Equals || x.colors[v] == VertexColor::Equals);
    if (!dropped && equals_cross) {
      dropped = true;
      continue;
    }
    edges.emplace_back(u, v);
  }
  REQUIRE(dropped);
  ColoredGraph broken = ColoredGraph::make(x.vertex_count, x.colors, std::move(edges));
  try {
    reconstruct_series(broken);
    FAIL("expected MalformedGraph");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::MalformedGraph);
  }
}

TEST_CASE("reconstruct_series rejects non-cone graphs") {
  ColoredGraph odd = ColoredGraph::make(
      4,
      {VertexColor::Internal, VertexColor::Internal, VertexColor::Internal, VertexColor::Left},
      {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS((void)reconstruct_series(odd), Error);
}

TEST_CASE("canon_series is stable under relabelings") {
  for (const auto& [name, g] : corpus16()) {
    if (g.order() > 8) continue;
    INFO(name);
    auto all = enumerate_composition_series(g);
    const CompositionSeries& s = all.front();
    std::string base = canon_series(s).to_text();
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      std::vector<int> perm = random_permutation(g.order(), seed);
      GroupTable g2 = relabel(g, perm);
      CompositionSeries s2 = image_series(s, g2, perm);
      CHECK(canon_series(s2).to_text() == base);
    }
  }
}

TEST_CASE("the three Klein series canonize identically") {
  GroupTable klein = generate_family({Family::ElementaryAbelian, 2, 2, {}});
  auto all = enumerate_composition_series(klein);
  REQUIRE(all.size() == 3);
  std::string first = canon_series(all[0]).to_text();
  CHECK(canon_series(all[1]).to_text() == first);
  CHECK(canon_series(all[2]).to_text() == first);
}

TEST_CASE("canonical series separate C4 from Klein") {
  GroupTable c4 = cyclic(4);
  GroupTable klein = generate_family({Family::ElementaryAbelian, 2, 2, {}});
  CHECK(canon_series(first_series(c4)).to_text() !=
        canon_series(first_series(klein)).to_text());
}

TEST_CASE("canon_series equality tracks series isomorphism across D4") {
  GroupTable d4 = generate_family({Family::Dihedral, 0, 4, {}});
  auto all = enumerate_composition_series(d4);
  REQUIRE(all.size() == 7);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      bool same_canon = canon_series(all[i]).to_text() == canon_series(all[j]).to_text();
      bool iso = series_isomorphic(all[i], all[j]).has_value();
      CHECK(same_canon == iso);
    }
}

TEST_CASE("canon_series equality tracks series isomorphism across order-8 groups") {
  std::vector<GroupTable> groups;
  groups.push_back(cyclic(8));
  groups.push_back(generate_family({Family::Dihedral, 0, 4, {}}));
  groups.push_back(generate_family({Family::Quaternion, 0, 0, {}}));
  std::vector<CompositionSeries> pool;
  for (const GroupTable& g : groups)
    for (CompositionSeries& s : enumerate_composition_series(g)) pool.push_back(std::move(s));
  std::vector<std::string> texts;
  for (const CompositionSeries& s : pool) texts.push_back(canon_series(s).to_text());
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j)
      CHECK((texts[i] == texts[j]) == series_isomorphic(pool[i], pool[j]).has_value());
}
