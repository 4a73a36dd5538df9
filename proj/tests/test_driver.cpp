#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "pgi/driver.hpp"

using namespace pgi;
using namespace pgi::testing;

namespace {

GroupTable cyclic(int m) { return generate_family({Family::DirectProduct, 0, 0, {m}}); }

}  // namespace

TEST_CASE("decide_route thresholds") {
  RouteDecision d64 = decide_route(GroupProfile{64, 2, true, 6});
  CHECK(d64.chosen == Route::Series);
  CHECK(d64.alpha == doctest::Approx(6.0 / std::log2(6.0)));

  RouteDecision d125 = decide_route(GroupProfile{125, 5, true, 3});
  CHECK(d125.chosen == Route::GenEnum);
  CHECK(d125.alpha == doctest::Approx(std::log2(125.0) / std::log2(std::log2(125.0))));

  RouteDecision forced = decide_route(GroupProfile{125, 5, true, 3}, Route::GenEnum);
  CHECK(forced.chosen == Route::GenEnum);
  CHECK(forced.forced.has_value());
  RouteDecision forced2 = decide_route(GroupProfile{125, 5, true, 3}, Route::Series);
  CHECK(forced2.chosen == Route::Series);

  // p = alpha tie goes to the series route: n = 4 has alpha = 2 exactly.
  RouteDecision d4 = decide_route(GroupProfile{4, 2, true, 2});
  CHECK(d4.alpha == doctest::Approx(2.0));
  CHECK(d4.chosen == Route::Series);

  // n = 2: log2 log2 n = 0; treated as alpha = +inf, series route.
  RouteDecision d2 = decide_route(GroupProfile{2, 2, true, 1});
  CHECK(d2.chosen == Route::Series);
}

TEST_CASE("iso on relabeled copies, both routes") {
  for (const GroupTable& g :
       {cyclic(8), generate_family({Family::Dihedral, 0, 4, {}}), cyclic(15)}) {
    GroupTable g2 = relabel(g, random_permutation(g.order(), 7));
    for (Route r : {Route::Series, Route::GenEnum}) {
      auto phi = iso(g, g2, r);
      REQUIRE(phi.has_value());
      CHECK(is_isomorphism(g, g2, *phi));
    }
  }
}

TEST_CASE("iso rejects non-isomorphic pairs on both routes") {
  GroupTable c4 = cyclic(4);
  GroupTable klein = generate_family({Family::ElementaryAbelian, 2, 2, {}});
  CHECK_FALSE(iso(c4, klein, Route::Series).has_value());
  CHECK_FALSE(iso(c4, klein, Route::GenEnum).has_value());

  GroupTable d4 = generate_family({Family::Dihedral, 0, 4, {}});
  GroupTable q8 = generate_family({Family::Quaternion, 0, 0, {}});
  CHECK_FALSE(iso(d4, q8, Route::Series).has_value());
  CHECK_FALSE(iso(d4, q8, Route::GenEnum).has_value());
}

TEST_CASE("iso handles order mismatch and the trivial group") {
  GroupTable triv = validate_group({{1}});
  CHECK(iso(triv, triv).has_value());
  CHECK_FALSE(iso(triv, cyclic(2)).has_value());
}

TEST_CASE("Heisenberg mod 3 vs elementary abelian 3^3, both routes") {
  GroupTable heis = generate_family({Family::Heisenberg, 3, 0, {}});
  GroupTable e27 = generate_family({Family::ElementaryAbelian, 3, 3, {}});
  CHECK_FALSE(iso(heis, e27, Route::GenEnum).has_value());
  CHECK_FALSE(iso(heis, e27, Route::Series).has_value());
  CHECK_FALSE(brute_force_iso(heis, e27).has_value());
}

TEST_CASE("route agreement with the brute-force oracle on order <= 12") {
  auto groups = corpus16();
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i; j < groups.size(); ++j) {
      if (groups[i].table.order() > 12 || groups[j].table.order() > 12) continue;
      INFO(groups[i].name << " vs " << groups[j].name);
      bool oracle = brute_force_iso(groups[i].table, groups[j].table).has_value();
      CHECK(iso(groups[i].table, groups[j].table, Route::Series).has_value() == oracle);
      CHECK(iso(groups[i].table, groups[j].table, Route::GenEnum).has_value() == oracle);
    }
}

TEST_CASE("canon is relabeling-invariant per route") {
  for (const GroupTable& g : {cyclic(4), generate_family({Family::ElementaryAbelian, 2, 2, {}}),
                              generate_family({Family::Dihedral, 0, 4, {}})}) {
    for (Route r : {Route::Series, Route::GenEnum}) {
      GroupTable base = canon(g, r);
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        GroupTable g2 = relabel(g, random_permutation(g.order(), seed));
        CHECK(canon(g2, r).flat() == base.flat());
      }
      // canonical table is a table of an isomorphic group
      CHECK(brute_force_iso(base, g).has_value());
    }
  }
}

TEST_CASE("canon separates C4 from Klein on both routes") {
  GroupTable c4 = cyclic(4);
  GroupTable klein = generate_family({Family::ElementaryAbelian, 2, 2, {}});
  CHECK(canon(c4, Route::Series).flat() != canon(klein, Route::Series).flat());
  CHECK(canon(c4, Route::GenEnum).flat() != canon(klein, Route::GenEnum).flat());
}

TEST_CASE("canon of the trivial group") {
  GroupTable triv = validate_group({{1}});
  CHECK(canon(triv).flat() == std::vector<int>{1});
}

TEST_CASE("generate_family cyclic p=2 k=2 is the C4 table") {
  GroupTable g = generate_family({Family::Cyclic, 2, 2, {}});
  CHECK(g.flat() ==
        std::vector<int>{1, 2, 3, 4, 2, 3, 4, 1, 3, 4, 1, 2, 4, 1, 2, 3});
}

TEST_CASE("generate_family heisenberg p=2 is dihedral-4") {
  GroupTable h2 = generate_family({Family::Heisenberg, 2, 0, {}});
  GroupTable d4 = generate_family({Family::Dihedral, 0, 4, {}});
  CHECK(h2.order() == 8);
  CHECK(brute_force_iso(h2, d4).has_value());
}

TEST_CASE("generate_family quaternion has exactly one involution") {
  GroupTable q8 = generate_family({Family::Quaternion, 0, 0, {}});
  int involutions = 0;
  for (int x = 1; x <= 8; ++x)
    if (x != q8.identity() && q8.mul(x, x) == q8.identity()) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("generate_family rejects bad parameters") {
  CHECK_THROWS_AS((void)generate_family({Family::Cyclic, 4, 2, {}}), Error);  // 4 not prime
  CHECK_THROWS_AS((void)generate_family({Family::Heisenberg, 6, 0, {}}), Error);
  CHECK_THROWS_AS((void)generate_family({Family::Dihedral, 0, 0, {}}), Error);
  CHECK_THROWS_AS((void)generate_family({Family::DirectProduct, 0, 0, {}}), Error);
  CHECK_THROWS_AS((void)generate_family({Family::ElementaryAbelian, 2, 0, {}}), Error);
}

TEST_CASE("relabel") {
  GroupTable c3 = cyclic(3);
  std::vector<int> id_perm = {0, 1, 2, 3};
  CHECK(relabel(c3, id_perm).flat() == c3.flat());

  std::vector<int> swap23 = {0, 1, 3, 2};
  GroupTable g2 = relabel(c3, swap23);
  CHECK(brute_force_iso(c3, g2).has_value());

  CHECK_THROWS_AS((void)relabel(c3, std::vector<int>{0, 1, 1, 2}), Error);
  CHECK_THROWS_AS((void)relabel(c3, std::vector<int>{0, 1, 2}), Error);
}

TEST_CASE("random_permutation is deterministic and valid") {
  std::vector<int> a = random_permutation(16, 5);
  std::vector<int> b = random_permutation(16, 5);
  CHECK(a == b);
  std::vector<int> sorted(a.begin() + 1, a.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 1; i <= 16; ++i) CHECK(sorted[i - 1] == i);
  CHECK(random_permutation(16, 6) != a);
}
