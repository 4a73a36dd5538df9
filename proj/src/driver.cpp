#include "pgi/driver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace pgi {

RouteDecision decide_route(const GroupProfile& pr, std::optional<Route> force) {
  if (pr.order < 2) throw Error(ErrKind::BadParameters, "decide_route needs order >= 2");
  RouteDecision d;
  d.n = pr.order;
  d.p = pr.smallest_prime;
  double loglog = std::log2(std::log2(static_cast<double>(d.n)));
  d.alpha = loglog <= 0.0 ? std::numeric_limits<double>::infinity()
                          : std::log2(static_cast<double>(d.n)) / loglog;
  d.chosen = static_cast<double>(d.p) <= d.alpha ? Route::Series : Route::GenEnum;
  if (force) {
    d.forced = force;
    d.chosen = *force;
  }
  return d;
}

std::optional<IsoMap> iso(const GroupTable& g, const GroupTable& h,
                          std::optional<Route> force) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() == 1) return IsoMap{{0, h.identity()}};
  Route route = decide_route(profile(g), force).chosen;
  if (route == Route::GenEnum) return gen_enum_iso(g, h);

  std::vector<CompositionSeries> gs = enumerate_composition_series(g);
  const CompositionSeries& s = gs.front();
  ColoredGraph xg = build_X(s);
  std::vector<int> sig_g = equitable_signature(xg);
  std::optional<CanonicalCertificate> cg;  // canonize the fixed side once, lazily
  std::vector<CompositionSeries> hs = enumerate_composition_series(h);
  for (const CompositionSeries& s2 : hs) {
    ColoredGraph xh = build_X(s2);
    if (xh.vertex_count != xg.vertex_count || xh.edges.size() != xg.edges.size()) continue;
    if (equitable_signature(xh) != sig_g) continue;
    if (!cg) cg = canonical_form(xg);
    CanonicalCertificate ch = canonical_form(xh);
    std::optional<std::vector<int>> theta = isomorphism_from_certificates(xg, *cg, xh, ch);
    if (theta) {
      SeriesIso si = series_iso_from_graph_iso(s, xg, s2, xh, *theta);
      return si.phi;
    }
  }
  return std::nullopt;
}

GroupTable canon(const GroupTable& g, std::optional<Route> force) {
  if (g.order() == 1) return GroupTable::validate({{1}});
  Route route = decide_route(profile(g), force).chosen;
  if (route == Route::GenEnum) return gen_enum_canon(g);
  std::optional<GroupTable> best;
  for (const CompositionSeries& s : enumerate_composition_series(g)) {
    CanonicalSeries cs = canon_series(s);
    if (!best || cs.group_table.flat() < best->flat()) best = std::move(cs.group_table);
  }
  return *best;
}

namespace {

bool is_prime(int k) {
  if (k < 2) return false;
  for (int d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

long long checked_power(int p, int k, long long limit) {
  long long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > limit) throw Error(ErrKind::BadParameters, "order too large");
  }
  return n;
}

GroupTable make_direct_product(const std::vector<int>& factors) {
  if (factors.empty()) throw Error(ErrKind::BadParameters, "empty factor list");
  long long n = 1;
  for (int f : factors) {
    if (f < 1) throw Error(ErrKind::BadParameters, "factor < 1");
    n *= f;
    if (n > 4096) throw Error(ErrKind::BadParameters, "order too large");
  }
  const int k = static_cast<int>(factors.size());
  const int total = static_cast<int>(n);
  // Tuple id: lexicographic mixed-radix, last coordinate fastest.
  auto tuple_of = [&](int id) {
    std::vector<int> t(k);
    for (int i = k - 1; i >= 0; --i) {
      t[i] = id % factors[i];
      id /= factors[i];
    }
    return t;
  };
  auto id_of = [&](const std::vector<int>& t) {
    int id = 0;
    for (int i = 0; i < k; ++i) id = id * factors[i] + t[i];
    return id;
  };
  std::vector<std::vector<int>> raw(total, std::vector<int>(total));
  for (int a = 0; a < total; ++a) {
    std::vector<int> ta = tuple_of(a);
    for (int b = 0; b < total; ++b) {
      std::vector<int> tb = tuple_of(b);
      std::vector<int> tc(k);
      for (int i = 0; i < k; ++i) tc[i] = (ta[i] + tb[i]) % factors[i];
      raw[a][b] = id_of(tc) + 1;
    }
  }
  return GroupTable::validate(raw);
}

GroupTable make_dihedral(int k) {
  if (k < 1) throw Error(ErrKind::BadParameters, "dihedral degree < 1");
  const int n = 2 * k;
  // ids 1..k rotations r^0..r^{k-1}; ids k+1..2k reflections r^0 s..r^{k-1} s.
  auto mul = [&](int i, int j) {
    int ar = (i - 1) % k, af = (i - 1) / k;
    int br = (j - 1) % k, bf = (j - 1) / k;
    int cr, cf;
    if (af == 0) {
      cr = (ar + br) % k;
      cf = bf;
    } else {
      cr = ((ar - br) % k + k) % k;
      cf = 1 - bf;
    }
    return cf * k + cr + 1;
  };
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) raw[i - 1][j - 1] = mul(i, j);
  return GroupTable::validate(raw);
}

GroupTable make_quaternion() {
  // ids: 1, -1, i, -i, j, -j, k, -k
  struct Q {
    int base;  // 0=1, 1=i, 2=j, 3=k
    int sign;
  };
  auto decode = [](int id) { return Q{(id - 1) / 2, (id - 1) % 2 == 0 ? 1 : -1}; };
  auto encode = [](Q q) { return q.base * 2 + (q.sign == 1 ? 1 : 2); };
  // base multiplication with signs: i*j=k, j*k=i, k*i=j, reversed pairs negate
  auto mul_base = [](int a, int b, int& sign) {
    if (a == 0 || b == 0) {
      sign = 1;
      return a + b;
    }
    if (a == b) {
      sign = -1;  // i^2 = j^2 = k^2 = -1
      return 0;
    }
    static const int other[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}, {1, 1, -1, 1}};
    sign = sgn[a][b];
    return other[a][b];
  };
  std::vector<std::vector<int>> raw(8, std::vector<int>(8));
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      Q a = decode(i), b = decode(j);
      int s;
      int base = mul_base(a.base, b.base, s);
      raw[i - 1][j - 1] = encode(Q{base, a.sign * b.sign * s});
    }
  return GroupTable::validate(raw);
}

GroupTable make_heisenberg(int p) {
  if (!is_prime(p)) throw Error(ErrKind::BadParameters, "heisenberg needs prime p");
  long long n = checked_power(p, 3, 4096);
  // (a, b, c) = (m12, m13, m23), lexicographic; product adds entries with the
  // a*c' correction on m13.
  auto id_of = [&](int a, int b, int c) { return (a * p + b) * p + c + 1; };
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              raw[id_of(a, b, c) - 1][id_of(a2, b2, c2) - 1] =
                  id_of((a + a2) % p, (b + b2 + a * c2) % p, (c + c2) % p);
  return GroupTable::validate(raw);
}

GroupTable make_elementary_abelian(int p, int k) {
  if (!is_prime(p)) throw Error(ErrKind::BadParameters, "elementary-abelian needs prime p");
  if (k < 1) throw Error(ErrKind::BadParameters, "exponent < 1");
  checked_power(p, k, 4096);
  return make_direct_product(std::vector<int>(k, p));
}

GroupTable make_cyclic(int p, int k) {
  if (!is_prime(p)) throw Error(ErrKind::BadParameters, "cyclic family needs prime p");
  if (k < 1) throw Error(ErrKind::BadParameters, "exponent < 1");
  long long n = checked_power(p, k, 4096);
  return make_direct_product({static_cast<int>(n)});
}

}  // namespace

GroupTable generate_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Cyclic: return make_cyclic(spec.p, spec.k);
    case Family::ElementaryAbelian: return make_elementary_abelian(spec.p, spec.k);
    case Family::Dihedral: return make_dihedral(spec.k);
    case Family::Quaternion: return make_quaternion();
    case Family::Heisenberg: return make_heisenberg(spec.p);
    case Family::DirectProduct: return make_direct_product(spec.factors);
  }
  throw Error(ErrKind::BadParameters, "unknown family");
}

GroupTable relabel(const GroupTable& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n + 1)
    throw Error(ErrKind::BadPermutation, "permutation must have size n+1");
  std::vector<char> hit(n + 1, 0);
  for (int x = 1; x <= n; ++x) {
    int y = perm[x];
    if (y < 1 || y > n || hit[y]) throw Error(ErrKind::BadPermutation, "not a permutation");
    hit[y] = 1;
  }
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) raw[perm[a] - 1][perm[b] - 1] = perm[g.mul(a, b)];
  return GroupTable::validate(raw);
}

std::vector<int> random_permutation(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(n + 1);
  for (int i = 0; i <= n; ++i) perm[i] = i;
  for (int i = n; i >= 2; --i) {
    int j = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(i));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

}  // namespace pgi
