#include "pgi/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace pgi {

GroupTable GroupTable::validate(const std::vector<std::vector<int>>& raw) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) throw Error(ErrKind::BadInput, "empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(raw[i].size()) != n)
      throw Error(ErrKind::BadInput,
                  "row " + std::to_string(i + 1) + " has " +
                      std::to_string(raw[i].size()) + " entries, expected " +
                      std::to_string(n));
    for (int v : raw[i])
      if (v < 1 || v > n)
        throw Error(ErrKind::BadInput, "entry " + std::to_string(v) +
                                           " out of range 1.." + std::to_string(n));
  }

  // Latin square: every row and every column is a permutation of 1..n.
  std::vector<char> seen(n + 1);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int v = raw[i][j];
      if (seen[v])
        throw Error(ErrKind::NotLatin,
                    "duplicate entry " + std::to_string(v) + " in row " +
                        std::to_string(i + 1),
                    {i + 1, v});
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      int v = raw[i][j];
      if (seen[v])
        throw Error(ErrKind::NotLatin,
                    "duplicate entry " + std::to_string(v) + " in column " +
                        std::to_string(j + 1),
                    {j + 1, v});
      seen[v] = 1;
    }
  }

  int identity = 0;
  for (int e = 1; e <= n; ++e) {
    bool ok = true;
    for (int x = 1; x <= n && ok; ++x)
      ok = raw[e - 1][x - 1] == x && raw[x - 1][e - 1] == x;
    if (ok) {
      identity = e;
      break;  // two-sided identities are unique
    }
  }
  if (identity == 0) throw Error(ErrKind::NoIdentity, "no two-sided identity");

  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        int ab_c = raw[raw[a - 1][b - 1] - 1][c - 1];
        int a_bc = raw[a - 1][raw[b - 1][c - 1] - 1];
        if (ab_c != a_bc)
          throw Error(ErrKind::NotAssociative,
                      "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                          std::to_string(c) + " = " + std::to_string(ab_c) +
                          " but " + std::to_string(a) + "*(" + std::to_string(b) +
                          "*" + std::to_string(c) + ") = " + std::to_string(a_bc),
                      {a, b, c});
      }

  GroupTable g;
  g.n_ = n;
  g.identity_ = identity;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table_[i * n + j] = raw[i][j];

  // Inverses exist by Latin + identity + associativity; asserted anyway.
  g.inverse_.assign(n, 0);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b)
      if (g.mul(a, b) == identity && g.mul(b, a) == identity) {
        g.inverse_[a - 1] = b;
        break;
      }
    if (g.inverse_[a - 1] == 0)
      throw Error(ErrKind::InternalContradiction,
                  "no inverse for element " + std::to_string(a));
  }
  return g;
}

int GroupTable::element_order(int a) const {
  int x = a, ord = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

std::vector<std::vector<int>> GroupTable::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = table_[i * n_ + j];
  return out;
}

GroupTable validate_group(const std::vector<std::vector<int>>& raw) {
  return GroupTable::validate(raw);
}

GroupProfile profile(const GroupTable& g) {
  GroupProfile p;
  p.order = g.order();
  if (p.order == 1) {
    p.smallest_prime = 1;
    p.is_p_group = true;
    p.prime_power_exponent = 0;
    return p;
  }
  int n = p.order;
  int sp = 0;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      sp = d;
      break;
    }
  if (sp == 0) sp = n;  // n itself prime
  p.smallest_prime = sp;
  int m = 0, rest = n;
  while (rest % sp == 0) {
    rest /= sp;
    ++m;
  }
  p.is_p_group = rest == 1;
  p.prime_power_exponent = p.is_p_group ? m : 0;
  return p;
}

Subgroup::Subgroup(const GroupTable& parent, std::vector<int> elements)
    : parent_(&parent), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  const int n = parent.order();
  member_.assign(n + 1, 0);
  for (int x : elements_) {
    if (x < 1 || x > n) throw Error(ErrKind::BadInput, "element id out of range");
    member_[x] = 1;
  }
  if (!member_[parent.identity()])
    throw Error(ErrKind::BadInput, "subgroup does not contain the identity");
  for (int a : elements_)
    for (int b : elements_)
      if (!member_[parent.mul(a, b)])
        throw Error(ErrKind::BadInput, "subset not closed under product");
  if (n % size() != 0)
    throw Error(ErrKind::InternalContradiction, "subgroup size violates Lagrange");
}

Subgroup subgroup_generated(const GroupTable& g, const std::vector<int>& seed) {
  const int n = g.order();
  std::vector<char> in(n + 1, 0);
  std::vector<int> members;
  std::vector<int> work;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      work.push_back(x);
    }
  };
  add(g.identity());
  for (int s : seed) {
    if (s < 1 || s > n) throw Error(ErrKind::BadInput, "seed element out of range");
    add(s);
  }
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < members.size(); ++i) {
      add(g.mul(x, members[i]));
      add(g.mul(members[i], x));
    }
  }
  return Subgroup(g, std::move(members));
}

CosetPartition left_cosets(const GroupTable& g, const Subgroup& h) {
  const int n = g.order();
  std::vector<char> seen(n + 1, 0);
  CosetPartition part;
  for (int x = 1; x <= n; ++x) {
    if (seen[x]) continue;
    std::vector<int> coset;
    coset.reserve(h.size());
    for (int a : h.elements()) {
      int y = g.mul(x, a);
      seen[y] = 1;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    // x is unvisited and minimal in its coset by the ascending scan.
    part.cosets.push_back(std::move(coset));
  }
  return part;
}

bool is_normal(const GroupTable& g, const Subgroup& inner, const Subgroup& outer) {
  for (int a : inner.elements())
    if (!outer.contains(a))
      throw Error(ErrKind::NotNested, "inner subgroup not contained in outer");
  for (int x : outer.elements()) {
    int xi = g.inv(x);
    for (int a : inner.elements())
      if (!inner.contains(g.mul(g.mul(x, a), xi))) return false;
  }
  return true;
}

namespace {

// Visits k-subsets of 1..n in lexicographic order; returns false when done.
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

int rank(const GroupTable& g) {
  const int n = g.order();
  if (n == 1) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 1);
    do {
      if (subgroup_generated(g, c).size() == n) return k;
    } while (next_combination(c, n));
  }
  throw Error(ErrKind::InternalContradiction, "group not generated by itself");
}

bool is_isomorphism(const GroupTable& g, const GroupTable& h, const IsoMap& phi) {
  const int n = g.order();
  if (h.order() != n) return false;
  if (static_cast<int>(phi.forward.size()) != n + 1) return false;
  std::vector<char> hit(n + 1, 0);
  for (int x = 1; x <= n; ++x) {
    int y = phi.forward[x];
    if (y < 1 || y > n || hit[y]) return false;
    hit[y] = 1;
  }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (phi.forward[g.mul(a, b)] != h.mul(phi.forward[a], phi.forward[b]))
        return false;
  return true;
}

namespace {

struct BruteSearch {
  const GroupTable& g;
  const GroupTable& h;
  int n;
  std::vector<int> g_ord, h_ord;
  std::vector<int> fwd, rev;  // 0 = unassigned
  std::vector<int> todo;      // element ids of g, id order, identity excluded

  bool consistent(int x) {
    // Check products of x against every assigned element (both sides).
    for (int a = 1; a <= n; ++a) {
      if (fwd[a] == 0) continue;
      int p = g.mul(a, x), q = h.mul(fwd[a], fwd[x]);
      if (fwd[p] != 0 ? fwd[p] != q : rev[q] != 0) return false;
      p = g.mul(x, a), q = h.mul(fwd[x], fwd[a]);
      if (fwd[p] != 0 ? fwd[p] != q : rev[q] != 0) return false;
    }
    return true;
  }

  bool extend(std::size_t i) {
    if (i == todo.size()) return true;
    int x = todo[i];
    for (int y = 1; y <= n; ++y) {
      if (rev[y] != 0 || h_ord[y] != g_ord[x]) continue;
      fwd[x] = y;
      rev[y] = x;
      if (consistent(x) && extend(i + 1)) return true;
      fwd[x] = 0;
      rev[y] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<IsoMap> brute_force_iso(const GroupTable& g, const GroupTable& h) {
  if (g.order() != h.order()) return std::nullopt;
  const int n = g.order();
  BruteSearch s{g, h, n, std::vector<int>(n + 1), std::vector<int>(n + 1),
                std::vector<int>(n + 1, 0), std::vector<int>(n + 1, 0), {}};
  for (int x = 1; x <= n; ++x) {
    s.g_ord[x] = g.element_order(x);
    s.h_ord[x] = h.element_order(x);
  }
  {
    auto a = s.g_ord, b = s.h_ord;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;  // order multisets differ; no bijection qualifies
  }
  s.fwd[g.identity()] = h.identity();
  s.rev[h.identity()] = g.identity();
  for (int x = 1; x <= n; ++x)
    if (x != g.identity()) s.todo.push_back(x);
  if (!s.extend(0)) return std::nullopt;
  IsoMap phi{std::move(s.fwd)};
  if (!is_isomorphism(g, h, phi))
    throw Error(ErrKind::InternalContradiction, "brute_force_iso produced a non-isomorphism");
  return phi;
}

GroupTable read_group_file(std::istream& in) {
  std::vector<std::string> data_lines;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    data_lines.push_back(line);
  }
  if (data_lines.empty()) throw Error(ErrKind::BadInput, "empty group file");
  std::istringstream head(data_lines[0]);
  long long n = 0;
  if (!(head >> n) || n < 1) throw Error(ErrKind::BadInput, "bad group order line");
  std::string extra;
  if (head >> extra) throw Error(ErrKind::BadInput, "trailing tokens after order");
  if (static_cast<long long>(data_lines.size()) != n + 1)
    throw Error(ErrKind::BadInput,
                "expected " + std::to_string(n) + " table rows, found " +
                    std::to_string(data_lines.size() - 1));
  std::vector<std::vector<int>> raw(n);
  for (long long i = 0; i < n; ++i) {
    std::istringstream row(data_lines[i + 1]);
    long long v;
    while (row >> v) {
      if (v < 1 || v > n)
        throw Error(ErrKind::BadInput, "table entry out of range: " + std::to_string(v));
      raw[i].push_back(static_cast<int>(v));
    }
    if (static_cast<long long>(raw[i].size()) != n)
      throw Error(ErrKind::BadInput, "row " + std::to_string(i + 1) +
                                         " has wrong number of entries");
  }
  return GroupTable::validate(raw);
}

GroupTable read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrKind::BadInput, "cannot open " + path);
  return read_group_file(in);
}

void write_group_file(std::ostream& out, const GroupTable& g) {
  const int n = g.order();
  out << n << '\n';
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j > 1) out << ' ';
      out << g.mul(i, j);
    }
    out << '\n';
  }
}

std::string group_file_text(const GroupTable& g) {
  std::ostringstream os;
  write_group_file(os, g);
  return os.str();
}

}  // namespace pgi
