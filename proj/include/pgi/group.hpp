#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pgi/error.hpp"

namespace pgi {

// Validated multiplication-table group. Element ids are 1..n. The identity is
// discovered during validation, never assumed to sit at id 1.
class GroupTable {
 public:
  // Checks the group axioms on a raw n x n table and throws Error with the
  // first violated axiom (NotLatin, NoIdentity, NotAssociative).
  static GroupTable validate(const std::vector<std::vector<int>>& raw);

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[(a - 1) * n_ + (b - 1)]; }
  int inv(int a) const { return inverse_[a - 1]; }
  int element_order(int a) const;

  // Row-major table with 1-based entries; the byte-comparable payload.
  const std::vector<int>& flat() const { return table_; }
  std::vector<std::vector<int>> rows() const;

  bool operator==(const GroupTable& o) const {
    return n_ == o.n_ && table_ == o.table_;
  }

 private:
  GroupTable() = default;
  int n_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

GroupTable validate_group(const std::vector<std::vector<int>>& raw);

struct GroupProfile {
  int order = 0;
  int smallest_prime = 0;  // 1 for the trivial group
  bool is_p_group = false;
  int prime_power_exponent = 0;  // m with order = p^m when is_p_group
};

GroupProfile profile(const GroupTable& g);

// Subset of a group's elements, validated as a subgroup at construction:
// identity present, closed under the parent's product, size divides n.
class Subgroup {
 public:
  Subgroup(const GroupTable& parent, std::vector<int> elements);

  const std::vector<int>& elements() const { return elements_; }  // ascending
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(int x) const { return member_[x] != 0; }
  const GroupTable& parent() const { return *parent_; }

  bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }
  bool operator<(const Subgroup& o) const { return elements_ < o.elements_; }

 private:
  const GroupTable* parent_;
  std::vector<int> elements_;
  std::vector<char> member_;
};

// Smallest subgroup containing seed, by worklist closure.
Subgroup subgroup_generated(const GroupTable& g, const std::vector<int>& seed);

// Cosets of h in g, each sorted ascending, ordered by their minimal element
// (= front(), the deterministic representative).
struct CosetPartition {
  std::vector<std::vector<int>> cosets;
};

CosetPartition left_cosets(const GroupTable& g, const Subgroup& h);

// True iff inner is closed under conjugation by every element of outer.
// Throws NotNested if inner is not contained in outer.
bool is_normal(const GroupTable& g, const Subgroup& inner, const Subgroup& outer);

// Size of the smallest generating set, by trying all subsets of size 1, 2, ...
// in lexicographic order. The trivial group has rank 0.
int rank(const GroupTable& g);

struct IsoMap {
  // forward[x] for x in 1..n; slot 0 unused.
  std::vector<int> forward;

  int operator()(int x) const { return forward[x]; }
};

bool is_isomorphism(const GroupTable& g, const GroupTable& h, const IsoMap& phi);

// Independent oracle: backtracking over element images in id order, candidate
// images filtered by element order, with multiplicativity pruning on the
// assigned prefix. Deliberately not the generator-enumeration algorithm.
std::optional<IsoMap> brute_force_iso(const GroupTable& g, const GroupTable& h);

// Group file format: '#' comment lines ignored; first data line n; then n
// lines of n whitespace-separated integers in 1..n.
GroupTable read_group_file(std::istream& in);
GroupTable read_group_file(const std::string& path);
void write_group_file(std::ostream& out, const GroupTable& g);
std::string group_file_text(const GroupTable& g);

}  // namespace pgi
