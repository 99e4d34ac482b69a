#pragma once

#include <cstddef>
#include <vector>

#include "hurwitz/perm_group.hpp"

namespace hurwitz {

// Automorphism of a fixed PermGroup, stored as the full image table on
// element ids. Construction verifies bijectivity and the homomorphism
// property against the group's generating set, which determines the map
// on all products.
class GroupAutomorphism {
 public:
  GroupAutomorphism(const PermGroup* group, std::vector<int> table);
  static GroupAutomorphism identity(const PermGroup& g);

  const PermGroup& group() const { return *group_; }
  int apply(int id) const { return table_[id]; }
  Perm apply(const Perm& p) const;
  const std::vector<int>& table() const { return table_; }

  bool is_identity() const;
  // (f.after(g))(x) = f(g(x)).
  GroupAutomorphism after(const GroupAutomorphism& g) const;
  GroupAutomorphism inverse() const;
  std::vector<Perm> generator_images() const;

  bool operator==(const GroupAutomorphism& o) const {
    return table_ == o.table_;
  }
  bool operator<(const GroupAutomorphism& o) const {
    return table_ < o.table_;
  }

 private:
  GroupAutomorphism() = default;
  static GroupAutomorphism unchecked(const PermGroup* g,
                                     std::vector<int> table);

  const PermGroup* group_ = nullptr;
  std::vector<int> table_;
};

// x -> a x a^-1; throws InvalidInput if a is not a member of g.
GroupAutomorphism inner_automorphism(const PermGroup& g, const Perm& a);

// The full automorphism group, found by assigning generator images among
// elements of equal order and validating each candidate map.
struct AutomorphismGroup {
  const PermGroup* group = nullptr;
  std::vector<GroupAutomorphism> all;  // sorted by image table
  std::vector<bool> inner;             // aligned with `all`

  std::size_t size() const { return all.size(); }
  std::size_t inner_count() const;
  std::size_t out_order() const { return all.size() / inner_count(); }
  bool aut_equals_inn() const { return inner_count() == all.size(); }
  int index_of(const GroupAutomorphism& a) const;  // -1 if absent

  static AutomorphismGroup compute(const PermGroup& g);
};

}  // namespace hurwitz
