#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "hurwitz/automorphism.hpp"
#include "hurwitz/perm_group.hpp"

namespace hurwitz {

// Multiset invariants of a tuple's entries: conjugacy-class labels with
// multiplicities plus the element orders. The order multiset is determined
// by the class multiset.
struct BranchSignature {
  std::vector<std::pair<std::string, int>> classes;  // sorted by label
  std::vector<int> orders;                           // sorted
  auto operator<=>(const BranchSignature&) const = default;
  std::string str() const;
};

// An n-tuple (t_1,...,t_n), n >= 3, of nontrivial group elements whose
// product (right-to-left) is the identity and which together generate the
// whole group. Entries are stored as ids into the group's sorted element
// table, so tuples hash and compare cheaply.
class Datum {
 public:
  enum class Defect {
    none,
    too_short,
    entry_outside_group,
    product_not_identity,
    trivial_entry,
    proper_subgroup,
  };
  struct Check {
    Defect defect = Defect::none;
    std::string message;
    bool ok() const { return defect == Defect::none; }
  };

  static Check check(const PermGroup& g, const std::vector<Perm>& entries);
  // Throws InvalidInput naming the violated condition.
  static Datum make(std::shared_ptr<const PermGroup> g,
                    const std::vector<Perm>& entries);
  // Fast path for move outputs, where validity is preserved by construction.
  static Datum from_ids_unchecked(std::shared_ptr<const PermGroup> g,
                                  std::vector<int> ids);

  const PermGroup& group() const { return *group_; }
  const std::shared_ptr<const PermGroup>& group_ptr() const { return group_; }
  int size() const { return static_cast<int>(ids_.size()); }
  int entry_id(int i) const { return ids_[i]; }
  const std::vector<int>& entry_ids() const { return ids_; }
  Perm entry(int i) const { return group_->element(ids_[i]); }
  std::vector<Perm> entries() const;

  long genus() const;
  BranchSignature signature() const;

  bool operator==(const Datum& o) const;
  bool operator<(const Datum& o) const { return ids_ < o.ids_; }

  std::string str() const;  // "(1 2),(2 3),(2 3),(1 2)"

 private:
  Datum(std::shared_ptr<const PermGroup> g, std::vector<int> ids)
      : group_(std::move(g)), ids_(std::move(ids)) {}

  std::shared_ptr<const PermGroup> group_;
  std::vector<int> ids_;
};

// Lexicographically least tuple among all simultaneous conjugates
// (g t_1 g^-1, ..., g t_n g^-1).
std::vector<int> inn_canonical_ids(const PermGroup& g,
                                   const std::vector<int>& ids);
Datum inn_canonical(const Datum& d);

// Lexicographically least tuple among all coordinatewise images under
// Aut G (which contains Inn G, so this refines inn_canonical).
std::vector<int> aut_canonical_ids(const AutomorphismGroup& auts,
                                   const std::vector<int>& ids);
Datum aut_canonical(const Datum& d, const AutomorphismGroup& auts);

// Signature with class labels that are stable under Aut G: each class is
// labeled by the least label in its Aut-orbit of classes, so the result is
// constant on orbits of the full Hurwitz + Aut G action.
BranchSignature signature_aut_stable(const Datum& d,
                                     const AutomorphismGroup& auts);

}  // namespace hurwitz
