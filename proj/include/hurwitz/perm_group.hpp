#pragma once

#include <cstddef>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

// Finite permutation group given by generators. Element enumeration, the
// multiplication table on element ids, conjugacy classes and the center
// are memoized behind std::call_once, so a constructed group can be shared
// across threads and every accessor below is read-only after its first
// call.
//
// Element ids index the lexicographically sorted element table; id 0 is
// always the identity and comparing ids agrees with comparing Perms.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultOrderCap = 2000;

  PermGroup(int degree, std::vector<Perm> generators, std::string name = "",
            std::size_t order_cap = kDefaultOrderCap);

  PermGroup(const PermGroup&) = delete;
  PermGroup& operator=(const PermGroup&) = delete;

  int degree() const { return degree_; }
  const std::string& name() const { return name_; }
  const std::vector<Perm>& generators() const { return generators_; }
  std::size_t order_cap() const { return order_cap_; }

  // Enumeration; throws CapExceeded when the closure passes the order cap.
  const std::vector<Perm>& elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Perm& p) const { return element_id(p) >= 0; }
  int element_id(const Perm& p) const;  // -1 if not a member
  const Perm& element(int id) const { return elements()[id]; }
  std::vector<int> generator_ids() const;

  // Arithmetic on element ids (table backed, right-to-left).
  int mul(int a, int b) const;
  int inv(int a) const;
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int a) const;

  const std::vector<int>& center_ids() const;
  std::vector<Perm> center() const;
  bool is_abelian() const;
  bool center_trivial() const { return center_ids().size() == 1; }

  // Conjugacy classes, ordered by least member id; each class sorted.
  const std::vector<std::vector<int>>& conjugacy_classes() const;
  int class_of(int id) const;
  std::size_t class_count() const { return conjugacy_classes().size(); }
  // Cycle notation of the least member.
  const std::string& class_label(int c) const;

  // Order of the subgroup generated by the given element ids.
  std::size_t subgroup_order(const std::vector<int>& ids) const;

  bool same_group(const PermGroup& o) const;

 private:
  void ensure_elements() const;
  void ensure_tables() const;
  void ensure_classes() const;
  void ensure_center() const;

  int degree_;
  std::string name_;
  std::size_t order_cap_;
  std::vector<Perm> generators_;

  mutable std::once_flag elements_once_, tables_once_, classes_once_,
      center_once_;
  mutable std::vector<Perm> elements_;
  mutable std::unordered_map<Perm, int, PermHash> id_of_;
  mutable std::vector<int> mul_table_, inv_table_, order_table_;
  mutable std::vector<int> class_of_;
  mutable std::vector<std::vector<int>> classes_;
  mutable std::vector<std::string> class_labels_;
  mutable std::vector<int> center_ids_;
};

}  // namespace hurwitz
