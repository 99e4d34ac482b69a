#include "hurwitz/perm_group.hpp"

#include <algorithm>
#include <deque>

#include "hurwitz/errors.hpp"

namespace hurwitz {

PermGroup::PermGroup(int degree, std::vector<Perm> generators,
                     std::string name, std::size_t order_cap)
    : degree_(degree),
      name_(std::move(name)),
      order_cap_(order_cap),
      generators_(std::move(generators)) {
  if (degree_ < 0) throw InvalidInput("group degree must be non-negative");
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw InvalidInput("generator " + g.cycles() + " has degree " +
                         std::to_string(g.degree()) + ", expected " +
                         std::to_string(degree_));
}

void PermGroup::ensure_elements() const {
  std::call_once(elements_once_, [this] {
    std::unordered_map<Perm, int, PermHash> seen;
    std::deque<Perm> todo;
    Perm id = Perm::identity(degree_);
    seen.emplace(id, 0);
    todo.push_back(id);
    for (const auto& g : generators_) {
      if (seen.emplace(g, 0).second) todo.push_back(g);
    }
    while (!todo.empty()) {
      Perm cur = std::move(todo.front());
      todo.pop_front();
      for (const auto& g : generators_) {
        Perm prod = cur * g;
        if (seen.emplace(prod, 0).second) {
          if (seen.size() > order_cap_)
            throw CapExceeded("group order exceeds cap " +
                              std::to_string(order_cap_) +
                              " (enumerated " + std::to_string(seen.size()) +
                              " elements so far)");
          todo.push_back(std::move(prod));
        }
      }
    }
    std::vector<Perm> elems;
    elems.reserve(seen.size());
    for (const auto& [p, _] : seen) elems.push_back(p);
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) seen[elems[i]] = (int)i;
    elements_ = std::move(elems);
    id_of_ = std::move(seen);
  });
}

const std::vector<Perm>& PermGroup::elements() const {
  ensure_elements();
  return elements_;
}

int PermGroup::element_id(const Perm& p) const {
  ensure_elements();
  if (p.degree() != degree_) return -1;
  auto it = id_of_.find(p);
  return it == id_of_.end() ? -1 : it->second;
}

std::vector<int> PermGroup::generator_ids() const {
  std::vector<int> ids;
  ids.reserve(generators_.size());
  for (const auto& g : generators_) ids.push_back(element_id(g));
  return ids;
}

void PermGroup::ensure_tables() const {
  ensure_elements();
  std::call_once(tables_once_, [this] {
    const std::size_t n = elements_.size();
    mul_table_.resize(n * n);
    inv_table_.resize(n);
    order_table_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto it = id_of_.find(elements_[a] * elements_[b]);
        mul_table_[a * n + b] = it->second;
      }
      inv_table_[a] = id_of_.find(elements_[a].inverse())->second;
      order_table_[a] = elements_[a].order();
    }
  });
}

int PermGroup::mul(int a, int b) const {
  ensure_tables();
  return mul_table_[static_cast<std::size_t>(a) * elements_.size() + b];
}

int PermGroup::inv(int a) const {
  ensure_tables();
  return inv_table_[a];
}

int PermGroup::element_order(int a) const {
  ensure_tables();
  return order_table_[a];
}

void PermGroup::ensure_center() const {
  ensure_tables();
  std::call_once(center_once_, [this] {
    std::vector<int> gen_ids = generator_ids();
    for (int x = 0; x < static_cast<int>(elements_.size()); ++x) {
      bool central = true;
      for (int g : gen_ids)
        if (mul(x, g) != mul(g, x)) {
          central = false;
          break;
        }
      if (central) center_ids_.push_back(x);
    }
  });
}

const std::vector<int>& PermGroup::center_ids() const {
  ensure_center();
  return center_ids_;
}

std::vector<Perm> PermGroup::center() const {
  std::vector<Perm> out;
  for (int id : center_ids()) out.push_back(element(id));
  return out;
}

bool PermGroup::is_abelian() const {
  for (std::size_t a = 0; a < generators_.size(); ++a)
    for (std::size_t b = a + 1; b < generators_.size(); ++b)
      if (generators_[a] * generators_[b] != generators_[b] * generators_[a])
        return false;
  return true;
}

void PermGroup::ensure_classes() const {
  ensure_tables();
  std::call_once(classes_once_, [this] {
    const int n = static_cast<int>(elements_.size());
    class_of_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
      if (class_of_[x] >= 0) continue;
      const int c = static_cast<int>(classes_.size());
      std::vector<int> cls;
      for (int g = 0; g < n; ++g) {
        int y = conj(g, x);
        if (class_of_[y] < 0) {
          class_of_[y] = c;
          cls.push_back(y);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes_.push_back(std::move(cls));
    }
    class_labels_.reserve(classes_.size());
    for (const auto& cls : classes_)
      class_labels_.push_back(elements_[cls.front()].cycles());
  });
}

const std::vector<std::vector<int>>& PermGroup::conjugacy_classes() const {
  ensure_classes();
  return classes_;
}

int PermGroup::class_of(int id) const {
  ensure_classes();
  return class_of_[id];
}

const std::string& PermGroup::class_label(int c) const {
  ensure_classes();
  return class_labels_[c];
}

std::size_t PermGroup::subgroup_order(const std::vector<int>& ids) const {
  ensure_tables();
  std::vector<char> in(elements_.size(), 0);
  std::vector<int> stack;
  in[0] = 1;
  stack.push_back(0);
  std::size_t count = 1;
  for (int g : ids) {
    if (!in[g]) {
      in[g] = 1;
      stack.push_back(g);
      ++count;
    }
  }
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int g : ids) {
      int y = mul(x, g);
      if (!in[y]) {
        in[y] = 1;
        stack.push_back(y);
        ++count;
      }
    }
  }
  return count;
}

bool PermGroup::same_group(const PermGroup& o) const {
  if (this == &o) return true;
  if (degree_ != o.degree_) return false;
  return elements() == o.elements();
}

}  // namespace hurwitz
