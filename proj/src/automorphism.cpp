#include "hurwitz/automorphism.hpp"

#include <algorithm>
#include <deque>

#include "hurwitz/errors.hpp"

namespace hurwitz {

GroupAutomorphism::GroupAutomorphism(const PermGroup* group,
                                     std::vector<int> table)
    : group_(group), table_(std::move(table)) {
  const std::size_t n = group_->order();
  if (table_.size() != n)
    throw InvalidInput("automorphism table has wrong size");
  std::vector<char> hit(n, 0);
  for (int y : table_) {
    if (y < 0 || static_cast<std::size_t>(y) >= n || hit[y])
      throw InvalidInput("automorphism table is not a bijection");
    hit[y] = 1;
  }
  if (table_[0] != 0)
    throw InvalidInput("automorphism does not fix the identity");
  // phi(x g) = phi(x) phi(g) for every x and every generator g pins the
  // homomorphism property on all products.
  for (int g : group_->generator_ids())
    for (std::size_t x = 0; x < n; ++x)
      if (table_[group_->mul((int)x, g)] !=
          group_->mul(table_[x], table_[g]))
        throw InvalidInput("map is not a homomorphism");
}

GroupAutomorphism GroupAutomorphism::unchecked(const PermGroup* g,
                                               std::vector<int> table) {
  GroupAutomorphism a;
  a.group_ = g;
  a.table_ = std::move(table);
  return a;
}

GroupAutomorphism GroupAutomorphism::identity(const PermGroup& g) {
  std::vector<int> t(g.order());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = (int)i;
  return unchecked(&g, std::move(t));
}

Perm GroupAutomorphism::apply(const Perm& p) const {
  int id = group_->element_id(p);
  if (id < 0) throw InvalidInput("element not in the group");
  return group_->element(table_[id]);
}

bool GroupAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] != (int)i) return false;
  return true;
}

GroupAutomorphism GroupAutomorphism::after(const GroupAutomorphism& g) const {
  std::vector<int> t(table_.size());
  for (std::size_t x = 0; x < table_.size(); ++x) t[x] = table_[g.table_[x]];
  return unchecked(group_, std::move(t));
}

GroupAutomorphism GroupAutomorphism::inverse() const {
  std::vector<int> t(table_.size());
  for (std::size_t x = 0; x < table_.size(); ++x) t[table_[x]] = (int)x;
  return unchecked(group_, std::move(t));
}

std::vector<Perm> GroupAutomorphism::generator_images() const {
  std::vector<Perm> out;
  for (int g : group_->generator_ids()) out.push_back(group_->element(table_[g]));
  return out;
}

GroupAutomorphism inner_automorphism(const PermGroup& g, const Perm& a) {
  int aid = g.element_id(a);
  if (aid < 0)
    throw InvalidInput("conjugating element " + a.cycles() +
                       " is not in the group");
  std::vector<int> t(g.order());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g.conj(aid, (int)x);
  return GroupAutomorphism(&g, std::move(t));
}

std::size_t AutomorphismGroup::inner_count() const {
  return static_cast<std::size_t>(
      std::count(inner.begin(), inner.end(), true));
}

int AutomorphismGroup::index_of(const GroupAutomorphism& a) const {
  auto it = std::lower_bound(all.begin(), all.end(), a);
  if (it != all.end() && *it == a) return static_cast<int>(it - all.begin());
  return -1;
}

namespace {

// Extends generator images to a full table by closing products from the
// identity; returns false when the extension is inconsistent or not
// bijective.
bool extend_table(const PermGroup& g, const std::vector<int>& gen_ids,
                  const std::vector<int>& gen_images,
                  std::vector<int>& table) {
  const std::size_t n = g.order();
  table.assign(n, -1);
  table[0] = 0;
  std::deque<int> todo;
  todo.push_back(0);
  for (std::size_t k = 0; k < gen_ids.size(); ++k) {
    int gi = gen_ids[k];
    if (table[gi] >= 0) {
      if (table[gi] != gen_images[k]) return false;
      continue;
    }
    table[gi] = gen_images[k];
    todo.push_back(gi);
  }
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (std::size_t k = 0; k < gen_ids.size(); ++k) {
      int y = g.mul(x, gen_ids[k]);
      int img = g.mul(table[x], gen_images[k]);
      if (table[y] < 0) {
        table[y] = img;
        todo.push_back(y);
      } else if (table[y] != img) {
        return false;
      }
    }
  }
  std::vector<char> hit(n, 0);
  for (int y : table) {
    if (y < 0 || hit[y]) return false;
    hit[y] = 1;
  }
  // Full consistency against the generating set.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < gen_ids.size(); ++k)
      if (table[g.mul((int)x, gen_ids[k])] !=
          g.mul(table[x], table[gen_ids[k]]))
        return false;
  return true;
}

}  // namespace

AutomorphismGroup AutomorphismGroup::compute(const PermGroup& g) {
  AutomorphismGroup out;
  out.group = &g;

  std::vector<int> gen_ids = g.generator_ids();
  // Drop repeated or identity generators; they add nothing to the search.
  std::sort(gen_ids.begin(), gen_ids.end());
  gen_ids.erase(std::unique(gen_ids.begin(), gen_ids.end()), gen_ids.end());
  if (!gen_ids.empty() && gen_ids.front() == 0)
    gen_ids.erase(gen_ids.begin());

  const int n = static_cast<int>(g.order());
  std::vector<std::vector<int>> candidates(gen_ids.size());
  for (std::size_t k = 0; k < gen_ids.size(); ++k) {
    int ord = g.element_order(gen_ids[k]);
    for (int x = 1; x < n; ++x)
      if (g.element_order(x) == ord) candidates[k].push_back(x);
  }

  std::vector<int> assign(gen_ids.size(), 0);
  std::vector<int> images(gen_ids.size());
  std::vector<int> table;
  std::vector<std::vector<int>> accepted;

  if (gen_ids.empty()) {
    accepted.push_back({0});
    if (n != 1) throw Error("generator-free group of order > 1");
  } else {
    // Depth-first over order-preserving generator images.
    std::size_t depth = 0;
    while (true) {
      if (assign[depth] == static_cast<int>(candidates[depth].size())) {
        if (depth == 0) break;
        assign[depth] = 0;
        --depth;
        ++assign[depth];
        continue;
      }
      images[depth] = candidates[depth][assign[depth]];
      if (depth + 1 < gen_ids.size()) {
        ++depth;
        continue;
      }
      if (extend_table(g, gen_ids, images, table)) accepted.push_back(table);
      ++assign[depth];
    }
  }

  std::sort(accepted.begin(), accepted.end());
  accepted.erase(std::unique(accepted.begin(), accepted.end()),
                 accepted.end());
  for (auto& t : accepted) out.all.emplace_back(&g, std::move(t));

  // Mark the inner ones.
  std::vector<std::vector<int>> inner_tables;
  for (int a = 0; a < n; ++a) {
    std::vector<int> t(n);
    for (int x = 0; x < n; ++x) t[x] = g.conj(a, x);
    inner_tables.push_back(std::move(t));
  }
  std::sort(inner_tables.begin(), inner_tables.end());
  inner_tables.erase(std::unique(inner_tables.begin(), inner_tables.end()),
                     inner_tables.end());
  out.inner.resize(out.all.size());
  for (std::size_t i = 0; i < out.all.size(); ++i)
    out.inner[i] = std::binary_search(inner_tables.begin(),
                                      inner_tables.end(), out.all[i].table());
  return out;
}

}  // namespace hurwitz
