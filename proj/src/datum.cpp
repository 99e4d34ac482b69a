#include "hurwitz/datum.hpp"

#include <algorithm>
#include <map>

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::string BranchSignature::str() const {
  std::string out = "orders=[";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(orders[i]);
  }
  out += "] classes={";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out += ", ";
    out += classes[i].first + " x" + std::to_string(classes[i].second);
  }
  out += '}';
  return out;
}

Datum::Check Datum::check(const PermGroup& g,
                          const std::vector<Perm>& entries) {
  if (entries.size() < 3)
    return {Defect::too_short, "a datum needs n >= 3 entries, got " +
                                   std::to_string(entries.size())};
  std::vector<int> ids;
  ids.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    int id = g.element_id(entries[i]);
    if (id < 0)
      return {Defect::entry_outside_group,
              "entry " + std::to_string(i + 1) + " = " + entries[i].cycles() +
                  " is not an element of the group"};
    ids.push_back(id);
  }
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == 0)
      return {Defect::trivial_entry,
              "entry " + std::to_string(i + 1) + " is the identity"};
  int prod = 0;
  for (int id : ids) prod = g.mul(prod, id);
  if (prod != 0)
    return {Defect::product_not_identity,
            "product of entries is " + g.element(prod).cycles() +
                ", not the identity"};
  std::size_t sub = g.subgroup_order(ids);
  if (sub != g.order())
    return {Defect::proper_subgroup,
            "entries generate a proper subgroup of order " +
                std::to_string(sub) + " < " + std::to_string(g.order())};
  return {};
}

Datum Datum::make(std::shared_ptr<const PermGroup> g,
                  const std::vector<Perm>& entries) {
  Check c = check(*g, entries);
  if (!c.ok()) throw InvalidInput("invalid datum: " + c.message);
  std::vector<int> ids;
  ids.reserve(entries.size());
  for (const auto& e : entries) ids.push_back(g->element_id(e));
  return Datum(std::move(g), std::move(ids));
}

Datum Datum::from_ids_unchecked(std::shared_ptr<const PermGroup> g,
                                std::vector<int> ids) {
  return Datum(std::move(g), std::move(ids));
}

std::vector<Perm> Datum::entries() const {
  std::vector<Perm> out;
  out.reserve(ids_.size());
  for (int id : ids_) out.push_back(group_->element(id));
  return out;
}

long Datum::genus() const {
  const long order = static_cast<long>(group_->order());
  long rhs = -2 * order;  // 2g - 2
  for (int id : ids_) {
    long e = group_->element_order(id);
    rhs += (order / e) * (e - 1);
  }
  if (rhs % 2 != 0 || rhs + 2 < 0)
    throw Error("Riemann-Hurwitz count " + std::to_string(rhs) +
                " is not of the form 2g-2 with g >= 0");
  return (rhs + 2) / 2;
}

namespace {

BranchSignature build_signature(const Datum& d,
                                const std::vector<std::string>* relabel) {
  const PermGroup& g = d.group();
  std::map<std::string, int> counts;
  BranchSignature sig;
  for (int i = 0; i < d.size(); ++i) {
    int c = g.class_of(d.entry_id(i));
    counts[relabel ? (*relabel)[c] : g.class_label(c)] += 1;
    sig.orders.push_back(g.element_order(d.entry_id(i)));
  }
  sig.classes.assign(counts.begin(), counts.end());
  std::sort(sig.orders.begin(), sig.orders.end());
  return sig;
}

}  // namespace

BranchSignature Datum::signature() const {
  return build_signature(*this, nullptr);
}

BranchSignature signature_aut_stable(const Datum& d,
                                     const AutomorphismGroup& auts) {
  const PermGroup& g = d.group();
  std::vector<std::string> stable(g.class_count());
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    int rep = g.conjugacy_classes()[c].front();
    std::string best = g.class_label((int)c);
    for (const auto& a : auts.all)
      best = std::min(best, g.class_label(g.class_of(a.apply(rep))));
    stable[c] = std::move(best);
  }
  return build_signature(d, &stable);
}

bool Datum::operator==(const Datum& o) const {
  return ids_ == o.ids_ && group_->same_group(*o.group_);
}

std::string Datum::str() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += ',';
    s += entry(i).cycles();
  }
  return s;
}

std::vector<int> inn_canonical_ids(const PermGroup& g,
                                   const std::vector<int>& ids) {
  std::vector<int> best = ids;
  std::vector<int> cur(ids.size());
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < ids.size(); ++i) cur[i] = g.conj(a, ids[i]);
    if (cur < best) best = cur;
  }
  return best;
}

Datum inn_canonical(const Datum& d) {
  return Datum::from_ids_unchecked(
      d.group_ptr(), inn_canonical_ids(d.group(), d.entry_ids()));
}

std::vector<int> aut_canonical_ids(const AutomorphismGroup& auts,
                                   const std::vector<int>& ids) {
  std::vector<int> best = ids;
  std::vector<int> cur(ids.size());
  for (const auto& a : auts.all) {
    for (std::size_t i = 0; i < ids.size(); ++i) cur[i] = a.apply(ids[i]);
    if (cur < best) best = cur;
  }
  return best;
}

Datum aut_canonical(const Datum& d, const AutomorphismGroup& auts) {
  return Datum::from_ids_unchecked(d.group_ptr(),
                                   aut_canonical_ids(auts, d.entry_ids()));
}

}  // namespace hurwitz
