#include "hurwitz/classify.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "hurwitz/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hurwitz {

namespace {

double pow_order(std::size_t order, int exp) {
  double v = 1;
  for (int k = 0; k < exp; ++k) v *= static_cast<double>(order);
  return v;
}

// Decodes candidate index -> prefix ids; returns false when the candidate
// fails one of the three datum conditions.
bool candidate_tuple(const PermGroup& g, std::size_t order, int n,
                     std::size_t cand, std::vector<int>& ids) {
  ids.resize(n);
  std::size_t rest = cand;
  int prod = 0;
  for (int k = n - 2; k >= 0; --k) {
    ids[k] = static_cast<int>(rest % order);
    rest /= order;
    if (ids[k] == 0) return false;
  }
  for (int k = 0; k < n - 1; ++k) prod = g.mul(prod, ids[k]);
  ids[n - 1] = g.inv(prod);
  if (ids[n - 1] == 0) return false;
  return g.subgroup_order(ids) == g.order();
}

}  // namespace

std::vector<Datum> enumerate_data_serial(std::shared_ptr<const PermGroup> g,
                                         int n, const EnumOptions& opts) {
  if (n < 3) throw InvalidInput("data need n >= 3 branch points");
  const std::size_t order = g->order();
  if (pow_order(order, n - 1) > static_cast<double>(opts.enum_cap))
    throw CapExceeded("enumeration space |G|^(n-1) exceeds cap " +
                      std::to_string(opts.enum_cap));
  std::size_t total = 1;
  for (int k = 0; k < n - 1; ++k) total *= order;

  std::vector<Datum> out;
  std::vector<int> ids;
  for (std::size_t cand = 0; cand < total; ++cand)
    if (candidate_tuple(*g, order, n, cand, ids))
      out.push_back(Datum::from_ids_unchecked(g, ids));
  return out;
}

std::vector<Datum> enumerate_data(std::shared_ptr<const PermGroup> g, int n,
                                  const EnumOptions& opts) {
  if (opts.threads <= 1) return enumerate_data_serial(g, n, opts);
  if (n < 3) throw InvalidInput("data need n >= 3 branch points");
  const std::size_t order = g->order();
  if (pow_order(order, n - 1) > static_cast<double>(opts.enum_cap))
    throw CapExceeded("enumeration space |G|^(n-1) exceeds cap " +
                      std::to_string(opts.enum_cap));
  std::size_t total = 1;
  for (int k = 0; k < n - 1; ++k) total *= order;
  g->mul(0, 0);  // build tables before the parallel region

  const int nthreads = opts.threads;
  std::vector<std::vector<std::vector<int>>> found(nthreads);
#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
#endif
  {
#ifdef _OPENMP
    const int tid = omp_get_thread_num();
#else
    const int tid = 0;
#endif
    std::vector<int> ids;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (long cand = 0; cand < static_cast<long>(total); ++cand)
      if (candidate_tuple(*g, order, n, static_cast<std::size_t>(cand), ids))
        found[tid].push_back(ids);
  }
  // Static schedule assigns ascending contiguous blocks per thread, so
  // concatenation in thread order restores the serial order.
  std::vector<Datum> out;
  for (auto& block : found)
    for (auto& ids : block)
      out.push_back(Datum::from_ids_unchecked(g, std::move(ids)));
  return out;
}

bool TypeReport::operator==(const TypeReport& o) const {
  return representative == o.representative && orbit_size == o.orbit_size &&
         genus == o.genus && signature == o.signature &&
         pure_orbits_exact == o.pure_orbits_exact &&
         pure_orbits_inn == o.pure_orbits_inn &&
         pure_orbits_aut == o.pure_orbits_aut;
}

namespace {

using Key = std::vector<int>;
using KeySet = std::unordered_set<Key, IntVecHash>;

// Number of pure-move orbits at the given level among the tuples of one
// type. Pure words never leave the type, so the closures stay inside.
std::size_t pure_suborbits(const std::vector<std::vector<int>>& tuples,
                           const Datum& anchor, Canon canon,
                           const AutomorphismGroup* auts,
                           const std::vector<Move>& movers,
                           const OrbitOptions& opts) {
  const PermGroup& g = anchor.group();
  KeySet visited;
  std::size_t count = 0;
  for (const auto& ids : tuples) {
    Key k = canonical_key(g, ids, canon, auts);
    if (visited.count(k)) continue;
    ++count;
    Orbit orb = enumerate_orbit(
        Datum::from_ids_unchecked(anchor.group_ptr(), ids), movers, canon,
        opts, auts);
    for (const auto& key : orb.keys) visited.insert(key);
  }
  return count;
}

TypeReport build_report(const std::shared_ptr<const PermGroup>& g,
                        const AutomorphismGroup& auts,
                        const std::vector<Key>& orbit_keys,
                        const std::vector<std::vector<int>>& tuples,
                        int n, const OrbitOptions& opts) {
  TypeReport r{Datum::from_ids_unchecked(
                   g, *std::min_element(orbit_keys.begin(), orbit_keys.end())),
               tuples.size(),
               0,
               {},
               0,
               0,
               0};
  r.genus = r.representative.genus();
  r.signature = signature_aut_stable(r.representative, auts);
  const auto movers = pure_moves(n);
  r.pure_orbits_exact =
      pure_suborbits(tuples, r.representative, Canon::exact, &auts, movers, opts);
  r.pure_orbits_inn =
      pure_suborbits(tuples, r.representative, Canon::inn, &auts, movers, opts);
  r.pure_orbits_aut =
      pure_suborbits(tuples, r.representative, Canon::aut, &auts, movers, opts);
  return r;
}

bool report_order(const TypeReport& a, const TypeReport& b) {
  if (a.genus != b.genus) return a.genus < b.genus;
  if (a.signature != b.signature) return a.signature < b.signature;
  return a.representative < b.representative;
}

}  // namespace

std::vector<TypeReport> classify_types(std::shared_ptr<const PermGroup> g,
                                       int n, const ClassifyOptions& opts) {
  std::vector<Datum> data = enumerate_data(g, n, opts.enumeration);
  AutomorphismGroup auts = AutomorphismGroup::compute(*g);

  // Aut-canonical key per datum (the expensive map; data-parallel).
  std::vector<Key> keys(data.size());
  const long total = static_cast<long>(data.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(opts.enumeration.threads) \
    if (opts.enumeration.threads > 1)
#endif
  for (long i = 0; i < total; ++i)
    keys[i] = aut_canonical_ids(auts, data[i].entry_ids());

  // Pre-partition by the order multiset before running any BFS; full
  // Hurwitz moves and Aut G preserve it.
  std::map<std::vector<int>, std::map<Key, std::vector<int>>> buckets;
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::vector<int> orders;
    for (int k = 0; k < n; ++k)
      orders.push_back(g->element_order(data[i].entry_id(k)));
    std::sort(orders.begin(), orders.end());
    buckets[std::move(orders)][keys[i]].push_back(static_cast<int>(i));
  }

  std::vector<TypeReport> reports;
  const auto movers = sigma_moves(n);
  for (auto& [orders, bucket] : buckets) {
    KeySet assigned;
    for (auto& [key, members] : bucket) {
      if (assigned.count(key)) continue;
      Orbit orb = enumerate_orbit(Datum::from_ids_unchecked(g, key), movers,
                                  Canon::aut, opts.orbit, &auts);
      std::vector<std::vector<int>> tuples;
      for (const auto& k : orb.keys) {
        assigned.insert(k);
        auto it = bucket.find(k);
        if (it == bucket.end())
          throw Error("orbit reached a key outside the enumerated data");
        for (int idx : it->second) tuples.push_back(data[idx].entry_ids());
      }
      reports.push_back(
          build_report(g, auts, orb.keys, tuples, n, opts.orbit));
    }
  }
  std::sort(reports.begin(), reports.end(), report_order);
  return reports;
}

TypeReport type_of(const Datum& d, const OrbitOptions& opts) {
  AutomorphismGroup auts = AutomorphismGroup::compute(d.group());
  Orbit orb =
      enumerate_orbit(d, sigma_moves(d.size()), Canon::aut, opts, &auts);
  // Materialize the orbit's raw tuples: the aut-class of each key.
  KeySet seen;
  std::vector<std::vector<int>> tuples;
  for (const auto& key : orb.keys) {
    for (const auto& a : auts.all) {
      std::vector<int> img(key.size());
      for (std::size_t i = 0; i < key.size(); ++i) img[i] = a.apply(key[i]);
      if (seen.insert(img).second) tuples.push_back(std::move(img));
    }
  }
  std::sort(tuples.begin(), tuples.end());
  return build_report(d.group_ptr(), auts, orb.keys, tuples, d.size(), opts);
}

}  // namespace hurwitz
