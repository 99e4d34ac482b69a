#include "hurwitz/orbit.hpp"

#include <algorithm>
#include <set>

#include "hurwitz/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hurwitz {

const char* canon_name(Canon c) {
  switch (c) {
    case Canon::exact: return "exact";
    case Canon::inn: return "inn";
    case Canon::aut: return "aut";
  }
  return "?";
}

Canon parse_canon(std::string_view s) {
  if (s == "exact") return Canon::exact;
  if (s == "inn") return Canon::inn;
  if (s == "aut") return Canon::aut;
  throw InvalidInput("unknown canonicalizer \"" + std::string(s) +
                     "\"; expected exact, inn or aut");
}

std::vector<int> canonical_key(const PermGroup& g, const std::vector<int>& ids,
                               Canon canon, const AutomorphismGroup* auts) {
  switch (canon) {
    case Canon::exact: return ids;
    case Canon::inn: return inn_canonical_ids(g, ids);
    case Canon::aut:
      if (!auts) throw Error("aut canonicalizer needs the automorphism group");
      return aut_canonical_ids(*auts, ids);
  }
  throw Error("bad canonicalizer");
}

std::vector<Move> sigma_moves(int strands) {
  std::vector<Move> out;
  for (int i = 1; i <= strands - 1; ++i) {
    BraidWord w(strands);
    w.append(i, +1);
    out.push_back({"s" + std::to_string(i), std::move(w)});
  }
  return out;
}

std::vector<Move> pure_moves(int strands) {
  std::vector<Move> out;
  for (auto& a : pure_generators(strands))
    out.push_back({std::move(a.name), std::move(a.word)});
  return out;
}

BraidWord mover_seq_word(const std::vector<Move>& movers, int strands,
                         const MoverSeq& seq) {
  BraidWord w(strands);
  for (const auto& [m, sign] : seq)
    w.append(sign > 0 ? movers[m].word : movers[m].word.inverse());
  return w;
}

int Orbit::point_of(const std::vector<int>& key) const {
  auto it = index.find(key);
  return it == index.end() ? -1 : it->second;
}

Datum Orbit::rep(int point) const {
  return Datum::from_ids_unchecked(start.group_ptr(), reps[point]);
}

MoverSeq Orbit::path(int point) const {
  MoverSeq seq;
  for (int p = point; parent[p] >= 0; p = parent[p]) seq.push_back(letter[p]);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

BraidWord Orbit::word(int point) const {
  return mover_seq_word(movers, start.size(), path(point));
}

namespace {

// The inn and aut canonicalizers are only sound when the key of a moved
// tuple does not depend on which member of the class the move is applied
// to. Conjugation and coordinatewise automorphisms commute with the move
// formulas; this asserts it on the start datum rather than assuming it.
void assert_canonicalizer_compatible(const Datum& d,
                                     const std::vector<Move>& movers,
                                     Canon canon,
                                     const AutomorphismGroup* auts) {
  if (canon == Canon::exact) return;
  const PermGroup& g = d.group();
  std::vector<std::vector<int>> variants;
  if (canon == Canon::inn) {
    for (int gid : g.generator_ids()) {
      std::vector<int> ids(d.size());
      for (int k = 0; k < d.size(); ++k) ids[k] = g.conj(gid, d.entry_id(k));
      variants.push_back(std::move(ids));
    }
  } else {
    std::size_t step = std::max<std::size_t>(1, auts->all.size() / 4);
    for (std::size_t a = 0; a < auts->all.size(); a += step) {
      std::vector<int> ids(d.size());
      for (int k = 0; k < d.size(); ++k)
        ids[k] = auts->all[a].apply(d.entry_id(k));
      variants.push_back(std::move(ids));
    }
  }
  for (const auto& m : movers) {
    auto base = canonical_key(g, apply_word_ids(g, d.entry_ids(), m.word),
                              canon, auts);
    for (const auto& v : variants) {
      auto other =
          canonical_key(g, apply_word_ids(g, v, m.word), canon, auts);
      if (other != base)
        throw Error("canonicalizer " + std::string(canon_name(canon)) +
                    " is incompatible with mover " + m.name);
    }
  }
}

struct Slot {
  std::vector<int> rep;
  std::vector<int> key;
};

Orbit orbit_shell(const Datum& start, const std::vector<Move>& movers,
                  Canon canon, const AutomorphismGroup* auts) {
  for (const auto& m : movers)
    if (m.word.strands() != start.size())
      throw InvalidInput("mover " + m.name + " is on " +
                         std::to_string(m.word.strands()) +
                         " strands, datum has " + std::to_string(start.size()));
  if (movers.empty()) throw InvalidInput("empty mover list");
  assert_canonicalizer_compatible(start, movers, canon, auts);

  Orbit o{canon, movers, start};
  o.forward.resize(movers.size());
  o.backward.resize(movers.size());
  auto key0 = canonical_key(start.group(), start.entry_ids(), canon, auts);
  o.keys.push_back(key0);
  o.reps.push_back(start.entry_ids());
  o.parent.push_back(-1);
  o.letter.push_back({-1, 0});
  o.index.emplace(std::move(key0), 0);
  return o;
}

void grow_point_arrays(Orbit& o) {
  for (auto& f : o.forward) f.resize(o.keys.size(), -1);
  for (auto& b : o.backward) b.resize(o.keys.size(), -1);
}

// Merges one expanded point in deterministic slot order; shared by the
// serial and parallel paths so their discovery order is identical.
void merge_expansion(Orbit& o, int point, std::size_t mover, int sign,
                     Slot&& slot, std::size_t cap) {
  auto [it, fresh] = o.index.emplace(std::move(slot.key),
                                     static_cast<int>(o.keys.size()));
  if (fresh) {
    if (o.keys.size() >= cap)
      throw CapExceeded("orbit cap " + std::to_string(cap) +
                        " exceeded (partial size " +
                        std::to_string(o.keys.size()) + ")");
    o.keys.push_back(it->first);
    o.reps.push_back(std::move(slot.rep));
    o.parent.push_back(point);
    o.letter.push_back({static_cast<int>(mover), sign});
    grow_point_arrays(o);
  }
  int target = it->second;
  if (sign > 0)
    o.forward[mover][point] = target;
  else
    o.backward[mover][point] = target;
}

}  // namespace

Orbit enumerate_orbit_serial(const Datum& start,
                             const std::vector<Move>& movers, Canon canon,
                             const OrbitOptions& opts,
                             const AutomorphismGroup* auts) {
  std::optional<AutomorphismGroup> owned;
  if (canon == Canon::aut && !auts) {
    owned = AutomorphismGroup::compute(start.group());
    auts = &*owned;
  }
  Orbit o = orbit_shell(start, movers, canon, auts);
  grow_point_arrays(o);
  const PermGroup& g = start.group();
  for (std::size_t p = 0; p < o.keys.size(); ++p) {
    for (std::size_t m = 0; m < movers.size(); ++m) {
      for (int sign : {+1, -1}) {
        Slot slot;
        slot.rep = apply_word_ids(
            g, o.reps[p],
            sign > 0 ? movers[m].word : movers[m].word.inverse());
        slot.key = canonical_key(g, slot.rep, canon, auts);
        merge_expansion(o, static_cast<int>(p), m, sign, std::move(slot),
                        opts.cap);
      }
    }
  }
  return o;
}

Orbit enumerate_orbit(const Datum& start, const std::vector<Move>& movers,
                      Canon canon, const OrbitOptions& opts,
                      const AutomorphismGroup* auts) {
  if (opts.threads <= 1)
    return enumerate_orbit_serial(start, movers, canon, opts, auts);

  std::optional<AutomorphismGroup> owned;
  if (canon == Canon::aut && !auts) {
    owned = AutomorphismGroup::compute(start.group());
    auts = &*owned;
  }
  Orbit o = orbit_shell(start, movers, canon, auts);
  grow_point_arrays(o);
  const PermGroup& g = start.group();
  const std::size_t fan = movers.size() * 2;

  std::vector<int> frontier{0};
  std::vector<Slot> slots;
  while (!frontier.empty()) {
    slots.assign(frontier.size() * fan, {});
    const long total = static_cast<long>(slots.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(opts.threads)
#endif
    for (long s = 0; s < total; ++s) {
      const int point = frontier[s / fan];
      const std::size_t m = (s % fan) / 2;
      const int sign = (s % 2 == 0) ? +1 : -1;
      Slot& slot = slots[s];
      slot.rep = apply_word_ids(
          g, o.reps[point],
          sign > 0 ? movers[m].word : movers[m].word.inverse());
      slot.key = canonical_key(g, slot.rep, canon, auts);
    }
    std::size_t first_new = o.keys.size();
    for (long s = 0; s < total; ++s) {
      const int point = frontier[s / fan];
      const std::size_t m = (s % fan) / 2;
      const int sign = (s % 2 == 0) ? +1 : -1;
      merge_expansion(o, point, m, sign, std::move(slots[s]), opts.cap);
    }
    frontier.clear();
    for (std::size_t p = first_new; p < o.keys.size(); ++p)
      frontier.push_back(static_cast<int>(p));
  }
  return o;
}

namespace {

BraidWord seq_word_from(const std::vector<BraidWord>& mover_words, int strands,
                        const MoverSeq& seq) {
  BraidWord w(strands);
  for (const auto& [m, sign] : seq)
    w.append(sign > 0 ? mover_words[m] : mover_words[m].inverse());
  return w;
}

}  // namespace

int CosetAction::apply_seq(const MoverSeq& seq, int point) const {
  for (const auto& [m, sign] : seq) point = apply(m, sign, point);
  return point;
}

MoverSeq CosetAction::path(int point) const {
  MoverSeq seq;
  for (int p = point; parent[p] >= 0; p = parent[p]) seq.push_back(letter[p]);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

BraidWord CosetAction::word(int point) const {
  return seq_word_from(mover_words, strands, path(point));
}

bool CosetAction::transitive() const {
  std::vector<char> seen(n_points, 0);
  std::vector<int> stack{basepoint};
  seen[basepoint] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (std::size_t m = 0; m < names.size(); ++m) {
      for (int q : {forward[m][p], backward[m][p]}) {
        if (!seen[q]) {
          seen[q] = 1;
          stack.push_back(q);
          ++count;
        }
      }
    }
  }
  return count == n_points;
}

bool CosetAction::bijective() const {
  for (std::size_t m = 0; m < names.size(); ++m) {
    std::vector<char> hit(n_points, 0);
    for (std::size_t p = 0; p < n_points; ++p) {
      int q = forward[m][p];
      if (q < 0 || static_cast<std::size_t>(q) >= n_points || hit[q])
        return false;
      hit[q] = 1;
      if (backward[m][q] != static_cast<int>(p)) return false;
    }
  }
  return true;
}

CosetAction coset_action(const Orbit& o) {
  CosetAction ca;
  ca.strands = o.start.size();
  for (const auto& m : o.movers) {
    ca.names.push_back(m.name);
    ca.mover_words.push_back(m.word);
  }
  ca.n_points = o.size();
  ca.basepoint = 0;
  ca.forward = o.forward;
  ca.backward = o.backward;
  ca.parent = o.parent;
  ca.letter = o.letter;
  return ca;
}

std::vector<SchreierGen> schreier_generators(const CosetAction& ca) {
  std::vector<SchreierGen> out;
  std::set<std::string> seen;
  for (std::size_t p = 0; p < ca.n_points; ++p) {
    MoverSeq in = ca.path(static_cast<int>(p));
    for (std::size_t m = 0; m < ca.names.size(); ++m) {
      for (int sign : {+1, -1}) {
        int q = ca.apply(static_cast<int>(m), sign, static_cast<int>(p));
        MoverSeq seq = in;
        seq.push_back({static_cast<int>(m), sign});
        MoverSeq back = ca.path(q);
        for (auto it = back.rbegin(); it != back.rend(); ++it)
          seq.push_back({it->mover, -it->sign});
        BraidWord w =
            seq_word_from(ca.mover_words, ca.strands, seq).free_reduced();
        if (w.empty()) continue;
        if (seen.insert(w.str()).second) out.push_back({std::move(seq), std::move(w)});
      }
    }
  }
  return out;
}

CosetAction intersect_actions(const CosetAction& a, const CosetAction& b) {
  if (a.names != b.names || a.mover_words != b.mover_words ||
      a.strands != b.strands)
    throw InvalidInput("coset actions have different mover sets");
  CosetAction out;
  out.strands = a.strands;
  out.names = a.names;
  out.mover_words = a.mover_words;
  out.basepoint = 0;

  const std::size_t nm = a.names.size();
  std::unordered_map<std::size_t, int> idx;
  std::vector<std::pair<int, int>> points;
  auto pair_key = [&](int pa, int pb) {
    return static_cast<std::size_t>(pa) * b.n_points +
           static_cast<std::size_t>(pb);
  };
  points.emplace_back(a.basepoint, b.basepoint);
  idx.emplace(pair_key(a.basepoint, b.basepoint), 0);
  out.parent.push_back(-1);
  out.letter.push_back({-1, 0});
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t m = 0; m < nm; ++m) {
      for (int sign : {+1, -1}) {
        int qa = a.apply(static_cast<int>(m), sign, points[p].first);
        int qb = b.apply(static_cast<int>(m), sign, points[p].second);
        auto [it, fresh] =
            idx.emplace(pair_key(qa, qb), static_cast<int>(points.size()));
        if (fresh) {
          points.emplace_back(qa, qb);
          out.parent.push_back(static_cast<int>(p));
          out.letter.push_back({static_cast<int>(m), sign});
        }
      }
    }
  }
  out.n_points = points.size();
  out.forward.assign(nm, std::vector<int>(out.n_points, -1));
  out.backward.assign(nm, std::vector<int>(out.n_points, -1));
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t m = 0; m < nm; ++m) {
      int fa = a.apply(static_cast<int>(m), +1, points[p].first);
      int fb = b.apply(static_cast<int>(m), +1, points[p].second);
      out.forward[m][p] = idx.at(pair_key(fa, fb));
      int ba = a.apply(static_cast<int>(m), -1, points[p].first);
      int bb = b.apply(static_cast<int>(m), -1, points[p].second);
      out.backward[m][p] = idx.at(pair_key(ba, bb));
    }
  }
  return out;
}

}  // namespace hurwitz
