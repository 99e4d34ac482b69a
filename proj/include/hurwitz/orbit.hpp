#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hurwitz/braid.hpp"
#include "hurwitz/datum.hpp"

namespace hurwitz {

enum class Canon { exact, inn, aut };
const char* canon_name(Canon c);
Canon parse_canon(std::string_view s);

std::vector<int> canonical_key(const PermGroup& g, const std::vector<int>& ids,
                               Canon canon, const AutomorphismGroup* auts);

// A named move; orbits always close under the move and its inverse.
struct Move {
  std::string name;
  BraidWord word;
  bool operator==(const Move&) const = default;
};

std::vector<Move> sigma_moves(int strands);  // s1 .. s_{n-1}
std::vector<Move> pure_moves(int strands);   // A12, A13, ...

struct OrbitOptions {
  std::size_t cap = 1'000'000;
  int threads = 1;
};

struct MoverRef {
  int mover;  // index into the mover list
  int sign;   // +1 or -1
};
using MoverSeq = std::vector<MoverRef>;

BraidWord mover_seq_word(const std::vector<Move>& movers, int strands,
                         const MoverSeq& seq);

// BFS closure of a datum under a set of moves and their inverses, with
// points identified by their canonical key. Discovery order, transversal
// and the per-mover point maps are identical between the serial reference
// and the OpenMP frontier expansion.
struct Orbit {
  Canon canon = Canon::exact;
  std::vector<Move> movers;
  Datum start;
  std::vector<std::vector<int>> keys;  // canonical keys in discovery order
  std::vector<std::vector<int>> reps;  // exact entry ids first reaching each key
  std::vector<int> parent;             // BFS tree (parent point, -1 at base)
  std::vector<MoverRef> letter;        // move taking parent to this point
  std::vector<std::vector<int>> forward;   // movers.size() x size()
  std::vector<std::vector<int>> backward;  // inverse action
  std::unordered_map<std::vector<int>, int, IntVecHash> index;

  std::size_t size() const { return keys.size(); }
  int point_of(const std::vector<int>& key) const;
  Datum rep(int point) const;
  MoverSeq path(int point) const;      // basepoint -> point, in mover letters
  BraidWord word(int point) const;     // the same as a braid word
};

Orbit enumerate_orbit(const Datum& start, const std::vector<Move>& movers,
                      Canon canon, const OrbitOptions& opts = {},
                      const AutomorphismGroup* auts = nullptr);
// Plain-queue reference implementation.
Orbit enumerate_orbit_serial(const Datum& start,
                             const std::vector<Move>& movers, Canon canon,
                             const OrbitOptions& opts = {},
                             const AutomorphismGroup* auts = nullptr);

// Permutations of the orbit points per named mover; the basepoint
// stabilizer realizes a finite-index subgroup by orbit-stabilizer.
struct CosetAction {
  int strands = 0;
  std::vector<std::string> names;
  std::vector<BraidWord> mover_words;
  std::size_t n_points = 0;
  int basepoint = 0;
  std::vector<std::vector<int>> forward;   // names.size() x n_points
  std::vector<std::vector<int>> backward;
  std::vector<int> parent;
  std::vector<MoverRef> letter;

  std::size_t index() const { return n_points; }
  int apply(int mover, int sign, int point) const {
    return sign > 0 ? forward[mover][point] : backward[mover][point];
  }
  int apply_seq(const MoverSeq& seq, int point) const;
  MoverSeq path(int point) const;
  BraidWord word(int point) const;
  bool transitive() const;
  bool bijective() const;
};

CosetAction coset_action(const Orbit& o);

struct SchreierGen {
  MoverSeq seq;
  BraidWord word;  // free-reduced
};

// Standard Schreier set for the basepoint stabilizer: in-word, generator,
// out-word inverse, over all points and both signs. Words that reduce to
// nothing are dropped, duplicates merged.
std::vector<SchreierGen> schreier_generators(const CosetAction& ca);

// Product action on pairs, restricted to the orbit of the paired
// basepoints. The result's basepoint stabilizer is the intersection of the
// two stabilizers. Throws InvalidInput when the mover sets differ.
CosetAction intersect_actions(const CosetAction& a, const CosetAction& b);

}  // namespace hurwitz
