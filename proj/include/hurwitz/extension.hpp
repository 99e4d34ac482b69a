#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hurwitz/datum.hpp"
#include "hurwitz/orbit.hpp"

namespace hurwitz {

// Orbit indices of the pure Hurwitz action at the three canonical levels,
// together with the image of the stabilizer in Aut G. By orbit-stabilizer
// the inn and aut orbit sizes are the indices of the stabilizers "up to
// inner automorphisms" and "up to Aut G" inside the acting group; the
// exact-level index carries an ambiguity flag because the central full
// twist acts by simultaneous conjugation by the last entry.
struct ExtensionReport {
  Datum datum;
  std::size_t exact_orbit_index = 0;
  bool exact_index_center_ambiguous = false;
  std::size_t inn_orbit_index = 0;
  std::size_t aut_orbit_index = 0;
  std::vector<GroupAutomorphism> eps_image;  // subgroup of Aut G, sorted
  std::size_t eps_image_in_out = 0;
  bool center_trivial = false;
  bool abelian = false;
};

ExtensionReport extension_report(const Datum& d, const OrbitOptions& opts = {});

// Solves eta(t_i) = u_i for all i over the listed automorphisms; at most
// one solution exists because the tuple generates the group.
std::optional<GroupAutomorphism> solve_automorphism(
    const AutomorphismGroup& auts, const std::vector<int>& t,
    const std::vector<int>& u);

// All g with g t_i g^-1 = u_i for every i; the solutions form a coset of
// the center, so there is exactly one when Z(G) = 1.
std::vector<int> conjugators(const PermGroup& g, const std::vector<int>& t,
                             const std::vector<int>& u);

// The canonical minimal extension for centerless groups: the coset action
// on the inn orbit plus, for every Schreier generator w of the basepoint
// stabilizer, the unique group element phi(w) whose conjugation matches
// the action of w on the exact tuple. `verified` certifies the replay
// identity on every generator.
struct MinimalExtension {
  Datum datum;
  CosetAction base;
  std::vector<std::pair<SchreierGen, int>> phi;  // generator -> element id
  std::size_t checked = 0;
  bool verified = false;
};

// Throws HypothesisViolation unless Z(G) = 1.
MinimalExtension centerless_minimum(const Datum& d,
                                    const OrbitOptions& opts = {});

// Positive certificate that every pure generator fixes the tuple exactly.
// Throws HypothesisViolation unless G is abelian.
struct AbelianCertificate {
  Datum datum;
  std::vector<std::string> checked;  // generator names
  bool all_fixed = false;
};

AbelianCertificate abelian_certificate(const Datum& d);

// A computable extension handle: a coset action over a datum's pure mover
// set whose points are labeled by the exact tuple first reaching them.
// The canonical levels and finite joins of handles are the computable
// slice of the extension set.
struct ExtensionHandle {
  std::string kind;  // "exact", "inn", "aut" or "join(..,..)"
  Datum datum;
  CosetAction action;
  std::vector<std::vector<int>> labels;  // exact entry ids per point

  std::size_t index() const { return action.n_points; }
};

ExtensionHandle canonical_handle(const Datum& d, Canon level,
                                 const OrbitOptions& opts = {});

// Product action on labeled pairs; dominates both arguments in the order
// relation, with index between max(index a, index b) and their product.
ExtensionHandle join(const ExtensionHandle& a, const ExtensionHandle& b);

// Replay check that every Schreier generator of the joined action fixes
// both input basepoints, and that the G-values of the two sides agree
// where they are defined (trivial at the exact level, a conjugator coset
// at the inn level).
bool join_consistent(const ExtensionHandle& a, const ExtensionHandle& b,
                     const ExtensionHandle& joined);

}  // namespace hurwitz
