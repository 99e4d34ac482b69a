#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "hurwitz/datum.hpp"
#include "hurwitz/orbit.hpp"

namespace hurwitz {

struct EnumOptions {
  std::size_t enum_cap = 20'000'000;  // bound on |G|^(n-1)
  int threads = 1;
};

// All valid n-data over G: iterate (t_1,...,t_{n-1}) over G^(n-1), set
// t_n to the inverse of the product and keep the tuples passing the three
// datum conditions. Output order is the lexicographic prefix order and is
// identical for the serial and parallel paths.
std::vector<Datum> enumerate_data(std::shared_ptr<const PermGroup> g, int n,
                                  const EnumOptions& opts = {});
std::vector<Datum> enumerate_data_serial(std::shared_ptr<const PermGroup> g,
                                         int n, const EnumOptions& opts = {});

// One topological type: an orbit of data under the full Hurwitz moves
// combined with Aut G.
struct TypeReport {
  Datum representative;    // least aut-canonical tuple in the orbit
  std::size_t orbit_size;  // number of data in the orbit
  long genus;
  BranchSignature signature;  // aut-stable class labels
  std::size_t pure_orbits_exact;
  std::size_t pure_orbits_inn;
  std::size_t pure_orbits_aut;

  bool operator==(const TypeReport& o) const;
};

struct ClassifyOptions {
  EnumOptions enumeration;
  OrbitOptions orbit;
};

// Partition of all (G, n)-data into types; reports sorted by
// (genus, signature, representative).
std::vector<TypeReport> classify_types(std::shared_ptr<const PermGroup> g,
                                       int n,
                                       const ClassifyOptions& opts = {});

// The report of d's orbit, without enumerating all data: the orbit's raw
// tuples are materialized from the aut-classes of its keys.
TypeReport type_of(const Datum& d, const OrbitOptions& opts = {});

}  // namespace hurwitz
