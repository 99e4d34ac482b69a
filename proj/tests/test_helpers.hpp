#pragma once

#include <initializer_list>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "hurwitz/datum.hpp"
#include "hurwitz/parse.hpp"

namespace th {

using namespace hurwitz;

inline std::shared_ptr<const PermGroup> make_group(
    int degree, std::initializer_list<const char*> gens,
    std::string name = "") {
  std::vector<Perm> g;
  for (const char* s : gens) g.push_back(Perm::from_cycles(s, degree));
  return std::make_shared<PermGroup>(degree, std::move(g), std::move(name));
}

inline std::shared_ptr<const PermGroup> S3() {
  return make_group(3, {"(1 2)", "(1 2 3)"}, "S3");
}
inline std::shared_ptr<const PermGroup> S4() {
  return make_group(4, {"(1 2)", "(1 2 3 4)"}, "S4");
}
inline std::shared_ptr<const PermGroup> A4() {
  return make_group(4, {"(1 2 3)", "(1 2)(3 4)"}, "A4");
}
inline std::shared_ptr<const PermGroup> Z2() {
  return make_group(2, {"(1 2)"}, "Z2");
}
inline std::shared_ptr<const PermGroup> Z3() {
  return make_group(3, {"(1 2 3)"}, "Z3");
}
inline std::shared_ptr<const PermGroup> Z4() {
  return make_group(4, {"(1 2 3 4)"}, "Z4");
}
inline std::shared_ptr<const PermGroup> Z5() {
  return make_group(5, {"(1 2 3 4 5)"}, "Z5");
}
inline std::shared_ptr<const PermGroup> Z6() {
  return make_group(6, {"(1 2 3 4 5 6)"}, "Z6");
}
inline std::shared_ptr<const PermGroup> Z7() {
  return make_group(7, {"(1 2 3 4 5 6 7)"}, "Z7");
}
inline std::shared_ptr<const PermGroup> Z8() {
  return make_group(8, {"(1 2 3 4 5 6 7 8)"}, "Z8");
}
inline std::shared_ptr<const PermGroup> V4() {
  return make_group(4, {"(1 2)(3 4)", "(1 3)(2 4)"}, "V4");
}
inline std::shared_ptr<const PermGroup> D4() {
  return make_group(4, {"(1 2 3 4)", "(1 3)"}, "D4");
}
inline std::shared_ptr<const PermGroup> Z4xZ2() {
  return make_group(6, {"(1 2 3 4)", "(5 6)"}, "Z4xZ2");
}
inline std::shared_ptr<const PermGroup> Z2cube() {
  return make_group(6, {"(1 2)", "(3 4)", "(5 6)"}, "Z2^3");
}
// Left-multiplication action of Q8 on its own eight elements.
inline std::shared_ptr<const PermGroup> Q8() {
  return make_group(8, {"(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"}, "Q8");
}

inline Datum datum_of(std::shared_ptr<const PermGroup> g,
                      std::initializer_list<const char*> entries) {
  std::vector<Perm> e;
  for (const char* s : entries) e.push_back(Perm::from_cycles(s, g->degree()));
  return Datum::make(std::move(g), e);
}

// The running S3 example: ((1 2),(2 3),(2 3),(1 2)).
inline Datum s3_example(std::shared_ptr<const PermGroup> g = S3()) {
  return datum_of(std::move(g), {"(1 2)", "(2 3)", "(2 3)", "(1 2)"});
}

// Random valid datum: random nontrivial prefix entries, closing entry
// forced, retried until the tuple validates.
inline Datum random_datum(const std::shared_ptr<const PermGroup>& g, int n,
                          std::mt19937& rng) {
  const int order = static_cast<int>(g->order());
  std::uniform_int_distribution<int> pick(1, order - 1);
  while (true) {
    std::vector<int> ids(n);
    int prod = 0;
    for (int k = 0; k < n - 1; ++k) {
      ids[k] = pick(rng);
      prod = g->mul(prod, ids[k]);
    }
    ids[n - 1] = g->inv(prod);
    if (ids[n - 1] == 0) continue;
    if (g->subgroup_order(ids) != g->order()) continue;
    return Datum::from_ids_unchecked(g, std::move(ids));
  }
}

}  // namespace th
