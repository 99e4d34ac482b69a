#include <doctest.h>

#include <algorithm>

#include "hurwitz/braid.hpp"
#include "hurwitz/datum.hpp"
#include "hurwitz/errors.hpp"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace hurwitz;

TEST_CASE("validation verdicts") {
  auto s3 = th::S3();
  auto perms = [&](std::initializer_list<const char*> ss) {
    std::vector<Perm> out;
    for (const char* s : ss) out.push_back(Perm::from_cycles(s, 3));
    return out;
  };

  CHECK(Datum::check(*s3, perms({"(1 2)", "(2 3)", "(2 3)", "(1 2)"})).ok());

  auto r1 = Datum::check(*s3, perms({"(1 2)", "(1 2)", "(1 2)"}));
  CHECK(r1.defect == Datum::Defect::product_not_identity);
  CHECK(r1.message.find("(1 2)") != std::string::npos);

  auto r2 = Datum::check(*s3, perms({"(1 2)", "(1 2)", "(1 2)", "(1 2)"}));
  CHECK(r2.defect == Datum::Defect::proper_subgroup);
  CHECK(r2.message.find("2") != std::string::npos);

  auto r3 = Datum::check(*s3, perms({"(1 2)", "()", "(1 2)"}));
  CHECK(r3.defect == Datum::Defect::trivial_entry);

  auto r4 = Datum::check(*s3, perms({"(1 2)", "(1 2)"}));
  CHECK(r4.defect == Datum::Defect::too_short);

  auto r5 = Datum::check(
      *s3, {Perm::from_cycles("(1 2)(3 4)", 4), Perm::from_cycles("(1 2)", 3),
            Perm::from_cycles("(1 2)", 3)});
  CHECK(r5.defect == Datum::Defect::entry_outside_group);

  CHECK_THROWS_AS(Datum::make(s3, perms({"(1 2)", "(1 2)", "(1 2)"})),
                  InvalidInput);
}

TEST_CASE("validation agrees with the exhaustive oracle") {
  for (const auto& g : {th::S3(), th::V4(), th::Z6(), th::Q8()}) {
    std::vector<oracle::P> elems;
    for (const auto& p : g->elements()) elems.push_back(p.images());
    for (int n : {3, 4}) {
      if (g->order() == 8 && n == 4) continue;  // covered by acceptance
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        std::vector<Perm> entries;
        oracle::Tuple t;
        for (int k = 0; k < n; ++k) {
          entries.push_back(g->element((int)idx[k]));
          t.push_back(elems[idx[k]]);
        }
        CHECK(Datum::check(*g, entries).ok() ==
              oracle::valid_tuple(t, g->order()));
        int k = n - 1;
        while (k >= 0 && ++idx[k] == g->order()) {
          idx[k] = 0;
          --k;
        }
        if (k < 0) break;
      }
    }
  }
}

TEST_CASE("genus") {
  // hyperelliptic reference: g = (n-2)/2 for Z2 tuples
  auto z2 = th::Z2();
  for (int n : {4, 6, 8}) {
    std::vector<Perm> entries(n, Perm::from_cycles("(1 2)", 2));
    CHECK(Datum::make(z2, entries).genus() == (n - 2) / 2);
  }
  CHECK(th::s3_example().genus() == 1);
}

TEST_CASE("genus invariants") {
  Datum d = th::s3_example();
  auto g = d.group_ptr();
  // entry reordering (formula only sees the order multiset)
  std::vector<int> rev(d.entry_ids().rbegin(), d.entry_ids().rend());
  CHECK(Datum::from_ids_unchecked(g, rev).genus() == d.genus());
  // simultaneous conjugation
  for (std::size_t a = 0; a < g->order(); ++a) {
    std::vector<int> conj;
    for (int i = 0; i < d.size(); ++i)
      conj.push_back(g->conj((int)a, d.entry_id(i)));
    CHECK(Datum::from_ids_unchecked(g, conj).genus() == d.genus());
  }
  // automorphisms and Hurwitz moves
  auto auts = AutomorphismGroup::compute(*g);
  for (const auto& eta : auts.all) {
    std::vector<int> img;
    for (int i = 0; i < d.size(); ++i) img.push_back(eta.apply(d.entry_id(i)));
    CHECK(Datum::from_ids_unchecked(g, img).genus() == d.genus());
  }
  for (int i = 1; i <= 3; ++i) CHECK(apply_sigma(d, i).genus() == d.genus());
}

TEST_CASE("inn canonical form") {
  Datum d = th::s3_example();
  auto g = d.group_ptr();
  Datum c = inn_canonical(d);
  CHECK(inn_canonical(c) == c);  // idempotent
  // least among all conjugates, and constant on the conjugation class
  for (std::size_t a = 0; a < g->order(); ++a) {
    std::vector<int> conj;
    for (int i = 0; i < d.size(); ++i)
      conj.push_back(g->conj((int)a, d.entry_id(i)));
    CHECK(!(conj < c.entry_ids()));
    CHECK(inn_canonical(Datum::from_ids_unchecked(g, conj)) == c);
  }
  // the running example conjugated by (1 2 3)
  int a = g->element_id(Perm::from_cycles("(1 2 3)", 3));
  std::vector<int> conj;
  for (int i = 0; i < d.size(); ++i) conj.push_back(g->conj(a, d.entry_id(i)));
  CHECK(inn_canonical(Datum::from_ids_unchecked(g, conj)) == c);
}

TEST_CASE("aut canonical form") {
  // Aut(Z2) is trivial, so the canonical form is the input itself.
  auto z2 = th::Z2();
  auto auts_z2 = AutomorphismGroup::compute(*z2);
  REQUIRE(auts_z2.size() == 1);
  Datum dz = Datum::make(z2, std::vector<Perm>(4, Perm::from_cycles("(1 2)", 2)));
  CHECK(aut_canonical(dz, auts_z2) == dz);

  Datum d = th::s3_example();
  auto auts = AutomorphismGroup::compute(d.group());
  Datum c = aut_canonical(d, auts);
  CHECK(aut_canonical(c, auts) == c);
  // Aut S3 = Inn S3: aut form of an inner image equals the original's
  CHECK(aut_canonical(inn_canonical(d), auts) == c);
  // aut refines inn
  CHECK(!(c.entry_ids() > inn_canonical(d).entry_ids()));
}

TEST_CASE("branch signature") {
  Datum d = th::s3_example();
  auto g = d.group_ptr();
  BranchSignature s = d.signature();
  CHECK(s.orders == std::vector<int>{2, 2, 2, 2});
  REQUIRE(s.classes.size() == 1);
  CHECK(s.classes[0].second == 4);
  // invariant under simultaneous conjugation
  for (std::size_t a = 0; a < g->order(); ++a) {
    std::vector<int> conj;
    for (int i = 0; i < d.size(); ++i)
      conj.push_back(g->conj((int)a, d.entry_id(i)));
    CHECK(Datum::from_ids_unchecked(g, conj).signature() == s);
  }
  // order multiset is a function of the class multiset
  Datum e = th::datum_of(th::Z3(), {"(1 2 3)", "(1 2 3)", "(1 2 3)"});
  CHECK(e.signature().orders == std::vector<int>{3, 3, 3});
}

TEST_CASE("aut-stable signature is constant under Aut G") {
  // Aut(Z3) swaps the two nontrivial classes; the stable labels agree.
  auto z3 = th::Z3();
  auto auts = AutomorphismGroup::compute(*z3);
  REQUIRE(auts.size() == 2);
  Datum d1 = th::datum_of(z3, {"(1 2 3)", "(1 2 3)", "(1 2 3)"});
  Datum d2 = th::datum_of(z3, {"(1 3 2)", "(1 3 2)", "(1 3 2)"});
  CHECK(d1.signature() != d2.signature());
  CHECK(signature_aut_stable(d1, auts) == signature_aut_stable(d2, auts));
}

TEST_CASE("datum string form") {
  CHECK(th::s3_example().str() == "(1 2),(2 3),(2 3),(1 2)");
}
