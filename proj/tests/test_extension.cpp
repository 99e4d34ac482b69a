#include <doctest.h>

#include <random>

#include "hurwitz/classify.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/extension.hpp"
#include "test_helpers.hpp"

using namespace hurwitz;

TEST_CASE("abelian data have trivial extension reports") {
  for (const auto& g : {th::Z3(), th::V4()}) {
    for (const auto& d : enumerate_data(g, 4)) {
      ExtensionReport r = extension_report(d);
      CHECK(r.exact_orbit_index == 1);
      CHECK(r.inn_orbit_index == 1);
      CHECK(r.aut_orbit_index == 1);
      CHECK(r.eps_image.size() == 1);
      CHECK(r.eps_image[0].is_identity());
      CHECK(r.eps_image_in_out == 1);
      CHECK(r.abelian);
      CHECK(!r.exact_index_center_ambiguous);
    }
  }
}

TEST_CASE("running example extension report") {
  ExtensionReport r = extension_report(th::s3_example());
  CHECK(r.exact_orbit_index == 8);
  CHECK(r.inn_orbit_index == 4);
  CHECK(r.aut_orbit_index == 4);
  CHECK(r.aut_orbit_index >= 2);  // A12 lies outside the stabilizer
  CHECK(r.inn_orbit_index == r.aut_orbit_index);  // Aut S3 = Inn S3
  CHECK(r.center_trivial);
  CHECK(!r.abelian);
  // last entry (1 2) is not central, so the exact index is flagged
  CHECK(r.exact_index_center_ambiguous);
  CHECK(r.eps_image_in_out == 1);  // Out S3 is trivial
}

TEST_CASE("coarsening chain on all (S3, 4) data") {
  for (const auto& d : enumerate_data(th::S3(), 4)) {
    ExtensionReport r = extension_report(d);
    CHECK(r.exact_orbit_index >= r.inn_orbit_index);
    CHECK(r.inn_orbit_index >= r.aut_orbit_index);
    CHECK(r.inn_orbit_index == r.aut_orbit_index);
  }
}

TEST_CASE("coarsening chain on random (S4, 4) data") {
  std::mt19937 rng(43);
  for (int k = 0; k < 5; ++k) {
    Datum d = th::random_datum(th::S4(), 4, rng);
    ExtensionReport r = extension_report(d);
    CHECK(r.exact_orbit_index >= r.inn_orbit_index);
    CHECK(r.inn_orbit_index >= r.aut_orbit_index);
  }
}

TEST_CASE("solved automorphisms are multiplicative") {
  Datum d = th::s3_example();
  const PermGroup& g = d.group();
  auto auts = AutomorphismGroup::compute(g);
  Orbit aut = enumerate_orbit(d, pure_moves(4), Canon::aut, {}, &auts);
  auto gens = schreier_generators(coset_action(aut));
  REQUIRE(!gens.empty());
  auto solve = [&](const BraidWord& w) {
    auto eta = solve_automorphism(
        auts, d.entry_ids(), apply_word_ids(g, d.entry_ids(), w));
    REQUIRE(eta.has_value());
    return *eta;
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      BraidWord prod = gens[i].word;
      prod.append(gens[j].word);
      // concatenation applies w_i first; its automorphism composes last
      CHECK(solve(prod) == solve(gens[i].word).after(solve(gens[j].word)));
    }
  }
}

TEST_CASE("centerless minimum for the running example") {
  MinimalExtension m = centerless_minimum(th::s3_example());
  CHECK(m.base.n_points == 4);
  CHECK(m.verified);
  CHECK(m.checked == m.phi.size());
  CHECK(!m.phi.empty());
}

TEST_CASE("centerless minimum on every (S3, n) datum for n = 3, 4") {
  for (int n : {3, 4}) {
    auto data = enumerate_data(th::S3(), n);
    REQUIRE(!data.empty());
    for (const auto& d : data) {
      MinimalExtension m = centerless_minimum(d);
      CHECK(m.verified);
      CHECK(m.checked == m.phi.size());
    }
  }
}

TEST_CASE("centerless minimum refuses groups with center") {
  auto v4_data = enumerate_data(th::V4(), 4);
  REQUIRE(!v4_data.empty());
  CHECK_THROWS_AS(centerless_minimum(v4_data.front()), HypothesisViolation);
  std::mt19937 rng(47);
  Datum q8 = th::random_datum(th::Q8(), 4, rng);
  CHECK_THROWS_AS(centerless_minimum(q8), HypothesisViolation);
}

TEST_CASE("nontrivial center makes conjugators non-unique") {
  std::mt19937 rng(53);
  Datum d = th::random_datum(th::Q8(), 4, rng);
  // the identity word acts trivially; every central element conjugates the
  // tuple to itself
  auto sols = conjugators(d.group(), d.entry_ids(), d.entry_ids());
  CHECK(sols.size() == d.group().center_ids().size());
  CHECK(sols.size() >= 2);
}

TEST_CASE("abelian certificate") {
  auto z2_data = enumerate_data(th::Z2(), 4);
  REQUIRE(z2_data.size() == 1);
  AbelianCertificate c = abelian_certificate(z2_data[0]);
  CHECK(c.all_fixed);
  CHECK(c.checked == std::vector<std::string>{"A12", "A13", "A23"});

  // additive Z3 datum (1,2,1,2)
  auto z3 = th::Z3();
  Datum d3 = th::datum_of(z3, {"(1 2 3)", "(1 3 2)", "(1 2 3)", "(1 3 2)"});
  CHECK(abelian_certificate(d3).all_fixed);

  for (const auto& d : enumerate_data(th::Z6(), 4))
    CHECK(abelian_certificate(d).all_fixed);

  CHECK_THROWS_AS(abelian_certificate(th::s3_example()), HypothesisViolation);
}

TEST_CASE("joins of canonical handles") {
  Datum d = th::s3_example();
  ExtensionHandle exact = canonical_handle(d, Canon::exact);
  ExtensionHandle inn = canonical_handle(d, Canon::inn);
  ExtensionHandle aut = canonical_handle(d, Canon::aut);
  CHECK(exact.index() == 8);
  CHECK(inn.index() == 4);
  CHECK(aut.index() == 4);

  // idempotence up to index
  CHECK(join(exact, exact).index() == exact.index());
  CHECK(join(inn, inn).index() == inn.index());
  // refinement joins collapse to the finer index
  CHECK(join(exact, inn).index() == exact.index());
  CHECK(join(inn, aut).index() == inn.index());
  CHECK(join(exact, aut).index() == exact.index());

  // bounds and domination with replay
  ExtensionHandle j = join(inn, aut);
  CHECK(j.index() >= std::max(inn.index(), aut.index()));
  CHECK(j.index() <= inn.index() * aut.index());
  CHECK(join_consistent(inn, aut, j));
  CHECK(join_consistent(exact, inn, join(exact, inn)));

  // joins of joins stay within the directed set
  ExtensionHandle jj = join(j, exact);
  CHECK(jj.index() == exact.index());

  Datum other = th::datum_of(d.group_ptr(),
                             {"(1 2)", "(1 2)", "(1 2 3)", "(1 3 2)"});
  CHECK_THROWS_AS(join(exact, canonical_handle(other, Canon::inn)),
                  InvalidInput);
}

TEST_CASE("join properties over every (S3, 4) datum") {
  for (const auto& d : enumerate_data(th::S3(), 4)) {
    ExtensionHandle exact = canonical_handle(d, Canon::exact);
    ExtensionHandle inn = canonical_handle(d, Canon::inn);
    ExtensionHandle j = join(exact, inn);
    CHECK(j.index() == exact.index());
    CHECK(join(inn, inn).index() == inn.index());
    CHECK(j.index() >= std::max(exact.index(), inn.index()));
    CHECK(j.index() <= exact.index() * inn.index());
  }
}

TEST_CASE("handle labels replay to their points") {
  Datum d = th::s3_example();
  const PermGroup& g = d.group();
  ExtensionHandle inn = canonical_handle(d, Canon::inn);
  for (std::size_t p = 0; p < inn.index(); ++p) {
    auto ids = apply_word_ids(g, d.entry_ids(), inn.action.word((int)p));
    CHECK(inn_canonical_ids(g, ids) == inn_canonical_ids(g, inn.labels[p]));
  }
}
