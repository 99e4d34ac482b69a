#include <doctest.h>

#include <random>

#include "hurwitz/braid.hpp"
#include "hurwitz/classify.hpp"
#include "hurwitz/errors.hpp"
#include "test_helpers.hpp"

using namespace hurwitz;

TEST_CASE("sigma move on the running example") {
  Datum d = th::s3_example();
  CHECK(apply_sigma(d, 1).str() == "(1 3),(1 2),(2 3),(1 2)");
  // abelian case: conjugation is trivial, so sigma swaps
  auto z6 = th::Z6();
  Datum a = th::datum_of(z6, {"(1 2 3 4 5 6)", "(1 2 3 4 5 6)",
                              "(1 3 5)(2 4 6)", "(1 6 5 4 3 2)",
                              "(1 6 5 4 3 2)", "(1 5 3)(2 6 4)"});
  Datum s = apply_sigma(a, 2);
  CHECK(s.entry_id(1) == a.entry_id(2));
  CHECK(s.entry_id(2) == a.entry_id(1));
}

TEST_CASE("sigma then its inverse is the identity map") {
  for (const auto& d : enumerate_data(th::S3(), 4)) {
    for (int i = 1; i <= 3; ++i) {
      CHECK(apply_sigma(apply_sigma(d, i, +1), i, -1) == d);
      CHECK(apply_sigma(apply_sigma(d, i, -1), i, +1) == d);
    }
  }
}

TEST_CASE("moves preserve validity") {
  for (const auto& d : enumerate_data(th::S3(), 4)) {
    for (int i = 1; i <= 3; ++i) {
      for (int sign : {+1, -1}) {
        Datum m = apply_sigma(d, i, sign);
        CHECK(Datum::check(d.group(), m.entries()).ok());
      }
    }
  }
}

TEST_CASE("A12 reproduces the reference vector") {
  Datum d = th::s3_example();
  CHECK(apply_word(d, BraidWord::parse(4, "A12")).str() ==
        "(2 3),(1 3),(2 3),(1 2)");
  CHECK(apply_word(d, BraidWord::parse(4, "s1 s1")).str() ==
        "(2 3),(1 3),(2 3),(1 2)");
}

TEST_CASE("empty word is the identity map") {
  Datum d = th::s3_example();
  CHECK(apply_word(d, BraidWord(4)) == d);
}

TEST_CASE("braid relations as tuple maps") {
  std::mt19937 rng(23);
  auto s4 = th::S4();
  std::vector<Datum> samples;
  for (const auto& d : enumerate_data(th::S3(), 4)) samples.push_back(d);
  for (int k = 0; k < 50; ++k) samples.push_back(th::random_datum(s4, 5, rng));

  for (const auto& d : samples) {
    const int n = d.size();
    // the braid relation on adjacent generators
    for (int i = 1; i + 1 <= n - 1; ++i) {
      BraidWord lhs(n), rhs(n);
      lhs.append(i, +1).append(i + 1, +1).append(i, +1);
      rhs.append(i + 1, +1).append(i, +1).append(i + 1, +1);
      CHECK(apply_word(d, lhs) == apply_word(d, rhs));
    }
    // far commutation
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j) {
        BraidWord lhs(n), rhs(n);
        lhs.append(i, +1).append(j, +1);
        rhs.append(j, +1).append(i, +1);
        CHECK(apply_word(d, lhs) == apply_word(d, rhs));
      }
    // the braid relation as a trivial word
    BraidWord w(n);
    w.append(1, +1).append(2, +1).append(1, +1)
        .append(2, -1).append(1, -1).append(2, -1);
    CHECK(apply_word(d, w) == d);
  }
}

TEST_CASE("sphere relation acts within the inn class") {
  std::mt19937 rng(29);
  std::vector<Datum> samples;
  for (const auto& d : enumerate_data(th::S3(), 4)) samples.push_back(d);
  for (int k = 0; k < 25; ++k)
    samples.push_back(th::random_datum(th::S4(), 5, rng));
  for (const auto& d : samples) {
    Datum moved = apply_word(d, sphere_relation_word(d.size()));
    CHECK(inn_canonical(moved) == inn_canonical(d));
  }
}

TEST_CASE("full twist acts by simultaneous conjugation") {
  for (const auto& d : enumerate_data(th::S3(), 4)) {
    Datum moved = apply_word(d, full_twist_word(4));
    CHECK(inn_canonical(moved) == inn_canonical(d));
    // exact fixedness is equivalent to the last entry being central
    const auto& z = d.group().center_ids();
    bool central = std::binary_search(z.begin(), z.end(), d.entry_id(3));
    CHECK((moved == d) == central);
  }
  for (const auto& d : enumerate_data(th::V4(), 4)) {
    CHECK(apply_word(d, full_twist_word(4)) == d);
  }
}

TEST_CASE("pure generators") {
  auto p3 = pure_generators(3);
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].name == "A12");
  auto p4 = pure_generators(4);
  REQUIRE(p4.size() == 3);
  CHECK(p4[0].name == "A12");
  CHECK(p4[1].name == "A13");
  CHECK(p4[2].name == "A23");
  CHECK(p4[0].word.str() == "s1 s1");
  CHECK(p4[1].word.str() == "s2 s1 s1 s2^-1");
  CHECK(p4[2].word.str() == "s2 s2");
  CHECK(pure_gen_word(6, 1, 2).str() == "s1 s1");
  CHECK_THROWS_AS(pure_generators(2), InvalidInput);
}

TEST_CASE("pure generators preserve coordinatewise classes") {
  std::mt19937 rng(31);
  std::vector<Datum> samples;
  for (const auto& d : enumerate_data(th::S3(), 4)) samples.push_back(d);
  for (int k = 0; k < 20; ++k)
    samples.push_back(th::random_datum(th::S4(), 5, rng));
  for (const auto& d : samples) {
    const PermGroup& g = d.group();
    for (const auto& a : pure_generators(d.size())) {
      Datum moved = apply_word(d, a.word);
      for (int i = 0; i < d.size(); ++i)
        CHECK(g.class_of(moved.entry_id(i)) == g.class_of(d.entry_id(i)));
    }
  }
}

TEST_CASE("free reduction is equivalent") {
  std::mt19937 rng(37);
  Datum d = th::s3_example();
  std::uniform_int_distribution<int> idx(1, 3), sgn(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    BraidWord w(4);
    for (int k = 0; k < 12; ++k) w.append(idx(rng), sgn(rng) ? +1 : -1);
    CHECK(apply_word(d, w) == apply_word(d, w.free_reduced()));
  }
  BraidWord cancel(4);
  cancel.append(1, +1).append(1, -1);
  CHECK(cancel.free_reduced().empty());
}

TEST_CASE("word parsing") {
  BraidWord w = BraidWord::parse(4, "S1 s2^-1 a12");
  REQUIRE(w.size() == 4);
  CHECK(w.gens()[0] == BraidGen{1, +1});
  CHECK(w.gens()[1] == BraidGen{2, -1});
  CHECK(w.gens()[2] == BraidGen{1, +1});
  CHECK(w.gens()[3] == BraidGen{1, +1});
  CHECK(BraidWord::parse(4, "s1^3").size() == 3);
  CHECK(BraidWord::parse(4, "A12^-1").str() == "s1^-1 s1^-1");
  CHECK(BraidWord::parse(12, "A1_10").strands() == 12);
  CHECK_THROWS_AS(BraidWord::parse(4, "s9"), InvalidInput);
  CHECK_THROWS_AS(BraidWord::parse(4, "x1"), InvalidInput);
  CHECK_THROWS_AS(BraidWord::parse(4, "A21"), InvalidInput);
  CHECK_THROWS_AS(BraidWord::parse(12, "A123"), InvalidInput);
  CHECK_THROWS_AS(BraidWord::parse(4, "s1^x"), InvalidInput);
}

TEST_CASE("strand mismatch is rejected") {
  Datum d = th::s3_example();
  CHECK_THROWS_AS(apply_word(d, BraidWord::parse(5, "s1")), InvalidInput);
  CHECK_THROWS_AS(apply_sigma(d, 4, +1), InvalidInput);
  CHECK_THROWS_AS(apply_sigma(d, 0, +1), InvalidInput);
}
