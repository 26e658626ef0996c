#include <doctest.h>

#include "pk/errors.hpp"
#include "pk/half_int.hpp"
#include "pk/hodge.hpp"
#include "support.hpp"

using namespace pk;
using pk::testing::motive;

TEST_CASE("half integers parse and print exactly") {
  CHECK(HalfInt::parse("3") == HalfInt(3));
  CHECK(HalfInt::parse("-5/2").twice() == -5);
  CHECK(HalfInt::parse("4/2") == HalfInt(2));
  CHECK(half_of(-3).str() == "-3/2");
  CHECK(HalfInt(-4).str() == "-4");
  CHECK(half_of(-3).floor() == -2);
  CHECK(half_of(3).floor() == 1);
  CHECK_THROWS_AS(HalfInt::parse("1/3"), ParseError);
  CHECK_THROWS_AS(HalfInt::parse("0.5"), ParseError);
  CHECK_THROWS_AS(HalfInt::parse(""), ParseError);
  CHECK_THROWS_AS(half_of(1).to_integer(), NonIntegerExponentError);
}

TEST_CASE("regular motive data rejects bad indices") {
  CHECK_THROWS_AS(RegularMotiveData("M", 2, 0, {0, 0}), InvalidDataError);
  CHECK_THROWS_AS(RegularMotiveData("M", 2, 0, {0, 1}), InvalidDataError);
  CHECK_THROWS_AS(RegularMotiveData("M", 3, 0, {2, 1}), InvalidDataError);
  CHECK_THROWS_AS(RegularMotiveData("M", 0, 0, {}), InvalidDataError);
  const auto m = motive("M", 3, {4, 1});
  CHECK(m.q(1) == -1);
  CHECK(m.q(2) == 2);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(motive("M", 1, {1, 0})).hodge_p() == std::vector<std::int64_t>{1, 0});
  CHECK(conjugate(motive("M", 0, {2})).hodge_p() == std::vector<std::int64_t>{-2});
  CHECK(conjugate(motive("M", 2, {3, 1, 0})).hodge_p() == std::vector<std::int64_t>{2, 1, -1});
}

TEST_CASE("dual") {
  const auto d = dual(motive("M", 1, {1, 0}));
  CHECK(d.weight() == -1);
  CHECK(d.hodge_p() == std::vector<std::int64_t>{0, -1});
  CHECK(dual(motive("M", 0, {0})).hodge_p() == std::vector<std::int64_t>{0});
  const auto d3 = dual(motive("M", 2, {3, 1, 0}));
  CHECK(d3.weight() == -2);
  CHECK(d3.hodge_p() == std::vector<std::int64_t>{0, -1, -3});
}

TEST_CASE("tate twist") {
  const auto t = tate_twist(motive("M", 0, {0}), 1);
  CHECK(t.weight() == -2);
  CHECK(t.hodge_p() == std::vector<std::int64_t>{-1});
  const auto u = tate_twist(motive("M", 1, {1, 0}), -1);
  CHECK(u.weight() == 3);
  CHECK(u.hodge_p() == std::vector<std::int64_t>{2, 1});
  const auto m = motive("M", 5, {4, 1});
  CHECK(tate_twist(m, 0) == m);
}

TEST_CASE("determinant motive") {
  const auto d = determinant_motive(motive("M", 1, {1, 0}));
  CHECK(d.rank() == 1);
  CHECK(d.weight() == 2);
  CHECK(d.hodge_p() == std::vector<std::int64_t>{1});
  const auto one = motive("M", 3, {7});
  CHECK(determinant_motive(one) == one);
  const auto d3 = determinant_motive(motive("M", 0, {1, 0, -1}));
  CHECK(d3.weight() == 0);
  CHECK(d3.hodge_p() == std::vector<std::int64_t>{0});
}

TEST_CASE("restriction of a tensor product") {
  const auto h = restriction_tensor(testing::example_m(), testing::example_mp());
  CHECK(h.weight() == 1);
  const std::map<HodgeMultiset::Pair, std::int64_t> expected{
      {{2, -1}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{-1, 2}, 1}};
  CHECK(h.pairs() == expected);
  CHECK(has_no_pp_class(h));

  const auto zero = restriction_tensor(motive("M", 0, {0}), motive("M'", 0, {0}));
  CHECK(zero.multiplicity(0, 0) == 2);
  CHECK_FALSE(has_no_pp_class(zero));
}

TEST_CASE("hodge multiset invariants are enforced") {
  CHECK_THROWS_AS(HodgeMultiset(1, {{{1, 1}, 1}}), InvalidDataError);
  CHECK_THROWS_AS(HodgeMultiset(1, {{{1, 0}, 1}}), InvalidDataError);
  CHECK_THROWS_AS(HodgeMultiset(1, {{{1, 0}, 2}, {{0, 1}, 1}}), InvalidDataError);
  CHECK_THROWS_AS(HodgeMultiset(0, {{{0, 0}, 0}}), InvalidDataError);
  CHECK(has_no_pp_class(HodgeMultiset(1, {{{1, 0}, 1}, {{0, 1}, 1}})));
}

TEST_CASE("functor laws on random motives") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = testing::rng_for("hodge", i);
    const int n = static_cast<int>(rng.uniform(1, 5));
    const auto m = random_motive(rng, "M", n);
    const auto k = rng.uniform(-3, 3);
    const auto l = rng.uniform(-3, 3);
    CHECK(conjugate(conjugate(m)) == m);
    CHECK(dual(dual(m)) == m);
    CHECK(dual(conjugate(m)).hodge_p() == conjugate(dual(m)).hodge_p());
    CHECK(tate_twist(tate_twist(m, k), l).hodge_p() == tate_twist(m, k + l).hodge_p());
    CHECK(tate_twist(tate_twist(m, k), l).weight() == tate_twist(m, k + l).weight());
    CHECK(determinant_motive(m).weight() == n * m.weight());
  }
}

TEST_CASE("restriction tensor is swap closed, commutative and of size 2nn'") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = testing::rng_for("tensor", i);
    const int n = static_cast<int>(rng.uniform(1, 4));
    const int np = static_cast<int>(rng.uniform(1, 4));
    const auto m = random_motive(rng, "M", n);
    const auto mp = random_motive(rng, "M'", np);
    const auto h = restriction_tensor(m, mp);
    CHECK(h.total_multiplicity() == 2 * n * np);
    CHECK(h == restriction_tensor(mp, m));
    for (const auto& [pq, mult] : h.pairs()) CHECK(h.multiplicity(pq.second, pq.first) == mult);
    if ((m.weight() + mp.weight()) % 2 != 0) CHECK(has_no_pp_class(h));
  }
}

TEST_CASE("functor labels") {
  const auto m = motive("M", 1, {1, 0});
  CHECK(conjugate(m).label() == "M^c");
  CHECK(dual(conjugate(m)).label() == "M^c^v");
  CHECK(conjugate(dual(m)).label() == "M^c^v");
  CHECK(conjugate(dual(conjugate(m))).label() == "M^v");
  CHECK(dual(dual(m)).label() == "M");
}
