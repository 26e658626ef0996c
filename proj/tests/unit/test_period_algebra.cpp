#include <doctest.h>

#include "pk/errors.hpp"
#include "pk/period_algebra.hpp"
#include "support.hpp"

using namespace pk;

namespace {

MotiveTag tag_m(int n, bool csd = false) { return MotiveTag::named("M", n, csd); }

PeriodMonomial q(int i, const MotiveTag& t, std::int64_t e = 1) {
  return PeriodMonomial::of(PeriodSymbol::q(i, t), e);
}

PeriodMonomial delta(const MotiveTag& t, std::int64_t e = 1) {
  return PeriodMonomial::of(PeriodSymbol::delta(t), e);
}

PeriodMonomial two_pi_i(std::int64_t e) { return PeriodMonomial::two_pi_i(e); }

PeriodMonomial random_monomial(Rng& rng) {
  PeriodMonomial x;
  const auto count = rng.uniform(0, 5);
  for (std::int64_t k = 0; k < count; ++k) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    auto t = MotiveTag::named(rng.coin() ? "M" : "N", n);
    if (rng.coin()) t = t.conjugated();
    const auto e = rng.uniform(-3, 3);
    switch (rng.uniform(0, 5)) {
      case 0: x.multiply(PeriodSymbol::two_pi_i(), e); break;
      case 1: x.multiply(PeriodSymbol::q(static_cast<int>(rng.uniform(1, n)), t), e); break;
      case 2: x.multiply(PeriodSymbol::delta(t), e); break;
      case 3: x.multiply(PeriodSymbol::big_delta(t), e); break;
      case 4: x.multiply(PeriodSymbol::q_partial(static_cast<int>(rng.uniform(0, n)), t), e); break;
      default: x.multiply(PeriodSymbol::q_upper(static_cast<int>(rng.uniform(0, n)), t), e); break;
    }
  }
  return x;
}

}  // namespace

TEST_CASE("tags keep the functor normal form") {
  const auto m = tag_m(3);
  CHECK(m.conjugated().conjugated() == m);
  CHECK(m.dualized().dualized() == m);
  CHECK(m.conjugated().dualized() == m.dualized().conjugated());
  CHECK(m.twisted(2).dualized() == m.dualized().twisted(-2));
  CHECK(m.twisted(1).determinant().twist == 3);
  CHECK(m.determinant().rank() == 1);
  CHECK(m.conjugated().dualized().twisted(-2).str() == "M^c^v(-2)");
  CHECK(m.determinant().str() == "det(M)");
  CHECK(MotiveTag::named("X").rank() == std::nullopt);
  CHECK_THROWS_AS(MotiveTag::named("X").require_rank(), UnknownRankError);
  const auto z = MotiveTag::unit_motive();
  CHECK(z.conjugated() == z);
  CHECK(z.dualized() == z);
}

TEST_CASE("symbol index bounds") {
  CHECK_THROWS_AS(PeriodSymbol::q(0, tag_m(2)), std::out_of_range);
  CHECK_THROWS_AS(PeriodSymbol::q(3, tag_m(2)), std::out_of_range);
  CHECK_NOTHROW(PeriodSymbol::q_upper(0, tag_m(2)));
  CHECK_NOTHROW(PeriodSymbol::q_upper(2, tag_m(2)));
  CHECK_THROWS_AS(PeriodSymbol::q_partial(3, tag_m(2)), std::out_of_range);
  CHECK_NOTHROW(PeriodSymbol::q(5, MotiveTag::named("X")));
}

TEST_CASE("monomial group laws and canonical merging") {
  const auto x = q(1, tag_m(2)) * delta(tag_m(2), 3) * two_pi_i(-2);
  CHECK((x * x.inverse()).is_identity());
  CHECK((two_pi_i(2) * two_pi_i(3)) == two_pi_i(5));
  CHECK((q(1, tag_m(2)) * delta(tag_m(2)) * q(1, tag_m(2))).str() == "Q[1;M]^2 * d[M]");
  CHECK(PeriodMonomial().str() == "1");
  CHECK(mono_eq(mono_mul(x, mono_pow(x, -1)), PeriodMonomial()));
  auto labelled = x;
  labelled.set_field("E;K");
  CHECK(labelled == x);
}

TEST_CASE("canonical text") {
  const auto m = tag_m(2);
  const auto mp = MotiveTag::named("M'", 1);
  PeriodMonomial x;
  x.multiply(PeriodSymbol::q_upper(1, mp), 2);
  x.multiply(PeriodSymbol::q_upper(2, m), 1);
  x.multiply(PeriodSymbol::two_pi_i(), -1);
  CHECK(x.str() == "(2πi)^-1 * Qs[2;M] * Qs[1;M']^2");
  CHECK(two_pi_i(1).str() == "(2πi)^1");
  PeriodMonomial all;
  all.multiply(PeriodSymbol::q_xi(m), 1);
  all.multiply(PeriodSymbol::automorphic(1, m), 1);
  all.multiply(PeriodSymbol::q_upper(1, m), 1);
  all.multiply(PeriodSymbol::q_partial(1, m), 1);
  all.multiply(PeriodSymbol::big_delta(m), 1);
  all.multiply(PeriodSymbol::delta(m), 1);
  all.multiply(PeriodSymbol::q(2, m), -1);
  all.multiply(PeriodSymbol::two_pi_i(), 4);
  CHECK(all.str() ==
        "(2πi)^4 * Q[2;M]^-1 * d[M] * D[M] * Qp[1;M] * Qs[1;M] * P[1;M] * Qxi[M]");
}

TEST_CASE("expand") {
  const auto m = tag_m(2);
  CHECK(expand(PeriodMonomial::of(PeriodSymbol::q_upper(0, m))) == two_pi_i(1) * delta(m));
  CHECK(expand(PeriodMonomial::of(PeriodSymbol::q_upper(2, m))) ==
        q(1, m) * q(2, m) * two_pi_i(1) * delta(m));
  CHECK(expand(PeriodMonomial::of(PeriodSymbol::q_partial(0, m))).is_identity());
  CHECK(expand(PeriodMonomial::of(PeriodSymbol::big_delta(tag_m(4)), 2)) ==
        two_pi_i(12) * delta(tag_m(4), 2));
  CHECK_THROWS_AS(expand(PeriodMonomial::of(PeriodSymbol::big_delta(MotiveTag::named("X")))),
                  UnknownRankError);
}

TEST_CASE("expand is an idempotent homomorphism") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = testing::rng_for("expand", i);
    const auto x = random_monomial(rng);
    const auto y = random_monomial(rng);
    CHECK(expand(x * y) == expand(x) * expand(y));
    CHECK(expand(expand(x)) == expand(x));
    CHECK(expand(x.inverse()) == expand(x).inverse());
    CHECK(x * y == y * x);
    CHECK((x * y) * x == x * (y * x));
    CHECK((x * x.inverse()).is_identity());
  }
}

TEST_CASE("single rules") {
  const auto m3 = tag_m(3);
  CHECK(apply_rule(q(2, m3.conjugated()), RuleId::R1) == q(2, m3, -1));
  CHECK(apply_rule(q(1, m3.conjugated()), RuleId::R1) == q(3, m3, -1));

  const auto r1 = MotiveTag::named("M", 1);
  const auto twisted = apply_rule(delta(r1.twisted(1)), RuleId::R3);
  CHECK(twisted == two_pi_i(1) * delta(r1));
  CHECK(twisted.field() == "E;K");
  CHECK(apply_rule(delta(tag_m(2).twisted(3)), RuleId::R3) == two_pi_i(6) * delta(tag_m(2)));

  const auto m2 = tag_m(2);
  CHECK(apply_rule(delta(m2.conjugated()), RuleId::R2) == q(1, m2) * q(2, m2) * delta(m2));
  CHECK(apply_rule(delta(m2.dualized()), RuleId::R4) == delta(m2, -1));

  const auto c = tag_m(3, true);
  CHECK(apply_rule(delta(c.conjugated()), RuleId::R5) == delta(c.dualized().twisted(-2)));
  CHECK(apply_rule(q(1, c.dualized()), RuleId::R6) == q(3, c, -1));
  CHECK(apply_rule(PeriodMonomial::of(PeriodSymbol::q_xi(c)), RuleId::R7) ==
        two_pi_i(-3) * delta(c, -1));
  CHECK(apply_rule(q(1, m3.determinant()), RuleId::R8) == q(1, m3) * q(2, m3) * q(3, m3));
  CHECK(apply_rule(delta(m3.determinant()), RuleId::R8) == delta(m3));
}

TEST_CASE("conjugate self-dual rules are gated") {
  const auto plain = tag_m(3);
  CHECK_THROWS_AS(apply_rule(delta(plain.conjugated()), RuleId::R5), RuleNotApplicable);
  CHECK_THROWS_AS(apply_rule(q(1, plain.dualized()), RuleId::R6), RuleNotApplicable);
  CHECK_THROWS_AS(apply_rule(PeriodMonomial::of(PeriodSymbol::q_xi(plain)), RuleId::R7),
                  RuleNotApplicable);
  CHECK_THROWS_AS(apply_rule(q(1, plain), RuleId::R1), RuleNotApplicable);
}

TEST_CASE("unit motive") {
  const auto z1 = MotiveTag::unit_motive().twisted(1);
  const auto x = apply_rule(delta(z1), RuleId::R3);
  CHECK(x == two_pi_i(1));
  CHECK(x.str() == "(2πi)^1");
  CHECK(apply_rule(delta(MotiveTag::unit_motive().twisted(-4)), RuleId::R3) == two_pi_i(-4));
}

TEST_CASE("R1 is an involution") {
  for (int n = 1; n <= 6; ++n) {
    const auto t = tag_m(n);
    for (int i = 1; i <= n; ++i) {
      // Q_i(M^c) ~ Q_{n+1-i}(M)^-1, and reading it for M^c in place of M gives back Q_i.
      const auto once = apply_rule(q(i, t.conjugated()), RuleId::R1);
      CHECK(once == q(n + 1 - i, t, -1));
      const auto twice = apply_rule(q(n + 1 - i, t.conjugated()), RuleId::R1).inverse();
      CHECK(twice == q(i, t));
    }
  }
}

TEST_CASE("rule names") {
  CHECK(parse_rule("r5") == RuleId::R5);
  CHECK(parse_rule("R8") == RuleId::R8);
  CHECK_FALSE(parse_rule("R9").has_value());
  CHECK(to_string(RuleId::R3) == "R3");
}

TEST_CASE("exhaustive application") {
  const auto m = tag_m(2);
  const auto x = delta(m.twisted(1)) * delta(tag_m(3).twisted(-1));
  const auto y = apply_rule_exhaustively(x, RuleId::R3);
  CHECK(y == two_pi_i(-1) * delta(m) * delta(tag_m(3)));
}

TEST_CASE("lemma derivations") {
  const auto one = derive_lemma_127(1);
  CHECK(one.ok);
  CHECK(one.lhs == delta(tag_m(1, true), -2));
  const auto two = derive_lemma_127(2);
  CHECK(two.ok);
  CHECK(two.lhs == delta(tag_m(2, true), -2) * two_pi_i(-2));
  CHECK(two.rhs == q(1, tag_m(2, true)) * q(2, tag_m(2, true)));
  for (int n = 1; n <= 8; ++n) {
    CHECK(derive_lemma_127(n).ok);
    for (int s = 0; s <= n; ++s) CHECK(derive_comparison_prop(n, s).ok);
  }
  CHECK_FALSE(derive_comparison_prop(4, 4).steps.empty());
  CHECK_THROWS_AS(derive_lemma_127(0), std::invalid_argument);
  CHECK_THROWS_AS(derive_comparison_prop(2, 3), std::invalid_argument);
}
