#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qnil/finitetype.hpp"
#include "qnil/twist.hpp"

using namespace qnil;
using qt::lq;
using qt::q;

namespace {

FElement F(Word w, RatFunc c = 1) { return FElement::word(w, c); }

RootVec rv(std::vector<int> m) { return RootVec(std::move(m)); }

FElement random_in_chart(const Context& ctx, const PBWChart& ch, std::mt19937& rng, int max_height) {
  const auto degrees = chart_degrees(ch, max_height);
  std::uniform_int_distribution<std::size_t> pick(0, degrees.size() - 1);
  std::uniform_int_distribution<int> co(-2, 2), ex(-2, 2);
  const RootVec nu = degrees[pick(rng)];
  FElement x;
  for (const auto& c : enumerate_compositions(ch, nu)) x = x + f_up(ctx, ch, c).scaled(q(ex(rng)) * RatFunc(co(rng)));
  return x;
}

}  // namespace

TEST_CASE("theta on generators") {
  Context ctx(CartanDatum::of_type("A2"));
  const int n = 2;
  CHECK(equal_to_minus(ctx, theta(ctx, {0, 1, 0}, F({0})), F({1})));
  CHECK(equal_to_minus(ctx, theta(ctx, {0, 1, 0}, F({0, 1})), F({0, 1})));
  const UqElement e1 = theta(ctx, {}, F({0}));
  CHECK(e1 == UqElement::monomial(UqMonomial{{}, RootVec::simple(n, 0), {0}}, -q(-2)));
  CHECK(equal_to_minus(ctx, theta(ctx, {0}, F({0})), F({0})));
}

TEST_CASE("root vector images and PBW reversal") {
  for (const auto& [type, word] : std::vector<std::pair<const char*, Word>>{{"A2", {0, 1, 0}}, {"B2", {0, 1, 0, 1}}, {"A3", {0, 1, 0, 2, 1, 0}}, {"A2", {0}}}) {
    Context ctx(CartanDatum::of_type(type));
    for (bool ok : verify_rootvector_images(ctx, word)) CHECK(ok);
  }
  Context a2(CartanDatum::of_type("A2"));
  CHECK(verify_pbw_reversal(a2, {0, 1, 0}, {1, 0, 1}));
  CHECK(verify_pbw_reversal(a2, {0, 1, 0}, {0, 0, 0}));
  Context b2(CartanDatum::of_type("B2"));
  CHECK(verify_pbw_reversal(b2, {0, 1, 0, 1}, {1, 0, 0, 0}));
  CHECK(verify_pbw_reversal(b2, {0, 1, 0, 1}, {1, 1, 0, 2}));
}

TEST_CASE("dual canonical twist in A2") {
  Context ctx(CartanDatum::of_type("A2"));
  const TwistReport r = verify_dcb_twist(ctx, {0, 1, 0}, rv({1, 1}));
  CHECK(r.passed());
  CHECK(r.entries.size() == 2);
  const TwistReport one = verify_dcb_twist(ctx, {0, 1, 0}, rv({1, 0}));
  CHECK(one.passed());
  CHECK(reversed_degree(ctx.cartan(), {0, 1, 0}, rv({1, 0})) == rv({0, 1}));
  const TwistReport empty = verify_dcb_twist(ctx, {}, rv({0, 0}));
  CHECK(empty.passed());
  CHECK(empty.entries.size() == 1);
}

TEST_CASE("reverse coefficient table") {
  Context ctx(CartanDatum::of_type("A2"));
  const CoeffTable t = reverse_coeff_table(ctx, {0, 1, 0}, rv({1, 1}));
  CHECK(t.passed());
  bool seen = false;
  for (const auto& e : t.entries)
    if (e.c == Composition{1, 0, 1} && e.c2 == Composition{0, 1, 0}) {
      seen = true;
      CHECK(e.coeff == lq(1));
    }
  CHECK(seen);
  CHECK(reverse_coeff_table(ctx, {0, 1, 0}, rv({0, 1})).entries.size() == 1);
}

TEST_CASE("cofinite twist") {
  Context ctx(CartanDatum::of_type("A2"));
  const RatFunc u = qt::one_minus(2);
  const CofiniteReport r = cofinite_twist_check(ctx, {0}, F({1}, u));
  CHECK(r.passed());
  CHECK(r.beta == rv({1, 1}));
  CHECK(r.scalar == q(-1));
  CHECK(*r.match == Composition{0, 1, 0});
  CHECK(cofinite_twist_check(ctx, {0}, FElement::one()).passed());
  CHECK_THROWS_AS(cofinite_twist_check(ctx, {0}, F({0})), PreconditionError);
}

TEST_CASE("theta inverse, anti-multiplicativity, weights and the form") {
  std::mt19937 rng(7);
  for (const auto& [type, word] : std::vector<std::pair<const char*, Word>>{{"A2", {0, 1, 0}}, {"B2", {0, 1, 0, 1}}, {"A3", {0, 1, 2}}}) {
    Context ctx(CartanDatum::of_type(type));
    const PBWChart ch = build_chart(ctx, word);
    const Word inv = inverse_word(word);
    for (int s = 0; s < 6; ++s) {
      const FElement x = random_in_chart(ctx, ch, rng, 3);
      const FElement y = random_in_chart(ctx, ch, rng, 2);
      const UqElement tx = theta(ctx, inv, x);
      const auto mx = minus_part(ctx, tx);
      REQUIRE(mx);
      CHECK(equal_to_minus(ctx, theta(ctx, word, *mx), x));
      CHECK(uq_equal(ctx, theta(ctx, inv, x * y), multiply(ctx, theta(ctx, inv, y), tx)));
      const auto my = minus_part(ctx, theta(ctx, inv, y));
      REQUIRE(my);
      CHECK(form_L(ctx, x, y) == form_L(ctx, *mx, *my));
      if (!x.is_zero()) {
        const RootVec nu = x.degree(ctx.rank());
        if (!mx->is_zero()) CHECK(mx->degree(ctx.rank()) == reversed_degree(ctx.cartan(), word, nu));
      }
    }
  }
}
