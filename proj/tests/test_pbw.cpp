#include <doctest.h>

#include "helpers.hpp"
#include "qnil/pbw.hpp"

using namespace qnil;
using qt::q;

namespace {

FElement F(Word w, RatFunc c = 1) { return FElement::word(w, c); }

RootVec rv(std::vector<int> m) { return RootVec(std::move(m)); }

}  // namespace

TEST_CASE("root vectors along (1,2,1) in A2") {
  Context ctx(CartanDatum::of_type("A2"));
  const PBWChart ch = build_chart(ctx, {0, 1, 0});
  REQUIRE(ch.rootvecs.size() == 3);
  CHECK(ch.rootvecs[0] == F({0}));
  CHECK(equals(ctx, ch.rootvecs[1], F({1, 0}) - F({0, 1}, q(1))));
  CHECK(equals(ctx, ch.rootvecs[2], F({1})));
  CHECK(ch.roots[1] == rv({1, 1}));

  Context a1(CartanDatum::of_type("A1"));
  CHECK(build_chart(a1, {0}).rootvecs[0] == F({0}));
  CHECK_THROWS_AS(build_chart(ctx, {0, 0}), std::invalid_argument);
}

TEST_CASE("lower and dual PBW elements") {
  Context ctx(CartanDatum::of_type("A2"));
  const PBWChart ch = build_chart(ctx, {0, 1, 0});
  const RatFunc u = qt::one_minus(2);
  CHECK(f_low(ctx, ch, {0, 0, 0}) == FElement::one());
  CHECK(f_up(ctx, ch, {0, 0, 0}) == FElement::one());
  CHECK(equals(ctx, f_low(ctx, ch, {1, 0, 1}), F({0, 1})));
  CHECK(equals(ctx, f_up(ctx, ch, {1, 0, 1}), F({0, 1}, u * u)));
  CHECK(equals(ctx, f_up(ctx, ch, {0, 1, 0}), (F({1, 0}) - F({0, 1}, q(1))).scaled(u)));
  CHECK(pbw_norm(ctx.cartan(), ch, {2, 0, 0}) == (u * qt::one_minus(4)).inverse());
  CHECK_THROWS_AS(f_low(ctx, ch, {1, 0}), std::invalid_argument);
}

TEST_CASE("compositions of a weight") {
  Context ctx(CartanDatum::of_type("A2"));
  const PBWChart ch = build_chart(ctx, {0, 1, 0});
  CHECK(enumerate_compositions(ch, rv({1, 1})) == std::vector<Composition>{{0, 1, 0}, {1, 0, 1}});
  CHECK(enumerate_compositions(ch, rv({0, 0})) == std::vector<Composition>{{0, 0, 0}});
  CHECK(enumerate_compositions(ch, rv({1, 0})) == std::vector<Composition>{{1, 0, 0}});
  const auto big = enumerate_compositions(ch, rv({2, 2}));
  CHECK(std::is_sorted(big.begin(), big.end(), lex_less));
  CHECK(big.size() == 3);
  CHECK(rlex_less({1, 0, 0}, {0, 0, 1}));
  CHECK(lex_less({0, 0, 1}, {1, 0, 0}));
}

TEST_CASE("dual PBW expansion") {
  Context ctx(CartanDatum::of_type("A2"));
  const PBWChart ch = build_chart(ctx, {0, 1, 0});
  const RatFunc u = qt::one_minus(2);
  auto a = expand_dual_pbw(ctx, ch, F({0, 1}), rv({1, 1}));
  CHECK(a.residual_zero);
  CHECK(a.at({1, 0, 1}) == (u * u).inverse());
  CHECK(a.at({0, 1, 0}).is_zero());
  auto b = expand_dual_pbw(ctx, ch, F({1, 0}), rv({1, 1}));
  CHECK(b.residual_zero);
  CHECK(b.at({0, 1, 0}) == u.inverse());
  CHECK(b.at({1, 0, 1}) == q(1) / (u * u));
  CHECK(equals(ctx, from_dual_pbw(ctx, ch, b), F({1, 0})));

  // outside U_q^-(s1): f2 has a nonzero residual
  const PBWChart s1 = build_chart(ctx, {0});
  CHECK_FALSE(expand_dual_pbw(ctx, s1, F({1}), rv({0, 1})).residual_zero);
}

TEST_CASE("orthogonality and duality on slices") {
  for (const char* type : {"A2", "B2", "A3"}) {
    Context ctx(CartanDatum::of_type(type));
    const Word w0 = type == std::string("A3") ? Word{0, 1, 0, 2, 1, 0} : type == std::string("B2") ? Word{0, 1, 0, 1} : Word{0, 1, 0};
    const PBWChart ch = build_chart(ctx, w0);
    const int bound = type == std::string("A3") ? 4 : 5;
    for (const auto& nu : chart_degrees(ch, bound)) {
      const auto cs = enumerate_compositions(ch, nu);
      for (const auto& c : cs) {
        f_up(ctx, ch, c);  // checks the norm
        auto e = expand_dual_pbw(ctx, ch, f_up(ctx, ch, c), nu);
        CHECK(e.residual_zero);
        for (const auto& [c2, v] : e.coeffs) CHECK(v == RatFunc(c2 == c ? 1 : 0));
        for (const auto& c2 : cs)
          if (c2 < c) CHECK(form_L(ctx, f_low(ctx, ch, c), f_low(ctx, ch, c2)).is_zero());
      }
    }
  }
}

TEST_CASE("chart independence") {
  Context ctx(CartanDatum::of_type("B2"));
  const PBWChart a = build_chart(ctx, {0, 1, 0, 1});
  const PBWChart b = build_chart(ctx, {1, 0, 1, 0});
  for (const auto& nu : chart_degrees(a, 4))
    for (const auto& c : enumerate_compositions(a, nu)) CHECK(expand_dual_pbw(ctx, b, f_up(ctx, a, c), nu).residual_zero);

  Context a3(CartanDatum::of_type("A3"));
  const PBWChart p = build_chart(a3, {0, 1, 0, 2});
  const PBWChart r = build_chart(a3, {1, 0, 1, 2});
  for (const auto& nu : chart_degrees(p, 3))
    for (const auto& c : enumerate_compositions(p, nu)) CHECK(expand_dual_pbw(a3, r, f_up(a3, p, c), nu).residual_zero);
}
