#include <doctest.h>

#include "helpers.hpp"
#include "qnil/finitetype.hpp"
#include "qnil/twist.hpp"

using namespace qnil;

namespace {

FElement F(Word w) { return FElement::word(w); }

RootVec rv(std::vector<int> m) { return RootVec(std::move(m)); }

}  // namespace

TEST_CASE("longest words") {
  CHECK(longest_word(CartanDatum::of_type("A1")) == Word{0});
  CHECK(longest_word(CartanDatum::of_type("A2")).size() == 3);
  CHECK(longest_word(CartanDatum::of_type("B2")).size() == 4);
  CHECK(longest_word(CartanDatum::of_type("A3")).size() == 6);
  CHECK(longest_word(CartanDatum::of_type("G2")).size() == 6);
  CHECK(longest_word(CartanDatum::of_type("D4")).size() == 12);
  CHECK(longest_word(CartanDatum::of_type("F4")).size() == 24);
  CHECK_THROWS_AS(longest_word(CartanDatum({{2, -2}, {-2, 2}}, {1, 1})), std::invalid_argument);
}

TEST_CASE("diagram automorphism") {
  CHECK(dynkin_theta(CartanDatum::of_type("A2")) == std::vector<int>{1, 0});
  CHECK(dynkin_theta(CartanDatum::of_type("B2")) == std::vector<int>{0, 1});
  CHECK(dynkin_theta(CartanDatum::of_type("A1")) == std::vector<int>{0});
  CHECK(dynkin_theta(CartanDatum::of_type("A3")) == std::vector<int>{2, 1, 0});
  Context ctx(CartanDatum::of_type("A2"));
  CHECK(theta_auto(ctx, F({0, 1}).to_uq(2)) == F({1, 0}).to_uq(2));
  CHECK(theta_auto(ctx, UqElement::t(RootVec::simple(2, 0))) == UqElement::t(RootVec::simple(2, 1)));
  Context b2(CartanDatum::of_type("B2"));
  CHECK(theta_auto(b2, F({0, 1, 1}).to_uq(2)) == F({0, 1, 1}).to_uq(2));
}

TEST_CASE("theta star against Theta_w0") {
  Context ctx(CartanDatum::of_type("A2"));
  CHECK(equal_to_minus(ctx, theta(ctx, {0, 1, 0}, F({0, 1})), theta_auto({1, 0}, F({0, 1}).star())));
  CHECK(equal_to_minus(ctx, theta(ctx, {0, 1, 0}, F({0})), F({1})));
  const ThetaStarReport r = verify_theta_star(ctx, rv({1, 1}), {0, 1, 0});
  CHECK(r.passed());
  CHECK(r.monomials_checked == 2);
  const DCBSlice s = dcb_slice(ctx, build_chart(ctx, {0, 1, 0}), rv({1, 1}));
  CHECK(transpose(unitriangular_inverse(s.pmatrix))[0][1] == qt::lq(1));
  for (const char* type : {"B2", "A3"}) {
    Context c(CartanDatum::of_type(type));
    const Word w0 = longest_word(c.cartan());
    for (const auto& nu : chart_degrees(build_chart(c, w0), 3)) CHECK(verify_theta_star(c, nu, w0).passed());
  }
}

TEST_CASE("simple roots sent to simple roots") {
  for (const char* type : {"A2", "B2", "A3", "G2"}) {
    Context ctx(CartanDatum::of_type(type));
    const int n = ctx.rank();
    const Word w0 = longest_word(ctx.cartan());
    for (std::size_t len = 0; len <= w0.size(); ++len) {
      const Word w(w0.begin(), w0.begin() + static_cast<long>(len));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (weyl_act(ctx.cartan(), w, RootVec::simple(n, i)) == RootVec::simple(n, j))
            CHECK(*braid_generator(ctx, w, +1, UqMonomial{{i}, RootVec::zero(n), {}}) == F({j}).to_uq(n));
    }
  }
}
