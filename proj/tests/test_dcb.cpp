#include <doctest.h>

#include "helpers.hpp"
#include "qnil/dcb.hpp"

using namespace qnil;
using qt::lq;
using qt::q;

namespace {

FElement F(Word w, RatFunc c = 1) { return FElement::word(w, c); }

RootVec rv(std::vector<int> m) { return RootVec(std::move(m)); }

}  // namespace

TEST_CASE("sigma matrix of small slices") {
  Context ctx(CartanDatum::of_type("A2"));
  const PBWChart ch = build_chart(ctx, {0, 1, 0});
  auto r = sigma_matrix(ctx, ch, rv({1, 1}));
  REQUIRE(r.size() == 2);
  CHECK(r[0][0] == LaurentPoly(1));
  CHECK(r[1][1] == LaurentPoly(1));
  CHECK(r[0][1].is_zero());
  CHECK(r[1][0] == lq(-1) - lq(1));
  CHECK(sigma_matrix(ctx, ch, rv({1, 0})) == LaurentMatrix{{LaurentPoly(1)}});
  CHECK(sigma_matrix(ctx, ch, rv({0, 1})) == LaurentMatrix{{LaurentPoly(1)}});
  CHECK_THROWS_AS(sigma_matrix(ctx, build_chart(ctx, {0}), rv({0, 1})), std::invalid_argument);
}

TEST_CASE("triangular solve") {
  const LaurentMatrix id{{LaurentPoly(1), LaurentPoly()}, {LaurentPoly(), LaurentPoly(1)}};
  CHECK(triangular_solve(id) == id);
  CHECK(triangular_solve({{LaurentPoly(1), LaurentPoly()}, {lq(-1) - lq(1), LaurentPoly(1)}})[1][0] == -lq(1));
  CHECK(triangular_solve({{LaurentPoly(1), LaurentPoly()}, {lq(3) - lq(-3), LaurentPoly(1)}})[1][0] == lq(3));
  CHECK(triangular_solve({{LaurentPoly(1), LaurentPoly()}, {lq(-3) - lq(3), LaurentPoly(1)}})[1][0] == -lq(3));
  CHECK_THROWS_AS(triangular_solve({{LaurentPoly(1), LaurentPoly()}, {lq(1), LaurentPoly(1)}}), SliceError);
  const LaurentMatrix p{{LaurentPoly(1), LaurentPoly(), LaurentPoly()}, {lq(1), LaurentPoly(1), LaurentPoly()}, {lq(2), lq(1, 3), LaurentPoly(1)}};
  const LaurentMatrix m = unitriangular_inverse(p);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      LaurentPoly s;
      for (std::size_t k = 0; k < 3; ++k) s += p[i][k] * m[k][j];
      CHECK(s == LaurentPoly(i == j ? 1 : 0));
    }
}

TEST_CASE("dual canonical slice in A2") {
  Context ctx(CartanDatum::of_type("A2"));
  const PBWChart ch = build_chart(ctx, {0, 1, 0});
  const RatFunc u = qt::one_minus(2);
  const DCBSlice s = dcb_slice(ctx, ch, rv({1, 1}));
  CHECK(s.labels == std::vector<Composition>{{0, 1, 0}, {1, 0, 1}});
  CHECK(equals(ctx, s.elements[0], (F({1, 0}) - F({0, 1}, q(1))).scaled(u)));
  CHECK(equals(ctx, s.elements[1], (F({0, 1}) - F({1, 0}, q(1))).scaled(u)));
  CHECK(s.pmatrix[1][0] == -lq(1));

  const auto low = canonical_low_slice(ctx, ch, s);
  CHECK(equals(ctx, low[1], F({0, 1})));
  CHECK(equals(ctx, low[0], F({1, 0})));

  const DCBSlice one = dcb_slice(ctx, ch, rv({1, 0}));
  CHECK(equals(ctx, one.elements[0], F({0}, u)));
  CHECK(equals(ctx, canonical_low_slice(ctx, ch, one)[0], F({0})));
  const DCBSlice root = dcb_slice(ctx, ch, rv({0, 1}));
  CHECK(equals(ctx, root.elements[0], f_up(ctx, ch, {0, 0, 1})));
}

TEST_CASE("dual canonical slices satisfy the characterization") {
  struct Case {
    const char* type;
    Word word;
    int bound;
  };
  for (const Case& cs : {Case{"A2", {0, 1, 0}, 6}, Case{"B2", {0, 1, 0, 1}, 5}, Case{"B2", {1, 0, 1, 0}, 5}, Case{"A3", {0, 1, 0, 2, 1, 0}, 4},
                         Case{"G2", {0, 1, 0, 1, 0, 1}, 4}}) {
    Context ctx(CartanDatum::of_type(cs.type));
    const PBWChart ch = build_chart(ctx, cs.word);
    for (const auto& nu : chart_degrees(ch, cs.bound)) {
      const DCBSlice s = dcb_slice(ctx, ch, nu);
      const auto low = canonical_low_slice(ctx, ch, s);
      for (std::size_t a = 0; a < s.labels.size(); ++a) {
        CHECK(s.pmatrix[a][a] == LaurentPoly(1));
        for (std::size_t b = 0; b < a; ++b)
          CHECK((s.pmatrix[a][b].is_zero() || (s.pmatrix[a][b].min_exponent() > 0 && s.pmatrix[a][b].is_integral())));
        CHECK(equals(ctx, low[a].bar_coeffs(), low[a]));
        // F^up back in the G^up basis: delta + qZ[q], supported below the diagonal
        const LaurentMatrix inv = unitriangular_inverse(s.pmatrix);
        for (std::size_t b = 0; b < a; ++b) CHECK((inv[a][b].is_zero() || inv[a][b].min_exponent() > 0));
      }
    }
  }
}
