#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qnil/uqfull.hpp"

using namespace qnil;
using qt::q;

namespace {

UqMonomial mono(int rank, Word f, std::vector<int> k, Word e) {
  if (k.empty()) k.assign(static_cast<std::size_t>(rank), 0);
  return UqMonomial{std::move(f), RootVec(std::move(k)), std::move(e)};
}

UqElement M(int rank, Word f, std::vector<int> k, Word e, RatFunc c = 1) { return UqElement::monomial(mono(rank, f, k, e), c); }

UqElement random_monomial(std::mt19937& rng, int rank, int maxlen) {
  std::uniform_int_distribution<int> letter(0, rank - 1), len(0, maxlen), kexp(-1, 1);
  int total = len(rng);
  std::uniform_int_distribution<int> split(0, total);
  int nf = split(rng);
  Word f, e;
  for (int k = 0; k < nf; ++k) f.push_back(letter(rng));
  for (int k = nf; k < total; ++k) e.push_back(letter(rng));
  std::vector<int> kk(static_cast<std::size_t>(rank));
  for (auto& v : kk) v = kexp(rng);
  return M(rank, f, kk, e, q(kexp(rng)));
}

std::vector<UqElement> generators(int rank) {
  std::vector<UqElement> g;
  for (int i = 0; i < rank; ++i) {
    g.push_back(UqElement::f(rank, i));
    g.push_back(UqElement::e(rank, i));
    g.push_back(UqElement::t(RootVec::simple(rank, i)));
  }
  return g;
}

UqElement SV(const Context& ctx, const UqElement& x) { return antipode(ctx, involution(ctx, Involution::vee, x)); }

}  // namespace

TEST_CASE("commutation relations") {
  Context ctx(CartanDatum::of_type("A2"));
  const RatFunc c = (q(1) - q(-1)).inverse();
  CHECK(multiply(ctx, UqElement::e(2, 0), UqElement::f(2, 0)) ==
        M(2, {0}, {}, {0}) + M(2, {}, {1, 0}, {}, c) - M(2, {}, {-1, 0}, {}, c));
  CHECK(multiply(ctx, UqElement::e(2, 0), UqElement::f(2, 1)) == M(2, {1}, {}, {0}));
  CHECK(multiply(ctx, UqElement::t(RootVec::simple(2, 0)), UqElement::e(2, 0)) == M(2, {}, {1, 0}, {0}));
  CHECK(multiply(ctx, UqElement::e(2, 0), UqElement::t(RootVec::simple(2, 0))) == M(2, {}, {1, 0}, {0}, q(-2)));
  CHECK(multiply(ctx, UqElement::t(RootVec::simple(2, 0)), UqElement::f(2, 1)) == M(2, {1}, {1, 0}, {}, q(1)));
}

TEST_CASE("involutions and antipode on examples") {
  Context ctx(CartanDatum::of_type("A2"));
  const UqElement f12 = M(2, {0, 1}, {}, {});
  CHECK(involution(ctx, Involution::star, f12) == M(2, {1, 0}, {}, {}));
  CHECK(involution(ctx, Involution::vee, f12) == M(2, {}, {}, {0, 1}));
  CHECK(involution(ctx, Involution::bar, M(2, {0}, {}, {}, q(1))) == M(2, {0}, {}, {}, q(-1)));
  CHECK(involution(ctx, Involution::phi, M(2, {0}, {1, 0}, {1})) == M(2, {1}, {1, 0}, {0}));
  CHECK(antipode(ctx, UqElement::f(2, 0)) == -multiply(ctx, UqElement::t(-RootVec::simple(2, 0)), UqElement::f(2, 0)));
  CHECK(antipode(ctx, UqElement::e(2, 0)) == -multiply(ctx, UqElement::e(2, 0), UqElement::t(RootVec::simple(2, 0))));
  CHECK(antipode(ctx, M(2, {}, {}, {0, 1})) == multiply(ctx, M(2, {}, {}, {1, 0}, q(-1)), UqElement::t(RootVec({1, 1}))));
  CHECK(SV(ctx, SV(ctx, f12)) == f12);
}

TEST_CASE("(anti)automorphism properties on random monomials") {
  for (const char* t : {"A2", "B2"}) {
    Context ctx(CartanDatum::of_type(t));
    const int n = ctx.rank();
    std::mt19937 rng(17);
    for (int k = 0; k < 25; ++k) {
      UqElement x = random_monomial(rng, n, 3), y = random_monomial(rng, n, 3), z = random_monomial(rng, n, 2);
      const UqElement xy = multiply(ctx, x, y);
      CHECK(multiply(ctx, xy, z) == multiply(ctx, x, multiply(ctx, y, z)));
      for (auto kind : {Involution::vee, Involution::bar}) {
        CHECK(involution(ctx, kind, xy) == multiply(ctx, involution(ctx, kind, x), involution(ctx, kind, y)));
        CHECK(involution(ctx, kind, involution(ctx, kind, x)) == x);
      }
      for (auto kind : {Involution::star, Involution::phi}) {
        CHECK(involution(ctx, kind, xy) == multiply(ctx, involution(ctx, kind, y), involution(ctx, kind, x)));
        CHECK(involution(ctx, kind, involution(ctx, kind, x)) == x);
      }
      CHECK(antipode(ctx, xy) == multiply(ctx, antipode(ctx, y), antipode(ctx, x)));
      CHECK(SV(ctx, SV(ctx, x)) == x);
      CHECK(uq_equal(ctx, braid(ctx, 0, 1, xy), multiply(ctx, braid(ctx, 0, 1, x), braid(ctx, 0, 1, y))));
    }
  }
}

TEST_CASE("braid operators on examples") {
  Context ctx(CartanDatum::of_type("A2"));
  CHECK(braid(ctx, 0, 1, UqElement::f(2, 0)) == M(2, {}, {-1, 0}, {0}, RatFunc(-1)));
  CHECK(braid(ctx, 0, 1, UqElement::f(2, 1)) == M(2, {1, 0}, {}, {}) - M(2, {0, 1}, {}, {}, q(1)));
  CHECK(braid(ctx, 0, -1, UqElement::f(2, 1)) == M(2, {0, 1}, {}, {}) - M(2, {1, 0}, {}, {}, q(1)));
  CHECK(braid_word(ctx, {0, 1}, 1, UqElement::f(2, 0)) == UqElement::f(2, 1));
  CHECK(braid_word(ctx, {}, 1, UqElement::f(2, 0)) == UqElement::f(2, 0));
  CHECK(uq_equal(ctx, braid_word(ctx, {0, 1, 0}, 1, UqElement::f(2, 1)), braid_word(ctx, {1, 0, 1}, 1, UqElement::f(2, 1))));
  const UqElement x = M(2, {0, 1}, {1, -1}, {1});
  CHECK(uq_equal(ctx, braid_word(ctx, {0, 1, 0}, -1, braid_word(ctx, {0, 1, 0}, 1, x)), x));
  CHECK(braid_word_by_generators(ctx, {0, 1, 0}, 1, x) == braid_word(ctx, {0, 1, 0}, 1, x));
  CHECK(braid_word_by_generators(ctx, {1, 0}, -1, x) == braid_word(ctx, {1, 0}, -1, x));
}

TEST_CASE("T_i inverts T_i^{-1} in rank two") {
  std::vector<CartanDatum> types{CartanDatum({{2, 0}, {0, 2}}, {1, 1}, "A1xA1"), CartanDatum::of_type("A2"),
                                 CartanDatum::of_type("B2"), CartanDatum::of_type("G2")};
  for (auto& cd : types) {
    Context ctx(cd);
    std::mt19937 rng(23);
    std::vector<UqElement> samples = generators(2);
    const int maxlen = cd.name() == "G2" ? 3 : 4;
    for (int k = 0; k < 30; ++k) samples.push_back(random_monomial(rng, 2, maxlen));
    for (const auto& x : samples)
      for (int i = 0; i < 2; ++i) {
        CHECK(uq_equal(ctx, braid(ctx, i, 1, braid(ctx, i, -1, x)), x));
        CHECK(uq_equal(ctx, braid(ctx, i, -1, braid(ctx, i, 1, x)), x));
      }
  }
}

TEST_CASE("braid relations in rank two") {
  for (auto [t, m] : {std::pair{"A2", 3}, std::pair{"B2", 4}, std::pair{"G2", 6}}) {
    Context ctx(CartanDatum::of_type(t));
    Word a, b;
    for (int k = 0; k < m; ++k) {
      a.push_back(k % 2);
      b.push_back((k + 1) % 2);
    }
    for (const auto& x : generators(2)) {
      CHECK(uq_equal(ctx, braid_word(ctx, a, 1, x), braid_word(ctx, b, 1, x)));
      CHECK(uq_equal(ctx, braid_word(ctx, a, -1, x), braid_word(ctx, b, -1, x)));
    }
  }
}

TEST_CASE("T_i o S o vee = S o vee o T_i^{-1}") {
  for (const char* t : {"A2", "B2", "G2", "A3"}) {
    Context ctx(CartanDatum::of_type(t));
    for (const auto& x : generators(ctx.rank()))
      for (int i = 0; i < ctx.rank(); ++i) CHECK(uq_equal(ctx, braid(ctx, i, 1, SV(ctx, x)), SV(ctx, braid(ctx, i, -1, x))));
  }
}

TEST_CASE("antipode on homogeneous e-words") {
  for (const char* t : {"A2", "B2"}) {
    Context ctx(CartanDatum::of_type(t));
    const CartanDatum& cd = ctx.cartan();
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> letter(0, 1);
    for (int k = 0; k < 20; ++k) {
      Word e;
      for (int l = 0; l < 1 + k % 4; ++l) e.push_back(letter(rng));
      const UqElement x = M(2, {}, {}, e);
      const RootVec beta = word_weight(cd, e);
      const int expo = cd.form(beta, beta) / 2 - (beta[0] * cd.d(0) + beta[1] * cd.d(1));
      const RatFunc c = q(expo) * RatFunc(beta.height() % 2 ? -1 : 1);
      CHECK(antipode(ctx, x) == multiply(ctx, involution(ctx, Involution::star, x), UqElement::t(beta)).scaled(c));
    }
  }
}
