#include <doctest.h>

#include <map>
#include <queue>
#include <random>
#include <set>

#include "qnil/rootdata.hpp"

using namespace qnil;

namespace {

// Length oracle for finite types: BFS distance of w.rho in the orbit graph.
int bfs_length(const CartanDatum& cd, const Word& w) {
  const Weight target = weyl_act(cd, w, cd.rho());
  std::map<Weight, int> dist{{cd.rho(), 0}};
  std::queue<Weight> todo;
  todo.push(cd.rho());
  while (!todo.empty()) {
    Weight x = todo.front();
    todo.pop();
    if (x == target) return dist[x];
    for (int i = 0; i < cd.rank(); ++i) {
      Weight y = cd.reflect(i, x);
      if (dist.emplace(y, dist[x] + 1).second) todo.push(y);
    }
  }
  return -1;
}

RootVec rv(std::vector<int> m) { return RootVec(std::move(m)); }

}  // namespace

TEST_CASE("Cartan data") {
  CHECK_THROWS(CartanDatum({{2, 1}, {-1, 2}}, {1, 1}));
  CHECK_THROWS(CartanDatum({{2, -1}, {-2, 2}}, {1, 1}));
  CHECK_THROWS(CartanDatum::of_type("E8"));
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"}) {
    CartanDatum cd = CartanDatum::of_type(t);
    CHECK(cd.corank() == 0);
    for (int i = 0; i < cd.rank(); ++i) {
      CHECK(cd.pairing(cd.rho(), i) == 1);
      CHECK(cd.bilinear(cd.rho(), cd.simple_root(i)) == cd.d(i));
      CHECK(cd.form(cd.rho(), RootVec::simple(cd.rank(), i)) == cd.d(i));
      for (int j = 0; j < cd.rank(); ++j) CHECK(cd.bilinear(cd.simple_root(i), cd.fundamental(j)) == (i == j ? cd.d(i) : 0));
    }
  }
  CartanDatum b2 = CartanDatum::of_type("B2");
  CHECK(b2.a(0, 1) == -1);
  CHECK(b2.a(1, 0) == -2);
  CHECK(b2.d(0) == 2);
}

TEST_CASE("pairings") {
  CartanDatum a2 = CartanDatum::of_type("A2");
  CHECK(a2.bilinear(a2.simple_root(0), a2.simple_root(1)) == -1);
  CHECK(a2.pairing(a2.fundamental(0), 1) == 0);
  CHECK(a2.to_root(a2.simple_root(1)) == RootVec::simple(2, 1));
  CHECK(a2.bilinear(a2.fundamental(0), a2.fundamental(0)) == mpq_class(2, 3));
}

TEST_CASE("affine datum keeps simple roots independent") {
  CartanDatum a11({{2, -2}, {-2, 2}}, {1, 1});
  CHECK(a11.corank() == 1);
  CHECK(a11.simple_root(0) != -a11.simple_root(1));
  CHECK(a11.to_root(a11.simple_root(0) + a11.simple_root(1)) == rv({1, 1}));
  CHECK(is_reduced(a11, {0, 1, 0, 1, 0, 1}));
  CHECK(a11.bilinear(a11.rho(), a11.simple_root(1)) == 1);
  CHECK_THROWS(a11.bilinear(a11.fundamental(0), a11.fundamental(1)));
}

TEST_CASE("Weyl action") {
  CartanDatum a2 = CartanDatum::of_type("A2");
  const Weight w1 = a2.fundamental(0);
  CHECK(weyl_act(a2, {0}, w1) == w1 - a2.simple_root(0));
  CHECK(weyl_act(a2, {0, 1, 0}, w1) == -a2.fundamental(1));
  CHECK(weyl_act(a2, {}, w1) == w1);
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> c(-4, 4);
  for (const char* t : {"A2", "B2", "G2", "A3", "C3"}) {
    CartanDatum cd = CartanDatum::of_type(t);
    for (int k = 0; k < 50; ++k) {
      Weight x{std::vector<long>(static_cast<std::size_t>(cd.rank()))}, y = x;
      for (auto& v : x.coords) v = c(rng);
      for (auto& v : y.coords) v = c(rng);
      for (int i = 0; i < cd.rank(); ++i) {
        CHECK(cd.reflect(i, cd.reflect(i, x)) == x);
        CHECK(cd.bilinear(cd.reflect(i, x), cd.reflect(i, y)) == cd.bilinear(x, y));
      }
    }
  }
}

TEST_CASE("reduced words") {
  CartanDatum a2 = CartanDatum::of_type("A2");
  CHECK(is_reduced(a2, {0, 1, 0}));
  CHECK(!is_reduced(a2, {0, 0}));
  CHECK(reduce_word(a2, {0, 0, 1}) == Word{1});
  CHECK(reduce_word(a2, {0, 1, 0, 1}) .size() == 2);
  CHECK(positive_roots_along(a2, {0, 1, 0}) == std::vector<RootVec>{rv({1, 0}), rv({1, 1}), rv({0, 1})});
  CHECK_THROWS_AS(positive_roots_along(a2, {0, 0}), std::invalid_argument);
  CartanDatum b2 = CartanDatum::of_type("B2");
  auto roots = positive_roots_along(b2, {0, 1, 0, 1});
  CHECK(roots == std::vector<RootVec>{rv({1, 0}), rv({1, 1}), rv({1, 2}), rv({0, 1})});
  CHECK(word_equal(a2, {0, 1, 0}, {1, 0, 1}));
  CHECK(!word_equal(a2, {0}, {1}));
  CHECK(word_equal(a2, {0, 0}, {}));
}

TEST_CASE("lengths agree with the orbit oracle") {
  std::mt19937 rng(5);
  for (const char* t : {"A2", "B2", "G2", "A3", "B3"}) {
    CartanDatum cd = CartanDatum::of_type(t);
    std::uniform_int_distribution<int> letter(0, cd.rank() - 1), len(0, 9);
    for (int k = 0; k < 40; ++k) {
      Word w;
      for (int l = len(rng); l > 0; --l) w.push_back(letter(rng));
      Word r = reduce_word(cd, w);
      CHECK(is_reduced(cd, r));
      CHECK(word_equal(cd, r, w));
      CHECK(static_cast<int>(r.size()) == bfs_length(cd, w));
    }
  }
}

TEST_CASE("weak order") {
  CartanDatum a2 = CartanDatum::of_type("A2");
  const Word w0{0, 1, 0};
  CHECK(weak_order_leq(a2, {}, w0));
  CHECK(weak_order_leq(a2, w0, w0));
  CHECK(weak_order_leq(a2, {1}, w0));
  CHECK(bfs_length(a2, {1, 0, 1, 0}) == 2);
  CHECK(!weak_order_leq(a2, {1}, {0, 1}));
  CHECK(weak_order_leq(a2, {0}, {0, 1}));
}

TEST_CASE("root sets do not depend on the reduced word") {
  for (const char* t : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    CartanDatum cd = CartanDatum::of_type(t);
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> letter(0, cd.rank() - 1);
    for (int k = 0; k < 6; ++k) {
      Word w;
      for (int l = 0; l < 6; ++l) w.push_back(letter(rng));
      w = reduce_word(cd, w);
      auto words = reduced_words(cd, w);
      REQUIRE(!words.empty());
      std::vector<RootVec> ref = positive_roots_along(cd, w);
      std::set<RootVec> refset(ref.begin(), ref.end());
      CHECK(refset.size() == ref.size());
      for (const auto& r : ref) {
        CHECK(r.height() >= 1);
        CHECK(cd.to_root(cd.from_root(r)) == r);
      }
      for (const auto& u : words) {
        CHECK(word_equal(cd, u, w));
        auto rr = positive_roots_along(cd, u);
        CHECK(std::set<RootVec>(rr.begin(), rr.end()) == refset);
      }
    }
  }
  CHECK(reduced_words(CartanDatum::of_type("A2"), {0, 1, 0}) == std::vector<Word>{{0, 1, 0}, {1, 0, 1}});
  CHECK(reduced_words(CartanDatum::of_type("B2"), {0, 1, 0, 1}).size() == 2);
  CHECK(reduced_words(CartanDatum::of_type("A3"), {0, 1, 0, 2, 1, 0}).size() == 16);
}
