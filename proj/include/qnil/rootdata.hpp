#pragma once

// Symmetrizable Cartan data, the weight lattice, and Weyl group words.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qnil {

/// Sequence of simple-reflection (or generator) indices, 0-based internally.
using Word = std::vector<int>;

/// Element of the root lattice Q in the basis of simple roots.
struct RootVec {
  std::vector<int> m;

  RootVec() = default;
  explicit RootVec(std::vector<int> coords) : m(std::move(coords)) {}
  static RootVec zero(int rank) { return RootVec(std::vector<int>(static_cast<std::size_t>(rank), 0)); }
  static RootVec simple(int rank, int i);

  int rank() const { return static_cast<int>(m.size()); }
  int operator[](int i) const { return m[static_cast<std::size_t>(i)]; }
  int height() const;
  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_nonpositive() const;

  RootVec operator+(const RootVec& o) const;
  RootVec operator-(const RootVec& o) const;
  RootVec operator-() const;
  RootVec operator*(int k) const;

  auto operator<=>(const RootVec&) const = default;
  bool operator==(const RootVec&) const = default;
};

/// Element of P in fundamental-weight coordinates, followed by corank-many
/// auxiliary coordinates for singular GCMs.
struct Weight {
  std::vector<long> coords;

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
};

class CartanDatum {
 public:
  /// Validates the GCM conditions and d_i a_ij = d_j a_ji.
  CartanDatum(std::vector<std::vector<int>> gcm, std::vector<int> sym, std::string name = "");
  /// Built-in finite types: A1-A4, B2-B4, C2-C4, D4, F4, G2.
  static CartanDatum of_type(std::string_view type);

  const std::string& name() const { return name_; }
  int rank() const { return n_; }
  int corank() const { return corank_; }
  int a(int i, int j) const { return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  int d(int i) const { return d_[static_cast<std::size_t>(i)]; }
  const std::vector<std::vector<int>>& gcm() const { return a_; }
  const std::vector<int>& sym() const { return d_; }
  /// (alpha_i, alpha_j) = d_i a_ij.
  int root_form(int i, int j) const { return d(i) * a(i, j); }

  // root lattice
  int form(const RootVec& x, const RootVec& y) const;
  /// <x, h_i> for x in Q.
  int pairing(const RootVec& x, int i) const;
  RootVec reflect(int i, const RootVec& x) const;

  // weight lattice
  Weight fundamental(int i) const;
  Weight rho() const;
  Weight simple_root(int j) const;
  Weight from_root(const RootVec& x) const;
  /// Inverse of from_root; nullopt when the weight is not in Q.
  std::optional<RootVec> to_root(const Weight& w) const;
  int pairing(const Weight& w, int i) const;
  /// (lambda, beta) for beta in Q; always an integer.
  long form(const Weight& w, const RootVec& beta) const;
  /// (lambda, mu) when at least one argument lies in Q tensor Q.
  mpq_class bilinear(const Weight& x, const Weight& y) const;
  Weight reflect(int i, const Weight& w) const;
  bool is_dominant(const Weight& w) const;

  void check_index(int i) const;
  void check_word(const Word& w) const;

 private:
  std::optional<std::vector<mpq_class>> rational_root_coords(const Weight& w) const;

  int n_ = 0;
  int corank_ = 0;
  std::vector<std::vector<int>> a_;
  std::vector<int> d_;
  // auxiliary coordinates of alpha_j (corank rows), chosen so the simple roots stay independent
  std::vector<std::vector<int>> aux_;
  std::string name_;
};

/// Left-to-right composition: (i1,...,il) acts as s_{i1} o ... o s_{il}.
Weight weyl_act(const CartanDatum& cd, const Word& w, const Weight& x);
RootVec weyl_act(const CartanDatum& cd, const Word& w, const RootVec& x);

/// beta_k = s_{i1}...s_{i(k-1)} alpha_{ik}, without a reducedness check.
std::vector<RootVec> root_sequence(const CartanDatum& cd, const Word& w);
bool is_reduced(const CartanDatum& cd, const Word& w);
Word reduce_word(const CartanDatum& cd, const Word& w);
int length(const CartanDatum& cd, const Word& w);
/// Throws std::invalid_argument for a non-reduced word.
std::vector<RootVec> positive_roots_along(const CartanDatum& cd, const Word& w);
/// u <= w in the weak right order: l(w) = l(u) + l(u^{-1} w).
bool weak_order_leq(const CartanDatum& cd, const Word& u, const Word& w);
bool word_equal(const CartanDatum& cd, const Word& u, const Word& w);
Word inverse_word(const Word& w);
/// One reduced word per element of length <= max_length, shortest first.
std::vector<Word> weyl_elements(const CartanDatum& cd, int max_length);
/// All reduced words of the element represented by w (brute force; small lengths only).
std::vector<Word> reduced_words(const CartanDatum& cd, const Word& w);

}  // namespace qnil
