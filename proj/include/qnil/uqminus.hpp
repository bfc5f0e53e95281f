#pragma once

// U_q^- as combinations of f-words; the q-derivations, the form ( , )_L and
// dual vectors deciding equality modulo the Serre relations.

#include <map>
#include <memory>
#include <vector>

#include "qnil/uqfull.hpp"

namespace qnil {

class FElement {
 public:
  using Terms = std::map<Word, RatFunc>;

  FElement() = default;
  static FElement one() { return word({}); }
  static FElement word(const Word& w, const RatFunc& c = 1);
  /// Throws std::logic_error unless every term has empty e-word and zero K.
  static FElement from_uq(const UqElement& x);
  UqElement to_uq(int rank) const;

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(const Word& w, const RatFunc& c);

  FElement operator+(const FElement& o) const;
  FElement operator-(const FElement& o) const;
  FElement operator-() const;
  FElement operator*(const FElement& o) const;  // concatenation product
  FElement scaled(const RatFunc& c) const;
  /// Conjugates coefficients only.
  FElement bar_coeffs() const;
  /// Reverses every word (the anti-involution *).
  FElement star() const;
  FElement power(int n) const;
  bool operator==(const FElement& o) const { return t_ == o.t_; }

  /// Splits by weight; keys are the positive degrees nu with wt = -nu.
  std::map<RootVec, FElement> components(int rank) const;
  /// Degree nu of a homogeneous nonzero element; throws when inhomogeneous.
  RootVec degree(int rank) const;

 private:
  Terms t_;
};

std::string to_string(const FElement& x);

/// All words of degree nu in lexicographic order, with numerators of their pairings.
struct GramMatrix {
  std::shared_ptr<const std::vector<Word>> words;
  std::vector<std::vector<LaurentPoly>> numer;  // numer[w][v] = pairing_numerator(w, v)
  std::size_t index(const Word& w) const;
};

std::shared_ptr<const GramMatrix> gram(const Context& ctx, const RootVec& nu);
std::shared_ptr<const std::vector<Word>> words_of_degree(const Context& ctx, const RootVec& nu);

enum class Side { left, right };
FElement eprime(const Context& ctx, int i, Side side, const FElement& x);

/// (f_w, f_v)_L = pairing_numerator(w, v) * prod_i (1 - q_i^2)^{-m_i}.
LaurentPoly pairing_numerator(const Context& ctx, const Word& w, const Word& v);
/// prod_i (1 - q_i^2)^{m_i}.
ZPoly norm_denominator(const CartanDatum& cd, const RootVec& nu);

/// Values num[k] / den sharing one denominator.
struct SharedDen {
  ZPoly den;
  std::vector<LaurentPoly> num;
  RatFunc value(std::size_t k) const;
};

/// Entry v is (x, f_v)_L for every word v of the degree.
struct DualVector {
  RootVec degree;
  std::shared_ptr<const std::vector<Word>> words;
  SharedDen vals;

  bool is_zero() const;
  RatFunc entry(std::size_t k) const { return vals.value(k); }
  bool operator==(const DualVector& o) const;
};

DualVector dual_vector(const Context& ctx, const FElement& x, const RootVec& nu);
/// x must be homogeneous (or zero, then nu must be given through the other overload).
DualVector dual_vector(const Context& ctx, const FElement& x);
/// The dual vector with the given entries, one per word of degree nu in lexicographic order.
DualVector dual_from_values(const Context& ctx, const RootVec& nu, const std::vector<RatFunc>& vals);
/// sum_v y_v (x, f_v)_L for y of the same degree.
RatFunc pair(const DualVector& dx, const FElement& y);
RatFunc form_L(const Context& ctx, const FElement& x, const FElement& y);
bool is_zero(const Context& ctx, const FElement& x);
bool equals(const Context& ctx, const FElement& x, const FElement& y);

/// Homogeneous dual bar-involution; applied componentwise to inhomogeneous input.
FElement sigma(const Context& ctx, const FElement& x);
/// Zero test in U_q modulo the Serre relations on both triangular factors,
/// through the nondegenerate form on U^- (tensor) U^+ for each K.
bool uq_is_zero(const Context& ctx, const UqElement& x);
bool uq_equal(const Context& ctx, const UqElement& x, const UqElement& y);

/// A deterministic preimage under dual_vector; throws std::invalid_argument when none exists.
FElement to_word_form(const Context& ctx, const DualVector& v);

}  // namespace qnil
