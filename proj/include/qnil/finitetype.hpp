#pragma once

// Longest element, the diagram automorphism theta, and theta o * versus Theta_{w0}.

#include <vector>

#include "qnil/dcb.hpp"

namespace qnil {

/// Greedy reduced word of w0; throws std::invalid_argument when the datum is not of finite type.
Word longest_word(const CartanDatum& cd);
/// theta with -w0(alpha_i) = alpha_{theta(i)}.
std::vector<int> dynkin_theta(const CartanDatum& cd);
UqElement theta_auto(const Context& ctx, const UqElement& x);
FElement theta_auto(const std::vector<int>& perm, const FElement& x);

struct ThetaStarReport {
  RootVec degree;
  Word word;
  std::size_t monomials_checked = 0;
  std::vector<Word> monomial_failures;
  std::vector<Composition> label_failures;       // (theta o *)(G^up(c)) != G^up(c^rev)
  std::vector<std::pair<Composition, Composition>> coeff_failures;  // (G^low : F^low) table
  bool passed() const { return monomial_failures.empty() && label_failures.empty() && coeff_failures.empty(); }
};

/// i must be a reduced word of w0.
ThetaStarReport verify_theta_star(const Context& ctx, const RootVec& nu, const Word& i);

}  // namespace qnil
