#pragma once

// Root vectors along a reduced word and the (dual) PBW bases they generate.

#include <memory>
#include <vector>

#include "qnil/uqminus.hpp"

namespace qnil {

using Composition = std::vector<int>;

/// Left lexicographic order (the default order on labels).
bool lex_less(const Composition& a, const Composition& b);
/// Right lexicographic order: a <_r b iff rev(a) < rev(b).
bool rlex_less(const Composition& a, const Composition& b);
Composition reversed(const Composition& c);

struct PBWChart {
  Word word;
  std::vector<RootVec> roots;
  std::vector<FElement> rootvecs;  // F_{beta_k} = T_{i1}...T_{i(k-1)}(f_{ik})
  std::shared_ptr<Memo<Composition, FElement>> low_cache = std::make_shared<Memo<Composition, FElement>>();
  std::shared_ptr<Memo<Composition, FElement>> up_cache = std::make_shared<Memo<Composition, FElement>>();

  int length() const { return static_cast<int>(word.size()); }
};

/// Throws std::invalid_argument for a non-reduced word and std::logic_error
/// if a root vector escapes U_q^-.
PBWChart build_chart(const Context& ctx, const Word& word);

/// Degree sum_k c_k beta_k.
RootVec composition_degree(const PBWChart& chart, const Composition& c);
/// (F^low(c), F^low(c))_L = prod_k prod_{j<=c_k} (1 - q_{ik}^{2j})^{-1}.
RatFunc pbw_norm(const CartanDatum& cd, const PBWChart& chart, const Composition& c);
FElement f_low(const Context& ctx, const PBWChart& chart, const Composition& c);
/// F^low divided by its norm; the closed-form norm is checked against form_L.
FElement f_up(const Context& ctx, const PBWChart& chart, const Composition& c);

/// All c with sum c_k beta_k = nu, in left lexicographic order.
std::vector<Composition> enumerate_compositions(const PBWChart& chart, const RootVec& nu);
/// Every degree nu in Q_+ of height 1..max_height that carries a composition.
std::vector<RootVec> chart_degrees(const PBWChart& chart, int max_height);

struct PBWCoeffs {
  Word word;
  RootVec degree;
  std::vector<std::pair<Composition, RatFunc>> coeffs;  // left-lex order, zeros kept
  DualVector residual;
  bool residual_zero = true;

  RatFunc at(const Composition& c) const;
};

/// coeffs[c] = (x, F^low(c))_L, so that x = sum coeffs[c] F^up(c) iff the residual vanishes.
PBWCoeffs expand_dual_pbw(const Context& ctx, const PBWChart& chart, const FElement& x, const RootVec& nu);
PBWCoeffs expand_dual_pbw(const Context& ctx, const PBWChart& chart, const DualVector& dx);
FElement from_dual_pbw(const Context& ctx, const PBWChart& chart, const PBWCoeffs& coeffs);

}  // namespace qnil
