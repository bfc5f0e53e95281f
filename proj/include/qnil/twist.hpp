#pragma once

// The twist Theta_w = T_w o S o vee and checks of its action on root vectors,
// dual PBW and dual canonical bases.

#include <optional>

#include "qnil/dcb.hpp"

namespace qnil {

/// Theta_w(x) for w given by a word.
UqElement theta(const Context& ctx, const Word& w, const UqElement& x);
UqElement theta(const Context& ctx, const Word& w, const FElement& x);
/// The U_q^- element equal to x modulo the Serre relations, if there is one.
std::optional<FElement> minus_part(const Context& ctx, const UqElement& x);
/// Exact equality in U_q of x and an element of U_q^-.
bool equal_to_minus(const Context& ctx, const UqElement& x, const FElement& y);

struct TwistEntry {
  Composition c;
  std::optional<DualVector> lhs;  // empty when the image leaves U_q^-
  DualVector rhs;
  bool equal = false;
  bool sigma_commutes = true;
};

struct TwistReport {
  Word word;
  RootVec degree;
  std::vector<TwistEntry> entries;
  bool passed() const;
};

/// Theta_{w^{-1}}(F_{beta_k}) = T_{il}...T_{i(k+1)}(f_{ik}) for every k.
std::vector<bool> verify_rootvector_images(const Context& ctx, const Word& i);
/// Theta_{w^{-1}}(F^up(c, i)) = F^up(c^rev, i^rev).
bool verify_pbw_reversal(const Context& ctx, const Word& i, const Composition& c);
/// Theta_{w^{-1}}(G^up(b(c, i))) = G^up(b(c^rev, i^rev)) on the nu slice, with sigma-commutation.
TwistReport verify_dcb_twist(const Context& ctx, const Word& i, const RootVec& nu);
/// Degree -w^{-1}(nu) of the image slice in the reversed chart.
RootVec reversed_degree(const CartanDatum& cd, const Word& i, const RootVec& nu);

struct CoeffEntry {
  Composition c, c2;
  LaurentPoly coeff;           // [F^up(c, i) : G^up(b(c2, i))]
  LaurentPoly reversed_coeff;  // [F^up(c^rev, i^rev) : G^up(b(c2^rev, i^rev))]
  bool ok = true;
};

struct CoeffTable {
  Word word;
  RootVec degree;
  std::vector<CoeffEntry> entries;  // nonzero entries of either side
  bool passed() const;
};

CoeffTable reverse_coeff_table(const Context& ctx, const Word& i, const RootVec& nu);

struct CofiniteReport {
  RootVec beta;
  RatFunc scalar;
  std::optional<Composition> match;  // label in the w0-chart slice of degree beta
  bool passed() const { return match.has_value(); }
};

/// Thrown when x is not in T_w(U_q^-).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// x homogeneous (or a scalar); needs a datum of finite type for the comparison slice.
CofiniteReport cofinite_twist_check(const Context& ctx, const Word& w, const FElement& x);
bool in_cofinite(const Context& ctx, const Word& w, const FElement& x);

}  // namespace qnil
