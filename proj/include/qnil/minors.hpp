#pragma once

// Extremal vectors, unipotent quantum minors through vacuum expectations,
// the minor twist and the quantum T-system.

#include <vector>

#include "qnil/twist.hpp"

namespace qnil {

struct ExtremalMonomial {
  std::vector<std::pair<int, int>> factors;  // f_{i1}^{(a1)} ... f_{il}^{(al)}
  Weight weight;

  Word letters() const;
  RatFunc divisor(const CartanDatum& cd) const;  // prod [a_k]_{i_k}!
};

/// Exponents <s_{i(k+1)}...s_{il} lambda, h_{ik}>; u must be reduced and lambda dominant.
ExtremalMonomial extremal_monomial(const CartanDatum& cd, const Weight& lambda, const Word& u);
UqElement to_uq(const CartanDatum& cd, const ExtremalMonomial& m);

/// (v_lambda, z.v_lambda)_lambda from the K-only terms of the normal-ordered z.
RatFunc vacuum_expectation(const Context& ctx, const UqElement& z, const Weight& lambda);
/// (v_{-lambda}, z.v_{-lambda})_{-lambda}, through the automorphism vee.
RatFunc lowest_vacuum_expectation(const Context& ctx, const UqElement& z, const Weight& lambda);
/// (v_{u lambda}, f_x v_{w lambda})_lambda by e-actions on f-words in the Verma module.
RatFunc verma_pairing(const Context& ctx, const Weight& lambda, const ExtremalMonomial& top, const Word& x, const ExtremalMonomial& bottom);

enum class MinorSign { highest, lowest };

struct MinorSpec {
  Weight lambda;
  Word u, w;
  MinorSign sign = MinorSign::lowest;
};

/// nu with D in degree -nu; throws std::invalid_argument on a weight-condition or dominance violation.
RootVec minor_degree(const CartanDatum& cd, const MinorSpec& spec);
/// Entry v is (D, f_v)_L; the lowest sign goes through * of the highest minor.
DualVector minor_dual_vector(const Context& ctx, const MinorSpec& spec);
/// (D, f_v)_L from the lowest-weight module directly (lowest sign only).
RatFunc minor_coefficient_direct(const Context& ctx, const MinorSpec& spec, const Word& v);
FElement minor_element(const Context& ctx, const MinorSpec& spec);
PBWCoeffs minor(const Context& ctx, const MinorSpec& spec, const PBWChart& chart);

struct MinorTwistReport {
  MinorSpec left, right;
  PBWCoeffs left_coeffs, right_coeffs;
  bool coords_equal = false;
  bool direct_equal = false;
  bool passed() const { return coords_equal && direct_equal; }
};

/// Theta_{w^{-1}}(D_{-u1 lambda, -u2 lambda}) = D_{-w^{-1}u2 lambda, -w^{-1}u1 lambda}; throws
/// PreconditionError unless u1, u2 <= w in the weak right order.
MinorTwistReport verify_minor_twist(const Context& ctx, const Weight& lambda, const Word& u1, const Word& u2, const Word& w);

struct MinorFactor {
  int x = 0, y = 0, j = 0;  // D(x, y; j), positions 0..l
  int power = 1;
  FElement value;
};

struct TSystemReport {
  Word word;
  int b = 0, d = 0, i = 0;
  std::vector<int> order;
  long A = 0, B = 0, Bp = 0, C = 0;
  std::vector<MinorFactor> lhs, mid1, mid2, prod;
  FElement lhs_value, rhs1_value, rhs2_value;
  bool first_holds = false, second_holds = false;
  bool passed() const { return first_holds && second_holds; }
};

/// b, d are positions 1 <= b < d <= l with equal letters; order lists I increasingly (empty: natural).
TSystemReport verify_tsystem(const Context& ctx, const Word& i, int b, int d, std::vector<int> order = {});

struct TSystemTwistReport {
  TSystemReport original, twisted;
  bool exponents_match = false;
  std::vector<bool> factor_images;
  bool passed() const;
};

TSystemTwistReport verify_tsystem_twist(const Context& ctx, const Word& i, int b, int d, std::vector<int> order = {});

/// D(x, y; j) = D_{-mu(x, j), -mu(y, j)} for the chart word i.
FElement tsystem_minor(const Context& ctx, const Word& i, int x, int y, int j);

}  // namespace qnil
