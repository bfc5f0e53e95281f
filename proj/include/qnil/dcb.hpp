#pragma once

// Dual canonical basis slices of U_q^-(w) by the sigma-triangular solve, and
// the lower canonical basis as their dual.

#include <vector>

#include "qnil/pbw.hpp"

namespace qnil {

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// Thrown when a structural assertion on a slice fails.
struct SliceError : std::logic_error {
  using std::logic_error::logic_error;
};

/// R[a][b] = coefficient of F^up(labels[b]) in sigma(F^up(labels[a])).
/// Asserts Laurent entries, unitriangularity and R bar(R) = 1.
LaurentMatrix sigma_matrix(const Context& ctx, const PBWChart& chart, const RootVec& nu);
/// The unitriangular P with off-diagonal entries in qZ[q] and bar(P) R = P.
LaurentMatrix triangular_solve(const LaurentMatrix& r);
/// Inverse of a lower unitriangular matrix.
LaurentMatrix unitriangular_inverse(const LaurentMatrix& p);
LaurentMatrix transpose(const LaurentMatrix& m);

struct DCBSlice {
  Word word;
  RootVec degree;
  std::vector<Composition> labels;  // left-lex order
  LaurentMatrix pmatrix;            // G^up(labels[a]) = sum_b p[a][b] F^up(labels[b])
  std::vector<FElement> elements;

  std::size_t index(const Composition& c) const;
};

/// Each element is checked sigma-invariant after the solve.
DCBSlice dcb_slice(const Context& ctx, const PBWChart& chart, const RootVec& nu);
/// G^low(labels[a]) = sum_b m[a][b] F^low(labels[b]) with M = (P^{-1})^T; pairing with G^up checked.
std::vector<FElement> canonical_low_slice(const Context& ctx, const PBWChart& chart, const DCBSlice& slice);

}  // namespace qnil
