#include "qnil/dcb.hpp"

#include <sstream>

namespace qnil {

namespace {

std::string label(const Composition& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
  os << ')';
  return os.str();
}

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b) {
  const std::size_t n = a.size();
  LaurentMatrix c(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

LaurentMatrix bar(const LaurentMatrix& a) {
  LaurentMatrix b = a;
  for (auto& row : b)
    for (auto& x : row) x = x.bar();
  return b;
}

bool is_identity(const LaurentMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!(a[i][j] == LaurentPoly(i == j ? 1 : 0))) return false;
  return true;
}

}  // namespace

LaurentMatrix sigma_matrix(const Context& ctx, const PBWChart& chart, const RootVec& nu) {
  const auto labels = enumerate_compositions(chart, nu);
  if (labels.empty()) throw std::invalid_argument("empty weight slice");
  const std::size_t n = labels.size();
  LaurentMatrix r(n, std::vector<LaurentPoly>(n));
  for (std::size_t a = 0; a < n; ++a) {
    const PBWCoeffs e = expand_dual_pbw(ctx, chart, sigma(ctx, f_up(ctx, chart, labels[a])), nu);
    if (!e.residual_zero) throw SliceError("sigma leaves U_q^-(w) at " + label(labels[a]));
    for (std::size_t b = 0; b < n; ++b) {
      auto lp = e.coeffs[b].second.to_laurent();
      if (!lp) throw SliceError("non-Laurent sigma coefficient at " + label(labels[a]) + " x " + label(labels[b]));
      if (b > a && !lp->is_zero()) throw SliceError("sigma matrix not lower triangular at " + label(labels[a]));
      r[a][b] = std::move(*lp);
    }
    if (!(r[a][a] == LaurentPoly(1))) throw SliceError("sigma matrix diagonal differs from 1 at " + label(labels[a]));
  }
  if (!is_identity(multiply(r, bar(r)))) throw SliceError("sigma matrix is not an involution");
  return r;
}

LaurentMatrix triangular_solve(const LaurentMatrix& r) {
  const std::size_t n = r.size();
  LaurentMatrix p(n, std::vector<LaurentPoly>(n));
  for (std::size_t a = 0; a < n; ++a) {
    p[a][a] = 1;
    for (std::size_t b = a; b-- > 0;) {
      LaurentPoly alpha;
      for (std::size_t k = b + 1; k <= a; ++k)
        if (!p[a][k].is_zero() && !r[k][b].is_zero()) alpha += p[a][k].bar() * r[k][b];
      if (!(alpha.bar() == -alpha) || alpha.coeff(0) != 0) throw SliceError("triangular solve: right side is not bar-antisymmetric");
      p[a][b] = alpha.positive_part();
      if (!p[a][b].is_integral()) throw SliceError("triangular solve: non-integral entry");
    }
  }
  return p;
}

LaurentMatrix unitriangular_inverse(const LaurentMatrix& p) {
  const std::size_t n = p.size();
  LaurentMatrix m(n, std::vector<LaurentPoly>(n));
  for (std::size_t a = 0; a < n; ++a) {
    m[a][a] = 1;
    for (std::size_t b = 0; b < a; ++b) {
      LaurentPoly s;
      for (std::size_t k = b; k < a; ++k)
        if (!p[a][k].is_zero() && !m[k][b].is_zero()) s += p[a][k] * m[k][b];
      m[a][b] = -s;
    }
  }
  return m;
}

LaurentMatrix transpose(const LaurentMatrix& m) {
  LaurentMatrix t(m.size(), std::vector<LaurentPoly>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t[j][i] = m[i][j];
  return t;
}

std::size_t DCBSlice::index(const Composition& c) const {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == c) return k;
  throw std::out_of_range("label " + label(c) + " is not in the slice");
}

DCBSlice dcb_slice(const Context& ctx, const PBWChart& chart, const RootVec& nu) {
  DCBSlice s;
  s.word = chart.word;
  s.degree = nu;
  s.labels = enumerate_compositions(chart, nu);
  s.pmatrix = triangular_solve(sigma_matrix(ctx, chart, nu));
  for (std::size_t a = 0; a < s.labels.size(); ++a) {
    FElement g;
    for (std::size_t b = 0; b <= a; ++b)
      if (!s.pmatrix[a][b].is_zero()) g = g + f_up(ctx, chart, s.labels[b]).scaled(RatFunc(s.pmatrix[a][b]));
    if (!equals(ctx, sigma(ctx, g), g)) throw SliceError("dual canonical element is not sigma-invariant at " + label(s.labels[a]));
    s.elements.push_back(std::move(g));
  }
  return s;
}

std::vector<FElement> canonical_low_slice(const Context& ctx, const PBWChart& chart, const DCBSlice& slice) {
  const LaurentMatrix m = transpose(unitriangular_inverse(slice.pmatrix));
  const std::size_t n = slice.labels.size();
  std::vector<FElement> out;
  for (std::size_t a = 0; a < n; ++a) {
    FElement g;
    for (std::size_t b = 0; b < n; ++b)
      if (!m[a][b].is_zero()) g = g + f_low(ctx, chart, slice.labels[b]).scaled(RatFunc(m[a][b]));
    out.push_back(std::move(g));
  }
  for (std::size_t a = 0; a < n; ++a) {
    const DualVector dv = dual_vector(ctx, out[a], slice.degree);
    for (std::size_t b = 0; b < n; ++b)
      if (!(pair(dv, slice.elements[b]) == RatFunc(a == b ? 1 : 0)))
        throw SliceError("lower and dual canonical elements are not dual at " + label(slice.labels[a]));
  }
  return out;
}

}  // namespace qnil
