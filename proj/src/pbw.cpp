#include "qnil/pbw.hpp"

#include <algorithm>
#include <set>

namespace qnil {

bool lex_less(const Composition& a, const Composition& b) { return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()); }

bool rlex_less(const Composition& a, const Composition& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

Composition reversed(const Composition& c) { return Composition(c.rbegin(), c.rend()); }

PBWChart build_chart(const Context& ctx, const Word& word) {
  const CartanDatum& cd = ctx.cartan();
  PBWChart chart;
  chart.word = word;
  chart.roots = positive_roots_along(cd, word);
  const int n = cd.rank();
  for (std::size_t k = 0; k < word.size(); ++k) {
    const Word prefix(word.begin(), word.begin() + static_cast<long>(k));
    auto img = braid_generator(ctx, prefix, +1, UqMonomial{{word[k]}, RootVec::zero(n), {}});
    FElement rv = FElement::from_uq(*img);
    if (rv.degree(n) != chart.roots[k]) throw std::logic_error("root vector has the wrong degree");
    chart.rootvecs.push_back(std::move(rv));
  }
  return chart;
}

RootVec composition_degree(const PBWChart& chart, const Composition& c) {
  if (c.size() != chart.word.size()) throw std::invalid_argument("composition length differs from the chart length");
  RootVec nu = RootVec::zero(chart.roots.empty() ? 0 : chart.roots.front().rank());
  for (std::size_t k = 0; k < c.size(); ++k) nu = nu + chart.roots[k] * c[k];
  return nu;
}

namespace {

ZPoly inverse_norm(const CartanDatum& cd, const PBWChart& chart, const Composition& c) {
  ZPoly r = ZPoly::constant(1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const int d = cd.d(chart.word[k]);
    for (int j = 1; j <= c[k]; ++j) r = r * (ZPoly::constant(1) - ZPoly::monomial(2 * d * j));
  }
  return r;
}

}  // namespace

RatFunc pbw_norm(const CartanDatum& cd, const PBWChart& chart, const Composition& c) {
  return RatFunc::from_parts(ZPoly::constant(1), inverse_norm(cd, chart, c));
}

FElement f_low(const Context& ctx, const PBWChart& chart, const Composition& c) {
  if (c.size() != chart.word.size()) throw std::invalid_argument("composition length differs from the chart length");
  if (auto hit = chart.low_cache->find(c)) return *hit;
  FElement x = FElement::one();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const RatFunc div = RatFunc(qfactorial(c[k], ctx.cartan().d(chart.word[k]))).inverse();
    x = x * chart.rootvecs[k].power(c[k]).scaled(div);
  }
  return *chart.low_cache->publish(c, std::move(x));
}

FElement f_up(const Context& ctx, const PBWChart& chart, const Composition& c) {
  if (auto hit = chart.up_cache->find(c)) return *hit;
  const FElement low = f_low(ctx, chart, c);
  const RatFunc norm = pbw_norm(ctx.cartan(), chart, c);
  if (!(form_L(ctx, low, low) == norm)) throw std::logic_error("PBW norm mismatch for a composition of the chart");
  FElement up = low.scaled(RatFunc::from_parts(inverse_norm(ctx.cartan(), chart, c), ZPoly::constant(1)));
  return *chart.up_cache->publish(c, std::move(up));
}

namespace {

void compositions(const PBWChart& chart, std::size_t k, const RootVec& rest, Composition& cur, std::vector<Composition>& out) {
  if (k == chart.word.size()) {
    if (rest.is_zero()) out.push_back(cur);
    return;
  }
  RootVec r = rest;
  for (int ck = 0; r.is_nonnegative(); ++ck) {
    cur[k] = ck;
    compositions(chart, k + 1, r, cur, out);
    r = r - chart.roots[k];
  }
  cur[k] = 0;
}

}  // namespace

std::vector<Composition> enumerate_compositions(const PBWChart& chart, const RootVec& nu) {
  std::vector<Composition> out;
  if (!nu.is_nonnegative()) return out;
  Composition cur(chart.word.size(), 0);
  compositions(chart, 0, nu, cur, out);
  return out;
}

std::vector<RootVec> chart_degrees(const PBWChart& chart, int max_height) {
  std::set<RootVec> seen;
  if (chart.roots.empty()) return {};
  const int n = chart.roots.front().rank();
  std::vector<RootVec> frontier{RootVec::zero(n)};
  for (int h = 0; h < max_height && !frontier.empty(); ++h) {
    std::vector<RootVec> next;
    for (const auto& nu : frontier)
      for (const auto& b : chart.roots) {
        RootVec m = nu + b;
        if (m.height() <= max_height && seen.insert(m).second) next.push_back(m);
      }
    frontier = std::move(next);
  }
  return std::vector<RootVec>(seen.begin(), seen.end());
}

RatFunc PBWCoeffs::at(const Composition& c) const {
  for (const auto& [cc, v] : coeffs)
    if (cc == c) return v;
  return RatFunc();
}

PBWCoeffs expand_dual_pbw(const Context& ctx, const PBWChart& chart, const DualVector& dx) {
  PBWCoeffs out;
  out.word = chart.word;
  out.degree = dx.degree;
  FElement sum;
  for (const auto& c : enumerate_compositions(chart, dx.degree)) {
    RatFunc v = pair(dx, f_low(ctx, chart, c));
    if (!v.is_zero()) sum = sum + f_up(ctx, chart, c).scaled(v);
    out.coeffs.emplace_back(c, std::move(v));
  }
  DualVector ds = dual_vector(ctx, sum, dx.degree);
  out.residual = dx;
  const LaurentPoly da = LaurentPoly::from_zpoly(dx.vals.den);
  const LaurentPoly db = LaurentPoly::from_zpoly(ds.vals.den);
  out.residual.vals.den = dx.vals.den * ds.vals.den;
  for (std::size_t k = 0; k < dx.vals.num.size(); ++k) out.residual.vals.num[k] = dx.vals.num[k] * db - ds.vals.num[k] * da;
  out.residual_zero = out.residual.is_zero();
  return out;
}

PBWCoeffs expand_dual_pbw(const Context& ctx, const PBWChart& chart, const FElement& x, const RootVec& nu) {
  return expand_dual_pbw(ctx, chart, dual_vector(ctx, x, nu));
}

FElement from_dual_pbw(const Context& ctx, const PBWChart& chart, const PBWCoeffs& coeffs) {
  FElement sum;
  for (const auto& [c, v] : coeffs.coeffs)
    if (!v.is_zero()) sum = sum + f_up(ctx, chart, c).scaled(v);
  return sum;
}

}  // namespace qnil
