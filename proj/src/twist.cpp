#include "qnil/twist.hpp"

#include "qnil/finitetype.hpp"

namespace qnil {

UqElement theta(const Context& ctx, const Word& w, const UqElement& x) {
  return braid_word_by_generators(ctx, w, +1, antipode(ctx, involution(ctx, Involution::vee, x)));
}

UqElement theta(const Context& ctx, const Word& w, const FElement& x) { return theta(ctx, w, x.to_uq(ctx.rank())); }

std::optional<FElement> minus_part(const Context& ctx, const UqElement& x) {
  FElement pure;
  UqElement rest;
  for (const auto& [m, c] : x.terms()) {
    if (m.e.empty() && m.k.is_zero())
      pure.add(m.f, c);
    else
      rest.add(m, c);
  }
  if (!rest.is_zero() && !uq_is_zero(ctx, rest)) return std::nullopt;
  return pure;
}

bool equal_to_minus(const Context& ctx, const UqElement& x, const FElement& y) {
  const auto m = minus_part(ctx, x);
  return m && equals(ctx, *m, y);
}

bool TwistReport::passed() const {
  for (const auto& e : entries)
    if (!e.equal || !e.sigma_commutes) return false;
  return true;
}

bool CoeffTable::passed() const {
  for (const auto& e : entries)
    if (!e.ok) return false;
  return true;
}

std::vector<bool> verify_rootvector_images(const Context& ctx, const Word& i) {
  const PBWChart chart = build_chart(ctx, i);
  const Word rev = inverse_word(i);
  const int n = ctx.rank();
  std::vector<bool> out;
  for (std::size_t k = 0; k < i.size(); ++k) {
    const UqElement lhs = theta(ctx, rev, chart.rootvecs[k]);
    const Word tail(i.rbegin(), i.rend() - static_cast<long>(k) - 1);
    const auto rhs = braid_generator(ctx, tail, +1, UqMonomial{{i[k]}, RootVec::zero(n), {}});
    const auto r = minus_part(ctx, *rhs);
    out.push_back(r && equal_to_minus(ctx, lhs, *r));
  }
  return out;
}

bool verify_pbw_reversal(const Context& ctx, const Word& i, const Composition& c) {
  const PBWChart chart = build_chart(ctx, i);
  const PBWChart rchart = build_chart(ctx, inverse_word(i));
  return equal_to_minus(ctx, theta(ctx, rchart.word, f_up(ctx, chart, c)), f_up(ctx, rchart, reversed(c)));
}

RootVec reversed_degree(const CartanDatum& cd, const Word& i, const RootVec& nu) { return -weyl_act(cd, inverse_word(i), nu); }

TwistReport verify_dcb_twist(const Context& ctx, const Word& i, const RootVec& nu) {
  const PBWChart chart = build_chart(ctx, i);
  const PBWChart rchart = build_chart(ctx, inverse_word(i));
  const RootVec nu2 = reversed_degree(ctx.cartan(), i, nu);
  const DCBSlice s = dcb_slice(ctx, chart, nu);
  const DCBSlice r = dcb_slice(ctx, rchart, nu2);
  TwistReport rep;
  rep.word = i;
  rep.degree = nu;
  for (std::size_t a = 0; a < s.labels.size(); ++a) {
    TwistEntry e;
    e.c = s.labels[a];
    const FElement& target = r.elements[r.index(reversed(e.c))];
    e.rhs = dual_vector(ctx, target, nu2);
    const auto img = minus_part(ctx, theta(ctx, rchart.word, s.elements[a]));
    if (img) {
      e.lhs = dual_vector(ctx, *img, nu2);
      e.equal = *e.lhs == e.rhs;
      const auto img2 = minus_part(ctx, theta(ctx, rchart.word, sigma(ctx, s.elements[a])));
      e.sigma_commutes = img2 && equals(ctx, *img2, sigma(ctx, *img));
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

CoeffTable reverse_coeff_table(const Context& ctx, const Word& i, const RootVec& nu) {
  const PBWChart chart = build_chart(ctx, i);
  const PBWChart rchart = build_chart(ctx, inverse_word(i));
  const DCBSlice s = dcb_slice(ctx, chart, nu);
  const DCBSlice r = dcb_slice(ctx, rchart, reversed_degree(ctx.cartan(), i, nu));
  const LaurentMatrix inv = unitriangular_inverse(s.pmatrix);
  const LaurentMatrix rinv = unitriangular_inverse(r.pmatrix);
  CoeffTable t;
  t.word = i;
  t.degree = nu;
  for (std::size_t a = 0; a < s.labels.size(); ++a)
    for (std::size_t b = 0; b < s.labels.size(); ++b) {
      CoeffEntry e;
      e.c = s.labels[a];
      e.c2 = s.labels[b];
      e.coeff = inv[a][b];
      e.reversed_coeff = rinv[r.index(reversed(e.c))][r.index(reversed(e.c2))];
      if (e.coeff.is_zero() && e.reversed_coeff.is_zero()) continue;
      e.ok = e.coeff == e.reversed_coeff && (a == b || (lex_less(e.c2, e.c) && rlex_less(e.c2, e.c)));
      t.entries.push_back(std::move(e));
    }
  return t;
}

bool in_cofinite(const Context& ctx, const Word& w, const FElement& x) {
  return minus_part(ctx, braid_word(ctx, w, -1, x.to_uq(ctx.rank()))).has_value();
}

CofiniteReport cofinite_twist_check(const Context& ctx, const Word& w, const FElement& x) {
  const CartanDatum& cd = ctx.cartan();
  const int n = cd.rank();
  if (!in_cofinite(ctx, w, x)) throw PreconditionError("element is not in T_w(U_q^-)");
  const RootVec nu = x.is_zero() || x.terms().begin()->first.empty() ? RootVec::zero(n) : x.degree(n);
  CofiniteReport rep;
  rep.beta = weyl_act(cd, inverse_word(w), nu);
  int expo = cd.form(rep.beta, rep.beta) / 2;
  for (int j = 0; j < n; ++j) expo -= rep.beta.m[static_cast<std::size_t>(j)] * cd.d(j);
  rep.scalar = RatFunc::q_power(expo) * RatFunc(rep.beta.height() % 2 ? -1 : 1);
  if (!rep.beta.is_nonnegative()) return rep;

  const UqElement y = theta(ctx, inverse_word(w), x);
  const UqElement zvee = multiply(ctx, y, UqElement::t(-rep.beta)).scaled(rep.scalar.inverse());
  const auto z = minus_part(ctx, involution(ctx, Involution::vee, zvee));
  if (!z) return rep;
  const PBWChart chart = build_chart(ctx, longest_word(cd));
  const DCBSlice s = dcb_slice(ctx, chart, rep.beta);
  for (std::size_t a = 0; a < s.labels.size(); ++a)
    if (equals(ctx, *z, s.elements[a])) {
      rep.match = s.labels[a];
      break;
    }
  return rep;
}

}  // namespace qnil
