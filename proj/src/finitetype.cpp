#include "qnil/finitetype.hpp"

#include "qnil/twist.hpp"

namespace qnil {

Word longest_word(const CartanDatum& cd) {
  const int n = cd.rank();
  const int cap = 64 * n;
  Word w;
  for (;;) {
    bool grown = false;
    for (int i = 0; i < n && !grown; ++i)
      if (weyl_act(cd, w, RootVec::simple(n, i)).is_nonnegative()) {
        w.push_back(i);
        grown = true;
      }
    if (!grown) return w;
    if (static_cast<int>(w.size()) > cap) throw std::invalid_argument("Cartan datum is not of finite type");
  }
}

std::vector<int> dynkin_theta(const CartanDatum& cd) {
  const int n = cd.rank();
  const Word w0 = longest_word(cd);
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const RootVec v = -weyl_act(cd, w0, RootVec::simple(n, i));
    for (int j = 0; j < n; ++j)
      if (v == RootVec::simple(n, j)) perm[static_cast<std::size_t>(i)] = j;
    if (perm[static_cast<std::size_t>(i)] < 0) throw std::logic_error("-w0 does not permute the simple roots");
  }
  return perm;
}

namespace {

Word relabel(const std::vector<int>& perm, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int a : w) out.push_back(perm[static_cast<std::size_t>(a)]);
  return out;
}

}  // namespace

UqElement theta_auto(const Context& ctx, const UqElement& x) {
  const auto perm = dynkin_theta(ctx.cartan());
  UqElement out;
  for (const auto& [m, c] : x.terms()) {
    RootVec k = RootVec::zero(ctx.rank());
    for (std::size_t j = 0; j < perm.size(); ++j) k.m[static_cast<std::size_t>(perm[j])] = m.k.m[j];
    out.add(UqMonomial{relabel(perm, m.f), k, relabel(perm, m.e)}, c);
  }
  return out;
}

FElement theta_auto(const std::vector<int>& perm, const FElement& x) {
  FElement out;
  for (const auto& [w, c] : x.terms()) out.add(relabel(perm, w), c);
  return out;
}

ThetaStarReport verify_theta_star(const Context& ctx, const RootVec& nu, const Word& i) {
  const CartanDatum& cd = ctx.cartan();
  if (length(cd, i) != static_cast<int>(longest_word(cd).size()) || static_cast<int>(i.size()) != length(cd, i))
    throw std::invalid_argument("word is not a reduced word of w0");
  const auto perm = dynkin_theta(cd);
  ThetaStarReport rep;
  rep.degree = nu;
  rep.word = i;
  for (const Word& v : *words_of_degree(ctx, nu)) {
    ++rep.monomials_checked;
    const FElement lhs = theta_auto(perm, FElement::word(v).star());
    if (!equal_to_minus(ctx, theta(ctx, i, FElement::word(v)), lhs)) rep.monomial_failures.push_back(v);
  }

  const PBWChart chart = build_chart(ctx, i);
  const PBWChart rchart = build_chart(ctx, inverse_word(i));
  const DCBSlice s = dcb_slice(ctx, chart, nu);
  const DCBSlice r = dcb_slice(ctx, rchart, reversed_degree(cd, i, nu));
  for (std::size_t a = 0; a < s.labels.size(); ++a)
    if (!equals(ctx, theta_auto(perm, s.elements[a].star()), r.elements[r.index(reversed(s.labels[a]))]))
      rep.label_failures.push_back(s.labels[a]);

  const LaurentMatrix m = transpose(unitriangular_inverse(s.pmatrix));
  const LaurentMatrix rm = transpose(unitriangular_inverse(r.pmatrix));
  for (std::size_t a = 0; a < s.labels.size(); ++a)
    for (std::size_t b = 0; b < s.labels.size(); ++b) {
      const Composition& c = s.labels[a];
      const Composition& c2 = s.labels[b];
      const LaurentPoly& x = m[a][b];
      const bool support = a == b || x.is_zero() || (lex_less(c, c2) && rlex_less(c, c2));
      if (!support || !(x == rm[r.index(reversed(c))][r.index(reversed(c2))])) rep.coeff_failures.emplace_back(c, c2);
    }
  return rep;
}

}  // namespace qnil
