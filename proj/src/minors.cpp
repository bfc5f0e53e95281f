#include "qnil/minors.hpp"

#include <algorithm>
#include <numeric>

namespace qnil {

Word ExtremalMonomial::letters() const {
  Word w;
  for (const auto& [i, a] : factors) w.insert(w.end(), static_cast<std::size_t>(a), i);
  return w;
}

RatFunc ExtremalMonomial::divisor(const CartanDatum& cd) const {
  LaurentPoly r(1);
  for (const auto& [i, a] : factors) r = r * qfactorial(a, cd.d(i));
  return RatFunc(r);
}

ExtremalMonomial extremal_monomial(const CartanDatum& cd, const Weight& lambda, const Word& u) {
  if (!cd.is_dominant(lambda)) throw std::invalid_argument("weight is not dominant");
  cd.check_word(u);
  if (!is_reduced(cd, u)) throw std::invalid_argument("word is not reduced");
  ExtremalMonomial m;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const Word tail(u.begin() + static_cast<long>(k) + 1, u.end());
    m.factors.emplace_back(u[k], cd.pairing(weyl_act(cd, tail, lambda), u[k]));
  }
  m.weight = weyl_act(cd, u, lambda);
  return m;
}

UqElement to_uq(const CartanDatum& cd, const ExtremalMonomial& m) {
  return UqElement::monomial(UqMonomial{m.letters(), RootVec::zero(cd.rank()), {}}, m.divisor(cd).inverse());
}

RatFunc vacuum_expectation(const Context& ctx, const UqElement& z, const Weight& lambda) {
  RatFunc r;
  for (const auto& [m, c] : z.terms())
    if (m.f.empty() && m.e.empty()) r += c.shifted(static_cast<int>(ctx.cartan().form(lambda, m.k)));
  return r;
}

RatFunc lowest_vacuum_expectation(const Context& ctx, const UqElement& z, const Weight& lambda) {
  return vacuum_expectation(ctx, involution(ctx, Involution::vee, z), lambda);
}

namespace {

using Vec = std::map<Word, LaurentPoly>;

// e_i on f_w v_lambda in the Verma module.
Vec apply_e(const CartanDatum& cd, const Weight& lambda, int i, const Vec& v) {
  Vec out;
  const int top = cd.pairing(lambda, i);
  for (const auto& [w, c] : v) {
    int s = top;
    for (std::size_t p = w.size(); p-- > 0;) {
      if (w[p] == i) {
        Word rest = w;
        rest.erase(rest.begin() + static_cast<long>(p));
        out[rest] += c * qint(s, cd.d(i));
      }
      s -= cd.a(i, w[p]);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

RatFunc verma_pairing(const Context& ctx, const Weight& lambda, const ExtremalMonomial& top, const Word& x, const ExtremalMonomial& bottom) {
  const CartanDatum& cd = ctx.cartan();
  Word start = x;
  const Word low = bottom.letters();
  start.insert(start.end(), low.begin(), low.end());
  if (start.size() != top.letters().size()) return RatFunc();
  Vec v{{start, LaurentPoly(1)}};
  for (const auto& [i, a] : top.factors)
    for (int r = 0; r < a && !v.empty(); ++r) v = apply_e(cd, lambda, i, v);
  auto it = v.find(Word{});
  if (it == v.end()) return RatFunc();
  return RatFunc(it->second) / (top.divisor(cd) * bottom.divisor(cd));
}

RootVec minor_degree(const CartanDatum& cd, const MinorSpec& spec) {
  if (!cd.is_dominant(spec.lambda)) throw std::invalid_argument("weight is not dominant");
  for (const Word* w : {&spec.u, &spec.w}) {
    cd.check_word(*w);
    if (!is_reduced(cd, *w)) throw std::invalid_argument("word is not reduced");
  }
  const Weight ul = weyl_act(cd, spec.u, spec.lambda);
  const Weight wl = weyl_act(cd, spec.w, spec.lambda);
  const auto nu = cd.to_root(spec.sign == MinorSign::highest ? wl - ul : ul - wl);
  if (!nu || !nu->is_nonnegative()) throw std::invalid_argument("minor weight condition fails");
  return *nu;
}

DualVector minor_dual_vector(const Context& ctx, const MinorSpec& spec) {
  const CartanDatum& cd = ctx.cartan();
  const RootVec nu = minor_degree(cd, spec);
  const ExtremalMonomial mu = extremal_monomial(cd, spec.lambda, spec.u);
  const ExtremalMonomial mw = extremal_monomial(cd, spec.lambda, spec.w);
  std::vector<RatFunc> vals;
  for (const Word& v : *words_of_degree(ctx, nu)) {
    if (spec.sign == MinorSign::highest)
      vals.push_back(verma_pairing(ctx, spec.lambda, mu, v, mw));
    else
      vals.push_back(verma_pairing(ctx, spec.lambda, mw, inverse_word(v), mu));
  }
  return dual_from_values(ctx, nu, vals);
}

RatFunc minor_coefficient_direct(const Context& ctx, const MinorSpec& spec, const Word& v) {
  if (spec.sign != MinorSign::lowest) throw std::invalid_argument("direct evaluation is for lowest minors");
  const CartanDatum& cd = ctx.cartan();
  minor_degree(cd, spec);
  const int n = cd.rank();
  const UqElement eu = involution(ctx, Involution::vee, to_uq(cd, extremal_monomial(cd, spec.lambda, spec.u)));
  const UqElement ew = involution(ctx, Involution::vee, to_uq(cd, extremal_monomial(cd, spec.lambda, spec.w)));
  const UqElement fv = UqElement::monomial(UqMonomial{v, RootVec::zero(n), {}});
  const UqElement z = multiply(ctx, multiply(ctx, involution(ctx, Involution::phi, eu), fv), ew);
  return lowest_vacuum_expectation(ctx, z, spec.lambda);
}

FElement minor_element(const Context& ctx, const MinorSpec& spec) { return to_word_form(ctx, minor_dual_vector(ctx, spec)); }

PBWCoeffs minor(const Context& ctx, const MinorSpec& spec, const PBWChart& chart) {
  return expand_dual_pbw(ctx, chart, minor_dual_vector(ctx, spec));
}

MinorTwistReport verify_minor_twist(const Context& ctx, const Weight& lambda, const Word& u1, const Word& u2, const Word& w) {
  const CartanDatum& cd = ctx.cartan();
  if (!is_reduced(cd, w)) throw std::invalid_argument("word is not reduced");
  if (!weak_order_leq(cd, u1, w) || !weak_order_leq(cd, u2, w))
    throw PreconditionError("u1 and u2 must lie below w in the weak right order");
  const Word winv = inverse_word(w);
  auto concat = [&](const Word& u) {
    Word x = winv;
    x.insert(x.end(), u.begin(), u.end());
    return reduce_word(cd, x);
  };
  MinorTwistReport rep;
  rep.left = MinorSpec{lambda, u1, u2, MinorSign::lowest};
  rep.right = MinorSpec{lambda, concat(u2), concat(u1), MinorSign::lowest};
  const PBWChart chart = build_chart(ctx, w);
  const PBWChart rchart = build_chart(ctx, winv);
  rep.left_coeffs = minor(ctx, rep.left, chart);
  rep.right_coeffs = minor(ctx, rep.right, rchart);
  rep.coords_equal = rep.left_coeffs.residual_zero && rep.right_coeffs.residual_zero &&
                     rep.left_coeffs.coeffs.size() == rep.right_coeffs.coeffs.size();
  for (const auto& [c, v] : rep.left_coeffs.coeffs)
    if (!(rep.right_coeffs.at(reversed(c)) == v)) rep.coords_equal = false;
  rep.direct_equal = equal_to_minus(ctx, theta(ctx, winv, minor_element(ctx, rep.left)), minor_element(ctx, rep.right));
  return rep;
}

namespace {

Weight mu(const CartanDatum& cd, const Word& i, int x, int j) {
  return weyl_act(cd, Word(i.begin(), i.begin() + x), cd.fundamental(j));
}

// max({0} u {1 <= p <= pos - 1 : i_p = j})
int prev(const Word& i, int pos, int j) {
  for (int p = pos - 1; p >= 1; --p)
    if (i[static_cast<std::size_t>(p - 1)] == j) return p;
  return 0;
}

long integral(const mpq_class& x) {
  if (x.get_den() != 1) throw std::logic_error("T-system exponent is not an integer");
  return x.get_num().get_si();
}

}  // namespace

FElement tsystem_minor(const Context& ctx, const Word& i, int x, int y, int j) {
  const CartanDatum& cd = ctx.cartan();
  if (mu(cd, i, x, j) == mu(cd, i, y, j)) return FElement::one();
  const Word u(i.begin(), i.begin() + x);
  const Word w(i.begin(), i.begin() + y);
  return minor_element(ctx, MinorSpec{cd.fundamental(j), u, w, MinorSign::lowest});
}

TSystemReport verify_tsystem(const Context& ctx, const Word& i, int b, int d, std::vector<int> order) {
  const CartanDatum& cd = ctx.cartan();
  const int n = cd.rank();
  const int l = static_cast<int>(i.size());
  cd.check_word(i);
  if (!is_reduced(cd, i)) throw std::invalid_argument("word is not reduced");
  if (!(1 <= b && b < d && d <= l) || i[static_cast<std::size_t>(b - 1)] != i[static_cast<std::size_t>(d - 1)])
    throw std::invalid_argument("T-system needs 1 <= b < d <= l with i_b = i_d");
  if (order.empty()) {
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
  }
  {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    if (sorted != id) throw std::invalid_argument("order must be a permutation of the index set");
  }
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;

  TSystemReport r;
  r.word = i;
  r.b = b;
  r.d = d;
  r.i = i[static_cast<std::size_t>(b - 1)];
  r.order = order;
  const int ii = r.i;
  const int bm = prev(i, b, ii), dm = prev(i, d, ii);
  auto M = [&](int x, int j) { return mu(cd, i, x, j); };
  r.A = integral(cd.bilinear(M(b, ii), M(bm, ii) - M(dm, ii)));
  r.B = integral(cd.bilinear(M(bm, ii), M(b, ii) - M(dm, ii)));
  r.Bp = integral(cd.bilinear(M(b, ii), M(bm, ii) - M(d, ii)));
  mpq_class c = 0;
  for (int j = 0; j < n; ++j) {
    if (j == ii) continue;
    const long m = -cd.a(j, ii);
    c += mpq_class(m * (m - 1) / 2) * cd.bilinear(M(b, j), M(b, j) - M(d, j));
    for (int k = 0; k < n; ++k)
      if (k != ii && pos[static_cast<std::size_t>(k)] < pos[static_cast<std::size_t>(j)])
        c += mpq_class(cd.a(j, ii) * cd.a(k, ii)) * cd.bilinear(M(b, j), M(b, k) - M(d, k));
  }
  r.C = integral(c);

  std::map<std::tuple<int, int, int>, FElement> cache;
  auto factor = [&](int x, int y, int j, int power = 1) {
    auto key = std::make_tuple(x, y, j);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, tsystem_minor(ctx, i, x, y, j)).first;
    return MinorFactor{x, y, j, power, it->second};
  };
  r.lhs = {factor(bm, dm, ii), factor(b, d, ii)};
  r.mid1 = {factor(b, dm, ii), factor(bm, d, ii)};
  r.mid2 = {factor(bm, d, ii), factor(b, dm, ii)};
  FElement prod = FElement::one();
  for (int j : order) {
    if (j == ii || cd.a(j, ii) == 0) continue;
    r.prod.push_back(factor(prev(i, b, j), prev(i, d, j), j, -cd.a(j, ii)));
    prod = prod * r.prod.back().value.power(r.prod.back().power);
  }
  const RatFunc qi = RatFunc::q_power(-cd.d(ii));
  r.lhs_value = (r.lhs[0].value * r.lhs[1].value).scaled(RatFunc::q_power(static_cast<int>(r.A)));
  const FElement tail = prod.scaled(RatFunc::q_power(static_cast<int>(r.C)));
  r.rhs1_value = (r.mid1[0].value * r.mid1[1].value).scaled(qi * RatFunc::q_power(static_cast<int>(r.B))) + tail;
  r.rhs2_value = (r.mid2[0].value * r.mid2[1].value).scaled(qi * RatFunc::q_power(static_cast<int>(r.Bp))) + tail;
  r.first_holds = equals(ctx, r.lhs_value, r.rhs1_value);
  r.second_holds = equals(ctx, r.lhs_value, r.rhs2_value);
  return r;
}

bool TSystemTwistReport::passed() const {
  if (!original.passed() || !twisted.second_holds || !exponents_match) return false;
  return std::all_of(factor_images.begin(), factor_images.end(), [](bool x) { return x; });
}

TSystemTwistReport verify_tsystem_twist(const Context& ctx, const Word& i, int b, int d, std::vector<int> order) {
  TSystemTwistReport rep;
  rep.original = verify_tsystem(ctx, i, b, d, order);
  const int l = static_cast<int>(i.size());
  const Word irev = inverse_word(i);
  std::vector<int> rorder(rep.original.order.rbegin(), rep.original.order.rend());
  rep.twisted = verify_tsystem(ctx, irev, l - d + 1, l - b + 1, rorder);
  const TSystemReport& o = rep.original;
  const TSystemReport& t = rep.twisted;
  rep.exponents_match = t.A == o.A && t.Bp == o.B && t.C == o.C;
  auto image = [&](const MinorFactor& src, const MinorFactor& dst) {
    return src.j == dst.j && src.power == dst.power && equal_to_minus(ctx, theta(ctx, irev, src.value), dst.value);
  };
  rep.factor_images.push_back(image(o.lhs[1], t.lhs[0]));
  rep.factor_images.push_back(image(o.lhs[0], t.lhs[1]));
  rep.factor_images.push_back(image(o.mid1[1], t.mid2[0]));
  rep.factor_images.push_back(image(o.mid1[0], t.mid2[1]));
  if (o.prod.size() != t.prod.size()) {
    rep.factor_images.push_back(false);
  } else {
    for (std::size_t k = 0; k < o.prod.size(); ++k) rep.factor_images.push_back(image(o.prod[k], t.prod[o.prod.size() - 1 - k]));
  }
  return rep;
}

}  // namespace qnil
