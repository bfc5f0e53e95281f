#include "qnil/uqfull.hpp"

#include <sstream>

namespace qnil {

UqElement UqElement::scalar(int rank, const RatFunc& c) { return monomial(UqMonomial{{}, RootVec::zero(rank), {}}, c); }

UqElement UqElement::monomial(UqMonomial m, const RatFunc& c) {
  UqElement x;
  x.add(m, c);
  return x;
}

UqElement UqElement::f(int rank, int i) { return monomial(UqMonomial{{i}, RootVec::zero(rank), {}}); }

UqElement UqElement::e(int rank, int i) { return monomial(UqMonomial{{}, RootVec::zero(rank), {i}}); }

UqElement UqElement::t(const RootVec& mu) { return monomial(UqMonomial{{}, mu, {}}); }

void UqElement::add(const UqMonomial& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

void UqElement::add(const UqElement& o, const RatFunc& c) {
  for (const auto& [m, v] : o.t_) add(m, c.is_one() ? v : v * c);
}

UqElement UqElement::operator+(const UqElement& o) const {
  UqElement r = *this;
  r.add(o);
  return r;
}

UqElement UqElement::operator-(const UqElement& o) const {
  UqElement r = *this;
  r.add(o, RatFunc(-1));
  return r;
}

UqElement UqElement::operator-() const { return scaled(RatFunc(-1)); }

UqElement UqElement::scaled(const RatFunc& c) const {
  UqElement r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : t_) r.t_.emplace(m, v * c);
  return r;
}

RootVec word_weight(const CartanDatum& cd, const Word& w) {
  RootVec r = RootVec::zero(cd.rank());
  for (int j : w) r.m[static_cast<std::size_t>(j)] += 1;
  return r;
}

RootVec weight(const CartanDatum& cd, const UqMonomial& m) { return word_weight(cd, m.e) - word_weight(cd, m.f); }

namespace {

Word without(const Word& w, std::size_t k) {
  Word r;
  r.reserve(w.size() - 1);
  for (std::size_t j = 0; j < w.size(); ++j)
    if (j != k) r.push_back(w[j]);
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word repeat(int i, int n) { return Word(static_cast<std::size_t>(n), i); }

// 1 / (q^d - q^{-d})
RatFunc inverse_qdiff(int d) {
  return RatFunc::from_parts(ZPoly::constant(1), ZPoly::monomial(2 * d) - ZPoly::constant(1), d);
}

RatFunc inverse_of(const LaurentPoly& p) { return RatFunc(p).inverse(); }

}  // namespace

std::shared_ptr<const UqElement> straighten(const Context& ctx, const Word& e, const Word& f) {
  const CartanDatum& cd = ctx.cartan();
  const int n = cd.rank();
  if (e.empty() || f.empty()) return std::make_shared<const UqElement>(UqElement::monomial(UqMonomial{f, RootVec::zero(n), e}));
  auto key = std::make_pair(e, f);
  if (auto hit = ctx.straighten_memo.find(key)) return hit;

  const int a = e.back();
  const Word rest(e.begin(), e.end() - 1);
  UqElement out;
  // e_a f = f e_a + sum over letters k of f equal to a of the commutator term
  const auto head = straighten(ctx, rest, f);
  for (const auto& [m, c] : head->terms()) {
    UqMonomial mm = m;
    mm.e.push_back(a);
    out.add(mm, c);
  }
  const RatFunc ca = inverse_qdiff(cd.d(a));
  const RootVec alpha_a = RootVec::simple(n, a);
  RootVec tail = RootVec::zero(n);
  for (std::size_t k = f.size(); k-- > 0;) {
    if (f[k] == a) {
      const int s = cd.form(alpha_a, tail);
      const auto sub = straighten(ctx, rest, without(f, k));
      for (const auto& [m, c] : sub->terms()) {
        const int we = cd.form(alpha_a, word_weight(cd, m.e));
        const RatFunc base = c * ca;
        UqMonomial plus{m.f, m.k + alpha_a, m.e};
        UqMonomial minus{m.f, m.k - alpha_a, m.e};
        out.add(plus, base.shifted(-s - we));
        out.add(minus, (-base).shifted(s + we));
      }
    }
    tail.m[static_cast<std::size_t>(f[k])] += 1;
  }
  return ctx.straighten_memo.publish(key, std::move(out));
}

UqElement multiply(const Context& ctx, const UqMonomial& a, const UqMonomial& b) {
  const CartanDatum& cd = ctx.cartan();
  UqElement out;
  if (a.e.empty() || b.f.empty()) {
    const int s = -cd.form(a.k, word_weight(cd, b.f)) - cd.form(b.k, word_weight(cd, a.e));
    out.add(UqMonomial{concat(a.f, b.f), a.k + b.k, concat(a.e, b.e)}, RatFunc::q_power(s));
    return out;
  }
  const auto s0 = straighten(ctx, a.e, b.f);
  for (const auto& [m, c] : s0->terms()) {
    const int s = -cd.form(a.k, word_weight(cd, m.f)) - cd.form(b.k, word_weight(cd, m.e));
    out.add(UqMonomial{concat(a.f, m.f), a.k + m.k + b.k, concat(m.e, b.e)}, c.shifted(s));
  }
  return out;
}

UqElement multiply(const Context& ctx, const UqElement& a, const UqElement& b) {
  UqElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const RatFunc c = ca * cb;
      const UqElement prod = multiply(ctx, ma, mb);
      for (const auto& [m, v] : prod.terms()) out.add(m, v * c);
    }
  return out;
}

UqElement involution(const Context& ctx, Involution kind, const UqElement& x) {
  const CartanDatum& cd = ctx.cartan();
  const int n = cd.rank();
  UqElement out;
  for (const auto& [m, c] : x.terms()) {
    switch (kind) {
      case Involution::bar:
        out.add(UqMonomial{m.f, -m.k, m.e}, c.bar());
        break;
      case Involution::phi:
        out.add(UqMonomial{inverse_word(m.e), m.k, inverse_word(m.f)}, c);
        break;
      case Involution::vee: {
        // e_F K^{-1} f_E, with e_F K^{-1} = q^{(K, wt F)} K^{-1} e_F
        UqMonomial left{{}, -m.k, m.f};
        UqMonomial right{m.e, RootVec::zero(n), {}};
        out.add(multiply(ctx, left, right), c.shifted(cd.form(m.k, word_weight(cd, m.f))));
        break;
      }
      case Involution::star: {
        UqMonomial left{{}, -m.k, inverse_word(m.e)};
        UqMonomial right{inverse_word(m.f), RootVec::zero(n), {}};
        out.add(multiply(ctx, left, right), c.shifted(cd.form(m.k, word_weight(cd, m.e))));
        break;
      }
    }
  }
  return out;
}

UqElement antipode(const Context& ctx, const UqElement& x) {
  const CartanDatum& cd = ctx.cartan();
  const int n = cd.rank();
  UqElement out;
  for (const auto& [m, c] : x.terms()) {
    // S(F K E) = S(E) K^{-1} S(F); S(e_a) = -e_a t_a = -q^{-2d_a} t_a e_a, S(f_b) = -t_b^{-1} f_b = -q^{2d_b} f_b t_b^{-1}
    UqElement acc = UqElement::scalar(n, c);
    for (auto it = m.e.rbegin(); it != m.e.rend(); ++it) {
      const int a = *it;
      acc = multiply(ctx, acc, UqElement::monomial(UqMonomial{{}, RootVec::simple(n, a), {a}}, RatFunc::q_power(-2 * cd.d(a)) * RatFunc(-1)));
    }
    acc = multiply(ctx, acc, UqElement::t(-m.k));
    for (auto it = m.f.rbegin(); it != m.f.rend(); ++it) {
      const int b = *it;
      acc = multiply(ctx, acc, UqElement::monomial(UqMonomial{{b}, -RootVec::simple(n, b), {}}, RatFunc::q_power(2 * cd.d(b)) * RatFunc(-1)));
    }
    out.add(acc);
  }
  return out;
}

namespace {

UqElement generator_image(const Context& ctx, int i, int sign, bool is_e, int j) {
  const CartanDatum& cd = ctx.cartan();
  const int n = cd.rank();
  const int di = cd.d(i);
  const RootVec ai = RootVec::simple(n, i);
  if (i == j) {
    if (sign > 0) {
      // T_i(e_i) = -f_i t_i ; T_i(f_i) = -t_i^{-1} e_i
      if (is_e) return UqElement::monomial(UqMonomial{{i}, ai, {}}, RatFunc(-1));
      return UqElement::monomial(UqMonomial{{}, -ai, {i}}, RatFunc(-1));
    }
    // T_i^{-1}(e_i) = -t_i^{-1} f_i ; T_i^{-1}(f_i) = -e_i t_i
    if (is_e) return UqElement::monomial(UqMonomial{{i}, -ai, {}}, RatFunc::q_power(2 * di) * RatFunc(-1));
    return UqElement::monomial(UqMonomial{{}, ai, {i}}, RatFunc::q_power(-2 * di) * RatFunc(-1));
  }
  const int m = -cd.a(i, j);
  UqElement out;
  for (int r = 0; r <= m; ++r) {
    const int s = m - r;
    const RatFunc c = inverse_of(qfactorial(r, di) * qfactorial(s, di)) * RatFunc(r % 2 == 0 ? 1 : -1);
    const Word left = repeat(i, sign > 0 ? (is_e ? s : r) : (is_e ? r : s));
    const Word right = repeat(i, sign > 0 ? (is_e ? r : s) : (is_e ? s : r));
    Word w = concat(concat(left, Word{j}), right);
    const int shift = is_e ? -di * r : di * r;
    if (is_e)
      out.add(UqMonomial{{}, RootVec::zero(n), w}, c.shifted(shift));
    else
      out.add(UqMonomial{w, RootVec::zero(n), {}}, c.shifted(shift));
  }
  return out;
}

std::shared_ptr<const UqElement> word_image(const Context& ctx, int i, int sign, bool is_e, const Word& w) {
  const int n = ctx.rank();
  if (w.empty()) return std::make_shared<const UqElement>(UqElement::scalar(n, 1));
  auto key = std::make_tuple(i, sign, is_e ? 1 : 0, w);
  if (auto hit = ctx.braid_word_memo.find(key)) return hit;
  const Word prefix(w.begin(), w.end() - 1);
  UqElement img = multiply(ctx, *word_image(ctx, i, sign, is_e, prefix), generator_image(ctx, i, sign, is_e, w.back()));
  return ctx.braid_word_memo.publish(key, std::move(img));
}

}  // namespace

UqElement braid(const Context& ctx, int i, int sign, const UqElement& x) {
  const CartanDatum& cd = ctx.cartan();
  cd.check_index(i);
  UqElement out;
  for (const auto& [m, c] : x.terms()) {
    UqElement img = multiply(ctx, *word_image(ctx, i, sign, false, m.f), UqElement::t(cd.reflect(i, m.k)));
    out.add(multiply(ctx, img, *word_image(ctx, i, sign, true, m.e)), c);
  }
  return out;
}

UqElement braid_word(const Context& ctx, const Word& w, int sign, const UqElement& x) {
  UqElement y = x;
  if (sign > 0) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) y = braid(ctx, *it, +1, y);
  } else {
    for (int i : w) y = braid(ctx, i, -1, y);
  }
  return y;
}

std::shared_ptr<const UqElement> braid_generator(const Context& ctx, const Word& w, int sign, const UqMonomial& gen) {
  auto key = std::make_tuple(w, sign, gen);
  if (auto hit = ctx.braid_generator_memo.find(key)) return hit;
  return ctx.braid_generator_memo.publish(key, braid_word(ctx, w, sign, UqElement::monomial(gen)));
}

UqElement braid_word_by_generators(const Context& ctx, const Word& w, int sign, const UqElement& x) {
  const CartanDatum& cd = ctx.cartan();
  const int n = cd.rank();
  UqElement out;
  for (const auto& [m, c] : x.terms()) {
    UqElement acc = UqElement::scalar(n, c);
    for (int j : m.f) acc = multiply(ctx, acc, *braid_generator(ctx, w, sign, UqMonomial{{j}, RootVec::zero(n), {}}));
    const RootVec k = sign > 0 ? weyl_act(cd, w, m.k) : weyl_act(cd, inverse_word(w), m.k);
    acc = multiply(ctx, acc, UqElement::t(k));
    for (int j : m.e) acc = multiply(ctx, acc, *braid_generator(ctx, w, sign, UqMonomial{{}, RootVec::zero(n), {j}}));
    out.add(acc);
  }
  return out;
}

std::string to_string(const UqMonomial& m) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << ' ';
    first = false;
  };
  for (int j : m.f) sep(), os << 'f' << j + 1;
  for (int j = 0; j < m.k.rank(); ++j) {
    if (m.k[j] == 0) continue;
    sep();
    os << 't' << j + 1;
    if (m.k[j] != 1) os << '^' << m.k[j];
  }
  for (int j : m.e) sep(), os << 'e' << j + 1;
  if (first) os << '1';
  return os.str();
}

std::string to_string(const UqElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ") " << to_string(m);
  }
  return os.str();
}

}  // namespace qnil
