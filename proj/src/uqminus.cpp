#include "qnil/uqminus.hpp"

#include <algorithm>
#include <sstream>

namespace qnil {

FElement FElement::word(const Word& w, const RatFunc& c) {
  FElement x;
  x.add(w, c);
  return x;
}

FElement FElement::from_uq(const UqElement& x) {
  FElement r;
  for (const auto& [m, c] : x.terms()) {
    if (!m.e.empty() || !m.k.is_zero()) throw std::logic_error("element does not lie in U_q^-: " + to_string(m));
    r.add(m.f, c);
  }
  return r;
}

UqElement FElement::to_uq(int rank) const {
  UqElement r;
  for (const auto& [w, c] : t_) r.add(UqMonomial{w, RootVec::zero(rank), {}}, c);
  return r;
}

void FElement::add(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

FElement FElement::operator+(const FElement& o) const {
  FElement r = *this;
  for (const auto& [w, c] : o.t_) r.add(w, c);
  return r;
}

FElement FElement::operator-(const FElement& o) const {
  FElement r = *this;
  for (const auto& [w, c] : o.t_) r.add(w, -c);
  return r;
}

FElement FElement::operator-() const { return scaled(RatFunc(-1)); }

FElement FElement::operator*(const FElement& o) const {
  FElement r;
  for (const auto& [a, ca] : t_)
    for (const auto& [b, cb] : o.t_) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      r.add(w, ca * cb);
    }
  return r;
}

FElement FElement::scaled(const RatFunc& c) const {
  FElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, v] : t_) r.t_.emplace(w, v * c);
  return r;
}

FElement FElement::bar_coeffs() const {
  FElement r;
  for (const auto& [w, c] : t_) r.t_.emplace(w, c.bar());
  return r;
}

FElement FElement::star() const {
  FElement r;
  for (const auto& [w, c] : t_) r.add(inverse_word(w), c);
  return r;
}

FElement FElement::power(int n) const {
  FElement r = one();
  for (int k = 0; k < n; ++k) r = r * *this;
  return r;
}

std::map<RootVec, FElement> FElement::components(int rank) const {
  std::map<RootVec, FElement> out;
  for (const auto& [w, c] : t_) {
    RootVec nu = RootVec::zero(rank);
    for (int j : w) nu.m[static_cast<std::size_t>(j)] += 1;
    out[nu].t_.emplace(w, c);
  }
  return out;
}

RootVec FElement::degree(int rank) const {
  auto comps = components(rank);
  if (comps.size() != 1) throw std::invalid_argument("element is zero or not homogeneous");
  return comps.begin()->first;
}

std::string to_string(const FElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")";
    if (w.empty()) os << " 1";
    for (int j : w) os << " f" << j + 1;
  }
  return os.str();
}

namespace {

void permutations(std::vector<int>& counts, Word& prefix, std::size_t total, std::vector<Word>& out) {
  if (prefix.size() == total) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] == 0) continue;
    --counts[j];
    prefix.push_back(static_cast<int>(j));
    permutations(counts, prefix, total, out);
    prefix.pop_back();
    ++counts[j];
  }
}

Word without(const Word& w, std::size_t k) {
  Word r;
  r.reserve(w.size() - 1);
  for (std::size_t j = 0; j < w.size(); ++j)
    if (j != k) r.push_back(w[j]);
  return r;
}

RatFunc ratio(const LaurentPoly& num, const ZPoly& den) {
  if (num.is_zero()) return RatFunc();
  mpz_class scale = 1;
  for (const auto& [e, c] : num.terms()) scale = lcm(scale, mpz_class(c.get_den()));
  const int lo = num.min_exponent();
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(num.max_exponent() - lo + 1));
  for (const auto& [e, c] : num.terms()) coeffs[static_cast<std::size_t>(e - lo)] = mpz_class(c * scale);
  return RatFunc::from_parts(ZPoly(std::move(coeffs)), den * scale, lo);
}

// Common denominator of a list of coefficients.
SharedDen share(const std::vector<const RatFunc*>& xs) {
  SharedDen s;
  s.den = ZPoly::constant(1);
  for (const RatFunc* x : xs)
    if (!x->is_zero()) s.den = lcm(s.den, x->den());
  for (const RatFunc* x : xs) {
    if (x->is_zero()) {
      s.num.emplace_back();
      continue;
    }
    s.num.push_back(LaurentPoly::from_zpoly(x->num() * s.den.divexact(x->den()), x->shift()));
  }
  return s;
}

}  // namespace

std::size_t GramMatrix::index(const Word& w) const {
  auto it = std::lower_bound(words->begin(), words->end(), w);
  if (it == words->end() || *it != w) throw std::logic_error("word not of this degree");
  return static_cast<std::size_t>(it - words->begin());
}

std::shared_ptr<const GramMatrix> gram(const Context& ctx, const RootVec& nu) {
  if (auto hit = ctx.gram_memo.find(nu)) return hit;
  const CartanDatum& cd = ctx.cartan();
  if (!nu.is_nonnegative()) throw std::invalid_argument("degree must lie in Q_+");
  GramMatrix g;
  {
    std::vector<int> counts(nu.m.begin(), nu.m.end());
    std::vector<Word> words;
    Word prefix;
    permutations(counts, prefix, static_cast<std::size_t>(nu.height()), words);
    g.words = std::make_shared<const std::vector<Word>>(std::move(words));
  }
  const auto& words = *g.words;
  const std::size_t n = words.size();
  g.numer.assign(n, std::vector<LaurentPoly>(n));
  if (nu.is_zero()) {
    g.numer[0][0] = LaurentPoly(1);
  } else {
    // (f_a x, f_v)_L = (x, e'_a f_v)_L / (1 - q_a^2)
    std::map<int, std::shared_ptr<const GramMatrix>> sub;
    for (std::size_t wi = 0; wi < n; ++wi) {
      const Word& w = words[wi];
      const int a = w.front();
      auto& g1 = sub[a];
      if (!g1) g1 = gram(ctx, nu - RootVec::simple(cd.rank(), a));
      const std::size_t rest = g1->index(Word(w.begin() + 1, w.end()));
      for (std::size_t vi = 0; vi < n; ++vi) {
        const Word& v = words[vi];
        LaurentPoly acc;
        int expo = 0;
        for (std::size_t k = 0; k < v.size(); ++k) {
          if (v[k] == a) acc += g1->numer[rest][g1->index(without(v, k))].shifted(-expo);
          expo += cd.root_form(a, v[k]);
        }
        g.numer[wi][vi] = std::move(acc);
      }
    }
  }
  return ctx.gram_memo.publish(nu, std::move(g));
}

std::shared_ptr<const std::vector<Word>> words_of_degree(const Context& ctx, const RootVec& nu) { return gram(ctx, nu)->words; }

FElement eprime(const Context& ctx, int i, Side side, const FElement& x) {
  const CartanDatum& cd = ctx.cartan();
  cd.check_index(i);
  FElement out;
  for (const auto& [w, c] : x.terms()) {
    if (side == Side::left) {
      int expo = 0;
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == i) out.add(without(w, k), c.shifted(-expo));
        expo += cd.root_form(i, w[k]);
      }
    } else {
      int expo = 0;
      for (std::size_t k = w.size(); k-- > 0;) {
        if (w[k] == i) out.add(without(w, k), c.shifted(-expo));
        expo += cd.root_form(i, w[k]);
      }
    }
  }
  return out;
}

LaurentPoly pairing_numerator(const Context& ctx, const Word& w, const Word& v) {
  RootVec a = word_weight(ctx.cartan(), w);
  if (a != word_weight(ctx.cartan(), v)) return LaurentPoly();
  auto g = gram(ctx, a);
  return g->numer[g->index(w)][g->index(v)];
}

ZPoly norm_denominator(const CartanDatum& cd, const RootVec& nu) {
  ZPoly r = ZPoly::constant(1);
  for (int i = 0; i < cd.rank(); ++i) {
    const ZPoly f = ZPoly::constant(1) - ZPoly::monomial(2 * cd.d(i));
    for (int k = 0; k < nu[i]; ++k) r = r * f;
  }
  return r;
}

RatFunc SharedDen::value(std::size_t k) const { return ratio(num[k], den); }

bool DualVector::is_zero() const {
  return std::all_of(vals.num.begin(), vals.num.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

bool DualVector::operator==(const DualVector& o) const {
  if (degree != o.degree) return false;
  const LaurentPoly da = LaurentPoly::from_zpoly(vals.den);
  const LaurentPoly db = LaurentPoly::from_zpoly(o.vals.den);
  for (std::size_t k = 0; k < vals.num.size(); ++k)
    if (!(vals.num[k] * db == o.vals.num[k] * da)) return false;
  return true;
}

DualVector dual_vector(const Context& ctx, const FElement& x, const RootVec& nu) {
  auto g = gram(ctx, nu);
  std::vector<const RatFunc*> cs;
  std::vector<std::size_t> rows;
  for (const auto& [w, c] : x.terms()) {
    if (word_weight(ctx.cartan(), w) != nu) throw std::invalid_argument("dual_vector: term of the wrong degree");
    cs.push_back(&c);
    rows.push_back(g->index(w));
  }
  SharedDen s = share(cs);
  DualVector dv;
  dv.degree = nu;
  dv.words = g->words;
  dv.vals.den = s.den * norm_denominator(ctx.cartan(), nu);
  const std::size_t n = g->words->size();
  dv.vals.num.assign(n, LaurentPoly());
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const auto& row = g->numer[rows[t]];
    for (std::size_t v = 0; v < n; ++v)
      if (!row[v].is_zero()) dv.vals.num[v] += s.num[t] * row[v];
  }
  return dv;
}

DualVector dual_from_values(const Context& ctx, const RootVec& nu, const std::vector<RatFunc>& vals) {
  auto words = words_of_degree(ctx, nu);
  if (vals.size() != words->size()) throw std::invalid_argument("dual_from_values: one value per word is required");
  std::vector<const RatFunc*> cs;
  for (const auto& v : vals) cs.push_back(&v);
  DualVector dv;
  dv.degree = nu;
  dv.words = words;
  dv.vals = share(cs);
  return dv;
}

DualVector dual_vector(const Context& ctx, const FElement& x) { return dual_vector(ctx, x, x.degree(ctx.rank())); }

RatFunc pair(const DualVector& dx, const FElement& y) {
  std::vector<const RatFunc*> cs;
  std::vector<std::size_t> idx;
  for (const auto& [w, c] : y.terms()) {
    auto it = std::lower_bound(dx.words->begin(), dx.words->end(), w);
    if (it == dx.words->end() || *it != w) continue;  // other degrees pair to zero
    cs.push_back(&c);
    idx.push_back(static_cast<std::size_t>(it - dx.words->begin()));
  }
  if (cs.empty()) return RatFunc();
  SharedDen s = share(cs);
  LaurentPoly acc;
  for (std::size_t t = 0; t < idx.size(); ++t) acc += s.num[t] * dx.vals.num[idx[t]];
  return ratio(acc, s.den * dx.vals.den);
}

RatFunc form_L(const Context& ctx, const FElement& x, const FElement& y) {
  RatFunc acc;
  auto cy = y.components(ctx.rank());
  for (const auto& [nu, xc] : x.components(ctx.rank())) {
    auto it = cy.find(nu);
    if (it == cy.end()) continue;
    acc += pair(dual_vector(ctx, xc, nu), it->second);
  }
  return acc;
}

bool is_zero(const Context& ctx, const FElement& x) {
  for (const auto& [nu, xc] : x.components(ctx.rank()))
    if (!dual_vector(ctx, xc, nu).is_zero()) return false;
  return true;
}

bool equals(const Context& ctx, const FElement& x, const FElement& y) { return is_zero(ctx, x - y); }

bool uq_is_zero(const Context& ctx, const UqElement& x) {
  const CartanDatum& cd = ctx.cartan();
  struct Group {
    std::map<Word, std::size_t> fs, es;
    std::vector<std::tuple<std::size_t, std::size_t, const RatFunc*>> terms;
  };
  std::map<std::tuple<RootVec, RootVec, RootVec>, Group> groups;
  for (const auto& [m, c] : x.terms()) {
    Group& g = groups[{m.k, word_weight(cd, m.f), word_weight(cd, m.e)}];
    auto fi = g.fs.try_emplace(m.f, g.fs.size()).first->second;
    auto ei = g.es.try_emplace(m.e, g.es.size()).first->second;
    g.terms.emplace_back(fi, ei, &c);
  }
  for (const auto& [key, g] : groups) {
    auto gf = gram(ctx, std::get<1>(key));
    auto ge = gram(ctx, std::get<2>(key));
    std::vector<const RatFunc*> cs;
    for (const auto& t : g.terms) cs.push_back(std::get<2>(t));
    SharedDen s = share(cs);
    std::vector<std::size_t> frow(g.fs.size()), erow(g.es.size());
    for (const auto& [w, k] : g.fs) frow[k] = gf->index(w);
    for (const auto& [w, k] : g.es) erow[k] = ge->index(w);
    const std::size_t nv = gf->words->size(), nu = ge->words->size();
    // t[v][E] = sum_F c(F,E) (f_F, f_v), then d[v][u] = sum_E t[v][E] (e_E, e_u)
    std::vector<std::vector<LaurentPoly>> t(nv, std::vector<LaurentPoly>(g.es.size()));
    for (std::size_t k = 0; k < g.terms.size(); ++k) {
      const auto& [fi, ei, c] = g.terms[k];
      const auto& row = gf->numer[frow[fi]];
      for (std::size_t v = 0; v < nv; ++v)
        if (!row[v].is_zero()) t[v][ei] += s.num[k] * row[v];
    }
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t u = 0; u < nu; ++u) {
        LaurentPoly acc;
        for (std::size_t e = 0; e < g.es.size(); ++e)
          if (!t[v][e].is_zero()) acc += t[v][e] * ge->numer[erow[e]][u];
        if (!acc.is_zero()) return false;
      }
  }
  return true;
}

bool uq_equal(const Context& ctx, const UqElement& x, const UqElement& y) { return x == y || uq_is_zero(ctx, x - y); }

FElement sigma(const Context& ctx, const FElement& x) {
  const CartanDatum& cd = ctx.cartan();
  FElement out;
  for (const auto& [nu, xc] : x.components(cd.rank())) {
    // wt x = -nu: sign (-1)^{ht nu}, exponent (nu,nu)/2 + (nu,rho)
    int rho_pair = 0;
    for (int i = 0; i < cd.rank(); ++i) rho_pair += nu[i] * cd.d(i);
    const int expo = cd.form(nu, nu) / 2 + rho_pair;
    const RatFunc scale = RatFunc::q_power(expo) * RatFunc(nu.height() % 2 == 0 ? 1 : -1);
    for (const auto& [w, c] : xc.terms()) out.add(inverse_word(w), c.bar() * scale);
  }
  return out;
}

FElement to_word_form(const Context& ctx, const DualVector& v) {
  auto g = gram(ctx, v.degree);
  const auto& words = *g->words;
  const std::size_t n = words.size();
  // Rows: equations indexed by v; columns: unknown coefficients x_w in lex order; last column rhs.
  const ZPoly nd = norm_denominator(ctx.cartan(), v.degree);
  std::vector<std::vector<RatFunc>> m(n, std::vector<RatFunc>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = RatFunc(g->numer[c][r]);
    m[r][n] = ratio(v.vals.num[r], v.vals.den) * RatFunc::from_parts(nd, ZPoly::constant(1));
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t p = rank;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) continue;
    std::swap(m[p], m[rank]);
    const RatFunc inv = m[rank][c].inverse();
    for (std::size_t k = c; k <= n; ++k) m[rank][k] = m[rank][k] * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const RatFunc f = m[r][c];
      for (std::size_t k = c; k <= n; ++k)
        if (!m[rank][k].is_zero()) m[r][k] -= f * m[rank][k];
    }
    pivots.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < n; ++r)
    if (!m[r][n].is_zero()) throw std::invalid_argument("to_word_form: vector is not in the image of dual_vector");
  FElement x;
  for (std::size_t k = 0; k < pivots.size(); ++k) x.add(words[pivots[k]], m[k][n]);
  if (!(dual_vector(ctx, x, v.degree) == v)) throw std::logic_error("to_word_form: residual check failed");
  return x;
}

}  // namespace qnil
