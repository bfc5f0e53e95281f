#include "qnil/acceptance.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "qnil/finitetype.hpp"
#include "qnil/minors.hpp"
#include "qnil/twist.hpp"

namespace qnil {

namespace {

struct Tally {
  long n = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& what) {
    ++n;
    if (!ok && first.empty()) first = what();
  }
};

std::string show(const Word& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k] + 1;
  os << ')';
  return os.str();
}

std::string show_c(const Composition& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
  os << ')';
  return os.str();
}

std::string show(const RootVec& v) { return show_c(v.m); }

FElement F(Word w, RatFunc c = 1) { return FElement::word(w, c); }

RatFunc one_minus_q2() { return RatFunc(1) - RatFunc::q_power(2); }

Word prefix(const Word& w, std::size_t len) { return Word(w.begin(), w.begin() + static_cast<long>(len)); }

struct Chart {
  const char* type;
  Word word;
};

std::vector<Chart> twist_charts() {
  std::vector<Chart> out;
  for (const Chart& ch : {Chart{"A2", {0, 1, 0}}, Chart{"B2", {1, 0, 1, 0}}, Chart{"A3", {0, 1, 0, 2, 1, 0}}}) {
    out.push_back(ch);
    out.push_back({ch.type, prefix(ch.word, ch.word.size() - 1)});
    out.push_back({ch.type, prefix(ch.word, ch.word.size() - 2)});
  }
  return out;
}

void orthogonality(Tally& t) {
  for (const Chart& ch : {Chart{"A2", {0, 1, 0}}, Chart{"B2", {0, 1, 0, 1}}, Chart{"A3", longest_word(CartanDatum::of_type("A3"))}}) {
    Context ctx(CartanDatum::of_type(ch.type));
    const PBWChart chart = build_chart(ctx, ch.word);
    for (const auto& nu : chart_degrees(chart, 6)) {
      const auto cs = enumerate_compositions(chart, nu);
      std::vector<DualVector> dvs;
      for (const auto& c : cs) dvs.push_back(dual_vector(ctx, f_low(ctx, chart, c), nu));
      for (std::size_t a = 0; a < cs.size(); ++a)
        for (std::size_t b = 0; b < cs.size(); ++b) {
          const RatFunc expect = a == b ? pbw_norm(ctx.cartan(), chart, cs[a]) : RatFunc();
          t.check(pair(dvs[a], f_low(ctx, chart, cs[b])) == expect,
                  [&] { return std::string(ch.type) + " " + show(ch.word) + " " + show_c(cs[a]) + " x " + show_c(cs[b]); });
        }
    }
  }
}

void dcb_characterization(Tally& t) {
  {
    Context ctx(CartanDatum::of_type("A2"));
    const PBWChart chart = build_chart(ctx, {0, 1, 0});
    const DCBSlice s = dcb_slice(ctx, chart, RootVec({1, 1}));
    const RatFunc u = one_minus_q2();
    const RatFunc q = RatFunc::q_power(1);
    t.check(s.labels == std::vector<Composition>{{0, 1, 0}, {1, 0, 1}}, [] { return std::string("pinned A2 labels"); });
    t.check(s.elements.size() == 2 && s.elements[0] == (F({1, 0}) - F({0, 1}, q)).scaled(u) && s.elements[1] == (F({0, 1}) - F({1, 0}, q)).scaled(u),
            [] { return std::string("pinned A2 elements"); });
    t.check(s.pmatrix[1][0] == -LaurentPoly::monomial(1), [] { return std::string("pinned A2 P entry"); });
  }
  std::vector<Chart> charts = twist_charts();
  charts.push_back({"B2", {0, 1, 0, 1}});
  for (const Chart& ch : charts) {
    Context ctx(CartanDatum::of_type(ch.type));
    const PBWChart chart = build_chart(ctx, ch.word);
    for (const auto& nu : chart_degrees(chart, 5)) {
      const DCBSlice s = dcb_slice(ctx, chart, nu);
      for (std::size_t a = 0; a < s.labels.size(); ++a) {
        auto where = [&] { return std::string(ch.type) + " " + show(ch.word) + " " + show_c(s.labels[a]); };
        t.check(equals(ctx, sigma(ctx, s.elements[a]), s.elements[a]), where);
        t.check(s.pmatrix[a][a] == LaurentPoly(1), where);
        for (std::size_t b = 0; b < s.labels.size(); ++b) {
          const LaurentPoly& p = s.pmatrix[a][b];
          if (a == b || p.is_zero()) continue;
          t.check(b < a && p.is_integral() && p.min_exponent() > 0, where);
        }
      }
    }
  }
}

void dcb_twist(Tally& t) {
  for (const Chart& ch : twist_charts()) {
    Context ctx(CartanDatum::of_type(ch.type));
    for (const auto& nu : chart_degrees(build_chart(ctx, ch.word), 5)) {
      const TwistReport r = verify_dcb_twist(ctx, ch.word, nu);
      for (const auto& e : r.entries)
        t.check(e.equal && e.sigma_commutes, [&] { return std::string(ch.type) + " " + show(ch.word) + " " + show_c(e.c); });
    }
  }
}

void right_lex(Tally& t) {
  for (const Chart& ch : twist_charts()) {
    Context ctx(CartanDatum::of_type(ch.type));
    for (const auto& nu : chart_degrees(build_chart(ctx, ch.word), 5)) {
      const CoeffTable table = reverse_coeff_table(ctx, ch.word, nu);
      for (const auto& e : table.entries)
        t.check(e.ok, [&] { return std::string(ch.type) + " " + show(ch.word) + " " + show_c(e.c) + " : " + show_c(e.c2); });
    }
  }
}

void minor_twist(Tally& t) {
  {
    Context ctx(CartanDatum::of_type("A2"));
    const RatFunc u = one_minus_q2();
    t.check(equal_to_minus(ctx, theta(ctx, {0, 1, 0}, F({0}, u)), F({1}, u)), [] { return std::string("pinned A2 instance"); });
  }
  for (const char* type : {"A2", "B2"}) {
    Context ctx(CartanDatum::of_type(type));
    const CartanDatum& cd = ctx.cartan();
    const Word w0 = longest_word(cd);
    const auto elems = weyl_elements(cd, 3);
    for (int i = 0; i < cd.rank(); ++i)
      for (const Word& u1 : elems)
        for (const Word& u2 : elems) {
          try {
            minor_degree(cd, MinorSpec{cd.fundamental(i), u1, u2, MinorSign::lowest});
          } catch (const std::invalid_argument&) {
            continue;
          }
          const MinorTwistReport r = verify_minor_twist(ctx, cd.fundamental(i), u1, u2, w0);
          t.check(r.passed(), [&] { return std::string(type) + " lambda=w" + std::to_string(i + 1) + " u1=" + show(u1) + " u2=" + show(u2); });
        }
  }
}

void tsystem(Tally& t) {
  {
    Context ctx(CartanDatum::of_type("A2"));
    const Word i{0, 1, 0};
    const TSystemReport r = verify_tsystem(ctx, i, 1, 3);
    const RatFunc u = one_minus_q2();
    const RatFunc q = RatFunc::q_power(1);
    t.check(r.A == -1 && r.B == 0 && r.C == 0, [] { return std::string("pinned exponents"); });
    t.check(equals(ctx, tsystem_minor(ctx, i, 0, 1, 0), F({0}, u)) && equals(ctx, tsystem_minor(ctx, i, 1, 3, 0), F({1}, u)) &&
                equals(ctx, tsystem_minor(ctx, i, 0, 3, 0), (F({0, 1}) - F({1, 0}, q)).scaled(u)) &&
                equals(ctx, tsystem_minor(ctx, i, 0, 2, 1), (F({1, 0}) - F({0, 1}, q)).scaled(u)),
            [] { return std::string("pinned minors"); });
  }
  for (const Chart& ch : {Chart{"A2", {0, 1, 0}}, Chart{"B2", {0, 1, 0, 1}}}) {
    Context ctx(CartanDatum::of_type(ch.type));
    const int l = static_cast<int>(ch.word.size());
    for (int b = 1; b <= l; ++b)
      for (int d = b + 1; d <= l; ++d) {
        if (ch.word[static_cast<std::size_t>(b - 1)] != ch.word[static_cast<std::size_t>(d - 1)]) continue;
        auto where = [&] { return std::string(ch.type) + " b=" + std::to_string(b) + " d=" + std::to_string(d); };
        t.check(verify_tsystem(ctx, ch.word, b, d).passed(), where);
        t.check(verify_tsystem_twist(ctx, ch.word, b, d).passed(), where);
      }
  }
}

void cofinite(Tally& t) {
  Context ctx(CartanDatum::of_type("A2"));
  const Word w{0};
  {
    const CofiniteReport r = cofinite_twist_check(ctx, w, F({1}, one_minus_q2()));
    t.check(r.passed() && r.scalar == RatFunc::q_power(-1) && r.beta == RootVec({1, 1}), [] { return std::string("pinned instance"); });
  }
  const PBWChart chart = build_chart(ctx, longest_word(ctx.cartan()));
  long members = 0;
  for (const auto& nu : chart_degrees(chart, 4)) {
    const DCBSlice s = dcb_slice(ctx, chart, nu);
    for (std::size_t a = 0; a < s.labels.size(); ++a) {
      if (!in_cofinite(ctx, w, s.elements[a])) continue;
      ++members;
      t.check(cofinite_twist_check(ctx, w, s.elements[a]).passed(), [&] { return "degree " + show(nu) + " label " + show_c(s.labels[a]); });
    }
  }
  t.check(members > 0, [] { return std::string("no element of the cofinite part was found"); });
}

void finite_type(Tally& t) {
  {
    Context ctx(CartanDatum::of_type("A2"));
    const DCBSlice s = dcb_slice(ctx, build_chart(ctx, {0, 1, 0}), RootVec({1, 1}));
    const LaurentMatrix m = transpose(unitriangular_inverse(s.pmatrix));
    t.check(m[s.index({0, 1, 0})][s.index({1, 0, 1})] == LaurentPoly::monomial(1), [] { return std::string("pinned coefficient"); });
  }
  for (const char* type : {"A2", "B2", "A3"}) {
    Context ctx(CartanDatum::of_type(type));
    const Word w0 = longest_word(ctx.cartan());
    for (const auto& nu : chart_degrees(build_chart(ctx, w0), 5)) {
      const ThetaStarReport r = verify_theta_star(ctx, nu, w0);
      t.check(r.passed(), [&] { return std::string(type) + " degree " + show(nu); });
    }
  }
}

UqElement random_monomial(std::mt19937& rng, int rank, int maxlen) {
  std::uniform_int_distribution<int> letter(0, rank - 1), len(0, maxlen), kexp(-1, 1);
  const int total = len(rng);
  std::uniform_int_distribution<int> split(0, total);
  const int nf = split(rng);
  Word f, e;
  for (int k = 0; k < nf; ++k) f.push_back(letter(rng));
  for (int k = nf; k < total; ++k) e.push_back(letter(rng));
  RootVec kk = RootVec::zero(rank);
  for (auto& v : kk.m) v = kexp(rng);
  return UqElement::monomial(UqMonomial{f, kk, e}, RatFunc::q_power(kexp(rng)));
}

FElement random_homogeneous(std::mt19937& rng, const RootVec& nu) {
  FElement x;
  std::uniform_int_distribution<int> terms(1, 3), co(-2, 2), ex(-2, 2);
  for (int s = terms(rng); s > 0; --s) {
    Word w;
    for (int j = 0; j < nu.rank(); ++j) w.insert(w.end(), static_cast<std::size_t>(nu[j]), j);
    std::shuffle(w.begin(), w.end(), rng);
    x.add(w, RatFunc::q_power(ex(rng)) * RatFunc(co(rng)));
  }
  return x;
}

std::vector<UqElement> generators(int n) {
  std::vector<UqElement> g;
  for (int i = 0; i < n; ++i) {
    g.push_back(UqElement::f(n, i));
    g.push_back(UqElement::e(n, i));
    g.push_back(UqElement::t(RootVec::simple(n, i)));
  }
  return g;
}

FElement serre(const CartanDatum& cd, int i, int j, bool rev) {
  const int m = 1 - cd.a(i, j);
  FElement x;
  for (int r = 0; r <= m; ++r) {
    Word w(static_cast<std::size_t>(r), i);
    w.push_back(j);
    w.insert(w.end(), static_cast<std::size_t>(m - r), i);
    if (rev) w = inverse_word(w);
    x.add(w, RatFunc(qbinom(m, r, cd.d(i))) * RatFunc(r % 2 ? -1 : 1));
  }
  return x;
}

void structural(Tally& t) {
  for (const char* type : {"A2", "B2", "G2"}) {
    Context ctx(CartanDatum::of_type(type));
    const CartanDatum& cd = ctx.cartan();
    const int n = cd.rank();
    const int m = type == std::string("A2") ? 3 : type == std::string("B2") ? 4 : 6;
    Word a, b;
    for (int k = 0; k < m; ++k) {
      a.push_back(k % 2);
      b.push_back((k + 1) % 2);
    }
    auto SV = [&](const UqElement& x) { return antipode(ctx, involution(ctx, Involution::vee, x)); };
    for (const auto& x : generators(n)) {
      for (int sign : {1, -1}) t.check(uq_equal(ctx, braid_word(ctx, a, sign, x), braid_word(ctx, b, sign, x)), [&] { return std::string(type) + " braid relation"; });
      for (int i = 0; i < n; ++i)
        t.check(uq_equal(ctx, braid(ctx, i, 1, SV(x)), SV(braid(ctx, i, -1, x))), [&] { return std::string(type) + " T_i S vee identity"; });
    }
    std::mt19937 rng(2024);
    for (int s = 0; s < 10; ++s) {
      const UqElement x = random_monomial(rng, n, 3);
      for (int i = 0; i < n; ++i) {
        t.check(uq_equal(ctx, braid(ctx, i, 1, braid(ctx, i, -1, x)), x), [&] { return std::string(type) + " T_i T_i^-1 on " + to_string(x); });
        t.check(uq_equal(ctx, braid(ctx, i, -1, braid(ctx, i, 1, x)), x), [&] { return std::string(type) + " T_i^-1 T_i on " + to_string(x); });
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j)
          for (bool rev : {false, true}) t.check(is_zero(ctx, serre(cd, i, j, rev)), [&] { return std::string(type) + " Serre element"; });
  }
  for (const char* type : {"A2", "B2", "A3"}) {
    Context ctx(CartanDatum::of_type(type));
    const int n = ctx.rank();
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> m(0, 2);
    for (int k = 0; k < 20; ++k) {
      RootVec a = RootVec::zero(n), b = RootVec::zero(n);
      for (auto& v : a.m) v = m(rng);
      for (auto& v : b.m) v = m(rng) % 2;
      if (a.height() > 4) a.m[0] = 0;
      const FElement x = random_homogeneous(rng, a), x2 = random_homogeneous(rng, a), y = random_homogeneous(rng, b);
      auto where = [&] { return std::string(type) + " sample " + std::to_string(k); };
      t.check(form_L(ctx, x, x2) == form_L(ctx, x2, x), where);
      t.check(form_L(ctx, x.star(), x2.star()) == form_L(ctx, x, x2), where);
      t.check(sigma(ctx, sigma(ctx, x)) == x, where);
      t.check(equals(ctx, sigma(ctx, x * y), (sigma(ctx, y) * sigma(ctx, x)).scaled(RatFunc::q_power(ctx.cartan().form(a, b)))), where);
    }
  }
}

struct Criterion {
  const char* name;
  void (*run)(Tally&);
};

const Criterion kCriteriaTable[kCriteria] = {
    {"PBW orthogonality and norms", orthogonality},
    {"dual canonical characterization", dcb_characterization},
    {"twist maps dual canonical bases", dcb_twist},
    {"right lexicographic unitriangularity", right_lex},
    {"twist of unipotent quantum minors", minor_twist},
    {"quantum T-system and its twist", tsystem},
    {"cofinite part under the twist", cofinite},
    {"finite type: theta star and Theta_w0", finite_type},
    {"structural identities", structural},
};

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriteria) throw std::out_of_range("no such criterion");
  const Criterion& s = kCriteriaTable[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = s.name;
  Tally t;
  try {
    s.run(t);
    r.pass = t.first.empty() && t.n > 0;
    r.detail = r.pass ? std::to_string(t.n) + " checks" : "first failure: " + t.first;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("aborted: ") + e.what();
  }
  r.checked = t.n;
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace qnil
