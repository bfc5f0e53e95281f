#include "qnil/scalars.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

namespace qnil {

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const mpz_class& a) { return ZPoly(std::vector<mpz_class>{a}); }

ZPoly ZPoly::monomial(int degree, const mpz_class& a) {
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
  c.back() = a;
  return ZPoly(std::move(c));
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class ZPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

int ZPoly::low_degree() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return 0;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) r[k] = c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) r[k] = c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] -= o.c_[k];
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpz_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const mpz_class& a) const {
  if (a == 0) return {};
  ZPoly r = *this;
  for (auto& x : r.c_) x *= a;
  return r;
}

ZPoly ZPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<mpz_class> r(static_cast<std::size_t>(k));
  r.insert(r.end(), c_.begin(), c_.end());
  return ZPoly(std::move(r));
}

ZPoly ZPoly::unshifted(int k) const {
  if (k == 0 || is_zero()) return *this;
  if (low_degree() < k) throw std::logic_error("ZPoly::unshifted: not divisible by q^k");
  return ZPoly(std::vector<mpz_class>(c_.begin() + k, c_.end()));
}

mpz_class ZPoly::content() const {
  mpz_class g = 0;
  for (const auto& a : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (lead() < 0) g = -g;
  return divexact(g);
}

ZPoly ZPoly::divexact(const mpz_class& a) const {
  if (a == 1) return *this;
  ZPoly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), a.get_mpz_t());
  return r;
}

ZPoly ZPoly::divexact(const ZPoly& o) const {
  if (o.is_zero()) throw DivisionByZero();
  if (is_zero()) return {};
  if (o.degree() == 0) {
    for (const auto& x : c_)
      if (!mpz_divisible_p(x.get_mpz_t(), o.lead().get_mpz_t()))
        throw std::logic_error("ZPoly::divexact: inexact division");
    return divexact(o.lead());
  }
  if (degree() < o.degree()) throw std::logic_error("ZPoly::divexact: inexact division");
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> quot(static_cast<std::size_t>(degree() - o.degree() + 1));
  const int od = o.degree();
  for (int k = degree() - od; k >= 0; --k) {
    mpz_class& top = rem[static_cast<std::size_t>(k + od)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), o.lead().get_mpz_t()))
      throw std::logic_error("ZPoly::divexact: inexact division");
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), o.lead().get_mpz_t());
    quot[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= od; ++j) rem[static_cast<std::size_t>(k + j)] -= f * o.c_[static_cast<std::size_t>(j)];
  }
  for (const auto& x : rem)
    if (x != 0) throw std::logic_error("ZPoly::divexact: inexact division");
  return ZPoly(std::move(quot));
}

namespace {

// Pseudo-remainder of a by b: lead(b)^(deg a - deg b + 1) * a mod b.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  std::vector<mpz_class> r = a.coeffs();
  const int bd = b.degree();
  const mpz_class& lb = b.lead();
  int rd = static_cast<int>(r.size()) - 1;
  while (rd >= bd && rd >= 0) {
    mpz_class top = r[static_cast<std::size_t>(rd)];
    if (top == 0) {
      --rd;
      continue;
    }
    for (int k = 0; k <= rd; ++k) r[static_cast<std::size_t>(k)] *= lb;
    for (int j = 0; j <= bd; ++j)
      r[static_cast<std::size_t>(rd - bd + j)] -= top * b.coeffs()[static_cast<std::size_t>(j)];
    --rd;
  }
  r.resize(static_cast<std::size_t>(std::max(rd + 1, 0)));
  return ZPoly(std::move(r));
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return b.is_zero() ? ZPoly{} : (b.lead() < 0 ? -b : b);
  if (b.is_zero()) return a.lead() < 0 ? -a : a;
  mpz_class cg;
  mpz_class ca = a.content(), cb = b.content();
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.degree() == 0 || b.degree() == 0) return ZPoly::constant(cg);
  ZPoly x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return ZPoly::constant(cg);
    ZPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part() * cg;
}

ZPoly lcm(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  ZPoly g = gcd(a, b);
  ZPoly r = a.divexact(g) * b;
  return r.lead() < 0 ? -r : r;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long a) {
  if (a != 0) t_.emplace(0, mpq_class(a));
}

LaurentPoly::LaurentPoly(const mpq_class& a) {
  if (a != 0) t_.emplace(0, a);
}

LaurentPoly LaurentPoly::monomial(int exponent, const mpq_class& a) {
  LaurentPoly p;
  if (a != 0) p.t_.emplace(exponent, a);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const Terms& t) {
  LaurentPoly p;
  for (const auto& [e, a] : t)
    if (a != 0) p.t_.emplace(e, a);
  return p;
}

LaurentPoly LaurentPoly::from_zpoly(const ZPoly& z, int shift) {
  LaurentPoly p;
  const auto& c = z.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) p.t_.emplace(static_cast<int>(k) + shift, mpq_class(c[k]));
  return p;
}

mpq_class LaurentPoly::coeff(int k) const {
  auto it = t_.find(k);
  return it == t_.end() ? mpq_class(0) : it->second;
}

int LaurentPoly::min_exponent() const { return t_.empty() ? 0 : t_.begin()->first; }
int LaurentPoly::max_exponent() const { return t_.empty() ? 0 : t_.rbegin()->first; }

bool LaurentPoly::is_integral() const {
  return std::all_of(t_.begin(), t_.end(), [](const auto& kv) { return kv.second.get_den() == 1; });
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, a] : o.t_) {
    auto [it, inserted] = t_.emplace(e, a);
    if (!inserted) {
      it->second += a;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, a] : o.t_) {
    auto [it, inserted] = t_.emplace(e, -a);
    if (!inserted) {
      it->second -= a;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& kv : r.t_) kv.second = -kv.second;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, a1] : t_)
    for (const auto& [e2, a2] : o.t_) {
      auto [it, inserted] = r.t_.emplace(e1 + e2, a1 * a2);
      if (!inserted) it->second += a1 * a2;
    }
  for (auto it = r.t_.begin(); it != r.t_.end();) {
    if (it->second == 0)
      it = r.t_.erase(it);
    else
      ++it;
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, a] : t_) r.t_.emplace_hint(r.t_.end(), e + k, a);
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, a] : t_) r.t_.emplace(-e, a);
  return r;
}

LaurentPoly LaurentPoly::positive_part() const {
  LaurentPoly r;
  for (auto it = t_.upper_bound(0); it != t_.end(); ++it) r.t_.emplace_hint(r.t_.end(), it->first, it->second);
  return r;
}

namespace {

std::string monomial_string(int e) {
  if (e == 0) return "";
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const int e = it->first;
    mpq_class a = it->second;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const std::string m = monomial_string(e);
    if (m.empty())
      os << a.get_str();
    else if (a == 1)
      os << m;
    else
      os << a.get_str() << "*" << m;
  }
  return os.str();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc() : den_(ZPoly::constant(1)) {}

RatFunc::RatFunc(long a) : RatFunc(mpq_class(a)) {}

RatFunc::RatFunc(const mpq_class& a) {
  if (a == 0) {
    den_ = ZPoly::constant(1);
    return;
  }
  num_ = ZPoly::constant(a.get_num());
  den_ = ZPoly::constant(a.get_den());
}

RatFunc::RatFunc(const LaurentPoly& p) {
  if (p.is_zero()) {
    den_ = ZPoly::constant(1);
    return;
  }
  mpz_class den = 1;
  for (const auto& [e, a] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den_mpz_t());
  const int lo = p.min_exponent();
  std::vector<mpz_class> c(static_cast<std::size_t>(p.max_exponent() - lo + 1));
  for (const auto& [e, a] : p.terms()) c[static_cast<std::size_t>(e - lo)] = a.get_num() * (den / a.get_den());
  *this = from_parts(ZPoly(std::move(c)), ZPoly::constant(den), lo);
}

RatFunc RatFunc::q_power(int k) {
  RatFunc r(1);
  r.shift_ = k;
  return r;
}

RatFunc RatFunc::from_parts(ZPoly num, ZPoly den, int shift) {
  if (den.is_zero()) throw DivisionByZero();
  RatFunc r;
  if (num.is_zero()) return r;
  const int ln = num.low_degree(), ld = den.low_degree();
  num = num.unshifted(ln);
  den = den.unshifted(ld);
  shift += ln - ld;
  if (den.degree() > 0 && num.degree() > 0) {
    ZPoly g = gcd(num.primitive_part(), den.primitive_part());
    if (g.degree() > 0) {
      num = num.divexact(g);
      den = den.divexact(g);
    }
  }
  mpz_class cn = num.content(), cd = den.content(), g;
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den.lead() < 0) g = -g;
  if (g != 1) {
    num = num.divexact(g);
    den = den.divexact(g);
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.shift_ = shift;
  return r;
}

bool RatFunc::is_one() const {
  return shift_ == 0 && num_.degree() == 0 && den_.degree() == 0 && num_.lead() == 1 && den_.lead() == 1;
}

std::optional<LaurentPoly> RatFunc::to_laurent() const {
  if (!is_laurent()) return std::nullopt;
  LaurentPoly p;
  const auto& c = num_.coeffs();
  LaurentPoly::Terms t;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) t.emplace(static_cast<int>(k) + shift_, mpq_class(c[k], den_.lead()));
  return LaurentPoly::from_terms(t);
}

std::pair<ZPoly, ZPoly> RatFunc::as_fraction() const {
  if (shift_ >= 0) return {num_.shifted(shift_), den_};
  return {num_, den_.shifted(-shift_)};
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const int s = std::min(shift_, o.shift_);
  if (den_ == o.den_) {
    ZPoly n = num_.shifted(shift_ - s) + o.num_.shifted(o.shift_ - s);
    return from_parts(std::move(n), den_, s);
  }
  ZPoly g = gcd(den_, o.den_);
  ZPoly a = den_.divexact(g), b = o.den_.divexact(g);
  ZPoly n = num_.shifted(shift_ - s) * b + o.num_.shifted(o.shift_ - s) * a;
  return from_parts(std::move(n), a * o.den_, s);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (is_laurent() && o.is_laurent()) return from_parts(num_ * o.num_, den_ * o.den_, shift_ + o.shift_);
  // cross-cancel before multiplying keeps the gcd work small
  ZPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  ZPoly n = num_.divexact(g1) * o.num_.divexact(g2);
  ZPoly d = den_.divexact(g2) * o.den_.divexact(g1);
  RatFunc r;
  mpz_class cn = n.content(), cd = d.content(), g;
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (d.lead() < 0) g = -g;
  r.num_ = n.divexact(g);
  r.den_ = d.divexact(g);
  r.shift_ = shift_ + o.shift_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return from_parts(den_, num_, -shift_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc& RatFunc::operator+=(const RatFunc& o) { return *this = *this + o; }
RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this = *this - o; }
RatFunc& RatFunc::operator*=(const RatFunc& o) { return *this = *this * o; }

RatFunc RatFunc::shifted(int k) const {
  if (is_zero()) return *this;
  RatFunc r = *this;
  r.shift_ += k;
  return r;
}

namespace {

// p(q^{-1}) * q^{deg p}
ZPoly reversed(const ZPoly& p) {
  std::vector<mpz_class> c(p.coeffs().rbegin(), p.coeffs().rend());
  return ZPoly(std::move(c));
}

}  // namespace

RatFunc RatFunc::bar() const {
  if (is_zero()) return *this;
  // q^s n(q)/d(q) -> q^{-s} q^{-deg n} rev(n) / (q^{-deg d} rev(d))
  return from_parts(reversed(num_), reversed(den_), -shift_ - num_.degree() + den_.degree());
}

bool RatFunc::operator==(const RatFunc& o) const {
  return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
}

std::size_t RatFunc::hash() const {
  std::size_t h = std::hash<int>{}(shift_);
  auto mix = [&h](const ZPoly& p) {
    for (const auto& a : p.coeffs()) h = h * 1000003u ^ std::hash<long>{}(mpz_get_si(a.get_mpz_t()));
    h = h * 31u + p.coeffs().size();
  };
  mix(num_);
  mix(den_);
  return h;
}

std::string RatFunc::to_string() const {
  if (auto l = to_laurent()) return l->to_string();
  const std::string n = LaurentPoly::from_zpoly(num_, shift_).to_string();
  const std::string d = LaurentPoly::from_zpoly(den_).to_string();
  return "(" + n + ")/(" + d + ")";
}

RatFunc ring_op(const RatFunc& a, const RatFunc& b, RingOp kind) {
  switch (kind) {
    case RingOp::add:
      return a + b;
    case RingOp::mul:
      return a * b;
    case RingOp::neg:
      return -a;
    case RingOp::inv:
      return a.inverse();
  }
  throw std::logic_error("ring_op: unknown kind");
}

// ---------------------------------------------------------------- q-numbers

LaurentPoly qint(int n, int d) {
  if (n < 0) return -qint(-n, d);
  LaurentPoly r;
  // [n]_d = sum_{k=0}^{n-1} q^{d(n-1-2k)}
  for (int k = 0; k < n; ++k) r += LaurentPoly::monomial(d * (n - 1 - 2 * k));
  return r;
}

LaurentPoly qfactorial(int n, int d) {
  if (n < 0) throw std::invalid_argument("qfactorial: negative argument");
  LaurentPoly r(1);
  for (int k = 1; k <= n; ++k) r = r * qint(k, d);
  return r;
}

LaurentPoly qbinom(int m, int n, int d) {
  if (n < 0 || m < 0) throw std::invalid_argument("qbinom: negative argument");
  if (n > m) return {};
  // Pascal rule [m,n] = q^{d(m-n)}[m-1,n-1] + q^{-dn}[m-1,n] keeps everything in Z[q^{±1}].
  std::vector<LaurentPoly> row{LaurentPoly(1)};
  for (int k = 1; k <= m; ++k) {
    std::vector<LaurentPoly> next(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
      LaurentPoly v;
      if (j >= 1) v += row[static_cast<std::size_t>(j - 1)].shifted(d * (k - j));
      if (j <= k - 1) v += row[static_cast<std::size_t>(j)].shifted(-d * j);
      next[static_cast<std::size_t>(j)] = v;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(n)];
}

}  // namespace qnil
