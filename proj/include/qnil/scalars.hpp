#pragma once

// Exact coefficient arithmetic: integer polynomials, Laurent polynomials in q
// with rational coefficients, and rational functions in q.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qnil {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero rational function") {}
};

/// Dense polynomial in q with integer coefficients; c[k] multiplies q^k.
/// The coefficient vector is always trimmed (no trailing zeros).
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<mpz_class> coeffs);
  static ZPoly constant(const mpz_class& a);
  static ZPoly monomial(int degree, const mpz_class& a = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& lead() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(int k) const;
  /// Number of factors of q dividing the polynomial (0 for the zero polynomial).
  int low_degree() const;

  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator-() const;
  ZPoly operator*(const ZPoly& o) const;
  ZPoly operator*(const mpz_class& a) const;
  ZPoly shifted(int k) const;  // multiply by q^k, k >= 0
  ZPoly unshifted(int k) const;  // divide by q^k, requires low_degree() >= k

  bool operator==(const ZPoly& o) const { return c_ == o.c_; }

  mpz_class content() const;
  ZPoly primitive_part() const;
  /// Exact division; throws std::logic_error when o does not divide *this in Z[q].
  ZPoly divexact(const ZPoly& o) const;
  ZPoly divexact(const mpz_class& a) const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// gcd in Z[q] (content gcd times primitive gcd), positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);
ZPoly lcm(const ZPoly& a, const ZPoly& b);

/// Laurent polynomial in q with rational coefficients. No stored zeros.
class LaurentPoly {
 public:
  using Terms = std::map<int, mpq_class>;

  LaurentPoly() = default;
  LaurentPoly(long a);  // NOLINT: implicit constants are convenient in formulas
  LaurentPoly(const mpq_class& a);  // NOLINT
  static LaurentPoly monomial(int exponent, const mpq_class& a = 1);
  static LaurentPoly from_terms(const Terms& t);
  /// Value q^shift * p(q).
  static LaurentPoly from_zpoly(const ZPoly& p, int shift = 0);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  mpq_class coeff(int k) const;
  int min_exponent() const;
  int max_exponent() const;
  bool is_integral() const;  // all coefficients in Z

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly shifted(int k) const;  // multiply by q^k
  LaurentPoly bar() const;           // q -> q^{-1}
  /// Terms with strictly positive exponent.
  LaurentPoly positive_part() const;

  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }

  std::string to_string() const;

 private:
  Terms t_;
};

/// Element of Q(q) in canonical form q^shift * num / den with num(0) != 0,
/// den(0) != 0, gcd(num, den) = 1 in Q[q], positive leading coefficient of
/// den, and joint integer content of (num, den) equal to 1. Zero is stored as
/// num = 0, den = 1, shift = 0.
class RatFunc {
 public:
  RatFunc();
  RatFunc(long a);               // NOLINT
  RatFunc(const mpq_class& a);   // NOLINT
  RatFunc(const LaurentPoly& p);  // NOLINT
  /// Normalizes q^shift * num / den; throws DivisionByZero if den == 0.
  static RatFunc from_parts(ZPoly num, ZPoly den, int shift = 0);
  static RatFunc q_power(int k);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// True when the denominator is a constant, i.e. the value is a Laurent polynomial.
  bool is_laurent() const { return den_.degree() == 0; }
  std::optional<LaurentPoly> to_laurent() const;

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  int shift() const { return shift_; }
  /// Numerator and denominator with the power of q folded in (both in Z[q]).
  std::pair<ZPoly, ZPoly> as_fraction() const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc inverse() const;
  RatFunc shifted(int k) const;  // multiply by q^k
  RatFunc bar() const;

  bool operator==(const RatFunc& o) const;
  std::size_t hash() const;

  std::string to_string() const;

 private:
  ZPoly num_;
  ZPoly den_;
  int shift_ = 0;
};

enum class RingOp { add, mul, neg, inv };
/// Dispatch form of the field operations; `b` is ignored for unary kinds.
RatFunc ring_op(const RatFunc& a, const RatFunc& b, RingOp kind);

inline RatFunc bar(const RatFunc& a) { return a.bar(); }
inline LaurentPoly bar(const LaurentPoly& a) { return a.bar(); }

/// Symmetric quantum integer [n]_d = (q^{dn} - q^{-dn}) / (q^d - q^{-d}).
LaurentPoly qint(int n, int d);
/// [n]_d! = prod_{k=1..n} [k]_d.
LaurentPoly qfactorial(int n, int d);
/// Quantum binomial [m choose n]_d for m >= n >= 0 (zero when n > m).
LaurentPoly qbinom(int m, int n, int d);

}  // namespace qnil
