#pragma once

#include <random>

#include "qnil/scalars.hpp"

namespace qt {

using qnil::LaurentPoly;
using qnil::RatFunc;

inline RatFunc q(int k) { return RatFunc::q_power(k); }
inline LaurentPoly lq(int k, long c = 1) { return LaurentPoly::monomial(k, c); }
// 1 - q^{2d}
inline RatFunc one_minus(int two_d) { return RatFunc(1) - q(two_d); }

inline RatFunc random_ratfunc(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(-3, 3), len(1, 3);
  auto poly = [&] {
    LaurentPoly p;
    for (int k = len(rng); k > 0; --k) p += lq(expo(rng), coef(rng));
    return p;
  };
  LaurentPoly den = poly();
  while (den.is_zero()) den = poly();
  return RatFunc(poly()) / RatFunc(den);
}

}  // namespace qt

#include <ostream>

#include "qnil/uqminus.hpp"

namespace qnil {
inline std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const UqElement& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const FElement& x) { return os << to_string(x); }
}  // namespace qnil
