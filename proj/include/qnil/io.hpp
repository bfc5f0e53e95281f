#pragma once

// JSON encodings of the library values (schema "qnil/1"). Words are 1-based.

#include <json.hpp>

#include "qnil/dcb.hpp"

namespace qnil {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "qnil/1";

/// Integers outside the int64 range are written as decimal strings.
Json to_json(const mpz_class& a);
mpz_class mpz_from_json(const Json& j);

Json to_json(const ZPoly& p);  // [[degree, coefficient], ...]
ZPoly zpoly_from_json(const Json& j);
Json to_json(const LaurentPoly& p);  // [[exponent, numerator, denominator], ...]
LaurentPoly laurent_from_json(const Json& j);
Json to_json(const RatFunc& x);  // {"num": poly, "den": poly}
RatFunc ratfunc_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);
Json to_json(const RootVec& v);
Json to_json(const Weight& w);

/// {"type": "A2"} or {"gcm": [[...]], "sym": [...]}.
CartanDatum cartan_from_json(const Json& j);
/// A built-in type name or an inline JSON object.
CartanDatum parse_cartan(const std::string& s);

Json to_json(const FElement& x);  // [[word, ratfunc], ...] by word
FElement felement_from_json(const Json& j);
Json to_json(const UqElement& x);  // [[{"f", "k", "e"}, ratfunc], ...]
/// {"weight": -degree, "entries": [[word, ratfunc], ...]}.
Json to_json(const DualVector& v);
Json to_json(const PBWCoeffs& c);
Json to_json(const LaurentMatrix& m);
Json to_json(const DCBSlice& s);

}  // namespace qnil
