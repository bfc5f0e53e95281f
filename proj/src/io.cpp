#include "qnil/io.hpp"

namespace qnil {

Json to_json(const mpz_class& a) {
  if (a.fits_slong_p()) return Json(a.get_si());
  return Json(a.get_str());
}

mpz_class mpz_from_json(const Json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  throw std::invalid_argument("expected an integer");
}

Json to_json(const ZPoly& p) {
  Json out = Json::array();
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) out.push_back(Json::array({k, to_json(p.coeff(k))}));
  return out;
}

ZPoly zpoly_from_json(const Json& j) {
  ZPoly p;
  for (const auto& t : j) {
    const int k = t.at(0).get<int>();
    if (k < 0) throw std::invalid_argument("negative degree in a polynomial");
    p = p + ZPoly::monomial(k, mpz_from_json(t.at(1)));
  }
  return p;
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, to_json(c.get_num()), to_json(c.get_den())}));
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& t : j) {
    mpq_class c(mpz_from_json(t.at(1)), mpz_from_json(t.at(2)));
    c.canonicalize();
    p += LaurentPoly::monomial(t.at(0).get<int>(), c);
  }
  return p;
}

Json to_json(const RatFunc& x) {
  const auto [num, den] = x.as_fraction();
  Json out;
  out["num"] = to_json(num);
  out["den"] = to_json(den);
  return out;
}

RatFunc ratfunc_from_json(const Json& j) { return RatFunc::from_parts(zpoly_from_json(j.at("num")), zpoly_from_json(j.at("den"))); }

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (int a : w) out.push_back(a + 1);
  return out;
}

Word word_from_json(const Json& j) {
  Word w;
  for (const auto& a : j) {
    const int v = a.get<int>();
    if (v < 1) throw std::invalid_argument("word letters are 1-based");
    w.push_back(v - 1);
  }
  return w;
}

Json to_json(const RootVec& v) { return Json(v.m); }

Json to_json(const Weight& w) { return Json(w.coords); }

CartanDatum cartan_from_json(const Json& j) {
  if (j.contains("type")) return CartanDatum::of_type(j.at("type").get<std::string>());
  if (!j.contains("gcm") || !j.contains("sym")) throw std::invalid_argument("Cartan datum needs \"type\" or \"gcm\" and \"sym\"");
  return CartanDatum(j.at("gcm").get<std::vector<std::vector<int>>>(), j.at("sym").get<std::vector<int>>());
}

CartanDatum parse_cartan(const std::string& s) {
  if (!s.empty() && s.front() == '{') {
    Json j;
    try {
      j = Json::parse(s);
    } catch (const Json::exception& e) {
      throw std::invalid_argument(std::string("malformed Cartan JSON: ") + e.what());
    }
    return cartan_from_json(j);
  }
  return CartanDatum::of_type(s);
}

Json to_json(const FElement& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x.terms()) out.push_back(Json::array({word_to_json(w), to_json(c)}));
  return out;
}

FElement felement_from_json(const Json& j) {
  FElement x;
  for (const auto& t : j) x.add(word_from_json(t.at(0)), ratfunc_from_json(t.at(1)));
  return x;
}

Json to_json(const UqElement& x) {
  Json out = Json::array();
  for (const auto& [m, c] : x.terms()) {
    Json mono;
    mono["f"] = word_to_json(m.f);
    mono["k"] = to_json(m.k);
    mono["e"] = word_to_json(m.e);
    out.push_back(Json::array({mono, to_json(c)}));
  }
  return out;
}

Json to_json(const DualVector& v) {
  Json out;
  out["weight"] = to_json(-v.degree);
  Json entries = Json::array();
  for (std::size_t k = 0; k < v.words->size(); ++k) entries.push_back(Json::array({word_to_json((*v.words)[k]), to_json(v.entry(k))}));
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const PBWCoeffs& c) {
  Json out;
  out["word"] = word_to_json(c.word);
  Json coeffs = Json::array();
  for (const auto& [comp, v] : c.coeffs) coeffs.push_back(Json::array({Json(comp), to_json(v)}));
  out["coeffs"] = std::move(coeffs);
  out["residual_zero"] = c.residual_zero;
  return out;
}

Json to_json(const LaurentMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

Json to_json(const DCBSlice& s) {
  Json out;
  out["word"] = word_to_json(s.word);
  out["weight"] = to_json(-s.degree);
  Json labels = Json::array();
  for (const auto& c : s.labels) labels.push_back(Json(c));
  out["labels"] = std::move(labels);
  out["pmatrix"] = to_json(s.pmatrix);
  Json elems = Json::array();
  for (const auto& e : s.elements) elems.push_back(to_json(e));
  out["elements"] = std::move(elems);
  return out;
}

}  // namespace qnil
