#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <sstream>

#include "qnil/acceptance.hpp"
#include "qnil/finitetype.hpp"

namespace qnil::cli {

namespace {

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw UsageError("not an integer: '" + tok + "'");
    out.push_back(v);
    tok.clear();
  };
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '\t') flush();
    else tok.push_back(ch);
  }
  flush();
  return out;
}

Json cartan_json(const CartanDatum& cd) {
  if (!cd.name().empty()) return cd.name();
  Json j;
  j["gcm"] = cd.gcm();
  std::vector<int> sym;
  for (int i = 0; i < cd.rank(); ++i) sym.push_back(cd.d(i));
  j["sym"] = sym;
  return j;
}

Json comp_json(const Composition& c) { return Json(c); }

const Word& need(const std::optional<Word>& w, const char* flag) {
  if (!w) throw UsageError(std::string("missing required flag ") + flag);
  return *w;
}

Json header(const RunConfig& cfg) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = cfg.command;
  if (!cfg.kind.empty()) j["kind"] = cfg.kind;
  j["cartan"] = cartan_json(*cfg.cartan);
  return j;
}

RunResult finish(Json report, bool pass) {
  report["status"] = pass ? "pass" : "fail";
  return {pass ? 0 : 1, std::move(report)};
}

RunResult run_basis(const RunConfig& cfg, Json report) {
  Context ctx(*cfg.cartan);
  const Word& word = need(cfg.word, "--word");
  const PBWChart chart = build_chart(ctx, word);
  report["word"] = word_to_json(word);
  report["height"] = cfg.height;
  Json slices = Json::array();
  for (const auto& nu : chart_degrees(chart, cfg.height)) {
    if (cfg.kind == "pbw") {
      Json s;
      s["weight"] = to_json(-nu);
      Json els = Json::array();
      for (const auto& c : enumerate_compositions(chart, nu)) {
        Json e;
        e["label"] = comp_json(c);
        e["norm"] = to_json(pbw_norm(ctx.cartan(), chart, c));
        e["low"] = to_json(f_low(ctx, chart, c));
        e["up"] = to_json(f_up(ctx, chart, c));
        els.push_back(std::move(e));
      }
      s["elements"] = std::move(els);
      slices.push_back(std::move(s));
    } else {
      const DCBSlice slice = dcb_slice(ctx, chart, nu);
      if (cfg.kind == "dcb") {
        slices.push_back(to_json(slice));
      } else {
        Json s;
        s["weight"] = to_json(-nu);
        s["labels"] = Json::array();
        for (const auto& c : slice.labels) s["labels"].push_back(comp_json(c));
        s["elements"] = Json::array();
        for (const auto& x : canonical_low_slice(ctx, chart, slice)) s["elements"].push_back(to_json(x));
        slices.push_back(std::move(s));
      }
    }
  }
  report["slices"] = std::move(slices);
  return finish(std::move(report), true);
}

RunResult run_twist(const RunConfig& cfg, Json report) {
  Context ctx(*cfg.cartan);
  const Word& w0 = cfg.w ? *cfg.w : need(cfg.word, "--w");
  if (!cfg.fword) throw UsageError("missing required flag --fword");
  const Word w = cfg.inverse ? inverse_word(w0) : w0;
  report["w"] = word_to_json(w);
  report["input"] = to_json(*cfg.fword);
  const UqElement image = theta(ctx, w, *cfg.fword);
  report["image"] = to_json(image);
  const auto minus = minus_part(ctx, image);
  report["in_minus"] = minus.has_value();
  if (minus) report["minus_part"] = to_json(*minus);
  return finish(std::move(report), true);
}

RunResult run_minor(const RunConfig& cfg, Json report) {
  Context ctx(*cfg.cartan);
  if (!cfg.lambda) throw UsageError("missing required flag --lambda");
  const MinorSpec spec{*cfg.lambda, need(cfg.u, "--u"), need(cfg.w, "--w"), cfg.sign};
  report["lambda"] = to_json(spec.lambda);
  report["u"] = word_to_json(spec.u);
  report["w"] = word_to_json(spec.w);
  report["sign"] = spec.sign == MinorSign::lowest ? "lowest" : "highest";
  const DualVector dv = minor_dual_vector(ctx, spec);
  report["weight"] = to_json(-dv.degree);
  report["element"] = to_json(minor_element(ctx, spec));
  if (cfg.chart) {
    report["chart"] = word_to_json(*cfg.chart);
    report["coeffs"] = to_json(expand_dual_pbw(ctx, build_chart(ctx, *cfg.chart), dv));
  }
  return finish(std::move(report), true);
}

Json tsystem_json(const TSystemReport& r) {
  Json j;
  j["word"] = word_to_json(r.word);
  j["b"] = r.b;
  j["d"] = r.d;
  std::vector<int> order;
  for (int k : r.order) order.push_back(k + 1);
  j["order"] = order;
  j["A"] = r.A;
  j["B"] = r.B;
  j["Bp"] = r.Bp;
  j["C"] = r.C;
  auto factors = [](const std::vector<MinorFactor>& fs) {
    Json a = Json::array();
    for (const auto& f : fs) {
      Json e;
      e["x"] = f.x;
      e["y"] = f.y;
      e["j"] = f.j + 1;
      e["power"] = f.power;
      e["value"] = to_json(f.value);
      a.push_back(std::move(e));
    }
    return a;
  };
  j["lhs"] = factors(r.lhs);
  j["mid1"] = factors(r.mid1);
  j["mid2"] = factors(r.mid2);
  j["prod"] = factors(r.prod);
  j["lhs_value"] = to_json(r.lhs_value);
  j["rhs1_value"] = to_json(r.rhs1_value);
  j["rhs2_value"] = to_json(r.rhs2_value);
  j["first_holds"] = r.first_holds;
  j["second_holds"] = r.second_holds;
  return j;
}

RunResult run_verify(const RunConfig& cfg, Json report) {
  const std::string& k = cfg.kind;
  if (k == "all") {
    bool pass = true;
    Json crit = Json::array();
    for (const auto& r : run_acceptance()) {
      Json e;
      e["id"] = r.id;
      e["name"] = r.name;
      e["pass"] = r.pass;
      e["checked"] = r.checked;
      e["detail"] = r.detail;
      crit.push_back(std::move(e));
      pass = pass && r.pass;
    }
    report["criteria"] = std::move(crit);
    return finish(std::move(report), pass);
  }
  Context ctx(*cfg.cartan);
  bool pass = true;
  Json items = Json::array();
  if (k == "cofinite" || k == "finitetype") {
    const Word w0 = longest_word(ctx.cartan());
    const PBWChart chart = build_chart(ctx, w0);
    report["height"] = cfg.height;
    if (k == "cofinite") {
      const Word& w = cfg.w ? *cfg.w : need(cfg.word, "--w");
      report["w"] = word_to_json(w);
      for (const auto& nu : chart_degrees(chart, cfg.height)) {
        const DCBSlice s = dcb_slice(ctx, chart, nu);
        for (std::size_t a = 0; a < s.labels.size(); ++a) {
          if (!in_cofinite(ctx, w, s.elements[a])) continue;
          const CofiniteReport r = cofinite_twist_check(ctx, w, s.elements[a]);
          Json e;
          e["weight"] = to_json(-nu);
          e["label"] = comp_json(s.labels[a]);
          e["beta"] = to_json(r.beta);
          e["scalar"] = to_json(r.scalar);
          e["match"] = r.match ? comp_json(*r.match) : Json();
          e["pass"] = r.passed();
          pass = pass && r.passed();
          items.push_back(std::move(e));
        }
      }
    } else {
      report["word"] = word_to_json(w0);
      for (const auto& nu : chart_degrees(chart, cfg.height)) {
        const ThetaStarReport r = verify_theta_star(ctx, nu, w0);
        Json e;
        e["weight"] = to_json(-nu);
        e["monomials_checked"] = r.monomials_checked;
        e["monomial_failures"] = r.monomial_failures.size();
        e["label_failures"] = r.label_failures.size();
        e["coeff_failures"] = r.coeff_failures.size();
        e["pass"] = r.passed();
        pass = pass && r.passed();
        items.push_back(std::move(e));
      }
    }
    report["results"] = std::move(items);
    return finish(std::move(report), pass);
  }

  const Word& word = need(cfg.word, "--word");
  report["word"] = word_to_json(word);
  if (k == "tsystem" || k == "tsystemtwist") {
    if (word.empty()) {
      report["trivial"] = true;
      return finish(std::move(report), true);
    }
    if (!cfg.b || !cfg.d) throw UsageError("missing required flag --b or --d");
    if (k == "tsystem") {
      const TSystemReport r = verify_tsystem(ctx, word, *cfg.b, *cfg.d, cfg.order);
      report["report"] = tsystem_json(r);
      return finish(std::move(report), r.passed());
    }
    const TSystemTwistReport r = verify_tsystem_twist(ctx, word, *cfg.b, *cfg.d, cfg.order);
    report["original"] = tsystem_json(r.original);
    report["twisted"] = tsystem_json(r.twisted);
    report["exponents_match"] = r.exponents_match;
    report["factor_images"] = r.factor_images;
    return finish(std::move(report), r.passed());
  }
  if (k == "rootvectors") {
    const auto ok = verify_rootvector_images(ctx, word);
    for (std::size_t j = 0; j < ok.size(); ++j) {
      Json e;
      e["k"] = j + 1;
      e["pass"] = static_cast<bool>(ok[j]);
      pass = pass && ok[j];
      items.push_back(std::move(e));
    }
    report["results"] = std::move(items);
    return finish(std::move(report), pass);
  }
  const PBWChart chart = build_chart(ctx, word);
  report["height"] = cfg.height;
  for (const auto& nu : chart_degrees(chart, cfg.height)) {
    if (k == "pbwrev") {
      for (const auto& c : enumerate_compositions(chart, nu)) {
        const bool ok = verify_pbw_reversal(ctx, word, c);
        Json e;
        e["weight"] = to_json(-nu);
        e["label"] = comp_json(c);
        e["pass"] = ok;
        pass = pass && ok;
        items.push_back(std::move(e));
      }
    } else if (k == "dcbtwist") {
      const TwistReport r = verify_dcb_twist(ctx, word, nu);
      for (const auto& t : r.entries) {
        Json e;
        e["weight"] = to_json(-nu);
        e["label"] = comp_json(t.c);
        e["equal"] = t.equal;
        e["sigma_commutes"] = t.sigma_commutes;
        e["pass"] = t.equal && t.sigma_commutes;
        pass = pass && t.equal && t.sigma_commutes;
        items.push_back(std::move(e));
      }
    } else {
      const CoeffTable table = reverse_coeff_table(ctx, word, nu);
      for (const auto& t : table.entries) {
        Json e;
        e["weight"] = to_json(-nu);
        e["label"] = comp_json(t.c);
        e["label2"] = comp_json(t.c2);
        e["coeff"] = to_json(t.coeff);
        e["reversed_coeff"] = to_json(t.reversed_coeff);
        e["pass"] = t.ok;
        pass = pass && t.ok;
        items.push_back(std::move(e));
      }
    }
  }
  report["results"] = std::move(items);
  return finish(std::move(report), pass);
}

bool is_ratfunc(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den"); }

bool is_int_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_number_integer(); });
}

// [[word, ratfunc], ...] or [[{"f", "k", "e"}, ratfunc], ...]
bool is_element(const Json& j, bool full) {
  if (!j.is_array() || j.empty()) return false;
  return std::all_of(j.begin(), j.end(), [&](const Json& t) {
    if (!t.is_array() || t.size() != 2 || !is_ratfunc(t[1])) return false;
    return full ? t[0].is_object() && t[0].contains("f") : is_int_array(t[0]);
  });
}

std::string coeff_text(const Json& c) {
  const RatFunc r = ratfunc_from_json(c);
  return r.is_one() ? "" : "(" + r.to_string() + ") ";
}

std::string letters(const Json& w, char g) {
  std::string out;
  for (const auto& x : w) out += std::string(out.empty() ? "" : " ") + g + std::to_string(x.get<int>());
  return out;
}

std::string uq_text(const Json& j) {
  std::string out;
  for (const auto& t : j) {
    std::string mono = letters(t[0]["f"], 'f');
    const auto& k = t[0]["k"];
    for (std::size_t i = 0; i < k.size(); ++i) {
      const int e = k[i].get<int>();
      if (e == 0) continue;
      mono += std::string(mono.empty() ? "" : " ") + "t" + std::to_string(i + 1) + (e == 1 ? "" : "^" + std::to_string(e));
    }
    const std::string es = letters(t[0]["e"], 'e');
    if (!es.empty()) mono += (mono.empty() ? "" : " ") + es;
    out += (out.empty() ? "" : " + ") + coeff_text(t[1]) + (mono.empty() ? "1" : mono);
  }
  return out;
}

std::string f_text(const Json& j) {
  std::string out;
  for (const auto& t : j) {
    const std::string w = letters(t[0], 'f');
    out += (out.empty() ? "" : " + ") + coeff_text(t[1]) + (w.empty() ? "1" : w);
  }
  return out;
}

void render_text(const Json& j, const std::string& path, std::ostringstream& os) {
  if (is_ratfunc(j)) {
    os << path << " = " << ratfunc_from_json(j).to_string() << '\n';
  } else if (path.ends_with("coeffs") && is_element(j, false)) {
    for (const auto& t : j) os << path << t[0].dump() << " = " << ratfunc_from_json(t[1]).to_string() << '\n';
  } else if (is_element(j, false)) {
    os << path << " = " << f_text(j) << '\n';
  } else if (is_element(j, true)) {
    os << path << " = " << uq_text(j) << '\n';
  } else if (j.is_object()) {
    for (const auto& [key, v] : j.items()) render_text(v, path.empty() ? key : path + "." + key, os);
  } else if (j.is_array() && !j.empty() && !is_int_array(j)) {
    for (std::size_t k = 0; k < j.size(); ++k) render_text(j[k], path + "[" + std::to_string(k) + "]", os);
  } else {
    os << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

bool flat(const Json& j) {
  if (j.is_object()) return false;
  if (!j.is_array()) return true;
  return std::all_of(j.begin(), j.end(), [](const Json& x) { return !x.is_structured() || (x.is_array() && std::none_of(x.begin(), x.end(), [](const Json& y) { return y.is_structured(); })); });
}

// Two-space indentation with arrays of scalars and of scalar arrays kept on one line.
void dump_json(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (flat(j)) {
    os << j.dump();
  } else if (j.is_object()) {
    os << "{\n";
    std::size_t k = 0;
    for (const auto& [key, v] : j.items()) {
      os << pad << Json(key).dump() << ": ";
      dump_json(v, indent + 2, os);
      os << (++k < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << '}';
  } else {
    os << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      os << pad;
      dump_json(j[k], indent + 2, os);
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << ']';
  }
}

}  // namespace

Word parse_word(const std::string& s, int rank) {
  Word w;
  for (int v : parse_ints(s)) {
    if (v < 1 || v > rank) throw UsageError("letter " + std::to_string(v) + " outside 1.." + std::to_string(rank));
    w.push_back(v - 1);
  }
  return w;
}

std::optional<RunConfig> parse_config(int argc, const char* const* argv) {
  CLI::App app{"Quantum nilpotent subalgebras, dual canonical bases and the quantum twist"};
  app.name("qnil");
  app.set_config("--config", "", "TOML/INI configuration file; flags override its values");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig cfg;
  std::string word, order, lambda, u, w, chart, sign = "lowest", fword;
  std::optional<int> b, d;
  app.add_option("--cartan", cfg.cartan_spec, "Cartan type (A2, B2, ...) or inline JSON")->capture_default_str();
  app.add_option("--word", word, "reduced word, 1-based letters such as 1,2,1");
  app.add_option("--height", cfg.height, "weight height bound")->check(CLI::NonNegativeNumber)->capture_default_str();
  app.add_option("--order", order, "total order on I, e.g. 2,1");
  app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--output", cfg.output, "write the report to this file");
  app.add_option("--b", b, "T-system position b");
  app.add_option("--d", d, "T-system position d");
  app.add_option("--lambda", lambda, "dominant weight in fundamental coordinates");
  app.add_option("--u", u, "Weyl group word u");
  app.add_option("--w", w, "Weyl group word w");
  app.add_option("--chart", chart, "chart word for minor coordinates");
  app.add_option("--sign", sign, "minor sign")->check(CLI::IsMember({"lowest", "highest"}));
  app.add_option("--fword", fword, "U_q^- element: an f-word like 1,2 or JSON [[word, coeff], ...]");
  app.add_flag("--inverse", cfg.inverse, "apply Theta for the inverse of w");

  auto* basis = app.add_subcommand("basis", "PBW, dual canonical or lower global basis slices");
  basis->add_option("kind", cfg.kind)->required()->check(CLI::IsMember({"pbw", "dcb", "glow"}));
  app.add_subcommand("twist", "apply Theta_w to an element of U_q^-");
  app.add_subcommand("minor", "unipotent quantum minor");
  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->add_option("kind", cfg.kind)
      ->required()
      ->check(CLI::IsMember({"rootvectors", "pbwrev", "dcbtwist", "revlex", "cofinite", "tsystem", "tsystemtwist", "finitetype", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return std::nullopt;
  } catch (const CLI::ConfigError& e) {
    throw UsageError(std::string("configuration file: ") + e.what());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    cfg.cartan = parse_cartan(cfg.cartan_spec);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid Cartan datum: ") + e.what());
  }
  const int n = cfg.cartan->rank();
  if (app.count("--word")) cfg.word = parse_word(word, n);
  if (app.count("--u")) cfg.u = parse_word(u, n);
  if (app.count("--w")) cfg.w = parse_word(w, n);
  if (app.count("--chart")) cfg.chart = parse_word(chart, n);
  if (app.count("--order")) {
    const Word o = parse_word(order, n);
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int i : o) ++seen[static_cast<std::size_t>(i)];
    if (static_cast<int>(o.size()) != n || std::count(seen.begin(), seen.end(), 1) != n) throw UsageError("--order must list each index once");
    cfg.order = o;
  }
  if (app.count("--lambda")) {
    const auto v = parse_ints(lambda);
    if (static_cast<int>(v.size()) != n) throw UsageError("--lambda needs " + std::to_string(n) + " coordinates");
    Weight l;
    for (int x : v) {
      if (x < 0) throw UsageError("--lambda must be dominant");
      l.coords.push_back(x);
    }
    cfg.lambda = l;
  }
  if (app.count("--fword")) {
    if (!fword.empty() && fword.front() == '[') {
      try {
        FElement x = felement_from_json(Json::parse(fword));
        for (const auto& [wd, c] : x.terms())
          for (int i : wd)
            if (i < 0 || i >= n) throw UsageError("--fword letter out of range");
        cfg.fword = std::move(x);
      } catch (const UsageError&) {
        throw;
      } catch (const std::exception& e) {
        throw UsageError(std::string("malformed --fword: ") + e.what());
      }
    } else {
      cfg.fword = FElement::word(parse_word(fword, n));
    }
  }
  cfg.b = b;
  cfg.d = d;
  cfg.sign = sign == "highest" ? MinorSign::highest : MinorSign::lowest;
  return cfg;
}

RunResult run(const RunConfig& cfg) {
  Json report = header(cfg);
  if (cfg.command == "basis") return run_basis(cfg, std::move(report));
  if (cfg.command == "twist") return run_twist(cfg, std::move(report));
  if (cfg.command == "minor") return run_minor(cfg, std::move(report));
  return run_verify(cfg, std::move(report));
}

std::string render(const Json& report, const std::string& format) {
  if (format == "json") {
    std::ostringstream os;
    dump_json(report, 0, os);
    os << '\n';
    return os.str();
  }
  std::ostringstream os;
  render_text(report, "", os);
  return os.str();
}

}  // namespace qnil::cli
