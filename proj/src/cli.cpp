#include "folzar/cli.hpp"

#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "folzar/bounds.hpp"
#include "folzar/config_io.hpp"
#include "folzar/null_class.hpp"
#include "folzar/zariski.hpp"

namespace folzar::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitSemantic = 2;
constexpr int kExitDivergence = 3;
constexpr int kExitMissingData = 4;

struct Options {
  std::string command;
  std::string input;
  Regime regime = Regime::quarter;
  OracleMode mode = OracleMode::fujita;
  bool structured = false;
  bool jihao = false;
  int max_enum = 20;
};

std::string approx(const Rat& r) {
  const double v = static_cast<double>(static_cast<long double>(r.num()) /
                                       static_cast<long double>(r.den()));
  std::ostringstream os;
  os << "~" << v;
  return os.str();
}

std::string i128str(int128 v) { return detail::int128_to_string(v); }

json manifest_json(const Options& opt) {
  json m;
  m["command"] = opt.command;
  m["input"] = opt.input;
  m["regime"] = to_string(opt.regime);
  m["mode"] = to_string(opt.mode);
  m["format"] = opt.structured ? "structured" : "text";
  m["determinism"] = "seed-free";
  return m;
}

json validation_json(const CurveConfiguration&, const ValidationReport& report) {
  json issues = json::array();
  for (const auto& i : report.issues) {
    json e;
    e["severity"] = i.severity == IssueSeverity::violation ? "violation" : "warning";
    e["code"] = i.code;
    e["subject"] = i.subject;
    e["detail"] = i.detail;
    issues.push_back(e);
  }
  json v;
  v["passed"] = report.passed();
  v["issues"] = issues;
  return v;
}

std::string validation_text(const ValidationReport& report) {
  std::ostringstream os;
  os << (report.passed() ? "validation: PASS" : "validation: FAIL") << " ("
     << report.violation_count() << " violation(s), "
     << report.issues.size() - report.violation_count() << " warning(s))\n";
  for (const auto& i : report.issues) {
    os << "  [" << (i.severity == IssueSeverity::violation ? "violation" : "warning")
       << "] " << i.code << " @ " << i.subject << ": " << i.detail << "\n";
  }
  return os.str();
}

json divisor_json(const CurveConfiguration& config, const QDivisor& d) {
  json out = json::object();
  for (const auto& [i, v] : d.entries()) out[config.curve(i).id] = v.str();
  return out;
}

json hypotheses_json(const CurveConfiguration& config, const HypothesisReport& h) {
  json out;
  out["regime"] = to_string(h.regime);
  out["passed"] = h.passed();
  json v = json::array();
  for (const auto& viol : h.violations) {
    json e;
    e["curve"] = viol.curve >= 0 ? config.curve(viol.curve).id : "";
    e["condition"] = viol.condition;
    e["detail"] = viol.detail;
    v.push_back(e);
  }
  out["violations"] = v;
  return out;
}

json zariski_json(const CurveConfiguration& config, const ZariskiResult& z) {
  json out;
  out["method"] = to_string(z.method);
  out["negative"] = divisor_json(config, z.negative);
  json dots = json::object();
  for (const auto& [i, v] : z.positive_dots) dots[config.curve(i).id] = v.str();
  out["positive_dots"] = dots;
  json viol = json::array();
  for (int c : z.nef_violations) viol.push_back(config.curve(c).id);
  out["nef_violations"] = viol;
  out["support_negative_definite"] = z.support_negative_definite;
  out["floor_zero"] = z.floor_zero;
  return out;
}

void divisor_text(std::ostringstream& os, const CurveConfiguration& config,
                  const QDivisor& d) {
  if (d.empty()) {
    os << "0";
    return;
  }
  bool first = true;
  for (const auto& [i, v] : d.entries()) {
    if (!first) os << " + ";
    os << v.str() << "*" << config.curve(i).id;
    first = false;
  }
}

int enum_cap_from_env(int fallback) {
  const char* env = std::getenv("FOLZAR_MAX_ENUM");
  if (!env) return fallback;
  try {
    return std::stoi(env);
  } catch (...) {
    return fallback;
  }
}

// ---------------------------------------------------------------- commands

int cmd_verify(const Options& opt, const ParsedDocument& doc, std::ostringstream& out) {
  const ValidationReport report = validate_configuration(doc.config, &doc.params);
  if (opt.structured) {
    json j;
    j["manifest"] = manifest_json(opt);
    j["validation"] = validation_json(doc.config, report);
    out << j.dump(2) << "\n";
  } else {
    out << validation_text(report);
  }
  return report.passed() ? kExitOk : kExitSemantic;
}

int cmd_chains(const Options& opt, const ParsedDocument& doc, std::ostringstream& out) {
  const auto f_chains = find_f_chains(doc.config);
  const auto df_chains = maximal_df_chains(doc.config, doc.params);

  if (opt.structured) {
    json j;
    j["manifest"] = manifest_json(opt);
    json fc = json::array();
    for (const Chain& c : f_chains) {
      json e;
      json ids = json::array();
      for (int i : c.curve_indices) ids.push_back(doc.config.curve(i).id);
      e["curves"] = ids;
      e["e"] = c.hj.e;
      e["n"] = i128str(c.hj.n);
      const DFCertificate cert = is_df_chain(doc.config, c, doc.params);
      e["mu_weighted_sum"] = cert.mu_weighted_sum.str();
      e["is_df_chain"] = cert.is_df;
      fc.push_back(e);
    }
    j["f_chains"] = fc;
    json dc = json::array();
    for (const DFChain& c : df_chains) {
      json e;
      json ids = json::array();
      for (int i : c.chain.curve_indices) ids.push_back(doc.config.curve(i).id);
      e["curves"] = ids;
      e["m_divisor"] = divisor_json(doc.config, c.m_divisor);
      dc.push_back(e);
    }
    j["maximal_df_chains"] = dc;
    out << j.dump(2) << "\n";
  } else {
    out << "maximal F-chains: " << f_chains.size() << "\n";
    for (const Chain& c : f_chains) {
      out << "  [";
      for (std::size_t k = 0; k < c.curve_indices.size(); ++k)
        out << (k ? " " : "") << doc.config.curve(c.curve_indices[k]).id;
      out << "]  e = (";
      for (std::size_t k = 0; k < c.hj.e.size(); ++k) out << (k ? "," : "") << c.hj.e[k];
      const DFCertificate cert = is_df_chain(doc.config, c, doc.params);
      out << ")  n = " << i128str(c.hj.n) << "  sum mu_k D.Gamma_k = "
          << cert.mu_weighted_sum.str() << (cert.is_df ? " < 1" : " >= 1") << "\n";
    }
    out << "maximal (D,F)-chains: " << df_chains.size() << "\n";
    for (const DFChain& c : df_chains) {
      out << "  M(D,Theta) = ";
      divisor_text(out, doc.config, c.m_divisor);
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_zariski(const Options& opt, const ParsedDocument& doc, std::ostringstream& out) {
  const HypothesisReport hyp = check_hypotheses(doc.config, doc.params, opt.regime);
  const DecompositionComparison cmp =
      compare_decompositions(doc.config, doc.params, opt.mode, opt.max_enum);
  const auto w_checks = w_inequality_checks(doc.config, doc.params,
                                            maximal_df_chains(doc.config, doc.params));

  json eps_block;
  std::string eps_text;
  bool suite_ok = true;
  if (opt.regime == Regime::eps_canonical) {
    const EpsCanonicalReport rep = eps_canonical_suite(doc.config, doc.params);
    suite_ok = rep.sandwich_ok && rep.nef_claim_violations.empty();
    if (opt.structured) {
      eps_block["i_delta"] = i128str(rep.i_delta);
      eps_block["epsilon"] = rep.epsilon.str();
      eps_block["n_delta"] = divisor_json(doc.config, rep.n_delta);
      eps_block["n_eps"] = divisor_json(doc.config, rep.n_eps);
      eps_block["supports_equal"] = rep.supports_equal;
      json nv = json::array();
      for (int c : rep.nef_claim_violations) nv.push_back(doc.config.curve(c).id);
      eps_block["nef_claim_violations"] = nv;
      eps_block["p_delta_self"] = rep.p_delta_self.str();
      eps_block["p_delta_kx"] = rep.p_delta_kx.str();
      eps_block["p_eps_self"] = rep.p_eps_self.str();
      eps_block["gamma"] = rep.gamma.str();
      eps_block["lower_bound"] = rep.lower_bound.str();
      eps_block["upper_bound"] = rep.upper_bound.str();
      eps_block["sandwich_ok"] = rep.sandwich_ok;
    } else {
      std::ostringstream es;
      es << "eps-canonical suite: i = " << i128str(rep.i_delta)
         << ", epsilon = " << rep.epsilon.str() << "\n"
         << "  nef claim violations: " << rep.nef_claim_violations.size() << "\n"
         << "  P(Delta)^2 = " << rep.p_delta_self.str() << " (" << approx(rep.p_delta_self)
         << "), P(eps)^2 = " << rep.p_eps_self.str() << " (" << approx(rep.p_eps_self)
         << ")\n"
         << "  volume sandwich " << rep.lower_bound.str() << " <= " << rep.p_eps_self.str()
         << " <= " << rep.upper_bound.str() << " : "
         << (rep.sandwich_ok ? "holds" : "FAILS") << "\n";
      eps_text = es.str();
    }
  }

  if (opt.structured) {
    json j;
    j["manifest"] = manifest_json(opt);
    j["hypotheses"] = hypotheses_json(doc.config, hyp);
    j["theorem"] = zariski_json(doc.config, cmp.theorem_result);
    j["oracle"] = zariski_json(doc.config, cmp.oracle_result);
    j["equal"] = cmp.equal;
    json diffs = json::array();
    for (const auto& d : cmp.differences) {
      json e;
      e["curve"] = doc.config.curve(d.curve).id;
      e["theorem"] = d.theorem_coeff.str();
      e["oracle"] = d.oracle_coeff.str();
      diffs.push_back(e);
    }
    j["differences"] = diffs;
    json wc = json::array();
    for (const auto& w : w_checks) {
      json e;
      e["curve"] = doc.config.curve(w.curve).id;
      e["theta"] = w.theta.str();
      e["value"] = w.value.str();
      e["ok"] = w.ok;
      wc.push_back(e);
    }
    j["w_inequality"] = wc;
    if (!eps_block.is_null()) j["eps_canonical"] = eps_block;
    out << j.dump(2) << "\n";
  } else {
    out << (cmp.equal ? "THEOREM == ORACLE" : "THEOREM != ORACLE") << " ("
        << to_string(opt.mode) << ")\n";
    out << "hypotheses (" << to_string(opt.regime) << "): "
        << (hyp.passed() ? "pass" : "violated") << "\n";
    for (const auto& v : hyp.violations)
      out << "  (" << v.condition << ") "
          << (v.curve >= 0 ? doc.config.curve(v.curve).id : "-") << ": " << v.detail
          << "\n";
    out << "N(D) = ";
    divisor_text(out, doc.config, cmp.theorem_result.negative);
    out << "\n";
    if (!cmp.equal) {
      out << "divergence:\n";
      for (const auto& d : cmp.differences)
        out << "  " << doc.config.curve(d.curve).id << ": theorem "
            << d.theorem_coeff.str() << " vs oracle " << d.oracle_coeff.str() << "\n";
    }
    for (const auto& [i, v] : cmp.theorem_result.positive_dots)
      out << "  P." << doc.config.curve(i).id << " = " << v.str() << " (" << approx(v)
          << ")\n";
    for (const auto& w : w_checks)
      out << "  (W + theta E).E on " << doc.config.curve(w.curve).id << " = "
          << w.value.str() << " at theta = " << w.theta.str()
          << (w.ok ? "" : "  [NEGATIVE]") << "\n";
    out << eps_text;
  }
  if (!cmp.equal) return kExitDivergence;
  if (!suite_ok) return kExitDivergence;
  return kExitOk;
}

int cmd_classify(const Options& opt, const ParsedDocument& doc, std::ostringstream& out) {
  const auto df_chains = maximal_df_chains(doc.config, doc.params);
  const ZariskiResult z = build_theorem_decomposition(doc.config, doc.params);
  const std::vector<int> locus = null_locus(doc.config, z);
  const auto components = connected_components(doc.config, locus);

  const bool broken = !z.nef_violations.empty();
  bool any_unclassified = false;
  json comp_array = json::array();
  std::ostringstream text;
  for (const auto& comp : components) {
    const NullComponentClass cls =
        classify_component(doc.config, doc.params, comp, z, df_chains);
    any_unclassified = any_unclassified || cls.tag == NullTag::unclassified;
    const EglAdvisory advisory = egl_torsion_guard(doc.config, doc.params, comp, cls);

    bool have_cycle = false;
    FundamentalCycle cycle;
    try {
      cycle = fundamental_cycle(doc.config, comp);
      have_cycle = true;
    } catch (const precondition_error&) {
      have_cycle = false;
    }

    if (opt.structured) {
      json e;
      json ids = json::array();
      for (int c : comp) ids.push_back(doc.config.curve(c).id);
      e["curves"] = ids;
      e["tag"] = to_string(cls.tag);
      e["singularity_type"] = to_string(cls.singularity_type);
      json ev = json::array();
      for (const auto& [c, text_item] : cls.evidence) {
        json pair = json::array();
        pair.push_back(c >= 0 ? doc.config.curve(c).id : "");
        pair.push_back(text_item);
        ev.push_back(pair);
      }
      e["evidence"] = ev;
      if (have_cycle) {
        json fc;
        fc["coefficients"] = divisor_json(doc.config, cycle.cycle);
        fc["pa"] = cycle.pa;
        e["fundamental_cycle"] = fc;
      } else {
        e["fundamental_cycle"] = nullptr;
      }
      json adv;
      adv["attached"] = advisory.attached;
      adv["note"] = advisory.note;
      e["egl_advisory"] = adv;
      comp_array.push_back(e);
    } else {
      text << "component {";
      for (std::size_t k = 0; k < comp.size(); ++k)
        text << (k ? " " : "") << doc.config.curve(comp[k]).id;
      text << "} -> " << to_string(cls.tag) << " / " << to_string(cls.singularity_type)
           << "\n";
      for (const auto& [c, note] : cls.evidence)
        text << "    " << (c >= 0 ? doc.config.curve(c).id : "*") << ": " << note << "\n";
      if (have_cycle) {
        text << "    fundamental cycle Z = ";
        divisor_text(text, doc.config, cycle.cycle);
        text << ", p_a(Z) = " << cycle.pa << "\n";
      } else {
        text << "    fundamental cycle: not defined (component not negative definite)\n";
      }
      if (advisory.attached) text << "    advisory: " << advisory.note << "\n";
    }
  }

  if (opt.structured) {
    json j;
    j["manifest"] = manifest_json(opt);
    json locus_ids = json::array();
    for (int c : locus) locus_ids.push_back(doc.config.curve(c).id);
    j["null_locus"] = locus_ids;
    j["components"] = comp_array;
    j["negative"] = divisor_json(doc.config, z.negative);
    json nv = json::array();
    for (int c : z.nef_violations) nv.push_back(doc.config.curve(c).id);
    j["nef_violations"] = nv;
    out << j.dump(2) << "\n";
  } else {
    out << "null locus: {";
    for (std::size_t k = 0; k < locus.size(); ++k)
      out << (k ? " " : "") << doc.config.curve(locus[k]).id;
    out << "}  (" << components.size() << " component(s))\n";
    if (broken) {
      out << "warning: positive part is negative against";
      for (int c : z.nef_violations) out << " " << doc.config.curve(c).id;
      out << "; the classification below reads a broken decomposition\n";
    }
    out << text.str();
  }
  return (any_unclassified || broken) ? kExitSemantic : kExitOk;
}

int cmd_bounds(const Options& opt, const ParsedDocument& doc, std::ostringstream& out) {
  const auto df_chains = maximal_df_chains(doc.config, doc.params);
  const ZariskiResult z = build_theorem_decomposition(doc.config, doc.params);
  if (!z.nef_violations.empty()) {
    out << "positive part is not nef against the configuration; bounds are not "
           "defined\n";
    return kExitSemantic;
  }
  const BoundsReport rep = bounds_report(doc.config, doc.params, z.negative, opt.jihao);

  // EGL advisories ride along with the thresholds.
  json advisories = json::array();
  std::ostringstream adv_text;
  for (const auto& comp : connected_components(doc.config, null_locus(doc.config, z))) {
    const NullComponentClass cls =
        classify_component(doc.config, doc.params, comp, z, df_chains);
    const EglAdvisory advisory = egl_torsion_guard(doc.config, doc.params, comp, cls);
    if (cls.tag == NullTag::egl_nodal || cls.tag == NullTag::egl_cycle) {
      json a;
      json ids = json::array();
      for (int c : comp) ids.push_back(doc.config.curve(c).id);
      a["curves"] = ids;
      a["attached"] = advisory.attached;
      a["note"] = advisory.note;
      advisories.push_back(a);
      adv_text << "  egl advisory {";
      for (std::size_t k = 0; k < comp.size(); ++k)
        adv_text << (k ? " " : "") << doc.config.curve(comp[k]).id;
      adv_text << "}: " << advisory.note << "\n";
    }
  }

  if (opt.structured) {
    json j;
    j["manifest"] = manifest_json(opt);
    j["i_index"] = i128str(rep.i_index);
    j["p_self"] = rep.p_self.str();
    j["p_kx"] = rep.p_kx.str();
    j["a_self"] = rep.a_self.str();
    j["a_kx"] = rep.a_kx.str();
    j["alpha"] = i128str(rep.alpha);
    j["m_frak"] = rep.m_frak_value.str();
    j["alpha_dominates"] = rep.alpha_dominates;
    j["vanishing_threshold"] = i128str(rep.vanishing_threshold);
    j["birational_threshold"] = i128str(rep.birational_threshold);
    if (rep.n_frak_value)
      j["n_frak"] = i128str(*rep.n_frak_value);
    else
      j["n_frak"] = nullptr;
    json rr;
    rr["quadratic"] = rep.rr_quadratic.str();
    rr["linear"] = rep.rr_linear.str();
    rr["constant"] = rep.rr_constant.str();
    j["rr_coeffs"] = rr;
    j["jihao_variant"] = rep.jihao_variant;
    j["egl_advisories"] = advisories;
    out << j.dump(2) << "\n";
  } else {
    out << "i(D,F) = " << i128str(rep.i_index) << ", P^2 = " << rep.p_self.str() << " ("
        << approx(rep.p_self) << "), K_X.P = " << rep.p_kx.str() << "\n";
    out << "A = i P: A^2 = " << rep.a_self.str() << ", K_X.A = " << rep.a_kx.str()
        << "\n";
    out << "alpha = " << i128str(rep.alpha) << ", M(A,0) = " << rep.m_frak_value.str()
        << " (" << approx(rep.m_frak_value) << ")"
        << (rep.jihao_variant ? "  [nef-variant thresholds]" : "") << "\n";
    out << "thresholds: vanishing m >= " << i128str(rep.vanishing_threshold)
        << ", birational m >= " << i128str(rep.birational_threshold) << "\n";
    if (rep.n_frak_value) out << "n_frak = " << i128str(*rep.n_frak_value) << "\n";
    out << "dim H^0(m(K_F+D)) = " << rep.rr_quadratic.str() << " m^2 + "
        << rep.rr_linear.str() << " m + " << rep.rr_constant.str()
        << " for admissible m\n";
    out << adv_text.str();
  }
  return kExitOk;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult result;
  Options opt;
  opt.max_enum = enum_cap_from_env(20);

  CLI::App app{"exact-arithmetic engine for adjoint divisors on foliated surfaces"};
  app.require_subcommand(1);

  std::string regime_name = "quarter";
  std::string mode_name = "fujita";
  std::string format_name = "text";

  auto add_common = [&](CLI::App* sub, bool with_mode, bool with_jihao) {
    sub->add_option("input", opt.input, "configuration document")->required();
    sub->add_option("--regime", regime_name,
                    "hypothesis regime: quarter|half|unit|delta-only|eps-canonical");
    sub->add_option("--format", format_name, "output format: text|structured");
    if (with_mode)
      sub->add_option("--mode", mode_name, "oracle mode: fujita|enumeration");
    if (with_jihao)
      sub->add_flag("--jihao", opt.jihao,
                    "nef-variant vanishing threshold from the untwisted bound");
  };

  add_common(app.add_subcommand("verify", "validate a configuration document"), false,
             false);
  add_common(app.add_subcommand("chains", "chain inventory with certificates"), false,
             false);
  add_common(app.add_subcommand("zariski", "theorem vs oracle decomposition"), true,
             false);
  add_common(app.add_subcommand("classify", "null-locus classification"), false, false);
  add_common(app.add_subcommand("bounds", "effective thresholds and dimensions"), false,
             true);

  std::vector<const char*> argv;
  argv.push_back("folzar");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    if (e.get_exit_code() == 0) {
      // --help and friends.
      result.exit_code = kExitOk;
      std::ostringstream help;
      help << app.help();
      result.out = help.str();
      return result;
    }
    os << "argument error: " << e.what() << "\n";
    result.err = os.str();
    result.exit_code = kExitInput;
    return result;
  }

  opt.command = app.get_subcommands().front()->get_name();
  std::ostringstream out;
  try {
    opt.regime = regime_from_string(regime_name);
    if (mode_name == "fujita")
      opt.mode = OracleMode::fujita;
    else if (mode_name == "enumeration")
      opt.mode = OracleMode::enumeration;
    else
      throw input_error("unknown oracle mode '" + mode_name + "'");
    if (format_name == "structured")
      opt.structured = true;
    else if (format_name != "text")
      throw input_error("unknown format '" + format_name + "'");

    const ParsedDocument doc = load_document(opt.input);

    if (opt.command == "verify") {
      result.exit_code = cmd_verify(opt, doc, out);
    } else {
      const ValidationReport report = validate_configuration(doc.config, &doc.params);
      if (!report.passed()) {
        out << validation_text(report);
        result.exit_code = kExitSemantic;
        result.out = out.str();
        return result;
      }
      if (opt.command == "chains")
        result.exit_code = cmd_chains(opt, doc, out);
      else if (opt.command == "zariski")
        result.exit_code = cmd_zariski(opt, doc, out);
      else if (opt.command == "classify")
        result.exit_code = cmd_classify(opt, doc, out);
      else
        result.exit_code = cmd_bounds(opt, doc, out);
    }
  } catch (const input_error& e) {
    result.err = std::string("input error: ") + e.what() + "\n";
    result.exit_code = kExitInput;
  } catch (const missing_data_error& e) {
    result.err = std::string("missing data: ") + e.what() + "\n";
    result.exit_code = kExitMissingData;
  } catch (const std::exception& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitSemantic;
  }
  result.out += out.str();
  return result;
}

}  // namespace folzar::cli
