// satake: command line front end.
#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "satake/error.hpp"
#include "satake/io.hpp"
#include "satake/restricted.hpp"
#include "satake/theta.hpp"

using namespace satake;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Generic = 1, Parse = 2, Verification = 3, Resource = 4 };

struct Config {
  std::string spec, family, chi, format = "text", filter = "gsat";
  int rank_lo = 1, rank_hi = 0, height = 8;
  std::size_t budget = 2000000;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string labels(const CartanMatrix& a, const NodeSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + a.label(s[k]);
  return out + "}";
}

json label_list(const CartanMatrix& a, const NodeSet& s) {
  json j = json::array();
  for (int i : s) j.push_back(a.label(i));
  return j;
}

json qvec_json(const QVec& v) {
  json j = json::array();
  for (const auto& q : v) j.push_back(to_string(q));
  return j;
}

json qmat_json(const QMat& m) {
  json j = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    j.push_back(row);
  }
  return j;
}

EnrichedDecoration load(const Config& c) {
  EnrichedDecoration e = parse_spec(c.spec);
  if (!c.chi.empty()) e.chi = parse_chi(*e.base.a, c.chi);
  return e;
}

void emit(const Config& c, const json& j, const std::string& text) {
  if (c.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_check(const Config& c) {
  EnrichedDecoration e = load(c);
  const Decoration& d = e.base;
  const CartanMatrix& a = *d.a;
  json j;
  j["spec"] = render(e);
  Verdict comp = is_compatible(d);
  j["compatible"] = comp.ok;
  if (!comp.ok) j["reason"] = comp.reason;
  std::ostringstream t;
  t << "spec        " << render(e) << "\n";
  t << "compatible  " << yes(comp.ok) << (comp.ok ? "" : " (" + comp.reason + ")") << "\n";
  if (comp.ok) {
    bool gsat = is_generalized_satake(d);
    OrbitReport orb = special_orbits(d);
    Verdict chi = in_tilde_H_theta(e);
    j["gsat"] = gsat;
    j["satake"] = is_satake(d);
    j["odd"] = label_list(a, orb.odd);
    j["I_star"] = label_list(a, orb.I_star);
    j["I_diff"] = label_list(a, orb.I_diff);
    j["I_ns"] = label_list(a, orb.I_ns);
    j["I_nsf"] = label_list(a, orb.I_nsf);
    j["chi_valid"] = chi.ok;
    j["enriched_gsat"] = chi.ok && is_enriched_gsat(e);
    j["X_type"] = classify_type(a, d.x).name();
    t << "gsat        " << yes(gsat) << "\n";
    t << "satake      " << yes(is_satake(d)) << "\n";
    t << "odd         " << labels(a, orb.odd) << "\n";
    t << "X type      " << classify_type(a, d.x).name() << "\n";
    t << "I*          " << labels(a, orb.I_star) << "\n";
    t << "I_diff      " << labels(a, orb.I_diff) << "\n";
    t << "I_ns        " << labels(a, orb.I_ns) << "\n";
    t << "I_nsf       " << labels(a, orb.I_nsf) << "\n";
    t << "chi valid   " << yes(chi.ok) << (chi.ok ? "" : " (" + chi.reason + ")") << "\n";
    if (gsat) {
      RestrictedTypeLabel r = restricted_type(d, c.height);
      j["restricted_type"] = r.name;
      t << "restricted  " << r.name << "\n";
    }
  }
  emit(c, j, t.str());
  return Ok;
}

std::vector<Decoration> classify_family(const Config& c, int rank) {
  CartanPtr a = share(catalogue(c.family, rank));
  Filter f = c.filter == "compatible" ? Filter::Compatible : c.filter == "satake" ? Filter::Satake : Filter::GSat;
  return orbit_classes(enumerate(a, f));
}

int cmd_classify(const Config& c) {
  int hi = c.rank_hi > 0 ? c.rank_hi : c.rank_lo;
  std::vector<TableEntry> rows;
  json diffs = json::array();
  bool table_ok = true;
  for (int r = c.rank_lo; r <= hi; ++r) {
    auto reps = classify_family(c, r);
    for (const auto& d : reps) rows.push_back(table_entry(d, c.height));
    if (c.family == "A" && c.filter == "gsat") {
      auto table = table_typeA(r);
      std::vector<Decoration> expect;
      for (const auto& row : table) expect.push_back(canonical(row.dec, diagram_automorphisms(*row.dec.a)));
      for (const auto& d : reps) {
        bool found = std::find(expect.begin(), expect.end(), d) != expect.end();
        if (!found) {
          diffs.push_back({{"rank", r}, {"extra", render(d)}});
          table_ok = false;
        }
      }
      for (const auto& d : expect)
        if (std::find(reps.begin(), reps.end(), d) == reps.end()) {
          diffs.push_back({{"rank", r}, {"missing", render(d)}});
          table_ok = false;
        }
    }
  }
  if (c.format == "tsv") {
    std::cout << table_tsv(rows);
  } else if (c.format == "json") {
    json j{{"rows", table_json(rows)}};
    if (c.family == "A" && c.filter == "gsat") j["table_diff"] = diffs;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : rows)
      std::cout << r.label << "  restricted=" << r.restricted_type << "  odd={" << r.odd_nodes << "}  s={"
                << r.special_orbits << "}\n";
    if (c.family == "A" && c.filter == "gsat")
      std::cout << "type-A table " << (table_ok ? "matches" : "differs: " + diffs.dump()) << "\n";
  }
  return table_ok ? Ok : Verification;
}

int cmd_table(const Config& c) {
  int hi = c.rank_hi > 0 ? c.rank_hi : c.rank_lo;
  std::vector<TableEntry> rows;
  for (int n = c.rank_lo; n <= hi; ++n)
    for (const auto& r : table_typeA(n)) {
      TableEntry t = table_entry(r.dec, c.height, r.label, r.constraints);
      t.restricted_type = r.restricted;  // as listed; classify cross-checks against the computed type
      rows.push_back(t);
    }
  if (c.format == "json")
    std::cout << json{{"rows", table_json(rows)}}.dump(2) << "\n";
  else
    std::cout << table_tsv(rows);
  return Ok;
}

int cmd_restricted(const Config& c) {
  EnrichedDecoration e = load(c);
  const Decoration& d = e.base;
  require_compatible(d);
  RestrictedRootSystem r = restricted_system(d, c.height);
  json j{{"spec", render(d)}, {"gsat", is_generalized_satake(d)}, {"height", r.height_bound}, {"complete", r.complete}};
  json simple = json::array();
  for (std::size_t k = 0; k < r.simple.size(); ++k)
    simple.push_back({{"node", d.a->label(r.I_star[k])}, {"alpha_bar", qvec_json(r.simple[k])}});
  j["simple"] = simple;
  j["gram"] = qmat_json(r.gram);
  j["multiples"] = r.multiples;
  j["tilde_I"] = label_list(*d.a, r.tilde_I);
  json roots = json::array();
  for (std::size_t k = 0; k < r.roots.size(); ++k) roots.push_back(qvec_json(r.coords[k]));
  j["roots"] = roots;
  std::ostringstream t;
  t << "spec      " << render(d) << "\n";
  t << "I~        " << labels(*d.a, r.tilde_I) << "\n";
  for (std::size_t k = 0; k < r.simple.size(); ++k)
    t << "alpha_bar_" << d.a->label(r.I_star[k]) << " = " << to_string(r.simple[k]) << "\n";
  t << "gram      ";
  for (int p = 0; p < r.gram.rows(); ++p) t << (p ? " | " : "") << to_string(r.gram.row(p));
  t << "\n|roots|   " << r.roots.size() << (r.complete ? "" : " (within height " + std::to_string(r.height_bound) + ")")
    << "\n";
  if (is_generalized_satake(d)) {
    RestrictedTypeLabel lab = classify_restricted(r.gram, r.multiples);
    j["restricted_type"] = lab.name;
    j["recognized"] = lab.recognized;
    CoxeterMatrix m = restricted_coxeter_matrix(d);
    j["coxeter"] = m;
    t << "type      " << lab.name << "\n";
    t << "coxeter   " << json(m).dump() << "\n";
  }
  emit(c, j, t.str());
  return Ok;
}

json level_json(const KLevel& lv, const TruncatedAlgebra& g) {
  return {{"degree", lv.d},
          {"dim", lv.dim_F},
          {"dim_n_minus", g.dim_n_minus(lv.d)},
          {"checks", {{"spanning", lv.F_equals_D}, {"iwasawa_direct", lv.iwasawa_direct}, {"iwasawa_size", lv.iwasawa_size}}}};
}

int cmd_verify(const Config& c) {
  EnrichedDecoration e = load(c);
  const Decoration& d = e.base;
  const CartanMatrix& a = *d.a;
  require_compatible(d);
  if (auto v = in_tilde_H_theta(e); !v) throw Error(Errc::InvalidCharacter, v.reason);
  bool gsat = is_generalized_satake(d);
  bool egsat = is_enriched_gsat(e);
  bool finite = is_finite_type(a, all_nodes(a));
  bool consistent = true;
  json checks;
  std::ostringstream t;
  t << "spec            " << render(e) << "\n";
  t << "gsat            " << yes(gsat) << "   enriched gsat " << yes(egsat) << "\n";

  Battery b = gsat_battery(d);
  json bj;
  for (int k = 0; k < 8; ++k) bj[Battery::names[k]] = b.flags[k];
  bool battery_ok = b.all_equal() && b.flags[4] == gsat;
  checks["battery"] = {{"flags", bj}, {"consistent", battery_ok}};
  consistent = consistent && battery_ok;
  t << "battery         " << (b.flags[0] ? "all-true" : "all-false") << (battery_ok ? "" : " INCONSISTENT") << "\n";

  if (gsat) {
    CoxeterReport cx = coxeter_report(d);
    checks["coxeter"] = {{"consistent", cx.consistent()}, {"matrix", cx.on_V}};
    consistent = consistent && cx.consistent();
    t << "coxeter         " << (cx.consistent() ? "consistent" : "MISMATCH") << "\n";
    checks["restricted_type"] = restricted_type(d, c.height).name;
    t << "restricted      " << checks["restricted_type"].get<std::string>() << "\n";
  }
  if (finite) {
    ThreeGroups g = three_groups(d, c.budget);
    bool ok = g.coincide() == gsat && (!gsat || g.kernel_is_W_X);
    checks["three_groups"] = {{"w_bar", g.w_bar},   {"w_phi", g.w_phi}, {"w_tilde", g.w_tilde},
                              {"w_tilde_res", g.w_tilde_res}, {"kernel_is_W_X", g.kernel_is_W_X},
                              {"coincide", g.coincide()}, {"consistent", ok}};
    consistent = consistent && ok;
    t << "three groups    (" << g.w_bar << ", " << g.w_phi << ", " << g.w_tilde << ")"
      << (g.w_tilde_res ? "" : " <s~> does not preserve V^sigma")
      << (g.coincide() ? " coincide" : " differ") << "\n";
  }

  AlgebraPtr alg = TruncatedAlgebra::build(d.a, c.height);
  ThetaMap th(e, alg);
  json serre = json::array();
  bool serre_ok = true;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      if (i == j) continue;
      SerreReport sr = serre_deviation(th, i, j, false);
      serre.push_back({{"i", a.label(i)}, {"j", a.label(j)}, {"M", sr.M}, {"case", to_string(sr.which)},
                       {"subcase", sr.subcase}, {"match", sr.match}});
      serre_ok = serre_ok && sr.match;
    }
  checks["serre"] = {{"pairs", serre}, {"ok", serre_ok}};
  t << "serre           " << (serre_ok ? "all match" : "CASE MISMATCH") << "\n";

  KReport k = k_check(th);
  json levels = json::array();
  for (const auto& lv : k.levels) levels.push_back(level_json(lv, *alg));
  bool k_ok = k.spanning == egsat && k.deviations_ok == egsat;
  bool iw_ok = k.iwasawa == egsat && (!egsat || k.n_plus_split);
  checks["k"] = {{"spanning", k.spanning},         {"deviations", k.deviations_ok},
                 {"pseudo_fixed", k.pseudo_fixed}, {"levels_checked", k.levels_checked},
                 {"consistent", k_ok}};
  checks["iwasawa"] = {{"holds", k.iwasawa}, {"n_plus_split", k.n_plus_split}, {"consistent", iw_ok}};
  consistent = consistent && serre_ok && k_ok && iw_ok;
  t << "k spanning      " << yes(k.spanning) << "   deviations " << yes(k.deviations_ok) << "   pseudo-fixed "
    << yes(k.pseudo_fixed) << "\n";
  t << "iwasawa         " << (k.iwasawa ? "holds" : "fails") << "\n";

  if (alg->complete() && egsat) {
    KPrimeReport kp = kprime_split(th);
    checks["kprime"] = {{"dim_k", kp.dim_k}, {"dim_kprime", kp.dim_kprime}, {"expected_codim", kp.expected_codim},
                        {"ok", kp.ok()}};
    consistent = consistent && kp.ok();
    t << "k' split        dim k " << kp.dim_k << ", dim k' " << kp.dim_kprime << (kp.ok() ? " ok" : " FAILED") << "\n";
  }
  t << "verdict         " << (consistent ? "consistent" : "INCONSISTENT") << "\n";
  json j{{"spec", render(e)}, {"gsat", gsat}, {"enriched_gsat", egsat}, {"height", c.height},
         {"levels", levels}, {"checks", checks}, {"consistent", consistent}};
  emit(c, j, t.str());
  if (!serre_ok) throw Error(Errc::CaseMismatch, "Serre deviation disagrees with the closed form");
  return consistent ? Ok : Verification;
}

int cmd_render(const Config& c) {
  EnrichedDecoration e = load(c);
  if (c.format == "dot")
    std::cout << to_dot(e.base);
  else if (c.format == "json")
    std::cout << decoration_to_json(e).dump(2) << "\n";
  else
    std::cout << render(e) << "\n";
  return Ok;
}

int exit_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::NotGCM:
    case Errc::NotSymmetrizable:
    case Errc::Decomposable:
      return Parse;
    case Errc::RankGuardExceeded:
    case Errc::BeyondBruteForce:
    case Errc::OrderCapExceeded:
    case Errc::TruncationOverflow:
      return Resource;
    case Errc::CaseMismatch:
    case Errc::NotCompatible:
    case Errc::InvalidCharacter:
    case Errc::NotGeneralizedSatake:
      return Verification;
    default:
      return Generic;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Satake diagrams, restricted root systems and pseudo-symmetric pairs"};
  app.require_subcommand(1);
  Config c;
  auto common = [&](CLI::App* s, bool formats_dot = false) {
    s->add_option("--height", c.height, "truncation height")->check(CLI::PositiveNumber);
    s->add_option("--budget", c.budget, "brute-force group size budget")->check(CLI::PositiveNumber);
    std::vector<std::string> fmts{"text", "json", "tsv"};
    if (formats_dot) fmts.push_back("dot");
    s->add_option("--format", c.format, "output format")->check(CLI::IsMember(fmts));
    s->add_option("--chi", c.chi, "character values, e.g. 1:2,2:1/2|1");
  };
  auto* check = app.add_subcommand("check", "diagnostics for one decoration");
  check->add_option("spec", c.spec, "diagram spec such as A4[X=2,3; tau=1:4]")->required();
  common(check);
  auto* classify = app.add_subcommand("classify", "enumerate orbit representatives of a family");
  classify->add_option("family", c.family, "family token such as A, G, C~")->required();
  classify->add_option("rank", c.rank_lo, "rank (or lower end of a range)")->required();
  classify->add_option("rank_hi", c.rank_hi, "upper end of the rank range");
  classify->add_option("--filter", c.filter)->check(CLI::IsMember({"compatible", "gsat", "satake"}));
  common(classify);
  auto* verify = app.add_subcommand("verify", "run the structural checks on one decoration");
  verify->add_option("spec", c.spec)->required();
  common(verify);
  auto* restricted = app.add_subcommand("restricted", "restricted root system of one decoration");
  restricted->add_option("spec", c.spec)->required();
  common(restricted);
  auto* table = app.add_subcommand("table", "built-in type A table");
  table->add_option("rank", c.rank_lo)->required();
  table->add_option("rank_hi", c.rank_hi);
  common(table);
  auto* rnd = app.add_subcommand("render", "render a decoration as text, JSON or DOT");
  rnd->add_option("spec", c.spec)->required();
  common(rnd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? Ok : Parse;
  }
  try {
    if (*check) return cmd_check(c);
    if (*classify) return cmd_classify(c);
    if (*verify) return cmd_verify(c);
    if (*restricted) return cmd_restricted(c);
    if (*table) return cmd_table(c);
    if (*rnd) return cmd_render(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Generic;
  }
  return Generic;
}
