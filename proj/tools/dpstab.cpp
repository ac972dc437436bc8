// Command-line surface: exact stability computations for del Pezzo
// fibration models in weighted projective spaces.
#include <CLI11.hpp>

#include "dpstab/destab.hpp"
#include "dpstab/familyfile.hpp"
#include "dpstab/pic.hpp"
#include "dpstab/report.hpp"
#include "dpstab/singclass.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dpstab;

namespace {

Json rational_json(const Rational& r) { return Json(r.str()); }

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const Rational& r : v) a.push_back(rational_json(r));
  return a;
}

Json mu_json(const HMKValue& v) {
  Json a = Json::array();
  a.push_back(rational_json(v.first));
  if (v.second) a.push_back(rational_json(*v.second));
  return a;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& s, char sep) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(Rational(tok));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SpaceId space_of_family(const FamilyFile& ff) {
  auto id = identify_space(ff.ws, ff.degree, ff.degree_H);
  if (!id) throw std::invalid_argument("family is not in one of the preset spaces");
  return *id;
}

LineBundleSpec resolve_bundle(const FamilyFile& ff, const std::string& name) {
  if (name.find(':') != std::string::npos) {
    std::vector<Rational> coeffs = parse_rational_list(name, ':');
    int s = ff.ws.s();
    if (static_cast<int>(coeffs.size()) != s + 2)
      throw std::invalid_argument("generic bundle needs s+2 coefficients a0:a1:...:a_{s+1}");
    GenericCoeffs gc;
    gc.a0 = coeffs[0];
    for (int i = 0; i < s; ++i) gc.a.push_back(coeffs[static_cast<size_t>(i) + 1]);
    gc.a_last = coeffs.back();
    return LineBundleSpec::generic(ff.ws, gc);
  }
  return preset_bundle(space_of_family(ff), name);
}

SearchBudget parse_budget(const std::string& s) {
  SearchBudget b;
  if (s.empty()) return b;
  std::vector<int> v = parse_int_list(s);
  if (v.size() != 4)
    throw std::invalid_argument("budget is Wmax,rounds,tcap,steps");
  b.w_max = v[0];
  b.hill_rounds = v[1];
  b.t_degree_cap = v[2];
  b.max_steps = v[3];
  return b;
}

Json budget_json(const SearchBudget& b) {
  Json j;
  j["w_max"] = b.w_max;
  j["hill_rounds"] = b.hill_rounds;
  j["t_degree_cap"] = b.t_degree_cap;
  j["max_steps"] = b.max_steps;
  return j;
}

Json certificate_json(const Certificate& cert) {
  Json j;
  j["status"] = cert.status == CertStatus::SemistableWithinBudget ? "SEMISTABLE_WITHIN_BUDGET"
                                                                  : "BUDGET_EXHAUSTED";
  Json steps = Json::array();
  for (const StepLog& s : cert.steps) {
    Json st;
    if (s.substitution) st["substitution"] = *s.substitution;
    st["rho"] = s.rho;
    st["mu"] = mu_json(s.mu);
    st["note"] = s.note;
    st["hash_before"] = s.hash_before;
    st["hash_after"] = s.hash_after;
    if (s.obstructed_reduction) st["obstructed_reduction"] = true;
    steps.push_back(std::move(st));
  }
  j["steps"] = std::move(steps);
  j["cumulative_mu"] = mu_json(cert.cumulative_mu);
  j["budget"] = budget_json(cert.budget);
  if (!cert.warnings.empty()) j["warnings"] = cert.warnings;
  return j;
}

int cmd_invariants(const std::string& weights, int degree) {
  WeightSystem ws(parse_int_list(weights));
  pic::FermatData fd = pic::fermat_counts(ws, degree);
  pic::DeltaCoeffs dc = pic::hmk_delta_coeffs(ws, degree);
  pic::EffectivityCone cone = pic::effectivity_cone(ws, degree);
  Json payload;
  payload["weights"] = ws.weights();
  payload["d"] = degree;
  payload["D"] = fd.D;
  payload["M"] = fd.M;
  Json d0;
  d0["a0"] = rational_json(dc.delta0.a0);
  Json arr = rationals_json(dc.delta0.a);
  arr.push_back(rational_json(dc.delta0.a_last));
  d0["a"] = arr;
  payload["delta0"] = d0;
  Json deltas = Json::array();
  for (const GenericCoeffs& g : dc.delta) {
    Json one;
    one["a0"] = rational_json(g.a0);
    Json a = rationals_json(g.a);
    a.push_back(rational_json(g.a_last));
    one["a"] = a;
    deltas.push_back(one);
  }
  payload["deltas"] = deltas;
  GenericCoeffs bal = cone.balanced();
  Json balv = rationals_json(bal.a);
  balv.insert(balv.begin(), rational_json(bal.a0));
  balv.push_back(rational_json(bal.a_last));
  payload["balanced"] = balv;
  Json conej;
  conej["equality"] = rationals_json(cone.equality);
  Json ineq = Json::array();
  for (const auto& row : cone.inequalities) ineq.push_back(rationals_json(row));
  conej["inequalities"] = ineq;
  payload["cone"] = conej;
  std::cout << make_report("invariants", weights + "|" + std::to_string(degree), payload).dump(2)
            << "\n";
  return 0;
}

int cmd_table(std::string space_name, const std::string& weights, int degree, int degree2) {
  if (space_name.empty()) {
    if (weights.empty() || degree == 0 || degree2 == 0)
      throw std::invalid_argument("table needs --space or --weights/--degree/--degree2");
    auto id = identify_space(WeightSystem(parse_int_list(weights)), degree, degree2);
    if (!id || !space_is_ci(*id))
      throw std::invalid_argument("no character table for this space");
    space_name = *id == SpaceId::Dp1CI ? "dp1" : "dp2";
  }
  SpaceId space;
  if (space_name == "dp1")
    space = SpaceId::Dp1CI;
  else if (space_name == "dp2")
    space = SpaceId::Dp2CI;
  else
    throw std::invalid_argument("space must be dp1 or dp2");
  pic::CharacterTable t = pic::character_table(space);
  Json payload;
  payload["space"] = space_name;
  payload["bundles"] = t.bundles;
  payload["columns"] = t.columns;
  payload["table"] = t.chi;
  Json expr;
  for (int j = t.basis_count; j < static_cast<int>(t.bundles.size()); ++j) {
    const std::string& name = t.bundles[static_cast<size_t>(j)];
    expr[name] = rationals_json(pic::express_divisor(space, name));
  }
  payload["expressions"] = expr;
  std::cout << make_report("table", space_name, payload).dump(2) << "\n";
  return 0;
}

int cmd_mu(const std::string& path, const std::string& rho_s, const std::string& bundle) {
  std::string bytes = read_file(path);
  FamilyFile ff = parse_family_file(bytes);
  OneParamSubgroup rho(parse_int_list(rho_s));
  if (rho.n() != ff.ws.n()) throw std::invalid_argument("rho arity mismatch");
  LineBundleSpec spec = resolve_bundle(ff, bundle);
  bool obstructed = false;
  HMKValue v = mu_reduced(ff.family, rho, spec, &obstructed);
  Json payload;
  payload["rho"] = rho.w;
  payload["bundle"] = spec.name;
  payload["mu"] = mu_json(v);
  if (std::holds_alternative<CIFamily>(ff.family)) {
    ReduceResult red = reduce_ci(std::get<CIFamily>(ff.family), rho);
    payload["mult_F"] = mult(red.fam.F, rho);
    payload["mult_H"] = mult(red.fam.H, rho);
    if (obstructed) payload["reduction_obstructed"] = true;
  } else {
    payload["mult_F"] = mult(std::get<HypersurfaceFamily>(ff.family).F, rho);
  }
  std::cout << make_report("mu", bytes, payload).dump(2) << "\n";
  return 0;
}

int cmd_check(const std::string& path, const std::string& bundle, const std::string& budget_s) {
  std::string bytes = read_file(path);
  FamilyFile ff = parse_family_file(bytes);
  LineBundleSpec spec = resolve_bundle(ff, bundle);
  SearchBudget budget = parse_budget(budget_s);
  auto found = find_destabilizer(ff.family, spec, budget);
  Json payload;
  payload["bundle"] = spec.name;
  payload["budget"] = budget_json(budget);
  payload["destabilizer_found"] = found.has_value();
  if (found) {
    Json mv;
    mv["rho"] = found->first.rho.w;
    if (found->first.sigma) {
      std::ostringstream os;
      for (int i = 0; i < ff.ws.n(); ++i) {
        if (i) os << "; ";
        os << ff.names[static_cast<size_t>(i)] << " -> "
           << print_wpoly(found->first.sigma->image(i), ff.names);
      }
      mv["substitution"] = os.str();
    }
    mv["note"] = found->first.note;
    payload["move"] = mv;
    payload["mu"] = mu_json(found->second);
  }
  std::cout << make_report("check", bytes, payload).dump(2) << "\n";
  return found ? 2 : 0;
}

int cmd_standardize(const std::string& path, const std::string& bundle,
                    const std::string& budget_s, const std::string& out) {
  std::string bytes = read_file(path);
  FamilyFile ff = parse_family_file(bytes);
  LineBundleSpec spec = resolve_bundle(ff, bundle);
  SearchBudget budget = parse_budget(budget_s);
  auto [model, cert] = standardize(ff.family, spec, budget, &ff.names);
  Json payload = certificate_json(cert);
  payload["bundle"] = spec.name;
  if (!out.empty()) {
    std::ofstream f(out);
    f << write_family_file(model, ff.names);
    payload["model_file"] = out;
  }
  std::cout << make_report("standardize", bytes, payload).dump(2) << "\n";
  return 0;
}

int cmd_classify(const std::string& path, const std::vector<std::string>& points,
                 const std::vector<std::string>& curves) {
  std::string bytes = read_file(path);
  FamilyFile ff = parse_family_file(bytes);
  Json payload;
  Json pts = Json::array();
  std::vector<std::vector<Rational>> all_points = coordinate_points_on_fiber(ff.family);
  for (const std::string& p : points) all_points.push_back(parse_rational_list(p, ','));
  for (const auto& p : all_points) {
    PointReport pr = classify_point(ff.family, p);
    Json j;
    Json coords = Json::array();
    for (const Rational& c : p) coords.push_back(rational_json(c));
    j["point"] = coords;
    j["chart"] = pr.chart >= 0 ? ff.names[static_cast<size_t>(pr.chart)] : "";
    Json q;
    q["k"] = pr.quotient_k;
    q["weights"] = pr.quotient_weights;
    j["quotient"] = q;
    if (!pr.error.empty()) {
      j["error"] = pr.error;
    } else {
      j["class"] = sing_class_name(pr.report.cls);
      if (!pr.report.case_id.empty()) j["case"] = pr.report.case_id;
      j["evidence"] = pr.report.evidence;
      j["jet_order"] = pr.report.jet_order;
    }
    pts.push_back(std::move(j));
  }
  payload["points"] = pts;
  Json crv = Json::array();
  std::vector<std::vector<int>> curve_sets = coordinate_curves(ff.ws.n());
  for (const std::string& c : curves) {
    std::vector<int> vanish;
    std::stringstream ss(c);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      bool ok = false;
      for (int i = 0; i < ff.ws.n(); ++i)
        if (ff.names[static_cast<size_t>(i)] == tok) {
          vanish.push_back(i);
          ok = true;
        }
      if (!ok) throw std::invalid_argument("unknown variable in --curve: " + tok);
    }
    curve_sets.push_back(vanish);
  }
  for (const auto& vanish : curve_sets) {
    Json j;
    std::vector<std::string> names;
    for (int v : vanish) names.push_back(ff.names[static_cast<size_t>(v)]);
    j["vanishing"] = names;
    auto w = nonisolated_witness(ff.family, vanish, ff.names);
    j["witness"] = w.has_value();
    if (w) j["description"] = *w;
    crv.push_back(std::move(j));
  }
  payload["curves"] = crv;
  std::cout << make_report("classify", bytes, payload).dump(2) << "\n";
  return 0;
}

int cmd_oracle_disc(const std::string& path) {
  std::string bytes = read_file(path);
  FamilyFile ff = parse_family_file(bytes);
  if (!std::holds_alternative<HypersurfaceFamily>(ff.family))
    throw std::invalid_argument("the discriminant oracle takes a hypersurface family");
  long v = pic::discriminant_valuation_oracle(std::get<HypersurfaceFamily>(ff.family));
  Json payload;
  payload["valuation"] = v;
  std::cout << make_report("oracle-disc", bytes, payload).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact stability engine for del Pezzo fibration models"};
  app.require_subcommand(1);

  std::string weights, bundle, rho, budget, out, file, space;
  int degree = 0, degree2 = 0;
  std::vector<std::string> points, curves;

  auto* inv = app.add_subcommand("invariants", "socle degree, Fermat counts, delta coefficients");
  inv->add_option("--weights", weights)->required();
  inv->add_option("--degree", degree)->required();

  auto* tab = app.add_subcommand("table", "character table and divisor expressions");
  tab->add_option("--space", space);
  tab->add_option("--weights", weights);
  tab->add_option("--degree", degree);
  tab->add_option("--degree2", degree2);

  auto* mu_cmd = app.add_subcommand("mu", "HMK index of a family");
  mu_cmd->add_option("file", file)->required();
  mu_cmd->add_option("--rho", rho)->required();
  mu_cmd->add_option("--bundle", bundle)->required();

  auto* chk = app.add_subcommand("check", "search for a destabilizing move");
  chk->add_option("file", file)->required();
  chk->add_option("--bundle", bundle)->required();
  chk->add_option("--budget", budget);

  auto* std_cmd = app.add_subcommand("standardize", "iterated semistabilization");
  std_cmd->add_option("file", file)->required();
  std_cmd->add_option("--bundle", bundle)->required();
  std_cmd->add_option("--budget", budget);
  std_cmd->add_option("--out", out);

  auto* cls = app.add_subcommand("classify", "singularity classification");
  cls->add_option("file", file)->required();
  cls->add_option("--point", points);
  cls->add_option("--curve", curves);

  auto* orc = app.add_subcommand("oracle-disc", "discriminant valuation oracle");
  orc->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) return cmd_invariants(weights, degree);
    if (tab->parsed()) return cmd_table(space, weights, degree, degree2);
    if (mu_cmd->parsed()) return cmd_mu(file, rho, bundle);
    if (chk->parsed()) return cmd_check(file, bundle, budget);
    if (std_cmd->parsed()) return cmd_standardize(file, bundle, budget, out);
    if (cls->parsed()) return cmd_classify(file, points, curves);
    if (orc->parsed()) return cmd_oracle_disc(file);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
