#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pzeta/functions.hpp"
#include "pzeta/integration.hpp"
#include "pzeta/loggamma.hpp"
#include "pzeta/recognize.hpp"
#include "pzeta/spectra.hpp"
#include "pzeta/zeta.hpp"

using json = nlohmann::json;
using namespace pzeta;

namespace {

struct Globals {
  long p = 5;
  long prec = 20;
  bool json_out = false;
  std::string levels = "3..6";
  long m_max = 24;
};

LevelRange parse_levels(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw domain_error("levels must look like 'a..b', got '" + text + "'");
  LevelRange r;
  r.lo = std::stol(text.substr(0, dots));
  r.hi = std::stol(text.substr(dots + 2));
  return r;
}

// catalog names carry their conventions (hydrogen routes through g = a^2);
// everything else goes through the function-spec grammar
AnalyticFunction load_function(const std::string& spec) {
  if (spec == "integer" || spec == "barrier" || spec == "hydrogen") return catalog(spec).f;
  return AnalyticFunction::parse_spec(spec);
}

ZetaKind parse_kind(const std::string& text) {
  if (text == "hurwitz") return ZetaKind::hurwitz;
  if (text == "euler") return ZetaKind::euler;
  throw domain_error("kind must be hurwitz or euler, got '" + text + "'");
}

json value_json(const Padic& x) {
  json j;
  j["p"] = x.prime();
  if (x.is_zero()) {
    j["v"] = x.abs_precision();
    j["digits"] = json::array();
    j["prec"] = 0;
  } else {
    j["v"] = x.valuation();
    j["digits"] = x.digits();
    j["prec"] = x.precision();
  }
  return j;
}

void emit_value_lines(std::ostream& os, const Padic& x) {
  os << "value: " << x.str() << "\n";
  if (auto q = recognize_rational(x)) os << "rational: " << to_string(*q) << "\n";
}

json value_block(const Padic& x) {
  json j;
  j["value"] = value_json(x);
  j["literal"] = x.str();
  auto q = recognize_rational(x);
  j["rational"] = q ? json(to_string(*q)) : json(nullptr);
  return j;
}

json report_json(const IntegralReport& rep) {
  json j;
  j["levels"] = rep.levels_used;
  j["agreement_digits"] = rep.agreement_digits;
  j["refined_agreement"] = rep.refined_agreement;
  j["converged"] = rep.converged;
  return j;
}

std::string route_name(LogGammaRoute r) {
  switch (r) {
    case LogGammaRoute::integral: return "integral";
    case LogGammaRoute::stirling: return "stirling";
    case LogGammaRoute::s_derivative: return "s-derivative";
  }
  return "?";
}

int cmd_zeta(const Globals& g, const std::string& kind, const std::string& fspec,
             const std::string& s_text, const std::string& lambda_text,
             const std::string& route_text) {
  ZetaQuery q;
  q.kind = parse_kind(kind);
  q.s = parse_rational(s_text);
  q.lambda = parse_rational(lambda_text);
  q.f = load_function(fspec);
  q.p = g.p;
  q.prec = g.prec;
  q.m_max = g.m_max;
  q.levels = parse_levels(g.levels);
  if (route_text == "direct")
    q.route = Route::direct;
  else if (route_text == "series")
    q.route = Route::series;
  else if (route_text == "auto")
    q.route = Route::auto_route;
  else
    throw domain_error("route must be direct, series or auto");

  ZetaResult r = zeta(q);
  if (g.json_out) {
    json j = value_block(r.value);
    j["route"] = r.route;
    j["agreement"] = r.agreement;
    j["certificates"] = {{"M", to_string(q.f.bound_M(g.p))},
                         {"guard_depth", r.guard.depth},
                         {"guard_trivial", r.guard.trivial}};
    if (r.series_tail_valuation)
      j["certificates"]["series_tail_valuation"] = *r.series_tail_valuation;
    if (r.report) j["direct_report"] = report_json(*r.report);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  emit_value_lines(std::cout, r.value);
  std::cout << "route: " << r.route << "\n";
  if (r.agreement >= 0) std::cout << "agreement: " << r.agreement << "\n";
  std::cout << "guard: " << (r.guard.trivial ? "trivial" : "screened") << " (depth "
            << r.guard.depth << ")\n";
  std::cout << "M: " << to_string(q.f.bound_M(g.p)) << "\n";
  return 0;
}

int cmd_loggamma(const Globals& g, const std::string& kind, const std::string& fspec,
                 const std::string& lambda_text, const std::string& routes_text) {
  std::vector<LogGammaRoute> routes;
  std::stringstream ss(routes_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "integral")
      routes.push_back(LogGammaRoute::integral);
    else if (item == "stirling")
      routes.push_back(LogGammaRoute::stirling);
    else if (item == "s-derivative")
      routes.push_back(LogGammaRoute::s_derivative);
    else
      throw domain_error("unknown route '" + item + "' (integral|stirling|s-derivative)");
  }
  LogGammaResult r = log_gamma(parse_kind(kind), parse_rational(lambda_text),
                               load_function(fspec), routes, g.p, g.prec,
                               parse_levels(g.levels), g.m_max);
  if (g.json_out) {
    json j = value_block(r.value);
    json names = json::array();
    json vals = json::array();
    for (size_t i = 0; i < r.routes_run.size(); ++i) {
      names.push_back(route_name(r.routes_run[i]));
      vals.push_back(r.route_values[i].str());
    }
    j["routes"] = names;
    j["route_values"] = vals;
    j["pairwise_agreement"] = r.pairwise_agreement;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  emit_value_lines(std::cout, r.value);
  std::cout << "routes:";
  for (size_t i = 0; i < r.routes_run.size(); ++i)
    std::cout << (i ? "," : " ") << route_name(r.routes_run[i]);
  std::cout << "\n";
  std::cout << "pairwise-agreement: " << r.pairwise_agreement << "\n";
  return 0;
}

int cmd_integrate(const Globals& g, const std::string& measure_text, const std::string& fspec,
                  long moment, const std::string& lambda_text) {
  Measure mu;
  if (measure_text == "haar")
    mu = Measure::haar;
  else if (measure_text == "mu-1")
    mu = Measure::mu_minus_one;
  else
    throw domain_error("measure must be haar or mu-1");
  Integrand integrand =
      Integrand::moment_of(load_function(fspec), parse_rational(lambda_text), moment);
  IntegralReport rep = integrate(mu, integrand, parse_levels(g.levels), g.p, g.prec);
  if (g.json_out) {
    json j = value_block(rep.value);
    j["report"] = report_json(rep);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  emit_value_lines(std::cout, rep.value);
  std::cout << "levels: " << g.levels << "\n";
  std::cout << "level-agreement:";
  for (size_t i = 0; i < rep.agreement_digits.size(); ++i)
    std::cout << (i ? "," : " ") << rep.agreement_digits[i];
  std::cout << "\n";
  std::cout << "refined-agreement: " << rep.refined_agreement << "\n";
  std::cout << "converged: " << (rep.converged ? "yes" : "no") << "\n";
  return 0;
}

int cmd_interpolate(const Globals& g, const std::string& file, const std::string& name,
                    long n_max, const std::string& radius_text) {
  Spectrum s = file.empty() ? catalog(name).spectrum : spectrum_from_file(file);
  if (n_max < 0) n_max = (s.count > 0) ? s.count - 1 : 16;
  MahlerExpansion e = mahler_coeffs(s, n_max, g.p, g.prec);
  std::string verdict;
  long witness = -1;
  if (!radius_text.empty()) {
    AnalyticityVerdict v = analyticity_test(e, parse_rational(radius_text));
    verdict = v == AnalyticityVerdict::certified
                  ? "certified"
                  : (v == AnalyticityVerdict::rejected ? "rejected" : "inconclusive");
    witness = e.analyticity.witness;
  }
  if (g.json_out) {
    json j;
    json coeffs = json::array();
    for (size_t n = 0; n < e.coeffs.size(); ++n)
      coeffs.push_back({{"n", n},
                        {"c", to_string(e.coeffs[n])},
                        {"norm", to_string(e.norms[n])}});
    j["coefficients"] = coeffs;
    j["continuity_ok"] = e.continuity_ok;
    if (!verdict.empty()) {
      j["analyticity"] = {{"radius", radius_text}, {"verdict", verdict}, {"witness", witness}};
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "n\tc_n\t|c_n|_p\n";
  for (size_t n = 0; n < e.coeffs.size(); ++n)
    std::cout << n << "\t" << to_string(e.coeffs[n]) << "\t" << to_string(e.norms[n]) << "\n";
  std::cout << "continuity: " << (e.continuity_ok ? "ok" : "failed") << "\n";
  if (!verdict.empty()) {
    std::cout << "analyticity(r=" << radius_text << "): " << verdict;
    if (witness >= 0) std::cout << " (witness " << witness << ")";
    std::cout << "\n";
  }
  return 0;
}

int emit_single(const Globals& g, const Padic& v) {
  if (g.json_out) {
    std::cout << value_block(v).dump(2) << "\n";
    return 0;
  }
  emit_value_lines(std::cout, v);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact p-adic spectral zeta toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--p", g.p, "odd prime (default 5)");
  app.add_option("--prec", g.prec, "working precision in significant digits (default 20)");
  app.add_flag("--json", g.json_out, "emit JSON instead of text");
  app.add_option("--levels", g.levels, "summation level range a..b (default 3..6)");
  app.add_option("--m-max", g.m_max, "series truncation order (default 24)");

  // zeta
  auto* zc = app.add_subcommand("zeta", "evaluate the zeta function attached to f");
  std::string z_kind = "hurwitz", z_f = "identity", z_s = "0", z_lambda, z_route = "auto";
  zc->add_option("--kind", z_kind, "hurwitz|euler");
  zc->add_option("--f", z_f, "interpolating function spec");
  zc->add_option("--s", z_s, "s as a rational in Z_p");
  zc->add_option("--lambda", z_lambda, "lambda as a rational")->required();
  zc->add_option("--route", z_route, "direct|series|auto");

  // loggamma
  auto* lc = app.add_subcommand("loggamma", "evaluate the log Gamma functional determinant");
  std::string l_kind = "hurwitz", l_f = "identity", l_lambda, l_routes = "integral,stirling";
  lc->add_option("--kind", l_kind, "hurwitz|euler");
  lc->add_option("--f", l_f, "interpolating function spec");
  lc->add_option("--lambda", l_lambda, "lambda as a rational")->required();
  lc->add_option("--routes", l_routes, "comma list: integral,stirling,s-derivative");

  // integrate
  auto* ic = app.add_subcommand("integrate", "moment integrals against haar or mu-1");
  std::string i_measure = "haar", i_f = "identity", i_lambda = "0";
  long i_moment = 1;
  ic->add_option("--measure", i_measure, "haar|mu-1");
  ic->add_option("--f", i_f, "interpolating function spec");
  ic->add_option("--moment", i_moment, "moment order m");
  ic->add_option("--lambda", i_lambda, "shift lambda");

  // interpolate
  auto* pc = app.add_subcommand("interpolate", "Mahler coefficients of a spectrum");
  std::string p_file, p_name = "oscillator", p_radius;
  long p_nmax = -1;
  pc->add_option("--spectrum-file", p_file, "one rational per line, index from 0");
  pc->add_option("--spectrum", p_name, "catalog name (integer|barrier|oscillator|hydrogen)");
  pc->add_option("--n-max", p_nmax, "highest coefficient index");
  pc->add_option("--radius", p_radius, "also test analyticity at this radius (rational)");

  // teichmuller
  auto* tc = app.add_subcommand("teichmuller", "Teichmuller lift of a unit");
  std::string t_a;
  tc->add_option("--a", t_a, "p-adic unit as a rational")->required();

  // angle-pow
  auto* ac = app.add_subcommand("angle-pow", "two-variable power <lambda>^s");
  std::string a_lambda, a_s;
  ac->add_option("--lambda", a_lambda, "nonzero rational")->required();
  ac->add_option("--s", a_s, "s as a rational in Z_p")->required();

  // special-value
  auto* sc = app.add_subcommand("special-value", "closed form at s = 1-n");
  std::string s_kind = "hurwitz", s_f = "identity", s_lambda;
  long s_n = 1;
  sc->add_option("--kind", s_kind, "hurwitz|euler");
  sc->add_option("--n", s_n, "n >= 1");
  sc->add_option("--f", s_f, "interpolating function spec");
  sc->add_option("--lambda", s_lambda, "lambda as a rational")->required();

  // derivative
  auto* dc = app.add_subcommand("derivative", "closed-form lambda-derivative");
  std::string d_kind = "hurwitz", d_f = "identity", d_s = "0", d_lambda;
  long d_order = 1;
  dc->add_option("--kind", d_kind, "hurwitz|euler");
  dc->add_option("--order", d_order, "derivative order n >= 1");
  dc->add_option("--s", d_s, "s as a rational in Z_p");
  dc->add_option("--f", d_f, "interpolating function spec");
  dc->add_option("--lambda", d_lambda, "lambda as a rational")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\nrun with --help for usage\n";
    return 1;
  }

  try {
    if (*zc) return cmd_zeta(g, z_kind, z_f, z_s, z_lambda, z_route);
    if (*lc) return cmd_loggamma(g, l_kind, l_f, l_lambda, l_routes);
    if (*ic) return cmd_integrate(g, i_measure, i_f, i_moment, i_lambda);
    if (*pc) return cmd_interpolate(g, p_file, p_name, p_nmax, p_radius);
    if (*tc) return emit_single(g, teichmuller(Padic::from_rational(parse_rational(t_a), g.p, g.prec)));
    if (*ac)
      return emit_single(
          g, angle_pow(Padic::from_rational(parse_rational(a_lambda), g.p, g.prec),
                       Padic::from_rational(parse_rational(a_s), g.p, g.prec)));
    if (*sc)
      return emit_single(g, special_value(parse_kind(s_kind), s_n, parse_rational(s_lambda),
                                          load_function(s_f), g.p, g.prec));
    if (*dc)
      return emit_single(g, lambda_derivative(parse_kind(d_kind), d_order, parse_rational(d_s),
                                              parse_rational(d_lambda), load_function(d_f), g.p,
                                              g.prec));
  } catch (const route_disagreement& e) {
    std::cerr << "route disagreement: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
