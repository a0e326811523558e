#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schroalg/appell.hpp"
#include "schroalg/evolution.hpp"
#include "schroalg/fock.hpp"
#include "schroalg/probability.hpp"
#include "schroalg/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace schroalg;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

Rational parse_rational(const std::string& s) { return Rational::from_string(s); }

json check_to_json(const Check& c) {
  return json{{"id", c.id},
              {"status", status_name(c.status)},
              {"detail", c.detail},
              {"statement", c.anchor}};
}

json report_to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  return json{{"suite", r.suite},
              {"checks", checks},
              {"counts",
               {{"pass", r.count(CheckStatus::Pass)},
                {"fail", r.count(CheckStatus::Fail)},
                {"flag", r.count(CheckStatus::Flag)}}},
              {"ok", r.ok()}};
}

json rational_json(const Rational& v) {
  return json{{"exact", v.to_string()}, {"decimal", v.to_double()}};
}

int run_verify(const std::string& suite) {
  std::vector<VerifyReport> reports;
  if (suite == "all") {
    reports = verify_all();
  } else {
    reports.push_back(verify_suite(suite));
  }
  json out;
  int pass = 0, fail = 0, flag = 0;
  json suites = json::array();
  for (const auto& r : reports) {
    suites.push_back(report_to_json(r));
    pass += r.count(CheckStatus::Pass);
    fail += r.count(CheckStatus::Fail);
    flag += r.count(CheckStatus::Flag);
  }
  if (suite == "all") {
    out = json{{"suites", suites},
               {"counts", {{"pass", pass}, {"fail", fail}, {"flag", flag}}},
               {"ok", fail == 0}};
  } else {
    out = suites.front();
  }
  std::cout << out.dump(2) << "\n";
  return fail == 0 ? kExitOk : kExitCheckFailure;
}

int run_gram(const std::string& m, const std::string& c, int cutoff, const std::string& basis,
             const std::string& format) {
  const Params p(parse_rational(m), parse_rational(c));
  json entries = json::array();
  std::string csv = "j,k,j2,k2,value\n";
  auto emit = [&](const GramMatrix& gram) {
    for (const auto& [key, value] : gram.entries()) {
      entries.push_back(json{{"left", {key.first.first, key.first.second}},
                             {"right", {key.second.first, key.second.second}},
                             {"value", value.to_string()},
                             {"decimal", value.to_double()}});
      csv += std::to_string(key.first.first) + "," + std::to_string(key.first.second) + "," +
             std::to_string(key.second.first) + "," + std::to_string(key.second.second) + "," +
             value.to_string() + "\n";
    }
  };
  json out{{"basis", basis}, {"cutoff", cutoff}, {"m", p.m.to_string()}, {"c", p.c.to_string()}};
  if (basis == "jk") {
    emit(gram_jk(p, cutoff));
  } else {
    const auto res = gram_ab(p, cutoff);
    out["degenerate"] = res.degenerate;
    emit(res.gram);
  }
  out["entries"] = entries;
  if (format == "csv") {
    std::cout << csv;
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

int run_appell(int order, const std::string& beta, const std::string& m, const std::string& c) {
  const Params p(parse_rational(m), parse_rational(c), parse_rational(beta));
  const auto psis = appell_polynomials(p, order);
  json polys = json::array();
  for (const auto& a : psis) {
    json terms = json::array();
    for (const auto& [e, coeff] : a.poly.terms())
      terms.push_back(json{{"x1", e[0]}, {"x2", e[1]}, {"coeff", coeff.to_string()}});
    polys.push_back(json{{"j", a.j},
                         {"k", a.k},
                         {"terms", terms},
                         {"text", a.poly.to_string({"x1", "x2"})}});
  }
  json out{{"order", order},
           {"m", p.m.to_string()},
           {"c", p.c.to_string()},
           {"beta", p.beta.to_string()},
           {"polynomials", polys}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_evolve(int a, int b, const std::string& tau, const std::string& m,
               const std::string& c) {
  if (a < 0 || b < 0) throw std::domain_error("evolve: indices must be nonnegative");
  const Params p(parse_rational(m), parse_rational(c));
  const Rational tau_value = parse_rational(tau);
  const HeatAppell h = heat_appell(p, a, b);
  auto vector_json = [](const FockVector& v) {
    json out = json::array();
    for (const auto& [jk, coeff] : v.terms())
      out.push_back(json{{"j", jk.first}, {"k", jk.second}, {"coeff", coeff.to_string()}});
    return out;
  };
  json poly = json::array();
  for (int n = 0; n <= h.degree(); ++n)
    poly.push_back(json{{"tau_power", n}, {"vector", vector_json(h.coefficient(n))}});
  json out{{"a", a},
           {"b", b},
           {"m", p.m.to_string()},
           {"c", p.c.to_string()},
           {"tau", tau_value.to_string()},
           {"tau_polynomial", poly},
           {"value_at_tau", vector_json(h.at_tau(tau_value))}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_density(const std::string& m, const std::string& beta, const std::string& c,
                const std::vector<double>& eval, long sample_count, long long seed,
                const std::vector<int>& moments) {
  const DensityParams p(parse_rational(m), parse_rational(beta), parse_rational(c));
  const int modes = (!eval.empty() ? 1 : 0) + (sample_count > 0 ? 1 : 0) +
                    (!moments.empty() ? 1 : 0);
  if (modes != 1)
    throw CLI::ValidationError(
        "density", "choose exactly one of --eval, --sample, --moments");
  if (!eval.empty()) {
    const double value = density(p, eval[0], eval[1]);
    json out{{"m", p.m.to_string()},      {"beta", p.beta.to_string()},
             {"c", p.c.to_string()},      {"x1", eval[0]},
             {"x2", eval[1]},             {"density", value}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  if (sample_count > 0) {
    const auto draws =
        sample(p, static_cast<std::size_t>(sample_count), static_cast<std::uint64_t>(seed));
    std::string buffer = "x1,x2\n";
    char line[80];
    for (const auto& s : draws) {
      std::snprintf(line, sizeof line, "%.17g,%.17g\n", s.x1, s.x2);
      buffer += line;
    }
    std::fwrite(buffer.data(), 1, buffer.size(), stdout);
    return kExitOk;
  }
  const int jmax = moments[0], kmax = moments[1];
  if (jmax < 0 || kmax < 0) throw std::domain_error("density: moment orders must be >= 0");
  json table = json::array();
  for (int j = 0; j <= jmax; ++j)
    for (int k = 0; k <= kmax; ++k)
      table.push_back(json{{"j", j}, {"k", k}, {"moment", rational_json(exact_moment(p, j, k))}});
  json out{{"m", p.m.to_string()},
           {"beta", p.beta.to_string()},
           {"c", p.c.to_string()},
           {"moments", table}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations and verification for the Schrodinger algebra, its Fock-space"
               " realization, Appell systems and the associated gamma-Gaussian law"};
  app.require_subcommand(1);

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite, "lie|fock|diffreal|appell|evolution|probability|all")
      ->check(CLI::IsMember({"lie", "fock", "diffreal", "appell", "evolution", "probability",
                             "all"}));

  std::string gram_m = "1", gram_c = "1", gram_basis = "jk", gram_format = "json";
  int gram_cutoff = 6;
  auto* gram_cmd = app.add_subcommand("gram", "inner products of basis vectors");
  gram_cmd->add_option("--m", gram_m, "mass (rational p/q)");
  gram_cmd->add_option("--c", gram_c, "vacuum dilation eigenvalue (rational p/q)");
  gram_cmd->add_option("--cutoff", gram_cutoff, "weight cutoff W")->check(CLI::NonNegativeNumber);
  gram_cmd->add_option("--basis", gram_basis, "jk|ab")->check(CLI::IsMember({"jk", "ab"}));
  gram_cmd->add_option("--format", gram_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  int appell_order = 4;
  std::string appell_beta = "1", appell_m = "1", appell_c = "1";
  auto* appell_cmd = app.add_subcommand("appell", "canonical Appell polynomials");
  appell_cmd->add_option("--order", appell_order, "max j + k")->check(CLI::NonNegativeNumber);
  appell_cmd->add_option("--beta", appell_beta, "tilt parameter (rational p/q)");
  appell_cmd->add_option("--m", appell_m, "mass (rational p/q)");
  appell_cmd->add_option("--c", appell_c, "vacuum dilation eigenvalue (rational p/q)");

  int evolve_a = 0, evolve_b = 0;
  std::string evolve_tau = "1", evolve_m = "1", evolve_c = "1";
  auto* evolve_cmd = app.add_subcommand("evolve", "heat-type Appell system e^(tau H)|ab>");
  evolve_cmd->add_option("--a", evolve_a, "R0 index");
  evolve_cmd->add_option("--b", evolve_b, "G index");
  evolve_cmd->add_option("--tau", evolve_tau, "time (rational p/q)");
  evolve_cmd->add_option("--m", evolve_m, "mass (rational p/q)");
  evolve_cmd->add_option("--c", evolve_c, "vacuum dilation eigenvalue (rational p/q)");

  std::string den_m = "1", den_beta = "1", den_c = "3/2";
  std::vector<double> den_eval;
  long den_sample = 0;
  long long den_seed = 1;
  std::vector<int> den_moments;
  auto* den_cmd = app.add_subcommand("density", "joint law of (X1, X2)");
  den_cmd->add_option("--m", den_m, "mass (rational p/q)");
  den_cmd->add_option("--beta", den_beta, "scale (rational p/q)");
  den_cmd->add_option("--c", den_c, "shape-plus-half (rational p/q)");
  den_cmd->add_option("--eval", den_eval, "evaluate the density at x1 x2")->expected(2);
  den_cmd->add_option("--sample", den_sample, "draw N samples as CSV");
  den_cmd->add_option("--seed", den_seed, "sampler seed");
  den_cmd->add_option("--moments", den_moments, "exact moment table up to J K")->expected(2);

  try {
    app.parse(argc, argv);
    if (verify_cmd->parsed()) return run_verify(suite);
    if (gram_cmd->parsed()) return run_gram(gram_m, gram_c, gram_cutoff, gram_basis, gram_format);
    if (appell_cmd->parsed()) return run_appell(appell_order, appell_beta, appell_m, appell_c);
    if (evolve_cmd->parsed()) return run_evolve(evolve_a, evolve_b, evolve_tau, evolve_m, evolve_c);
    if (den_cmd->parsed())
      return run_density(den_m, den_beta, den_c, den_eval, den_sample, den_seed, den_moments);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
