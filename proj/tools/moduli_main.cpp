// Command-line front end for the moduli invariants library.
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "moduli/chern.hpp"
#include "moduli/dimension.hpp"
#include "moduli/divisor.hpp"
#include "moduli/divisor_expr.hpp"
#include "moduli/fine_divisor.hpp"
#include "moduli/lefschetz.hpp"
#include "moduli/theta.hpp"
#include "moduli/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

json report_json(const moduli::VerifyReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json jc = {{"name", c.name},
               {"pass", c.pass},
               {"lhs", c.lhs},
               {"rhs", c.rhs}};
    if (!c.note.empty()) jc["note"] = c.note;
    checks.push_back(jc);
  }
  return json{{"suite", rep.suite}, {"pass", rep.all_pass()},
              {"checks", checks}};
}

void print_report_text(const moduli::VerifyReport& rep) {
  for (const auto& c : rep.checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << rep.suite << ": "
              << c.name;
    if (!c.pass) std::cout << "  lhs = " << c.lhs << "  rhs = " << c.rhs;
    if (!c.note.empty()) std::cout << "  (" << c.note << ")";
    std::cout << "\n";
  }
}

std::pair<long, long> parse_prime_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("--prime-range", "expected 'a..b'");
  return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

moduli::SiegelPoint parse_tau(const std::string& s) {
  std::istringstream in(s);
  double v[6];
  char sep;
  for (int i = 0; i < 6; ++i) {
    if (!(in >> v[i]))
      throw CLI::ValidationError("--tau", "expected six comma-separated reals");
    if (i < 5 && !(in >> sep))
      throw CLI::ValidationError("--tau", "expected six comma-separated reals");
  }
  return moduli::SiegelPoint({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]});
}

moduli::ThetaCharacteristic parse_char(const std::string& s) {
  moduli::ThetaCharacteristic m{};
  std::string t = s;
  for (auto& c : t)
    if (c == ';' || c == ',') c = ' ';
  std::istringstream in(t);
  for (int i = 0; i < 4; ++i) {
    if (!(in >> m.m[i]) || m.m[i] < 0 || m.m[i] > 1)
      throw CLI::ValidationError("--char", "expected \"a,b;c,d\" with 0/1 entries");
  }
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of moduli spaces of (1,p)-polarized "
               "abelian surfaces"};
  app.require_subcommand(1);

  std::string table_path = moduli::default_table_path();
  std::string format = "text";
  app.add_option("--table", table_path, "intersection table file")
      ->envname("MODULI_TABLE_PATH");
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // --- intersect ---
  auto* cmd_intersect = app.add_subcommand(
      "intersect", "evaluate a degree-3 divisor expression");
  std::string expr;
  std::optional<long> prime;
  cmd_intersect->add_option("--expr", expr, "divisor expression")->required();
  cmd_intersect->add_option("--prime", prime, "evaluate at this prime");

  // --- verify ---
  auto* cmd_verify = app.add_subcommand("verify", "run identity suites");
  std::string suite = "all";
  std::string identity;
  std::string prime_range = "5..37";
  bool use_paper_display = false;
  cmd_verify->add_option("--suite", suite,
                         "tables | trace | star | dim-final | chern | all")
      ->check(CLI::IsMember({"tables", "trace", "star", "dim-final", "chern",
                             "all"}));
  cmd_verify->add_option("--identity", identity, "alias: --identity star");
  cmd_verify->add_option("--prime-range", prime_range,
                         "prime range 'a..b' for evaluation checks");
  cmd_verify->add_flag("--use-paper-display", use_paper_display,
                       "substitute the printed comparison polynomial in the "
                       "k^1 identity (documented failure mode)");

  // --- dim ---
  auto* cmd_dim = app.add_subcommand("dim", "cusp form dimensions");
  std::string group = "gamma1p";
  long dim_prime = 0;
  long weight = 0;
  cmd_dim->add_option("--group", group, "gamma1p | gamma2sq")
      ->check(CLI::IsMember({"gamma1p", "gamma2sq"}));
  cmd_dim->add_option("--prime", dim_prime, "prime p >= 5")->required();
  cmd_dim->add_option("--weight", weight, "weight k, positive multiple of 12")
      ->required();

  // --- chern ---
  auto* cmd_chern = app.add_subcommand("chern", "Chern numbers and genus");
  std::optional<long> chern_prime;
  bool symbolic = false;
  cmd_chern->add_option("--prime", chern_prime, "evaluate at this prime");
  cmd_chern->add_flag("--symbolic", symbolic, "print symbolic polynomials");

  // --- trace ---
  auto* cmd_trace = app.add_subcommand("trace", "Lefschetz contributions");
  std::string trace_case;
  std::optional<long> trace_prime;
  cmd_trace->add_option("--case", trace_case,
                        "1a | 1b | 1c | 2a | 2b | 2c_B1 | 2c_B2 (default all)");
  cmd_trace->add_option("--prime", trace_prime, "evaluate at this prime");

  // --- theta ---
  auto* cmd_theta = app.add_subcommand("theta", "theta constants");
  auto* theta_eval = cmd_theta->add_subcommand("eval", "evaluate one theta");
  std::string tau_str, char_str;
  double eps = 1e-10;
  theta_eval->add_option("--tau", tau_str, "t1r,t1i,t2r,t2i,t3r,t3i")
      ->required();
  theta_eval->add_option("--char", char_str, "characteristic a,b;c,d")
      ->required();
  theta_eval->add_option("--eps", eps, "truncation tolerance");

  auto* theta_check = cmd_theta->add_subcommand("check", "randomized suites");
  std::string theta_test = "modularity";
  int samples = 20;
  double tol = 1e-7;
  unsigned seed = 1;
  double check_eps = 1e-12;
  theta_check->add_option("--test", theta_test,
                          "modularity | vanishing | omega | odd")
      ->check(CLI::IsMember({"modularity", "vanishing", "omega", "odd"}));
  theta_check->add_option("--samples", samples, "points per word");
  theta_check->add_option("--tol", tol, "pass threshold on the max residual");
  theta_check->add_option("--seed", seed, "RNG seed");
  theta_check->add_option("--eps", check_eps, "per-evaluation truncation");

  CLI11_PARSE(app, argc, argv);

  const auto start = Clock::now();
  try {
    if (*cmd_intersect) {
      auto form = moduli::TrilinearForm::load_file(table_path);
      auto tree = moduli::parse_divisor_expr(expr);
      moduli::Poly result = moduli::evaluate_product(tree, form);
      json out{{"query", expr}};
      if (prime) {
        moduli::Rational v = result.eval_p(moduli::Rational(*prime));
        out["symbolic"] = result.str();
        out["value"] = v.str();
        if (format == "text")
          std::cout << v.str() << "\n";
      } else {
        out["symbolic"] = result.str();
        if (format == "text")
          std::cout << result.str() << "\n";
      }
      out["ms"] = elapsed_ms(start);
      if (format == "json") std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cmd_verify) {
      if (!identity.empty()) {
        if (identity != "star")
          throw CLI::ValidationError("--identity", "only 'star' is defined");
        suite = "star";
      }
      auto form = moduli::TrilinearForm::load_file(table_path);
      auto [p_min, p_max] = parse_prime_range(prime_range);
      std::vector<moduli::VerifyReport> reports;
      if (suite == "all") {
        reports = moduli::verify_all(form, p_min, p_max, use_paper_display);
      } else if (suite == "tables") {
        reports = {moduli::verify_tables(form)};
      } else if (suite == "trace") {
        reports = {moduli::verify_trace()};
      } else if (suite == "star") {
        reports = {moduli::verify_star_identity(form, use_paper_display)};
      } else if (suite == "dim-final") {
        reports = {moduli::dim_final_consistency(form)};
      } else {
        reports = {moduli::verify_chern(form, p_min, p_max)};
      }
      bool all = true;
      json jreports = json::array();
      for (const auto& r : reports) {
        all = all && r.all_pass();
        if (format == "json")
          jreports.push_back(report_json(r));
        else
          print_report_text(r);
      }
      if (format == "json") {
        json out{{"pass", all}, {"suites", jreports},
                 {"ms", elapsed_ms(start)}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
      }
      return all ? 0 : 1;
    }

    if (*cmd_dim) {
      moduli::Rational v = (group == "gamma1p")
                               ? moduli::dim_cusp_gamma1p(dim_prime, weight)
                               : moduli::dim_cusp_gamma2(dim_prime, weight);
      if (format == "json") {
        json out{{"group", group},
                 {"prime", dim_prime},
                 {"weight", weight},
                 {"dimension", v.str()},
                 {"ms", elapsed_ms(start)}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << v.str() << "\n";
      }
      return 0;
    }

    if (*cmd_chern) {
      auto form = moduli::TrilinearForm::load_file(table_path);
      const moduli::Poly c13 = moduli::c1_cubed(form);
      const moduli::Poly c1c2 = moduli::c1_c2(form);
      const moduli::Poly c3 = moduli::c3_euler();
      const moduli::Poly pa = moduli::arithmetic_genus(form);
      const moduli::Poly c2l = moduli::c2_dot_L(form);
      const moduli::Poly c2d0 = moduli::c2_dot_D0();
      json out;
      auto emit = [&](const char* name, const moduli::Poly& poly) {
        if (chern_prime)
          out[name] = poly.eval_p(moduli::Rational(*chern_prime)).str();
        else
          out[name] = poly.str();
      };
      if (!chern_prime && !symbolic)
        throw CLI::ValidationError("chern",
                                   "need --prime or --symbolic");
      emit("c1^3", c13);
      emit("c1c2", c1c2);
      emit("c3", c3);
      emit("pa", pa);
      emit("c2L", c2l);
      emit("c2D0", c2d0);
      out["ms"] = elapsed_ms(start);
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cmd_trace) {
      std::vector<moduli::TraceCase> cases;
      if (trace_case.empty()) {
        for (const auto& rec : moduli::builtin_fixed_sets())
          cases.push_back(rec.id);
      } else {
        cases.push_back(moduli::trace_case_from_name(trace_case));
      }
      json out = json::array();
      for (auto c : cases) {
        const moduli::TracePoly t = moduli::trace_for_case(c);
        json jt{{"case", moduli::trace_case_name(c)}};
        if (trace_prime) {
          jt["k2"] = t.k2.eval_p(moduli::Rational(*trace_prime)).str();
          jt["k1"] = t.k1.eval_p(moduli::Rational(*trace_prime)).str();
        } else {
          jt["k2"] = t.k2.str();
          jt["k1"] = t.k1.str();
        }
        out.push_back(jt);
      }
      std::cout << (out.size() == 1 ? out[0].dump(2) : out.dump(2)) << "\n";
      return 0;
    }

    if (*theta_eval) {
      const moduli::SiegelPoint tau = parse_tau(tau_str);
      const moduli::ThetaCharacteristic m = parse_char(char_str);
      const moduli::Complex v = moduli::theta_constant(m, tau, eps);
      json out{{"re", v.real()}, {"im", v.imag()}, {"abs", std::abs(v)},
               {"even", m.is_even()}, {"ms", elapsed_ms(start)}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*theta_check) {
      moduli::ThetaCheckResult r;
      if (theta_test == "modularity")
        r = moduli::run_modularity_suite(samples, samples, 10, seed,
                                         check_eps);
      else if (theta_test == "omega")
        r = moduli::run_modularity_suite(samples, samples, 60, seed,
                                         check_eps);
      else if (theta_test == "vanishing")
        r = moduli::run_vanishing_suite(samples, seed, check_eps);
      else
        r = moduli::run_odd_vanishing_suite(samples, seed, check_eps);
      const bool pass = r.max_residual < tol;
      json out{{"test", theta_test},     {"samples", r.samples},
               {"max_residual", r.max_residual}, {"tol", tol},
               {"pass", pass},           {"ms", elapsed_ms(start)}};
      std::cout << out.dump(2) << "\n";
      return pass ? 0 : 1;
    }

    if (*cmd_theta) {
      std::cerr << "theta: expected subcommand eval or check\n";
      return 2;
    }
  } catch (const moduli::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const moduli::DegreeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
