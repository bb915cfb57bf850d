#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "asc/minors.hpp"
#include "asc/moments.hpp"
#include "asc/recurrence.hpp"
#include "asc/setpair.hpp"
#include "asc/suites.hpp"
#include "asc/young.hpp"

using namespace asc;

namespace {

struct Global {
  std::string format = "text";
  std::uint64_t seed = 20240601;
  unsigned jobs = 1;

  bool json() const { return format == "json"; }
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit_poly(const Global& g, const ParamPoly& p, nlohmann::ordered_json record) {
  if (g.json()) {
    record["poly"] = to_json(p);
    std::cout << record.dump() << '\n';
  } else {
    std::cout << to_text(p) << '\n';
  }
}

int emit_report(const Global& g, const Report& r) {
  std::cout << (g.json() ? r.to_json_lines() : r.to_text());
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coefficients of the transformed Al-Salam-Chihara polynomials"};
  app.require_subcommand(1);
  Global global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", global.seed, "Seed for rational sample points")->capture_default_str();
  app.add_option("--jobs", global.jobs, "Worker threads (0 = all cores)")->capture_default_str();

  auto* coeff_cmd = app.add_subcommand("coeff", "Print g_{n,i}");
  int c_n = 0, c_i = 0;
  std::string c_method = "recurrence", c_spec = "hat", c_specialize = "none";
  bool c_xy = false;
  coeff_cmd->add_option("--n", c_n, "Polynomial index")->required()->check(CLI::NonNegativeNumber);
  coeff_cmd->add_option("--i", c_i, "Power of x")->required()->check(CLI::NonNegativeNumber);
  coeff_cmd->add_option("--method", c_method, "recurrence, young or setpair")
      ->check(CLI::IsMember({"recurrence", "young", "setpair"}))
      ->capture_default_str();
  coeff_cmd->add_option("--spec", c_spec, "hat, prime or fugacity (recurrence only)")
      ->check(CLI::IsMember({"hat", "prime", "fugacity"}))
      ->capture_default_str();
  coeff_cmd->add_option("--specialize", c_specialize, "Substitution such as e2=0")->capture_default_str();
  coeff_cmd->add_flag("--xy", c_xy, "Print the X/Y form (young or setpair)");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  SuiteOptions v_opt;
  std::string v_suite = "all";
  verify_cmd->add_option("--suite", v_suite, "Suite name")->check(CLI::IsMember(suite_names()))->capture_default_str();
  verify_cmd->add_option("--max", v_opt.max, "Size cap")->check(CLI::PositiveNumber)->capture_default_str();
  verify_cmd->add_option("--points", v_opt.points, "Rational sample points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* psi_cmd = app.add_subcommand("psi", "Apply the exchange map to a set pair");
  int p_n = 0;
  std::string p_a, p_b;
  psi_cmd->add_option("--n", p_n, "n")->required()->check(CLI::NonNegativeNumber);
  psi_cmd->add_option("--A", p_a, "First set, e.g. 0,2,3")->required();
  psi_cmd->add_option("--B", p_b, "Second set, e.g. 2,4,5,7")->required();

  auto* minors_cmd = app.add_subcommand("minors", "Minors of the coefficient matrix");
  int m_n = 7, m_size = 3;
  std::string m_specialize = "none";
  minors_cmd->add_option("--n", m_n, "Block size N")->check(CLI::PositiveNumber)->capture_default_str();
  minors_cmd->add_option("--size", m_size, "Largest minor size")->check(CLI::NonNegativeNumber)->capture_default_str();
  minors_cmd->add_option("--specialize", m_specialize, "Substitution such as e2=0")->capture_default_str();

  auto* moments_cmd = app.add_subcommand("moments", "Moments mu_0 .. mu_N");
  std::string mo_spec = "prime";
  int mo_N = 8;
  moments_cmd->add_option("--spec", mo_spec, "hat, prime or fugacity")
      ->check(CLI::IsMember({"hat", "prime", "fugacity"}))
      ->capture_default_str();
  moments_cmd->add_option("--N", mo_N, "Highest order")->check(CLI::NonNegativeNumber)->capture_default_str();

  auto* zn_cmd = app.add_subcommand("zn", "PASEP partition function");
  int z_N = 0;
  bool z_xi = false;
  zn_cmd->add_option("--N", z_N, "Number of sites")->required()->check(CLI::NonNegativeNumber);
  zn_cmd->add_flag("--xi", z_xi, "Fugacity version");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*coeff_cmd) {
      const CoeffMethod method = coeff_method_by_name(c_method);
      if (method != CoeffMethod::recurrence && c_spec != "hat")
        throw UsageError("--spec applies to the recurrence method only");
      if (c_xy && method == CoeffMethod::recurrence) throw UsageError("--xy needs --method young or setpair");
      nlohmann::ordered_json rec{{"n", c_n}, {"i", c_i}, {"method", c_method}, {"spec", c_spec}};
      if (c_xy) {
        XYPoly p;
        if (c_i <= c_n) p = method == CoeffMethod::young ? coeff_young_xy(c_i, c_n - c_i) : coeff_setpair_xy(c_i, c_n - c_i);
        if (global.json()) {
          rec["xy"] = to_json(p);
          std::cout << rec.dump() << '\n';
        } else {
          std::cout << to_text(p) << '\n';
        }
        return 0;
      }
      const Specialization s = parse_specialization(c_specialize);
      const ParamPoly p = c_spec == "hat" ? coeff(c_n, c_i, method) : g(spec_by_name(c_spec), c_n, c_i);
      rec["specialize"] = s.name;
      emit_poly(global, s.apply(p), rec);
      return 0;
    }
    if (*verify_cmd) {
      v_opt.jobs = global.jobs;
      v_opt.seed = global.seed;
      return emit_report(global, run_suite(v_suite, v_opt));
    }
    if (*psi_cmd) {
      const auto [s1, s2] = psi(p_n, parse_index_set(p_a), parse_index_set(p_b));
      if (global.json()) std::cout << nlohmann::ordered_json{{"n", p_n}, {"S1", s1}, {"S2", s2}}.dump() << '\n';
      else std::cout << set_text(s1) << ' ' << set_text(s2) << '\n';
      return 0;
    }
    if (*minors_cmd) {
      const Specialization s = parse_specialization(m_specialize);
      const auto records = sweep_minors(specialize(build_G(m_n), s), m_size, global.jobs);
      bool ok = true;
      for (const auto& r : records) {
        ok = ok && (!r.nonvanishing || r.nonneg);
        if (global.json()) {
          std::cout << minor_json_line(r) << '\n';
        } else {
          std::cout << "rows " << set_text(r.rows) << " cols " << set_text(r.cols)
                    << (r.nonvanishing ? (r.nonneg ? " nonneg" : " NEGATIVE") : " zero") << " terms=" << r.term_count
                    << '\n';
        }
      }
      return ok ? 0 : 1;
    }
    if (*moments_cmd) {
      const auto mu = moments(spec_by_name(mo_spec), mo_N);
      for (std::size_t k = 0; k < mu.size(); ++k) {
        if (global.json()) {
          nlohmann::ordered_json rec{{"spec", mo_spec}, {"N", k}};
          rec["poly"] = to_json(mu[k]);
          std::cout << rec.dump() << '\n';
        } else {
          std::cout << "mu_" << k << " = " << to_text(mu[k]) << '\n';
        }
      }
      return 0;
    }
    if (*zn_cmd) {
      emit_poly(global, z_xi ? z_fugacity(z_N) : z_n(z_N), {{"N", z_N}, {"xi", z_xi}});
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
