// cjp: colored Jones polynomials of zero-volume links from the command line.
//
//   cjp jones --expr "cable(2,3;1;unknot)" --colors 2 [--normalized [--split-mult k]] [--json]
//   cjp eval --expr "<text>" --color-all N [--split-mult k]
//   cjp growth --expr "<text>" --n 8:512:x2 [--split-mult k] [--csv out.csv] [--threads t]
//   cjp trinomial --colors 3,3 [--json]
//   cjp verify --suite symfun|bracket|all [--max-g 3 --max-color 4 --max-p 3]
//
// Exit status: 0 success, 1 computation error (error name on stderr), 2 usage error.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cjp/asympt.hpp"
#include "cjp/error.hpp"
#include "cjp/jones.hpp"
#include "cjp/linkexpr.hpp"
#include "cjp/suites.hpp"
#include "cjp/trinomial.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// "re+imi"; parts below 1e-12 of the modulus are rounding residue and print as 0.
std::string format_complex(std::complex<double> z) {
  const double mod = std::abs(z);
  double re = z.real(), im = z.imag();
  if (std::fabs(re) <= 1e-12 * mod) re = 0.0;
  if (std::fabs(im) <= 1e-12 * mod) im = 0.0;
  const std::string im_text = format_real(std::fabs(im));
  return format_real(re) + (std::signbit(im) ? "-" : "+") + im_text + "i";
}

// "a:b:xk" (geometric) or "a,b,c".
std::vector<int> parse_colors_range(const std::string& text) {
  std::vector<int> out;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw UsageError("bad number '" + s + "' in --n");
    return v;
  };
  if (text.find(':') == std::string::npos) {
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(to_int(item));
  } else {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 3 || parts[2].size() < 2 || parts[2][0] != 'x')
      throw UsageError("--n expects a:b:xk, e.g. 8:512:x2");
    const int lo = to_int(parts[0]), hi = to_int(parts[1]), factor = to_int(parts[2].substr(1));
    if (lo < 2 || hi < lo || factor < 2) throw UsageError("--n needs 2 <= a <= b and factor >= 2");
    for (long n = lo; n <= hi; n *= factor) out.push_back(static_cast<int>(n));
  }
  if (out.empty()) throw UsageError("--n selects no colors");
  return out;
}

std::vector<int> resolve_colors(const cjp::LinkExpr& e, const std::vector<int>& colors, int color_all) {
  if (!colors.empty() && color_all > 0) throw UsageError("use either --colors or --color-all");
  if (color_all > 0) return std::vector<int>(static_cast<std::size_t>(e.component_count()), color_all);
  if (colors.empty()) throw UsageError("--colors or --color-all is required");
  return colors;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored Jones polynomials of zero-volume links"};
  app.require_subcommand(1);

  std::string expr_text;
  std::vector<int> colors;
  int color_all = 0;
  int split_mult = 1;
  bool normalized = false;
  bool as_json = false;

  auto* jones = app.add_subcommand("jones", "Unnormalized or normalized colored Jones polynomial");
  jones->add_option("--expr", expr_text, "Link expression")->required();
  jones->add_option("--colors", colors, "Comma-separated colors, one per component")->delimiter(',');
  jones->add_option("--color-all", color_all, "Color every component N")->check(CLI::PositiveNumber);
  jones->add_flag("--normalized", normalized, "Divide by [N]^k");
  jones->add_option("--split-mult", split_mult, "k for --normalized")->check(CLI::PositiveNumber);
  jones->add_flag("--json", as_json, "JSON output");

  auto* eval = app.add_subcommand("eval", "Normalized value at A0 = exp(i pi / 2N)");
  eval->add_option("--expr", expr_text, "Link expression")->required();
  eval->add_option("--color-all", color_all, "Color N")->required()->check(CLI::PositiveNumber);
  eval->add_option("--split-mult", split_mult, "Exponent k of [N]")->check(CLI::PositiveNumber);

  std::string n_spec;
  std::string csv_path;
  unsigned threads = 1;
  auto* growth = app.add_subcommand("growth", "Growth table over a sweep of colors");
  growth->add_option("--expr", expr_text, "Link expression")->required();
  growth->add_option("--n", n_spec, "a:b:xk or a comma list")->required();
  growth->add_option("--split-mult", split_mult, "Exponent k of [N]")->check(CLI::PositiveNumber);
  growth->add_option("--csv", csv_path, "Write CSV here instead of stdout");
  growth->add_option("--threads", threads, "Worker threads")->envname("CJP_THREADS")->check(CLI::PositiveNumber);

  auto* trinomial = app.add_subcommand("trinomial", "Generalized trinomial coefficients");
  trinomial->add_option("--colors", colors, "Comma-separated colors")->required()->delimiter(',');
  trinomial->add_flag("--json", as_json, "JSON output");

  std::string suite = "all";
  cjp::SymfunSweep sweep;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "symfun, bracket or all")
      ->check(CLI::IsMember({"symfun", "bracket", "all"}));
  verify->add_option("--max-g", sweep.max_g, "Longest color vector")->check(CLI::PositiveNumber);
  verify->add_option("--max-color", sweep.max_color, "Largest color")->check(CLI::PositiveNumber);
  verify->add_option("--max-p", sweep.max_p, "Largest p")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (jones->parsed()) {
      const cjp::LinkExpr e = cjp::parse(expr_text);
      const std::vector<int> cs = resolve_colors(e, colors, color_all);
      if (split_mult != 1 && !normalized) throw UsageError("--split-mult needs --normalized");
      cjp::JonesEngine engine;
      if (!normalized) {
        const cjp::LaurentPoly p = engine.colored_jones(e, cs);
        std::cout << (as_json ? cjp::to_json(p).dump() : cjp::to_string(p)) << "\n";
      } else {
        const cjp::NormalizedValue v = engine.normalized_jones(e, cs, split_mult);
        if (const auto* p = std::get_if<cjp::LaurentPoly>(&v)) {
          std::cout << (as_json ? cjp::to_json(*p).dump() : cjp::to_string(*p)) << "\n";
        } else {
          const auto& d = std::get<cjp::DeferredRatio>(v);
          if (as_json) {
            nlohmann::json j{{"numerator", cjp::to_json(d.numerator)},
                             {"divisor", {{"quantum_integer", d.color}, {"power", d.power}}}};
            std::cout << j.dump() << "\n";
          } else {
            std::cout << "(" << cjp::to_string(d.numerator) << ") / [" << d.color << "]^" << d.power << "\n";
          }
        }
      }
    } else if (eval->parsed()) {
      const cjp::LinkExpr e = cjp::parse(expr_text);
      std::cout << format_complex(cjp::eval_normalized_at_root(e, color_all, split_mult)) << "\n";
    } else if (growth->parsed()) {
      const std::vector<int> ns = parse_colors_range(n_spec);
      const cjp::LinkExpr e = cjp::parse(expr_text);
      const auto records = cjp::growth_table(e, ns, split_mult, threads);
      std::ofstream file;
      if (!csv_path.empty()) {
        file.open(csv_path);
        if (!file) throw UsageError("cannot write " + csv_path);
      }
      std::ostream& out = csv_path.empty() ? std::cout : file;
      out << "N,maxdeg,mindeg,maxabscoeff,abs_eval,vc_value\n";
      for (const auto& r : records) {
        out << r.n << "," << r.maxdeg << "," << r.mindeg << "," << r.maxabscoeff.get_str() << ","
            << format_real(r.abs_eval) << "," << (r.vc_value ? format_real(*r.vc_value) : "") << "\n";
      }
    } else if (trinomial->parsed()) {
      const cjp::CoeffTable table{cjp::ColorVector(colors)};
      if (as_json) {
        nlohmann::json j{{"m", nlohmann::json::array()}, {"C", nlohmann::json::array()}};
        for (std::int64_t m : table.support()) {
          j["m"].push_back(m);
          j["C"].push_back(table.at(m).get_str());
        }
        std::cout << j.dump() << "\n";
      } else {
        for (std::int64_t m : table.support()) std::cout << m << " : " << table.at(m).get_str() << "\n";
      }
    } else if (verify->parsed()) {
      std::vector<cjp::SuiteResult> results;
      if (suite == "symfun" || suite == "all") results.push_back(cjp::run_symfun_suite(sweep));
      if (suite == "bracket" || suite == "all") results.push_back(cjp::run_bracket_suite());
      bool all_pass = true;
      for (const auto& r : results) {
        std::cout << r.name << "\t" << (r.pass ? "pass" : "FAIL") << "\t" << r.checks << " checks\n";
        for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        all_pass = all_pass && r.pass;
      }
      return all_pass ? 0 : 1;
    }
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return 2;
  } catch (const cjp::Error& err) {
    std::cerr << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "InternalError: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
