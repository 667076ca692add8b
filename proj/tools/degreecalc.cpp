// degreecalc: compute mapping degree sets and build / check realisation
// certificates from the command line.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "degreecalc/dsl.hpp"
#include "degreecalc/engine.hpp"
#include "degreecalc/json_io.hpp"
#include "degreecalc/realiser.hpp"
#include "degreecalc/verify.hpp"

namespace {

using namespace degreecalc;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::int64_t to_int(const std::string& s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw UsageError("not an integer: '" + s + "'");
  return v;
}

std::vector<std::int64_t> int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  if (trim(s).empty()) return out;
  for (const auto& part : split(s, ',')) out.push_back(to_int(part));
  return out;
}

ArithIntervals parse_progression(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw UsageError("--progression expects start:step:count");
  const std::int64_t start = to_int(parts[0]);
  const std::int64_t step = to_int(parts[1]);
  const std::int64_t count = to_int(parts[2]);
  if (count < 1) throw UsageError("--progression count must be >= 1");
  if (step == 0 && count > 1) throw UsageError("--progression step must be non-zero");
  std::vector<std::int64_t> terms;
  for (std::int64_t i = 0; i < count; ++i) terms.push_back(start + i * step);
  std::sort(terms.begin(), terms.end());
  ArithIntervals a;
  for (auto t : terms) a.bounds.emplace_back(t, t);
  return a;
}

ArithIntervals parse_intervals(const std::string& s) {
  ArithIntervals a;
  for (const auto& iv : split(s, ';')) {
    if (iv.empty()) continue;
    const auto bc = split(iv, ',');
    if (bc.size() != 2) throw UsageError("--intervals expects \"b1,c1;b2,c2;...\"");
    a.bounds.emplace_back(to_int(bc[0]), to_int(bc[1]));
  }
  return a;
}

std::string bound_text(const SetBound& b) {
  std::ostringstream os;
  if (b.exact())
    os << "exact " << b.lower << '\n';
  else
    os << "bounds lower " << b.lower << " upper "
       << (b.upper ? b.upper->to_string() : std::string("unknown")) << '\n';
  os << "trace:\n";
  for (const auto& r : b.trace) {
    os << "  " << r.rule_id << " [" << r.role << "] " << r.inputs[0] << " -> " << r.inputs[1]
       << ": " << r.produced_set;
    if (!r.note.empty()) os << "  (" << r.note << ')';
    os << '\n';
  }
  for (const auto& w : b.warnings) os << "warning: " << w << '\n';
  return os.str();
}

int run_compute(const std::string& pair, bool json) {
  const auto arrow = pair.find("->");
  if (arrow == std::string::npos) throw UsageError("compute expects \"<expr> -> <expr>\"");
  const Expr m = parse_expr(pair.substr(0, arrow));
  const Expr n = parse_expr(pair.substr(arrow + 2));
  const SetBound b = degree_bounds(m, n);
  if (json)
    std::cout << to_json(b).dump(2) << '\n';
  else
    std::cout << bound_text(b);
  return kExitOk;
}

int run_realize(const RealisationSpec& spec, const std::string& out) {
  const Certificate cert = realise(spec);
  const std::string text = to_json(cert).dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
    std::cerr << "target " << cert.target << "\nM = " << print_expr(cert.M)
              << "\nN = " << print_expr(cert.N) << "\nwrote " << out << '\n';
  }
  return kExitOk;
}

int run_verify(const std::string& path, bool json) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  Report report;
  try {
    const Certificate cert = certificate_from_json(Json::parse(f));
    report = check_certificate(cert, OracleConfig::from_env());
  } catch (const Json::exception& e) {
    report.mismatches.push_back({"format", e.what()});
  } catch (const MalformedCertificate& e) {
    report.mismatches.push_back({"format", e.what()});
  }
  if (json)
    std::cout << to_json(report).dump(2) << '\n';
  else
    std::cout << report_text(report);
  return report.ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mapping degree sets of circle-bundle manifolds and their realisations"};
  app.require_subcommand(1);

  bool json = false;
  std::string pair;
  auto* compute = app.add_subcommand("compute", "Degree set D(M,N) with its derivation");
  compute->add_option("pair", pair, "\"<expr> -> <expr>\"")->required();
  compute->add_flag("--json", json, "Print the bound and trace as JSON");

  auto* realize = app.add_subcommand("realize", "Build a realisation certificate");
  realize->require_subcommand(1);
  std::string out, progression, intervals, values;

  auto* arith = realize->add_subcommand("arith", "Arithmetic sequence of intervals");
  auto* prog_opt = arith->add_option("--progression", progression, "start:step:count");
  auto* iv_opt = arith->add_option("--intervals", intervals, "\"b1,c1;b2,c2;...\"");
  prog_opt->excludes(iv_opt);
  arith->add_option("--out", out, "Certificate file (stdout if omitted)");

  auto* subset = realize->add_subcommand("subset-sums", "All subset sums of the values");
  subset->add_option("--values", values, "a,b,c")->required()->allow_extra_args(false);
  subset->add_option("--out", out, "Certificate file (stdout if omitted)");

  auto* geom = realize->add_subcommand("geom", "{0,1} and all subset products of the values");
  geom->add_option("--values", values, "d1,d2,... with 1 <= d1 <= d2 <= ...")->required();
  geom->add_option("--out", out, "Certificate file (stdout if omitted)");

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Check a certificate; exit 0 iff it holds");
  verify->add_option("certificate", cert_path, "Certificate JSON file")->required();
  verify->add_flag("--json", json, "Print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return run_compute(pair, json);
    if (*arith) {
      if (progression.empty() == intervals.empty())
        throw UsageError("realize arith needs exactly one of --progression or --intervals");
      return run_realize(progression.empty() ? parse_intervals(intervals)
                                             : parse_progression(progression),
                         out);
    }
    if (*subset) return run_realize(SubsetSums{int_list(values)}, out);
    if (*geom) return run_realize(Geometric{int_list(values)}, out);
    if (*verify) return run_verify(cert_path, json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SemanticError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
