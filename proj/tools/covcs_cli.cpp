// Command-line front end: parameter configuration, Whittaker evaluation,
// verification suites, L-factor tables and Gelfand-Tsetlin dumps.

#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covcs/covcs.hpp"

using namespace covcs;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitConfigError = 2;

std::vector<int> parse_vec(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  return out;
}

/// Plain-text key=value config file; '#' starts a comment.
std::map<std::string, std::string> load_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("config", "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
      return s;
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

struct CommonOpts {
  int m = 2;
  int k = 1;
  int n = 1;
  long long p = 0;
  uint64_t seed = 12345;
  int trunc = 8;
  int theta_sign = 1;
  std::string backend = "formal";
  std::string config_file;
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_file, "key=value config file (flags override)");
  cmd->add_option("--m", o.m, "cover degree m");
  cmd->add_option("--k", o.k, "GL rank k");
  cmd->add_option("--n", o.n, "symplectic rank n");
  cmd->add_option("--p", o.p, "residue prime (default: smallest p = 1 mod 2m)");
  cmd->add_option("--seed", o.seed, "random seed (logged)");
  cmd->add_option("--trunc", o.trunc, "series truncation length L");
  cmd->add_option("--theta-sign", o.theta_sign, "value of theta(pi^r), +1 or -1");
  cmd->add_option("--backend", o.backend, "formal | numeric")
      ->check(CLI::IsMember({"formal", "numeric"}));
  cmd->add_option("--output", o.output, "write report to this path instead of stdout");
}

/// Apply file values for keys not set on the command line.
void merge_config(const CLI::App* cmd, CommonOpts& o) {
  if (o.config_file.empty()) return;
  auto kv = load_config(o.config_file);
  auto take = [&](const char* flag, const std::string& key, auto& slot) {
    if (cmd->count(flag) == 0 && kv.count(key)) {
      std::stringstream ss(kv.at(key));
      ss >> slot;
    }
  };
  take("--m", "m", o.m);
  take("--k", "k", o.k);
  take("--n", "n", o.n);
  take("--p", "p", o.p);
  take("--seed", "seed", o.seed);
  take("--trunc", "trunc", o.trunc);
  take("--theta-sign", "theta_sign", o.theta_sign);
  take("--backend", "backend", o.backend);
}

std::ostream& open_output(const CommonOpts& o, std::ofstream& file) {
  if (o.output.empty()) return std::cout;
  file.open(o.output);
  if (!file) throw CLI::ValidationError("output", "cannot open " + o.output);
  return file;
}

int run_whittaker(const CommonOpts& o, const std::string& bspec, bool also_iterative) {
  int r = o.m % 2 == 0 ? o.m / 2 : o.m;
  int d = r * o.k;
  ExpVec b = parse_vec(bspec);
  if (int(b.size()) != d) {
    std::cerr << "error: --b must have length rk = " << d << "\n";
    return kExitConfigError;
  }
  std::ofstream file;
  std::ostream& os = open_output(o, file);
  if (o.backend == "formal") {
    Context ctx{o.m, true};
    PSParams<FormalBackend> P(FormalBackend{ctx}, d, o.m, theta_spec(ctx, o.k, r));
    RationalExpr w = w_weyl(P, ExpVec(d, 0), b);
    os << "W_weyl = " << w.str() << "\n";
    if (also_iterative) os << "W_iter = " << w_iterative(P, ExpVec(d, 0), b).str() << "\n";
  } else {
    FieldParams F(o.p > 0 ? o.p : FieldParams::default_prime(o.m), o.m);
    std::mt19937_64 g(o.seed);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    std::uniform_real_distribution<double> rad(0.5, 1.8);
    os << "# seed=" << o.seed << " p=" << F.p() << "\n";
    for (int attempt = 0; attempt < 16; ++attempt) {
      std::vector<std::complex<double>> x;
      for (int i = 0; i < o.k; ++i) x.push_back(std::polar(rad(g), ang(g)));
      PSParams<NumericBackend> P(NumericBackend{&F, {double(o.theta_sign), 0.0}}, d,
                                 o.m, theta_spec_numeric(F, o.k, x));
      bool pole = false;
      for (int i = 0; i < d && !pole; ++i)
        for (int j = i + 1; j < d && !pole; ++j)
          pole = std::abs(P.y[i] / P.y[j] - std::complex<double>{1.0, 0.0}) < 1e-6;
      if (pole) {
        os << "# pole at sample, resampling\n";
        continue;
      }
      os << "x =";
      for (auto& v : x) os << " (" << v.real() << "," << v.imag() << ")";
      os << "\n";
      std::complex<double> w = w_weyl(P, ExpVec(d, 0), b);
      os << "W_weyl = (" << w.real() << "," << w.imag() << ")\n";
      if (also_iterative) {
        std::complex<double> wi = w_iterative(P, ExpVec(d, 0), b);
        os << "W_iter = (" << wi.real() << "," << wi.imag() << ")\n";
      }
      break;
    }
  }
  return 0;
}

int run_verify(const CommonOpts& o, const std::string& suite) {
  verify::Config cfg;
  cfg.seed = o.seed;
  cfg.p = o.p;
  cfg.trunc = o.trunc;
  cfg.theta = {double(o.theta_sign), 0.0};
  std::vector<verify::CaseResult> results;
  try {
    results = verify::run_suite(suite, cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) {
    return std::tie(a.suite, a.name) < std::tie(b.suite, b.name);
  });
  std::ofstream file;
  std::ostream& os = open_output(o, file);
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass &= r.pass;
    os << "{\"suite\":\"" << r.suite << "\",\"case\":\"" << r.name << "\",\"status\":\""
       << (r.pass ? "PASS" : "FAIL") << "\"";
    if (!r.detail.empty()) os << ",\"detail\":\"" << r.detail << "\"";
    os << "}\n";
  }
  return all_pass ? 0 : kExitVerifyFailure;
}

int run_verify_doubling(const CommonOpts& o) {
  Context ctx{o.m, true};
  DoublingParams P(o.n, o.k, o.m);
  TauParams tau = TauParams::standard(ctx, o.k);
  PiParams pi = PiParams::standard(ctx, o.n, P.m_odd());
  std::ofstream file;
  std::ostream& os = open_output(o, file);
  bool all = true;

  LFactorExpression comp = z_sp_composed(ctx, P, pi, tau);
  LFactorExpression closed = z_sp_closed(ctx, P, pi, tau);
  bool sp = lfactor_eq(comp, closed);
  all &= sp;
  os << (sp ? "PASS" : "FAIL") << " sp-main-theorem (n,k,m)=(" << o.n << "," << o.k
     << "," << o.m << ")\n";
  if (!sp)
    os << "  lhs " << comp.to_json_line() << "\n  rhs " << closed.to_json_line() << "\n";

  TauParams taup = TauParams::standard_xp(ctx, o.k);
  LFactorExpression rec = z_gl_recursive(ctx, P, o.n, Rat(1), pi.mu, tau, taup);
  LFactorExpression glc = z_gl_closed(ctx, P, o.n, Rat(1), pi.mu, tau, taup);
  bool gl = lfactor_eq(rec, glc);
  all &= gl;
  os << (gl ? "PASS" : "FAIL") << " gl-recursion (n,k,m)=(" << o.n << "," << o.k << ","
     << o.m << ")\n";
  if (!gl)
    os << "  lhs " << rec.to_json_line() << "\n  rhs " << glc.to_json_line() << "\n";

  if (o.p > 0) {
    // numeric spot check of the composed identity at one random sample
    std::mt19937_64 g(o.seed);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    std::uniform_real_distribution<double> rad(0.6, 1.5);
    NumericAssignment as;
    as.q_half = std::sqrt(double(o.p));
    as.s = std::polar(0.3, ang(g));
    as.theta = double(o.theta_sign);
    for (int i = 0; i < std::max(o.k, o.n); ++i) {
      as.x.push_back(std::polar(rad(g), ang(g)));
      as.xp.push_back(std::polar(rad(g), ang(g)));
      as.mu.push_back(std::polar(rad(g), ang(g)));
    }
    FieldParams F(o.p, o.m);
    as.gauss = [&F](int l) { return F.gauss_numeric(l); };
    std::complex<double> lhs = comp.expand().evaluate(as);
    std::complex<double> rhs = closed.expand().evaluate(as);
    bool num = std::abs(lhs - rhs) <= 1e-8 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
    all &= num;
    os << (num ? "PASS" : "FAIL") << " sp-main-theorem-numeric p=" << o.p << " seed="
       << o.seed << "\n";
  }
  return all ? 0 : kExitVerifyFailure;
}

int run_gt(const CommonOpts& o, int r, const std::string& topspec) {
  std::vector<int> top;
  if (!topspec.empty()) {
    top = parse_vec(topspec);
  } else {
    int d = r * o.k;
    for (int j = d - 1; j >= 0; --j) top.push_back(j);
  }
  std::ofstream file;
  std::ostream& os = open_output(o, file);
  size_t count = 0;
  enumerate_patterns(top, r, [&](const GTPattern& p) {
    os << pattern_json_line(p) << "\n";
    ++count;
  });
  std::cerr << count << " patterns\n";
  return 0;
}

int run_lfactors(const CommonOpts& o, bool tsv) {
  Context ctx{o.m, true};
  DoublingParams P(o.n, o.k, o.m);
  TauParams tau = TauParams::standard(ctx, o.k);
  PiParams pi = PiParams::standard(ctx, o.n, P.m_odd());
  std::ofstream file;
  std::ostream& os = open_output(o, file);
  struct Row {
    const char* name;
    LFactorExpression expr;
  };
  std::vector<Row> rows = {
      {"d_tau", d_tau(ctx, P, Rat(1), tau)},
      {"z_sp_closed", z_sp_closed(ctx, P, pi, tau)},
      {"z_sp_composed", z_sp_composed(ctx, P, pi, tau)},
      {"z_gl_closed",
       z_gl_closed(ctx, P, o.n, Rat(1), pi.mu, tau, TauParams::standard_xp(ctx, o.k))},
  };
  if (tsv) {
    os << "name\tnum_atoms\tden_atoms\texpansion_num_terms\texpansion_den_terms\n";
    for (auto& r : rows) {
      RationalExpr e = r.expr.expand();
      os << r.name << "\t" << r.expr.num_atoms().size() << "\t"
         << r.expr.den_atoms().size() << "\t" << e.num().term_count() << "\t"
         << e.den().term_count() << "\n";
    }
  } else {
    for (auto& r : rows)
      os << "{\"name\":\"" << r.name << "\",\"expr\":" << r.expr.to_json_line() << "}\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covcs: exact covering Casselman-Shalika and doubling L-factor toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string bspec = "0";
  bool also_iterative = false;
  std::string suite = "all";
  int gt_r = 1;
  std::string gt_top_spec;
  bool tsv = false;

  CLI::App* whit = app.add_subcommand("whittaker", "evaluate W(0, b) on the (m,k) grid");
  add_common(whit, o);
  whit->add_option("--b", bspec, "torus exponent vector, comma separated");
  whit->add_flag("--iterative", also_iterative, "also print the iterative-formula value");

  CLI::App* ver = app.add_subcommand("verify", "run a named verification suite");
  add_common(ver, o);
  ver->add_option("--suite", suite,
                  "cocycle | cs-identity | whittaker-pl | gt-top | gk | rs-series | "
                  "doubling | all");

  CLI::App* vd = app.add_subcommand("verify-doubling",
                                    "check the doubling identities for one (n,k,m)");
  add_common(vd, o);
  vd->add_option("--numeric", o.p, "also spot-check numerically at this prime");

  CLI::App* gt = app.add_subcommand("gt", "dump divisibility-filtered GT patterns");
  add_common(gt, o);
  gt->add_option("--r", gt_r, "divisibility parameter r");
  gt->add_option("--top", gt_top_spec, "top row (default staircase rk-1..0)");

  CLI::App* lf = app.add_subcommand("lfactors", "emit L-factor tables");
  add_common(lf, o);
  lf->add_flag("--tsv", tsv, "TSV summary instead of JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfigError;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    merge_config(sub, o);
    if (o.m < 1 || o.k < 1 || o.n < 1) {
      std::cerr << "error: m, k, n must be positive\n";
      return kExitConfigError;
    }
    if (sub == whit) return run_whittaker(o, bspec, also_iterative);
    if (sub == ver) return run_verify(o, suite);
    if (sub == vd) return run_verify_doubling(o);
    if (sub == gt) return run_gt(o, gt_r, gt_top_spec);
    if (sub == lf) return run_lfactors(o, tsv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
