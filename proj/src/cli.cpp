#include "kpzlab/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kpzlab/combinatorics.hpp"
#include "kpzlab/errors.hpp"
#include "kpzlab/kernels.hpp"
#include "kpzlab/parallel.hpp"
#include "kpzlab/png.hpp"
#include "kpzlab/pointfield.hpp"
#include "kpzlab/rmt.hpp"
#include "kpzlab/stats.hpp"
#include "kpzlab/tracy_widom.hpp"

namespace kpzlab {

namespace {

struct Common {
  std::string out = "-";
  std::uint64_t seed = 1;
  unsigned threads = default_thread_count();
  std::string config;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "output file, '-' for standard output");
  sub->add_option("--seed", c.seed, "base seed; replica i uses seed + i");
  sub->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--config", c.config, "flat key=value file; flags take precedence");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void emit(const Common& c, const std::vector<std::string>& args, const std::string& body) {
  std::ostringstream os;
  os << "# kpzlab " << kToolVersion << " argv=\"" << join_args(args) << "\" seed=" << c.seed << '\n';
  os << "# timestamp " << timestamp() << '\n';
  os << body;
  if (c.out == "-") {
    std::cout << os.str();
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw InvalidInput("cannot open output file '" + c.out + "'");
  f << os.str();
  if (!f) throw InvalidInput("failed writing '" + c.out + "'");
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InvalidParameter("cannot parse '" + tok + "' as a number");
    }
  }
  if (v.empty()) throw InvalidParameter("empty list");
  return v;
}

// Appends config entries whose flags are absent from the command line.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  const auto entries = read_config(path);
  std::vector<std::string> extra;
  for (const auto& [key, value] : entries) {
    if (key == "config") throw InvalidParameter("config files cannot include other config files");
    const std::string flag = "--" + key;
    bool present = false;
    for (std::size_t i = 1; i < args.size(); ++i)
      if (args[i] == flag || args[i].rfind(flag + "=", 0) == 0) present = true;
    if (!present) {
      extra.push_back(flag);
      extra.push_back(value);
    }
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(f, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidInput(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty() || key.find_first_of(" \t") != std::string::npos)
      throw InvalidInput(path + ":" + std::to_string(lineno) + ": bad key");
    out.emplace_back(key, value);
  }
  return out;
}

int run_cli(int argc, const char* const* argv) {
  return run_cli(std::vector<std::string>(argv, argv + argc));
}

int run_cli(const std::vector<std::string>& raw_args) {
  std::vector<std::string> args;
  try {
    args = merge_config(raw_args);
  } catch (const std::exception& e) {
    std::cerr << "kpzlab: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Growth models, random matrices and Tracy-Widom laws", "kpzlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Common common;

  // tw
  int tw_beta = 2;
  double smin = -8.0, smax = 6.0, step = 0.05;
  std::string method = "painleve";
  auto* tw = app.add_subcommand("tw", "tabulate F_1 or F_2");
  add_common(tw, common);
  tw->add_option("--beta", tw_beta)->check(CLI::IsMember({1, 2}));
  tw->add_option("--smin", smin);
  tw->add_option("--smax", smax);
  tw->add_option("--step", step);
  tw->add_option("--method", method)->check(CLI::IsMember({"painleve", "fredholm"}));

  // png
  std::string geometry = "droplet";
  double T = 100.0;
  std::size_t samples = 1000;
  auto* png = app.add_subcommand("png", "rescaled PNG heights h(0,T)");
  add_common(png, common);
  png->add_option("--geometry", geometry)->check(CLI::IsMember({"droplet", "flat"}));
  png->add_option("--T", T);
  png->add_option("--samples", samples);

  // rmt
  std::string ensemble = "gue";
  long N = 100;
  auto* rmt = app.add_subcommand("rmt", "rescaled largest eigenvalues");
  add_common(rmt, common);
  rmt->add_option("--ensemble", ensemble)->check(CLI::IsMember({"gue", "goe"}));
  rmt->add_option("--N", N);
  rmt->add_option("--samples", samples);

  // dyson
  std::string taus_arg = "0";
  std::size_t paths = 100;
  auto* dyson = app.add_subcommand("dyson", "largest-eigenvalue paths under matrix OU dynamics");
  add_common(dyson, common);
  dyson->add_option("--ensemble", ensemble)->check(CLI::IsMember({"gue", "goe"}));
  dyson->add_option("--N", N);
  dyson->add_option("--taus", taus_arg, "comma-separated increasing times");
  dyson->add_option("--paths", paths);

  // compare
  std::string empirical_path, reference_path;
  auto* cmp = app.add_subcommand("compare", "KS distance of a sample against a table");
  add_common(cmp, common);
  cmp->add_option("--empirical", empirical_path)->required();
  cmp->add_option("--reference", reference_path)->required();

  // kernel
  std::string kind = "airy";
  double s1 = 0.0, s2 = 0.0, shift = 0.0, tau1 = 0.0, tau2 = 0.0;
  int ki = 1, kj = 2;
  auto* kern = app.add_subcommand("kernel", "evaluate one kernel entry");
  add_common(kern, common);
  kern->add_option("--kind", kind)->check(CLI::IsMember({"airy", "airy-b", "goe", "extended"}));
  kern->add_option("--s1", s1);
  kern->add_option("--s2", s2);
  kern->add_option("--shift", shift, "s of the kernel Ai(x + y + s)");
  kern->add_option("--tau1", tau1);
  kern->add_option("--tau2", tau2);
  kern->add_option("--i", ki)->check(CLI::IsMember({1, 2}));
  kern->add_option("--j", kj)->check(CLI::IsMember({1, 2}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "kpzlab: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    std::ostringstream body;
    if (tw->parsed()) {
      if (!(step > 0) || !(smin < smax)) throw InvalidParameter("need smin < smax and step > 0");
      write_csv(body, tw_table(tw_beta, smin, smax, step, parse_method(method)));
    } else if (png->parsed()) {
      if (!(T > 0) || !std::isfinite(T)) throw InvalidParameter("--T must be positive");
      if (samples < 1) throw InvalidParameter("--samples must be at least 1");
      const bool droplet = geometry == "droplet";
      const auto values = parallel_map(samples, common.threads, [&](std::size_t i) {
        const Seed seed{common.seed + i, 0};
        if (droplet) {
          const PointField f = sample_poisson(Rectangle{T, T}, 1.0, seed);
          return rescale_droplet(droplet_height(T, 0.0, f), T, 0.0).s;
        }
        const PointField f = sample_poisson(Triangle{T}, 1.0, seed);
        return rescale_flat(flat_height(T, f), T);
      });
      body << "seed,s\n";
      for (std::size_t i = 0; i < samples; ++i)
        body << common.seed + i << ',' << format_double(values[i]) << '\n';
    } else if (rmt->parsed()) {
      if (N < 1) throw InvalidParameter("--N must be at least 1");
      if (samples < 1) throw InvalidParameter("--samples must be at least 1");
      const EnsembleKind k = ensemble == "gue" ? EnsembleKind::GUE : EnsembleKind::GOE;
      const auto values = parallel_map(samples, common.threads, [&](std::size_t i) {
        return spectrum(sample_matrix(k, N, Seed{common.seed + i, 0})).edge_value;
      });
      body << "seed,edge_value\n";
      for (std::size_t i = 0; i < samples; ++i)
        body << common.seed + i << ',' << format_double(values[i]) << '\n';
    } else if (dyson->parsed()) {
      if (N < 1) throw InvalidParameter("--N must be at least 1");
      if (paths < 1) throw InvalidParameter("--paths must be at least 1");
      const std::vector<double> taus = parse_list(taus_arg);
      const EnsembleKind k = ensemble == "gue" ? EnsembleKind::GUE : EnsembleKind::GOE;
      const auto result = parallel_map(paths, common.threads, [&](std::size_t i) {
        return top_eigenvalue_path(k, N, taus, Seed{common.seed + i, 0});
      });
      body << "path_id,tau,edge_value\n";
      for (std::size_t i = 0; i < paths; ++i)
        for (std::size_t j = 0; j < taus.size(); ++j)
          body << i << ',' << format_double(result[i].taus[j]) << ','
               << format_double(result[i].values[j]) << '\n';
    } else if (cmp->parsed()) {
      std::ifstream ef(empirical_path), rf(reference_path);
      if (!ef) throw InvalidInput("cannot open '" + empirical_path + "'");
      if (!rf) throw InvalidInput("cannot open '" + reference_path + "'");
      const EmpiricalDist e = read_empirical(ef);
      const DistTable t = read_dist_table(rf);
      const std::string tag = "F" + std::to_string(t.beta) + " " + to_string(t.method);
      const ComparisonReport r = compare(e, t, tag);
      if (r.clamped) std::cerr << "kpzlab: warning: samples outside the reference grid were clamped\n";
      write_json(body, r);
    } else if (kern->parsed()) {
      double v = 0.0;
      if (kind == "airy") v = airy_kernel(s1, s2);
      else if (kind == "airy-b") v = airy_b_kernel(shift, s1, s2);
      else if (kind == "goe") v = goe_kernel_entry(ki, kj, s1, s2);
      else v = extended_airy_kernel(tau1, s1, tau2, s2);
      body << "kind,s1,s2,value\n" << kind << ',' << format_double(s1) << ',' << format_double(s2)
           << ',' << format_double(v) << '\n';
    }
    emit(common, raw_args, body.str());
  } catch (const NumericError& e) {
    std::cerr << "kpzlab: numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "kpzlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "kpzlab: numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace kpzlab
