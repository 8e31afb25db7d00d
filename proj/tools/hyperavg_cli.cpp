// Command-line driver: spectrum / simulate / verify / figure / probe.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperavg/errors.hpp"
#include "hyperavg/experiments.hpp"
#include "hyperavg/io.hpp"
#include "hyperavg/matrix.hpp"
#include "hyperavg/process.hpp"
#include "hyperavg/report.hpp"
#include "hyperavg/spectral.hpp"

namespace {

using namespace hyperavg;

constexpr const char* kVersion = "hyperavg 0.1.0";

// Writes `text` to `path`, or to stdout when path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) raise(Errc::bad_parameters, "cannot open output file '" + path + "'");
  f << text;
}

double parse_double(const std::string& tok) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    raise(Errc::parse_error, "bad weight value '" + tok + "'");
  }
  if (used != tok.size()) raise(Errc::parse_error, "bad weight value '" + tok + "'");
  return v;
}

std::vector<double> parse_double_list(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n' || c == '\r' || c == '\t') c = ' ';
  }
  std::istringstream ss(text);
  std::vector<double> out;
  std::string tok;
  while (ss >> tok) out.push_back(parse_double(tok));
  return out;
}

// Weight specs: builtin:{star,path-single,path-endpoints,random}, an inline
// comma-separated list, or a file of numbers. `seed` feeds builtin:random.
WeightVector resolve_weights(const std::string& spec, std::size_t n, std::uint64_t seed) {
  if (n == 0) raise(Errc::bad_parameters, "instance has no vertices");
  if (spec.rfind("builtin:", 0) == 0) {
    const std::string name = spec.substr(8);
    if (name == "star" || name == "path-single") {
      WeightVector x(n, -1.0 / static_cast<double>(n));
      x[0] += 1.0;
      return x;
    }
    if (name == "path-endpoints") {
      WeightVector x(n, 0.0);
      x[0] = 1.0;
      x[n - 1] = -1.0;
      return x;
    }
    if (name == "random") return random_weights(n, seed);
    raise(Errc::bad_parameters, "unknown weight builtin '" + spec + "'");
  }
  std::vector<double> values;
  if (spec.find(',') != std::string::npos) {
    values = parse_double_list(spec);
  } else {
    std::ifstream f(spec);
    if (!f) raise(Errc::parse_error, spec + ": cannot open weights file");
    std::stringstream buf;
    buf << f.rdbuf();
    values = parse_double_list(buf.str());
  }
  if (values.size() != n) {
    raise(Errc::bad_parameters, "expected " + std::to_string(n) + " weights, got " +
                                    std::to_string(values.size()));
  }
  return values;
}

void print_seed(std::uint64_t seed) { std::fprintf(stderr, "seed: %llu\n", (unsigned long long)seed); }

struct CommonOpts {
  std::string input;    // file path or builtin name; empty = unset
  std::string weights = "builtin:random";
  std::string out;
  std::uint64_t seed = 0;
  std::uint64_t steps = 0;
  std::uint64_t trials = 1;
};

Instance require_instance(const CommonOpts& o) {
  if (o.input.empty()) raise(Errc::bad_parameters, "an instance is required (--input or --builtin)");
  return load_instance(o.input);
}

int reports_exit(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.verdict) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated averaging on hypergraphs: spectra, simulation, verification"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // Shared option plumbing; each subcommand registers the subset it uses.
  CommonOpts o;
  auto add_instance_opts = [&](CLI::App* cmd) {
    auto* in = cmd->add_option("--input", o.input, "instance file (.hg hypergraph / .gr graph)");
    cmd->add_option("--builtin", o.input,
                    "builtin instance: star:n, path:n, cycle:n, complete:n, knr:n:r, petersen, "
                    "q3, fano, hprime")
        ->excludes(in);
  };

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the codegree Laplacian");
  add_instance_opts(spectrum);
  bool dump_matrix = false;
  spectrum->add_flag("--matrix", dump_matrix, "dump the integer Laplacian as CSV instead");
  spectrum->add_option("--out", o.out, "output file (default stdout)");

  auto* simulate = app.add_subcommand("simulate", "trajectory statistics for the averaging process");
  add_instance_opts(simulate);
  std::string mode = "edge";
  simulate->add_option("--weights", o.weights,
                       "initial weights: builtin:star|builtin:path-endpoints|builtin:path-single|"
                       "builtin:random, an inline comma-separated list, or a file of numbers");
  simulate->add_option("--steps", o.steps, "number of averaging steps")->required();
  simulate->add_option("--trials", o.trials, "independent trajectories (default 1)");
  simulate->add_option("--seed", o.seed, "RNG seed (default 0)");
  simulate->add_option("--mode", mode, "edge | neighborhood (default edge)")
      ->check(CLI::IsMember({"edge", "neighborhood"}));
  simulate->add_option("--out", o.out, "output CSV file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check a convergence claim, exactly or by Monte Carlo");
  std::string claim;
  verify->add_option("--claim", claim, "theorem2|theorem3|theorem4|prop5|prop6|corollary")
      ->required()
      ->check(CLI::IsMember({"theorem2", "theorem3", "theorem4", "prop5", "prop6", "corollary"}));
  add_instance_opts(verify);
  verify->add_option("--weights", o.weights, "initial weights (default builtin:random)");
  bool want_exact = false, want_mc = false;
  auto* fx = verify->add_flag("--exact", want_exact, "exact expectation by enumeration");
  verify->add_flag("--mc", want_mc, "Monte-Carlo estimate")->excludes(fx);
  std::uint64_t tmax = 30;
  double c_param = 1.0, se_mult = 4.0;
  std::uint64_t budget = 10'000'000;
  o.steps = 4;
  o.trials = 100000;
  verify->add_option("--steps", o.steps, "horizon t for theorem2/3/4 and prop6 (default 4; prop6 10)");
  verify->add_option("--tmax", tmax, "largest t for prop5 exact sweep (default 30)");
  verify->add_option("--trials", o.trials, "Monte-Carlo trials (default 100000)");
  verify->add_option("--seed", o.seed, "RNG seed (default 0)");
  verify->add_option("--c", c_param, "target e^{-c} factor for corollary (default 1)");
  verify->add_option("--se-mult", se_mult, "standard-error multiplier folded into tolerances (default 4)");
  verify->add_option("--budget", budget, "exact-enumeration leaf budget (default 1e7)");
  std::string report_fmt = "json";
  verify->add_option("--report", report_fmt, "json | csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", o.out, "output file (default stdout)");

  auto* figure = app.add_subcommand("figure", "reproduce a delta_1 decay experiment");
  std::string which_fig;
  figure->add_option("--which", which_fig, "fs | f1 | f2")
      ->required()
      ->transform(CLI::detail::to_lower)
      ->check(CLI::IsMember({"fs", "f1", "f2"}));
  std::uint64_t fig_n = 0;
  figure->add_option("--n", fig_n, "size parameter (default: fs 1000, f1/f2 40)");
  std::uint64_t fig_tmax = 0;
  figure->add_option("--tmax", fig_tmax, "horizon (default: fs ceil(2 n ln n), f1/f2 n^3)");
  o.trials = 32;
  figure->add_option("--trials", o.trials, "independent trajectories (default 32)");
  figure->add_option("--seed", o.seed, "RNG seed (default 0)");
  figure->add_option("--out", o.out, "output CSV file (default stdout)");

  auto* probe = app.add_subcommand("probe", "conjecture data sweeps (no verdicts)");
  std::string which_conj;
  probe->add_option("--which", which_conj, "conj1 | conj2")
      ->required()
      ->check(CLI::IsMember({"conj1", "conj2"}));
  std::uint64_t probe_n = 0;
  probe->add_option("--n", probe_n, "size parameter")->required();
  o.trials = 32;
  probe->add_option("--trials", o.trials, "trials per horizon (default 32)");
  probe->add_option("--seed", o.seed, "RNG seed (default 0)");
  probe->add_option("--out", o.out, "output CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*spectrum) {
      const auto inst = require_instance(o);
      const auto h = inst.to_hypergraph();
      const auto L = codegree_laplacian_int(h);
      if (dump_matrix) {
        emit(o.out, int_matrix_to_csv(L));
        return 0;
      }
      const auto spec = eigenvalues_symmetric(to_double(L));
      std::string text;
      char buf[64];
      for (double ev : spec.eigenvalues) {
        std::snprintf(buf, sizeof buf, "%.12g\n", ev);
        text += buf;
      }
      emit(o.out, text);
      return 0;
    }

    if (*simulate) {
      const auto inst = require_instance(o);
      print_seed(o.seed);
      const SimConfig cfg{o.seed, o.steps, o.trials};
      std::vector<SeriesRow> rows;
      if (mode == "neighborhood") {
        const auto g = inst.to_graph();
        const auto x = resolve_weights(o.weights, g.vertex_count(), o.seed);
        rows = aggregate_trajectories_neighborhood(g, x, cfg);
      } else {
        const auto h = inst.to_hypergraph();
        const auto x = resolve_weights(o.weights, h.vertex_count(), o.seed);
        rows = aggregate_trajectories(h, x, cfg);
      }
      emit(o.out, series_to_csv(rows));
      return 0;
    }

    if (*verify) {
      print_seed(o.seed);
      const bool explicit_mode = want_exact || want_mc;
      const SimConfig cfg{o.seed, o.steps, o.trials};
      std::vector<VerificationReport> reports;

      // Auto mode tries exact enumeration first and falls back to Monte Carlo
      // when the leaf budget is exceeded.
      auto run_instance_claim = [&](auto&& fn) {
        if (want_mc) {
          reports.push_back(fn(false));
          return;
        }
        if (want_exact) {
          reports.push_back(fn(true));
          return;
        }
        try {
          reports.push_back(fn(true));
        } catch (const Error& e) {
          if (e.code() != Errc::budget_exceeded) throw;
          reports.push_back(fn(false));
        }
      };

      if (claim == "theorem2") {
        const auto h = require_instance(o).to_hypergraph();
        const auto x = resolve_weights(o.weights, h.vertex_count(), o.seed);
        run_instance_claim(
            [&](bool exact) { return verify_theorem2(h, x, o.steps, exact, cfg, se_mult, budget); });
      } else if (claim == "theorem3") {
        const auto h = require_instance(o).to_hypergraph();
        const auto x = resolve_weights(o.weights, h.vertex_count(), o.seed);
        run_instance_claim([&](bool exact) {
          return verify_theorem3_on(h, x, o.steps, cfg, exact, se_mult, budget);
        });
      } else if (claim == "theorem4") {
        const auto g = require_instance(o).to_graph();
        const auto x = resolve_weights(o.weights, g.vertex_count(), o.seed);
        run_instance_claim(
            [&](bool exact) { return verify_theorem4(g, x, o.steps, cfg, exact, se_mult, budget); });
      } else if (claim == "corollary") {
        if (want_exact) {
          raise(Errc::bad_parameters, "corollary verification is Monte-Carlo only");
        }
        const auto h = require_instance(o).to_hypergraph();
        const auto x = resolve_weights(o.weights, h.vertex_count(), o.seed);
        reports = verify_corollary(h, x, c_param, cfg, se_mult);
      } else if (claim == "prop5") {
        reports = verify_prop5(tmax, cfg, /*with_mc=*/!want_exact, se_mult);
      } else {  // prop6
        const std::uint64_t t = verify->count("--steps") ? o.steps : 10;
        reports = verify_prop6(t, cfg, /*with_mc=*/!want_exact, se_mult);
      }
      (void)explicit_mode;

      emit(o.out, report_fmt == "csv" ? reports_to_csv(reports) : reports_to_json(reports));
      return reports_exit(reports);
    }

    if (*figure) {
      print_seed(o.seed);
      const Figure which = which_fig == "fs" ? Figure::fs : which_fig == "f1" ? Figure::f1 : Figure::f2;
      if (fig_n == 0) fig_n = which == Figure::fs ? 1000 : 40;
      const SimConfig cfg{o.seed, 0, o.trials};
      const auto rows = reproduce_figure(which, fig_n, fig_tmax, cfg);
      emit(o.out, figure_to_csv(rows));
      return 0;
    }

    if (*probe) {
      print_seed(o.seed);
      const Conjecture which = which_conj == "conj1" ? Conjecture::conj1 : Conjecture::conj2;
      const SimConfig cfg{o.seed, 0, o.trials};
      const auto rows = conjecture_probe(which, probe_n, cfg);
      emit(o.out, probe_to_csv(rows));
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;  // unreachable: require_subcommand(1)
}
