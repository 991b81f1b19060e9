// vnlab: JSON reports on stdout, a short summary on stderr.
// Exit status: 0 all checks passed, 1 some check failed, 2 usage or input error.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vnlab/campaign.hpp"
#include "vnlab/error.hpp"
#include "vnlab/io.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kInputError = 2;

int emit(const vnlab::Report& report) {
  std::cout << report.dump();
  std::cout.flush();
  const std::size_t total = report.checks.size();
  const std::size_t passed = report.passed_count();
  std::cerr << report.command << ": " << passed << "/" << total << " checks passed\n";
  int shown = 0;
  for (const vnlab::Check& c : report.checks) {
    if (c.passed) continue;
    if (++shown > 10) {
      std::cerr << "  ... " << (total - passed - 10) << " more\n";
      break;
    }
    std::cerr << "  FAIL " << c.name << " (deviation " << c.deviation << ", tolerance " << c.tolerance << ")\n";
  }
  return report.passed() ? kPass : kCheckFailure;
}

std::optional<double> optional_tol(const CLI::Option* opt, double value) {
  if (opt->count() == 0) return std::nullopt;
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Gabor systems, Hilbert modules and bounded vectors"};
  app.require_subcommand(1);
  app.set_version_flag("--version", vnlab::version());

  std::vector<int> orders;
  std::string lattice_arg, window_arg;
  std::uint64_t seed = 7;
  int trials = 5;
  int blocks = 2;
  int max_order = 8;
  std::int64_t cap = 256;
  double tol = 0.0;
  bool all_lattices = false;
  bool random = false;

  auto add_orders = [&](CLI::App* sub) {
    sub->add_option("--orders", orders, "cyclic factor orders, e.g. 4 or 2,3")->required()->delimiter(',')->check(CLI::PositiveNumber);
  };

  CLI::App* lattices = app.add_subcommand("lattices", "enumerate the subgroups of G x G^");
  add_orders(lattices);
  lattices->add_option("--cap", cap, "refuse when |G|^2 exceeds this")->check(CLI::PositiveNumber);

  CLI::App* adjoint = app.add_subcommand("adjoint", "adjoint lattice");
  add_orders(adjoint);
  adjoint->add_option("--lattice", lattice_arg, "lattice JSON (inline or file)")->required();

  CLI::App* bessel = app.add_subcommand("bessel", "Bessel bounds of a window over a lattice and its adjoint");
  add_orders(bessel);
  bessel->add_option("--lattice", lattice_arg, "lattice JSON (inline or file)")->required();
  CLI::Option* window_opt = bessel->add_option("--window", window_arg, "window JSON (inline or file); seeded Gaussian if absent");
  bessel->add_option("--seed", seed, "seed for the default window");
  CLI::Option* bessel_tol = bessel->add_option("--tol", tol, "override every tolerance");

  CLI::App* duality = app.add_subcommand("duality", "duality campaign over lattices and seeded windows");
  add_orders(duality);
  duality->add_flag("--all-lattices", all_lattices, "sweep every subgroup");
  CLI::Option* duality_lattice = duality->add_option("--lattice", lattice_arg, "single lattice JSON (inline or file)");
  duality->add_option("--trials", trials, "windows per lattice")->check(CLI::NonNegativeNumber);
  duality->add_option("--seed", seed, "master seed");
  CLI::Option* duality_tol = duality->add_option("--tol", tol, "override every tolerance");

  CLI::App* bimodule = app.add_subcommand("bimodule", "left/right bounded vectors on a random bimodule");
  bimodule->add_flag("--random", random, "construct a seeded random instance")->required();
  bimodule->add_option("--seed", seed, "master seed");
  bimodule->add_option("--blocks", blocks, "number of central blocks")->check(CLI::Range(1, 4));
  bimodule->add_option("--trials", trials, "random vectors")->check(CLI::NonNegativeNumber);
  CLI::Option* bimodule_tol = bimodule->add_option("--tol", tol, "override every tolerance");

  CLI::App* selftest = app.add_subcommand("selftest", "full acceptance suite");
  selftest->add_option("--max-order", max_order, "largest cyclic order in the sweeps")->check(CLI::Range(2, 8));
  selftest->add_option("--seed", seed, "master seed");
  CLI::Option* selftest_tol = selftest->add_option("--tol", tol, "override every tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*lattices) {
      const vnlab::FiniteAbelianGroup group(orders);
      return emit(vnlab::run_lattices(group, cap));
    }
    if (*adjoint) {
      const vnlab::FiniteAbelianGroup group(orders);
      return emit(vnlab::run_adjoint(vnlab::parse_lattice(group, lattice_arg)));
    }
    if (*bessel) {
      const vnlab::FiniteAbelianGroup group(orders);
      const vnlab::Lattice lattice = vnlab::parse_lattice(group, lattice_arg);
      vnlab::Rng rng(vnlab::derive_seed(seed, "bessel-window"));
      const vnlab::Window g = window_opt->count() ? vnlab::parse_window(group, window_arg) : vnlab::Window::gaussian(group, rng);
      return emit(vnlab::run_bessel(lattice, g, optional_tol(bessel_tol, tol)));
    }
    if (*duality) {
      const vnlab::FiniteAbelianGroup group(orders);
      std::vector<vnlab::Lattice> chosen;
      if (all_lattices) {
        chosen = vnlab::enumerate_subgroups(group);
      } else if (duality_lattice->count()) {
        chosen.push_back(vnlab::parse_lattice(group, lattice_arg));
      } else {
        std::cerr << "duality: pass --all-lattices or --lattice\n";
        return kInputError;
      }
      return emit(vnlab::run_duality(chosen, trials, seed, optional_tol(duality_tol, tol)));
    }
    if (*bimodule) return emit(vnlab::run_bimodule(seed, blocks, trials, optional_tol(bimodule_tol, tol)));
    if (*selftest) {
      vnlab::SuiteOptions options;
      options.max_order = max_order;
      options.seed = seed;
      options.tol = optional_tol(selftest_tol, tol);
      return emit(vnlab::run_selftest(options));
    }
  } catch (const vnlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const vnlab::Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
