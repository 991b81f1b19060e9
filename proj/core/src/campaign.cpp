#include "vnlab/campaign.hpp"

#include <cmath>
#include <memory>
#include <regex>

#include "vnlab/error.hpp"
#include "vnlab/io.hpp"

namespace vnlab {

Tolerances Tolerances::with_override(std::optional<double> all) {
  Tolerances t;
  if (all) t.bessel = t.span = t.dimension = t.bounded = *all;
  return t;
}

namespace {

// "name[3]" -> "name": per-block indices are dropped when checks are pooled.
std::string strip_index(const std::string& name) {
  static const std::regex trailing(R"(\[[0-9]+\]$)");
  return std::regex_replace(name, trailing, "");
}

std::string order_tag(int n) { return " [n=" + std::to_string(n) + "]"; }

Check bessel_duality_check(const std::string& name, double bound, double adjoint_bound, double covol, double tol) {
  const double scaled = covol * bound;
  const double dev = std::abs(adjoint_bound - scaled) / std::max(1.0, bound);
  return {name, dev <= tol, adjoint_bound, scaled, tol, dev};
}

Json coefficients_json(const RealVector& c) {
  Json j = Json::array();
  for (Index k = 0; k < c.size(); ++k) j.push_back(c(k));
  return j;
}

void add_cdim_cross(std::vector<Check>& out, const std::string& label, const CenterElement& a, const CenterElement& b,
                    double tol) {
  if (a.coefficients.size() != b.coefficients.size()) {
    out.push_back({label + " block count", false, static_cast<double>(a.coefficients.size()),
                   static_cast<double>(b.coefficients.size()), 0.0, 1.0});
    return;
  }
  for (Index k = 0; k < a.coefficients.size(); ++k)
    out.push_back(absolute_check(label, a.coefficients(k), b.coefficients(k), tol));
}

struct Inclusion {
  std::string label;
  StarAlgebra n;
  StarAlgebra b;
};

std::vector<Inclusion> standard_inclusions() {
  const Matrix half = block_diagonal({Matrix::Identity(2, 2), Matrix::Zero(2, 2)});
  return {
      {"M4 > M2(x)1", full_matrix_algebra(4), tensor_identity(full_matrix_algebra(2), 2)},
      {"M2+M2 > C+C", direct_sum({full_matrix_algebra(2), full_matrix_algebra(2)}), generate_algebra(4, {half})},
      {"M6 > M3(x)1", full_matrix_algebra(6), tensor_identity(full_matrix_algebra(3), 2)},
  };
}

}  // namespace

// ---------------------------------------------------------------------------
// Single commands

Report run_lattices(const FiniteAbelianGroup& group, std::int64_t cap) {
  Report r;
  r.command = "lattices";
  r.parameters["orders"] = group.orders();
  r.parameters["cap"] = cap;
  const std::vector<Lattice> all = enumerate_subgroups(group, cap);
  Json list = Json::array();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Lattice& l = all[i];
    Json entry = to_json(l);
    entry["index"] = i;
    list.push_back(std::move(entry));
    r.add(defect_check("lattice[" + std::to_string(i) + "] closed", l.is_closed() ? 0.0 : 1.0, 0.0));
    const std::int64_t g2 = group.size() * group.size();
    r.add(absolute_check("lattice[" + std::to_string(i) + "] order divides |G|^2", static_cast<double>(g2 % static_cast<std::int64_t>(l.size())), 0.0, 0.0));
    ++total;
  }
  r.result = {{"count", total}, {"lattices", std::move(list)}};
  return r;
}

Report run_adjoint(const Lattice& lattice) {
  Report r;
  r.command = "adjoint";
  r.parameters["orders"] = lattice.group().orders();
  r.parameters["lattice"] = to_json(lattice)["generators"];
  const Lattice adj = adjoint_lattice(lattice);
  const double g = static_cast<double>(lattice.group().size());
  r.add(defect_check("adjoint lattice closed", adj.is_closed() ? 0.0 : 1.0, 0.0));
  r.add(absolute_check("|lattice| * |adjoint| = |G|^2", static_cast<double>(lattice.size() * adj.size()), g * g, 0.0));
  r.add(defect_check("adjoint of adjoint is the lattice", adjoint_lattice(adj) == lattice ? 0.0 : 1.0, 0.0));
  r.result = {{"lattice", to_json(lattice)}, {"adjoint", to_json(adj)}};
  return r;
}

Report run_bessel(const Lattice& lattice, const Window& g, std::optional<double> tol) {
  const Tolerances t = Tolerances::with_override(tol);
  Report r;
  r.command = "bessel";
  r.parameters["orders"] = lattice.group().orders();
  r.parameters["lattice"] = to_json(lattice)["generators"];
  r.parameters["tolerance"] = t.bessel;
  const GaborBimodule gb = gabor_bimodule(lattice);
  const BesselDuality bd = verify_bessel_duality(g, gb, t.bessel);
  r.add(bd.checks);
  r.add(relative_check("bound via synthesis = bound", bessel_bound_via_synthesis(g, lattice), bd.bound, t.bessel));
  r.result = {{"bound", bd.bound},
              {"adjoint_bound", bd.adjoint_bound},
              {"covolume", gb.covol.str()},
              {"right_norm_squared", bd.right_norm_sq},
              {"left_norm_squared", bd.left_norm_sq}};
  return r;
}

Report run_duality(const std::vector<Lattice>& lattices, int trials, std::uint64_t seed, std::optional<double> tol) {
  const Tolerances t = Tolerances::with_override(tol);
  Report r;
  r.command = "duality";
  r.seed = seed;
  if (!lattices.empty()) r.parameters["orders"] = lattices.front().group().orders();
  r.parameters["lattices"] = lattices.size();
  r.parameters["trials"] = trials;
  if (tol) r.parameters["tolerance"] = *tol;
  Json entries = Json::array();
  for (std::size_t li = 0; li < lattices.size(); ++li) {
    const Lattice& l = lattices[li];
    const std::string tag = "lattice[" + std::to_string(li) + "]";
    const GaborBimodule gb = gabor_bimodule(l);
    r.add(verify_commutant(gb, t.span), tag + ": ");
    r.add(verify_cdim_covolume(gb, t.dimension), tag + ": ");
    const AlignmentReport al = check_alignment(gb.bimodule, t.dimension);
    r.add(defect_check(tag + ": traces aligned", al.deviation, t.dimension));
    for (int w = 0; w < trials; ++w) {
      Rng rng(derive_seed(seed, "duality", li, static_cast<std::uint64_t>(w)));
      const Window g = Window::gaussian(l.group(), rng);
      const BesselDuality bd = verify_bessel_duality(g, gb, t.bessel);
      const std::string wtag = tag + " window[" + std::to_string(w) + "]: ";
      r.add(bd.checks, wtag);
      r.add(relative_check(wtag + "||L_g|| = ||R_g||", std::sqrt(bd.left_norm_sq), std::sqrt(bd.right_norm_sq), t.bounded));
      entries.push_back({{"lattice", li},
                         {"window", w},
                         {"size", l.size()},
                         {"covolume", gb.covol.str()},
                         {"generators", to_json(l)["generators"]},
                         {"bound", bd.bound},
                         {"adjoint_bound", bd.adjoint_bound},
                         {"right_norm_squared", bd.right_norm_sq},
                         {"left_norm_squared", bd.left_norm_sq},
                         {"passed", all_passed(bd.checks)}});
    }
  }
  r.result = {{"entries", std::move(entries)}};
  return r;
}

Report run_bimodule(std::uint64_t seed, int blocks, int trials, std::optional<double> tol, Index space_cap) {
  const Tolerances t = Tolerances::with_override(tol);
  Report r;
  r.command = "bimodule";
  r.seed = seed;
  r.parameters["blocks"] = blocks;
  r.parameters["trials"] = trials;
  r.parameters["space_cap"] = space_cap;
  if (tol) r.parameters["tolerance"] = *tol;

  const Bimodule bm = random_instance(seed, blocks, space_cap);
  r.add(theorem_hypotheses(bm), "hypothesis: ");
  const CenterElement cl = cdim(bm.left());
  const CenterElement cr = cdim(bm.right());
  std::vector<Check> cross;
  add_cdim_cross(cross, "left cdim: projection = block formula", cl, cdim_block_formula(bm.left()), t.dimension);
  add_cdim_cross(cross, "right cdim: projection = block formula", cr, cdim_block_formula(bm.right()), t.dimension);
  r.add(cross);
  const ProofIdentity pid = proof_identity(bm);
  for (Index k = 0; k < pid.product.size(); ++k)
    r.add(absolute_check("cdim(_M H) cdim(H_N) = cdim(_M L2(N~))[" + std::to_string(k) + "]", pid.product(k),
                         pid.commutant_module(k), t.dimension));

  Json vectors = Json::array();
  try {
    const std::vector<BoundedVectorReport> reps = verify_left_right_bounded(bm, trials, seed, t.bounded);
    for (const BoundedVectorReport& v : reps) {
      const std::string tag = "f[" + std::to_string(v.id) + "]: ";
      r.add(bound_check(tag + "||R_f|| <= C ||L_f||", v.right_norm, v.constant * v.left_norm, t.bounded));
      r.add(bound_check(tag + "||L_f|| <= C ||R_f||", v.left_norm, v.constant * v.right_norm, t.bounded));
      if (v.commutant_case) r.add(defect_check(tag + "||L_f|| = ||R_f||", v.equality_gap, t.bounded));
      vectors.push_back({{"id", v.id},
                         {"left_norm", v.left_norm},
                         {"right_norm", v.right_norm},
                         {"constant", v.constant},
                         {"right_slack", v.right_slack},
                         {"left_slack", v.left_slack},
                         {"commutant_case", v.commutant_case},
                         {"passed", v.passed}});
    }
  } catch (const HypothesisError& e) {
    r.add({"hypothesis: " + e.hypothesis(), false, e.deviation(), 0.0, 0.0, e.deviation()});
  }
  r.result = {{"space_dim", bm.space_dim()},
              {"left_dim", bm.left().algebra().dim()},
              {"right_dim", bm.right().algebra().dim()},
              {"cdim_left", coefficients_json(cl.coefficients)},
              {"cdim_right", coefficients_json(cr.coefficients)},
              {"vectors", std::move(vectors)}};
  return r;
}

// ---------------------------------------------------------------------------
// Acceptance suite

namespace {

struct GaborSweep {
  int order;
  std::vector<GaborBimodule> bimodules;
};

}  // namespace

struct SuiteCache {
  std::vector<GaborSweep> sweeps;
  std::vector<Inclusion> inclusions;
  std::vector<std::shared_ptr<const BasicConstruction>> constructions;
};


AcceptanceSuite::AcceptanceSuite(SuiteOptions options)
    : options_(std::move(options)), tol_(Tolerances::with_override(options_.tol)), cache_(std::make_shared<SuiteCache>()) {}

void AcceptanceSuite::cross(const std::string& label, const CenterElement& projection_path, const CenterElement& block_path) {
  add_cdim_cross(cross_, "A8 cdim projection = block formula: " + label, projection_path, block_path, tol_.dimension);
}

namespace {

const std::vector<GaborSweep>& sweeps(SuiteCache& c, int max_order) {
  if (c.sweeps.empty()) {
    for (int n = 2; n <= max_order; ++n) {
      GaborSweep s{n, {}};
      for (const Lattice& l : enumerate_subgroups(FiniteAbelianGroup({n}))) s.bimodules.push_back(gabor_bimodule(l));
      c.sweeps.push_back(std::move(s));
    }
  }
  return c.sweeps;
}

const std::vector<std::shared_ptr<const BasicConstruction>>& constructions(SuiteCache& c) {
  if (c.constructions.empty()) {
    c.inclusions = standard_inclusions();
    for (const Inclusion& inc : c.inclusions)
      c.constructions.push_back(std::make_shared<const BasicConstruction>(TraceFunctional::matrix_trace(inc.n), inc.b));
  }
  return c.constructions;
}

}  // namespace

std::vector<Check> AcceptanceSuite::bessel_duality() {
  std::vector<Check> out;
  for (int n = 2; n <= options_.max_order; ++n) {
    const FiniteAbelianGroup g({n});
    const std::vector<Lattice> lattices = enumerate_subgroups(g);
    for (std::size_t li = 0; li < lattices.size(); ++li) {
      const Lattice adj = adjoint_lattice(lattices[li]);
      const double covol = covolume(lattices[li]).to_double();
      for (int w = 0; w < options_.windows; ++w) {
        Rng rng(derive_seed(options_.seed, "A1", static_cast<std::uint64_t>(n) * 1000 + li, static_cast<std::uint64_t>(w)));
        const Window win = Window::gaussian(g, rng);
        out.push_back(bessel_duality_check("A1 bound over adjoint = covol * bound" + order_tag(n),
                                           bessel_bound_opt(win, lattices[li]), bessel_bound_opt(win, adj), covol,
                                           tol_.bessel));
      }
    }
  }
  return out;
}

std::vector<Check> AcceptanceSuite::commutant() {
  std::vector<Check> out;
  for (const GaborSweep& s : sweeps(*cache_, options_.max_order))
    for (const GaborBimodule& gb : s.bimodules)
      for (Check c : verify_commutant(gb, tol_.span)) {
        c.name = "A2 " + c.name + order_tag(s.order);
        out.push_back(std::move(c));
      }
  return out;
}

std::vector<Check> AcceptanceSuite::cdim_covolume() {
  std::vector<Check> out;
  for (const GaborSweep& s : sweeps(*cache_, options_.max_order)) {
    for (const GaborBimodule& gb : s.bimodules) {
      for (Check c : verify_cdim_covolume(gb, tol_.dimension)) {
        const std::string base = strip_index(c.name);
        if (base.find("block formula") != std::string::npos) {
          c.name = "A8 cdim projection = block formula: Gabor " + base.substr(0, base.find(" block formula")) + order_tag(s.order);
          cross_.push_back(std::move(c));
        } else {
          c.name = "A3 " + base + order_tag(s.order);
          out.push_back(std::move(c));
        }
      }
    }
  }
  return out;
}

std::vector<Check> AcceptanceSuite::bounded_vectors() {
  std::vector<Check> out;
  for (const GaborSweep& s : sweeps(*cache_, options_.max_order)) {
    if (std::find(options_.bounded_orders.begin(), options_.bounded_orders.end(), s.order) == options_.bounded_orders.end())
      continue;
    for (std::size_t li = 0; li < s.bimodules.size(); ++li) {
      const GaborBimodule& gb = s.bimodules[li];
      for (int t = 0; t < options_.bounded_vectors; ++t) {
        Rng rng(derive_seed(options_.seed, "A4", static_cast<std::uint64_t>(s.order) * 1000 + li, static_cast<std::uint64_t>(t)));
        const Window g = Window::gaussian(gb.lattice.group(), rng);
        const BesselDuality bd = verify_bessel_duality(g, gb, tol_.bessel);
        for (std::size_t k = 1; k < bd.checks.size(); ++k) {
          Check c = bd.checks[k];
          c.name = "A4 " + c.name + order_tag(s.order);
          out.push_back(std::move(c));
        }
      }
    }
  }
  return out;
}

std::vector<Check> AcceptanceSuite::left_right_bounded() {
  std::vector<Check> out;
  const double tol = tol_.bounded;
  for (int i = 0; i < options_.instances; ++i) {
    const std::uint64_t iseed = derive_seed(options_.seed, "A5", static_cast<std::uint64_t>(i));
    const int blocks = 1 + i % 3;
    const Bimodule bm = random_instance(iseed, blocks, 32);
    for (Check c : theorem_hypotheses(bm)) {
      c.name = "A5 hypothesis: " + c.name;
      out.push_back(std::move(c));
    }
    cross("random instance left", cdim(bm.left()), cdim_block_formula(bm.left()));
    cross("random instance right", cdim(bm.right()), cdim_block_formula(bm.right()));
    try {
      for (const BoundedVectorReport& v : verify_left_right_bounded(bm, options_.instance_vectors, derive_seed(iseed, "vectors"), tol)) {
        out.push_back(bound_check("A5 ||R_f|| <= C ||L_f|| (random instances)", v.right_norm, v.constant * v.left_norm, tol));
        out.push_back(bound_check("A5 ||L_f|| <= C ||R_f|| (random instances)", v.left_norm, v.constant * v.right_norm, tol));
        if (v.commutant_case) out.push_back(defect_check("A5 ||L_f|| = ||R_f|| (random commutant instances)", v.equality_gap, tol));
      }
    } catch (const HypothesisError& e) {
      out.push_back({"A5 hypothesis: " + e.hypothesis(), false, e.deviation(), 0.0, 0.0, e.deviation()});
    }
    const ProofIdentity pid = proof_identity(bm);
    for (Index k = 0; k < pid.product.size(); ++k)
      out.push_back(absolute_check("A5 cdim(_M H) cdim(H_N) = cdim(_M L2(N~))", pid.product(k), pid.commutant_module(k), tol_.dimension));

    if (i % 5 == 0) {
      const AlignmentReport mis = check_alignment(misaligned_instance(iseed, blocks, 32), tol_.dimension);
      out.push_back({"A5 perturbed trace is rejected as misaligned", !mis.aligned, mis.deviation, tol_.dimension, tol_.dimension,
                     mis.aligned ? 1.0 : 0.0});
      const Bimodule cb = commutant_bimodule(bm.left());
      const AlignmentReport al = check_alignment(cb, tol_.dimension);
      out.push_back(defect_check("A5 commutant module: induced trace aligned", al.deviation, tol_.dimension));
      for (const BoundedVectorReport& v : verify_left_right_bounded(cb, 10, derive_seed(iseed, "commutant"), tol))
        out.push_back(defect_check("A5 commutant module ||L_f|| = ||R_f||", v.equality_gap, tol));
    }
  }
  for (const GaborSweep& s : sweeps(*cache_, options_.max_order)) {
    for (std::size_t li = 0; li < s.bimodules.size(); ++li) {
      const Bimodule& bm = s.bimodules[li].bimodule;
      try {
        for (const BoundedVectorReport& v :
             verify_left_right_bounded(bm, options_.windows, derive_seed(options_.seed, "A5-gabor", static_cast<std::uint64_t>(s.order), li), tol)) {
          out.push_back(defect_check("A5 Gabor: right action is the full commutant" + order_tag(s.order), v.commutant_case ? 0.0 : 1.0, 0.0));
          out.push_back(relative_check("A5 Gabor ||L_f|| = ||R_f||" + order_tag(s.order), v.left_norm, v.right_norm, tol));
        }
      } catch (const HypothesisError& e) {
        out.push_back({"A5 Gabor hypothesis: " + e.hypothesis() + order_tag(s.order), false, e.deviation(), 0.0, 0.0, e.deviation()});
      }
    }
  }
  return out;
}

std::vector<Check> AcceptanceSuite::basic_construction() {
  std::vector<Check> out;
  SuiteCache& c = *cache_;
  const auto& bcs = constructions(c);
  for (std::size_t idx = 0; idx < bcs.size(); ++idx) {
    const BasicConstruction& bc = *bcs[idx];
    const std::string tag = " [" + c.inclusions[idx].label + "]";
    const StarAlgebra& n = bc.l2().algebra();
    const StarAlgebra& bt = bc.algebra();
    out.push_back(defect_check("A6 centers coincide" + tag, bc.centers_match() ? 0.0 : 1.0, 0.0));
    cross("L2(N)_B" + tag, bc.index(), cdim_block_formula(bc.l2_over_sub()));

    // (i) generated algebra = commutant of the right B-action = span N e_B N.
    const StarAlgebra comm = vnlab::commutant(bc.l2_over_sub().image());
    out.push_back(defect_check("A6 (i) B~ inside commutant of right B-action" + tag, containment_defect(comm, bt), tol_.span));
    out.push_back(defect_check("A6 (i) commutant of right B-action inside B~" + tag, containment_defect(bt, comm), tol_.span));
    linalg::OrthonormalSet span(bt.ambient_dim() * bt.ambient_dim());
    double outside = 0.0;
    for (const Matrix& x : n.basis()) {
      const Matrix left = bc.left(x) * bc.jones();
      for (const Matrix& y : n.basis()) {
        const Matrix p = left * bc.left(y);
        outside = linalg::nan_max(outside, bt.distance(p) / std::max(1.0, p.norm()));
        if (span.size() < bt.dim()) span.try_add(linalg::vec(p), 1e-8 * std::max(1.0, p.norm()));
      }
    }
    out.push_back(defect_check("A6 (i) N e_B N inside B~" + tag, outside, tol_.span));
    out.push_back(absolute_check("A6 (i) dim span N e_B N = dim B~" + tag, static_cast<double>(span.size()), static_cast<double>(bt.dim()), 0.0));

    const ConditionalExpectation onto_b(bc.l2().trace(), bc.subalgebra());
    const CenterValuedTrace ezn(n);
    for (int t = 0; t < options_.pair_trials; ++t) {
      Rng rng(derive_seed(options_.seed, "A6", idx, static_cast<std::uint64_t>(t)));
      const Matrix x = n.random_element(rng);
      const Matrix y = n.random_element(rng);
      const Matrix& e = bc.jones();
      out.push_back(defect_check("A6 e_B n e_B = E_B(n) e_B" + tag, (e * bc.left(x) * e - bc.left(onto_b(x)) * e).norm(), tol_.span));
      // (ii) cdim(L2(N)_B) E_Z^{B~}(n1 e_B n2) = E_Z^N(n1 n2).
      const Matrix lhs = bc.left(bc.index().element()) * bc.center_valued_trace(bc.left(x) * e * bc.left(y));
      const Matrix rhs = bc.left(ezn(x * y));
      out.push_back(defect_check("A6 (ii) weighted center-valued trace identity" + tag, (lhs - rhs).norm(), tol_.dimension));
      // (iii) a e_B = n e_B for the pushed-down n.
      const Matrix a = bt.random_element(rng);
      const Matrix pushed = bc.push_down(a);
      out.push_back(defect_check("A6 (iii) push-down residual ||a e_B - n e_B||" + tag, (a * e - bc.left(pushed) * e).norm(), tol_.dimension));
    }
  }
  return out;
}

std::vector<Check> AcceptanceSuite::coefficient_change() {
  std::vector<Check> out;
  SuiteCache& c = *cache_;
  const auto& bcs = constructions(c);
  for (std::size_t idx = 0; idx < bcs.size(); ++idx) {
    const BasicConstruction& bc = *bcs[idx];
    const std::string tag = " [" + c.inclusions[idx].label + "]";
    const RightModule row = RightModule::defining(bc.l2().trace());
    const std::vector<std::pair<std::string, RightModule>> modules = {
        {"defining", row}, {"L2(N)", bc.l2()}, {"L2(N)+defining", direct_sum(bc.l2(), row)}};
    for (const auto& [name, h] : modules) {
      const RightModule hb = h.restricted(bc.subalgebra());
      const CenterElement over_b = cdim(hb);
      const CenterElement over_n = cdim(h);
      cross("H_B " + name + tag, over_b, cdim_block_formula(hb));
      cross("H_N " + name + tag, over_n, cdim_block_formula(h));
      const RealVector product = [&] {
        RealVector p(static_cast<Index>(over_b.projections.size()));
        const Matrix x = bc.index().element() * over_n.element();
        for (std::size_t k = 0; k < over_b.projections.size(); ++k)
          p(static_cast<Index>(k)) = linalg::hs_inner(x, over_b.projections[k]).real() / over_b.projections[k].trace().real();
        return p;
      }();
      for (Index k = 0; k < product.size(); ++k)
        out.push_back(absolute_check("A7 cdim(H_B) = cdim(L2(N)_B) cdim(H_N)" + tag, over_b.coefficients(k), product(k), tol_.dimension));
    }
    for (int t = 0; t < options_.subalgebra_vectors; ++t) {
      Rng rng(derive_seed(options_.seed, "A7", idx, static_cast<std::uint64_t>(t)));
      const SubalgebraBound sb = subalgebra_bound(bc, rng.gaussian_vector(bc.gns().dim()));
      out.push_back(bound_check("A7 ||L_f^N|| <= ||cdim(L2(N)_B)|| ||L_f^B||" + tag, sb.norm_over_n, sb.constant * sb.norm_over_b, tol_.bounded));
    }
  }
  return out;
}

std::vector<Check> AcceptanceSuite::cross_oracle() {
  // Module-level instances beyond those built by the other batteries.
  const std::vector<std::pair<std::string, StarAlgebra>> algebras = {
      {"M2", full_matrix_algebra(2)},
      {"M3", full_matrix_algebra(3)},
      {"D3", diagonal_algebra(3)},
      {"M2+M1", direct_sum({full_matrix_algebra(2), full_matrix_algebra(1)})},
      {"M2(x)1", tensor_identity(full_matrix_algebra(2), 3)},
  };
  for (const auto& [name, a] : algebras) {
    const TraceFunctional kappa = TraceFunctional::matrix_trace(a);
    const RightModule l2 = RightModule::standard(kappa);
    const RightModule row = RightModule::defining(kappa);
    const LeftModule col = LeftModule::defining(kappa);
    cross("L2(N) over " + name, cdim(l2), cdim_block_formula(l2));
    cross("defining right module over " + name, cdim(row), cdim_block_formula(row));
    cross("defining left module over " + name, cdim(col), cdim_block_formula(col));
    const RightModule sum = direct_sum(l2, row);
    cross("L2(N)+defining over " + name, cdim(sum), cdim_block_formula(sum));
  }
  return cross_;
}

Report run_selftest(const SuiteOptions& options) {
  AcceptanceSuite suite(options);
  Report r;
  r.command = "selftest";
  r.seed = options.seed;
  r.parameters["max_order"] = options.max_order;
  r.parameters["windows"] = options.windows;
  r.parameters["instances"] = options.instances;
  if (options.tol) r.parameters["tolerance"] = *options.tol;

  struct Battery {
    const char* id;
    const char* title;
    std::vector<Check> (AcceptanceSuite::*run)();
  };
  const Battery batteries[] = {
      {"A1", "Bessel duality over adjoint lattices", &AcceptanceSuite::bessel_duality},
      {"A2", "commutant of the lattice action", &AcceptanceSuite::commutant},
      {"A3", "center-valued dimension equals covolume", &AcceptanceSuite::cdim_covolume},
      {"A4", "bounded-vector norms and Bessel bounds", &AcceptanceSuite::bounded_vectors},
      {"A5", "left and right bounded vectors", &AcceptanceSuite::left_right_bounded},
      {"A6", "basic construction", &AcceptanceSuite::basic_construction},
      {"A7", "coefficient change and subalgebra bounded vectors", &AcceptanceSuite::coefficient_change},
      {"A8", "projection and block-formula dimensions agree", &AcceptanceSuite::cross_oracle},
  };
  Json criteria = Json::array();
  for (const Battery& b : batteries) {
    const std::vector<Check> detailed = (suite.*b.run)();
    const std::vector<Check> merged = summarize(detailed);
    r.add(merged);
    criteria.push_back({{"id", b.id}, {"title", b.title}, {"cases", detailed.size()}, {"passed", all_passed(detailed)}});
  }
  r.result = {{"criteria", std::move(criteria)}};
  return r;
}

}  // namespace vnlab
