// acceptance gate: ten behavioural criteria with pinned tolerances, one
// PASS/FAIL line each. the exit code is nonzero when any criterion fails, so
// the suite stays red until every quoted number is reproduced.

#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qbayes/conditional.hpp"
#include "qbayes/mesons.hpp"
#include "qbayes/qlinalg.hpp"
#include "qbayes/spinpair.hpp"

using namespace qbayes;

namespace {

constexpr double pi = 3.14159265358979323846;

int failed_criteria = 0;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  if (!ok) ++failed_criteria;
}

// static equality residual through the full matrix machinery: conditioning on
// the preparation, then on the first measured pair event
double pipeline_static_residual(double theta_a_deg, double theta_b_deg, double theta_c_deg) {
  const Direction a{theta_a_deg * pi / 180.0, 0.0};
  const Direction b{theta_b_deg * pi / 180.0, 0.0};
  const Direction c{theta_c_deg * pi / 180.0, 0.0};

  const StateVector psi = singlet_state(Direction{0.0, 0.0});
  const ComplexOperator rho0 = projector(psi);
  const ComplexOperator p1 =
      projector(tensor(spin_state(a, Sign::plus), spin_state(b, Sign::plus)));
  const ComplexOperator p2 =
      projector(tensor(spin_state(c, Sign::plus), spin_state(b, Sign::plus)));

  const ConditionalProbability w13 = von_neumann_conditional(rho0, rho0, p1);
  const ConditionalProbability w23 = von_neumann_conditional(rho0, rho0, p2);
  const WeightedProjector s13 = intersection_projector(psi, p1);
  const WeightedProjector s23 = intersection_projector(psi, p2);
  const ConditionalProbability w2_13 = von_neumann_conditional(rho0, s13.projector, p2);
  const ConditionalProbability w1_23 = von_neumann_conditional(rho0, s23.projector, p1);
  return static_bayes_residual(w13, w2_13, w23, w1_23).residual;
}

// singlet precessed to phase wt: both particles rotated with opposite signs
StateVector evolved_singlet(PrecessionPhase phase) {
  const Direction z{0.0, 0.0};
  const StateVector up_down =
      tensor(evolved_spin_state(Particle::electron, z, Sign::plus, phase),
             evolved_spin_state(Particle::positron, z, Sign::minus, phase));
  const StateVector down_up =
      tensor(evolved_spin_state(Particle::electron, z, Sign::minus, phase),
             evolved_spin_state(Particle::positron, z, Sign::plus, phase));
  StateVector out(4);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < 4; ++k)
    out.amp[static_cast<std::size_t>(k)] = inv_sqrt2 * (up_down.amp[k] - down_up.amp[k]);
  return out;
}

double grid_max(int index, const MesonParams& params, double z_lo, double z_hi,
                int n_points) {
  double worst = -1e300;
  for (int i = 0; i < n_points; ++i) {
    const double z = z_lo + (z_hi - z_lo) * i / (n_points - 1);
    worst = std::max(worst, f_function(index, z / params.gamma_mean, params));
  }
  return worst;
}

}  // namespace

int main() {
  // 1 — static spin equality: worked configuration and a symmetric null case
  {
    const double measured = pipeline_static_residual(90.0, 0.0, 45.0);
    const double s45 = std::sin(pi / 4.0), s225 = std::sin(pi / 8.0);
    const double c225 = std::cos(pi / 8.0);
    const double closed = c225 * c225 * 0.5 * (s45 * s45 - s225 * s225);
    const double null_case = pipeline_static_residual(60.0, 0.0, 60.0);
    const bool ok = std::abs(measured - closed) < 1e-9 && std::abs(null_case) < 1e-12;
    report(1, ok,
           "matrix-pipeline static residual at (90, 0, 45) deg = " + fmt(measured) +
               " vs closed form " + fmt(closed) + "; symmetric null configuration = " +
               fmt(null_case));
  }

  // 2 — forced violations of the time-dependent inequality at the quoted points
  {
    const double cos4 = std::pow(std::cos(pi / 8.0), 4.0);
    const double sin4 = std::pow(std::sin(pi / 8.0), 4.0);
    const double pp = spin_inequality_margin(SpinCase{Sign::plus, Sign::plus}, pi / 2.0,
                                             PrecessionPhase{-pi / 8.0})
                          .margin;
    const double mm = spin_inequality_margin(SpinCase{Sign::minus, Sign::minus}, pi / 2.0,
                                             PrecessionPhase{-pi / 8.0})
                          .margin;

    bool mixed_negative = true;
    double mixed_worst = 0.0;
    for (double theta = 0.15; theta <= 3.0; theta += 0.15) {
      const double m = spin_inequality_margin(SpinCase{Sign::plus, Sign::minus}, theta,
                                              PrecessionPhase{pi / 4.0 - theta / 4.0})
                           .margin;
      if (!(m < 0.0)) mixed_negative = false;
      const double s = std::sin(theta);
      mixed_worst = std::max(mixed_worst, std::abs(m + s * s / 32.0));
    }

    const bool ok = std::abs(pp + 0.25 * cos4) < 1e-9 && std::abs(mm + 0.25 * sin4) < 1e-9 &&
                    mixed_negative && mixed_worst < 1e-9;
    report(2, ok,
           "margins at the quoted violation points: equal-sign " + fmt(pp) + " / " + fmt(mm) +
               " vs -cos^4, -sin^4 over 4; mixed-case closed-form deviation " +
               fmt(mixed_worst));
  }

  // 3 — closed forms against the full matrix pipeline over random configurations
  {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const SpinCase cases[4] = {{Sign::plus, Sign::plus},
                               {Sign::minus, Sign::minus},
                               {Sign::plus, Sign::minus},
                               {Sign::minus, Sign::plus}};
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const double theta_a = u(rng) * pi;
      const double theta_b = u(rng) * pi;
      const PrecessionPhase phase{(2.0 * u(rng) - 1.0) * pi};
      const Direction a{theta_a, 0.0}, b{theta_b, 0.0};

      const StateVector psi_t = evolved_singlet(phase);
      const ComplexOperator rho_t = projector(psi_t);
      const StateVector chi =
          tensor(evolved_spin_state(Particle::electron, a, Sign::plus, phase),
                 evolved_spin_state(Particle::positron, b, Sign::plus, phase));
      const ComplexOperator rho_chi = projector(chi);

      for (const SpinCase& c : cases) {
        const ComplexOperator event =
            projector(tensor(spin_state(a, c.alpha_sign), spin_state(b, c.beta_sign)));
        const double w23 = von_neumann_conditional(rho_t, rho_t, event).value;
        const double w2_13 = von_neumann_conditional(rho_chi, rho_chi, event).value;
        const CaseProbabilities closed = case_probabilities(c, theta_b - theta_a, phase);
        worst = std::max(worst, std::abs(closed.w_s2_s3 - w23));
        worst = std::max(worst, std::abs(closed.w_s2_given_s1s3 - w2_13));
      }
    }
    report(3, worst < 1e-9,
           "1000 random spin configurations, all four sign cases: worst "
           "closed-form/pipeline gap = " +
               fmt(worst));
  }

  // 4 — commuting (classical) instances satisfy the static equality identically
  {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    int checked = 0;
    while (checked < 100) {
      std::array<double, 4> probs{};
      double total = 0.0;
      for (auto& p : probs) {
        p = u(rng) + 1e-3;
        total += p;
      }
      for (auto& p : probs) p /= total;

      const auto random_subset = [&] {
        std::array<bool, 4> s{};
        for (auto&& b : s) b = u(rng) < 0.5;
        return s;
      };
      const auto weight = [&](const std::array<bool, 4>& members) {
        double w = 0.0;
        for (int i = 0; i < 4; ++i)
          if (members[static_cast<std::size_t>(i)]) w += probs[static_cast<std::size_t>(i)];
        return w;
      };
      const auto intersect = [](const std::array<bool, 4>& x, const std::array<bool, 4>& y) {
        return std::array<bool, 4>{x[0] && y[0], x[1] && y[1], x[2] && y[2], x[3] && y[3]};
      };
      const auto diag_projector = [](const std::array<bool, 4>& members) {
        ComplexOperator p(4);
        for (int i = 0; i < 4; ++i)
          if (members[static_cast<std::size_t>(i)]) p.at(i, i) = complex{1.0, 0.0};
        return p;
      };

      const std::array<bool, 4> s1 = random_subset(), s2 = random_subset(),
                                s3 = random_subset();
      if (weight(s3) < 0.01) continue;
      if (weight(intersect(s1, s3)) < 0.01) continue;
      if (weight(intersect(s2, s3)) < 0.01) continue;
      ++checked;

      ComplexOperator rho(4);
      for (int i = 0; i < 4; ++i)
        rho.at(i, i) = complex{probs[static_cast<std::size_t>(i)], 0.0};

      const BayesResidual res = static_bayes_residual(
          von_neumann_conditional(rho, diag_projector(s3), diag_projector(s1)),
          von_neumann_conditional(rho, diag_projector(intersect(s1, s3)), diag_projector(s2)),
          von_neumann_conditional(rho, diag_projector(s3), diag_projector(s2)),
          von_neumann_conditional(rho, diag_projector(intersect(s2, s3)), diag_projector(s1)));
      worst = std::max(worst, std::abs(res.residual));
    }
    report(4, worst < 1e-9,
           "100 random diagonal (commuting) models: worst static residual = " + fmt(worst));
  }

  // 5 — static meson residuals for the measured mixing parameters
  {
    const MixingCoefficients bs = mixing_from_params(builtin_scenarios().at("Bs"));
    const MixingCoefficients k = mixing_from_params(builtin_scenarios().at("K"));
    const double bs_residual = static_equality_residual(EqualityVariant::plus, bs);
    const double k_residual = static_equality_residual(EqualityVariant::plus, k);
    const double bs_value = bs_residual + 2.0;  // |1 + p/q|^2
    const double k_value = k_residual + 2.0;
    const bool ok = bs_value > 0.0070 && bs_value < 0.0082 && std::abs(bs_residual) > 1.9 &&
                    k_value > 3.9 && k_value < 4.1 && std::abs(k_residual) > 1.9;
    report(5, ok,
           "static meson residuals: Bs |1 + p/q|^2 = " + fmt(bs_value) + " (residual " +
               fmt(bs_residual) + "), K |1 + p/q|^2 = " + fmt(k_value) + " (residual " +
               fmt(k_residual) + ")");
  }

  // 6 — the width-difference horizon for the Bs system, in lifetimes
  {
    const MesonParams bs = builtin_scenarios().at("Bs");
    const double lifetimes = guaranteed_violation_time(bs) * bs.gamma_mean;
    const bool ok = lifetimes > 15.5 && lifetimes < 16.5;
    report(6, ok,
           "guaranteed-violation horizon for Bs = " + fmt(lifetimes) +
               " lifetimes (band 15.5..16.5)");
  }

  // 7 — onset of the persistent Bs F1 violation region
  {
    const MesonParams bs = builtin_scenarios().at("Bs");
    const ScanResult scan = violation_scan(1, bs, 30.0, 6001);
    const double onset =
        scan.violation_intervals.empty() ? -1.0 : scan.violation_intervals.back().first;
    const double analytic = 2.0 * std::log(3.0) * bs.gamma_mean / std::abs(bs.delta_gamma);
    const bool ok = onset >= 16.0 && onset <= 18.0;
    report(7, ok,
           "persistent Bs F1 violation begins at z = " + fmt(onset) +
               ", quoted band [16, 18]; measured onset sits below the band because the "
               "oscillation dips keep grazing the bound until the all-phase envelope "
               "crossing at z = " +
               fmt(analytic));
  }

  // 8 — kaon event sets break the bound within two lifetimes; illustrative D
  //     curves grow slowly and stay moderate
  {
    const MesonParams k = builtin_scenarios().at("K");
    const double k3 = grid_max(3, k, 0.001, 2.0, 2001);
    const double k4 = grid_max(4, k, 0.001, 2.0, 2001);
    const double k5 = grid_max(5, k, 0.001, 2.0, 2001);

    const MesonParams d_fig = builtin_scenarios().at("D-figure");
    const double d3_max = grid_max(3, d_fig, 0.0, 40.0, 4001);
    const double d5_max = grid_max(5, d_fig, 0.0, 40.0, 4001);
    const auto d_at = [&](int index, double z) {
      return f_function(index, z / d_fig.gamma_mean, d_fig);
    };
    const bool d_growing = d_at(3, 10.0) < d_at(3, 20.0) && d_at(3, 20.0) < d_at(3, 40.0) &&
                           d_at(5, 10.0) < d_at(5, 20.0) && d_at(5, 20.0) < d_at(5, 40.0);

    const bool ok = k3 > 1.0 && k4 > 1.0 && k5 > 1.0 && d3_max < 10.0 && d5_max < 10.0 &&
                    d_growing;
    report(8, ok,
           "K max(F3, F4, F5) over (0, 2] = " + fmt(k3) + ", " + fmt(k4) + ", " + fmt(k5) +
               " (all > 1); illustrative D maxima over [0, 40] = " + fmt(d3_max) + ", " +
               fmt(d5_max) + " with monotone growth " + (d_growing ? "confirmed" : "broken"));
  }

  // 9 — the mass-light event sets respect the bound
  {
    const char* names[3] = {"Bs", "K", "D"};
    double worst6 = 0.0, worst7 = 0.0, worst8 = 0.0;
    std::string detail;
    for (const char* name : names) {
      const MesonParams p = builtin_scenarios().at(name);
      const double m6 = grid_max(6, p, 0.0, 50.0, 10001) - 1.0;
      const double m7 = grid_max(7, p, 0.0, 50.0, 10001) - 1.0;
      const double m8 = grid_max(8, p, 0.0, 50.0, 10001) - 1.0;
      worst6 = std::max(worst6, m6);
      worst7 = std::max(worst7, m7);
      worst8 = std::max(worst8, m8);
      detail += std::string(name) + " max(F6,F7,F8)-1 = " + fmt(m6) + ", " + fmt(m7) + ", " +
                fmt(m8) + "; ";
    }
    const bool ok = worst6 <= 1e-12 && worst7 <= 1e-9 && worst8 <= 1e-9;
    report(9, ok,
           detail +
               "F6 never exceeds one, but CP violation pushes Bs F7 and K F8 above the "
               "bound by a few parts in a million, so the uniform 1e-9 ceiling on F7/F8 "
               "cannot hold");
  }

  // 10 — oscillation amplitude identities, unit initial bounds, completeness
  {
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_identity = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      MesonParams p;
      p.name = "random";
      p.gamma_mean = 0.5 + 1.5 * u(rng);
      p.delta_gamma = (2.0 * u(rng) - 1.0) * 1.8 * p.gamma_mean;
      p.delta_m = (2.0 * u(rng) - 1.0) * 20.0 * p.gamma_mean;
      p.r = 0.5 + u(rng);
      p.zeta = (2.0 * u(rng) - 1.0) * pi;
      const double tau = 5.0 * u(rng) / p.gamma_mean;

      const GPair g = g_functions(tau, p);
      const double envelope = 0.5 * std::exp(-p.gamma_mean * tau);
      const double ch = std::cosh(p.delta_gamma * tau / 2.0);
      const double co = std::cos(p.delta_m * tau);
      worst_identity =
          std::max(worst_identity, std::abs(std::norm(g.g_plus) - envelope * (ch + co)));
      worst_identity =
          std::max(worst_identity, std::abs(std::norm(g.g_minus) - envelope * (ch - co)));
      const complex cross = std::conj(g.g_plus) * g.g_minus;
      const complex cross_closed{-envelope * std::sinh(p.delta_gamma * tau / 2.0),
                                 -envelope * std::sin(p.delta_m * tau)};
      worst_identity = std::max(worst_identity, std::abs(cross - cross_closed));
    }

    double worst_start = 0.0;
    double worst_sum = 0.0;
    for (const auto& [name, params] : builtin_scenarios()) {
      for (int index = 1; index <= 8; ++index)
        worst_start = std::max(worst_start, std::abs(f_function(index, 0.0, params) - 1.0));

      const MixingCoefficients mix = mixing_from_params(params);
      using B = MesonBasis;
      const B flavour_members[2] = {B::flavour, B::antiflavour};
      const B cp_members[2] = {B::cp_even, B::cp_odd};
      const B mass_members[2] = {B::mass_light, B::mass_heavy};
      const std::pair<const B*, const B*> blocks[3] = {{cp_members, flavour_members},
                                                       {cp_members, mass_members},
                                                       {mass_members, flavour_members}};
      for (const auto& [lhs, rhs] : blocks) {
        double total = 0.0;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) total += static_probability({lhs[i], rhs[j]}, mix);
        worst_sum = std::max(worst_sum, std::abs(total - 1.0));
      }
    }

    const bool ok = worst_identity < 1e-12 && worst_start < 1e-12 && worst_sum < 1e-12;
    report(10, ok,
           "amplitude identities worst gap = " + fmt(worst_identity) +
               "; worst |F_N(0) - 1| = " + fmt(worst_start) +
               "; worst completeness defect = " + fmt(worst_sum));
  }

  if (failed_criteria)
    std::printf("acceptance: %d of 10 criteria failing\n", failed_criteria);
  else
    std::printf("acceptance: all 10 criteria pass\n");
  return failed_criteria ? 1 : 0;
}
