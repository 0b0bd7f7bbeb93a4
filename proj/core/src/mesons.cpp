#include "qbayes/mesons.hpp"

#include <cmath>
#include <fstream>
#include <string>
#include <utility>

#include <json.hpp>

namespace qbayes {

namespace {

constexpr double k_pi = 3.14159265358979323846;

void check_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw invalid_parameter(std::string(what) + " must be finite");
}

void check_time(double t) {
  check_finite(t, "time");
  if (t < 0.0) throw invalid_parameter("time must be nonnegative");
}

void check_index(int index) {
  if (index < 1 || index > 8)
    throw invalid_parameter("F index must lie in 1..8, got " + std::to_string(index));
}

void check_mixing(const MixingCoefficients& mix) {
  const double n = std::norm(mix.p) + std::norm(mix.q);
  if (std::abs(n - 1.0) > 1e-12)
    throw invalid_parameter("mixing coefficients must satisfy |p|^2 + |q|^2 = 1");
}

// which dichotomic observable a basis member belongs to
enum class Family { flavour, cp, mass };

Family family(MesonBasis b) {
  switch (b) {
    case MesonBasis::flavour:
    case MesonBasis::antiflavour:
      return Family::flavour;
    case MesonBasis::cp_even:
    case MesonBasis::cp_odd:
      return Family::cp;
    default:
      return Family::mass;
  }
}

// (1/2)(q/p + p/q) and (1/2)(q/p - p/q), the combinations entering every
// CP-basis transition amplitude
std::pair<complex, complex> half_sum_diff(const MixingCoefficients& mix) {
  const complex qop = mix.q / mix.p;
  const complex poq = mix.p / mix.q;
  return {0.5 * (qop + poq), 0.5 * (qop - poq)};
}

double require_json_number(const nlohmann::json& j, const std::string& scenario,
                           const char* field) {
  if (!j.contains(field) || !j.at(field).is_number())
    throw invalid_parameter("scenario '" + scenario + "' needs numeric field '" + field + "'");
  return j.at(field).get<double>();
}

}  // namespace

void validate(const MesonParams& params) {
  check_finite(params.delta_gamma, "delta_gamma");
  check_finite(params.delta_m, "delta_m");
  check_finite(params.gamma_mean, "gamma_mean");
  check_finite(params.r, "r");
  check_finite(params.zeta, "zeta");
  if (params.gamma_mean <= 0.0) throw invalid_parameter("gamma_mean must be positive");
  if (params.gamma_mean + params.delta_gamma / 2.0 < 0.0 ||
      params.gamma_mean - params.delta_gamma / 2.0 < 0.0)
    throw invalid_parameter("partial widths Gamma_H, Gamma_L must be nonnegative");
  if (params.r <= 0.0) throw invalid_parameter("r = |q/p| must be positive");
}

MesonParams make_params_mev(const std::string& name, double delta_gamma_mev,
                            double delta_m_mev, double gamma_mean_mev, double r,
                            double zeta_deg) {
  MesonParams p;
  p.name = name;
  p.delta_gamma = delta_gamma_mev / k_hbar_mev_s;
  p.delta_m = delta_m_mev / k_hbar_mev_s;
  p.gamma_mean = gamma_mean_mev / k_hbar_mev_s;
  p.r = r;
  p.zeta = zeta_deg * k_pi / 180.0;
  validate(p);
  return p;
}

MixingCoefficients mixing_from_params(const MesonParams& params) {
  check_finite(params.r, "r");
  check_finite(params.zeta, "zeta");
  if (params.r <= 0.0) throw invalid_parameter("r = |q/p| must be positive");
  const double beta = std::atan(params.r);
  MixingCoefficients mix;
  mix.p = complex{std::cos(beta), 0.0};
  mix.q = std::polar(std::sin(beta), params.zeta);
  return mix;
}

const char* basis_label(MesonBasis b) {
  switch (b) {
    case MesonBasis::flavour: return "M";
    case MesonBasis::antiflavour: return "Mbar";
    case MesonBasis::cp_even: return "M1";
    case MesonBasis::cp_odd: return "M2";
    case MesonBasis::mass_light: return "ML";
    case MesonBasis::mass_heavy: return "MH";
  }
  return "?";
}

StateVector meson_state(MesonBasis b, const MixingCoefficients& mix, double alpha) {
  check_finite(alpha, "alpha");
  check_mixing(mix);
  const complex ea = std::polar(1.0, alpha);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (b) {
    case MesonBasis::flavour: return StateVector{1.0, 0.0};
    case MesonBasis::antiflavour: return StateVector{0.0, 1.0};
    case MesonBasis::cp_even: return StateVector{inv_sqrt2, inv_sqrt2 * ea};
    case MesonBasis::cp_odd: return StateVector{inv_sqrt2, -inv_sqrt2 * ea};
    case MesonBasis::mass_light: return StateVector{mix.p, ea * mix.q};
    case MesonBasis::mass_heavy: return StateVector{mix.p, -ea * mix.q};
  }
  throw invalid_parameter("unknown basis member");
}

StateVector meson_singlet() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return StateVector{0.0, inv_sqrt2, -inv_sqrt2, 0.0};
}

GPair g_functions(double tau, const MesonParams& params) {
  validate(params);
  check_time(tau);
  const double gamma_h = params.gamma_mean + params.delta_gamma / 2.0;
  const double gamma_l = params.gamma_mean - params.delta_gamma / 2.0;
  // overall mass phase dropped: only the Delta M beat survives
  const complex e_h = std::polar(std::exp(-gamma_h * tau / 2.0), -params.delta_m * tau / 2.0);
  const complex e_l = std::polar(std::exp(-gamma_l * tau / 2.0), +params.delta_m * tau / 2.0);
  return GPair{0.5 * (e_h + e_l), 0.5 * (e_h - e_l)};
}

double static_probability(const MesonEvent& event, const MixingCoefficients& mix) {
  check_mixing(mix);
  const Family f2 = family(event.particle2), f1 = family(event.particle1);
  if (f2 == f1)
    throw unsupported_event(std::string("no closed form for the pair (") +
                            basis_label(event.particle2) + ", " +
                            basis_label(event.particle1) + ")");

  // the singlet is antisymmetric, so the probability only depends on the
  // unordered pair of basis members
  MesonBasis cp = event.particle2, other = event.particle1;
  if (f1 == Family::cp) std::swap(cp, other);

  if (f2 != Family::cp && f1 != Family::cp) {
    // mass x flavour block: (1/2)|p|^2 against Mbar, (1/2)|q|^2 against M
    const MesonBasis flav = (family(event.particle2) == Family::flavour) ? event.particle2
                                                                         : event.particle1;
    return (flav == MesonBasis::antiflavour) ? 0.5 * std::norm(mix.p) : 0.5 * std::norm(mix.q);
  }
  if (family(other) == Family::flavour) return 0.25;  // cp x flavour block

  // cp x mass block: the matched combinations carry |p+q|^2, the crossed
  // ones |p-q|^2
  const bool matched = (cp == MesonBasis::cp_even && other == MesonBasis::mass_heavy) ||
                       (cp == MesonBasis::cp_odd && other == MesonBasis::mass_light);
  return 0.25 * (matched ? std::norm(mix.p + mix.q) : std::norm(mix.p - mix.q));
}

double transition_probability(Transition kind, double t, const MesonParams& params) {
  const GPair g = g_functions(t, params);  // validates t and params
  const MixingCoefficients mix = mixing_from_params(params);
  const auto [half_sum, half_diff] = half_sum_diff(mix);

  switch (kind) {
    case Transition::m1_to_m1: return std::norm(g.g_plus - half_sum * g.g_minus);
    case Transition::m2_to_m2: return std::norm(g.g_plus + half_sum * g.g_minus);
    case Transition::m1_to_m2:
    case Transition::m2_to_m1: return std::norm(half_diff * g.g_minus);
    case Transition::m_to_m:
    case Transition::mbar_to_mbar: return std::norm(g.g_plus);
    case Transition::m_to_mbar: return std::norm((mix.p / mix.q) * g.g_minus);
    case Transition::mbar_to_m: return std::norm((mix.q / mix.p) * g.g_minus);
    case Transition::pair_m1_m:
    case Transition::pair_m1_mbar:
    case Transition::pair_m2_m:
    case Transition::pair_m2_mbar:
      return 0.25 * std::exp(-2.0 * params.gamma_mean * t);
  }
  throw unsupported_event("unknown transition kind");
}

double f_function(int index, double t, const MesonParams& params) {
  check_index(index);
  const GPair g = g_functions(t, params);  // validates t and params
  const MixingCoefficients mix = mixing_from_params(params);
  const auto [half_sum, half_diff] = half_sum_diff(mix);
  (void)half_diff;

  const double a_minus = std::norm(g.g_plus - half_sum * g.g_minus);
  const double a_plus = std::norm(g.g_plus + half_sum * g.g_minus);
  const double gp = std::norm(g.g_plus);
  const double e_gt = std::exp(params.gamma_mean * t);
  const double e_2gt = std::exp(2.0 * params.gamma_mean * t);
  const double e_mdg = std::exp(-params.delta_gamma * t / 2.0);
  const double e_pdg = std::exp(+params.delta_gamma * t / 2.0);

  switch (index) {
    case 1: return a_minus * gp * e_2gt;
    case 2: return a_minus * e_mdg * e_gt;
    case 3: return a_plus * gp * e_2gt;
    case 4: return a_plus * e_mdg * e_gt;
    case 5: return gp * e_mdg * e_gt;
    case 6: return gp * e_pdg * e_gt;
    case 7: return a_minus * e_pdg * e_gt;
    case 8: return a_plus * e_pdg * e_gt;
  }
  return 0.0;  // unreachable, check_index guards
}

double static_equality_residual(EqualityVariant variant, const MixingCoefficients& mix) {
  check_mixing(mix);
  const complex poq = mix.p / mix.q;
  const complex one{1.0, 0.0};
  const double lhs = (variant == EqualityVariant::plus) ? std::norm(one + poq)
                                                        : std::norm(one - poq);
  return lhs - 2.0;
}

double guaranteed_violation_time(const MesonParams& params) {
  validate(params);
  if (params.delta_gamma == 0.0)
    throw invalid_parameter("guaranteed violation time needs delta_gamma != 0");
  return 2.0 * std::log(3.0) / std::abs(params.delta_gamma);
}

ScanResult violation_scan(int index, const MesonParams& params, double z_max,
                          int n_points) {
  check_index(index);
  validate(params);
  const double gamma = params.gamma_mean;
  return scan_curve([index, &params, gamma](double z) {
    return f_function(index, z / gamma, params);
  }, 0.0, z_max, n_points, 1.0, true);
}

const std::vector<EventFIndex>& event_f_table() {
  using B = MesonBasis;
  static const std::vector<EventFIndex> table = {
      {{B::cp_even, B::flavour}, 1},     {{B::cp_even, B::antiflavour}, 1},
      {{B::cp_even, B::mass_heavy}, 2},  {{B::cp_odd, B::flavour}, 3},
      {{B::cp_odd, B::antiflavour}, 3},  {{B::cp_odd, B::mass_heavy}, 4},
      {{B::flavour, B::mass_heavy}, 5},  {{B::antiflavour, B::mass_heavy}, 5},
      {{B::flavour, B::mass_light}, 6},  {{B::antiflavour, B::mass_light}, 6},
      {{B::cp_even, B::mass_light}, 7},  {{B::cp_odd, B::mass_light}, 8},
  };
  return table;
}

const std::map<std::string, MesonParams>& builtin_scenarios() {
  static const std::map<std::string, MesonParams> table = [] {
    std::map<std::string, MesonParams> m;
    // delta_gamma / delta_m are the measured values (MeV, Gamma_H - Gamma_L
    // convention). The mean widths are derived: Bs from the lifetime
    // tau = 1.512 ps, K from |dGamma|/Gamma ~ 2 (the short-lived width
    // dominates), D from |dGamma|/Gamma ~ 1e-2.
    m.emplace("Bs", make_params_mev("Bs", -6.0e-11, 1.2e-8,
                                    k_hbar_mev_s / 1.512e-12, 1.004, 185.0));
    m.emplace("K", make_params_mev("K", -7.3e-12, 3.5e-12, 3.65e-12, 0.997, -0.18));
    // the D width difference is measured at r = 0.92; r = 1.1 is the
    // illustrative value used for the published D curves
    m.emplace("D", make_params_mev("D", -2.1e-11, -6.3e-12, 2.1e-9, 0.92, -10.0));
    m.emplace("D-figure", make_params_mev("D-figure", -2.1e-11, -6.3e-12, 2.1e-9, 1.1, -10.0));
    return m;
  }();
  return table;
}

std::map<std::string, MesonParams> load_scenarios(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_parameter("cannot open scenario file '" + path + "'");

  nlohmann::json root;
  try {
    in >> root;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_parameter("scenario file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!root.contains("scenarios") || !root.at("scenarios").is_object())
    throw invalid_parameter("scenario file needs a top-level 'scenarios' object");

  std::map<std::string, MesonParams> out;
  for (const auto& [name, body] : root.at("scenarios").items()) {
    out.emplace(name, make_params_mev(name,
                                      require_json_number(body, name, "delta_gamma_mev"),
                                      require_json_number(body, name, "delta_m_mev"),
                                      require_json_number(body, name, "gamma_mean_mev"),
                                      require_json_number(body, name, "r"),
                                      require_json_number(body, name, "zeta_deg")));
  }
  return out;
}

}  // namespace qbayes
