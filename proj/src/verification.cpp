#include "wpl/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "wpl/derived_constants.hpp"
#include "wpl/lp_vector.hpp"
#include "wpl/random_model.hpp"
#include "wpl/scalar_kernel.hpp"

namespace wpl {
namespace {

using nlohmann::ordered_json;

// Distinct stream families per suite so adding a suite never reshuffles
// the samples of another.
constexpr std::uint64_t kLwpStream = 0x4c575001ull;
constexpr std::uint64_t kUwpStream = 0x55575002ull;
constexpr std::uint64_t kHannerStream = 0x48414e03ull;
constexpr std::uint64_t kClarksonStream = 0x434c4b04ull;
constexpr std::uint64_t kPythStream = 0x50595405ull;

std::vector<double> t_grid_unit(int n) {
  const int tail = 100;
  const int uni = std::max(16, n - tail);
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(uni + tail));
  for (int i = 0; i < uni; ++i)
    g.push_back(0.999 * static_cast<double>(i) / (uni - 1));
  for (int i = 0; i < tail; ++i) {
    const double eps = 1e-3 * std::pow(1e-5, static_cast<double>(i) / (tail - 1));
    g.push_back(1.0 - eps);
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

ordered_json coords_json(const LpVector& v) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < v.dim(); ++i) a.push_back(v.coords()[i]);
  return a;
}

ordered_json pair_witness(const LpVector& x, const LpVector& y) {
  return ordered_json{{"x", coords_json(x)}, {"y", coords_json(y)}};
}

SuiteResult scalar_h_positivity(const Params& base) {
  SuiteResult s;
  s.name = "scalar-h-positivity";
  const auto grid = t_grid_unit(2001);
  double worst = std::numeric_limits<double>::infinity();
  double worst_t = 0.0;
  for (double t : grid) {
    const double v = eval_h(base, t);
    if (v < worst) {
      worst = v;
      worst_t = t;
    }
  }
  s.pairs_tested = static_cast<long>(grid.size());
  s.worst_defect = worst;
  s.worst_witness = ordered_json{{"t", worst_t}};
  s.passed = worst > 0.0;
  return s;
}

SuiteResult scalar_k_nonneg(const Params& base, double C) {
  SuiteResult s;
  s.name = "scalar-k-nonneg";
  double worst = std::numeric_limits<double>::infinity();
  double worst_t = 0.0;
  const int n = 2001;
  for (int i = 0; i < n; ++i) {
    const double t = -10.0 + 20.0 * i / (n - 1);
    const double v = eval_k(base, C, t);
    if (v < worst) {
      worst = v;
      worst_t = t;
    }
  }
  s.pairs_tested = n;
  s.worst_defect = worst;
  s.worst_witness = ordered_json{{"t", worst_t}, {"C", C}};
  s.passed = worst >= -1e-10;
  return s;
}

SuiteResult scalar_k_symmetry(const Params& base, double C) {
  SuiteResult s;
  s.name = "scalar-k-symmetry";
  double worst = 0.0;
  double worst_t = 0.0;
  const int n = 1000;
  for (int i = 1; i <= n; ++i) {
    const double t = 10.0 * i / n;  // (0, 10]
    const double lhs = eval_k(base, C, t);
    const double rhs = std::pow(std::fabs(t), base.r()) * eval_k(base, C, 1.0 / t);
    const double err =
        std::fabs(lhs - rhs) / std::pow(1.0 + std::fabs(t), base.r());
    if (err > worst) {
      worst = err;
      worst_t = t;
    }
  }
  s.pairs_tested = n;
  s.worst_defect = -worst;  // negated residual: negative is bad beyond -1e-10
  s.worst_witness = ordered_json{{"t", worst_t}, {"C", C}};
  s.passed = worst <= 1e-10;
  return s;
}

SuiteResult scalar_h_monotone_r(const Params& base) {
  SuiteResult s;
  s.name = "scalar-h-monotone-r";
  const double p = base.p();
  const double q = base.q();
  const auto grid = t_grid_unit(50);
  double worst = std::numeric_limits<double>::infinity();
  ordered_json witness;
  long pairs = 0;
  const int nr = 10;
  if (q > 2.0) {
    for (int k = 0; k + 1 < nr; ++k) {
      const double r1 = 2.0 + (q - 2.0) * k / (nr - 1);
      const double r2 = 2.0 + (q - 2.0) * (k + 1) / (nr - 1);
      const Params prm1(p, r1), prm2(p, r2);
      for (double t : grid) {
        const double d = eval_h(prm2, t) - eval_h(prm1, t);
        ++pairs;
        if (d < worst) {
          worst = d;
          witness = ordered_json{{"t", t}, {"r1", r1}, {"r2", r2}};
        }
      }
    }
  }
  s.pairs_tested = pairs;
  s.worst_defect = pairs ? worst : 0.0;
  s.worst_witness = witness;
  s.passed = pairs == 0 || worst >= -1e-12;
  return s;
}

SuiteResult vector_defect_suite(const char* name, const VerifyConfig& cfg,
                                LawKind kind, double C,
                                std::uint64_t stream) {
  SuiteResult s;
  s.name = name;
  double worst = std::numeric_limits<double>::infinity();
  ordered_json witness;
  for (long i = 0; i < cfg.samples; ++i) {
    const auto [x, y] = random_nonzero_pair(cfg.p, cfg.dim, cfg.seed ^ stream,
                                            static_cast<std::uint64_t>(i));
    const double d = wp_defect(x, y, cfg.r, C, kind) / wp_scale(x, y, cfg.r);
    if (d < worst) {
      worst = d;
      witness = pair_witness(x, y);
    }
  }
  s.pairs_tested = cfg.samples;
  s.worst_defect = worst;
  s.worst_witness = witness;
  s.passed = worst >= -cfg.slack;
  return s;
}

SuiteResult hanner_suite(const VerifyConfig& cfg) {
  SuiteResult s;
  s.name = "hanner";
  double worst = std::numeric_limits<double>::infinity();
  ordered_json witness;
  for (long i = 0; i < cfg.samples; ++i) {
    const auto [f, g] = random_nonzero_pair(cfg.p, cfg.dim, cfg.seed ^ kHannerStream,
                                            static_cast<std::uint64_t>(i));
    const double d = hanner_defect(f, g) / hanner_scale(f, g);
    if (d < worst) {
      worst = d;
      witness = pair_witness(f, g);
    }
  }
  s.pairs_tested = cfg.samples;
  s.worst_defect = worst;
  s.worst_witness = witness;
  s.passed = worst >= -cfg.slack;
  return s;
}

SuiteResult clarkson_suite(const VerifyConfig& cfg) {
  SuiteResult s;
  s.name = "clarkson";
  double worst = std::numeric_limits<double>::infinity();
  ordered_json witness;
  for (long i = 0; i < cfg.samples; ++i) {
    const auto [f, g] =
        random_nonzero_pair(cfg.p, cfg.dim, cfg.seed ^ kClarksonStream,
                            static_cast<std::uint64_t>(i));
    const double d = clarkson_defect(f, g) / clarkson_scale(f, g);
    if (d < worst) {
      worst = d;
      witness = pair_witness(f, g);
    }
  }
  s.pairs_tested = cfg.samples;
  s.worst_defect = worst;
  s.worst_witness = witness;
  s.passed = worst >= -cfg.slack;
  return s;
}

SuiteResult pythagorean_suite(const VerifyConfig& cfg, LawKind kind, double C) {
  SuiteResult s;
  s.name = kind == LawKind::lwp ? "pythagorean-lwp" : "pythagorean-uwp";
  const double K = C / (std::pow(2.0, cfg.r - 1.0) - 1.0);
  const long count = std::min<long>(cfg.samples, 1000);
  double worst = std::numeric_limits<double>::infinity();
  ordered_json witness;
  const std::uint64_t stream =
      cfg.seed ^ kPythStream ^ (kind == LawKind::lwp ? 0x10ull : 0x20ull);
  for (long i = 0; i < count; ++i) {
    const auto [x, z] =
        random_nonzero_pair(cfg.p, cfg.dim, stream, static_cast<std::uint64_t>(i));
    const LpVector y = bj_project(x, z);
    const double sc = pythagorean_scale(x, y, cfg.r, K);
    const double d = pythagorean_defect(x, y, cfg.r, K, kind) / sc;
    if (d < worst) {
      worst = d;
      witness = pair_witness(x, y);
    }
  }
  s.pairs_tested = count;
  s.worst_defect = worst;
  s.worst_witness = witness;
  s.passed = worst >= -cfg.slack;
  return s;
}

SuiteResult optimality_suite(const VerifyConfig& cfg, LawKind kind, double C) {
  SuiteResult s;
  s.name = "optimality-witness";
  const auto grid = t_grid_unit(2001);
  const auto family_min = [&](double constant) {
    double worst = std::numeric_limits<double>::infinity();
    double worst_t = 0.0;
    for (double t : grid) {
      if (t > 0.999) continue;  // the family degenerates as t -> 1
      const auto [a, b] = extremal_pair(t, cfg.p);
      const double d =
          wp_defect(a, b, cfg.r, constant, kind) / wp_scale(a, b, cfg.r);
      if (d < worst) {
        worst = d;
        worst_t = t;
      }
    }
    // antipodal pair: the witness against constants past 1 on the unit
    // regions
    Eigen::ArrayXd e0 = Eigen::ArrayXd::Zero(2);
    e0[0] = 1.0;
    const LpVector xp(cfg.p, e0), xm(cfg.p, -e0);
    const double d =
        wp_defect(xp, xm, cfg.r, constant, kind) / wp_scale(xp, xm, cfg.r);
    if (d < worst) {
      worst = d;
      worst_t = -1.0;  // marker: antipodal witness
    }
    return std::pair<double, double>{worst, worst_t};
  };

  const auto [valid_worst, valid_t] = family_min(C);
  const double perturbed = kind == LawKind::lwp ? C * 1.001 : C / 1.001;
  const auto [tight_min, tight_t] = family_min(perturbed);

  s.pairs_tested = static_cast<long>(grid.size()) + 1;
  s.worst_defect = valid_worst;
  s.worst_witness = ordered_json{{"t", valid_t},
                                 {"constant", C},
                                 {"perturbedConstant", perturbed},
                                 {"perturbedMinDefect", tight_min},
                                 {"perturbedWitnessT", tight_t}};
  s.passed = valid_worst >= -cfg.slack && tight_min < 0.0;
  return s;
}

SuiteResult derived_consistency_suite(const VerifyConfig& cfg) {
  SuiteResult s;
  s.name = "derived-consistency";
  const long samples = std::min<long>(cfg.samples, 20000);
  const int dim = std::max(2, cfg.dim);
  const DerivedConstantsReport d =
      empirical_constants(cfg.p, dim, samples, cfg.seed);
  double worst = d.nj_upper_bound + 1e-6 - d.nj_estimate;
  double james_bound_min = std::numeric_limits<double>::infinity();
  for (const JamesBound& b : d.james_upper_bounds) {
    if (!b.assertable) continue;
    james_bound_min = std::min(james_bound_min, b.bound);
    worst = std::min(worst, b.bound + 1e-6 - d.james_estimate);
  }
  s.pairs_tested = samples;
  s.worst_defect = worst;
  s.worst_witness = ordered_json{{"njEstimate", d.nj_estimate},
                                 {"njUpperBound", d.nj_upper_bound},
                                 {"jamesEstimate", d.james_estimate},
                                 {"jamesBoundMin", james_bound_min}};
  s.passed = worst >= 0.0;
  return s;
}

Adjudication adjudicate(double pa, double ra) {
  Adjudication adj;
  adj.base_p = pa;
  adj.base_r = ra;
  adj.paper_constant =
      optimal_constant(pa, ra, LawKind::uwp, DualConvention::paper).value;
  adj.duality_constant =
      optimal_constant(pa, ra, LawKind::uwp, DualConvention::duality).value;
  double sup = 0.0;
  const int n = 10001;
  const double t_max = 1.0 - 1e-5;
  for (int i = 0; i < n; ++i) {
    const double t = t_max * i / (n - 1);
    sup = std::max(sup,
                   extremal_required_constant(pa, ra, t, LawKind::uwp));
  }
  adj.extremal_supremum = sup;
  adj.gap_paper = adj.paper_constant - sup;
  adj.gap_duality = adj.duality_constant - sup;
  adj.passed = adj.paper_constant >= sup - 1e-6 && adj.duality_constant >= sup - 1e-6;
  if (std::fabs(adj.gap_duality) <= 1e-4 * std::max(1.0, sup) &&
      adj.gap_paper > 1e-4 * std::max(1.0, sup)) {
    adj.verdict =
        "duality-convention constant matches the extremal-family supremum; "
        "paper-convention constant is admissible but not tight";
  } else if (std::fabs(adj.gap_duality) <= 1e-4 * std::max(1.0, sup)) {
    adj.verdict = "both conventions agree with the extremal-family supremum";
  } else {
    adj.verdict = "no convention matches the extremal-family supremum";
  }
  return adj;
}

}  // namespace

VerificationReport run_suite(const VerifyConfig& cfg) {
  if (cfg.dim < 1) throw std::domain_error("verify: dim must be >= 1");
  if (cfg.samples < 1) throw std::domain_error("verify: samples must be >= 1");
  if (!(cfg.slack >= 0.0)) throw std::domain_error("verify: slack must be >= 0");
  if (cfg.constant_override && !(*cfg.constant_override > 0.0))
    throw std::domain_error("verify: constant override must be positive");
  const Params prm(cfg.p, cfg.r);

  VerificationReport rep;
  rep.config = cfg;
  rep.classification = classify(cfg.p, cfg.r);
  const LawClassification& cls = rep.classification;
  if (!cls.lwp && !cls.uwp)
    throw std::domain_error("verify: no weak parallelogram law holds at (p, r)");

  if (cls.lwp) rep.lwp_constant = optimal_constant(cfg.p, cfg.r, LawKind::lwp).value;
  if (cls.uwp) {
    rep.uwp_constant_paper =
        optimal_constant(cfg.p, cfg.r, LawKind::uwp, DualConvention::paper).value;
    rep.uwp_constant_duality =
        optimal_constant(cfg.p, cfg.r, LawKind::uwp, DualConvention::duality).value;
  }

  // The minimized-constant parameters this configuration touches: directly
  // on the lower-law side, through the dual base on the upper-law side.
  std::optional<Params> scalar_base;
  if (cls.lwp && cls.lwp->form == ConstantForm::minimized_h)
    scalar_base = prm;
  else if (cls.uwp && cls.uwp->form == ConstantForm::dual_power)
    scalar_base = cls.uwp->dual_base;

  if (scalar_base) {
    const double base_c =
        minimize_h(scalar_base->p(), scalar_base->r()).value;
    rep.suites.push_back(scalar_h_positivity(*scalar_base));
    rep.suites.push_back(scalar_k_nonneg(*scalar_base, base_c));
    rep.suites.push_back(scalar_k_symmetry(*scalar_base, base_c));
    rep.suites.push_back(scalar_h_monotone_r(*scalar_base));
  }

  if (cls.lwp) {
    const double c = cfg.constant_override.value_or(*rep.lwp_constant);
    rep.suites.push_back(
        vector_defect_suite("vector-lwp-defect", cfg, LawKind::lwp, c, kLwpStream));
  }
  if (cls.uwp) {
    const double c = cfg.constant_override.value_or(*rep.uwp_constant_duality);
    rep.suites.push_back(
        vector_defect_suite("vector-uwp-defect", cfg, LawKind::uwp, c, kUwpStream));
  }
  if (cfg.p <= 2.0) rep.suites.push_back(hanner_suite(cfg));
  rep.suites.push_back(clarkson_suite(cfg));
  if (cls.lwp)
    rep.suites.push_back(pythagorean_suite(cfg, LawKind::lwp, *rep.lwp_constant));
  if (cls.uwp)
    rep.suites.push_back(
        pythagorean_suite(cfg, LawKind::uwp, *rep.uwp_constant_duality));

  // Optimality witness runs on the sharpest law the configuration grants.
  if (cls.lwp) {
    const double c = cfg.constant_override.value_or(*rep.lwp_constant);
    rep.suites.push_back(optimality_suite(cfg, LawKind::lwp, c));
  } else if (cls.uwp) {
    const double c = cfg.constant_override.value_or(*rep.uwp_constant_duality);
    rep.suites.push_back(optimality_suite(cfg, LawKind::uwp, c));
  }

  if (scalar_base) {
    // Adjudication always runs on the upper-law side: directly at (p, r)
    // when that side is the dual-power region, otherwise at the conjugate
    // pair (q, r').
    const bool direct =
        cls.uwp && cls.uwp->form == ConstantForm::dual_power;
    const double pa = direct ? cfg.p : prm.q();
    const double ra = direct ? cfg.r : prm.r_prime();
    rep.adjudication = adjudicate(pa, ra);
  }

  rep.suites.push_back(derived_consistency_suite(cfg));

  rep.passed = true;
  for (const SuiteResult& s : rep.suites) rep.passed = rep.passed && s.passed;
  if (rep.adjudication) rep.passed = rep.passed && rep.adjudication->passed;
  return rep;
}

nlohmann::ordered_json classification_to_json(const LawClassification& cls) {
  const auto entry = [](const std::optional<LawEntry>& e) -> ordered_json {
    if (!e) return nullptr;
    ordered_json j;
    j["constantForm"] = to_string(e->form);
    j["theoremCase"] = to_string(e->region);
    if (e->dual_base)
      j["dualBase"] =
          ordered_json{{"p", e->dual_base->p()}, {"r", e->dual_base->r()}};
    return j;
  };
  ordered_json j;
  j["lwp"] = entry(cls.lwp);
  j["uwp"] = entry(cls.uwp);
  return j;
}

nlohmann::ordered_json report_to_json(const VerificationReport& rep) {
  ordered_json j;
  j["config"] = ordered_json{
      {"p", rep.config.p},
      {"r", rep.config.r},
      {"dim", rep.config.dim},
      {"samples", rep.config.samples},
      {"seed", rep.config.seed},
      {"slack", rep.config.slack},
      {"constantOverride", rep.config.constant_override
                               ? ordered_json(*rep.config.constant_override)
                               : ordered_json(nullptr)}};
  j["classification"] = classification_to_json(rep.classification);
  const auto opt = [](const std::optional<double>& v) -> ordered_json {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  j["constants"] = ordered_json{{"lwp", opt(rep.lwp_constant)},
                                {"uwpPaper", opt(rep.uwp_constant_paper)},
                                {"uwpDuality", opt(rep.uwp_constant_duality)}};
  ordered_json suites = ordered_json::array();
  for (const SuiteResult& s : rep.suites) {
    suites.push_back(ordered_json{{"name", s.name},
                                  {"pairsTested", s.pairs_tested},
                                  {"worstDefect", s.worst_defect},
                                  {"worstWitness", s.worst_witness},
                                  {"passed", s.passed}});
  }
  j["suites"] = suites;
  if (rep.adjudication) {
    const Adjudication& a = *rep.adjudication;
    j["adjudication"] = ordered_json{{"baseP", a.base_p},
                                     {"baseR", a.base_r},
                                     {"paperConstant", a.paper_constant},
                                     {"dualityConstant", a.duality_constant},
                                     {"extremalSupremum", a.extremal_supremum},
                                     {"gapPaper", a.gap_paper},
                                     {"gapDuality", a.gap_duality},
                                     {"verdict", a.verdict},
                                     {"passed", a.passed}};
  } else {
    j["adjudication"] = nullptr;
  }
  j["passed"] = rep.passed;
  return j;
}

std::string report_to_text(const VerificationReport& rep) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line,
                "verify p=%.17g r=%.17g dim=%d samples=%ld seed=%llu slack=%.17g\n",
                rep.config.p, rep.config.r, rep.config.dim, rep.config.samples,
                static_cast<unsigned long long>(rep.config.seed),
                rep.config.slack);
  os << line;
  if (rep.config.constant_override) {
    std::snprintf(line, sizeof line, "constant override %.17g\n",
                  *rep.config.constant_override);
    os << line;
  }
  std::snprintf(line, sizeof line, "%-24s %10s %24s  %s\n", "suite", "pairs",
                "worst", "status");
  os << line;
  for (const SuiteResult& s : rep.suites) {
    std::snprintf(line, sizeof line, "%-24s %10ld %24.17g  %s\n",
                  s.name.c_str(), s.pairs_tested, s.worst_defect,
                  s.passed ? "PASS" : "FAIL");
    os << line;
  }
  if (rep.adjudication) {
    const Adjudication& a = *rep.adjudication;
    std::snprintf(line, sizeof line,
                  "adjudication at (p=%.17g, r=%.17g): paper %.17g, duality "
                  "%.17g, extremal sup %.17g  %s\n",
                  a.base_p, a.base_r, a.paper_constant, a.duality_constant,
                  a.extremal_supremum, a.passed ? "PASS" : "FAIL");
    os << line;
    os << "  " << a.verdict << "\n";
  }
  os << (rep.passed ? "all suites passed" : "suite failures detected") << "\n";
  return os.str();
}

}  // namespace wpl
