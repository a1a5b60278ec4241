#include "hsb/commands.hpp"

#include <algorithm>
#include <cmath>

#include "hsb/io.hpp"
#include "hsb/spaces.hpp"

namespace hsb {

namespace {

// Budget for checks that compare against an RK4 trajectory at step 1e-3.
constexpr double flow_budget = 1e-6;

struct Worst {
  double value = 0.0;
  void update(double x) { value = std::isfinite(x) ? std::max(value, x) : std::numeric_limits<double>::infinity(); }
};

JordanElement random_element(Rng& rng, const JordanTriple& t, double budget) {
  return {t, rng.matrix_with_norm_at_most(t.r, t.s, budget)};
}

JordanElement disk_element(Rng& rng, const JordanTriple& t) { return {t, rng.disk_matrix(t.r, t.s)}; }

Derivation random_derivation(Rng& rng, const JordanTriple& t) {
  Eigen::VectorXd c(k_dimension(t));
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = rng.uniform(-1.0, 1.0);
  return Derivation::from_coordinates(t, c);
}

GField random_gfield(Rng& rng, const JordanTriple& t, Curvature eps) {
  return {eps, disk_element(rng, t), random_derivation(rng, t)};
}

double coefficient_norm(const GField& x) {
  return frobenius_norm(x.v().value()) + frobenius_norm(x.delta().as_operator().matrix());
}

}  // namespace

Report cmd_verify(const VerifyOptions& options) {
  const JordanTriple t(options.r, options.s);
  if (options.trials < 1) throw Error(ErrorCode::invalid_argument, "trials must be >= 1");
  if (!(options.tol > 0.0)) throw Error(ErrorCode::invalid_argument, "tol must be positive");
  Rng rng(options.seed);
  Report report("verify");
  report.set_seed(options.seed);
  report.parameters() = {{"r", t.r}, {"s", t.s}, {"trials", options.trials}, {"tol", options.tol}};

  Worst jordan, symmetry, bergman_basis, addition, closure, jacobi, pp, kp, flow, derivations;

  for (const auto& x : k_basis(t)) derivations.update(derivation_residual(x));

  for (int trial = 0; trial < options.trials; ++trial) {
    {
      const JordanElement u = disk_element(rng, t), v = disk_element(rng, t);
      const JordanElement z = disk_element(rng, t), w = disk_element(rng, t);
      const double m = std::max({u.norm(), v.norm(), z.norm(), w.norm()});
      jordan.update(jordan_identity_residual(u, v, z, w) / std::pow(1.0 + m, 3));

      const Complex lambda = rng.unit_disk();
      const double sym = frobenius_norm(triple_product(u, v, w).value() - triple_product(w, v, u).value());
      const double conj = frobenius_norm(triple_product(u, lambda * v, w).value() -
                                         std::conj(lambda) * triple_product(u, v, w).value());
      symmetry.update((sym + conj) / std::pow(1.0 + m, 3));

      const ZOperator b = bergman(z, w);
      double basis_gap = 0.0;
      for (int k = 0; k < t.dim(); ++k) {
        const JordanElement e = JordanElement::unit(t, k);
        const CMatrix direct = e.value() - 2.0 * triple_product(z, w, e).value() +
                               triple_product(z, triple_product(w, e, w), z).value();
        basis_gap = std::max(basis_gap, frobenius_norm(b.apply(e).value() - direct));
      }
      bergman_basis.update(basis_gap / std::pow(1.0 + m, 4));
    }
    {
      const JordanElement z = random_element(rng, t, 0.3), u = random_element(rng, t, 0.3);
      const JordanElement v = random_element(rng, t, 0.3);
      const JordanElement lhs = quasi_inverse(quasi_inverse(z, u), v);
      const JordanElement rhs = quasi_inverse(z, u + v);
      addition.update(frobenius_norm(lhs.value() - rhs.value()) / (1.0 + z.norm()));
    }
    for (Curvature eps : all_curvatures) {
      const GField a = random_gfield(rng, t, eps), b = random_gfield(rng, t, eps);
      const GField c = random_gfield(rng, t, eps);
      const double scale = (1.0 + coefficient_norm(a)) * (1.0 + coefficient_norm(b));

      double residual = 0.0;
      (void)decompose_field(lie_bracket(a.polynomial(), b.polynomial()), eps, &residual, 1e-6);
      closure.update(residual / scale);

      const GField j1 = g_bracket(a, g_bracket(b, c, 1e-6), 1e-6);
      const GField j2 = g_bracket(b, g_bracket(c, a, 1e-6), 1e-6);
      const GField j3 = g_bracket(c, g_bracket(a, b, 1e-6), 1e-6);
      const double jscale = scale * (1.0 + coefficient_norm(c));
      jacobi.update(coefficient_norm(j1 + j2 + j3) / jscale);

      const JordanElement u = disk_element(rng, t), v = disk_element(rng, t);
      const GField uv = g_bracket(GField::pure_p(eps, u), GField::pure_p(eps, v), 1e-6);
      const CMatrix expected = sign(eps) * 2.0 * (box(u, v) - box(v, u)).matrix();
      pp.update((uv.v().norm() + frobenius_norm(uv.delta().as_operator().matrix() - expected)) /
                std::pow(1.0 + std::max(u.norm(), v.norm()), 2));

      const GField kv = g_bracket(GField::pure_k(eps, random_derivation(rng, t)), GField::pure_p(eps, u), 1e-6);
      kp.update(frobenius_norm(kv.delta().as_operator().matrix()) / (1.0 + u.norm()));

      const JordanElement fv = random_element(rng, t, 0.5);
      const JordanElement z0 = random_element(rng, t, 0.5);
      const JordanElement by_flow = exp_field(fv, eps, z0);
      const JordanElement by_formula = transvection(tan_epsilon(fv, eps), eps, z0);
      flow.update(frobenius_norm(by_flow.value() - by_formula.value()));
    }
  }

  report.check("addition_formula", addition.value, options.tol);
  report.check("bergman_basis_evaluation", bergman_basis.value, options.tol);
  report.check("bracket_closure", closure.value, options.tol);
  report.check("derivation_property", derivations.value, options.tol);
  report.check("flow_vs_transvection", flow.value, std::max(options.tol, flow_budget));
  report.check("jacobi_identity", jacobi.value, options.tol);
  report.check("jordan_identity", jordan.value, options.tol);
  report.check("kp_bracket_in_p", kp.value, options.tol);
  report.check("pp_bracket_formula", pp.value, options.tol);
  report.check("triple_product_symmetry", symmetry.value, options.tol);
  return report;
}

namespace {

void record_datum(Report& report, const ClassificationDatum& datum) {
  report.parameters()["r"] = datum.triple.r;
  report.parameters()["s"] = datum.triple.s;
  report.parameters()["n"] = datum.h.n;
  report.parameters()["hermitian"] = datum.h.hermitian;
}

Json residuals_json(const IntegrabilityResiduals& r, double tol) {
  Json j = {{"epsilon", static_cast<int>(r.eps)},
            {"integrable", r.bracket < tol},
            {"bracket_residual", r.bracket},
            {"nijenhuis_residual", r.nijenhuis},
            {"nijenhuis_base_residual", r.nijenhuis_base},
            {"tautological_02_residual", r.tautological_02}};
  j["hermitian_residual"] = r.hermitian ? Json(*r.hermitian) : Json(nullptr);
  return j;
}

}  // namespace

Report cmd_classify(const ClassificationDatum& datum, Curvature eps, double tol) {
  Report report("classify");
  record_datum(report, datum);
  report.parameters()["epsilon"] = static_cast<int>(eps);
  report.parameters()["tol"] = tol;

  const IntegrabilityReport check = integrability_check(datum, eps, tol, CovarianceGate::report);
  const auto& r = check.residuals;

  report.check("df_homomorphism", datum.df.homomorphism_residual(), tol);
  if (datum.h.hermitian) report.check("df_hermitian_range", datum.df.hermitian_range_residual(), tol);
  report.check("covariance", check.covariance_residual, tol);
  report.check("bracket", r.bracket, tol);
  report.check("nijenhuis", r.nijenhuis, tol);
  report.check("tautological_02", r.tautological_02, tol);
  if (r.hermitian) report.check("hermitian_form", *r.hermitian, tol);
  report.require("verdict_consistency", check.consistent);

  Json& res = report.results();
  res = residuals_json(r, tol);
  res["covariance_residual"] = check.covariance_residual;
  res["df_homomorphism_residual"] = datum.df.homomorphism_residual();
  if (datum.h.hermitian) res["df_hermitian_range_residual"] = datum.df.hermitian_range_residual();
  res["integrable"] = check.integrable;
  return report;
}

Report cmd_dualize(const ClassificationDatum& datum, double tol) {
  Report report("dualize");
  record_datum(report, datum);
  report.parameters()["tol"] = tol;

  const IntegrabilityReport base = integrability_check(datum, Curvature::noncompact, tol, CovarianceGate::report);
  Json per = Json::array();
  bool verdicts_agree = true;
  bool exact_agree = true;
  double nijenhuis_spread = 0.0;
  for (Curvature to : all_curvatures) {
    const ClassificationDatum dual = dualize(datum, Curvature::noncompact, to);
    const IntegrabilityReport other = integrability_check(dual, to, tol, CovarianceGate::report);
    verdicts_agree = verdicts_agree && other.integrable == base.integrable;
    exact_agree = exact_agree && other.bracket_residual == base.bracket_residual &&
                  other.covariance_residual == base.covariance_residual &&
                  other.residuals.nijenhuis_base == base.residuals.nijenhuis_base &&
                  other.residuals.hermitian == base.residuals.hermitian;
    nijenhuis_spread = std::max(nijenhuis_spread, std::abs(other.nijenhuis_residual - base.nijenhuis_residual));
    per.push_back(residuals_json(other.residuals, tol));
  }
  report.require("verdicts_identical", verdicts_agree);
  report.require("epsilon_free_residuals_identical", exact_agree);
  report.check("nijenhuis_spread", nijenhuis_spread, tol);

  report.results() = {{"per_epsilon", std::move(per)},
                      {"integrable", base.integrable},
                      {"covariance_residual", base.covariance_residual}};
  return report;
}

Report cmd_curvature(const ClassificationDatum& datum, Curvature eps, double tol) {
  Report report("curvature");
  record_datum(report, datum);
  report.parameters()["epsilon"] = static_cast<int>(eps);
  report.parameters()["tol"] = tol;

  const JordanTriple& t = datum.triple;
  const GammaMap gamma = beta_to_gamma(datum.beta);
  const BilinearForm kappa0 = tautological_curvature_form(datum.df, eps, tol);
  const BilinearForm kappa = invariant_curvature_form(datum.df, gamma, eps, tol);
  const BilinearForm kappa02 = part_02(kappa);
  const BilinearForm kappa0_02 = part_02(kappa0);

  Json table = Json::array();
  double relation = 0.0;
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) {
      const JordanElement u = JordanElement::unit(t, i);
      const JordanElement v = JordanElement::unit(t, j);
      const CMatrix k02 = kappa02(u, v);
      const CMatrix bracket = commutator(datum.beta(u), datum.beta(v));
      relation = std::max(relation, frobenius_norm(k02 + 0.5 * bracket));
      table.push_back({{"u", i},
                       {"v", j},
                       {"kappa0", to_json(kappa0(u, v))},
                       {"kappa", to_json(kappa(u, v))},
                       {"kappa_02", to_json(k02)},
                       {"nijenhuis_base", to_json(nijenhuis_base(datum.beta, u, v))}});
    }
  report.check("tautological_02", kappa0_02.max_norm(), tol);
  // part_02 of kappa - kappa0 = -[beta u, beta v] / 8 picks up a factor 4.
  report.check("kappa_02_equals_minus_half_bracket", relation, tol);
  report.results() = {{"pairs", std::move(table)}, {"kappa_02_max", kappa02.max_norm()}};
  return report;
}

}  // namespace hsb
