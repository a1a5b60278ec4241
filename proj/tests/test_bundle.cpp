#include <doctest.h>

#include <array>
#include <cmath>

#include "fixtures.hpp"
#include "hsb/bundle.hpp"

using namespace hsb;
using fixture::unit;

namespace {

JordanElement scalar(Complex x) {
  CMatrix m(1, 1);
  m(0, 0) = x;
  return {JordanTriple(1, 1), m};
}

JordanElement random_element(Rng& rng, const JordanTriple& t) { return {t, rng.disk_matrix(t.r, t.s)}; }

double max_diff(const std::vector<CMatrix>& a, const std::vector<CMatrix>& b) {
  double m = 0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, (a[k] - b[k]).norm());
  return m;
}

GammaMap random_gamma(Rng& rng, const JordanTriple& t, int n) {
  std::vector<CMatrix> images;
  for (int p = 0; p < 2 * t.dim(); ++p) images.push_back(rng.disk_matrix(n, n));
  return {t, n, std::move(images)};
}

BetaMap random_beta(Rng& rng, const JordanTriple& t, int n) {
  return {t, n, fixture::generic_tuple(rng, n, t.dim())};
}

}  // namespace

TEST_CASE("covariance residual examples") {
  const auto disk = fixture::disk();
  CHECK(covariance_residual(disk.df, BetaMap::zero(disk.triple, 2)) == 0.0);
  CHECK(covariance_residual(disk.df, disk.beta) <= 1e-14);
  CHECK(std::abs(covariance_residual(disk.df, fixture::disk_wrong_weight().beta) - 2.0) < 1e-14);
}

TEST_CASE("covariance of a real-linear map agrees with its beta") {
  const auto disk = fixture::disk();
  CHECK(covariance_residual(disk.df, beta_to_gamma(disk.beta)) < 1e-14);
  CHECK(covariance_residual(disk.df, beta_to_gamma(fixture::disk_wrong_weight().beta)) > 0.5);
}

TEST_CASE("gamma_to_beta") {
  Rng rng(41);
  const JordanTriple t(2, 1);
  // complex-linear gamma: image of i e_k is i times the image of e_k
  std::vector<CMatrix> linear(4);
  for (int k = 0; k < 2; ++k) {
    linear[k] = rng.disk_matrix(3, 3);
    linear[k + 2] = I * linear[k];
  }
  const BetaMap zero_beta = gamma_to_beta(GammaMap(t, 3, linear));
  for (const auto& b : zero_beta.images()) CHECK(b.norm() < 1e-15);
  // anti-linear gamma(v) = conj(v) B gives beta = 2i conj(v) B
  const CMatrix b = rng.disk_matrix(2, 2);
  const GammaMap anti(JordanTriple(1, 1), 2, {b, -I * b});
  const BetaMap beta = gamma_to_beta(anti);
  CHECK((beta.images()[0] - 2.0 * I * b).norm() < 1e-15);
  const GammaMap nothing(JordanTriple(1, 1), 2, {CMatrix::Zero(2, 2), CMatrix::Zero(2, 2)});
  CHECK(gamma_to_beta(nothing).images()[0].norm() == 0.0);
}

TEST_CASE("beta gamma roundtrip") {
  Rng rng(42);
  for (const auto& t : {JordanTriple(1, 1), JordanTriple(2, 3)}) {
    const BetaMap beta = random_beta(rng, t, 3);
    const GammaMap gamma = beta_to_gamma(beta);
    CHECK(max_diff(gamma_to_beta(gamma).images(), beta.images()) < 1e-15);
    // gamma is not complex-linear: gamma(i e) != i gamma(e)
    CHECK((gamma.images()[t.dim()] - I * gamma.images()[0]).norm() > 1e-3);
  }
  const auto disk = fixture::disk();
  CHECK(max_diff(gamma_to_beta(beta_to_gamma(disk.beta)).images(), disk.beta.images()) == 0.0);
  CHECK(beta_to_gamma(BetaMap::zero(disk.triple, 2)).images()[0].norm() == 0.0);
}

TEST_CASE("alpha beta conversions") {
  const JordanTriple t(1, 1);
  CMatrix i1(1, 1);
  i1(0, 0) = I;
  const AlphaMap alpha(t, 1, {i1, CMatrix::Zero(1, 1)});  // alpha(v) = i Re(v)
  const BetaMap beta = alpha_to_beta(alpha);
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const Complex v = rng.unit_disk();
    CHECK(std::abs(beta(scalar(v))(0, 0) + std::conj(v)) < 1e-15);
  }

  const auto disk = fixture::disk();
  const AlphaMap a = beta_to_alpha(disk.beta, disk.h);
  for (int trial = 0; trial < 10; ++trial) {
    const Complex v = rng.unit_disk();
    const CMatrix expected = (std::conj(v) * unit(2, 0, 1) + v * unit(2, 1, 0)) / (2.0 * I);
    const CMatrix got = a(scalar(v));
    CHECK((got - expected).norm() < 1e-15);
    CHECK(hermitian_defect(I * got) < 1e-15);
  }
  CHECK(max_diff(alpha_to_beta(a).images(), disk.beta.images()) < 1e-15);

  for (const auto& shape : {JordanTriple(2, 2), JordanTriple(1, 3)}) {
    const BetaMap b = random_beta(rng, shape, 3);
    CHECK(max_diff(alpha_to_beta(beta_to_alpha(b, HStructure(3, true))).images(), b.images()) < 1e-12);
  }
  const AlphaMap none(t, 1, {CMatrix::Zero(1, 1), CMatrix::Zero(1, 1)});
  CHECK(alpha_to_beta(none).images()[0].norm() == 0.0);
}

TEST_CASE("alpha constraints") {
  const JordanTriple t(1, 1);
  try {
    beta_to_alpha(fixture::disk().beta, HStructure(2, false));
    FAIL("expected not_hermitian_structure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_hermitian_structure);
  }
  CHECK_THROWS_AS(AlphaMap(t, 1, {CMatrix::Ones(1, 1), CMatrix::Zero(1, 1)}), Error);
}

TEST_CASE("tautological connexion form at the base point") {
  const auto disk = fixture::disk();
  const JordanTriple t = disk.triple;
  Rng rng(44);
  const CMatrix eta = rng.disk_matrix(2, 2);
  CHECK(tautological_form_base(GField::pure_p(Curvature::noncompact, scalar(0.3)), CMatrix::Zero(2, 2), disk.df)
            .norm() == 0.0);
  const GField none(Curvature::noncompact, JordanElement::zero(t), Derivation::zero(t));
  CHECK((tautological_form_base(none, eta, disk.df) - eta).norm() == 0.0);
  const GField rot = GField::pure_k(Curvature::noncompact, k_basis(t).front());
  CMatrix expected = CMatrix::Zero(2, 2);
  expected(1, 1) = I;
  CHECK((tautological_form_base(rot, CMatrix::Zero(2, 2), disk.df) - expected).norm() < 1e-15);
  CHECK_THROWS_AS(tautological_form_base(rot, CMatrix::Zero(3, 3), disk.df), Error);
}

TEST_CASE("tautological curvature") {
  const auto disk = fixture::disk();
  for (const Curvature eps : all_curvatures) {
    const CMatrix k = curvature_tautological(disk.df, scalar(1), scalar(I), eps);
    CMatrix expected = CMatrix::Zero(2, 2);
    expected(1, 1) = 2.0 * I * sign(eps);
    CHECK((k - expected).norm() < 1e-14);
  }
  Rng rng(45);
  const JordanTriple t(2, 3);
  const std::array<RepSummand, 2> rep{RepSummand{RepKind::left, 0.5}, RepSummand{RepKind::right_dual, -1.0}};
  const DfMap df = df_from_representation(t, rep);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = random_element(rng, t);
    const auto v = random_element(rng, t);
    CHECK(curvature_tautological(df, u, v, Curvature::flat).norm() == 0.0);
    CHECK(curvature_tautological(df, u, u, Curvature::compact).norm() < 1e-12);
    const CMatrix kuv = curvature_tautological(df, u, v, Curvature::compact);
    const CMatrix kvu = curvature_tautological(df, v, u, Curvature::compact);
    CHECK((kuv + kvu).norm() < 1e-12);
  }
}

TEST_CASE("invariant curvature") {
  Rng rng(46);
  const auto disk = fixture::disk();
  const JordanTriple t = disk.triple;
  const GammaMap zero(t, 2, {CMatrix::Zero(2, 2), CMatrix::Zero(2, 2)});
  CHECK((curvature_invariant(disk.df, zero, scalar(1), scalar(I), Curvature::compact) -
         curvature_tautological(disk.df, scalar(1), scalar(I), Curvature::compact))
            .norm() == 0.0);
  const GammaMap gamma = beta_to_gamma(disk.beta);
  for (const Curvature eps : all_curvatures) {
    const CMatrix diff = curvature_invariant(disk.df, gamma, scalar(1), scalar(I), eps) -
                         curvature_tautological(disk.df, scalar(1), scalar(I), eps);
    CHECK(diff.norm() < 1e-15);
  }
  // commuting complex-linear gamma leaves kappa0 unchanged
  const CMatrix c = CMatrix::Identity(2, 2) + 0.5 * unit(2, 0, 1);
  const GammaMap linear(t, 2, {c, I * c});
  const CMatrix diff = curvature_invariant(disk.df, linear, scalar(0.4), scalar(Complex(0.1, 0.7)), Curvature::noncompact) -
                       curvature_tautological(disk.df, scalar(0.4), scalar(Complex(0.1, 0.7)), Curvature::noncompact);
  CHECK(diff.norm() < 1e-15);
}

TEST_CASE("part_02 on pure types") {
  Rng rng(47);
  const JordanTriple t(2, 1);
  const int n = 2;
  const CMatrix c = rng.disk_matrix(n, n);
  // type (1,1): complex-linear in u, anti-linear in v
  auto t11 = BilinearForm::tabulate(t, n, [&](const JordanElement& u, const JordanElement& v) {
    return (u.coords().dot(v.coords()) * c).eval();  // dot conjugates the first argument
  });
  auto t11b = BilinearForm::tabulate(t, n, [&](const JordanElement& u, const JordanElement& v) {
    return (v.coords().dot(u.coords()) * c).eval();
  });
  CHECK(part_02(t11b).max_norm() < 1e-15);
  // type (0,2): anti-linear in both
  auto t02 = BilinearForm::tabulate(t, n, [&](const JordanElement& u, const JordanElement& v) {
    Complex s = 0;
    for (int k = 0; k < t.dim(); ++k) s += std::conj(u.coords()(k)) * std::conj(v.coords()(k)) * Complex(k + 1);
    return (s * c).eval();
  });
  const BilinearForm p = part_02(t02);
  for (int a = 0; a < 2 * t.dim(); ++a)
    for (int b = 0; b < 2 * t.dim(); ++b) CHECK((p.at(a, b) - 4.0 * t02.at(a, b)).norm() < 1e-14);
  // t11 is conjugate-linear in u: type (1,1) with arguments swapped, which part_02 keeps
  CHECK(part_02(t11).max_norm() < 1e-15);
}

TEST_CASE("part_02 of the tautological curvature vanishes") {
  Rng rng(48);
  for (const auto& t : {JordanTriple(1, 1), JordanTriple(2, 2), JordanTriple(2, 3)}) {
    const std::array<RepSummand, 3> rep{RepSummand{RepKind::left, rng.uniform(-1, 1)},
                                        RepSummand{RepKind::right, rng.uniform(-1, 1)},
                                        RepSummand{RepKind::trivial, rng.uniform(-1, 1)}};
    const DfMap df = df_from_representation(t, rep);
    for (const Curvature eps : all_curvatures)
      CHECK(part_02(tautological_curvature_form(df, eps)).max_norm() < 1e-12);
  }
}

TEST_CASE("representations give homomorphisms") {
  Rng rng(49);
  for (const auto& t : {JordanTriple(1, 1), JordanTriple(2, 1), JordanTriple(2, 3)}) {
    for (const RepKind kind : {RepKind::trivial, RepKind::left, RepKind::left_dual, RepKind::right, RepKind::right_dual}) {
      const std::array<RepSummand, 2> rep{RepSummand{kind, rng.uniform(-2, 2)}, RepSummand{RepKind::left, 0.0}};
      const DfMap df = df_from_representation(t, rep);
      CHECK(df.homomorphism_residual() < 1e-12);
      CHECK(df.hermitian_range_residual() < 1e-14);
    }
  }
  const JordanTriple t(2, 2);
  std::vector<CMatrix> bad;
  for (std::size_t k = 0; k < k_basis(t).size(); ++k) bad.push_back(rng.disk_matrix(2, 2));
  CHECK(DfMap(t, 2, bad).homomorphism_residual() > 1e-3);
}

TEST_CASE("integrability of the disk datum") {
  const auto disk = fixture::disk();
  for (const Curvature eps : all_curvatures) {
    const auto rep = integrability_check(disk, eps);
    CHECK(rep.integrable);
    CHECK(rep.consistent);
    CHECK(rep.epsilon_independent);
    CHECK(rep.covariance_residual <= 1e-14);
    CHECK(rep.bracket_residual == 0.0);
    CHECK(rep.nijenhuis_residual == 0.0);
  }
}

TEST_CASE("integrability of the noncommuting datum") {
  const auto nc = fixture::noncommuting();
  try {
    integrability_check(nc, Curvature::noncompact);
    FAIL("expected covariance_violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::covariance_violation);
  }
  const auto rep = integrability_check(nc, Curvature::noncompact, default_tol, CovarianceGate::report);
  CHECK_FALSE(rep.integrable);
  CHECK(rep.consistent);
  CHECK(std::abs(rep.bracket_residual - std::sqrt(2.0)) < 1e-15);
  CHECK(rep.nijenhuis_residual > 0.1);
  CHECK(rep.epsilon_independent);
  REQUIRE(rep.residuals.hermitian.has_value());
  CHECK(*rep.residuals.hermitian > 0.1);
}

TEST_CASE("single generator is always integrable") {
  Rng rng(50);
  const JordanTriple t(1, 1);
  for (int trial = 0; trial < 5; ++trial) {
    const BetaMap beta(t, 3, {rng.disk_matrix(3, 3)});
    const auto res = integrability_residuals(DfMap::zero(t, 3), beta, HStructure(3, true), Curvature::compact);
    CHECK(res.bracket == 0.0);
    CHECK(res.nijenhuis < 1e-15);
    CHECK(res.nijenhuis_base < 1e-15);
  }
}

TEST_CASE("commuting and generic tuples") {
  Rng rng(51);
  const JordanTriple t(1, 2);
  const DfMap df = DfMap::zero(t, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const BetaMap good(t, 3, fixture::commuting_tuple(rng, 3, 2));
    const BetaMap bad(t, 3, fixture::generic_tuple(rng, 3, 2));
    for (const Curvature eps : all_curvatures) {
      const auto g = integrability_residuals(df, good, HStructure(3, true), eps);
      CHECK(g.bracket < 1e-9);
      CHECK(g.nijenhuis < 1e-9);
      CHECK(*g.hermitian < 1e-9);
      const auto b = integrability_residuals(df, bad, HStructure(3, true), eps);
      CHECK(b.bracket > 1e-3);
      CHECK(b.nijenhuis > 1e-3);
      CHECK(*b.hermitian > 1e-3);
    }
  }
}

TEST_CASE("nijenhuis_base") {
  Rng rng(52);
  const auto nc = fixture::noncommuting();
  const auto e1 = JordanElement::unit(nc.triple, 0);
  const auto e2 = JordanElement::unit(nc.triple, 1);
  CMatrix expected = CMatrix::Zero(2, 2);
  expected(0, 0) = 0.25;
  expected(1, 1) = -0.25;
  CHECK((nijenhuis_base(nc.beta, e1, e2) - expected).norm() < 1e-15);
  // conjugation of coordinates flips the sign for the imaginary direction
  CHECK((nijenhuis_base(nc.beta, I * e1, e2) + I * expected).norm() < 1e-15);
  const auto u = random_element(rng, nc.triple);
  CHECK(nijenhuis_base(nc.beta, u, u).norm() < 1e-15);
  const auto disk = fixture::disk();
  CHECK(nijenhuis_base(disk, scalar(rng.unit_disk()), scalar(rng.unit_disk())).norm() == 0.0);
  CHECK_THROWS_AS(nijenhuis_base(nc, e1, e2), Error);
  CHECK_NOTHROW(nijenhuis_base(nc, e1, e2, default_tol, CovarianceGate::report));
}

TEST_CASE("curvature (0,2)-part is minus half the beta bracket") {
  Rng rng(53);
  const JordanTriple t(2, 1);
  const DfMap df = df_from_representation(t, std::array<RepSummand, 1>{RepSummand{RepKind::left, 0.3}});
  const BetaMap beta(t, 2, fixture::generic_tuple(rng, 2, 2));
  for (const Curvature eps : all_curvatures) {
    const BilinearForm p = part_02(invariant_curvature_form(df, beta_to_gamma(beta), eps));
    for (int i = 0; i < t.dim(); ++i)
      for (int j = 0; j < t.dim(); ++j) {
        const CMatrix expected = -0.5 * commutator(beta.images()[i], beta.images()[j]);
        CHECK((p.at(i, j) - expected).norm() < 1e-13);
      }
  }
}

TEST_CASE("covariant beta spaces") {
  const auto disk = fixture::disk();
  const auto basis = covariant_beta_basis(disk.df);
  CHECK(basis.size() == 2);  // complex multiples of E12
  for (const auto& b : basis) {
    CHECK(covariance_residual(disk.df, b) < 1e-12);
    CHECK(std::abs(b.images()[0](1, 0)) < 1e-12);
  }
  Rng rng(54);
  const JordanTriple t(2, 1);
  const std::array<RepSummand, 2> rep{RepSummand{RepKind::trivial, 0.0}, RepSummand{RepKind::left_dual, 0.0}};
  const DfMap df = df_from_representation(t, rep);
  const auto space = covariant_beta_basis(df);
  CHECK_FALSE(space.empty());
  for (int trial = 0; trial < 5; ++trial) {
    const BetaMap beta = fixture::random_covariant_beta(rng, df);
    CHECK(covariance_residual(df, beta) < 1e-10);
    const ClassificationDatum datum{t, HStructure(3, true), df, beta};
    for (const Curvature eps : all_curvatures) {
      const auto rep_eps = integrability_check(datum, eps);
      CHECK(rep_eps.consistent);
      CHECK(rep_eps.epsilon_independent);
    }
  }
}

TEST_CASE("covariant data with and without commuting images") {
  const auto good = fixture::covariant_commuting();
  const auto bad = fixture::covariant_mixed();
  CHECK(good.df.homomorphism_residual() < 1e-14);
  for (const Curvature eps : all_curvatures) {
    const auto g = integrability_check(good, eps);
    CHECK(g.integrable);
    CHECK(g.nijenhuis_residual < 1e-14);
    CHECK(g.consistent);
    const auto b = integrability_check(bad, eps);
    CHECK(b.covariance_residual < 1e-14);
    CHECK_FALSE(b.integrable);
    CHECK(b.bracket_residual == doctest::Approx(2.0));
    CHECK(b.nijenhuis_residual > 0.1);
    CHECK(b.consistent);
    CHECK(b.epsilon_independent);
  }
}

TEST_CASE("random covariant data: bracket and Nijenhuis vanish together") {
  Rng rng(57);
  const DfMap df = fixture::covariant_df();
  const auto basis = covariant_beta_basis(df);
  CHECK(basis.size() == 4);
  int integrable = 0;
  for (int trial = 0; trial < 20; ++trial) {
    // half the trials stay inside the commuting subspace
    BetaMap beta = fixture::random_covariant_beta(rng, df);
    if (trial % 2 == 0) {
      std::vector<CMatrix> images = beta.images();
      for (auto& m : images) m.bottomRows(2).setZero();
      beta = BetaMap(df.triple(), 4, images);
    }
    const ClassificationDatum datum{df.triple(), HStructure(4, true), df, beta};
    const auto rep = integrability_check(datum, Curvature::compact, 1e-10);
    CHECK(rep.consistent);
    integrable += rep.integrable ? 1 : 0;
  }
  CHECK(integrable == 10);
}

TEST_CASE("gauge transforms") {
  const auto disk = fixture::disk();
  const auto same = gauge_transform(disk, CMatrix::Identity(2, 2));
  CHECK(max_diff(same.beta.images(), disk.beta.images()) == 0.0);
  CHECK(max_diff(same.df.images(), disk.df.images()) == 0.0);

  const double theta = 0.7;
  CMatrix l = CMatrix::Identity(2, 2);
  l(1, 1) = std::polar(1.0, theta);
  const auto rotated = gauge_transform(disk, l);
  CHECK((rotated.beta.images()[0] - std::polar(1.0, -theta) * unit(2, 0, 1)).norm() < 1e-15);
  CHECK(covariance_residual(rotated.df, rotated.beta) < 1e-15);

  Rng rng(55);
  const auto nc = fixture::noncommuting();
  const double before = integrability_check(nc, Curvature::flat, default_tol, CovarianceGate::report).bracket_residual;
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = gauge_transform(nc, rng.unitary(2));
    const double after = integrability_check(g, Curvature::flat, default_tol, CovarianceGate::report).bracket_residual;
    CHECK(std::abs(after - before) < 1e-10);
  }

  try {
    gauge_transform(disk, CMatrix::Zero(2, 2));
    FAIL("expected singular_gauge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::singular_gauge);
  }
  try {
    gauge_transform(disk, 2.0 * CMatrix::Identity(2, 2));
    FAIL("expected not_unitary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_unitary);
  }
  auto general = disk;
  general.h = HStructure(2, false);
  CHECK_NOTHROW(gauge_transform(general, 2.0 * CMatrix::Identity(2, 2)));
}

TEST_CASE("orbit fingerprints") {
  ClassificationDatum d = fixture::disk();
  d.df = DfMap::zero(d.triple, 2);
  const auto f = orbit_fingerprint(d, 2);
  // alphabet (B1, df X1): words B1, X1, B1B1, B1X1, X1B1, X1X1
  REQUIRE(f.size() == 6);
  CHECK(std::abs(f[0]) == 0.0);
  CHECK(std::abs(f[2]) == 0.0);

  const JordanTriple t(1, 1);
  const ClassificationDatum one{t, HStructure(2, true), DfMap::zero(t, 2), BetaMap(t, 2, {CMatrix::Identity(2, 2)})};
  const ClassificationDatum two{t, HStructure(2, true), DfMap::zero(t, 2),
                                BetaMap(t, 2, {2.0 * CMatrix::Identity(2, 2)})};
  CHECK(std::abs(orbit_fingerprint(one, 1)[0] - orbit_fingerprint(two, 1)[0]) > 1.0);

  Rng rng(56);
  const auto disk = fixture::disk();
  const auto base = orbit_fingerprint(disk, 3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto moved = orbit_fingerprint(gauge_transform(disk, rng.unitary(2)), 3);
    REQUIRE(moved.size() == base.size());
    for (std::size_t k = 0; k < base.size(); ++k) CHECK(std::abs(moved[k] - base[k]) < 1e-8);
  }
  CHECK_THROWS_AS(orbit_fingerprint(disk, 0), Error);
}

TEST_CASE("dualize leaves the datum and its verdicts unchanged") {
  for (const auto& datum : {fixture::disk(), fixture::noncommuting()}) {
    for (const Curvature from : all_curvatures)
      for (const Curvature to : all_curvatures) {
        const auto out = dualize(datum, from, to);
        CHECK(max_diff(out.beta.images(), datum.beta.images()) == 0.0);
        const auto a = integrability_check(datum, from, default_tol, CovarianceGate::report);
        const auto b = integrability_check(out, to, default_tol, CovarianceGate::report);
        CHECK(a.integrable == b.integrable);
        CHECK(a.bracket_residual == b.bracket_residual);
        CHECK(std::abs(a.nijenhuis_residual - b.nijenhuis_residual) < 1e-12);
      }
  }
}

TEST_CASE("datum validation") {
  auto d = fixture::disk();
  CHECK_NOTHROW(d.validate());
  CHECK_THROWS_AS(BetaMap(d.triple, 2, {CMatrix::Zero(3, 3)}), Error);
  CHECK_THROWS_AS(DfMap(d.triple, 2, {}), Error);
  CHECK_THROWS_AS(HStructure(0, true), Error);
}
