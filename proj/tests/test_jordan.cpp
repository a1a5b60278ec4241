#include <doctest.h>

#include <cmath>

#include "hsb/jordan.hpp"
#include "oracles.hpp"

using namespace hsb;

namespace {

JordanElement scalar(Complex x) {
  CMatrix m(1, 1);
  m(0, 0) = x;
  return {JordanTriple(1, 1), m};
}

JordanElement random_element(Rng& rng, const JordanTriple& t, double budget) {
  return {t, rng.matrix_with_norm_at_most(t.r, t.s, budget)};
}

const JordanTriple shapes[] = {{1, 1}, {2, 2}, {2, 3}, {3, 3}, {3, 1}};

}  // namespace

TEST_CASE("JordanTriple rejects empty shapes") {
  CHECK_THROWS_AS(JordanTriple(0, 2), Error);
  CHECK_THROWS_AS(JordanTriple(2, 0), Error);
  CHECK(JordanTriple(2, 3).dim() == 6);
}

TEST_CASE("triple_product scalar and tripotent cases") {
  CHECK(std::abs(triple_product(scalar(2), scalar(1), scalar(3)).value()(0, 0) - 6.0) < 1e-15);
  const JordanTriple t(2, 3);
  const auto e = JordanElement::unit(t, 0);
  CHECK((triple_product(e, e, e).value() - e.value()).norm() == 0.0);
}

TEST_CASE("triple_product matches direct evaluation, symmetry and conjugate linearity") {
  Rng rng(11);
  for (const auto& t : shapes) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = random_element(rng, t, 1.0);
      const auto v = random_element(rng, t, 1.0);
      const auto w = random_element(rng, t, 1.0);
      const CMatrix p = triple_product(u, v, w).value();
      CHECK((p - oracle::triple(u.value(), v.value(), w.value())).norm() < 1e-14);
      CHECK((p - triple_product(w, v, u).value()).norm() == 0.0);
      const Complex lambda = rng.unit_disk();
      const CMatrix scaled = triple_product(u, lambda * v, w).value();
      CHECK((scaled - std::conj(lambda) * p).norm() < 1e-12);
    }
  }
}

TEST_CASE("triple_product shape mismatch") {
  const JordanTriple a(2, 2), b(2, 3);
  try {
    triple_product(JordanElement::zero(a), JordanElement::zero(b), JordanElement::zero(a));
    FAIL("expected shape_mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::shape_mismatch);
  }
}

TEST_CASE("box and quadratic agree with triple_product on every basis unit") {
  Rng rng(12);
  for (const auto& t : shapes) {
    const auto u = random_element(rng, t, 1.0);
    const auto v = random_element(rng, t, 1.0);
    const auto z = random_element(rng, t, 1.0);
    const ZOperator b = box(u, v);
    const ZOperator q = quadratic(z);
    CHECK_FALSE(b.conjugate());
    CHECK(q.conjugate());
    for (int k = 0; k < t.dim(); ++k) {
      const auto e = JordanElement::unit(t, k);
      CHECK((b.apply(e).value() - oracle::triple(u.value(), v.value(), e.value())).norm() < 1e-12);
      CHECK((q.apply(e).value() - oracle::triple(z.value(), e.value(), z.value())).norm() < 1e-12);
    }
    // conjugate linearity of Q_z on a complex multiple
    const auto w = random_element(rng, t, 1.0);
    const Complex lambda(0.3, -0.7);
    CHECK((q.apply(lambda * w).value() - std::conj(lambda) * q.apply(w).value()).norm() < 1e-12);
  }
}

TEST_CASE("box trivial cases") {
  const JordanTriple t(1, 1);
  CHECK((box(scalar(1), scalar(1)).matrix() - CMatrix::Identity(1, 1)).norm() == 0.0);
  Rng rng(1);
  const JordanTriple t23(2, 3);
  CHECK(box(JordanElement::zero(t23), random_element(rng, t23, 1)).matrix().norm() == 0.0);
}

TEST_CASE("jordan identity residual vanishes") {
  const JordanTriple t(2, 2);
  const auto z = JordanElement::zero(t);
  CHECK(jordan_identity_residual(z, z, z, z) == 0.0);
  const auto e = JordanElement::unit(t, 0);
  CHECK(jordan_identity_residual(e, e, e, e) < 1e-15);
  Rng rng(13);
  for (const auto& shape : shapes) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto u = JordanElement(shape, rng.disk_matrix(shape.r, shape.s));
      const auto v = JordanElement(shape, rng.disk_matrix(shape.r, shape.s));
      const auto x = JordanElement(shape, rng.disk_matrix(shape.r, shape.s));
      const auto w = JordanElement(shape, rng.disk_matrix(shape.r, shape.s));
      const double m = std::max({u.norm(), v.norm(), x.norm(), w.norm()});
      CHECK(jordan_identity_residual(u, v, x, w) < 1e-10 * std::pow(1 + m, 3));
    }
  }
}

TEST_CASE("bergman operator") {
  Rng rng(14);
  const JordanTriple t1(1, 1);
  const ZOperator b = bergman(scalar(0.5), scalar(0.5));
  CHECK_FALSE(b.conjugate());
  CHECK(std::abs(b.matrix()(0, 0) - 0.5625) < 1e-15);
  for (const auto& t : shapes) {
    const auto w = random_element(rng, t, 1.0);
    CHECK((bergman(JordanElement::zero(t), w).matrix() - CMatrix::Identity(t.dim(), t.dim())).norm() == 0.0);
    const auto z = random_element(rng, t, 1.5);
    const ZOperator bz = bergman(z, w);
    for (int k = 0; k < t.dim(); ++k) {
      const auto e = JordanElement::unit(t, k);
      CHECK((bz.apply(e).value() - oracle::bergman_apply(z.value(), w.value(), e.value())).norm() < 1e-12);
    }
    for (int trial = 0; trial < 10; ++trial) {
      const auto x = random_element(rng, t, 0.99);
      const Complex det = determinant(bergman(x, x).matrix());
      CHECK(det.real() > 0);
      CHECK(std::abs(det.imag()) < 1e-12);
    }
  }
}

TEST_CASE("bergman scalar formula on random disk pairs") {
  Rng rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex z = rng.unit_disk();
    const Complex w = rng.unit_disk();
    const Complex expected = (1.0 - z * std::conj(w)) * (1.0 - z * std::conj(w));
    CHECK(std::abs(bergman(scalar(z), scalar(w)).matrix()(0, 0) - expected) < 1e-12);
  }
}

TEST_CASE("quasi_inverse values") {
  CHECK(std::abs(quasi_inverse(scalar(0.5), scalar(0.5)).value()(0, 0) - 2.0 / 3.0) < 1e-15);
  Rng rng(16);
  for (const auto& t : shapes) {
    const auto z = random_element(rng, t, 2.0);
    CHECK((quasi_inverse(z, JordanElement::zero(t)).value() - z.value()).norm() < 1e-14);
    const auto w = random_element(rng, t, 0.4);
    CHECK((quasi_inverse(z, w).value() - oracle::quasi_inverse(z.value(), w.value())).norm() < 1e-10);
  }
}

TEST_CASE("quasi_inverse singular Bergman") {
  try {
    quasi_inverse(scalar(1), scalar(1));
    FAIL("expected singular_bergman");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::singular_bergman);
  }
}

TEST_CASE("quasi_inverse addition formula") {
  Rng rng(17);
  for (const auto& t : shapes) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto z = random_element(rng, t, 0.3);
      const auto u = random_element(rng, t, 0.3);
      const auto v = random_element(rng, t, 0.3);
      const auto lhs = quasi_inverse(quasi_inverse(z, u), v);
      const auto rhs = quasi_inverse(z, u + v);
      CHECK((lhs - rhs).norm() < 1e-8);
    }
  }
}

TEST_CASE("tan_epsilon") {
  Rng rng(18);
  for (const auto& t : shapes) {
    for (const Curvature eps : all_curvatures)
      CHECK(tan_epsilon(JordanElement::zero(t), eps).value().norm() == 0.0);
    const auto v = random_element(rng, t, 1.2);
    CHECK((tan_epsilon(v, Curvature::flat).value() - v.value()).norm() < 1e-13);
    const CMatrix th = oracle::odd_calculus(v.value(), [](double s) { return std::tanh(s); });
    CHECK((tan_epsilon(v, Curvature::noncompact).value() - th).norm() < 1e-12);
    const CMatrix tn = oracle::odd_calculus(v.value(), [](double s) { return std::tan(s); });
    CHECK((tan_epsilon(v, Curvature::compact).value() - tn).norm() < 1e-12);
  }
  CHECK(std::abs(tan_epsilon(scalar(1), Curvature::noncompact).value()(0, 0) - 0.761594) < 1e-6);
}

TEST_CASE("tan_epsilon agrees with the flow of v + eps Q_z v") {
  Rng rng(19);
  for (const auto& t : shapes) {
    for (const Curvature eps : all_curvatures) {
      const auto v = random_element(rng, t, 0.5);
      const double e = sign(eps);
      const CMatrix vm = v.value();
      const CMatrix flow = rk4_flow(
          [&](const CMatrix& z) { return (vm + e * z * vm.adjoint() * z).eval(); },
          CMatrix::Zero(t.r, t.s), 1.0, 1e-3);
      CHECK((tan_epsilon(v, eps).value() - flow).norm() < 1e-6);
    }
  }
}

TEST_CASE("tan_epsilon cut locus") {
  try {
    tan_epsilon(scalar(M_PI / 2), Curvature::compact);
    FAIL("expected cut_locus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cut_locus);
  }
  CHECK_NOTHROW(tan_epsilon(scalar(M_PI / 2), Curvature::noncompact));
}

TEST_CASE("ZOperator composition of conjugate operators is linear") {
  Rng rng(20);
  const JordanTriple t(2, 3);
  const auto z = random_element(rng, t, 1.0);
  const auto w = random_element(rng, t, 1.0);
  const auto x = random_element(rng, t, 1.0);
  const ZOperator qq = quadratic(z).compose(quadratic(w));
  CHECK_FALSE(qq.conjugate());
  const CMatrix direct = oracle::triple(z.value(), oracle::triple(w.value(), x.value(), w.value()), z.value());
  CHECK((qq.apply(x).value() - direct).norm() < 1e-12);
}
