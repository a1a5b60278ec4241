#pragma once
// Shared classification data for the bundle tests and the acceptance suite.
#include <vector>

#include "hsb/bundle.hpp"

namespace fixture {

using namespace hsb;

inline CMatrix unit(int n, int p, int q) {
  CMatrix m = CMatrix::Zero(n, n);
  m(p, q) = 1.0;
  return m;
}

// r = s = 1, n = 2, df(z -> iz) = diag(0, i), beta(v) = conj(v) E12.
inline ClassificationDatum disk() {
  const JordanTriple t(1, 1);
  CMatrix weight = CMatrix::Zero(2, 2);
  weight(1, 1) = I;
  return {t, HStructure(2, true), DfMap(t, 2, {weight}), BetaMap(t, 2, {unit(2, 0, 1)})};
}

// Same df, beta(v) = conj(v) E21.
inline ClassificationDatum disk_wrong_weight() {
  auto d = disk();
  d.beta = BetaMap(d.triple, 2, {unit(2, 1, 0)});
  return d;
}

// r = 1, s = 2 (d = 2), n = 2, df = 0, B1 = E12, B2 = E21.
inline ClassificationDatum noncommuting() {
  const JordanTriple t(1, 2);
  return {t, HStructure(2, true), DfMap::zero(t, 2), BetaMap(t, 2, {unit(2, 0, 1), unit(2, 1, 0)})};
}

// r = 2, s = 1, n = 4 with df(X) = diag(0, tr a, a). Covariant anti-linear maps send
// e_1, e_2 into span(E02, E03) and span(E31, E21) as below.
inline DfMap covariant_df() {
  const JordanTriple t(2, 1);
  const std::vector<RepSummand> rep{{RepKind::trivial, 0.0}, {RepKind::trivial, 1.0}, {RepKind::left, 0.0}};
  return df_from_representation(t, rep);
}

inline ClassificationDatum covariant_commuting() {
  const DfMap df = covariant_df();
  return {df.triple(), HStructure(4, true), df, BetaMap(df.triple(), 4, {unit(4, 0, 2), unit(4, 0, 3)})};
}

inline ClassificationDatum covariant_mixed() {
  const DfMap df = covariant_df();
  return {df.triple(), HStructure(4, true), df,
          BetaMap(df.triple(), 4, {unit(4, 0, 2) + unit(4, 3, 1), unit(4, 0, 3) - unit(4, 2, 1)})};
}

// n x n tuple of polynomials in one random matrix C: B_k = sum_j c_kj C^j.
inline std::vector<CMatrix> commuting_tuple(Rng& rng, int n, int count) {
  const CMatrix c = rng.disk_matrix(n, n);
  std::vector<CMatrix> powers{CMatrix::Identity(n, n)};
  for (int j = 1; j < n; ++j) powers.push_back(powers.back() * c);
  std::vector<CMatrix> out;
  for (int k = 0; k < count; ++k) {
    CMatrix b = CMatrix::Zero(n, n);
    for (const auto& p : powers) b += rng.unit_disk() * p;
    out.push_back(b);
  }
  return out;
}

inline std::vector<CMatrix> generic_tuple(Rng& rng, int n, int count) {
  std::vector<CMatrix> out;
  for (int k = 0; k < count; ++k) out.push_back(rng.disk_matrix(n, n));
  return out;
}

// Random element of the covariant beta space of df.
inline BetaMap random_covariant_beta(Rng& rng, const DfMap& df) {
  const auto basis = covariant_beta_basis(df);
  std::vector<CMatrix> images(static_cast<std::size_t>(df.triple().dim()), CMatrix::Zero(df.n(), df.n()));
  for (const auto& b : basis) {
    const double c = rng.uniform(-1.0, 1.0);
    for (std::size_t i = 0; i < images.size(); ++i) images[i] += c * b.images()[i];
  }
  return {df.triple(), df.n(), std::move(images)};
}

}  // namespace fixture
