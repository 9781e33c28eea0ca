#include <cmath>

#include "coulomb1d/confluent.hpp"
#include "coulomb1d/continuation.hpp"
#include "coulomb1d/gamma.hpp"
#include "doctest.h"

using namespace coulomb1d;
using namespace coulomb1d::continuation;

namespace {
double rel(Cplx got, Cplx want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

double mat_dist(const ContinuationMatrix& A, const ContinuationMatrix& B) {
  return std::abs(A.v_row[0] - B.v_row[0]) + std::abs(A.v_row[1] - B.v_row[1]) +
         std::abs(A.w_row[0] - B.w_row[0]) + std::abs(A.w_row[1] - B.w_row[1]);
}
}  // namespace

TEST_CASE("branch_coeffs: winding 0 and 1") {
  const Cplx p(0.3, -0.6);
  auto c0 = branch_coeffs(0, p);
  CHECK(c0.b_V == Cplx(1.0, 0.0));
  CHECK(c0.b_W == Cplx(0.0, 0.0));
  auto c1 = branch_coeffs(1, p);
  CHECK(rel(c1.b_V, 2.0 - std::exp(2.0 * Cplx(0.0, 1.0) * kPi * p)) < 1e-14);
}

TEST_CASE("branch_coeffs: frozen values at s = 1, p = -i/2 (alpha = k = 1)") {
  auto c = branch_coeffs(1, {0.0, -0.5});
  CHECK(rel(c.b_V, {-21.14069263277926900572909, 0.0}) < 1e-14);
  CHECK(rel(c.b_W, {-19.55505098161333050895007, 10.38317154658005818448971}) < 1e-14);
}

TEST_CASE("continuation_matrix: identity at s = 0 is exact") {
  for (Cplx m : {Cplx(0.5, 0.0), Cplx(0.23, 0.05)}) {
    auto mat = continuation_matrix(0, {0.4, 0.7}, m);
    CHECK(mat.v_row[0] == Cplx(1.0, 0.0));
    CHECK(mat.v_row[1] == Cplx(0.0, 0.0));
    CHECK(mat.w_row[0] == Cplx(0.0, 0.0));
    CHECK(mat.w_row[1] == Cplx(1.0, 0.0));
  }
}

TEST_CASE("continuation_matrix: generic m reproduces the exact M-basis continuation") {
  // (V, W)(z e^{2 i pi s}) from the M_{p,+-m} basis, where the continuation is
  // a plain phase: M_{p,m}(z e^{2 i pi s}) = (-1)^s e^{2 i pi s m} M_{p,m}(z)
  using specfun::WhittakerKind;
  const Cplx p(0.3, -0.41), m(0.23, 0.05), z(0.7, -1.1);
  const Cplx I(0.0, 1.0);
  Cplx Mp = specfun::whittaker(WhittakerKind::M, p, m, z);
  Cplx Mm = specfun::whittaker(WhittakerKind::M, p, -m, z);
  Cplx A_V = specfun::gamma_complex(-2.0 * m) * specfun::reciprocal_gamma(0.5 - m + p);
  Cplx B_V = specfun::gamma_complex(2.0 * m) * std::exp(-2.0 * I * kPi * m) *
             specfun::reciprocal_gamma(0.5 + m + p);
  Cplx A_W = specfun::gamma_complex(-2.0 * m) * specfun::reciprocal_gamma(0.5 - m - p);
  Cplx B_W = specfun::gamma_complex(2.0 * m) * specfun::reciprocal_gamma(0.5 + m - p);
  Cplx V0 = A_V * Mp + B_V * Mm;
  Cplx W0 = A_W * Mp + B_W * Mm;
  for (int s : {-2, -1, 1, 2}) {
    double ph = (s % 2 == 0) ? 1.0 : -1.0;
    Cplx ep = std::exp(2.0 * I * kPi * double(s) * m);
    Cplx Vc = ph * (A_V * ep * Mp + B_V / ep * Mm);
    Cplx Wc = ph * (A_W * ep * Mp + B_W / ep * Mm);
    auto mat = continuation_matrix(s, p, m);
    CHECK(rel(mat.v_row[0] * V0 + mat.v_row[1] * W0, Vc) < 1e-11);
    CHECK(rel(mat.w_row[0] * V0 + mat.w_row[1] * W0, Wc) < 1e-11);
  }
}

TEST_CASE("continuation_matrix: m -> 1/2 limit matches two-sided extrapolation") {
  const Cplx p(0.3, -0.41);
  const double eps = 1e-5;
  for (int s : {-2, -1, 1, 2}) {
    auto above = continuation_matrix(s, p, {0.5 + eps, 0.0});
    auto below = continuation_matrix(s, p, {0.5 - eps, 0.0});
    auto lim = continuation_matrix(s, p, {0.5, 0.0});
    // two-sided average cancels the O(eps) term
    Cplx avg[4] = {(above.v_row[0] + below.v_row[0]) / 2.0,
                   (above.v_row[1] + below.v_row[1]) / 2.0,
                   (above.w_row[0] + below.w_row[0]) / 2.0,
                   (above.w_row[1] + below.w_row[1]) / 2.0};
    Cplx limv[4] = {lim.v_row[0], lim.v_row[1], lim.w_row[0], lim.w_row[1]};
    for (int i = 0; i < 4; ++i) CHECK(rel(avg[i], limv[i]) < 1e-8);
  }
}

TEST_CASE("continuation_matrix: V-row at m = 1/2 equals the branch coefficients") {
  const Cplx p(0.17, 0.3);
  for (int s : {-3, -1, 0, 1, 2, 5}) {
    auto mat = continuation_matrix(s, p, {0.5, 0.0});
    auto bc = branch_coeffs(s, p);
    CHECK(rel(mat.v_row[0], bc.b_V) < 1e-13);
    CHECK(std::abs(mat.v_row[1] - bc.b_W) < 1e-13 * std::max(1.0, std::abs(bc.b_W)));
  }
}

TEST_CASE("continuation_matrix: group property at m = 1/2") {
  const Cplx p(0.17, 0.3);
  for (int s = -2; s <= 2; ++s) {
    for (int t = -2; t <= 2; ++t) {
      auto A = continuation_matrix(s, p, {0.5, 0.0});
      auto B = continuation_matrix(t, p, {0.5, 0.0});
      auto C = continuation_matrix(s + t, p, {0.5, 0.0});
      ContinuationMatrix P;
      P.v_row[0] = A.v_row[0] * B.v_row[0] + A.v_row[1] * B.w_row[0];
      P.v_row[1] = A.v_row[0] * B.v_row[1] + A.v_row[1] * B.w_row[1];
      P.w_row[0] = A.w_row[0] * B.v_row[0] + A.w_row[1] * B.w_row[0];
      P.w_row[1] = A.w_row[0] * B.v_row[1] + A.w_row[1] * B.w_row[1];
      CHECK(mat_dist(P, C) < 1e-10);
    }
  }
}

TEST_CASE("continuation_matrix: continued V still solves the Whittaker equation") {
  const Cplx p(0.17, 0.3);
  auto mat = continuation_matrix(1, p, {0.5, 0.0});
  auto f = [&](Cplx z) {
    using specfun::WhittakerKind;
    return mat.v_row[0] * specfun::whittaker(WhittakerKind::V, p, {0.5, 0.0}, z) +
           mat.v_row[1] * specfun::whittaker(WhittakerKind::W, p, {0.5, 0.0}, z);
  };
  const Cplx z0(0.8, -0.6);
  const double h = 1e-3;
  auto second = [&](double hh) {
    return (f(z0 + hh) - 2.0 * f(z0) + f(z0 - hh)) / (hh * hh);
  };
  Cplx d2 = (4.0 * second(h / 2.0) - second(h)) / 3.0;
  Cplx resid = d2 - (0.25 - p / z0) * f(z0);
  double scale = std::abs(d2) + std::abs((0.25 - p / z0) * f(z0));
  CHECK(std::abs(resid) / scale < 1e-7);
}

TEST_CASE("continuation_matrix: near-half-integer warning and rejections") {
  auto mat = continuation_matrix(1, {0.2, 0.1}, {0.5 + 1e-8, 0.0});
  CHECK(mat.near_half_integer_warning);
  CHECK_THROWS_AS(continuation_matrix(1, {0.2, 0.1}, {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(continuation_matrix(9, {0.2, 0.1}, {0.5, 0.0}), DomainError);
}
