#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rbx/deform.hpp"
#include "rbx/linalg.hpp"
#include "testutil.hpp"

using namespace rbx::deform;
using namespace rbxtest;
using rbx::lin::basis_vec;
using rbx::lin::kernel_basis;
using rbx::rbcx::dT_apply;
using rbx::rbcx::dT_matrix;
using rbx::rbcx::graded_bracket;
using rbx::rbcx::is_relative_rb;
using rbx::rbcx::operator_cochain;

static LieRepPair aff1_ad() { return {aff1(), rbx::lie::adjoint_rep(aff1())}; }

static QMatrix t0_matrix() {
  QMatrix t(2, 2);
  t.at(1, 0) = 1;
  return t;
}

/* d_{T0} e1 as a matrix: e1 -> -e2, e2 -> 0. */
static QMatrix de1_matrix() {
  QMatrix t(2, 2);
  t.at(1, 0) = -1;
  return t;
}

TEST_CASE("residuals match the bracket identity on arbitrary series") {
  Rng rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    LieRepPair p = random_pair(rng);
    DeformationSeries s{random_operator(rng, p), {random_operator(rng, p), random_operator(rng, p)}};
    auto res = order_residuals(p, s);
    REQUIRE(res.size() == 2);
    for (int k = 1; k <= 2; ++k) {
      Cochain sum(2, p.rep.dim, p.algebra.dim);
      for (int i = 0; i <= k; ++i)
        sum = sum + graded_bracket(p, operator_cochain(p, s.coefficient(i)),
                                   operator_cochain(p, s.coefficient(k - i)));
      CHECK(res[k - 1] == sum.scaled(rbx::lin::rat(-1, 2)));
    }
  }
}

TEST_CASE("coboundary terms give order-1 deformations; class is trivial") {
  LieRepPair p = aff1_ad();
  QMatrix t0 = t0_matrix();

  DeformationSeries s{t0, {de1_matrix()}};
  CHECK(is_deformation(p, s));

  InfinitesimalClass cls = infinitesimal_class(p, t0, de1_matrix());
  CHECK(cls.cocycle);
  CHECK(cls.coboundary);
  CHECK(cls.reduced.is_zero());

  /* the identity is a cocycle but not a coboundary */
  InfinitesimalClass id_cls = infinitesimal_class(p, t0, QMatrix::identity(2));
  CHECK(id_cls.cocycle);
  CHECK(!id_cls.coboundary);
  CHECK(!id_cls.reduced.is_zero());

  /* e2 -> e1 is not a cocycle at all */
  QMatrix bad(2, 2);
  bad.at(0, 1) = 1;
  InfinitesimalClass bad_cls = infinitesimal_class(p, t0, bad);
  CHECK(!bad_cls.cocycle);
  CHECK(!bad_cls.coboundary);
}

TEST_CASE("gauge transform with x1 = e1 kills the coboundary term") {
  LieRepPair p = aff1_ad();
  DeformationSeries s{t0_matrix(), {de1_matrix()}};
  GaugeSeries x{{basis_vec(2, 0)}};
  DeformationSeries out = gauge_transform(p, s, x, 1);
  CHECK(out.base == t0_matrix());
  REQUIRE(out.terms.size() == 1);
  CHECK(out.terms[0].is_zero());
}

TEST_CASE("gauge transforms preserve deformations order by order") {
  Rng rng(515151);
  LieRepPair p = aff1_ad();
  QMatrix t0 = t0_matrix();
  QMatrix d1 = dT_matrix(p, t0, 1);
  QMatrix ker = kernel_basis(d1);
  REQUIRE(ker.cols() > 0);

  for (int trial = 0; trial < 12; ++trial) {
    QVec coef(ker.cols());
    for (std::size_t c = 0; c < ker.cols(); ++c) coef[c] = random_rat(rng);
    QVec flat = ker.apply(coef);
    QMatrix t1 = rbx::rbcx::cochain_operator(Cochain::unflatten(1, 2, 2, flat));
    DeformationSeries s{t0, {t1}};
    REQUIRE(is_deformation(p, s));

    QVec x1{random_rat(rng), random_rat(rng)};
    GaugeSeries x{{x1, QVec{random_rat(rng), random_rat(rng)}}};
    std::uniform_int_distribution<int> ord_dist(1, 3);
    int ord = ord_dist(rng);
    DeformationSeries out = gauge_transform(p, s, x, ord);
    CHECK(out.base == t0);
    REQUIRE(out.terms.size() == static_cast<std::size_t>(ord));

    /* the first-order term shifts by a coboundary */
    Cochain x1_cochain(0, p.algebra.dim, p.rep.dim);
    x1_cochain.value_at(0) = x1;
    Cochain shift = operator_cochain(p, t1) - dT_apply(p, t0, x1_cochain);
    CHECK(operator_cochain(p, out.terms[0]) == shift);

    /* validity to order 1 is preserved */
    DeformationSeries trunc{out.base, {out.terms[0]}};
    CHECK(is_deformation(p, trunc));

    /* an order-2 extension, when one exists, stays valid to order 2 */
    auto next = extend(p, s);
    if (next.has_value() && ord >= 2) {
      DeformationSeries s2 = s;
      s2.terms.push_back(*next);
      DeformationSeries out2 = gauge_transform(p, s2, x, ord);
      DeformationSeries trunc2{out2.base, {out2.terms[0], out2.terms[1]}};
      CHECK(is_deformation(p, trunc2));
    }
  }

  /* a bare operator is exactly preserved: every residual of the image vanishes */
  GaugeSeries x{{QVec{rbx::lin::rat(1, 2), -1}, QVec{2, rbx::lin::rat(-1, 3)}}};
  DeformationSeries bare{t0, {QMatrix(2, 2)}};
  DeformationSeries out = gauge_transform(p, bare, x, 3);
  CHECK(out.base == t0);
  for (const Cochain& r : order_residuals(p, out)) CHECK(r.is_zero());
}

TEST_CASE("order-1 deformations: obstruction and extension") {
  Rng rng(97531);
  LieRepPair p = aff1_ad();
  QMatrix t0 = t0_matrix();
  QMatrix d1 = dT_matrix(p, t0, 1);
  QMatrix ker = kernel_basis(d1);

  int extended_count = 0;
  for (int trial = 0; trial < 20; ++trial) {
    QVec coef(ker.cols());
    for (std::size_t c = 0; c < ker.cols(); ++c) coef[c] = random_rat(rng);
    QMatrix t1 = rbx::rbcx::cochain_operator(Cochain::unflatten(1, 2, 2, ker.apply(coef)));
    DeformationSeries s{t0, {t1}};
    REQUIRE(is_deformation(p, s));

    Cochain theta = obstruction(p, s);
    CHECK(dT_apply(p, t0, theta).is_zero());

    /* Theta = -(residual at power 2 of the series padded with zero). */
    DeformationSeries padded = s;
    padded.terms.push_back(QMatrix(2, 2));
    auto res = order_residuals(p, padded);
    CHECK(theta == res[1].scaled(-1));

    bool member = rbx::lin::in_column_space(d1, theta.flatten());
    auto next = extend(p, s);
    CHECK(next.has_value() == member);
    if (next.has_value()) {
      ++extended_count;
      DeformationSeries s2 = s;
      s2.terms.push_back(*next);
      CHECK(is_deformation(p, s2));

      /* push one order further */
      Cochain theta2 = obstruction(p, s2);
      auto third = extend(p, s2);
      if (third.has_value()) {
        DeformationSeries s3 = s2;
        s3.terms.push_back(*third);
        CHECK(is_deformation(p, s3));
      }
    }
  }
  CHECK(extended_count > 0);
}

TEST_CASE("obstruction rejects invalid series") {
  LieRepPair p = aff1_ad();
  QMatrix t1(2, 2);
  t1.at(0, 1) = 1;
  DeformationSeries bad{t0_matrix(), {t1}};
  CHECK(!is_deformation(p, bad));
  CHECK_THROWS_AS(obstruction(p, bad), std::invalid_argument);
}

TEST_CASE("zero series extends by zero") {
  LieRepPair p = aff1_ad();
  DeformationSeries s{t0_matrix(), {QMatrix(2, 2)}};
  auto next = extend(p, s);
  REQUIRE(next.has_value());
  CHECK(next->is_zero());
}
