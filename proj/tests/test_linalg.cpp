#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rbx/linalg.hpp"

using namespace rbx::lin;

static QMatrix mat(const std::vector<std::vector<long>>& rows) {
  std::vector<QVec> qr;
  for (const auto& r : rows) {
    QVec v;
    for (long x : r) v.push_back(Rat(x));
    qr.push_back(v);
  }
  return QMatrix::from_rows(qr);
}

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rat("3/6") == Rat(1, 2));
  CHECK(parse_rat("-2/4") == rat(-1, 2));
  CHECK(parse_rat("5") == 5);
  CHECK(parse_rat("+7/3") == rat(7, 3));
  CHECK(rat_string(rat(-6, 4)) == "-3/2");
  CHECK(rat_string(rat(8, 2)) == "4");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("2.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("rank and deterministic rref") {
  CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(mat({{0, 1}, {1, 0}})) == 2);
  CHECK(rank(QMatrix(0, 0)) == 0);
  CHECK(rank(QMatrix(3, 0)) == 0);

  Rref r = rref(mat({{0, 2, 4}, {1, 1, 1}}));
  CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
  CHECK(r.mat.at(0, 2) == -1);
  CHECK(r.mat.at(1, 2) == 2);
}

TEST_CASE("kernel basis is canonical") {
  QMatrix k = kernel_basis(mat({{1, 2, 3}}));
  REQUIRE(k.cols() == 2);
  CHECK(k.column(0) == QVec{-2, 1, 0});
  CHECK(k.column(1) == QVec{-3, 0, 1});

  QMatrix full = kernel_basis(mat({{1, 0}, {0, 1}}));
  CHECK(full.cols() == 0);
  CHECK(full.rows() == 2);
}

TEST_CASE("linear solve") {
  auto x = solve_linear(mat({{1, 2}, {3, 4}}), {Rat(5), Rat(6)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == -4);
  CHECK((*x)[1] == rat(9, 2));

  CHECK(!solve_linear(mat({{1, 1}, {1, 1}}), {Rat(0), Rat(1)}).has_value());

  auto y = solve_linear(mat({{1, 1}}), {Rat(3)});
  REQUIRE(y.has_value());
  CHECK(*y == QVec{3, 0});

  CHECK(in_column_space(mat({{1}, {2}}), {Rat(2), Rat(4)}));
  CHECK(!in_column_space(mat({{1}, {2}}), {Rat(1), Rat(3)}));
}

TEST_CASE("cohomology of toy complexes") {
  QMatrix d_out(1, 2);
  QMatrix d_in(2, 0);
  Cohomology h = cohomology(d_out, d_in);
  CHECK(h.dim == 2);
  REQUIRE(h.representatives.size() == 2);
  CHECK(h.representatives[0] == QVec{1, 0});
  CHECK(h.representatives[1] == QVec{0, 1});

  QMatrix din2 = mat({{1}, {0}});
  Cohomology h2 = cohomology(d_out, din2);
  CHECK(h2.dim == 1);
  REQUIRE(h2.representatives.size() == 1);
  CHECK(h2.representatives[0] == QVec{0, 1});

  QMatrix bad_out = mat({{1, 0}});
  CHECK_THROWS_AS(cohomology(bad_out, din2), std::invalid_argument);
}

TEST_CASE("cohomology reduces representatives modulo the image") {
  /* d_out = 0 on Q^2, image of d_in spans (1,1); the quotient keeps the
     canonical reduced vector. */
  QMatrix d_out(0, 2);
  QMatrix d_in = mat({{1}, {1}});
  Cohomology h = cohomology(d_out, d_in);
  CHECK(h.dim == 1);
  REQUIRE(h.representatives.size() == 1);
  CHECK(h.representatives[0] == QVec{0, 1});
}
