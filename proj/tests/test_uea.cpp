#include <random>

#include "doctest.h"
#include "pbwlab/uea.hpp"

using namespace pbwlab;

namespace {

struct Sp2 {
  AlgebraRef alg = LieAlgebra::symplectic(1);
  ContextRef ctx = PbwContext::natural(alg);
  UeaElement X = UeaElement::generator(ctx, 0);
  UeaElement d = UeaElement::generator(ctx, 1);
  UeaElement Y = UeaElement::generator(ctx, 2);
};

UeaElement random_element(std::mt19937& rng, const ContextRef& ctx, int max_deg) {
  std::uniform_int_distribution<int> pos(0, ctx->dim() - 1), coef(-3, 3),
      degd(0, max_deg);
  UeaElement out(ctx);
  for (int t = 0; t < 3; ++t) {
    std::vector<int> ps;
    int deg = degd(rng);
    for (int i = 0; i < deg; ++i) ps.push_back(pos(rng));
    std::sort(ps.begin(), ps.end());
    PbwMono m;
    for (int p : ps) {
      if (!m.empty() && m.back().first == p)
        m.back().second++;
      else
        m.emplace_back(p, 1);
    }
    if (int c = coef(rng)) out.add_term(m, Scalar(c));
  }
  return out;
}

}  // namespace

TEST_CASE("straightening single steps in sp(2)") {
  Sp2 s;
  CHECK(s.Y * s.X == s.X * s.Y - s.d);          // [Y,X] = -d
  CHECK(s.X * s.X == s.X.pow(2));               // already ordered
  CHECK(s.d * s.X == s.X * s.d + s.X.scaled(Scalar(2)));  // [d,X] = 2X
}

TEST_CASE("symmetrization") {
  Sp2 s;
  CHECK(symmetrize(s.ctx, {0}) == s.X);
  CHECK(symmetrize(s.ctx, {0, 2}) == s.X * s.Y - s.d.scaled(Scalar::rational(1, 2)));
  CHECK(symmetrize(s.ctx, {0, 0}) == s.X * s.X);
  CHECK_THROWS_AS(symmetrize(s.ctx, {}), Error);
}

TEST_CASE("adjoint action") {
  Sp2 s;
  CHECK(ad_action(s.ctx, 1, s.X * s.X) == (s.X * s.X).scaled(Scalar(4)));
  CHECK(ad_action(s.ctx, 0, UeaElement::unit(s.ctx)).is_zero());
  // derivation against the central bracket value in g(1,1)
  auto g = LieAlgebra::jacobi(1, 1);
  auto ctx = PbwContext::natural(g);
  auto U = UeaElement::generator(ctx, g->u_index(1, 1));
  auto Z = UeaElement::generator(ctx, g->z_index(1, 1));
  CHECK(ad_action(ctx, g->v_index(1, 1), U * U) == Z * U * UeaElement::unit(ctx).scaled(Scalar(2)));
}

TEST_CASE("operator matrix determinants") {
  Sp2 s;
  // 1x1
  OperatorMatrix one(s.ctx, 1, 1);
  one.at(0, 0) = s.X * s.Y;
  CHECK(one.det() == s.X * s.Y);
  // scalar 2x2 matches the numeric determinant
  OperatorMatrix two(s.ctx, 2, 2);
  two.at(0, 0) = UeaElement::unit(s.ctx);
  two.at(0, 1) = UeaElement::unit(s.ctx).scaled(Scalar(2));
  two.at(1, 0) = UeaElement::unit(s.ctx).scaled(Scalar(3));
  two.at(1, 1) = UeaElement::unit(s.ctx).scaled(Scalar(4));
  CHECK(two.det(true) == UeaElement::unit(s.ctx).scaled(Scalar(-2)));
  // non-commuting entries are reported
  OperatorMatrix bad(s.ctx, 2, 2);
  bad.at(0, 0) = s.X;
  bad.at(0, 1) = s.Y;
  bad.at(1, 0) = s.d;
  bad.at(1, 1) = s.X;
  CHECK_THROWS_AS(bad.det(true), Error);
  OperatorMatrix rect(s.ctx, 1, 2);
  CHECK_THROWS_AS(rect.det(), Error);
}

TEST_CASE("raising operator matrices") {
  // N = 1: a single entry 2X
  {
    auto ctx = PbwContext::natural(LieAlgebra::symplectic(1));
    RaisingOperator r = raising_operator(ctx);
    CHECK(r.det == UeaElement::generator(ctx, 0).scaled(Scalar(2)));
  }
  // N = 2: 4 X(1,1) X(2,2) - X(1,2)^2
  {
    auto alg = LieAlgebra::symplectic(2);
    auto ctx = PbwContext::natural(alg);
    RaisingOperator r = raising_operator(ctx);
    auto X11 = UeaElement::generator(ctx, alg->index_of("X(1,1)"));
    auto X12 = UeaElement::generator(ctx, alg->index_of("X(1,2)"));
    auto X22 = UeaElement::generator(ctx, alg->index_of("X(2,2)"));
    CHECK(r.det == (X11 * X22).scaled(Scalar(4)) - X12 * X12);
  }
  // entries commute pairwise up to N = 4
  for (int n : {2, 3, 4}) {
    auto ctx = PbwContext::natural(LieAlgebra::symplectic(n));
    RaisingOperator r = raising_operator(ctx);
    CHECK_NOTHROW(r.matrix.det(true));
  }
}

TEST_CASE("laplace pair in sp(2)") {
  Sp2 s;
  LaplacePair lp = laplace_pair(s.ctx);
  CHECK(lp.delta ==
        s.d * s.d - s.d.scaled(Scalar(2)) + (s.X * s.Y).scaled(Scalar(4)));
  CHECK(lp.delta1 == s.d * s.d - s.d.scaled(Scalar(2)));
  CHECK(is_central(lp.delta));
  CHECK(!is_central(s.X));
  CHECK(is_central(UeaElement::unit(s.ctx)));
}

TEST_CASE("laplace element is central up to rank 3") {
  for (int n : {2, 3}) {
    auto ctx = PbwContext::natural(LieAlgebra::symplectic(n));
    CHECK(is_central(laplace_pair(ctx).delta));
  }
}

TEST_CASE("gelfand invariants") {
  auto ctx1 = PbwContext::natural(LieAlgebra::symplectic(1));
  UeaElement c2 = gelfand_invariant(ctx1, 2);
  LaplacePair lp = laplace_pair(ctx1);
  // the degree-2 invariant lies in the span of delta and 1
  CHECK(c2 == lp.delta.scaled(Scalar::rational(1, 2)));
  CHECK_NOTHROW(gelfand_invariant(ctx1, 4));
  auto ctx2 = PbwContext::natural(LieAlgebra::symplectic(2));
  CHECK_NOTHROW(gelfand_invariant(ctx2, 4));  // centrality asserted inside
  CHECK_THROWS_AS(gelfand_invariant(ctx1, 3), Error);
}

TEST_CASE("cofactor row expansion identity") {
  for (int n : {2, 3}) {
    auto ctx = PbwContext::natural(LieAlgebra::symplectic(n));
    RaisingOperator r = raising_operator(ctx);
    for (int i = 0; i < n; ++i) {
      UeaElement sum(ctx);
      for (int l = 0; l < n; ++l)
        sum = sum + r.matrix.at(i, l) * r.matrix.cofactor(i, l);
      CHECK(sum == r.det);
    }
  }
}

TEST_CASE("pbw consistency: xy - yx = [x,y] for sp(4) basis pairs") {
  auto alg = LieAlgebra::symplectic(2);
  auto ctx = PbwContext::natural(alg);
  for (int a = 0; a < alg->dim(); ++a)
    for (int b = 0; b < alg->dim(); ++b) {
      UeaElement xa = UeaElement::generator(ctx, a);
      UeaElement xb = UeaElement::generator(ctx, b);
      UeaElement want = UeaElement::lift(
          ctx, alg->bracket(AlgElem::basis(alg, a), AlgElem::basis(alg, b)));
      CHECK(xa * xb - xb * xa == want);
    }
}

TEST_CASE("associativity on randomized low-degree elements over sp(4)") {
  auto ctx = PbwContext::natural(LieAlgebra::symplectic(2));
  std::mt19937 rng(424242);
  for (int t = 0; t < 8; ++t) {
    UeaElement a = random_element(rng, ctx, 2);
    UeaElement b = random_element(rng, ctx, 2);
    UeaElement c = random_element(rng, ctx, 2);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("reorder round-trips") {
  Sp2 s;
  auto yctx = PbwContext::with_order(s.alg, {2, 1, 0});
  UeaElement xy = s.X * s.Y;
  UeaElement re = reorder(xy, yctx);
  CHECK(re == UeaElement::generator(yctx, 2) * UeaElement::generator(yctx, 0) +
                  UeaElement::generator(yctx, 1));
  CHECK(reorder(re, s.ctx) == xy);
  CHECK(reorder(s.d * s.d, yctx) ==
        UeaElement::generator(yctx, 1) * UeaElement::generator(yctx, 1));

  auto alg4 = LieAlgebra::symplectic(2);
  auto ctx4 = PbwContext::natural(alg4);
  std::vector<int> rev(alg4->dim());
  for (int i = 0; i < alg4->dim(); ++i) rev[i] = alg4->dim() - 1 - i;
  auto rctx = PbwContext::with_order(alg4, rev);
  std::mt19937 rng(3131);
  for (int t = 0; t < 8; ++t) {
    UeaElement a = random_element(rng, ctx4, 3);
    CHECK(reorder(reorder(a, rctx), ctx4) == a);
  }
}

TEST_CASE("degree cap guards runaway expansions") {
  Sp2 s;
  int old = PbwContext::degree_cap();
  PbwContext::set_degree_cap(4);
  UeaElement x3 = s.X.pow(3);
  CHECK_THROWS_AS(x3 * x3, Error);
  PbwContext::set_degree_cap(old);
  CHECK_NOTHROW(x3 * x3);
}

TEST_CASE("context mismatch is an error") {
  Sp2 s;
  auto other = PbwContext::natural(LieAlgebra::symplectic(1));
  CHECK_THROWS_AS(s.X * UeaElement::generator(other, 0), Error);
}
