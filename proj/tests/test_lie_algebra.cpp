#include "doctest.h"
#include "pbwlab/lie_algebra.hpp"

using namespace pbwlab;

TEST_CASE("sp(2) relations") {
  auto alg = LieAlgebra::symplectic(1);
  CHECK(alg->dim() == 3);
  auto X = AlgElem::basis(alg, alg->index_of("X(1,1)"));
  auto d = AlgElem::basis(alg, alg->index_of("d(1)"));
  auto Y = AlgElem::basis(alg, alg->index_of("Y(1,1)"));
  CHECK(alg->bracket(X, Y) == d);
  CHECK(alg->bracket(d, X) == X.scaled(Scalar(2)));
  CHECK(alg->bracket(d, Y) == Y.scaled(Scalar(-2)));
  CHECK(alg->bracket(X, X).is_zero());
}

TEST_CASE("sp(4) root data") {
  auto alg = LieAlgebra::symplectic(2);
  CHECK(alg->dim() == 10);
  const RootDatum& rd = alg->roots();
  CHECK(rd.positive.size() == 4);
  int longs = 0, shorts = 0;
  for (auto& r : rd.positive) {
    if (r.is_long) {
      ++longs;
      CHECK(r.c_alpha == 2);
    } else {
      ++shorts;
      CHECK(r.c_alpha == 1);
    }
  }
  CHECK(longs == 2);
  CHECK(shorts == 2);
  // alpha(i,j) pairing is symmetric
  CHECK(rd.upper_root(1, 2) == rd.upper_root(2, 1));
}

TEST_CASE("root eigenvalue relations [d, X_a] = a(d) X_a") {
  for (int n : {1, 2, 3}) {
    auto alg = LieAlgebra::symplectic(n);
    const RootDatum& rd = alg->roots();
    for (auto& root : rd.positive) {
      for (int i = 0; i < n; ++i) {
        auto d = AlgElem::basis(alg, rd.cartan[i]);
        auto x = AlgElem::basis(alg, root.x_index);
        auto y = AlgElem::basis(alg, root.y_index);
        CHECK(alg->bracket(d, x) == x.scaled(Scalar(root.coords[i])));
        CHECK(alg->bracket(d, y) == y.scaled(Scalar(-root.coords[i])));
      }
    }
  }
}

TEST_CASE("distinguished functionals on the Cartan") {
  for (int n : {1, 2, 3}) {
    auto alg = LieAlgebra::symplectic(n);
    const RootDatum& rd = alg->roots();
    // rho_s evaluated on h_alpha equals (n+1)/2
    Scalar value(0);
    for (int i = 0; i < n; ++i) value += rd.rho_s[i] * rd.h_alpha[i];
    CHECK(value == Scalar::rational(n + 1, 2));
    // omega_alpha(h_alpha) = 1
    Scalar omega(0);
    for (int i = 0; i < n; ++i) omega += rd.omega_alpha[i] * rd.h_alpha[i];
    CHECK(omega == Scalar(1));
    // rho is the half sum over the lower Borel: rho(d_p) = p - n - 1
    for (int p = 1; p <= n; ++p) CHECK(rd.rho[p - 1] == Scalar(p - n - 1));
  }
}

TEST_CASE("sp(6): bracket table against the matrix commutator oracle") {
  auto alg = LieAlgebra::symplectic(3);
  CHECK(alg->dim() == 21);
  CHECK(alg->check_realization_consistency());
  CHECK(alg->check_antisymmetry());
  CHECK(alg->check_jacobi_identity());
}

TEST_CASE("short/long positive root counts") {
  for (int n : {1, 2, 3, 4}) {
    auto alg = LieAlgebra::symplectic(n);
    int longs = 0, shorts = 0;
    for (auto& r : alg->roots().positive) (r.is_long ? longs : shorts)++;
    CHECK(longs == n);
    CHECK(shorts == n * (n - 1));
    CHECK(alg->dim() == n * (2 * n + 1));
  }
}

TEST_CASE("jacobi algebra dimensions and brackets") {
  auto g11 = LieAlgebra::jacobi(1, 1);
  CHECK(g11->dim() == 6);
  // [V, U] = Z, frozen from the 4x4 matrix commutator
  auto V = AlgElem::basis(g11, g11->v_index(1, 1));
  auto U = AlgElem::basis(g11, g11->u_index(1, 1));
  auto Z = AlgElem::basis(g11, g11->z_index(1, 1));
  CHECK(g11->bracket(V, U) == Z);

  auto g21 = LieAlgebra::jacobi(2, 1);
  CHECK(g21->dim() == 15);  // 10 + 4 + 1
  auto g12 = LieAlgebra::jacobi(1, 2);
  CHECK(g12->dim() == 10);  // 3 + 4 + 3
}

TEST_CASE("heisenberg wings are abelian and the center is central") {
  for (auto [n, j] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
    auto alg = LieAlgebra::jacobi(n, j);
    for (int a : alg->subspace("l_heis"))
      for (int b : alg->subspace("l_heis"))
        CHECK(alg->bracket_basis(a, b).empty());
    for (int a : alg->subspace("r_heis"))
      for (int b : alg->subspace("r_heis"))
        CHECK(alg->bracket_basis(a, b).empty());
    for (int z : alg->subspace("z"))
      for (int b = 0; b < alg->dim(); ++b)
        CHECK(alg->bracket_basis(z, b).empty());
  }
}

TEST_CASE("embedded sp part matches the standalone sp algebra") {
  auto g = LieAlgebra::jacobi(2, 1);
  auto sp = LieAlgebra::symplectic(2);
  for (int a = 0; a < sp->dim(); ++a)
    for (int b = 0; b < sp->dim(); ++b) {
      auto& small = sp->bracket_basis(a, b);
      auto& big = g->bracket_basis(g->sp_embed(a), g->sp_embed(b));
      REQUIRE(small.size() == big.size());
      for (size_t t = 0; t < small.size(); ++t) {
        CHECK(g->sp_embed(small[t].first) == big[t].first);
        CHECK(small[t].second == big[t].second);
      }
    }
}

TEST_CASE("realization consistency on the jacobi algebras") {
  for (auto [n, j] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
    auto alg = LieAlgebra::jacobi(n, j);
    CHECK(alg->check_realization_consistency());
    CHECK(alg->check_jacobi_identity());
  }
}

TEST_CASE("algebra JSON is deterministic and complete") {
  auto alg = LieAlgebra::symplectic(1);
  std::string doc = alg->to_json();
  CHECK(doc == LieAlgebra::symplectic(1)->to_json());
  CHECK(doc.find("\"labels\"") != std::string::npos);
  CHECK(doc.find("X(1,1)") != std::string::npos);
  CHECK(doc.find("\"subspaces\"") != std::string::npos);
  // golden fragment: [X, d] = -2X is the first bracket entry of sp(2)
  CHECK(doc.find("\"bracket\"") != std::string::npos);
  CHECK(doc.find("\"coeff\": \"-2\"") != std::string::npos);
}

TEST_CASE("bracket of elements from different algebras is an error") {
  auto a1 = LieAlgebra::symplectic(1);
  auto a2 = LieAlgebra::symplectic(1);
  auto x = AlgElem::basis(a1, 0);
  auto y = AlgElem::basis(a2, 0);
  CHECK_THROWS_AS(a1->bracket(x, y), Error);
}

TEST_CASE("invalid constructions") {
  CHECK_THROWS_AS(LieAlgebra::symplectic(0), Error);
  CHECK_THROWS_AS(LieAlgebra::jacobi(0, 1), Error);
  CHECK_THROWS_AS(LieAlgebra::jacobi(1, 0), Error);
}
