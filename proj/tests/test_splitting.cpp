#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <numeric>
#include <vector>

#include "strands/splitting.hpp"

using namespace strands;

namespace {

StrandsGenerator col(const AlgebraContext& ctx, const IState& x, int i, int p,
                     int q) {
  std::vector<std::pair<int, int>> pq(ctx.n, {0, 0});
  pq[i - 1] = {p, q};
  return make_generator(ctx, x, {}, pq);
}

std::size_t total_dim(const std::map<int, std::size_t>& dims) {
  std::size_t t = 0;
  for (const auto& [m, d] : dims) t += d;
  return t;
}

}  // namespace

TEST_CASE("local algebras of each interval kind") {
  CHECK(local_context(IntervalKind::generating, 2) == make_context(2, 1, {}));
  CHECK(local_frame(IntervalKind::generating, 2) == make_istate(2, {1}));
  CHECK(local_context(IntervalKind::left_edge, 1) == make_context(1, 1, {}));
  CHECK(local_frame(IntervalKind::left_edge, 1) == make_istate(1, {0}));
  CHECK(local_context(IntervalKind::right_edge, 2) == make_context(2, 2, {}));
  CHECK(local_frame(IntervalKind::right_edge, 2) == make_istate(2, {1, 2}));
  CHECK(local_context(IntervalKind::two_faced, 1) == make_context(1, 2, {}));
  CHECK(local_frame(IntervalKind::two_faced, 1) == make_istate(1, {0, 1}));
}

TEST_CASE("restriction copies the interval columns into the local algebra") {
  AlgebraContext ctx = make_context(2, 1, {});
  IState x = make_istate(2, {1});
  StrandsGenerator a = col(ctx, x, 1, 0, 2);
  StrandsGenerator local = restrict(a, Interval{1, 2}, IntervalKind::generating);
  CHECK(local.ctx == make_context(2, 1, {}));
  CHECK(local.x == make_istate(2, {1}));
  CHECK(local.p[1] == 0);
  CHECK(local.q[1] == 2);
  CHECK(local.p[2] == 0);
  CHECK(local.q[2] == 0);

  StrandsGenerator jloc =
      restrict(idempotent(ctx, x), Interval{1, 2}, IntervalKind::generating);
  CHECK(jloc == idempotent(local.ctx, local.x));
}

TEST_CASE("restriction refuses intervals from the wrong pair") {
  AlgebraContext ctx = make_context(2, 1, {});
  StrandsGenerator jx = idempotent(ctx, make_istate(2, {1}));
  CHECK_THROWS_AS(restrict(jx, Interval{1, 1}, IntervalKind::left_edge),
                  ParameterError);

  AlgebraContext marked = make_context(2, 1, {1});
  StrandsGenerator jm = idempotent(marked, make_istate(2, {1}));
  CHECK_THROWS_AS(restrict(jm, Interval{1, 2}, IntervalKind::generating),
                  UnsupportedError);
}

TEST_CASE("splitting a crossed line yields a winding exponent") {
  AlgebraContext ctx = make_context(1, 1, {});
  StrandsGenerator g = col(ctx, make_istate(1, {0}), 1, 3, 0);
  Factorization f = split_psi(g);
  CHECK(f.factors.empty());
  REQUIRE(f.crossed_exponents.size() == 1);
  CHECK(f.crossed_exponents.at(1) == 1);
  CHECK(unsplit_phi(f) == g);
}

TEST_CASE("splitting an idempotent yields idempotent factors") {
  AlgebraContext ctx = make_context(3, 2, {});
  IState x = make_istate(3, {0, 2});
  Factorization f = split_psi(idempotent(ctx, x));
  for (const auto& [line, exp] : f.crossed_exponents) CHECK(exp == 0);
  for (const auto& fac : f.factors)
    CHECK(fac.local ==
          idempotent(fac.local.ctx, local_frame(fac.kind, fac.interval.length())));
  CHECK(unsplit_phi(f) == idempotent(ctx, x));
}

TEST_CASE("unsplitting a unit crossing puts speed one on the line") {
  AlgebraContext ctx = make_context(1, 1, {});
  IState x = make_istate(1, {0});
  IState y = make_istate(1, {1});
  Factorization f;
  f.ctx = ctx;
  f.x = x;
  f.y = y;
  f.crossed_exponents[1] = 0;
  StrandsGenerator g = unsplit_phi(f);
  CHECK(g.p[1] == 1);
  CHECK(g.q[1] == 0);
  CHECK(g == g_min(ctx, x, y));
}

TEST_CASE("splitting and unsplitting are mutually inverse on sweeps") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      AlgebraContext ctx = make_context(n, k, {});
      auto states = enumerate_istates(n, k);
      for (const auto& x : states)
        for (const auto& y : states) {
          if (is_far(x, y)) continue;
          for (const auto& g : enumerate_basis(ctx, x, y, 4)) {
            Factorization f = split_psi(g);
            // Generating-interval factors keep their boundary columns idle.
            for (const auto& fac : f.factors) {
              if (fac.kind != IntervalKind::generating) continue;
              int l = fac.interval.length();
              CHECK(fac.local.p[1] == 0);
              CHECK(fac.local.q[l] == 0);
            }
            CHECK(unsplit_phi(f) == g);
          }
        }
    }
  }
}

TEST_CASE("maximal cycles expand the wrap-sum product") {
  F2Element a0 = max_maslov_cycle(IntervalKind::two_faced, 1, {0});
  AlgebraContext full = make_context(1, 2, {});
  IState top = make_istate(1, {0, 1});
  CHECK(a0 == single(idempotent(full, top)));

  F2Element a2 = max_maslov_cycle(IntervalKind::two_faced, 1, {2});
  F2Element expect = single(col(full, top, 1, 4, 0));
  expect.add(col(full, top, 1, 0, 4));
  CHECK(a2 == expect);
}

TEST_CASE("maximal cycles are closed and multiply by weight addition") {
  std::vector<IntervalKind> kinds = {IntervalKind::generating,
                                     IntervalKind::left_edge,
                                     IntervalKind::right_edge,
                                     IntervalKind::two_faced};
  for (IntervalKind kind : kinds) {
    for (int l = 1; l <= 2; ++l) {
      // All exponent vectors with entries in {0,1,2}.
      std::vector<std::vector<int>> exps;
      int count = 1;
      for (int i = 0; i < l; ++i) count *= 3;
      for (int code = 0; code < count; ++code) {
        std::vector<int> r(l);
        int rest = code;
        for (int i = 0; i < l; ++i) {
          r[i] = rest % 3;
          rest /= 3;
        }
        exps.push_back(r);
      }
      for (const auto& r : exps) {
        F2Element ar = max_maslov_cycle(kind, l, r);
        CHECK(diff(ar).is_zero());
        for (const auto& rp : exps) {
          std::vector<int> sum(l);
          for (int i = 0; i < l; ++i) sum[i] = r[i] + rp[i];
          CHECK(mul(ar, max_maslov_cycle(kind, l, rp)) ==
                max_maslov_cycle(kind, l, sum));
        }
      }
    }
  }
}

TEST_CASE("graded pieces stack two wide with a one-dimensional floor") {
  AlgebraContext full = make_context(1, 2, {});
  IState top = make_istate(1, {0, 1});
  const int r = 2;
  GradedPiece p = graded_piece(PieceAlgebra::A, full, top, top, {2 * r});
  REQUIRE(p.a_levels.count(0) == 1);
  CHECK(p.a_levels.at(0).size() == 2);
  CHECK(p.a_levels.at(-1).size() == 2);
  CHECK(p.a_levels.at(-r).size() == 1);

  auto dims = homology_dims(p);
  CHECK(dims.at(0) == 1);
  CHECK(total_dim(dims) == 1);
}

TEST_CASE("quiver pieces concentrate in degree zero without marked lines") {
  AlgebraContext ctx = make_context(1, 1, {});
  IState x = make_istate(1, {0});
  GradedPiece p = graded_piece(PieceAlgebra::B, ctx, x, x, {4});
  CHECK(p.b_levels.size() == 1);
  CHECK(p.b_levels.count(0) == 1);
  CHECK(p.b_levels.at(0).size() == 1);
}

TEST_CASE("homology of generating-interval weights") {
  AlgebraContext ctx = make_context(2, 1, {});
  IState x = make_istate(2, {1});
  // Both lines wound once: the piece dies.
  GradedPiece both = graded_piece(PieceAlgebra::A, ctx, x, x, {2, 2});
  CHECK(total_dim(homology_dims(both)) == 0);

  // One line untouched: one class survives at degree zero.
  GradedPiece one = graded_piece(PieceAlgebra::A, ctx, x, x, {0, 4});
  auto dims = homology_dims(one);
  CHECK(dims.at(0) == 1);
  CHECK(total_dim(dims) == 1);
}

TEST_CASE("homology representatives of small pieces") {
  AlgebraContext ctx = make_context(1, 1, {});
  IState x = make_istate(1, {0});
  GradedPiece unit = graded_piece(PieceAlgebra::A, ctx, x, x, {0});
  auto reps = homology_basis_a(unit);
  REQUIRE(reps.at(0).size() == 1);
  CHECK(reps.at(0)[0] == single(idempotent(ctx, x)));

  IState y = make_istate(1, {1});
  GradedPiece crossed = graded_piece(PieceAlgebra::A, ctx, x, y, {3});
  auto creps = homology_basis_a(crossed);
  REQUIRE(creps.at(0).size() == 1);
  CHECK(creps.at(0)[0] == single(col(ctx, x, 1, 3, 0)));

  AlgebraContext full = make_context(1, 2, {});
  IState top = make_istate(1, {0, 1});
  for (int r = 1; r <= 2; ++r) {
    GradedPiece p = graded_piece(PieceAlgebra::A, full, top, top, {2 * r});
    auto rr = homology_basis_a(p);
    REQUIRE(rr.at(0).size() == 1);
    CHECK(rr.at(0)[0] == max_maslov_cycle(IntervalKind::two_faced, 1, {r}));
  }
}

TEST_CASE("predicted dimensions follow the residual monomial count") {
  AlgebraContext ctx = make_context(2, 1, {});
  IState x = make_istate(2, {1});
  CHECK(total_dim(predicted_dims(ctx, x, x, {2, 2})) == 0);

  AlgebraContext edge = make_context(1, 1, {});
  IState z = make_istate(1, {0});
  for (int r = 0; r <= 3; ++r) {
    auto dims = predicted_dims(edge, z, z, {2 * r});
    CHECK(dims.at(0) == 1);
    CHECK(total_dim(dims) == 1);
  }
}

TEST_CASE("predictions match matrix reduction with marked lines present") {
  for (int k = 1; k <= 2; ++k) {
    AlgebraContext ctx = make_context(2, k, {2});
    auto states = enumerate_istates(2, k);
    for (const auto& x : states)
      for (const auto& y : states) {
        if (is_far(x, y)) continue;
        for (Half2 w1 = 0; w1 <= 4; w1 += 1)
          for (Half2 w2 = 0; w2 <= 4; w2 += 1) {
            GradedPiece p = graded_piece(PieceAlgebra::A, ctx, x, y, {w1, w2});
            CHECK(homology_dims(p) == predicted_dims(ctx, x, y, {w1, w2}));
          }
      }
  }
}

TEST_CASE("homology equivalence holds on small contexts") {
  CHECK(quasi_iso_check(1, 1, {}, 4).ok());
  CHECK(quasi_iso_check(1, 1, {1}, 4).ok());
  CHECK(quasi_iso_check(2, 1, {}, 4).ok());
}
