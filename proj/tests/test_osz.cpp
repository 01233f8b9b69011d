#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "strands/osz.hpp"

using namespace strands;

TEST_CASE("path classes between nearby idempotents are valid") {
  AlgebraContext ctx = make_context(2, 1, {});
  auto states = enumerate_istates(2, 1);
  for (const auto& x : states)
    for (const auto& y : states) {
      if (is_far(x, y)) continue;
      CHECK_NOTHROW(validate_os(gamma_generator(ctx, x, y)));
    }
}

TEST_CASE("weights divisible by a generating-interval monomial are rejected") {
  AlgebraContext ctx = make_context(2, 1, {});
  IState x = make_istate(2, {1});
  CHECK_THROWS_AS(validate_os(make_os_generator(ctx, x, x, {}, {1, 1})),
                  ValidityError);
  CHECK_NOTHROW(validate_os(make_os_generator(ctx, x, x, {}, {3, 0})));

  auto div = dividing_interval(x, x, {1, 1});
  REQUIRE(div.has_value());
  CHECK(*div == Interval{1, 2});
  CHECK_FALSE(dividing_interval(x, x, {3, 0}).has_value());
}

TEST_CASE("normal forms across far pairs do not exist") {
  AlgebraContext ctx = make_context(2, 1, {});
  OSGenerator g =
      make_os_generator(ctx, make_istate(2, {0}), make_istate(2, {2}), {}, {0, 0});
  CHECK_THROWS_AS(validate_os(g), DomainError);
}

TEST_CASE("a left-right loop multiplies to one dot turn") {
  AlgebraContext ctx = make_context(1, 1, {});
  IState x1 = make_istate(1, {1});
  IState x0 = make_istate(1, {0});
  OSGenerator l1 = gamma_generator(ctx, x1, x0);
  OSGenerator r1 = gamma_generator(ctx, x0, x1);
  OSElement prod = mul_os(l1, r1);
  CHECK(prod == single_os(make_os_generator(ctx, x1, x1, {}, {1})));
}

TEST_CASE("dot products vanish when the weight leaves the algebra") {
  AlgebraContext ctx = make_context(2, 1, {});
  IState x = make_istate(2, {1});
  OSGenerator u1 = make_os_generator(ctx, x, x, {}, {1, 0});
  OSGenerator u2 = make_os_generator(ctx, x, x, {}, {0, 1});
  CHECK(mul_os(u1, u2).is_zero());
}

TEST_CASE("loop letters square to zero") {
  AlgebraContext ctx = make_context(1, 1, {1});
  IState x = make_istate(1, {0});
  OSGenerator c1 = make_os_generator(ctx, x, x, {1}, {0});
  CHECK(mul_os(c1, c1).is_zero());
}

TEST_CASE("idempotents are units on their own corner") {
  AlgebraContext ctx = make_context(2, 1, {});
  IState x = make_istate(2, {0});
  IState y = make_istate(2, {1});
  OSGenerator g = gamma_generator(ctx, x, y);
  CHECK(mul_os(idempotent_os(ctx, x), g) == single_os(g));
  CHECK(mul_os(g, idempotent_os(ctx, y)) == single_os(g));
  CHECK(mul_os(g, idempotent_os(ctx, x)).is_zero());
}

TEST_CASE("applying letters walks the quiver") {
  AlgebraContext ctx = make_context(1, 1, {});
  IState x0 = make_istate(1, {0});
  IState x1 = make_istate(1, {1});
  OSElement start = single_os(idempotent_os(ctx, x0));
  OSElement moved = apply_letter(start, {LabelKind::R, 1});
  CHECK(moved == single_os(gamma_generator(ctx, x0, x1)));
}

TEST_CASE("turn letters vanish away from their line") {
  AlgebraContext ctx = make_context(3, 1, {});
  IState x = make_istate(3, {0});
  OSElement e = single_os(idempotent_os(ctx, x));
  CHECK(apply_letter(e, {LabelKind::U, 3}).is_zero());
}

TEST_CASE("loop letters append to the monomial") {
  AlgebraContext ctx = make_context(2, 1, {2});
  IState x = make_istate(2, {0});
  OSElement e = apply_letter(single_os(idempotent_os(ctx, x)), {LabelKind::C, 2});
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms[0].c_contains(2));
  CHECK(e.terms[0].x == x);
  CHECK(e.terms[0].y == x);
  CHECK(e.terms[0].r == std::vector<int>{0, 0});
}

TEST_CASE("evaluating letter words from an idempotent") {
  AlgebraContext ctx = make_context(1, 1, {});
  IState x0 = make_istate(1, {0});
  OSElement loop = evaluate_path(
      ctx, x0, {{LabelKind::R, 1}, {LabelKind::L, 1}});
  CHECK(loop == single_os(make_os_generator(ctx, x0, x0, {}, {1})));

  CHECK(evaluate_path(ctx, x0, {}) == single_os(idempotent_os(ctx, x0)));

  AlgebraContext c2 = make_context(2, 1, {});
  OSElement far = evaluate_path(
      c2, make_istate(2, {0}), {{LabelKind::R, 1}, {LabelKind::R, 2}});
  CHECK(far.is_zero());
}

TEST_CASE("the differential trades one loop for one turn") {
  AlgebraContext ctx = make_context(1, 1, {1});
  IState x = make_istate(1, {0});
  OSGenerator c1 = make_os_generator(ctx, x, x, {1}, {0});
  CHECK(diff_os_gen(c1) == single_os(make_os_generator(ctx, x, x, {}, {1})));

  OSGenerator plain = make_os_generator(ctx, x, x, {}, {2});
  CHECK(diff_os_gen(plain).is_zero());
}

TEST_CASE("the differential vanishes where the turn would") {
  AlgebraContext ctx = make_context(1, 0, {1});
  IState empty = make_istate(1, {});
  OSGenerator c1 = make_os_generator(ctx, empty, empty, {1}, {0});
  CHECK(diff_os_gen(c1).is_zero());
  CHECK(diff_os(single_os(c1)).is_zero());
}

TEST_CASE("gradings of the letter generators") {
  AlgebraContext marked = make_context(1, 1, {1});
  IState x = make_istate(1, {0});
  GradingVector u = grade_os(make_os_generator(marked, x, x, {}, {1}));
  CHECK(u.maslov == -2);
  CHECK(u.w == std::vector<Half2>{2});
  CHECK(u.alexander == -2);

  AlgebraContext plain = make_context(1, 1, {});
  GradingVector r = grade_os(gamma_generator(plain, x, make_istate(1, {1})));
  CHECK(r.maslov == 0);
  CHECK(r.w == std::vector<Half2>{1});
  CHECK(r.alexander == 1);

  GradingVector id = grade_os(idempotent_os(plain, x));
  CHECK(id.maslov == 0);
  CHECK(id.w == std::vector<Half2>{0});
  CHECK(id.alexander == 0);
}

TEST_CASE("index reversal and transposition are involutions") {
  AlgebraContext ctx = make_context(2, 1, {1});
  IState x = make_istate(2, {0});
  IState y = make_istate(2, {1});
  OSGenerator g = make_os_generator(ctx, x, y, {1}, {2, 1});

  OSGenerator rr = rho_os(g);
  CHECK(rr.ctx.s_contains(2));
  CHECK(rr.x == make_istate(2, {2}));
  CHECK(rr.y == make_istate(2, {1}));
  CHECK(rr.r == std::vector<int>{1, 2});
  CHECK(rr.c_contains(2));
  CHECK(rho_os(rr) == g);

  OSGenerator t = o_os(g);
  CHECK(t.x == y);
  CHECK(t.y == x);
  CHECK(t.r == g.r);
  CHECK(t.c_bits == g.c_bits);
  CHECK(o_os(t) == g);
}

TEST_CASE("basis enumeration lists monomials under the weight cap") {
  AlgebraContext ctx = make_context(1, 1, {});
  IState x = make_istate(1, {0});
  auto basis = enumerate_os_basis(ctx, x, x, 4);
  REQUIRE(basis.size() == 3);
  for (int r = 0; r <= 2; ++r)
    CHECK(basis[r] == make_os_generator(ctx, x, x, {}, {r}));

  AlgebraContext c2 = make_context(2, 1, {});
  CHECK(enumerate_os_basis(c2, make_istate(2, {0}), make_istate(2, {2}), 4)
            .empty());

  IState mid = make_istate(2, {1});
  auto capped = enumerate_os_basis(c2, mid, mid, std::vector<Half2>{2, 2});
  REQUIRE(capped.size() == 3);
  std::vector<std::vector<int>> rs;
  for (const auto& g : capped) rs.push_back(g.r);
  std::vector<std::vector<int>> expect = {{0, 0}, {0, 1}, {1, 0}};
  std::sort(rs.begin(), rs.end());
  CHECK(rs == expect);
}

TEST_CASE("products transfer crossing weight to the monomial") {
  // Every composable product of path classes lands on the canonical class
  // with the excess crossings converted into dot turns, two per unit.
  AlgebraContext ctx = make_context(2, 1, {});
  auto states = enumerate_istates(2, 1);
  for (const auto& x : states)
    for (const auto& y : states) {
      if (is_far(x, y)) continue;
      for (const auto& z : states) {
        if (is_far(y, z)) continue;
        OSElement prod = mul_os(gamma_generator(ctx, x, y),
                                gamma_generator(ctx, y, z));
        if (prod.is_zero()) continue;
        REQUIRE(prod.terms.size() == 1);
        const OSGenerator& g = prod.terms[0];
        CHECK(g.x == x);
        CHECK(g.y == z);
        for (int i = 1; i <= 2; ++i) {
          int crossings = std::abs(weight_v(x, y, i)) +
                          std::abs(weight_v(y, z, i)) -
                          std::abs(weight_v(x, z, i));
          CHECK(crossings % 2 == 0);
          CHECK(g.r[i - 1] == crossings / 2);
        }
      }
    }
}
