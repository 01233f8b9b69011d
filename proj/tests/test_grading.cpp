#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <utility>
#include <vector>

#include "strands/grading.hpp"

using namespace strands;

namespace {

HomologyClass tau(int n, int i) {
  HomologyClass a = zero_class(n);
  a.tau(i) = 1;
  return a;
}

HomologyClass beta(int n, int i) {
  HomologyClass a = zero_class(n);
  a.beta(i) = 1;
  return a;
}

StrandsGenerator col(const AlgebraContext& ctx, const IState& x, int i, int p,
                     int q) {
  std::vector<std::pair<int, int>> pq(ctx.n, {0, 0});
  pq[i - 1] = {p, q};
  return make_generator(ctx, x, {}, pq);
}

}  // namespace

TEST_CASE("multiplicity averages the two arc coefficients") {
  HomologyClass full = add_classes(tau(1, 1), beta(1, 1));
  CHECK(multiplicity(full, 1, +1) == 2);
  CHECK(multiplicity(tau(1, 1), 1, -1) == 1);
  CHECK(multiplicity(zero_class(1), 1, +1) == 0);
  CHECK(multiplicity(zero_class(1), 1, -1) == 0);
}

TEST_CASE("linking vanishes identically") {
  CHECK(linking(tau(2, 1), beta(2, 1)) == 0);
  HomologyClass a = add_classes(tau(2, 1), beta(2, 2));
  CHECK(linking(a, a) == 0);
  HomologyClass arbitrary = zero_class(2);
  arbitrary.tau(1) = 3;
  arbitrary.beta(1) = -2;
  arbitrary.tau(2) = 1;
  CHECK(linking(a, arbitrary) == 0);
}

TEST_CASE("epsilon counts odd-multiplicity lines") {
  CHECK(epsilon(tau(2, 1)) == 1);
  CHECK(epsilon(tau(2, 2)) == 1);
  CHECK(epsilon(add_classes(tau(2, 1), beta(2, 1))) == 0);
  CHECK(epsilon(zero_class(2)) == 0);
}

TEST_CASE("the grading group is abelian with the expected identity") {
  GPrimeElement e = gprime_identity(1);
  CHECK(e.j2 == 0);
  CHECK(e.alpha == zero_class(1));

  GPrimeElement h = make_gprime(-1, beta(1, 1));
  GPrimeElement sq = gprime_mul(h, h);
  CHECK(sq.j2 == -2);
  CHECK(sq.alpha.beta(1) == 2);
  CHECK(sq.alpha.tau(1) == 0);

  GPrimeElement g2 = make_gprime(2, add_classes(tau(1, 1), tau(1, 1)));
  CHECK(gprime_mul(h, g2) == gprime_mul(g2, h));
  CHECK(gprime_mul(e, h) == h);
}

TEST_CASE("group elements must respect the parity constraint") {
  CHECK_THROWS_AS(make_gprime(1, zero_class(1)), ParameterError);
  CHECK_THROWS_AS(make_gprime(0, tau(1, 1)), ParameterError);
}

TEST_CASE("degree of idempotents and single ascents") {
  AlgebraContext ctx = make_context(2, 1, {});
  GPrimeElement id = deg_prime(idempotent(ctx, make_istate(2, {1})));
  CHECK(id.j2 == 0);
  CHECK(id.alpha == zero_class(2));

  GPrimeElement asc = deg_prime(col(ctx, make_istate(2, {0}), 1, 1, 0));
  CHECK(asc.j2 == -1);
  CHECK(asc.alpha == beta(2, 1));

  GPrimeElement asc2 = deg_prime(col(ctx, make_istate(2, {1}), 2, 1, 0));
  CHECK(asc2.j2 == -1);
  CHECK(asc2.alpha == beta(2, 2));
}

TEST_CASE("literal diagram degree agrees with the closed form") {
  AlgebraContext ctx = make_context(2, 1, {});
  StrandsGenerator jx = idempotent(ctx, make_istate(2, {1}));
  CHECK(deg_prime_from_diagram(jx, SectionRule::plus) == deg_prime(jx));
  CHECK(deg_prime_from_diagram(jx, SectionRule::minus) == deg_prime(jx));

  AlgebraContext tall = make_context(1, 2, {});
  StrandsGenerator g = col(tall, make_istate(1, {0, 1}), 1, 1, 9);
  CHECK(deg_prime_from_diagram(g, SectionRule::plus) == deg_prime(g));
  CHECK(deg_prime_from_diagram(g, SectionRule::minus) == deg_prime(g));
}

TEST_CASE("diagram degree is independent of the section rule on sweeps") {
  for (int n = 1; n <= 2; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      AlgebraContext ctx = make_context(n, k, {});
      auto states = enumerate_istates(n, k);
      for (const auto& x : states)
        for (const auto& y : states) {
          if (is_far(x, y)) continue;
          for (const auto& g : enumerate_basis(ctx, x, y, 4)) {
            GPrimeElement d = deg_prime(g);
            CHECK(deg_prime_from_diagram(g, SectionRule::plus) == d);
            CHECK(deg_prime_from_diagram(g, SectionRule::minus) == d);
            CHECK((((d.j2 % 2) + 2) % 2) == epsilon(d.alpha));
          }
        }
    }
  }
}

TEST_CASE("degree is multiplicative on nonzero products") {
  AlgebraContext ctx = make_context(2, 1, {});
  auto states = enumerate_istates(2, 1);
  std::size_t seen = 0;
  for (const auto& x : states)
    for (const auto& y : states) {
      if (is_far(x, y)) continue;
      for (const auto& z : states) {
        if (is_far(y, z)) continue;
        for (const auto& a : enumerate_basis(ctx, x, y, 4))
          for (const auto& b : enumerate_basis(ctx, y, z, 4)) {
            auto prod = mul_gen(a, b);
            if (!prod) continue;
            ++seen;
            CHECK(deg_prime(*prod) == gprime_mul(deg_prime(a), deg_prime(b)));
          }
      }
    }
  CHECK(seen > 50);
}

TEST_CASE("collapsing the group grading recovers Maslov and weights") {
  AlgebraContext ctx = make_context(1, 1, {});
  auto zero = theta(ctx, make_gprime(-1, beta(1, 1)));
  CHECK(zero.first == 0);
  CHECK(zero.second == beta(1, 1));

  AlgebraContext marked = make_context(1, 1, {1});
  auto lambda = theta(marked, GPrimeElement{2, zero_class(1)});
  CHECK(lambda.first == 1);
  CHECK(lambda.second == zero_class(1));

  GPrimeElement corrupt{1, zero_class(1)};
  CHECK_THROWS_AS(theta(ctx, corrupt), ConsistencyError);
}

TEST_CASE("refined collapse halves the arc pairs") {
  auto p = psi_refine({1, zero_class(2)});
  CHECK(p.first == 1);
  CHECK(p.second == std::vector<Half2>{0, 0});

  auto q = psi_refine({0, tau(2, 2)});
  CHECK(q.first == 0);
  CHECK(q.second == std::vector<Half2>{0, 1});
}

TEST_CASE("group grading collapses to the combinatorial gradings everywhere") {
  for (int n = 1; n <= 2; ++n) {
    std::vector<std::vector<int>> s_choices = {{}, {1}};
    if (n == 2) s_choices.push_back({1, 2});
    for (const auto& s : s_choices) {
      for (int k = 0; k <= n + 1; ++k) {
        AlgebraContext ctx = make_context(n, k, s);
        auto states = enumerate_istates(n, k);
        for (const auto& x : states)
          for (const auto& y : states) {
            if (is_far(x, y)) continue;
            for (const auto& g : enumerate_basis(ctx, x, y, 4)) {
              GradingVector gv = grade(g);
              auto coarse = theta(ctx, deg_prime(g));
              CHECK(coarse.first == gv.maslov);
              CHECK(coarse.second.coeff == gv.w_un);
              auto refined = psi_refine(coarse);
              CHECK(refined.first == gv.maslov);
              CHECK(refined.second == gv.w);
            }
          }
      }
    }
  }
}
