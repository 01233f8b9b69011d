#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <utility>
#include <vector>

#include "strands/f2linalg.hpp"

using namespace strands;

namespace {

F2Vec vec(std::size_t dim, const std::vector<std::size_t>& ones) {
  F2Vec v = f2vec_zero(dim);
  for (auto i : ones) f2vec_flip(v, i);
  return v;
}

F2Matrix ones_2x2() {
  return F2Matrix::from_positions(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(ones_2x2()) == 1);
  CHECK(rank(F2Matrix(3, 4)) == 0);
  CHECK(rank(F2Matrix::from_positions(3, 3, {{0, 0}, {1, 1}, {2, 2}})) == 3);
}

TEST_CASE("rank is invariant under row and column permutation") {
  auto m = F2Matrix::from_positions(3, 4, {{0, 0}, {0, 3}, {1, 1}, {2, 0}, {2, 1}});
  auto swapped =
      F2Matrix::from_positions(3, 4, {{2, 3}, {2, 0}, {1, 1}, {0, 3}, {0, 1}});
  CHECK(rank(m) == rank(swapped));
}

TEST_CASE("positions round-trips through from_positions") {
  std::vector<std::pair<std::size_t, std::size_t>> ones = {
      {0, 2}, {1, 0}, {1, 3}, {2, 1}};
  auto m = F2Matrix::from_positions(3, 4, ones);
  auto back = m.positions();
  bool same_matrix =
      F2Matrix::from_positions(3, 4, back).positions() == m.positions();
  CHECK(same_matrix);
  CHECK(m.get(1, 3));
  CHECK_FALSE(m.get(0, 0));
}

TEST_CASE("kernel_basis spans the null space") {
  auto k1 = kernel_basis(ones_2x2());
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == vec(2, {0, 1}));

  CHECK(kernel_basis(F2Matrix::from_positions(2, 2, {{0, 0}, {1, 1}})).empty());

  auto k2 = kernel_basis(F2Matrix::from_positions(1, 2, {{0, 0}, {0, 1}}));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == vec(2, {0, 1}));
}

TEST_CASE("rank plus kernel dimension equals the column count") {
  auto m = F2Matrix::from_positions(
      4, 5, {{0, 0}, {0, 4}, {1, 1}, {1, 2}, {2, 2}, {3, 0}, {3, 1}, {3, 3}});
  CHECK(rank(m) + kernel_basis(m).size() == m.cols());
  for (const auto& v : kernel_basis(m)) CHECK(f2vec_is_zero(m.apply(v)));
}

TEST_CASE("apply and multiplied_by agree with hand expansion") {
  auto m = F2Matrix::from_positions(2, 3, {{0, 0}, {0, 2}, {1, 1}});
  CHECK(m.apply(vec(3, {0, 1})) == vec(2, {0, 1}));
  CHECK(m.apply(vec(3, {0, 2})) == f2vec_zero(2));

  auto n = F2Matrix::from_positions(3, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}});
  auto prod = m.multiplied_by(n);  // 2x2
  CHECK(prod.rows() == 2);
  CHECK(prod.cols() == 2);
  // column j of the product is m applied to column j of n
  CHECK(prod.apply(vec(2, {0})) == m.apply(vec(3, {0, 1})));
  CHECK(prod.apply(vec(2, {1})) == m.apply(vec(3, {1, 2})));
}

TEST_CASE("homology of the trivial one-dimensional complex") {
  F2Matrix d_out(1, 1), d_in(1, 1);
  CHECK(homology_dim(d_out, d_in) == 1);
}

TEST_CASE("exact position kills homology") {
  // d_out collapses F2^2 onto F2; d_in hits the kernel exactly.
  auto d_out = F2Matrix::from_positions(1, 2, {{0, 0}, {0, 1}});
  auto d_in = F2Matrix::from_positions(2, 1, {{0, 0}, {1, 0}});
  CHECK(homology_dim(d_out, d_in) == 0);
}

TEST_CASE("a two-wide staircase complex has total homology one") {
  // Levels 0..r-1 two-dimensional, level r one-dimensional; every boundary
  // sends both basis vectors to the diagonal of the next level.
  const int r = 3;
  std::vector<F2Matrix> d;  // d[s]: level s -> level s+1
  for (int s = 0; s + 1 < r; ++s)
    d.push_back(ones_2x2());
  d.push_back(F2Matrix::from_positions(1, 2, {{0, 0}, {0, 1}}));

  std::size_t total = 0;
  total += homology_dim(d[0], F2Matrix(2, 0));
  for (int s = 1; s <= r - 1; ++s) total += homology_dim(d[s], d[s - 1]);
  total += homology_dim(F2Matrix(0, 1), d[r - 1]);
  CHECK(total == 1);

  // The surviving class sits at the first level.
  CHECK(homology_dim(d[0], F2Matrix(2, 0)) == 1);
}

TEST_CASE("homology_dim rejects non-complexes") {
  auto id1 = F2Matrix::from_positions(1, 1, {{0, 0}});
  CHECK_THROWS_AS(homology_dim(id1, id1), ConsistencyError);
  CHECK_THROWS_AS(homology_dim(F2Matrix(1, 2), F2Matrix(3, 1)), ConsistencyError);
}

TEST_CASE("homology_representatives returns spanning cycles") {
  auto d_out = ones_2x2();
  auto reps = homology_representatives(d_out, F2Matrix(2, 0));
  REQUIRE(reps.size() == 1);
  CHECK(reps[0] == vec(2, {0, 1}));
  CHECK(f2vec_is_zero(d_out.apply(reps[0])));

  // Interior level of the staircase: kernel equals image, nothing survives.
  CHECK(homology_representatives(d_out, d_out).empty());
}

TEST_CASE("solve finds a preimage exactly when one exists") {
  auto m = F2Matrix::from_positions(2, 2, {{0, 0}, {0, 1}, {1, 1}});
  auto sol = solve(m, vec(2, {0}));
  REQUIRE(sol.found);
  CHECK(m.apply(sol.x) == vec(2, {0}));

  auto none = solve(ones_2x2(), vec(2, {0}));
  CHECK_FALSE(none.found);
}

TEST_CASE("express_in_quotient writes targets in the representative basis") {
  std::vector<F2Vec> reps = {vec(2, {0}), vec(2, {1})};
  std::vector<F2Vec> targets = {vec(2, {0, 1})};
  auto coords = express_in_quotient(2, {}, reps, targets);
  CHECK(coords.rows() == 2);
  CHECK(coords.cols() == 1);
  CHECK(coords.get(0, 0));
  CHECK(coords.get(1, 0));

  // Modulo the diagonal boundary, (0,1) is the same class as (1,0).
  std::vector<F2Vec> bnd = {vec(2, {0, 1})};
  auto modded = express_in_quotient(2, bnd, {vec(2, {0})}, {vec(2, {1})});
  CHECK(modded.get(0, 0));

  CHECK_THROWS_AS(express_in_quotient(2, bnd, {}, {vec(2, {0})}),
                  ConsistencyError);
}
