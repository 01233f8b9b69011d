// Tensor splitting of an idempotent-framed slice of the strands algebra into
// crossed-line winding exponents and interval-local factors, the maximal
// Maslov cycles of the interval algebras, and the piece-by-piece homology
// engine with its closed-form dimension predictor.
#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "strands/algebra.hpp"
#include "strands/f2linalg.hpp"
#include "strands/istates.hpp"
#include "strands/osz.hpp"
#include "strands/util.hpp"

namespace strands {

enum class IntervalKind { generating, left_edge, right_edge, two_faced };

// The interval-local algebra: a generating interval of length l lives in
// A(l, l-1) framed at [1,l-1]; a left/right edge interval in A(l,l) framed
// at [0,l-1] / [1,l]; the two-faced interval in A(l,l+1) framed at [0,l].
AlgebraContext local_context(IntervalKind kind, int length);
IState local_frame(IntervalKind kind, int length);

struct IntervalFactor {
  Interval interval;       // global line range
  IntervalKind kind;
  StrandsGenerator local;  // generator in local_context(kind, length)
};

// psi-image of a basis element: winding exponents on crossed lines plus the
// interval restrictions, ordered left edge, generating intervals ascending,
// right edge (or the single two-faced factor).
struct Factorization {
  AlgebraContext ctx;  // ambient S = {} context
  IState x, y;
  std::map<int, int> crossed_exponents;  // keyed by exactly the crossed lines
  std::vector<IntervalFactor> factors;
};

// Columns of g inside the interval, reindexed to the local algebra. The
// interval must be one of classify_lines(x, y)'s for g's idempotent pair
// (ParameterError otherwise); S must be empty (UnsupportedError).
StrandsGenerator restrict(const StrandsGenerator& g, const Interval& interval,
                          IntervalKind kind);

// The full splitting: exponent (p_i+q_i-1)/2 per crossed line, restriction
// per interval. Inverse of unsplit_phi. S must be empty (UnsupportedError).
Factorization split_psi(const StrandsGenerator& g);

// Rebuilds the generator: column (1+2r_i, 0) or (0, 1+2r_i) on each crossed
// line per the sign of v_i, interval columns inlined. ParameterError on a
// malformed factorization (far pair, wrong interval layout, bad locals).
StrandsGenerator unsplit_phi(const Factorization& f);

// The idempotent-framed expansion of prod_{r_i != 0} ([2r_i/0]_i + [0/2r_i]_i)
// in the interval algebra of the given kind and length: the sum of all its
// standard basis elements of Maslov degree zero at Alexander weight r.
F2Element max_maslov_cycle(IntervalKind kind, int length,
                           const std::vector<int>& r);

enum class PieceAlgebra { A, B };

// One finite chain-complex slice: every generator from x to y of exact
// refined weight w, grouped by Maslov degree, with boundary maps.
struct GradedPiece {
  PieceAlgebra algebra;
  AlgebraContext ctx;
  IState x, y;
  std::vector<Half2> w;  // doubled refined weight, one entry per line
  std::map<int, std::vector<StrandsGenerator>> a_levels;  // A-side generators
  std::map<int, std::vector<OSGenerator>> b_levels;       // B-side generators
  std::map<int, F2Matrix> boundaries;  // key m: matrix from level m to m-1
};

// Assembles the piece and checks boundary∘boundary = 0 (ConsistencyError).
GradedPiece graded_piece(PieceAlgebra algebra, const AlgebraContext& ctx,
                         IState x, IState y, const std::vector<Half2>& w);

std::map<int, std::size_t> homology_dims(const GradedPiece& piece);

// Cycle representatives spanning the homology at each Maslov degree.
std::map<int, std::vector<F2Element>> homology_basis_a(const GradedPiece& piece);
std::map<int, std::vector<OSElement>> homology_basis_b(const GradedPiece& piece);

// Closed-form homology dimensions of the (x, y, w) piece: residual monomial
// counts in F2[U_1..U_n] modulo the generating-interval monomials, with one
// C-factor choice per generating interval meeting S. Far pairs give the
// empty map.
std::map<int, std::size_t> predicted_dims(const AlgebraContext& ctx, IState x,
                                          IState y,
                                          const std::vector<Half2>& w);

// For every (x, y, weight <= cap) piece: computes homology on both sides of
// the quiver-to-strands homomorphism, assembles the induced map on
// representatives, and verifies it is a bijection level by level.
CheckReport quasi_iso_check(int n, int k, const std::vector<int>& s, Half2 cap,
                            int jobs = 1);

}  // namespace strands
