// Strands algebra A(n,k,S): generators in p/q-array notation over a fixed
// left idempotent, products, differentials, gradings, and the basic
// symmetries. Everything is exact integer arithmetic; half-integer gradings
// use the doubled convention (Half2).
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strands/istates.hpp"
#include "strands/util.hpp"

namespace strands {

struct AlgebraContext {
  int n = 0;              // circles 1..n
  int k = 0;              // strand count, 0 <= k <= n+1
  std::uint32_t s_bits = 0;  // S subset of [1,n], bit i set iff i in S

  bool s_contains(int i) const { return (s_bits >> i) & 1u; }
  std::vector<int> s_members() const;
  bool operator==(const AlgebraContext& o) const {
    return n == o.n && k == o.k && s_bits == o.s_bits;
  }
  bool operator!=(const AlgebraContext& o) const { return !(*this == o); }
};

AlgebraContext make_context(int n, int k, const std::vector<int>& s);

// Basis element C_{i_1}...C_{i_l} [p_1/q_1]_1 ... [p_n/q_n]_n at left
// idempotent x. The speed arrays are padded to length n+2 so that the ambient
// conventions q_0 = p_{n+1} = 0 (and the nonexistent p_0, q_{n+1}) hold by
// construction; meaningful columns are 1..n.
struct StrandsGenerator {
  AlgebraContext ctx;
  IState x;
  std::uint32_t c_bits = 0;
  std::vector<int> p, q;

  bool c_contains(int i) const { return (c_bits >> i) & 1u; }
  bool operator==(const StrandsGenerator& o) const;
  bool operator!=(const StrandsGenerator& o) const { return !(*this == o); }
  bool operator<(const StrandsGenerator& o) const;  // (x, c, pq) lex key
};

StrandsGenerator make_generator(const AlgebraContext& ctx, IState x,
                                const std::vector<int>& c,
                                const std::vector<std::pair<int, int>>& pq);

// Checks the six basis conditions; throws ValidityError carrying the number
// (1..6) of the first violated condition and returns the right idempotent
// derived from x and the speed parities.
IState validate_generator(const StrandsGenerator& g);

// Non-throwing variant for enumeration hot paths.
std::optional<IState> try_validate(const StrandsGenerator& g);

StrandsGenerator idempotent(const AlgebraContext& ctx, IState x);

struct F2Element {
  AlgebraContext ctx;
  std::vector<StrandsGenerator> terms;  // sorted by generator key, no dups

  bool is_zero() const { return terms.empty(); }
  void add(const StrandsGenerator& g);  // xor a term in (mod-2 cancellation)
  bool operator==(const F2Element& o) const;
  bool operator!=(const F2Element& o) const { return !(*this == o); }
};

F2Element zero_element(const AlgebraContext& ctx);
F2Element single(const StrandsGenerator& g);
F2Element add(const F2Element& a, const F2Element& b);

// Product of basis elements; empty optional when the product vanishes
// (mismatched idempotents or one of the seven concatenation conditions).
std::optional<StrandsGenerator> mul_gen(const StrandsGenerator& a,
                                        const StrandsGenerator& b);

F2Element mul(const F2Element& a, const F2Element& b);

F2Element d0(const StrandsGenerator& g, int i);
F2Element dc(const StrandsGenerator& g, int i);
F2Element diff_gen(const StrandsGenerator& g);
F2Element diff(const F2Element& a);

struct GradingVector {
  int maslov = 0;
  std::vector<int> w_un;    // 2n entries: tau_1, beta_1, ..., tau_n, beta_n
  std::vector<Half2> w;     // n doubled refined weights
  Half2 alexander = 0;      // doubled
};

GradingVector grade(const StrandsGenerator& g);

// Minimally winding basis element from x to y; DomainError on far pairs.
StrandsGenerator g_min(const AlgebraContext& ctx, IState x, IState y);

// Index reversal: lands in the context with S replaced by {n+1-i : i in S}.
StrandsGenerator rho(const StrandsGenerator& g);

// Opposite-algebra involution: columns swapped, based at the old right
// idempotent.
StrandsGenerator o_sym(const StrandsGenerator& g);

enum class Truncation { r, l, both };

bool in_truncation(const StrandsGenerator& g, Truncation which);

// All valid generators from x to y whose doubled refined weight on line i is
// at most caps[i-1]; deterministic (c ascending, then pq lexicographic).
std::vector<StrandsGenerator> enumerate_basis(const AlgebraContext& ctx, IState x,
                                              IState y,
                                              const std::vector<Half2>& caps);
std::vector<StrandsGenerator> enumerate_basis(const AlgebraContext& ctx, IState x,
                                              IState y, Half2 cap);

}  // namespace strands
