// The dg algebra B(n,k,S) in canonical normal form U^r · gamma_{x,y} · C^c.
// Each (x, y, c, weight) piece is at most one-dimensional, so products reduce
// to weight bookkeeping plus two zero-tests: farness and divisibility by the
// monomial of a generating interval.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strands/algebra.hpp"
#include "strands/istates.hpp"
#include "strands/util.hpp"

namespace strands {

struct OSGenerator {
  AlgebraContext ctx;
  IState x, y;
  std::uint32_t c_bits = 0;
  std::vector<int> r;  // U_i exponents, r[i-1] for line i

  bool c_contains(int i) const { return (c_bits >> i) & 1u; }
  bool operator==(const OSGenerator& o) const;
  bool operator!=(const OSGenerator& o) const { return !(*this == o); }
  bool operator<(const OSGenerator& o) const;  // (x, y, c, r) lex key
};

OSGenerator make_os_generator(const AlgebraContext& ctx, IState x, IState y,
                              const std::vector<int>& c,
                              const std::vector<int>& r);

// Far pair -> DomainError; U^r divisible by the monomial of a generating
// interval -> ValidityError naming the interval; malformed fields ->
// ParameterError.
void validate_os(const OSGenerator& g);

// The generating interval (if any) whose monomial divides U^r.
std::optional<Interval> dividing_interval(const IState& x, const IState& y,
                                          const std::vector<int>& r);

struct OSElement {
  AlgebraContext ctx;
  std::vector<OSGenerator> terms;  // sorted, no duplicates

  bool is_zero() const { return terms.empty(); }
  void add(const OSGenerator& g);
  bool operator==(const OSElement& o) const;
  bool operator!=(const OSElement& o) const { return !(*this == o); }
};

OSElement zero_os(const AlgebraContext& ctx);
OSElement single_os(const OSGenerator& g);
OSElement add_os(const OSElement& a, const OSElement& b);

// The class of the canonical path from x to y: r = 0, c = empty.
OSGenerator gamma_generator(const AlgebraContext& ctx, IState x, IState y);

OSGenerator idempotent_os(const AlgebraContext& ctx, IState x);

OSElement mul_os(const OSGenerator& a, const OSGenerator& b);
OSElement mul_os(const OSElement& a, const OSElement& b);

// Right-multiply by a quiver edge. R_i / L_i must be legal moves at the right
// idempotent of every term (DomainError otherwise); U_i and C_i always parse,
// with C_i requiring i in S.
OSElement apply_letter(const OSElement& e, const GeneratorLabel& label);

// Fold apply_letter over labels starting from the idempotent at x.
OSElement evaluate_path(const AlgebraContext& ctx, IState x,
                        const std::vector<GeneratorLabel>& labels);

OSElement diff_os_gen(const OSGenerator& g);
OSElement diff_os(const OSElement& e);

GradingVector grade_os(const OSGenerator& g);

OSGenerator rho_os(const OSGenerator& g);  // reverse all indices
OSGenerator o_os(const OSGenerator& g);    // swap x and y

// All normal forms from x to y with doubled refined weight w_i <= caps[i-1].
std::vector<OSGenerator> enumerate_os_basis(const AlgebraContext& ctx, IState x,
                                            IState y,
                                            const std::vector<Half2>& caps);
std::vector<OSGenerator> enumerate_os_basis(const AlgebraContext& ctx, IState x,
                                            IState y, Half2 cap);

}  // namespace strands
