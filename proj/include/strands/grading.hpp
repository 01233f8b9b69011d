// Group-valued gradings: relative homology classes of strand diagrams, the
// half-integer grading group G'(Z(n)), deg', and the refinement maps down to
// the combinatorial Maslov/Alexander gradings. Half-integers are doubled.
#pragma once

#include <utility>
#include <vector>

#include "strands/algebra.hpp"
#include "strands/util.hpp"

namespace strands {

// Element of H_1(Z(n), basepoints) = Z^{2n}, on the arc basis
// tau_1, beta_1, ..., tau_n, beta_n. beta_i is the oriented arc from z_i^- to
// z_i^+; tau_i is the complementary arc. The two line components carry no
// homology.
struct HomologyClass {
  std::vector<int> coeff;  // 2n entries, interleaved (tau_i, beta_i)

  int lines() const { return static_cast<int>(coeff.size()) / 2; }
  int tau(int i) const { return coeff[2 * (i - 1)]; }
  int beta(int i) const { return coeff[2 * (i - 1) + 1]; }
  int& tau(int i) { return coeff[2 * (i - 1)]; }
  int& beta(int i) { return coeff[2 * (i - 1) + 1]; }
  bool operator==(const HomologyClass& o) const { return coeff == o.coeff; }
  bool operator!=(const HomologyClass& o) const { return !(*this == o); }
};

HomologyClass zero_class(int n);
HomologyClass add_classes(const HomologyClass& a, const HomologyClass& b);

// Average multiplicity of alpha at the basepoint z_i^(sign): half of
// tau_i + beta_i coefficients (independent of the sign). Doubled result.
Half2 multiplicity(const HomologyClass& alpha, int i, int sign);

// m(a2, boundary of a1); identically zero on Z(n) but computed literally.
Half2 linking(const HomologyClass& a1, const HomologyClass& a2);

// Half the number of parity changes: (1/2)#{i : tau_i + beta_i odd} mod 1,
// doubled, so the result is 0 or 1.
Half2 epsilon(const HomologyClass& alpha);

// Element (j, alpha) of G'(Z(n)) subject to j = epsilon(alpha) mod 1.
struct GPrimeElement {
  Half2 j2 = 0;  // doubled first component
  HomologyClass alpha;

  bool operator==(const GPrimeElement& o) const {
    return j2 == o.j2 && alpha == o.alpha;
  }
  bool operator!=(const GPrimeElement& o) const { return !(*this == o); }
};

GPrimeElement make_gprime(Half2 j2, HomologyClass alpha);
GPrimeElement gprime_identity(int n);

// (j1 + j2 + L(a1,a2), a1 + a2); abelian since L vanishes on Z(n).
GPrimeElement gprime_mul(const GPrimeElement& g1, const GPrimeElement& g2);

// Closed form: j = sum_i(|p_i-q_i|/2 - (p_i+q_i)), alpha with the
// floor/ceiling coefficients.
GPrimeElement deg_prime(const StrandsGenerator& g);

// Placement of the constant strand for an occupied matched pair with no
// moving strand: at the pair's first basepoint z_j^+ (plus) or at its second
// basepoint z_{j+1}^- (minus).
enum class SectionRule { plus, minus };

// Literal evaluation of inv(s,c) - m([s,c],[s(0)]) on the representative
// diagram chosen by the section rule; agrees with deg_prime for both rules.
GPrimeElement deg_prime_from_diagram(const StrandsGenerator& g, SectionRule rule);

// Refinement to (Maslov, unrefined Alexander): first component
// j + sum_{i not in S} m_i - sum_{i in S} m_i with m_i the doubled
// multiplicity; ConsistencyError when it is not an integer.
std::pair<int, HomologyClass> theta(const AlgebraContext& ctx,
                                    const GPrimeElement& g);

// Collapse tau_i, beta_i to e_i/2: (j, vector of doubled refined weights).
std::pair<int, std::vector<Half2>> psi_refine(
    const std::pair<int, HomologyClass>& graded);

}  // namespace strands
