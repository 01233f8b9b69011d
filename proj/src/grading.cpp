#include "strands/grading.hpp"

#include <cmath>
#include <cstdlib>

namespace strands {

HomologyClass zero_class(int n) {
  return HomologyClass{std::vector<int>(2 * n, 0)};
}

HomologyClass add_classes(const HomologyClass& a, const HomologyClass& b) {
  if (a.coeff.size() != b.coeff.size())
    throw ParameterError("homology classes on different diagrams");
  HomologyClass out = a;
  for (std::size_t i = 0; i < b.coeff.size(); ++i) out.coeff[i] += b.coeff[i];
  return out;
}

Half2 multiplicity(const HomologyClass& alpha, int i, int sign) {
  if (i < 1 || i > alpha.lines()) throw ParameterError("circle index outside [1,n]");
  if (sign != 1 && sign != -1) throw ParameterError("basepoint sign must be +1/-1");
  return alpha.tau(i) + alpha.beta(i);
}

Half2 linking(const HomologyClass& a1, const HomologyClass& a2) {
  if (a1.coeff.size() != a2.coeff.size())
    throw ParameterError("homology classes on different diagrams");
  // boundary(beta_i) = z_i^+ - z_i^-, boundary(tau_i) = z_i^- - z_i^+; the
  // multiplicity of a2 at both basepoints of a circle agrees, so this
  // telescopes to zero, but we evaluate the sum literally.
  Half2 out = 0;
  for (int i = 1; i <= a1.lines(); ++i) {
    int at_plus = a1.beta(i) - a1.tau(i);
    int at_minus = a1.tau(i) - a1.beta(i);
    out += at_plus * multiplicity(a2, i, +1) + at_minus * multiplicity(a2, i, -1);
  }
  return out;  // doubled, like every half-integer here
}

Half2 epsilon(const HomologyClass& alpha) {
  int odd = 0;
  for (int i = 1; i <= alpha.lines(); ++i)
    if ((alpha.tau(i) + alpha.beta(i)) % 2 != 0) ++odd;
  return odd % 2;
}

GPrimeElement make_gprime(Half2 j2, HomologyClass alpha) {
  if (((j2 % 2) + 2) % 2 != epsilon(alpha))
    throw ParameterError("first component breaks the parity-change constraint");
  return GPrimeElement{j2, std::move(alpha)};
}

GPrimeElement gprime_identity(int n) { return GPrimeElement{0, zero_class(n)}; }

GPrimeElement gprime_mul(const GPrimeElement& g1, const GPrimeElement& g2) {
  Half2 j2 = g1.j2 + g2.j2 + linking(g1.alpha, g2.alpha);
  HomologyClass alpha = add_classes(g1.alpha, g2.alpha);
  if (((j2 % 2) + 2) % 2 != epsilon(alpha))
    throw ConsistencyError("product broke the parity-change constraint");
  return GPrimeElement{j2, std::move(alpha)};
}

namespace {

// Class of the moving strands plus closed loops of g, which is also the
// unrefined Alexander vector.
HomologyClass diagram_class(const StrandsGenerator& g) {
  HomologyClass alpha = zero_class(g.ctx.n);
  for (int i = 1; i <= g.ctx.n; ++i) {
    int c = g.c_contains(i) ? 1 : 0;
    alpha.tau(i) = c + g.p[i] / 2 + (g.q[i] + 1) / 2;
    alpha.beta(i) = c + (g.p[i] + 1) / 2 + g.q[i] / 2;
  }
  return alpha;
}

}  // namespace

GPrimeElement deg_prime(const StrandsGenerator& g) {
  validate_generator(g);
  Half2 j2 = 0;
  for (int i = 1; i <= g.ctx.n; ++i)
    j2 += std::abs(g.p[i] - g.q[i]) - 2 * (g.p[i] + g.q[i]);
  return make_gprime(j2, diagram_class(g));
}

GPrimeElement deg_prime_from_diagram(const StrandsGenerator& g, SectionRule rule) {
  validate_generator(g);
  int n = g.ctx.n;
  // Constant strands: one per occupied matched pair with no moving strand.
  std::vector<char> const_minus(n + 2, 0), const_plus(n + 1, 0);
  for (int j = 0; j <= n; ++j) {
    if (!g.x.contains(j)) continue;
    if (g.q[j] != 0 || g.p[j + 1] != 0) continue;  // a moving strand departs
    if (rule == SectionRule::plus)
      const_plus[j] = 1;  // z_j^+ (the j = 0 one lies on a line)
    else
      const_minus[j + 1] = 1;  // z_{j+1}^- (the j = n one lies on a line)
  }
  HomologyClass alpha = diagram_class(g);
  Half2 inv2 = 0;  // doubled inversion count
  Half2 m2 = 0;    // doubled multiplicity of alpha at s(0)
  for (int i = 1; i <= n; ++i) {
    bool start_minus = g.p[i] > 0 || const_minus[i];
    bool start_plus = g.q[i] > 0 || const_plus[i];
    int count = (start_minus ? 1 : 0) + (start_plus ? 1 : 0);
    int c = g.c_contains(i) ? 1 : 0;
    if (count == 1) {
      inv2 += 2 * c;
    } else if (count == 2) {
      int a = g.p[i], b = g.q[i];  // a constant strand contributes speed zero
      if ((a - b) % 2 != 0)
        throw ConsistencyError("strand pair with odd speed difference");
      inv2 += std::abs(a - b) + 4 * c;
    }
    m2 += count * (alpha.tau(i) + alpha.beta(i));
  }
  // Starting basepoints on the two lines have multiplicity zero, so they are
  // not tracked. inv is an integer, m is a half-integer.
  return make_gprime(inv2 - m2, std::move(alpha));
}

std::pair<int, HomologyClass> theta(const AlgebraContext& ctx,
                                    const GPrimeElement& g) {
  if (g.alpha.lines() != ctx.n)
    throw ParameterError("grading element does not match the context");
  Half2 first = g.j2;
  for (int i = 1; i <= ctx.n; ++i) {
    Half2 m = g.alpha.tau(i) + g.alpha.beta(i);
    first += ctx.s_contains(i) ? -m : m;
  }
  if (first % 2 != 0)
    throw ConsistencyError("refined first component is not an integer");
  return {first / 2, g.alpha};
}

std::pair<int, std::vector<Half2>> psi_refine(
    const std::pair<int, HomologyClass>& graded) {
  std::vector<Half2> w(graded.second.lines());
  for (int i = 1; i <= graded.second.lines(); ++i)
    w[i - 1] = graded.second.tau(i) + graded.second.beta(i);
  return {graded.first, w};
}

}  // namespace strands
