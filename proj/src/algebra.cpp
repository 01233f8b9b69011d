#include "strands/algebra.hpp"

#include <algorithm>
#include <tuple>

namespace strands {

std::vector<int> AlgebraContext::s_members() const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (s_contains(i)) out.push_back(i);
  return out;
}

AlgebraContext make_context(int n, int k, const std::vector<int>& s) {
  if (n < 0 || n > 30) throw ParameterError("circle count out of range");
  if (k < 0 || k > n + 1) throw ParameterError("strand count out of range");
  AlgebraContext ctx;
  ctx.n = n;
  ctx.k = k;
  for (int i : s) {
    if (i < 1 || i > n) throw ParameterError("orientation index outside [1,n]");
    if (ctx.s_contains(i)) throw ParameterError("duplicate orientation index");
    ctx.s_bits |= 1u << i;
  }
  return ctx;
}

namespace {

void check_shape(const StrandsGenerator& g) {
  int n = g.ctx.n;
  if (g.x.n != n) throw ParameterError("idempotent size disagrees with context");
  if (g.x.k() != g.ctx.k) throw ParameterError("idempotent has wrong strand count");
  if (static_cast<int>(g.p.size()) != n + 2 || static_cast<int>(g.q.size()) != n + 2)
    throw ParameterError("speed arrays must have n+2 padded entries");
  if (g.p[0] != 0 || g.q[0] != 0 || g.p[n + 1] != 0 || g.q[n + 1] != 0)
    throw ParameterError("padding entries of the speed arrays must be zero");
  for (int i = 1; i <= n; ++i)
    if (g.p[i] < 0 || g.q[i] < 0) throw ParameterError("speeds must be nonnegative");
}

// Right idempotent from x and speed parities; nullopt signals a collision,
// which cannot happen for generators passing the six conditions.
std::optional<IState> derive_right(const StrandsGenerator& g) {
  IState y{g.ctx.n, 0};
  for (int i = 0; i <= g.ctx.n; ++i) {
    if (!g.x.contains(i)) continue;
    int target;
    if (g.q[i] % 2 == 1)
      target = i - 1;
    else if (g.p[i + 1] % 2 == 1)
      target = i + 1;
    else
      target = i;
    if (target < 0 || target > g.ctx.n || y.contains(target)) return std::nullopt;
    y.bits |= 1u << target;
  }
  return y;
}

// 0 = valid; otherwise the number of the first violated condition.
int first_violation(const StrandsGenerator& g) {
  int n = g.ctx.n;
  if (g.c_bits & ~g.ctx.s_bits) return 1;
  for (int i = 1; i <= n - 1; ++i)
    if (g.q[i] != 0 && g.p[i + 1] != 0) return 2;
  for (int i = 0; i <= n; ++i)
    if (!g.x.contains(i) && (g.q[i] != 0 || g.p[i + 1] != 0)) return 3;
  for (int i = 1; i <= n - 1; ++i)
    if (g.p[i] % 2 == 1 && g.q[i + 1] % 2 == 1) return 4;
  for (int i = 1; i <= n; ++i)
    if (g.p[i] != 0 && g.q[i] != 0 && (g.p[i] - g.q[i]) % 2 != 0) return 5;
  for (int i = 1; i <= n; ++i) {
    if (!g.x.contains(i - 1) || !g.x.contains(i)) continue;
    if (g.p[i] % 2 == 1 && g.q[i] == 0 && g.p[i + 1] % 2 == 0) return 6;
    if (g.p[i] == 0 && g.q[i] % 2 == 1 && g.q[i - 1] % 2 == 0) return 6;
  }
  return 0;
}

}  // namespace

bool StrandsGenerator::operator==(const StrandsGenerator& o) const {
  return ctx == o.ctx && x == o.x && c_bits == o.c_bits && p == o.p && q == o.q;
}

bool StrandsGenerator::operator<(const StrandsGenerator& o) const {
  if (x.bits != o.x.bits) return x.bits < o.x.bits;
  if (c_bits != o.c_bits) return c_bits < o.c_bits;
  for (int i = 1; i <= ctx.n; ++i) {
    if (p[i] != o.p[i]) return p[i] < o.p[i];
    if (q[i] != o.q[i]) return q[i] < o.q[i];
  }
  return false;
}

StrandsGenerator make_generator(const AlgebraContext& ctx, IState x,
                                const std::vector<int>& c,
                                const std::vector<std::pair<int, int>>& pq) {
  if (static_cast<int>(pq.size()) != ctx.n)
    throw ParameterError("expected one speed column per circle");
  StrandsGenerator g;
  g.ctx = ctx;
  g.x = x;
  g.p.assign(ctx.n + 2, 0);
  g.q.assign(ctx.n + 2, 0);
  for (int i = 1; i <= ctx.n; ++i) {
    g.p[i] = pq[i - 1].first;
    g.q[i] = pq[i - 1].second;
  }
  for (int i : c) {
    if (i < 1 || i > ctx.n) throw ParameterError("loop index outside [1,n]");
    if (g.c_contains(i)) throw ParameterError("duplicate loop index");
    g.c_bits |= 1u << i;
  }
  check_shape(g);
  return g;
}

IState validate_generator(const StrandsGenerator& g) {
  check_shape(g);
  if (int v = first_violation(g))
    throw ValidityError(v, "basis condition (" + std::to_string(v) + ") violated");
  auto y = derive_right(g);
  if (!y) throw ConsistencyError("right idempotent collision on a valid generator");
  return *y;
}

std::optional<IState> try_validate(const StrandsGenerator& g) {
  if (first_violation(g)) return std::nullopt;
  return derive_right(g);
}

StrandsGenerator idempotent(const AlgebraContext& ctx, IState x) {
  return make_generator(ctx, x, {}, std::vector<std::pair<int, int>>(ctx.n, {0, 0}));
}

void F2Element::add(const StrandsGenerator& g) {
  auto it = std::lower_bound(terms.begin(), terms.end(), g);
  if (it != terms.end() && *it == g)
    terms.erase(it);
  else
    terms.insert(it, g);
}

bool F2Element::operator==(const F2Element& o) const {
  return ctx == o.ctx && terms == o.terms;
}

F2Element zero_element(const AlgebraContext& ctx) { return F2Element{ctx, {}}; }

F2Element single(const StrandsGenerator& g) { return F2Element{g.ctx, {g}}; }

F2Element add(const F2Element& a, const F2Element& b) {
  if (a.ctx != b.ctx) throw ParameterError("sum across different contexts");
  F2Element out = a;
  for (const auto& t : b.terms) out.add(t);
  return out;
}

std::optional<StrandsGenerator> mul_gen(const StrandsGenerator& a,
                                        const StrandsGenerator& b) {
  if (a.ctx != b.ctx) throw ParameterError("product across different contexts");
  IState ya = validate_generator(a);
  validate_generator(b);
  if (ya != b.x) return std::nullopt;
  if (a.c_bits & b.c_bits) return std::nullopt;  // (VII)
  int n = a.ctx.n;
  for (int i = 1; i <= n; ++i) {
    if (a.p[i] % 2 == 1 && b.p[i + 1] != 0) return std::nullopt;           // (I)
    if (a.p[i] != 0 && a.p[i] % 2 == 0 && b.q[i - 1] != 0) return std::nullopt;  // (II)
    if (a.q[i] % 2 == 1 && b.q[i - 1] != 0) return std::nullopt;           // (III)
    if (a.q[i] != 0 && a.q[i] % 2 == 0 && b.p[i + 1] != 0) return std::nullopt;  // (IV)
    if (a.p[i] % 2 == 0 && a.q[i] % 2 == 0 &&
        (a.p[i] - a.q[i]) * (b.p[i] - b.q[i]) < 0)
      return std::nullopt;  // (V)
    if (a.p[i] % 2 == 1 && a.q[i] % 2 == 1 &&
        (a.p[i] - a.q[i]) * (b.p[i] - b.q[i]) > 0)
      return std::nullopt;  // (VI)
  }
  StrandsGenerator out;
  out.ctx = a.ctx;
  out.x = a.x;
  out.c_bits = a.c_bits | b.c_bits;
  out.p.assign(n + 2, 0);
  out.q.assign(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    if (a.p[i] % 2 == 1)
      out.p[i] = a.p[i] + b.q[i];
    else if (a.q[i] % 2 == 0)
      out.p[i] = a.p[i] + b.p[i];
    else
      out.p[i] = 0;  // a.p[i] == 0, a.q[i] odd
    if (a.q[i] % 2 == 1)
      out.q[i] = a.q[i] + b.p[i];
    else if (a.p[i] % 2 == 0)
      out.q[i] = a.q[i] + b.q[i];
    else
      out.q[i] = 0;  // a.q[i] == 0, a.p[i] odd
  }
  return out;
}

F2Element mul(const F2Element& a, const F2Element& b) {
  if (a.ctx != b.ctx) throw ParameterError("product across different contexts");
  F2Element out = zero_element(a.ctx);
  for (const auto& s : a.terms)
    for (const auto& t : b.terms)
      if (auto r = mul_gen(s, t)) out.add(*r);
  return out;
}

F2Element d0(const StrandsGenerator& g, int i) {
  if (i < 1 || i > g.ctx.n) throw ParameterError("line index outside [1,n]");
  F2Element out = zero_element(g.ctx);
  if (!g.x.contains(i - 1) || !g.x.contains(i)) return out;
  if (g.q[i - 1] != 0 || g.p[i + 1] != 0) return out;
  int m = std::min(g.p[i], g.q[i]);
  int M = std::max(g.p[i], g.q[i]);
  if (M == m) return out;
  if ((M - m) % 2 != 0)
    throw ConsistencyError("odd speed difference in a differentiable column");
  StrandsGenerator t = g;
  t.p[i] = m + 1;
  t.q[i] = M - 1;
  out.add(t);
  if (M - m >= 4) {
    t.p[i] = M - 1;
    t.q[i] = m + 1;
    out.add(t);
  }
  return out;
}

F2Element dc(const StrandsGenerator& g, int i) {
  if (i < 1 || i > g.ctx.n) throw ParameterError("line index outside [1,n]");
  F2Element out = zero_element(g.ctx);
  if (!g.c_contains(i)) return out;
  StrandsGenerator base = g;
  base.c_bits &= ~(1u << i);
  if (g.p[i] == 0 && g.q[i] == 0) {
    if (g.x.contains(i - 1) && g.q[i - 1] == 0) {
      StrandsGenerator t = base;
      t.p[i] = 2;
      out.add(t);
    }
    if (g.x.contains(i) && g.p[i + 1] == 0) {
      StrandsGenerator t = base;
      t.q[i] = 2;
      out.add(t);
    }
    return out;
  }
  if (g.p[i] >= g.q[i]) {
    StrandsGenerator t = base;
    t.p[i] += 2;
    out.add(t);
  }
  if (g.p[i] <= g.q[i]) {
    StrandsGenerator t = base;
    t.q[i] += 2;
    out.add(t);
  }
  return out;
}

F2Element diff_gen(const StrandsGenerator& g) {
  F2Element out = zero_element(g.ctx);
  for (int i = 1; i <= g.ctx.n; ++i) {
    out = add(out, d0(g, i));
    out = add(out, dc(g, i));
  }
  return out;
}

F2Element diff(const F2Element& a) {
  F2Element out = zero_element(a.ctx);
  for (const auto& t : a.terms) out = add(out, diff_gen(t));
  return out;
}

GradingVector grade(const StrandsGenerator& g) {
  int n = g.ctx.n;
  GradingVector gv;
  gv.w_un.assign(2 * n, 0);
  gv.w.assign(n, 0);
  int m2 = 0;      // doubled Maslov accumulator
  Half2 alex = 0;  // doubled
  for (int i = 1; i <= n; ++i) {
    int p = g.p[i], q = g.q[i];
    int c = g.c_contains(i) ? 1 : 0;
    int sign = g.ctx.s_contains(i) ? -1 : 1;
    m2 += std::abs(p - q) - 2 * (p + q) + sign * (2 * c + p + q);
    gv.w_un[2 * (i - 1)] = c + p / 2 + (q + 1) / 2;      // tau_i
    gv.w_un[2 * (i - 1) + 1] = c + (p + 1) / 2 + q / 2;  // beta_i
    gv.w[i - 1] = 2 * c + p + q;
    alex += sign * gv.w[i - 1];
  }
  if (m2 % 2 != 0) throw ConsistencyError("Maslov grading is not an integer");
  gv.maslov = m2 / 2;
  gv.alexander = alex;
  return gv;
}

StrandsGenerator g_min(const AlgebraContext& ctx, IState x, IState y) {
  if (x.n != ctx.n || y.n != ctx.n)
    throw ParameterError("idempotent size disagrees with context");
  if (x.k() != ctx.k || y.k() != ctx.k)
    throw ParameterError("idempotent has wrong strand count");
  if (is_far(x, y)) throw DomainError("no basis elements connect far I-states");
  std::vector<std::pair<int, int>> pq(ctx.n, {0, 0});
  for (int i = 1; i <= ctx.n; ++i) {
    int v = weight_v(x, y, i);
    if (v == 1)
      pq[i - 1].first = 1;
    else if (v == -1)
      pq[i - 1].second = 1;
  }
  return make_generator(ctx, x, {}, pq);
}

StrandsGenerator rho(const StrandsGenerator& g) {
  int n = g.ctx.n;
  StrandsGenerator out;
  out.ctx = g.ctx;
  out.ctx.s_bits = 0;
  for (int i = 1; i <= n; ++i)
    if (g.ctx.s_contains(i)) out.ctx.s_bits |= 1u << (n + 1 - i);
  out.x = IState{n, 0};
  for (int i = 0; i <= n; ++i)
    if (g.x.contains(i)) out.x.bits |= 1u << (n - i);
  for (int i = 1; i <= n; ++i)
    if (g.c_contains(i)) out.c_bits |= 1u << (n + 1 - i);
  out.p.assign(n + 2, 0);
  out.q.assign(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    out.p[i] = g.q[n + 1 - i];
    out.q[i] = g.p[n + 1 - i];
  }
  return out;
}

StrandsGenerator o_sym(const StrandsGenerator& g) {
  IState y = validate_generator(g);
  StrandsGenerator out = g;
  out.x = y;
  // Time reversal re-records each strand by its endpoint, which differs from
  // its start only at odd speed; even (wrapping) strands keep their column.
  for (int i = 1; i <= g.ctx.n; ++i) {
    if (g.p[i] % 2 != 0 || g.q[i] % 2 != 0) {
      out.p[i] = g.q[i];
      out.q[i] = g.p[i];
    }
  }
  return out;
}

bool in_truncation(const StrandsGenerator& g, Truncation which) {
  IState y = validate_generator(g);
  bool r_ok = !g.x.contains(0) && !y.contains(0);
  bool l_ok = !g.x.contains(g.ctx.n) && !y.contains(g.ctx.n);
  switch (which) {
    case Truncation::r: return r_ok;
    case Truncation::l: return l_ok;
    case Truncation::both: return r_ok && l_ok;
  }
  throw ParameterError("unknown truncation kind");
}

namespace {

void enumerate_columns(const AlgebraContext& ctx, const IState& x, const IState& y,
                       const std::vector<Half2>& caps, std::uint32_t c_bits,
                       StrandsGenerator& work, int line,
                       std::vector<StrandsGenerator>& out) {
  int n = ctx.n;
  if (line > n) {
    if (auto derived = try_validate(work); derived && *derived == y)
      out.push_back(work);
    return;
  }
  int c = (c_bits >> line) & 1;
  int budget = caps[line - 1] - 2 * c;
  if (budget < 0) return;
  for (int p = 0; p <= budget; ++p) {
    // Condition (iii): a nonzero p_line needs line-1 in x; nonzero q needs line in x.
    if (p != 0 && !x.contains(line - 1)) break;
    // Condition (ii) against the previous column.
    if (p != 0 && work.q[line - 1] != 0) break;
    work.p[line] = p;
    for (int q = 0; q + p <= budget; ++q) {
      if (q != 0 && !x.contains(line)) break;
      // Condition (v) locally; (iv) against the previous column.
      if (p != 0 && q != 0 && (p - q) % 2 != 0) continue;
      if (q % 2 == 1 && work.p[line - 1] % 2 == 1) continue;
      work.q[line] = q;
      enumerate_columns(ctx, x, y, caps, c_bits, work, line + 1, out);
    }
    work.q[line] = 0;
  }
  work.p[line] = 0;
}

}  // namespace

std::vector<StrandsGenerator> enumerate_basis(const AlgebraContext& ctx, IState x,
                                              IState y,
                                              const std::vector<Half2>& caps) {
  if (x.n != ctx.n || y.n != ctx.n)
    throw ParameterError("idempotent size disagrees with context");
  if (x.k() != ctx.k || y.k() != ctx.k)
    throw ParameterError("idempotent has wrong strand count");
  if (static_cast<int>(caps.size()) != ctx.n)
    throw ParameterError("expected one weight cap per circle");
  for (Half2 c : caps)
    if (c < 0) throw ParameterError("weight caps must be nonnegative");
  std::vector<StrandsGenerator> out;
  if (is_far(x, y)) return out;
  StrandsGenerator work = idempotent(ctx, x);
  // Ascending loop monomials, then lexicographic speed arrays within each.
  std::uint32_t c_bits = 0;
  for (;;) {
    work.c_bits = c_bits;
    enumerate_columns(ctx, x, y, caps, c_bits, work, 1, out);
    if (c_bits == ctx.s_bits) break;
    c_bits = (c_bits - ctx.s_bits) & ctx.s_bits;  // next subset of S
  }
  return out;
}

std::vector<StrandsGenerator> enumerate_basis(const AlgebraContext& ctx, IState x,
                                              IState y, Half2 cap) {
  return enumerate_basis(ctx, x, y, std::vector<Half2>(ctx.n, cap));
}

}  // namespace strands
