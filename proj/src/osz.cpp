#include "strands/osz.hpp"

#include <algorithm>
#include <string>

namespace strands {

namespace {

void check_os_shape(const OSGenerator& g) {
  int n = g.ctx.n;
  if (g.x.n != n || g.y.n != n)
    throw ParameterError("idempotent size disagrees with context");
  if (g.x.k() != g.ctx.k || g.y.k() != g.ctx.k)
    throw ParameterError("idempotent has wrong dot count");
  if (static_cast<int>(g.r.size()) != n)
    throw ParameterError("expected one U-exponent per line");
  for (int e : g.r)
    if (e < 0) throw ParameterError("U-exponents must be nonnegative");
  if (g.c_bits & ~g.ctx.s_bits)
    throw ParameterError("loop variable outside the orientation set");
}

}  // namespace

bool OSGenerator::operator==(const OSGenerator& o) const {
  return ctx == o.ctx && x == o.x && y == o.y && c_bits == o.c_bits && r == o.r;
}

bool OSGenerator::operator<(const OSGenerator& o) const {
  if (x.bits != o.x.bits) return x.bits < o.x.bits;
  if (y.bits != o.y.bits) return y.bits < o.y.bits;
  if (c_bits != o.c_bits) return c_bits < o.c_bits;
  return r < o.r;
}

OSGenerator make_os_generator(const AlgebraContext& ctx, IState x, IState y,
                              const std::vector<int>& c,
                              const std::vector<int>& r) {
  OSGenerator g;
  g.ctx = ctx;
  g.x = x;
  g.y = y;
  g.r = r;
  for (int i : c) {
    if (i < 1 || i > ctx.n) throw ParameterError("loop index outside [1,n]");
    if (g.c_contains(i)) throw ParameterError("duplicate loop index");
    g.c_bits |= 1u << i;
  }
  check_os_shape(g);
  return g;
}

std::optional<Interval> dividing_interval(const IState& x, const IState& y,
                                          const std::vector<int>& r) {
  for (const Interval& g : classify_lines(x, y).generating) {
    bool divisible = true;
    for (int i = g.lo; i <= g.hi && divisible; ++i)
      if (r[i - 1] == 0) divisible = false;
    if (divisible) return g;
  }
  return std::nullopt;
}

void validate_os(const OSGenerator& g) {
  check_os_shape(g);
  if (is_far(g.x, g.y)) throw DomainError("far I-states support no generators");
  if (auto iv = dividing_interval(g.x, g.y, g.r))
    throw ValidityError(0, "U-monomial divisible by the interval [" +
                               std::to_string(iv->lo) + "," +
                               std::to_string(iv->hi) + "]");
}

void OSElement::add(const OSGenerator& g) {
  auto it = std::lower_bound(terms.begin(), terms.end(), g);
  if (it != terms.end() && *it == g)
    terms.erase(it);
  else
    terms.insert(it, g);
}

bool OSElement::operator==(const OSElement& o) const {
  return ctx == o.ctx && terms == o.terms;
}

OSElement zero_os(const AlgebraContext& ctx) { return OSElement{ctx, {}}; }

OSElement single_os(const OSGenerator& g) { return OSElement{g.ctx, {g}}; }

OSElement add_os(const OSElement& a, const OSElement& b) {
  if (a.ctx != b.ctx) throw ParameterError("sum across different contexts");
  OSElement out = a;
  for (const auto& t : b.terms) out.add(t);
  return out;
}

OSGenerator gamma_generator(const AlgebraContext& ctx, IState x, IState y) {
  if (is_far(x, y)) throw DomainError("far I-states support no generators");
  OSGenerator g = make_os_generator(ctx, x, y, {}, std::vector<int>(ctx.n, 0));
  return g;
}

OSGenerator idempotent_os(const AlgebraContext& ctx, IState x) {
  return gamma_generator(ctx, x, x);
}

OSElement mul_os(const OSGenerator& a, const OSGenerator& b) {
  if (a.ctx != b.ctx) throw ParameterError("product across different contexts");
  validate_os(a);
  validate_os(b);
  OSElement out = zero_os(a.ctx);
  if (a.y != b.x) return out;
  if (a.c_bits & b.c_bits) return out;
  if (is_far(a.x, b.y)) return out;
  OSGenerator prod;
  prod.ctx = a.ctx;
  prod.x = a.x;
  prod.y = b.y;
  prod.c_bits = a.c_bits | b.c_bits;
  prod.r.resize(a.ctx.n);
  for (int i = 1; i <= a.ctx.n; ++i) {
    int va = std::abs(weight_v(a.x, a.y, i));
    int vb = std::abs(weight_v(b.x, b.y, i));
    int vc = std::abs(weight_v(a.x, b.y, i));
    int transfer = (va + vb - vc) / 2;
    if ((va + vb - vc) % 2 != 0 || transfer < 0 || transfer > 1)
      throw ConsistencyError("weight transfer outside {0,1}");
    prod.r[i - 1] = a.r[i - 1] + b.r[i - 1] + transfer;
  }
  if (dividing_interval(prod.x, prod.y, prod.r)) return out;
  out.add(prod);
  return out;
}

OSElement mul_os(const OSElement& a, const OSElement& b) {
  if (a.ctx != b.ctx) throw ParameterError("product across different contexts");
  OSElement out = zero_os(a.ctx);
  for (const auto& s : a.terms)
    for (const auto& t : b.terms) out = add_os(out, mul_os(s, t));
  return out;
}

OSElement apply_letter(const OSElement& e, const GeneratorLabel& label) {
  int i = label.index;
  if (i < 1 || i > e.ctx.n) throw ParameterError("letter index outside [1,n]");
  if (label.kind == LabelKind::C && !e.ctx.s_contains(i))
    throw ParameterError("loop letter outside the orientation set");
  OSElement out = zero_os(e.ctx);
  for (const auto& g : e.terms) {
    const IState& at = g.y;
    switch (label.kind) {
      case LabelKind::R: {
        if (!at.contains(i - 1) || at.contains(i))
          throw DomainError(label_str(label) + " is not a legal move at " +
                            istate_str(at));
        IState to = at;
        to.bits = (to.bits & ~(1u << (i - 1))) | (1u << i);
        out = add_os(out, mul_os(g, gamma_generator(e.ctx, at, to)));
        break;
      }
      case LabelKind::L: {
        if (!at.contains(i) || at.contains(i - 1))
          throw DomainError(label_str(label) + " is not a legal move at " +
                            istate_str(at));
        IState to = at;
        to.bits = (to.bits & ~(1u << i)) | (1u << (i - 1));
        out = add_os(out, mul_os(g, gamma_generator(e.ctx, at, to)));
        break;
      }
      case LabelKind::U: {
        std::vector<int> r(e.ctx.n, 0);
        r[i - 1] = 1;
        OSGenerator loop = make_os_generator(e.ctx, at, at, {}, r);
        if (dividing_interval(at, at, r)) break;  // U_i vanishes at this state
        out = add_os(out, mul_os(g, loop));
        break;
      }
      case LabelKind::C: {
        OSGenerator loop =
            make_os_generator(e.ctx, at, at, {i}, std::vector<int>(e.ctx.n, 0));
        out = add_os(out, mul_os(g, loop));
        break;
      }
    }
  }
  return out;
}

OSElement evaluate_path(const AlgebraContext& ctx, IState x,
                        const std::vector<GeneratorLabel>& labels) {
  OSElement e = single_os(idempotent_os(ctx, x));
  for (const auto& l : labels) e = apply_letter(e, l);
  return e;
}

OSElement diff_os_gen(const OSGenerator& g) {
  OSElement out = zero_os(g.ctx);
  for (int i = 1; i <= g.ctx.n; ++i) {
    if (!g.c_contains(i)) continue;
    OSGenerator t = g;
    t.c_bits &= ~(1u << i);
    t.r[i - 1] += 1;
    if (dividing_interval(t.x, t.y, t.r)) continue;
    out.add(t);
  }
  return out;
}

OSElement diff_os(const OSElement& e) {
  OSElement out = zero_os(e.ctx);
  for (const auto& g : e.terms) out = add_os(out, diff_os_gen(g));
  return out;
}

GradingVector grade_os(const OSGenerator& g) {
  int n = g.ctx.n;
  GradingVector gv;
  gv.w_un.assign(2 * n, 0);
  gv.w.assign(n, 0);
  int m = 0;
  Half2 alex = 0;
  for (int i = 1; i <= n; ++i) {
    int v = weight_v(g.x, g.y, i);
    int c = g.c_contains(i) ? 1 : 0;
    Half2 w2 = 2 * g.r[i - 1] + 2 * c + std::abs(v);
    gv.w[i - 1] = w2;
    gv.w_un[2 * (i - 1)] = g.r[i - 1] + c + (v > 0 ? 1 : 0);      // tau_i
    gv.w_un[2 * (i - 1) + 1] = g.r[i - 1] + c + (v < 0 ? 1 : 0);  // beta_i
    if (g.ctx.s_contains(i)) {
      m -= w2;  // -2 * w_i with w stored doubled
      alex -= w2;
    } else {
      alex += w2;
    }
    m += c;
  }
  gv.maslov = m;
  gv.alexander = alex;
  return gv;
}

OSGenerator rho_os(const OSGenerator& g) {
  int n = g.ctx.n;
  OSGenerator out;
  out.ctx = g.ctx;
  out.ctx.s_bits = 0;
  for (int i = 1; i <= n; ++i)
    if (g.ctx.s_contains(i)) out.ctx.s_bits |= 1u << (n + 1 - i);
  out.x = IState{n, 0};
  out.y = IState{n, 0};
  for (int i = 0; i <= n; ++i) {
    if (g.x.contains(i)) out.x.bits |= 1u << (n - i);
    if (g.y.contains(i)) out.y.bits |= 1u << (n - i);
  }
  for (int i = 1; i <= n; ++i)
    if (g.c_contains(i)) out.c_bits |= 1u << (n + 1 - i);
  out.r.assign(g.r.rbegin(), g.r.rend());
  return out;
}

OSGenerator o_os(const OSGenerator& g) {
  OSGenerator out = g;
  out.x = g.y;
  out.y = g.x;
  return out;
}

std::vector<OSGenerator> enumerate_os_basis(const AlgebraContext& ctx, IState x,
                                            IState y,
                                            const std::vector<Half2>& caps) {
  if (x.n != ctx.n || y.n != ctx.n)
    throw ParameterError("idempotent size disagrees with context");
  if (x.k() != ctx.k || y.k() != ctx.k)
    throw ParameterError("idempotent has wrong dot count");
  if (static_cast<int>(caps.size()) != ctx.n)
    throw ParameterError("expected one weight cap per line");
  for (Half2 c : caps)
    if (c < 0) throw ParameterError("weight caps must be nonnegative");
  std::vector<OSGenerator> out;
  if (is_far(x, y)) return out;
  std::vector<int> vabs(ctx.n);
  for (int i = 1; i <= ctx.n; ++i) vabs[i - 1] = std::abs(weight_v(x, y, i));
  OSGenerator work;
  work.ctx = ctx;
  work.x = x;
  work.y = y;
  work.r.assign(ctx.n, 0);
  auto rec = [&](auto&& self, int line) -> void {
    if (line > ctx.n) {
      if (!dividing_interval(x, y, work.r)) out.push_back(work);
      return;
    }
    int c = work.c_contains(line) ? 1 : 0;
    int budget = caps[line - 1] - 2 * c - vabs[line - 1];
    for (int e = 0; 2 * e <= budget; ++e) {
      work.r[line - 1] = e;
      self(self, line + 1);
    }
    work.r[line - 1] = 0;
  };
  std::uint32_t c_bits = 0;
  for (;;) {
    work.c_bits = c_bits;
    rec(rec, 1);
    if (c_bits == ctx.s_bits) break;
    c_bits = (c_bits - ctx.s_bits) & ctx.s_bits;
  }
  return out;
}

std::vector<OSGenerator> enumerate_os_basis(const AlgebraContext& ctx, IState x,
                                            IState y, Half2 cap) {
  return enumerate_os_basis(ctx, x, y, std::vector<Half2>(ctx.n, cap));
}

}  // namespace strands
