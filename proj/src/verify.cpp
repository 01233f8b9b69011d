#include "strands/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strands/algebra.hpp"
#include "strands/f2linalg.hpp"
#include "strands/grading.hpp"
#include "strands/istates.hpp"
#include "strands/osz.hpp"
#include "strands/phi.hpp"
#include "strands/splitting.hpp"
#include "strands/textio.hpp"

namespace strands {

namespace {

Half2 suite_cap(const SuiteOptions& opt, Half2 dflt) {
  return opt.cap2 < 0 ? dflt : opt.cap2;
}

std::string set_str(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "}";
}

std::string ctx_str(const AlgebraContext& ctx) {
  return "(n=" + std::to_string(ctx.n) + ",k=" + std::to_string(ctx.k) +
         ",S=" + set_str(ctx.s_members()) + ") ";
}

std::string weights_str(const std::vector<Half2>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += half2_str(w[i]);
  }
  return out + ")";
}

// Every context with the given n: k ascending, then S as ascending bitmask.
std::vector<AlgebraContext> contexts_for(int n) {
  std::vector<AlgebraContext> out;
  for (int k = 0; k <= n + 1; ++k)
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      std::vector<int> s;
      for (int i = 1; i <= n; ++i)
        if ((m >> (i - 1)) & 1u) s.push_back(i);
      out.push_back(make_context(n, k, s));
    }
  return out;
}

std::vector<AlgebraContext> contexts_upto(int max_n) {
  std::vector<AlgebraContext> out;
  for (int n = 1; n <= max_n; ++n) {
    auto cs = contexts_for(n);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

// Thread-safe sink; failures are sorted at the end so the report is
// deterministic under any job count.
struct Collector {
  std::mutex mu;
  CheckReport rep;

  void add(std::size_t checked, std::vector<std::string> fails) {
    std::lock_guard<std::mutex> lock(mu);
    rep.checked += checked;
    for (auto& f : fails) rep.failures.push_back(std::move(f));
  }
  CheckReport take() {
    std::sort(rep.failures.begin(), rep.failures.end());
    return std::move(rep);
  }
};

bool next_weight(std::vector<Half2>& w, Half2 cap) {
  for (auto& wi : w) {
    if (wi < cap) {
      ++wi;
      return true;
    }
    wi = 0;
  }
  return false;
}

// Per-pair basis tables for one context.
struct ATable {
  std::vector<IState> states;
  std::vector<std::vector<std::vector<StrandsGenerator>>> at;  // [xi][yi]
};
struct BTable {
  std::vector<IState> states;
  std::vector<std::vector<std::vector<OSGenerator>>> at;
};

ATable a_table(const AlgebraContext& ctx, Half2 cap) {
  ATable t;
  t.states = enumerate_istates(ctx.n, ctx.k);
  t.at.resize(t.states.size());
  for (std::size_t xi = 0; xi < t.states.size(); ++xi) {
    t.at[xi].resize(t.states.size());
    for (std::size_t yi = 0; yi < t.states.size(); ++yi)
      t.at[xi][yi] = enumerate_basis(ctx, t.states[xi], t.states[yi], cap);
  }
  return t;
}

BTable b_table(const AlgebraContext& ctx, Half2 cap) {
  BTable t;
  t.states = enumerate_istates(ctx.n, ctx.k);
  t.at.resize(t.states.size());
  for (std::size_t xi = 0; xi < t.states.size(); ++xi) {
    t.at[xi].resize(t.states.size());
    for (std::size_t yi = 0; yi < t.states.size(); ++yi)
      t.at[xi][yi] = enumerate_os_basis(ctx, t.states[xi], t.states[yi], cap);
  }
  return t;
}

bool additive(const GradingVector& a, const GradingVector& b,
              const GradingVector& ab) {
  if (ab.maslov != a.maslov + b.maslov) return false;
  if (ab.alexander != a.alexander + b.alexander) return false;
  for (std::size_t i = 0; i < ab.w.size(); ++i)
    if (ab.w[i] != a.w[i] + b.w[i]) return false;
  for (std::size_t i = 0; i < ab.w_un.size(); ++i)
    if (ab.w_un[i] != a.w_un[i] + b.w_un[i]) return false;
  return true;
}

bool shifts_by_one(const GradingVector& g, const GradingVector& dg) {
  return dg.maslov == g.maslov - 1 && dg.alexander == g.alexander &&
         dg.w == g.w && dg.w_un == g.w_un;
}

// ---------------------------------------------------------------------------
// Shared sweep for the dg-law and grading-law suites.

enum class DgMode { laws, gradings };

void dg_check_a(const AlgebraContext& ctx, const StrandsGenerator& a,
                const StrandsGenerator& b, const StrandsGenerator* c,
                DgMode mode, std::size_t& checked,
                std::vector<std::string>& fails) {
  if (mode == DgMode::laws) {
    if (c == nullptr) {
      ++checked;
      F2Element lhs = diff(mul(single(a), single(b)));
      F2Element rhs = add(mul(diff_gen(a), single(b)), mul(single(a), diff_gen(b)));
      if (lhs != rhs)
        fails.push_back(ctx_str(ctx) + "Leibniz fails for " + format_generator(a) +
                        " * " + format_generator(b));
    } else {
      ++checked;
      auto ab = mul_gen(a, b);
      auto bc = mul_gen(b, *c);
      std::optional<StrandsGenerator> left =
          ab ? mul_gen(*ab, *c) : std::nullopt;
      std::optional<StrandsGenerator> right =
          bc ? mul_gen(a, *bc) : std::nullopt;
      if (left != right)
        fails.push_back(ctx_str(ctx) + "associativity fails for " +
                        format_generator(a) + " * " + format_generator(b) +
                        " * " + format_generator(*c));
    }
    return;
  }
  // gradings mode: products only (per-generator differential checks are done
  // once per generator by the caller).
  if (c == nullptr) {
    auto ab = mul_gen(a, b);
    if (!ab) return;
    ++checked;
    if (!additive(grade(a), grade(b), grade(*ab)))
      fails.push_back(ctx_str(ctx) + "grading not additive for " +
                      format_generator(a) + " * " + format_generator(b));
  }
}

void dg_check_b(const AlgebraContext& ctx, const OSGenerator& a,
                const OSGenerator& b, const OSGenerator* c, DgMode mode,
                std::size_t& checked, std::vector<std::string>& fails) {
  if (mode == DgMode::laws) {
    if (c == nullptr) {
      ++checked;
      OSElement lhs = diff_os(mul_os(a, b));
      OSElement rhs = add_os(mul_os(diff_os_gen(a), single_os(b)),
                             mul_os(single_os(a), diff_os_gen(b)));
      if (lhs != rhs)
        fails.push_back(ctx_str(ctx) + "Leibniz fails for " +
                        format_os_generator(a) + " * " + format_os_generator(b));
    } else {
      ++checked;
      OSElement left = mul_os(mul_os(a, b), single_os(*c));
      OSElement right = mul_os(single_os(a), mul_os(b, *c));
      if (left != right)
        fails.push_back(ctx_str(ctx) + "associativity fails for " +
                        format_os_generator(a) + " * " + format_os_generator(b) +
                        " * " + format_os_generator(*c));
    }
    return;
  }
  if (c == nullptr) {
    OSElement ab = mul_os(a, b);
    if (ab.is_zero()) return;
    ++checked;
    if (!additive(grade_os(a), grade_os(b), grade_os(ab.terms[0])))
      fails.push_back(ctx_str(ctx) + "grading not additive for " +
                      format_os_generator(a) + " * " + format_os_generator(b));
  }
}

void diff_grading_a(const AlgebraContext& ctx, const StrandsGenerator& g,
                    std::size_t& checked, std::vector<std::string>& fails) {
  ++checked;
  GradingVector gv = grade(g);
  for (const auto& t : diff_gen(g).terms)
    if (!shifts_by_one(gv, grade(t))) {
      fails.push_back(ctx_str(ctx) + "differential grading wrong at " +
                      format_generator(g));
      return;
    }
}

void diff_grading_b(const AlgebraContext& ctx, const OSGenerator& g,
                    std::size_t& checked, std::vector<std::string>& fails) {
  ++checked;
  GradingVector gv = grade_os(g);
  for (const auto& t : diff_os_gen(g).terms)
    if (!shifts_by_one(gv, grade_os(t))) {
      fails.push_back(ctx_str(ctx) + "differential grading wrong at " +
                      format_os_generator(g));
      return;
    }
}

// Seeded random composable triples at n = 3. Enumerations are cached per
// (k, S, x, y) so resampling stays cheap.
struct TripleSampler {
  SplitMix64 rng;
  Half2 cap;
  std::vector<std::vector<IState>> states_by_k;
  std::map<std::uint64_t, std::vector<StrandsGenerator>> a_cache;
  std::map<std::uint64_t, std::vector<OSGenerator>> b_cache;

  TripleSampler(std::uint64_t seed, Half2 cap2) : rng(seed), cap(cap2) {
    for (int k = 0; k <= 4; ++k) states_by_k.push_back(enumerate_istates(3, k));
  }

  static std::uint64_t key(int k, std::uint32_t s, std::uint32_t xb,
                           std::uint32_t yb) {
    return (std::uint64_t(k) << 48) | (std::uint64_t(s) << 32) |
           (std::uint64_t(xb) << 16) | yb;
  }

  AlgebraContext random_ctx(int& k, std::uint32_t& smask) {
    k = static_cast<int>(rng.below(5));
    smask = static_cast<std::uint32_t>(rng.below(8));
    std::vector<int> s;
    for (int i = 1; i <= 3; ++i)
      if ((smask >> (i - 1)) & 1u) s.push_back(i);
    return make_context(3, k, s);
  }

  const std::vector<StrandsGenerator>& a_basis(const AlgebraContext& ctx, int k,
                                               std::uint32_t smask,
                                               const IState& x, const IState& y) {
    std::uint64_t kk = key(k, smask, x.bits, y.bits);
    auto it = a_cache.find(kk);
    if (it == a_cache.end())
      it = a_cache.emplace(kk, enumerate_basis(ctx, x, y, cap)).first;
    return it->second;
  }

  const std::vector<OSGenerator>& b_basis(const AlgebraContext& ctx, int k,
                                          std::uint32_t smask, const IState& x,
                                          const IState& y) {
    std::uint64_t kk = key(k, smask, x.bits, y.bits);
    auto it = b_cache.find(kk);
    if (it == b_cache.end())
      it = b_cache.emplace(kk, enumerate_os_basis(ctx, x, y, cap)).first;
    return it->second;
  }

  bool sample_a(AlgebraContext& ctx, StrandsGenerator& a, StrandsGenerator& b,
                StrandsGenerator& c) {
    int k;
    std::uint32_t smask;
    ctx = random_ctx(k, smask);
    const auto& states = states_by_k[k];
    const IState& x = states[rng.below(states.size())];
    const IState& y = states[rng.below(states.size())];
    const IState& z = states[rng.below(states.size())];
    const IState& w = states[rng.below(states.size())];
    const auto& ab = a_basis(ctx, k, smask, x, y);
    const auto& bb = a_basis(ctx, k, smask, y, z);
    const auto& cb = a_basis(ctx, k, smask, z, w);
    if (ab.empty() || bb.empty() || cb.empty()) return false;
    a = ab[rng.below(ab.size())];
    b = bb[rng.below(bb.size())];
    c = cb[rng.below(cb.size())];
    return true;
  }

  bool sample_b(AlgebraContext& ctx, OSGenerator& a, OSGenerator& b,
                OSGenerator& c) {
    int k;
    std::uint32_t smask;
    ctx = random_ctx(k, smask);
    const auto& states = states_by_k[k];
    const IState& x = states[rng.below(states.size())];
    const IState& y = states[rng.below(states.size())];
    const IState& z = states[rng.below(states.size())];
    const IState& w = states[rng.below(states.size())];
    const auto& ab = b_basis(ctx, k, smask, x, y);
    const auto& bb = b_basis(ctx, k, smask, y, z);
    const auto& cb = b_basis(ctx, k, smask, z, w);
    if (ab.empty() || bb.empty() || cb.empty()) return false;
    a = ab[rng.below(ab.size())];
    b = bb[rng.below(bb.size())];
    c = cb[rng.below(cb.size())];
    return true;
  }
};

CheckReport dg_sweep(const SuiteOptions& opt, DgMode mode) {
  Half2 cap = suite_cap(opt, 4);
  Collector col;
  auto ctxs = contexts_upto(std::min(2, opt.max_n));
  parallel_for(ctxs.size(), opt.jobs, [&](std::size_t ci) {
    const AlgebraContext& ctx = ctxs[ci];
    std::size_t checked = 0;
    std::vector<std::string> fails;
    ATable ta = a_table(ctx, cap);
    BTable tb = b_table(ctx, cap);
    const std::size_t ns = ta.states.size();
    if (mode == DgMode::gradings) {
      for (std::size_t xi = 0; xi < ns; ++xi)
        for (std::size_t yi = 0; yi < ns; ++yi) {
          for (const auto& g : ta.at[xi][yi]) diff_grading_a(ctx, g, checked, fails);
          for (const auto& g : tb.at[xi][yi]) diff_grading_b(ctx, g, checked, fails);
        }
    }
    for (std::size_t xi = 0; xi < ns; ++xi)
      for (std::size_t yi = 0; yi < ns; ++yi)
        for (const auto& a : ta.at[xi][yi])
          for (std::size_t zi = 0; zi < ns; ++zi)
            for (const auto& b : ta.at[yi][zi]) {
              dg_check_a(ctx, a, b, nullptr, mode, checked, fails);
              if (mode == DgMode::laws)
                for (std::size_t wi = 0; wi < ns; ++wi)
                  for (const auto& c : ta.at[zi][wi])
                    dg_check_a(ctx, a, b, &c, mode, checked, fails);
            }
    for (std::size_t xi = 0; xi < ns; ++xi)
      for (std::size_t yi = 0; yi < ns; ++yi)
        for (const auto& a : tb.at[xi][yi])
          for (std::size_t zi = 0; zi < ns; ++zi)
            for (const auto& b : tb.at[yi][zi]) {
              dg_check_b(ctx, a, b, nullptr, mode, checked, fails);
              if (mode == DgMode::laws)
                for (std::size_t wi = 0; wi < ns; ++wi)
                  for (const auto& c : tb.at[zi][wi])
                    dg_check_b(ctx, a, b, &c, mode, checked, fails);
            }
    col.add(checked, std::move(fails));
  });

  if (opt.max_n >= 3) {
    TripleSampler smp(opt.seed, cap);
    std::size_t checked = 0;
    std::vector<std::string> fails;
    const std::size_t budget = opt.random_triples * 400;
    std::size_t got = 0;
    for (std::size_t att = 0; got < opt.random_triples && att < budget; ++att) {
      AlgebraContext ctx;
      StrandsGenerator a, b, c;
      if (!smp.sample_a(ctx, a, b, c)) continue;
      ++got;
      if (mode == DgMode::gradings) {
        diff_grading_a(ctx, a, checked, fails);
        diff_grading_a(ctx, b, checked, fails);
        diff_grading_a(ctx, c, checked, fails);
      }
      dg_check_a(ctx, a, b, nullptr, mode, checked, fails);
      dg_check_a(ctx, b, c, nullptr, mode, checked, fails);
      if (mode == DgMode::laws) dg_check_a(ctx, a, b, &c, mode, checked, fails);
    }
    if (got < opt.random_triples)
      fails.push_back("(n=3) could not sample enough random A-side triples");
    got = 0;
    for (std::size_t att = 0; got < opt.random_triples && att < budget; ++att) {
      AlgebraContext ctx;
      OSGenerator a, b, c;
      if (!smp.sample_b(ctx, a, b, c)) continue;
      ++got;
      if (mode == DgMode::gradings) {
        diff_grading_b(ctx, a, checked, fails);
        diff_grading_b(ctx, b, checked, fails);
        diff_grading_b(ctx, c, checked, fails);
      }
      dg_check_b(ctx, a, b, nullptr, mode, checked, fails);
      dg_check_b(ctx, b, c, nullptr, mode, checked, fails);
      if (mode == DgMode::laws) dg_check_b(ctx, a, b, &c, mode, checked, fails);
    }
    if (got < opt.random_triples)
      fails.push_back("(n=3) could not sample enough random B-side triples");
    col.add(checked, std::move(fails));
  }
  return col.take();
}

}  // namespace

// ---------------------------------------------------------------------------

CheckReport check_differential_squared(const SuiteOptions& opt) {
  Half2 cap = suite_cap(opt, 6);
  Collector col;
  struct Piece {
    AlgebraContext ctx;
    IState x, y;
  };
  std::vector<Piece> pieces;
  for (const auto& ctx : contexts_upto(opt.max_n))
    for (const auto& x : enumerate_istates(ctx.n, ctx.k))
      for (const auto& y : enumerate_istates(ctx.n, ctx.k))
        pieces.push_back({ctx, x, y});
  parallel_for(pieces.size(), opt.jobs, [&](std::size_t i) {
    const Piece& pc = pieces[i];
    std::size_t checked = 0;
    std::vector<std::string> fails;
    for (const auto& g : enumerate_basis(pc.ctx, pc.x, pc.y, cap)) {
      ++checked;
      if (!diff(diff_gen(g)).is_zero())
        fails.push_back(ctx_str(pc.ctx) + "dd != 0 at " + format_generator(g));
    }
    for (const auto& g : enumerate_os_basis(pc.ctx, pc.x, pc.y, cap)) {
      ++checked;
      if (!diff_os(diff_os_gen(g)).is_zero())
        fails.push_back(ctx_str(pc.ctx) + "dd != 0 at " + format_os_generator(g));
    }
    col.add(checked, std::move(fails));
  });
  return col.take();
}

CheckReport check_dg_laws(const SuiteOptions& opt) {
  return dg_sweep(opt, DgMode::laws);
}

CheckReport check_grading_laws(const SuiteOptions& opt) {
  return dg_sweep(opt, DgMode::gradings);
}

CheckReport check_group_gradings(const SuiteOptions& opt) {
  Half2 cap = suite_cap(opt, 6);
  Collector col;
  auto ctxs = contexts_upto(opt.max_n);
  parallel_for(ctxs.size(), opt.jobs, [&](std::size_t ci) {
    const AlgebraContext& ctx = ctxs[ci];
    std::size_t checked = 0;
    std::vector<std::string> fails;
    ATable t = a_table(ctx, cap);
    const std::size_t ns = t.states.size();
    std::set<std::vector<int>> classes;
    for (std::size_t xi = 0; xi < ns; ++xi)
      for (std::size_t yi = 0; yi < ns; ++yi)
        for (const auto& g : t.at[xi][yi]) {
          ++checked;
          GradingVector gv = grade(g);
          GPrimeElement gp = deg_prime(g);
          auto th = theta(ctx, gp);
          if (th.first != gv.maslov || th.second.coeff != gv.w_un) {
            fails.push_back(ctx_str(ctx) + "refinement mismatch at " +
                            format_generator(g));
            continue;
          }
          auto ps = psi_refine(th);
          if (ps.first != gv.maslov || ps.second != gv.w)
            fails.push_back(ctx_str(ctx) + "weight collapse mismatch at " +
                            format_generator(g));
          classes.insert(gp.alpha.coeff);
        }
    // Multiplicativity on nonzero products.
    for (std::size_t xi = 0; xi < ns; ++xi)
      for (std::size_t yi = 0; yi < ns; ++yi)
        for (const auto& a : t.at[xi][yi])
          for (std::size_t zi = 0; zi < ns; ++zi)
            for (const auto& b : t.at[yi][zi]) {
              auto ab = mul_gen(a, b);
              if (!ab) continue;
              ++checked;
              if (deg_prime(*ab) != gprime_mul(deg_prime(a), deg_prime(b)))
                fails.push_back(ctx_str(ctx) + "group grading not multiplicative for " +
                                format_generator(a) + " * " + format_generator(b));
            }
    // The linking pairing vanishes on every pair of generator classes.
    std::vector<HomologyClass> cl;
    for (const auto& coeff : classes) cl.push_back(HomologyClass{coeff});
    for (std::size_t i = 0; i < cl.size(); ++i)
      for (std::size_t j = i; j < cl.size(); ++j) {
        ++checked;
        if (linking(cl[i], cl[j]) != 0 || linking(cl[j], cl[i]) != 0)
          fails.push_back(ctx_str(ctx) + "nonzero linking pairing");
      }
    col.add(checked, std::move(fails));
  });
  return col.take();
}

namespace {

// Canonical string key of a factorization (ambient pair fixed by the caller).
std::string factorization_key(const Factorization& f) {
  std::string key;
  for (const auto& [line, r] : f.crossed_exponents)
    key += std::to_string(line) + ":" + std::to_string(r) + ";";
  for (const auto& fac : f.factors) {
    key += "[" + std::to_string(fac.interval.lo) + "," +
           std::to_string(fac.interval.hi) + "]#" +
           std::to_string(static_cast<int>(fac.kind)) + ":" +
           format_generator(fac.local) + "|";
  }
  return key;
}

// Mod-2 multiset reduction: sorted list with equal pairs cancelled.
std::vector<std::string> xor_reduce(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  std::vector<std::string> out;
  for (auto& s : v) {
    if (!out.empty() && out.back() == s)
      out.pop_back();
    else
      out.push_back(std::move(s));
  }
  return out;
}

bool same_factorization(const Factorization& a, const Factorization& b) {
  if (a.x != b.x || a.y != b.y) return false;
  if (a.crossed_exponents != b.crossed_exponents) return false;
  if (a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    if (!(a.factors[i].interval == b.factors[i].interval)) return false;
    if (a.factors[i].kind != b.factors[i].kind) return false;
    if (a.factors[i].local != b.factors[i].local) return false;
  }
  return true;
}

}  // namespace

CheckReport check_splitting(const SuiteOptions& opt) {
  Half2 cap = suite_cap(opt, 6);
  Collector col;
  struct Piece {
    AlgebraContext ctx;
    IState x, y;
  };
  std::vector<Piece> pieces;
  for (int n = 1; n <= opt.max_n; ++n)
    for (int k = 0; k <= n + 1; ++k) {
      AlgebraContext ctx = make_context(n, k, {});
      for (const auto& x : enumerate_istates(n, k))
        for (const auto& y : enumerate_istates(n, k))
          pieces.push_back({ctx, x, y});
    }
  parallel_for(pieces.size(), opt.jobs, [&](std::size_t i) {
    const Piece& pc = pieces[i];
    std::size_t checked = 0;
    std::vector<std::string> fails;
    std::string where = ctx_str(pc.ctx) + "x=" + istate_str(pc.x) +
                        " y=" + istate_str(pc.y) + " ";

    for (const auto& g : enumerate_basis(pc.ctx, pc.x, pc.y, cap)) {
      ++checked;
      Factorization f = split_psi(g);
      if (unsplit_phi(f) != g) {
        fails.push_back(where + "unsplit(split(g)) != g at " + format_generator(g));
        continue;
      }
      GradingVector gv = grade(g);
      int msum = 0;
      for (const auto& fac : f.factors) msum += grade(fac.local).maslov;
      if (gv.maslov != msum)
        fails.push_back(where + "Maslov not additive across factors at " +
                        format_generator(g));
      for (const auto& [line, r] : f.crossed_exponents)
        if (gv.w[line - 1] != 2 * r + 1)
          fails.push_back(where + "crossed weight mismatch at " +
                          format_generator(g));
      // Chain map: splitting the differential equals the per-factor local
      // differential of the splitting.
      std::vector<std::string> lhs, rhs;
      for (const auto& t : diff_gen(g).terms)
        lhs.push_back(factorization_key(split_psi(t)));
      for (std::size_t fi = 0; fi < f.factors.size(); ++fi)
        for (const auto& lt : diff_gen(f.factors[fi].local).terms) {
          Factorization f2 = f;
          f2.factors[fi].local = lt;
          rhs.push_back(factorization_key(f2));
        }
      if (xor_reduce(std::move(lhs)) != xor_reduce(std::move(rhs)))
        fails.push_back(where + "splitting does not intertwine the differential at " +
                        format_generator(g));
    }

    // Reverse direction: every well-formed factorization reassembles and
    // splits back to itself.
    if (!is_far(pc.x, pc.y)) {
      LineClassification cls = classify_lines(pc.x, pc.y);
      struct Slot {
        Interval itv;
        IntervalKind kind;
        std::vector<StrandsGenerator> opts;
      };
      std::vector<Slot> slots;
      auto add_slot = [&](const Interval& itv, IntervalKind kind) {
        AlgebraContext lc = local_context(kind, itv.length());
        IState frame = local_frame(kind, itv.length());
        slots.push_back({itv, kind, enumerate_basis(lc, frame, frame, cap)});
      };
      if (cls.two_faced) {
        add_slot(Interval{1, pc.ctx.n}, IntervalKind::two_faced);
      } else {
        if (cls.left_edge) add_slot(*cls.left_edge, IntervalKind::left_edge);
        for (const auto& itv : cls.generating)
          add_slot(itv, IntervalKind::generating);
        if (cls.right_edge) add_slot(*cls.right_edge, IntervalKind::right_edge);
      }
      const int rmax = (cap - 1) / 2;
      std::vector<int> rvec(cls.crossed.size(), 0);
      std::vector<std::size_t> pick(slots.size(), 0);
      bool more = true;
      while (more) {
        bool feasible = true;
        for (const auto& sl : slots)
          if (sl.opts.empty()) feasible = false;
        if (feasible) {
          Factorization f;
          f.ctx = pc.ctx;
          f.x = pc.x;
          f.y = pc.y;
          for (std::size_t t = 0; t < cls.crossed.size(); ++t)
            f.crossed_exponents[cls.crossed[t]] = rvec[t];
          for (std::size_t t = 0; t < slots.size(); ++t)
            f.factors.push_back(
                {slots[t].itv, slots[t].kind, slots[t].opts[pick[t]]});
          ++checked;
          StrandsGenerator g = unsplit_phi(f);
          if (!same_factorization(split_psi(g), f))
            fails.push_back(where + "split(unsplit(f)) != f at " +
                            format_generator(g));
        }
        // Odometer over crossed exponents, then slot choices.
        more = false;
        for (std::size_t t = 0; t < rvec.size(); ++t) {
          if (rvec[t] < rmax) {
            ++rvec[t];
            more = true;
            break;
          }
          rvec[t] = 0;
        }
        if (!more) {
          for (std::size_t t = 0; t < slots.size(); ++t) {
            if (!slots[t].opts.empty() && pick[t] + 1 < slots[t].opts.size()) {
              ++pick[t];
              more = true;
              break;
            }
            pick[t] = 0;
          }
        }
        if (slots.empty() && rvec.empty()) more = false;
      }
    }
    col.add(checked, std::move(fails));
  });
  return col.take();
}

CheckReport check_local_homology(const SuiteOptions& opt) {
  const int rmax = opt.cap2 < 0 ? 3 : opt.cap2 / 2;
  const int lmax = std::min(3, opt.max_n);
  Collector col;
  struct Task {
    IntervalKind kind;
    int l;
    std::vector<int> r;
  };
  std::vector<Task> tasks;
  for (IntervalKind kind :
       {IntervalKind::generating, IntervalKind::left_edge,
        IntervalKind::right_edge, IntervalKind::two_faced})
    for (int l = 1; l <= lmax; ++l) {
      std::vector<int> r(l, 0);
      for (;;) {
        tasks.push_back({kind, l, r});
        bool more = false;
        for (int t = 0; t < l; ++t) {
          if (r[t] < rmax) {
            ++r[t];
            more = true;
            break;
          }
          r[t] = 0;
        }
        if (!more) break;
      }
    }
  parallel_for(tasks.size(), opt.jobs, [&](std::size_t i) {
    const Task& tk = tasks[i];
    std::size_t checked = 1;
    std::vector<std::string> fails;
    std::string where = "kind=" + std::to_string(static_cast<int>(tk.kind)) +
                        " l=" + std::to_string(tk.l) + " r=(";
    for (int t = 0; t < tk.l; ++t)
      where += (t ? "," : "") + std::to_string(tk.r[t]);
    where += ") ";
    AlgebraContext ctx = local_context(tk.kind, tk.l);
    IState frame = local_frame(tk.kind, tk.l);
    std::vector<Half2> w(tk.l);
    for (int t = 0; t < tk.l; ++t) w[t] = 2 * tk.r[t];
    GradedPiece pc = graded_piece(PieceAlgebra::A, ctx, frame, frame, w);
    std::map<int, std::size_t> dims = homology_dims(pc);
    bool some_zero = false;
    for (int t = 0; t < tk.l; ++t) some_zero = some_zero || tk.r[t] == 0;
    std::map<int, std::size_t> expected;
    if (tk.kind != IntervalKind::generating || some_zero) expected[0] = 1;
    if (dims != expected) {
      fails.push_back(where + "homology dimensions differ from the closed form");
      col.add(checked, std::move(fails));
      return;
    }
    if (!expected.empty()) {
      ++checked;
      F2Element cyc = max_maslov_cycle(tk.kind, tk.l, tk.r);
      if (cyc.is_zero() || !diff(cyc).is_zero()) {
        fails.push_back(where + "canonical cycle is missing or not closed");
      } else {
        const auto& level0 = pc.a_levels.at(0);
        F2Vec coords = f2vec_zero(level0.size());
        bool inside = true;
        for (const auto& t : cyc.terms) {
          auto it = std::find(level0.begin(), level0.end(), t);
          if (it == level0.end()) {
            inside = false;
            break;
          }
          f2vec_flip(coords, static_cast<std::size_t>(it - level0.begin()));
        }
        F2Matrix d_in(level0.size(), 0);
        if (auto bit = pc.boundaries.find(1); bit != pc.boundaries.end())
          d_in = bit->second;
        if (!inside)
          fails.push_back(where + "canonical cycle escapes the graded piece");
        else if (solve(d_in, coords).found)
          fails.push_back(where + "canonical cycle is a boundary");
      }
    }
    col.add(checked, std::move(fails));
  });
  return col.take();
}

CheckReport check_full_homology(const SuiteOptions& opt) {
  Half2 cap = suite_cap(opt, 6);
  Collector col;
  struct Piece {
    AlgebraContext ctx;
    IState x, y;
    std::vector<Half2> w;
  };
  std::vector<Piece> pieces;
  for (int n = 1; n <= opt.max_n; ++n)
    for (int k = 0; k <= n + 1; ++k) {
      AlgebraContext ctx = make_context(n, k, {});
      for (const auto& x : enumerate_istates(n, k))
        for (const auto& y : enumerate_istates(n, k)) {
          std::vector<Half2> w(n, 0);
          do {
            pieces.push_back({ctx, x, y, w});
          } while (next_weight(w, cap));
        }
    }
  parallel_for(pieces.size(), opt.jobs, [&](std::size_t i) {
    const Piece& pc = pieces[i];
    std::size_t checked = 1;
    std::vector<std::string> fails;
    GradedPiece gp = graded_piece(PieceAlgebra::A, pc.ctx, pc.x, pc.y, pc.w);
    if (homology_dims(gp) != predicted_dims(pc.ctx, pc.x, pc.y, pc.w))
      fails.push_back(ctx_str(pc.ctx) + "x=" + istate_str(pc.x) +
                      " y=" + istate_str(pc.y) + " w=" + weights_str(pc.w) +
                      " homology differs from the predicted count");
    col.add(checked, std::move(fails));
  });
  return col.take();
}

CheckReport check_quasi_iso(const SuiteOptions& opt) {
  Half2 cap = suite_cap(opt, 4);
  CheckReport rep;
  auto run = [&](int n, int k, const std::vector<int>& s) {
    CheckReport qc = quasi_iso_check(n, k, s, cap, opt.jobs);
    rep.checked += qc.checked;
    std::string prefix = ctx_str(make_context(n, k, s));
    for (auto& f : qc.failures) rep.failures.push_back(prefix + f);
  };
  for (int n = 1; n <= std::min(2, opt.max_n); ++n)
    for (int k = 0; k <= n + 1; ++k)
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        std::vector<int> s;
        for (int i = 1; i <= n; ++i)
          if ((m >> (i - 1)) & 1u) s.push_back(i);
        run(n, k, s);
      }
  if (opt.max_n >= 3)
    for (int k = 0; k <= 4; ++k)
      for (const auto& s :
           std::vector<std::vector<int>>{{}, {2}, {1, 2, 3}})
        run(3, k, s);
  std::sort(rep.failures.begin(), rep.failures.end());
  return rep;
}

CheckReport check_presentation(const SuiteOptions& opt) {
  Half2 cap = suite_cap(opt, 4);
  Collector col;
  auto ctxs = contexts_upto(opt.max_n);
  parallel_for(ctxs.size(), opt.jobs, [&](std::size_t ci) {
    const AlgebraContext& ctx = ctxs[ci];
    std::size_t checked = 0;
    std::vector<std::string> fails;
    // Relation instances map to zero/equality.
    CheckReport rel = relation_check(ctx.n, ctx.k, ctx.s_members());
    checked += rel.checked;
    for (auto& f : rel.failures) fails.push_back(ctx_str(ctx) + f);
    // Products are intertwined.
    BTable tb = b_table(ctx, cap);
    const std::size_t ns = tb.states.size();
    for (std::size_t xi = 0; xi < ns; ++xi)
      for (std::size_t yi = 0; yi < ns; ++yi)
        for (const auto& a : tb.at[xi][yi])
          for (std::size_t zi = 0; zi < ns; ++zi)
            for (const auto& b : tb.at[yi][zi]) {
              ++checked;
              if (phi_elem(mul_os(a, b)) != mul(phi_basis(a), phi_basis(b)))
                fails.push_back(ctx_str(ctx) + "morphism not multiplicative for " +
                                format_os_generator(a) + " * " +
                                format_os_generator(b));
            }
    // Injectivity per graded piece.
    for (std::size_t xi = 0; xi < ns; ++xi)
      for (std::size_t yi = 0; yi < ns; ++yi) {
        if (is_far(tb.states[xi], tb.states[yi])) continue;
        std::vector<Half2> w(ctx.n, 0);
        do {
          GradedPiece pb = graded_piece(PieceAlgebra::B, ctx, tb.states[xi],
                                        tb.states[yi], w);
          if (pb.b_levels.empty()) continue;
          GradedPiece pa = graded_piece(PieceAlgebra::A, ctx, tb.states[xi],
                                        tb.states[yi], w);
          for (const auto& [m, bgens] : pb.b_levels) {
            ++checked;
            auto ait = pa.a_levels.find(m);
            if (ait == pa.a_levels.end()) {
              fails.push_back(ctx_str(ctx) + "image level missing at x=" +
                              istate_str(tb.states[xi]) + " y=" +
                              istate_str(tb.states[yi]) + " w=" + weights_str(w));
              continue;
            }
            std::map<StrandsGenerator, std::size_t> index;
            for (std::size_t t = 0; t < ait->second.size(); ++t)
              index.emplace(ait->second[t], t);
            F2Matrix mat(ait->second.size(), bgens.size());
            bool inside = true;
            for (std::size_t c = 0; c < bgens.size(); ++c)
              for (const auto& term : phi_basis(bgens[c]).terms) {
                auto it = index.find(term);
                if (it == index.end()) {
                  inside = false;
                  break;
                }
                mat.flip(it->second, c);
              }
            if (!inside || rank(mat) != bgens.size())
              fails.push_back(ctx_str(ctx) + "morphism not injective at x=" +
                              istate_str(tb.states[xi]) + " y=" +
                              istate_str(tb.states[yi]) + " w=" + weights_str(w) +
                              " m=" + std::to_string(m));
          }
        } while (next_weight(w, cap));
      }
    col.add(checked, std::move(fails));
  });
  return col.take();
}

namespace {

F2Element elem_rho(const F2Element& e) {
  std::vector<int> s_rev;
  for (int i : e.ctx.s_members()) s_rev.push_back(e.ctx.n + 1 - i);
  std::sort(s_rev.begin(), s_rev.end());
  F2Element out = zero_element(make_context(e.ctx.n, e.ctx.k, s_rev));
  for (const auto& t : e.terms) out.add(rho(t));
  return out;
}

F2Element elem_o(const F2Element& e) {
  F2Element out = zero_element(e.ctx);
  for (const auto& t : e.terms) out.add(o_sym(t));
  return out;
}

}  // namespace

CheckReport check_symmetries(const SuiteOptions& opt) {
  Half2 cap = suite_cap(opt, 4);
  Collector col;
  auto ctxs = contexts_upto(opt.max_n);
  parallel_for(ctxs.size(), opt.jobs, [&](std::size_t ci) {
    const AlgebraContext& ctx = ctxs[ci];
    std::size_t checked = 0;
    std::vector<std::string> fails;
    for (const auto& x : enumerate_istates(ctx.n, ctx.k))
      for (const auto& y : enumerate_istates(ctx.n, ctx.k)) {
        for (const auto& g : enumerate_basis(ctx, x, y, cap)) {
          ++checked;
          if (rho(rho(g)) != g || o_sym(o_sym(g)) != g ||
              rho(o_sym(g)) != o_sym(rho(g)))
            fails.push_back(ctx_str(ctx) + "involution law fails at " +
                            format_generator(g));
        }
        for (const auto& b : enumerate_os_basis(ctx, x, y, cap)) {
          ++checked;
          if (rho_os(rho_os(b)) != b || o_os(o_os(b)) != b ||
              rho_os(o_os(b)) != o_os(rho_os(b))) {
            fails.push_back(ctx_str(ctx) + "involution law fails at " +
                            format_os_generator(b));
            continue;
          }
          if (elem_rho(phi_basis(b)) != phi_basis(rho_os(b)))
            fails.push_back(ctx_str(ctx) + "index reversal not intertwined at " +
                            format_os_generator(b));
          if (elem_o(phi_basis(b)) != phi_basis(o_os(b)))
            fails.push_back(ctx_str(ctx) + "opposite involution not intertwined at " +
                            format_os_generator(b));
        }
      }
    col.add(checked, std::move(fails));
  });
  return col.take();
}

CheckReport check_closed_form(const SuiteOptions& opt) {
  Half2 cap = suite_cap(opt, 6);
  Collector col;
  auto ctxs = contexts_upto(opt.max_n);
  parallel_for(ctxs.size(), opt.jobs, [&](std::size_t ci) {
    const AlgebraContext& ctx = ctxs[ci];
    std::size_t checked = 0;
    std::vector<std::string> fails;
    for (const auto& x : enumerate_istates(ctx.n, ctx.k))
      for (const auto& y : enumerate_istates(ctx.n, ctx.k)) {
        for (const auto& b : enumerate_os_basis(ctx, x, y, cap)) {
          ++checked;
          if (phi_basis(b) != phi_closed_form(b))
            fails.push_back(ctx_str(ctx) + "letter path and closed form differ at " +
                            format_os_generator(b));
        }
        if (!is_far(x, y)) {
          ++checked;
          if (phi_basis(gamma_generator(ctx, x, y)) !=
              single(g_min(ctx, x, y)))
            fails.push_back(ctx_str(ctx) + "canonical path image differs from the " +
                            "minimal generator at x=" + istate_str(x) +
                            " y=" + istate_str(y));
        }
      }
    col.add(checked, std::move(fails));
  });
  return col.take();
}

CheckReport check_roundtrip(const SuiteOptions& opt) {
  Half2 cap = suite_cap(opt, 6);
  Collector col;
  auto ctxs = contexts_upto(opt.max_n);
  parallel_for(ctxs.size(), opt.jobs, [&](std::size_t ci) {
    const AlgebraContext& ctx = ctxs[ci];
    std::size_t checked = 0;
    std::vector<std::string> fails;
    for (const auto& x : enumerate_istates(ctx.n, ctx.k))
      for (const auto& y : enumerate_istates(ctx.n, ctx.k)) {
        F2Element asum = zero_element(ctx);
        for (const auto& g : enumerate_basis(ctx, x, y, cap)) {
          ++checked;
          F2Element e = single(g);
          if (parse_element(format_element(e), ctx) != e)
            fails.push_back(ctx_str(ctx) + "round-trip fails at " +
                            format_generator(g));
          asum.add(g);
        }
        if (!asum.is_zero()) {
          ++checked;
          if (parse_element(format_element(asum), ctx) != asum)
            fails.push_back(ctx_str(ctx) + "sum round-trip fails at x=" +
                            istate_str(x) + " y=" + istate_str(y));
        }
        OSElement bsum = zero_os(ctx);
        for (const auto& b : enumerate_os_basis(ctx, x, y, cap)) {
          ++checked;
          OSElement e = single_os(b);
          if (parse_os_element(format_os_element(e), ctx) != e)
            fails.push_back(ctx_str(ctx) + "round-trip fails at " +
                            format_os_generator(b));
          bsum.add(b);
        }
        if (!bsum.is_zero()) {
          ++checked;
          if (parse_os_element(format_os_element(bsum), ctx) != bsum)
            fails.push_back(ctx_str(ctx) + "sum round-trip fails at x=" +
                            istate_str(x) + " y=" + istate_str(y));
        }
      }
    col.add(checked, std::move(fails));
  });
  return col.take();
}

// ---------------------------------------------------------------------------

namespace {

struct SuiteEntry {
  const char* name;
  CheckReport (*fn)(const SuiteOptions&);
};

constexpr SuiteEntry kSuites[] = {
    {"dsquared", check_differential_squared},
    {"dg-laws", check_dg_laws},
    {"gradings", check_grading_laws},
    {"grading-groups", check_group_gradings},
    {"splitting", check_splitting},
    {"local-homology", check_local_homology},
    {"full-homology", check_full_homology},
    {"quasi-iso", check_quasi_iso},
    {"presentation", check_presentation},
    {"symmetries", check_symmetries},
    {"closed-form", check_closed_form},
    {"roundtrip", check_roundtrip},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : kSuites) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const SuiteOptions& opt) {
  std::vector<std::string> expanded;
  for (const auto& nm : names) {
    if (nm == "all") {
      for (const auto& e : kSuites) expanded.emplace_back(e.name);
      continue;
    }
    expanded.push_back(nm);
  }
  std::vector<SuiteResult> out;
  for (const auto& nm : expanded) {
    const SuiteEntry* entry = nullptr;
    for (const auto& e : kSuites)
      if (nm == e.name) entry = &e;
    if (entry == nullptr) throw ParameterError("unknown suite: " + nm);
    auto start = std::chrono::steady_clock::now();
    SuiteResult res;
    res.name = nm;
    res.report = entry->fn(opt);
    res.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace strands
