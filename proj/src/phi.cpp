#include "strands/phi.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace strands {

namespace {

bool move_legal(const IState& st, const GeneratorLabel& label) {
  switch (label.kind) {
    case LabelKind::R:
      return st.contains(label.index - 1) && !st.contains(label.index);
    case LabelKind::L:
      return st.contains(label.index) && !st.contains(label.index - 1);
    default:
      return true;  // U_i and C_i are loops at every vertex
  }
}

IState moved(const IState& st, const GeneratorLabel& label) {
  IState out = st;
  std::uint32_t lo = 1u << (label.index - 1), hi = 1u << label.index;
  if (label.kind == LabelKind::R) out.bits = (st.bits & ~lo) | hi;
  if (label.kind == LabelKind::L) out.bits = (st.bits & ~hi) | lo;
  return out;
}

StrandsGenerator column_generator(const AlgebraContext& ctx, const IState& x,
                                  int line, int p, int q) {
  std::vector<std::pair<int, int>> pq(static_cast<std::size_t>(ctx.n), {0, 0});
  pq[static_cast<std::size_t>(line - 1)] = {p, q};
  return make_generator(ctx, x, {}, pq);
}

}  // namespace

F2Element phi_label(const AlgebraContext& ctx, const IState& x,
                    const GeneratorLabel& label) {
  if (x.n != ctx.n) throw ParameterError("phi_label: I-state size mismatch");
  int i = label.index;
  if (i < 1 || i > ctx.n)
    throw ParameterError("phi_label: line index out of range");
  bool lo = x.contains(i - 1), hi = x.contains(i);
  F2Element out = zero_element(ctx);
  switch (label.kind) {
    case LabelKind::R:
      if (!lo || hi)
        throw DomainError(label_str(label) + " is not a legal move at " +
                          istate_str(x));
      out.add(column_generator(ctx, x, i, 1, 0));
      break;
    case LabelKind::L:
      if (!hi || lo)
        throw DomainError(label_str(label) + " is not a legal move at " +
                          istate_str(x));
      out.add(column_generator(ctx, x, i, 0, 1));
      break;
    case LabelKind::U:
      if (lo) out.add(column_generator(ctx, x, i, 2, 0));
      if (hi) out.add(column_generator(ctx, x, i, 0, 2));
      break;
    case LabelKind::C:
      if (!ctx.s_contains(i))
        throw ParameterError(label_str(label) + " requires line " +
                             std::to_string(i) + " in S");
      out.add(make_generator(
          ctx, x, {i},
          std::vector<std::pair<int, int>>(static_cast<std::size_t>(ctx.n),
                                           {0, 0})));
      break;
  }
  return out;
}

F2Element phi_basis(const OSGenerator& g) {
  validate_os(g);
  const AlgebraContext& ctx = g.ctx;
  F2Element acc = single(idempotent(ctx, g.x));
  IState state = g.x;
  for (const GeneratorLabel& step : gamma_path(g.x, g.y)) {
    acc = mul(acc, phi_label(ctx, state, step));
    state = moved(state, step);
  }
  for (int i = 1; i <= ctx.n; ++i)
    for (int t = 0; t < g.r[static_cast<std::size_t>(i - 1)]; ++t)
      acc = mul(phi_label(ctx, g.x, {LabelKind::U, i}), acc);
  for (int i = 1; i <= ctx.n; ++i)
    if (g.c_contains(i))
      acc = mul(phi_label(ctx, g.x, {LabelKind::C, i}), acc);
  return acc;
}

F2Element phi_closed_form(const OSGenerator& g) {
  validate_os(g);
  const AlgebraContext& ctx = g.ctx;
  int n = ctx.n;
  std::vector<int> c_lines;
  for (int i = 1; i <= n; ++i)
    if (g.c_contains(i)) c_lines.push_back(i);

  std::vector<std::pair<int, int>> base(static_cast<std::size_t>(n), {0, 0});
  std::vector<int> free_lines;  // uncrossed lines with r > 0: two-term factor
  for (int i = 1; i <= n; ++i) {
    int v = weight_v(g.x, g.y, i);
    int r = g.r[static_cast<std::size_t>(i - 1)];
    if (v > 0)
      base[static_cast<std::size_t>(i - 1)] = {1 + 2 * r, 0};
    else if (v < 0)
      base[static_cast<std::size_t>(i - 1)] = {0, 1 + 2 * r};
    else if (r > 0)
      free_lines.push_back(i);
  }

  F2Element out = zero_element(ctx);
  for (std::uint32_t mask = 0; mask < (1u << free_lines.size()); ++mask) {
    std::vector<std::pair<int, int>> pq = base;
    for (std::size_t t = 0; t < free_lines.size(); ++t) {
      int i = free_lines[t];
      int speed = 2 * g.r[static_cast<std::size_t>(i - 1)];
      pq[static_cast<std::size_t>(i - 1)] =
          ((mask >> t) & 1u) ? std::make_pair(0, speed)
                             : std::make_pair(speed, 0);
    }
    StrandsGenerator cand = make_generator(ctx, g.x, c_lines, pq);
    std::optional<IState> derived = try_validate(cand);
    if (derived && *derived == g.y) out.add(cand);
  }
  return out;
}

F2Element phi_elem(const OSElement& e) {
  F2Element out = zero_element(e.ctx);
  for (const OSGenerator& g : e.terms) out = add(out, phi_basis(g));
  return out;
}

namespace {

// Image of a two-letter (or shorter) word read as a path from `start`;
// nullopt when some move is illegal, i.e. the word is not a path.
std::optional<F2Element> word_image(const AlgebraContext& ctx,
                                    const IState& start,
                                    const std::vector<GeneratorLabel>& word) {
  IState st = start;
  F2Element acc = single(idempotent(ctx, start));
  for (const GeneratorLabel& lab : word) {
    if (!move_legal(st, lab)) return std::nullopt;
    acc = mul(acc, phi_label(ctx, st, lab));
    st = moved(st, lab);
  }
  return acc;
}

std::string word_str(const std::vector<GeneratorLabel>& word) {
  std::string out;
  for (const GeneratorLabel& lab : word) {
    if (!out.empty()) out += ' ';
    out += label_str(lab);
  }
  return out;
}

}  // namespace

PhiReport relation_check(int n, int k, const std::vector<int>& s) {
  AlgebraContext ctx = make_context(n, k, s);
  PhiReport report;

  auto equal_words = [&](const IState& x, std::vector<GeneratorLabel> lhs,
                         std::vector<GeneratorLabel> rhs) {
    std::optional<F2Element> a = word_image(ctx, x, lhs);
    std::optional<F2Element> b = word_image(ctx, x, rhs);
    // A relation instance exists only where both words are paths; dot moves
    // blocked by occupancy contribute no instance (loops compose anywhere).
    if (!a || !b) return;
    ++report.checked;
    if (*a != *b)
      report.failures.push_back("at " + istate_str(x) + ": " + word_str(lhs) +
                                " != " + word_str(rhs));
  };
  auto zero_word = [&](const IState& x, std::vector<GeneratorLabel> word) {
    std::optional<F2Element> a = word_image(ctx, x, word);
    if (!a) return;
    ++report.checked;
    if (!a->is_zero())
      report.failures.push_back("at " + istate_str(x) + ": " + word_str(word) +
                                " != 0");
  };

  std::vector<int> s_lines = ctx.s_members();
  for (const IState& x : enumerate_istates(n, k)) {
    // Loop relations R_i L_i = U_i and L_i R_i = U_i.
    for (int i = 1; i <= n; ++i) {
      equal_words(x, {{LabelKind::R, i}, {LabelKind::L, i}}, {{LabelKind::U, i}});
      equal_words(x, {{LabelKind::L, i}, {LabelKind::R, i}}, {{LabelKind::U, i}});
    }
    // Distant commutation for moves on lines more than one apart.
    for (int i = 1; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j)
        for (LabelKind a : {LabelKind::R, LabelKind::L})
          for (LabelKind b : {LabelKind::R, LabelKind::L})
            equal_words(x, {{a, i}, {b, j}}, {{b, j}, {a, i}});
    // Two-line pass: a dot cannot cross two lines in one stroke.
    for (int i = 1; i < n; ++i) {
      zero_word(x, {{LabelKind::R, i}, {LabelKind::R, i + 1}});
      zero_word(x, {{LabelKind::L, i + 1}, {LabelKind::L, i}});
    }
    // U central against every letter, and U vanishing.
    for (int j = 1; j <= n; ++j) {
      for (int i = 1; i <= n; ++i) {
        equal_words(x, {{LabelKind::R, i}, {LabelKind::U, j}},
                    {{LabelKind::U, j}, {LabelKind::R, i}});
        equal_words(x, {{LabelKind::L, i}, {LabelKind::U, j}},
                    {{LabelKind::U, j}, {LabelKind::L, i}});
        if (i < j)
          equal_words(x, {{LabelKind::U, i}, {LabelKind::U, j}},
                      {{LabelKind::U, j}, {LabelKind::U, i}});
      }
      if (!x.contains(j - 1) && !x.contains(j)) {
        ++report.checked;
        if (!phi_label(ctx, x, {LabelKind::U, j}).is_zero())
          report.failures.push_back("at " + istate_str(x) + ": U_" +
                                    std::to_string(j) + " != 0");
      }
    }
    // C^2 = 0 and C central against every letter.
    for (int i : s_lines) {
      zero_word(x, {{LabelKind::C, i}, {LabelKind::C, i}});
      for (int j = 1; j <= n; ++j) {
        for (LabelKind a : {LabelKind::R, LabelKind::L, LabelKind::U})
          equal_words(x, {{LabelKind::C, i}, {a, j}},
                      {{a, j}, {LabelKind::C, i}});
        if (ctx.s_contains(j))
          equal_words(x, {{LabelKind::C, i}, {LabelKind::C, j}},
                      {{LabelKind::C, j}, {LabelKind::C, i}});
      }
    }
  }
  return report;
}

}  // namespace strands
