#include "strands/textio.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

namespace strands {

std::string half2_str(Half2 v) {
  if (v % 2 == 0) return std::to_string(v / 2);
  return std::to_string(v) + "/2";
}

// ---------------------------------------------------------------------------
// Formatting

std::string format_generator(const StrandsGenerator& g) {
  bool idem = g.c_bits == 0;
  for (int i = 1; idem && i <= g.ctx.n; ++i) idem = g.p[i] == 0 && g.q[i] == 0;
  if (idem) return "J" + istate_str(g.x);
  std::string out;
  for (int i = 1; i <= g.ctx.n; ++i) {
    if (!g.c_contains(i)) continue;
    if (!out.empty()) out += ' ';
    out += 'C';
    out += std::to_string(i);
  }
  for (int i = 1; i <= g.ctx.n; ++i) {
    if (g.p[i] == 0 && g.q[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += '[' + std::to_string(g.p[i]) + '/' + std::to_string(g.q[i]) + "]_" +
           std::to_string(i);
  }
  return out + " @ " + istate_str(g.x);
}

std::string format_element(const F2Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& g : e.terms) {
    if (!out.empty()) out += " + ";
    out += format_generator(g);
  }
  return out;
}

std::string format_os_generator(const OSGenerator& g) {
  bool idem = g.x == g.y && g.c_bits == 0;
  for (int i = 1; idem && i <= g.ctx.n; ++i) idem = g.r[i - 1] == 0;
  if (idem) return "I" + istate_str(g.x);
  std::string out;
  for (int i = 1; i <= g.ctx.n; ++i) {
    if (g.r[i - 1] == 0) continue;
    if (!out.empty()) out += ' ';
    out += 'U';
    out += std::to_string(i);
    if (g.r[i - 1] > 1) out += '^' + std::to_string(g.r[i - 1]);
  }
  for (int i = 1; i <= g.ctx.n; ++i) {
    if (!g.c_contains(i)) continue;
    if (!out.empty()) out += ' ';
    out += 'C';
    out += std::to_string(i);
  }
  if (!out.empty()) out += ' ';
  return out + "@ " + istate_str(g.x) + " -> " + istate_str(g.y);
}

std::string format_os_element(const OSElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& g : e.terms) {
    if (!out.empty()) out += " + ";
    out += format_os_generator(g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  explicit Scanner(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  bool try_consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c, const std::string& where) {
    if (!try_consume(c))
      throw GrammarError(pos, std::string("expected '") + c + "' " + where);
  }
  int number() {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw GrammarError(pos, "expected a number");
    std::size_t start = pos;
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
      if (v > 1000000) throw GrammarError(start, "number out of range");
    }
    return static_cast<int>(v);
  }
  // Members of a brace set; the opening '{' is already consumed.
  std::vector<int> set_body() {
    std::vector<int> out;
    skip_ws();
    if (try_consume('}')) return out;
    out.push_back(number());
    skip_ws();
    while (try_consume(',')) {
      out.push_back(number());
      skip_ws();
    }
    expect('}', "to close the set");
    return out;
  }
  IState istate(int n) {
    skip_ws();
    expect('{', "to open an idempotent set");
    return make_istate(n, set_body());
  }
};

StrandsGenerator parse_a_term(Scanner& sc, const AlgebraContext& ctx,
                              const std::optional<IState>& anchor) {
  sc.skip_ws();
  if (sc.eof()) throw GrammarError(sc.pos, "expected a term");
  if (sc.try_consume('J')) {
    StrandsGenerator g = idempotent(ctx, sc.istate(ctx.n));
    validate_generator(g);
    return g;
  }
  std::vector<int> cs;
  std::vector<std::pair<int, int>> pq(ctx.n, {0, 0});
  std::vector<bool> seen(ctx.n + 1, false);
  bool any = false;
  for (;;) {
    sc.skip_ws();
    if (sc.peek() == 'C') {
      std::size_t at = sc.pos;
      ++sc.pos;
      int i = sc.number();
      for (int prev : cs)
        if (prev == i) throw GrammarError(at, "duplicate C letter");
      cs.push_back(i);
      any = true;
    } else if (sc.peek() == '[') {
      std::size_t at = sc.pos;
      ++sc.pos;
      int p = sc.number();
      sc.skip_ws();
      sc.expect('/', "between the column entries");
      int q = sc.number();
      sc.skip_ws();
      sc.expect(']', "to close the column");
      sc.expect('_', "before the line index");
      int i = sc.number();
      if (i < 1 || i > ctx.n)
        throw GrammarError(at, "column line index outside [1,n]");
      if (seen[i])
        throw GrammarError(at,
                           "duplicate column for line " + std::to_string(i));
      seen[i] = true;
      pq[i - 1] = {p, q};
      any = true;
    } else {
      break;
    }
  }
  sc.skip_ws();
  IState x;
  if (sc.try_consume('@')) {
    x = sc.istate(ctx.n);
  } else if (anchor) {
    x = *anchor;
  } else {
    throw GrammarError(sc.pos, any ? "missing '@ {...}' idempotent clause"
                                   : "expected a term");
  }
  StrandsGenerator g = make_generator(ctx, x, cs, pq);
  validate_generator(g);
  return g;
}

OSGenerator parse_b_term(Scanner& sc, const AlgebraContext& ctx,
                         const std::optional<IState>& ax,
                         const std::optional<IState>& ay) {
  sc.skip_ws();
  if (sc.eof()) throw GrammarError(sc.pos, "expected a term");
  if (sc.try_consume('I')) {
    OSGenerator g = idempotent_os(ctx, sc.istate(ctx.n));
    validate_os(g);
    return g;
  }
  std::vector<int> r(ctx.n, 0);
  std::vector<int> cs;
  bool any = false;
  for (;;) {
    sc.skip_ws();
    if (sc.peek() == 'U') {
      std::size_t at = sc.pos;
      ++sc.pos;
      int i = sc.number();
      if (i < 1 || i > ctx.n) throw GrammarError(at, "U index outside [1,n]");
      int e = 1;
      sc.skip_ws();
      if (sc.try_consume('^')) e = sc.number();
      r[i - 1] += e;
      any = true;
    } else if (sc.peek() == 'C') {
      std::size_t at = sc.pos;
      ++sc.pos;
      int i = sc.number();
      for (int prev : cs)
        if (prev == i) throw GrammarError(at, "duplicate C letter");
      cs.push_back(i);
      any = true;
    } else {
      break;
    }
  }
  sc.skip_ws();
  IState x, y;
  if (sc.try_consume('@')) {
    x = sc.istate(ctx.n);
    sc.skip_ws();
    sc.expect('-', "in the '->' arrow");
    sc.expect('>', "in the '->' arrow");
    y = sc.istate(ctx.n);
  } else if (ax && ay) {
    x = *ax;
    y = *ay;
  } else {
    throw GrammarError(sc.pos,
                       any ? "missing '@ {...} -> {...}' idempotent clause"
                           : "expected a term");
  }
  OSGenerator g = make_os_generator(ctx, x, y, cs, r);
  validate_os(g);
  return g;
}

// Shared "term (+ term)*" driver; Term parses one summand.
template <typename Elem, typename Term>
Elem parse_sum(const std::string& text, Elem zero, Term term) {
  Scanner sc(text);
  sc.skip_ws();
  if (sc.eof()) throw GrammarError(sc.pos, "empty element");
  if (sc.peek() == '0') {
    ++sc.pos;
    sc.skip_ws();
    if (!sc.eof()) throw GrammarError(sc.pos, "unexpected text after '0'");
    return zero;
  }
  Elem out = zero;
  for (;;) {
    out.add(term(sc));
    sc.skip_ws();
    if (sc.eof()) break;
    sc.expect('+', "between terms");
  }
  return out;
}

}  // namespace

F2Element parse_element(const std::string& text, const AlgebraContext& ctx,
                        std::optional<IState> x) {
  return parse_sum(text, zero_element(ctx), [&](Scanner& sc) {
    return parse_a_term(sc, ctx, x);
  });
}

OSElement parse_os_element(const std::string& text, const AlgebraContext& ctx,
                           std::optional<IState> x, std::optional<IState> y) {
  return parse_sum(text, zero_os(ctx), [&](Scanner& sc) {
    return parse_b_term(sc, ctx, x, y);
  });
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json context_to_json(const AlgebraContext& ctx) {
  return {{"n", ctx.n}, {"k", ctx.k}, {"s", ctx.s_members()}};
}

nlohmann::json generator_to_json(const StrandsGenerator& g) {
  std::vector<int> cs;
  for (int i = 1; i <= g.ctx.n; ++i)
    if (g.c_contains(i)) cs.push_back(i);
  nlohmann::json pq = nlohmann::json::array();
  for (int i = 1; i <= g.ctx.n; ++i)
    pq.push_back(nlohmann::json::array({g.p[i], g.q[i]}));
  return {{"x", g.x.members()}, {"c", cs}, {"pq", pq}};
}

nlohmann::json os_generator_to_json(const OSGenerator& g) {
  std::vector<int> cs;
  for (int i = 1; i <= g.ctx.n; ++i)
    if (g.c_contains(i)) cs.push_back(i);
  return {{"x", g.x.members()},
          {"y", g.y.members()},
          {"c", cs},
          {"r", g.r}};
}

nlohmann::json element_to_json(const F2Element& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& g : e.terms) terms.push_back(generator_to_json(g));
  return {{"ctx", context_to_json(e.ctx)}, {"terms", terms}};
}

nlohmann::json os_element_to_json(const OSElement& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& g : e.terms) terms.push_back(os_generator_to_json(g));
  return {{"ctx", context_to_json(e.ctx)}, {"terms", terms}};
}

// ---------------------------------------------------------------------------
// ASCII picture

namespace {

// A run of `speed` slanted strand segments with '>' wrap marks between the
// passes around the cylinder.
std::string slant_run(int speed, char slant) {
  std::string out;
  for (int t = 0; t < speed; ++t) {
    if (t) out += '>';
    out += slant;
  }
  return out;
}

constexpr const char* kDashes = "- - -";

}  // namespace

std::string render_ascii(const StrandsGenerator& g) {
  validate_generator(g);
  const int n = g.ctx.n;
  // Rows from the top: the upper segment lane z_{n+1}^-, then per circle i
  // (descending) the z_i^+ lane, an optional C_i loop row, and the z_i^- lane,
  // ending with the lower segment lane z_0^+. A dot on matching j idles (and
  // draws a dashed strand on each of its prongs z_j^+ and z_{j+1}^-) exactly
  // when neither prong launches a moving strand.
  std::vector<std::pair<std::string, std::string>> rows;
  auto idle = [&](int j) {
    return g.x.contains(j) && g.q[j] == 0 && g.p[j + 1] == 0;
  };
  rows.emplace_back("z" + std::to_string(n + 1) + "-",
                    idle(n) ? kDashes : "");
  for (int i = n; i >= 1; --i) {
    rows.emplace_back("z" + std::to_string(i) + "+",
                      g.q[i] > 0 ? slant_run(g.q[i], '\\')
                                 : (idle(i) ? kDashes : ""));
    if (g.c_contains(i)) rows.emplace_back("C" + std::to_string(i), "O");
    rows.emplace_back("z" + std::to_string(i) + "-",
                      g.p[i] > 0 ? slant_run(g.p[i], '/')
                                 : (idle(i - 1) ? kDashes : ""));
  }
  rows.emplace_back("z0+", idle(0) ? kDashes : "");

  std::size_t width = 0;
  for (const auto& [label, body] : rows) width = std::max(width, label.size());
  std::string out;
  for (const auto& [label, body] : rows) {
    out += std::string(width - label.size(), ' ') + label + " |";
    if (!body.empty()) out += ' ' + body;
    out += '\n';
  }
  return out;
}

}  // namespace strands
