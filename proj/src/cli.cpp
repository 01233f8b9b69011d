#include "strands/cli.hpp"

#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "strands/algebra.hpp"
#include "strands/istates.hpp"
#include "strands/osz.hpp"
#include "strands/phi.hpp"
#include "strands/splitting.hpp"
#include "strands/textio.hpp"
#include "strands/util.hpp"
#include "strands/verify.hpp"

namespace strands {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string tok = text.substr(pos, comma - pos);
    std::size_t a = tok.find_first_not_of(" \t");
    if (a != std::string::npos) {
      std::size_t b = tok.find_last_not_of(" \t");
      tok = tok.substr(a, b - a + 1);
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw ParameterError("bad integer list entry: '" + tok + "'");
      }
      if (used != tok.size())
        throw ParameterError("bad integer list entry: '" + tok + "'");
      out.push_back(value);
    }
    pos = comma + 1;
  }
  return out;
}

// --cap entries are doubled half-integers; one entry broadcasts to all lines.
std::vector<Half2> cap_vector(const std::string& text, int n) {
  std::vector<int> raw = parse_int_list(text);
  if (raw.empty()) throw ParameterError("--cap needs at least one entry");
  for (int v : raw)
    if (v < 0) throw ParameterError("--cap entries must be nonnegative");
  if (raw.size() == 1) return std::vector<Half2>(static_cast<std::size_t>(n), raw[0]);
  if (raw.size() != static_cast<std::size_t>(n))
    throw ParameterError("--cap wants one entry or one per line");
  return std::vector<Half2>(raw.begin(), raw.end());
}

std::string weights_str(const std::vector<Half2>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += half2_str(w[i]);
  }
  return out + ")";
}

std::string ints_str(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string seconds_str(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", s);
  return buf;
}

bool next_weight(std::vector<Half2>& w, const std::vector<Half2>& caps) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < caps[i]) {
      ++w[i];
      return true;
    }
    w[i] = 0;
  }
  return false;
}

// Context flags shared by the algebra subcommands.
struct CtxArgs {
  int n = 1;
  int k = 0;
  std::string s;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "number of circles")->required();
    cmd->add_option("--k", k, "number of strands")->required();
    cmd->add_option("--s", s, "comma list of special circles (default none)");
  }
  AlgebraContext ctx() const { return make_context(n, k, parse_int_list(s)); }
};

void grading_to_row(nlohmann::json& row, const GradingVector& gv) {
  row["maslov"] = gv.maslov;
  row["w2"] = gv.w;
  row["w_un"] = gv.w_un;
  row["alexander2"] = gv.alexander;
}

std::string grading_line(const GradingVector& gv) {
  return "m=" + std::to_string(gv.maslov) + " w=" + weights_str(gv.w) +
         " a=" + half2_str(gv.alexander);
}

bool same_grading(const GradingVector& a, const GradingVector& b) {
  return a.maslov == b.maslov && a.w == b.w && a.w_un == b.w_un &&
         a.alexander == b.alexander;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"chord-diagram strands algebra toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  // --- basis ---------------------------------------------------------------
  struct {
    CtxArgs c;
    std::string algebra = "A", x, y, cap;
    bool json = false;
  } ba;
  auto* basis = app.add_subcommand("basis", "enumerate one (x, y) piece");
  ba.c.attach(basis);
  basis->add_option("--algebra", ba.algebra, "A (diagram) or B (normal forms)")
      ->check(CLI::IsMember({"A", "B"}));
  basis->add_option("--x", ba.x, "left idempotent members")->required();
  basis->add_option("--y", ba.y, "right idempotent members")->required();
  basis->add_option("--cap", ba.cap, "per-line weight caps, doubled")->required();
  basis->add_flag("--json", ba.json, "emit JSON");
  basis->callback([&] {
    AlgebraContext ctx = ba.c.ctx();
    IState x = make_istate(ctx.n, parse_int_list(ba.x));
    IState y = make_istate(ctx.n, parse_int_list(ba.y));
    auto caps = cap_vector(ba.cap, ctx.n);
    nlohmann::json rows = nlohmann::json::array();
    if (ba.algebra == "A") {
      for (const auto& g : enumerate_basis(ctx, x, y, caps)) {
        GradingVector gv = grade(g);
        if (ba.json) {
          nlohmann::json row = generator_to_json(g);
          row["text"] = format_generator(g);
          grading_to_row(row, gv);
          rows.push_back(std::move(row));
        } else {
          out << format_generator(g) << "  " << grading_line(gv) << "\n";
        }
      }
    } else {
      for (const auto& g : enumerate_os_basis(ctx, x, y, caps)) {
        GradingVector gv = grade_os(g);
        if (ba.json) {
          nlohmann::json row = os_generator_to_json(g);
          row["text"] = format_os_generator(g);
          grading_to_row(row, gv);
          rows.push_back(std::move(row));
        } else {
          out << format_os_generator(g) << "  " << grading_line(gv) << "\n";
        }
      }
    }
    if (ba.json) {
      nlohmann::json doc{{"ctx", context_to_json(ctx)}, {"generators", rows}};
      out << doc.dump(2) << "\n";
    }
  });

  // --- mul -----------------------------------------------------------------
  struct {
    CtxArgs c;
    std::string algebra = "A", x, y, lhs, rhs;
    bool json = false;
  } mu;
  auto* mul_cmd = app.add_subcommand("mul", "multiply two elements");
  mu.c.attach(mul_cmd);
  mul_cmd->add_option("--algebra", mu.algebra)->check(CLI::IsMember({"A", "B"}));
  auto* mu_x = mul_cmd->add_option("--x", mu.x, "fallback left idempotent");
  auto* mu_y = mul_cmd->add_option("--y", mu.y, "fallback right idempotent (B)");
  mul_cmd->add_option("lhs", mu.lhs, "left factor")->required();
  mul_cmd->add_option("rhs", mu.rhs, "right factor")->required();
  mul_cmd->add_flag("--json", mu.json, "emit JSON");
  mul_cmd->callback([&] {
    AlgebraContext ctx = mu.c.ctx();
    std::optional<IState> ax, ay;
    if (mu_x->count()) ax = make_istate(ctx.n, parse_int_list(mu.x));
    if (mu_y->count()) ay = make_istate(ctx.n, parse_int_list(mu.y));
    if (mu.algebra == "A") {
      F2Element prod =
          mul(parse_element(mu.lhs, ctx, ax), parse_element(mu.rhs, ctx, ax));
      out << (mu.json ? element_to_json(prod).dump(2) : format_element(prod))
          << "\n";
    } else {
      OSElement prod = mul_os(parse_os_element(mu.lhs, ctx, ax, ay),
                              parse_os_element(mu.rhs, ctx, ax, ay));
      out << (mu.json ? os_element_to_json(prod).dump(2)
                      : format_os_element(prod))
          << "\n";
    }
  });

  // --- diff ----------------------------------------------------------------
  struct {
    CtxArgs c;
    std::string algebra = "A", x, y, text;
    bool json = false;
  } di;
  auto* diff_cmd = app.add_subcommand("diff", "apply the differential");
  di.c.attach(diff_cmd);
  diff_cmd->add_option("--algebra", di.algebra)->check(CLI::IsMember({"A", "B"}));
  auto* di_x = diff_cmd->add_option("--x", di.x, "fallback left idempotent");
  auto* di_y = diff_cmd->add_option("--y", di.y, "fallback right idempotent (B)");
  diff_cmd->add_option("element", di.text, "element text")->required();
  diff_cmd->add_flag("--json", di.json, "emit JSON");
  diff_cmd->callback([&] {
    AlgebraContext ctx = di.c.ctx();
    std::optional<IState> ax, ay;
    if (di_x->count()) ax = make_istate(ctx.n, parse_int_list(di.x));
    if (di_y->count()) ay = make_istate(ctx.n, parse_int_list(di.y));
    if (di.algebra == "A") {
      F2Element d = diff(parse_element(di.text, ctx, ax));
      out << (di.json ? element_to_json(d).dump(2) : format_element(d)) << "\n";
    } else {
      OSElement d = diff_os(parse_os_element(di.text, ctx, ax, ay));
      out << (di.json ? os_element_to_json(d).dump(2) : format_os_element(d))
          << "\n";
    }
  });

  // --- grade ---------------------------------------------------------------
  struct {
    CtxArgs c;
    std::string algebra = "A", x, y, text;
    bool json = false;
  } gr;
  auto* grade_cmd =
      app.add_subcommand("grade", "gradings of a homogeneous element");
  gr.c.attach(grade_cmd);
  grade_cmd->add_option("--algebra", gr.algebra)->check(CLI::IsMember({"A", "B"}));
  auto* gr_x = grade_cmd->add_option("--x", gr.x, "fallback left idempotent");
  auto* gr_y = grade_cmd->add_option("--y", gr.y, "fallback right idempotent (B)");
  grade_cmd->add_option("element", gr.text, "element text")->required();
  grade_cmd->add_flag("--json", gr.json, "emit JSON");
  grade_cmd->callback([&] {
    AlgebraContext ctx = gr.c.ctx();
    std::optional<IState> ax, ay;
    if (gr_x->count()) ax = make_istate(ctx.n, parse_int_list(gr.x));
    if (gr_y->count()) ay = make_istate(ctx.n, parse_int_list(gr.y));
    std::vector<GradingVector> gvs;
    if (gr.algebra == "A") {
      F2Element e = parse_element(gr.text, ctx, ax);
      for (const auto& t : e.terms) gvs.push_back(grade(t));
    } else {
      OSElement e = parse_os_element(gr.text, ctx, ax, ay);
      for (const auto& t : e.terms) gvs.push_back(grade_os(t));
    }
    if (gvs.empty()) throw DomainError("cannot grade the zero element");
    for (const auto& gv : gvs)
      if (!same_grading(gv, gvs.front()))
        throw DomainError("element is not homogeneous");
    const GradingVector& gv = gvs.front();
    if (gr.json) {
      nlohmann::json doc;
      grading_to_row(doc, gv);
      out << doc.dump(2) << "\n";
    } else {
      out << grading_line(gv) << " w_un=" << ints_str(gv.w_un) << "\n";
    }
  });

  // --- homology ------------------------------------------------------------
  struct {
    CtxArgs c;
    std::string algebra = "A", x, y, cap;
    bool json = false;
    int jobs = 1;
  } ho;
  auto* hom_cmd =
      app.add_subcommand("homology", "homology dimensions of graded pieces");
  ho.c.attach(hom_cmd);
  hom_cmd->add_option("--algebra", ho.algebra)->check(CLI::IsMember({"A", "B"}));
  auto* ho_x = hom_cmd->add_option("--x", ho.x, "restrict to this left idempotent");
  auto* ho_y = hom_cmd->add_option("--y", ho.y, "restrict to this right idempotent");
  hom_cmd->add_option("--cap", ho.cap, "per-line weight caps, doubled")->required();
  hom_cmd->add_option("--jobs", ho.jobs, "worker threads (0 = auto)");
  hom_cmd->add_flag("--json", ho.json, "emit JSON");
  hom_cmd->callback([&] {
    AlgebraContext ctx = ho.c.ctx();
    auto caps = cap_vector(ho.cap, ctx.n);
    PieceAlgebra alg = ho.algebra == "A" ? PieceAlgebra::A : PieceAlgebra::B;
    std::vector<IState> xs, ys;
    if (ho_x->count())
      xs.push_back(make_istate(ctx.n, parse_int_list(ho.x)));
    else
      xs = enumerate_istates(ctx.n, ctx.k);
    if (ho_y->count())
      ys.push_back(make_istate(ctx.n, parse_int_list(ho.y)));
    else
      ys = enumerate_istates(ctx.n, ctx.k);
    struct Piece {
      IState x, y;
      std::vector<Half2> w;
    };
    std::vector<Piece> pieces;
    for (const auto& x : xs)
      for (const auto& y : ys) {
        if (is_far(x, y)) continue;
        std::vector<Half2> w(static_cast<std::size_t>(ctx.n), 0);
        do {
          pieces.push_back({x, y, w});
        } while (next_weight(w, caps));
      }
    std::vector<std::map<int, std::size_t>> dims(pieces.size());
    int jobs = ho.jobs > 0 ? ho.jobs : default_jobs();
    parallel_for(pieces.size(), jobs, [&](std::size_t i) {
      dims[i] =
          homology_dims(graded_piece(alg, ctx, pieces[i].x, pieces[i].y, pieces[i].w));
    });
    nlohmann::json doc = nlohmann::json::object();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (dims[i].empty()) continue;
      std::string key = "x=" + istate_str(pieces[i].x) +
                        " y=" + istate_str(pieces[i].y) +
                        " w=" + weights_str(pieces[i].w);
      if (ho.json) {
        nlohmann::json cell = nlohmann::json::object();
        for (const auto& [m, d] : dims[i]) cell[std::to_string(m)] = d;
        doc[key] = std::move(cell);
      } else {
        out << key << ":";
        for (const auto& [m, d] : dims[i]) out << " " << m << ":" << d;
        out << "\n";
      }
    }
    if (ho.json) out << doc.dump(2) << "\n";
  });

  // --- phi -----------------------------------------------------------------
  struct {
    CtxArgs c;
    std::string x, y, text;
    bool json = false;
  } ph;
  auto* phi_cmd =
      app.add_subcommand("phi", "map a normal-form element into the diagram algebra");
  ph.c.attach(phi_cmd);
  auto* ph_x = phi_cmd->add_option("--x", ph.x, "fallback left idempotent");
  auto* ph_y = phi_cmd->add_option("--y", ph.y, "fallback right idempotent");
  phi_cmd->add_option("element", ph.text, "normal-form element text")->required();
  phi_cmd->add_flag("--json", ph.json, "emit JSON");
  phi_cmd->callback([&] {
    AlgebraContext ctx = ph.c.ctx();
    std::optional<IState> ax, ay;
    if (ph_x->count()) ax = make_istate(ctx.n, parse_int_list(ph.x));
    if (ph_y->count()) ay = make_istate(ctx.n, parse_int_list(ph.y));
    F2Element img = phi_elem(parse_os_element(ph.text, ctx, ax, ay));
    out << (ph.json ? element_to_json(img).dump(2) : format_element(img))
        << "\n";
  });

  // --- verify --------------------------------------------------------------
  struct {
    std::vector<std::string> suites{"all"};
    int n = 3;
    int cap2 = -1;
    int jobs = 1;
    std::uint64_t seed = 1;
    bool json = false;
  } ve;
  auto* ver_cmd = app.add_subcommand("verify", "run verification suites");
  ver_cmd->add_option("--suite", ve.suites, "suite names, or 'all'")
      ->delimiter(',');
  ver_cmd->add_option("--n", ve.n, "largest n to sweep");
  ver_cmd->add_option("--cap", ve.cap2, "doubled weight cap override");
  ver_cmd->add_option("--jobs", ve.jobs, "worker threads (0 = auto)");
  ver_cmd->add_option("--seed", ve.seed, "random-triple seed");
  ver_cmd->add_flag("--json", ve.json, "emit JSON");
  ver_cmd->callback([&] {
    SuiteOptions opt;
    opt.max_n = ve.n;
    opt.cap2 = ve.cap2;
    opt.jobs = ve.jobs > 0 ? ve.jobs : default_jobs();
    opt.seed = ve.seed;
    auto results = run_suites(ve.suites, opt);
    bool all_ok = true;
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& res : results) {
      all_ok = all_ok && res.report.ok();
      if (ve.json) {
        doc.push_back({{"name", res.name},
                       {"checked", res.report.checked},
                       {"failures", res.report.failures},
                       {"seconds", res.seconds}});
        continue;
      }
      if (res.report.ok()) {
        out << "PASS " << res.name << ": " << res.report.checked << " checks ("
            << seconds_str(res.seconds) << "s)\n";
      } else {
        out << "FAIL " << res.name << ": " << res.report.failures.size()
            << " of " << res.report.checked << " checks failed ("
            << seconds_str(res.seconds) << "s)\n";
        const std::size_t shown = std::min<std::size_t>(
            res.report.failures.size(), 10);
        for (std::size_t i = 0; i < shown; ++i)
          out << "  - " << res.report.failures[i] << "\n";
        if (shown < res.report.failures.size())
          out << "  ... (" << res.report.failures.size() - shown
              << " more)\n";
      }
    }
    if (ve.json) out << doc.dump(2) << "\n";
    if (!all_ok) exit_code = 3;
  });

  // --- render --------------------------------------------------------------
  struct {
    CtxArgs c;
    std::string x, text;
  } re;
  auto* ren_cmd = app.add_subcommand("render", "ASCII picture of one basis element");
  re.c.attach(ren_cmd);
  auto* re_x = ren_cmd->add_option("--x", re.x, "fallback left idempotent");
  ren_cmd->add_option("element", re.text, "element text")->required();
  ren_cmd->callback([&] {
    AlgebraContext ctx = re.c.ctx();
    std::optional<IState> ax;
    if (re_x->count()) ax = make_istate(ctx.n, parse_int_list(re.x));
    F2Element e = parse_element(re.text, ctx, ax);
    if (e.terms.size() != 1)
      throw ParameterError("render wants a single basis element");
    out << render_ascii(e.terms[0]);
  });

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("strands");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& s : full) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const GrammarError& e) {
    err << "error: " << e.what() << " (at position " << e.position << ")\n";
    return 1;
  } catch (const ValidityError& e) {
    err << "error: " << e.what() << " (condition " << e.condition << ")\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace strands
