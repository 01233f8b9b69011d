#include "strands/splitting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "strands/phi.hpp"

namespace strands {

AlgebraContext local_context(IntervalKind kind, int length) {
  if (length < 1) throw ParameterError("interval length must be positive");
  switch (kind) {
    case IntervalKind::generating:
      return make_context(length, length - 1, {});
    case IntervalKind::left_edge:
    case IntervalKind::right_edge:
      return make_context(length, length, {});
    case IntervalKind::two_faced:
      return make_context(length, length + 1, {});
  }
  throw ParameterError("unknown interval kind");
}

IState local_frame(IntervalKind kind, int length) {
  if (length < 1) throw ParameterError("interval length must be positive");
  int lo = (kind == IntervalKind::left_edge || kind == IntervalKind::two_faced)
               ? 0
               : 1;
  int hi = (kind == IntervalKind::right_edge || kind == IntervalKind::two_faced)
               ? length
               : length - 1;
  std::vector<int> members;
  for (int t = lo; t <= hi; ++t) members.push_back(t);
  return make_istate(length, members);
}

namespace {

const char* kind_str(IntervalKind kind) {
  switch (kind) {
    case IntervalKind::generating:
      return "generating";
    case IntervalKind::left_edge:
      return "left edge";
    case IntervalKind::right_edge:
      return "right edge";
    case IntervalKind::two_faced:
      return "two-faced";
  }
  return "?";
}

bool classified_as(const LineClassification& cls, const Interval& interval,
                   IntervalKind kind, int n) {
  switch (kind) {
    case IntervalKind::generating:
      return std::find(cls.generating.begin(), cls.generating.end(),
                       interval) != cls.generating.end();
    case IntervalKind::left_edge:
      return cls.left_edge && *cls.left_edge == interval;
    case IntervalKind::right_edge:
      return cls.right_edge && *cls.right_edge == interval;
    case IntervalKind::two_faced:
      return cls.two_faced && interval == Interval{1, n};
  }
  return false;
}

std::string interval_str(const Interval& g) {
  return "[" + std::to_string(g.lo) + "," + std::to_string(g.hi) + "]";
}

}  // namespace

StrandsGenerator restrict(const StrandsGenerator& g, const Interval& interval,
                          IntervalKind kind) {
  if (g.ctx.s_bits != 0)
    throw UnsupportedError("interval restriction is defined over S = {}");
  IState y = validate_generator(g);
  LineClassification cls = classify_lines(g.x, y);
  if (!classified_as(cls, interval, kind, g.ctx.n))
    throw ParameterError("restrict: " + interval_str(interval) + " is not a " +
                         std::string(kind_str(kind)) +
                         " interval of the idempotent pair");
  int l = interval.length();
  std::vector<std::pair<int, int>> pq(static_cast<std::size_t>(l));
  for (int t = 1; t <= l; ++t) {
    int i = interval.lo + t - 1;
    pq[static_cast<std::size_t>(t - 1)] = {g.p[static_cast<std::size_t>(i)],
                                           g.q[static_cast<std::size_t>(i)]};
  }
  IState frame = local_frame(kind, l);
  StrandsGenerator out = make_generator(local_context(kind, l), frame, {}, pq);
  std::optional<IState> derived = try_validate(out);
  if (!derived || *derived != frame)
    throw ConsistencyError("interval restriction is not a framed basis element");
  return out;
}

Factorization split_psi(const StrandsGenerator& g) {
  if (g.ctx.s_bits != 0)
    throw UnsupportedError("splitting is defined over S = {}");
  IState y = validate_generator(g);
  LineClassification cls = classify_lines(g.x, y);
  Factorization f;
  f.ctx = g.ctx;
  f.x = g.x;
  f.y = y;
  for (int i : cls.crossed) {
    std::size_t ui = static_cast<std::size_t>(i);
    f.crossed_exponents[i] = (g.p[ui] + g.q[ui] - 1) / 2;
  }
  if (cls.two_faced) {
    Interval whole{1, g.ctx.n};
    f.factors.push_back({whole, IntervalKind::two_faced,
                         restrict(g, whole, IntervalKind::two_faced)});
    return f;
  }
  if (cls.left_edge)
    f.factors.push_back({*cls.left_edge, IntervalKind::left_edge,
                         restrict(g, *cls.left_edge, IntervalKind::left_edge)});
  for (const Interval& gi : cls.generating)
    f.factors.push_back(
        {gi, IntervalKind::generating, restrict(g, gi, IntervalKind::generating)});
  if (cls.right_edge)
    f.factors.push_back({*cls.right_edge, IntervalKind::right_edge,
                         restrict(g, *cls.right_edge, IntervalKind::right_edge)});
  return f;
}

StrandsGenerator unsplit_phi(const Factorization& f) {
  if (f.ctx.s_bits != 0)
    throw UnsupportedError("splitting is defined over S = {}");
  if (f.x.n != f.ctx.n || f.y.n != f.ctx.n || f.x.k() != f.ctx.k ||
      f.y.k() != f.ctx.k)
    throw ParameterError("unsplit_phi: idempotents disagree with the context");
  if (is_far(f.x, f.y)) throw ParameterError("unsplit_phi: far idempotent pair");
  LineClassification cls = classify_lines(f.x, f.y);

  if (f.crossed_exponents.size() != cls.crossed.size())
    throw ParameterError(
        "crossed_exponents must be keyed by exactly the crossed lines");
  std::vector<std::pair<int, int>> pq(static_cast<std::size_t>(f.ctx.n), {0, 0});
  for (int i : cls.crossed) {
    auto it = f.crossed_exponents.find(i);
    if (it == f.crossed_exponents.end())
      throw ParameterError(
          "crossed_exponents must be keyed by exactly the crossed lines");
    if (it->second < 0) throw ParameterError("negative winding exponent");
    int speed = 1 + 2 * it->second;
    pq[static_cast<std::size_t>(i - 1)] = weight_v(f.x, f.y, i) > 0
                                              ? std::make_pair(speed, 0)
                                              : std::make_pair(0, speed);
  }

  std::vector<std::pair<Interval, IntervalKind>> layout;
  if (cls.two_faced) {
    layout.emplace_back(Interval{1, f.ctx.n}, IntervalKind::two_faced);
  } else {
    if (cls.left_edge)
      layout.emplace_back(*cls.left_edge, IntervalKind::left_edge);
    for (const Interval& gi : cls.generating)
      layout.emplace_back(gi, IntervalKind::generating);
    if (cls.right_edge)
      layout.emplace_back(*cls.right_edge, IntervalKind::right_edge);
  }
  if (f.factors.size() != layout.size())
    throw ParameterError("factor list does not match the interval layout");
  for (std::size_t idx = 0; idx < layout.size(); ++idx) {
    const IntervalFactor& fac = f.factors[idx];
    if (!(fac.interval == layout[idx].first) || fac.kind != layout[idx].second)
      throw ParameterError("factor list does not match the interval layout");
    int l = fac.interval.length();
    IState frame = local_frame(fac.kind, l);
    if (fac.local.ctx != local_context(fac.kind, l) || fac.local.x != frame ||
        fac.local.c_bits != 0)
      throw ParameterError("interval factor is not framed in its local algebra");
    std::optional<IState> derived = try_validate(fac.local);
    if (!derived || *derived != frame)
      throw ParameterError("interval factor is not a framed basis element");
    for (int t = 1; t <= l; ++t)
      pq[static_cast<std::size_t>(fac.interval.lo + t - 2)] = {
          fac.local.p[static_cast<std::size_t>(t)],
          fac.local.q[static_cast<std::size_t>(t)]};
  }

  StrandsGenerator out = make_generator(f.ctx, f.x, {}, pq);
  std::optional<IState> derived = try_validate(out);
  if (!derived)
    throw ConsistencyError("reassembled generator violates a basis condition");
  if (*derived != f.y)
    throw ConsistencyError("reassembled generator ends at the wrong idempotent");
  return out;
}

F2Element max_maslov_cycle(IntervalKind kind, int length,
                           const std::vector<int>& r) {
  AlgebraContext ctx = local_context(kind, length);
  if (static_cast<int>(r.size()) != length)
    throw ParameterError("expected one exponent per line");
  for (int e : r)
    if (e < 0) throw ParameterError("exponents must be nonnegative");
  IState frame = local_frame(kind, length);
  std::vector<int> active;
  for (int i = 1; i <= length; ++i)
    if (r[static_cast<std::size_t>(i - 1)] != 0) active.push_back(i);
  F2Element out = zero_element(ctx);
  for (std::uint32_t mask = 0; mask < (1u << active.size()); ++mask) {
    std::vector<std::pair<int, int>> pq(static_cast<std::size_t>(length),
                                        {0, 0});
    for (std::size_t t = 0; t < active.size(); ++t) {
      int i = active[t];
      int speed = 2 * r[static_cast<std::size_t>(i - 1)];
      pq[static_cast<std::size_t>(i - 1)] = ((mask >> t) & 1u)
                                                ? std::make_pair(0, speed)
                                                : std::make_pair(speed, 0);
    }
    StrandsGenerator cand = make_generator(ctx, frame, {}, pq);
    std::optional<IState> derived = try_validate(cand);
    if (derived && *derived == frame) out.add(cand);
  }
  return out;
}

namespace {

template <typename Gen, typename DiffTerms>
std::map<int, F2Matrix> boundary_matrices(
    const std::map<int, std::vector<Gen>>& levels, DiffTerms diff_terms) {
  std::map<int, F2Matrix> out;
  for (const auto& [m, gens] : levels) {
    auto below = levels.find(m - 1);
    std::size_t rows = below == levels.end() ? 0 : below->second.size();
    F2Matrix d(rows, gens.size());
    std::map<Gen, std::size_t> index;
    if (below != levels.end())
      for (std::size_t row = 0; row < below->second.size(); ++row)
        index.emplace(below->second[row], row);
    for (std::size_t col = 0; col < gens.size(); ++col) {
      for (const Gen& term : diff_terms(gens[col])) {
        auto it = index.find(term);
        if (it == index.end())
          throw ConsistencyError("differential leaves the graded piece");
        d.flip(it->second, col);
      }
    }
    out.emplace(m, std::move(d));
  }
  return out;
}

void check_square_zero(const std::map<int, F2Matrix>& boundaries) {
  for (const auto& [m, d] : boundaries) {
    auto above = boundaries.find(m + 1);
    if (above == boundaries.end()) continue;
    if (d.rows() == 0 || above->second.cols() == 0) continue;
    if (!d.multiplied_by(above->second).positions().empty())
      throw ConsistencyError("boundary composed with boundary is nonzero");
  }
}

}  // namespace

GradedPiece graded_piece(PieceAlgebra algebra, const AlgebraContext& ctx,
                         IState x, IState y, const std::vector<Half2>& w) {
  if (static_cast<int>(w.size()) != ctx.n)
    throw ParameterError("expected one weight per line");
  for (Half2 c : w)
    if (c < 0) throw ParameterError("weights must be nonnegative");
  GradedPiece piece;
  piece.algebra = algebra;
  piece.ctx = ctx;
  piece.x = x;
  piece.y = y;
  piece.w = w;
  if (algebra == PieceAlgebra::A) {
    for (const StrandsGenerator& g : enumerate_basis(ctx, x, y, w)) {
      GradingVector gr = grade(g);
      if (gr.w == w) piece.a_levels[gr.maslov].push_back(g);
    }
    piece.boundaries = boundary_matrices(
        piece.a_levels,
        [](const StrandsGenerator& g) { return diff_gen(g).terms; });
  } else {
    for (const OSGenerator& g : enumerate_os_basis(ctx, x, y, w)) {
      GradingVector gr = grade_os(g);
      if (gr.w == w) piece.b_levels[gr.maslov].push_back(g);
    }
    piece.boundaries = boundary_matrices(
        piece.b_levels, [](const OSGenerator& g) { return diff_os_gen(g).terms; });
  }
  check_square_zero(piece.boundaries);
  return piece;
}

namespace {

std::size_t level_size(const GradedPiece& piece, int m) {
  if (piece.algebra == PieceAlgebra::A) {
    auto it = piece.a_levels.find(m);
    return it == piece.a_levels.end() ? 0 : it->second.size();
  }
  auto it = piece.b_levels.find(m);
  return it == piece.b_levels.end() ? 0 : it->second.size();
}

// d_out at level m (to m-1) and d_in (from m+1), materializing zero matrices
// at the piece's boundary levels.
std::pair<F2Matrix, F2Matrix> level_maps(const GradedPiece& piece, int m) {
  std::size_t here = level_size(piece, m);
  F2Matrix d_out(level_size(piece, m - 1), here);
  F2Matrix d_in(here, level_size(piece, m + 1));
  auto out_it = piece.boundaries.find(m);
  if (out_it != piece.boundaries.end()) d_out = out_it->second;
  auto in_it = piece.boundaries.find(m + 1);
  if (in_it != piece.boundaries.end()) d_in = in_it->second;
  return {d_out, d_in};
}

std::vector<int> piece_levels(const GradedPiece& piece) {
  std::vector<int> out;
  if (piece.algebra == PieceAlgebra::A)
    for (const auto& [m, gens] : piece.a_levels) out.push_back(m);
  else
    for (const auto& [m, gens] : piece.b_levels) out.push_back(m);
  return out;
}

}  // namespace

std::map<int, std::size_t> homology_dims(const GradedPiece& piece) {
  std::map<int, std::size_t> out;
  for (int m : piece_levels(piece)) {
    auto [d_out, d_in] = level_maps(piece, m);
    std::size_t dim = homology_dim(d_out, d_in);
    if (dim > 0) out[m] = dim;
  }
  return out;
}

std::map<int, std::vector<F2Element>> homology_basis_a(const GradedPiece& piece) {
  if (piece.algebra != PieceAlgebra::A)
    throw ParameterError("homology_basis_a expects an A-side piece");
  std::map<int, std::vector<F2Element>> out;
  for (int m : piece_levels(piece)) {
    auto [d_out, d_in] = level_maps(piece, m);
    const std::vector<StrandsGenerator>& gens = piece.a_levels.at(m);
    for (const F2Vec& rep : homology_representatives(d_out, d_in)) {
      F2Element elem = zero_element(piece.ctx);
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (f2vec_get(rep, i)) elem.add(gens[i]);
      out[m].push_back(elem);
    }
  }
  return out;
}

std::map<int, std::vector<OSElement>> homology_basis_b(const GradedPiece& piece) {
  if (piece.algebra != PieceAlgebra::B)
    throw ParameterError("homology_basis_b expects a B-side piece");
  std::map<int, std::vector<OSElement>> out;
  for (int m : piece_levels(piece)) {
    auto [d_out, d_in] = level_maps(piece, m);
    const std::vector<OSGenerator>& gens = piece.b_levels.at(m);
    for (const F2Vec& rep : homology_representatives(d_out, d_in)) {
      OSElement elem = zero_os(piece.ctx);
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (f2vec_get(rep, i)) elem.add(gens[i]);
      out[m].push_back(elem);
    }
  }
  return out;
}

std::map<int, std::size_t> predicted_dims(const AlgebraContext& ctx, IState x,
                                          IState y,
                                          const std::vector<Half2>& w) {
  if (x.n != ctx.n || y.n != ctx.n || x.k() != ctx.k || y.k() != ctx.k)
    throw ParameterError("idempotents disagree with the context");
  if (static_cast<int>(w.size()) != ctx.n)
    throw ParameterError("expected one weight per line");
  for (Half2 c : w)
    if (c < 0) throw ParameterError("weights must be nonnegative");
  std::map<int, std::size_t> out;
  if (is_far(x, y)) return out;

  // Mandatory winding: |v_i|/2 on crossed lines. What remains must be an
  // integer U-exponent vector.
  std::vector<int> residual(static_cast<std::size_t>(ctx.n));
  Half2 s_weight = 0;
  for (int i = 1; i <= ctx.n; ++i) {
    int vabs = std::abs(weight_v(x, y, i));
    Half2 rem = w[static_cast<std::size_t>(i - 1)] - vabs;
    if (rem < 0 || rem % 2 != 0) return out;
    residual[static_cast<std::size_t>(i - 1)] = rem / 2;
    if (ctx.s_contains(i)) s_weight += w[static_cast<std::size_t>(i - 1)];
  }

  LineClassification cls = classify_lines(x, y);
  const std::vector<Interval>& intervals = cls.generating;
  std::size_t b = intervals.size();
  // One optional C-factor per generating interval meeting S; it consumes one
  // U-power on every line of its interval.
  std::uint32_t eligible = 0;
  for (std::size_t a = 0; a < b; ++a) {
    bool meets_s = false;
    for (int i = intervals[a].lo; i <= intervals[a].hi; ++i)
      if (ctx.s_contains(i)) meets_s = true;
    if (meets_s) eligible |= 1u << a;
  }

  std::uint32_t eps = 0;
  for (;;) {
    std::vector<int> m = residual;
    bool feasible = true;
    for (std::size_t a = 0; a < b && feasible; ++a) {
      if (!((eps >> a) & 1u)) continue;
      for (int i = intervals[a].lo; i <= intervals[a].hi; ++i)
        if (--m[static_cast<std::size_t>(i - 1)] < 0) feasible = false;
    }
    if (feasible)
      for (int i : ctx.s_members())
        if (m[static_cast<std::size_t>(i - 1)] != 0) feasible = false;
    if (feasible)
      for (const Interval& gi : intervals) {
        bool vanishes = false;
        for (int i = gi.lo; i <= gi.hi; ++i)
          if (m[static_cast<std::size_t>(i - 1)] == 0) vanishes = true;
        if (!vanishes) feasible = false;  // divisible by the interval monomial
      }
    if (feasible) {
      int maslov = static_cast<int>(std::popcount(eps)) -
                   static_cast<int>(s_weight);
      ++out[maslov];
    }
    if (eps == eligible) break;
    eps = (eps - eligible) & eligible;
  }
  return out;
}

namespace {

std::string weight_str(const std::vector<Half2>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    if (w[i] % 2 == 0)
      out += std::to_string(w[i] / 2);
    else
      out += std::to_string(w[i]) + "/2";
  }
  return out + ")";
}

// Coordinates of an A-element relative to the piece's level-m basis; nullopt
// when some term falls outside it (a grading violation upstream).
std::optional<F2Vec> coordinates_in_level(const GradedPiece& pa, int m,
                                          const F2Element& elem) {
  auto it = pa.a_levels.find(m);
  const std::vector<StrandsGenerator> empty;
  const std::vector<StrandsGenerator>& gens =
      it == pa.a_levels.end() ? empty : it->second;
  F2Vec coords = f2vec_zero(gens.size());
  for (const StrandsGenerator& term : elem.terms) {
    auto pos = std::lower_bound(gens.begin(), gens.end(), term);
    if (pos == gens.end() || !(*pos == term)) return std::nullopt;
    f2vec_flip(coords, static_cast<std::size_t>(pos - gens.begin()));
  }
  return coords;
}

}  // namespace

CheckReport quasi_iso_check(int n, int k, const std::vector<int>& s, Half2 cap,
                            int jobs) {
  AlgebraContext ctx = make_context(n, k, s);
  if (cap < 0) throw ParameterError("cap must be nonnegative");
  std::vector<IState> states = enumerate_istates(n, k);

  std::vector<std::tuple<IState, IState, std::vector<Half2>>> pieces;
  for (const IState& x : states)
    for (const IState& y : states) {
      std::vector<Half2> w(static_cast<std::size_t>(n), 0);
      for (;;) {
        pieces.emplace_back(x, y, w);
        int pos = 0;
        while (pos < n && w[static_cast<std::size_t>(pos)] == cap)
          w[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
        ++w[static_cast<std::size_t>(pos)];
      }
    }

  CheckReport report;
  report.checked = pieces.size();
  std::mutex guard;
  parallel_for(pieces.size(), jobs, [&](std::size_t idx) {
    const auto& [x, y, w] = pieces[idx];
    std::string where = "piece x=" + istate_str(x) + " y=" + istate_str(y) +
                        " w=" + weight_str(w) + ": ";
    std::vector<std::string> local;
    try {
      GradedPiece pb = graded_piece(PieceAlgebra::B, ctx, x, y, w);
      GradedPiece pa = graded_piece(PieceAlgebra::A, ctx, x, y, w);
      std::map<int, std::size_t> hb = homology_dims(pb);
      std::map<int, std::size_t> ha = homology_dims(pa);
      if (hb != ha) {
        local.push_back(where + "homology dimensions differ");
      } else {
        std::map<int, std::vector<OSElement>> reps_b = homology_basis_b(pb);
        std::map<int, std::vector<F2Element>> reps_a = homology_basis_a(pa);
        for (const auto& [m, dim] : hb) {
          std::size_t a_dim = level_size(pa, m);
          std::vector<F2Vec> boundaries;
          auto d_in = pa.boundaries.find(m + 1);
          if (d_in != pa.boundaries.end()) {
            for (std::size_t c = 0; c < d_in->second.cols(); ++c) {
              F2Vec unit = f2vec_zero(d_in->second.cols());
              f2vec_flip(unit, c);
              boundaries.push_back(d_in->second.apply(unit));
            }
          }
          std::vector<F2Vec> rep_coords, target_coords;
          bool graded_ok = true;
          for (const F2Element& rep : reps_a.at(m)) {
            auto coords = coordinates_in_level(pa, m, rep);
            if (!coords) graded_ok = false;
            else rep_coords.push_back(*coords);
          }
          for (const OSElement& rep : reps_b.at(m)) {
            auto coords = coordinates_in_level(pa, m, phi_elem(rep));
            if (!coords) graded_ok = false;
            else target_coords.push_back(*coords);
          }
          if (!graded_ok) {
            local.push_back(where + "image escapes the graded piece");
            continue;
          }
          F2Matrix induced =
              express_in_quotient(a_dim, boundaries, rep_coords, target_coords);
          if (induced.rows() != dim || induced.cols() != dim ||
              rank(induced) != dim)
            local.push_back(where + "induced map is not bijective at Maslov " +
                            std::to_string(m));
        }
      }
    } catch (const std::exception& e) {
      local.push_back(where + e.what());
    }
    if (!local.empty()) {
      std::lock_guard<std::mutex> lock(guard);
      for (auto& f : local) report.failures.push_back(std::move(f));
    }
  });
  std::sort(report.failures.begin(), report.failures.end());
  return report;
}

}  // namespace strands
