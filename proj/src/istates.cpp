#include "strands/istates.hpp"

#include <algorithm>

namespace strands {

IState make_istate(int n, const std::vector<int>& members) {
  if (n < 0 || n > 30) throw ParameterError("width n out of range");
  IState s;
  s.n = n;
  for (int m : members) {
    if (m < 0 || m > n)
      throw ParameterError("I-state member " + std::to_string(m) +
                           " outside [0," + std::to_string(n) + "]");
    if (s.contains(m))
      throw ParameterError("duplicate I-state member " + std::to_string(m));
    s.bits |= (1u << m);
  }
  return s;
}

std::string istate_str(const IState& x) {
  std::string out = "{";
  bool first = true;
  for (int m : x.members()) {
    if (!first) out += ",";
    out += std::to_string(m);
    first = false;
  }
  out += "}";
  return out;
}

std::vector<IState> enumerate_istates(int n, int k) {
  if (n < 0 || n > 30) throw ParameterError("width n out of range");
  if (k < 0 || k > n + 1)
    throw ParameterError("state size k=" + std::to_string(k) +
                         " outside [0," + std::to_string(n + 1) + "]");
  std::vector<IState> out;
  std::vector<int> pick(k);
  // Lexicographic k-combinations of {0,...,n}.
  auto rec = [&](auto&& self, int next, int depth) -> void {
    if (depth == k) {
      out.push_back(make_istate(n, pick));
      return;
    }
    for (int v = next; v <= n - (k - depth - 1); ++v) {
      pick[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

static void require_same_shape(const IState& x, const IState& y) {
  if (x.n != y.n) throw ParameterError("I-states have different widths");
  if (x.k() != y.k()) throw ParameterError("I-states have different sizes");
}

int weight_v(const IState& x, const IState& y, int i) {
  require_same_shape(x, y);
  if (i < 1 || i > x.n) throw ParameterError("line index outside [1,n]");
  // Mask of the coordinates [i, n].
  std::uint32_t hi = ((2u << x.n) - 1u) & ~((1u << i) - 1u);
  return __builtin_popcount(y.bits & hi) - __builtin_popcount(x.bits & hi);
}

bool is_far(const IState& x, const IState& y) {
  require_same_shape(x, y);
  std::vector<int> xs = x.members(), ys = y.members();
  for (std::size_t a = 0; a < xs.size(); ++a)
    if (std::abs(xs[a] - ys[a]) > 1) return true;
  return false;
}

LineClassification classify_lines(const IState& x, const IState& y) {
  if (is_far(x, y)) throw DomainError("classify_lines on a far pair");
  const int n = x.n;
  LineClassification cls;
  if (x.is_full() && y.is_full()) {
    cls.two_faced = true;
    return cls;
  }
  auto fully = [&](int i) { return x.contains(i) && y.contains(i); };
  std::vector<char> is_crossed(n + 1, 0);
  for (int i = 1; i <= n; ++i)
    if (weight_v(x, y, i) != 0) {
      is_crossed[i] = 1;
      cls.crossed.push_back(i);
    }
  // Coordinates that are not fully used, in ascending order.
  std::vector<int> open;
  for (int i = 0; i <= n; ++i)
    if (!fully(i)) open.push_back(i);
  // Left edge [[1,l]: coordinates [0,l-1] fully used, l not.
  if (fully(0)) cls.left_edge = Interval{1, open.front()};
  // Right edge [n-l+1,n]]: coordinates [n-l+1,n] fully used, n-l not.
  if (fully(n)) cls.right_edge = Interval{open.back() + 1, n};
  // Generating interval between consecutive open coordinates j < j' with all
  // middles fully used, provided the (constant) v on those lines vanishes.
  for (std::size_t t = 0; t + 1 < open.size(); ++t) {
    int j = open[t], jp = open[t + 1];
    if (!is_crossed[j + 1]) cls.generating.push_back(Interval{j + 1, jp});
  }
  return cls;
}

std::string label_str(const GeneratorLabel& l) {
  static const char* names[] = {"R", "L", "U", "C"};
  return std::string(names[static_cast<int>(l.kind)]) + "_" +
         std::to_string(l.index);
}

std::vector<GeneratorLabel> gamma_path(const IState& x, const IState& y) {
  if (is_far(x, y)) throw DomainError("gamma_path on a far pair");
  std::vector<GeneratorLabel> path;
  IState cur = x;
  for (;;) {
    std::vector<int> xs = cur.members(), ys = y.members();
    // Largest index with x_a < y_a moves right; otherwise the smallest index
    // with x_a > y_a moves left; done when equal.
    int move_right = -1, move_left = -1;
    for (int a = static_cast<int>(xs.size()) - 1; a >= 0; --a)
      if (xs[a] < ys[a]) {
        move_right = a;
        break;
      }
    if (move_right >= 0) {
      int from = xs[move_right];
      path.push_back(GeneratorLabel{LabelKind::R, from + 1});
      cur.bits = (cur.bits & ~(1u << from)) | (1u << (from + 1));
      continue;
    }
    for (std::size_t a = 0; a < xs.size(); ++a)
      if (xs[a] > ys[a]) {
        move_left = static_cast<int>(a);
        break;
      }
    if (move_left < 0) break;  // cur == y
    int from = xs[move_left];
    path.push_back(GeneratorLabel{LabelKind::L, from});
    cur.bits = (cur.bits & ~(1u << from)) | (1u << (from - 1));
  }
  return path;
}

}  // namespace strands
