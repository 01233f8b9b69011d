// I-state bookkeeping: k-subsets of [0,n] as idempotent labels, relative
// weights v_i, farness, classification of lines into crossed lines and
// generating/edge intervals, and the canonical quiver path gamma.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strands/util.hpp"

namespace strands {

// A k-element subset of [0,n], stored as a bitmask. k may be anything in
// [0, n+1]; the full state [0,n] is the "two-faced" one.
struct IState {
  int n = 0;
  std::uint32_t bits = 0;

  bool contains(int i) const {
    return i >= 0 && i <= n && ((bits >> i) & 1u);
  }
  int k() const { return __builtin_popcount(bits); }
  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i <= n; ++i)
      if ((bits >> i) & 1u) out.push_back(i);
    return out;
  }
  bool is_full() const { return bits == ((2u << n) - 1u); }

  friend bool operator==(const IState& a, const IState& b) {
    return a.n == b.n && a.bits == b.bits;
  }
  friend bool operator!=(const IState& a, const IState& b) { return !(a == b); }
  friend bool operator<(const IState& a, const IState& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.bits < b.bits;
  }
};

IState make_istate(int n, const std::vector<int>& members);
std::string istate_str(const IState& x);  // "{0,2,3}"

// All C(n+1,k) states, lexicographic in the member sequence.
std::vector<IState> enumerate_istates(int n, int k);

// v_i(x,y) = |y ∩ [i,n]| - |x ∩ [i,n]|, for i in [1,n].
int weight_v(const IState& x, const IState& y, int i);

// Some sorted coordinate pair differs by more than 1.
bool is_far(const IState& x, const IState& y);

struct Interval {
  int lo = 0, hi = 0;  // closed range of lines, subset of [1,n]
  int length() const { return hi - lo + 1; }
  bool contains(int i) const { return lo <= i && i <= hi; }
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Partition of the lines [1,n] for a not-far pair: each line is crossed, in a
// unique generating interval, or in a unique edge interval.
struct LineClassification {
  std::vector<int> crossed;          // ascending
  std::vector<Interval> generating;  // ascending by lo
  std::optional<Interval> left_edge;
  std::optional<Interval> right_edge;
  bool two_faced = false;  // x = y = [0,n]; the edge interval is all of [1,n]
};

LineClassification classify_lines(const IState& x, const IState& y);

// Quiver edge letters. C_i only parses when i lies in the ambient S.
enum class LabelKind : std::uint8_t { R, L, U, C };

struct GeneratorLabel {
  LabelKind kind;
  int index;  // in [1,n]
  friend bool operator==(const GeneratorLabel& a, const GeneratorLabel& b) {
    return a.kind == b.kind && a.index == b.index;
  }
};

std::string label_str(const GeneratorLabel& l);  // "R_3"

// The canonical path from x to y: rightward moves first (largest eligible
// sorted index), then leftward moves (smallest eligible sorted index).
std::vector<GeneratorLabel> gamma_path(const IState& x, const IState& y);

}  // namespace strands
