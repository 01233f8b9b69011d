// Exact linear algebra over GF(2) for boundary matrices of graded pieces.
// Dense bit-packed rows for elimination; set-of-positions as the interchange
// format. Pieces are tiny at desk scale, so simplicity wins over blocking.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "strands/util.hpp"

namespace strands {

using F2Vec = std::vector<std::uint64_t>;  // bit-packed coordinates

inline F2Vec f2vec_zero(std::size_t dim) { return F2Vec((dim + 63) / 64, 0); }
inline bool f2vec_get(const F2Vec& v, std::size_t i) {
  return (v[i / 64] >> (i % 64)) & 1u;
}
inline void f2vec_flip(F2Vec& v, std::size_t i) { v[i / 64] ^= 1ull << (i % 64); }
inline void f2vec_xor(F2Vec& a, const F2Vec& b) {
  for (std::size_t w = 0; w < b.size(); ++w) a[w] ^= b[w];
}
inline bool f2vec_is_zero(const F2Vec& v) {
  for (auto w : v)
    if (w) return false;
  return true;
}

class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, f2vec_zero(cols)) {}

  static F2Matrix from_positions(
      std::size_t rows, std::size_t cols,
      const std::vector<std::pair<std::size_t, std::size_t>>& ones);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return f2vec_get(data_[r], c); }
  void flip(std::size_t r, std::size_t c) { f2vec_flip(data_[r], c); }
  const F2Vec& row(std::size_t r) const { return data_[r]; }
  F2Vec& row(std::size_t r) { return data_[r]; }

  std::vector<std::pair<std::size_t, std::size_t>> positions() const;

  // y = M x  (x has cols() coordinates, result has rows()).
  F2Vec apply(const F2Vec& x) const;

  F2Matrix multiplied_by(const F2Matrix& rhs) const;  // this * rhs

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F2Vec> data_;
};

std::size_t rank(const F2Matrix& m);

// Basis of the null space {x : Mx = 0}; size cols - rank.
std::vector<F2Vec> kernel_basis(const F2Matrix& m);

// dim ker(d_out) - rank(d_in) for a composable pair d_out ∘ d_in = 0
// (checked; ConsistencyError otherwise). d_out: C -> C', d_in: C'' -> C.
std::size_t homology_dim(const F2Matrix& d_out, const F2Matrix& d_in);

// Cycle representatives spanning ker(d_out)/im(d_in); each vector has
// d_out.cols() coordinates. Column-reduction variant, so actual representative
// vectors come back, not just a count.
std::vector<F2Vec> homology_representatives(const F2Matrix& d_out,
                                            const F2Matrix& d_in);

// Solve M x = b; empty optional encoded as {found, x}.
struct F2Solution {
  bool found = false;
  F2Vec x;
};
F2Solution solve(const F2Matrix& m, const F2Vec& b);

// Coordinates of each target vector in the quotient basis carried by `reps`,
// working modulo the column space of `boundaries`; ConsistencyError when a
// target fails to lie in span(boundaries) + span(reps). Every vector has
// `dim` coordinates. Returns a matrix with reps.size() rows and
// targets.size() cols (the induced-map matrix written in the reps basis).
F2Matrix express_in_quotient(std::size_t dim, const std::vector<F2Vec>& boundaries,
                             const std::vector<F2Vec>& reps,
                             const std::vector<F2Vec>& targets);

}  // namespace strands
