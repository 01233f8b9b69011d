#include "strands/f2linalg.hpp"

#include <algorithm>

namespace strands {

F2Matrix F2Matrix::from_positions(
    std::size_t rows, std::size_t cols,
    const std::vector<std::pair<std::size_t, std::size_t>>& ones) {
  F2Matrix m(rows, cols);
  for (auto [r, c] : ones) {
    if (r >= rows || c >= cols) throw ParameterError("matrix position out of range");
    m.flip(r, c);
  }
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> F2Matrix::positions() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) out.emplace_back(r, c);
  return out;
}

F2Vec F2Matrix::apply(const F2Vec& x) const {
  F2Vec y = f2vec_zero(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < data_[r].size(); ++w) acc ^= data_[r][w] & x[w];
    if (__builtin_popcountll(acc) & 1) f2vec_flip(y, r);
  }
  return y;
}

F2Matrix F2Matrix::multiplied_by(const F2Matrix& rhs) const {
  if (cols_ != rhs.rows()) throw ParameterError("matrix product shape mismatch");
  F2Matrix out(rows_, rhs.cols());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      if (get(r, k)) f2vec_xor(out.row(r), rhs.row(k));
  return out;
}

namespace {

// Column-style elimination: returns reduced column vectors of m (each of
// m.rows() coordinates) together with the matching combination columns (each
// of m.cols() coordinates, tracking which original columns were mixed in).
struct ColumnReduction {
  std::vector<F2Vec> cols;    // reduced columns, pivot rows distinct
  std::vector<F2Vec> combos;  // combos[j] records the preimage of cols[j]
  std::vector<std::size_t> pivot_row;  // SIZE_MAX for zero columns
};

ColumnReduction column_reduce(const F2Matrix& m) {
  ColumnReduction red;
  red.cols.resize(m.cols(), f2vec_zero(m.rows()));
  red.combos.resize(m.cols(), f2vec_zero(m.cols()));
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m.get(r, c)) f2vec_flip(red.cols[c], r);
    f2vec_flip(red.combos[c], c);
  }
  red.pivot_row.assign(m.cols(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> pivot_owner(m.rows(), static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (;;) {
      std::size_t p = static_cast<std::size_t>(-1);
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (f2vec_get(red.cols[c], r)) {
          p = r;
          break;
        }
      if (p == static_cast<std::size_t>(-1)) break;  // column became zero
      if (pivot_owner[p] == static_cast<std::size_t>(-1)) {
        pivot_owner[p] = c;
        red.pivot_row[c] = p;
        break;
      }
      f2vec_xor(red.cols[c], red.cols[pivot_owner[p]]);
      f2vec_xor(red.combos[c], red.combos[pivot_owner[p]]);
    }
  }
  return red;
}

}  // namespace

std::size_t rank(const F2Matrix& m) {
  auto red = column_reduce(m);
  std::size_t r = 0;
  for (auto p : red.pivot_row)
    if (p != static_cast<std::size_t>(-1)) ++r;
  return r;
}

std::vector<F2Vec> kernel_basis(const F2Matrix& m) {
  auto red = column_reduce(m);
  std::vector<F2Vec> out;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (red.pivot_row[c] == static_cast<std::size_t>(-1)) out.push_back(red.combos[c]);
  return out;
}

std::size_t homology_dim(const F2Matrix& d_out, const F2Matrix& d_in) {
  if (d_out.cols() != d_in.rows())
    throw ConsistencyError("homology_dim: middle dimensions disagree");
  F2Matrix comp = d_out.multiplied_by(d_in);
  for (std::size_t r = 0; r < comp.rows(); ++r)
    if (!f2vec_is_zero(comp.row(r)))
      throw ConsistencyError("homology_dim: d_out ∘ d_in is nonzero");
  std::size_t k = d_out.cols() - rank(d_out);
  std::size_t b = rank(d_in);
  return k - b;
}

std::vector<F2Vec> homology_representatives(const F2Matrix& d_out,
                                            const F2Matrix& d_in) {
  std::size_t dim = d_out.cols();
  // Cycles first, then reduce boundary columns into them greedily: a cycle
  // survives iff it is independent of the boundaries and the reps chosen so far.
  std::vector<F2Vec> cycles = kernel_basis(d_out);
  std::vector<F2Vec> boundary_cols;
  for (std::size_t c = 0; c < d_in.cols(); ++c) {
    F2Vec col = f2vec_zero(dim);
    for (std::size_t r = 0; r < dim; ++r)
      if (d_in.get(r, c)) f2vec_flip(col, r);
    boundary_cols.push_back(std::move(col));
  }
  // Row-echelon over the boundary columns.
  std::vector<F2Vec> basis;           // echelonized spanning set
  std::vector<std::size_t> lead;      // leading coordinate per basis vector
  auto reduce = [&](F2Vec v) {
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (f2vec_get(v, lead[b])) f2vec_xor(v, basis[b]);
    return v;
  };
  auto insert = [&](const F2Vec& v) -> bool {
    F2Vec w = reduce(v);
    for (std::size_t i = 0; i < dim; ++i)
      if (f2vec_get(w, i)) {
        // Keep echelon form: clear coordinate i from existing vectors.
        for (std::size_t b = 0; b < basis.size(); ++b)
          if (f2vec_get(basis[b], i)) f2vec_xor(basis[b], w);
        basis.push_back(std::move(w));
        lead.push_back(i);
        return true;
      }
    return false;
  };
  for (auto& col : boundary_cols) insert(col);
  std::vector<F2Vec> reps;
  for (auto& cyc : cycles)
    if (insert(cyc)) reps.push_back(cyc);  // original cycle is the representative
  return reps;
}

F2Solution solve(const F2Matrix& m, const F2Vec& b) {
  auto red = column_reduce(m);
  F2Vec residue = b;
  F2Vec combo = f2vec_zero(m.cols());
  for (;;) {
    std::size_t p = static_cast<std::size_t>(-1);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (f2vec_get(residue, r)) {
        p = r;
        break;
      }
    if (p == static_cast<std::size_t>(-1)) return {true, combo};
    std::size_t owner = static_cast<std::size_t>(-1);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (red.pivot_row[c] == p) {
        owner = c;
        break;
      }
    if (owner == static_cast<std::size_t>(-1)) return {false, {}};
    f2vec_xor(residue, red.cols[owner]);
    f2vec_xor(combo, red.combos[owner]);
  }
}

F2Matrix express_in_quotient(std::size_t dim, const std::vector<F2Vec>& boundaries,
                             const std::vector<F2Vec>& reps,
                             const std::vector<F2Vec>& targets) {
  // Columns: boundaries first, then reps. Solve per target and read off the
  // rep coordinates; the boundary part is quotiented away.
  std::size_t cols = boundaries.size() + reps.size();
  F2Matrix m(dim, cols);
  for (std::size_t c = 0; c < boundaries.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r)
      if (f2vec_get(boundaries[c], r)) m.flip(r, c);
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r)
      if (f2vec_get(reps[c], r)) m.flip(r, boundaries.size() + c);
  F2Matrix out(reps.size(), targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    auto sol = solve(m, targets[t]);
    if (!sol.found)
      throw ConsistencyError("express_in_quotient: target outside the span");
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (f2vec_get(sol.x, boundaries.size() + j)) out.flip(j, t);
  }
  return out;
}

}  // namespace strands
