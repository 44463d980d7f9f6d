#pragma once

// Independent reference implementations used only by the tests: dense
// Gaussian elimination over Q and Hochschild complexes assembled by applying
// the chain operators to every basis tuple.

#include <vector>

#include "hochlab/chain.hpp"
#include "hochlab/sparse.hpp"

namespace oracle {

using hochlab::Rational;
using Dense = std::vector<std::vector<Rational>>;

inline Dense dense(const hochlab::SparseMatrix& m) {
  Dense d(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) d[e.index][c] = e.value;
  }
  return d;
}

inline std::size_t rank(Dense a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const hochlab::SparseMatrix& m) { return rank(dense(m)); }

inline std::vector<hochlab::Tuple> all_tuples(std::size_t dim, std::size_t k) {
  std::vector<hochlab::Tuple> out;
  hochlab::Tuple t(k + 1, 0);
  for (;;) {
    out.push_back(t);
    std::size_t s = k + 1;
    while (s > 0 && ++t[s - 1] == dim) t[--s] = 0;
    if (s == 0) return out;
  }
}

inline std::size_t position(std::size_t dim, const hochlab::Tuple& t) {
  std::size_t p = 0;
  for (auto x : t) p = p * dim + x;
  return p;
}

template <class Op>
Dense operator_matrix(const hochlab::Algebra& a, std::size_t from, std::size_t to, Op op) {
  const auto src = all_tuples(a.dim(), from);
  Dense d(all_tuples(a.dim(), to).size(), std::vector<Rational>(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c) {
    const auto image = op(hochlab::ChainVector::basis(src[c]));
    for (const auto& [t, v] : image.terms()) d[position(a.dim(), t)][c] = v;
  }
  return d;
}

/// Betti numbers of (A^{(x)*+1}, b) in degrees 0..N-1.
inline std::vector<std::size_t> hh(const hochlab::Algebra& a, std::size_t N) {
  std::vector<std::size_t> rk(N + 2, 0), dims;
  for (std::size_t k = 0; k <= N; ++k) dims.push_back(all_tuples(a.dim(), k).size());
  for (std::size_t k = 1; k <= N; ++k) {
    rk[k] = rank(operator_matrix(a, k, k - 1, [&](const hochlab::ChainVector& c) { return hochlab::boundary(a, c); }));
  }
  std::vector<std::size_t> betti;
  for (std::size_t k = 0; k < N; ++k) betti.push_back(dims[k] - rk[k] - rk[k + 1]);
  return betti;
}

}  // namespace oracle
