#include "hochlab/sparse.hpp"

#include <algorithm>
#include <tuple>

#include "hochlab/errors.hpp"

namespace hochlab {

void canonicalize(SparseVector& v) {
  std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i + 1;
    Rational sum = v[i].value;
    while (j < v.size() && v[j].index == v[i].index) sum += v[j++].value;
    if (!is_zero(sum)) v[out++] = Entry{v[i].index, sum};
    i = j;
  }
  v.resize(out);
}

SparseVector add_scaled(const SparseVector& a, const SparseVector& b, const Rational& scale) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back(Entry{b[j].index, scale * b[j].value});
      ++j;
    } else {
      Rational s = a[i].value + scale * b[j].value;
      if (!is_zero(s)) out.push_back(Entry{a[i].index, s});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector scaled(const SparseVector& v, const Rational& scale) {
  if (is_zero(scale)) return {};
  SparseVector out = v;
  for (auto& e : out) e.value *= scale;
  return out;
}

Rational coefficient(const SparseVector& v, std::uint32_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const Entry& e, std::uint32_t i) { return e.index < i; });
  if (it != v.end() && it->index == index) return it->value;
  return 0;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), columns_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = {Entry{static_cast<std::uint32_t>(i), 1}};
  return m;
}

SparseMatrix SparseMatrix::from_triplets(
    std::size_t rows, std::size_t cols,
    const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& triplets) {
  SparseMatrix m(rows, cols);
  for (const auto& [r, c, v] : triplets) {
    if (r >= rows || c >= cols) {
      throw Error(ErrorKind::IndexOutOfRange, "triplet outside matrix",
                  "(" + std::to_string(r) + "," + std::to_string(c) + ")");
    }
    m.columns_[c].push_back(Entry{static_cast<std::uint32_t>(r), v});
  }
  for (auto& col : m.columns_) canonicalize(col);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  SparseMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i][j] != 0) m.columns_[j].push_back(Entry{static_cast<std::uint32_t>(i), rows[i][j]});
    }
  }
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

void SparseMatrix::set_column(std::size_t c, SparseVector v) {
  if (c >= cols_) throw Error(ErrorKind::IndexOutOfRange, "column index", std::to_string(c));
  canonicalize(v);
  if (!v.empty() && v.back().index >= rows_) {
    throw Error(ErrorKind::IndexOutOfRange, "row index", std::to_string(v.back().index));
  }
  columns_[c] = std::move(v);
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  return coefficient(columns_.at(c), static_cast<std::uint32_t>(r));
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const auto& e : columns_[c]) {
      t.columns_[e.index].push_back(Entry{static_cast<std::uint32_t>(c), e.value});
    }
  }
  return t;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& e : v) {
    if (e.index >= cols_) throw Error(ErrorKind::IndexOutOfRange, "vector index", std::to_string(e.index));
    for (const auto& m : columns_[e.index]) out.push_back(Entry{m.index, m.value * e.value});
  }
  canonicalize(out);
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorKind::InvalidArgument, "matrix product shape mismatch",
                std::to_string(a.cols_) + " vs " + std::to_string(b.rows_));
  }
  SparseMatrix out(a.rows_, b.cols_);
  for (std::size_t c = 0; c < b.cols_; ++c) out.columns_[c] = a.apply(b.columns_[c]);
  return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorKind::InvalidArgument, "matrix sum shape mismatch");
  }
  SparseMatrix out(a.rows_, a.cols_);
  for (std::size_t c = 0; c < a.cols_; ++c) out.columns_[c] = add_scaled(a.columns_[c], b.columns_[c], 1);
  return out;
}

}  // namespace hochlab
