#include "hochlab/linalg.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <queue>
#include <type_traits>

#include "hochlab/errors.hpp"

namespace hochlab {

namespace {

template <class Scalar>
constexpr bool kFractionFree = std::is_same_v<Scalar, Integer>;

bool scalar_is_zero(const Integer& x) { return sgn(x) == 0; }
bool scalar_is_zero(const Rational& x) { return sgn(x) == 0; }

Integer abs_value(const Integer& x) { return abs(x); }

// Integer image of a rational vector: multiplied by the lcm of denominators.
void to_scalar(const SparseVector& v, std::vector<std::uint32_t>& index, std::vector<Integer>& value) {
  Integer l = 1;
  for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.get_den_mpz_t());
  index.clear();
  value.clear();
  for (const auto& e : v) {
    index.push_back(e.index);
    value.push_back(e.value.get_num() * (l / e.value.get_den()));
  }
}

void to_scalar(const SparseVector& v, std::vector<std::uint32_t>& index, std::vector<Rational>& value) {
  index.clear();
  value.clear();
  for (const auto& e : v) {
    index.push_back(e.index);
    value.push_back(e.value);
  }
}

void make_primitive(std::vector<Integer>& value) {
  if (value.empty()) return;
  Integer g = 0;
  for (const auto& x : value) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& x : value) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::uint32_t> weights_of(std::size_t n, const std::vector<SparseVector>& vectors) {
  std::vector<std::uint32_t> w(n, 0);
  for (const auto& v : vectors) {
    for (const auto& e : v) ++w[e.index];
  }
  return w;
}

// Fraction-free elimination in machine integers. Returns nullopt as soon as
// any intermediate value would overflow.
class SmallEchelon {
 public:
  SmallEchelon(std::size_t n, std::vector<std::uint32_t> weight) : weight_(std::move(weight)), pivot_of_(n, -1) {}

  std::size_t rank() const { return rows_.size(); }

  // false on overflow
  bool insert(std::vector<std::uint32_t> index, std::vector<std::int64_t> value) {
    for (auto i : index) {
      if (pivot_of_[i] >= 0) pending_.push(pivot_of_[i]);
    }
    std::int32_t last = -1;
    while (!pending_.empty()) {
      const std::int32_t t = pending_.top();
      pending_.pop();
      if (t == last) continue;
      last = t;
      const Row& row = rows_[t];
      auto it = std::lower_bound(index.begin(), index.end(), row.pivot);
      if (it == index.end() || *it != row.pivot) continue;
      const std::int64_t c = value[it - index.begin()];
      const std::int64_t g = std::gcd(row.pivot_value, c);
      const std::int64_t a = row.pivot_value / g;
      const std::int64_t b = c / g;
      next_index_.clear();
      next_value_.clear();
      std::size_t i = 0, j = 0;
      std::int64_t x = 0, y = 0;
      while (i < index.size() || j < row.index.size()) {
        if (j == row.index.size() || (i < index.size() && index[i] < row.index[j])) {
          if (__builtin_mul_overflow(a, value[i], &x)) return drain();
          next_index_.push_back(index[i]);
          next_value_.push_back(x);
          ++i;
        } else if (i == index.size() || row.index[j] < index[i]) {
          if (__builtin_mul_overflow(b, row.value[j], &y) || y == INT64_MIN) return drain();
          next_index_.push_back(row.index[j]);
          next_value_.push_back(-y);
          ++j;
        } else {
          if (__builtin_mul_overflow(a, value[i], &x) || __builtin_mul_overflow(b, row.value[j], &y) ||
              __builtin_sub_overflow(x, y, &x)) {
            return drain();
          }
          if (x != 0) {
            next_index_.push_back(index[i]);
            next_value_.push_back(x);
          }
          ++i;
          ++j;
        }
      }
      std::swap(index, next_index_);
      std::swap(value, next_value_);
      std::int64_t content = 0;
      for (auto v : value) {
        content = std::gcd(content, v);
        if (content == 1) break;
      }
      if (content > 1) {
        for (auto& v : value) v /= content;
      }
      for (auto col : row.index) {
        const std::int32_t s = pivot_of_[col];
        if (s > t) pending_.push(s);
      }
    }
    if (index.empty()) return true;
    std::size_t best = 0;
    for (std::size_t i = 1; i < index.size(); ++i) {
      const std::uint32_t wi = weight_[index[i]], wb = weight_[index[best]];
      if (wi < wb || (wi == wb && std::abs(value[i]) < std::abs(value[best]))) best = i;
    }
    pivot_of_[index[best]] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(Row{index[best], value[best], std::move(index), std::move(value)});
    return true;
  }

 private:
  struct Row {
    std::uint32_t pivot;
    std::int64_t pivot_value;
    std::vector<std::uint32_t> index;
    std::vector<std::int64_t> value;
  };

  bool drain() {
    while (!pending_.empty()) pending_.pop();
    return false;
  }

  std::vector<std::uint32_t> weight_;
  std::vector<std::int32_t> pivot_of_;
  std::vector<Row> rows_;
  std::priority_queue<std::int32_t, std::vector<std::int32_t>, std::greater<>> pending_;
  std::vector<std::uint32_t> next_index_;
  std::vector<std::int64_t> next_value_;
};

// Bounded by 2^62 so that |entries| leave room for one sign change.
constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

std::optional<std::size_t> rank_small(std::size_t n, const std::vector<SparseVector>& vectors,
                                      const std::vector<std::uint32_t>& weights, std::size_t bound) {
  SmallEchelon ech(n, weights);
  std::vector<std::uint32_t> index;
  std::vector<Integer> big;
  for (const auto& v : vectors) {
    to_scalar(v, index, big);
    std::vector<std::int64_t> value;
    value.reserve(big.size());
    for (const auto& x : big) {
      if (!x.fits_slong_p() || abs(x) >= kSmallLimit) return std::nullopt;
      value.push_back(x.get_si());
    }
    if (!ech.insert(index, std::move(value))) return std::nullopt;
    if (ech.rank() == bound) break;
  }
  return ech.rank();
}

std::size_t rank_by_elimination(std::size_t n, std::vector<SparseVector> vectors) {
  auto weights = weights_of(n, vectors);
  std::stable_sort(vectors.begin(), vectors.end(),
                   [](const SparseVector& a, const SparseVector& b) { return a.size() < b.size(); });
  const std::size_t bound = std::min(n, vectors.size());
  if (auto r = rank_small(n, vectors, weights, bound)) return *r;
  IntegerEchelon ech(n, std::move(weights));
  for (const auto& v : vectors) {
    ech.insert(v);
    if (ech.rank() == bound) break;
  }
  return ech.rank();
}

}  // namespace

template <class Scalar>
Echelon<Scalar>::Echelon(std::size_t ambient_dim, std::vector<std::uint32_t> column_weight)
    : weight_(std::move(column_weight)), pivot_of_(ambient_dim, -1) {
  if (!weight_.empty() && weight_.size() != ambient_dim) {
    throw Error(ErrorKind::InvalidArgument, "column weights differ from ambient dimension");
  }
}

template <class Scalar>
void Echelon<Scalar>::reduce_in_place(Work& w) const {
  std::priority_queue<std::int32_t, std::vector<std::int32_t>, std::greater<>> pending;
  for (auto i : w.index) {
    if (i >= pivot_of_.size()) throw Error(ErrorKind::IndexOutOfRange, "vector entry outside ambient space", std::to_string(i));
    if (pivot_of_[i] >= 0) pending.push(pivot_of_[i]);
  }
  std::int32_t last = -1;
  Work next;
  while (!pending.empty()) {
    const std::int32_t t = pending.top();
    pending.pop();
    if (t == last) continue;
    last = t;
    const Row& row = rows_[t];
    auto it = std::lower_bound(w.index.begin(), w.index.end(), row.pivot);
    if (it == w.index.end() || *it != row.pivot) continue;
    const Scalar c = w.value[it - w.index.begin()];

    // w <- a*w - b*row, chosen so the pivot entry cancels.
    Scalar a = 1;
    Scalar b = c;
    if constexpr (kFractionFree<Scalar>) {
      const auto pv = std::lower_bound(row.index.begin(), row.index.end(), row.pivot) - row.index.begin();
      const Integer& p = row.value[pv];
      Integer g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), c.get_mpz_t());
      a = p / g;
      b = c / g;
    }
    next.index.clear();
    next.value.clear();
    std::size_t i = 0, j = 0;
    while (i < w.index.size() || j < row.index.size()) {
      if (j == row.index.size() || (i < w.index.size() && w.index[i] < row.index[j])) {
        next.index.push_back(w.index[i]);
        next.value.push_back(a == 1 ? w.value[i] : Scalar(a * w.value[i]));
        ++i;
      } else if (i == w.index.size() || row.index[j] < w.index[i]) {
        next.index.push_back(row.index[j]);
        next.value.push_back(-b * row.value[j]);
        ++j;
      } else {
        Scalar s = a * w.value[i] - b * row.value[j];
        if (!scalar_is_zero(s)) {
          next.index.push_back(w.index[i]);
          next.value.push_back(std::move(s));
        }
        ++i;
        ++j;
      }
    }
    std::swap(w, next);
    if constexpr (kFractionFree<Scalar>) make_primitive(w.value);
    for (auto col : row.index) {
      const std::int32_t s = pivot_of_[col];
      if (s > t) pending.push(s);
    }
  }
}

template <class Scalar>
bool Echelon<Scalar>::insert(const SparseVector& v) {
  Work w;
  to_scalar(v, w.index, w.value);
  reduce_in_place(w);
  if (w.index.empty()) return false;

  std::size_t best = 0;
  for (std::size_t i = 1; i < w.index.size(); ++i) {
    const std::uint32_t wi = weight_.empty() ? 0 : weight_[w.index[i]];
    const std::uint32_t wb = weight_.empty() ? 0 : weight_[w.index[best]];
    if (wi < wb) {
      best = i;
    } else if (wi == wb) {
      if constexpr (kFractionFree<Scalar>) {
        if (abs_value(w.value[i]) < abs_value(w.value[best])) best = i;
      }
    }
  }
  Row row{w.index[best], std::move(w.index), std::move(w.value)};
  if constexpr (!kFractionFree<Scalar>) {
    const Scalar p = row.value[best];
    for (auto& x : row.value) x /= p;
  }
  pivot_of_[row.pivot] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

template <class Scalar>
SparseVector Echelon<Scalar>::reduce(const SparseVector& v) const {
  Work w;
  to_scalar(v, w.index, w.value);
  reduce_in_place(w);
  SparseVector out;
  out.reserve(w.index.size());
  for (std::size_t i = 0; i < w.index.size(); ++i) out.push_back(Entry{w.index[i], Rational(w.value[i])});
  return out;
}

template <class Scalar>
std::vector<SparseVector> Echelon<Scalar>::reduced_rows() const {
  if constexpr (kFractionFree<Scalar>) {
    throw Error(ErrorKind::InvalidArgument, "reduced_rows needs rational arithmetic");
  } else {
    std::vector<SparseVector> out(rows_.size());
    for (std::size_t t = rows_.size(); t-- > 0;) {
      const Row& row = rows_[t];
      SparseVector r;
      for (std::size_t i = 0; i < row.index.size(); ++i) r.push_back(Entry{row.index[i], row.value[i]});
      // Rows inserted later are already reduced; only their pivots can occur here.
      for (const auto& e : SparseVector(r)) {
        const std::int32_t s = pivot_of_[e.index];
        if (s > static_cast<std::int32_t>(t)) r = add_scaled(r, out[s], -e.value);
      }
      out[t] = std::move(r);
    }
    return out;
  }
}

template class Echelon<Rational>;
template class Echelon<Integer>;

std::size_t rank(const SparseMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  UnionFind uf(rows + cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (const auto& e : m.column(c)) uf.unite(e.index, static_cast<std::uint32_t>(rows + c));
  }

  // Group nonzero columns and touched rows by block.
  std::vector<std::int32_t> block_of_root(rows + cols, -1);
  std::vector<std::vector<std::uint32_t>> block_cols, block_rows;
  std::vector<std::uint8_t> row_seen(rows, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    if (m.column(c).empty()) continue;
    const auto root = uf.find(static_cast<std::uint32_t>(rows + c));
    if (block_of_root[root] < 0) {
      block_of_root[root] = static_cast<std::int32_t>(block_cols.size());
      block_cols.emplace_back();
      block_rows.emplace_back();
    }
    const auto b = block_of_root[root];
    block_cols[b].push_back(static_cast<std::uint32_t>(c));
    for (const auto& e : m.column(c)) {
      if (!row_seen[e.index]) {
        row_seen[e.index] = 1;
        block_rows[b].push_back(e.index);
      }
    }
  }

  std::vector<std::uint32_t> local(rows + cols, 0);
  std::size_t total = 0;
  std::optional<SparseMatrix> transposed;
  for (std::size_t b = 0; b < block_cols.size(); ++b) {
    auto& brows = block_rows[b];
    auto& bcols = block_cols[b];
    std::sort(brows.begin(), brows.end());
    std::vector<SparseVector> vectors;
    std::size_t ambient = 0;
    if (bcols.size() <= brows.size()) {
      for (std::uint32_t i = 0; i < brows.size(); ++i) local[brows[i]] = i;
      ambient = brows.size();
      for (auto c : bcols) {
        SparseVector v;
        for (const auto& e : m.column(c)) v.push_back(Entry{local[e.index], e.value});
        canonicalize(v);
        vectors.push_back(std::move(v));
      }
    } else {
      if (!transposed) transposed = m.transpose();
      for (std::uint32_t i = 0; i < bcols.size(); ++i) local[bcols[i]] = i;
      ambient = bcols.size();
      for (auto r : brows) {
        SparseVector v;
        for (const auto& e : transposed->column(r)) v.push_back(Entry{local[e.index], e.value});
        canonicalize(v);
        vectors.push_back(std::move(v));
      }
    }
    total += rank_by_elimination(ambient, std::move(vectors));
  }
  return total;
}

std::size_t rank_of_vectors(std::size_t ambient_dim, const std::vector<SparseVector>& vectors) {
  SparseMatrix m(ambient_dim, vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c) m.set_column(c, vectors[c]);
  return rank(m);
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  const std::size_t n = m.cols();
  const SparseMatrix t = m.transpose();
  std::vector<SparseVector> row_vectors;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!t.column(r).empty()) row_vectors.push_back(t.column(r));
  }
  RationalEchelon ech(n, weights_of(n, row_vectors));
  for (const auto& v : row_vectors) ech.insert(v);
  const auto rref = ech.reduced_rows();

  std::vector<SparseVector> by_free(n);
  for (std::size_t i = 0; i < rref.size(); ++i) {
    const auto pivot = ech.rows()[i].pivot;
    for (const auto& e : rref[i]) {
      if (e.index != pivot) by_free[e.index].push_back(Entry{pivot, -e.value});
    }
  }
  std::vector<SparseVector> kernel;
  for (std::uint32_t f = 0; f < n; ++f) {
    if (ech.is_pivot(f)) continue;
    SparseVector v = std::move(by_free[f]);
    v.push_back(Entry{f, 1});
    canonicalize(v);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

HomologyAt homology_at(const SparseMatrix& d_out, const SparseMatrix& d_in, bool with_representatives) {
  if (d_out.cols() != d_in.rows()) {
    throw Error(ErrorKind::InvalidArgument, "d_out and d_in do not meet in a common space",
                std::to_string(d_out.cols()) + " vs " + std::to_string(d_in.rows()));
  }
  for (std::size_t c = 0; c < d_in.cols(); ++c) {
    if (!d_out.apply(d_in.column(c)).empty()) {
      throw Error(ErrorKind::NotAComplex, "d_out o d_in != 0", "column " + std::to_string(c));
    }
  }
  HomologyAt h;
  h.dim_chains = d_out.cols();
  h.dim_kernel = h.dim_chains - rank(d_out);
  h.rank_incoming = rank(d_in);
  h.betti = h.dim_kernel - h.rank_incoming;
  if (with_representatives) {
    RationalEchelon image(h.dim_chains);
    for (std::size_t c = 0; c < d_in.cols(); ++c) image.insert(d_in.column(c));
    for (auto& z : kernel_basis(d_out)) {
      if (image.insert(z)) h.representatives.push_back(std::move(z));
    }
    if (h.representatives.size() != h.betti) {
      throw Error(ErrorKind::NotAComplex, "representative count disagrees with rank bookkeeping",
                  std::to_string(h.representatives.size()) + " vs " + std::to_string(h.betti));
    }
  }
  return h;
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<SparseVector>& spanning,
                   std::vector<std::uint32_t> column_weight)
    : echelon_(ambient_dim, column_weight.empty() ? weights_of(ambient_dim, spanning) : std::move(column_weight)),
      quotient_index_(ambient_dim, -1) {
  for (const auto& v : spanning) echelon_.insert(v);
  for (std::uint32_t i = 0; i < ambient_dim; ++i) {
    if (!echelon_.is_pivot(i)) {
      quotient_index_[i] = static_cast<std::int32_t>(quotient_basis_.size());
      quotient_basis_.push_back(i);
    }
  }
}

SparseVector Subspace::project(const SparseVector& v) const {
  SparseVector r = echelon_.reduce(v);
  for (auto& e : r) e.index = static_cast<std::uint32_t>(quotient_index_[e.index]);
  return r;
}

std::vector<SparseVector> Subspace::basis() const {
  std::vector<SparseVector> out;
  for (const auto& row : echelon_.rows()) {
    SparseVector v;
    for (std::size_t i = 0; i < row.index.size(); ++i) v.push_back(Entry{row.index[i], row.value[i]});
    out.push_back(std::move(v));
  }
  return out;
}

SparseMatrix induced_map(const SparseMatrix& m, const Subspace& source, const Subspace& target) {
  if (m.cols() != source.ambient_dim() || m.rows() != target.ambient_dim()) {
    throw Error(ErrorKind::InvalidArgument, "induced map shape mismatch");
  }
  SparseMatrix out(target.quotient_dim(), source.quotient_dim());
  for (std::size_t j = 0; j < source.quotient_dim(); ++j) {
    out.set_column(j, target.project(m.column(source.quotient_basis()[j])));
  }
  return out;
}

}  // namespace hochlab
