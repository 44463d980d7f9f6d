#include "hochlab/constructions.hpp"

#include <algorithm>
#include <map>

#include "hochlab/errors.hpp"

namespace hochlab {

namespace {

// Exponent vectors of total degree d, x1 > x2 > ... lexicographically.
void monomials_of_degree(int n, int d, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  const int slot = static_cast<int>(current.size());
  if (slot == n - 1) {
    current.push_back(d);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    current.push_back(e);
    monomials_of_degree(n, d - e, current, out);
    current.pop_back();
  }
}

std::string monomial_label(const std::vector<int>& exps) {
  std::string s;
  const bool single = exps.size() == 1;
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += single ? "x" : "x" + std::to_string(v + 1);
    if (exps[v] > 1) s += "^" + std::to_string(exps[v]);
  }
  return s.empty() ? "1" : s;
}

AlgebraSpec monomial_spec(int n, int cap) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "need at least one variable", std::to_string(n));
  if (cap < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order", std::to_string(cap));
  std::vector<std::vector<int>> monos;
  for (int d = 0; d <= cap; ++d) {
    std::vector<int> current;
    monomials_of_degree(n, d, current, monos);
  }
  std::map<std::vector<int>, BasisIndex> index;
  for (BasisIndex i = 0; i < monos.size(); ++i) index[monos[i]] = i;

  AlgebraSpec spec;
  spec.dim = monos.size();
  std::vector<int> grading;
  for (const auto& m : monos) {
    spec.basis_labels.push_back(monomial_label(m));
    int d = 0;
    for (int e : m) d += e;
    grading.push_back(d);
  }
  for (BasisIndex i = 0; i < monos.size(); ++i) {
    for (BasisIndex j = 0; j < monos.size(); ++j) {
      if (grading[i] + grading[j] > cap) continue;
      std::vector<int> sum(n);
      for (int v = 0; v < n; ++v) sum[v] = monos[i][v] + monos[j][v];
      spec.mult.push_back({i, j, {Entry{index.at(sum), 1}}});
    }
  }
  spec.unit = SparseVector{Entry{0, 1}};
  spec.grading = std::move(grading);
  spec.degree_cap = cap;
  spec.monomials = std::move(monos);
  return spec;
}

}  // namespace

Algebra field_algebra() {
  AlgebraSpec spec;
  spec.dim = 1;
  spec.label = "Q";
  spec.basis_labels = {"1"};
  spec.mult.push_back({0, 0, {Entry{0, 1}}});
  spec.unit = SparseVector{Entry{0, 1}};
  spec.grading = std::vector<int>{0};
  spec.degree_cap = 0;
  spec.monomials = std::vector<std::vector<int>>{{0}};
  return build_algebra(std::move(spec));
}

Algebra zero_algebra(std::size_t dim) {
  AlgebraSpec spec;
  spec.dim = dim;
  spec.label = "zero" + std::to_string(dim);
  return build_algebra(std::move(spec));
}

Algebra jet_algebra(int n, int m) {
  AlgebraSpec spec = monomial_spec(n, m);
  spec.label = "jet(" + std::to_string(n) + "," + std::to_string(m) + ")";
  return build_algebra(std::move(spec));
}

Algebra polynomial_algebra_graded(int n, int cap) {
  AlgebraSpec spec = monomial_spec(n, cap);
  spec.label = "poly(" + std::to_string(n) + ")<=" + std::to_string(cap);
  spec.graded_truncated = true;
  return build_algebra(std::move(spec));
}

Algebra group_algebra(const GroupTable& g) {
  const std::uint32_t e = validate_group(g);
  AlgebraSpec spec;
  spec.dim = g.order();
  spec.label = "Q[" + (g.name.empty() ? std::string("G") : g.name) + "]";
  spec.basis_labels = g.labels;
  for (BasisIndex a = 0; a < g.order(); ++a) {
    for (BasisIndex b = 0; b < g.order(); ++b) spec.mult.push_back({a, b, {Entry{g.table[a][b], 1}}});
  }
  spec.unit = SparseVector{Entry{e, 1}};
  return build_algebra(std::move(spec));
}

Algebra groupoid_convolution_algebra(const GroupoidSpec& g) {
  validate_groupoid(g);
  AlgebraSpec spec;
  spec.dim = g.arrows.size();
  spec.label = "conv(" + (g.name.empty() ? std::string("G") : g.name) + ")";
  for (const auto& a : g.arrows) spec.basis_labels.push_back(a.label);
  for (BasisIndex a = 0; a < g.arrows.size(); ++a) {
    for (BasisIndex b = 0; b < g.arrows.size(); ++b) {
      if (g.compose[a][b] >= 0) spec.mult.push_back({a, b, {Entry{static_cast<BasisIndex>(g.compose[a][b]), 1}}});
    }
  }
  SparseVector unit;
  for (auto id : g.identities) unit.push_back(Entry{id, 1});
  canonicalize(unit);
  spec.unit = std::move(unit);
  return build_algebra(std::move(spec));
}

Algebra product_algebra(const Algebra& a, const Algebra& b) {
  const auto da = static_cast<BasisIndex>(a.dim());
  AlgebraSpec spec;
  spec.dim = a.dim() + b.dim();
  spec.label = a.label() + "x" + b.label();
  for (const auto& l : a.basis_labels()) spec.basis_labels.push_back("(" + l + ",0)");
  for (const auto& l : b.basis_labels()) spec.basis_labels.push_back("(0," + l + ")");
  for (BasisIndex i = 0; i < a.dim(); ++i) {
    for (BasisIndex j = 0; j < a.dim(); ++j) {
      if (!a.product(i, j).empty()) spec.mult.push_back({i, j, a.product(i, j)});
    }
  }
  for (BasisIndex i = 0; i < b.dim(); ++i) {
    for (BasisIndex j = 0; j < b.dim(); ++j) {
      SparseVector v = b.product(i, j);
      for (auto& e : v) e.index += da;
      if (!v.empty()) spec.mult.push_back({i + da, j + da, std::move(v)});
    }
  }
  if (a.is_unital() && b.is_unital()) {
    SparseVector u = *a.unit();
    for (auto e : *b.unit()) u.push_back(Entry{e.index + da, e.value});
    spec.unit = std::move(u);
  }
  if (a.is_graded() && b.is_graded()) {
    std::vector<int> grading = *a.grading();
    grading.insert(grading.end(), b.grading()->begin(), b.grading()->end());
    spec.grading = std::move(grading);
    if (a.degree_cap() && b.degree_cap()) spec.degree_cap = std::max(*a.degree_cap(), *b.degree_cap());
    spec.graded_truncated = (a.is_graded_truncated() || b.is_graded_truncated()) && spec.degree_cap.has_value();
  }
  std::vector<std::uint32_t> comps(a.dim() + b.dim());
  std::uint32_t offset = 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    comps[i] = a.components() ? (*a.components())[i] : 0;
    if (a.components()) offset = std::max(offset, (*a.components())[i] + 1);
  }
  for (std::size_t i = 0; i < b.dim(); ++i) comps[da + i] = offset + (b.components() ? (*b.components())[i] : 0);
  spec.components = std::move(comps);
  return build_algebra(std::move(spec));
}

Algebra matrix_algebra(const Algebra& a, int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "matrix size must be >= 1", std::to_string(r));
  const auto n = static_cast<BasisIndex>(a.dim());
  const auto rr = static_cast<BasisIndex>(r);
  auto index = [&](BasisIndex p, BasisIndex q, BasisIndex l) { return (p * rr + q) * n + l; };

  AlgebraSpec spec;
  spec.dim = static_cast<std::size_t>(r) * r * a.dim();
  spec.label = "M" + std::to_string(r) + "(" + a.label() + ")";
  for (BasisIndex p = 0; p < rr; ++p) {
    for (BasisIndex q = 0; q < rr; ++q) {
      for (BasisIndex l = 0; l < n; ++l) {
        spec.basis_labels.push_back("E" + std::to_string(p + 1) + std::to_string(q + 1) + "*" + a.basis_labels()[l]);
      }
    }
  }
  for (BasisIndex p = 0; p < rr; ++p) {
    for (BasisIndex q = 0; q < rr; ++q) {
      for (BasisIndex t = 0; t < rr; ++t) {
        for (BasisIndex l = 0; l < n; ++l) {
          for (BasisIndex m = 0; m < n; ++m) {
            SparseVector v = a.product(l, m);
            if (v.empty()) continue;
            for (auto& e : v) e.index = index(p, t, e.index);
            spec.mult.push_back({index(p, q, l), index(q, t, m), std::move(v)});
          }
        }
      }
    }
  }
  if (a.is_unital()) {
    SparseVector u;
    for (BasisIndex p = 0; p < rr; ++p) {
      for (const auto& e : *a.unit()) u.push_back(Entry{index(p, p, e.index), e.value});
    }
    spec.unit = std::move(u);
  }
  if (a.is_graded()) {
    std::vector<int> grading;
    for (BasisIndex pq = 0; pq < rr * rr; ++pq) {
      for (BasisIndex l = 0; l < n; ++l) grading.push_back(a.degree(l));
    }
    spec.grading = std::move(grading);
    spec.degree_cap = a.degree_cap();
    spec.graded_truncated = a.is_graded_truncated();
  }
  return build_algebra(std::move(spec));
}

Unitalization unitalization(const Algebra& a) {
  const auto n = static_cast<BasisIndex>(a.dim());
  AlgebraSpec spec;
  spec.dim = a.dim() + 1;
  spec.label = a.label() + "+";
  spec.basis_labels = a.basis_labels();
  spec.basis_labels.push_back("1+");
  for (BasisIndex i = 0; i < n; ++i) {
    for (BasisIndex j = 0; j < n; ++j) {
      if (!a.product(i, j).empty()) spec.mult.push_back({i, j, a.product(i, j)});
    }
    spec.mult.push_back({i, n, {Entry{i, 1}}});
    spec.mult.push_back({n, i, {Entry{i, 1}}});
  }
  spec.mult.push_back({n, n, {Entry{n, 1}}});
  spec.unit = SparseVector{Entry{n, 1}};
  if (a.is_graded()) {
    std::vector<int> grading = *a.grading();
    grading.push_back(0);
    spec.grading = std::move(grading);
    spec.degree_cap = a.degree_cap();
    spec.graded_truncated = a.is_graded_truncated();
  }

  Unitalization out{build_algebra(std::move(spec)), SparseMatrix(n + 1, n), SparseMatrix(1, n + 1),
                    SparseMatrix(n + 1, 1)};
  for (BasisIndex i = 0; i < n; ++i) out.inclusion.set_column(i, {Entry{i, 1}});
  out.projection.set_column(n, {Entry{0, 1}});
  out.section.set_column(0, {Entry{n, 1}});
  return out;
}

}  // namespace hochlab
