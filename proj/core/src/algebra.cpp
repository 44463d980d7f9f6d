#include "hochlab/algebra.hpp"

#include <algorithm>

#include "hochlab/errors.hpp"

namespace hochlab {

namespace {

std::string triple(BasisIndex i, BasisIndex j, BasisIndex k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

std::string pair(BasisIndex i, BasisIndex j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_range(const SparseVector& v, std::size_t dim, const std::string& where) {
  for (const auto& e : v) {
    if (e.index >= dim) {
      throw ValidationError(ErrorKind::IndexOutOfRange, where + " refers to basis index " +
                                                            std::to_string(e.index) + " >= dim",
                            std::to_string(e.index));
    }
  }
}

}  // namespace

SparseVector Algebra::multiply(const SparseVector& a, const SparseVector& b) const {
  SparseVector out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      for (const auto& z : product(x.index, y.index)) {
        out.push_back(Entry{z.index, x.value * y.value * z.value});
      }
    }
  }
  canonicalize(out);
  return out;
}

std::optional<BasisIndex> Algebra::unit_basis_index() const {
  if (!unit_ || unit_->size() != 1 || (*unit_)[0].value != 1) return std::nullopt;
  return (*unit_)[0].index;
}

bool Algebra::is_commutative() const {
  for (BasisIndex i = 0; i < dim_; ++i) {
    for (BasisIndex j = i + 1; j < dim_; ++j) {
      if (product(i, j) != product(j, i)) return false;
    }
  }
  return true;
}

Algebra Algebra::rebased_on_unit() const {
  if (!unit_) throw Error(ErrorKind::NonUnitalAlgebra, "rebasing needs a unit", label_);
  if (unit_basis_index()) return *this;

  const SparseVector& u = *unit_;
  const BasisIndex p = u.front().index;
  const Rational cp = u.front().value;

  // Old coordinates v -> new coordinates w, where f_p = u and f_j = e_j otherwise.
  auto to_new = [&](const SparseVector& v) {
    const Rational vp = coefficient(v, p);
    SparseVector w = v;
    if (!is_zero(vp)) {
      w = add_scaled(w, u, -vp / cp);
      w.push_back(Entry{p, vp / cp});
      canonicalize(w);
    }
    return w;
  };
  auto new_basis = [&](BasisIndex j) { return j == p ? u : SparseVector{Entry{j, 1}}; };

  AlgebraSpec spec = to_spec();
  spec.label = label_;
  spec.basis_labels[p] = "1";
  spec.mult.clear();
  for (BasisIndex i = 0; i < dim_; ++i) {
    for (BasisIndex j = 0; j < dim_; ++j) {
      SparseVector v = to_new(multiply(new_basis(i), new_basis(j)));
      if (!v.empty()) spec.mult.push_back({i, j, std::move(v)});
    }
  }
  spec.unit = SparseVector{Entry{p, 1}};
  spec.components.reset();
  spec.monomials.reset();
  return build_algebra(std::move(spec));
}

AlgebraSpec Algebra::to_spec() const {
  AlgebraSpec spec;
  spec.dim = dim_;
  spec.label = label_;
  spec.basis_labels = basis_labels_;
  for (BasisIndex i = 0; i < dim_; ++i) {
    for (BasisIndex j = 0; j < dim_; ++j) {
      if (!product(i, j).empty()) spec.mult.push_back({i, j, product(i, j)});
    }
  }
  spec.unit = unit_;
  spec.grading = grading_;
  spec.degree_cap = degree_cap_;
  spec.graded_truncated = graded_truncated_;
  spec.components = components_;
  spec.monomials = monomials_;
  return spec;
}

Algebra build_algebra(AlgebraSpec spec) {
  if (spec.dim == 0) throw ValidationError(ErrorKind::InvalidArgument, "algebra dimension must be positive");
  const std::size_t dim = spec.dim;

  Algebra a;
  a.dim_ = dim;
  a.label_ = spec.label.empty() ? "algebra" : spec.label;
  if (spec.basis_labels.empty()) {
    for (std::size_t i = 0; i < dim; ++i) a.basis_labels_.push_back("e" + std::to_string(i));
  } else if (spec.basis_labels.size() != dim) {
    throw ValidationError(ErrorKind::InvalidArgument, "basis label count differs from dim");
  } else {
    a.basis_labels_ = std::move(spec.basis_labels);
  }

  a.table_.assign(dim * dim, {});
  for (auto& p : spec.mult) {
    if (p.left >= dim || p.right >= dim) {
      throw ValidationError(ErrorKind::IndexOutOfRange, "product of out-of-range basis elements",
                            pair(p.left, p.right));
    }
    canonicalize(p.value);
    check_range(p.value, dim, "product " + pair(p.left, p.right));
    auto& slot = a.table_[p.left * dim + p.right];
    slot = add_scaled(slot, p.value, 1);
  }

  if (spec.grading) {
    if (spec.grading->size() != dim) {
      throw ValidationError(ErrorKind::GradingViolation, "grading length differs from dim");
    }
    for (std::size_t i = 0; i < dim; ++i) {
      if ((*spec.grading)[i] < 0) {
        throw ValidationError(ErrorKind::GradingViolation, "negative degree", std::to_string(i));
      }
    }
  }
  if (spec.degree_cap && *spec.degree_cap < 0) {
    throw ValidationError(ErrorKind::GradingViolation, "negative degree cap");
  }
  if (spec.graded_truncated && (!spec.grading || !spec.degree_cap)) {
    throw ValidationError(ErrorKind::GradingViolation,
                          "graded-truncated algebra needs a grading and a degree cap");
  }
  a.grading_ = std::move(spec.grading);
  a.degree_cap_ = spec.degree_cap;
  a.graded_truncated_ = spec.graded_truncated;

  if (a.grading_) {
    for (BasisIndex i = 0; i < dim; ++i) {
      for (BasisIndex j = 0; j < dim; ++j) {
        const int d = a.degree(i) + a.degree(j);
        const auto& prod = a.product(i, j);
        if (a.degree_cap_ && d > *a.degree_cap_ && !prod.empty()) {
          throw ValidationError(ErrorKind::GradingViolation, "product exceeds the degree cap but is nonzero",
                                pair(i, j));
        }
        for (const auto& e : prod) {
          if (a.degree(e.index) != d) {
            throw ValidationError(ErrorKind::GradingViolation, "product is not homogeneous of degree " +
                                                                   std::to_string(d),
                                  pair(i, j));
          }
        }
      }
    }
  }

  for (BasisIndex i = 0; i < dim; ++i) {
    for (BasisIndex j = 0; j < dim; ++j) {
      for (BasisIndex k = 0; k < dim; ++k) {
        if (a.grading_ && a.degree_cap_ && a.degree(i) + a.degree(j) + a.degree(k) > *a.degree_cap_) continue;
        SparseVector left = a.multiply(a.product(i, j), {Entry{k, 1}});
        SparseVector right = a.multiply({Entry{i, 1}}, a.product(j, k));
        if (left != right) {
          throw ValidationError(ErrorKind::NonAssociative, "(e_i e_j) e_k != e_i (e_j e_k)", triple(i, j, k));
        }
      }
    }
  }

  if (spec.unit) {
    canonicalize(*spec.unit);
    check_range(*spec.unit, dim, "unit");
    for (BasisIndex i = 0; i < dim; ++i) {
      const SparseVector ei{Entry{i, 1}};
      if (a.multiply(*spec.unit, ei) != ei || a.multiply(ei, *spec.unit) != ei) {
        throw ValidationError(ErrorKind::BadUnit, "u e_i = e_i u = e_i fails", std::to_string(i));
      }
    }
    a.unit_ = std::move(spec.unit);
  }

  if (spec.components) {
    if (spec.components->size() != dim) {
      throw ValidationError(ErrorKind::InvalidArgument, "component labels differ from dim");
    }
    a.components_ = std::move(spec.components);
  }
  if (spec.monomials) {
    if (spec.monomials->size() != dim) {
      throw ValidationError(ErrorKind::InvalidArgument, "monomial list differs from dim");
    }
    a.monomials_ = std::move(spec.monomials);
  }
  return a;
}

}  // namespace hochlab
