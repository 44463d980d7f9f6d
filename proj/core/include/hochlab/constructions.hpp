#pragma once

#include "hochlab/algebra.hpp"
#include "hochlab/groupoid.hpp"

namespace hochlab {

/// Q as a one-dimensional unital algebra.
Algebra field_algebra();

/// dim-dimensional algebra with identically zero multiplication.
Algebra zero_algebra(std::size_t dim = 1);

/// Q[x_1..x_n]/m^{m+1}: monomials of total degree <= m, degree-lexicographic,
/// graded with degree_cap = m. dim = C(n+m, n).
Algebra jet_algebra(int n, int m);

/// Degree <= cap slice of Q[x_1..x_n], flagged graded-truncated: homology is
/// only meaningful in graded pieces <= cap.
Algebra polynomial_algebra_graded(int n, int cap);

/// Q[G]; basis in table order, e_g e_h = e_{gh}.
Algebra group_algebra(const GroupTable& g);

/// Convolution algebra with counting measure: e_g e_h = e_{g o h} when
/// source(g) = target(h), else 0; unit = sum of identity arrows.
Algebra groupoid_convolution_algebra(const GroupoidSpec& g);

/// A x B with componentwise multiplication; basis of a followed by basis of b.
Algebra product_algebra(const Algebra& a, const Algebra& b);

/// M_r(A) = M_r(Q) (x) A; basis E_pq (x) e_l at index (p*r + q)*dim + l.
Algebra matrix_algebra(const Algebra& a, int r);

/// A+ = A (+) Q with the adjoined element (last basis index) as unit, together
/// with the maps of the split exact sequence 0 -> A -> A+ -> Q -> 0.
struct Unitalization {
  Algebra algebra;
  SparseMatrix inclusion;   // A -> A+
  SparseMatrix projection;  // A+ -> Q
  SparseMatrix section;     // Q -> A+
};

Unitalization unitalization(const Algebra& a);

}  // namespace hochlab
