#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hochlab/algebra.hpp"

namespace hochlab {

/// Basis tuple (i_0, ..., i_k) standing for e_{i_0} (x) ... (x) e_{i_k}.
using Tuple = std::vector<BasisIndex>;

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept;
};

/// Sparse element of C_k(A) = A^{(x)(k+1)}. Keys are kept in lexicographic
/// order; zero coefficients are never stored.
class ChainVector {
 public:
  explicit ChainVector(std::size_t degree) : degree_(degree) {}

  static ChainVector basis(Tuple t, const Rational& coeff = 1);

  std::size_t degree() const noexcept { return degree_; }
  const std::map<Tuple, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Tuple& t) const;

  /// Adds coeff * t; t must have degree()+1 entries.
  void add(const Tuple& t, const Rational& coeff);

  ChainVector& operator+=(const ChainVector& other);
  ChainVector& operator-=(const ChainVector& other);
  ChainVector& operator*=(const Rational& scale);

  friend ChainVector operator+(ChainVector a, const ChainVector& b) { return a += b; }
  friend ChainVector operator-(ChainVector a, const ChainVector& b) { return a -= b; }
  friend ChainVector operator*(const Rational& s, ChainVector a) { return a *= s; }
  friend bool operator==(const ChainVector&, const ChainVector&) = default;

 private:
  std::size_t degree_;
  std::map<Tuple, Rational> terms_;
};

/// Sum of degrees of the tuple entries (0 for ungraded algebras).
int total_degree(const Algebra& a, const Tuple& t);

/// Throws IndexOutOfRange unless every entry of every key is < a.dim().
void check_chain(const Algebra& a, const ChainVector& c);

/// Face map b_i: C_k -> C_{k-1}. For i < k multiplies slots i and i+1, for
/// i = k puts a_k a_0 in front. Requires k >= 1 and i <= k.
ChainVector face(const Algebra& a, std::size_t i, const ChainVector& c);

/// Hochschild boundary b = sum_{i=0}^{k} (-1)^i b_i; zero on degree 0.
ChainVector boundary(const Algebra& a, const ChainVector& c);

/// Bar differential b' = sum_{i=0}^{k-1} (-1)^i b_i; zero on degree 0.
ChainVector bar_differential(const Algebra& a, const ChainVector& c);

/// s_i inserts the unit after slot i, 0 <= i <= k. Throws NonUnitalAlgebra.
ChainVector degeneracy(const Algebra& a, std::size_t i, const ChainVector& c);

/// Extra degeneracy s(a_0 (x) ... (x) a_k) = 1 (x) a_0 (x) ... (x) a_k.
ChainVector prepend_unit(const Algebra& a, const ChainVector& c);

/// lambda(a_0 (x) ... (x) a_k) = (-1)^k a_k (x) a_0 (x) ... (x) a_{k-1}.
ChainVector cyclic_lambda(const ChainVector& c);

/// N = sum_{j=0}^{k} lambda^j.
ChainVector cyclic_norm(const ChainVector& c);

/// Connes' operator B = (1 - lambda) s N : C_k -> C_{k+1}.
ChainVector connes_B(const Algebra& a, const ChainVector& c);

// Tuple-level kernels used when assembling matrices: accumulate
// coeff * op(t) into out.
using TermMap = std::map<Tuple, Rational>;
void accumulate_face(const Algebra& a, std::size_t i, const Tuple& t, const Rational& coeff, TermMap& out);
void accumulate_boundary(const Algebra& a, const Tuple& t, const Rational& coeff, TermMap& out, bool bar = false);
void accumulate_connes_B(const Algebra& a, const Tuple& t, const Rational& coeff, TermMap& out);

}  // namespace hochlab
