#include <doctest.h>

#include "hochlab/builtins.hpp"
#include "hochlab/constructions.hpp"
#include "hochlab/hochschild.hpp"
#include "hochlab/rational.hpp"
#include "support.hpp"

using namespace hochlab;

namespace {

SparseVector e(std::uint32_t i, long c = 1) { return {{i, Rational(c)}}; }

AlgebraSpec dual_numbers_spec() {
  AlgebraSpec s;
  s.dim = 2;
  s.label = "dual";
  s.basis_labels = {"1", "x"};
  s.mult = {{0, 0, e(0)}, {0, 1, e(1)}, {1, 0, e(1)}};
  s.unit = e(0);
  return s;
}

void check_axioms(const Algebra& a) {
  const auto n = static_cast<BasisIndex>(a.dim());
  for (BasisIndex i = 0; i < n; ++i) {
    for (BasisIndex j = 0; j < n; ++j) {
      for (BasisIndex k = 0; k < n; ++k) {
        const auto left = a.multiply(a.product(i, j), e(k));
        const auto right = a.multiply(e(i), a.product(j, k));
        REQUIRE(left == right);
      }
    }
    if (a.unit()) {
      CHECK(a.multiply(*a.unit(), e(i)) == e(i));
      CHECK(a.multiply(e(i), *a.unit()) == e(i));
    }
  }
}

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(is_zero(parse_rational("-0/5")));
  CHECK(parse_rational("-0/5").get_den() == 1);
  CHECK(test::error_kind([] { parse_rational("1/0"); }) == ErrorKind::ParseError);
  CHECK(test::error_kind([] { parse_rational("x"); }) == ErrorKind::ParseError);
  CHECK(test::error_kind([] { parse_rational(""); }) == ErrorKind::ParseError);
}

TEST_CASE("sparse vectors drop zeros") {
  SparseVector v{{2, Rational(1)}, {0, Rational(3)}, {2, Rational(-1)}};
  canonicalize(v);
  CHECK(v == e(0, 3));
  CHECK(add_scaled(e(1), e(1), Rational(-1)).empty());
  auto m = SparseMatrix::from_dense({{1, 2}, {0, 3}});
  CHECK(m.at(0, 1) == 2);
  CHECK(m.transpose().at(1, 0) == 2);
  CHECK(m * SparseMatrix::identity(2) == m);
  CHECK(m.apply(e(1)) == SparseVector{{0, Rational(2)}, {1, Rational(3)}});
}

TEST_CASE("validation rejects violated axioms") {
  SUBCASE("non-associative") {
    AlgebraSpec s;
    s.dim = 2;
    s.mult = {{0, 0, e(1)}, {0, 1, e(0)}};
    CHECK(test::error_kind([&] { build_algebra(s); }) == ErrorKind::NonAssociative);
    CHECK(test::witness_of([&] { build_algebra(s); }) == "(0,0,0)");
  }
  SUBCASE("bad unit") {
    auto s = dual_numbers_spec();
    s.unit = e(1);
    CHECK(test::error_kind([&] { build_algebra(s); }) == ErrorKind::BadUnit);
  }
  SUBCASE("grading") {
    auto s = dual_numbers_spec();
    s.grading = std::vector<int>{0, 1};
    s.mult.push_back({1, 1, e(1)});
    CHECK(test::error_kind([&] { build_algebra(s); }) == ErrorKind::GradingViolation);
  }
  SUBCASE("index range") {
    auto s = dual_numbers_spec();
    s.mult.push_back({1, 1, e(5)});
    CHECK(test::error_kind([&] { build_algebra(s); }) == ErrorKind::IndexOutOfRange);
  }
  SUBCASE("valid") {
    auto a = build_algebra(dual_numbers_spec());
    CHECK(a.is_unital());
    CHECK(a.is_commutative());
    CHECK(a.unit_basis_index() == 0u);
  }
}

TEST_CASE("jet algebras") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const auto a = jet_algebra(n, m);
      CHECK(a.dim() == binomial(n + m, n));
      CHECK(a.degree_cap() == m);
      CHECK(!a.is_graded_truncated());
      check_axioms(a);
    }
  }
  const auto a = jet_algebra(1, 2);
  CHECK(a.basis_labels() == std::vector<std::string>{"1", "x", "x^2"});
  CHECK(a.product(1, 1) == e(2));
  CHECK(a.product(1, 2).empty());
  CHECK(a.degree(2) == 2);
  CHECK(jet_algebra(2, 2).basis_labels() == std::vector<std::string>{"1", "x1", "x2", "x1^2", "x1*x2", "x2^2"});
}

TEST_CASE("graded polynomial slice") {
  const auto a = polynomial_algebra_graded(1, 3);
  CHECK(a.dim() == 4);
  CHECK(a.is_graded_truncated());
  CHECK(a.product(1, 2) == e(3));
  CHECK(a.product(2, 2).empty());
  CHECK(polynomial_algebra_graded(2, 2).dim() == 6);
}

TEST_CASE("groups") {
  CHECK(validate_group(cyclic_group(4)) == 0);
  const auto s3 = group_algebra(symmetric_group_3());
  CHECK(s3.dim() == 6);
  CHECK(!s3.is_commutative());
  check_axioms(s3);
  const auto z2 = group_algebra(cyclic_group(2));
  CHECK(z2.is_commutative());
  CHECK(z2.product(1, 1) == e(0));

  GroupTable bad{"bad", {"a", "b"}, {{0, 0}, {0, 0}}};
  CHECK(test::error_kind([&] { validate_group(bad); }) == ErrorKind::NotAGroup);
  const auto inv = group_inverses(symmetric_group_3());
  CHECK(inv.size() == 6);
}

TEST_CASE("groupoids and convolution") {
  const auto swap = swap_groupoid();
  CHECK(swap.objects == std::vector<std::string>{"a", "b"});
  CHECK(swap.arrows.size() == 4);
  const auto conv = groupoid_convolution_algebra(swap);
  CHECK(conv.dim() == 4);
  check_axioms(conv);
  SparseVector unit;
  for (auto id : swap.identities) unit.push_back({id, Rational(1)});
  canonicalize(unit);
  CHECK(conv.unit() == unit);

  const auto point = z2_point_groupoid();
  CHECK(point.objects.size() == 1);
  CHECK(point.arrows.size() == 2);

  GroupTable z2 = cyclic_group(2);
  CHECK(test::error_kind([&] { action_groupoid(z2, {"a", "b"}, {{1, 0}, {0, 1}}); }) == ErrorKind::NotAnAction);

  auto broken = swap;
  broken.compose[0][0] = 1;
  CHECK(test::error_kind([&] { validate_groupoid(broken); }) == ErrorKind::NotAGroupoid);
}

TEST_CASE("convolution of a disjoint union is the product") {
  const auto u = disjoint_union(swap_groupoid(), z2_point_groupoid());
  const auto lhs = groupoid_convolution_algebra(u);
  const auto rhs = product_algebra(groupoid_convolution_algebra(swap_groupoid()),
                                   groupoid_convolution_algebra(z2_point_groupoid()));
  REQUIRE(lhs.dim() == rhs.dim());
  for (BasisIndex i = 0; i < lhs.dim(); ++i) {
    for (BasisIndex j = 0; j < lhs.dim(); ++j) CHECK(lhs.product(i, j) == rhs.product(i, j));
  }
  CHECK(lhs.unit() == rhs.unit());
}

TEST_CASE("products, matrices, unitalization") {
  const auto q = field_algebra();
  const auto qq = product_algebra(q, q);
  CHECK(qq.dim() == 2);
  CHECK(qq.product(0, 1).empty());
  CHECK(qq.components() == std::vector<std::uint32_t>{0, 1});
  check_axioms(qq);

  const auto m2 = matrix_algebra(q, 2);
  CHECK(m2.dim() == 4);
  CHECK(!m2.is_commutative());
  CHECK(m2.product(1, 2) == e(0));  // E12 E21 = E11
  check_axioms(m2);
  check_axioms(matrix_algebra(group_algebra(cyclic_group(2)), 2));

  const auto j = jet_algebra(1, 1);
  const auto plus = unitalization(j);
  CHECK(plus.algebra.dim() == 3);
  CHECK(plus.algebra.unit() == e(2));
  check_axioms(plus.algebra);
  CHECK((plus.projection * plus.inclusion).is_zero());
  CHECK(plus.projection * plus.section == SparseMatrix::identity(1));
  for (BasisIndex x = 0; x < 2; ++x) {
    for (BasisIndex y = 0; y < 2; ++y) CHECK(plus.algebra.product(x, y) == j.product(x, y));
  }
  CHECK(!zero_algebra(2).is_unital());
  CHECK(unitalization(zero_algebra(1)).algebra.is_unital());
}

TEST_CASE("rebasing on the unit") {
  AlgebraSpec s;
  s.dim = 2;
  s.mult = {{0, 0, e(0)}, {1, 1, e(1)}};
  s.unit = SparseVector{{0, Rational(1)}, {1, Rational(1)}};
  const auto a = build_algebra(s);
  CHECK(!a.unit_basis_index());
  const auto r = a.rebased_on_unit();
  REQUIRE(r.unit_basis_index());
  check_axioms(r);
}

TEST_CASE("every builtin satisfies the axioms") {
  for (const auto& name : unital_builtin_names()) {
    CAPTURE(name);
    const auto in = resolve_builtin(name);
    CHECK(in.algebra.is_unital());
    check_axioms(in.algebra);
  }
}
