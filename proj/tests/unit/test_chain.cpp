#include <doctest.h>

#include "hochlab/constructions.hpp"
#include "support.hpp"

using namespace hochlab;

namespace {

ChainVector t(Tuple x, long c = 1) { return ChainVector::basis(std::move(x), Rational(c)); }

std::vector<Algebra> unital_samples() {
  return {field_algebra(), jet_algebra(1, 2), jet_algebra(2, 1), group_algebra(symmetric_group_3()),
          matrix_algebra(field_algebra(), 2)};
}

}  // namespace

TEST_CASE("chain vectors") {
  ChainVector c(1);
  c.add({0, 1}, Rational(2));
  c.add({0, 1}, Rational(-2));
  CHECK(c.is_zero());
  CHECK(test::error_kind([&] { c.add({0}, Rational(1)); }) == ErrorKind::InvalidArgument);
  const auto x = t({1, 0}) + t({0, 1}, 3);
  CHECK(x.size() == 2);
  CHECK(x.coefficient({0, 1}) == 3);
  CHECK((Rational(0) * x).is_zero());
  const auto a = jet_algebra(1, 1);
  CHECK(test::error_kind([&] { check_chain(a, t({0, 2})); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("faces and boundary on truncated polynomials") {
  const auto a = jet_algebra(1, 2);  // 1, x, x^2
  const auto xxx = t({1, 1, 1});
  CHECK(face(a, 0, xxx) == t({2, 1}));
  CHECK(face(a, 1, xxx) == t({1, 2}));
  CHECK(face(a, 2, xxx) == t({2, 1}));
  CHECK(boundary(a, xxx) == t({2, 1}, 2) - t({1, 2}));
  CHECK(bar_differential(a, xxx) == t({2, 1}) - t({1, 2}));
  CHECK(boundary(a, t({1, 2})).is_zero());
  CHECK(bar_differential(a, t({1, 1})) == t({2}));
  CHECK(boundary(a, t({1})).is_zero());
  CHECK(test::error_kind([&] { face(a, 0, t({1})); }) == ErrorKind::IndexOutOfRange);
  CHECK(test::error_kind([&] { face(a, 3, xxx); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("b squared vanishes") {
  std::mt19937_64 rng(7);
  auto samples = unital_samples();
  samples.push_back(zero_algebra(2));
  for (const auto& a : samples) {
    for (std::size_t k = 2; k <= 5; ++k) {
      const auto c = test::random_chain(a, k, rng);
      CHECK(boundary(a, boundary(a, c)).is_zero());
      CHECK(bar_differential(a, bar_differential(a, c)).is_zero());
    }
  }
}

TEST_CASE("simplicial identities") {
  std::mt19937_64 rng(11);
  for (const auto& a : unital_samples()) {
    CAPTURE(a.label());
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto c = test::random_chain(a, k, rng);
      for (std::size_t j = 1; j <= k; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          if (k >= 2) CHECK(face(a, i, face(a, j, c)) == face(a, j - 1, face(a, i, c)));
        }
      }
      for (std::size_t i = 0; i <= k; ++i) {
        const auto s = degeneracy(a, i, c);
        CHECK(face(a, i, s) == c);
        CHECK(face(a, i + 1, s) == c);
      }
    }
  }
  const auto q = field_algebra();
  CHECK(degeneracy(q, 0, t({0})) == t({0, 0}));
  CHECK(test::error_kind([] { degeneracy(zero_algebra(1), 0, t({0})); }) == ErrorKind::NonUnitalAlgebra);
}

TEST_CASE("extra degeneracy contracts the bar complex") {
  std::mt19937_64 rng(13);
  for (const auto& a : unital_samples()) {
    for (std::size_t k = 0; k <= 4; ++k) {
      const auto c = test::random_chain(a, k, rng);
      auto lhs = bar_differential(a, prepend_unit(a, c));
      if (k > 0) lhs += prepend_unit(a, bar_differential(a, c));
      CHECK(lhs == c);
    }
  }
}

TEST_CASE("cyclic operator") {
  CHECK(cyclic_lambda(t({0, 1})) == t({1, 0}, -1));
  CHECK(cyclic_lambda(t({0, 1, 2})) == t({2, 0, 1}));
  CHECK(cyclic_lambda(t({0, 0, 0})) == t({0, 0, 0}));
  CHECK(cyclic_norm(t({0, 1})) == t({0, 1}) - t({1, 0}));
  std::mt19937_64 rng(17);
  const auto a = jet_algebra(2, 1);
  for (std::size_t k = 0; k <= 4; ++k) {
    auto c = test::random_chain(a, k, rng);
    auto l = c;
    for (std::size_t i = 0; i <= k; ++i) l = cyclic_lambda(l);
    CHECK(l == c);
    // (1 - lambda) N = 0
    CHECK((cyclic_norm(c) - cyclic_lambda(cyclic_norm(c))).is_zero());
  }
}

TEST_CASE("Connes operator") {
  const auto q = field_algebra();
  CHECK(connes_B(q, t({0})) == t({0, 0}, 2));
  std::mt19937_64 rng(19);
  for (const auto& a : unital_samples()) {
    CAPTURE(a.label());
    for (std::size_t k = 0; k <= 3; ++k) {
      const auto c = test::random_chain(a, k, rng);
      CHECK(connes_B(a, connes_B(a, c)).is_zero());
      auto anti = boundary(a, connes_B(a, c));
      if (k > 0) anti += connes_B(a, boundary(a, c));
      CHECK(anti.is_zero());
    }
  }
}

TEST_CASE("operators preserve total degree") {
  const auto a = polynomial_algebra_graded(2, 3);
  std::mt19937_64 rng(23);
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto c = test::random_chain(a, k, rng, 6);
    for (const auto& [tuple, v] : c.terms()) {
      const int d = total_degree(a, tuple);
      const auto b = boundary(a, ChainVector::basis(tuple));
      const auto B = connes_B(a, ChainVector::basis(tuple));
      for (const auto& [u, w] : b.terms()) CHECK(total_degree(a, u) == d);
      for (const auto& [u, w] : B.terms()) CHECK(total_degree(a, u) == d);
    }
  }
}
