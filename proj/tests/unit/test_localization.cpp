#include <doctest.h>

#include "hochlab/builtins.hpp"
#include "hochlab/constructions.hpp"
#include "hochlab/cyclic.hpp"
#include "hochlab/hochschild.hpp"
#include "hochlab/localization.hpp"
#include "support.hpp"

using namespace hochlab;
using test::Betti;

namespace {

Algebra qxq() { return product_algebra(field_algebra(), field_algebra()); }

}  // namespace

TEST_CASE("jet diagonal ideal") {
  const auto a = jet_algebra(1, 1);
  CHECK(jet_diagonal_ideal(a, 0).empty());
  const auto j1 = jet_diagonal_ideal(a, 1);
  REQUIRE(j1.size() == 1);
  // (x(x)1 - 1(x)x)^2 = -2 x(x)x
  const auto only = j1[0];
  REQUIRE(only.size() == 1);
  CHECK(only.terms().begin()->first == Tuple{1, 1});
  CHECK(jet_diagonal_ideal(a, 1, 1).size() == 2);
  CHECK(jet_diagonal_ideal(jet_algebra(1, 0), 2).empty());

  auto s = jet_diagonal_subcomplex(a, 3);
  CHECK(s.max_degree() == 3);
  CHECK(check_boundary_stability(a, s).stable);
  CHECK(s.closure_verified);
  auto s2 = jet_diagonal_subcomplex(jet_algebra(2, 1), 2);
  CHECK(check_boundary_stability(jet_algebra(2, 1), s2).stable);
}

TEST_CASE("mixed tuples") {
  const auto a = qxq();
  CHECK(is_mixed(a, {0, 1}));
  CHECK(!is_mixed(a, {1, 1, 1}));
  const auto m = mixed_subcomplex(a, 2);
  CHECK(m.generators[0].empty());
  CHECK(m.generators[1].size() == 2);
  CHECK(m.generators[2].size() == 6);
  CHECK(mixed_subcomplex(points_algebra(3), 1).generators[1].size() == 6);
}

TEST_CASE("mixed subcomplex is stable and acyclic") {
  for (const auto& a : {qxq(), points_algebra(3), product_algebra(jet_algebra(1, 1), field_algebra())}) {
    CAPTURE(a.label());
    auto s = mixed_subcomplex(a, 3);
    CHECK(check_boundary_stability(a, s).stable);
    const auto r = verify_contractible(a, s);
    CHECK(r.contractible);
    CHECK(r.degree0 == 0);
    CHECK(r.betti[1] == 0);
    CHECK(r.betti[2] == 0);
  }
}

TEST_CASE("stability must be checked first") {
  const auto a = qxq();
  auto s = mixed_subcomplex(a, 2);
  CHECK(test::error_kind([&] { verify_contractible(a, s); }) == ErrorKind::NotBoundaryStable);
  CHECK(test::error_kind([&] { diagonal_quotient(a, s); }) == ErrorKind::NotBoundaryStable);
}

TEST_CASE("a corrupted generating set is caught") {
  const auto a = qxq();
  auto s = mixed_subcomplex(a, 2);
  s.generators[1].pop_back();
  const auto r = check_boundary_stability(a, s);
  CHECK(!r.stable);
  CHECK(r.degree == 2u);
  REQUIRE(r.witness);
  CHECK(r.witness->degree() == 1);
  CHECK(!s.closure_verified);
}

TEST_CASE("quotient by the mixed subcomplex") {
  const auto a = qxq();
  auto s = mixed_subcomplex(a, 3);
  REQUIRE(check_boundary_stability(a, s).stable);
  const auto q = diagonal_quotient(a, s);
  CHECK(q.beta_squared_zero);
  CHECK(q.chain_map);
  CHECK(q.dim_E == std::vector<std::size_t>{2, 2, 2, 2});
  CHECK(q.betti_E == Betti{2, 0, 0});
  CHECK(q.betti_C == hh(a, 3).exact_betti());
  CHECK(q.induced_rank == Betti{2, 0, 0});
  for (bool b : q.quasi_isomorphic) CHECK(b);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(q.dim_C[k] == q.dim_J[k] + q.dim_E[k]);
}

TEST_CASE("quotient by the jet diagonal ideal") {
  const auto a = jet_algebra(1, 1);
  auto s = jet_diagonal_subcomplex(a, 3);
  REQUIRE(check_boundary_stability(a, s).stable);
  const auto q = diagonal_quotient(a, s);
  CHECK(q.beta_squared_zero);
  CHECK(q.chain_map);
  CHECK(q.betti_C == Betti{2, 1, 1});
  CHECK(q.betti_E[0] == 2);
  CHECK(q.quasi_isomorphic[0]);
  CHECK(q.dim_J[1] == 1);
}

TEST_CASE("orbits") {
  const auto swap = orbit_decomposition(swap_groupoid());
  REQUIRE(swap.size() == 1);
  CHECK(swap[0].size() == 2);
  CHECK(swap[0].isotropy.order() == 1);

  const auto point = orbit_decomposition(z2_point_groupoid());
  REQUIRE(point.size() == 1);
  CHECK(point[0].size() == 1);
  CHECK(point[0].isotropy.order() == 2);

  const auto g = two_orbit_groupoid();
  const auto two = orbit_decomposition(g);
  REQUIRE(two.size() == 2);
  CHECK(g.objects[two[0].base_point] == "a");
  CHECK(two[0].size() == 2);
  CHECK(two[0].isotropy.order() == 1);
  CHECK(g.objects[two[1].base_point] == "c");
  CHECK(two[1].isotropy.order() == 2);
  CHECK(restrict_groupoid(g, {2}).arrows.size() == 2);
  CHECK(restrict_groupoid(g, {0, 1}).arrows.size() == 4);
}

TEST_CASE("stalk reduction") {
  const struct {
    GroupoidSpec g;
    Betti hh;
  } cases[] = {{swap_groupoid(), {1, 0, 0}}, {z2_point_groupoid(), {2, 0, 0}}, {two_orbit_groupoid(), {3, 0, 0}}};
  for (const auto& c : cases) {
    CAPTURE(c.g.name);
    const auto r = stalk_reduction_check(c.g, 3);
    CHECK(r.match);
    CHECK(r.block_decomposition);
    CHECK(r.lhs == c.hh);
    CHECK(r.rhs == c.hh);
    for (const auto& o : r.orbits) CHECK(o.matrix_isomorphism);
  }
}

TEST_CASE("localization commutes with lambda") {
  for (const auto& a : {qxq(), points_algebra(3), product_algebra(jet_algebra(1, 1), field_algebra())}) {
    const auto r = localization_commutes_with_lambda_check(a, 3);
    CHECK(r.commutes);
    CHECK(r.chains_checked > 0);
    CHECK(!r.witness);
  }
  const auto a = product_algebra(jet_algebra(1, 1), field_algebra());
  const auto bad = localization_commutes_with_lambda_check(a, 2, [](const Tuple& t) { return t == Tuple{0, 1}; });
  CHECK(!bad.commutes);
  REQUIRE(bad.witness);
}
