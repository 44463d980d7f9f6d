#include <doctest.h>

#include <filesystem>

#include "hochlab/constructions.hpp"
#include "hochlab/hochschild.hpp"
#include "hochlab/rank_cache.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hochlab;
using test::Betti;

TEST_CASE("complex of Q") {
  const auto c = hochschild_complex(field_algebra(), 4);
  for (std::size_t k = 0; k <= 4; ++k) CHECK(c.dim(k) == 1);
  CHECK(c.differential(1).is_zero());
  CHECK(c.differential(2).at(0, 0) == 1);
  CHECK(c.differential(3).is_zero());
  CHECK(c.differential(0).rows() == 0);
  const auto r = hh(field_algebra(), 4);
  CHECK(r.exact_betti() == Betti{1, 0, 0, 0});
  CHECK(r.provisional_top());
  CHECK(r.betti().size() == 5);
  CHECK(r.theory == "hh");
}

TEST_CASE("chain space bookkeeping") {
  const auto a = jet_algebra(1, 1);
  const auto c = hochschild_complex(a, 3);
  CHECK(c.dim(2) == 8);
  CHECK(c.basis(1).front() == Tuple{0, 0});
  const ChainVector x = ChainVector::basis({1, 0}, Rational(3)) + ChainVector::basis({0, 1}, Rational(-1));
  CHECK(c.chain(1, c.coordinates(x)) == x);
  CHECK(c.index_of(1, {1, 1}) == 3u);
  CHECK(!c.index_of(1, {0, 2}));

  const auto p = polynomial_algebra_graded(1, 4);
  for (std::size_t k = 0; k <= 3; ++k) {
    CHECK(chain_space_dim(ComplexKind::Hochschild, p, k, GradedPiece{2}) == binomial(k + 2, 2));
  }
  CHECK(chain_space_dim(ComplexKind::Normalized, a, 3, {}) == 2);
  CHECK(chain_space_dim(ComplexKind::Normalized, field_algebra(), 2, {}) == 0);
  CHECK(chain_space_dim(ComplexKind::Hochschild, group_algebra(symmetric_group_3()), 3, {}) == 1296);
}

TEST_CASE("dual numbers") {
  CHECK(hh(jet_algebra(1, 1), 4).exact_betti() == Betti{2, 1, 1, 1});
  CHECK(hh_truncated_poly_oracle(1, 4) == Betti{2, 1, 1, 1, 1});
  CHECK(hh_truncated_poly_oracle(0, 3) == Betti{1, 0, 0, 0});
  CHECK(hh_truncated_poly_oracle(2, 3) == Betti{3, 2, 2, 2});
}

TEST_CASE("agreement with the brute-force complex") {
  const std::vector<std::pair<Algebra, std::size_t>> cases = {
      {field_algebra(), 4},
      {jet_algebra(1, 1), 4},
      {jet_algebra(1, 2), 3},
      {jet_algebra(2, 1), 3},
      {group_algebra(cyclic_group(2)), 4},
      {group_algebra(cyclic_group(3)), 3},
      {matrix_algebra(field_algebra(), 2), 3},
      {zero_algebra(2), 3},
      {product_algebra(field_algebra(), field_algebra()), 4},
      {group_algebra(symmetric_group_3()), 3},
  };
  for (const auto& [a, n] : cases) {
    CAPTURE(a.label());
    CHECK(hh(a, n).exact_betti() == oracle::hh(a, n));
  }
}

TEST_CASE("truncated polynomials against the periodic resolution") {
  for (int m = 0; m <= 3; ++m) {
    CAPTURE(m);
    const auto expected = hh_truncated_poly_oracle(m, 4);
    CHECK(hh(jet_algebra(1, m), 4).exact_betti() == Betti(expected.begin(), expected.end() - 1));
  }
}

TEST_CASE("normalized complex") {
  for (const auto& a : {jet_algebra(1, 1), group_algebra(cyclic_group(2)), matrix_algebra(field_algebra(), 2),
                        unitalization(zero_algebra(1)).algebra}) {
    CAPTURE(a.label());
    CHECK(normalized_hh(a, 4).exact_betti() == hh(a, 4).exact_betti());
  }
  const auto q = normalized_hh(field_algebra(), 4);
  CHECK(q.betti() == Betti{1, 0, 0, 0, 0});
  CHECK(test::error_kind([] { normalized_hh(zero_algebra(1), 2); }) == ErrorKind::NonUnitalAlgebra);
}

TEST_CASE("Morita invariance and additivity") {
  const auto q = hh(field_algebra(), 3).exact_betti();
  CHECK(hh(matrix_algebra(field_algebra(), 2), 3).exact_betti() == q);
  CHECK(hh(matrix_algebra(field_algebra(), 3), 3).exact_betti() == q);
  const auto z2 = group_algebra(cyclic_group(2));
  CHECK(hh(matrix_algebra(z2, 2), 3).exact_betti() == hh(z2, 3).exact_betti());

  const auto j = jet_algebra(1, 1);
  const auto sum = hh(product_algebra(j, z2), 3).exact_betti();
  const auto hj = hh(j, 3).exact_betti(), hz = hh(z2, 3).exact_betti();
  for (std::size_t k = 0; k < 3; ++k) CHECK(sum[k] == hj[k] + hz[k]);
}

TEST_CASE("representatives are cycles") {
  ComputeOptions opt;
  opt.with_representatives = true;
  const auto a = jet_algebra(1, 2);
  const auto r = hh(a, 3, {}, opt);
  for (const auto& d : r.degrees) {
    if (d.provisional) continue;
    CHECK(d.representatives.size() == d.betti);
    for (const auto& z : d.representatives) CHECK(boundary(a, z).is_zero());
  }
}

TEST_CASE("graded HKR") {
  CHECK(kahler_form_dim(1, 0, 0) == 1);
  CHECK(kahler_form_dim(2, 1, 2) == 4);
  CHECK(kahler_form_dim(2, 3, 5) == 0);
  CHECK(kahler_form_dim(3, 2, 3) == 9);
  CHECK(monomial_count(3, 2) == 6);
  for (int n = 1; n <= 2; ++n) {
    for (const auto& row : hkr_check(n, 2, 3)) {
      CAPTURE(n);
      CAPTURE(row.k);
      CAPTURE(row.D);
      CHECK(row.equal);
      CHECK(row.betti == kahler_form_dim(n, row.k, row.D));
    }
  }
}

TEST_CASE("graded pieces") {
  const auto p = polynomial_algebra_graded(1, 4);
  CHECK(test::error_kind([&] { hh(p, 2); }) == ErrorKind::GradedPieceRequired);
  CHECK(test::error_kind([&] { hh(p, 2, GradedPiece{5}); }) == ErrorKind::PieceExceedsCap);
  CHECK(hh(p, 3, GradedPiece{2}).exact_betti() == Betti{1, 1, 0});
  CHECK(hh(p, 3, GradedPiece{0}).exact_betti() == Betti{1, 0, 0});
  CHECK(hh(p, 3, GradedPiece{2}).graded_piece == 2);
  // pieces add up to the whole complex of an honest graded algebra
  const auto j = jet_algebra(1, 2);
  std::size_t total = 0;
  for (int D = 0; D <= 6; ++D) total += hh(j, 2, GradedPiece{D}).exact_betti()[1];
  CHECK(total == hh(j, 2).exact_betti()[1]);
}

TEST_CASE("resource ceiling") {
  ComputeOptions opt;
  opt.max_dim = 100;
  CHECK(test::error_kind([&] { hh(group_algebra(cyclic_group(3)), 4, {}, opt); }) == ErrorKind::ResourceLimit);
  try {
    hh(group_algebra(cyclic_group(3)), 4, {}, opt);
  } catch (const ResourceLimitError& e) {
    CHECK(e.ceiling() == 100);
    CHECK(e.requested() == 243);
  }
}

TEST_CASE("bar complex") {
  const auto q = bar_acyclicity_check(field_algebra(), 4);
  CHECK(q.h_unital);
  CHECK(q.cokernel_dim0 == 0);
  CHECK(bar_acyclicity_check(jet_algebra(1, 2), 3).h_unital);
  const auto z = bar_acyclicity_check(zero_algebra(1), 3);
  CHECK(!z.h_unital);
  CHECK(z.cokernel_dim0 == 1);
  CHECK(!z.acyclic[1]);
  CHECK(bar_acyclicity_check(unitalization(zero_algebra(1)).algebra, 4).h_unital);
}

TEST_CASE("homology through the rank cache") {
  const auto dir = std::filesystem::temp_directory_path() / "hochlab_hh_cache_test";
  std::filesystem::remove_all(dir);
  RankCache cache(dir / "ranks.jsonl");
  ComputeOptions opt;
  opt.cache = &cache;
  const auto a = jet_algebra(1, 1);
  const auto first = hh(a, 3, {}, opt);
  CHECK(cache.misses() > 0);
  CHECK(cache.hits() == 0);
  const auto misses = cache.misses();
  const auto second = hh(a, 3, {}, opt);
  CHECK(cache.misses() == misses);
  CHECK(cache.hits() > 0);
  CHECK(first.betti() == second.betti());
  std::filesystem::remove_all(dir);
}
