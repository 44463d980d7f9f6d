#include <doctest.h>

#include <random>

#include "hochlab/linalg.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hochlab;

namespace {

SparseMatrix random_matrix(std::size_t rows, std::size_t cols, double density, long magnitude,
                           std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<long> value(-magnitude, magnitude);
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> triplets;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (keep(rng)) triplets.emplace_back(r, c, Rational(value(rng)));
    }
  }
  return SparseMatrix::from_triplets(rows, cols, triplets);
}

// Product of random factors of inner dimension r: rank <= r, and = r generically.
SparseMatrix low_rank(std::size_t rows, std::size_t cols, std::size_t r, long magnitude, std::mt19937_64& rng) {
  return random_matrix(rows, r, 0.6, magnitude, rng) * random_matrix(r, cols, 0.6, magnitude, rng);
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(SparseMatrix(3, 4)) == 0);
  CHECK(rank(SparseMatrix::identity(5)) == 5);
  CHECK(rank(SparseMatrix::from_dense({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(SparseMatrix::from_dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  CHECK(rank(SparseMatrix::from_dense({{0, 1}, {1, 0}})) == 2);
  CHECK(rank_of_vectors(3, {{{0, Rational(1)}}, {{0, Rational(2)}}, {{2, Rational(1)}}}) == 2);
}

TEST_CASE("rank agrees with dense elimination and with the transpose") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 14, cols = 1 + rng() % 14;
    const auto m = trial % 2 ? random_matrix(rows, cols, 0.3, 4, rng)
                             : low_rank(rows, cols, 1 + rng() % 5, 9, rng);
    const auto r = rank(m);
    CHECK(r == oracle::rank(m));
    CHECK(r == rank(m.transpose()));
  }
}

TEST_CASE("rank with entries beyond machine words") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = low_rank(12, 11, 4 + trial % 5, 1L << 40, rng);
    CHECK(rank(m) == oracle::rank(m));
  }
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> big;
  const Rational huge(Integer("123456789012345678901234567890"));
  big.emplace_back(0, 0, huge);
  big.emplace_back(0, 1, huge + 1);
  big.emplace_back(1, 0, huge - 1);
  big.emplace_back(1, 1, huge);
  CHECK(rank(SparseMatrix::from_triplets(2, 2, big)) == 2);  // det = 1
  big.emplace_back(2, 0, Rational(1, 3));
  CHECK(rank(SparseMatrix::from_triplets(3, 2, big)) == 2);
}

TEST_CASE("kernel basis") {
  const auto m = SparseMatrix::from_dense({{1, 1, 0}, {0, 0, 1}});
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(m.apply(k[0]).empty());
  CHECK(kernel_basis(SparseMatrix::identity(3)).empty());

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = low_rank(6 + rng() % 6, 5 + rng() % 8, 1 + rng() % 4, 5, rng);
    const auto basis = kernel_basis(a);
    CHECK(basis.size() == a.cols() - rank(a));
    for (const auto& v : basis) CHECK(a.apply(v).empty());
    CHECK(rank_of_vectors(a.cols(), basis) == basis.size());
  }
}

TEST_CASE("homology at a node") {
  // 0 -> Q --(1,1)--> Q^2 --(1,-1)--> Q -> 0
  const auto d_in = SparseMatrix::from_dense({{1}, {1}});
  const auto d_out = SparseMatrix::from_dense({{1, -1}});
  const auto h = homology_at(d_out, d_in, true);
  CHECK(h.dim_chains == 2);
  CHECK(h.dim_kernel == 1);
  CHECK(h.rank_incoming == 1);
  CHECK(h.betti == 0);
  CHECK(h.representatives.empty());

  const auto h2 = homology_at(SparseMatrix(0, 2), SparseMatrix(2, 0), true);
  CHECK(h2.betti == 2);
  CHECK(h2.representatives.size() == 2);

  const auto bad = SparseMatrix::from_dense({{1}, {0}});
  CHECK(test::error_kind([&] { homology_at(d_out, bad); }) == ErrorKind::NotAComplex);
  CHECK(test::witness_of([&] { homology_at(d_out, bad); }) == "column 0");
}

TEST_CASE("echelon forms") {
  RationalEchelon r(3);
  CHECK(r.insert({{0, Rational(2)}, {1, Rational(4)}}));
  CHECK(!r.insert({{0, Rational(1)}, {1, Rational(2)}}));
  CHECK(r.contains({{0, Rational(-3)}, {1, Rational(-6)}}));
  CHECK(!r.contains({{2, Rational(1)}}));
  CHECK(r.insert({{1, Rational(1)}, {2, Rational(1)}}));
  for (const auto& row : r.reduced_rows()) CHECK(row.size() >= 1);

  IntegerEchelon z(2);
  CHECK(z.insert({{0, Rational(3)}, {1, Rational(6)}}));
  CHECK(z.contains({{0, Rational(1, 2)}, {1, Rational(1)}}));
  CHECK(z.rank() == 1);
}

TEST_CASE("quotients and induced maps") {
  // S = span(e0 + e1) in Q^3
  const Subspace s(3, {{{0, Rational(1)}, {1, Rational(1)}}});
  CHECK(s.dim() == 1);
  CHECK(s.quotient_dim() == 2);
  CHECK(s.project({{0, Rational(1)}, {1, Rational(1)}}).empty());
  CHECK(s.project({{0, Rational(1)}}) == s.project({{1, Rational(-1)}}));
  CHECK(s.basis().size() == 1);

  // swap of the first two coordinates preserves S; on Q^3/S it acts by -1 on e0, fixes e2
  const auto swap = SparseMatrix::from_dense({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  const auto induced = induced_map(swap, s, s);
  CHECK(induced.rows() == 2);
  CHECK(induced.cols() == 2);
  CHECK(rank(induced) == 2);
  CHECK((induced * induced) == SparseMatrix::identity(2));
}

TEST_CASE("Euler characteristic of random complexes") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    // d_1 = A, d_2 = a kernel basis of A as columns
    const auto a = low_rank(5, 7, 1 + rng() % 4, 3, rng);
    const auto ker = kernel_basis(a);
    SparseMatrix d2(a.cols(), ker.size());
    for (std::size_t c = 0; c < ker.size(); ++c) d2.set_column(c, ker[c]);
    const auto h0 = homology_at(SparseMatrix(0, a.rows()), a);
    const auto h1 = homology_at(a, d2);
    const auto h2 = homology_at(d2, SparseMatrix(d2.cols(), 0));
    const long chi_betti = long(h0.betti) - long(h1.betti) + long(h2.betti);
    const long chi_dims = long(a.rows()) - long(a.cols()) + long(d2.cols());
    CHECK(chi_betti == chi_dims);
    CHECK(h1.betti == 0);
  }
}
