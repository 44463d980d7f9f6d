#pragma once

#include <doctest.h>

#include <random>

#include "hochlab/chain.hpp"
#include "hochlab/errors.hpp"

namespace test {

using Betti = std::vector<std::size_t>;

inline hochlab::ChainVector random_chain(const hochlab::Algebra& a, std::size_t k, std::mt19937_64& rng,
                                         int max_terms = 4) {
  std::uniform_int_distribution<std::uint32_t> basis(0, static_cast<std::uint32_t>(a.dim() - 1));
  std::uniform_int_distribution<int> terms(1, max_terms), num(-6, 6), den(1, 5);
  hochlab::ChainVector c(k);
  for (int n = terms(rng); n > 0; --n) {
    hochlab::Tuple t(k + 1);
    for (auto& x : t) x = basis(rng);
    hochlab::Rational q(num(rng), den(rng));
    q.canonicalize();
    c.add(t, q);
  }
  return c;
}

template <class F>
hochlab::ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const hochlab::Error& e) {
    return e.kind();
  }
  FAIL("expected a hochlab::Error");
  return hochlab::ErrorKind::InvalidArgument;
}

template <class F>
std::string witness_of(F&& f) {
  try {
    f();
  } catch (const hochlab::Error& e) {
    return e.witness();
  }
  FAIL("expected a hochlab::Error");
  return {};
}

}  // namespace test
