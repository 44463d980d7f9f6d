#include "hochlab/chain.hpp"

#include "hochlab/errors.hpp"

namespace hochlab {

namespace {

void add_term(TermMap& out, const Tuple& t, const Rational& coeff) {
  if (is_zero(coeff)) return;
  auto [it, inserted] = out.try_emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (is_zero(it->second)) out.erase(it);
  }
}

ChainVector from_terms(std::size_t degree, TermMap&& terms) {
  ChainVector c(degree);
  for (auto& [t, v] : terms) c.add(t, v);
  return c;
}

const SparseVector& require_unit(const Algebra& a) {
  if (!a.is_unital()) throw Error(ErrorKind::NonUnitalAlgebra, "operator needs a unital algebra", a.label());
  return *a.unit();
}

Tuple rotate(const Tuple& t) {
  Tuple r(t.size());
  r[0] = t.back();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) r[i + 1] = t[i];
  return r;
}

}  // namespace

std::size_t TupleHash::operator()(const Tuple& t) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : t) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

ChainVector ChainVector::basis(Tuple t, const Rational& coeff) {
  if (t.empty()) throw Error(ErrorKind::InvalidArgument, "a basis tuple needs at least one slot");
  ChainVector c(t.size() - 1);
  c.add(t, coeff);
  return c;
}

Rational ChainVector::coefficient(const Tuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ChainVector::add(const Tuple& t, const Rational& coeff) {
  if (t.size() != degree_ + 1) {
    throw Error(ErrorKind::InvalidArgument, "tuple length does not match chain degree",
                std::to_string(t.size()) + " vs " + std::to_string(degree_ + 1));
  }
  add_term(terms_, t, coeff);
}

ChainVector& ChainVector::operator+=(const ChainVector& other) {
  if (other.degree_ != degree_ && !other.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "adding chains of different degrees");
  }
  for (const auto& [t, v] : other.terms_) add_term(terms_, t, v);
  return *this;
}

ChainVector& ChainVector::operator-=(const ChainVector& other) {
  if (other.degree_ != degree_ && !other.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "subtracting chains of different degrees");
  }
  for (const auto& [t, v] : other.terms_) add_term(terms_, t, -v);
  return *this;
}

ChainVector& ChainVector::operator*=(const Rational& scale) {
  if (hochlab::is_zero(scale)) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= scale;
  return *this;
}

int total_degree(const Algebra& a, const Tuple& t) {
  int d = 0;
  for (auto i : t) d += a.degree(i);
  return d;
}

void check_chain(const Algebra& a, const ChainVector& c) {
  for (const auto& [t, v] : c.terms()) {
    for (auto i : t) {
      if (i >= a.dim()) throw Error(ErrorKind::IndexOutOfRange, "tuple entry exceeds algebra dimension", std::to_string(i));
    }
  }
}

void accumulate_face(const Algebra& a, std::size_t i, const Tuple& t, const Rational& coeff, TermMap& out) {
  const std::size_t k = t.size() - 1;
  Tuple r(k);
  if (i < k) {
    for (std::size_t j = 0; j < i; ++j) r[j] = t[j];
    for (std::size_t j = i + 2; j <= k; ++j) r[j - 1] = t[j];
    for (const auto& e : a.product(t[i], t[i + 1])) {
      r[i] = e.index;
      add_term(out, r, coeff * e.value);
    }
  } else {
    for (std::size_t j = 1; j < k; ++j) r[j] = t[j];
    for (const auto& e : a.product(t[k], t[0])) {
      r[0] = e.index;
      add_term(out, r, coeff * e.value);
    }
  }
}

void accumulate_boundary(const Algebra& a, const Tuple& t, const Rational& coeff, TermMap& out, bool bar) {
  const std::size_t k = t.size() - 1;
  if (k == 0) return;
  const std::size_t last = bar ? k - 1 : k;
  for (std::size_t i = 0; i <= last; ++i) accumulate_face(a, i, t, i % 2 == 0 ? coeff : Rational(-coeff), out);
}

ChainVector face(const Algebra& a, std::size_t i, const ChainVector& c) {
  const std::size_t k = c.degree();
  if (k == 0 || i > k) {
    throw Error(ErrorKind::IndexOutOfRange, "face index out of range",
                "i=" + std::to_string(i) + ", k=" + std::to_string(k));
  }
  check_chain(a, c);
  TermMap out;
  for (const auto& [t, v] : c.terms()) accumulate_face(a, i, t, v, out);
  return from_terms(k - 1, std::move(out));
}

ChainVector boundary(const Algebra& a, const ChainVector& c) {
  if (c.degree() == 0) return ChainVector(0);
  check_chain(a, c);
  TermMap out;
  for (const auto& [t, v] : c.terms()) accumulate_boundary(a, t, v, out, false);
  return from_terms(c.degree() - 1, std::move(out));
}

ChainVector bar_differential(const Algebra& a, const ChainVector& c) {
  if (c.degree() == 0) return ChainVector(0);
  check_chain(a, c);
  TermMap out;
  for (const auto& [t, v] : c.terms()) accumulate_boundary(a, t, v, out, true);
  return from_terms(c.degree() - 1, std::move(out));
}

ChainVector degeneracy(const Algebra& a, std::size_t i, const ChainVector& c) {
  const SparseVector& unit = require_unit(a);
  if (i > c.degree()) {
    throw Error(ErrorKind::IndexOutOfRange, "degeneracy index out of range",
                "i=" + std::to_string(i) + ", k=" + std::to_string(c.degree()));
  }
  check_chain(a, c);
  ChainVector out(c.degree() + 1);
  for (const auto& [t, v] : c.terms()) {
    Tuple r(t.size() + 1);
    for (std::size_t j = 0; j <= i; ++j) r[j] = t[j];
    for (std::size_t j = i + 1; j < t.size(); ++j) r[j + 1] = t[j];
    for (const auto& u : unit) {
      r[i + 1] = u.index;
      out.add(r, v * u.value);
    }
  }
  return out;
}

ChainVector prepend_unit(const Algebra& a, const ChainVector& c) {
  const SparseVector& unit = require_unit(a);
  check_chain(a, c);
  ChainVector out(c.degree() + 1);
  for (const auto& [t, v] : c.terms()) {
    Tuple r(t.size() + 1);
    for (std::size_t j = 0; j < t.size(); ++j) r[j + 1] = t[j];
    for (const auto& u : unit) {
      r[0] = u.index;
      out.add(r, v * u.value);
    }
  }
  return out;
}

ChainVector cyclic_lambda(const ChainVector& c) {
  const Rational sign = c.degree() % 2 == 0 ? 1 : -1;
  ChainVector out(c.degree());
  for (const auto& [t, v] : c.terms()) out.add(rotate(t), sign * v);
  return out;
}

ChainVector cyclic_norm(const ChainVector& c) {
  ChainVector out = c;
  ChainVector power = c;
  for (std::size_t j = 1; j <= c.degree(); ++j) {
    power = cyclic_lambda(power);
    out += power;
  }
  return out;
}

void accumulate_connes_B(const Algebra& a, const Tuple& t, const Rational& coeff, TermMap& out) {
  const SparseVector& unit = require_unit(a);
  const std::size_t k = t.size() - 1;
  // N: lambda^j(t) = sign_j * rot^j(t), where each step contributes (-1)^k.
  Tuple rotated = t;
  Rational sign = 1;
  const Rational step = k % 2 == 0 ? 1 : -1;
  // (1 - lambda) on C_{k+1} carries the sign (-1)^{k+1}.
  const Rational lambda_sign = (k + 1) % 2 == 0 ? 1 : -1;
  Tuple s(k + 2);
  for (std::size_t j = 0; j <= k; ++j) {
    for (const auto& u : unit) {
      s[0] = u.index;
      for (std::size_t m = 0; m <= k; ++m) s[m + 1] = rotated[m];
      const Rational c = coeff * sign * u.value;
      add_term(out, s, c);
      add_term(out, rotate(s), -lambda_sign * c);
    }
    rotated = rotate(rotated);
    sign *= step;
  }
}

ChainVector connes_B(const Algebra& a, const ChainVector& c) {
  require_unit(a);
  check_chain(a, c);
  TermMap out;
  for (const auto& [t, v] : c.terms()) accumulate_connes_B(a, t, v, out);
  return from_terms(c.degree() + 1, std::move(out));
}

}  // namespace hochlab
