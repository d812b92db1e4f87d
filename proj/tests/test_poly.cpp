#include <doctest.h>

#include <random>

#include "hk/cycle_structure.hpp"
#include "hk/errors.hpp"
#include "hk/poly.hpp"

using namespace hk;

namespace {

  // Laplace expansion along the first row.
  Poly cofactor_det(PolyMatrix const& m) {
    std::size_t const n = m.rows();
    if (n == 0) {
      return Poly::constant(1);
    }
    if (n == 1) {
      return m(0, 0);
    }
    Poly total;
    for (std::size_t c = 0; c < n; ++c) {
      PolyMatrix minor(n - 1, n - 1);
      for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t k = 0, j = 0; k < n; ++k) {
          if (k != c) {
            minor(r - 1, j++) = m(r, k);
          }
        }
      }
      Poly const term = m(0, c) * cofactor_det(minor);
      total           = c % 2 == 0 ? total + term : total - term;
    }
    return total;
  }

  long naive_binomial(long top, long bottom) {
    if (bottom < 0 || top < bottom) {
      return 0;
    }
    long out = 1;
    for (long k = 1; k <= bottom; ++k) {
      out = out * (top - bottom + k) / k;
    }
    return out;
  }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK(Poly{1, 1} * Poly{1, -1} == Poly{1, 0, -1});
  CHECK(Poly{3, 0, 2} + Poly{} == Poly{3, 0, 2});
  CHECK(Poly{1, 0, 1}.eval(2) == 5);
  CHECK(Poly{1, 2} - Poly{1, 2} == Poly{});
  CHECK(Poly{}.is_zero());
  CHECK(Poly{}.degree() == -1);
  CHECK(Poly{0, 0, 0}.is_zero());
  CHECK(Poly{1, 0, 0}.coefficients().size() == 1);
  CHECK(Poly::monomial(3).degree() == 3);
  CHECK((-Poly{1, -2}) == Poly{-1, 2});
  CHECK(Poly{1, 0, -1}.to_string() == "1 - x^2");
  CHECK(Poly{}.to_string() == "0");
}

TEST_CASE("exact division") {
  CHECK(divexact(Poly{1, 0, -1}, Poly{1, 1}) == Poly{1, -1});
  CHECK(divexact(Poly{0, 0, 6}, Poly{0, 2}) == Poly{0, 3});
  CHECK_THROWS_AS(divexact(Poly{1, 0, 1}, Poly{1, 1}), std::domain_error);
  CHECK_THROWS_AS(divexact(Poly{1}, Poly{}), std::domain_error);
}

TEST_CASE("determinant examples") {
  CHECK(det(PolyMatrix::identity(3)) == Poly{1});
  CHECK(det(PolyMatrix{{Poly{1}, Poly{1}}, {Poly{1}, Poly{1}}}).is_zero());
  CHECK(det(PolyMatrix{{Poly{}, Poly{1}}, {Poly{1}, Poly{}}}) == Poly{-1});
  CHECK_THROWS_AS(det(PolyMatrix(2, 3)), NotSquare);
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  std::mt19937_64                    rng(3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> degree(-1, 3);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t const n = 1 + trial % 4;
    PolyMatrix        m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<mpz_class> cs;
        for (int d = degree(rng); d >= 0; --d) {
          cs.emplace_back(coeff(rng));
        }
        m(r, c) = Poly(cs);
      }
    }
    // Zero pivots happen often with sparse entries; make some rows equal.
    if (trial % 7 == 0 && n >= 2) {
      for (std::size_t c = 0; c < n; ++c) {
        m(1, c) = m(0, c);
      }
    }
    CHECK(det(m) == cofactor_det(m));
  }
}

TEST_CASE("Bareiss agrees with cofactor expansion on sandwich matrices") {
  for (auto [n, i] : {std::pair<std::size_t, std::size_t>{3, 0}, {3, 1}, {4, 0}, {4, 2}}) {
    auto const lifted = lift_sandwich(sandwich_matrix(n, i));
    CHECK(det(lifted) == cofactor_det(lifted));
  }
}

TEST_CASE("lift_sandwich maps powers and theta") {
  auto const m = sandwich_matrix(3, 0);
  auto const p = lift_sandwich(m);
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (std::size_t c = 0; c < m.columns.size(); ++c) {
      auto const& e = m.at(r, c);
      CHECK(p(r, c) == (e.is_theta() ? Poly{} : Poly::monomial(e.exponent())));
    }
  }
}

TEST_CASE("quotient ring shape") {
  CHECK(quotient_ring_shape(3) == std::vector<std::uint64_t>{3, 3});
  CHECK(quotient_ring_shape(4) == std::vector<std::uint64_t>{4, 6, 4});
  CHECK(quotient_ring_shape(5) == std::vector<std::uint64_t>{5, 10, 10, 5});
  CHECK_THROWS_AS(quotient_ring_shape(2), std::invalid_argument);
  for (std::size_t n = 3; n <= 12; ++n) {
    auto const shape = quotient_ring_shape(n);
    CHECK(shape.size() == n - 1);
    for (std::size_t i = 0; i < shape.size(); ++i) {
      CHECK(shape[i] == shape[n - 2 - i]);
      CHECK(shape[i] == static_cast<std::uint64_t>(naive_binomial(n, i + 1)));
    }
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(-1, 0) == 1);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 2) == 3);
}

TEST_CASE("binomial identity") {
  // 3 C(1,0) + 2 C(2,1) + 1 C(3,2) = 10 = C(5,2)
  CHECK(3 * naive_binomial(1, 0) + 2 * naive_binomial(2, 1) + naive_binomial(3, 2) == 10);
  CHECK(verify_binomial_identity(5, 1));
  CHECK(verify_binomial_identity(3, 0));
  for (std::size_t n = 3; n <= 12; ++n) {
    CHECK(1 + naive_binomial(n - 2, 1) + naive_binomial(n - 3, 0) == static_cast<long>(n));
    for (std::size_t i = 0; i + 3 <= n; ++i) {
      CHECK(verify_binomial_identity(n, i));
    }
  }
  CHECK_THROWS_AS(verify_binomial_identity(5, 3), LayerOutOfRange);
}
