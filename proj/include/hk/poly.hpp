#ifndef HK_POLY_HPP_
#define HK_POLY_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hk/cycle_structure.hpp"

namespace hk {

  //! Univariate polynomial with arbitrary-precision integer coefficients.
  //! Coefficient k multiplies x^k; there is never a trailing zero, so the
  //! zero polynomial has no coefficients.
  class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<mpz_class> coefficients);
    Poly(std::initializer_list<long> coefficients);

    static Poly constant(mpz_class c);
    static Poly monomial(std::size_t degree, mpz_class c = 1);

    std::vector<mpz_class> const& coefficients() const noexcept {
      return _c;
    }

    bool is_zero() const noexcept {
      return _c.empty();
    }

    // Degree of the zero polynomial is reported as -1.
    long degree() const noexcept {
      return static_cast<long>(_c.size()) - 1;
    }

    mpz_class eval(mpz_class const& x) const;

    Poly& operator+=(Poly const& other);
    Poly& operator-=(Poly const& other);

    friend Poly operator+(Poly a, Poly const& b) {
      return a += b;
    }
    friend Poly operator-(Poly a, Poly const& b) {
      return a -= b;
    }
    friend Poly operator*(Poly const& a, Poly const& b);
    Poly        operator-() const;

    bool operator==(Poly const&) const = default;

    //! Quotient of an exact division; throws std::domain_error if the
    //! divisor is zero or does not divide exactly over the integers.
    friend Poly divexact(Poly const& a, Poly const& b);

    // e.g. "1 - x^2"
    std::string to_string() const;

   private:
    void trim();

    std::vector<mpz_class> _c;
  };

  //! Dense row-major matrix of polynomials.
  class PolyMatrix {
   public:
    PolyMatrix(std::size_t rows, std::size_t cols);
    PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows);

    static PolyMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Poly& operator()(std::size_t r, std::size_t c) {
      return _entries.at(r * _cols + c);
    }
    Poly const& operator()(std::size_t r, std::size_t c) const {
      return _entries.at(r * _cols + c);
    }

    bool operator==(PolyMatrix const&) const = default;

   private:
    std::size_t       _rows;
    std::size_t       _cols;
    std::vector<Poly> _entries;
  };

  //! Power(m) -> x^m, Theta -> 0.
  PolyMatrix lift_sandwich(SandwichMatrix const& m);

  //! Fraction-free (Bareiss) elimination with exact polynomial division.
  //! Throws NotSquare.
  Poly det(PolyMatrix const& m);

  //! Block sizes [C(n,1), ..., C(n,n-1)] of the classical quotient ring of
  //! K[C_n]. Throws std::invalid_argument for n < 3.
  std::vector<std::uint64_t> quotient_ring_shape(std::size_t n);

  mpz_class binomial(long top, long bottom);

  //! Checks, exactly, that
  //!   1 + sum_{s=1}^{i+1} (C(n-s-1, i-s+2) + s C(n-s-2, i-s+1)),
  //!   sum_{k=0}^{i+1} (i+2-k) C(n-i-3+k, k)
  //! and C(n, i+1) coincide. Throws LayerOutOfRange unless i <= n - 3.
  bool verify_binomial_identity(std::size_t n, std::size_t i);

}  // namespace hk

#endif  // HK_POLY_HPP_
