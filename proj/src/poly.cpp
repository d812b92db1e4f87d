#include "hk/poly.hpp"

#include <stdexcept>
#include <utility>

#include "hk/errors.hpp"

namespace hk {

  Poly::Poly(std::vector<mpz_class> coefficients) : _c(std::move(coefficients)) {
    trim();
  }

  Poly::Poly(std::initializer_list<long> coefficients) {
    for (long c : coefficients) {
      _c.emplace_back(c);
    }
    trim();
  }

  Poly Poly::constant(mpz_class c) {
    return Poly(std::vector<mpz_class>{std::move(c)});
  }

  Poly Poly::monomial(std::size_t degree, mpz_class c) {
    std::vector<mpz_class> coeffs(degree + 1, 0);
    coeffs[degree] = std::move(c);
    return Poly(std::move(coeffs));
  }

  void Poly::trim() {
    while (!_c.empty() && _c.back() == 0) {
      _c.pop_back();
    }
  }

  mpz_class Poly::eval(mpz_class const& x) const {
    mpz_class acc = 0;
    for (auto it = _c.rbegin(); it != _c.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  Poly& Poly::operator+=(Poly const& other) {
    if (other._c.size() > _c.size()) {
      _c.resize(other._c.size(), 0);
    }
    for (std::size_t k = 0; k < other._c.size(); ++k) {
      _c[k] += other._c[k];
    }
    trim();
    return *this;
  }

  Poly& Poly::operator-=(Poly const& other) {
    if (other._c.size() > _c.size()) {
      _c.resize(other._c.size(), 0);
    }
    for (std::size_t k = 0; k < other._c.size(); ++k) {
      _c[k] -= other._c[k];
    }
    trim();
    return *this;
  }

  Poly operator*(Poly const& a, Poly const& b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    std::vector<mpz_class> out(a._c.size() + b._c.size() - 1, 0);
    for (std::size_t i = 0; i < a._c.size(); ++i) {
      if (a._c[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b._c.size(); ++j) {
        out[i + j] += a._c[i] * b._c[j];
      }
    }
    return Poly(std::move(out));
  }

  Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out._c) {
      c = -c;
    }
    return out;
  }

  Poly divexact(Poly const& a, Poly const& b) {
    if (b.is_zero()) {
      throw std::domain_error("division by the zero polynomial");
    }
    if (a.is_zero()) {
      return {};
    }
    if (a.degree() < b.degree()) {
      throw std::domain_error("inexact polynomial division");
    }
    std::vector<mpz_class> rem = a._c;
    std::size_t const      db  = b._c.size() - 1;
    std::vector<mpz_class> quot(rem.size() - db, 0);
    mpz_class const&       lead = b._c.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
      mpz_class const& top = rem[k + db];
      if (top == 0) {
        continue;
      }
      if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
        throw std::domain_error("inexact polynomial division");
      }
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
      for (std::size_t j = 0; j <= db; ++j) {
        rem[k + j] -= q * b._c[j];
      }
      quot[k] = std::move(q);
    }
    for (auto const& r : rem) {
      if (r != 0) {
        throw std::domain_error("inexact polynomial division");
      }
    }
    return Poly(std::move(quot));
  }

  std::string Poly::to_string() const {
    if (_c.empty()) {
      return "0";
    }
    std::string out;
    for (std::size_t k = 0; k < _c.size(); ++k) {
      if (_c[k] == 0) {
        continue;
      }
      mpz_class mag = abs(_c[k]);
      if (out.empty()) {
        out += _c[k] < 0 ? "-" : "";
      } else {
        out += _c[k] < 0 ? " - " : " + ";
      }
      if (k == 0 || mag != 1) {
        out += mag.get_str();
      }
      if (k >= 1) {
        out += "x";
      }
      if (k >= 2) {
        out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
      : _rows(rows), _cols(cols), _entries(rows * cols) {}

  PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows)
      : _rows(rows.size()), _cols(rows.size() == 0 ? 0 : rows.begin()->size()) {
    for (auto const& row : rows) {
      if (row.size() != _cols) {
        throw std::invalid_argument("ragged matrix rows");
      }
      _entries.insert(_entries.end(), row.begin(), row.end());
    }
  }

  PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      m(k, k) = Poly{1};
    }
    return m;
  }

  PolyMatrix lift_sandwich(SandwichMatrix const& m) {
    PolyMatrix out(m.rows.size(), m.columns.size());
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      for (std::size_t c = 0; c < m.columns.size(); ++c) {
        SandwichEntry const& e = m.at(r, c);
        if (!e.is_theta()) {
          out(r, c) = Poly::monomial(e.exponent());
        }
      }
    }
    return out;
  }

  Poly det(PolyMatrix const& m) {
    if (m.rows() != m.cols()) {
      throw NotSquare("determinant of a " + std::to_string(m.rows()) + "x"
                      + std::to_string(m.cols()) + " matrix");
    }
    std::size_t const n = m.rows();
    if (n == 0) {
      return Poly{1};
    }
    PolyMatrix a        = m;
    Poly       previous = Poly{1};
    bool       negate   = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k).is_zero()) {
        std::size_t pivot = k + 1;
        while (pivot < n && a(pivot, k).is_zero()) {
          ++pivot;
        }
        if (pivot == n) {
          return {};
        }
        for (std::size_t c = 0; c < n; ++c) {
          std::swap(a(k, c), a(pivot, c));
        }
        negate = !negate;
      }
      for (std::size_t r = k + 1; r < n; ++r) {
        for (std::size_t c = k + 1; c < n; ++c) {
          a(r, c) = divexact(a(k, k) * a(r, c) - a(r, k) * a(k, c), previous);
        }
        a(r, k) = Poly{};
      }
      previous = a(k, k);
    }
    Poly result = a(n - 1, n - 1);
    return negate ? -result : result;
  }

  std::vector<std::uint64_t> quotient_ring_shape(std::size_t n) {
    if (n < 3) {
      throw std::invalid_argument("quotient ring shape needs n >= 3");
    }
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i + 2 <= n; ++i) {
      out.push_back(binomial(static_cast<long>(n), static_cast<long>(i + 1))
                        .get_ui());
    }
    return out;
  }

  mpz_class binomial(long top, long bottom) {
    if (bottom < 0 || (top >= 0 && bottom > top)) {
      return 0;
    }
    mpz_class out;
    auto const k = static_cast<unsigned long>(bottom);
    if (top >= 0) {
      mpz_bin_ui(out.get_mpz_t(), mpz_class(top).get_mpz_t(), k);
      return out;
    }
    // C(-m, k) = (-1)^k C(m + k - 1, k)
    mpz_bin_ui(out.get_mpz_t(), mpz_class(bottom - top - 1).get_mpz_t(), k);
    return k % 2 == 0 ? out : mpz_class(-out);
  }

  bool verify_binomial_identity(std::size_t n, std::size_t i) {
    if (n < 3 || i + 3 > n) {
      throw LayerOutOfRange("binomial identity needs n >= 3 and i <= n - 3");
    }
    long const N = static_cast<long>(n), I = static_cast<long>(i);

    mpz_class by_shape = 1;
    for (long s = 1; s <= I + 1; ++s) {
      by_shape += binomial(N - s - 1, I - s + 2) + s * binomial(N - s - 2, I - s + 1);
    }
    mpz_class reindexed = 0;
    for (long k = 0; k <= I + 1; ++k) {
      reindexed += (I + 2 - k) * binomial(N - I - 3 + k, k);
    }
    mpz_class const target = binomial(N, I + 1);
    return by_shape == target && reindexed == target;
  }

}  // namespace hk
