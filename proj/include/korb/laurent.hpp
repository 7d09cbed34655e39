/*
   Copyright 2026 The korb Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KORB_LAURENT_HPP
#define KORB_LAURENT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace korb {

using Integer = mpz_class;
using Exponent = std::int64_t;

/// Sparse Laurent polynomial in one variable u with arbitrary-precision
/// integer coefficients, i.e. an element of Z[u, u^-1].
///
/// Terms are kept keyed by exponent with no zero coefficients, so two
/// polynomials are equal iff their term maps are equal.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Integer>;

  LaurentPoly() = default;

  static LaurentPoly constant(const Integer& c);
  static LaurentPoly monomial(const Integer& c, Exponent e);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Integer coeff(Exponent e) const;

  // Both require a nonzero polynomial.
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  /// Returns u^n * this.
  LaurentPoly shifted(Exponent n) const;

  /// Adds c*u^e in place, dropping the term if it cancels.
  void add_term(Exponent e, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Integer& c);

  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical text: descending exponents, "u^-k" for negative powers,
  /// unit coefficients elided, no spaces. The zero polynomial prints "0".
  std::string to_string() const;

  /// Same content as to_string() with LaTeX exponent braces.
  std::string to_latex() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Raised by parse_laurent; position() is a 0-based offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses a sum of terms `[sign] [integer] [*] ["u" ["^" signed-integer]]`.
/// Whitespace is ignored.
LaurentPoly parse_laurent(std::string_view text);

/// K-theoretic Euler class of the weight-lambda line: 1 - u^(-lambda).
/// Throws std::invalid_argument for lambda == 0.
LaurentPoly euler_class(Exponent lambda);

/// Normal form of a nonzero Laurent polynomial up to units of Z[u, u^-1].
///
/// coeffs[i] is the coefficient of u^i, coeffs.back() is the leading
/// coefficient and coeffs.front() is nonzero. The original polynomial g
/// satisfies sign * u^shift * g == to_laurent().
struct MonicPoly {
  std::vector<Integer> coeffs;
  Exponent shift = 0;
  int sign = 1;
  // False when the leading coefficient of u^shift * g was not +-1; the
  // leading coefficient is then kept as is.
  bool unit_leading = true;

  std::size_t degree() const noexcept { return coeffs.size() - 1; }
  const Integer& leading() const { return coeffs.back(); }
  const Integer& constant_term() const { return coeffs.front(); }
  bool is_monic() const { return unit_leading && leading() == 1; }
  LaurentPoly to_laurent() const;
};

/// Throws std::invalid_argument on the zero polynomial.
MonicPoly normalize(const LaurentPoly& g);

struct DivMod {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

/// Euclidean division of an ordinary polynomial (no negative exponents) by a
/// monic polynomial: x == q*g + r with deg r < deg g. Exact over Z.
/// Throws std::invalid_argument if x has negative exponents or g is not monic.
DivMod divmod_monic(const LaurentPoly& x, const MonicPoly& g);

}  // namespace korb

#endif  // KORB_LAURENT_HPP
