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

#include "korb/laurent.hpp"

#include <cctype>
#include <sstream>

namespace korb {

LaurentPoly LaurentPoly::constant(const Integer& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Integer& c, Exponent e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

Integer LaurentPoly::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(Exponent n) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + n, c);
  return out;
}

void LaurentPoly::add_term(Exponent e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  // Dense accumulation over the exponent span keeps this a plain convolution.
  const Exponent lo = a.min_exponent() + b.min_exponent();
  const Exponent hi = a.max_exponent() + b.max_exponent();
  const auto span = static_cast<std::size_t>(hi - lo + 1);
  if (span <= 4 * a.term_count() * b.term_count() + 64) {
    std::vector<Integer> acc(span);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        mpz_addmul(acc[static_cast<std::size_t>(ea + eb - lo)].get_mpz_t(), ca.get_mpz_t(),
                   cb.get_mpz_t());
      }
    for (std::size_t i = 0; i < span; ++i)
      if (acc[i] != 0) out.terms_.emplace_hint(out.terms_.end(), lo + static_cast<Exponent>(i), std::move(acc[i]));
    return out;
  }
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

namespace {

std::string render(const LaurentPoly::TermMap& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    if (c < 0)
      out += '-';
    else if (!first)
      out += '+';
    first = false;
    const Integer mag = abs(c);
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += 'u';
    if (e != 1) {
      out += '^';
      if (latex && (e < 0 || e > 9))
        out += "{" + std::to_string(e) + "}";
      else
        out += std::to_string(e);
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentPoly run() {
    LaurentPoly result;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(sign, result);
    }
    return result;
  }

 private:
  void parse_term(int sign, LaurentPoly& result) {
    skip_ws();
    Integer coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(read_digits());
      have_coeff = true;
      if (!at_end() && peek() == '*') {
        advance();
        if (at_end() || peek() != 'u') fail("expected 'u' after '*'");
      }
    }
    Exponent exponent = 0;
    if (!at_end() && peek() == 'u') {
      advance();
      exponent = 1;
      if (!at_end() && peek() == '^') {
        advance();
        exponent = read_signed_exponent();
      }
    } else if (!have_coeff) {
      fail("expected integer or 'u'");
    }
    if (!at_end() && peek() != '+' && peek() != '-') fail("unexpected character");
    result.add_term(exponent, sign < 0 ? Integer(-coeff) : coeff);
  }

  std::string read_digits() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance_raw();
    }
    skip_ws();
    return digits;
  }

  Exponent read_signed_exponent() {
    bool negative = false;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      negative = peek() == '-';
      advance();
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    const std::size_t start = pos_;
    const std::string digits = read_digits();
    if (digits.size() > 18) fail("exponent out of range", start);
    const Exponent value = std::stoll(digits);
    return negative ? -value : value;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance_raw() { ++pos_; }
  void advance() {
    ++pos_;
    skip_ws();
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    std::ostringstream os;
    os << msg << " at position " << at;
    throw ParseError(os.str(), at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string LaurentPoly::to_string() const { return render(terms_, false); }
std::string LaurentPoly::to_latex() const { return render(terms_, true); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what), position_(position) {}

LaurentPoly parse_laurent(std::string_view text) { return Parser(text).run(); }

LaurentPoly euler_class(Exponent lambda) {
  if (lambda == 0) throw std::invalid_argument("euler_class: weight must be nonzero");
  LaurentPoly p = LaurentPoly::constant(1);
  p.add_term(-lambda, -1);
  return p;
}

LaurentPoly MonicPoly::to_laurent() const {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(static_cast<Exponent>(i), coeffs[i]);
  return p;
}

MonicPoly normalize(const LaurentPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("normalize: zero polynomial");
  MonicPoly out;
  out.shift = -g.min_exponent();
  const auto degree = static_cast<std::size_t>(g.max_exponent() - g.min_exponent());
  out.coeffs.assign(degree + 1, Integer(0));
  for (const auto& [e, c] : g.terms()) out.coeffs[static_cast<std::size_t>(e + out.shift)] = c;
  const Integer& lead = out.coeffs.back();
  out.unit_leading = abs(lead) == 1;
  if (lead == -1) {
    out.sign = -1;
    for (auto& c : out.coeffs) c = -c;
  }
  return out;
}

DivMod divmod_monic(const LaurentPoly& x, const MonicPoly& g) {
  if (!g.is_monic()) throw std::invalid_argument("divmod_monic: divisor is not monic");
  if (!x.is_zero() && x.min_exponent() < 0)
    throw std::invalid_argument("divmod_monic: dividend has negative exponents");
  DivMod out;
  if (x.is_zero()) return out;
  const std::size_t d = g.degree();
  const auto top = static_cast<std::size_t>(x.max_exponent());
  std::vector<Integer> rem(top + 1);
  for (const auto& [e, c] : x.terms()) rem[static_cast<std::size_t>(e)] = c;
  if (top >= d) {
    std::vector<Integer> quot(top - d + 1);
    for (std::size_t i = top + 1; i-- > d;) {
      if (rem[i] == 0) continue;
      const Integer q = rem[i];
      quot[i - d] = q;
      for (std::size_t j = 0; j <= d; ++j)
        mpz_submul(rem[i - d + j].get_mpz_t(), q.get_mpz_t(), g.coeffs[j].get_mpz_t());
    }
    for (std::size_t i = 0; i < quot.size(); ++i) out.quotient.add_term(static_cast<Exponent>(i), quot[i]);
  }
  for (std::size_t i = 0; i < std::min(d, rem.size()); ++i) out.remainder.add_term(static_cast<Exponent>(i), rem[i]);
  return out;
}

}  // namespace korb
