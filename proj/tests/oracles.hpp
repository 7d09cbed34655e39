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

// Test-only oracles. Nothing here calls into the korb arithmetic; each one
// recomputes its answer from scratch by the most direct route available.

#ifndef KORB_TESTS_ORACLES_HPP
#define KORB_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Terms = std::map<std::int64_t, mpz_class>;

inline void add_to(Terms& t, std::int64_t e, const mpz_class& c) {
  t[e] += c;
  if (t[e] == 0) t.erase(e);
}

/// Schoolbook convolution of two term maps.
inline Terms convolve(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_to(out, ea + eb, ca * cb);
  return out;
}

/// prod over weights of (1 - u^-w), expanded by repeated convolution.
inline Terms euler_product(const std::vector<std::int64_t>& weights) {
  Terms p{{0, 1}};
  for (const auto w : weights) p = convolve(p, Terms{{0, 1}, {-w, -1}});
  return p;
}

/// (b_k * s) mod ell computed from the definition of the smallest
/// non-negative representative.
inline std::int64_t residue(std::int64_t bk, std::int64_t s, std::int64_t ell) {
  std::int64_t r = bk * s;
  while (r >= ell) r -= ell;
  return r;
}

inline std::int64_t lcm_of(const std::vector<std::int64_t>& b) {
  std::int64_t ell = 1;
  while (true) {
    bool all = true;
    for (const auto w : b) all = all && ell % w == 0;
    if (all) return ell;
    ++ell;
  }
}

/// Sum of b_k over coordinates fixed by zeta_s.
inline std::int64_t rank(const std::vector<std::int64_t>& b, std::int64_t s, std::int64_t ell) {
  std::int64_t r = 0;
  for (const auto w : b)
    if (residue(w, s, ell) == 0) r += w;
  return r;
}

/// Residue of x modulo a monic g with g(0) = +-1, by two-sided elimination:
/// negative powers are cleared with the constant term of g, powers >= deg g
/// with its leading term.
inline Terms two_sided_reduce(Terms x, const Terms& g) {
  const std::int64_t d = g.rbegin()->first;
  if (d == 0) return {};
  const mpz_class g0 = g.at(0);
  while (!x.empty() && x.begin()->first < 0) {
    const auto [e, c] = *x.begin();
    const mpz_class factor = c * g0;  // g0 is its own inverse
    for (const auto& [eg, cg] : g) add_to(x, e + eg, -factor * cg);
  }
  while (!x.empty() && x.rbegin()->first >= d) {
    const auto [e, c] = *x.rbegin();
    const mpz_class factor = c;
    for (const auto& [eg, cg] : g) add_to(x, e - d + eg, -factor * cg);
  }
  return x;
}

/// Random sparse Laurent term map: exponents in [lo, hi], coefficients in [-9, 9].
inline Terms random_terms(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, int max_terms) {
  std::uniform_int_distribution<std::int64_t> exp(lo, hi);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> count(0, max_terms);
  Terms t;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) add_to(t, exp(rng), coeff(rng));
  return t;
}

/// Random weight vector with 2..6 entries in [1, 12].
inline std::vector<std::int64_t> random_weights(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(2, 6);
  std::uniform_int_distribution<std::int64_t> w(1, 12);
  std::vector<std::int64_t> b(static_cast<std::size_t>(len(rng)));
  for (auto& x : b) x = w(rng);
  return b;
}

}  // namespace oracle

#endif  // KORB_TESTS_ORACLES_HPP
