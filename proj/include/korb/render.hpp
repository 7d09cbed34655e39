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

#ifndef KORB_RENDER_HPP
#define KORB_RENDER_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "korb/korb.hpp"

namespace korb::cli {

enum class Format { text, json, latex };

/// Throws std::invalid_argument for anything but text, json or latex.
Format parse_format(std::string_view name);

struct OutputDocument {
  std::string kind;
  Format format = Format::text;
  std::string body;
  // Nonzero when the computation itself reports failure (verify, torsion).
  int exit_code = 0;
};

OutputDocument cmd_chart(const WeightVector& b, Format format);
OutputDocument cmd_table(const WeightVector& b, Format format);
OutputDocument cmd_kernels(const WeightVector& b, Format format);
OutputDocument cmd_present(const WeightVector& b, Format format);
OutputDocument cmd_rank(const WeightVector& b, Format format);
OutputDocument cmd_torsion(const WeightVector& b, Format format);
OutputDocument cmd_verify(const WeightVector& b, std::size_t trials, std::uint64_t seed, Format format);
OutputDocument cmd_reduce(const WeightVector& b, Sector sector, std::string_view poly, Format format);
OutputDocument cmd_mul(const WeightVector& b, std::string_view lhs, std::string_view rhs, Format format);

/// "(1-u^-1)(1-u^-2)" for weights {1, 2}; empty for no factors.
std::string factored(const std::vector<std::int64_t>& weights, Format format);

/// zeta_s = e^{2 pi i s / ell}, with 1, i, -1, -i spelled out.
std::string zeta_name(Sector s, std::int64_t ell, Format format);

/// Fixed subspace of zeta_s, e.g. "ℂ₍₂₎⊕ℂ₍₄₎"; "0" when only the origin is fixed.
std::string fixed_set_name(const WpsData& d, Sector s, Format format);

}  // namespace korb::cli

#endif  // KORB_RENDER_HPP
