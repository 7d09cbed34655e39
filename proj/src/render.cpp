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

#include "korb/render.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace korb::cli {

namespace {

using Json = nlohmann::ordered_json;

const char* const kSubscript[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
const char* const kSuperscript[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string digits_with(std::int64_t n, const char* const* glyphs) {
  std::string out;
  for (const char c : std::to_string(n)) out += glyphs[c - '0'];
  return out;
}

// Number of code points, which is the column width for everything we print.
std::size_t display_width(std::string_view s) {
  std::size_t n = 0;
  for (const char c : s)
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  return n;
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width - std::min(width, display_width(s)), ' ');
}

std::string alpha(Sector s, Format format) {
  switch (format) {
    case Format::latex: return "\\alpha_" + (s < 10 ? std::to_string(s) : "{" + std::to_string(s) + "}");
    case Format::json: return "alpha_" + std::to_string(s);
    case Format::text: break;
  }
  return "α" + digits_with(s, kSubscript);
}

std::string poly(const LaurentPoly& p, Format format) {
  return format == Format::latex ? p.to_latex() : p.to_string();
}

std::string fraction(std::int64_t num, std::int64_t den, Format format) {
  if (num == 0) return "0";
  const std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den == 1) return std::to_string(num);
  if (format == Format::latex) return "\\frac{" + std::to_string(num) + "}{" + std::to_string(den) + "}";
  return std::to_string(num) + "/" + std::to_string(den);
}

// Coefficient times generator, e.g. "(1-u^-1)α₁" or just "α₃".
std::string term(const std::vector<std::int64_t>& factors, Sector target, Format format) {
  return factored(factors, format) + alpha(target, format);
}

Json weights_json(const WeightVector& b) { return Json(b.values()); }

std::string grid(const std::vector<std::vector<std::string>>& rows, const std::vector<std::size_t>& rule_after) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], display_width(row[c]));
    }
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) line += " | ";
      line += pad(rows[r][c], width[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
    if (std::find(rule_after.begin(), rule_after.end(), r) != rule_after.end()) {
      std::size_t total = 0;
      for (const auto w : width) total += w + 3;
      out += std::string(total - 3, '-') + "\n";
    }
  }
  return out;
}

std::string latex_array(const std::vector<std::vector<std::string>>& rows, std::size_t columns) {
  std::string spec = "c||";
  for (std::size_t c = 1; c < columns; ++c) spec += "c|";
  std::string out = "\\[\n\\begin{array}{" + spec + "}\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) line += " & ";
      line += rows[r][c];
    }
    out += line + " \\\\ \\hline" + (r == 0 ? " \\hline" : "") + "\n";
  }
  return out + "\\end{array}\n\\]\n";
}

OutputDocument document(std::string kind, Format format, std::string body, int exit_code = 0) {
  return OutputDocument{std::move(kind), format, std::move(body), exit_code};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "latex") return Format::latex;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected text, json or latex)");
}

std::string factored(const std::vector<std::int64_t>& weights, Format format) {
  std::string out;
  for (const auto w : weights) out += "(" + poly(euler_class(w), format) + ")";
  return out;
}

std::string zeta_name(Sector s, std::int64_t ell, Format format) {
  if (s == 0) return "1";
  if ((4 * s) % ell == 0) {
    switch ((4 * s) / ell) {
      case 1: return "i";
      case 2: return "-1";
      case 3: return "-i";
      default: break;
    }
  }
  const std::int64_t g = std::gcd(s, ell);
  const std::string p = std::to_string(s / g), q = std::to_string(ell / g);
  if (format == Format::latex) return "e^{2\\pi i \\cdot " + p + "/" + q + "}";
  return "e^(2πi·" + p + "/" + q + ")";
}

std::string fixed_set_name(const WpsData& d, Sector s, Format format) {
  const auto fixed = d.fixed_coordinates(s);
  const bool latex = format == Format::latex;
  const std::string c = latex ? "{\\mathbb{C}}" : "ℂ";
  if (fixed.empty()) return "0";
  if (fixed.size() == d.coordinates()) {
    if (fixed.size() == 1) return c;
    return latex ? c + "^{" + std::to_string(fixed.size()) + "}"
                 : c + digits_with(static_cast<std::int64_t>(fixed.size()), kSuperscript);
  }
  std::string out;
  for (const auto k : fixed) {
    if (!out.empty()) out += latex ? " \\oplus " : "⊕";
    out += latex ? c + "_{(" + std::to_string(d.weights()[k]) + ")}"
                 : c + "₍" + digits_with(d.weights()[k], kSubscript) + "₎";
  }
  return out;
}

OutputDocument cmd_chart(const WeightVector& b, Format format) {
  const KOrbRing ring(b);
  const WpsData& d = ring.data();
  if (format == Format::json) {
    Json sectors = Json::array();
    for (Sector s = 0; s < d.ell(); ++s) {
      Json logw = Json::array();
      for (const auto r : d.logweight_row(s)) logw.push_back(std::to_string(r) + "/" + std::to_string(d.ell()));
      sectors.push_back({{"s", s},
                         {"zeta", zeta_name(s, d.ell(), Format::text)},
                         {"fixed", d.fixed_coordinates(s)},
                         {"fixed_space", fixed_set_name(d, s, Format::text)},
                         {"logweights", logw},
                         {"kernel", ring.sector(s).gen.to_string()},
                         {"rank", ring.sector(s).rank},
                         {"generator", alpha(s, Format::json)}});
    }
    Json j = {{"kind", "chart"}, {"weights", weights_json(b)}, {"ell", d.ell()}, {"sectors", sectors}};
    return document("chart", format, dump(j));
  }
  const bool latex = format == Format::latex;
  const std::string n1 = std::to_string(d.coordinates());
  std::vector<std::vector<std::string>> rows(4 + d.coordinates());
  rows[0].push_back("s");
  rows[1].push_back(latex ? "\\zeta_s" : "ζ_s");
  rows[2].push_back(latex ? "({\\mathbb{C}}^{" + n1 + "})^{\\zeta_s}" : "fixed set");
  for (std::size_t k = 0; k < d.coordinates(); ++k)
    rows[3 + k].push_back(latex ? "a_{" + std::to_string(k) + "}(\\zeta_s)" : "a_" + std::to_string(k) + "(ζ_s)");
  rows.back().push_back(latex ? "\\mbox{generator}" : "generator");
  for (Sector s = 0; s < d.ell(); ++s) {
    rows[0].push_back(std::to_string(s));
    rows[1].push_back(zeta_name(s, d.ell(), format));
    rows[2].push_back(fixed_set_name(d, s, format));
    for (std::size_t k = 0; k < d.coordinates(); ++k)
      rows[3 + k].push_back(fraction(d.logweight_numerator(k, s), d.ell(), format));
    rows.back().push_back(alpha(s, format));
  }
  std::string body;
  if (latex) {
    body = latex_array(rows, rows[0].size());
  } else {
    body = "weights (" + b.to_string() + "), ell = " + std::to_string(d.ell()) + "\n" + grid(rows, {0});
  }
  return document("chart", format, body);
}

OutputDocument cmd_table(const WeightVector& b, Format format) {
  const WpsData d(b);
  const auto table = generator_table(d);
  if (format == Format::json) {
    Json entries = Json::array();
    for (const auto& e : table)
      entries.push_back(
          {{"s", e.s}, {"t", e.t}, {"target", e.target}, {"coeff", e.coeff.to_string()}, {"factors", e.factors}});
    Json j = {{"kind", "table"}, {"weights", weights_json(b)}, {"ell", d.ell()}, {"tableI", entries}};
    return document("table", format, dump(j));
  }
  const std::int64_t ell = d.ell();
  if (ell == 1) {
    const auto& e = table.front();
    const std::string star = format == Format::latex ? " \\star " : " ⋆ ";
    std::string line = alpha(0, format) + star + alpha(0, format) + " = " + term(e.factors, e.target, format);
    return document("table", format, format == Format::latex ? "\\[ " + line + " \\]\n" : line + "\n");
  }
  // Upper-triangular grid over alpha_1 .. alpha_{ell-1}; alpha_0 is the unit.
  const auto dim = static_cast<std::size_t>(ell);
  std::vector<std::vector<std::string>> rows(dim, std::vector<std::string>(dim));
  for (std::size_t c = 1; c < dim; ++c) rows[0][c] = alpha(static_cast<Sector>(c), format);
  for (std::size_t r = 1; r < dim; ++r) rows[r][0] = alpha(static_cast<Sector>(r), format);
  for (const auto& e : table)
    if (e.s > 0)
      rows[static_cast<std::size_t>(e.s)][static_cast<std::size_t>(e.t)] = term(e.factors, e.target, format);
  if (format == Format::latex) return document("table", format, latex_array(rows, dim));
  return document("table", format, grid(rows, {0}));
}

OutputDocument cmd_kernels(const WeightVector& b, Format format) {
  const KOrbRing ring(b);
  const WpsData& d = ring.data();
  if (format == Format::json) {
    Json sectors = Json::array();
    for (const auto& sr : ring.sectors())
      sectors.push_back({{"s", sr.sector},
                         {"fixed", d.fixed_coordinates(sr.sector)},
                         {"factors", kernel_factor_weights(d, sr.sector)},
                         {"kernel", sr.gen.to_string()},
                         {"normalized", sr.gmonic.to_laurent().to_string()},
                         {"rank", sr.rank}});
    Json j = {{"kind", "kernels"}, {"weights", weights_json(b)}, {"ell", d.ell()}, {"sectors", sectors}};
    return document("kernels", format, dump(j));
  }
  std::string body;
  if (format == Format::latex) {
    body = "\\begin{align*}\n";
    for (const auto& sr : ring.sectors()) {
      body += "\\ker(\\kappa_{" + std::to_string(sr.sector) + "}) & = \\langle " + alpha(sr.sector, format) + " " +
              factored(kernel_factor_weights(d, sr.sector), format) + " \\rangle";
      body += sr.sector + 1 < d.ell() ? ", \\\\\n" : ".\n";
    }
    body += "\\end{align*}\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& sr : ring.sectors())
      rows.push_back({"ker(κ" + digits_with(sr.sector, kSubscript) + ") = ⟨" + alpha(sr.sector, format) +
                          factored(kernel_factor_weights(d, sr.sector), format) + "⟩",
                      "rank " + std::to_string(sr.rank)});
    body = grid(rows, {});
  }
  return document("kernels", format, body);
}

OutputDocument cmd_present(const WeightVector& b, Format format) {
  const WpsData d(b);
  const Presentation p = presentation(d);
  if (format == Format::json) {
    Json gens = Json::array();
    for (Sector s = 0; s < p.ell; ++s) gens.push_back(alpha(s, Format::json));
    Json rel_i = Json::array();
    for (const auto& e : p.relations_i)
      rel_i.push_back(
          {{"s", e.s}, {"t", e.t}, {"target", e.target}, {"coeff", e.coeff.to_string()}, {"factors", e.factors}});
    Json rel_j = Json::array();
    for (const auto& r : p.relations_j)
      rel_j.push_back({{"s", r.s}, {"kernel", r.gen.to_string()}, {"factors", r.factors}});
    Json j = {{"kind", "presentation"}, {"weights", weights_json(b)}, {"ell", p.ell},
              {"generators", gens},     {"tableI", rel_i},            {"relationsJ", rel_j},
              {"unit", "alpha_0-1"}};
    return document("presentation", format, dump(j));
  }
  const bool latex = format == Format::latex;
  std::string gens;
  for (Sector s = 0; s < p.ell; ++s) gens += (s ? ", " : "") + alpha(s, format);
  std::string body;
  if (latex) {
    body = "\\begin{align*}\n\\mathsf{K}_{\\mathrm{orb}}(\\mathbb{P}_{(" + b.to_string() +
           ")}) & \\cong {\\mathbb{Z}}[u,u^{-1}][" + gens + "] \\big/ {\\mathcal I} + \\langle " + alpha(0, format) +
           " - 1 \\rangle + {\\mathcal J}, \\\\\n{\\mathcal I} & = \\langle ";
    for (std::size_t i = 0; i < p.relations_i.size(); ++i) {
      const auto& e = p.relations_i[i];
      body += (i ? ",\\ " : "") + alpha(e.s, format) + alpha(e.t, format) + " - " + term(e.factors, e.target, format);
    }
    body += " \\rangle, \\\\\n{\\mathcal J} & = \\langle ";
    for (std::size_t i = 0; i < p.relations_j.size(); ++i) {
      const auto& r = p.relations_j[i];
      body += (i ? ",\\ " : "") + alpha(r.s, format) + factored(r.factors, format);
    }
    body += " \\rangle.\n\\end{align*}\n";
    return document("presentation", format, body);
  }
  body = "K_orb(P(" + b.to_string() + ")) = Z[u,u^-1][" + gens + "] / (I + <" + alpha(0, format) + "-1> + J)\n";
  body += "I:\n";
  for (const auto& e : p.relations_i)
    body += "  " + alpha(e.s, format) + alpha(e.t, format) + " - " + term(e.factors, e.target, format) + "\n";
  body += "J:\n";
  for (const auto& r : p.relations_j) body += "  " + factored(r.factors, format) + alpha(r.s, format) + "\n";
  body += "unit:\n  " + alpha(0, format) + " - 1\n";
  return document("presentation", format, body);
}

OutputDocument cmd_rank(const WeightVector& b, Format format) {
  const KOrbRing ring(b);
  const std::size_t total = total_rank(ring.sectors());
  std::vector<std::size_t> ranks;
  for (const auto& sr : ring.sectors()) ranks.push_back(sr.rank);
  if (format == Format::json) {
    Json j = {{"kind", "rank"}, {"weights", weights_json(b)}, {"ell", ring.ell()}, {"ranks", ranks}, {"total", total}};
    return document("rank", format, dump(j));
  }
  if (format == Format::latex) {
    std::string sum;
    for (std::size_t i = 0; i < ranks.size(); ++i) sum += (i ? " + " : "") + std::to_string(ranks[i]);
    return document("rank", format,
                    "\\[ \\operatorname{rank}_{\\mathbb{Z}} \\mathsf{K}_{\\mathrm{orb}} = " + sum + " = " +
                        std::to_string(total) + " \\]\n");
  }
  return document("rank", format, std::to_string(total) + "\n");
}

OutputDocument cmd_torsion(const WeightVector& b, Format format) {
  const KOrbRing ring(b);
  const TorsionReport report = torsion_report(ring.sectors());
  std::string ranks;
  for (const auto& st : report.sectors) ranks += (ranks.empty() ? "" : ",") + std::to_string(st.rank);
  const int code = report.pass ? 0 : 1;
  if (format == Format::json) {
    Json sectors = Json::array();
    for (const auto& st : report.sectors)
      sectors.push_back({{"s", st.s},
                         {"rank", st.rank},
                         {"monic", st.monic},
                         {"constant", st.constant_term.get_str()},
                         {"ok", st.ok}});
    Json j = {{"kind", "torsion"}, {"weights", weights_json(b)}, {"ell", ring.ell()},
              {"pass", report.pass}, {"sectors", sectors}};
    return document("torsion", format, dump(j), code);
  }
  std::string body = report.pass ? "PASS, ranks (" + ranks + ")" : "FAIL";
  if (!report.pass)
    for (const auto& st : report.sectors)
      if (!st.ok)
        body += "\n  sector " + std::to_string(st.s) + ": leading " + (st.monic ? "1" : "non-unit") +
                ", constant term " + st.constant_term.get_str();
  if (format == Format::latex) body = "\\text{" + body + "}";
  return document("torsion", format, body + "\n", code);
}

OutputDocument cmd_verify(const WeightVector& b, std::size_t trials, std::uint64_t seed, Format format) {
  const KOrbRing ring(b);
  const VerifyReport report = verify(ring, trials, seed);
  const int code = report.pass ? 0 : 1;
  if (format == Format::json) {
    Json j = {{"kind", "verify"},
              {"weights", weights_json(b)},
              {"ell", ring.ell()},
              {"pass", report.pass},
              {"cocycle", report.cocycle_exhaustive ? "exhaustive" : "sampled"},
              {"trials", report.trials},
              {"seed", report.seed},
              {"summary", report.summary()},
              {"counterexample", report.counterexample ? Json(*report.counterexample) : Json(nullptr)}};
    return document("verify", format, dump(j), code);
  }
  std::string body = report.summary();
  if (format == Format::latex) body = "\\text{" + body + "}";
  return document("verify", format, body + "\n", code);
}

OutputDocument cmd_reduce(const WeightVector& b, Sector sector, std::string_view text, Format format) {
  const KOrbRing ring(b);
  if (sector < 0 || sector >= ring.ell())
    throw std::out_of_range("sector " + std::to_string(sector) + " outside [0, " + std::to_string(ring.ell()) + ")");
  const LaurentPoly x = parse_laurent(text);
  const SectorRing& sr = ring.sector(sector);
  const LaurentPoly r = reduce(sr, x);
  if (format == Format::json) {
    Json j = {{"kind", "reduce"},          {"weights", weights_json(b)}, {"sector", sector},
              {"input", x.to_string()},    {"residue", r.to_string()},   {"rank", sr.rank},
              {"modulus", sr.gmonic.to_laurent().to_string()}};
    return document("reduce", format, dump(j));
  }
  if (format == Format::latex)
    return document("reduce", format, "\\[ " + x.to_latex() + " \\equiv " + r.to_latex() + " \\]\n");
  return document("reduce", format, r.to_string() + "\n");
}

OutputDocument cmd_mul(const WeightVector& b, std::string_view lhs, std::string_view rhs, Format format) {
  const KOrbRing ring(b);
  const KOrbElement x = parse_element(ring, lhs);
  const KOrbElement y = parse_element(ring, rhs);
  const KOrbElement p = star_multiply(ring, x, y);
  if (format == Format::json) {
    Json comps = Json::array();
    for (std::size_t s = 0; s < p.comps.size(); ++s)
      if (!p.comps[s].is_zero()) comps.push_back({{"s", s}, {"residue", p.comps[s].to_string()}});
    Json j = {{"kind", "mul"},
              {"weights", weights_json(b)},
              {"lhs", format_element(x)},
              {"rhs", format_element(y)},
              {"product", format_element(p)},
              {"components", comps}};
    return document("mul", format, dump(j));
  }
  if (format == Format::latex) {
    std::string sum;
    for (std::size_t s = 0; s < p.comps.size(); ++s) {
      if (p.comps[s].is_zero()) continue;
      if (!sum.empty()) sum += " + ";
      sum += "(" + p.comps[s].to_latex() + ")" + alpha(static_cast<Sector>(s), format);
    }
    return document("mul", format, "\\[ " + (sum.empty() ? std::string("0") : sum) + " \\]\n");
  }
  return document("mul", format, format_element(p) + "\n");
}

}  // namespace korb::cli
