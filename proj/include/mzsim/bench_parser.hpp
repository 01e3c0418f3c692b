// Plain-text .bench format: physical parameters, grid, input, and the two
// interferometer arms as ordered element calls. Line-oriented key=value
// grammar with `arm <name>:` blocks; see docs/bench-format.md for the
// grammar reference and annotated examples.
//
// The parser is total: it never throws, returning a diagnostic list
// (line/column and message) instead. Unknown keys, missing length units,
// and semantic violations (wrong arm set, arm without a momentum bench,
// l beyond the grid, ...) are all errors, never warnings.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mzsim/interferometer.hpp"

namespace mzsim {

struct Diagnostic {
  std::size_t line = 0;  // 1-based
  std::size_t col = 0;   // 1-based
  std::string message;
};

struct BenchDocument {
  BenchParams params;          // w is the effective input waist
  ElementPipeline upper_arm;   // lowered elements, temporal order
  ElementPipeline lower_arm;
  double phase = 0.0;          // [rad]
  GridSpec grid;

  bool operator==(const BenchDocument&) const = default;

  InterferometerSpec interferometer() const {
    return InterferometerSpec{upper_arm, lower_arm, phase};
  }
};

struct ParseResult {
  std::optional<BenchDocument> document;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return document.has_value(); }
};

ParseResult parse_bench(const std::string& text);

// Canonical text form, all values at full precision in base units.
// parse_bench(render_bench(doc)) reproduces doc exactly. Throws
// InvalidArgumentError for pipelines containing elements with no surface
// syntax (hard apertures, raw lens transforms).
std::string render_bench(const BenchDocument& doc);

// The stock document behind paper_default.bench: lambda 800nm, f 50cm,
// l 1.5mm, w 0.5mm, phi = pi, grid 4096 x 6mm, arms [xbench,pbench] /
// [pbench,xbench].
BenchDocument default_bench_document();

// "6mm" -> 6e-3 and friends; used by the CLI for --grid-half-extent.
// Throws InvalidArgumentError on malformed input.
double parse_length_literal(const std::string& text);

std::string format_diagnostics(const std::vector<Diagnostic>& diagnostics);

}  // namespace mzsim
