#pragma once

#include <iosfwd>
#include <string>

#include "absorb/semigroup.hpp"

namespace absorb {

/// Text format:
///   line 1: n
///   lines 2..n+1: n whitespace-separated element indices
///   optional final line: "labels: a b c ..."
/// write_table_text emits the canonical form (single spaces, trailing
/// newline), so write(parse(write(s))) == write(s) byte for byte.
FiniteSemigroup parse_table_text(const std::string& text);
std::string write_table_text(const FiniteSemigroup& s);

/// JSON mirror: {"n":..., "table":[[...]], "labels":[...]} with "labels"
/// omitted when absent. The writer is canonical (compact, fixed key order).
FiniteSemigroup parse_table_json(const std::string& text);
std::string write_table_json(const FiniteSemigroup& s);

/// Reads either format, sniffing JSON by a leading '{'.
FiniteSemigroup parse_table_auto(const std::string& text);

/// Loads a table file (either format) from disk.
FiniteSemigroup load_table_file(const std::string& path);

}  // namespace absorb
