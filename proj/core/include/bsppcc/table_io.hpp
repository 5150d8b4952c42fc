#pragma once

#include <iosfwd>
#include <string>

#include "bsppcc/mc_tables.hpp"

namespace bsppcc {

/// Header line for the table text format, without trailing newline:
/// `bsppcc-table v1 I=<iterations> seed=<seed> alpha_gen=<g> levels=<g,...>`.
std::string table_header(const TableMeta& meta, std::span<const double> levels);

/// One data row, without trailing newline: n followed by the critical
/// values at six decimals, space separated.
std::string table_row_line(int n, std::span<const double> values);

/// Writes the full table in the text format: header, then one row per n
/// in increasing order.
void write_table(std::ostream& out, const CriticalValueTable& table);

/// write_table to a file. Throws TableFormatError if the file cannot be
/// opened or written.
void write_table_file(const std::string& path, const CriticalValueTable& table);

/// Parses the text format. `name` labels the stream in error messages.
/// Blank lines and lines starting with '#' are skipped after the header.
/// Throws TableFormatError on any malformed input: wrong magic, bad
/// header tokens, duplicate n, wrong column count, values outside
/// (-1, 1), or a row that is not monotone across levels.
CriticalValueTable parse_table(std::istream& in, const std::string& name);

/// parse_table from a file; meta.source becomes "file:<path>".
CriticalValueTable load_table_file(const std::string& path);

}  // namespace bsppcc
