#pragma once

#include <iosfwd>
#include <string>

#include "parikh/distinguish.hpp"
#include "parikh/hamming.hpp"
#include "parikh/scan.hpp"

namespace parikh {

enum class OutputFormat { Text, Records };

OutputFormat output_format_from_string(const std::string& text);

/// Newline-delimited records: a header line, one line per finding with fields
/// {repr, size, dH, distinguishable, trivial}, and a closing summary line.
/// Timing is left out so that equal parameters give byte-identical files.
void write_records(std::ostream& out, const ScanReport& report);

/// Reads back what write_records produced (used for resuming).
ScanReport read_records(std::istream& in);

void write_text(std::ostream& out, const ScanReport& report);

/// One finding as a single-line record.
std::string finding_record(const Finding& f);

/// Human-readable matrix plus the corner counts |w|_{a_i..a_j}.
std::string describe_matrix(const Word& w);

}  // namespace parikh
