#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "statseq/errors.hpp"
#include "statseq/sequence.hpp"

namespace statseq {

// Decimal rendering with 17 significant digits ("%.17g"): parses back to the
// identical double.
std::string format_double(double v);

// CSV: one decimal value per line, index = line number.
void write_sequence_csv(const RealSequence& l, std::ostream& os);
void write_sequence_csv(const RealSequence& l, const std::filesystem::path& path);
RealSequence read_sequence_csv(std::istream& is, std::string origin);
RealSequence read_sequence_csv(const std::filesystem::path& path);

// JSONL: one object per line with fields "i" (1..N, contiguous) and "value".
RealSequence read_sequence_jsonl(std::istream& is, std::string origin);
RealSequence read_sequence_jsonl(const std::filesystem::path& path);

// Dispatch by extension: .jsonl/.ndjson -> JSONL, anything else -> CSV.
RealSequence read_sequence_auto(const std::filesystem::path& path);

}  // namespace statseq
