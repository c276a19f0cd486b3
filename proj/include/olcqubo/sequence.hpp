// Copyright 2026 The olcqubo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "olcqubo/error.hpp"
#include "olcqubo/random.hpp"

namespace olcqubo {

inline constexpr std::string_view kAlphabet = "ACGT";

inline bool is_nucleotide(char c) {
  return c == 'A' || c == 'C' || c == 'G' || c == 'T';
}

// Non-empty string over {A,C,G,T}.
class NucleotideSequence {
 public:
  explicit NucleotideSequence(std::string bases) : bases_(std::move(bases)) {
    if (bases_.empty())
      throw std::invalid_argument("nucleotide sequence must be non-empty");
    auto bad = std::find_if_not(bases_.begin(), bases_.end(), is_nucleotide);
    if (bad != bases_.end())
      throw std::invalid_argument(std::string("invalid nucleotide '") + *bad +
                                  "' in sequence");
  }

  const std::string& str() const { return bases_; }
  std::string_view view() const { return bases_; }
  std::size_t size() const { return bases_.size(); }
  char operator[](std::size_t i) const { return bases_[i]; }

  auto operator<=>(const NucleotideSequence&) const = default;

 private:
  std::string bases_;
};

inline NucleotideSequence generate_sequence(std::size_t length,
                                            std::uint64_t seed) {
  if (length == 0)
    throw std::invalid_argument("sequence length must be at least 1");
  Rng rng(seed);
  std::string bases(length, 'A');
  for (auto& b : bases) b = kAlphabet[rng.quaternary()];
  return NucleotideSequence(std::move(bases));
}

struct FastaRecord {
  std::string header;
  NucleotideSequence sequence;
};

/// Reads `>header` records followed by one or more uppercase ACGT lines.
/// Blank lines are skipped. Malformed input throws ParseError carrying the
/// 1-based line number; an input with no records is also an error.
inline std::vector<FastaRecord> read_fasta(std::istream& in) {
  std::vector<FastaRecord> records;
  std::string line, header, bases;
  bool in_record = false;
  std::size_t line_no = 0, header_line = 0;

  auto flush = [&] {
    if (!in_record) return;
    if (bases.empty()) throw ParseError("record '" + header + "' has no sequence", header_line);
    records.push_back({header, NucleotideSequence(bases)});
    bases.clear();
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '>') {
      flush();
      header = line.substr(1);
      header_line = line_no;
      in_record = true;
      continue;
    }
    if (!in_record) throw ParseError("sequence data before first '>' header", line_no);
    for (char c : line) {
      if (!is_nucleotide(c))
        throw ParseError(std::string("invalid character '") + c +
                             "' (expected uppercase A, C, G or T)",
                         line_no);
    }
    bases += line;
  }
  flush();
  if (records.empty()) throw ParseError("no FASTA records found", line_no);
  return records;
}

inline void write_fasta(std::ostream& out, std::span<const FastaRecord> records,
                        std::size_t width = 60) {
  for (const auto& r : records) {
    out << '>' << r.header << '\n';
    const auto& s = r.sequence.str();
    for (std::size_t i = 0; i < s.size(); i += width) out << s.substr(i, width) << '\n';
  }
}

}  // namespace olcqubo
