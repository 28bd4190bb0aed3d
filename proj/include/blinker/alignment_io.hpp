#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "blinker/alignment.hpp"
#include "blinker/bitext.hpp"

namespace blinker {

// "∅" (U+2205), the empty side of an NT atom.
inline constexpr std::string_view kEmptySide = "\xE2\x88\x85";

// One line of an alignment file:
//   verse_id <TAB> annotator_id <TAB> atoms
// with atoms space-separated as `s-t`, `s-∅` or `∅-t`, 0-based.
struct AlignmentRecord {
  std::string verse_id;
  std::string annotator_id;
  AtomSet atoms;

  friend bool operator==(const AlignmentRecord&,
                         const AlignmentRecord&) = default;
};

AlignmentRecord to_record(const Alignment& a);
// Binds a record to its verse; throws OutOfBoundsError on bad indices.
Alignment to_alignment(const AlignmentRecord& record, const VersePair& vp);

std::string format_atom(const Atom& atom);
std::string format_atoms(const AtomSet& atoms);
std::string format_record(const AlignmentRecord& record);

// Throws ParseError citing `line_no`.
Atom parse_atom(std::string_view text, std::size_t line_no = 0);
AtomSet parse_atoms(std::string_view text, std::size_t line_no = 0);
AlignmentRecord parse_record(std::string_view line, std::size_t line_no = 0);

// Reads every record; blank lines are skipped. A repeated
// (verse_id, annotator_id) pair is a ParseError.
std::vector<AlignmentRecord> read_alignment_file(std::istream& in);
// Writes records ordered by (verse_id, annotator_id).
void write_alignment_file(std::ostream& out,
                          std::vector<AlignmentRecord> records);

}  // namespace blinker
