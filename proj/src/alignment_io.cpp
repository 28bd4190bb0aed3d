#include "blinker/alignment_io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <tuple>

#include "blinker/errors.hpp"

namespace blinker {

AlignmentRecord to_record(const Alignment& a) {
  return {a.verse_id, a.annotator_id, to_atoms(a)};
}

Alignment to_alignment(const AlignmentRecord& record, const VersePair& vp) {
  if (record.verse_id != vp.id) {
    throw ValidationError("record for '" + record.verse_id +
                          "' bound to verse '" + vp.id + "'");
  }
  return from_atoms(record.verse_id, record.annotator_id, Extent::of(vp),
                    record.atoms);
}

std::string format_atom(const Atom& atom) {
  std::string out =
      atom.source ? std::to_string(*atom.source) : std::string(kEmptySide);
  out += '-';
  out += atom.target ? std::to_string(*atom.target) : std::string(kEmptySide);
  return out;
}

std::string format_atoms(const AtomSet& atoms) {
  std::string out;
  for (const auto& atom : atoms) {
    if (!out.empty()) out += ' ';
    out += format_atom(atom);
  }
  return out;
}

std::string format_record(const AlignmentRecord& record) {
  return record.verse_id + '\t' + record.annotator_id + '\t' +
         format_atoms(record.atoms);
}

namespace {

std::optional<std::size_t> parse_side(std::string_view text,
                                      std::string_view atom,
                                      std::size_t line_no) {
  if (text == kEmptySide) return std::nullopt;
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(line_no, "bad atom '" + std::string(atom) + "'");
  }
  return value;
}

}  // namespace

Atom parse_atom(std::string_view text, std::size_t line_no) {
  // '-' cannot occur inside "∅" or a number, so the first one separates.
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    throw ParseError(line_no, "bad atom '" + std::string(text) + "'");
  }
  Atom atom{parse_side(text.substr(0, dash), text, line_no),
            parse_side(text.substr(dash + 1), text, line_no)};
  if (!atom.source && !atom.target) {
    throw ParseError(line_no, "atom '" + std::string(text) +
                                  "' has no index on either side");
  }
  return atom;
}

AtomSet parse_atoms(std::string_view text, std::size_t line_no) {
  AtomSet atoms;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    const auto j = std::min(text.find(' ', i), text.size());
    const std::string_view piece = text.substr(i, j - i);
    if (!atoms.insert(parse_atom(piece, line_no)).second) {
      throw ParseError(line_no, "duplicate atom '" + std::string(piece) + "'");
    }
    i = j;
  }
  return atoms;
}

AlignmentRecord parse_record(std::string_view line, std::size_t line_no) {
  const auto tab1 = line.find('\t');
  const auto tab2 = tab1 == std::string_view::npos
                        ? tab1
                        : line.find('\t', tab1 + 1);
  if (tab2 == std::string_view::npos ||
      line.find('\t', tab2 + 1) != std::string_view::npos) {
    throw ParseError(line_no, "expected 3 tab-separated fields");
  }
  AlignmentRecord record{std::string(line.substr(0, tab1)),
                         std::string(line.substr(tab1 + 1, tab2 - tab1 - 1)),
                         parse_atoms(line.substr(tab2 + 1), line_no)};
  if (record.verse_id.empty() || record.annotator_id.empty()) {
    throw ParseError(line_no, "empty verse or annotator id");
  }
  return record;
}

std::vector<AlignmentRecord> read_alignment_file(std::istream& in) {
  std::vector<AlignmentRecord> records;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto record = parse_record(line, line_no);
    if (!seen.emplace(record.verse_id, record.annotator_id).second) {
      throw ParseError(line_no, "second record for verse '" +
                                    record.verse_id + "' by '" +
                                    record.annotator_id + "'");
    }
    records.push_back(std::move(record));
  }
  return records;
}

void write_alignment_file(std::ostream& out,
                          std::vector<AlignmentRecord> records) {
  std::sort(records.begin(), records.end(), [](const auto& x, const auto& y) {
    return std::tie(x.verse_id, x.annotator_id) <
           std::tie(y.verse_id, y.annotator_id);
  });
  for (const auto& r : records) out << format_record(r) << '\n';
}

}  // namespace blinker
