#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "laperfect/code_set.hpp"

namespace laperfect {

/// Raised for malformed input files; the message names the line.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CodeFile {
  CodeSet code;
  /// Header carried complete=1: the writer claimed the full cardinality.
  bool complete = false;
};

/// Header "n=<n>" (plus " complete=1"), then one word per line, ascending.
void write_code(std::ostream& out, const CodeSet& code, bool complete);
std::string serialize_code(const CodeSet& code, bool complete);

/// Strict on syntax, order and duplicates; the word count is not checked
/// here so that verification can report it.
CodeFile read_code(std::istream& in);
CodeFile parse_code(const std::string& text);

CodeFile load_code_file(const std::string& path);
void save_code_file(const std::string& path, const CodeSet& code, bool complete);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace laperfect
