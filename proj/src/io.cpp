#include "laperfect/io.hpp"

#include <fstream>
#include <sstream>

namespace laperfect {

namespace {

std::string at_line(std::size_t line, const std::string& what) {
  return "code file line " + std::to_string(line) + ": " + what;
}

unsigned parse_header(const std::string& line, bool& complete) {
  std::istringstream fields(line);
  std::string field;
  unsigned n = 0;
  bool have_n = false;
  while (fields >> field) {
    if (field.starts_with("n=") && !have_n) {
      try {
        std::size_t used = 0;
        const unsigned long value = std::stoul(field.substr(2), &used);
        if (used != field.size() - 2 || value == 0 || value > 32) throw std::invalid_argument("range");
        n = static_cast<unsigned>(value);
      } catch (const std::exception&) {
        throw FormatError(at_line(1, "length must be an integer in 1..32"));
      }
      have_n = true;
    } else if (field == "complete=1") {
      complete = true;
    } else if (field != "complete=0") {
      throw FormatError(at_line(1, "unexpected header field '" + field + "'"));
    }
  }
  if (!have_n) throw FormatError(at_line(1, "expected header n=<int>"));
  return n;
}

}  // namespace

void write_code(std::ostream& out, const CodeSet& code, bool complete) {
  const unsigned n = code.length();
  out << "n=" << n << (complete ? " complete=1" : "") << '\n';
  std::string line(n + 1, '\n');
  for (Bits w : code.raw()) {
    for (unsigned k = 0; k < n; ++k) line[k] = (w & coordinate_bit(n, k)) ? '1' : '0';
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

std::string serialize_code(const CodeSet& code, bool complete) {
  std::ostringstream out;
  write_code(out, code, complete);
  return out.str();
}

CodeFile read_code(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError(at_line(1, "empty file"));
  CodeFile file;
  const unsigned n = parse_header(line, file.complete);
  std::vector<Bits> words;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.size() != n) {
      throw FormatError(at_line(number, "expected " + std::to_string(n) + " symbols, got " + std::to_string(line.size())));
    }
    Bits w = 0;
    for (char c : line) {
      if (c != '0' && c != '1') throw FormatError(at_line(number, "symbols must be 0 or 1"));
      w = (w << 1) | static_cast<Bits>(c == '1');
    }
    if (!words.empty() && w <= words.back()) {
      throw FormatError(at_line(number, w == words.back() ? "duplicate word" : "words not in ascending order"));
    }
    words.push_back(w);
  }
  file.code = CodeSet(n, std::move(words));
  return file;
}

CodeFile parse_code(const std::string& text) {
  std::istringstream in(text);
  return read_code(in);
}

CodeFile load_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_code(in);
}

void save_code_file(const std::string& path, const CodeSet& code, bool complete) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_code(out, code, complete);
  if (!out.flush()) throw std::runtime_error("write to '" + path + "' failed");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw std::runtime_error("cannot write '" + path + "'");
}

}  // namespace laperfect
