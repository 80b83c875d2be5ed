#include "cyclecodes/code_io.hpp"

#include <fstream>
#include <sstream>

#include "cyclecodes/errors.hpp"

namespace cyclecodes::codes {

void write_code(std::ostream& os, const Code& code) {
  os << code.q() << ' ' << code.n() << '\n';
  for (const auto& w : code.words()) {
    for (std::size_t i = 0; i < w.symbols.size(); ++i) {
      if (i) os << ' ';
      os << w.symbols[i];
    }
    os << '\n';
  }
}

Code read_code(std::istream& is) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(is, line)) throw ParseError("missing \"q n\" header", lineno);
  int q = 0, n = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> q >> n) || (hs >> extra)) throw ParseError("header must be \"q n\"", lineno);
    if (q < 2 || n < 1) throw ParseError("header needs q >= 2 and n >= 1", lineno);
  }
  std::vector<Word> words;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') throw ParseError("CR line ending", lineno);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<int> s;
    long long v;
    while (ls >> v) {
      if (v < 0 || v >= q) throw ParseError("symbol " + std::to_string(v) + " outside [0, q)", lineno);
      s.push_back(static_cast<int>(v));
    }
    if (!ls.eof()) throw ParseError("non-integer symbol", lineno);
    if (static_cast<int>(s.size()) != n)
      throw ParseError("expected " + std::to_string(n) + " symbols, got " + std::to_string(s.size()), lineno);
    words.emplace_back(q, std::move(s));
  }
  if (words.empty()) throw ParseError("code has no words", lineno + 1);
  return Code(q, n, std::move(words));
}

void write_code_file(const std::string& path, const Code& code) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_code(os, code);
}

Code read_code_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_code(is);
}

}  // namespace cyclecodes::codes
