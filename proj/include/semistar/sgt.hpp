//
// semistar - finite semigroup representation analysis
//
// The ".sgt" table file format.
//
//   n <count>
//   <n rows of n whitespace-separated 1-based indices>
//   zero <1-based index>            (optional)
//   involution <n 1-based indices>  (optional, candidate map)
//
// Blank lines are ignored; anything else after the table is rejected.
//

#ifndef SEMISTAR_SGT_HPP_
#define SEMISTAR_SGT_HPP_

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "semigroup.hpp"

namespace semistar {

struct SgtFile {
  SemigroupTable table;
  std::optional<std::vector<int>> involution;  // 0-based candidate map
};

namespace detail {

inline bool split_tokens(const std::string& line, std::vector<std::string>& out) {
  out.clear();
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) {
    out.push_back(tok);
  }
  return !out.empty();
}

inline int parse_index(const std::string& tok, int n, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + tok + "'");
  }
  if (used != tok.size() || value < 1 || value > n) {
    throw ParseError(std::string("bad ") + what + " '" + tok + "'");
  }
  return value - 1;
}

}  // namespace detail

inline SgtFile parse_sgt(std::istream& in) {
  std::string line;
  std::vector<std::string> tok;
  do {
    if (!std::getline(in, line)) {
      throw ParseError("missing 'n <count>' header");
    }
  } while (!detail::split_tokens(line, tok));
  if (tok.size() != 2 || tok[0] != "n") {
    throw ParseError("first line must be 'n <count>'");
  }
  int n = 0;
  try {
    n = std::stoi(tok[1]);
  } catch (const std::exception&) {
    throw ParseError("bad element count '" + tok[1] + "'");
  }
  if (n < 1) {
    throw ParseError("element count must be positive");
  }

  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    do {
      if (!std::getline(in, line)) {
        throw ParseError("table row " + std::to_string(a + 1) + " missing");
      }
    } while (!detail::split_tokens(line, tok));
    if (static_cast<int>(tok.size()) != n) {
      throw ParseError("table row " + std::to_string(a + 1) + " has "
                       + std::to_string(tok.size()) + " entries, expected "
                       + std::to_string(n));
    }
    for (int b = 0; b < n; ++b) {
      raw[a][b] = detail::parse_index(tok[b], n, "table entry");
    }
  }

  std::optional<int> zero;
  std::optional<std::vector<int>> involution;
  while (std::getline(in, line)) {
    if (!detail::split_tokens(line, tok)) {
      continue;
    }
    if (tok[0] == "zero") {
      if (zero || tok.size() != 2) {
        throw ParseError("malformed or repeated 'zero' line");
      }
      zero = detail::parse_index(tok[1], n, "zero index");
    } else if (tok[0] == "involution") {
      if (involution || static_cast<int>(tok.size()) != n + 1) {
        throw ParseError("malformed or repeated 'involution' line");
      }
      std::vector<int> map(n);
      for (int a = 0; a < n; ++a) {
        map[a] = detail::parse_index(tok[a + 1], n, "involution entry");
      }
      involution = std::move(map);
    } else {
      throw ParseError("trailing garbage: '" + line + "'");
    }
  }

  SgtFile file;
  file.table = validate_table(raw, zero);
  file.involution = std::move(involution);
  return file;
}

inline SgtFile parse_sgt_string(const std::string& text) {
  std::istringstream iss(text);
  return parse_sgt(iss);
}

inline SgtFile load_sgt(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  return parse_sgt(in);
}

inline std::string write_sgt(const SemigroupTable& s,
                             const std::optional<std::vector<int>>& involution
                             = std::nullopt) {
  std::ostringstream out;
  out << "n " << s.n << "\n";
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      out << (b ? " " : "") << s.mul[a][b] + 1;
    }
    out << "\n";
  }
  if (s.zero) {
    out << "zero " << *s.zero + 1 << "\n";
  }
  if (involution) {
    out << "involution";
    for (int a = 0; a < s.n; ++a) {
      out << " " << (*involution)[a] + 1;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace semistar

#endif  // SEMISTAR_SGT_HPP_
