#pragma once

// Text format: one halfplane per line as three rationals "a b c" meaning
// a*x + b*y <= c. A rational is an optionally signed integer or
// integer/positive-integer. '#' starts a comment; blank lines are ignored.
// A file without inequality lines is the whole plane.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "phull/hpoly.hpp"
#include "phull/normalize.hpp"

namespace phull {

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, std::string token, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what + (token.empty() ? "" : " '" + token + "'")),
        line_(line),
        token_(std::move(token)) {}

  std::size_t line() const { return line_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t line_;
  std::string token_;
};

/// Parses the text format; each line is canonicalized, line order is kept.
inline HPoly parse_hpoly(std::string_view text) {
  HPoly out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);

    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw parse_error(line_no, tokens.size() > 3 ? tokens[3] : "",
                        "expected three rationals, got " + std::to_string(tokens.size()));
    }
    Rational v[3];
    for (int i = 0; i < 3; ++i) {
      std::optional<Rational> r = parse_rational(tokens[i]);
      if (!r) throw parse_error(line_no, tokens[i], "malformed rational");
      v[i] = std::move(*r);
    }
    if (v[0] == 0 && v[1] == 0) throw parse_error(line_no, tokens[0] + " " + tokens[1], "zero normal");
    out.push_back(Ineq(v[0], v[1], v[2]));
  }
  return out;
}

/// Emits canonical_poly(poly), one "a b c" line per halfplane.
inline std::string emit_hpoly(const HPoly& poly) {
  std::string out;
  for (const Ineq& e : canonical_poly(poly)) {
    out += to_string(e.a()) + ' ' + to_string(e.b()) + ' ' + to_string(e.c()) + '\n';
  }
  return out;
}

inline HPoly read_hpoly_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hpoly(buf.str());
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace phull
