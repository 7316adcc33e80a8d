#include "ef/cycles.hpp"

#include <cctype>
#include <numeric>
#include <vector>

#include "ef/errors.hpp"

namespace ef {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }
};

int parse_point(Cursor& c, int degree) {
  c.skip_ws();
  const std::size_t start = c.pos;
  if (c.pos >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
    throw ParseError("expected a point", c.pos);
  long v = 0;
  while (c.pos < c.s.size() &&
         std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
    v = v * 10 + (c.s[c.pos] - '0');
    if (v > degree) throw ParseError("point out of range", start);
    ++c.pos;
  }
  if (v < 1) throw ParseError("points are 1-based", start);
  return static_cast<int>(v - 1);
}

}  // namespace

Permutation parse_cycles(const std::string& text, int degree) {
  if (degree < 0) throw InvalidInput("negative degree");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);

  Cursor c{text};
  while (!c.done()) {
    if (c.peek() != '(') throw ParseError("expected '('", c.pos);
    ++c.pos;
    c.skip_ws();
    if (c.pos < c.s.size() && c.s[c.pos] == ')') {  // "()" = identity cycle
      ++c.pos;
      continue;
    }
    std::vector<int> cyc;
    for (;;) {
      const std::size_t at = c.pos;
      int p = parse_point(c, degree);
      if (used[p]) throw ParseError("repeated point", at);
      used[p] = 1;
      cyc.push_back(p);
      c.skip_ws();
      if (c.pos >= c.s.size())
        throw ParseError("unterminated cycle", c.pos);
      if (c.s[c.pos] == ',') {
        ++c.pos;
        continue;
      }
      if (c.s[c.pos] == ')') {
        ++c.pos;
        break;
      }
      throw ParseError("expected ',' or ')'", c.pos);
    }
    for (std::size_t i = 0; i < cyc.size(); ++i)
      img[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  return Permutation(std::move(img));
}

std::string print_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(j + 1);
      seen[j] = 1;
      j = p(j);
      first = false;
    } while (j != i);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace ef
