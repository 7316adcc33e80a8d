#include "ef/construct.hpp"

#include <cctype>
#include <numeric>
#include <vector>

#include "ef/errors.hpp"

namespace ef {

namespace {

Permutation cycle_up_to(int n) {  // (0 1 2 ... n-1)
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Permutation(std::move(img));
}

Permutation swap01(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  img[0] = 1;
  img[1] = 0;
  return Permutation(std::move(img));
}

}  // namespace

PermGroup symmetric_group(int n) {
  if (n < 1) throw InvalidInput("symmetric group needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  if (n == 2) return PermGroup(2, {swap01(2)});
  return PermGroup(n, {swap01(n), cycle_up_to(n)});
}

PermGroup alternating_group(int n) {
  if (n < 1) throw InvalidInput("alternating group needs n >= 1");
  if (n <= 2) return PermGroup::trivial(n);
  std::vector<int> three(n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  Permutation rot{std::move(three)};
  if (n == 3) return PermGroup(3, {rot});
  Permutation big;
  if (n % 2 == 1) {
    big = cycle_up_to(n);
  } else {
    std::vector<int> img(n);  // (1 2 ... n-1), fixing 0
    img[0] = 0;
    for (int i = 1; i < n; ++i) img[i] = i % (n - 1) + 1;
    big = Permutation(std::move(img));
  }
  return PermGroup(n, {rot, big});
}

PermGroup cyclic_group(int n) {
  if (n < 1) throw InvalidInput("cyclic group needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup(n, {cycle_up_to(n)});
}

PermGroup dihedral_group(int n) {
  if (n < 3) throw InvalidInput("dihedral group needs n >= 3");
  std::vector<int> img(n);  // reflection fixing point 0
  img[0] = 0;
  for (int i = 1; i < n; ++i) img[i] = n - i;
  return PermGroup(n, {cycle_up_to(n), Permutation(std::move(img))});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const int da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  for (const Permutation& x : a.generators()) {
    std::vector<int> img(da + db);
    for (int i = 0; i < da; ++i) img[i] = x(i);
    for (int i = 0; i < db; ++i) img[da + i] = da + i;
    gens.emplace_back(std::move(img));
  }
  for (const Permutation& y : b.generators()) {
    std::vector<int> img(da + db);
    std::iota(img.begin(), img.begin() + da, 0);
    for (int i = 0; i < db; ++i) img[da + i] = da + y(i);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(da + db, std::move(gens));
}

PermGroup semidirect_power(int n, int k) {
  if (n < 2) throw InvalidInput("semidirect power needs modulus >= 2");
  const int kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1)
    throw InvalidInput("power map must be a unit mod n");
  std::vector<int> mul(n);
  for (int i = 0; i < n; ++i)
    mul[i] = static_cast<int>((static_cast<long long>(i) * kk) % n);
  return PermGroup(n, {cycle_up_to(n), Permutation(std::move(mul))});
}

PermGroup wreath_product(const PermGroup& base, const PermGroup& top) {
  const int d = base.degree(), r = top.degree();
  if (r < 1) throw InvalidInput("wreath product needs a nonempty top");
  if (point_orbits(top.generators(), r).size() != 1)
    throw InvalidInput("wreath product requires a transitive top group");
  std::vector<Permutation> gens;
  for (const Permutation& x : base.generators()) {  // copy in block 0
    std::vector<int> img(d * r);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < d; ++i) img[i] = x(i);
    gens.emplace_back(std::move(img));
  }
  for (const Permutation& t : top.generators()) {  // permute whole blocks
    std::vector<int> img(d * r);
    for (int b = 0; b < r; ++b)
      for (int i = 0; i < d; ++i) img[b * d + i] = t(b) * d + i;
    gens.emplace_back(std::move(img));
  }
  return PermGroup(d * r, std::move(gens));
}

PermGroup special_linear_2(int p) {
  if (p < 2 || p > 97) throw InvalidInput("SL(2,p) needs a small prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidInput("SL(2,p) needs a small prime");
  const int deg = p * p - 1;  // nonzero column vectors (a, b), index a*p+b-1
  auto matrix_perm = [&](int m00, int m01, int m10, int m11) {
    std::vector<int> img(deg);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        if (a == 0 && b == 0) continue;
        const int na = (m00 * a + m01 * b) % p;
        const int nb = (m10 * a + m11 * b) % p;
        img[a * p + b - 1] = na * p + nb - 1;
      }
    return Permutation(std::move(img));
  };
  return PermGroup(deg, {matrix_perm(1, 1, 0, 1),          // shear
                         matrix_perm(0, p - 1, 1, 0)});    // rotation
}

namespace {

struct ConstructCursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  std::string ident() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() &&
           std::isalpha(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected a constructor name", pos);
    return s.substr(start, pos - start);
  }
  int number() {
    skip_ws();
    const std::size_t start = pos;
    long v = 0;
    while (pos < s.size() &&
           std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) throw ParseError("number too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a number", start);
    return static_cast<int>(v);
  }
};

PermGroup parse_group(ConstructCursor& c) {
  const std::size_t at = c.pos;
  const std::string name = c.ident();
  c.expect('(');
  PermGroup out = PermGroup::trivial(1);
  try {
    if (name == "Sym") {
      out = symmetric_group(c.number());
    } else if (name == "Alt") {
      out = alternating_group(c.number());
    } else if (name == "Cyclic") {
      out = cyclic_group(c.number());
    } else if (name == "Dihedral") {
      out = dihedral_group(c.number());
    } else if (name == "SemidirectPower") {
      const int n = c.number();
      c.expect(',');
      out = semidirect_power(n, c.number());
    } else if (name == "SL") {
      if (c.number() != 2) throw InvalidInput("only SL(2, p) is available");
      c.expect(',');
      out = special_linear_2(c.number());
    } else if (name == "DirectProduct") {
      PermGroup a = parse_group(c);
      c.expect(',');
      out = direct_product(a, parse_group(c));
    } else if (name == "Wreath") {
      PermGroup b = parse_group(c);
      c.expect(',');
      out = wreath_product(b, parse_group(c));
    } else {
      throw ParseError("unknown constructor '" + name + "'", at);
    }
  } catch (const InvalidInput& e) {
    // Give constructor-argument complaints a source position.
    throw ParseError(e.what(), at);
  }
  c.expect(')');
  return out;
}

}  // namespace

PermGroup build_construction(const std::string& spec) {
  ConstructCursor c{spec};
  PermGroup g = parse_group(c);
  if (!c.at_end()) throw ParseError("trailing input", c.pos);
  return g;
}

}  // namespace ef
