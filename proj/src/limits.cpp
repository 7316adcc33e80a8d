#include "ef/limits.hpp"

#include <cstdlib>
#include <string>

#include "ef/errors.hpp"

namespace ef {

Limits Limits::parse(const char* spec, Limits base) {
  if (spec == nullptr || *spec == '\0') return base;
  std::string s(spec);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(pos, end - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw InvalidInput("threshold override item missing '=': " + item);
    std::string key = item.substr(0, eq);
    std::uint64_t value = 0;
    try {
      value = std::stoull(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InvalidInput("bad threshold value in: " + item);
    }
    if (value == 0) throw InvalidInput("threshold must be positive: " + item);
    if (key == "enum")
      base.enumeration = value;
    else if (key == "quotient")
      base.quotient_degree = value;
    else
      throw InvalidInput("unknown threshold key: " + key);
    pos = end + 1;
  }
  return base;
}

const Limits& Limits::current() {
  static const Limits inst = parse(std::getenv("ENGEL_FORGE_THRESHOLDS"), Limits{});
  return inst;
}

}  // namespace ef
