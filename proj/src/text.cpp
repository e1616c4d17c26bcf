#include "text.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "ineq/errors.hpp"

namespace ineq::text {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& token) {
  const std::string t = trim(token);
  double v = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw ParameterError("invalid number '" + token + "'");
  }
  return v;
}

std::vector<double> parse_reals(const std::string& list, std::size_t expected,
                                const std::string& context) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = list.find(',', start);
    out.push_back(parse_real(list.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (expected != 0 && out.size() != expected) {
    throw ParameterError("'" + context + "' expects " + std::to_string(expected) +
                         " parameter(s)");
  }
  return out;
}

std::string shortest(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), ptr);
}

}  // namespace ineq::text
