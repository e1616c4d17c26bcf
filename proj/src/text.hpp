#pragma once

#include <string>
#include <vector>

namespace ineq::text {

std::string lower(std::string s);
std::string trim(const std::string& s);
/// Finite decimal literal; throws ParameterError naming the token.
double parse_real(const std::string& token);
/// Comma-separated list; `expected` of 0 accepts any nonzero count.
std::vector<double> parse_reals(const std::string& list, std::size_t expected,
                                const std::string& context);
/// Shortest round-trip decimal form.
std::string shortest(double v);

}  // namespace ineq::text
