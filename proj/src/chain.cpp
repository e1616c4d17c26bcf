#include "ineq/chain.hpp"

#include <algorithm>
#include <cmath>

namespace ineq {

double ChainReport::scale() const {
  return std::max({std::abs(left), std::abs(middle), std::abs(right)});
}

ChainReport make_chain(double left, double middle, double right, double tol, bool reversed) {
  ChainReport r;
  r.left = left;
  r.middle = middle;
  r.right = right;
  r.tolerance = tol;
  r.reversed = reversed;
  r.slack_left = reversed ? left - middle : middle - left;
  r.slack_right = reversed ? middle - right : right - middle;
  const double bound = -tol * r.scale();
  r.ordered = r.slack_left >= bound && r.slack_right >= bound;
  return r;
}

}  // namespace ineq
