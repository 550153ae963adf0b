#ifndef WRON_LINALG_HPP
#define WRON_LINALG_HPP

#include <optional>
#include <vector>

#include "wron/rational.hpp"

namespace wron {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

Rational determinant(RatMat m);

int rank(RatMat m);

struct LinearSolution {
  RatVec particular;
  std::vector<RatVec> nullspace;
};

/// Exact solve of A x = b by Gauss-Jordan over Q.
/// nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const RatMat& a, const RatVec& b);

}  // namespace wron

#endif
