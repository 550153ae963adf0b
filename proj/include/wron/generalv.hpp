#ifndef WRON_GENERALV_HPP
#define WRON_GENERALV_HPP

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wron/cells.hpp"
#include "wron/poly.hpp"
#include "wron/roots.hpp"
#include "wron/words.hpp"
#include "wron/wronskian.hpp"

namespace wron {

/// (r+1)-dimensional space of polynomials without base points.
struct Subspace {
  std::vector<Poly> basis;
  int rank = 0;
};

/// Validates independence and the no-base-point condition.
Subspace make_subspace(std::vector<Poly> basis);

/// Singular points z_a with weights mu^{(a)} and the twist polynomials
/// T_i = prod_a (x - z_a)^{mu^{(a)}_i}.
struct SingularData {
  std::vector<Rational> points;
  std::vector<std::vector<int>> weights;  // one vector of length r per point
  std::vector<Poly> twists;               // T_1..T_r
  int rank = 0;
};

struct IrrationalSingularity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Orders of vanishing lambda_0 < ... < lambda_r of V at z, and the
/// weight mu_i = lambda_i - lambda_{i-1} - 1.
std::pair<std::vector<int>, std::vector<int>> exponents_at(const Subspace& V,
                                                           const Rational& z);

/// Derives the singular data from the rational roots of the basis
/// Wronskian; verifies Wr = const * T_1^r T_2^{r-1} ... T_r. Throws
/// IrrationalSingularity when the Wronskian has a non-rational root.
SingularData singular_data(const Subspace& V);

/// Builds twists from explicitly supplied points and weights.
SingularData singular_data_from(std::vector<Rational> points,
                                std::vector<std::vector<int>> weights, int rank);

/// Empty singular set (T_i = 1), the untwisted case.
SingularData trivial_singular_data(int rank);

/// All rational roots with multiplicity; nullopt when the residual
/// factor after extraction is non-constant.
std::optional<std::vector<std::pair<Rational, int>>> rational_roots(const Poly& p);

/// Wr(b_1..b_i) / (T_1^{i-1} T_2^{i-2} ... T_{i-1}); the division must
/// be exact.
Poly reduced_wronskian(const std::vector<Poly>& b, const SingularData& sd, int i);

/// (y_1, ..., y_r) with y_i = reduced_wronskian(b, sd, i).
PolyTuple reduced_wronski_map(const std::vector<Poly>& b, const SingularData& sd);

/// Same, rescaled by prod_{l<i} T_l(z)^{i-l} so that unipotent-at-z
/// bases give y_i(z) = 1.
PolyTuple reduced_wronski_map_at(const std::vector<Poly>& b, const SingularData& sd,
                                 const Rational& z);

/// b_i = (x-z)^{i-1}/(i-1)! + O((x-z)^i) and b spans V.
bool unipotent_basis_check(const Subspace& V, const std::vector<Poly>& b,
                           const Rational& z);

/// A unipotent basis of V at a regular point z.
std::vector<Poly> unipotent_basis(const Subspace& V, const Rational& z);

/// Replaces y_i by y_i + c * yhat where yhat solves
/// Wr(y_i, yhat) = (T_i(x)/T_i(z)) y_{i-1} y_{i+1}, yhat(z) = 0,
/// yhat'(z) = 1.
PolyTuple normalized_mutation_v(const PolyTuple& y, int i, const Rational& c,
                                const Rational& z, const SingularData& sd);

/// The twisted mutation equation is solvable in every direction.
bool fertility_check(const PolyTuple& y, const SingularData& sd);

/// Each y_i squarefree and coprime to T_i y_{i-1} y_{i+1}.
bool genericity_check(const PolyTuple& y, const SingularData& sd);

/// One-parameter family y_i + c * particular (+ multiples of y_i).
struct GenerationCurve {
  Poly particular;
  Poly kernel;  // y_i
  int direction = 0;
};
GenerationCurve generation_curve(const PolyTuple& y, int i, const SingularData& sd);

struct MasterFunctionSpec {
  int rank = 0;
  std::vector<int> k;                     // roots per color
  std::vector<Rational> z;                // singular points
  std::vector<std::vector<int>> mu;       // weights per point
};

struct CriticalPointCandidate {
  std::vector<std::vector<std::complex<double>>> groups;
};

/// log |Phi| and the gradient of log Phi, flattened color by color.
std::pair<double, std::vector<std::complex<double>>> master_function(
    const MasterFunctionSpec& spec, const CriticalPointCandidate& u);

struct BetheReport {
  std::string status;  // "ok", "degenerate", "fail", "no-roots"
  double max_residual = 0.0;
  std::vector<double> residuals;
  std::vector<std::vector<std::complex<double>>> roots;
};

/// Extracts the roots of each y_i numerically and evaluates the
/// stationarity system of the master function at them.
BetheReport bethe_verify(const PolyTuple& y, const SingularData& sd, double tol,
                         const RootOptions& ropt = {});

/// Reduced Wronskian of the full basis; a degree-zero constant.
Rational volume(const std::vector<Poly>& b, const SingularData& sd);

/// Torus action on tuples: (d_1 y_1, ..., d_r y_r).
PolyTuple scale_tuple(const PolyTuple& y, const std::vector<Rational>& d);

/// Torus action on bases: (b_1 d_1, b_2 d_2/d_1, ..., b_{r+1}/d_r).
std::vector<Poly> scale_basis(const std::vector<Poly>& b,
                              const std::vector<Rational>& d);

/// Evolution by twisted normalized mutations from the tuple of the
/// unipotent basis at z.
PolyTuple wronskian_chart(const Subspace& V, const Rational& z, const Word& h,
                          const std::vector<Rational>& params);

}  // namespace wron

#endif
