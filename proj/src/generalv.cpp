#include "wron/generalv.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wron/linalg.hpp"
#include "wron/mutations.hpp"

namespace wron {

namespace {

RatMat coeff_matrix(const std::vector<Poly>& polys) {
  int maxdeg = 0;
  for (const Poly& p : polys) maxdeg = std::max(maxdeg, p.degree());
  RatMat m(polys.size(), RatVec(maxdeg + 1, 0));
  for (size_t i = 0; i < polys.size(); ++i)
    for (int j = 0; j <= polys[i].degree(); ++j) m[i][j] = polys[i].coeff(j);
  return m;
}

}  // namespace

Subspace make_subspace(std::vector<Poly> basis) {
  if (basis.size() < 2) throw std::invalid_argument("make_subspace: need dimension >= 2");
  Subspace V;
  V.rank = static_cast<int>(basis.size()) - 1;
  if (rank(coeff_matrix(basis)) != V.rank + 1)
    throw std::invalid_argument("make_subspace: basis not independent");
  Poly g = basis[0];
  for (size_t i = 1; i < basis.size(); ++i) g = gcd(g, basis[i]);
  if (g.degree() != 0) throw std::invalid_argument("make_subspace: base point present");
  V.basis = std::move(basis);
  return V;
}

std::pair<std::vector<int>, std::vector<int>> exponents_at(const Subspace& V,
                                                           const Rational& z) {
  std::vector<Poly> shifted;
  for (const Poly& p : V.basis) shifted.push_back(p.shift(z));
  RatMat m = coeff_matrix(shifted);
  size_t cols = m[0].size();
  std::vector<int> lambda;
  std::vector<bool> used(m.size(), false);
  for (size_t j = 0; j < cols && lambda.size() < m.size(); ++j) {
    size_t pivot = m.size();
    for (size_t i = 0; i < m.size(); ++i)
      if (!used[i] && m[i][j] != 0) {
        pivot = i;
        break;
      }
    if (pivot == m.size()) continue;
    used[pivot] = true;
    lambda.push_back(static_cast<int>(j));
    for (size_t i = 0; i < m.size(); ++i) {
      if (used[i] || m[i][j] == 0) continue;
      Rational f = m[i][j] / m[pivot][j];
      for (size_t c = j; c < cols; ++c) m[i][c] -= f * m[pivot][c];
    }
  }
  if (lambda.size() != m.size())
    throw std::logic_error("exponents_at: rank deficiency");
  std::vector<int> mu;
  for (size_t i = 1; i < lambda.size(); ++i) mu.push_back(lambda[i] - lambda[i - 1] - 1);
  return {lambda, mu};
}

std::optional<std::vector<std::pair<Rational, int>>> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<std::pair<Rational, int>> out;
  Poly q = p;
  auto divisors = [](Integer v) {
    if (v < 0) v = -v;
    std::vector<Integer> ds;
    for (Integer d = 1; d * d <= v; ++d)
      if (v % d == 0) {
        ds.push_back(d);
        if (d * d != v) ds.push_back(v / d);
      }
    return ds;
  };
  while (q.degree() >= 1) {
    int m0 = 0;
    while (q.degree() >= 1 && q.coeff(0) == 0) {
      q = *q.divide_exact(Poly::monomial(1));
      ++m0;
    }
    if (m0 > 0) out.push_back({Rational(0), m0});
    if (q.degree() < 1) break;
    // Clear denominators to integer coefficients.
    Integer lcm_den = 1;
    for (int j = 0; j <= q.degree(); ++j) {
      Integer den = boost::multiprecision::denominator(q.coeff(j));
      lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, den) * den;
    }
    Integer a0 = boost::multiprecision::numerator(Rational(q.coeff(0) * lcm_den));
    Integer an = boost::multiprecision::numerator(Rational(q.leading() * lcm_den));
    bool found = false;
    for (const Integer& pn : divisors(a0)) {
      for (const Integer& qn : divisors(an)) {
        for (int sign : {1, -1}) {
          Rational cand(pn * sign, qn);
          if (q.evaluate(cand) == 0) {
            int mult = 0;
            Poly lin = Poly::monomial(1) - Poly::constant(cand);
            while (true) {
              auto div = q.divide_exact(lin);
              if (!div) break;
              q = *div;
              ++mult;
            }
            out.push_back({cand, mult});
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SingularData singular_data_from(std::vector<Rational> points,
                                std::vector<std::vector<int>> weights, int rank) {
  if (points.size() != weights.size())
    throw std::invalid_argument("singular_data_from: size mismatch");
  SingularData sd;
  sd.rank = rank;
  sd.points = std::move(points);
  sd.weights = std::move(weights);
  for (int i = 1; i <= rank; ++i) {
    Poly t = Poly::constant(1);
    for (size_t a = 0; a < sd.points.size(); ++a) {
      Poly lin = Poly::monomial(1) - Poly::constant(sd.points[a]);
      t = t * pow(lin, sd.weights[a][i - 1]);
    }
    sd.twists.push_back(t);
  }
  return sd;
}

SingularData trivial_singular_data(int rank) {
  return singular_data_from({}, {}, rank);
}

SingularData singular_data(const Subspace& V) {
  Poly w = wronskian(std::span<const Poly>(V.basis));
  auto roots = rational_roots(w);
  if (!roots) throw IrrationalSingularity("singular_data: non-rational root of the Wronskian");
  std::vector<Rational> points;
  std::vector<std::vector<int>> weights;
  for (const auto& [z, mult] : *roots) {
    auto [lambda, mu] = exponents_at(V, z);
    if (std::all_of(mu.begin(), mu.end(), [](int v) { return v == 0; })) continue;
    points.push_back(z);
    weights.push_back(mu);
  }
  SingularData sd = singular_data_from(points, weights, V.rank);
  Poly prod = Poly::constant(1);
  for (int i = 1; i <= V.rank; ++i) prod = prod * pow(sd.twists[i - 1], V.rank + 1 - i);
  Poly scaled = (w.leading() / prod.leading()) * prod;
  if (!(scaled == w))
    throw std::logic_error("singular_data: Wronskian does not factor through the twists");
  return sd;
}

Poly reduced_wronskian(const std::vector<Poly>& b, const SingularData& sd, int i) {
  if (i < 1 || i > static_cast<int>(b.size()))
    throw std::invalid_argument("reduced_wronskian: index out of range");
  std::span<const Poly> head(b.data(), static_cast<size_t>(i));
  Poly w = wronskian(head);
  Poly div = Poly::constant(1);
  for (int l = 1; l < i; ++l) div = div * pow(sd.twists[l - 1], i - l);
  auto q = w.divide_exact(div);
  if (!q) throw std::runtime_error("reduced_wronskian: division not exact");
  return *q;
}

PolyTuple reduced_wronski_map(const std::vector<Poly>& b, const SingularData& sd) {
  PolyTuple y;
  for (int i = 1; i <= sd.rank; ++i) y.entries.push_back(reduced_wronskian(b, sd, i));
  return y;
}

PolyTuple reduced_wronski_map_at(const std::vector<Poly>& b, const SingularData& sd,
                                 const Rational& z) {
  PolyTuple y = reduced_wronski_map(b, sd);
  for (int i = 1; i <= sd.rank; ++i) {
    Rational f = 1;
    for (int l = 1; l < i; ++l) {
      Rational tz = sd.twists[l - 1].evaluate(z);
      if (tz == 0) throw std::invalid_argument("reduced_wronski_map_at: z singular");
      for (int e = 0; e < i - l; ++e) f *= tz;
    }
    y.entries[i - 1] = f * y.entries[i - 1];
  }
  return y;
}

bool unipotent_basis_check(const Subspace& V, const std::vector<Poly>& b,
                           const Rational& z) {
  if (b.size() != V.basis.size()) return false;
  for (size_t i = 1; i <= b.size(); ++i) {
    Poly s = b[i - 1].shift(z);
    for (size_t j = 0; j + 1 < i; ++j)
      if (s.coeff(static_cast<int>(j)) != 0) return false;
    if (s.coeff(static_cast<int>(i - 1)) !=
        Rational(1) / Rational(factorial(static_cast<int>(i - 1))))
      return false;
  }
  // Same span as V.
  std::vector<Poly> joint = V.basis;
  joint.insert(joint.end(), b.begin(), b.end());
  return rank(coeff_matrix(joint)) == V.rank + 1;
}

std::vector<Poly> unipotent_basis(const Subspace& V, const Rational& z) {
  std::vector<Poly> shifted;
  for (const Poly& p : V.basis) shifted.push_back(p.shift(z));
  RatMat m = coeff_matrix(shifted);
  size_t n = m.size(), cols = m[0].size();
  // Row echelon with pivot columns 0..r required (z regular).
  for (size_t i = 0; i < n; ++i) {
    size_t pivot = i;
    while (pivot < n && m[pivot][i] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("unipotent_basis: z not regular");
    std::swap(m[i], m[pivot]);
    Rational inv = Rational(1) / m[i][i];
    for (size_t c = 0; c < cols; ++c) m[i][c] *= inv;
    for (size_t k = 0; k < n; ++k) {
      if (k == i || m[k][i] == 0) continue;
      Rational f = m[k][i];
      for (size_t c = 0; c < cols; ++c) m[k][c] -= f * m[i][c];
    }
  }
  std::vector<Poly> out;
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rational> coeffs(m[i].begin(), m[i].end());
    Poly row(coeffs);
    row = (Rational(1) / Rational(factorial(static_cast<int>(i)))) * row;
    out.push_back(row.shift(-z));
  }
  return out;
}

PolyTuple normalized_mutation_v(const PolyTuple& y, int i, const Rational& c,
                                const Rational& z, const SingularData& sd) {
  int r = y.rank();
  if (i < 1 || i > r)
    throw std::invalid_argument("normalized_mutation_v: index out of range");
  const Poly one = Poly::constant(1);
  const Poly& yi = y.entries[i - 1];
  const Poly& lo = (i >= 2) ? y.entries[i - 2] : one;
  const Poly& hi = (i <= r - 1) ? y.entries[i] : one;
  Rational tz = sd.twists[i - 1].evaluate(z);
  if (tz == 0) throw std::invalid_argument("normalized_mutation_v: T_i(z) = 0");
  if (yi.evaluate(z) != 1)
    throw std::invalid_argument("normalized_mutation_v: y_i(z) != 1");
  Poly h = (Rational(1) / tz) * (sd.twists[i - 1] * lo * hi);
  auto g = wronskian_solve(yi, h);
  if (!g) throw std::runtime_error("normalized_mutation_v: not fertile");
  Poly yhat = *g - g->evaluate(z) * yi;
  if (yhat.evaluate(z) != 0 || yhat.derivative().evaluate(z) != 1)
    throw std::logic_error("normalized_mutation_v: normalization failed");
  PolyTuple out = y;
  out.entries[i - 1] = yi + c * yhat;
  return out;
}

bool fertility_check(const PolyTuple& y, const SingularData& sd) {
  int r = y.rank();
  const Poly one = Poly::constant(1);
  for (int i = 1; i <= r; ++i) {
    const Poly& lo = (i >= 2) ? y.entries[i - 2] : one;
    const Poly& hi = (i <= r - 1) ? y.entries[i] : one;
    if (!wronskian_solve(y.entries[i - 1], sd.twists[i - 1] * lo * hi)) return false;
  }
  return true;
}

bool genericity_check(const PolyTuple& y, const SingularData& sd) {
  int r = y.rank();
  const Poly one = Poly::constant(1);
  for (int i = 1; i <= r; ++i) {
    const Poly& yi = y.entries[i - 1];
    if (yi.degree() >= 1 && gcd(yi, yi.derivative()).degree() != 0) return false;
    const Poly& lo = (i >= 2) ? y.entries[i - 2] : one;
    const Poly& hi = (i <= r - 1) ? y.entries[i] : one;
    if (gcd(yi, sd.twists[i - 1] * lo * hi).degree() != 0) return false;
  }
  return true;
}

GenerationCurve generation_curve(const PolyTuple& y, int i, const SingularData& sd) {
  int r = y.rank();
  const Poly one = Poly::constant(1);
  const Poly& lo = (i >= 2) ? y.entries[i - 2] : one;
  const Poly& hi = (i <= r - 1) ? y.entries[i] : one;
  auto g = wronskian_solve(y.entries[i - 1], sd.twists[i - 1] * lo * hi);
  if (!g) throw std::runtime_error("generation_curve: not fertile");
  return {*g, y.entries[i - 1], i};
}

std::pair<double, std::vector<std::complex<double>>> master_function(
    const MasterFunctionSpec& spec, const CriticalPointCandidate& u) {
  using C = std::complex<double>;
  double logphi = 0.0;
  std::vector<C> grad;
  std::vector<double> zd;
  for (const Rational& z : spec.z) zd.push_back(to_double(z));
  int r = spec.rank;
  for (int ci = 0; ci < r; ++ci) {
    const auto& grp = u.groups[ci];
    for (size_t m = 0; m < grp.size(); ++m) {
      C g = 0.0;
      for (size_t a = 0; a < zd.size(); ++a) {
        C diff = grp[m] - zd[a];
        if (diff == 0.0) throw std::domain_error("master_function: coincident point");
        g -= static_cast<double>(spec.mu[a][ci]) / diff;
        logphi -= spec.mu[a][ci] * std::log(std::abs(diff));
      }
      for (size_t l = 0; l < grp.size(); ++l) {
        if (l == m) continue;
        C diff = grp[m] - grp[l];
        if (diff == 0.0) throw std::domain_error("master_function: coincident point");
        g += 2.0 / diff;
        if (l > m) logphi += 2.0 * std::log(std::abs(diff));
      }
      for (int cj : {ci - 1, ci + 1}) {
        if (cj < 0 || cj >= r) continue;
        for (const C& v : u.groups[cj]) {
          C diff = grp[m] - v;
          if (diff == 0.0) throw std::domain_error("master_function: coincident point");
          g -= 1.0 / diff;
          if (cj > ci) logphi -= std::log(std::abs(diff));
        }
      }
      grad.push_back(g);
    }
  }
  return {logphi, grad};
}

BetheReport bethe_verify(const PolyTuple& y, const SingularData& sd, double tol,
                         const RootOptions& ropt) {
  BetheReport rep;
  if (!genericity_check(y, sd) || !fertility_check(y, sd)) {
    rep.status = "degenerate";
    return rep;
  }
  int r = y.rank();
  MasterFunctionSpec spec;
  spec.rank = r;
  spec.z = sd.points;
  spec.mu = sd.weights;
  CriticalPointCandidate u;
  bool any = false;
  for (int i = 0; i < r; ++i) {
    const Poly& yi = y.entries[i];
    spec.k.push_back(std::max(yi.degree(), 0));
    std::vector<double> coeffs;
    for (int j = 0; j <= yi.degree(); ++j) coeffs.push_back(to_double(yi.coeff(j)));
    try {
      u.groups.push_back(yi.degree() >= 1 ? poly_roots(coeffs, ropt)
                                          : std::vector<std::complex<double>>{});
    } catch (const std::runtime_error&) {
      rep.status = "fail";
      return rep;
    }
    if (yi.degree() >= 1) any = true;
  }
  rep.roots = u.groups;
  if (!any) {
    rep.status = "ok";
    return rep;
  }
  auto [logphi, grad] = master_function(spec, u);
  (void)logphi;
  for (const auto& g : grad) rep.residuals.push_back(std::abs(g));
  rep.max_residual = *std::max_element(rep.residuals.begin(), rep.residuals.end());
  rep.status = rep.max_residual < tol ? "ok" : "fail";
  return rep;
}

Rational volume(const std::vector<Poly>& b, const SingularData& sd) {
  Poly v = reduced_wronskian(b, sd, static_cast<int>(b.size()));
  if (v.degree() > 0) throw std::logic_error("volume: not a constant");
  return v.coeff(0);
}

PolyTuple scale_tuple(const PolyTuple& y, const std::vector<Rational>& d) {
  if (d.size() != y.entries.size())
    throw std::invalid_argument("scale_tuple: size mismatch");
  PolyTuple out = y;
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) throw std::invalid_argument("scale_tuple: zero factor");
    out.entries[i] = d[i] * out.entries[i];
  }
  return out;
}

std::vector<Poly> scale_basis(const std::vector<Poly>& b,
                              const std::vector<Rational>& d) {
  if (d.size() + 1 != b.size()) throw std::invalid_argument("scale_basis: size mismatch");
  for (const Rational& v : d)
    if (v == 0) throw std::invalid_argument("scale_basis: zero factor");
  std::vector<Poly> out;
  for (size_t i = 0; i < b.size(); ++i) {
    Rational num = (i < d.size()) ? d[i] : Rational(1);
    Rational den = (i > 0) ? d[i - 1] : Rational(1);
    out.push_back((num / den) * b[i]);
  }
  return out;
}

PolyTuple wronskian_chart(const Subspace& V, const Rational& z, const Word& h,
                          const std::vector<Rational>& params) {
  if (params.size() != h.length())
    throw std::invalid_argument("wronskian_chart: params length mismatch");
  SingularData sd = singular_data(V);
  PolyTuple y = reduced_wronski_map_at(unipotent_basis(V, z), sd, z);
  for (size_t t = 0; t < h.length(); ++t)
    y = normalized_mutation_v(y, h.letters[t], params[t], z, sd);
  return y;
}

}  // namespace wron
