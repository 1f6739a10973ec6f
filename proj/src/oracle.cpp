#include <stdexcept>

#include "pqsaddle/integral.hpp"

namespace pqs {

namespace {

// Gaussian elimination over Q; A is square.
std::vector<Rational> solve_dense(std::vector<std::vector<Rational>> A, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && A[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::runtime_error("oracle: singular coefficient system");
    std::swap(A[pivot], A[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col].is_zero()) continue;
      Rational factor = A[r][col] / A[col][col];
      for (std::size_t c = col; c < n; ++c) A[r][c] -= factor * A[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / A[i][i];
  return x;
}

struct PlanarField {
  Ring ring;
  Polynomial xdot, ydot;

  Polynomial apply(const Polynomial& f) const { return xdot * f.derivative("x") + ydot * f.derivative("y"); }
};

Monomial xy(std::size_t ex, std::size_t ey) {
  return Monomial(std::vector<Monomial::Exponent>{static_cast<Monomial::Exponent>(ex),
                                                  static_cast<Monomial::Exponent>(ey)});
}

PlanarField build_field(const SystemFamily& fam) {
  Ring ring = VariableSet::make({"x", "y"});
  Polynomial x = Polynomial::variable(ring, "x"), y = Polynomial::variable(ring, "y");
  Polynomial fx = Polynomial::constant(ring, fam.p()), fy = Polynomial::constant(ring, fam.q());
  for (std::size_t k = 0; k < fam.ell(); ++k) {
    const auto& t = fam.terms()[k];
    const auto u = t.index.u, v = t.index.v;
    fx -= Polynomial::monomial(ring, xy(fam.q() * u, fam.p() * v), *t.a);
    fy -= Polynomial::monomial(ring, xy(fam.q() * v, fam.p() * u), *t.b);
  }
  return {ring, x * fx, -(y * fy)};
}

}  // namespace

SeriesOracle oracle_series(const SystemFamily& family, unsigned D) {
  if (!family.is_numeric()) throw std::invalid_argument("oracle_series requires numeric parameters");
  const std::size_t p = family.p(), q = family.q();
  if (D < p + q) throw std::invalid_argument("degree bound is below p + q");

  PlanarField field = build_field(family);
  const Ring& ring = field.ring;
  Polynomial psi = Polynomial::monomial(ring, xy(q, p));

  for (std::size_t d = p + q + 1; d <= D; ++d) {
    // the resonant monomial (x^q y^p)^m keeps coefficient zero
    std::optional<std::size_t> resonant_j;
    if (d % (p + q) == 0) resonant_j = q * (d / (p + q));

    std::vector<Monomial> unknowns;
    for (std::size_t j = 0; j <= d; ++j)
      if (j != resonant_j) unknowns.push_back(xy(j, d - j));

    Polynomial known = field.apply(psi);
    const std::size_t n = unknowns.size();
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (std::size_t col = 0; col < n; ++col) {
      Polynomial image = field.apply(Polynomial::monomial(ring, unknowns[col]));
      for (std::size_t row = 0; row < n; ++row) A[row][col] = image.coefficient(unknowns[row]);
    }
    for (std::size_t row = 0; row < n; ++row) rhs[row] = -known.coefficient(unknowns[row]);

    auto solution = solve_dense(std::move(A), std::move(rhs));
    for (std::size_t i = 0; i < n; ++i) psi.add_term(unknowns[i], solution[i]);
  }

  SeriesOracle out;
  Polynomial image = field.apply(psi);
  for (std::size_t k = 1; (k + 1) * (p + q) <= D; ++k)
    out.g.push_back(image.coefficient(xy(q * (k + 1), p * (k + 1))));

  const long lp = static_cast<long>(p), lq = static_cast<long>(q);
  for (long n = 0; n + lp + lq <= static_cast<long>(D); ++n)
    for (long k1 = -lq; k1 <= n + lp; ++k1) {
      long k2 = n - k1;
      out.v.emplace(Bidegree{k1, k2}, psi.coefficient(xy(static_cast<std::size_t>(k1 + lq),
                                                         static_cast<std::size_t>(k2 + lp))));
    }
  return out;
}

}  // namespace pqs
