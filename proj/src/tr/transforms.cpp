#include "tr/transforms.hpp"

#include <algorithm>
#include <cassert>

namespace convexval {

LogConcaveFn polar(const LogConcaveFn& f) {
  return f.kind == 'S' ? make_logconcave_f(conjugate(*f.s)) : make_logconcave_s(conjugate(*f.f));
}

namespace {

// Lower-triangular matrix of balls (row-major, row i holds i+1 entries).
using LowerTri = std::vector<std::vector<Ball>>;

LowerTri tri_identity(std::size_t m, mpfr_prec_t prec) {
  LowerTri t(m);
  for (std::size_t i = 0; i < m; ++i) {
    t[i].assign(i + 1, Ball(prec));
    t[i][i] = Ball::exact(Rat(1), prec);
  }
  return t;
}

LowerTri tri_mul(const LowerTri& a, const LowerTri& b, mpfr_prec_t prec) {
  const std::size_t m = a.size();
  LowerTri r(m);
  for (std::size_t i = 0; i < m; ++i) {
    r[i].assign(i + 1, Ball(prec));
    for (std::size_t j = 0; j <= i; ++j) {
      Ball s(prec);
      for (std::size_t k = j; k <= i; ++k) s = s + a[i][k] * b[k][j];
      r[i][j] = std::move(s);
    }
  }
  return r;
}

}  // namespace

Ball divided_diff_exp(const std::vector<Rat>& nodes, mpfr_prec_t prec) {
  assert(!nodes.empty());
  const std::size_t m = nodes.size();
  if (m == 1) return Ball::exp_of(nodes[0], prec);

  // Scale so the Opitz matrix has row sums <= 1/2, Taylor-expand, square back.
  Rat maxabs(0);
  for (const auto& z : nodes) maxabs = std::max(maxabs, rat_abs(z));
  int s = 0;
  {
    Rat bound = maxabs + 1;
    while (bound > Rat(1, 2)) {
      bound /= 2;
      ++s;
    }
  }
  const Rat scale = [&] {
    Rat r(1);
    for (int i = 0; i < s; ++i) r /= 2;
    return r;
  }();

  // M: diagonal nodes[i]*scale, subdiagonal scale.
  LowerTri mat(m);
  for (std::size_t i = 0; i < m; ++i) {
    mat[i].assign(i + 1, Ball(prec));
    mat[i][i] = Ball::exact(nodes[i] * scale, prec);
    if (i > 0) mat[i][i - 1] = Ball::exact(scale, prec);
  }

  // Taylor terms until the tail bound 2 (1/2)^{J+1} / (J+1)! drops below 2^-(prec+8).
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(prec) + 8);
  const Rat eps = Rat(1) / Rat(two_pow);
  int terms = 1;
  {
    Rat tail = Rat(1, 2);  // (1/2)^{J+1}/(J+1)! at J = 0
    while (2 * tail >= eps) {
      ++terms;
      tail = tail / 2 / (terms + 1);
    }
  }

  LowerTri sum = tri_identity(m, prec);
  LowerTri term = mat;
  for (int j = 1; j <= terms; ++j) {
    if (j > 1) {
      term = tri_mul(term, mat, prec);
      for (auto& row : term)
        for (auto& e : row) e = e.mul_rat(Rat(1, j));
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k <= i; ++k) sum[i][k] = sum[i][k] + term[i][k];
  }
  // Entrywise tail bound: |(M^j)_{ab}| <= ||M||_inf^j <= (1/2)^j.
  {
    Rat tail(1);
    for (int j = 0; j <= terms; ++j) tail /= 2;
    mpz_class fact(1);
    for (int j = 2; j <= terms + 1; ++j) fact *= j;
    tail = 2 * tail / Rat(fact);
    for (auto& row : sum)
      for (auto& e : row) e.widen(tail);
  }

  for (int i = 0; i < s; ++i) sum = tri_mul(sum, sum, prec);
  return sum[m - 1][0];
}

Ball laplace_polytope(const Polytope& p, const Vec& x, mpfr_prec_t prec) {
  if (p.empty()) throw DomainError("laplace of empty polytope");
  if (static_cast<int>(x.size()) != p.n) throw InputError("laplace: dimension mismatch");
  Ball total(prec);
  if (p.dim < p.n) return total;
  for (const auto& sx : p.triangulation) {
    Mat edges;
    for (std::size_t i = 1; i < sx.size(); ++i)
      edges.push_back(vsub(p.vertices[static_cast<std::size_t>(sx[i])],
                           p.vertices[static_cast<std::size_t>(sx[0])]));
    const Rat w = rat_abs(mat_det(edges));  // n! * vol(simplex)
    if (w == 0) continue;
    std::vector<Rat> nodes;
    for (int ix : sx) nodes.push_back(dot(x, p.vertices[static_cast<std::size_t>(ix)]));
    total = total + divided_diff_exp(nodes, prec).mul_rat(w);
  }
  return total;
}

Ball laplace_logconcave(const LogConcaveFn& f, const Vec& x, mpfr_prec_t prec, const Rat& mult) {
  if (f.kind != 'S')
    throw UnsupportedError("laplace transform needs a coercive (kind S) log-concave function");
  const PLConvexS& u = *f.s;
  if (static_cast<int>(x.size()) != u.n) throw InputError("laplace: dimension mismatch");
  Ball total(prec);
  if (u.dom.dim < u.n || mult == 0) return total;
  for (const auto& cell : u.cells) {
    Mat edges;
    for (std::size_t i = 1; i < cell.simplex.size(); ++i)
      edges.push_back(vsub(cell.simplex[i], cell.simplex[0]));
    const Rat w = rat_abs(mat_det(edges));
    if (w == 0) continue;
    std::vector<Rat> nodes;
    for (const auto& v : cell.simplex) nodes.push_back(dot(x, v) - dot(cell.a, v));
    // integral over the cell of e^{(x-a).y} dy, times e^{-b}.
    total = total + (divided_diff_exp(nodes, prec) * Ball::exp_of(-cell.b, prec)).mul_rat(w * mult);
  }
  return total;
}

Scalar density_eval(const ExpPolyDensity& eta, const Rat& t, mpfr_prec_t prec) {
  Scalar total = scalar_exact(Rat(0));
  for (const auto& term : eta) {
    Rat tp(1);
    for (int i = 0; i < term.power; ++i) tp *= t;
    const Rat c = term.c * tp;
    if (term.lambda == 0)
      total = scalar_add(total, scalar_exact(c), prec);
    else
      total = scalar_add(total, scalar_exp_form(c, term.lambda * t), prec);
  }
  return total;
}

namespace {

// Antiderivative of t^j e^{lt} as e^{lt} q(t): q = sum_r (-1)^r j!/(j-r)! t^{j-r} / l^{r+1}.
std::vector<Rat> exp_power_antiderivative(int j, const Rat& l) {
  std::vector<Rat> q(static_cast<std::size_t>(j) + 1, Rat(0));
  Rat coef = 1 / l;  // r = 0 term for t^j
  for (int r = 0; r <= j; ++r) {
    q[static_cast<std::size_t>(j - r)] = coef;
    if (r < j) coef = -coef * Rat(j - r) / l;
  }
  return q;
}

}  // namespace

Scalar exp_poly_integral(const PiecewisePoly& pp, const ExpPolyDensity& eta, mpfr_prec_t prec) {
  Scalar total = scalar_exact(Rat(0));
  if (pp.trivial()) return total;
  for (const auto& term : eta) {
    if (term.lambda == 0) {
      total = scalar_add(total, scalar_exact(term.c * integrate_times_power(pp, term.power)),
                         prec);
      continue;
    }
    Ball sum(prec);
    for (std::size_t k = 0; k < pp.coeff.size(); ++k) {
      // poly = c * t^power * pp.coeff[k]
      std::vector<Rat> poly(static_cast<std::size_t>(term.power), Rat(0));
      for (const auto& cj : pp.coeff[k]) poly.push_back(term.c * cj);
      // q with e^{lt} q(t) the antiderivative of e^{lt} poly(t)
      std::vector<Rat> q(poly.size() + 1, Rat(0));
      for (std::size_t j = 0; j < poly.size(); ++j) {
        if (poly[j] == 0) continue;
        const auto aj = exp_power_antiderivative(static_cast<int>(j), term.lambda);
        for (std::size_t r = 0; r < aj.size(); ++r) q[r] += poly[j] * aj[r];
      }
      const Rat a = pp.breaks[k], b = pp.breaks[k + 1];
      sum = sum + Ball::exp_of(term.lambda * b, prec).mul_rat(poly_eval(q, b)) -
            Ball::exp_of(term.lambda * a, prec).mul_rat(poly_eval(q, a));
    }
    total = scalar_add(total, scalar_real(sum), prec);
  }
  return total;
}

}  // namespace convexval
