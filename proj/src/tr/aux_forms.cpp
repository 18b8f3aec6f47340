#include "tr/aux_forms.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>

namespace convexval {

ZetaSpec zeta_linear(const Rat& zeta0, const Rat& slope_pos, const Rat& slope_neg) {
  ZetaSpec z;
  z.zeta0 = zeta0;
  z.slope_pos = slope_pos;
  z.slope_neg = slope_neg;
  return z;
}

ZetaSpec zeta_exponential(const Rat& sigma, const Rat& amp_pos, const Rat& amp_neg,
                          const Rat& const_pos, const Rat& const_neg) {
  if (const_pos + const_neg != 0 || amp_pos + const_pos != amp_neg + const_neg)
    throw InputError("exponential zeta needs cancelling constants and matching branches at 0");
  ZetaSpec z;
  z.exponential = true;
  z.sigma = sigma;
  z.amp_pos = amp_pos;
  z.amp_neg = amp_neg;
  z.const_pos = const_pos;
  z.const_neg = const_neg;
  return z;
}

Scalar zeta_eval(const ZetaSpec& z, const Rat& t, mpfr_prec_t prec) {
  const bool pos = t >= 0;
  if (!z.exponential) return scalar_exact(z.zeta0 + (pos ? z.slope_pos : z.slope_neg) * t);
  return scalar_add(scalar_exp_form(pos ? z.amp_pos : z.amp_neg, z.sigma * t),
                    scalar_exact(pos ? z.const_pos : z.const_neg), prec);
}

Scalar weird_valuation(const PLConvexS& u, const Vec& x, mpfr_prec_t prec) {
  if (static_cast<int>(x.size()) != u.n) throw InputError("dimension mismatch");

  std::vector<Rat> levels;
  for (const auto& [gx, gt] : u.graph) levels.push_back(gt);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // Support of the sublevel set in direction x. When the cell complex is
  // available, the maximum of <x, .> over {u <= s} is attained either at a
  // graph point with value <= s or on a cell edge crossing height s (the
  // function is affine along each edge, so the crossing point lies in the
  // set, and every vertex of the set sits on a complex edge). That avoids
  // building the clipped polytope per level.
  std::function<Rat(const Rat&)> g;
  if (!u.cells.empty()) {
    g = [&](const Rat& s) {
      std::optional<Rat> best;
      const auto consider = [&](const Rat& v) {
        if (!best || v > *best) best = v;
      };
      for (const auto& [gx, gt] : u.graph)
        if (gt <= s) consider(dot(x, gx));
      for (const auto& cell : u.cells) {
        const std::size_t m = cell.simplex.size();
        std::vector<Rat> vals(m);
        for (std::size_t i = 0; i < m; ++i)
          vals[i] = dot(cell.a, cell.simplex[i]) + cell.b;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = i + 1; j < m; ++j) {
            const Rat &vi = vals[i], &vj = vals[j];
            if (!((vi < s && s < vj) || (vj < s && s < vi))) continue;
            const Rat t = (s - vi) / (vj - vi);
            consider(dot(x, cell.simplex[i]) +
                     t * (dot(x, cell.simplex[j]) - dot(x, cell.simplex[i])));
          }
      }
      assert(best.has_value());
      return *best;
    };
  } else {
    g = [&](const Rat& s) { return support(sublevel(u, s), x); };
  }

  // The integrand is concave in s, and between consecutive graph levels it is
  // also a finite maximum of affine functions, hence affine there. The
  // midpoint check certifies that exactly; a failure splits the interval.
  PiecewisePoly pp;
  pp.breaks.push_back(levels.front());
  std::function<void(const Rat&, const Rat&, const Rat&, const Rat&, int)> segment =
      [&](const Rat& a, const Rat& b, const Rat& ga, const Rat& gb, int depth) {
        const Rat mid = (a + b) / 2;
        if (2 * g(mid) == ga + gb) {
          const Rat slope = (gb - ga) / (b - a);
          pp.coeff.push_back({ga - slope * a, slope});
          pp.breaks.push_back(b);
          return;
        }
        if (depth >= 40) throw DomainError("internal: sublevel support not affine on interval");
        const Rat gm = g(mid);
        segment(a, mid, ga, gm, depth + 1);
        segment(mid, b, gm, gb, depth + 1);
      };
  for (std::size_t i = 0; i + 1 < levels.size(); ++i)
    segment(levels[i], levels[i + 1], g(levels[i]), g(levels[i + 1]), 0);

  Scalar total = exp_poly_integral(pp, {{Rat(1), 0, Rat(-1)}}, prec);
  return scalar_add(total, scalar_exp_form(support(u.dom, x), -levels.back()), prec);
}

namespace {

// q(t) = p(t - b).
std::vector<Rat> poly_shift(const std::vector<Rat>& p, const Rat& b) {
  std::vector<Rat> q(p.size(), Rat(0));
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] == 0) continue;
    Rat binom(1), bpow(1);
    for (std::size_t kk = 0; kk <= j; ++kk) {
      const std::size_t k = j - kk;
      q[k] += p[j] * binom * bpow;
      bpow *= -b;
      binom = binom * Rat(static_cast<long>(k)) / Rat(static_cast<long>(j - k + 1));
    }
  }
  return q;
}

}  // namespace

Scalar mussnig_form(const PLConvexS& u, const ExpPolyDensity& eta0, const ExpPolyDensity& eta1,
                    mpfr_prec_t prec) {
  Scalar total = density_eval(eta0, u.min_value(), prec);
  for (const auto& cell : u.cells) {
    const Polytope cp = hull(u.n, cell.simplex);
    bool constant = true;
    const Rat v0 = dot(cell.a, cell.simplex[0]);
    for (const auto& w : cell.simplex)
      if (dot(cell.a, w) != v0) {
        constant = false;
        break;
      }
    if (constant) {
      total = scalar_add(
          total, scalar_mul_rat(density_eval(eta1, v0 + cell.b, prec), measures(cp).vn), prec);
      continue;
    }
    PiecewisePoly sp = shadow_profile(cp, cell.a);
    // Shift so eta1 sees the full affine value a . w + b.
    for (auto& br : sp.breaks) br += cell.b;
    for (auto& c : sp.coeff) c = poly_shift(c, cell.b);
    total = scalar_add(total, exp_poly_integral(sp, eta1, prec), prec);
  }
  return total;
}

Scalar li_representation(const ZetaSpec& z, const ExpPolyDensity& eta, const Polytope& p,
                         const Vec& x, mpfr_prec_t prec) {
  if (p.empty()) throw DomainError("empty polytope");
  if (static_cast<int>(x.size()) != p.n) throw InputError("dimension mismatch");
  if (!contains(p, vzero(p.n)))
    throw InputError("support-number representation needs 0 in the polytope");
  if (z.exponential &&
      (z.const_pos + z.const_neg != 0 || z.amp_pos + z.const_pos != z.amp_neg + z.const_neg))
    throw InputError("exponential zeta needs cancelling constants and matching branches at 0");

  const Rat hp = support(p, x);         // h_P(x) >= 0
  const Rat hm = -support(p, vneg(x));  // -h_{-P}(x) <= 0
  Scalar total;
  if (!z.exponential) {
    total = scalar_exact(2 * z.zeta0 + z.slope_pos * hp + z.slope_neg * hm);
  } else {
    // const_pos + const_neg cancels exactly.
    total = scalar_add(scalar_exp_form(z.amp_pos, z.sigma * hp),
                       scalar_exp_form(z.amp_neg, z.sigma * hm), prec);
  }
  return scalar_add(total, exp_poly_integral(shadow_profile(p, x), eta, prec), prec);
}

}  // namespace convexval
