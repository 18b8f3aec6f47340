#include "core/piecewise_poly.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace convexval {

Rat poly_eval(const std::vector<Rat>& p, const Rat& t) {
  Rat v(0);
  for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
  return v;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& p, const std::vector<Rat>& q) {
  if (p.empty() || q.empty()) return {};
  std::vector<Rat> r(p.size() + q.size() - 1, Rat(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

std::vector<Rat> poly_derivative(const std::vector<Rat>& p) {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * p[i]);
  return d;
}

Rat PiecewisePoly::eval(const Rat& t) const {
  if (trivial() || t < breaks.front() || t > breaks.back()) return Rat(0);
  std::size_t k = 0;
  while (k + 2 < breaks.size() && t > breaks[k + 1]) ++k;
  return poly_eval(coeff[k], t);
}

Rat integrate_times_power(const PiecewisePoly& pp, int k) {
  Rat total(0);
  for (std::size_t i = 0; i < pp.coeff.size(); ++i) {
    // integral over [b_i, b_{i+1}] of sum_j c_j t^{j+k}
    for (std::size_t j = 0; j < pp.coeff[i].size(); ++j) {
      const long e = static_cast<long>(j) + k + 1;
      Rat hi = pp.breaks[i + 1], lo = pp.breaks[i];
      Rat hp(1), lp(1);
      for (long r = 0; r < e; ++r) {
        hp *= hi;
        lp *= lo;
      }
      total += pp.coeff[i][j] * (hp - lp) / e;
    }
  }
  return total;
}

namespace {

// Exact interpolation through distinct nodes; ascending-power coefficients.
std::vector<Rat> lagrange(const std::vector<std::pair<Rat, Rat>>& pts) {
  std::vector<Rat> acc{Rat(0)};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Rat> term{Rat(1)};
    Rat denom(1);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      term = poly_mul(term, {-pts[j].first, Rat(1)});
      denom *= pts[i].first - pts[j].first;
    }
    const Rat w = pts[i].second / denom;
    if (acc.size() < term.size()) acc.resize(term.size(), Rat(0));
    for (std::size_t k = 0; k < term.size(); ++k) acc[k] += w * term[k];
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  return acc;
}

}  // namespace

PiecewisePoly shadow_profile(const Polytope& p, const Vec& x) {
  if (p.empty()) throw DomainError("shadow profile of empty polytope");
  std::set<Rat> bset;
  for (const auto& v : p.vertices) bset.insert(dot(x, v));
  PiecewisePoly pp;
  pp.breaks.assign(bset.begin(), bset.end());
  if (p.dim < p.n || pp.breaks.size() == 1) {
    pp.breaks.resize(1);
    return pp;
  }

  const int n = p.n;
  // Sweep volume G(t) = Vol(P cap {x.y <= t}) is a degree-<=n polynomial per
  // interval; n interior samples plus the exact left anchor pin it down.
  Rat left(0);
  std::vector<std::vector<Rat>> gpolys;
  for (std::size_t k = 0; k + 1 < pp.breaks.size(); ++k) {
    const Rat a = pp.breaks[k], b = pp.breaks[k + 1];
    std::vector<std::pair<Rat, Rat>> samples{{a, left}};
    for (int i = 1; i <= n; ++i) {
      const Rat t = a + rat(i, n + 1) * (b - a);
      samples.push_back({t, measures(clip(p, x, t)).vn});
    }
    std::vector<Rat> g = lagrange(samples);
    left = poly_eval(g, b);
    gpolys.push_back(std::move(g));
  }
  assert(left == measures(p).vn);

  for (const auto& g : gpolys) {
    auto d = poly_derivative(g);
    if (d.empty()) d.push_back(Rat(0));
    pp.coeff.push_back(std::move(d));
  }
  for (std::size_t k = 1; k + 1 < pp.breaks.size(); ++k) {
    if (poly_eval(pp.coeff[k - 1], pp.breaks[k]) != poly_eval(pp.coeff[k], pp.breaks[k]))
      throw DomainError("internal: discontinuous section profile");
  }
  return pp;
}

}  // namespace convexval
