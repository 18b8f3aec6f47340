#include "fn/fixtures.hpp"

#include <cassert>

#include "core/unimodular.hpp"

namespace convexval {

Polytope cube01(int n) {
  std::vector<Vec> pts;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    Vec v = vzero(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) v[static_cast<std::size_t>(i)] = 1;
    pts.push_back(std::move(v));
  }
  return hull(n, pts);
}

Polytope centered_cube(int n, const Rat& r) {
  std::vector<Vec> pts;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    Vec v(static_cast<std::size_t>(n), -r);
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) v[static_cast<std::size_t>(i)] = r;
    pts.push_back(std::move(v));
  }
  return hull(n, pts);
}

Polytope simplex0(int n) {
  std::vector<Vec> pts{vzero(n)};
  for (int i = 0; i < n; ++i) {
    Vec v = vzero(n);
    v[static_cast<std::size_t>(i)] = 1;
    pts.push_back(std::move(v));
  }
  return hull(n, pts);
}

Polytope cross_polytope(int n, const Rat& r) {
  std::vector<Vec> pts;
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      Vec v = vzero(n);
      v[static_cast<std::size_t>(i)] = s * r;
      pts.push_back(std::move(v));
    }
  return hull(n, pts);
}

Polytope random_polytope(Rng& rng, int n, int extra) {
  // Affinely independent seed keeps the hull full-dimensional.
  std::vector<Vec> pts{vzero(n)};
  for (int i = 0; i < n; ++i) {
    Vec v = vzero(n);
    v[static_cast<std::size_t>(i)] = rng.rational(1, 2, 4);
    pts.push_back(std::move(v));
  }
  for (int k = 0; k < extra; ++k) pts.push_back(rng.rational_vec(n, -2, 2, 4));
  Polytope p = hull(n, pts);
  if (n >= 2 && rng.below(2) == 1) p = apply_map(p, random_unimodular(rng, n, 2, 1));
  return p;
}

Polytope random_polytope_origin(Rng& rng, int n, int extra) {
  Polytope p = random_polytope(rng, n, extra);
  const Measures m = measures(p);
  return translate(p, vneg(vscale(1 / m.vn, m.moment)));
}

PLConvexS indicator_fn(const Polytope& p) {
  std::vector<std::pair<Vec, Rat>> pts;
  for (const auto& v : p.vertices) pts.push_back({v, Rat(0)});
  return make_plconvexs(p.n, std::move(pts));
}

PLConvexS cone_fn(const Polytope& p, const Vec& y, const Rat& t) {
  std::vector<std::pair<Vec, Rat>> pts;
  for (const auto& v : p.vertices) pts.push_back({v, dot(y, v) + t});
  return make_plconvexs(p.n, std::move(pts));
}

PLConvexS random_plconvexs(Rng& rng, int n) {
  const Rat q = rat(1 + static_cast<long>(rng.below(3)), 2);  // curvature 1/2, 1 or 3/2
  const Vec l = rng.rational_vec(n, -1, 1, 2);
  std::vector<std::pair<Vec, Rat>> pts;
  const auto lift = [&](Vec x) {
    const Rat t = q * dot(x, x) + dot(l, x) + rng.rational(-1, 1, 8);
    pts.push_back({std::move(x), t});
  };
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    Vec v(static_cast<std::size_t>(n), Rat(-1));
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) v[static_cast<std::size_t>(i)] = 1;
    lift(std::move(v));
  }
  for (int k = 0; k < n + 2; ++k) lift(rng.rational_vec(n, -1, 1, 4));
  return make_plconvexs(n, std::move(pts));
}

PLConvexS normalize_min_zero(const PLConvexS& u) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < u.graph.size(); ++i)
    if (u.graph[i].second < u.graph[best].second) best = i;
  return add_const(translate(u, vneg(u.graph[best].first)), -u.graph[best].second);
}

PLConvexF random_plconvexf(Rng& rng, int n) {
  const int count = n + 2 + static_cast<int>(rng.below(4));
  std::vector<std::pair<Vec, Rat>> pieces;
  for (int k = 0; k < count; ++k)
    pieces.push_back({rng.rational_vec(n, -2, 2, 2), rng.rational(-1, 1, 4)});
  return make_plconvexf(n, std::move(pieces));
}

LogConcaveFn random_logconcave_s(Rng& rng, int n) { return make_logconcave_s(random_plconvexs(rng, n)); }

LogConcaveFn random_logconcave_f(Rng& rng, int n) { return make_logconcave_f(random_plconvexf(rng, n)); }

namespace {

// Direction along which the set has positive extent, plus an interior threshold.
std::pair<Vec, Rat> interior_cut(Rng& rng, const Polytope& dom) {
  for (;;) {
    const Vec a = random_nonzero(rng, dom.n, -2, 2, 2);
    const Rat hi = support(dom, a);
    const Rat lo = -support(dom, vneg(a));
    if (lo == hi) continue;
    const Rat f = rat(3 + static_cast<long>(rng.below(3)), 8);  // 3/8, 1/2 or 5/8
    return {a, lo + (hi - lo) * f};
  }
}

}  // namespace

SplitPairS split_pair_s(Rng& rng, const PLConvexS& u) {
  const auto [a, t] = interior_cut(rng, u.dom);
  return {restrict_halfspace(u, a, t), restrict_halfspace(u, vneg(a), -t), u};
}

SplitTriple split_polytope(Rng& rng, const Polytope& p) {
  const auto [a, t] = interior_cut(rng, p);
  Polytope p1 = clip(p, a, t);
  Polytope p2 = clip(p, vneg(a), -t);
  Polytope slice = clip(p1, vneg(a), -t);
  return {p, std::move(p1), std::move(p2), std::move(slice)};
}

PLConvexS staircase_fn(int n, int m) {
  assert(m >= 1);
  std::vector<std::pair<Vec, Rat>> pts;
  const std::uint64_t corners = n >= 2 ? (1ull << (n - 1)) : 1;
  for (int i = 0; i <= m; ++i) {
    const Rat t = rat(static_cast<long>(i) * (i + 1), 2);
    for (std::uint64_t mask = 0; mask < corners; ++mask) {
      Vec v = vzero(n);
      v[0] = i;
      for (int j = 1; j < n; ++j)
        if (mask & (1ull << (j - 1))) v[static_cast<std::size_t>(j)] = 1;
      pts.push_back({std::move(v), t});
    }
  }
  return make_plconvexs(n, std::move(pts));
}

std::vector<Vec> probe_grid(Rng& rng, int n) {
  std::vector<Vec> out;
  std::vector<Rat> axis;
  if (n <= 2) {
    for (int k = -12; k <= 12; ++k) axis.push_back(rat(k, 4));
  } else if (n == 3) {
    for (int k = -3; k <= 3; ++k) axis.push_back(Rat(k));
  } else {
    for (int k = -2; k <= 2; ++k) axis.push_back(rat(3 * static_cast<long>(k), 2));
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  for (;;) {
    Vec v;
    for (int i = 0; i < n; ++i) v.push_back(axis[idx[static_cast<std::size_t>(i)]]);
    out.push_back(std::move(v));
    int i = 0;
    while (i < n && ++idx[static_cast<std::size_t>(i)] == axis.size()) {
      idx[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
  }
  if (n >= 3)
    for (int k = 0; k < 64; ++k) out.push_back(rng.rational_vec(n, -3, 3, 4));
  return out;
}

std::vector<Vec> random_probes(Rng& rng, int n, int count, long lo, long hi, long den) {
  std::vector<Vec> out;
  for (int k = 0; k < count; ++k) out.push_back(rng.rational_vec(n, lo, hi, den));
  return out;
}

Vec random_nonzero(Rng& rng, int n, long lo, long hi, long den) {
  for (;;) {
    Vec v = rng.rational_vec(n, lo, hi, den);
    if (v != vzero(n)) return v;
  }
}

}  // namespace convexval
