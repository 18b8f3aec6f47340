#include "fn/convex_fn.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>

namespace convexval {

namespace {

Vec lift_point(const Vec& x, const Rat& t) {
  Vec p = x;
  p.push_back(t);
  return p;
}

std::pair<Vec, Rat> split_point(const Vec& p) {
  Vec x(p.begin(), p.end() - 1);
  return {x, p.back()};
}

// Distinct facet hyperplanes of `p` through the projected point `q`, as
// (normal, offset) in projected coordinates.
std::vector<std::pair<Vec, Rat>> incident_hyperplanes(const Polytope& p, const Vec& q) {
  std::map<std::pair<Vec, Rat>, bool> seen;
  std::vector<std::pair<Vec, Rat>> out;
  for (const auto& f : p.facets) {
    if (dot(f.normal, q) != f.offset) continue;
    Vec w = primitive_integer_direction(f.normal);
    std::size_t k = 0;
    while (f.normal[k] == 0) ++k;
    auto key = std::make_pair(w, Rat(f.offset * (w[k] / f.normal[k])));
    if (seen.emplace(key, true).second) out.push_back({f.normal, f.offset});
  }
  return out;
}

// Sum of outward facet normals at a vertex, scattered to ambient coordinates.
// Lies in the relative interior of the normal cone, so it exposes the vertex
// strictly against every other point of the polytope.
Vec outward_normal_sum(const Polytope& p, const Vec& vertex) {
  const Vec q = p.project(vertex);
  Vec s = vzero(p.dim);
  for (const auto& [normal, offset] : incident_hyperplanes(p, q)) s = vadd(s, normal);
  return p.lift(s);
}

}  // namespace

Rat PLConvexS::min_value() const {
  Rat m = graph[0].second;
  for (const auto& g : graph) m = std::min(m, g.second);
  return m;
}

Rat PLConvexS::max_value() const {
  Rat m = graph[0].second;
  for (const auto& g : graph) m = std::max(m, g.second);
  return m;
}

bool operator==(const PLConvexS& a, const PLConvexS& b) {
  return a.n == b.n && a.graph == b.graph;
}

bool operator==(const PLConvexF& a, const PLConvexF& b) {
  return a.n == b.n && a.pieces == b.pieces;
}

PLConvexS make_plconvexs(int n, std::vector<std::pair<Vec, Rat>> points) {
  if (n < 1) throw InputError("function dimension must be positive");
  if (points.empty()) throw InputError("function needs at least one graph point");
  for (const auto& [x, t] : points)
    if (static_cast<int>(x.size()) != n) throw InputError("graph point dimension mismatch");

  std::sort(points.begin(), points.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return lex_less(a.first, b.first);
              return a.second < b.second;
            });
  std::vector<std::pair<Vec, Rat>> grouped;
  for (auto& p : points)
    if (grouped.empty() || grouped.back().first != p.first) grouped.push_back(std::move(p));

  PLConvexS u;
  u.n = n;
  std::vector<Vec> xs, lifted;
  for (const auto& [x, t] : grouped) {
    xs.push_back(x);
    lifted.push_back(lift_point(x, t));
  }
  u.dom = hull(n, xs);
  const Polytope epi = hull(n + 1, lifted);

  if (epi.dim == u.dom.dim) {
    // t is an affine function of x on aff(dom): single piece, graph = lifted dom vertices.
    u.affine_graph = true;
    const int d = u.dom.dim;
    std::vector<int> basis;
    {
      // Greedy affinely independent subset of the x's.
      Mat rows;
      std::vector<int> pivots;
      basis.push_back(0);
      for (std::size_t i = 1; i < xs.size() && static_cast<int>(basis.size()) < d + 1; ++i) {
        Vec v = vsub(xs[i], xs[0]);
        Mat test = rows;
        test.push_back(v);
        if (mat_rank(test) > static_cast<int>(rows.size())) {
          rows.push_back(v);
          basis.push_back(static_cast<int>(i));
        }
      }
    }
    assert(static_cast<int>(basis.size()) == d + 1);
    Mat sys;
    Vec rhs;
    for (int ix : basis) {
      Vec row = u.dom.project(xs[static_cast<std::size_t>(ix)]);
      row.push_back(Rat(1));
      sys.push_back(std::move(row));
      rhs.push_back(grouped[static_cast<std::size_t>(ix)].second);
    }
    const auto sol = solve_linear(sys, rhs);
    assert(sol.has_value());
    Vec alpha(sol->begin(), sol->end() - 1);
    const Rat beta = sol->back();
    const Vec a = u.dom.lift(alpha);
    u.pieces.push_back({a, beta});
    for (const auto& v : u.dom.vertices) u.graph.push_back({v, dot(a, v) + beta});
    if (u.dom.dim == n) {
      for (const auto& sx : u.dom.triangulation) {
        PLConvexS::Cell cell;
        for (int ix : sx) cell.simplex.push_back(u.dom.vertices[static_cast<std::size_t>(ix)]);
        cell.a = a;
        cell.b = beta;
        u.cells.push_back(cell);
      }
    }
  } else {
    assert(epi.dim == u.dom.dim + 1);
    // The t-coordinate is a projection pivot, so lower facets are those whose
    // projected normal has negative last component.
    assert(epi.proj.back() == n);
    std::set<int> graph_idx;
    std::map<std::pair<Vec, Rat>, std::vector<int>> lower_groups;
    for (const auto& f : epi.facets) {
      if (f.normal.back() >= 0) continue;
      graph_idx.insert(f.corners.begin(), f.corners.end());
      Vec w = primitive_integer_direction(f.normal);
      std::size_t k = 0;
      while (f.normal[k] == 0) ++k;
      lower_groups[{w, f.offset * (w[k] / f.normal[k])}] = f.corners;
    }
    for (int ix : graph_idx) u.graph.push_back(split_point(epi.vertices[static_cast<std::size_t>(ix)]));

    // Piece from a lower hyperplane g . (x_proj, t) == o with g_t < 0:
    // t = (o - gx . x_proj) / g_t on its cell.
    std::vector<int> xproj(epi.proj.begin(), epi.proj.end() - 1);
    auto plane_to_piece = [&](const Vec& normal, const Rat& offset) {
      const Rat gt = normal.back();
      Vec a = vzero(n);
      for (std::size_t i = 0; i + 1 < normal.size(); ++i)
        a[static_cast<std::size_t>(xproj[i])] = -normal[i] / gt;
      return std::make_pair(a, Rat(offset / gt));
    };
    std::set<std::pair<Vec, Rat>> piece_set;
    for (const auto& [key, corners] : lower_groups) {
      Vec nrm = key.first;
      // The canonical key may have flipped sign; recover a g_t < 0 representative.
      Rat off = key.second;
      if (nrm.back() > 0) {
        nrm = vneg(nrm);
        off = -off;
      }
      assert(nrm.back() < 0);
      piece_set.insert(plane_to_piece(nrm, off));
    }
    u.pieces.assign(piece_set.begin(), piece_set.end());

    if (u.dom.dim == n) {
      for (const auto& f : epi.facets) {
        if (f.normal.back() >= 0) continue;
        PLConvexS::Cell cell;
        for (int ix : f.corners)
          cell.simplex.push_back(split_point(epi.vertices[static_cast<std::size_t>(ix)]).first);
        auto [a, b] = plane_to_piece(f.normal, f.offset);
        cell.a = std::move(a);
        cell.b = std::move(b);
        u.cells.push_back(std::move(cell));
      }
    }
  }

  std::sort(u.graph.begin(), u.graph.end(), [](const auto& a, const auto& b) {
    return lex_less(a.first, b.first);
  });
  std::sort(u.pieces.begin(), u.pieces.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return lex_less(a.first, b.first);
    return a.second < b.second;
  });
  return u;
}

std::optional<Rat> eval(const PLConvexS& u, const Vec& x) {
  if (static_cast<int>(x.size()) != u.n) throw InputError("eval: dimension mismatch");
  if (!contains(u.dom, x)) return std::nullopt;
  Rat best = dot(u.pieces[0].first, x) + u.pieces[0].second;
  for (std::size_t i = 1; i < u.pieces.size(); ++i)
    best = std::max<Rat>(best, dot(u.pieces[i].first, x) + u.pieces[i].second);
  return best;
}

PLConvexF make_plconvexf(int n, std::vector<std::pair<Vec, Rat>> pieces) {
  if (n < 1) throw InputError("function dimension must be positive");
  if (pieces.empty()) throw InputError("max-affine function needs at least one piece");
  for (const auto& [a, b] : pieces)
    if (static_cast<int>(a.size()) != n) throw InputError("piece dimension mismatch");

  // Dual graph: piece (a, b) <-> lifted point (a, -b). Essential pieces are the
  // lower-envelope vertices of the dual point set.
  std::vector<std::pair<Vec, Rat>> dual;
  dual.reserve(pieces.size());
  for (const auto& [a, b] : pieces) dual.push_back({a, -b});
  const PLConvexS d = make_plconvexs(n, std::move(dual));

  PLConvexF v;
  v.n = n;
  for (const auto& [a, mt] : d.graph) v.pieces.push_back({a, -mt});

  // Witness construction: a point where each kept piece is the strict unique
  // maximizer. The incident lower-facet slopes of the dual epigraph at
  // (aj, -bj) are the finite vertices of this piece's active region; their
  // average separates the piece from every piece whose dual point shares a
  // face of the dual domain with aj. Pieces off that face are beaten by
  // pushing along the outward normal cone of the face, which is zero exactly
  // when aj is interior (bounded active region, average already strict).
  const bool single = v.pieces.size() == 1;
  Mat hull_basis;  // independent slope differences; empty while unset
  if (!single) {
    for (std::size_t j = 1; j < v.pieces.size(); ++j) {
      Mat trial = hull_basis;
      trial.push_back(vsub(v.pieces[j].first, v.pieces[0].first));
      if (mat_rank(trial) > static_cast<int>(hull_basis.size())) hull_basis = std::move(trial);
    }
  }
  if (single) {
    v.witnesses.push_back(vzero(n));
  } else if (static_cast<int>(hull_basis.size()) < n) {
    // Coplanar slopes (conjugates of functions with lower-dimensional
    // domains): witnesses only matter along the affine hull of the slopes.
    // Re-coordinatize by the difference basis — an affine bijection of that
    // hull preserving offsets and maximality — find witnesses there, and map
    // them back through the basis.
    const int r = static_cast<int>(hull_basis.size());
    auto project = [&](const Vec& a) {
      Vec z(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i)
        z[static_cast<std::size_t>(i)] = dot(a, hull_basis[static_cast<std::size_t>(i)]);
      return z;
    };
    std::vector<std::pair<Vec, Rat>> proj;
    proj.reserve(v.pieces.size());
    for (const auto& [a, b] : v.pieces) proj.push_back({project(a), b});
    const PLConvexF pv = make_plconvexf(r, std::move(proj));
    for (const auto& [a, b] : v.pieces) {
      const Vec z = project(a);
      bool found = false;
      for (std::size_t q = 0; q < pv.pieces.size(); ++q) {
        if (pv.pieces[q].first != z) continue;
        Vec x = vzero(n);
        for (int i = 0; i < r; ++i)
          x = vadd(x, vscale(pv.witnesses[q][static_cast<std::size_t>(i)],
                             hull_basis[static_cast<std::size_t>(i)]));
        v.witnesses.push_back(std::move(x));
        found = true;
        break;
      }
      if (!found) throw DomainError("internal: projected piece lost");
    }
  } else {
    for (const auto& [aj, bj] : v.pieces) {
      Vec wbar = vzero(n);
      int hit = 0;
      for (const auto& [pa, pb] : d.pieces) {
        if (dot(pa, aj) + pb != -bj) continue;  // plane t = pa . x + pb through (aj, -bj)
        wbar = vadd(wbar, pa);
        ++hit;
      }
      assert(hit > 0);
      wbar = vscale(Rat(1, hit), wbar);
      const Vec dir = outward_normal_sum(d.dom, aj);
      if (dir != vzero(n)) {
        // Smallest shift making aj strictly beat every piece off its face.
        Rat k(0);
        for (const auto& [ak, bk] : v.pieces) {
          if (ak == aj) continue;
          const Rat B = dot(vsub(aj, ak), dir);
          if (B == 0) continue;  // ak on the same face: wbar already separates
          assert(B > 0);
          const Rat A = dot(vsub(aj, ak), wbar) + (bj - bk);
          k = std::max<Rat>(k, -A / B);
        }
        wbar = vadd(wbar, vscale(k + 1, dir));
      }
      v.witnesses.push_back(wbar);
    }
  }

  // Invariant check: each witness selects its piece strictly.
  for (std::size_t j = 0; j < v.pieces.size(); ++j) {
    const Rat val = dot(v.pieces[j].first, v.witnesses[j]) + v.pieces[j].second;
    for (std::size_t i = 0; i < v.pieces.size(); ++i) {
      if (i == j) continue;
      const Rat o = dot(v.pieces[i].first, v.witnesses[j]) + v.pieces[i].second;
      assert(o < val);
      if (o >= val) {
        if (std::getenv("CVX_DEBUG_WITNESS")) {
          std::fprintf(stderr, "[witness-fail] n=%d pieces=%zu j=%zu i=%zu\n", n,
                       v.pieces.size(), j, i);
          for (std::size_t p = 0; p < v.pieces.size(); ++p) {
            std::fprintf(stderr, "  piece %zu: a=(", p);
            for (const auto& c : v.pieces[p].first)
              std::fprintf(stderr, "%s ", c.get_str().c_str());
            std::fprintf(stderr, ") b=%s w=(", v.pieces[p].second.get_str().c_str());
            for (const auto& c : v.witnesses[p])
              std::fprintf(stderr, "%s ", c.get_str().c_str());
            std::fprintf(stderr, ")\n");
          }
        }
        throw DomainError("internal: non-strict piece witness");
      }
    }
  }
  return v;
}

Rat eval(const PLConvexF& v, const Vec& x) {
  if (static_cast<int>(x.size()) != v.n) throw InputError("eval: dimension mismatch");
  Rat best = dot(v.pieces[0].first, x) + v.pieces[0].second;
  for (std::size_t i = 1; i < v.pieces.size(); ++i)
    best = std::max<Rat>(best, dot(v.pieces[i].first, x) + v.pieces[i].second);
  return best;
}

LogConcaveFn make_logconcave_s(PLConvexS u) {
  LogConcaveFn f;
  f.kind = 'S';
  f.s = std::move(u);
  return f;
}

LogConcaveFn make_logconcave_f(PLConvexF v) {
  LogConcaveFn f;
  f.kind = 'F';
  f.f = std::move(v);
  return f;
}

namespace {

PLConvexS rebuild_s(int n, std::vector<std::pair<Vec, Rat>> pts) {
  return make_plconvexs(n, std::move(pts));
}

PLConvexF rebuild_f(int n, std::vector<std::pair<Vec, Rat>> pieces) {
  return make_plconvexf(n, std::move(pieces));
}

}  // namespace

PLConvexS translate(const PLConvexS& u, const Vec& y) {
  std::vector<std::pair<Vec, Rat>> pts;
  for (const auto& [x, t] : u.graph) pts.push_back({vadd(x, y), t});
  return rebuild_s(u.n, std::move(pts));
}

PLConvexS add_linear(const PLConvexS& u, const Vec& y) {
  std::vector<std::pair<Vec, Rat>> pts;
  for (const auto& [x, t] : u.graph) pts.push_back({x, t + dot(x, y)});
  return rebuild_s(u.n, std::move(pts));
}

PLConvexS add_const(const PLConvexS& u, const Rat& c) {
  std::vector<std::pair<Vec, Rat>> pts;
  for (const auto& [x, t] : u.graph) pts.push_back({x, t + c});
  return rebuild_s(u.n, std::move(pts));
}

PLConvexS scale_arg(const PLConvexS& u, const Rat& lambda) {
  if (lambda == 0) throw InputError("scale_arg: lambda must be nonzero");
  std::vector<std::pair<Vec, Rat>> pts;
  for (const auto& [x, t] : u.graph) pts.push_back({vscale(1 / lambda, x), t});
  return rebuild_s(u.n, std::move(pts));
}

PLConvexS scale_val(const PLConvexS& u, const Rat& lambda) {
  if (lambda <= 0) throw InputError("scale_val: lambda must be positive");
  std::vector<std::pair<Vec, Rat>> pts;
  for (const auto& [x, t] : u.graph) pts.push_back({x, lambda * t});
  return rebuild_s(u.n, std::move(pts));
}

PLConvexS compose_inverse(const PLConvexS& u, const Mat& phi) {
  std::vector<std::pair<Vec, Rat>> pts;
  for (const auto& [x, t] : u.graph) pts.push_back({mat_vec(phi, x), t});
  return rebuild_s(u.n, std::move(pts));
}

PLConvexF translate(const PLConvexF& v, const Vec& y) {
  std::vector<std::pair<Vec, Rat>> ps;
  for (const auto& [a, b] : v.pieces) ps.push_back({a, b - dot(a, y)});
  return rebuild_f(v.n, std::move(ps));
}

PLConvexF add_linear(const PLConvexF& v, const Vec& y) {
  std::vector<std::pair<Vec, Rat>> ps;
  for (const auto& [a, b] : v.pieces) ps.push_back({vadd(a, y), b});
  return rebuild_f(v.n, std::move(ps));
}

PLConvexF add_const(const PLConvexF& v, const Rat& c) {
  std::vector<std::pair<Vec, Rat>> ps;
  for (const auto& [a, b] : v.pieces) ps.push_back({a, b + c});
  return rebuild_f(v.n, std::move(ps));
}

PLConvexF scale_arg(const PLConvexF& v, const Rat& lambda) {
  if (lambda == 0) throw InputError("scale_arg: lambda must be nonzero");
  std::vector<std::pair<Vec, Rat>> ps;
  for (const auto& [a, b] : v.pieces) ps.push_back({vscale(lambda, a), b});
  return rebuild_f(v.n, std::move(ps));
}

PLConvexF scale_val(const PLConvexF& v, const Rat& lambda) {
  if (lambda <= 0) throw InputError("scale_val: lambda must be positive");
  std::vector<std::pair<Vec, Rat>> ps;
  for (const auto& [a, b] : v.pieces) ps.push_back({vscale(lambda, a), lambda * b});
  return rebuild_f(v.n, std::move(ps));
}

PLConvexF compose_inverse(const PLConvexF& v, const Mat& phi) {
  const auto inv = mat_inverse(phi);
  if (!inv) throw InputError("compose_inverse: singular map");
  const Mat it = mat_transpose(*inv);
  std::vector<std::pair<Vec, Rat>> ps;
  for (const auto& [a, b] : v.pieces) ps.push_back({mat_vec(it, a), b});
  return rebuild_f(v.n, std::move(ps));
}

PLConvexS inf_convolution(const PLConvexS& u, const PLConvexS& v) {
  if (u.n != v.n) throw InputError("inf_convolution: dimension mismatch");
  std::vector<std::pair<Vec, Rat>> pts;
  for (const auto& [x1, t1] : u.graph)
    for (const auto& [x2, t2] : v.graph) pts.push_back({vadd(x1, x2), t1 + t2});
  return rebuild_s(u.n, std::move(pts));
}

PLConvexF conjugate(const PLConvexS& u) {
  std::vector<std::pair<Vec, Rat>> ps;
  for (const auto& [x, t] : u.graph) ps.push_back({x, -t});
  return make_plconvexf(u.n, std::move(ps));
}

PLConvexS conjugate(const PLConvexF& v) {
  std::vector<std::pair<Vec, Rat>> pts;
  for (const auto& [a, b] : v.pieces) pts.push_back({a, -b});
  return make_plconvexs(v.n, std::move(pts));
}

PLConvexF compose_transpose(const PLConvexF& v, const Mat& phi) {
  std::vector<std::pair<Vec, Rat>> ps;
  for (const auto& [a, b] : v.pieces) ps.push_back({mat_vec(phi, a), b});
  return rebuild_f(v.n, std::move(ps));
}

PLConvexF add(const PLConvexF& a, const PLConvexF& b) {
  if (a.n != b.n) throw InputError("add: dimension mismatch");
  std::vector<std::pair<Vec, Rat>> ps;
  for (const auto& [ai, bi] : a.pieces)
    for (const auto& [aj, bj] : b.pieces) ps.push_back({vadd(ai, aj), bi + bj});
  return rebuild_f(a.n, std::move(ps));
}

namespace {

// Truncated epigraph: conv(graph points, dom vertices lifted to level cap).
Polytope truncated_epi(const PLConvexS& u, const Rat& cap) {
  std::vector<Vec> pts;
  for (const auto& [x, t] : u.graph) pts.push_back(lift_point(x, t));
  for (const auto& v : u.dom.vertices) pts.push_back(lift_point(v, cap));
  return hull(u.n + 1, pts);
}

// Intersects `p` with the feasible region of `q` (equalities and facets of q,
// lifted back to ambient coordinates).
Polytope intersect_regions(Polytope p, const Polytope& q) {
  for (const auto& [w, o] : q.equalities) {
    p = clip(p, w, o);
    if (p.empty()) return p;
    p = clip(p, vneg(w), -o);
    if (p.empty()) return p;
  }
  for (const auto& f : q.facets) {
    p = clip(p, q.lift(f.normal), f.offset);
    if (p.empty()) return p;
  }
  return p;
}

}  // namespace

PLConvexS restrict_halfspace(const PLConvexS& u, const Vec& a, const Rat& t) {
  if (static_cast<int>(a.size()) != u.n) throw InputError("restrict: dimension mismatch");
  Polytope e = truncated_epi(u, u.max_value() + 1);
  Vec lifted = a;
  lifted.push_back(Rat(0));
  e = clip(e, lifted, t);
  if (e.empty()) throw DomainError("restrict: halfspace misses the domain");
  std::vector<std::pair<Vec, Rat>> pts;
  for (const auto& w : e.vertices) pts.push_back(split_point(w));
  return make_plconvexs(u.n, std::move(pts));
}

Polytope sublevel(const PLConvexS& u, const Rat& s) {
  if (s < u.min_value()) return empty_polytope(u.n);
  const Rat mx = u.max_value();
  if (s >= mx) {
    return u.dom;
  }
  Polytope e = truncated_epi(u, mx + 1);
  Vec level = vzero(u.n + 1);
  level[static_cast<std::size_t>(u.n)] = 1;
  e = clip(e, level, s);
  assert(!e.empty());
  std::vector<Vec> xs;
  for (const auto& v : e.vertices) xs.push_back(split_point(v).first);
  return hull(u.n, xs);
}

JoinMeetS join_meet(const PLConvexS& u, const PLConvexS& v) {
  if (u.n != v.n) throw InputError("join_meet: dimension mismatch");
  JoinMeetS out{std::nullopt, PLConvexS{}, true};

  std::vector<std::pair<Vec, Rat>> all = u.graph;
  all.insert(all.end(), v.graph.begin(), v.graph.end());
  out.meet = make_plconvexs(u.n, std::move(all));

  const Rat cap = std::max(u.max_value(), v.max_value()) + 1;
  Polytope eu = truncated_epi(u, cap);
  const Polytope ev = truncated_epi(v, cap);
  const Polytope inter = intersect_regions(std::move(eu), ev);
  if (!inter.empty()) {
    std::vector<std::pair<Vec, Rat>> pts;
    for (const auto& w : inter.vertices) pts.push_back(split_point(w));
    out.join = make_plconvexs(u.n, std::move(pts));
  }

  // min(u, v) equals the meet iff min is itself convex; certify on an exact
  // probe set: all graph x's plus pairwise midpoints across the two functions.
  std::vector<Vec> probes;
  for (const auto& [x, t] : u.graph) probes.push_back(x);
  for (const auto& [x, t] : v.graph) probes.push_back(x);
  for (const auto& [xu, tu] : u.graph)
    for (const auto& [xv, tv] : v.graph)
      probes.push_back(vscale(Rat(1, 2), vadd(xu, xv)));
  for (const auto& p : probes) {
    const auto a = eval(u, p), b = eval(v, p);
    const auto m = eval(out.meet, p);
    if (!a && !b) {
      if (m) {
        out.min_is_convex = false;
        break;
      }
      continue;
    }
    Rat mn = a && b ? std::min(*a, *b) : (a ? *a : *b);
    assert(m && *m <= mn);
    if (!m || *m != mn) {
      out.min_is_convex = false;
      break;
    }
  }
  return out;
}

JoinMeetF join_meet(const PLConvexF& u, const PLConvexF& v) {
  if (u.n != v.n) throw InputError("join_meet: dimension mismatch");
  JoinMeetF out{PLConvexF{}, std::nullopt, true};

  std::vector<std::pair<Vec, Rat>> ps = u.pieces;
  ps.insert(ps.end(), v.pieces.begin(), v.pieces.end());
  out.join = make_plconvexf(u.n, std::move(ps));

  // Meet through conjugation: (u~^v~) = (u* v v*)*; absent when the conjugate
  // epigraphs miss each other (min(u, v) has no affine minorant).
  const auto dual = join_meet(conjugate(u), conjugate(v));
  if (dual.join) out.meet = conjugate(*dual.join);

  if (!out.meet) {
    out.min_is_convex = false;
    return out;
  }
  std::vector<Vec> probes = u.witnesses;
  probes.insert(probes.end(), v.witnesses.begin(), v.witnesses.end());
  probes.insert(probes.end(), out.meet->witnesses.begin(), out.meet->witnesses.end());
  for (const auto& [ai, bi] : u.pieces)
    for (const auto& [aj, bj] : v.pieces) {
      const Vec d = vsub(ai, aj);
      const Rat dd = dot(d, d);
      if (dd == 0) continue;
      probes.push_back(vscale((bj - bi) / dd, d));  // min-norm point with equal piece values
    }
  for (const auto& p : probes) {
    const Rat mn = std::min(eval(u, p), eval(v, p));
    const Rat mv = eval(*out.meet, p);
    assert(mv <= mn);
    if (mv != mn) {
      out.min_is_convex = false;
      break;
    }
  }
  return out;
}

LogConcaveFn translate(const LogConcaveFn& f, const Vec& y) {
  return f.kind == 'S' ? make_logconcave_s(translate(*f.s, y))
                       : make_logconcave_f(translate(*f.f, y));
}

LogConcaveFn mul_exp_linear(const LogConcaveFn& f, const Vec& y) {
  return f.kind == 'S' ? make_logconcave_s(add_linear(*f.s, y))
                       : make_logconcave_f(add_linear(*f.f, y));
}

LogConcaveFn mul_exp_const(const LogConcaveFn& f, const Rat& t) {
  return f.kind == 'S' ? make_logconcave_s(add_const(*f.s, t))
                       : make_logconcave_f(add_const(*f.f, t));
}

LogConcaveFn compose_inverse(const LogConcaveFn& f, const Mat& phi) {
  return f.kind == 'S' ? make_logconcave_s(compose_inverse(*f.s, phi))
                       : make_logconcave_f(compose_inverse(*f.f, phi));
}

LogConcaveFn power_pos(const LogConcaveFn& f, const Rat& lambda) {
  return f.kind == 'S' ? make_logconcave_s(scale_val(*f.s, lambda))
                       : make_logconcave_f(scale_val(*f.f, lambda));
}

}  // namespace convexval
