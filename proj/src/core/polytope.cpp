#include "core/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace convexval {

namespace {

// Incremental fully-reduced row basis for direction vectors; tracks pivot columns.
struct AffineScan {
  Mat rows;               // reduced: rows[i][pivot[i]] == 1, zero elsewhere in pivot cols
  std::vector<int> pivot;

  // Returns true (and absorbs v) when v extends the span.
  bool add(Vec v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rat f = v[static_cast<std::size_t>(pivot[r])];
      if (f != 0)
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    std::size_t pc = v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        pc = j;
        break;
      }
    if (pc == v.size()) return false;
    const Rat inv = 1 / v[pc];
    for (auto& x : v) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rat f = rows[r][pc];
      if (f != 0)
        for (std::size_t j = 0; j < v.size(); ++j) rows[r][j] -= f * v[j];
    }
    rows.push_back(std::move(v));
    pivot.push_back(static_cast<int>(pc));
    return true;
  }
};

struct BBFacet {
  Vec normal;
  Rat offset;
  std::vector<int> corners;
};

// Unique hyperplane through d affinely independent points, oriented away from c.
BBFacet make_facet(const std::vector<Vec>& q, std::vector<int> corners, const Vec& c) {
  const std::size_t d = q[0].size();
  Mat dirs;
  for (std::size_t i = 1; i < corners.size(); ++i)
    dirs.push_back(vsub(q[static_cast<std::size_t>(corners[i])],
                        q[static_cast<std::size_t>(corners[0])]));
  auto ns = nullspace(dirs.empty() ? Mat{vzero(static_cast<int>(d))} : dirs);
  assert(ns.size() == 1 && "facet corners not affinely independent");
  BBFacet f;
  f.normal = ns[0];
  f.offset = dot(f.normal, q[static_cast<std::size_t>(corners[0])]);
  const Rat side = dot(f.normal, c);
  assert(side != f.offset && "interior reference on facet hyperplane");
  if (side > f.offset) {
    f.normal = vneg(f.normal);
    f.offset = -f.offset;
  }
  std::sort(corners.begin(), corners.end());
  f.corners = std::move(corners);
  return f;
}

// Incremental convex hull over exact rationals; q spans dimension d >= 2,
// init indexes d+1 affinely independent points. Returns a simplicial facet list.
std::vector<BBFacet> beneath_beyond(const std::vector<Vec>& q, const std::vector<int>& init) {
  const std::size_t d = q[0].size();
  Vec c = vzero(static_cast<int>(d));
  for (int i : init) c = vadd(c, q[static_cast<std::size_t>(i)]);
  c = vscale(Rat(1, static_cast<long>(d) + 1), c);

  std::vector<BBFacet> facets;
  for (std::size_t skip = 0; skip < init.size(); ++skip) {
    std::vector<int> corners;
    for (std::size_t i = 0; i < init.size(); ++i)
      if (i != skip) corners.push_back(init[i]);
    facets.push_back(make_facet(q, corners, c));
  }

  std::set<int> in_init(init.begin(), init.end());
  for (int p = 0; p < static_cast<int>(q.size()); ++p) {
    if (in_init.count(p)) continue;
    const Vec& x = q[static_cast<std::size_t>(p)];
    std::vector<BBFacet> kept;
    std::vector<BBFacet> visible;
    for (auto& f : facets) {
      if (dot(f.normal, x) > f.offset)
        visible.push_back(std::move(f));
      else
        kept.push_back(std::move(f));
    }
    if (visible.empty()) {
      facets = std::move(kept);
      continue;
    }
    // Ridges incident to exactly one visible facet form the horizon.
    std::map<std::vector<int>, int> ridge_count;
    for (const auto& f : visible)
      for (std::size_t skip = 0; skip < f.corners.size(); ++skip) {
        std::vector<int> ridge;
        for (std::size_t i = 0; i < f.corners.size(); ++i)
          if (i != skip) ridge.push_back(f.corners[i]);
        ++ridge_count[ridge];
      }
    for (const auto& [ridge, cnt] : ridge_count) {
      assert(cnt <= 2);
      if (cnt != 1) continue;
      std::vector<int> corners = ridge;
      corners.push_back(p);
      kept.push_back(make_facet(q, corners, c));
    }
    facets = std::move(kept);
  }
  return facets;
}

// Canonical key identifying a facet hyperplane regardless of simplex subdivision.
std::pair<Vec, Rat> hyperplane_key(const BBFacet& f) {
  Vec w = primitive_integer_direction(f.normal);
  std::size_t k = 0;
  while (f.normal[k] == 0) ++k;
  return {w, f.offset * (w[k] / f.normal[k])};
}

std::vector<int> greedy_affine_basis(const std::vector<Vec>& pts, int want_dim) {
  AffineScan scan;
  std::vector<int> idx{0};
  for (std::size_t i = 1; i < pts.size() && static_cast<int>(scan.rows.size()) < want_dim; ++i)
    if (scan.add(vsub(pts[i], pts[0]))) idx.push_back(static_cast<int>(i));
  assert(static_cast<int>(idx.size()) == want_dim + 1);
  return idx;
}

}  // namespace

Polytope empty_polytope(int n) {
  Polytope p;
  p.n = n;
  p.dim = -1;
  return p;
}

Polytope hull(int n, const std::vector<Vec>& points) {
  if (points.empty()) throw InputError("hull of empty point list");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != n) throw InputError("hull: point dimension mismatch");

  std::vector<Vec> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope out;
  out.n = n;

  if (pts.size() == 1) {
    out.dim = 0;
    out.vertices = pts;
    for (int i = 0; i < n; ++i) {
      Vec e = vzero(n);
      e[static_cast<std::size_t>(i)] = 1;
      out.equalities.emplace_back(e, pts[0][static_cast<std::size_t>(i)]);
    }
    out.triangulation = {{0}};
    return out;
  }

  // Affine hull: dimension, projection coordinates, equalities.
  AffineScan scan;
  Mat dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vec d = vsub(pts[i], pts[0]);
    if (scan.add(d)) dirs.push_back(std::move(d));
  }
  const int d = static_cast<int>(scan.rows.size());
  out.dim = d;
  out.proj = scan.pivot;
  std::sort(out.proj.begin(), out.proj.end());
  for (const Vec& w : nullspace(dirs)) out.equalities.emplace_back(w, dot(w, pts[0]));

  auto project_all = [&](const std::vector<Vec>& src) {
    std::vector<Vec> q;
    q.reserve(src.size());
    for (const auto& p : src) q.push_back(out.project(p));
    return q;
  };

  if (d == 1) {
    std::vector<Vec> q = project_all(pts);
    std::size_t imin = 0, imax = 0;
    for (std::size_t i = 1; i < q.size(); ++i) {
      if (q[i][0] < q[imin][0]) imin = i;
      if (q[i][0] > q[imax][0]) imax = i;
    }
    std::vector<Vec> verts{pts[imin], pts[imax]};
    std::sort(verts.begin(), verts.end(), lex_less);
    out.vertices = verts;
    const Rat lo = std::min(q[imin][0], q[imax][0]), hi = std::max(q[imin][0], q[imax][0]);
    const int ilo = out.project(out.vertices[0])[0] == lo ? 0 : 1;
    out.facets.push_back({Vec{Rat(1)}, hi, {1 - ilo}});
    out.facets.push_back({Vec{Rat(-1)}, -lo, {ilo}});
    out.triangulation = {{0, 1}};
    return out;
  }

  // Beneath-beyond, then exact vertex extraction per facet hyperplane, then a
  // rebuild over true vertices so facet corners reference only extreme points.
  std::vector<Vec> cur = pts;
  std::vector<Vec> q = project_all(cur);
  std::vector<BBFacet> facets = beneath_beyond(q, greedy_affine_basis(q, d));

  std::map<std::pair<Vec, Rat>, std::set<int>> groups;
  for (const auto& f : facets)
    groups[hyperplane_key(f)].insert(f.corners.begin(), f.corners.end());
  std::set<int> keep;
  for (const auto& [key, members] : groups) {
    if (static_cast<int>(members.size()) == d) {
      keep.insert(members.begin(), members.end());
      continue;
    }
    std::vector<Vec> gp;
    std::vector<int> gidx(members.begin(), members.end());
    for (int i : gidx) gp.push_back(q[static_cast<std::size_t>(i)]);
    Polytope sub = hull(d, gp);
    std::map<Vec, int> lookup;
    for (std::size_t i = 0; i < gp.size(); ++i) lookup.emplace(gp[i], gidx[i]);
    for (const auto& v : sub.vertices) keep.insert(lookup.at(v));
  }

  if (keep.size() < cur.size()) {
    std::vector<Vec> filtered;
    for (int i : keep) filtered.push_back(cur[static_cast<std::size_t>(i)]);
    std::sort(filtered.begin(), filtered.end(), lex_less);
    cur = std::move(filtered);
    q = project_all(cur);
    facets = beneath_beyond(q, greedy_affine_basis(q, d));
  }

  out.vertices = cur;
  for (auto& f : facets) out.facets.push_back({std::move(f.normal), std::move(f.offset), std::move(f.corners)});

  // Fan triangulation from vertex 0; degenerate cones are dropped (their facet
  // simplex lies in a hyperplane through vertex 0 and carries no volume).
  for (const auto& f : out.facets) {
    if (std::find(f.corners.begin(), f.corners.end(), 0) != f.corners.end()) continue;
    Mat edges;
    for (int cix : f.corners)
      edges.push_back(vsub(q[static_cast<std::size_t>(cix)], q[0]));
    if (mat_det(edges) == 0) continue;
    std::vector<int> simplex{0};
    simplex.insert(simplex.end(), f.corners.begin(), f.corners.end());
    out.triangulation.push_back(std::move(simplex));
  }
  assert(!out.triangulation.empty());
  return out;
}

Polytope clip(const Polytope& p, const Vec& a, const Rat& t) {
  if (static_cast<int>(a.size()) != p.n) throw InputError("clip: normal dimension mismatch");
  if (p.empty()) return p;
  std::vector<Vec> kept, cut;
  std::vector<Rat> kept_val, cut_val;
  for (const auto& v : p.vertices) {
    const Rat s = dot(a, v);
    if (s <= t) {
      kept.push_back(v);
      kept_val.push_back(s);
    } else {
      cut.push_back(v);
      cut_val.push_back(s);
    }
  }
  if (cut.empty()) return p;
  if (kept.empty()) return empty_polytope(p.n);
  std::vector<Vec> pts = kept;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept_val[i] == t) continue;
    for (std::size_t j = 0; j < cut.size(); ++j) {
      const Rat s = (t - kept_val[i]) / (cut_val[j] - kept_val[i]);
      pts.push_back(vadd(kept[i], vscale(s, vsub(cut[j], kept[i]))));
    }
  }
  return hull(p.n, pts);
}

Rat support(const Polytope& p, const Vec& x) {
  if (p.empty()) throw DomainError("support of empty polytope");
  if (static_cast<int>(x.size()) != p.n) throw InputError("support: dimension mismatch");
  Rat best = dot(x, p.vertices[0]);
  for (std::size_t i = 1; i < p.vertices.size(); ++i)
    best = std::max(best, dot(x, p.vertices[i]));
  return best;
}

bool contains(const Polytope& p, const Vec& x) {
  if (static_cast<int>(x.size()) != p.n) throw InputError("contains: dimension mismatch");
  if (p.empty()) return false;
  for (const auto& [w, o] : p.equalities)
    if (dot(w, x) != o) return false;
  if (p.dim == 0) return true;
  const Vec q = p.project(x);
  for (const auto& f : p.facets)
    if (dot(f.normal, q) > f.offset) return false;
  return true;
}

Polytope translate(const Polytope& p, const Vec& y) {
  if (p.empty()) return p;
  std::vector<Vec> pts;
  for (const auto& v : p.vertices) pts.push_back(vadd(v, y));
  return hull(p.n, pts);
}

Polytope reflect(const Polytope& p) {
  if (p.empty()) return p;
  std::vector<Vec> pts;
  for (const auto& v : p.vertices) pts.push_back(vneg(v));
  return hull(p.n, pts);
}

Polytope apply_map(const Polytope& p, const Mat& phi) {
  if (p.empty()) return p;
  std::vector<Vec> pts;
  for (const auto& v : p.vertices) pts.push_back(mat_vec(phi, v));
  return hull(p.n, pts);
}

Polytope minkowski(const Polytope& p, const Polytope& q) {
  if (p.empty() || q.empty()) return empty_polytope(p.n);
  std::vector<Vec> pts;
  for (const auto& v : p.vertices)
    for (const auto& w : q.vertices) pts.push_back(vadd(v, w));
  return hull(p.n, pts);
}

Polytope scale(const Polytope& p, const Rat& lambda) {
  if (p.empty()) return p;
  std::vector<Vec> pts;
  for (const auto& v : p.vertices) pts.push_back(vscale(lambda, v));
  return hull(p.n, pts);
}

Measures measures(const Polytope& p) {
  Measures m{Rat(p.empty() ? 0 : 1), Rat(0), vzero(p.n)};
  if (p.empty() || p.dim < p.n) return m;
  for (const auto& s : p.triangulation) {
    Mat edges;
    for (std::size_t i = 1; i < s.size(); ++i)
      edges.push_back(vsub(p.vertices[static_cast<std::size_t>(s[i])],
                           p.vertices[static_cast<std::size_t>(s[0])]));
    Rat vol = rat_abs(mat_det(edges));
    for (int k = 2; k <= p.n; ++k) vol /= k;
    if (vol == 0) continue;
    m.vn += vol;
    Vec centroid = vzero(p.n);
    for (int ix : s) centroid = vadd(centroid, p.vertices[static_cast<std::size_t>(ix)]);
    centroid = vscale(Rat(1, p.n + 1), centroid);
    m.moment = vadd(m.moment, vscale(vol, centroid));
  }
  return m;
}

Vec relative_interior_point(const Polytope& p) {
  if (p.empty()) throw DomainError("relative interior of empty polytope");
  Vec c = vzero(p.n);
  for (const auto& v : p.vertices) c = vadd(c, v);
  return vscale(Rat(1, static_cast<long>(p.vertices.size())), c);
}

}  // namespace convexval
