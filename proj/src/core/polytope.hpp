#pragma once

#include <utility>
#include <vector>

#include "core/linalg.hpp"

namespace convexval {

// Closed halfspace { x : normal . x <= offset } in the polytope's projected coordinates.
// `corners` indexes `Polytope::vertices`; each facet entry is one simplex of a facet
// triangulation, so several entries may share a hyperplane.
struct FacetSimplex {
  Vec normal;  // length = Polytope::dim
  Rat offset;
  std::vector<int> corners;  // dim many, affinely independent
};

// Convex polytope in R^n, possibly lower-dimensional or empty. Canonical invariants:
//  - `vertices` are exactly the extreme points, lex-sorted, in ambient coordinates;
//  - `proj` lists `dim` coordinate positions whose projection is a bijection of the
//    affine hull; facet data lives in those coordinates;
//  - `equalities` cut out the affine hull in ambient coordinates (n - dim of them);
//  - `triangulation` is a fan of nondegenerate dim-simplices from vertex 0 covering P.
struct Polytope {
  int n = 0;
  int dim = -1;  // -1 iff empty
  std::vector<Vec> vertices;
  std::vector<int> proj;
  std::vector<std::pair<Vec, Rat>> equalities;  // normal . x == offset
  std::vector<FacetSimplex> facets;
  std::vector<std::vector<int>> triangulation;

  bool empty() const { return dim < 0; }
  Vec project(const Vec& x) const {
    Vec q(proj.size());
    for (std::size_t i = 0; i < proj.size(); ++i) q[i] = x[static_cast<std::size_t>(proj[i])];
    return q;
  }
  // Scatters a projected-coordinate vector back to R^n (zeros elsewhere).
  Vec lift(const Vec& q) const {
    Vec x = vzero(n);
    for (std::size_t i = 0; i < proj.size(); ++i) x[static_cast<std::size_t>(proj[i])] = q[i];
    return x;
  }
};

Polytope empty_polytope(int n);

// Convex hull of a nonempty point list; also the canonicalizer (duplicates and
// non-extreme points are dropped). Throws InputError on empty input or ragged rows.
Polytope hull(int n, const std::vector<Vec>& points);

// P intersect { a . x <= t }. Exact; result may be empty or lower-dimensional.
Polytope clip(const Polytope& p, const Vec& a, const Rat& t);

// Support function h_P(x) = max_{y in P} x . y. Throws DomainError when P is empty.
Rat support(const Polytope& p, const Vec& x);

bool contains(const Polytope& p, const Vec& x);

Polytope translate(const Polytope& p, const Vec& y);
Polytope reflect(const Polytope& p);                    // -P
Polytope apply_map(const Polytope& p, const Mat& phi);  // phi P
Polytope minkowski(const Polytope& p, const Polytope& q);
Polytope scale(const Polytope& p, const Rat& lambda);

struct Measures {
  Rat v0;  // Euler characteristic: 1 (nonempty) or 0
  Rat vn;  // n-dimensional volume
  Vec moment;  // integral of y over P w.r.t. n-dim Lebesgue measure
};
Measures measures(const Polytope& p);

// Average of the vertices; lies in the relative interior.
Vec relative_interior_point(const Polytope& p);

}  // namespace convexval
