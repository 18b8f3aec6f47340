#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "core/polytope.hpp"

namespace convexval {

// Piecewise-linear convex function with bounded polytopal effective domain, +inf
// outside. Canonical invariants:
//  - `graph` holds exactly the lower-envelope vertices of the lifted point set,
//    lex-sorted by (x, t); the map x -> t is injective;
//  - `dom` is the hull of the graph x's (its vertices all appear as graph x's);
//  - u(x) = max_i (a_i . x + b_i) over `pieces` for every x in dom, each piece
//    active on a full-dimensional (within dom) region;
//  - when dom is full-dimensional, `cells` triangulate dom and carry the affine
//    function realized on each simplex.
struct PLConvexS {
  struct Cell {
    std::vector<Vec> simplex;  // n+1 affinely independent points
    Vec a;
    Rat b;
  };

  int n = 0;
  std::vector<std::pair<Vec, Rat>> graph;
  Polytope dom;
  std::vector<std::pair<Vec, Rat>> pieces;
  std::vector<Cell> cells;
  bool affine_graph = false;  // true when u is affine on dom (single piece)

  Rat min_value() const;  // attained at a graph point
  Rat max_value() const;
};


// Max-affine convex function finite on all of R^n: v(x) = max_i (a_i . x + b_i).
// Canonical invariants: pieces lex-sorted, pairwise distinct, each essential;
// witnesses[i] is a point where piece i is the strict unique maximizer.
struct PLConvexF {
  int n = 0;
  std::vector<std::pair<Vec, Rat>> pieces;
  std::vector<Vec> witnesses;
};

// Structural equality of canonical data (graph resp. pieces).
bool operator==(const PLConvexS& a, const PLConvexS& b);
bool operator==(const PLConvexF& a, const PLConvexF& b);

// Log-concave density e^{-u} with u from one of the two classes above.
struct LogConcaveFn {
  char kind = 'S';  // 'S' or 'F'
  std::optional<PLConvexS> s;
  std::optional<PLConvexF> f;

  int dim() const { return kind == 'S' ? s->n : f->n; }
};

// Canonicalizing constructors. Inputs may contain duplicates and redundant
// entries; outputs satisfy the class invariants. Throw InputError on empty or
// dimension-inconsistent input.
PLConvexS make_plconvexs(int n, std::vector<std::pair<Vec, Rat>> points);
PLConvexF make_plconvexf(int n, std::vector<std::pair<Vec, Rat>> pieces);
LogConcaveFn make_logconcave_s(PLConvexS u);
LogConcaveFn make_logconcave_f(PLConvexF v);

// Pointwise evaluation; nullopt encodes +inf.
std::optional<Rat> eval(const PLConvexS& u, const Vec& x);
Rat eval(const PLConvexF& v, const Vec& x);

// Exact structure-preserving operations (each class is closed under these).
PLConvexS translate(const PLConvexS& u, const Vec& y);        // u(. - y)
PLConvexS add_linear(const PLConvexS& u, const Vec& y);       // u + <y, .>
PLConvexS add_const(const PLConvexS& u, const Rat& c);
PLConvexS scale_arg(const PLConvexS& u, const Rat& lambda);   // u(lambda .), lambda != 0
PLConvexS scale_val(const PLConvexS& u, const Rat& lambda);   // lambda u, lambda > 0
PLConvexS compose_inverse(const PLConvexS& u, const Mat& phi);  // u o phi^{-1}

PLConvexF translate(const PLConvexF& v, const Vec& y);
PLConvexF add_linear(const PLConvexF& v, const Vec& y);
PLConvexF add_const(const PLConvexF& v, const Rat& c);
PLConvexF scale_arg(const PLConvexF& v, const Rat& lambda);
PLConvexF scale_val(const PLConvexF& v, const Rat& lambda);
PLConvexF compose_inverse(const PLConvexF& v, const Mat& phi);

// Inf-convolution (u box v)(x) = inf { u(x1) + v(x2) : x1 + x2 = x }; class S only.
PLConvexS inf_convolution(const PLConvexS& u, const PLConvexS& v);

// Convex conjugate sup_y (<x,y> - u(y)). Exact and structurally involutive:
// conjugate(conjugate(u)) == u. Graph points map to pieces and back.
PLConvexF conjugate(const PLConvexS& u);
PLConvexS conjugate(const PLConvexF& v);

// v o phi^T, computed without inverting phi: pieces (phi a_i, b_i).
PLConvexF compose_transpose(const PLConvexF& v, const Mat& phi);

// Pointwise sum of max-affine functions (pairwise piece sums).
PLConvexF add(const PLConvexF& a, const PLConvexF& b);

// u + indicator of { x : a . x <= t }. The halfspace must meet dom(u).
PLConvexS restrict_halfspace(const PLConvexS& u, const Vec& a, const Rat& t);

// Lattice operations. Join = pointwise max (epigraph intersection); meet =
// largest convex minorant of the pointwise min (epigraph convex-hull closure).
// Class S join is absent when the epigraphs do not intersect (join == +inf
// everywhere); class F meet is absent when min(u, v) has no affine minorant.
// `min_is_convex` reports whether the pointwise min equals the meet on an exact
// probe grid (graph points, piece witnesses, pairwise midpoints).
struct JoinMeetS {
  std::optional<PLConvexS> join;
  PLConvexS meet;
  bool min_is_convex;
};
JoinMeetS join_meet(const PLConvexS& u, const PLConvexS& v);

struct JoinMeetF {
  PLConvexF join;
  std::optional<PLConvexF> meet;
  bool min_is_convex;
};
JoinMeetF join_meet(const PLConvexF& u, const PLConvexF& v);

// Sublevel set { x : u(x) <= s }; empty when s < min u.
Polytope sublevel(const PLConvexS& u, const Rat& s);

// Log-concave wrappers: pointwise operations on f = e^{-u}.
LogConcaveFn translate(const LogConcaveFn& f, const Vec& y);
LogConcaveFn mul_exp_linear(const LogConcaveFn& f, const Vec& y);  // e^{-<y,.>} f
LogConcaveFn mul_exp_const(const LogConcaveFn& f, const Rat& t);   // e^{-t} f
LogConcaveFn compose_inverse(const LogConcaveFn& f, const Mat& phi);
LogConcaveFn power_pos(const LogConcaveFn& f, const Rat& lambda);  // f^lambda, lambda > 0

}  // namespace convexval
