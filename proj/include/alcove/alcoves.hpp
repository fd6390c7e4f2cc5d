#pragma once

// Alcoves in per-positive-root integer coordinates, galleries and their
// directions, acute cones C(A,w), the obtuse-cone reachability sets B(v,w)
// computed by a windowed breadth-first closure, and the parabolic
// decomposition of affine Weyl elements.
//
// An alcove stores its coordinate vector (k_alpha for every positive root)
// together with an interior sample point; coordinates decide all
// combinatorial questions, the sample point feeds exact geometry.

#include <map>
#include <set>

#include "alcove/affine.hpp"

namespace alcove {

struct Wall {
  int root = 0;        // index into positive_roots
  std::int64_t k = 0;  // hyperplane <alpha, x> = k
  auto operator<=>(const Wall&) const = default;
};

struct Alcove {
  std::vector<std::int64_t> coords;
  Vec sample;  // an interior point

  bool operator==(const Alcove& o) const { return coords == o.coords; }
  bool operator<(const Alcove& o) const { return coords < o.coords; }
};

inline Alcove alcove_from_point(const RootDatum& d, const Vec& p) {
  Alcove a;
  a.sample = p;
  a.coords.resize(d.positive_roots.size());
  for (std::size_t i = 0; i < d.positive_roots.size(); ++i) {
    const Rat v = dot(d.positive_roots[i], p);
    internal_check(!v.is_integer(), "point lies on a wall");
    a.coords[i] = v.floor();
  }
  return a;
}

inline Alcove base_alcove(const RootDatum& d) {
  return alcove_from_point(d, d.barycenter);
}

inline Alcove alcove_of(const ExtAffineElement& x) {
  return alcove_from_point(*x.datum, x.act(x.datum->barycenter));
}

inline Alcove alcove_apply(const ExtAffineElement& x, const Alcove& a) {
  return alcove_from_point(*x.datum, x.act(a.sample));
}

// the unique W_aff element carrying the base alcove onto a
inline ExtAffineElement element_of_alcove(const RootDatum& d, const Alcove& a) {
  Vec p = a.sample;
  ExtAffineElement u = identity_element(d);
  for (;;) {
    int sep = -1;
    if (dot(d.highest_root(), p) > Rat(1)) sep = 0;
    if (sep < 0)
      for (std::size_t i = 0; i < d.rank(); ++i)
        if (dot(d.simple_roots[i], p) < Rat(0)) { sep = int(i) + 1; break; }
    if (sep < 0) break;
    const ExtAffineElement s = affine_generator(d, sep);
    p = s.act(p);
    u = compose(s, u);
  }
  return inverse(u);
}

inline std::vector<Wall> separating_walls(const RootDatum& d, const Alcove& a,
                                          const Alcove& b) {
  internal_check(a.coords.size() == b.coords.size(), "alcoves of different data");
  std::vector<Wall> out;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const std::int64_t lo = std::min(a.coords[i], b.coords[i]);
    const std::int64_t hi = std::max(a.coords[i], b.coords[i]);
    for (std::int64_t j = lo + 1; j <= hi; ++j) out.push_back({int(i), j});
  }
  return out;
}

inline std::size_t separation(const Alcove& a, const Alcove& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const std::int64_t diff = a.coords[i] - b.coords[i];
    n += std::size_t(diff < 0 ? -diff : diff);
  }
  return n;
}

// +1 when the alcove lies in {<alpha,x> > k}, -1 otherwise
inline int side_of(const Alcove& a, const Wall& w) {
  return a.coords[std::size_t(w.root)] >= w.k ? +1 : -1;
}

inline Alcove reflect_alcove(const RootDatum& d, const Alcove& a, const Wall& w) {
  return alcove_from_point(
      d, affine_reflect(d, d.positive_roots[std::size_t(w.root)], w.k, a.sample));
}

struct Gallery {
  std::vector<Alcove> alcoves;  // length l+1
  std::vector<Wall> walls;      // length l

  std::size_t length() const { return walls.size(); }
};

inline void validate_gallery(const RootDatum& d, const Gallery& g) {
  (void)d;
  require(!g.alcoves.empty() && g.alcoves.size() == g.walls.size() + 1,
          "malformed gallery");
  for (std::size_t i = 0; i < g.walls.size(); ++i) {
    const Alcove& p = g.alcoves[i];
    const Alcove& q = g.alcoves[i + 1];
    require(separation(p, q) == 1, "gallery step not through a shared wall");
    const std::size_t r = std::size_t(g.walls[i].root);
    require(p.coords[r] != q.coords[r] &&
                g.walls[i].k == std::max(p.coords[r], q.coords[r]),
            "recorded wall does not separate the gallery step");
  }
}

// gallery traced by the prefixes of a word acting on the base alcove
inline Gallery gallery_from_word(const RootDatum& d, const std::vector<int>& word) {
  Gallery g;
  g.alcoves.push_back(base_alcove(d));
  ExtAffineElement x = identity_element(d);
  for (int s : word) {
    x = compose(x, affine_generator(d, s));
    Alcove next = alcove_of(x);
    const Alcove& prev = g.alcoves.back();
    internal_check(separation(prev, next) == 1, "word step is not an adjacency");
    for (std::size_t i = 0; i < prev.coords.size(); ++i)
      if (prev.coords[i] != next.coords[i])
        g.walls.push_back({int(i), std::max(prev.coords[i], next.coords[i])});
    g.alcoves.push_back(std::move(next));
  }
  return g;
}

// canonical minimal gallery: each step crosses the admissible separating
// wall with lexicographically least (root index, k)
inline Gallery minimal_gallery(const RootDatum& d, const Alcove& a, const Alcove& b) {
  Gallery g;
  g.alcoves.push_back(a);
  Alcove cur = a;
  std::size_t remaining = separation(a, b);
  while (remaining > 0) {
    bool stepped = false;
    for (std::size_t i = 0; i < cur.coords.size() && !stepped; ++i) {
      if (cur.coords[i] == b.coords[i]) continue;
      // the tight separating wall on the b-side of cur
      const Wall w{int(i),
                   cur.coords[i] < b.coords[i] ? cur.coords[i] + 1 : cur.coords[i]};
      Alcove next = reflect_alcove(d, cur, w);
      if (separation(cur, next) != 1) continue;  // not a facet of cur
      g.walls.push_back(w);
      g.alcoves.push_back(next);
      cur = std::move(next);
      stepped = true;
    }
    internal_check(stepped, "no admissible wall toward the target");
    const std::size_t now = separation(cur, b);
    internal_check(now == remaining - 1, "gallery step failed to reduce separation");
    remaining = now;
  }
  return g;
}

inline bool is_minimal(const Gallery& g) {
  std::set<Wall> seen;
  for (const Wall& w : g.walls)
    if (!seen.insert(w).second) return false;
  return true;
}

// orientation of a wall relative to w: returns +1 if the stored positive
// root lies in w(R+) (so H^{w+} is the side <alpha,x> > k), else -1
inline int w_orientation(const RootDatum& d, const FiniteWeylElement& w_inv,
                         const Wall& wall) {
  const Vec pre = w_inv.act(d.positive_roots[std::size_t(wall.root)]);
  auto cls = d.classify_root(pre);
  internal_check(cls.has_value(), "w does not permute the roots");
  return cls->second;
}

inline bool in_w_direction(const RootDatum& d, const Gallery& g,
                           const FiniteWeylElement& w) {
  const FiniteWeylElement wi = d.weyl_inverse(w);
  for (std::size_t i = 0; i < g.walls.size(); ++i) {
    const int orient = w_orientation(d, wi, g.walls[i]);
    if (side_of(g.alcoves[i], g.walls[i]) != -orient) return false;
    if (side_of(g.alcoves[i + 1], g.walls[i]) != orient) return false;
  }
  return true;
}

// B in C(A,w): every wall separating A and B must have A on its w-negative
// and B on its w-positive side; non-separating walls impose no condition
inline bool in_acute_cone(const RootDatum& d, const Alcove& a,
                          const FiniteWeylElement& w, const Alcove& b) {
  const FiniteWeylElement wi = d.weyl_inverse(w);
  for (const Wall& wall : separating_walls(d, a, b)) {
    const int orient = w_orientation(d, wi, wall);
    if (side_of(a, wall) != -orient || side_of(b, wall) != orient) return false;
  }
  return true;
}

// some w with B in C(A,w); first match in the fixed Weyl enumeration
inline FiniteWeylElement find_direction(const RootDatum& d, const Alcove& a,
                                        const Alcove& b) {
  for (const FiniteWeylElement& w : d.weyl().elems)
    if (in_acute_cone(d, a, w, b)) return w;
  internal_check(false, "no direction found; the acute cones must cover everything");
  return d.weyl_identity();
}

// B(a-image) membership in the translated closed chamber: the pointed cone
// C_a(A,w) = { A' : A'(a) in A(a) + w(closure C0) }
inline bool pointed_cone_member(const RootDatum& d, const Vec& a_point,
                                const Alcove& a, const FiniteWeylElement& w,
                                const Alcove& b) {
  for (const Vec& alpha : d.simple_roots)
    require(dot(alpha, a_point) > Rat(0), "base point not interior");
  require(dot(d.highest_root(), a_point) < Rat(1), "base point not interior");
  const Vec pa = element_of_alcove(d, a).act(a_point);
  const Vec pb = element_of_alcove(d, b).act(a_point);
  const Vec diff = d.weyl_inverse(w).act(pb - pa);
  for (const Vec& alpha : d.simple_roots)
    if (dot(alpha, diff) < Rat(0)) return false;
  return true;
}

// v1 - v0 in w(B0), B0 the nonpositive span of the simple coroots
inline bool obtuse_member(const RootDatum& d, const Vec& v1, const Vec& v0,
                          const FiniteWeylElement& w) {
  const Vec t = d.coroot_central_coords(d.weyl_inverse(w).act(v1 - v0));
  for (std::size_t i = d.rank(); i < t.size(); ++i)
    if (!t[i].is_zero()) return false;
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (t[i] > Rat(0)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// windowed strong sets B(v,w)

// lower bounds <f_i, p> >= c_i; a window for direction w must be saturated:
// every step in w(B0) can only decrease each functional, so feasibility of a
// chain's endpoint forces feasibility of the whole chain
struct Window {
  std::vector<Vec> functionals;
  std::vector<Rat> bounds;

  bool feasible(const Vec& p) const {
    for (std::size_t i = 0; i < functionals.size(); ++i)
      if (dot(functionals[i], p) < bounds[i]) return false;
    return true;
  }
};

// the cone interval { p : p - anchor in w(nonnegative coroot span) }
inline Window strong_window(const RootDatum& d, const FiniteWeylElement& w,
                            const Vec& anchor) {
  Window win;
  for (const Vec& f : d.fundamental_weight_functionals) {
    const Vec fw = w.act(f);
    win.functionals.push_back(fw);
    win.bounds.push_back(dot(fw, anchor));
  }
  return win;
}

inline void check_window_saturated(const RootDatum& d, const FiniteWeylElement& w,
                                   const Window& win) {
  for (const Vec& f : win.functionals)
    for (const Vec& cr : d.simple_coroots)
      require(dot(f, w.act(cr)) >= Rat(0),
              "window not saturated for this direction");
}

// all points of B(v,w) inside the window: closure of v under affine
// reflections whose step lies in w(B0), restricted to the window
inline std::set<Vec, VecLess> strong_set(const RootDatum& d, const Vec& v,
                                         const FiniteWeylElement& w,
                                         const Window& window) {
  require(window.feasible(v), "window does not contain the starting point");
  check_window_saturated(d, w, window);
  // admissible step direction per positive root: the sign s with
  // s * coroot in w(B0)
  std::vector<int> sign(d.positive_roots.size(), 0);
  const FiniteWeylElement wi = d.weyl_inverse(w);
  for (std::size_t i = 0; i < d.positive_roots.size(); ++i) {
    const Vec t = d.coroot_central_coords(wi.act(d.positive_coroots[i]));
    bool nonpos = true, nonneg = true;
    for (std::size_t j = 0; j < d.rank(); ++j) {
      nonpos = nonpos && t[j] <= Rat(0);
      nonneg = nonneg && t[j] >= Rat(0);
    }
    internal_check(nonpos != nonneg, "coroot image must be signed");
    sign[i] = nonpos ? +1 : -1;  // +coroot in w(B0) iff image nonpositive
  }
  std::set<Vec, VecLess> out;
  std::vector<Vec> frontier{v};
  out.insert(v);
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& p : frontier) {
      for (std::size_t i = 0; i < d.positive_roots.size(); ++i) {
        const Rat c0 = dot(d.positive_roots[i], p);
        // first hyperplane index strictly on the admissible side
        std::int64_t k = sign[i] > 0 ? c0.floor() + 1
                                     : (c0.is_integer() ? c0.num - 1 : c0.floor());
        for (;; k += sign[i]) {
          const Vec q = p + (Rat(k) - c0) * d.positive_coroots[i];
          if (!window.feasible(q)) break;
          if (out.size() > d.guards.max_bfs_nodes)
            throw GuardError("strong_set exceeded the node guard");
          if (out.insert(q).second) next.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// parabolic decomposition x = x^J x_J with x_J in W_J, lengths adding

struct ParabolicParts {
  ExtAffineElement minimal;  // x^J, minimal in x W_J
  ExtAffineElement finite;   // x_J in W_J
};

inline ParabolicParts parabolic_decompose(const ExtAffineElement& x,
                                          const std::set<int>& J) {
  const RootDatum& d = *x.datum;
  require(in_waff(x), "parabolic decomposition needs an affine Weyl element");
  require(int(J.size()) <= int(d.rank()), "W_J must be a proper finite parabolic");
  for (int s : J) require(s >= 0 && s <= int(d.rank()), "bad generator label");
  ExtAffineElement y = x;
  std::vector<int> letters;
  for (;;) {
    int drop = -1;
    const std::size_t ly = length(y);
    for (int s : J) {
      if (length(compose(y, affine_generator(d, s))) < ly) { drop = s; break; }
    }
    if (drop < 0) break;
    y = compose(y, affine_generator(d, drop));
    letters.push_back(drop);
  }
  ExtAffineElement fin = identity_element(d);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    fin = compose(fin, affine_generator(d, *it));
  internal_check(length(x) == length(y) + length(fin),
                 "parabolic lengths must add");
  return {y, fin};
}

// generator labels whose base-alcove wall contains the vertex
inline std::set<int> wall_labels_through(const RootDatum& d, const Vec& vertex) {
  std::set<int> J;
  if (dot(d.highest_root(), vertex) == Rat(1)) J.insert(0);
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (dot(d.simple_roots[i], vertex).is_zero()) J.insert(int(i) + 1);
  return J;
}

} // namespace alcove
