#pragma once

// Based root data for the classical families plus F4, G2 and GSp(2n),
// realized over exact rationals in the standard coordinates.  A datum
// carries its ambient lattice (as an integer basis), positive roots and
// coroots, the base-alcove vertex points, and cached derived structure
// (fundamental weight functionals, the finite Weyl group, a Bruhat memo
// table used by the affine layer).
//
// Conventions:
//  - roots are functionals represented as vectors via the standard inner
//    product; coroots are always integer vectors;
//  - the cocharacter lattice is { B t : t integer } for a fixed basis B;
//  - GL(n) and GSp(2n) are non-semisimple: their base-alcove "vertices"
//    are fixed representative points on the minimal facets (0, omega_i
//    resp. 0, eta_i); all vertex-wise conditions used here are invariant
//    under shifting a representative along the central directions.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "alcove/linalg.hpp"

namespace alcove {

enum class Family { GL, A, B, C, D, F4, G2, GSp };

inline const char* family_tag(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::GSp: return "GSp";
  }
  return "?";
}

struct FiniteWeylElement {
  Mat mat;                 // exact linear action on ambient space
  std::vector<int> word;   // reduced word in simple-reflection labels 1..rank

  Vec act(const Vec& v) const { return mat.apply(v); }
  std::size_t length() const { return word.size(); }
  bool operator==(const FiniteWeylElement& o) const { return mat == o.mat; }
};

struct Guards {
  std::size_t max_weyl_order = 1'000'000;
  std::size_t max_interval_length = 25;
  std::size_t max_bfs_nodes = 500'000;
  std::size_t max_pair_search = 10'000;
};

struct WeylGroup {
  std::vector<FiniteWeylElement> elems;  // sorted by (length, word)
  std::map<std::vector<Rat>, int> index_of;
  int longest = 0;
};

struct RootDatum {
  Family family = Family::GL;
  int size = 0;            // family parameter: GL(n), A(n-1), B(n), ..., GSp(2n)
  std::size_t ambient = 0;
  std::string name;

  std::vector<Vec> simple_roots;
  std::vector<Vec> simple_coroots;
  std::vector<Vec> positive_roots;    // simple roots come first
  std::vector<Vec> positive_coroots;
  std::size_t highest_index = 0;
  std::vector<std::int64_t> marks;    // highest root in the simple basis

  Mat lattice_basis;                  // columns: basis of the cocharacter lattice
  std::vector<Vec> vertices;          // base-alcove vertex points, vertices[0] == 0
  Vec barycenter;

  // duality data: M = [simple coroots | central basis] and its inverse;
  // rows 0..rank-1 of M^-1 are the fundamental weight functionals,
  // the remaining rows are the central coordinates.
  std::vector<Vec> central_basis;
  Mat coroot_central;          // M
  Mat coroot_central_inv;      // M^-1
  std::vector<Vec> fundamental_weight_functionals;
  std::vector<Vec> fundamental_coweights;  // in the span of the coroots

  // Omega-class invariant of a translation: pairing with omega_functional,
  // reduced mod omega_mod when omega_mod > 0.  Empty functional: Omega trivial.
  Vec omega_functional;
  std::int64_t omega_mod = 0;

  std::uint64_t weyl_order = 0;

  Guards guards;

  std::size_t rank() const { return simple_roots.size(); }
  const Vec& highest_root() const { return positive_roots[highest_index]; }
  const Vec& highest_coroot() const { return positive_coroots[highest_index]; }

  // --- caches -----------------------------------------------------------
  mutable std::once_flag weyl_once;
  mutable std::unique_ptr<WeylGroup> weyl_cache;
  mutable std::shared_mutex bruhat_mutex;
  mutable std::unordered_map<std::string, bool> bruhat_memo;

  RootDatum() = default;
  RootDatum(const RootDatum&) = delete;
  RootDatum& operator=(const RootDatum&) = delete;

  std::map<Vec, int, VecLess> root_index_;  // positive root -> index

  void finish();  // derive M, functionals, vertices (when empty), validate

  // (index, sign) for v = sign * positive_roots[index]; nullopt if not a root
  std::optional<std::pair<int, int>> classify_root(const Vec& v) const {
    auto it = root_index_.find(v);
    if (it != root_index_.end()) return std::make_pair(it->second, +1);
    it = root_index_.find(-v);
    if (it != root_index_.end()) return std::make_pair(it->second, -1);
    return std::nullopt;
  }
  bool is_root(const Vec& v) const { return classify_root(v).has_value(); }
  bool is_positive_root(const Vec& v) const {
    return root_index_.count(v) > 0;
  }
  // coroot of an arbitrary root (sign respected)
  Vec coroot_of(const Vec& alpha) const {
    auto c = classify_root(alpha);
    require(c.has_value(), "not a root of this datum: " + vec_str(alpha));
    const Vec& cr = positive_coroots[std::size_t(c->first)];
    return c->second > 0 ? cr : -cr;
  }

  bool in_cocharacter_lattice(const Vec& v) const {
    auto t = solve(lattice_basis, v);
    return t && is_integral(*t);
  }
  bool in_coroot_lattice(const Vec& v) const {
    auto t = solve(Mat::from_columns(simple_coroots), v);
    return t && is_integral(*t);
  }
  // coordinates of v in the (coroot, central) basis; never fails
  Vec coroot_central_coords(const Vec& v) const {
    return coroot_central_inv.apply(v);
  }
  bool in_root_span(const Vec& v) const {
    Vec t = coroot_central_coords(v);
    for (std::size_t i = rank(); i < t.size(); ++i)
      if (!t[i].is_zero()) return false;
    return true;
  }

  bool is_dominant(const Vec& v) const {
    for (const Vec& a : simple_roots)
      if (dot(a, v) < Rat(0)) return false;
    return true;
  }
  bool is_regular_dominant(const Vec& v) const {
    for (const Vec& a : simple_roots)
      if (dot(a, v) <= Rat(0)) return false;
    return true;
  }
  bool is_minuscule(const Vec& mu) const {
    for (const Vec& a : positive_roots) {
      const Rat p = dot(a, mu);
      if (p < Rat(-1) || p > Rat(1)) return false;
    }
    return true;
  }

  std::int64_t omega_invariant(const Vec& lambda) const {
    if (omega_functional.empty()) return 0;
    const Rat p = dot(omega_functional, lambda);
    internal_check(p.is_integer(), "omega invariant must be integral");
    if (omega_mod > 0) {
      std::int64_t r = p.num % omega_mod;
      if (r < 0) r += omega_mod;
      return r;
    }
    return p.num;
  }

  Mat simple_reflection_mat(std::size_t i) const {
    return reflection_mat(simple_roots[i], simple_coroots[i]);
  }
  static Mat reflection_mat(const Vec& alpha, const Vec& coroot) {
    const std::size_t n = alpha.size();
    Mat m = Mat::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        m.at(r, c) -= coroot[r] * alpha[c];
    return m;
  }

  const WeylGroup& weyl() const;
  const FiniteWeylElement& weyl_identity() const { return weyl().elems[0]; }
  const FiniteWeylElement& longest_element() const {
    const WeylGroup& w = weyl();
    return w.elems[std::size_t(w.longest)];
  }
  int weyl_index(const FiniteWeylElement& w) const {
    auto it = weyl().index_of.find(w.mat.a);
    internal_check(it != weyl().index_of.end(), "element not in Weyl group");
    return it->second;
  }

  // canonical reduced word: greedy least-index left descent
  std::vector<int> canonical_word(const Mat& m) const;
  FiniteWeylElement make_weyl(const Mat& m) const {
    return FiniteWeylElement{m, canonical_word(m)};
  }
  FiniteWeylElement weyl_inverse(const FiniteWeylElement& w) const {
    Mat t(w.mat.cols, w.mat.rows);
    for (std::size_t i = 0; i < w.mat.rows; ++i)
      for (std::size_t j = 0; j < w.mat.cols; ++j) t.at(j, i) = w.mat.at(i, j);
    return make_weyl(t);
  }
  FiniteWeylElement weyl_compose(const FiniteWeylElement& a,
                                 const FiniteWeylElement& b) const {
    return make_weyl(a.mat.mul(b.mat));
  }
};

// ---------------------------------------------------------------------------

inline Rat pairing(const RootDatum& d, const Vec& functional, const Vec& point) {
  require(functional.size() == d.ambient && point.size() == d.ambient,
          "pairing: ambient dimension mismatch");
  return dot(functional, point);
}

inline Vec affine_reflect(const RootDatum& d, const Vec& alpha, std::int64_t k,
                          const Vec& v) {
  require(v.size() == d.ambient, "affine_reflect: dimension mismatch");
  const Vec coroot = d.coroot_of(alpha);
  const Rat c = dot(alpha, v) - Rat(k);
  return v - c * coroot;
}

inline std::vector<int> RootDatum::canonical_word(const Mat& m) const {
  std::vector<int> word;
  Mat cur = m;
  for (;;) {
    // left descent i: cur^-1(alpha_i) negative; cur orthogonal, so
    // cur^-1(alpha_i) has coordinates alpha_i . columns of cur
    int found = -1;
    for (std::size_t i = 0; i < rank(); ++i) {
      Vec pre(ambient);
      for (std::size_t j = 0; j < ambient; ++j)
        pre[j] = dot(simple_roots[i], cur.col(j));
      auto cls = classify_root(pre);
      internal_check(cls.has_value(), "matrix does not permute the roots");
      if (cls->second < 0) { found = int(i); break; }
    }
    if (found < 0) break;
    cur = simple_reflection_mat(std::size_t(found)).mul(cur);
    word.push_back(found + 1);
  }
  internal_check(cur == Mat::identity(ambient),
                 "canonical_word: descent walk did not reach the identity");
  return word;
}

inline const WeylGroup& RootDatum::weyl() const {
  std::call_once(weyl_once, [&] {
    if (weyl_order > guards.max_weyl_order)
      throw GuardError("Weyl group order " + std::to_string(weyl_order) +
                       " exceeds guard " + std::to_string(guards.max_weyl_order));
    auto wg = std::make_unique<WeylGroup>();
    std::vector<Mat> simple(rank());
    for (std::size_t i = 0; i < rank(); ++i) simple[i] = simple_reflection_mat(i);
    std::map<std::vector<Rat>, std::vector<int>> seen;
    const Mat id = Mat::identity(ambient);
    seen.emplace(id.a, std::vector<int>{});
    std::vector<Mat> frontier{id};
    while (!frontier.empty()) {
      std::vector<Mat> next;
      for (const Mat& w : frontier) {
        for (std::size_t i = 0; i < rank(); ++i) {
          // length increases iff w(alpha_i) stays positive
          Vec img = w.apply(simple_roots[i]);
          auto cls = classify_root(img);
          internal_check(cls.has_value(), "Weyl closure left the root system");
          if (cls->second < 0) continue;
          Mat wi = w.mul(simple[i]);
          auto it = seen.find(wi.a);
          if (it != seen.end()) continue;
          auto wrd = seen.at(w.a);
          wrd.push_back(int(i) + 1);
          seen.emplace(wi.a, std::move(wrd));
          next.push_back(std::move(wi));
        }
      }
      frontier = std::move(next);
    }
    internal_check(seen.size() == weyl_order, "Weyl enumeration size mismatch");
    for (auto& [key, wrd] : seen) {
      Mat m(ambient, ambient);
      m.a = key;
      // replace the discovery word by the canonical one
      FiniteWeylElement e{std::move(m), canonical_word([&] {
                            Mat mm(ambient, ambient);
                            mm.a = key;
                            return mm;
                          }())};
      internal_check(e.word.size() == wrd.size(), "canonical word length drift");
      wg->elems.push_back(std::move(e));
    }
    std::sort(wg->elems.begin(), wg->elems.end(),
              [](const FiniteWeylElement& x, const FiniteWeylElement& y) {
                if (x.word.size() != y.word.size())
                  return x.word.size() < y.word.size();
                return x.word < y.word;
              });
    for (std::size_t i = 0; i < wg->elems.size(); ++i) {
      wg->index_of.emplace(wg->elems[i].mat.a, int(i));
      if (wg->elems[i].length() > wg->elems[std::size_t(wg->longest)].length())
        wg->longest = int(i);
    }
    weyl_cache = std::move(wg);
  });
  return *weyl_cache;
}

// v+ = w(v) dominant; picks the least negative simple pairing each step
inline std::pair<Vec, FiniteWeylElement> dominant_representative(
    const RootDatum& d, const Vec& v) {
  Vec cur = v;
  Mat w = Mat::identity(d.ambient);
  for (;;) {
    int neg = -1;
    for (std::size_t i = 0; i < d.rank(); ++i)
      if (dot(d.simple_roots[i], cur) < Rat(0)) { neg = int(i); break; }
    if (neg < 0) break;
    const std::size_t i = std::size_t(neg);
    cur = cur - (dot(d.simple_roots[i], cur)) * d.simple_coroots[i];
    w = d.simple_reflection_mat(i).mul(w);
  }
  return {cur, d.make_weyl(w)};
}

// v in Conv(W0 mu)?  Computed as: v - mu lies in the coroot span and the
// dominant representative v+ satisfies mu - v+ in the nonnegative cone of
// the simple coroots.  This is the intersection-of-obtuse-cones test
// collapsed by duality with the fundamental weights.
inline bool conv_membership(const RootDatum& d, const Vec& mu, const Vec& v) {
  require(d.is_dominant(mu), "conv_membership: mu must be dominant");
  require(v.size() == d.ambient, "conv_membership: dimension mismatch");
  Vec t = d.coroot_central_coords(v - mu);
  for (std::size_t i = d.rank(); i < t.size(); ++i)
    if (!t[i].is_zero()) return false;
  const Vec vplus = dominant_representative(d, v).first;
  Vec s = d.coroot_central_coords(mu - vplus);
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (s[i] < Rat(0)) return false;
  return true;
}

inline std::vector<Vec> weyl_orbit(const RootDatum& d, const Vec& v) {
  std::vector<Vec> out;
  std::map<Vec, bool, VecLess> seen;
  std::vector<Vec> frontier{v};
  seen.emplace(v, true);
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& p : frontier) {
      out.push_back(p);
      for (std::size_t i = 0; i < d.rank(); ++i) {
        Vec q = p - dot(d.simple_roots[i], p) * d.simple_coroots[i];
        if (seen.emplace(q, true).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), VecLess{});
  return out;
}

// ---------------------------------------------------------------------------
// construction

namespace detail {

inline Vec unit(std::size_t n, std::size_t i, std::int64_t c = 1) {
  Vec v(n, Rat(0));
  v[i] = Rat(c);
  return v;
}

}  // namespace detail

inline void RootDatum::finish() {
  const std::size_t r = rank();
  internal_check(r > 0 && ambient > 0, "empty datum");
  for (std::size_t i = 0; i < positive_roots.size(); ++i)
    root_index_.emplace(positive_roots[i], int(i));

  // central directions: common kernel of the root functionals
  {
    Mat roots_m(r, ambient);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < ambient; ++j)
        roots_m.at(i, j) = simple_roots[i][j];
    central_basis = kernel(roots_m);
  }
  internal_check(r + central_basis.size() == ambient,
                 "coroots plus center must span the ambient space");
  {
    std::vector<Vec> cols = simple_coroots;
    for (const Vec& z : central_basis) cols.push_back(z);
    coroot_central = Mat::from_columns(cols);
    coroot_central_inv = inverse(coroot_central);
    for (std::size_t i = 0; i < ambient; ++i) {
      if (i < r) fundamental_weight_functionals.push_back(coroot_central_inv.row(i));
    }
  }
  // fundamental coweights: dual to the simple roots inside the coroot span
  {
    Mat cartan(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        cartan.at(i, j) = dot(simple_roots[i], simple_coroots[j]);
    Mat cartan_inv = inverse(cartan);
    for (std::size_t i = 0; i < r; ++i) {
      Vec w = zero_vec(ambient);
      for (std::size_t k = 0; k < r; ++k)
        w = w + cartan_inv.at(k, i) * simple_coroots[k];
      fundamental_coweights.push_back(w);
    }
  }
  // highest root marks
  {
    Mat sm(ambient, r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < ambient; ++i) sm.at(i, j) = simple_roots[j][i];
    auto m = solve(sm, highest_root());
    internal_check(m.has_value(), "highest root outside the simple span");
    for (const Rat& c : *m) {
      internal_check(c.is_integer() && c.num >= 1, "bad highest-root mark");
      marks.push_back(c.num);
    }
  }
  if (vertices.empty()) {
    vertices.push_back(zero_vec(ambient));
    for (std::size_t i = 0; i < r; ++i)
      vertices.push_back(Rat(1, marks[i]) * fundamental_coweights[i]);
  }
  {
    Vec b = zero_vec(ambient);
    for (const Vec& v : vertices) b = b + v;
    barycenter = Rat(1, std::int64_t(vertices.size())) * b;
  }

  // --- invariants -------------------------------------------------------
  for (const Vec& a : positive_roots)
    for (const Vec& c : positive_coroots)
      internal_check(dot(a, c).is_integer(), "pairing not crystallographic");
  for (std::size_t i = 0; i < positive_roots.size(); ++i)
    internal_check(dot(positive_roots[i], positive_coroots[i]) == Rat(2),
                   "root/coroot normalization broken");
  for (const Vec& a : positive_roots)
    internal_check(!is_root(Rat(2) * a), "root system not reduced");
  {  // irreducible: simple-root adjacency graph connected
    std::vector<bool> vis(r, false);
    std::vector<std::size_t> stack{0};
    vis[0] = true;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < r; ++j)
        if (!vis[j] && !dot(simple_roots[i], simple_coroots[j]).is_zero()) {
          vis[j] = true;
          stack.push_back(j);
        }
    }
    for (bool b : vis) internal_check(b, "root system not irreducible");
  }
  internal_check(is_dominant(highest_root()), "highest root not dominant");
  for (const Vec& a : positive_roots) {  // maximal in dominance order
    auto diff = solve(
        [&] {
          Mat sm(ambient, r);
          for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < ambient; ++i)
              sm.at(i, j) = simple_roots[j][i];
          return sm;
        }(),
        highest_root() - a);
    internal_check(diff.has_value(), "root outside simple span");
    for (const Rat& c : *diff)
      internal_check(c >= Rat(0), "highest root not dominance-maximal");
  }
  for (const Vec& c : positive_coroots)
    internal_check(is_integral(c) && in_cocharacter_lattice(c),
                   "coroot not in the cocharacter lattice");
  for (std::size_t j = 0; j < lattice_basis.cols; ++j)
    for (const Vec& a : positive_roots)
      internal_check(dot(a, lattice_basis.col(j)).is_integer(),
                     "root not integral on the cocharacter lattice");
  internal_check(is_zero(vertices[0]), "vertex 0 must be the origin");
  for (const Vec& v : vertices) {
    for (const Vec& a : simple_roots)
      internal_check(dot(a, v) >= Rat(0), "vertex outside the dominant cone");
    internal_check(dot(highest_root(), v) <= Rat(1), "vertex beyond the far wall");
  }
  for (const Vec& a : positive_roots) {
    const Rat p = dot(a, barycenter);
    internal_check(Rat(0) < p && p < Rat(1), "barycenter not interior");
  }
  if (!omega_functional.empty())
    for (std::size_t j = 0; j < lattice_basis.cols; ++j)
      internal_check(dot(omega_functional, lattice_basis.col(j)).is_integer(),
                     "omega functional not integral");
}

std::shared_ptr<const RootDatum> build_root_datum(Family f, int size);

namespace detail {

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= std::uint64_t(i);
  return r;
}

inline void build_type_a_roots(RootDatum& d, int n) {
  for (int i = 0; i + 1 < n; ++i) {
    d.simple_roots.push_back(unit(std::size_t(n), std::size_t(i)) -
                             unit(std::size_t(n), std::size_t(i + 1)));
  }
  d.simple_coroots = d.simple_roots;
  d.positive_roots = d.simple_roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (j == i + 1) continue;
      d.positive_roots.push_back(unit(std::size_t(n), std::size_t(i)) -
                                 unit(std::size_t(n), std::size_t(j)));
    }
  d.positive_coroots = d.positive_roots;
  for (std::size_t k = 0; k < d.positive_roots.size(); ++k)
    if (d.positive_roots[k] ==
        unit(std::size_t(n), 0) - unit(std::size_t(n), std::size_t(n - 1)))
      d.highest_index = k;
}

}  // namespace detail

inline std::shared_ptr<const RootDatum> build_root_datum(Family f, int size) {
  auto dp = std::make_shared<RootDatum>();
  RootDatum& d = *dp;
  d.family = f;
  d.size = size;
  const auto n = std::size_t(size);
  using detail::unit;
  switch (f) {
    case Family::GL: {
      require(size >= 2 && size <= 9, "GL(n) supported for 2 <= n <= 9");
      d.ambient = n;
      detail::build_type_a_roots(d, size);
      d.lattice_basis = Mat::identity(n);
      d.vertices.push_back(zero_vec(n));
      for (int i = 1; i < size; ++i) {
        Vec w = zero_vec(n);
        for (int j = 0; j < i; ++j) w[std::size_t(j)] = Rat(1);
        d.vertices.push_back(w);
      }
      d.omega_functional = Vec(n, Rat(1));
      d.omega_mod = 0;
      d.weyl_order = detail::factorial(size);
      d.name = "GL(" + std::to_string(size) + ")";
      break;
    }
    case Family::A: {
      require(size >= 2 && size <= 9, "A(n-1) supported for 2 <= n <= 9");
      d.ambient = n;
      detail::build_type_a_roots(d, size);
      d.lattice_basis = Mat::from_columns(d.simple_coroots);
      d.weyl_order = detail::factorial(size);
      d.name = "A" + std::to_string(size - 1);
      break;
    }
    case Family::B: {
      require(size >= 2 && size <= 8, "B(n) supported for 2 <= n <= 8");
      d.ambient = n;
      for (int i = 0; i + 1 < size; ++i) {
        d.simple_roots.push_back(unit(n, std::size_t(i)) - unit(n, std::size_t(i + 1)));
        d.simple_coroots.push_back(d.simple_roots.back());
      }
      d.simple_roots.push_back(unit(n, n - 1));
      d.simple_coroots.push_back(unit(n, n - 1, 2));
      d.positive_roots = d.simple_roots;
      d.positive_coroots = d.simple_coroots;
      for (int i = 0; i < size; ++i) {
        for (int j = i + 1; j < size; ++j) {
          if (j != i + 1) {
            d.positive_roots.push_back(unit(n, std::size_t(i)) - unit(n, std::size_t(j)));
            d.positive_coroots.push_back(d.positive_roots.back());
          }
          d.positive_roots.push_back(unit(n, std::size_t(i)) + unit(n, std::size_t(j)));
          d.positive_coroots.push_back(d.positive_roots.back());
          if (d.positive_roots.back() == unit(n, 0) + unit(n, 1))
            d.highest_index = d.positive_roots.size() - 1;
        }
        if (i != size - 1) {
          d.positive_roots.push_back(unit(n, std::size_t(i)));
          d.positive_coroots.push_back(unit(n, std::size_t(i), 2));
        }
      }
      d.lattice_basis = Mat::identity(n);
      d.omega_functional = Vec(n, Rat(1));
      d.omega_mod = 2;
      d.weyl_order = (std::uint64_t(1) << size) * detail::factorial(size);
      d.name = "B" + std::to_string(size);
      break;
    }
    case Family::C: {
      require(size >= 2 && size <= 8, "C(n) supported for 2 <= n <= 8");
      d.ambient = n;
      for (int i = 0; i + 1 < size; ++i) {
        d.simple_roots.push_back(unit(n, std::size_t(i)) - unit(n, std::size_t(i + 1)));
        d.simple_coroots.push_back(d.simple_roots.back());
      }
      d.simple_roots.push_back(unit(n, n - 1, 2));
      d.simple_coroots.push_back(unit(n, n - 1));
      d.positive_roots = d.simple_roots;
      d.positive_coroots = d.simple_coroots;
      for (int i = 0; i < size; ++i) {
        for (int j = i + 1; j < size; ++j) {
          if (j != i + 1) {
            d.positive_roots.push_back(unit(n, std::size_t(i)) - unit(n, std::size_t(j)));
            d.positive_coroots.push_back(d.positive_roots.back());
          }
          d.positive_roots.push_back(unit(n, std::size_t(i)) + unit(n, std::size_t(j)));
          d.positive_coroots.push_back(d.positive_roots.back());
        }
        if (i != size - 1) {
          d.positive_roots.push_back(unit(n, std::size_t(i), 2));
          d.positive_coroots.push_back(unit(n, std::size_t(i)));
          if (i == 0) d.highest_index = d.positive_roots.size() - 1;
        }
      }
      d.lattice_basis = Mat::identity(n);
      d.weyl_order = (std::uint64_t(1) << size) * detail::factorial(size);
      d.name = "C" + std::to_string(size);
      break;
    }
    case Family::D: {
      require(size >= 3 && size <= 8, "D(n) supported for 3 <= n <= 8");
      d.ambient = n;
      for (int i = 0; i + 1 < size; ++i) {
        d.simple_roots.push_back(unit(n, std::size_t(i)) - unit(n, std::size_t(i + 1)));
        d.simple_coroots.push_back(d.simple_roots.back());
      }
      d.simple_roots.push_back(unit(n, n - 2) + unit(n, n - 1));
      d.simple_coroots.push_back(d.simple_roots.back());
      d.positive_roots = d.simple_roots;
      d.positive_coroots = d.simple_coroots;
      for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
          if (j != i + 1) {
            d.positive_roots.push_back(unit(n, std::size_t(i)) - unit(n, std::size_t(j)));
            d.positive_coroots.push_back(d.positive_roots.back());
          }
          if (!(i == size - 2 && j == size - 1)) {
            d.positive_roots.push_back(unit(n, std::size_t(i)) + unit(n, std::size_t(j)));
            d.positive_coroots.push_back(d.positive_roots.back());
          }
          if (d.positive_roots.back() == unit(n, 0) + unit(n, 1))
            d.highest_index = d.positive_roots.size() - 1;
        }
      d.lattice_basis = Mat::identity(n);
      d.omega_functional = Vec(n, Rat(1));
      d.omega_mod = 2;
      d.weyl_order = (std::uint64_t(1) << (size - 1)) * detail::factorial(size);
      d.name = "D" + std::to_string(size);
      break;
    }
    case Family::F4: {
      require(size == 4, "F4 has size 4");
      d.ambient = 4;
      const Vec e1 = unit(4, 0), e2 = unit(4, 1), e3 = unit(4, 2), e4 = unit(4, 3);
      const Rat h(1, 2);
      d.simple_roots = {e2 - e3, e3 - e4, e4, h * (e1 - e2 - e3 - e4)};
      d.simple_coroots = {e2 - e3, e3 - e4, Rat(2) * e4, e1 - e2 - e3 - e4};
      d.positive_roots = d.simple_roots;
      d.positive_coroots = d.simple_coroots;
      auto add = [&](const Vec& a, const Vec& c) {
        for (const Vec& s : d.simple_roots)
          if (s == a) return;
        d.positive_roots.push_back(a);
        d.positive_coroots.push_back(c);
      };
      for (int i = 0; i < 4; ++i) add(unit(4, std::size_t(i)), unit(4, std::size_t(i), 2));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          add(unit(4, std::size_t(i)) - unit(4, std::size_t(j)),
              unit(4, std::size_t(i)) - unit(4, std::size_t(j)));
          add(unit(4, std::size_t(i)) + unit(4, std::size_t(j)),
              unit(4, std::size_t(i)) + unit(4, std::size_t(j)));
        }
      for (int s2 = -1; s2 <= 1; s2 += 2)
        for (int s3 = -1; s3 <= 1; s3 += 2)
          for (int s4 = -1; s4 <= 1; s4 += 2) {
            Vec a = h * (e1 + Rat(s2) * e2 + Rat(s3) * e3 + Rat(s4) * e4);
            add(a, Rat(2) * a);
          }
      for (std::size_t k = 0; k < d.positive_roots.size(); ++k)
        if (d.positive_roots[k] == e1 + e2) d.highest_index = k;
      d.lattice_basis =
          Mat::from_columns({e1 - e2, e2 - e3, e3 - e4, e3 + e4});
      d.weyl_order = 1152;
      d.name = "F4";
      break;
    }
    case Family::G2: {
      require(size == 2, "G2 has size 2");
      d.ambient = 3;
      const Vec e1 = unit(3, 0), e2 = unit(3, 1), e3 = unit(3, 2);
      const Rat t(1, 3);
      // long simple (1,-1,0); short simple (-1,2,-1)/3; integral coroots
      d.simple_roots = {e1 - e2, t * (Rat(-1) * e1 + Rat(2) * e2 - e3)};
      d.simple_coroots = {e1 - e2, Rat(-1) * e1 + Rat(2) * e2 - e3};
      d.positive_roots = d.simple_roots;
      d.positive_coroots = d.simple_coroots;
      auto addg = [&](const Vec& a, const Vec& c) {
        d.positive_roots.push_back(a);
        d.positive_coroots.push_back(c);
      };
      addg(t * (Rat(2) * e1 - e2 - e3), Rat(2) * e1 - e2 - e3);        // a1+a2
      addg(t * (e1 + e2 - Rat(2) * e3), e1 + e2 - Rat(2) * e3);        // a1+2a2
      addg(e2 - e3, e2 - e3);                                          // a1+3a2
      addg(e1 - e3, e1 - e3);                                          // 2a1+3a2
      d.highest_index = d.positive_roots.size() - 1;
      d.lattice_basis = Mat::from_columns({e1 - e2, e2 - e3});
      d.weyl_order = 12;
      d.name = "G2";
      break;
    }
    case Family::GSp: {
      require(size >= 4 && size % 2 == 0 && size <= 16,
              "GSp(2n) supported for even size, 4 <= 2n <= 16");
      const int half = size / 2;
      d.ambient = n;
      const Rat h(1, 2);
      auto mirror = [&](int i) { return std::size_t(size - 1 - i); };
      for (int i = 0; i + 1 < half; ++i) {
        Vec a = h * (unit(n, std::size_t(i)) - unit(n, std::size_t(i + 1)) +
                     unit(n, mirror(i + 1)) - unit(n, mirror(i)));
        d.simple_roots.push_back(a);
        d.simple_coroots.push_back(Rat(2) * a);
      }
      d.simple_roots.push_back(unit(n, std::size_t(half - 1)) - unit(n, mirror(half - 1)));
      d.simple_coroots.push_back(d.simple_roots.back());
      d.positive_roots = d.simple_roots;
      d.positive_coroots = d.simple_coroots;
      auto addp = [&](const Vec& a, const Vec& c) {
        for (const Vec& s : d.simple_roots)
          if (s == a) return;
        d.positive_roots.push_back(a);
        d.positive_coroots.push_back(c);
      };
      for (int i = 0; i < half; ++i)
        addp(unit(n, std::size_t(i)) - unit(n, mirror(i)),
             unit(n, std::size_t(i)) - unit(n, mirror(i)));
      for (int i = 0; i < half; ++i)
        for (int j = i + 1; j < half; ++j) {
          Vec minus = h * (unit(n, std::size_t(i)) - unit(n, std::size_t(j)) +
                           unit(n, mirror(j)) - unit(n, mirror(i)));
          Vec plus = h * (unit(n, std::size_t(i)) - unit(n, mirror(j)) +
                          unit(n, std::size_t(j)) - unit(n, mirror(i)));
          addp(minus, Rat(2) * minus);
          addp(plus, Rat(2) * plus);
        }
      for (std::size_t k = 0; k < d.positive_roots.size(); ++k)
        if (d.positive_roots[k] == unit(n, 0) - unit(n, mirror(0)))
          d.highest_index = k;
      {
        std::vector<Vec> cols;
        for (int i = 0; i < half; ++i)
          cols.push_back(unit(n, std::size_t(i)) - unit(n, mirror(i)));
        Vec wn = zero_vec(n);
        for (int i = 0; i < half; ++i) wn[std::size_t(i)] = Rat(1);
        cols.push_back(wn);
        d.lattice_basis = Mat::from_columns(cols);
      }
      d.vertices.push_back(zero_vec(n));
      for (int i = 1; i <= half; ++i) {
        // eta_i = (omega_i + omega_{2n-i})/2
        Vec v = zero_vec(n);
        for (int j = 0; j < size; ++j) {
          int c = (j < i ? 1 : 0) + (j < size - i ? 1 : 0);
          v[std::size_t(j)] = Rat(c, 2);
        }
        d.vertices.push_back(v);
      }
      d.omega_functional = unit(n, 0) + unit(n, n - 1);
      d.omega_mod = 0;
      d.weyl_order = (std::uint64_t(1) << half) * detail::factorial(half);
      d.name = "GSp(" + std::to_string(size) + ")";
      break;
    }
  }
  d.finish();
  return dp;
}

// JSON description of a datum (family, rank, roots as [num,den] pair arrays)
std::string describe_json(const RootDatum& d);

inline std::uint64_t datum_fingerprint(const RootDatum& d) {
  std::uint64_t h = 14695981039346656037ull;
  auto mixv = [&](const Vec& v) {
    h ^= vec_hash(v);
    h *= 1099511628211ull;
  };
  for (const Vec& a : d.positive_roots) mixv(a);
  for (const Vec& c : d.positive_coroots) mixv(c);
  for (std::size_t j = 0; j < d.lattice_basis.cols; ++j) mixv(d.lattice_basis.col(j));
  for (const Vec& v : d.vertices) mixv(v);
  return h;
}

} // namespace alcove
