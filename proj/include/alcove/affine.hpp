#pragma once

// The extended affine Weyl group X_* x| W0 acting on the ambient space by
// v -> lambda + w(v).  Length and the Omega-decomposition are computed from
// alcove coordinates (the per-positive-root floors of the image of the
// base-alcove barycenter); the Bruhat order is the descent recursion on the
// affine Coxeter part, memoized per datum.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "alcove/root_datum.hpp"

namespace alcove {

struct ExtAffineElement {
  const RootDatum* datum = nullptr;
  Vec translation;            // element of the cocharacter lattice
  FiniteWeylElement finite;

  Vec act(const Vec& v) const { return translation + finite.act(v); }
  bool operator==(const ExtAffineElement& o) const {
    return translation == o.translation && finite.mat == o.finite.mat;
  }
};

struct ExtLess {
  bool operator()(const ExtAffineElement& x, const ExtAffineElement& y) const {
    const int c = vec_cmp(x.translation, y.translation);
    if (c != 0) return c < 0;
    return vec_cmp(x.finite.mat.a, y.finite.mat.a) < 0;
  }
};
using ExtSet = std::set<ExtAffineElement, ExtLess>;

inline ExtAffineElement identity_element(const RootDatum& d) {
  return {&d, zero_vec(d.ambient), d.make_weyl(Mat::identity(d.ambient))};
}
inline ExtAffineElement translation_element(const RootDatum& d, const Vec& lambda) {
  require(d.in_cocharacter_lattice(lambda),
          "translation not in the cocharacter lattice: " + vec_str(lambda));
  return {&d, lambda, d.make_weyl(Mat::identity(d.ambient))};
}
inline ExtAffineElement from_finite(const RootDatum& d, const FiniteWeylElement& w) {
  return {&d, zero_vec(d.ambient), w};
}

inline void check_same_datum(const ExtAffineElement& x, const ExtAffineElement& y) {
  require(x.datum == y.datum, "elements belong to different root data");
}

inline ExtAffineElement compose(const ExtAffineElement& x, const ExtAffineElement& y) {
  check_same_datum(x, y);
  return {x.datum, x.translation + x.finite.act(y.translation),
          x.datum->weyl_compose(x.finite, y.finite)};
}
inline ExtAffineElement inverse(const ExtAffineElement& x) {
  FiniteWeylElement wi = x.datum->weyl_inverse(x.finite);
  return {x.datum, -wi.act(x.translation), wi};
}

// x reinterpreted over another datum acting on the same ambient space
inline ExtAffineElement reinterpret(const RootDatum& d, const ExtAffineElement& x) {
  require(x.translation.size() == d.ambient, "reinterpret: ambient mismatch");
  require(d.in_cocharacter_lattice(x.translation),
          "reinterpret: translation not in the target lattice");
  for (const Vec& a : d.positive_roots)
    require(d.is_root(x.finite.act(a)),
            "reinterpret: linear part does not permute the target roots");
  return {&d, x.translation, d.make_weyl(x.finite.mat)};
}

// the affine simple reflection s_i; label 0 is the reflection in the wall
// <highest root, x> = 1, labels 1..rank the finite simple reflections
inline ExtAffineElement affine_generator(const RootDatum& d, int i) {
  require(i >= 0 && i <= int(d.rank()), "generator label out of range");
  if (i == 0)
    return {&d, d.highest_coroot(),
            d.make_weyl(RootDatum::reflection_mat(d.highest_root(), d.highest_coroot()))};
  return {&d, zero_vec(d.ambient),
          d.make_weyl(d.simple_reflection_mat(std::size_t(i - 1)))};
}

inline ExtAffineElement product_of_word(const RootDatum& d, const std::vector<int>& word) {
  ExtAffineElement x = identity_element(d);
  for (int i : word) x = compose(x, affine_generator(d, i));
  return x;
}

// per-positive-root alcove coordinates k_alpha of x(A0)
inline std::vector<std::int64_t> alcove_coords_of(const ExtAffineElement& x) {
  const RootDatum& d = *x.datum;
  const Vec p = x.act(d.barycenter);
  std::vector<std::int64_t> k(d.positive_roots.size());
  for (std::size_t i = 0; i < d.positive_roots.size(); ++i)
    k[i] = dot(d.positive_roots[i], p).floor();
  return k;
}

inline std::size_t length(const ExtAffineElement& x) {
  std::size_t l = 0;
  for (std::int64_t k : alcove_coords_of(x)) l += std::size_t(k < 0 ? -k : k);
  return l;
}

// x = (W_aff part) * omega with omega stabilizing the base alcove.
// The walk repeatedly crosses the least-label wall of A0 separating A0
// from the current alcove; its letters are the canonical reduced word of
// the W_aff part.
struct OmegaDecomposition {
  ExtAffineElement waff_part;
  ExtAffineElement omega;
  std::vector<int> word;  // canonical reduced word of waff_part
};

inline OmegaDecomposition omega_decompose(const ExtAffineElement& x) {
  const RootDatum& d = *x.datum;
  Vec p = x.act(d.barycenter);
  ExtAffineElement u = identity_element(d);
  std::vector<int> letters;
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
    letters.push_back(sep);
  }
  ExtAffineElement omega = compose(u, x);
  internal_check(length(omega) == 0, "omega component has positive length");
  return {inverse(u), omega, letters};
}

inline bool in_waff(const ExtAffineElement& x) {
  return x.datum->in_coroot_lattice(x.translation);
}

inline ExtAffineElement omega_component(const ExtAffineElement& x) {
  return omega_decompose(x).omega;
}

inline std::vector<int> reduced_word(const ExtAffineElement& x) {
  OmegaDecomposition dec = omega_decompose(x);
  require(dec.omega == identity_element(*x.datum),
          "reduced words exist only for elements of the affine Weyl group");
  return dec.word;
}

// ---------------------------------------------------------------------------
// Bruhat order

namespace detail {

inline void append_i64(std::string& s, std::int64_t v) {
  for (int b = 0; b < 8; ++b) s.push_back(char((v >> (8 * b)) & 0xff));
}
inline std::string bruhat_key(const ExtAffineElement& x, const ExtAffineElement& y) {
  std::string s;
  s.reserve((x.translation.size() + x.finite.mat.a.size() * 2) * 16 + 16);
  for (const auto& e : {std::cref(x), std::cref(y)}) {
    for (const Rat& r : e.get().translation) {
      append_i64(s, r.num);
      append_i64(s, r.den);
    }
    for (const Rat& r : e.get().finite.mat.a) {
      append_i64(s, r.num);
      append_i64(s, r.den);
    }
  }
  return s;
}

// least label s with l(s y) < l(y), for y != identity in W_aff
inline int least_left_descent(const ExtAffineElement& y) {
  const RootDatum& d = *y.datum;
  const Vec p = y.act(d.barycenter);
  if (dot(d.highest_root(), p) > Rat(1)) return 0;
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (dot(d.simple_roots[i], p) < Rat(0)) return int(i) + 1;
  return -1;
}

inline bool bruhat_waff(const ExtAffineElement& x, const ExtAffineElement& y,
                        std::size_t ly) {
  if (x == y) return true;
  const std::size_t lx = length(x);
  if (lx >= ly) return false;
  const RootDatum& d = *x.datum;
  const std::string key = bruhat_key(x, y);
  {
    std::shared_lock lock(d.bruhat_mutex);
    auto it = d.bruhat_memo.find(key);
    if (it != d.bruhat_memo.end()) return it->second;
  }
  const int s = least_left_descent(y);
  internal_check(s >= 0, "no descent for a positive-length element");
  const ExtAffineElement gen = affine_generator(d, s);
  const ExtAffineElement sy = compose(gen, y);
  const ExtAffineElement sx = compose(gen, x);
  bool r;
  if (length(sx) < lx)
    r = bruhat_waff(sx, sy, ly - 1);
  else
    r = bruhat_waff(x, sy, ly - 1);
  {
    std::unique_lock lock(d.bruhat_mutex);
    d.bruhat_memo.emplace(key, r);
  }
  return r;
}

}  // namespace detail

// Extended Bruhat order: comparable only within one Omega-coset, where it is
// the Coxeter order of the W_aff parts.
inline bool bruhat_leq(const ExtAffineElement& x, const ExtAffineElement& y) {
  check_same_datum(x, y);
  if (x == y) return true;
  const std::size_t lx = length(x), ly = length(y);
  if (lx > ly || (lx == ly)) return false;
  OmegaDecomposition dx = omega_decompose(x), dy = omega_decompose(y);
  if (!(dx.omega == dy.omega)) return false;
  return detail::bruhat_waff(dx.waff_part, dy.waff_part, ly);
}

inline bool finite_bruhat_leq(const RootDatum& d, const FiniteWeylElement& a,
                              const FiniteWeylElement& b) {
  return bruhat_leq(from_finite(d, a), from_finite(d, b));
}

// { x : x <= y }, materialized by deduplicated subword closure of one
// reduced word of the W_aff part.
inline ExtSet lower_interval(const ExtAffineElement& y) {
  const RootDatum& d = *y.datum;
  const std::size_t ly = length(y);
  if (ly > d.guards.max_interval_length)
    throw GuardError("interval length " + std::to_string(ly) + " exceeds guard " +
                     std::to_string(d.guards.max_interval_length));
  OmegaDecomposition dec = omega_decompose(y);
  ExtSet closure;
  closure.insert(identity_element(d));
  for (int letter : dec.word) {
    const ExtAffineElement gen = affine_generator(d, letter);
    ExtSet next = closure;
    for (const ExtAffineElement& e : closure) next.insert(compose(e, gen));
    closure = std::move(next);
  }
  ExtSet out;
  for (const ExtAffineElement& e : closure) out.insert(compose(e, dec.omega));
  return out;
}

// all elements of W_aff with length <= radius
inline std::vector<ExtAffineElement> waff_ball(const RootDatum& d,
                                               std::size_t radius) {
  ExtSet seen;
  std::vector<ExtAffineElement> out;
  std::vector<ExtAffineElement> frontier{identity_element(d)};
  seen.insert(frontier[0]);
  for (std::size_t l = 0; l < radius && !frontier.empty(); ++l) {
    std::vector<ExtAffineElement> next;
    for (const ExtAffineElement& x : frontier) {
      out.push_back(x);
      for (int s = 0; s <= int(d.rank()); ++s) {
        ExtAffineElement xs = compose(x, affine_generator(d, s));
        if (length(xs) == l + 1 && seen.insert(xs).second)
          next.push_back(std::move(xs));
      }
    }
    frontier = std::move(next);
  }
  for (const ExtAffineElement& x : frontier) out.push_back(x);
  return out;
}

// deterministic presentation order: (length, translation, canonical word)
inline std::vector<ExtAffineElement> sorted_elements(const ExtSet& s) {
  std::vector<ExtAffineElement> v(s.begin(), s.end());
  std::vector<std::pair<std::vector<std::int64_t>, std::size_t>> keys(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<std::int64_t> k;
    k.push_back(std::int64_t(length(v[i])));
    for (const Rat& r : v[i].translation) {
      k.push_back(r.num);
      k.push_back(r.den);
    }
    for (int w : v[i].finite.word) k.push_back(w);
    keys[i] = {std::move(k), i};
  }
  std::sort(keys.begin(), keys.end());
  std::vector<ExtAffineElement> out;
  out.reserve(v.size());
  for (auto& [k, i] : keys) out.push_back(v[i]);
  return out;
}

} // namespace alcove
