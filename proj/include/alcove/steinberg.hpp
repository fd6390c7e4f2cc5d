#pragma once

// Root-datum automorphisms (the coordinate flip x -> -reverse(x) on type A
// ambients), the fixed-point root system with its affine Weyl group, the
// embedding of fixed-side elements and alcoves into the host, and the
// B_n-inside-C_n identification used for the non-inheritance examples.

#include <optional>

#include "alcove/musets.hpp"

namespace alcove {

enum class ThetaKind { GlFlip };

struct ThetaAutomorphism {
  std::shared_ptr<const RootDatum> host;
  std::shared_ptr<const RootDatum> fixed;
  Mat action;                        // order-2 isometry preserving roots and base
  std::vector<Vec> fixed_space_basis;
  // host image of each fixed simple reflection (the longest element of the
  // parabolic generated by the corresponding orbit of host simple roots)
  std::vector<FiniteWeylElement> simple_images;
  // a host positive root with average exactly the fixed positive root
  std::vector<int> exact_preimage;
  // per host positive root: (fixed positive index, average is half a root)
  std::vector<std::pair<int, bool>> host_classification;

  Vec apply(const Vec& v) const { return action.apply(v); }
};

namespace detail {

inline Mat flip_matrix(std::size_t m) {
  Mat t(m, m);
  for (std::size_t i = 0; i < m; ++i) t.at(i, m - 1 - i) = Rat(-1);
  return t;
}

// highest root of the (possibly reducible) root subsystem spanned by an
// orbit of simple roots: any maximal element in the orbit-span order
inline Vec orbit_highest_root(const RootDatum& host, const std::vector<Vec>& pi) {
  Mat span(host.ambient, pi.size());
  for (std::size_t j = 0; j < pi.size(); ++j)
    for (std::size_t i = 0; i < host.ambient; ++i) span.at(i, j) = pi[j][i];
  std::vector<Vec> in_span;
  for (const Vec& r : host.positive_roots)
    if (solve(span, r)) in_span.push_back(r);
  internal_check(!in_span.empty(), "empty orbit subsystem");
  for (const Vec& cand : in_span) {
    bool maximal = true;
    for (const Vec& other : in_span) {
      auto c = solve(span, other - cand);
      bool ge = c.has_value();
      if (c)
        for (const Rat& x : *c) ge = ge && x >= Rat(0);
      if (ge && !(other == cand)) { maximal = false; break; }
    }
    if (maximal) return cand;
  }
  internal_check(false, "no maximal root in orbit subsystem");
  return {};
}

}  // namespace detail

// The folded datum computed from scratch; host must carry a type A root
// system (ambient m, roots e_i - e_j) with the flip x -> -reverse(x).
inline ThetaAutomorphism build_theta(std::shared_ptr<const RootDatum> host_ptr,
                                     ThetaKind kind = ThetaKind::GlFlip) {
  require(kind == ThetaKind::GlFlip, "unsupported automorphism kind");
  const RootDatum& host = *host_ptr;
  require(host.family == Family::GL || host.family == Family::A,
          "the flip automorphism needs a type A host");
  require((host.family == Family::GL && host.size % 2 == 0) ||
              host.family == Family::A,
          "GL hosts must have even size");
  require(host.size >= 3 || host.family == Family::GL,
          "the fixed datum needs rank at least one");

  ThetaAutomorphism th;
  th.host = host_ptr;
  th.action = detail::flip_matrix(host.ambient);

  // action must preserve the inner product, the roots, and the base
  for (const Vec& a : host.positive_roots)
    internal_check(host.is_root(th.apply(a)), "flip does not preserve the roots");
  for (const Vec& a : host.simple_roots) {
    const Vec img = th.apply(a);
    bool in_base = false;
    for (const Vec& b : host.simple_roots) in_base |= (b == img);
    internal_check(in_base, "flip does not preserve the base");
  }

  // orbit averages, dropping those that are half of another average
  std::set<Vec, VecLess> averages, positive_averages;
  for (std::size_t i = 0; i < host.positive_roots.size(); ++i) {
    const Vec& beta = host.positive_roots[i];
    const Vec avg = Rat(1, 2) * (beta + th.apply(beta));
    averages.insert(avg);
    averages.insert(-avg);
    positive_averages.insert(avg);
  }
  std::vector<Vec> fixed_positive;
  for (const Vec& v : positive_averages)
    if (!averages.count(Rat(2) * v)) fixed_positive.push_back(v);

  // simple roots from the flip orbits on the host base
  std::vector<Vec> fixed_simple;
  {
    std::set<Vec, VecLess> used;
    for (const Vec& a : host.simple_roots) {
      if (used.count(a)) continue;
      used.insert(a);
      used.insert(th.apply(a));
      std::vector<Vec> pi{a};
      if (!(th.apply(a) == a)) pi.push_back(th.apply(a));
      const Vec top = detail::orbit_highest_root(host, pi);
      fixed_simple.push_back(Rat(1, 2) * (top + th.apply(top)));
    }
  }
  // order fixed simples along the first half of the coordinates, so the
  // labels match the C-family convention (long simple root last)
  std::sort(fixed_simple.begin(), fixed_simple.end(),
            [](const Vec& x, const Vec& y) { return vec_cmp(x, y) > 0; });
  for (const Vec& s : fixed_simple) {
    bool found = false;
    for (const Vec& v : fixed_positive) found |= (v == s);
    internal_check(found, "orbit simple average is not a fixed root");
  }

  const std::size_t m = host.ambient;
  const bool gl_host = host.family == Family::GL;
  if (gl_host) {
    // the folded datum of GL(2n) is the symplectic similitude datum;
    // assert the generic fold reproduces it exactly, then share it
    auto gsp = build_root_datum(Family::GSp, host.size);
    internal_check(gsp->positive_roots.size() == fixed_positive.size(),
                   "fold size disagrees with the symplectic datum");
    for (const Vec& v : fixed_positive)
      internal_check(gsp->is_positive_root(v),
                     "fold root missing from the symplectic datum");
    for (std::size_t i = 0; i < fixed_simple.size(); ++i)
      internal_check(gsp->simple_roots[i] == fixed_simple[i],
                     "fold base disagrees with the symplectic datum");
    th.fixed = std::move(gsp);
  } else {
    auto fx = std::make_shared<RootDatum>();
    fx->family = Family::C;
    fx->size = int(fixed_simple.size());
    fx->ambient = m;
    fx->name = "C" + std::to_string(fixed_simple.size()) + "[" + host.name + "]";
    fx->simple_roots = fixed_simple;
    for (const Vec& a : fixed_simple)
      fx->simple_coroots.push_back(Rat(2) / dot(a, a) * a);
    fx->positive_roots = fixed_simple;
    fx->positive_coroots = fx->simple_coroots;
    for (const Vec& v : fixed_positive) {
      bool is_simple = false;
      for (const Vec& s : fixed_simple) is_simple |= (s == v);
      if (is_simple) continue;
      fx->positive_roots.push_back(v);
      fx->positive_coroots.push_back(Rat(2) / dot(v, v) * v);
    }
    {
      const Vec h = host.highest_root();
      internal_check(th.apply(h) == h, "host highest root must be fixed");
      for (std::size_t i = 0; i < fx->positive_roots.size(); ++i)
        if (fx->positive_roots[i] == h) fx->highest_index = i;
      internal_check(fx->positive_roots[fx->highest_index] == h,
                     "host highest root must survive the fold");
    }
    {
      // lattice { x in X_*(host) : x = flip(x) }: e_i - e_{m+1-i} pairs
      std::vector<Vec> cols;
      for (std::size_t i = 0; 2 * i + 1 < m; ++i) {
        Vec f = zero_vec(m);
        f[i] = Rat(1);
        f[m - 1 - i] = Rat(-1);
        cols.push_back(f);
      }
      fx->lattice_basis = Mat::from_columns(cols);
      for (std::size_t j = 0; j < fx->lattice_basis.cols; ++j) {
        const Vec col = fx->lattice_basis.col(j);
        internal_check(host.in_cocharacter_lattice(col) &&
                           th.apply(col) == col,
                       "fixed lattice basis invalid");
      }
    }
    const std::size_t n = fixed_simple.size();
    fx->weyl_order = (std::uint64_t(1) << n) * detail::factorial(int(n));
    fx->finish();
    th.fixed = std::move(fx);
  }

  // fixed space basis: the lattice basis of the fixed datum; every column
  // satisfies x - flip(x) central in the host
  for (std::size_t j = 0; j < th.fixed->lattice_basis.cols; ++j) {
    const Vec col = th.fixed->lattice_basis.col(j);
    const Vec drift = col - th.apply(col);
    for (const Vec& a : host.simple_roots)
      internal_check(dot(a, drift).is_zero(), "fixed basis drifts off center");
    th.fixed_space_basis.push_back(col);
  }

  // host images of the fixed simple reflections
  {
    std::set<Vec, VecLess> used;
    std::vector<FiniteWeylElement> images;
    for (const Vec& a : host.simple_roots) {
      if (used.count(a)) continue;
      const Vec b = th.apply(a);
      used.insert(a);
      used.insert(b);
      Mat img = RootDatum::reflection_mat(a, host.coroot_of(a));
      if (!(b == a)) {
        const Mat sb = RootDatum::reflection_mat(b, host.coroot_of(b));
        img = dot(a, host.coroot_of(b)).is_zero() ? img.mul(sb)
                                                  : img.mul(sb).mul(img);
      }
      images.push_back(host.make_weyl(img));
    }
    // align with the fixed simple order: match by action on the fixed space
    th.simple_images.resize(th.fixed->rank());
    for (const FiniteWeylElement& im : images) {
      int match = -1;
      for (std::size_t i = 0; i < th.fixed->rank(); ++i) {
        const Mat refl = RootDatum::reflection_mat(th.fixed->simple_roots[i],
                                                   th.fixed->simple_coroots[i]);
        bool same = true;
        for (const Vec& f : th.fixed_space_basis)
          same = same && im.act(f) == refl.apply(f);
        if (same) { match = int(i); break; }
      }
      internal_check(match >= 0, "orbit reflection does not restrict to a fixed one");
      th.simple_images[std::size_t(match)] = im;
    }
    for (const FiniteWeylElement& im : th.simple_images)
      internal_check(im.mat.rows == m, "a fixed simple reflection has no host image");
  }

  // preimage tables
  th.exact_preimage.assign(th.fixed->positive_roots.size(), -1);
  th.host_classification.resize(host.positive_roots.size());
  for (std::size_t j = 0; j < host.positive_roots.size(); ++j) {
    const Vec avg = Rat(1, 2) * (host.positive_roots[j] +
                                 th.apply(host.positive_roots[j]));
    auto cls = th.fixed->classify_root(avg);
    if (cls) {
      internal_check(cls->second > 0, "positive average must be positive");
      th.host_classification[j] = {cls->first, false};
      if (th.exact_preimage[std::size_t(cls->first)] < 0)
        th.exact_preimage[std::size_t(cls->first)] = int(j);
    } else {
      auto half = th.fixed->classify_root(Rat(2) * avg);
      internal_check(half.has_value() && half->second > 0,
                     "average is neither a fixed root nor half of one");
      th.host_classification[j] = {half->first, true};
    }
  }
  for (int p : th.exact_preimage)
    internal_check(p >= 0, "every fixed root needs an exact preimage");
  return th;
}

// orbit average of a host root with its classification
struct BarTheta {
  Vec average;
  bool half = false;  // average equals half of the fixed root below
  Vec fixed_root;
};

inline BarTheta bar_theta(const ThetaAutomorphism& th, const Vec& alpha) {
  require(th.host->is_root(alpha), "not a root of the host datum");
  BarTheta out;
  out.average = Rat(1, 2) * (alpha + th.apply(alpha));
  if (auto cls = th.fixed->classify_root(out.average)) {
    out.half = false;
    out.fixed_root = out.average;
    (void)cls;
  } else {
    auto half = th.fixed->classify_root(Rat(2) * out.average);
    internal_check(half.has_value(),
                   "average is neither a fixed root nor half of one");
    out.half = true;
    out.fixed_root = Rat(2) * out.average;
  }
  return out;
}

// the same affine map, expressed in the host group
inline ExtAffineElement embed_element(const ThetaAutomorphism& th,
                                      const ExtAffineElement& x_fixed) {
  require(x_fixed.datum == th.fixed.get(), "element not over the fixed datum");
  require(th.host->in_cocharacter_lattice(x_fixed.translation),
          "fixed translation escapes the host lattice");
  FiniteWeylElement w = th.host->weyl_identity();
  for (int letter : x_fixed.finite.word)
    w = th.host->weyl_compose(w, th.simple_images[std::size_t(letter - 1)]);
  return {th.host.get(), x_fixed.translation, w};
}

// is the host element in the embedded fixed extended group
inline bool in_fixed_subgroup(const ThetaAutomorphism& th,
                              const ExtAffineElement& x_host) {
  if (!th.fixed->in_cocharacter_lattice(x_host.translation)) return false;
  return th.action.mul(x_host.finite.mat) == x_host.finite.mat.mul(th.action);
}

// inverse of embed_element on its image
inline std::optional<ExtAffineElement> restrict_element(
    const ThetaAutomorphism& th, const ExtAffineElement& x_host) {
  if (!in_fixed_subgroup(th, x_host)) return std::nullopt;
  for (const FiniteWeylElement& w : th.fixed->weyl().elems) {
    bool same = true;
    for (const Vec& f : th.fixed_space_basis)
      same = same && w.act(f) == x_host.finite.act(f);
    if (same) {
      ExtAffineElement out{th.fixed.get(), x_host.translation, w};
      return out;
    }
  }
  return std::nullopt;
}

// A cap V^fixed, as a fixed-datum alcove when nonempty
inline std::optional<Alcove> restrict_alcove(const ThetaAutomorphism& th,
                                             const Alcove& host_alcove) {
  const ExtAffineElement u = element_of_alcove(*th.host, host_alcove);
  if (!in_fixed_subgroup(th, u)) return std::nullopt;
  return alcove_from_point(*th.fixed, u.act(th.fixed->barycenter));
}

// both orders on a pair of fixed-datum elements: the fixed datum's own
// Bruhat order, and the host order of the embedded elements
inline std::pair<bool, bool> check_bruhat_inheritance(
    const ThetaAutomorphism& th, const ExtAffineElement& x_fixed,
    const ExtAffineElement& y_fixed) {
  const bool fixed_order = bruhat_leq(x_fixed, y_fixed);
  const bool host_order =
      bruhat_leq(embed_element(th, x_fixed), embed_element(th, y_fixed));
  return {fixed_order, host_order};
}

// Adm of the fixed group computed through the host: host-permissible
// elements that lie in the embedded fixed group, pulled back
inline ExtSet adm_theta_via_perm(const ThetaAutomorphism& th, const Vec& mu,
                                 unsigned threads = 0) {
  require(th.fixed->is_dominant(mu), "mu must be dominant");
  require(th.fixed->in_cocharacter_lattice(mu),
          "mu must lie in the fixed cocharacter lattice");
  const ExtSet host_perm = enumerate_perm(*th.host, mu, threads);
  ExtSet out;
  for (const ExtAffineElement& x : host_perm) {
    auto back = restrict_element(th, x);
    if (back) out.insert(*back);
  }
  return out;
}

// --------------------------------------------------------------------------
// the B_n inside C_n identification: both data act on the same ambient
// space and share the finite Weyl group, and the extended B_n group equals
// the affine C_n group as a set of affine transformations

inline ExtAffineElement bn_to_cn(const RootDatum& cn, const ExtAffineElement& x_bn) {
  require(x_bn.datum->family == Family::B && cn.family == Family::C &&
              x_bn.datum->size == cn.size,
          "expected a B(n) element and the C(n) datum of equal rank");
  return reinterpret(cn, x_bn);
}

// embed a C_n element into a type A host through the fold of the host
inline ExtAffineElement cn_to_host(const ThetaAutomorphism& th,
                                   const ExtAffineElement& x_cn) {
  const RootDatum& cn = *x_cn.datum;
  require(cn.family == Family::C && cn.rank() == th.fixed->rank(),
          "rank mismatch with the fixed datum");
  Vec lambda = zero_vec(th.host->ambient);
  for (std::size_t i = 0; i < cn.ambient; ++i)
    lambda = lambda + x_cn.translation[i] * th.fixed_space_basis[i];
  ExtAffineElement fixed_elt = identity_element(*th.fixed);
  for (int letter : x_cn.finite.word) {
    const std::size_t i = std::size_t(letter - 1);
    const ExtAffineElement s{
        th.fixed.get(), zero_vec(th.host->ambient),
        th.fixed->make_weyl(RootDatum::reflection_mat(
            th.fixed->simple_roots[i], th.fixed->simple_coroots[i]))};
    fixed_elt = compose(fixed_elt, s);
  }
  fixed_elt.translation = lambda;
  require(th.fixed->in_cocharacter_lattice(lambda),
          "translation escapes the fixed lattice");
  return embed_element(th, fixed_elt);
}

inline Vec cn_point_to_host(const ThetaAutomorphism& th, const Vec& v) {
  Vec out = zero_vec(th.host->ambient);
  for (std::size_t i = 0; i < v.size(); ++i)
    out = out + v[i] * th.fixed_space_basis[i];
  return out;
}

} // namespace alcove
