#pragma once

// The mu-admissible, mu-permissible and mu-strongly-permissible subsets of
// the extended affine Weyl group, their comparison report, and the search
// for order/dominance discrepancy pairs in the finite Weyl group together
// with the permissible-but-not-admissible element they produce.

#include <atomic>
#include <optional>
#include <thread>

#include "alcove/alcoves.hpp"

namespace alcove {

// membership tests reused by enumeration and by spot checks ---------------

struct MuCoset {
  Vec tau_translation;
  FiniteWeylElement tau_winv;  // inverse of the linear part of tau
};

inline MuCoset mu_coset(const RootDatum& d, const Vec& mu) {
  require(d.is_dominant(mu), "mu must be dominant");
  require(d.in_cocharacter_lattice(mu), "mu must lie in the cocharacter lattice");
  const ExtAffineElement tau = omega_component(translation_element(d, mu));
  return {tau.translation, d.weyl_inverse(tau.finite)};
}

inline bool in_mu_coset(const RootDatum& d, const MuCoset& coset,
                        const Vec& lambda, const FiniteWeylElement& w) {
  // (lambda, w) tau^-1 must lie in W_aff = corootlattice x| W0
  const Vec shift =
      lambda - d.weyl_compose(w, coset.tau_winv).act(coset.tau_translation);
  return d.in_coroot_lattice(shift);
}

inline bool perm_member(const RootDatum& d, const Vec& mu,
                        const ExtAffineElement& x) {
  const MuCoset coset = mu_coset(d, mu);
  if (!in_mu_coset(d, coset, x.translation, x.finite)) return false;
  for (const Vec& a : d.vertices)
    if (!conv_membership(d, mu, x.act(a) - a)) return false;
  return true;
}

// --------------------------------------------------------------------------
// enumeration

namespace detail {

// integer lattice points of the coordinate bounding box of Conv(W0 mu)
// that lie in the cocharacter lattice and in the hull itself
inline std::vector<Vec> hull_lattice_points(const RootDatum& d, const Vec& mu) {
  const auto orbit = weyl_orbit(d, mu);
  std::vector<std::int64_t> lo(d.ambient, INT64_MAX), hi(d.ambient, INT64_MIN);
  for (const Vec& p : orbit)
    for (std::size_t i = 0; i < d.ambient; ++i) {
      lo[i] = std::min(lo[i], p[i].floor());
      hi[i] = std::max(hi[i], p[i].floor() + 1);
    }
  std::vector<Vec> out;
  std::vector<std::int64_t> cur(lo);
  for (;;) {
    Vec v(d.ambient);
    for (std::size_t i = 0; i < d.ambient; ++i) v[i] = Rat(cur[i]);
    if (d.in_cocharacter_lattice(v) && conv_membership(d, mu, v)) out.push_back(v);
    std::size_t i = 0;
    while (i < d.ambient && ++cur[i] > hi[i]) {
      cur[i] = lo[i];
      ++i;
    }
    if (i == d.ambient) break;
  }
  return out;
}

inline unsigned thread_count(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace detail

// all x in the coset of t_mu with x(a) - a in Conv(W0 mu) for every base
// vertex a; the scan runs over hull lattice points for the translation part
// and all of W0 for the linear part, in parallel over W0 slices
inline ExtSet enumerate_perm(const RootDatum& d, const Vec& mu,
                             unsigned threads = 0) {
  const MuCoset coset = mu_coset(d, mu);
  const std::vector<Vec> lambdas = detail::hull_lattice_points(d, mu);
  const auto& weyl = d.weyl().elems;
  const unsigned nthreads =
      std::min<unsigned>(detail::thread_count(threads), unsigned(weyl.size()));
  std::vector<std::vector<ExtAffineElement>> found(nthreads);
  std::atomic<std::size_t> next_w{0};
  auto worker = [&](unsigned slot) {
    for (;;) {
      const std::size_t wi = next_w.fetch_add(1);
      if (wi >= weyl.size()) break;
      const FiniteWeylElement& w = weyl[wi];
      std::vector<Vec> moved;  // w(a) - a per vertex
      for (const Vec& a : d.vertices) moved.push_back(w.act(a) - a);
      for (const Vec& lambda : lambdas) {
        if (!in_mu_coset(d, coset, lambda, w)) continue;
        bool ok = true;
        for (std::size_t ai = 1; ok && ai < d.vertices.size(); ++ai)
          ok = conv_membership(d, mu, lambda + moved[ai]);
        if (ok) found[slot].push_back({&d, lambda, w});
      }
    }
  };
  if (nthreads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  ExtSet out;
  for (auto& bucket : found)
    for (auto& x : bucket) out.insert(std::move(x));
  return out;
}

// Adm(mu) = { x : x <= t_lambda for some lambda in the orbit of mu },
// computed by filtering Perm(mu) through the Bruhat tests
inline ExtSet enumerate_adm(const RootDatum& d, const Vec& mu,
                            unsigned threads = 0) {
  const ExtSet perm = enumerate_perm(d, mu, threads);
  std::vector<ExtAffineElement> targets;
  for (const Vec& lam : weyl_orbit(d, mu))
    targets.push_back(translation_element(d, lam));
  ExtSet out;
  for (const ExtAffineElement& x : perm)
    for (const ExtAffineElement& t : targets)
      if (bruhat_leq(x, t)) {
        out.insert(x);
        break;
      }
  return out;
}

// oracle route: union of the subword-closure intervals below each t_lambda
inline ExtSet adm_via_intervals(const RootDatum& d, const Vec& mu) {
  ExtSet out;
  for (const Vec& lam : weyl_orbit(d, mu)) {
    for (const ExtAffineElement& x : lower_interval(translation_element(d, lam)))
      out.insert(x);
  }
  return out;
}

// Perm^st(mu): x such that x(a) lies in B(t_{w mu}(a), w) for every base
// vertex a and every w in W0
inline ExtSet enumerate_perm_st(const RootDatum& d, const Vec& mu,
                                unsigned threads = 0) {
  const ExtSet perm = enumerate_perm(d, mu, threads);
  const auto& weyl = d.weyl().elems;
  const FiniteWeylElement& w0 = d.longest_element();
  ExtSet out = perm;
  for (const Vec& a : d.vertices) {
    for (const FiniteWeylElement& w : weyl) {
      const Vec start = a + w.act(mu);
      const Vec anchor = a + d.weyl_compose(w, w0).act(mu);
      const Window window = strong_window(d, w, anchor);
      const auto reachable = strong_set(d, start, w, window);
      ExtSet keep;
      for (const ExtAffineElement& x : out)
        if (reachable.count(x.act(a))) keep.insert(x);
      out = std::move(keep);
      if (out.empty()) return out;
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// comparison report

struct MuSetReport {
  std::string datum_name;
  std::uint64_t fingerprint = 0;
  Vec mu;
  std::vector<ExtAffineElement> adm, perm, perm_st;
  std::vector<ExtAffineElement> perm_minus_adm, perm_minus_perm_st;
  bool adm_subset_perm = false;
  bool adm_eq_perm = false;
  bool perm_eq_perm_st = false;
};

inline MuSetReport compare_mu_sets(const RootDatum& d, const Vec& mu,
                                   unsigned threads = 0) {
  MuSetReport r;
  r.datum_name = d.name;
  r.fingerprint = datum_fingerprint(d);
  r.mu = mu;
  const ExtSet perm = enumerate_perm(d, mu, threads);
  const ExtSet adm = enumerate_adm(d, mu, threads);
  const ExtSet st = enumerate_perm_st(d, mu, threads);
  r.perm = sorted_elements(perm);
  r.adm = sorted_elements(adm);
  r.perm_st = sorted_elements(st);
  r.adm_subset_perm = true;
  for (const auto& x : adm) r.adm_subset_perm &= perm.count(x) > 0;
  r.adm_eq_perm = adm.size() == perm.size() && r.adm_subset_perm;
  r.perm_eq_perm_st = st.size() == perm.size();
  {
    ExtSet pm;
    for (const auto& x : perm)
      if (!adm.count(x)) pm.insert(x);
    r.perm_minus_adm = sorted_elements(pm);
    ExtSet ps;
    for (const auto& x : perm)
      if (!st.count(x)) ps.insert(x);
    r.perm_minus_perm_st = sorted_elements(ps);
  }
  internal_check(r.adm_subset_perm, "admissible set escaped the permissible set");
  return r;
}

// --------------------------------------------------------------------------
// dominance-order criterion and discrepancy pairs

// w(lambda) - w2(lambda) a nonnegative integer combination of positive
// coroots, for every fundamental coweight lambda
inline bool deodhar_order_criterion(const RootDatum& d, const FiniteWeylElement& w,
                                    const FiniteWeylElement& w2) {
  for (const Vec& fc : d.fundamental_coweights) {
    const Vec t = d.coroot_central_coords(w.act(fc) - w2.act(fc));
    for (std::size_t i = d.rank(); i < t.size(); ++i)
      if (!t[i].is_zero()) return false;
    for (std::size_t i = 0; i < d.rank(); ++i)
      if (t[i] < Rat(0) || !t[i].is_integer()) return false;
  }
  return true;
}

// first pair (w, w2), w != w2, of equal length, with w(lambda) - w2(lambda)
// a sum of positive coroots for all dominant lambda; the enumeration order
// is (length, word) lexicographic, so the result is reproducible
inline std::optional<std::pair<FiniteWeylElement, FiniteWeylElement>>
search_deodhar_pair(const RootDatum& d) {
  if (d.weyl_order > d.guards.max_pair_search)
    throw GuardError("pair search over " + std::to_string(d.weyl_order) +
                     " elements exceeds guard " +
                     std::to_string(d.guards.max_pair_search));
  const auto& weyl = d.weyl().elems;
  for (const FiniteWeylElement& w : weyl)
    for (const FiniteWeylElement& w2 : weyl) {
      if (w == w2 || w.length() != w2.length()) continue;
      if (deodhar_order_criterion(d, w, w2)) return std::make_pair(w, w2);
    }
  return std::nullopt;
}

// the vertexwise regularity condition making t_{w^-1 mu} w^-1 w2 permissible
inline bool is_sufficiently_regular(const RootDatum& d, const Vec& mu,
                                    const FiniteWeylElement& w,
                                    const FiniteWeylElement& w2) {
  const FiniteWeylElement wi = d.weyl_inverse(w);
  const FiniteWeylElement wiw2 = d.weyl_compose(wi, w2);
  for (const Vec& a : d.vertices) {
    const Vec diff = wi.act(mu) + wiw2.act(a) - a;
    if (!d.is_dominant(w.act(diff))) return false;
  }
  return true;
}

inline ExtAffineElement build_counterexample(const RootDatum& d, const Vec& mu,
                                             const FiniteWeylElement& w,
                                             const FiniteWeylElement& w2) {
  require(!(w == w2) && w.length() == w2.length() &&
              deodhar_order_criterion(d, w, w2),
          "not an order/dominance discrepancy pair");
  require(d.is_regular_dominant(mu), "mu must be regular dominant");
  require(d.in_coroot_lattice(mu), "mu must lie in the coroot lattice");
  require(is_sufficiently_regular(d, mu, w, w2), "mu not sufficiently regular");
  const FiniteWeylElement wi = d.weyl_inverse(w);
  return {&d, wi.act(mu), d.weyl_compose(wi, w2)};
}

// smallest positive multiple of the sum of the fundamental coweights that
// lies in the coroot lattice; the regular dominant escalation step
inline Vec regular_step(const RootDatum& d) {
  Vec s = zero_vec(d.ambient);
  for (const Vec& fc : d.fundamental_coweights) s = s + fc;
  for (std::int64_t m = 1; m <= 64; ++m) {
    const Vec cand = Rat(m) * s;
    if (is_integral(cand) && d.in_coroot_lattice(cand)) return cand;
  }
  throw std::logic_error("no small multiple of the coweight sum in the lattice");
}

struct CounterexampleResult {
  bool pair_exists = false;
  FiniteWeylElement w, w2;
  Vec mu;
  ExtAffineElement x;
  std::size_t length_x = 0, length_t_mu = 0;
  bool x_permissible = false;
  bool x_admissible = true;
  std::int64_t escalation = 0;
};

// search a pair, escalate mu = N * regular_step until sufficiently regular,
// build x = t_{w^-1 mu} w^-1 w2 and verify it separates Perm from Adm
inline std::optional<CounterexampleResult> find_counterexample(const RootDatum& d) {
  auto pair = search_deodhar_pair(d);
  if (!pair) return std::nullopt;
  CounterexampleResult res;
  res.pair_exists = true;
  res.w = pair->first;
  res.w2 = pair->second;
  const Vec step = regular_step(d);
  Vec mu = step;
  for (std::int64_t n = 1;; ++n) {
    mu = Rat(n) * step;
    if (is_sufficiently_regular(d, mu, res.w, res.w2)) {
      res.escalation = n;
      break;
    }
    require(n < 64, "regularity escalation did not terminate");
  }
  res.mu = mu;
  res.x = build_counterexample(d, mu, res.w, res.w2);
  res.length_x = length(res.x);
  res.length_t_mu = length(translation_element(d, mu));
  res.x_permissible = perm_member(d, mu, res.x);
  // an element of maximal length in Adm(mu) must be one of the t_lambda;
  // x differs from all of them, so equality of lengths settles the question
  res.x_admissible = false;
  for (const Vec& lam : weyl_orbit(d, mu)) {
    const ExtAffineElement t = translation_element(d, lam);
    if (res.x == t || bruhat_leq(res.x, t)) res.x_admissible = true;
  }
  return res;
}

} // namespace alcove
