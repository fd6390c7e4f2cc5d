#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alcove/affine.hpp"
#include "alcove/rng.hpp"

using namespace alcove;

namespace {
Vec iv(std::initializer_list<std::int64_t> xs) {
  Vec v;
  for (auto x : xs) v.push_back(Rat(x));
  return v;
}
Vec random_point(Rng& rng, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = Rat(rng.range(-20, 20), rng.range(1, 7));
  return v;
}
// random lattice vector from the datum's basis
Vec random_lattice(Rng& rng, const RootDatum& d, std::int64_t bound) {
  Vec t(d.lattice_basis.cols);
  for (auto& x : t) x = Rat(rng.range(-bound, bound));
  return d.lattice_basis.apply(t);
}
// walls crossed by the straight segment from the barycenter to its image,
// an oracle for the length of x independent of alcove coordinates
std::size_t segment_crossings(const ExtAffineElement& x) {
  const RootDatum& d = *x.datum;
  const Vec p = d.barycenter, q = x.act(d.barycenter);
  std::size_t count = 0;
  for (const Vec& a : d.positive_roots) {
    Rat s = dot(a, p), t = dot(a, q);
    if (t < s) std::swap(s, t);
    // integers strictly between s and t; endpoints are never integral
    count += std::size_t(t.floor() - s.floor());
  }
  return count;
}
}  // namespace

TEST_CASE("composition and inverse") {
  auto d = build_root_datum(Family::GL, 3);
  auto t1 = translation_element(*d, iv({1, 0, 0}));
  auto t2 = translation_element(*d, iv({0, 2, -1}));
  CHECK(compose(t1, t2) == translation_element(*d, iv({1, 2, -1})));
  Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const ExtAffineElement x{&*d, random_lattice(rng, *d, 2),
                             d->weyl().elems[rng.next() % 6]};
    CHECK(compose(x, inverse(x)) == identity_element(*d));
    CHECK(compose(inverse(x), x) == identity_element(*d));
    const Vec p = random_point(rng, 3);
    const ExtAffineElement y{&*d, random_lattice(rng, *d, 2),
                             d->weyl().elems[rng.next() % 6]};
    CHECK(compose(x, y).act(p) == x.act(y.act(p)));
  }
  auto b = build_root_datum(Family::B, 2);
  CHECK_THROWS_AS(compose(t1, identity_element(*b)), ConfigError);
}

TEST_CASE("s_{a,1} s_{a,0} equals translation by the coroot, as group elements") {
  auto d = build_root_datum(Family::C, 2);
  Rng rng(11);
  for (const Vec& alpha : d->positive_roots) {
    const Vec coroot = d->coroot_of(alpha);
    ExtAffineElement s1{&*d, coroot,
                        d->make_weyl(RootDatum::reflection_mat(alpha, coroot))};
    ExtAffineElement s0 = from_finite(*d, s1.finite);
    ExtAffineElement prod = compose(s1, s0);
    CHECK(prod == translation_element(*d, coroot));
    for (int trial = 0; trial < 10; ++trial) {
      const Vec p = random_point(rng, 2);
      CHECK(prod.act(p) == p + coroot);
    }
  }
}

TEST_CASE("length") {
  auto d = build_root_datum(Family::GL, 3);
  CHECK(length(identity_element(*d)) == 0);
  CHECK(length(translation_element(*d, iv({1, 0, 0}))) == 2);
  CHECK(segment_crossings(translation_element(*d, iv({1, 0, 0}))) == 2);

  auto om = omega_decompose(translation_element(*d, iv({1, 0, 0}))).omega;
  CHECK(length(om) == 0);
  CHECK(!(om == identity_element(*d)));

  SUBCASE("length equals the segment-crossing oracle") {
    Rng rng(23);
    for (auto dp : {build_root_datum(Family::B, 2), build_root_datum(Family::GL, 3),
                    build_root_datum(Family::GSp, 4)}) {
      for (int trial = 0; trial < 40; ++trial) {
        const auto& wg = dp->weyl().elems;
        const ExtAffineElement x{&*dp, random_lattice(rng, *dp, 2),
                                 wg[rng.next() % wg.size()]};
        CHECK(length(x) == segment_crossings(x));
      }
    }
  }
  SUBCASE("translations: length is the sum of positive pairings") {
    Rng rng(29);
    auto b3 = build_root_datum(Family::B, 3);
    for (int trial = 0; trial < 20; ++trial) {
      const Vec lam = random_lattice(rng, *b3, 3);
      std::size_t expect = 0;
      for (const Vec& a : b3->positive_roots) {
        const Rat p = dot(a, lam);
        expect += std::size_t(p < Rat(0) ? (-p).num : p.num);
      }
      CHECK(length(translation_element(*b3, lam)) == expect);
    }
  }
}

TEST_CASE("omega decomposition") {
  auto d = build_root_datum(Family::GL, 2);
  SUBCASE("elements of W_aff decompose trivially") {
    auto x = product_of_word(*d, {1, 0, 1});
    auto dec = omega_decompose(x);
    CHECK(dec.omega == identity_element(*d));
    CHECK(dec.waff_part == x);
    CHECK(in_waff(x));
  }
  SUBCASE("t_(1,0) has a nontrivial omega component generating Omega") {
    auto t = translation_element(*d, iv({1, 0}));
    auto dec = omega_decompose(t);
    CHECK(length(dec.omega) == 0);
    CHECK(!(dec.omega == identity_element(*d)));
    CHECK(compose(dec.waff_part, dec.omega) == t);
    CHECK(!in_waff(t));
    // omega^2 is the central translation (1,1), again length 0
    auto sq = compose(dec.omega, dec.omega);
    CHECK(length(sq) == 0);
    CHECK(sq.translation == iv({1, 1}));
  }
  SUBCASE("omega of t_mu is the coset representative of t_mu") {
    auto b = build_root_datum(Family::B, 2);
    const Vec mu = iv({1, 0});
    auto tau = omega_decompose(translation_element(*b, mu)).omega;
    // t_mu tau^-1 lies in W_aff
    CHECK(in_waff(compose(translation_element(*b, mu), inverse(tau))));
  }
}

TEST_CASE("reduced words") {
  auto d = build_root_datum(Family::B, 2);
  CHECK(reduced_word(identity_element(*d)).empty());
  for (int i = 0; i <= 2; ++i)
    CHECK(reduced_word(affine_generator(*d, i)) == std::vector<int>{i});
  CHECK_THROWS_AS(reduced_word(translation_element(*build_root_datum(Family::GL, 2),
                                                   iv({1, 0}))),
                  ConfigError);

  SUBCASE("word length equals length, word reproduces the element") {
    Rng rng(41);
    int checked = 0;
    while (checked < 100) {
      std::vector<int> w;
      for (int j = 0; j < int(rng.next() % 13); ++j)
        w.push_back(int(rng.next() % 3));
      auto x = product_of_word(*d, w);
      if (length(x) > 12) continue;
      ++checked;
      auto rw = reduced_word(x);
      CHECK(rw.size() == length(x));
      CHECK(rw.size() == segment_crossings(x));
      CHECK(product_of_word(*d, rw) == x);
    }
  }
}

TEST_CASE("Bruhat order") {
  auto d = build_root_datum(Family::GL, 2);
  auto t = translation_element(*d, iv({1, 0}));
  auto tau = omega_decompose(t).omega;
  CHECK(bruhat_leq(t, t));
  CHECK(bruhat_leq(tau, t));   // tau is the length-0 element of t's coset
  CHECK(!bruhat_leq(t, tau));  // length monotonicity

  auto b = build_root_datum(Family::B, 2);
  SUBCASE("coincides with subword closure on a ball") {
    std::vector<ExtAffineElement> ball;
    Rng rng(57);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<int> w;
      for (int j = 0; j < int(rng.next() % 9); ++j) w.push_back(int(rng.next() % 3));
      auto x = product_of_word(*b, w);
      if (length(x) <= 7) ball.push_back(x);
    }
    for (const auto& y : ball) {
      auto below = lower_interval(y);
      for (const auto& x : ball)
        CHECK(bruhat_leq(x, y) == (below.count(x) > 0));
    }
  }
  SUBCASE("lifting property on the radius-6 ball") {
    auto ball = waff_ball(*b, 6);
    for (const auto& x : ball)
      for (const auto& y : ball)
        for (int s = 0; s < 3; ++s) {
          auto gen = affine_generator(*b, s);
          auto sy = compose(gen, y);
          auto sx = compose(gen, x);
          if (length(sy) >= length(y)) continue;
          const bool lhs = bruhat_leq(x, y);
          const bool rhs = length(sx) < length(x) ? bruhat_leq(sx, sy)
                                                  : bruhat_leq(x, sy);
          CHECK(lhs == rhs);
          // both raised
          if (length(sx) > length(x) && length(sy) > length(y))
            CHECK(bruhat_leq(x, y) == bruhat_leq(sx, sy));
        }
  }
}

TEST_CASE("lower intervals") {
  auto d = build_root_datum(Family::B, 2);
  SUBCASE("identity-coset omega element has a singleton interval") {
    auto tau = omega_decompose(translation_element(*d, iv({1, 0}))).omega;
    auto intv = lower_interval(tau);
    CHECK(intv.size() == 1);
    CHECK(intv.count(tau) == 1);
  }
  SUBCASE("two-letter braid-free word") {
    auto y = product_of_word(*d, {1, 2});
    auto intv = lower_interval(y);
    CHECK(intv.size() == 4);
    CHECK(intv.count(identity_element(*d)) == 1);
    CHECK(intv.count(affine_generator(*d, 1)) == 1);
    CHECK(intv.count(affine_generator(*d, 2)) == 1);
    CHECK(intv.count(y) == 1);
  }
  SUBCASE("independent of the chosen reduced word") {
    // s0 and s1 commute in affine B2, so (0,1,2) and (1,0,2) are two
    // reduced words of one element
    auto y1 = product_of_word(*d, {0, 1, 2});
    auto y2 = product_of_word(*d, {1, 0, 2});
    REQUIRE(y1 == y2);
    REQUIRE(length(y1) == 3);
    auto closure_over = [&](std::vector<int> w) {
      ExtSet s;
      s.insert(identity_element(*d));
      for (int letter : w) {
        ExtSet nxt = s;
        for (const auto& e : s) nxt.insert(compose(e, affine_generator(*d, letter)));
        s = std::move(nxt);
      }
      return s;
    };
    CHECK(closure_over({0, 1, 2}) == closure_over({1, 0, 2}));
    CHECK(closure_over({0, 1, 2}) == lower_interval(y1));
  }
  SUBCASE("guard") {
    auto big = translation_element(*d, iv({20, 0}));
    CHECK_THROWS_AS(lower_interval(big), GuardError);
  }
}

TEST_CASE("minimal coset representatives behave like the finite group") {
  // right multiples of the minimal-length representative of t_lam W0
  // reproduce the finite Bruhat order
  Rng rng(91);
  for (auto dp : {build_root_datum(Family::B, 2), build_root_datum(Family::A, 3)}) {
    const auto& wg = dp->weyl().elems;
    for (int trial = 0; trial < 3; ++trial) {
      const Vec lam = random_lattice(rng, *dp, 2);
      auto t = translation_element(*dp, lam);
      std::size_t best = SIZE_MAX;
      ExtAffineElement minimal = t;
      for (const auto& w : wg) {
        auto cand = compose(t, from_finite(*dp, w));
        if (length(cand) < best) { best = length(cand); minimal = cand; }
      }
      for (const auto& w1 : wg)
        for (const auto& w2 : wg) {
          const bool fin = finite_bruhat_leq(*dp, w1, w2);
          const bool aff = bruhat_leq(compose(minimal, from_finite(*dp, w1)),
                                      compose(minimal, from_finite(*dp, w2)));
          CHECK(fin == aff);
        }
    }
  }
}

TEST_CASE("maximal element of the coset t_{w^-1 mu} W0 is t_{w^-1 mu} w^-1") {
  for (auto dp : {build_root_datum(Family::B, 2), build_root_datum(Family::GL, 3)}) {
    Vec mu = zero_vec(dp->ambient);
    for (std::size_t i = 0; i < dp->ambient; ++i)
      mu[i] = Rat(std::int64_t(2 * (dp->ambient - i)));
    REQUIRE(dp->is_regular_dominant(mu));
    const std::size_t lt = length(translation_element(*dp, mu));
    for (const auto& w : dp->weyl().elems) {
      const FiniteWeylElement wi = dp->weyl_inverse(w);
      auto t = translation_element(*dp, wi.act(mu));
      auto maximal = compose(t, from_finite(*dp, wi));
      CHECK(length(maximal) == lt + w.length());
      for (const auto& u : dp->weyl().elems) {
        auto cand = compose(t, from_finite(*dp, u));
        CHECK(length(cand) <= length(maximal));
        if (!(u == wi)) CHECK(length(cand) < length(maximal));
      }
    }
  }
}

TEST_CASE("length additivity when reduced words concatenate") {
  auto d = build_root_datum(Family::B, 2);
  Rng rng(131);
  int both_ways = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> w1, w2;
    for (int j = 0; j < int(rng.next() % 7); ++j) w1.push_back(int(rng.next() % 3));
    for (int j = 0; j < int(rng.next() % 7); ++j) w2.push_back(int(rng.next() % 3));
    auto x = product_of_word(*d, w1);
    auto y = product_of_word(*d, w2);
    auto xy = compose(x, y);
    std::vector<int> cat = reduced_word(x);
    for (int s : reduced_word(y)) cat.push_back(s);
    const bool additive = length(xy) == length(x) + length(y);
    const bool cat_reduced = length(product_of_word(*d, cat)) == cat.size();
    CHECK(additive == cat_reduced);
    if (additive) ++both_ways;
  }
  CHECK(both_ways > 10);  // the sample hit the additive case
}

TEST_CASE("element sort order is deterministic") {
  auto d = build_root_datum(Family::B, 2);
  auto intv = lower_interval(product_of_word(*d, {0, 1, 2, 1}));
  auto sorted1 = sorted_elements(intv);
  auto sorted2 = sorted_elements(intv);
  REQUIRE(sorted1.size() == sorted2.size());
  for (std::size_t i = 0; i < sorted1.size(); ++i) CHECK(sorted1[i] == sorted2[i]);
  for (std::size_t i = 1; i < sorted1.size(); ++i)
    CHECK(length(sorted1[i - 1]) <= length(sorted1[i]));
}
