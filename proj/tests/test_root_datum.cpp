#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alcove/root_datum.hpp"

using namespace alcove;

namespace {
Vec iv(std::initializer_list<std::int64_t> xs) {
  Vec v;
  for (auto x : xs) v.push_back(Rat(x));
  return v;
}
// brute-force dominance maximum over the positive roots
Vec dominance_max_root(const RootDatum& d) {
  Mat sm(d.ambient, d.rank());
  for (std::size_t j = 0; j < d.rank(); ++j)
    for (std::size_t i = 0; i < d.ambient; ++i) sm.at(i, j) = d.simple_roots[j][i];
  for (const Vec& cand : d.positive_roots) {
    bool maximal = true;
    for (const Vec& other : d.positive_roots) {
      auto c = solve(sm, other - cand);
      REQUIRE(c.has_value());
      bool ge = true;
      for (const Rat& x : *c) ge = ge && x >= Rat(0);
      if (ge && !(other == cand)) { maximal = false; break; }
    }
    if (maximal) return cand;
  }
  REQUIRE(false);
  return {};
}
}  // namespace

TEST_CASE("GL(2) is the rank-1 type A datum") {
  auto d = build_root_datum(Family::GL, 2);
  CHECK(d->positive_roots.size() == 1);
  CHECK(d->positive_roots[0] == iv({1, -1}));
  CHECK(d->highest_root() == iv({1, -1}));
  CHECK(d->vertices.size() == 2);
  CHECK(d->vertices[1] == iv({1, 0}));
}

TEST_CASE("GL(2n) roots and simple roots") {
  auto d = build_root_datum(Family::GL, 4);
  CHECK(d->positive_roots.size() == 6);
  for (std::size_t i = 0; i < 3; ++i) {
    Vec a = zero_vec(4);
    a[i] = Rat(1);
    a[i + 1] = Rat(-1);
    CHECK(d->simple_roots[i] == a);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Vec a = zero_vec(4);
      a[std::size_t(i)] = Rat(1);
      a[std::size_t(j)] = Rat(-1);
      CHECK(d->is_positive_root(a));
    }
}

TEST_CASE("C(n) highest root is 2e1, found by dominance search") {
  for (int n : {2, 3, 4}) {
    auto d = build_root_datum(Family::C, n);
    Vec two_e1 = zero_vec(std::size_t(n));
    two_e1[0] = Rat(2);
    CHECK(d->highest_root() == two_e1);
    CHECK(dominance_max_root(*d) == two_e1);
  }
}

TEST_CASE("every family builds and validates") {
  CHECK(build_root_datum(Family::GL, 3)->name == "GL(3)");
  CHECK(build_root_datum(Family::A, 5)->name == "A4");
  CHECK(build_root_datum(Family::B, 4)->rank() == 4);
  CHECK(build_root_datum(Family::D, 4)->positive_roots.size() == 12);
  CHECK(build_root_datum(Family::F4, 4)->positive_roots.size() == 24);
  CHECK(build_root_datum(Family::G2, 2)->positive_roots.size() == 6);
  CHECK(build_root_datum(Family::GSp, 6)->positive_roots.size() == 9);
  CHECK_THROWS_AS(build_root_datum(Family::GL, 1), ConfigError);
  CHECK_THROWS_AS(build_root_datum(Family::GSp, 5), ConfigError);
  CHECK_THROWS_AS(build_root_datum(Family::B, 9), ConfigError);
}

TEST_CASE("pairing") {
  auto d = build_root_datum(Family::GL, 2);
  CHECK(pairing(*d, iv({1, -1}), iv({1, 0})) == Rat(1));
  CHECK_THROWS_AS(pairing(*d, iv({1, -1, 0}), iv({1, 0})), ConfigError);
  // alcove-closure bound for base vertices, on a couple of data
  for (auto dp : {build_root_datum(Family::B, 3), build_root_datum(Family::GSp, 4)}) {
    for (const Vec& v : dp->vertices) {
      const Rat p = pairing(*dp, dp->highest_root(), v);
      CHECK(Rat(0) <= p);
      CHECK(p <= Rat(1));
    }
  }
  auto c = build_root_datum(Family::C, 3);
  CHECK(pairing(*c, c->highest_root(), Vec{Rat(1, 2), Rat(0), Rat(0)}) == Rat(1));
}

TEST_CASE("affine reflections") {
  auto d = build_root_datum(Family::GL, 2);
  const Vec a = iv({1, -1});
  CHECK(affine_reflect(*d, a, 0, iv({1, 0})) == iv({0, 1}));
  // points on the wall are fixed
  CHECK(affine_reflect(*d, a, 1, Vec{Rat(3, 4), Rat(-1, 4)}) ==
        Vec{Rat(3, 4), Rat(-1, 4)});
  CHECK_THROWS_AS(affine_reflect(*d, iv({1, 1}), 0, iv({0, 0})), ConfigError);

  SUBCASE("s_{a,1} s_{a,0} acts as translation by the coroot") {
    auto g = build_root_datum(Family::B, 2);
    for (const Vec& alpha : g->positive_roots) {
      const Vec coroot = g->coroot_of(alpha);
      Vec v{Rat(5, 7), Rat(-2, 3)};
      Vec image = affine_reflect(*g, alpha, 1, affine_reflect(*g, alpha, 0, v));
      CHECK(image == v + coroot);
    }
  }
  SUBCASE("involution") {
    auto g = build_root_datum(Family::G2, 2);
    Vec v{Rat(1, 5), Rat(2, 7), Rat(-17, 35)};
    for (const Vec& alpha : g->positive_roots)
      for (std::int64_t k : {-2, 0, 3})
        CHECK(affine_reflect(*g, alpha, k, affine_reflect(*g, alpha, k, v)) == v);
  }
}

TEST_CASE("finite Weyl enumeration") {
  CHECK(build_root_datum(Family::GL, 3)->weyl().elems.size() == 6);
  CHECK(build_root_datum(Family::B, 2)->weyl().elems.size() == 8);
  auto f4 = build_root_datum(Family::F4, 4);
  const std::uint64_t degree_product = 2 * 6 * 8 * 12;
  CHECK(f4->weyl().elems.size() == degree_product);
  CHECK(f4->weyl_order == degree_product);

  auto d = build_root_datum(Family::B, 3);
  const WeylGroup& w = d->weyl();
  CHECK(w.elems[0].word.empty());  // identity first
  // longest element length equals the number of positive roots
  CHECK(w.elems[std::size_t(w.longest)].length() == d->positive_roots.size());
  // every element's cached word reproduces its matrix
  for (const auto& e : w.elems) {
    Mat m = Mat::identity(d->ambient);
    for (int i : e.word) m = m.mul(d->simple_reflection_mat(std::size_t(i - 1)));
    CHECK(m == e.mat);
  }
}

TEST_CASE("dominant representative") {
  auto d = build_root_datum(Family::GL, 3);
  auto [vp, w] = dominant_representative(*d, iv({0, 1, 0}));
  CHECK(vp == iv({1, 0, 0}));
  CHECK(w.length() == 1);  // a transposition
  CHECK(w.act(iv({0, 1, 0})) == vp);

  auto [vp2, w2] = dominant_representative(*d, iv({3, 2, 1}));
  CHECK(vp2 == iv({3, 2, 1}));
  CHECK(w2.word.empty());

  SUBCASE("unique dominant element in each orbit") {
    auto b = build_root_datum(Family::B, 3);
    const Vec v{Rat(-2), Rat(1), Rat(3)};
    auto [plus, wit] = dominant_representative(*b, v);
    CHECK(wit.act(v) == plus);
    int dominant_count = 0;
    for (const Vec& p : weyl_orbit(*b, v))
      if (b->is_dominant(p)) {
        ++dominant_count;
        CHECK(p == plus);
      }
    CHECK(dominant_count == 1);
  }
}

TEST_CASE("conv membership basics") {
  auto d = build_root_datum(Family::GL, 3);
  const Vec mu = iv({1, 0, 0});
  for (const Vec& p : weyl_orbit(*d, mu)) CHECK(conv_membership(*d, mu, p));
  CHECK(conv_membership(*d, mu, Vec{Rat(1, 3), Rat(1, 3), Rat(1, 3)}));
  CHECK(!conv_membership(*d, mu, iv({1, 1, -1})));
  CHECK_THROWS_AS(conv_membership(*d, iv({0, 0, 1}), iv({0, 0, 0})), ConfigError);
}

TEST_CASE("conv membership agrees with the hull-feasibility oracle on boxes") {
  struct Case { Family f; int size; Vec mu; };
  std::vector<Case> cases{
      {Family::GL, 3, iv({1, 0, 0})},   {Family::GL, 3, iv({2, 1, 0})},
      {Family::B, 2, iv({1, 0})},       {Family::B, 2, iv({2, 1})},
      {Family::C, 3, iv({1, 1, 0})},    {Family::G2, 2, iv({1, 0, -1})},
      {Family::A, 3, iv({2, 0, -2})},
  };
  for (const auto& cse : cases) {
    auto d = build_root_datum(cse.f, cse.size);
    REQUIRE(d->is_dominant(cse.mu));
    auto orbit = weyl_orbit(*d, cse.mu);
    std::vector<std::int64_t> lo(d->ambient, 100), hi(d->ambient, -100);
    for (const Vec& p : orbit)
      for (std::size_t i = 0; i < d->ambient; ++i) {
        lo[i] = std::min(lo[i], p[i].floor() - 1);
        hi[i] = std::max(hi[i], p[i].floor() + 2);
      }
    std::vector<std::int64_t> cur(lo);
    for (;;) {
      Vec v(d->ambient);
      for (std::size_t i = 0; i < d->ambient; ++i) v[i] = Rat(cur[i]);
      CHECK(conv_membership(*d, cse.mu, v) == in_convex_hull(orbit, v));
      std::size_t i = 0;
      while (i < d->ambient && ++cur[i] > hi[i]) {
        cur[i] = lo[i];
        ++i;
      }
      if (i == d->ambient) break;
    }
  }
}

TEST_CASE("chamber-restricted hull equals the single obtuse cone") {
  // for lattice v in a window: v in w(closure C0) implies
  // [v in w mu + w(B0)  <=>  v in Conv(mu)]
  for (auto [f, size, mu] : {std::tuple<Family, int, Vec>{Family::B, 2, iv({2, 1})},
                             {Family::GL, 3, iv({2, 1, 0})}}) {
    auto d = build_root_datum(f, size);
    auto orbit = weyl_orbit(*d, mu);
    Mat coroots = Mat::from_columns(d->simple_coroots);
    for (const auto& w : d->weyl().elems) {
      const FiniteWeylElement wi = d->weyl_inverse(w);
      std::vector<std::int64_t> box(d->ambient, 3);
      std::vector<std::int64_t> cur(d->ambient, -3);
      for (;;) {
        Vec v(d->ambient);
        for (std::size_t i = 0; i < d->ambient; ++i) v[i] = Rat(cur[i]);
        const Vec vw = wi.act(v);
        if (d->is_dominant(vw)) {  // v lies in w(closure of C0)
          bool in_cone = false;
          auto t = solve(coroots, wi.act(v - w.act(mu)));
          if (t) {
            in_cone = true;
            for (const Rat& c : *t) in_cone = in_cone && c <= Rat(0);
          }
          CHECK(in_cone == conv_membership(*d, mu, v));
        }
        std::size_t i = 0;
        while (i < d->ambient && ++cur[i] > box[i]) {
          cur[i] = -3;
          ++i;
        }
        if (i == d->ambient) break;
      }
    }
  }
}

TEST_CASE("conv membership equals the explicit cone-intersection over W0") {
  for (auto [f, size, mu] : {std::tuple<Family, int, Vec>{Family::B, 2, iv({1, 1})},
                             {Family::C, 2, iv({2, 0})}}) {
    auto d = build_root_datum(f, size);
    Mat coroots = Mat::from_columns(d->simple_coroots);
    for (std::int64_t x = -3; x <= 3; ++x)
      for (std::int64_t y = -3; y <= 3; ++y) {
        const Vec v = iv({x, y});
        bool all = true;
        for (const auto& w : d->weyl().elems) {
          auto t = solve(coroots, d->weyl_inverse(w).act(v - w.act(mu)));
          bool in_cone = t.has_value();
          if (t)
            for (const Rat& c : *t) in_cone = in_cone && c <= Rat(0);
          all = all && in_cone;
        }
        CHECK(all == conv_membership(*d, mu, v));
      }
  }
}

TEST_CASE("number of positive roots equals longest length") {
  for (auto dp : {build_root_datum(Family::GL, 4), build_root_datum(Family::C, 3),
                  build_root_datum(Family::G2, 2), build_root_datum(Family::GSp, 4)})
    CHECK(dp->longest_element().length() == dp->positive_roots.size());
}

TEST_CASE("datum fingerprints distinguish data") {
  CHECK(datum_fingerprint(*build_root_datum(Family::B, 2)) !=
        datum_fingerprint(*build_root_datum(Family::C, 2)));
  CHECK(datum_fingerprint(*build_root_datum(Family::B, 2)) ==
        datum_fingerprint(*build_root_datum(Family::B, 2)));
}
