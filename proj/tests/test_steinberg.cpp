#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alcove/steinberg.hpp"

using namespace alcove;

namespace {
Vec iv(std::initializer_list<std::int64_t> xs) {
  Vec v;
  for (auto x : xs) v.push_back(Rat(x));
  return v;
}

// independent oracle: exact Fourier-Motzkin feasibility of the strict
// system k_beta < <beta, sum t_k f_k> < k_beta + 1 over the fixed space
struct StrictIneq {
  Vec a;
  Rat b;  // sum a_i t_i < b
};
bool fm_feasible(std::vector<StrictIneq> sys, std::size_t nvars) {
  for (std::size_t v = nvars; v-- > 0;) {
    std::vector<StrictIneq> lows, highs, rest;
    for (auto& q : sys) {
      if (q.a[v].is_zero()) rest.push_back(q);
      else if (q.a[v] > Rat(0)) highs.push_back(q);
      else lows.push_back(q);
    }
    for (const auto& lo : lows)
      for (const auto& hi : highs) {
        StrictIneq c;
        c.a = zero_vec(nvars);
        const Rat f_lo = hi.a[v], f_hi = -lo.a[v];
        for (std::size_t i = 0; i < nvars; ++i)
          c.a[i] = f_lo * lo.a[i] + f_hi * hi.a[i];
        c.b = f_lo * lo.b + f_hi * hi.b;
        rest.push_back(std::move(c));
      }
    sys = std::move(rest);
  }
  for (const auto& q : sys)
    if (!(Rat(0) < q.b)) return false;
  return true;
}
bool meets_fixed_space_oracle(const ThetaAutomorphism& th, const Alcove& a) {
  const RootDatum& host = *th.host;
  const std::size_t nv = th.fixed_space_basis.size();
  std::vector<StrictIneq> sys;
  for (std::size_t i = 0; i < host.positive_roots.size(); ++i) {
    Vec coeff(nv);
    for (std::size_t k = 0; k < nv; ++k)
      coeff[k] = dot(host.positive_roots[i], th.fixed_space_basis[k]);
    // <beta, x> < k+1   and   -<beta, x> < -k
    sys.push_back({coeff, Rat(a.coords[i] + 1)});
    sys.push_back({-coeff, Rat(-a.coords[i])});
  }
  return fm_feasible(std::move(sys), nv);
}
}  // namespace

TEST_CASE("folding GL(4) gives the symplectic datum") {
  auto th = build_theta(build_root_datum(Family::GL, 4));
  CHECK(th.fixed->name == "GSp(4)");
  CHECK(th.fixed->rank() == 2);
  CHECK(th.fixed->positive_roots.size() == 4);
  CHECK(th.fixed->highest_root() == iv({1, 0, 0, -1}));
  // involution preserves the pairing
  for (const Vec& u : {iv({1, 2, 3, 4}), iv({0, 1, 0, -1})})
    for (const Vec& v : {iv({1, 0, 0, 0}), iv({2, -1, 1, 3})})
      CHECK(dot(th.apply(u), th.apply(v)) == dot(u, v));
}

TEST_CASE("folding the odd type A host gives type C, not B") {
  auto th = build_theta(build_root_datum(Family::A, 5));  // A4 in dim 5
  CHECK(th.fixed->rank() == 2);
  CHECK(th.fixed->positive_roots.size() == 4);
  // the middle orbit folds to e_n - e_{n+2}
  CHECK(th.fixed->simple_roots[1] == iv({0, 1, 0, -1, 0}));
  // C-type signature: the highest root is long and is twice a lattice
  // functional on the fixed space, so exactly n of the positive roots
  // attain the maximal norm
  int longs = 0;
  for (const Vec& r : th.fixed->positive_roots)
    if (dot(r, r) == Rat(2)) ++longs;
  CHECK(longs == 2);
  CHECK(th.fixed->highest_root() == iv({1, 0, 0, 0, -1}));
  // half-roots appear: the average of e2 - e3 is half of e2 - e4
  auto bt = bar_theta(th, iv({0, 1, -1, 0, 0}));
  CHECK(bt.half);
  CHECK(bt.fixed_root == iv({0, 1, 0, -1, 0}));
  CHECK(bt.average == Rat(1, 2) * bt.fixed_root);
}

TEST_CASE("bar_theta classification") {
  auto th = build_theta(build_root_datum(Family::GL, 4));
  // a flip-fixed root is its own average
  auto fixed_root = bar_theta(th, iv({1, 0, 0, -1}));
  CHECK(!fixed_root.half);
  CHECK(fixed_root.average == iv({1, 0, 0, -1}));
  // e1 - e2 averages to the short simple root
  auto short_avg = bar_theta(th, iv({1, -1, 0, 0}));
  CHECK(!short_avg.half);
  CHECK(short_avg.average == Vec{Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(-1, 2)});
  // positivity is preserved and every fixed root has an exact preimage
  for (std::size_t i = 0; i < th.fixed->positive_roots.size(); ++i) {
    const int pre = th.exact_preimage[i];
    REQUIRE(pre >= 0);
    auto bt = bar_theta(th, th.host->positive_roots[std::size_t(pre)]);
    CHECK(!bt.half);
    CHECK(bt.average == th.fixed->positive_roots[i]);
  }
  CHECK_THROWS_AS(bar_theta(th, iv({1, 1, 0, 0})), ConfigError);
}

TEST_CASE("embedding elements") {
  auto th = build_theta(build_root_datum(Family::GL, 4));
  CHECK(embed_element(th, identity_element(*th.fixed)) ==
        identity_element(*th.host));
  SUBCASE("translations keep their vector") {
    const Vec lam = iv({2, 1, 1, 0});  // similitude 2
    REQUIRE(th.fixed->in_cocharacter_lattice(lam));
    CHECK(embed_element(th, translation_element(*th.fixed, lam)) ==
          translation_element(*th.host, lam));
  }
  SUBCASE("embedded elements act identically on the fixed space") {
    for (const auto& y : waff_ball(*th.fixed, 4)) {
      const ExtAffineElement x = embed_element(th, y);
      CHECK(in_fixed_subgroup(th, x));
      for (const Vec& f : th.fixed_space_basis) CHECK(x.act(f) == y.act(f));
      auto back = restrict_element(th, x);
      REQUIRE(back.has_value());
      CHECK(*back == y);
    }
  }
  SUBCASE("omega components correspond") {
    const Vec mu = iv({1, 1, 0, 0});
    auto tau_fixed = omega_decompose(translation_element(*th.fixed, mu)).omega;
    auto tau_host = omega_decompose(translation_element(*th.host, mu)).omega;
    CHECK(embed_element(th, tau_fixed) == tau_host);
  }
}

TEST_CASE("restricting alcoves") {
  auto th = build_theta(build_root_datum(Family::GL, 4));
  SUBCASE("base restricts to base") {
    auto r = restrict_alcove(th, base_alcove(*th.host));
    REQUIRE(r.has_value());
    CHECK(*r == base_alcove(*th.fixed));
  }
  SUBCASE("round trip through embedded elements") {
    for (const auto& y : waff_ball(*th.fixed, 4)) {
      auto r = restrict_alcove(th, alcove_of(embed_element(th, y)));
      REQUIRE(r.has_value());
      CHECK(*r == alcove_of(y));
    }
  }
  SUBCASE("emptiness matches the exact feasibility oracle") {
    int nonempty = 0, empty = 0;
    for (const auto& u : waff_ball(*th.host, 5)) {
      const Alcove a = alcove_of(u);
      const bool got = restrict_alcove(th, a).has_value();
      CHECK(got == meets_fixed_space_oracle(th, a));
      (got ? nonempty : empty)++;
    }
    CHECK(nonempty > 0);
    CHECK(empty > 0);
  }
}

TEST_CASE("the affine Weyl group of the fixed datum, two ways") {
  for (auto host : {build_root_datum(Family::GL, 4), build_root_datum(Family::A, 5)}) {
    auto th = build_theta(host);
    std::set<std::pair<std::vector<Rat>, std::vector<Rat>>> embedded;
    std::size_t max_host_len = 0;
    for (const auto& y : waff_ball(*th.fixed, 3)) {
      const auto x = embed_element(th, y);
      CHECK(in_waff(x));
      max_host_len = std::max(max_host_len, length(x));
      embedded.insert({x.translation, x.finite.mat.a});
    }
    std::set<std::pair<std::vector<Rat>, std::vector<Rat>>> commuting;
    for (const auto& x : waff_ball(*th.host, max_host_len)) {
      if (!in_fixed_subgroup(th, x)) continue;
      auto back = restrict_element(th, x);
      REQUIRE(back.has_value());
      if (length(*back) <= 3) commuting.insert({x.translation, x.finite.mat.a});
    }
    CHECK(embedded == commuting);
  }
}

TEST_CASE("half-space restriction") {
  auto th = build_theta(build_root_datum(Family::A, 5));
  const RootDatum& host = *th.host;
  // sample rational points of the fixed space
  std::vector<Vec> samples;
  for (std::int64_t u1 = -7; u1 <= 7; u1 += 3)
    for (std::int64_t u2 = -7; u2 <= 7; u2 += 3) {
      samples.push_back(Rat(u1, 3) * th.fixed_space_basis[0] +
                        Rat(u2, 3) * th.fixed_space_basis[1]);
    }
  for (const auto& wf : th.fixed->weyl().elems) {
    const FiniteWeylElement w_host = embed_element(th, from_finite(*th.fixed, wf)).finite;
    const FiniteWeylElement w_host_inv = host.weyl_inverse(w_host);
    const FiniteWeylElement wf_inv = th.fixed->weyl_inverse(wf);
    for (std::size_t i = 0; i < host.positive_roots.size(); ++i) {
      for (std::int64_t k = -2; k <= 2; ++k) {
        // w-positive representative on the host side
        Vec gamma = host.positive_roots[i];
        std::int64_t kk = k;
        if (host.classify_root(w_host_inv.act(gamma))->second < 0) {
          gamma = -gamma;
          kk = -k;
        }
        auto bt = bar_theta(th, gamma);
        const Vec gamma_fixed = bt.fixed_root;
        const std::int64_t k_fixed = bt.half ? 2 * kk : kk;
        // the fixed representative is again w-positive
        CHECK(th.fixed->classify_root(wf_inv.act(gamma_fixed))->second > 0);
        for (const Vec& p : samples) {
          CHECK((dot(gamma, p) > Rat(kk)) == (dot(gamma_fixed, p) > Rat(k_fixed)));
        }
      }
    }
  }
}

TEST_CASE("acute cones restrict to acute cones") {
  auto th = build_theta(build_root_datum(Family::GL, 4));
  const Alcove base_host = base_alcove(*th.host);
  const Alcove base_fixed = base_alcove(*th.fixed);
  for (const auto& y : waff_ball(*th.fixed, 4)) {
    const Alcove af = alcove_of(y);
    const Alcove ah = alcove_of(embed_element(th, y));
    for (const auto& wf : th.fixed->weyl().elems) {
      const FiniteWeylElement wh =
          embed_element(th, from_finite(*th.fixed, wf)).finite;
      CHECK(in_acute_cone(*th.fixed, base_fixed, wf, af) ==
            in_acute_cone(*th.host, base_host, wh, ah));
    }
  }
}

TEST_CASE("Bruhat order is inherited through the fold") {
  auto th = build_theta(build_root_datum(Family::GL, 4));
  auto ball = waff_ball(*th.fixed, 4);
  // include a shifted omega coset as well
  auto tau = omega_decompose(
                 translation_element(*th.fixed, iv({1, 1, 0, 0})))
                 .omega;
  std::vector<ExtAffineElement> sample = ball;
  for (const auto& y : ball) sample.push_back(compose(y, tau));
  for (const auto& x : sample)
    for (const auto& y : sample) {
      auto [fixed_order, host_order] = check_bruhat_inheritance(th, x, y);
      CHECK(fixed_order == host_order);
    }
}

TEST_CASE("the B2 in C2 picture") {
  auto b2 = build_root_datum(Family::B, 2);
  auto c2 = build_root_datum(Family::C, 2);

  SUBCASE("the omega generator of B2 is the extra affine reflection of C2") {
    auto tau = omega_decompose(translation_element(*b2, iv({1, 0}))).omega;
    CHECK(bn_to_cn(*c2, tau) == affine_generator(*c2, 0));
  }
  SUBCASE("generator images: s_i -> s'_i and s_0 -> s'_0 s'_1 s'_0") {
    CHECK(bn_to_cn(*c2, affine_generator(*b2, 1)) == affine_generator(*c2, 1));
    CHECK(bn_to_cn(*c2, affine_generator(*b2, 2)) == affine_generator(*c2, 2));
    CHECK(bn_to_cn(*c2, affine_generator(*b2, 0)) ==
          product_of_word(*c2, {0, 1, 0}));
  }
  SUBCASE("non-inheritance: s0, s1 incomparable in B2, images comparable") {
    auto s0 = affine_generator(*b2, 0);
    auto s1 = affine_generator(*b2, 1);
    CHECK(!bruhat_leq(s0, s1));
    CHECK(!bruhat_leq(s1, s0));
    CHECK(bruhat_leq(bn_to_cn(*c2, s1), bn_to_cn(*c2, s0)));
  }
  SUBCASE("every B2 element is a C2 affine Weyl element") {
    for (const auto& u : waff_ball(*b2, 4)) {
      auto x = bn_to_cn(*c2, u);
      CHECK(in_waff(x));
      CHECK(x.act(iv({3, 5})) == u.act(iv({3, 5})));
    }
  }
}

TEST_CASE("admissible sets through the host") {
  SUBCASE("mu = 0") {
    auto th = build_theta(build_root_datum(Family::GL, 4));
    auto s = adm_theta_via_perm(th, zero_vec(4));
    CHECK(s.size() == 1);
    CHECK(s.count(identity_element(*th.fixed)) == 1);
  }
  SUBCASE("GSp(4), minuscule mu: equals both Adm and Perm of the fixed datum") {
    auto th = build_theta(build_root_datum(Family::GL, 4));
    const Vec mu = iv({1, 1, 0, 0});
    auto via_host = adm_theta_via_perm(th, mu);
    CHECK(via_host == enumerate_adm(*th.fixed, mu));
    CHECK(via_host == enumerate_perm(*th.fixed, mu));
  }
  SUBCASE("the 13 vs 19 discrepancy for B2 inside the A4 host") {
    auto b2 = build_root_datum(Family::B, 2);
    auto c2 = build_root_datum(Family::C, 2);
    auto th = build_theta(build_root_datum(Family::A, 5));
    const Vec mu_b = iv({1, 0});
    const Vec mu_host = cn_point_to_host(th, mu_b);
    CHECK(mu_host == iv({1, 0, 0, 0, -1}));
    auto host_perm = enumerate_perm(*th.host, mu_host);
    // the image of the extended B2 group is the embedded fixed group
    ExtSet image_cut;
    for (const auto& x : host_perm)
      if (in_fixed_subgroup(th, x)) image_cut.insert(x);
    CHECK(image_cut.size() == 19);
    CHECK(enumerate_adm(*c2, mu_b).size() == 19);
    CHECK(enumerate_adm(*b2, mu_b).size() == 13);
    // and the cut is exactly the embedded image of Adm^{C2}(mu)
    ExtSet embedded_adm;
    for (const auto& x : enumerate_adm(*c2, mu_b))
      embedded_adm.insert(cn_to_host(th, x));
    CHECK(embedded_adm == image_cut);
  }
}
