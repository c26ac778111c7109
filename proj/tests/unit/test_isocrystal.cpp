#include "adlv/intlinalg.hpp"
#include "adlv/isocrystal.hpp"

#include <catch_amalgamated.hpp>

#include <map>
#include <random>

using namespace adlv;

namespace {

RVec rv(std::initializer_list<Rat> xs) { return RVec(xs); }

WeylElement sigma_twist(const RootDatum& d, const WeylElement& u) {
  IntMatrix sinv = inverse_unimodular(d.sigma());
  return WeylElement(d.sigma() * u.matrix() * sinv, {});
}

bool superbasic_or_false(const RootDatum& d, const BRep& b, const LeviSubset& l) {
  try {
    return is_superbasic(d, b, l);
  } catch (const NotResTypeA&) {
    return false;
  }
}

bool sigma_invariant(const RootDatum& d, const RatCochar& v) { return d.apply_sigma(v) == v; }

}  // namespace

TEST_CASE("Newton points of small representatives") {
  RootDatum g2 = make_gl(2);
  CHECK(newton_point(g2, make_brep(g2, {1, 0}, {0})) == rv({Rat(1, 2), Rat(1, 2)}));
  CHECK(newton_point(g2, make_brep(g2, {1, 0}, {})) == rv({1, 0}));
  CHECK(newton_point(g2, make_brep(g2, {0, 1}, {})) == rv({1, 0}));

  RootDatum g3 = make_gl(3);
  BRep cyc = make_brep(g3, {1, 0, 0}, {0, 1});
  CHECK(cyc.w.apply(Cochar{1, 0, 0}) == Cochar{0, 1, 0});
  CHECK(cyc.w.apply(Cochar{0, 1, 0}) == Cochar{0, 0, 1});
  CHECK(newton_point(g3, cyc) == rv({Rat(1, 3), Rat(1, 3), Rat(1, 3)}));

  RootDatum r = make_res_gl(1, 2);
  CHECK(newton_point(r, make_brep(r, {1, 0}, {})) == rv({Rat(1, 2), Rat(1, 2)}));
}

TEST_CASE("Kottwitz points") {
  RootDatum g2 = make_gl(2);
  CHECK(kottwitz_point(g2, make_brep(g2, {1, 0}, {0}), LeviSubset::full(1)) == IVec{1});
  CHECK(kottwitz_point(g2, make_brep(g2, {1, -1}, {}), LeviSubset::full(1)) == IVec{0});
  CHECK_THROWS_AS(kottwitz_point(g2, make_brep(g2, {1, 0}, {0}), LeviSubset::torus()), NotInLevi);
  CHECK_THROWS_AS(make_brep(g2, {1, 0}, {0}, LeviSubset::torus()), NotInLevi);

  RootDatum r = make_res_gl(1, 2);
  IVec k = kottwitz_point(r, make_brep(r, {1, 0}, {}), LeviSubset::torus());
  REQUIRE(k.size() == 1);
  CHECK((k[0] == 1 || k[0] == -1));
  CHECK(kottwitz_point(r, make_brep(r, {0, 1}, {}), LeviSubset::torus()) == k);
}

TEST_CASE("basic and centralizer Levi") {
  RootDatum g2 = make_gl(2);
  BRep s = make_brep(g2, {1, 0}, {0});
  CHECK(is_basic(g2, s));
  CHECK(centralizer_levi(g2, s) == LeviSubset::full(1));
  BRep t = make_brep(g2, {1, 0}, {});
  CHECK_FALSE(is_basic(g2, t));
  CHECK(centralizer_levi(g2, t) == LeviSubset::torus());
  CHECK(is_basic(g2, make_brep(g2, {3, 3}, {})));

  RootDatum g4 = make_gl(4);
  BRep ss = make_brep(g4, {1, 0, 1, 0}, {0, 2});
  CHECK(newton_point(g4, ss) == rv({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
  BRep mixed = make_brep(g4, {2, 0, 1, 0}, {0, 2});
  CHECK(centralizer_levi(g4, mixed) == LeviSubset({0, 2}));
}

TEST_CASE("superbasic test") {
  RootDatum g2 = make_gl(2);
  auto full = LeviSubset::full(1);
  CHECK(is_superbasic(g2, make_brep(g2, {1, 0}, {0}), full));
  CHECK_FALSE(is_superbasic(g2, make_brep(g2, {1, 1}, {0}), full));
  CHECK_FALSE(is_superbasic(g2, make_brep(g2, {1, 0}, {}), full));
  CHECK(is_superbasic(g2, make_brep(g2, {1, 0}, {}), LeviSubset::torus()));

  RootDatum g4 = make_gl(4);
  CHECK(is_superbasic(g4, make_brep(g4, {1, 0, 1, 0}, {0, 2}), LeviSubset({0, 2})));
  CHECK_FALSE(is_superbasic(g4, make_brep(g4, {1, 0, 1, 0}, {0, 2}), LeviSubset::full(3)));

  // Res_{F_2/F} GL_2: the Kottwitz integers add up across the two copies
  RootDatum r = make_res_gl(2, 2);
  auto rf = LeviSubset::full(2);
  CHECK(is_superbasic(r, make_brep(r, {1, 0, 0, 0}, {0}), rf));
  CHECK_FALSE(is_superbasic(r, make_brep(r, {1, 0, 1, 0}, {0, 1}), rf));

  // a basic element of a non-type-A group is never superbasic
  RootDatum sp = make_gsp(2);
  CHECK_THROWS_AS(is_superbasic(sp, make_brep(sp, {0, 0, 0}, {}), LeviSubset::full(2)), NotResTypeA);
  // unitary groups in three or more variables are not Res PGL_h
  RootDatum gu = make_gu(3);
  CHECK_THROWS_AS(is_superbasic(gu, make_brep(gu, {0, 0, 0, 0}, {}), LeviSubset::full(2)), NotResTypeA);
  RootDatum gu2 = make_gu(2);
  CHECK_NOTHROW(res_type_a_factors(gu2, LeviSubset::full(1)));
}

TEST_CASE("superbasic standard forms") {
  RootDatum g2 = make_gl(2);
  StandardForm f2 = superbasic_standard_form(g2, LeviSubset::full(1), {1, 0});
  CHECK(f2.b.lambda == Cochar{1, 0});
  CHECK(f2.b.w == g2.simple_reflection(0));
  CHECK(f2.exponents == std::vector<Int>{1});
  CHECK_FALSE(f2.note.empty());
  // the class of (3, -2) is the class of (1, 0)
  CHECK(superbasic_standard_form(g2, LeviSubset::full(1), {3, -2}).b.lambda == Cochar{1, 0});
  CHECK_THROWS_AS(superbasic_standard_form(g2, LeviSubset::full(1), {1, 1}), GcdConditionFails);

  RootDatum g3 = make_gl(3);
  StandardForm f3 = superbasic_standard_form(g3, LeviSubset::full(2), {1, 0, 0});
  CHECK(f3.b.lambda == Cochar{1, 0, 0});
  CHECK(f3.b.w.apply(Cochar{1, 0, 0}) == Cochar{0, 1, 0});
  CHECK(f3.b.w.apply(Cochar{0, 0, 1}) == Cochar{1, 0, 0});
  StandardForm f32 = superbasic_standard_form(g3, LeviSubset::full(2), {1, 1, 0});
  CHECK(f32.exponents == std::vector<Int>{2});
  CHECK(is_superbasic(g3, f32.b, LeviSubset::full(2)));

  // exponent 0 on one copy of a restriction of scalars
  RootDatum r = make_res_gl(2, 2);
  StandardForm fr = superbasic_standard_form(r, LeviSubset::full(2), {1, 0, 0, 0});
  CHECK(fr.exponents == std::vector<Int>{1, 0});
  CHECK(fr.b.lambda == Cochar{1, 0, 0, 0});
  CHECK(fr.b.w == r.simple_reflection(0));
  CHECK(is_superbasic(r, fr.b, LeviSubset::full(2)));

  for (const auto& d : {make_gl(4), make_res_gl(3, 2), make_res_gl(2, 3)}) {
    auto full = LeviSubset::full(d.num_simple());
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      Cochar rep(d.rank());
      for (auto& x : rep) x = static_cast<Int>(rng() % 5) - 2;
      StandardForm f;
      try {
        f = superbasic_standard_form(d, full, rep);
      } catch (const GcdConditionFails&) {
        continue;
      }
      CHECK(is_superbasic(d, f.b, full));
      CHECK(kottwitz_point(d, f.b, full) == Pi1Group(d, full).coinvariant_class(rep));
      CHECK(is_minuscule(d, f.b.lambda, full));
    }
  }
}

TEST_CASE("Newton point properties on generated representatives") {
  std::mt19937 rng(11);
  for (const auto& d : {make_gl(3), make_gu(3), make_gu(4), make_res_gl(2, 2), make_gsp(2), make_d4_triality(false)}) {
    auto full = LeviSubset::full(d.num_simple());
    auto weyl = d.weyl_group(full);
    for (int trial = 0; trial < 40; ++trial) {
      Cochar lam(d.rank());
      for (auto& x : lam) x = static_cast<Int>(rng() % 5) - 2;
      BRep b{lam, weyl[rng() % weyl.size()], std::nullopt};
      RatCochar nu = newton_point(d, b);
      CHECK(is_dominant(d, nu, full));
      CHECK(sigma_invariant(d, nu));

      // sigma-conjugating by a Weyl element u: (u lambda, u w sigma(u)^-1)
      const WeylElement& u = weyl[rng() % weyl.size()];
      BRep c{u.apply(lam), u * b.w * sigma_twist(d, u).inverse(), std::nullopt};
      CHECK(newton_point(d, c) == nu);
      CHECK(kottwitz_point(d, c, full) == kottwitz_point(d, b, full));
      if (superbasic_or_false(d, b, full)) CHECK(is_basic(d, b));
    }
  }
}

TEST_CASE("basic classes are determined by the Kottwitz point") {
  for (const auto& d : {make_gl(3), make_gu(3), make_res_gl(2, 2)}) {
    auto full = LeviSubset::full(d.num_simple());
    auto weyl = d.weyl_group(full);
    std::map<IVec, RatCochar> seen;
    // all lambda with entries in [-1, 1]
    std::vector<Cochar> lambdas;
    Cochar cur(d.rank(), -1);
    for (;;) {
      lambdas.push_back(cur);
      std::size_t k = 0;
      while (k < cur.size() && cur[k] == 1) cur[k++] = -1;
      if (k == cur.size()) break;
      ++cur[k];
    }
    for (const auto& lam : lambdas)
      for (const auto& w : weyl) {
        BRep b{lam, w, std::nullopt};
        if (!is_basic(d, b)) continue;
        IVec k = kottwitz_point(d, b, full);
        RatCochar nu = newton_point(d, b);
        auto [it, inserted] = seen.emplace(k, nu);
        if (!inserted) CHECK(it->second == nu);
      }
    CHECK(!seen.empty());
  }
}
