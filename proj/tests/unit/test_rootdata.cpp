#include "adlv/intlinalg.hpp"
#include "adlv/rootdata.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace adlv;

namespace {

std::vector<RootDatum> all_presets() {
  std::vector<RootDatum> out;
  for (std::size_t n = 1; n <= 5; ++n) out.push_back(make_gl(n));
  for (std::size_t n = 2; n <= 5; ++n) out.push_back(adjoint_of(make_gl(n)));
  for (std::size_t n = 2; n <= 5; ++n) out.push_back(make_gu(n));
  out.push_back(make_res_gl(2, 2));
  out.push_back(make_res_gl(2, 3));
  out.push_back(make_gsp(2));
  out.push_back(make_gsp(3));
  out.push_back(make_so_even(4, false));
  out.push_back(make_so_even(4, true));
  out.push_back(make_d4_triality(false));
  out.push_back(make_d4_triality(true));
  out.push_back(make_product(make_gl(2), make_gl(3)));
  return out;
}

// independent count of |Phi| from the Cartan type of each preset family
std::size_t expected_roots(const std::string& name) {
  if (name == "GL(1)") return 0;
  if (name == "GL(2)") return 2;
  if (name == "GL(3)") return 6;
  if (name == "GL(4)") return 12;
  if (name == "GL(5)") return 20;
  if (name == "GSp(4)") return 8;
  if (name == "GSp(6)") return 18;
  if (name == "SO(8)" || name == "QSO(8)") return 24;
  return 0;
}

}  // namespace

TEST_CASE("split GL presets") {
  RootDatum g = make_gl(2);
  CHECK(g.rank() == 2);
  REQUIRE(g.num_simple() == 1);
  CHECK(g.simple_root(0) == IVec{1, -1});
  CHECK(g.sigma() == IntMatrix::identity(2));
  for (const auto& d : all_presets())
    if (expected_roots(d.name()) != 0) CHECK(d.roots().size() == expected_roots(d.name()));
}

TEST_CASE("GU(5) sigma reverses the Dynkin diagram") {
  RootDatum g = make_gu(5);
  CHECK(g.sigma_order() == 2);
  CHECK(g.sigma() * g.sigma() == IntMatrix::identity(6));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(g.sigma_permutation()[i] == 3 - i);
    CHECK(g.sigma_on_characters().apply(g.simple_root(i)) == g.simple_root(3 - i));
  }
  // sigma(e_i^*) = c^* - e^*_{n+1-i}
  IVec e1(6, 0);
  e1[0] = 1;
  CHECK(g.sigma_on_characters().apply(e1) == IVec{0, 0, 0, 0, -1, 1});
}

TEST_CASE("ResGL(2,2) swaps the factors") {
  RootDatum g = make_res_gl(2, 2);
  CHECK(g.sigma_order() == 2);
  CHECK(g.sigma_permutation() == std::vector<std::size_t>{1, 0});
  CHECK(g.apply_sigma(IVec{1, 2, 3, 4}) == IVec{3, 4, 1, 2});
}

TEST_CASE("invalid data is rejected") {
  RootDatumInput affine;
  affine.cochar_rank = 2;
  affine.simple_roots = {{2, -2}, {-2, 2}};
  affine.simple_coroots = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(RootDatum(affine), RootDatumError);

  RootDatumInput positive;
  positive.cochar_rank = 2;
  positive.simple_roots = {{2, 1}, {1, 2}};
  positive.simple_coroots = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(RootDatum(positive), RootDatumError);

  RootDatumInput twisted;
  twisted.cochar_rank = 3;
  twisted.simple_roots = {{1, -1, 0}, {0, 1, -1}};
  twisted.simple_coroots = {{1, -1, 0}, {0, 1, -1}};
  twisted.sigma = IntMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(RootDatum(twisted), RootDatumError);

  CHECK_THROWS_AS(make_preset("E8", {}), RootDatumError);
}

TEST_CASE("pairing is bilinear and sigma-equivariant") {
  RootDatum g4 = make_gl(4);
  CHECK(pairing(g4, IVec{0, 1, -1, 0}, IVec{1, 0, 1, 0}) == -1);
  CHECK(pairing(g4, IVec{0, 1, -1, 0}, IVec{0, 0, 0, 0}) == 0);
  std::mt19937 rng(3);
  for (const auto& d : all_presets()) {
    for (const auto& r : d.roots()) CHECK(d.pair(r.root, r.coroot) == 2);
    for (int t = 0; t < 10; ++t) {
      IVec chi(d.rank()), lam(d.rank());
      for (auto& x : chi) x = static_cast<Int>(rng() % 5) - 2;
      for (auto& x : lam) x = static_cast<Int>(rng() % 5) - 2;
      CHECK(d.pair(d.sigma_on_characters().apply(chi), d.sigma().apply(lam)) == d.pair(chi, lam));
    }
  }
}

TEST_CASE("dominant representatives") {
  RootDatum g2 = make_gl(2);
  auto full2 = LeviSubset::full(1);
  auto [r2, w2] = dominant_rep(g2, IVec{0, 1}, full2);
  CHECK(r2 == IVec{1, 0});
  CHECK(w2 == g2.simple_reflection(0));
  auto [r2b, w2b] = dominant_rep(g2, IVec{3, 1}, full2);
  CHECK(r2b == IVec{3, 1});
  CHECK(w2b.is_identity());

  RootDatum g3 = make_gl(3);
  auto [r3, w3] = dominant_rep(g3, IVec{0, 1, -1}, LeviSubset::full(2));
  CHECK(r3 == IVec{1, 0, -1});
  CHECK(w3.length() == 1);
  CHECK(w3.apply(IVec{0, 1, -1}) == r3);
  CHECK(dominant_rep(g3, r3, LeviSubset::full(2)).first == r3);
}

TEST_CASE("dominance orders") {
  RootDatum g2 = make_gl(2);
  auto full = LeviSubset::full(1);
  CHECK(dominance(g2, IVec{1, 0}, IVec{2, -1}, DominanceMode::integral, full));
  CHECK(dominance(g2, RVec{Rat(1, 2), Rat(1, 2)}, RVec{Rat(1), Rat(0)}, DominanceMode::rational, full));
  CHECK_THROWS(dominance(g2, RVec{Rat(1, 2), Rat(1, 2)}, RVec{Rat(1), Rat(0)}, DominanceMode::integral, full));
  RootDatum g3 = make_gl(3);
  auto f3 = LeviSubset::full(2);
  // e1 - e2 expands as (1, 0): comparable in one direction only
  CHECK(dominance(g3, IVec{0, 1, 0}, IVec{1, 0, 0}, DominanceMode::integral, f3));
  CHECK_FALSE(dominance(g3, IVec{1, 0, 0}, IVec{0, 1, 0}, DominanceMode::integral, f3));
  CHECK_FALSE(dominance(g3, IVec{1, 0, 0}, IVec{0, 0, 1}, DominanceMode::rational, LeviSubset({1})));
}

TEST_CASE("norms") {
  RootDatum r = make_res_gl(2, 2);
  auto n = norms(r, IVec{1, -1, -1, 1});
  CHECK(n.plain == 2);
  CHECK(n.galois == 0);
  RootDatum g3 = make_gl(3);
  auto m = norms(g3, IVec{1, 0, -1});
  CHECK(m.plain == 2);
  CHECK(m.galois == 2);
  CHECK(norms(g3, IVec{0, 0, 0}).plain == 0);
  CHECK_THROWS(norms(g3, IVec{1, 0, 0}));
}

TEST_CASE("longest elements") {
  RootDatum g4 = make_gl(4);
  CHECK(longest_element(g4, LeviSubset::torus()).is_identity());
  RootDatum g2 = make_gl(2);
  CHECK(longest_element(g2, LeviSubset::full(1)) == g2.simple_reflection(0));
  LeviSubset l({0, 2});
  WeylElement w0 = longest_element(g4, l);
  CHECK(w0 == g4.simple_reflection(0) * g4.simple_reflection(2));
  for (const auto& d : all_presets()) {
    auto full = LeviSubset::full(d.num_simple());
    WeylElement w = longest_element(d, full);
    CHECK((w * w).is_identity());
    for (std::size_t r : d.positive_roots_of(full)) CHECK_FALSE(d.root(d.weyl_root(w, r)).positive);
  }
}

TEST_CASE("closed symmetric closures in C2") {
  RootDatum c2 = make_gsp(2);
  // beta_0 short, beta_1 long
  REQUIRE(c2.cartan(0, 1) == -1);
  REQUIRE(c2.cartan(1, 0) == -2);
  auto b1 = *c2.find_root(add(c2.simple_root(0), c2.simple_root(1)));
  auto all = closed_symmetric_closure(c2, {0, b1});
  CHECK(all.roots.size() == 8);
  auto long_pos = *c2.find_root(add(scale(2, c2.simple_root(0)), c2.simple_root(1)));
  auto longs = closed_symmetric_closure(c2, {1, long_pos});
  CHECK(longs.roots.size() == 4);
  auto basis = subsystem_basis(c2, longs);
  CHECK(std::set<std::size_t>(basis.begin(), basis.end()) == std::set<std::size_t>{1, long_pos});
  CHECK(subsystem_components(c2, longs).size() == 2);
  CHECK(closed_symmetric_closure(c2, {0, 1}).roots.size() == 8);
}

TEST_CASE("GU(5) subsystem basis is the simple system") {
  RootDatum g = make_gu(5);
  auto s = closed_symmetric_closure(g, {0, 1, 2, 3});
  auto basis = subsystem_basis(g, s);
  CHECK(basis == std::vector<std::size_t>{0, 1, 2, 3});
  auto m = closed_symmetric_closure(g, {0, 3});
  CHECK(subsystem_basis(g, m) == std::vector<std::size_t>{0, 3});
}

TEST_CASE("orthogonal decomposition") {
  RootDatum g3 = make_gl(3);
  auto d = orthogonal_decomposition(g3, IVec{1, 1, 0}, IVec{0, 1, 1});
  REQUIRE(d.size() == 1);
  CHECK(g3.root(d[0]).coroot == IVec{1, 0, -1});
  CHECK(orthogonal_decomposition(g3, IVec{1, 1, 0}, IVec{1, 1, 0}).empty());
  RootDatum g4 = make_gl(4);
  auto e = orthogonal_decomposition(g4, IVec{1, 0, 1, 0}, IVec{0, 1, 0, 1});
  REQUIRE(e.size() == 2);
  std::set<IVec> got{g4.root(e[0]).coroot, g4.root(e[1]).coroot};
  CHECK(got == std::set<IVec>{{1, -1, 0, 0}, {0, 0, 1, -1}});
  CHECK_THROWS(orthogonal_decomposition(g4, IVec{2, 0, 0, 0}, IVec{0, 2, 0, 0}));
  CHECK_THROWS(orthogonal_decomposition(g4, IVec{1, 0, 0, 0}, IVec{1, 1, 0, 0}));

  // all W-conjugate minuscule pairs of GL4 and GSp4: postconditions
  for (const auto& [dat, mu] : std::vector<std::pair<RootDatum, IVec>>{{make_gl(4), {1, 1, 0, 0}}, {make_gsp(2), {1, 1, 1}}}) {
    auto orbit = dat.weyl_group(LeviSubset::full(dat.num_simple()));
    std::set<IVec> pts;
    for (const auto& w : orbit) pts.insert(w.apply(mu));
    for (const auto& a : pts)
      for (const auto& b : pts) {
        auto gs = orthogonal_decomposition(dat, a, b);
        IVec sum(dat.rank(), 0);
        Int len = 0;
        for (std::size_t i = 0; i < gs.size(); ++i) {
          const auto& r = dat.root(gs[i]);
          sum = add(sum, r.coroot);
          len += norms(dat, r.coroot).plain;
          CHECK(dat.pair(r.root, a) == 1);
          CHECK(dat.pair(r.root, b) == -1);
          for (std::size_t j = 0; j < i; ++j) CHECK(dat.pair(r.root, dat.root(gs[j]).coroot) == 0);
        }
        CHECK(sum == sub(a, b));
        CHECK(len == norms(dat, sub(a, b)).plain);
      }
  }
}

TEST_CASE("Galois orbits pair to 0 or -1, with -1 only in even type A") {
  for (const auto& d : all_presets()) {
    bool has_minus_one = false;
    for (std::size_t a = 0; a < d.roots().size(); ++a) {
      for (std::size_t b = d.sigma_root(a); b != a; b = d.sigma_root(b)) {
        Int p = d.pair(d.root(a).root, d.root(b).coroot);
        CHECK((p == 0 || p == -1));
        if (p == -1) has_minus_one = true;
      }
    }
    bool even_a = d.name() == "GU(3)" || d.name() == "GU(5)";
    CHECK(has_minus_one == even_a);
  }
  // A_4 with the diagram flip: <alpha, tau alpha^vee> = -1 exactly when an index is the middle one
  RootDatum g = make_gu(5);
  for (std::size_t a = 0; a < g.roots().size(); ++a) {
    std::size_t b = g.sigma_root(a);
    if (a == b) continue;
    const IVec& c = g.root(a).root;
    std::size_t i = 0, j = 0;
    for (std::size_t k = 0; k < 5; ++k) {
      if (c[k] == 1) i = k;
      if (c[k] == -1) j = k;
    }
    bool middle = i == 2 || j == 2;
    CHECK((g.pair(c, g.root(b).coroot) == -1) == middle);
  }
}

TEST_CASE("root sums with negative pairing are roots") {
  for (const auto& d : all_presets())
    for (std::size_t a = 0; a < d.roots().size(); ++a)
      for (std::size_t b = 0; b < d.roots().size(); ++b) {
        if (b == d.negative_of(a)) continue;
        if (d.pair(d.root(a).root, d.root(b).coroot) < 0)
          CHECK(d.find_root(add(d.root(a).root, d.root(b).root)).has_value());
      }
}

TEST_CASE("regrouping sums of roots") {
  std::mt19937 rng(5);
  for (const auto& d : all_presets()) {
    if (d.roots().empty()) continue;
    for (int t = 0; t < 30; ++t) {
      std::vector<std::size_t> s;
      std::size_t k = 1 + rng() % 5;
      for (std::size_t i = 0; i < k; ++i) s.push_back(rng() % d.roots().size());
      IVec sum(d.rank(), 0);
      for (std::size_t r : s) sum = add(sum, d.root(r).root);
      auto g = regroup_roots(d, s);
      IVec got(d.rank(), 0);
      for (std::size_t r : g) got = add(got, d.root(r).root);
      CHECK(got == sum);
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
          if (i != j) CHECK(d.pair(d.root(g[i]).root, d.root(g[j]).coroot) >= 0);
      IVec csum(d.rank(), 0);
      for (std::size_t r : s) csum = add(csum, d.root(r).coroot);
      auto gc = regroup_coroots(d, s);
      IVec cgot(d.rank(), 0);
      for (std::size_t r : gc) cgot = add(cgot, d.root(r).coroot);
      CHECK(cgot == csum);
    }
  }
}

TEST_CASE("adjoint projection is sigma-equivariant") {
  for (const auto& d : all_presets()) {
    if (d.num_simple() == 0) continue;
    RootDatum ad = adjoint_of(d);
    IntMatrix p = adjoint_projection(d);
    CHECK(ad.sigma() * p == p * d.sigma());
    for (std::size_t i = 0; i < d.num_simple(); ++i) CHECK(p.apply(d.simple_coroot(i)) == ad.simple_coroot(i));
  }
}

TEST_CASE("named presets") {
  CHECK(make_preset("GL", {3}).rank() == 3);
  CHECK(make_preset("PGL", {3}).rank() == 2);
  CHECK(make_preset("GSp", {4}).num_simple() == 2);
  CHECK(make_preset("QSO", {8}).sigma_order() == 2);
  CHECK(make_preset("D4-triality", {}).sigma_order() == 3);
  CHECK_THROWS(make_preset("GSp", {3}));
}
