#include <random>

#include "doctest.h"
#include "reedylab/decomposition.hpp"
#include "reedylab/zoo.hpp"

using namespace rlab;

namespace {

const Field Q = Field::rationals();

bool is_diagonal(const std::vector<std::vector<std::size_t>>& t) {
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y)
      if (x != y && t[x][y]) return false;
  return true;
}

std::vector<std::size_t> diag(const std::vector<std::vector<std::size_t>>& t) {
  std::vector<std::size_t> d;
  for (std::size_t x = 0; x < t.size(); ++x) d.push_back(t[x][x]);
  return d;
}

const Condition& cond(const DecompositionVerdict& v, char tag) {
  for (const auto& c : v.conditions)
    if (c.name[1] == tag) return c;
  throw std::logic_error("no such condition");
}

}  // namespace

TEST_CASE("central idempotents") {
  auto s = zoo("span_inj:2", Q);
  const LinCat& l = *s.rc->cat();
  // minimal object
  auto e0 = find_central_idempotent(*s.rc, 0);
  REQUIRE(e0);
  CHECK(is_zero(e0->e));
  CHECK(e0->f == l.identity(0));
  // at [1] the unit of the ideal is the class of the empty span
  auto e1 = find_central_idempotent(*s.rc, 1);
  REQUIRE(e1);
  REQUIRE(l.dim(1, 1) == 2);
  const Subspace ideal = s.rc->ideal(1, 1, 1);
  REQUIRE(ideal.dim() == 1);
  CHECK(e1->e == ideal.basis()[0]);
  for (int x = 0; x < 3; ++x) {
    auto e = find_central_idempotent(*s.rc, x);
    REQUIRE(e);
    CHECK(l.compose(x, x, x, e->e, e->e) == e->e);
    CHECK(e->solution_dim == 0);
    CHECK(e->corner_equals_ideal);
    CHECK(e->delta_iso);
  }

  auto fi = zoo("fin_inj:2", Q);
  for (int x = 0; x < 3; ++x) {
    auto e = find_central_idempotent(*fi.rc, x);
    REQUIRE(e);
    CHECK(is_zero(e->e));
  }
}

TEST_CASE("no central unit at [2] in fin_all(2)") {
  auto fa = zoo("fin_all:2", Q);
  CHECK_FALSE(find_central_idempotent(*fa.rc, 2).has_value());
  // Independent search over F_3: no e in I with e b = b for every b in I.
  auto f3 = zoo("fin_all:2", Field::prime(3));
  const LinCat& l = *f3.rc->cat();
  auto basis = f3.rc->ideal(2, 2, 2).basis();
  REQUIRE(basis.size() == 2);
  bool found = false;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Vec e = add(scale(Scalar(l.field(), a), basis[0]), scale(Scalar(l.field(), b), basis[1]));
      bool unit = true;
      for (const Vec& v : basis) unit = unit && l.compose(2, 2, 2, e, v) == v && l.compose(2, 2, 2, v, e) == v;
      found = found || unit;
    }
  CHECK_FALSE(found);
}

TEST_CASE("Theorem C verdicts") {
  auto s = zoo("span_inj:2", Q);
  auto v = check_theorem_C(*s.rc);
  CHECK(v.pass());
  CHECK(is_diagonal(v.orthogonality));
  CHECK(diag(v.orthogonality) == std::vector<std::size_t>{1, 1, 2});
  CHECK(v.end_dims == v.local_dims);
  for (bool p : v.delta_projective) CHECK(p);

  CHECK(check_theorem_C(*zoo("cyclic_group:3", Q).rc).pass());

  auto fa = check_theorem_C(*zoo("fin_all:2", Q).rc);
  CHECK_FALSE(fa.pass());
  CHECK_FALSE(fa.idempotents[2].has_value());

  // The idempotent condition holds literally at a, but Delta_a is not C f_a: the verdict fails.
  auto qi = zoo("quiver_ab_inverse", Q);
  auto e = find_central_idempotent(*qi.rc, 0);
  REQUIRE(e);
  CHECK(e->corner_equals_ideal);
  CHECK_FALSE(e->delta_iso);
  CHECK_FALSE(check_theorem_C(*qi.rc).pass());
}

TEST_CASE("Theorem D verdicts") {
  auto sp = check_theorem_D(*zoo("span_poset:2", Q).rc);
  CHECK(sp.pass());
  CHECK(is_diagonal(sp.orthogonality));

  auto si = check_theorem_D(*zoo("span_inj:2", Q).rc);
  CHECK(si.pass());
  CHECK(diag(si.orthogonality) == std::vector<std::size_t>{1, 1, 2});
  CHECK(cond(si, 'b').route == "group-algebra");

  // fin_all(2) fails the dimension condition: 2 injections [1] -> [2] against 1 surjection back.
  auto fa = check_theorem_D(*zoo("fin_all:2", Q).rc);
  CHECK_FALSE(fa.pass());
  CHECK_FALSE(cond(fa, 'c').pass);
  CHECK_FALSE(is_diagonal(fa.orthogonality));
  CHECK(fa.orthogonality[1][0] == 1);

  auto o = zoo("orbit_c2", Q);
  CHECK(check_theorem_D(*o.rc).pass());
  CHECK(check_theorem_D_dual(*o.rc).pass());
  // Characteristic 2: the fixed morphism spans a non-free kC_2-module.
  auto o2 = zoo("orbit_c2", Field::prime(2));
  auto v2 = check_theorem_D(*o2.rc);
  CHECK_FALSE(v2.pass());
  CHECK_FALSE(cond(v2, 'b').pass);
  CHECK(cond(v2, 'c').pass);
  CHECK_FALSE(verify_orthogonal_projective_generators(*o2.rc).pass());
}

TEST_CASE("nondegeneracy formulations agree") {
  for (const char* spec : {"fin_all:2", "fin_inj:3", "fin_surj:3", "span_inj:2", "span_poset:3", "cyclic:2",
                           "vect_fq:2,2", "quiver_ab", "dual_numbers:2", "orbit_c2"}) {
    auto z = zoo(spec, Q);
    const int n = static_cast<int>(z.rc->size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        INFO(spec << " " << x << " " << y);
        auto a = nondegeneracy(*z.rc, x, y);
        auto b = nondegeneracy_dual(*z.rc, x, y);
        CHECK(a.injective_map == a.pairing_kernel_zero);
        CHECK(b.injective_map == b.pairing_kernel_zero);
      }
  }
}

TEST_CASE("passing verdicts give diagonal tables") {
  for (const char* spec : {"fin_all:1", "fin_inj:2", "fin_surj:3", "simplex:2", "cyclic:3", "span_inj:3",
                           "span_poset:3", "vect_fq:2,2", "quiver_ab", "quiver_ab_inverse", "dual_numbers:2",
                           "orbit_c2", "cyclic_group:4"}) {
    auto z = zoo(spec, Q);
    for (const auto& v : {check_theorem_C(*z.rc), check_theorem_D(*z.rc), check_theorem_D_dual(*z.rc)}) {
      INFO(spec << " " << to_string(v.criterion) << (v.dual ? " dual" : ""));
      if (!v.pass()) continue;
      CHECK(is_diagonal(v.orthogonality));
      CHECK(v.end_dims == v.local_dims);
      if (!v.dual)
        for (bool p : v.delta_projective) CHECK(p);
    }
  }
}

TEST_CASE("orthogonal projective generators") {
  auto g = verify_orthogonal_projective_generators(*zoo("span_inj:2", Q).rc);
  CHECK(g.pass());
  // Direct category: standard modules are representable, projective, not orthogonal.
  auto d = verify_orthogonal_projective_generators(*zoo("quiver_ab", Q).rc);
  CHECK_FALSE(d.diagonal());
  CHECK(d.orthogonality[1][0] == 1);
  for (bool p : d.projective_split) CHECK(p);
  for (bool p : d.projective_ext) CHECK(p);
  for (bool p : d.representable_decomposes) CHECK(p);
  CHECK(verify_orthogonal_projective_generators(*zoo("cyclic_group:3", Q).rc).pass());
}

TEST_CASE("Morita reconstruction") {
  auto s = zoo("span_inj:2", Q);
  const ReedyCat& rc = *s.rc;
  auto g = verify_orthogonal_projective_generators(rc);
  REQUIRE(g.pass());
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 25; ++t) {
    Rep m = random_rep(rc.cat(), rng, 3);
    auto md = morita_report(rc, m, &g);
    INFO("trial " << t);
    CHECK(md.reconstructed);
    for (int x = 0; x < 3; ++x) {
      CHECK(md.family[x].dim == hom_dim(standard_module(rc, x, Side::Left), m));
      CHECK(is_alg_module(rc.local(x), md.family[x]));
    }
  }
  // Delta_x maps to A_x^0 at x and zero elsewhere.
  for (int x = 0; x < 3; ++x) {
    auto md = morita_report(rc, standard_module(rc, x, Side::Left), &g);
    for (int y = 0; y < 3; ++y) CHECK(md.family[y].dim == (y == x ? rc.local(x).n : 0));
  }
  // Representables: family dims are dim minus(y, z).
  for (int y = 0; y < 3; ++y) {
    auto md = morita_report(rc, representable(rc.cat(), y, Side::Left), &g);
    for (int z = 0; z < 3; ++z) CHECK(md.family[z].dim == rc.minus(y, z).dim());
    CHECK(md.reconstructed);
  }
  auto z0 = morita_report(rc, zero_rep(rc.cat()), &g);
  for (const auto& f : z0.family) CHECK(f.dim == 0);
  CHECK(z0.reconstructed);

  CHECK_THROWS_AS(morita_report(*zoo("fin_all:2", Q).rc, zero_rep(zoo("fin_all:2", Q).rc->cat())),
                  GeneratorsNotVerified);
}

TEST_CASE("Theorem E pipeline") {
  auto v = check_theorem_E(fin_inj_ei(2), Q);
  CHECK(v.pass());
  REQUIRE(v.decomposition);
  CHECK(diag(v.decomposition->orthogonality) == std::vector<std::size_t>{1, 1, 2});
  CHECK(v.decomposition->criterion == Criterion::SpanEI);

  auto f2 = check_theorem_E(fin_inj_ei(2), Field::prime(2));
  CHECK_FALSE(f2.pass());
  CHECK_FALSE(f2.conditions.groups_invertible);
  CHECK(f2.conditions.all_mono);

  CHECK(check_theorem_E(chain_poset_ei(2), Field::prime(3)).pass());

  auto fa = check_theorem_E(fin_all_ei(2), Q);
  CHECK_FALSE(fa.pass());
  CHECK_FALSE(fa.conditions.all_mono);
  CHECK_FALSE(fa.rc);
}
