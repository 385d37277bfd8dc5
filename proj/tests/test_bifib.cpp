#include <random>

#include "doctest.h"
#include "reedylab/bifib.hpp"
#include "reedylab/zoo.hpp"

using namespace rlab;

namespace {

const Field Q = Field::rationals();

RepMap random_hom(const Rep& a, const Rep& b, std::mt19937_64& rng) {
  RepMap h = zero_map(a, b);
  for (const auto& g : hom_reps(a, b)) h = add(h, scale(random_scalar(rng, a.field()), g));
  return h;
}

// Every level C_{alpha+1} over C_alpha of a zoo instance.
std::vector<Level> levels(const ReedyCat& rc) {
  std::vector<Level> out;
  for (int a : rc.distinct_degrees()) out.push_back(make_level(truncate(rc, a + 1).rc));
  return out;
}

bool is_alg_hom(const AlgModule& src, const AlgModule& tgt, const Mat& h) {
  for (std::size_t i = 0; i < src.act.size(); ++i)
    if (h * src.act[i] != tgt.act[i] * h) return false;
  return true;
}

bool is_iso(const Rep& target, const RepMap& f) { return is_mono(f) && is_epi(target, f); }

const char* kLevelZoo[] = {"fin_all:2", "quiver_ab", "quiver_ab_inverse", "dual_numbers:2", "span_inj:2", "fin_inj:2"};

}  // namespace

TEST_CASE("property: fiber encoding round trips") {
  std::mt19937_64 rng(11);
  for (const char* s : kLevelZoo)
    for (const Level& lv : levels(*zoo(s, Q).rc))
      for (int t = 0; t < 25; ++t) {
        INFO(s << " alpha=" << lv.alpha << " trial " << t);
        Rep y = random_rep(lv.rc->cat(), rng, 3);
        FiberPoint p = fiber_encode(lv, y);
        for (std::size_t k = 0; k < lv.top.size(); ++k)
          CHECK(is_alg_module(lv.rc->local(lv.top[k]), p.value[k]));
        Rep back = fiber_decode(lv, p);
        CHECK(back == y);
        CHECK(fiber_encode(lv, back) == p);
      }
}

TEST_CASE("induced modules on the quiver") {
  auto z = zoo("quiver_ab", Q);
  Level lv = make_level(z.rc);
  const int a = z.rc->cat()->find_object("a"), b = z.rc->cat()->find_object("b");
  REQUIRE(lv.top == std::vector<int>{b});
  REQUIRE(lv.base.objs == std::vector<int>{a});
  Rep k = zero_rep(lv.base.rc->cat());
  k.dims[0] = 1;
  k.act[0][0][0] = Mat::identity(1, Q);
  auto iv = induced(lv, k, b);
  CHECK(iv.ind.dim == 1);
  CHECK(iv.coind.dim == 0);

  auto zi = zoo("quiver_ab_inverse", Q);
  Level li = make_level(zi.rc);
  REQUIRE(li.base.objs.size() == 1);
  Rep ki = zero_rep(li.base.rc->cat());
  ki.dims[0] = 1;
  ki.act[0][0][0] = Mat::identity(1, Q);
  auto ii = induced(li, ki, li.top[0]);
  CHECK(ii.ind.dim == 0);
  CHECK(ii.coind.dim == 1);

  // V = 0
  for (const char* s : kLevelZoo)
    for (const Level& l : levels(*zoo(s, Q).rc))
      for (int x : l.top) {
        auto i0 = induced(l, zero_rep(l.base.rc->cat()), x);
        CHECK(i0.ind.dim == 0);
        CHECK(i0.coind.dim == 0);
      }
}

TEST_CASE("values of representables and standard modules at top objects") {
  for (const char* s : kLevelZoo)
    for (const Level& lv : levels(*zoo(s, Q).rc))
      for (std::size_t k = 0; k < lv.top.size(); ++k) {
        const int x = lv.top[k];
        auto p = fiber_encode(lv, representable(lv.rc->cat(), x, Side::Left));
        CHECK(p.value[k].dim == lv.rc->cat()->dim(x, x));
        auto d = fiber_encode(lv, standard_module(*lv.rc, x, Side::Left));
        CHECK(d.value[k].dim == lv.rc->local(x).n);
      }
}

TEST_CASE("decode rejects inconsistent factorizations") {
  std::mt19937_64 rng(5);
  auto z = zoo("span_inj:2", Q);
  bool tested = false;
  for (const Level& lv : levels(*z.rc))
    for (int t = 0; t < 30 && !tested; ++t) {
      FiberPoint p = fiber_encode(lv, random_rep(lv.rc->cat(), rng, 3));
      for (std::size_t k = 0; k < lv.top.size(); ++k) {
        Induced iv = induced(lv, p.base, lv.top[k]);
        if (iv.tau.is_zero()) continue;
        FiberPoint bad = p;
        bad.m[k] = Mat(bad.m[k].rows(), bad.m[k].cols(), Q);
        CHECK_THROWS_AS(fiber_decode(lv, bad), FactorizationMismatch);
        tested = true;
      }
    }
  CHECK(tested);

  Level lv = make_level(zoo("quiver_ab", Q).rc);
  FiberPoint p = fiber_encode(lv, random_rep(lv.rc->cat(), rng, 2));
  p.l[0] = Mat(p.l[0].rows() + 1, p.l[0].cols(), Q);
  CHECK_THROWS_AS(fiber_decode(lv, p), FactorizationMismatch);
}

TEST_CASE("standard points decode") {
  std::mt19937_64 rng(3);
  for (const char* s : kLevelZoo)
    for (const Level& lv : levels(*zoo(s, Q).rc))
      for (int t = 0; t < 5; ++t) {
        Rep v = random_rep(lv.base.rc->cat(), rng, 2);
        for (PointKind k : {PointKind::Initial, PointKind::Terminal, PointKind::Mixed}) {
          Rep y = fiber_decode(lv, standard_point(lv, v, k));
          CHECK_FALSE(check_functorial(y));
        }
      }
}

TEST_CASE("lifts along the identity are isomorphisms") {
  std::mt19937_64 rng(8);
  for (const char* s : kLevelZoo)
    for (const Level& lv : levels(*zoo(s, Q).rc))
      for (int t = 0; t < 5; ++t) {
        Rep y = random_rep(lv.rc->cat(), rng, 3);
        Rep v = fiber_encode(lv, y).base;
        RepMap id = identity_map(v);
        Lift co = pushforward(lv, id, v, v, y);
        Lift ca = pullback_star(lv, id, v, v, y);
        CHECK(is_iso(co.rep, co.map));
        CHECK(is_iso(y, ca.map));
      }
}

TEST_CASE("property: cocartesian and cartesian lifts are universal") {
  std::mt19937_64 rng(21);
  for (const char* s : kLevelZoo)
    for (const Level& lv : levels(*zoo(s, Q).rc))
      for (int t = 0; t < 4; ++t) {
        INFO(s << " alpha=" << lv.alpha << " trial " << t);
        Rep y = random_rep(lv.rc->cat(), rng, 2);
        Rep v = fiber_encode(lv, y).base;
        Rep w = random_rep(lv.base.rc->cat(), rng, 2);
        RepMap u = random_hom(v, w, rng);
        Lift co = pushforward(lv, u, v, w, y);
        CHECK(fiber_encode(lv, co.rep).base == w);
        auto rc = check_cocartesian(lv, u, v, w, y, co, rng, 20);
        CHECK(rc.cones == 20);
        CHECK(rc.pass());

        Rep z = random_rep(lv.rc->cat(), rng, 2);
        Rep w2 = fiber_encode(lv, z).base;
        Rep v2 = random_rep(lv.base.rc->cat(), rng, 2);
        RepMap u2 = random_hom(v2, w2, rng);
        Lift ca = pullback_star(lv, u2, v2, w2, z);
        CHECK(fiber_encode(lv, ca.rep).base == v2);
        auto rp = check_cartesian(lv, u2, v2, w2, z, ca, rng, 20);
        CHECK(rp.cones == 20);
        CHECK(rp.pass());
      }
}

TEST_CASE("property: pushforward is left adjoint to pullback") {
  std::mt19937_64 rng(34);
  std::size_t instances = 0;
  for (const char* s : kLevelZoo)
    for (const Level& lv : levels(*zoo(s, Q).rc))
      for (int t = 0; t < 4; ++t) {
        INFO(s << " alpha=" << lv.alpha << " trial " << t);
        Rep y = random_rep(lv.rc->cat(), rng, 2), z = random_rep(lv.rc->cat(), rng, 2);
        Rep v = fiber_encode(lv, y).base, w = fiber_encode(lv, z).base;
        RepMap u = random_hom(v, w, rng);
        auto r = check_adjunction(lv, u, v, w, y, z, rng, 4);
        CHECK(r.nonempty_left == r.nonempty_right);
        CHECK(r.dim_left == r.dim_right);
        CHECK(r.pass());
        ++instances;
      }
  CHECK(instances >= 20);
}

TEST_CASE("property: maps factor through the lifts") {
  std::mt19937_64 rng(55);
  for (const char* s : kLevelZoo)
    for (const Level& lv : levels(*zoo(s, Q).rc))
      for (int t = 0; t < 4; ++t) {
        Rep y = random_rep(lv.rc->cat(), rng, 2), z = random_rep(lv.rc->cat(), rng, 2);
        RepMap f = random_hom(y, z, rng);
        auto ff = fiber_factor(lv, y, z, f);
        CHECK(compose(ff.right, ff.co.map) == f);
        CHECK(compose(ff.ca.map, ff.left) == f);
        CHECK(ff.right_freedom == 0);
        CHECK(ff.left_freedom == 0);
        // A cocartesian map factors through itself by an isomorphism.
        auto self = fiber_factor(lv, y, ff.co.rep, ff.co.map);
        CHECK(is_iso(ff.co.rep, self.right));
      }
}

TEST_CASE("per-object factorization oracles") {
  std::mt19937_64 rng(13);
  for (const char* s : {"dual_numbers:2", "span_inj:2", "cyclic_group:3", "fin_all:2"}) {
    auto z = zoo(s, Q);
    for (int x = 0; x < static_cast<int>(z.rc->size()); ++x) {
      const Algebra& a = z.rc->local(x);
      for (int t = 0; t < 5; ++t) {
        AlgModule p = random_alg_module(a, rng), q = random_alg_module(a, rng);
        REQUIRE(is_alg_module(a, p));
        auto hs = alg_hom(a, p, q);
        Mat g(q.dim, p.dim, Q);
        for (const Mat& h : hs) g = g + h.scaled(random_scalar(rng, Q));
        for (auto oracle : {proj_all_factor, all_inj_factor, all_all_factor}) {
          auto fr = oracle(a, p, q, g);
          CHECK(is_alg_module(a, fr.mid));
          CHECK(fr.right * fr.left == g);
          CHECK(is_alg_hom(p, fr.mid, fr.left));
          CHECK(is_alg_hom(fr.mid, q, fr.right));
        }
      }
    }
  }
}

TEST_CASE("glued factorizations") {
  auto z = zoo("quiver_ab", Q);
  const ReedyCat& rc = *z.rc;
  const int a = rc.cat()->find_object("a"), b = rc.cat()->find_object("b");
  // 0 -> S_b with projective cofibrations: P_b -> S_b.
  Rep sb = zero_rep(rc.cat());
  sb.dims[b] = 1;
  sb.act[b][b][0] = Mat::identity(1, Q);
  Rep zero = zero_rep(rc.cat());
  auto w = glue_factorization(rc, zero, sb, zero_map(zero, sb), proj_all_pair(rc.size()));
  CHECK(w.valid());
  CHECK(w.mid.dims[b] == 1);
  CHECK(w.mid.dims[a] == 0);
  CHECK(is_projective_rep(w.mid));

  std::mt19937_64 rng(17);
  for (const char* s : {"quiver_ab", "dual_numbers:2", "fin_inj:2", "span_inj:2"}) {
    auto zz = zoo(s, Q);
    for (int t = 0; t < 5; ++t) {
      INFO(s << " trial " << t);
      Rep m = random_rep(zz.rc->cat(), rng, 2), n = random_rep(zz.rc->cat(), rng, 2);
      RepMap f = random_hom(m, n, rng);
      for (const auto& pair : {proj_all_pair(zz.rc->size()), all_all_pair(zz.rc->size())}) {
        auto g = glue_factorization(*zz.rc, m, n, f, pair);
        CHECK(g.composite);
        CHECK(g.left_mono);
        CHECK(g.right_epi);
        CHECK(g.valid());
      }
      auto id = glue_factorization(*zz.rc, m, m, identity_map(m), all_all_pair(zz.rc->size()));
      CHECK(id.valid());
    }
  }

  // M -> 0 with injective fibrations on the inverse quiver.
  auto zi = zoo("quiver_ab_inverse", Q);
  for (int t = 0; t < 5; ++t) {
    Rep m = random_rep(zi.rc->cat(), rng, 2);
    Rep z0 = zero_rep(zi.rc->cat());
    auto g = glue_factorization(*zi.rc, m, z0, zero_map(m, z0), all_inj_pair(zi.rc->size()));
    CHECK(g.valid());
    CHECK(is_injective_rep(g.mid));
  }

  ClassPair missing = proj_all_pair(rc.size());
  missing.factor[b] = nullptr;
  CHECK_THROWS_AS(glue_factorization(rc, zero, sb, zero_map(zero, sb), missing), OracleMissing);
  // The fixed morphism spans a non-projective kC_2-module in characteristic 2.
  auto fa = zoo("orbit_c2", Field::prime(2));
  Rep fz = zero_rep(fa.rc->cat());
  CHECK_THROWS_AS(glue_factorization(*fa.rc, fz, fz, identity_map(fz), proj_all_pair(fa.rc->size())),
                  std::domain_error);
}

TEST_CASE("glued cotorsion pairs") {
  for (const char* s : {"quiver_ab", "fin_inj:2"}) {
    INFO(s);
    auto z = zoo(s, Q);
    auto r = cotorsion_glue_check(*z.rc, proj_all_pair(z.rc->size()), 8, 99);
    CHECK(r.pass());
    CHECK(r.orthogonality == "SAMPLED");
    auto bat = battery(*z.rc, 8, 99);
    for (std::size_t k = 0; k < bat.size(); ++k) CHECK(r.in_phi[k] == is_projective_rep(bat[k]));
  }
  auto zi = zoo("quiver_ab_inverse", Q);
  auto r = cotorsion_glue_check(*zi.rc, all_inj_pair(zi.rc->size()), 8, 7);
  CHECK(r.pass());
  auto bat = battery(*zi.rc, 8, 7);
  for (std::size_t k = 0; k < bat.size(); ++k) CHECK(r.in_psi[k] == is_injective_rep(bat[k]));
}

TEST_CASE("compatibility functors") {
  auto z = zoo("dual_numbers:2", Q);
  const ReedyCat& rc = *z.rc;
  std::mt19937_64 rng(2);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x) {
      if (x == y) continue;
      AlgModule s = random_alg_module(rc.local(y), rng);
      CHECK(is_alg_module(rc.local(x), plus_tensor(rc, y, x, s)));
      CHECK(is_alg_module(rc.local(x), minus_hom(rc, y, x, s)));
    }
  // The free module tensors to plus(y, x) itself.
  const int a = rc.cat()->find_object("a"), b = rc.cat()->find_object("b");
  CHECK(plus_tensor(rc, a, b, regular_module(rc.local(a))).dim == rc.plus(a, b).dim());
}

TEST_CASE("Hovey triples") {
  auto z = zoo("dual_numbers:2", Q);
  auto st = hovey_glue_check(*z.rc, stable_triple(z.rc->size()), 6, 4);
  CHECK(st.cocompatible.pass);
  CHECK(st.compatible.pass);
  CHECK(st.cof.pass());
  CHECK(st.fib.pass());
  CHECK(st.phi_identity);
  CHECK(st.psi_identity);
  CHECK(st.thick_violations == 0);
  CHECK(st.pass());

  CHECK(hovey_glue_check(*z.rc, trivial_triple(z.rc->size()), 4, 1).pass());

  // Everything at a, nothing at b: plus(a, b) (x) k is nonzero.
  auto q = zoo("quiver_ab", Q);
  const int a = q.rc->cat()->find_object("a"), b = q.rc->cat()->find_object("b");
  ClassFamily mixed = uniform_family("mixed", 2, all_modules());
  mixed.member[b] = zero_modules();
  auto c = check_cocompatible(*q.rc, mixed, 1);
  CHECK_FALSE(c.pass);
  REQUIRE_FALSE(c.witnesses.empty());
  CHECK(c.witnesses.front().find("(" + q.rc->cat()->object(a) + ", " + q.rc->cat()->object(b)) == 0);
}
