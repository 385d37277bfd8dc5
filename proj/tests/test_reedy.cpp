#include <chrono>
#include <random>

#include "doctest.h"
#include "reedylab/zoo.hpp"

using namespace rlab;

namespace {
const Field Q = Field::rationals();

const std::vector<std::string> kSuite = {"fin_all:1",  "fin_all:2", "fin_all:3", "fin_inj:2", "fin_inj:3",
                                         "fin_surj:2", "fin_surj:3", "simplex:3", "cyclic:3",  "vect_fq:2,2"};

int obj(const ReedyCat& rc, const std::string& s) { return rc.cat()->find_object(s); }

// Brute force: number of set maps [m] -> [n].
std::size_t power(std::size_t n, std::size_t m) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < m; ++i) r *= n;
  return r;
}
}  // namespace

TEST_CASE("every suite instance passes check_reedy") {
  for (const auto& name : kSuite) {
    CAPTURE(name);
    auto t0 = std::chrono::steady_clock::now();
    auto z = zoo(name, Q);
    auto rep = check_reedy(*z.rc);
    for (const auto& v : rep.violations) MESSAGE(v);
    CHECK(rep.pass());
    for (const auto& p : rep.pairs) {
      std::size_t s = 0;
      for (const auto& [zz, d] : p.block_dims) s += d;
      CHECK(s == p.hom_dim);
      CHECK(p.rank == p.hom_dim);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 10.0);
  }
}

TEST_CASE("fin_all(2) rho blocks") {
  auto z = zoo("fin_all:2", Q);
  const auto& rc = *z.rc;
  int o1 = obj(rc, "[1]"), o2 = obj(rc, "[2]");
  CHECK(rc.cat()->dim(o2, o2) == power(2, 2));
  const auto& d = rc.rho(o2, o2);
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0].z == o1);
  CHECK(d.blocks[0].dim() == 2);
  CHECK(d.blocks[1].z == o2);
  CHECK(d.blocks[1].dim() == 2);
  const auto& e = rc.rho(o1, o2);
  CHECK(e.domain_dim == 2);
  CHECK(rank(e.rho) == 2);
}

TEST_CASE("direct category: rho is the identity") {
  auto z = zoo("fin_inj:2", Q);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      const auto& d = z.rc->rho(x, y);
      if (d.domain_dim) CHECK(Subspace::column_span(d.rho) == Subspace::full(z.rc->cat()->dim(x, y), Q));
      CHECK(d.domain_dim == z.rc->cat()->dim(x, y));
    }
}

TEST_CASE("swapped plus and minus fail axiom (a)") {
  auto z = zoo("fin_all:2", Q);
  ReedyStructure r = z.rc->structure();
  std::swap(r.plus, r.minus);
  ReedyCat bad(z.rc->cat(), r);
  auto rep = check_reedy(bad);
  CHECK_FALSE(rep.axiom_a);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("factorization round trip over the suite") {
  for (const auto& name : kSuite) {
    CAPTURE(name);
    auto z = zoo(name, Q);
    const auto& rc = *z.rc;
    const int n = static_cast<int>(rc.size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int i = 0; i < static_cast<int>(rc.cat()->dim(x, y)); ++i) {
          Vec f = rc.cat()->basis_vec(x, y, i);
          CHECK(compose_factorization(rc, x, y, reedy_factorize(rc, x, y, f)) == f);
        }
  }
}

TEST_CASE("factorization examples") {
  auto z = zoo("fin_all:2", Q);
  const auto& rc = *z.rc;
  const auto& l = *rc.cat();
  int o1 = obj(rc, "[1]"), o2 = obj(rc, "[2]");
  // identity
  auto t = reedy_factorize(rc, o2, o2, l.identity(o2));
  REQUIRE(t.size() == 1);
  CHECK(t[0].z == o2);
  // constant map at 1 factors through [1]
  int c = -1;
  for (int i = 0; i < 4; ++i)
    if (l.labels(o2, o2)[i] == "[1,1]") c = i;
  REQUIRE(c >= 0);
  t = reedy_factorize(rc, o2, o2, l.basis_vec(o2, o2, c));
  REQUIRE(t.size() == 1);
  CHECK(t[0].z == o1);
  // plus morphism: single term at z = x
  int inj = -1;
  for (int i = 0; i < static_cast<int>(l.dim(o1, o2)); ++i)
    if (l.labels(o1, o2)[i] == "[1]") inj = i;
  t = reedy_factorize(rc, o1, o2, l.basis_vec(o1, o2, inj));
  REQUIRE(t.size() == 1);
  CHECK(t[0].z == o1);
}

TEST_CASE("partial orders") {
  auto inj = zoo("fin_inj:2", Q);
  auto o = partial_orders(*inj.rc);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      CHECK(o.minus_le[x][y] == (x == y));
      CHECK(o.plus_le[x][y] == (x <= y));
    }
  auto all = zoo("fin_all:2", Q);
  auto p = partial_orders(*all.rc);
  // [0] is not reached by surjections from nonempty sets.
  CHECK(p.minus_le[1][2]);
  CHECK_FALSE(p.minus_le[2][1]);
  CHECK_FALSE(p.minus_le[0][1]);
  auto pt = zoo("cyclic_group:3", Q);
  auto q = partial_orders(*pt.rc);
  CHECK(q.minus_le[0][0]);
}

TEST_CASE("ideals") {
  auto z = zoo("fin_all:2", Q);
  const auto& rc = *z.rc;
  int o2 = obj(rc, "[2]");
  CHECK(rc.ideal(0, o2, o2).dim() == 0);
  CHECK(rc.ideal(3, o2, o2).dim() == 4);
  CHECK(rc.ideal(2, o2, o2).dim() == 2);
  for (int a = 0; a <= 3; ++a) CHECK_FALSE(check_two_sided(*rc.cat(), ideal_I(rc, a)));
}

TEST_CASE("ideal stability on random elements") {
  std::mt19937_64 rng(5);
  for (const auto& name : {"fin_all:3", "cyclic:3", "vect_fq:2,2"}) {
    auto z = zoo(name, Q);
    const auto& rc = *z.rc;
    const auto& l = *rc.cat();
    const int n = static_cast<int>(rc.size());
    for (int alpha = 1; alpha < rc.structure().lambda(); ++alpha) {
      Ideal I = ideal_I(rc, alpha);
      for (int it = 0; it < 30; ++it) {
        std::uniform_int_distribution<int> o(0, n - 1);
        int w = o(rng), x = o(rng), y = o(rng), u = o(rng);
        if (!I.sub[x][y].dim() || !l.dim(y, u) || !l.dim(w, x)) continue;
        Vec i = I.sub[x][y].basis_matrix() * random_vec(rng, I.sub[x][y].dim(), Q);
        Vec g = random_vec(rng, l.dim(y, u), Q), h = random_vec(rng, l.dim(w, x), Q);
        CHECK(I.sub[x][u].contains(l.compose(x, y, u, g, i)));
        CHECK(I.sub[w][y].contains(l.compose(w, x, y, i, h)));
      }
    }
  }
}

TEST_CASE("truncation and quotient categories") {
  auto z = zoo("fin_all:2", Q);
  const auto& rc = *z.rc;
  auto t = truncate(rc, 3);
  CHECK(t.rc->size() == 3);
  auto t1 = truncate(rc, 1);
  CHECK(t1.rc->size() == 1);
  auto q = quotient_cat(rc, 2);
  REQUIRE(q.rc->size() == 1);
  CHECK(q.rc->cat()->dim(0, 0) == 2);
  CHECK(check_category_axioms(*q.rc->cat()).pass);
  CHECK(check_reedy(*q.rc).pass());
  CHECK(check_reedy(*t.rc).pass());
  for (int a = 0; a <= 3; ++a) CHECK(check_reedy(*quotient_cat(rc, a).rc).pass());
}

TEST_CASE("standard modules") {
  auto z = zoo("fin_all:2", Q);
  const auto& rc = *z.rc;
  auto d2 = standard_module(rc, 2, Side::Left);
  CHECK(d2.dims == std::vector<std::size_t>{0, 0, 2});
  CHECK_FALSE(check_functorial(d2));
  auto d0 = standard_module(rc, 0, Side::Left);
  CHECK(d0 == representable(rc.cat(), 0, Side::Left));
  // Maximal degree: Delta_x(y) has the dimension of plus(x, y).
  for (int x = 0; x < 3; ++x) {
    auto d = standard_module(rc, x, Side::Left);
    CHECK(d.dims[x] == rc.plus(x, x).dim());
    for (int y = 0; y < 3; ++y)
      if (rc.degree(y) < rc.degree(x)) CHECK(d.dims[y] == 0);
    auto r = standard_module(rc, x, Side::Right);
    CHECK_FALSE(check_functorial(r));
    CHECK(r.dims[x] == rc.plus(x, x).dim());
  }
  auto d2r = standard_module(rc, 2, Side::Left);
  for (int y = 0; y < 3; ++y) CHECK(d2r.dims[y] == rc.plus(2, y).dim());
}

TEST_CASE("distinct minimal objects have no morphisms") {
  for (const auto& name : kSuite) {
    auto z = zoo(name, Q);
    const auto& rc = *z.rc;
    int lo = rc.degree(rc.order().front());
    auto mins = rc.objects_of_degree(lo);
    for (int x : mins)
      for (int y : mins)
        if (x != y) CHECK(rc.cat()->dim(x, y) == 0);
  }
}

TEST_CASE("projectivity hypotheses") {
  CHECK(projectivity_hypotheses(*zoo("fin_all:3", Q).rc).pass());
  CHECK(projectivity_hypotheses(*zoo("dual_numbers:2", Q).rc).pass());
}
