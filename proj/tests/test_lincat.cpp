#include <random>

#include "doctest.h"
#include "reedylab/zoo.hpp"

using namespace rlab;

namespace {

const Field Q = Field::rationals();

// Cyclic group of order n as a one-object category.
ConcreteCat cyclic_group_cat(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  return ConcreteCat({"*"}, {{labels}}, {0}, [n](int, int, int, int g, int f) { return (g + f) % n; });
}

// Regular left and right actions of the group algebra of C_n, in the basis of group elements.
std::vector<Mat> regular(int n, Field f) {
  std::vector<Mat> out;
  for (int a = 0; a < n; ++a) {
    Mat m(n, n, f);
    for (int b = 0; b < n; ++b) m((a + b) % n, b) = Scalar::one(f);
    out.push_back(m);
  }
  return out;
}

std::vector<std::size_t> rep_dims(const LinCatPtr& l, int x, Side s) { return representable(l, x, s).dims; }

std::size_t count_maps(int m, int n, bool injective) {
  std::size_t c = 0, total = 1;
  for (int i = 0; i < m; ++i) total *= static_cast<std::size_t>(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> img;
    std::size_t r = code;
    for (int i = 0; i < m; ++i, r /= static_cast<std::size_t>(n)) img.push_back(static_cast<int>(r % n));
    bool ok = true;
    for (std::size_t i = 0; i < img.size(); ++i)
      for (std::size_t j = i + 1; j < img.size(); ++j) ok = ok && !(injective && img[i] == img[j]);
    c += ok;
  }
  return c;
}

}  // namespace

TEST_CASE("linearize examples") {
  auto one = linearize(ConcreteCat({"x"}, {{{"1"}}}, {0}, [](int, int, int, int, int) { return 0; }), Q);
  CHECK(one->dim(0, 0) == 1);
  CHECK(check_category_axioms(*one).pass);

  auto c2 = linearize(cyclic_group_cat(2), Q);
  CHECK(c2->dim(0, 0) == 2);
  // s * s = 1 in the group algebra
  CHECK(c2->compose(0, 0, 0, c2->basis_vec(0, 0, 1), c2->basis_vec(0, 0, 1)) == c2->basis_vec(0, 0, 0));
  CHECK(check_category_axioms(*c2).pass);

  auto fa = zoo("fin_all:2", Q);
  const LinCat& l = *fa.rc->cat();
  int two = l.find_object("[2]");
  CHECK(l.dim(two, two) == count_maps(2, 2, false));
  for (const char* s : {"fin_all:3", "fin_inj:3", "fin_surj:3", "simplex:3", "cyclic:3", "vect_fq:2,2", "span_inj:2"})
    CHECK(check_category_axioms(*zoo(s, Q).rc->cat()).pass);
}

TEST_CASE("axiom negative controls") {
  // Table sending every product to the generator: not unital.
  ConcreteCat bad({"*"}, {{{"e", "s"}}}, {0}, [](int, int, int, int, int) { return 1; });
  auto rep = check_concrete_axioms(bad);
  CHECK_FALSE(rep.pass);
  CHECK(rep.violation.find("unit") != std::string::npos);
  CHECK_THROWS_AS(linearize(bad, Q), AxiomViolation);

  // Two isomorphic objects are not skeletal.
  ConcreteCat iso({"a", "b"}, {{{"1a"}, {"u"}}, {{"v"}, {"1b"}}}, {0, 0},
                  [](int, int, int, int, int) { return 0; });
  auto r2 = check_concrete_axioms(iso);
  CHECK_FALSE(r2.pass);
  CHECK(r2.violation.find("skeletal") != std::string::npos);

  // Corrupted structure constant.
  LinCat c = *linearize(cyclic_group_cat(3), Q);
  c.set_compose(0, 0, 0, 1, 1, {{0, Scalar::one(Q)}});
  auto r3 = check_category_axioms(c);
  CHECK_FALSE(r3.pass);
  CHECK(r3.violation.find("s1") != std::string::npos);
}

TEST_CASE("representables") {
  auto fa = zoo("fin_all:2", Q);
  auto l = fa.rc->cat();
  int o0 = l->find_object("[0]"), o1 = l->find_object("[1]"), o2 = l->find_object("[2]");
  auto d = rep_dims(l, o2, Side::Left);
  CHECK(d[o0] == count_maps(2, 0, false));
  CHECK(d[o1] == count_maps(2, 1, false));
  CHECK(d[o2] == count_maps(2, 2, false));
  CHECK(d[o0] == 0);
  CHECK(d[o2] == 4);

  auto fi = zoo("fin_inj:2", Q);
  auto li = fi.rc->cat();
  auto di = rep_dims(li, li->find_object("[1]"), Side::Left);
  CHECK(di[li->find_object("[0]")] == 0);
  CHECK(di[li->find_object("[1]")] == count_maps(1, 1, true));
  CHECK(di[li->find_object("[2]")] == count_maps(1, 2, true));

  auto one = linearize(ConcreteCat({"x"}, {{{"1"}}}, {0}, [](int, int, int, int, int) { return 0; }), Q);
  CHECK(representable(one, 0, Side::Left).dims == std::vector<std::size_t>{1});

  for (const char* s : {"fin_all:2", "simplex:2", "cyclic:2", "quiver_ab", "dual_numbers:2"}) {
    auto z = zoo(s, Q);
    for (int x = 0; x < static_cast<int>(z.rc->size()); ++x)
      for (Side side : {Side::Left, Side::Right}) CHECK_FALSE(check_functorial(representable(z.rc->cat(), x, side)));
  }
  CHECK_THROWS(representable(one, 3, Side::Left));
}

TEST_CASE("balanced tensor examples") {
  // A = k: no balancing.
  for (std::size_t m = 0; m < 4; ++m)
    for (std::size_t n = 0; n < 4; ++n) {
      auto t = balanced_tensor(m, {Mat::identity(m, Q)}, n, {Mat::identity(n, Q)}, Q);
      CHECK(t.dim() == m * n);
    }
  // A (x)_A A = A for group algebras, over Q and F_2.
  for (Field f : {Q, Field::prime(2)})
    for (int n = 1; n <= 4; ++n) {
      auto reg = regular(n, f);
      auto t = balanced_tensor(n, reg, n, reg, f);
      CHECK(t.dim() == static_cast<std::size_t>(n));
      CHECK(t.balancing.dim() == static_cast<std::size_t>(n * n - n));
      // multiplication A (x) A -> A factors through the quotient: a (x) b and ab have the same class
      CHECK(t.pure(1 % n, 0) == t.pure(0, 1 % n));
    }
  // Trivial module (x)_{kC_2} regular module = k over Q.
  auto reg = regular(2, Q);
  auto t = balanced_tensor(1, {Mat::identity(1, Q), Mat::identity(1, Q)}, 2, reg, Q);
  CHECK(t.dim() == 1);
  CHECK_THROWS(balanced_tensor(2, reg, 2, {reg[0]}, Q));
}

TEST_CASE("property: Yoneda and tensor unit") {
  std::mt19937_64 rng(7);
  for (const char* s : {"fin_all:2", "fin_inj:2", "cyclic:2", "quiver_ab", "dual_numbers:2", "span_inj:2"}) {
    auto z = zoo(s, Q);
    auto l = z.rc->cat();
    for (int t = 0; t < 5; ++t) {
      Rep m = random_rep(l, rng, 3);
      REQUIRE_FALSE(check_functorial(m));
      for (int x = 0; x < static_cast<int>(l->size()); ++x) {
        INFO(s << " x=" << x);
        CHECK(hom_dim(representable(l, x, Side::Left), m) == m.dims[x]);
        CHECK(tensor_over(whole(l), representable(l, x, Side::Right), m).dim() == m.dims[x]);
      }
    }
  }
}

TEST_CASE("sub and quotient modules") {
  auto z = zoo("quiver_ab", Q);
  auto l = z.rc->cat();
  int a = l->find_object("a"), b = l->find_object("b");
  Rep p = representable(l, a, Side::Left);
  REQUIRE(p.dims[a] == 1);
  REQUIRE(p.dims[b] == 1);
  // The value at b is a submodule; the value at a alone is not.
  std::vector<Subspace> at_b(2), at_a(2);
  at_b[a] = Subspace(1, Q);
  at_b[b] = Subspace::full(1, Q);
  at_a[a] = Subspace::full(1, Q);
  at_a[b] = Subspace(1, Q);
  auto sub = sub_rep(p, at_b);
  CHECK(sub.rep.total_dim() == 1);
  CHECK(is_mono(sub.map));
  auto quo = quotient_rep(p, at_b);
  CHECK(quo.rep.dims[a] == 1);
  CHECK(quo.rep.dims[b] == 0);
  CHECK(is_epi(quo.rep, quo.map));
  CHECK_THROWS_AS(sub_rep(p, at_a), NotASubmodule);
  CHECK_THROWS_AS(quotient_rep(p, at_a), NotASubmodule);
}
