#include "reedylab/zoo.hpp"

#include <map>
#include <set>
#include <sstream>

namespace rlab {

namespace {

std::vector<int> parse_params(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParamOutOfRange("bad parameter '" + tok + "'");
    }
  }
  return out;
}

void need(bool ok, const std::string& msg) {
  if (!ok) throw ParamOutOfRange(msg);
}

bool injective(const std::vector<int>& f) { return std::set<int>(f.begin(), f.end()).size() == f.size(); }
bool surjective(const std::vector<int>& f, int k) { return static_cast<int>(std::set<int>(f.begin(), f.end()).size()) == k; }

std::vector<std::string> bracket_names(int lo, int hi) {
  std::vector<std::string> v;
  for (int i = lo; i <= hi; ++i) v.push_back("[" + std::to_string(i) + "]");
  return v;
}

ReedyPtr from_ei(const EICat& e, Field f, const std::vector<int>& degree,
                 const std::function<bool(int, int, const std::vector<int>&)>& plus,
                 const std::function<bool(int, int, const std::vector<int>&)>& minus) {
  auto l = linearize(e.c, f);
  auto r = basis_structure(
      *l, degree, [&](int x, int y, int i) { return plus(x, y, e.fn[x][y][i]); },
      [&](int x, int y, int i) { return minus(x, y, e.fn[x][y][i]); });
  return std::make_shared<ReedyCat>(l, std::move(r));
}

// Rank of an r x c matrix over F_q (row-major).
int rank_mod(std::vector<int> m, int r, int c, int q) {
  int rk = 0;
  for (int col = 0; col < c && rk < r; ++col) {
    int piv = -1;
    for (int i = rk; i < r; ++i)
      if (m[i * c + col] % q) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < c; ++j) std::swap(m[rk * c + j], m[piv * c + j]);
    int inv = 1;
    while ((m[rk * c + col] * inv) % q != 1) ++inv;
    for (int j = 0; j < c; ++j) m[rk * c + j] = (m[rk * c + j] * inv) % q;
    for (int i = 0; i < r; ++i) {
      if (i == rk || m[i * c + col] == 0) continue;
      int t = m[i * c + col];
      for (int j = 0; j < c; ++j) m[i * c + j] = ((m[i * c + j] - t * m[rk * c + j]) % q + q) % q;
    }
    ++rk;
  }
  return rk;
}

ZooInstance vect_fq(int q, int N, Field f) {
  const int n = N + 1;
  std::vector<std::string> names;
  for (int i = 0; i <= N; ++i) names.push_back("F" + std::to_string(q) + "^" + std::to_string(i));
  // Morphism x -> y: dim(y) x dim(x) matrix, row-major.
  std::vector<std::vector<std::vector<std::vector<int>>>> mats(n, std::vector<std::vector<std::vector<int>>>(n));
  std::vector<std::vector<std::map<std::vector<int>, int>>> index(n, std::vector<std::map<std::vector<int>, int>>(n));
  std::vector<std::vector<std::vector<std::string>>> labels(n, std::vector<std::vector<std::string>>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int len = x * y;
      std::vector<int> m(len, 0);
      for (;;) {
        index[x][y][m] = static_cast<int>(mats[x][y].size());
        mats[x][y].push_back(m);
        std::string lab = "(";
        for (int i = 0; i < y; ++i) {
          if (i) lab += ";";
          for (int j = 0; j < x; ++j) lab += std::to_string(m[i * x + j]);
        }
        labels[x][y].push_back(lab + ")");
        int i = len - 1;
        while (i >= 0 && m[i] == q - 1) m[i--] = 0;
        if (i < 0) break;
        ++m[i];
      }
    }
  std::vector<int> ident(n);
  for (int x = 0; x < n; ++x) {
    std::vector<int> id(x * x, 0);
    for (int i = 0; i < x; ++i) id[i * x + i] = 1;
    ident[x] = index[x][x].at(id);
  }
  ConcreteCat c(names, labels, ident, [&](int x, int y, int z, int g, int h) {
    const auto &G = mats[y][z][g], &H = mats[x][y][h];
    std::vector<int> p(z * x, 0);
    for (int i = 0; i < z; ++i)
      for (int j = 0; j < x; ++j) {
        int s = 0;
        for (int k = 0; k < y; ++k) s += G[i * y + k] * H[k * x + j];
        p[i * x + j] = s % q;
      }
    return index[x][z].at(p);
  });
  auto l = linearize(c, f);
  std::vector<int> degree;
  for (int x = 0; x < n; ++x) degree.push_back(x);
  auto r = basis_structure(
      *l, degree, [&](int x, int y, int i) { return rank_mod(mats[x][y][i], y, x, q) == x; },
      [&](int x, int y, int i) { return rank_mod(mats[x][y][i], y, x, q) == y; });
  ZooInstance z;
  z.rc = std::make_shared<ReedyCat>(l, std::move(r));
  z.concrete = c;
  return z;
}

// Direct a -> b with A_a = k[t]/(t^2), C(a, b) = {g, gt}, A_b = k.
ReedyPtr dual_numbers_arrow(Field f) {
  std::vector<std::vector<std::vector<std::string>>> labels = {{{"1a", "t"}, {"g", "gt"}}, {{}, {"1b"}}};
  auto l = std::make_shared<LinCat>(f, std::vector<std::string>{"a", "b"}, labels);
  Scalar one = Scalar::one(f);
  // hom(a,a) x hom(a,a)
  l->set_compose(0, 0, 0, 0, 0, {{0, one}});
  l->set_compose(0, 0, 0, 0, 1, {{1, one}});
  l->set_compose(0, 0, 0, 1, 0, {{1, one}});
  l->set_compose(0, 0, 0, 1, 1, {});
  // hom(a,b) o hom(a,a)
  l->set_compose(0, 0, 1, 0, 0, {{0, one}});
  l->set_compose(0, 0, 1, 0, 1, {{1, one}});
  l->set_compose(0, 0, 1, 1, 0, {{1, one}});
  l->set_compose(0, 0, 1, 1, 1, {});
  // hom(b,b) o hom(a,b)
  l->set_compose(0, 1, 1, 0, 0, {{0, one}});
  l->set_compose(0, 1, 1, 0, 1, {{1, one}});
  l->set_compose(1, 1, 1, 0, 0, {{0, one}});
  l->set_identity(0, unit_vec(2, 0, f));
  l->set_identity(1, unit_vec(1, 0, f));
  auto r = basis_structure(
      *l, {0, 1}, [](int, int, int) { return true; }, [](int x, int y, int) { return x == y; });
  return std::make_shared<ReedyCat>(l, std::move(r));
}

ReedyPtr dual_numbers_point(Field f) {
  std::vector<std::vector<std::vector<std::string>>> labels = {{{"1", "t"}}};
  auto l = std::make_shared<LinCat>(f, std::vector<std::string>{"*"}, labels);
  Scalar one = Scalar::one(f);
  l->set_compose(0, 0, 0, 0, 0, {{0, one}});
  l->set_compose(0, 0, 0, 0, 1, {{1, one}});
  l->set_compose(0, 0, 0, 1, 0, {{1, one}});
  l->set_compose(0, 0, 0, 1, 1, {});
  l->set_identity(0, unit_vec(2, 0, f));
  auto r = basis_structure(
      *l, {0}, [](int, int, int) { return true; }, [](int, int, int) { return true; });
  return std::make_shared<ReedyCat>(l, std::move(r));
}

// x with A_x = kC_2 (degree 0) and y (degree 1); f: y -> x fixed by C_2, g: x -> y with g s = g, f g = 1 + s.
ReedyPtr orbit_c2(Field f) {
  std::vector<std::vector<std::vector<std::string>>> labels = {{{"1x", "s"}, {"g"}}, {{"f"}, {"1y", "gf"}}};
  auto l = std::make_shared<LinCat>(f, std::vector<std::string>{"x", "y"}, labels);
  Scalar one = Scalar::one(f), two(f, 2L);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) l->set_compose(0, 0, 0, a, b, {{a ^ b, one}});
  for (int a = 0; a < 2; ++a) {
    l->set_compose(0, 0, 1, 0, a, {{0, one}});  // g a = g
    l->set_compose(1, 0, 0, a, 0, {{0, one}});  // a f = f
  }
  l->set_compose(0, 1, 0, 0, 0, {{0, one}, {1, one}});  // f g = 1 + s
  l->set_compose(1, 0, 1, 0, 0, {{1, one}});            // g f
  l->set_compose(1, 1, 1, 0, 0, {{0, one}});
  l->set_compose(1, 1, 1, 0, 1, {{1, one}});
  l->set_compose(1, 1, 1, 1, 0, {{1, one}});
  l->set_compose(1, 1, 1, 1, 1, two.is_zero() ? SVec{} : SVec{{1, two}});
  l->set_compose(0, 1, 1, 0, 0, {{0, one}});
  l->set_compose(0, 1, 1, 1, 0, two.is_zero() ? SVec{} : SVec{{0, two}});
  l->set_compose(1, 1, 0, 0, 0, {{0, one}});
  l->set_compose(1, 1, 0, 0, 1, two.is_zero() ? SVec{} : SVec{{0, two}});
  l->set_identity(0, unit_vec(2, 0, f));
  l->set_identity(1, unit_vec(2, 0, f));
  auto r = basis_structure(
      *l, {0, 1}, [](int x, int y, int i) { return x == y ? (x == 0 || i == 0) : x == 0; },
      [](int x, int y, int i) { return x == y ? (x == 0 || i == 0) : x == 1; });
  return std::make_shared<ReedyCat>(l, std::move(r));
}

}  // namespace

EICat fin_inj_ei(int n) {
  std::vector<int> sizes;
  for (int i = 0; i <= n; ++i) sizes.push_back(i);
  return set_map_category(bracket_names(0, n), sizes, [](int, int, const std::vector<int>& f) { return injective(f); });
}

EICat fin_all_ei(int n) {
  std::vector<int> sizes;
  for (int i = 0; i <= n; ++i) sizes.push_back(i);
  return set_map_category(bracket_names(0, n), sizes, [](int, int, const std::vector<int>&) { return true; });
}

EICat chain_poset_ei(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<std::string>>> labels(n, std::vector<std::vector<std::string>>(n));
  std::vector<int> ident(n, 0);
  for (int i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i));
    for (int j = i; j < n; ++j) labels[i][j].push_back("p" + std::to_string(i) + "<=p" + std::to_string(j));
  }
  EICat e;
  e.c = ConcreteCat(names, labels, ident, [](int, int, int, int, int) { return 0; });
  return e;
}

bool is_direct(const ReedyCat& rc) {
  for (int x = 0; x < static_cast<int>(rc.size()); ++x)
    for (int y = 0; y < static_cast<int>(rc.size()); ++y)
      if (rc.plus(x, y).dim() != rc.cat()->dim(x, y)) return false;
  return true;
}

bool is_inverse(const ReedyCat& rc) {
  for (int x = 0; x < static_cast<int>(rc.size()); ++x)
    for (int y = 0; y < static_cast<int>(rc.size()); ++y)
      if (rc.minus(x, y).dim() != rc.cat()->dim(x, y)) return false;
  return true;
}

std::vector<std::string> zoo_families() {
  return {"fin_all",           "fin_inj",        "fin_surj",        "simplex",     "cyclic",
          "vect_fq",           "poset_chain_meets", "span_inj",    "span_poset",  "quiver_ab",
          "quiver_ab_inverse", "dual_numbers",   "cyclic_group",      "orbit_c2"};
}

ZooInstance zoo(const std::string& spec, Field f) {
  auto colon = spec.find(':');
  const std::string fam = spec.substr(0, colon);
  const std::vector<int> p = colon == std::string::npos ? std::vector<int>{} : parse_params(spec.substr(colon + 1));
  auto one_param = [&](int lo, int hi) {
    need(p.size() == 1, fam + " takes one parameter");
    need(p[0] >= lo && p[0] <= hi, fam + " parameter must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return p[0];
  };
  ZooInstance z;
  z.name = spec;
  auto sizes_upto = [](int lo, int hi) {
    std::vector<int> s;
    for (int i = lo; i <= hi; ++i) s.push_back(i);
    return s;
  };
  auto deg_from_sizes = [](const std::vector<int>& s, int shift) {
    std::vector<int> d;
    for (int v : s) d.push_back(v - shift);
    return d;
  };

  if (fam == "fin_all" || fam == "fin_inj" || fam == "fin_surj") {
    const int N = one_param(0, 3);
    auto sizes = sizes_upto(0, N);
    EICat e;
    if (fam == "fin_all")
      e = set_map_category(bracket_names(0, N), sizes, [](int, int, const std::vector<int>&) { return true; });
    else if (fam == "fin_inj")
      e = fin_inj_ei(N);
    else
      e = set_map_category(bracket_names(0, N), sizes,
                           [&](int, int y, const std::vector<int>& g) { return surjective(g, sizes[y]); });
    auto inj = [](int, int, const std::vector<int>& g) { return injective(g); };
    auto sur = [&](int, int y, const std::vector<int>& g) { return surjective(g, sizes[y]); };
    z.rc = from_ei(e, f, sizes, inj, sur);
    z.concrete = e.c;
  } else if (fam == "simplex") {
    const int N = one_param(0, 3);
    auto sizes = sizes_upto(1, N + 1);
    auto e = set_map_category(bracket_names(0, N), sizes, [](int, int, const std::vector<int>& g) {
      for (std::size_t i = 1; i < g.size(); ++i)
        if (g[i] <= g[i - 1]) return false;
      return true;
    });
    z.rc = from_ei(
        e, f, deg_from_sizes(sizes, 1), [](int, int, const std::vector<int>&) { return true; },
        [](int x, int y, const std::vector<int>&) { return x == y; });
    z.concrete = e.c;
  } else if (fam == "cyclic") {
    const int N = one_param(1, 3);
    auto sizes = sizes_upto(1, N);
    // Cyclic-order-preserving maps: going once around the source winds at most once around the target.
    auto e = set_map_category(bracket_names(1, N), sizes, [&](int, int y, const std::vector<int>& g) {
      const int m = static_cast<int>(g.size()), k = sizes[y];
      int wind = 0;
      for (int i = 0; i < m; ++i) wind += ((g[(i + 1) % m] - g[i]) % k + k) % k;
      return wind <= k;
    });
    auto inj = [](int, int, const std::vector<int>& g) { return injective(g); };
    auto sur = [&](int, int y, const std::vector<int>& g) { return surjective(g, sizes[y]); };
    z.rc = from_ei(e, f, deg_from_sizes(sizes, 0), inj, sur);
    z.concrete = e.c;
  } else if (fam == "vect_fq") {
    need(p.size() == 2, "vect_fq takes q,N");
    need(p[0] == 2 || p[0] == 3, "vect_fq: q must be 2 or 3");
    need(p[1] >= 0 && p[1] <= 2, "vect_fq: N must lie in [0, 2]");
    auto v = vect_fq(p[0], p[1], f);
    z.rc = v.rc;
    z.concrete = v.concrete;
  } else if (fam == "poset_chain_meets") {
    const int n = one_param(1, 3);
    auto e = chain_poset_ei(n);
    auto l = linearize(e.c, f);
    auto r = basis_structure(
        *l, sizes_upto(0, n - 1), [](int, int, int) { return true; }, [](int x, int y, int) { return x == y; });
    z.rc = std::make_shared<ReedyCat>(l, std::move(r));
    z.concrete = e.c;
    z.base = e;
  } else if (fam == "span_inj" || fam == "span_poset") {
    const int n = fam == "span_inj" ? one_param(0, 3) : one_param(1, 3);
    EICat e = fam == "span_inj" ? fin_inj_ei(n) : chain_poset_ei(n);
    auto s = span_category(e);
    z.rc = span_reedy(e, s, f);
    z.concrete = s.cat;
    z.base = e;
  } else if (fam == "quiver_ab" || fam == "quiver_ab_inverse") {
    need(p.empty(), fam + " takes no parameters");
    std::vector<std::vector<std::vector<std::string>>> labels = {{{"1a"}, {"g"}}, {{}, {"1b"}}};
    ConcreteCat c({"a", "b"}, labels, {0, 0}, [](int, int, int, int, int) { return 0; });
    auto l = linearize(c, f);
    const bool inv = fam == "quiver_ab_inverse";
    auto r = basis_structure(
        *l, inv ? std::vector<int>{1, 0} : std::vector<int>{0, 1},
        [inv](int x, int y, int) { return !inv || x == y; }, [inv](int x, int y, int) { return inv || x == y; });
    z.rc = std::make_shared<ReedyCat>(l, std::move(r));
    z.concrete = c;
  } else if (fam == "orbit_c2") {
    need(p.empty(), fam + " takes no parameters");
    z.rc = orbit_c2(f);
  } else if (fam == "dual_numbers") {
    const int n = one_param(1, 2);
    z.rc = n == 1 ? dual_numbers_point(f) : dual_numbers_arrow(f);
  } else if (fam == "cyclic_group") {
    const int n = one_param(1, 6);
    std::vector<std::vector<std::vector<std::string>>> labels(1, std::vector<std::vector<std::string>>(1));
    for (int i = 0; i < n; ++i) labels[0][0].push_back("r" + std::to_string(i));
    ConcreteCat c({"*"}, labels, {0}, [n](int, int, int, int g, int h) { return (g + h) % n; });
    auto l = linearize(c, f);
    auto r = basis_structure(
        *l, {0}, [](int, int, int) { return true; }, [](int, int, int) { return true; });
    z.rc = std::make_shared<ReedyCat>(l, std::move(r));
    z.concrete = c;
  } else {
    throw UnknownInstance("unknown zoo family '" + fam + "'");
  }
  z.direct = is_direct(*z.rc);
  z.inverse = is_inverse(*z.rc);
  return z;
}

}  // namespace rlab
