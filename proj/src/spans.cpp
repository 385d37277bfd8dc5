#include "reedylab/spans.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace rlab {

std::vector<int> EICat::automorphisms(int x) const {
  std::vector<int> out;
  for (int s = 0; s < static_cast<int>(c.hom_size(x, x)); ++s)
    for (int t = 0; t < static_cast<int>(c.hom_size(x, x)); ++t)
      if (c.compose(x, x, x, s, t) == c.identity(x) && c.compose(x, x, x, t, s) == c.identity(x)) {
        out.push_back(s);
        break;
      }
  return out;
}

std::vector<std::vector<bool>> EICat::order() const {
  const int n = static_cast<int>(c.size());
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) le[x][y] = c.hom_size(x, y) > 0;
  return le;
}

namespace {

std::string fn_label(const std::vector<int>& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "]";
}

}  // namespace

EICat set_map_category(const std::vector<std::string>& names, const std::vector<int>& sizes,
                       const std::function<bool(int, int, const std::vector<int>&)>& keep) {
  const int n = static_cast<int>(names.size());
  EICat e;
  e.carrier = sizes;
  e.fn.assign(n, std::vector<std::vector<std::vector<int>>>(n));
  std::vector<std::vector<std::map<std::vector<int>, int>>> index(n, std::vector<std::map<std::vector<int>, int>>(n));
  std::vector<std::vector<std::vector<std::string>>> labels(n, std::vector<std::vector<std::string>>(n));
  std::vector<int> ident(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int m = sizes[x], k = sizes[y];
      if (k == 0 && m > 0) continue;
      std::vector<int> f(m, 0);
      for (;;) {
        if (keep(x, y, f)) {
          index[x][y][f] = static_cast<int>(e.fn[x][y].size());
          e.fn[x][y].push_back(f);
          labels[x][y].push_back(fn_label(f));
        }
        int i = m - 1;
        while (i >= 0 && f[i] == k - 1) f[i--] = 0;
        if (i < 0) break;
        ++f[i];
      }
    }
  for (int x = 0; x < n; ++x) {
    std::vector<int> id(sizes[x]);
    for (int i = 0; i < sizes[x]; ++i) id[i] = i;
    auto it = index[x][x].find(id);
    if (it == index[x][x].end()) throw std::invalid_argument("set_map_category: identity of " + names[x] + " missing");
    ident[x] = it->second;
  }
  e.c = ConcreteCat(names, labels, ident, [&](int x, int y, int z, int g, int f) {
    const auto &gf = e.fn[y][z][g], &ff = e.fn[x][y][f];
    std::vector<int> h(ff.size());
    for (std::size_t i = 0; i < ff.size(); ++i) h[i] = gf[ff[i]];
    auto it = index[x][z].find(h);
    return it == index[x][z].end() ? -1 : it->second;
  });
  return e;
}

bool is_pullback(const EICat& e, int z, int u, int x, int f, int g, const Cone& c) {
  const ConcreteCat& C = e.c;
  if (C.compose(c.apex, z, x, f, c.left) != C.compose(c.apex, u, x, g, c.right)) return false;
  for (int v = 0; v < static_cast<int>(C.size()); ++v)
    for (int h1 = 0; h1 < static_cast<int>(C.hom_size(v, z)); ++h1)
      for (int h2 = 0; h2 < static_cast<int>(C.hom_size(v, u)); ++h2) {
        if (C.compose(v, z, x, f, h1) != C.compose(v, u, x, g, h2)) continue;
        int count = 0;
        for (int k = 0; k < static_cast<int>(C.hom_size(v, c.apex)); ++k)
          if (C.compose(v, c.apex, z, c.left, k) == h1 && C.compose(v, c.apex, u, c.right, k) == h2) ++count;
        if (count != 1) return false;
      }
  return true;
}

std::optional<Cone> pullback_search(const EICat& e, int z, int u, int x, int f, int g) {
  const ConcreteCat& C = e.c;
  for (int w = 0; w < static_cast<int>(C.size()); ++w)
    for (int p = 0; p < static_cast<int>(C.hom_size(w, z)); ++p)
      for (int q = 0; q < static_cast<int>(C.hom_size(w, u)); ++q) {
        Cone c{w, p, q};
        if (is_pullback(e, z, u, x, f, g, c)) return c;
      }
  return std::nullopt;
}

Cone pullback(const EICat& e, int z, int u, int x, int f, int g) {
  if (!e.carrier) {
    auto c = pullback_search(e, z, u, x, f, g);
    if (!c) throw NoPullback("no pullback of " + e.c.labels(z, x)[f] + " and " + e.c.labels(u, x)[g]);
    return *c;
  }
  const auto& sizes = *e.carrier;
  const auto &ff = e.fn[z][x][f], &gf = e.fn[u][x][g];
  std::vector<std::pair<int, int>> fiber;
  for (int a = 0; a < sizes[z]; ++a)
    for (int b = 0; b < sizes[u]; ++b)
      if (ff[a] == gf[b]) fiber.emplace_back(a, b);
  const int s = static_cast<int>(fiber.size());
  auto find = [&](int w, int y, const std::vector<int>& h) {
    const auto& list = e.fn[w][y];
    auto it = std::find(list.begin(), list.end(), h);
    return it == list.end() ? -1 : static_cast<int>(it - list.begin());
  };
  bool size_match = false;
  for (int w = 0; w < static_cast<int>(e.c.size()); ++w) {
    if (sizes[w] != s) continue;
    size_match = true;
    // Identify the fiber product with w through every bijection until the legs are morphisms.
    std::vector<int> perm(s);
    for (int i = 0; i < s; ++i) perm[i] = i;
    do {
      std::vector<int> p1(s), p2(s);
      for (int i = 0; i < s; ++i) {
        p1[i] = fiber[perm[i]].first;
        p2[i] = fiber[perm[i]].second;
      }
      int l = find(w, z, p1), r = find(w, u, p2);
      if (l >= 0 && r >= 0) {
        Cone c{w, l, r};
        if (!is_pullback(e, z, u, x, f, g, c))
          throw NoPullback("fiber product of " + e.c.labels(z, x)[f] + " and " + e.c.labels(u, x)[g] +
                           " is not a pullback in the category");
        return c;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  if (!size_match) throw NotInSkeleton("fiber product of size " + std::to_string(s) + " matches no object");
  throw NotInSkeleton("fiber product legs are not morphisms for any identification");
}

SpanCategory span_category(const EICat& e) {
  const ConcreteCat& C = e.c;
  const int n = static_cast<int>(C.size());
  std::vector<std::vector<int>> G(n);
  for (int z = 0; z < n; ++z) G[z] = e.automorphisms(z);
  auto canon = [&](int z, int x, int y, int f, int g) {
    SpanLabel best{z, f, g};
    for (int s : G[z]) {
      int f2 = C.compose(z, z, x, f, s), g2 = C.compose(z, z, y, g, s);
      if (std::tie(f2, g2) < std::tie(best.left, best.right)) best = {z, f2, g2};
    }
    return best;
  };
  SpanCategory out;
  out.spans.assign(n, std::vector<std::vector<SpanLabel>>(n));
  std::vector<std::vector<std::map<std::tuple<int, int, int>, int>>> index(
      n, std::vector<std::map<std::tuple<int, int, int>, int>>(n));
  std::vector<std::vector<std::vector<std::string>>> labels(n, std::vector<std::vector<std::string>>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<std::tuple<int, int, int>> found;
      for (int z = 0; z < n; ++z)
        for (int f = 0; f < static_cast<int>(C.hom_size(z, x)); ++f)
          for (int g = 0; g < static_cast<int>(C.hom_size(z, y)); ++g) {
            SpanLabel s = canon(z, x, y, f, g);
            found.emplace_back(s.apex, s.left, s.right);
          }
      std::sort(found.begin(), found.end());
      found.erase(std::unique(found.begin(), found.end()), found.end());
      for (const auto& [z, f, g] : found) {
        index[x][y][{z, f, g}] = static_cast<int>(out.spans[x][y].size());
        out.spans[x][y].push_back({z, f, g});
        labels[x][y].push_back(C.labels(z, x)[f] + "<" + C.object(z) + ">" + C.labels(z, y)[g]);
      }
    }
  std::vector<int> ident(n);
  for (int x = 0; x < n; ++x) {
    SpanLabel s = canon(x, x, x, C.identity(x), C.identity(x));
    ident[x] = index[x][x].at({s.apex, s.left, s.right});
  }
  std::map<std::tuple<int, int, int, int, int>, Cone> pb;
  out.cat = ConcreteCat(C.objects(), labels, ident, [&](int x, int y, int w, int s2, int s1) {
    const SpanLabel &a = out.spans[x][y][s1], &b = out.spans[y][w][s2];
    auto key = std::make_tuple(a.apex, b.apex, y, a.right, b.left);
    auto it = pb.find(key);
    if (it == pb.end()) it = pb.emplace(key, pullback(e, a.apex, b.apex, y, a.right, b.left)).first;
    const Cone& c = it->second;
    int f = C.compose(c.apex, a.apex, x, a.left, c.left);
    int g = C.compose(c.apex, b.apex, w, b.right, c.right);
    SpanLabel s = canon(c.apex, x, w, f, g);
    auto jt = index[x][w].find({s.apex, s.left, s.right});
    return jt == index[x][w].end() ? -1 : jt->second;
  });
  return out;
}

std::vector<int> artinian_degree(const EICat& e) {
  const int n = static_cast<int>(e.c.size());
  auto le = e.order();
  std::vector<int> deg(n, -1);
  int remaining = n, level = 0;
  while (remaining > 0) {
    std::vector<int> minimal;
    for (int x = 0; x < n; ++x) {
      if (deg[x] >= 0) continue;
      bool is_min = true;
      for (int y = 0; y < n && is_min; ++y)
        if (y != x && deg[y] < 0 && le[y][x]) is_min = false;
      if (is_min) minimal.push_back(x);
    }
    if (minimal.empty()) throw AntisymmetryViolation("hom-nonemptiness order has a cycle");
    for (int x : minimal) deg[x] = level;
    remaining -= static_cast<int>(minimal.size());
    ++level;
  }
  return deg;
}

ReedyPtr span_reedy(const EICat& e, const SpanCategory& s, Field f) {
  auto l = linearize(s.cat, f);
  auto deg = artinian_degree(e);
  auto r = basis_structure(
      *l, deg, [&](int x, int y, int i) { return s.spans[x][y][i].apex == x; },
      [&](int x, int y, int i) { return s.spans[x][y][i].apex == y; });
  return std::make_shared<ReedyCat>(l, std::move(r));
}

bool is_mono(const EICat& e, int x, int y, int f) {
  const ConcreteCat& C = e.c;
  for (int w = 0; w < static_cast<int>(C.size()); ++w)
    for (int u = 0; u < static_cast<int>(C.hom_size(w, x)); ++u)
      for (int v = u + 1; v < static_cast<int>(C.hom_size(w, x)); ++v)
        if (C.compose(w, x, y, f, u) == C.compose(w, x, y, f, v)) return false;
  return true;
}

TheoremEReport check_theorem_E_conditions(const EICat& e, Field field) {
  TheoremEReport rep;
  const ConcreteCat& C = e.c;
  const int n = static_cast<int>(C.size());
  for (int x = 0; x < n; ++x) {
    auto g = e.automorphisms(x);
    rep.group_orders.push_back(g.size());
    if (g.size() != C.hom_size(x, x)) {
      rep.ei = false;
      rep.witnesses.push_back("non-invertible endomorphism of " + C.object(x));
    }
    if (!field.invertible(g.size())) {
      rep.groups_invertible = false;
      rep.witnesses.push_back("|G_" + C.object(x) + "| = " + std::to_string(g.size()) + " is not invertible in " +
                              field.str());
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int f = 0; f < static_cast<int>(C.hom_size(x, y)); ++f)
        if (!is_mono(e, x, y, f)) {
          if (rep.all_mono) rep.witnesses.push_back("not a monomorphism: " + C.labels(x, y)[f]);
          rep.all_mono = false;
        }
  for (int z = 0; z < n && rep.pullbacks; ++z)
    for (int u = 0; u < n && rep.pullbacks; ++u)
      for (int x = 0; x < n && rep.pullbacks; ++x)
        for (int f = 0; f < static_cast<int>(C.hom_size(z, x)) && rep.pullbacks; ++f)
          for (int g = 0; g < static_cast<int>(C.hom_size(u, x)) && rep.pullbacks; ++g) {
            try {
              pullback(e, z, u, x, f, g);
            } catch (const std::exception& ex) {
              rep.pullbacks = false;
              rep.witnesses.push_back(ex.what());
            }
          }
  // Free action of G_z on pairs of legs.
  for (int z = 0; z < n; ++z)
    for (int s : e.automorphisms(z)) {
      if (s == C.identity(z)) continue;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int f = 0; f < static_cast<int>(C.hom_size(z, x)); ++f)
            for (int g = 0; g < static_cast<int>(C.hom_size(z, y)); ++g)
              if (C.compose(z, z, x, f, s) == f && C.compose(z, z, y, g, s) == g) rep.free_action = false;
    }
  return rep;
}

}  // namespace rlab
