#include "reedylab/lincat.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace rlab {

ConcreteCat::ConcreteCat(std::vector<std::string> objects, std::vector<std::vector<std::vector<std::string>>> labels,
                         std::vector<int> identity, const ComposeFn& compose)
    : objects_(std::move(objects)), labels_(std::move(labels)), identity_(std::move(identity)) {
  const int n = static_cast<int>(objects_.size());
  comp_.assign(n, std::vector<std::vector<std::vector<int>>>(n, std::vector<std::vector<int>>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto& t = comp_[x][y][z];
        const int nf = static_cast<int>(hom_size(x, y)), ng = static_cast<int>(hom_size(y, z));
        t.resize(static_cast<std::size_t>(nf) * ng);
        for (int g = 0; g < ng; ++g)
          for (int f = 0; f < nf; ++f) {
            int h = compose(x, y, z, g, f);
            if (h < 0 || h >= static_cast<int>(hom_size(x, z))) {
              std::ostringstream os;
              os << "composition undefined: " << labels_[y][z][g] << " o " << labels_[x][y][f];
              throw std::invalid_argument(os.str());
            }
            t[static_cast<std::size_t>(g) * nf + f] = h;
          }
      }
}

int ConcreteCat::find_object(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return static_cast<int>(i);
  return -1;
}

AxiomReport check_concrete_axioms(const ConcreteCat& c) {
  AxiomReport rep;
  const int n = static_cast<int>(c.size());
  auto fail = [&](const std::string& s) {
    rep.pass = false;
    rep.violation = s;
    return rep;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int f = 0; f < static_cast<int>(c.hom_size(x, y)); ++f) {
        if (c.compose(x, y, y, c.identity(y), f) != f || c.compose(x, x, y, f, c.identity(x)) != f)
          return fail("unit law fails at " + c.labels(x, y)[f]);
      }
  for (int w = 0; w < n; ++w)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          for (int f = 0; f < static_cast<int>(c.hom_size(w, x)); ++f)
            for (int g = 0; g < static_cast<int>(c.hom_size(x, y)); ++g)
              for (int h = 0; h < static_cast<int>(c.hom_size(y, z)); ++h) {
                int l = c.compose(w, y, z, h, c.compose(w, x, y, g, f));
                int r = c.compose(w, x, z, c.compose(x, y, z, h, g), f);
                if (l != r)
                  return fail("associativity fails at (" + c.labels(y, z)[h] + ", " + c.labels(x, y)[g] + ", " +
                              c.labels(w, x)[f] + ")");
              }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int f = 0; f < static_cast<int>(c.hom_size(x, y)); ++f)
        for (int g = 0; g < static_cast<int>(c.hom_size(y, x)); ++g)
          if (c.compose(x, y, x, g, f) == c.identity(x) && c.compose(y, x, y, f, g) == c.identity(y))
            return fail("not skeletal: " + c.object(x) + " and " + c.object(y) + " are isomorphic");
  return rep;
}

LinCat::LinCat(Field f, std::vector<std::string> objects, std::vector<std::vector<std::vector<std::string>>> labels)
    : field_(f), objects_(std::move(objects)), labels_(std::move(labels)) {
  const std::size_t n = objects_.size();
  comp_.assign(n, std::vector<std::vector<std::vector<SVec>>>(n, std::vector<std::vector<SVec>>(n)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        comp_[x][y][z].resize(labels_[x][y].size() * labels_[y][z].size());
  id_.resize(n);
  for (std::size_t x = 0; x < n; ++x) id_[x] = zeros(labels_[x][x].size(), f);
}

int LinCat::find_object(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return static_cast<int>(i);
  return -1;
}

void LinCat::set_compose(int x, int y, int z, int g, int f, SVec v) {
  comp_[x][y][z][static_cast<std::size_t>(g) * dim(x, y) + static_cast<std::size_t>(f)] = std::move(v);
  gens_.reset();
}

Vec LinCat::compose(int x, int y, int z, const Vec& g, const Vec& f) const {
  Vec out = zeros(dim(x, z), field_);
  for (std::size_t gi = 0; gi < g.size(); ++gi) {
    if (g[gi].is_zero()) continue;
    for (std::size_t fi = 0; fi < f.size(); ++fi) {
      if (f[fi].is_zero()) continue;
      Scalar c = g[gi] * f[fi];
      for (const auto& [k, s] : compose_basis(x, y, z, static_cast<int>(gi), static_cast<int>(fi)))
        out[static_cast<std::size_t>(k)] += c * s;
    }
  }
  return out;
}

Mat LinCat::left_mult(int x, int y, int z, const Vec& g) const {
  Mat m(dim(x, z), dim(x, y), field_);
  for (std::size_t fi = 0; fi < dim(x, y); ++fi)
    for (std::size_t gi = 0; gi < g.size(); ++gi) {
      if (g[gi].is_zero()) continue;
      for (const auto& [k, s] : compose_basis(x, y, z, static_cast<int>(gi), static_cast<int>(fi)))
        m(static_cast<std::size_t>(k), fi) += g[gi] * s;
    }
  return m;
}

Mat LinCat::right_mult(int x, int y, int z, const Vec& f) const {
  Mat m(dim(x, z), dim(y, z), field_);
  for (std::size_t gi = 0; gi < dim(y, z); ++gi)
    for (std::size_t fi = 0; fi < f.size(); ++fi) {
      if (f[fi].is_zero()) continue;
      for (const auto& [k, s] : compose_basis(x, y, z, static_cast<int>(gi), static_cast<int>(fi)))
        m(static_cast<std::size_t>(k), gi) += f[fi] * s;
    }
  return m;
}

namespace {
std::recursive_mutex cache_mu;
}

const std::vector<LinCat::Gen>& LinCat::generators() const {
  std::lock_guard<std::recursive_mutex> lock(cache_mu);
  if (gens_) return *gens_;
  const int n = static_cast<int>(size());
  // Greedy: add a basis morphism whenever it is not yet in the generated subcategory.
  std::vector<std::vector<Subspace>> G(n, std::vector<Subspace>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      G[x][y] = (x == y) ? Subspace::span(dim(x, x), field_, {id_[x]}) : Subspace(dim(x, y), field_);
  auto gens = std::make_shared<std::vector<Gen>>();

  struct Item {
    int x, y;
    Vec v;
  };
  auto close = [&](std::vector<Item> work) {
    while (!work.empty()) {
      Item it = std::move(work.back());
      work.pop_back();
      for (int z = 0; z < n; ++z) {
        for (const auto& g : G[it.y][z].basis()) {
          Vec c = compose(it.x, it.y, z, g, it.v);
          if (!G[it.x][z].contains(c)) {
            G[it.x][z] = G[it.x][z] + Subspace::span(dim(it.x, z), field_, {c});
            work.push_back({it.x, z, c});
          }
        }
        for (const auto& f : G[z][it.x].basis()) {
          Vec c = compose(z, it.x, it.y, it.v, f);
          if (!G[z][it.y].contains(c)) {
            G[z][it.y] = G[z][it.y] + Subspace::span(dim(z, it.y), field_, {c});
            work.push_back({z, it.y, c});
          }
        }
      }
    }
  };
  std::vector<std::tuple<std::size_t, int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (dim(x, y)) pairs.emplace_back(dim(x, y), x, y);
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [d, x, y] : pairs)
    for (std::size_t i = 0; i < d; ++i) {
      Vec v = basis_vec(x, y, static_cast<int>(i));
      if (G[x][y].contains(v)) continue;
      gens->push_back({x, y, v});
      G[x][y] = G[x][y] + Subspace::span(dim(x, y), field_, {v});
      close({{x, y, v}});
    }
  gens_ = gens;
  return *gens_;
}

std::shared_ptr<const LinCat> LinCat::op() const {
  std::lock_guard<std::recursive_mutex> lock(cache_mu);
  if (op_) return op_;
  if (auto back = op_back_.lock()) return back;
  auto o = opposite(*this);
  o->op_back_ = weak_from_this();
  op_ = o;
  return op_;
}

LinCatPtr linearize(const ConcreteCat& c, Field f) {
  if (auto ax = check_concrete_axioms(c); !ax.pass) throw AxiomViolation(ax.violation);
  const int n = static_cast<int>(c.size());
  std::vector<std::vector<std::vector<std::string>>> labels(n, std::vector<std::vector<std::string>>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) labels[x][y] = c.labels(x, y);
  auto l = std::make_shared<LinCat>(f, c.objects(), labels);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int g = 0; g < static_cast<int>(c.hom_size(y, z)); ++g)
          for (int h = 0; h < static_cast<int>(c.hom_size(x, y)); ++h)
            l->set_compose(x, y, z, g, h, {{c.compose(x, y, z, g, h), Scalar::one(f)}});
  for (int x = 0; x < n; ++x) l->set_identity(x, unit_vec(c.hom_size(x, x), static_cast<std::size_t>(c.identity(x)), f));
  return l;
}

AxiomReport check_category_axioms(const LinCat& l) {
  AxiomReport rep;
  const int n = static_cast<int>(l.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int i = 0; i < static_cast<int>(l.dim(x, y)); ++i) {
        Vec f = l.basis_vec(x, y, i);
        if (l.compose(x, y, y, l.identity(y), f) != f || l.compose(x, x, y, f, l.identity(x)) != f) {
          rep.pass = false;
          rep.violation = "unit law fails at " + l.labels(x, y)[i];
          return rep;
        }
      }
  for (int w = 0; w < n; ++w)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          for (int a = 0; a < static_cast<int>(l.dim(w, x)); ++a)
            for (int b = 0; b < static_cast<int>(l.dim(x, y)); ++b) {
              Vec fa = l.basis_vec(w, x, a), gb = l.basis_vec(x, y, b);
              Vec gf = l.compose(w, x, y, gb, fa);
              for (int c = 0; c < static_cast<int>(l.dim(y, z)); ++c) {
                Vec hc = l.basis_vec(y, z, c);
                if (l.compose(w, y, z, hc, gf) != l.compose(w, x, z, l.compose(x, y, z, hc, gb), fa)) {
                  rep.pass = false;
                  rep.violation = "associativity fails at (" + l.labels(y, z)[c] + ", " + l.labels(x, y)[b] +
                                  ", " + l.labels(w, x)[a] + ")";
                  return rep;
                }
              }
            }
  return rep;
}

LinCatPtr opposite(const LinCat& l) {
  const int n = static_cast<int>(l.size());
  std::vector<std::vector<std::vector<std::string>>> labels(n, std::vector<std::vector<std::string>>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) labels[x][y] = l.labels(y, x);
  auto o = std::make_shared<LinCat>(l.field(), l.objects(), labels);
  // g in op(y,z) = B(z,y), f in op(x,y) = B(y,x); g o_op f = f o g in B(z,x).
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int g = 0; g < static_cast<int>(l.dim(z, y)); ++g)
          for (int f = 0; f < static_cast<int>(l.dim(y, x)); ++f)
            o->set_compose(x, y, z, g, f, l.compose_basis(z, y, x, f, g));
  for (int x = 0; x < n; ++x) o->set_identity(x, l.identity(x));
  return o;
}

LinCatPtr full_subcategory(const LinCat& l, const std::vector<int>& objs) {
  const int n = static_cast<int>(objs.size());
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<std::string>>> labels(n, std::vector<std::vector<std::string>>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back(l.object(objs[i]));
    for (int j = 0; j < n; ++j) labels[i][j] = l.labels(objs[i], objs[j]);
  }
  auto s = std::make_shared<LinCat>(l.field(), names, labels);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int g = 0; g < static_cast<int>(l.dim(objs[j], objs[k])); ++g)
          for (int f = 0; f < static_cast<int>(l.dim(objs[i], objs[j])); ++f)
            s->set_compose(i, j, k, g, f, l.compose_basis(objs[i], objs[j], objs[k], g, f));
  for (int i = 0; i < n; ++i) s->set_identity(i, l.identity(objs[i]));
  return s;
}

SubCat make_subcategory(const LinCat& l, const std::vector<int>& objs,
                        const std::vector<std::vector<Subspace>>& homs) {
  const int n = static_cast<int>(objs.size());
  const Field F = l.field();
  SubCat out;
  out.objs = objs;
  out.embed.assign(n, std::vector<Mat>(n));
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<std::string>>> labels(n, std::vector<std::vector<std::string>>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back(l.object(objs[i]));
    for (int j = 0; j < n; ++j) {
      const Subspace& s = homs[i][j];
      out.embed[i][j] = s.basis_matrix();
      for (std::size_t b = 0; b < s.dim(); ++b) {
        Vec v = s.reduced().row(b);
        std::string lab;
        int nz = 0, where = -1;
        for (std::size_t t = 0; t < v.size(); ++t)
          if (!v[t].is_zero()) ++nz, where = static_cast<int>(t);
        if (nz == 1 && v[static_cast<std::size_t>(where)].is_one())
          lab = l.labels(objs[i], objs[j])[static_cast<std::size_t>(where)];
        else
          lab = "v" + std::to_string(b);
        labels[i][j].push_back(lab);
      }
    }
  }
  auto c = std::make_shared<LinCat>(F, names, labels);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Subspace &sij = homs[i][j], &sjk = homs[j][k], &sik = homs[i][k];
        for (std::size_t g = 0; g < sjk.dim(); ++g)
          for (std::size_t f = 0; f < sij.dim(); ++f) {
            Vec v = l.compose(objs[i], objs[j], objs[k], sjk.reduced().row(g), sij.reduced().row(f));
            if (!sik.contains(v)) throw std::invalid_argument("subcategory not closed under composition");
            Vec co = sik.coords(v);
            SVec sv;
            for (std::size_t t = 0; t < co.size(); ++t)
              if (!co[t].is_zero()) sv.emplace_back(static_cast<int>(t), co[t]);
            c->set_compose(i, j, k, static_cast<int>(g), static_cast<int>(f), sv);
          }
      }
  for (int i = 0; i < n; ++i) {
    const Vec& id = l.identity(objs[i]);
    if (!homs[i][i].contains(id)) throw std::invalid_argument("subcategory misses an identity");
    c->set_identity(i, homs[i][i].coords(id));
  }
  out.cat = c;
  return out;
}

BalancedTensor balanced_tensor(std::size_t dim_m, const std::vector<Mat>& right, std::size_t dim_n,
                               const std::vector<Mat>& left, Field f) {
  if (right.size() != left.size()) throw std::invalid_argument("balanced_tensor: action count mismatch");
  for (std::size_t a = 0; a < right.size(); ++a)
    if (right[a].rows() != dim_m || right[a].cols() != dim_m || left[a].rows() != dim_n || left[a].cols() != dim_n)
      throw std::invalid_argument("balanced_tensor: action dimension mismatch");
  BalancedTensor t;
  t.dim_m = dim_m;
  t.dim_n = dim_n;
  const std::size_t N = dim_m * dim_n;
  std::vector<Vec> rel;
  for (std::size_t a = 0; a < right.size(); ++a)
    for (std::size_t i = 0; i < dim_m; ++i)
      for (std::size_t j = 0; j < dim_n; ++j) {
        Vec v = zeros(N, f);
        for (std::size_t r = 0; r < dim_m; ++r)
          if (!right[a](r, i).is_zero()) v[r * dim_n + j] += right[a](r, i);
        for (std::size_t s = 0; s < dim_n; ++s)
          if (!left[a](s, j).is_zero()) v[i * dim_n + s] -= left[a](s, j);
        if (!is_zero(v)) rel.push_back(std::move(v));
      }
  t.balancing = Subspace::span(N, f, rel);
  t.quotient = QuotientSpace(N, t.balancing);
  return t;
}

}  // namespace rlab
