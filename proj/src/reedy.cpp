#include "reedylab/reedy.hpp"

#include <algorithm>
#include <sstream>

#include "reedylab/parallel.hpp"

namespace rlab {

int ReedyStructure::lambda() const {
  int m = -1;
  for (int d : degree) m = std::max(m, d);
  return m + 1;
}

ReedyStructure basis_structure(const LinCat& l, std::vector<int> degree,
                               const std::function<bool(int, int, int)>& is_plus,
                               const std::function<bool(int, int, int)>& is_minus) {
  ReedyStructure r;
  const int n = static_cast<int>(l.size());
  r.degree = std::move(degree);
  r.plus.assign(n, std::vector<Subspace>(n));
  r.minus.assign(n, std::vector<Subspace>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<Vec> p, m;
      for (int i = 0; i < static_cast<int>(l.dim(x, y)); ++i) {
        if (is_plus(x, y, i)) p.push_back(l.basis_vec(x, y, i));
        if (is_minus(x, y, i)) m.push_back(l.basis_vec(x, y, i));
      }
      r.plus[x][y] = Subspace::span(l.dim(x, y), l.field(), p);
      r.minus[x][y] = Subspace::span(l.dim(x, y), l.field(), m);
    }
  return r;
}

ReedyCat::ReedyCat(LinCatPtr cat, ReedyStructure r) : cat_(std::move(cat)), r_(std::move(r)) {
  const int n = static_cast<int>(cat_->size());
  if (static_cast<int>(r_.degree.size()) != n || static_cast<int>(r_.plus.size()) != n ||
      static_cast<int>(r_.minus.size()) != n)
    throw std::invalid_argument("Reedy structure does not match the category");
  for (int x = 0; x < n; ++x) order_.push_back(x);
  std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return r_.degree[a] < r_.degree[b]; });
}

std::vector<int> ReedyCat::objects_below(int alpha) const {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(size()); ++x)
    if (r_.degree[x] < alpha) out.push_back(x);
  return out;
}

std::vector<int> ReedyCat::objects_of_degree(int alpha) const {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(size()); ++x)
    if (r_.degree[x] == alpha) out.push_back(x);
  return out;
}

std::vector<int> ReedyCat::distinct_degrees() const {
  std::vector<int> d = r_.degree;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

const Algebra& ReedyCat::local(int x) const {
  {
    std::lock_guard<std::mutex> g(mu_);
    auto it = local_.find(x);
    if (it != local_.end()) return *it->second;
  }
  auto a = std::make_shared<Algebra>(endo_algebra(*cat_, x, r_.plus[x][x]));
  std::lock_guard<std::mutex> g(mu_);
  return *local_.emplace(x, a).first->second;
}

namespace {

// Matrix whose column i is the coordinate vector of op(b_i) in `target`.
template <class Op>
Mat action_matrix(const Subspace& src, const Subspace& target, Op op, const char* what) {
  Mat m(target.dim(), src.dim(), src.field());
  for (std::size_t i = 0; i < src.dim(); ++i) {
    Vec v = op(src.reduced().row(i));
    if (!target.contains(v)) throw std::invalid_argument(std::string(what) + " is not closed under composition");
    m.set_col(i, target.coords(v));
  }
  return m;
}

}  // namespace

AlgModule ReedyCat::plus_module(int z, int y) const {
  const Algebra& a = local(z);
  const Subspace& p = r_.plus[z][y];
  AlgModule m;
  m.dim = p.dim();
  for (std::size_t k = 0; k < a.n; ++k) {
    Vec bk = r_.plus[z][z].reduced().row(k);
    m.act.push_back(action_matrix(p, p, [&](const Vec& v) { return cat_->compose(z, z, y, v, bk); }, "plus"));
  }
  return m;
}

AlgModule ReedyCat::minus_module(int x, int z) const {
  const Algebra& a = local(z);
  const Subspace& q = r_.minus[x][z];
  AlgModule m;
  m.dim = q.dim();
  for (std::size_t k = 0; k < a.n; ++k) {
    Vec bk = r_.plus[z][z].reduced().row(k);
    m.act.push_back(action_matrix(q, q, [&](const Vec& v) { return cat_->compose(x, z, z, bk, v); }, "minus"));
  }
  return m;
}

RhoData rho_map(const ReedyCat& rc, int x, int y) {
  const LinCat& l = *rc.cat();
  const Field F = l.field();
  RhoData d;
  d.x = x;
  d.y = y;
  std::vector<Vec> cols;
  for (int z : rc.order()) {
    const Subspace &P = rc.plus(z, y), &N = rc.minus(x, z);
    if (P.dim() == 0 || N.dim() == 0) continue;
    AlgModule pm = rc.plus_module(z, y), nm = rc.minus_module(x, z);
    RhoBlock b;
    b.z = z;
    b.offset = d.domain_dim;
    b.plus_basis = P.basis_matrix();
    b.minus_basis = N.basis_matrix();
    b.t = balanced_tensor(P.dim(), pm.act, N.dim(), nm.act, F);
    const std::size_t dn = N.dim();
    std::vector<Vec> pure(P.dim() * dn);
    for (std::size_t i = 0; i < P.dim(); ++i)
      for (std::size_t j = 0; j < dn; ++j)
        pure[i * dn + j] = l.compose(x, z, y, P.reduced().row(i), N.reduced().row(j));
    const Mat& s = b.t.quotient.section();
    for (std::size_t c = 0; c < b.dim(); ++c) {
      Vec v = zeros(l.dim(x, y), F);
      for (std::size_t k = 0; k < s.rows(); ++k)
        if (!s(k, c).is_zero()) axpy(v, s(k, c), pure[k]);
      cols.push_back(std::move(v));
    }
    d.domain_dim += b.dim();
    d.blocks.push_back(std::move(b));
  }
  d.rho = Mat::from_cols(cols, l.dim(x, y), F);
  return d;
}

const RhoData& ReedyCat::rho(int x, int y) const {
  {
    std::lock_guard<std::mutex> g(mu_);
    auto it = rho_.find({x, y});
    if (it != rho_.end()) return *it->second;
  }
  auto d = std::make_shared<RhoData>(rho_map(*this, x, y));
  std::lock_guard<std::mutex> g(mu_);
  return *rho_.emplace(std::make_pair(x, y), d).first->second;
}

Subspace ReedyCat::ideal(int alpha, int x, int y) const {
  const RhoData& d = rho(x, y);
  std::vector<Vec> v;
  for (const auto& b : d.blocks)
    if (r_.degree[b.z] < alpha)
      for (std::size_t c = 0; c < b.dim(); ++c) v.push_back(d.rho.col(b.offset + c));
  return Subspace::span(cat_->dim(x, y), field(), v);
}

ReedyReport check_reedy(const ReedyCat& rc) {
  ReedyReport rep;
  const LinCat& l = *rc.cat();
  const int n = static_cast<int>(l.size());
  auto name = [&](int x) { return l.object(x); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (rc.plus(x, y).dim() && !(rc.degree(y) > rc.degree(x))) {
        rep.axiom_a = false;
        rep.violations.push_back("(a) nonzero plus morphism " + name(x) + " -> " + name(y) + " does not raise degree");
      }
      if (rc.minus(x, y).dim() && !(rc.degree(x) > rc.degree(y))) {
        rep.axiom_b = false;
        rep.violations.push_back("(b) nonzero minus morphism " + name(x) + " -> " + name(y) + " does not lower degree");
      }
    }
  for (int x = 0; x < n; ++x)
    if (rc.plus(x, x) != rc.minus(x, x)) {
      rep.axiom_c = false;
      rep.violations.push_back("(c) plus and minus differ at " + name(x));
    }
  // Wide subcategory conditions.
  for (const auto* side : {&rc.structure().plus, &rc.structure().minus}) {
    const char* tag = side == &rc.structure().plus ? "plus" : "minus";
    for (int x = 0; x < n; ++x)
      if (!(*side)[x][x].contains(l.identity(x))) {
        rep.subcategories = false;
        rep.violations.push_back(std::string(tag) + " misses the identity of " + name(x));
      }
    for (int x = 0; x < n && rep.subcategories; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          for (const auto& g : (*side)[y][z].basis())
            for (const auto& f : (*side)[x][y].basis())
              if (!(*side)[x][z].contains(l.compose(x, y, z, g, f))) {
                if (rep.subcategories)
                  rep.violations.push_back(std::string(tag) + " not closed under composition at " + name(x) + " -> " +
                                           name(y) + " -> " + name(z));
                rep.subcategories = false;
              }
  }
  if (!rep.subcategories || !rep.axiom_c) {
    rep.axiom_d = false;
    rep.violations.push_back("(d) not evaluated: plus/minus are not valid subcategories");
    return rep;
  }
  std::vector<ReedyReport::Pair> pairs(static_cast<std::size_t>(n) * n);
  parallel_for(pairs.size(), [&](std::size_t k) {
    int x = static_cast<int>(k) / n, y = static_cast<int>(k) % n;
    const RhoData& d = rc.rho(x, y);
    auto& p = pairs[k];
    p.x = x;
    p.y = y;
    p.hom_dim = l.dim(x, y);
    p.domain_dim = d.domain_dim;
    p.rank = rank(d.rho);
    for (const auto& b : d.blocks) p.block_dims.emplace_back(b.z, b.dim());
  });
  for (const auto& p : pairs) {
    if (p.rank != p.hom_dim || p.rank != p.domain_dim) {
      rep.axiom_d = false;
      std::ostringstream os;
      os << "(d) rho not bijective at (" << name(p.x) << ", " << name(p.y) << "): hom dim " << p.hom_dim
         << ", domain dim " << p.domain_dim << ", rank defect " << std::max(p.hom_dim, p.domain_dim) - p.rank;
      rep.violations.push_back(os.str());
    }
  }
  rep.pairs = std::move(pairs);
  return rep;
}

std::vector<FactorTerm> reedy_factorize(const ReedyCat& rc, int x, int y, const Vec& f) {
  const RhoData& d = rc.rho(x, y);
  const Field F = rc.field();
  if (d.domain_dim != rc.cat()->dim(x, y) || rank(d.rho) != d.domain_dim)
    throw RhoNotIso("rho is not an isomorphism at (" + rc.cat()->object(x) + ", " + rc.cat()->object(y) + ")");
  Mat rhs(f.size(), 1, F);
  rhs.set_col(0, f);
  auto s = solve(d.rho, rhs);
  if (!s) throw RhoNotIso("rho is not surjective");
  Vec c = s->particular.col(0);
  std::vector<FactorTerm> out;
  for (const auto& b : d.blocks) {
    FactorTerm t;
    t.z = b.z;
    t.coords.assign(c.begin() + static_cast<long>(b.offset), c.begin() + static_cast<long>(b.offset + b.dim()));
    if (is_zero(t.coords)) continue;
    const Mat& sec = b.t.quotient.section();
    Vec tensor = sec * t.coords;
    const std::size_t dn = b.minus_basis.cols();
    for (std::size_t k = 0; k < tensor.size(); ++k)
      if (!tensor[k].is_zero())
        t.pure.push_back({b.plus_basis.col(k / dn), b.minus_basis.col(k % dn), tensor[k]});
    out.push_back(std::move(t));
  }
  return out;
}

Vec compose_factorization(const ReedyCat& rc, int x, int y, const std::vector<FactorTerm>& terms) {
  Vec v = zeros(rc.cat()->dim(x, y), rc.field());
  for (const auto& t : terms)
    for (const auto& p : t.pure) axpy(v, p.coeff, rc.cat()->compose(x, t.z, y, p.plus, p.minus));
  return v;
}

PartialOrders partial_orders(const ReedyCat& rc) {
  const int n = static_cast<int>(rc.size());
  PartialOrders o;
  o.minus_le.assign(n, std::vector<bool>(n, false));
  o.plus_le.assign(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    o.minus_le[x][x] = o.plus_le[x][x] = true;
    for (int y = 0; y < n; ++y) {
      if (rc.minus(x, y).dim()) o.minus_le[y][x] = true;
      if (rc.plus(x, y).dim()) o.plus_le[x][y] = true;
    }
  }
  for (auto* rel : {&o.minus_le, &o.plus_le})
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if ((*rel)[i][k] && (*rel)[k][j]) (*rel)[i][j] = true;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (o.minus_le[x][y] && o.minus_le[y][x])
        throw AntisymmetryViolation("minus order is not antisymmetric on " + rc.cat()->object(x) + ", " +
                                    rc.cat()->object(y));
      if (o.plus_le[x][y] && o.plus_le[y][x])
        throw AntisymmetryViolation("plus order is not antisymmetric on " + rc.cat()->object(x) + ", " +
                                    rc.cat()->object(y));
    }
  return o;
}

Ideal ideal_I(const ReedyCat& rc, int alpha) {
  const int n = static_cast<int>(rc.size());
  Ideal I;
  I.sub.assign(n, std::vector<Subspace>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) I.sub[x][y] = rc.ideal(alpha, x, y);
  return I;
}

std::vector<Subspace> ideal_I_x(const ReedyCat& rc, int x) {
  std::vector<Subspace> out;
  for (int y = 0; y < static_cast<int>(rc.size()); ++y) out.push_back(rc.ideal(rc.degree(x), x, y));
  return out;
}

std::optional<std::string> check_two_sided(const LinCat& l, const Ideal& I) {
  const int n = static_cast<int>(l.size());
  for (const auto& g : l.generators())
    for (int w = 0; w < n; ++w) {
      // g o i for i in I(w, g.src); i o g for i in I(g.dst, w).
      for (const auto& i : I.sub[w][g.src].basis())
        if (!I.sub[w][g.dst].contains(l.compose(w, g.src, g.dst, g.v, i)))
          return "ideal not stable under post-composition into " + l.object(g.dst);
      for (const auto& i : I.sub[g.dst][w].basis())
        if (!I.sub[g.src][w].contains(l.compose(g.src, g.dst, w, i, g.v)))
          return "ideal not stable under pre-composition from " + l.object(g.src);
    }
  return std::nullopt;
}

SubReedy full_sub_reedy(const ReedyCat& rc, const std::vector<int>& objs) {
  const int n = static_cast<int>(objs.size());
  ReedyStructure r;
  r.plus.assign(n, std::vector<Subspace>(n));
  r.minus.assign(n, std::vector<Subspace>(n));
  for (int i = 0; i < n; ++i) {
    r.degree.push_back(rc.degree(objs[i]));
    for (int j = 0; j < n; ++j) {
      r.plus[i][j] = rc.plus(objs[i], objs[j]);
      r.minus[i][j] = rc.minus(objs[i], objs[j]);
    }
  }
  return {std::make_shared<ReedyCat>(full_subcategory(*rc.cat(), objs), std::move(r)), objs};
}

SubReedy truncate(const ReedyCat& rc, int alpha) { return full_sub_reedy(rc, rc.objects_below(alpha)); }

SubReedy quotient_cat(const ReedyCat& rc, int alpha) {
  const LinCat& l = *rc.cat();
  const Field F = l.field();
  std::vector<int> objs;
  for (int x = 0; x < static_cast<int>(l.size()); ++x)
    if (rc.degree(x) >= alpha) objs.push_back(x);
  const int n = static_cast<int>(objs.size());
  std::vector<std::vector<QuotientSpace>> q(n, std::vector<QuotientSpace>(n));
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<std::string>>> labels(n, std::vector<std::vector<std::string>>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back(l.object(objs[i]));
    for (int j = 0; j < n; ++j) {
      q[i][j] = QuotientSpace(l.dim(objs[i], objs[j]), rc.ideal(alpha, objs[i], objs[j]));
      const Mat& s = q[i][j].section();
      for (std::size_t c = 0; c < s.cols(); ++c)
        for (std::size_t k = 0; k < s.rows(); ++k)
          if (s(k, c).is_one()) {
            labels[i][j].push_back(l.labels(objs[i], objs[j])[k]);
            break;
          }
    }
  }
  auto c = std::make_shared<LinCat>(F, names, labels);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (std::size_t g = 0; g < q[j][k].dim(); ++g)
          for (std::size_t f = 0; f < q[i][j].dim(); ++f) {
            Vec v = q[i][k].project(
                l.compose(objs[i], objs[j], objs[k], q[j][k].section().col(g), q[i][j].section().col(f)));
            SVec sv;
            for (std::size_t t = 0; t < v.size(); ++t)
              if (!v[t].is_zero()) sv.emplace_back(static_cast<int>(t), v[t]);
            c->set_compose(i, j, k, static_cast<int>(g), static_cast<int>(f), sv);
          }
  for (int i = 0; i < n; ++i) c->set_identity(i, q[i][i].project(l.identity(objs[i])));
  ReedyStructure r;
  r.plus.assign(n, std::vector<Subspace>(n));
  r.minus.assign(n, std::vector<Subspace>(n));
  for (int i = 0; i < n; ++i) {
    r.degree.push_back(rc.degree(objs[i]));
    for (int j = 0; j < n; ++j) {
      std::vector<Vec> p, m;
      for (const auto& v : rc.plus(objs[i], objs[j]).basis()) p.push_back(q[i][j].project(v));
      for (const auto& v : rc.minus(objs[i], objs[j]).basis()) m.push_back(q[i][j].project(v));
      r.plus[i][j] = Subspace::span(q[i][j].dim(), F, p);
      r.minus[i][j] = Subspace::span(q[i][j].dim(), F, m);
    }
  }
  return {std::make_shared<ReedyCat>(c, std::move(r)), objs};
}

Rep standard_module(const ReedyCat& rc, int x, Side side) {
  const int n = static_cast<int>(rc.size());
  Rep rep = representable(rc.cat(), x, side);
  std::vector<Subspace> subs;
  for (int y = 0; y < n; ++y)
    subs.push_back(side == Side::Left ? rc.ideal(rc.degree(x), x, y) : rc.ideal(rc.degree(x), y, x));
  return quotient_rep(rep, subs).rep;
}

ProjectivityReport projectivity_hypotheses(const ReedyCat& rc) {
  ProjectivityReport rep;
  const int n = static_cast<int>(rc.size());
  const LinCat& l = *rc.cat();
  for (int z = 0; z < n; ++z) {
    const Algebra& a = rc.local(z);
    if (a.known_semisimple()) continue;
    Algebra aop = a.opposite();
    for (int y = 0; y < n; ++y) {
      if (y == z) continue;
      if (rc.plus(z, y).dim() && !is_projective(aop, rc.plus_module(z, y))) {
        rep.plus_projective = false;
        rep.failures.push_back("plus(" + l.object(z) + ", " + l.object(y) + ") is not right-projective");
      }
      if (rc.minus(y, z).dim() && !is_projective(a, rc.minus_module(y, z))) {
        rep.minus_projective = false;
        rep.failures.push_back("minus(" + l.object(y) + ", " + l.object(z) + ") is not left-projective");
      }
    }
  }
  return rep;
}

}  // namespace rlab
