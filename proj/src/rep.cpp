#include "reedylab/rep.hpp"

#include <algorithm>
#include <sstream>

namespace rlab {

std::size_t Rep::total_dim() const {
  std::size_t t = 0;
  for (auto d : dims) t += d;
  return t;
}

Mat Rep::action(int x, int y, const Vec& v) const {
  const std::size_t r = side == Side::Left ? dims[y] : dims[x];
  const std::size_t c = side == Side::Left ? dims[x] : dims[y];
  Mat m(r, c, field());
  const auto& a = act[x][y];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    m = m + a[i].scaled(v[i]);
  }
  return m;
}

std::vector<Edge> generator_edges(const Rep& r) {
  std::vector<Edge> out;
  for (const auto& g : r.cat->generators()) {
    if (r.side == Side::Left)
      out.push_back({g.src, g.dst, r.action(g.src, g.dst, g.v)});
    else
      out.push_back({g.dst, g.src, r.action(g.src, g.dst, g.v)});
  }
  return out;
}

std::optional<std::string> check_functorial(const Rep& r) {
  const LinCat& c = *r.cat;
  const int n = static_cast<int>(c.size());
  const Field F = c.field();
  for (int x = 0; x < n; ++x)
    if (!r.action(x, x, c.identity(x)).is_identity()) return "identity of " + c.object(x) + " does not act as 1";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (std::size_t g = 0; g < c.dim(y, z); ++g)
          for (std::size_t f = 0; f < c.dim(x, y); ++f) {
            Vec gf = c.compose(x, y, z, c.basis_vec(y, z, static_cast<int>(g)), c.basis_vec(x, y, static_cast<int>(f)));
            Mat lhs = r.action(x, z, gf);
            Mat rhs = r.side == Side::Left ? r.act[y][z][g] * r.act[x][y][f] : r.act[x][y][f] * r.act[y][z][g];
            if (lhs != rhs) return "action not multiplicative at (" + c.labels(y, z)[g] + ", " + c.labels(x, y)[f] + ")";
          }
  (void)F;
  return std::nullopt;
}

bool is_natural(const Rep& src, const Rep& tgt, const RepMap& f) {
  auto es = generator_edges(src), et = generator_edges(tgt);
  for (std::size_t i = 0; i < es.size(); ++i)
    if (et[i].a * f.m[es[i].from] != f.m[es[i].to] * es[i].a) return false;
  return true;
}

Rep zero_rep(LinCatPtr cat, Side side) {
  Rep r;
  const int n = static_cast<int>(cat->size());
  r.cat = cat;
  r.side = side;
  r.dims.assign(n, 0);
  r.act.assign(n, std::vector<std::vector<Mat>>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r.act[x][y].assign(cat->dim(x, y), Mat(0, 0, cat->field()));
  return r;
}

Rep representable(LinCatPtr cat, int x, Side side) {
  if (x < 0 || x >= static_cast<int>(cat->size())) throw std::invalid_argument("representable: unknown object");
  const int n = static_cast<int>(cat->size());
  Rep r = zero_rep(cat, side);
  for (int y = 0; y < n; ++y) r.dims[y] = side == Side::Left ? cat->dim(x, y) : cat->dim(y, x);
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z)
      for (std::size_t i = 0; i < cat->dim(y, z); ++i) {
        Vec f = cat->basis_vec(y, z, static_cast<int>(i));
        r.act[y][z][i] = side == Side::Left ? cat->left_mult(x, y, z, f) : cat->right_mult(y, z, x, f);
      }
  return r;
}

Rep free_module(LinCatPtr cat, const std::vector<int>& gens) {
  Rep r = zero_rep(cat);
  for (int g : gens) r = direct_sum(r, representable(cat, g, Side::Left));
  return r;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  if (a.cat != b.cat || a.side != b.side) throw std::invalid_argument("direct_sum: incompatible modules");
  Rep r = a;
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) r.dims[x] = a.dims[x] + b.dims[x];
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t i = 0; i < r.act[x][y].size(); ++i) r.act[x][y][i] = direct_sum(a.act[x][y][i], b.act[x][y][i]);
  return r;
}

SumMaps direct_sum_maps(const Rep& a, const Rep& b) {
  SumMaps s;
  const Field F = a.field();
  for (std::size_t x = 0; x < a.size(); ++x) {
    const std::size_t p = a.dims[x], q = b.dims[x];
    Mat il(p + q, p, F), ir(p + q, q, F), pl(p, p + q, F), pr(q, p + q, F);
    for (std::size_t i = 0; i < p; ++i) il(i, i) = pl(i, i) = Scalar::one(F);
    for (std::size_t i = 0; i < q; ++i) ir(p + i, i) = pr(i, p + i) = Scalar::one(F);
    s.inl.m.push_back(il);
    s.inr.m.push_back(ir);
    s.pl.m.push_back(pl);
    s.pr.m.push_back(pr);
  }
  return s;
}

RepMap identity_map(const Rep& r) {
  RepMap f;
  for (auto d : r.dims) f.m.push_back(Mat::identity(d, r.field()));
  return f;
}

RepMap zero_map(const Rep& src, const Rep& tgt) {
  RepMap f;
  for (std::size_t x = 0; x < src.size(); ++x) f.m.emplace_back(tgt.dims[x], src.dims[x], src.field());
  return f;
}

RepMap compose(const RepMap& g, const RepMap& f) {
  RepMap h;
  for (std::size_t x = 0; x < f.m.size(); ++x) h.m.push_back(g.m[x] * f.m[x]);
  return h;
}

RepMap add(const RepMap& a, const RepMap& b) {
  RepMap h;
  for (std::size_t x = 0; x < a.m.size(); ++x) h.m.push_back(a.m[x] + b.m[x]);
  return h;
}

RepMap scale(const Scalar& s, const RepMap& a) {
  RepMap h;
  for (const auto& m : a.m) h.m.push_back(m.scaled(s));
  return h;
}

bool is_mono(const RepMap& f) {
  for (const auto& m : f.m)
    if (rank(m) != m.cols()) return false;
  return true;
}

bool is_epi(const Rep& tgt, const RepMap& f) {
  for (std::size_t x = 0; x < f.m.size(); ++x)
    if (rank(f.m[x]) != tgt.dims[x]) return false;
  return true;
}

bool is_iso(const RepMap& f) {
  for (const auto& m : f.m)
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  return true;
}

bool is_zero(const RepMap& f) {
  for (const auto& m : f.m)
    if (!m.is_zero()) return false;
  return true;
}

namespace {

std::string violation(const Rep& m, int x, int y, std::size_t i) {
  std::ostringstream os;
  os << "subspaces not stable under " << m.cat->labels(x, y)[i] << ": " << m.cat->object(x) << " -> "
     << m.cat->object(y);
  return os.str();
}

// Coordinates of the columns of v inside the column basis b (b has full column rank).
std::optional<Mat> coords_in(const Mat& b, const Mat& v) {
  auto s = solve(b, v);
  if (!s) return std::nullopt;
  return s->particular;
}

}  // namespace

SubQuotient sub_rep(const Rep& m, const std::vector<Subspace>& subs) {
  const int n = static_cast<int>(m.size());
  const Field F = m.field();
  SubQuotient out;
  out.rep = zero_rep(m.cat, m.side);
  std::vector<Mat> B(n);
  for (int x = 0; x < n; ++x) {
    B[x] = subs[x].dim() ? subs[x].basis_matrix() : Mat(m.dims[x], 0, F);
    out.rep.dims[x] = subs[x].dim();
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (std::size_t i = 0; i < m.act[x][y].size(); ++i) {
        // Left: M(x) -> M(y); right: M(y) -> M(x).
        const int s = m.side == Side::Left ? x : y, t = m.side == Side::Left ? y : x;
        auto c = coords_in(B[t], m.act[x][y][i] * B[s]);
        if (!c) throw NotASubmodule(violation(m, x, y, i));
        out.rep.act[x][y][i] = *c;
      }
  out.map.m = B;
  return out;
}

SubQuotient quotient_rep(const Rep& m, const std::vector<Subspace>& subs) {
  const int n = static_cast<int>(m.size());
  SubQuotient out;
  out.rep = zero_rep(m.cat, m.side);
  for (int x = 0; x < n; ++x) {
    out.quotients.emplace_back(m.dims[x], subs[x]);
    out.rep.dims[x] = out.quotients[x].dim();
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (std::size_t i = 0; i < m.act[x][y].size(); ++i) {
        const int s = m.side == Side::Left ? x : y, t = m.side == Side::Left ? y : x;
        const Mat& a = m.act[x][y][i];
        for (const auto& v : subs[s].basis())
          if (!subs[t].contains(a * v)) throw NotASubmodule(violation(m, x, y, i));
        out.rep.act[x][y][i] = out.quotients[t].projection() * a * out.quotients[s].section();
      }
  for (int x = 0; x < n; ++x) out.map.m.push_back(out.quotients[x].projection());
  return out;
}

SubQuotient kernel_rep(const Rep& src, const RepMap& f) {
  std::vector<Subspace> subs;
  for (std::size_t x = 0; x < src.size(); ++x) {
    Mat k = kernel(f.m[x]);
    subs.push_back(k.cols() ? Subspace::column_span(k) : Subspace(src.dims[x], src.field()));
  }
  return sub_rep(src, subs);
}

namespace {
std::vector<Subspace> images(const Rep& tgt, const RepMap& f) {
  std::vector<Subspace> subs;
  for (std::size_t x = 0; x < tgt.size(); ++x)
    subs.push_back(f.m[x].cols() ? Subspace::column_span(f.m[x]) : Subspace(tgt.dims[x], tgt.field()));
  return subs;
}
}  // namespace

SubQuotient cokernel_rep(const Rep& tgt, const RepMap& f) { return quotient_rep(tgt, images(tgt, f)); }
SubQuotient image_rep(const Rep& tgt, const RepMap& f) { return sub_rep(tgt, images(tgt, f)); }

std::vector<RepMap> hom_reps(const Rep& m, const Rep& n) {
  if (m.cat != n.cat || m.side != n.side) throw std::invalid_argument("hom_reps: modules over different categories");
  const std::size_t no = m.size();
  const Field F = m.field();
  std::vector<std::size_t> off(no + 1, 0);
  for (std::size_t x = 0; x < no; ++x) off[x + 1] = off[x] + n.dims[x] * m.dims[x];
  const std::size_t nv = off[no];
  std::vector<Vec> rows;
  auto em = generator_edges(m), en = generator_edges(n);
  for (std::size_t e = 0; e < em.size(); ++e) {
    const int x = em[e].from, y = em[e].to;
    const Mat &A = em[e].a, &B = en[e].a;  // A: M(x)->M(y), B: N(x)->N(y)
    // B T_x - T_y A = 0, entries (a, b) with a < dim N(y), b < dim M(x).
    for (std::size_t a = 0; a < n.dims[y]; ++a)
      for (std::size_t b = 0; b < m.dims[x]; ++b) {
        Vec row = zeros(nv, F);
        for (std::size_t i = 0; i < n.dims[x]; ++i)
          if (!B(a, i).is_zero()) row[off[x] + i * m.dims[x] + b] += B(a, i);
        for (std::size_t j = 0; j < m.dims[y]; ++j)
          if (!A(j, b).is_zero()) row[off[y] + a * m.dims[y] + j] -= A(j, b);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  }
  Mat K = rows.empty() ? Mat::identity(nv, F) : kernel(Mat::from_rows(rows, nv, F));
  std::vector<RepMap> out;
  for (std::size_t c = 0; c < K.cols(); ++c) {
    RepMap f;
    for (std::size_t x = 0; x < no; ++x) {
      Mat t(n.dims[x], m.dims[x], F);
      for (std::size_t i = 0; i < n.dims[x]; ++i)
        for (std::size_t j = 0; j < m.dims[x]; ++j) t(i, j) = K(off[x] + i * m.dims[x] + j, c);
      f.m.push_back(std::move(t));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const Rep& m, const Rep& n) { return hom_reps(m, n).size(); }

std::optional<RepMap> find_iso(const Rep& m, const Rep& n, std::mt19937_64& rng, int tries) {
  if (m.dims != n.dims) return std::nullopt;
  auto basis = hom_reps(m, n);
  if (m.total_dim() == 0) return zero_map(m, n);
  for (const auto& b : basis)
    if (is_iso(b)) return b;
  for (int t = 0; t < tries; ++t) {
    RepMap f = zero_map(m, n);
    for (const auto& b : basis) f = add(f, scale(random_scalar(rng, m.field(), 3), b));
    if (is_iso(f)) return f;
  }
  return std::nullopt;
}

Rep to_left_over_op(const Rep& r) {
  if (r.side != Side::Right) throw std::invalid_argument("to_left_over_op: expects a right module");
  return flip_side(r);
}

Rep to_right_from_op(const Rep& l) {
  if (l.side != Side::Left) throw std::invalid_argument("to_right_from_op: expects a left module");
  return flip_side(l);
}

Rep flip_side(const Rep& r) {
  auto op = r.cat->op();
  const int n = static_cast<int>(r.size());
  Rep o = zero_rep(op, r.side == Side::Left ? Side::Right : Side::Left);
  o.dims = r.dims;
  // f in op(x, y) = C(y, x); the matrices carry over unchanged.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) o.act[x][y] = r.act[y][x];
  return o;
}

Rep dual(const Rep& r) {
  const int n = static_cast<int>(r.size());
  if (r.side == Side::Right) {
    Rep o = zero_rep(r.cat, Side::Left);
    o.dims = r.dims;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (std::size_t i = 0; i < r.act[x][y].size(); ++i) o.act[x][y][i] = r.act[x][y][i].transpose();
    return o;
  }
  auto op = r.cat->op();
  Rep o = zero_rep(op, Side::Left);
  o.dims = r.dims;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (std::size_t i = 0; i < r.act[y][x].size(); ++i) o.act[x][y][i] = r.act[y][x][i].transpose();
  return o;
}

Rep restrict_rep(const Rep& r, LinCatPtr sub, const std::vector<int>& objs) {
  const int n = static_cast<int>(objs.size());
  Rep o = zero_rep(sub, r.side);
  for (int i = 0; i < n; ++i) o.dims[i] = r.dims[objs[i]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) o.act[i][j] = r.act[objs[i]][objs[j]];
  return o;
}

RepMap restrict_map(const RepMap& f, const std::vector<int>& objs) {
  RepMap o;
  for (int x : objs) o.m.push_back(f.m[x]);
  return o;
}

Rep restrict_along(const Rep& r, const SubCat& d) {
  const int n = static_cast<int>(d.objs.size());
  Rep o = zero_rep(d.cat, r.side);
  for (int i = 0; i < n; ++i) o.dims[i] = r.dims[d.objs[i]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (std::size_t b = 0; b < d.cat->dim(i, j); ++b)
        o.act[i][j][b] = r.action(d.objs[i], d.objs[j], d.embed[i][j].col(b));
  return o;
}

SubCat whole(const LinCatPtr& cat) {
  SubCat d;
  const int n = static_cast<int>(cat->size());
  d.cat = cat;
  for (int i = 0; i < n; ++i) d.objs.push_back(i);
  d.embed.assign(n, std::vector<Mat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.embed[i][j] = Mat::identity(cat->dim(i, j), cat->field());
  return d;
}

TensorSpace tensor_over(const SubCat& d, const Rep& right, const Rep& left) {
  if (right.side != Side::Right || left.side != Side::Left) throw std::invalid_argument("tensor_over: sides");
  const int n = static_cast<int>(d.objs.size());
  const Field F = left.field();
  TensorSpace t;
  t.offsets.resize(n);
  for (int i = 0; i < n; ++i) {
    t.offsets[i] = t.total;
    t.total += right.dims[d.objs[i]] * left.dims[d.objs[i]];
  }
  std::vector<Vec> rel;
  for (const auto& g : d.cat->generators()) {
    const int i = g.src, j = g.dst, oi = d.objs[i], oj = d.objs[j];
    Vec w = d.embed[i][j] * g.v;
    Mat R = right.action(oi, oj, w);  // right(oj) -> right(oi)
    Mat L = left.action(oi, oj, w);   // left(oi) -> left(oj)
    const std::size_t ri = right.dims[oi], rj = right.dims[oj], li = left.dims[oi], lj = left.dims[oj];
    for (std::size_t a = 0; a < rj; ++a)
      for (std::size_t b = 0; b < li; ++b) {
        Vec v = zeros(t.total, F);
        for (std::size_t r = 0; r < ri; ++r)
          if (!R(r, a).is_zero()) v[t.offsets[i] + r * li + b] += R(r, a);
        for (std::size_t s = 0; s < lj; ++s)
          if (!L(s, b).is_zero()) v[t.offsets[j] + a * lj + s] -= L(s, b);
        if (!is_zero(v)) rel.push_back(std::move(v));
      }
  }
  t.q = QuotientSpace(t.total, Subspace::span(t.total, F, rel));
  return t;
}

Scalar random_scalar(std::mt19937_64& rng, Field f, int spread) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  return Scalar(f, static_cast<long>(dist(rng)));
}

Vec random_vec(std::mt19937_64& rng, std::size_t n, Field f) {
  Vec v(n);
  for (auto& s : v) s = random_scalar(rng, f);
  return v;
}

Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, Field f) {
  Mat m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng, f);
  return m;
}

std::vector<Subspace> generated_submodule(const Rep& m, const std::vector<std::pair<int, Vec>>& elems) {
  const std::size_t n = m.size();
  const Field F = m.field();
  std::vector<Subspace> subs;
  for (std::size_t x = 0; x < n; ++x) subs.emplace_back(m.dims[x], F);
  auto edges = generator_edges(m);
  std::vector<std::pair<int, Vec>> work;
  auto push = [&](int x, const Vec& v) {
    if (is_zero(v) || subs[x].contains(v)) return;
    subs[x] = subs[x] + Subspace::span(m.dims[x], F, {v});
    work.emplace_back(x, v);
  };
  for (const auto& [x, v] : elems) push(x, v);
  while (!work.empty()) {
    auto [x, v] = work.back();
    work.pop_back();
    for (const auto& e : edges)
      if (e.from == x) push(e.to, e.a * v);
  }
  return subs;
}

Rep random_rep(LinCatPtr cat, std::mt19937_64& rng, std::size_t max_dim, Side side) {
  if (side == Side::Right) return to_right_from_op(random_rep(cat->op(), rng, max_dim, Side::Left));
  const int n = static_cast<int>(cat->size());
  if (n == 0) return zero_rep(cat);
  const Field F = cat->field();
  std::uniform_int_distribution<int> obj(0, n - 1), cnt(1, 2), rel(0, 2);
  std::vector<int> gens;
  for (int i = cnt(rng); i > 0; --i) gens.push_back(obj(rng));
  std::sort(gens.begin(), gens.end());
  Rep fr = free_module(cat, gens);
  std::vector<std::pair<int, Vec>> rels;
  for (int i = rel(rng); i > 0; --i) {
    int x = obj(rng);
    if (fr.dims[x]) rels.emplace_back(x, random_vec(rng, fr.dims[x], F));
  }
  for (;;) {
    auto subs = generated_submodule(fr, rels);
    int worst = -1;
    for (int x = 0; x < n; ++x)
      if (fr.dims[x] - subs[x].dim() > max_dim) {
        worst = x;
        break;
      }
    if (worst < 0) return quotient_rep(fr, subs).rep;
    // Add a relation outside the current submodule.
    Vec v;
    do v = random_vec(rng, fr.dims[worst], F);
    while (subs[worst].contains(v));
    rels.emplace_back(worst, v);
  }
}

}  // namespace rlab
