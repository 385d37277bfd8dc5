#include "reedylab/homalg.hpp"

#include <stdexcept>

namespace rlab {

namespace {

Rep blank_rep(LinCatPtr cat, Side side, const std::vector<std::size_t>& dims) {
  const int n = static_cast<int>(cat->size());
  Rep r;
  r.cat = cat;
  r.side = side;
  r.dims = dims;
  r.act.assign(n, std::vector<std::vector<Mat>>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::size_t rows = side == Side::Left ? dims[y] : dims[x];
      const std::size_t cols = side == Side::Left ? dims[x] : dims[y];
      r.act[x][y].assign(cat->dim(x, y), Mat(rows, cols, cat->field()));
    }
  return r;
}

Mat coords_of(const Subspace& s, const Mat& cols) {
  Mat out(s.dim(), cols.cols(), s.field());
  for (std::size_t c = 0; c < cols.cols(); ++c) out.set_col(c, s.coords(cols.col(c)));
  return out;
}

Vec flatten(const RepMap& f) {
  Vec v;
  for (const Mat& m : f.m)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

std::vector<std::vector<Subspace>> homs_on(const std::vector<int>& objs,
                                           const std::function<Subspace(int, int)>& f) {
  std::vector<std::vector<Subspace>> h(objs.size(), std::vector<Subspace>(objs.size()));
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j) h[i][j] = f(objs[i], objs[j]);
  return h;
}

// Block matrix of Hom(P_i, N) -> Hom(P_{i+1}, N) for free modules on src/tgt generators.
Mat hom_differential(const Rep& n, const std::vector<int>& src, const std::vector<int>& tgt,
                     const std::vector<Vec>& images) {
  const LinCat& l = *n.cat;
  const Field F = n.field();
  std::vector<std::size_t> so(src.size() + 1, 0), to(tgt.size() + 1, 0);
  for (std::size_t j = 0; j < src.size(); ++j) so[j + 1] = so[j] + n.dims[src[j]];
  for (std::size_t k = 0; k < tgt.size(); ++k) to[k + 1] = to[k] + n.dims[tgt[k]];
  Mat d(to.back(), so.back(), F);
  for (std::size_t k = 0; k < tgt.size(); ++k) {
    auto off = free_offsets(l, src, tgt[k]);
    for (std::size_t j = 0; j < src.size(); ++j) {
      const std::size_t len = l.dim(src[j], tgt[k]);
      if (!len) continue;
      Vec comp(images[k].begin() + static_cast<long>(off[j]), images[k].begin() + static_cast<long>(off[j] + len));
      if (is_zero(comp)) continue;
      d.set_block(to[k], so[j], n.action(src[j], tgt[k], comp));
    }
  }
  return d;
}

// Block matrix of M (x) P_{i+1} -> M (x) P_i for a right module M.
Mat tensor_differential(const Rep& m, const std::vector<int>& tgt, const std::vector<int>& src,
                        const std::vector<Vec>& images) {
  const LinCat& l = *m.cat;
  const Field F = m.field();
  std::vector<std::size_t> so(src.size() + 1, 0), to(tgt.size() + 1, 0);
  for (std::size_t k = 0; k < src.size(); ++k) so[k + 1] = so[k] + m.dims[src[k]];
  for (std::size_t j = 0; j < tgt.size(); ++j) to[j + 1] = to[j] + m.dims[tgt[j]];
  Mat d(to.back(), so.back(), F);
  for (std::size_t k = 0; k < src.size(); ++k) {
    auto off = free_offsets(l, tgt, src[k]);
    for (std::size_t j = 0; j < tgt.size(); ++j) {
      const std::size_t len = l.dim(tgt[j], src[k]);
      if (!len) continue;
      Vec comp(images[k].begin() + static_cast<long>(off[j]), images[k].begin() + static_cast<long>(off[j] + len));
      if (is_zero(comp)) continue;
      d.set_block(to[j], so[k], m.action(tgt[j], src[k], comp));
    }
  }
  return d;
}

std::size_t kernel_dim(const Mat& m) { return m.cols() - rank(m); }

}  // namespace

std::vector<std::pair<int, Vec>> module_generators(const Rep& m) {
  if (m.side != Side::Left) throw std::invalid_argument("module_generators: left module expected");
  const int n = static_cast<int>(m.size());
  const Field F = m.field();
  std::vector<std::pair<int, Vec>> gens;
  std::vector<Subspace> cur;
  for (int x = 0; x < n; ++x) cur.emplace_back(m.dims[x], F);
  for (int x = 0; x < n; ++x)
    for (std::size_t i = 0; i < m.dims[x]; ++i) {
      Vec e = unit_vec(m.dims[x], i, F);
      if (cur[x].contains(e)) continue;
      gens.emplace_back(x, e);
      cur = generated_submodule(m, gens);
    }
  return gens;
}

std::vector<std::size_t> free_offsets(const LinCat& l, const std::vector<int>& gens, int y) {
  std::vector<std::size_t> off(gens.size() + 1, 0);
  for (std::size_t j = 0; j < gens.size(); ++j) off[j + 1] = off[j] + l.dim(gens[j], y);
  return off;
}

RepMap free_map(const Rep& free, const std::vector<int>& gens, const std::vector<Vec>& elems, const Rep& target) {
  const LinCat& l = *target.cat;
  const int n = static_cast<int>(target.size());
  RepMap f;
  for (int y = 0; y < n; ++y) {
    Mat a(target.dims[y], free.dims[y], target.field());
    auto off = free_offsets(l, gens, y);
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t i = 0; i < l.dim(gens[j], y); ++i)
        a.set_col(off[j] + i, target.act[gens[j]][y][i] * elems[j]);
    f.m.push_back(std::move(a));
  }
  return f;
}

Resolution resolve(const Rep& m, int levels) {
  if (m.side != Side::Left) throw std::invalid_argument("resolve: left module expected");
  Resolution r;
  r.m = m;
  Rep cur = m;
  RepMap incl;  // cur -> P_{i-1}
  for (int i = 0; i < levels; ++i) {
    auto g = module_generators(cur);
    std::vector<int> objs;
    std::vector<Vec> elems, images;
    for (auto& [x, v] : g) {
      objs.push_back(x);
      elems.push_back(v);
      images.push_back(i == 0 ? v : incl.m[x] * v);
    }
    Rep p = free_module(m.cat, objs);
    RepMap d = free_map(p, objs, elems, cur);
    if (i > 0) d = compose(incl, d);
    r.gens.push_back(objs);
    r.images.push_back(images);
    r.p.push_back(p);
    r.d.push_back(d);
    if (i + 1 < levels) {
      std::vector<Subspace> ker;
      for (std::size_t x = 0; x < p.size(); ++x) ker.push_back(Subspace::column_span(kernel(d.m[x])));
      auto k = sub_rep(p, ker);
      r.syzygy.push_back(k.rep);
      r.syzygy_incl.push_back(k.map);
      cur = k.rep;
      incl = k.map;
    }
  }
  return r;
}

ProjPresentation proj_presentation(const Rep& m) {
  Resolution r = resolve(m, 2);
  ProjPresentation p;
  p.g0 = r.gens[0];
  p.g1 = r.gens[1];
  p.p0 = r.p[0];
  p.p1 = r.p[1];
  p.epi = r.d[0];
  p.d1 = r.d[1];
  p.omega = r.syzygy[0];
  p.omega_incl = r.syzygy_incl[0];
  return p;
}

ExtResult ext1(const Rep& m, const Rep& n) {
  if (m.side != n.side || m.cat != n.cat) throw std::invalid_argument("ext1: modules over different categories");
  if (m.side == Side::Right) return ext1(to_left_over_op(m), to_left_over_op(n));
  Resolution r = resolve(m, 3);
  Mat d0 = hom_differential(n, r.gens[0], r.gens[1], r.images[1]);
  Mat d1 = hom_differential(n, r.gens[1], r.gens[2], r.images[2]);
  ExtResult e;
  Mat z = kernel(d1);
  Subspace b = Subspace::column_span(d0);
  for (std::size_t c = 0; c < z.cols(); ++c) {
    Vec v = z.col(c);
    if (b.contains(v)) continue;
    e.classes.push_back(v);
    b = b + Subspace::span(v.size(), n.field(), {v});
  }
  e.dim = e.classes.size();
  return e;
}

std::size_t tor1(const Rep& m_right, const Rep& n_left) {
  if (m_right.side != Side::Right || n_left.side != Side::Left) throw std::invalid_argument("tor1: sides");
  Resolution r = resolve(n_left, 3);
  Mat d1 = tensor_differential(m_right, r.gens[0], r.gens[1], r.images[1]);
  Mat d2 = tensor_differential(m_right, r.gens[1], r.gens[2], r.images[2]);
  return kernel_dim(d1) - rank(d2);
}

std::size_t tensor_dim(const Rep& m_right, const Rep& n_left) {
  return tensor_over(whole(n_left.cat), m_right, n_left).dim();
}

bool is_projective_rep(const Rep& m) {
  if (m.side == Side::Right) return is_projective_rep(to_left_over_op(m));
  if (m.total_dim() == 0) return true;
  auto g = module_generators(m);
  std::vector<int> objs;
  std::vector<Vec> elems;
  for (auto& [x, v] : g) objs.push_back(x), elems.push_back(v);
  Rep p = free_module(m.cat, objs);
  RepMap epi = free_map(p, objs, elems, m);
  auto hs = hom_reps(m, p);
  Vec target = flatten(identity_map(m));
  std::vector<Vec> cols;
  for (const auto& h : hs) cols.push_back(flatten(compose(epi, h)));
  if (cols.empty()) return false;
  Mat a = Mat::from_cols(cols, target.size(), m.field());
  Mat rhs = Mat::from_cols({target}, target.size(), m.field());
  return solve(a, rhs).has_value();
}

bool is_injective_rep(const Rep& m) { return is_projective_rep(dual(m)); }

SubCat minus_subcat(const ReedyCat& rc) {
  std::vector<int> objs(rc.size());
  for (std::size_t i = 0; i < objs.size(); ++i) objs[i] = static_cast<int>(i);
  return make_subcategory(*rc.cat(), objs, homs_on(objs, [&](int a, int b) { return rc.minus(a, b); }));
}

SubCat plus_subcat(const ReedyCat& rc) {
  std::vector<int> objs(rc.size());
  for (std::size_t i = 0; i < objs.size(); ++i) objs[i] = static_cast<int>(i);
  return make_subcategory(*rc.cat(), objs, homs_on(objs, [&](int a, int b) { return rc.plus(a, b); }));
}

Rep induce_minus(const ReedyCat& rc, const SubCat& minus, const Rep& v) {
  const LinCat& l = *rc.cat();
  const Field F = l.field();
  const int n = static_cast<int>(l.size());
  std::vector<TensorSpace> t(n);
  for (int y = 0; y < n; ++y) {
    std::vector<std::size_t> dims(n);
    for (int i = 0; i < n; ++i) dims[i] = l.dim(minus.objs[i], y);
    Rep r = blank_rep(minus.cat, Side::Right, dims);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (std::size_t b = 0; b < minus.cat->dim(i, j); ++b)
          r.act[i][j][b] = l.right_mult(minus.objs[i], minus.objs[j], y, minus.embed[i][j].col(b));
    t[y] = tensor_over(whole(minus.cat), r, v);
  }
  std::vector<std::size_t> dims(n);
  for (int y = 0; y < n; ++y) dims[y] = t[y].dim();
  Rep out = blank_rep(rc.cat(), Side::Left, dims);
  for (int y = 0; y < n; ++y)
    for (int y2 = 0; y2 < n; ++y2)
      for (std::size_t g = 0; g < l.dim(y, y2); ++g) {
        Mat big(t[y2].total, t[y].total, F);
        for (int i = 0; i < n; ++i) {
          const int o = minus.objs[i];
          if (!v.dims[i] || !l.dim(o, y)) continue;
          Mat k = kron(l.left_mult(o, y, y2, l.basis_vec(y, y2, static_cast<int>(g))), Mat::identity(v.dims[i], F));
          big.set_block(t[y2].offsets[i], t[y].offsets[i], k);
        }
        out.act[y][y2][g] = t[y2].q.projection() * big * t[y].q.section();
      }
  return out;
}

Rep local_at(const ReedyCat& rc, const SubCat& minus, int x) {
  const LinCat& l = *rc.cat();
  const int n = static_cast<int>(l.size());
  const Subspace& a = rc.plus(x, x);
  std::vector<std::size_t> dims(n, 0);
  dims[x] = a.dim();
  Rep r = blank_rep(minus.cat, Side::Left, dims);
  for (std::size_t b = 0; b < minus.cat->dim(x, x); ++b) {
    Vec w = minus.embed[x][x].col(b);
    Mat m(a.dim(), a.dim(), l.field());
    for (std::size_t k = 0; k < a.dim(); ++k) m.set_col(k, a.coords(l.compose(x, x, x, w, a.reduced().row(k))));
    r.act[x][x][b] = m;
  }
  return r;
}

Rep standard_tensor(const ReedyCat& rc, int z, const AlgModule& nm) { return standard_tensor_data(rc, z, nm).rep; }

StandardTensor standard_tensor_data(const ReedyCat& rc, int z, const AlgModule& nm) {
  const LinCat& l = *rc.cat();
  const Field F = l.field();
  const int n = static_cast<int>(l.size());
  const Algebra& a = rc.local(z);
  Rep delta = standard_module(rc, z, Side::Left);
  StandardTensor st;
  std::vector<BalancedTensor>& bt = st.t;
  std::vector<std::size_t> dims(n);
  for (int w = 0; w < n; ++w) {
    st.delta_q.emplace_back(l.dim(z, w), rc.ideal(rc.degree(z), z, w));
    const QuotientSpace& q = st.delta_q.back();
    std::vector<Mat> right;
    for (std::size_t k = 0; k < a.n; ++k)
      right.push_back(q.projection() * l.right_mult(z, z, w, rc.plus(z, z).reduced().row(k)) * q.section());
    bt.push_back(balanced_tensor(delta.dims[w], right, nm.dim, nm.act, F));
    dims[w] = bt[w].dim();
  }
  Rep out = blank_rep(rc.cat(), Side::Left, dims);
  for (int w = 0; w < n; ++w)
    for (int w2 = 0; w2 < n; ++w2)
      for (std::size_t g = 0; g < l.dim(w, w2); ++g) {
        Mat k = kron(delta.act[w][w2][g], Mat::identity(nm.dim, F));
        out.act[w][w2][g] = bt[w2].quotient.projection() * k * bt[w].quotient.section();
      }
  st.rep = std::move(out);
  return st;
}

std::vector<FiltrationFactor> filtration_of_representable(const ReedyCat& rc, int x) {
  auto hyp = projectivity_hypotheses(rc);
  if (!hyp.pass()) throw std::domain_error("HYPOTHESIS_FAILED: " + hyp.failures.front());
  const LinCat& l = *rc.cat();
  const Field F = l.field();
  const int n = static_cast<int>(l.size());
  Rep rep = representable(rc.cat(), x, Side::Left);
  std::vector<FiltrationFactor> out;
  for (int alpha : rc.distinct_degrees()) {
    FiltrationFactor ff;
    ff.level = alpha;
    std::vector<Subspace> hi, lo;
    for (int w = 0; w < n; ++w) {
      hi.push_back(rc.ideal(alpha + 1, x, w));
      lo.push_back(rc.ideal(alpha, x, w));
    }
    auto s = sub_rep(rep, hi);
    std::vector<Subspace> lo_in;
    for (int w = 0; w < n; ++w) {
      std::vector<Vec> vs;
      for (const Vec& b : lo[w].basis()) vs.push_back(hi[w].coords(b));
      lo_in.push_back(Subspace::span(hi[w].dim(), F, vs));
    }
    ff.layer = quotient_rep(s.rep, lo_in).rep;

    Rep factor = blank_rep(rc.cat(), Side::Left, std::vector<std::size_t>(n, 0));
    for (int z : rc.objects_of_degree(alpha)) factor = direct_sum(factor, standard_tensor(rc, z, rc.minus_module(x, z)));
    ff.factor = factor;
    out.push_back(std::move(ff));
  }
  return out;
}

IrreducibleCount count_irreducibles(const ReedyCat& rc, const std::vector<std::optional<std::vector<Vec>>>& idem) {
  const int n = static_cast<int>(rc.size());
  IrreducibleCount c;
  for (int x = 0; x < n; ++x) {
    const Algebra& a = rc.local(x);
    c.conjugacy_classes.push_back(conjugacy_classes(a));
    if (x < static_cast<int>(idem.size()) && idem[x]) {
      const auto& es = *idem[x];
      Vec sum = zeros(a.n, a.field);
      for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = 0; j < es.size(); ++j) {
          Vec p = a.product(es[i], es[j]);
          if (i == j ? p != es[i] : !is_zero(p))
            throw std::invalid_argument("count_irreducibles: idempotents not orthogonal at " + rc.cat()->object(x));
        }
        sum = add(sum, es[i]);
      }
      if (sum != a.one) throw std::invalid_argument("count_irreducibles: idempotents do not sum to 1");
      c.per_object.push_back(es.size());
    } else {
      auto rad = radical(a);
      if (!rad || rad->dim() > 0)
        throw NotSemisimpleUnsupported("NOT_SEMISIMPLE_UNSUPPORTED: local algebra at " + rc.cat()->object(x) +
                                       (rad ? " has nonzero radical" : " has no radical method"));
      c.per_object.push_back(*semisimple_center_dim(a));
    }
    c.total += c.per_object.back();
  }
  return c;
}

LatchingData latching_matching(const ReedyCat& rc, const Rep& y, int x) {
  if (y.side != Side::Left) throw std::invalid_argument("latching_matching: left module expected");
  const LinCat& l = *rc.cat();
  const Field F = l.field();
  LatchingData d;
  d.x = x;
  d.alpha = rc.degree(x);
  const std::vector<int> objs = rc.objects_below(d.alpha);
  const int n = static_cast<int>(objs.size());
  const std::size_t dx = y.dims[x];
  if (n == 0) {
    d.l = Mat(dx, 0, F);
    d.m = Mat(0, dx, F);
    d.tau = Mat(0, 0, F);
    return d;
  }
  d.below = make_subcategory(l, objs, homs_on(objs, [&](int a, int b) { return Subspace::full(l.dim(a, b), F); }));

  // Latching object and counit.
  Rep rx = representable(rc.cat(), x, Side::Right);
  d.latch = tensor_over(d.below, rx, y);
  const Mat& sect = d.latch.q.section();
  d.l = Mat(dx, d.latch.dim(), F);
  for (std::size_t c = 0; c < d.latch.dim(); ++c) {
    Vec out = zeros(dx, F);
    for (int i = 0; i < n; ++i) {
      const int o = objs[i];
      const std::size_t li = y.dims[o];
      for (std::size_t r = 0; r < l.dim(o, x); ++r)
        for (std::size_t b = 0; b < li; ++b) {
          const Scalar& s = sect(d.latch.offsets[i] + r * li + b, c);
          if (!s.is_zero()) axpy(out, s, y.act[o][x][r].col(b));
        }
    }
    d.l.set_col(c, out);
  }

  // Plus route and its comparison map.
  SubCat pb = make_subcategory(l, objs, homs_on(objs, [&](int a, int b) { return rc.plus(a, b); }));
  {
    std::vector<std::size_t> dims(n);
    for (int i = 0; i < n; ++i) dims[i] = rc.plus(objs[i], x).dim();
    Rep rp = blank_rep(pb.cat, Side::Right, dims);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (std::size_t b = 0; b < pb.cat->dim(i, j); ++b) {
          const Subspace &pi = rc.plus(objs[i], x), &pj = rc.plus(objs[j], x);
          Vec w = pb.embed[i][j].col(b);
          Mat m(pi.dim(), pj.dim(), F);
          for (std::size_t k = 0; k < pj.dim(); ++k)
            m.set_col(k, pi.coords(l.compose(objs[i], objs[j], x, pj.reduced().row(k), w)));
          rp.act[i][j][b] = m;
        }
    Rep yp = restrict_along(y, pb);
    TensorSpace tp = tensor_over(whole(pb.cat), rp, yp);
    d.latch_plus_dim = tp.dim();
    Mat big(d.latch.total, tp.total, F);
    for (int i = 0; i < n; ++i) {
      const int o = objs[i];
      if (!y.dims[o] || !dims[i]) continue;
      big.set_block(d.latch.offsets[i], tp.offsets[i],
                    kron(rc.plus(o, x).basis_matrix(), Mat::identity(y.dims[o], F)));
    }
    Mat kappa = d.latch.q.projection() * big * tp.q.section();
    d.latch_routes_iso = tp.dim() == d.latch.dim() && rank(kappa) == tp.dim();
  }

  // Matching object and unit.
  Rep lx = restrict_along(representable(rc.cat(), x, Side::Left), d.below);
  Rep yb = restrict_along(y, d.below);
  d.match_basis = hom_reps(lx, yb);
  const std::size_t md = d.match_basis.size();
  std::size_t flat = 0;
  for (int i = 0; i < n; ++i) flat += y.dims[objs[i]] * l.dim(x, objs[i]);
  std::vector<Vec> bcols;
  for (const auto& h : d.match_basis) bcols.push_back(flatten(h));
  Mat bm = Mat::from_cols(bcols, flat, F);
  auto in_match = [&](const RepMap& xi) {
    auto s = solve(bm, Mat::from_cols({flatten(xi)}, flat, F));
    if (!s) throw std::logic_error("latching_matching: element outside the matching object");
    return s->particular.col(0);
  };
  d.m = Mat(md, dx, F);
  for (std::size_t e = 0; e < dx; ++e) {
    Vec v = unit_vec(dx, e, F);
    RepMap xi;
    for (int i = 0; i < n; ++i) {
      const int o = objs[i];
      Mat m(y.dims[o], l.dim(x, o), F);
      for (std::size_t r = 0; r < l.dim(x, o); ++r) m.set_col(r, y.act[x][o][r] * v);
      xi.m.push_back(m);
    }
    d.m.set_col(e, in_match(xi));
  }

  // Minus route: restriction of matching data to minus(x, -) over the minus subcategory.
  SubCat mb = make_subcategory(l, objs, homs_on(objs, [&](int a, int b) { return rc.minus(a, b); }));
  {
    std::vector<std::size_t> dims(n);
    for (int i = 0; i < n; ++i) dims[i] = rc.minus(x, objs[i]).dim();
    Rep rm = blank_rep(mb.cat, Side::Left, dims);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (std::size_t b = 0; b < mb.cat->dim(i, j); ++b) {
          const Subspace &mi = rc.minus(x, objs[i]), &mj = rc.minus(x, objs[j]);
          Vec w = mb.embed[i][j].col(b);
          Mat m(mj.dim(), mi.dim(), F);
          for (std::size_t k = 0; k < mi.dim(); ++k)
            m.set_col(k, mj.coords(l.compose(x, objs[i], objs[j], w, mi.reduced().row(k))));
          rm.act[i][j][b] = m;
        }
    Rep ym = restrict_along(y, mb);
    auto mm = hom_reps(rm, ym);
    d.match_minus_dim = mm.size();
    std::size_t flat_m = 0;
    for (int i = 0; i < n; ++i) flat_m += y.dims[objs[i]] * dims[i];
    std::vector<Vec> mcols;
    for (const auto& h : mm) mcols.push_back(flatten(h));
    Mat mmat = Mat::from_cols(mcols, flat_m, F);
    std::vector<Vec> restricted;
    for (const auto& h : d.match_basis) {
      RepMap r;
      for (int i = 0; i < n; ++i) r.m.push_back(h.m[i] * rc.minus(x, objs[i]).basis_matrix());
      auto s = solve(mmat, Mat::from_cols({flatten(r)}, flat_m, F));
      if (!s) throw std::logic_error("latching_matching: restriction is not natural");
      restricted.push_back(s->particular.col(0));
    }
    Mat comp = Mat::from_cols(restricted, mm.size(), F);
    d.match_routes_iso = mm.size() == md && rank(comp) == md;
  }

  // tau from the restriction of Y only.
  d.tau = Mat(md, d.latch.dim(), F);
  for (std::size_t c = 0; c < d.latch.dim(); ++c) {
    RepMap xi;
    for (int j = 0; j < n; ++j) xi.m.push_back(Mat(y.dims[objs[j]], l.dim(x, objs[j]), F));
    for (int i = 0; i < n; ++i) {
      const int o = objs[i];
      const std::size_t li = y.dims[o];
      for (std::size_t r = 0; r < l.dim(o, x); ++r)
        for (std::size_t b = 0; b < li; ++b) {
          const Scalar& s = sect(d.latch.offsets[i] + r * li + b, c);
          if (s.is_zero()) continue;
          Vec h = l.basis_vec(o, x, static_cast<int>(r));
          for (int j = 0; j < n; ++j) {
            const int o2 = objs[j];
            for (std::size_t f = 0; f < l.dim(x, o2); ++f) {
              Vec fh = l.compose(o, x, o2, l.basis_vec(x, o2, static_cast<int>(f)), h);
              Vec col = y.action(o, o2, fh).col(b);
              for (std::size_t t = 0; t < col.size(); ++t) xi.m[j](t, f) += s * col[t];
            }
          }
        }
    }
    d.tau.set_col(c, in_match(xi));
  }
  d.tau_consistent = d.m * d.l == d.tau;
  return d;
}

AlgModule value_module(const ReedyCat& rc, const Rep& y, int x) {
  const Algebra& a = rc.local(x);
  AlgModule m;
  m.dim = y.dims[x];
  for (std::size_t k = 0; k < a.n; ++k) m.act.push_back(y.action(x, x, rc.plus(x, x).reduced().row(k)));
  return m;
}

AlgModule latching_cokernel(const ReedyCat& rc, const Rep& y, const LatchingData& d) {
  AlgModule v = value_module(rc, y, d.x);
  QuotientSpace q(v.dim, Subspace::column_span(d.l));
  AlgModule out;
  out.dim = q.dim();
  for (const Mat& a : v.act) out.act.push_back(q.projection() * a * q.section());
  return out;
}

AlgModule matching_kernel(const ReedyCat& rc, const Rep& y, const LatchingData& d) {
  AlgModule v = value_module(rc, y, d.x);
  Subspace k = Subspace::column_span(kernel(d.m));
  Mat b = k.dim() ? k.basis_matrix() : Mat(v.dim, 0, rc.field());
  AlgModule out;
  out.dim = k.dim();
  for (const Mat& a : v.act) out.act.push_back(coords_of(k, a * b));
  return out;
}

ClassFamily uniform_family(const std::string& name, std::size_t n, ModClassFn f) {
  return ClassFamily{name, std::vector<ModClassFn>(n, std::move(f))};
}

ModClassFn all_modules() {
  return [](const Algebra&, const AlgModule&) { return true; };
}
ModClassFn projective_modules() {
  return [](const Algebra& a, const AlgModule& m) { return is_projective(a, m); };
}
ModClassFn injective_modules() {
  return [](const Algebra& a, const AlgModule& m) { return is_injective(a, m); };
}
ModClassFn zero_modules() {
  return [](const Algebra&, const AlgModule& m) { return m.dim == 0; };
}

PhiPsiResult phi_psi_membership(const ReedyCat& rc, const Rep& y, const ClassFamily& s) {
  PhiPsiResult res;
  const LinCat& l = *rc.cat();
  for (int x : rc.order()) {
    LatchingData d = latching_matching(rc, y, x);
    const Algebra& a = rc.local(x);
    const bool mono = rank(d.l) == d.l.cols();
    const bool epi = rank(d.m) == d.m.rows();
    AlgModule ck = latching_cokernel(rc, y, d);
    AlgModule kr = matching_kernel(rc, y, d);
    if (!mono || !s.member[x](a, ck)) {
      res.in_phi = false;
      res.witnesses.push_back(std::string("phi fails at ") + l.object(x) + (mono ? ": cokernel class" : ": l not monic"));
    }
    if (!epi || !s.member[x](a, kr)) {
      res.in_psi = false;
      res.witnesses.push_back(std::string("psi fails at ") + l.object(x) + (epi ? ": kernel class" : ": m not epic"));
    }
    // Homological route over the truncation at degree <= d(x).
    SubReedy tr = truncate(rc, d.alpha + 1);
    int xi = -1;
    for (std::size_t i = 0; i < tr.objs.size(); ++i)
      if (tr.objs[i] == x) xi = static_cast<int>(i);
    Rep yb = restrict_rep(y, tr.rc->cat(), tr.objs);
    Rep dr = standard_module(*tr.rc, xi, Side::Right);
    Rep dl = standard_module(*tr.rc, xi, Side::Left);
    const bool tor0 = tor1(dr, yb) == 0;
    const bool ext0 = ext1(dl, yb).dim == 0;
    const bool tdim = tensor_dim(dr, yb) == ck.dim;
    const bool hdim = hom_dim(dl, yb) == kr.dim;
    if (tor0 != mono || ext0 != epi || !tdim || !hdim) {
      res.routes_agree = false;
      res.witnesses.push_back("routes disagree at " + l.object(x));
    }
  }
  return res;
}

StandardSuiteReport check_standard_modules(const ReedyCat& rc, Side side) {
  const LinCat& l = *rc.cat();
  const Field F = l.field();
  const int n = static_cast<int>(l.size());
  StandardSuiteReport r;
  r.side = side;
  auto hyp = projectivity_hypotheses(rc);
  r.hypothesis = side == Side::Left ? hyp.plus_projective : hyp.minus_projective;
  std::vector<Rep> delta;
  for (int x = 0; x < n; ++x) delta.push_back(standard_module(rc, x, side));
  r.hom.assign(n, std::vector<std::size_t>(n, 0));
  r.ext.assign(n, std::vector<std::size_t>(n, 0));
  for (int x = 0; x < n; ++x) {
    const std::size_t an = rc.local(x).n;
    auto ends = hom_reps(delta[x], delta[x]);
    if (ends.size() != an) {
      r.end_dims = false;
      r.witnesses.push_back("dim End at " + l.object(x) + " is " + std::to_string(ends.size()));
      continue;
    }
    QuotientSpace q(l.dim(x, x), rc.ideal(rc.degree(x), x, x));
    Vec one = q.project(l.identity(x));
    std::vector<Vec> ev;
    for (const auto& e : ends) ev.push_back(e.m[x] * one);
    if (rank(Mat::from_cols(ev, q.dim(), F)) != an) {
      r.ring_map = false;
      r.witnesses.push_back("evaluation not bijective at " + l.object(x));
    }
    auto lift = [&](const Vec& v) { return q.section() * v; };
    for (std::size_t i = 0; i < ends.size() && r.ring_map; ++i)
      for (std::size_t j = 0; j < ends.size(); ++j) {
        Vec lhs = compose(ends[i], ends[j]).m[x] * one;
        Vec rhs = side == Side::Left ? q.project(l.compose(x, x, x, lift(ev[j]), lift(ev[i])))
                                     : q.project(l.compose(x, x, x, lift(ev[i]), lift(ev[j])));
        if (lhs != rhs) {
          r.ring_map = false;
          r.witnesses.push_back("evaluation does not respect products at " + l.object(x));
          break;
        }
      }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      r.hom[x][y] = hom_dim(delta[x], delta[y]);
      r.ext[x][y] = ext1(delta[x], delta[y]).dim;
      const bool lower = rc.degree(x) > rc.degree(y);
      if (r.hom[x][y] && x != y && !lower) {
        r.hom_vanishing = false;
        r.witnesses.push_back("Hom(" + l.object(x) + ", " + l.object(y) + ") != 0");
      }
      if (r.ext[x][y] && !lower) {
        r.ext_vanishing = false;
        r.witnesses.push_back("Ext1(" + l.object(x) + ", " + l.object(y) + ") != 0");
      }
    }
  return r;
}

}  // namespace rlab
