#include "reedylab/bifib.hpp"

#include <algorithm>
#include <sstream>

#include "reedylab/parallel.hpp"

namespace rlab {

namespace {

Vec flatten(const std::vector<Mat>& ms) {
  Vec v;
  for (const Mat& m : ms)
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t r = 0; r < m.rows(); ++r) v.push_back(m(r, c));
  return v;
}

// Coordinates of the columns of x in the independent columns of `basis`.
Mat coords_in(const Mat& basis, const Mat& x) {
  const Field F = x.field();
  if (basis.cols() == 0) {
    if (!x.is_zero()) throw std::logic_error("coords_in: vector outside the span");
    return Mat(0, x.cols(), F);
  }
  if (x.cols() == 0) return Mat(basis.cols(), 0, F);
  auto s = solve(basis, x);
  if (!s) throw std::logic_error("coords_in: vector outside the span");
  return s->particular;
}

AlgModule sum_module(const AlgModule& a, const AlgModule& b) {
  AlgModule s;
  s.dim = a.dim + b.dim;
  for (std::size_t i = 0; i < a.act.size(); ++i) s.act.push_back(direct_sum(a.act[i], b.act[i]));
  return s;
}

AlgModule zero_module(const Algebra& a) {
  AlgModule z;
  z.act.assign(a.n, Mat(0, 0, a.field));
  return z;
}

std::vector<int> positions(std::size_t n, const std::vector<int>& objs) {
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < objs.size(); ++i) pos[objs[i]] = static_cast<int>(i);
  return pos;
}

// V over the base, zero at the top objects. Only the restriction to the base is meaningful.
Rep pad(const Level& lv, const Rep& v) {
  const LinCat& l = *lv.rc->cat();
  const Field F = l.field();
  const int n = static_cast<int>(l.size());
  auto pos = positions(l.size(), lv.base.objs);
  Rep p = zero_rep(lv.rc->cat());
  for (int x = 0; x < n; ++x) p.dims[x] = pos[x] >= 0 ? v.dims[pos[x]] : 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (std::size_t r = 0; r < l.dim(a, b); ++r)
        p.act[a][b][r] = pos[a] >= 0 && pos[b] >= 0 ? v.act[pos[a]][pos[b]][r] : Mat(p.dims[b], p.dims[a], F);
  return p;
}

Mat act_vec(const Rep& y, int a, int b, const Vec& v) {
  Mat out(y.dims[b], y.dims[a], y.field());
  for (std::size_t r = 0; r < v.size(); ++r)
    if (!v[r].is_zero()) out = out + y.act[a][b][r].scaled(v[r]);
  return out;
}

RepMap combine(const std::vector<RepMap>& basis, const Vec& c, RepMap start) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!c[i].is_zero()) start = add(start, scale(c[i], basis[i]));
  return start;
}

RepMap random_point(const MapSolution& s, std::mt19937_64& rng, Field F) {
  RepMap h = *s.particular;
  for (const auto& k : s.kernel) h = add(h, scale(random_scalar(rng, F), k));
  return h;
}

std::vector<std::pair<int, Mat>> fixed_on_base(const Level& lv, const RepMap& u) {
  std::vector<std::pair<int, Mat>> f;
  for (std::size_t i = 0; i < lv.base.objs.size(); ++i) f.emplace_back(lv.base.objs[i], u.m[i]);
  return f;
}

RepMap identity_on(const Rep& v) { return identity_map(v); }

Rep rebind(Rep r, const LinCatPtr& cat) {
  r.cat = cat;
  return r;
}

}  // namespace

Level make_level(ReedyPtr rc) {
  Level lv;
  lv.rc = std::move(rc);
  const auto degs = lv.rc->distinct_degrees();
  lv.alpha = degs.empty() ? 0 : degs.back();
  lv.top = lv.rc->objects_of_degree(lv.alpha);
  lv.base = truncate(*lv.rc, lv.alpha);
  return lv;
}

Induced induced(const Level& lv, const Rep& v, int x) {
  const ReedyCat& rc = *lv.rc;
  const LinCat& l = *rc.cat();
  const Field F = l.field();
  const Algebra& a = rc.local(x);
  const auto& objs = lv.base.objs;
  Induced r;
  r.x = x;
  if (objs.empty()) {
    r.ind = r.coind = zero_module(a);
    r.tau = r.match = Mat(0, 0, F);
    r.d.l = Mat(0, 0, F);
    r.d.m = Mat(0, 0, F);
    return r;
  }
  r.d = latching_matching(rc, pad(lv, v), x);
  r.tau = r.d.tau;
  std::size_t flat = 0;
  for (std::size_t i = 0; i < objs.size(); ++i) flat += v.dims[i] * l.dim(x, objs[i]);
  std::vector<Vec> cols;
  for (const auto& h : r.d.match_basis) cols.push_back(flatten(h.m));
  r.match = Mat::from_cols(cols, flat, F);

  const TensorSpace& t = r.d.latch;
  r.ind.dim = t.dim();
  r.coind.dim = r.d.match_basis.size();
  for (std::size_t k = 0; k < a.n; ++k) {
    const Vec e = rc.plus(x, x).reduced().row(k);
    Mat big(t.total, t.total, F);
    for (std::size_t i = 0; i < objs.size(); ++i) {
      const int o = objs[i];
      if (!v.dims[i] || !l.dim(o, x)) continue;
      big.set_block(t.offsets[i], t.offsets[i], kron(l.left_mult(o, x, x, e), Mat::identity(v.dims[i], F)));
    }
    r.ind.act.push_back(t.q.projection() * big * t.q.section());
    std::vector<Vec> moved;
    for (const auto& h : r.d.match_basis) {
      std::vector<Mat> ms;
      for (std::size_t i = 0; i < objs.size(); ++i) ms.push_back(h.m[i] * l.right_mult(x, x, objs[i], e));
      moved.push_back(flatten(ms));
    }
    r.coind.act.push_back(coords_in(r.match, Mat::from_cols(moved, flat, F)));
  }
  return r;
}

Mat ind_map(const Level& lv, const Induced& iv, const Induced& iw, const RepMap& u) {
  const LinCat& l = *lv.rc->cat();
  const Field F = l.field();
  const auto& objs = lv.base.objs;
  if (objs.empty()) return Mat(0, 0, F);
  const TensorSpace &tv = iv.d.latch, &tw = iw.d.latch;
  Mat big(tw.total, tv.total, F);
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const std::size_t h = l.dim(objs[i], iv.x);
    if (!h || !u.m[i].rows() || !u.m[i].cols()) continue;
    big.set_block(tw.offsets[i], tv.offsets[i], kron(Mat::identity(h, F), u.m[i]));
  }
  return tw.q.projection() * big * tv.q.section();
}

Mat coind_map(const Level& lv, const Induced& iv, const Induced& iw, const RepMap& u) {
  const Field F = lv.rc->field();
  if (lv.base.objs.empty()) return Mat(0, 0, F);
  std::vector<Vec> cols;
  for (const auto& h : iv.d.match_basis) {
    std::vector<Mat> ms;
    for (std::size_t i = 0; i < h.m.size(); ++i) ms.push_back(u.m[i] * h.m[i]);
    cols.push_back(flatten(ms));
  }
  return coords_in(iw.match, Mat::from_cols(cols, iw.match.rows(), F));
}

bool FiberPoint::operator==(const FiberPoint& o) const {
  if (!(base == o.base) || l != o.l || m != o.m || value.size() != o.value.size()) return false;
  for (std::size_t i = 0; i < value.size(); ++i)
    if (value[i].dim != o.value[i].dim || value[i].act != o.value[i].act) return false;
  return true;
}

FiberPoint fiber_encode(const Level& lv, const Rep& y) {
  const ReedyCat& rc = *lv.rc;
  FiberPoint p;
  p.base = restrict_rep(y, lv.base.rc->cat(), lv.base.objs);
  for (int x : lv.top) {
    p.value.push_back(value_module(rc, y, x));
    if (lv.base.objs.empty()) {
      p.l.emplace_back(y.dims[x], 0, rc.field());
      p.m.emplace_back(0, y.dims[x], rc.field());
      continue;
    }
    LatchingData d = latching_matching(rc, y, x);
    p.l.push_back(d.l);
    p.m.push_back(d.m);
  }
  return p;
}

Rep fiber_decode(const Level& lv, const FiberPoint& p) {
  const ReedyCat& rc = *lv.rc;
  const LinCat& l = *rc.cat();
  const Field F = l.field();
  const int n = static_cast<int>(l.size());
  auto pos = positions(l.size(), lv.base.objs);
  auto tpos = positions(l.size(), lv.top);
  std::vector<Induced> ind;
  for (std::size_t t = 0; t < lv.top.size(); ++t) {
    const int x = lv.top[t];
    ind.push_back(induced(lv, p.base, x));
    const Induced& iv = ind.back();
    const std::size_t dx = p.value[t].dim;
    if (p.l[t].rows() != dx || p.l[t].cols() != iv.ind.dim || p.m[t].rows() != iv.coind.dim || p.m[t].cols() != dx)
      throw FactorizationMismatch("factorization at " + l.object(x) + " has the wrong shape");
    if (p.m[t] * p.l[t] != iv.tau) throw FactorizationMismatch("m l differs from tau at " + l.object(x));
  }

  Rep y = zero_rep(rc.cat());
  for (int x = 0; x < n; ++x) y.dims[x] = pos[x] >= 0 ? p.base.dims[pos[x]] : p.value[tpos[x]].dim;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (pos[a] < 0 && pos[b] < 0) continue;
      for (std::size_t r = 0; r < l.dim(a, b); ++r) {
        Mat& out = y.act[a][b][r];
        if (pos[a] >= 0 && pos[b] >= 0) {
          out = p.base.act[pos[a]][pos[b]][r];
        } else if (pos[a] >= 0) {
          // [f (x) v] pushed through l
          const int t = tpos[b];
          const TensorSpace& ts = ind[t].d.latch;
          const std::size_t li = p.base.dims[pos[a]];
          out = li ? p.l[t] * ts.q.projection().block(0, ts.offsets[pos[a]] + r * li, ts.dim(), li)
                   : Mat(y.dims[b], 0, F);
        } else {
          // evaluation of the matching element at f
          const int t = tpos[a];
          const auto& mb = ind[t].d.match_basis;
          Mat h(y.dims[b], mb.size(), F);
          for (std::size_t c = 0; c < mb.size(); ++c) h.set_col(c, mb[c].m[pos[b]].col(r));
          out = h * p.m[t];
        }
      }
    }
  for (int a : lv.top)
    for (int b : lv.top)
      for (std::size_t r = 0; r < l.dim(a, b); ++r) {
        Mat out(y.dims[b], y.dims[a], F);
        for (const auto& term : reedy_factorize(rc, a, b, l.basis_vec(a, b, static_cast<int>(r)))) {
          for (const auto& pr : term.pure) {
            Mat piece;
            if (pos[term.z] >= 0) {
              piece = act_vec(y, term.z, b, pr.plus) * act_vec(y, a, term.z, pr.minus);
            } else {
              if (term.z != a || term.z != b) throw std::logic_error("fiber_decode: plus map between top objects");
              const AlgModule& mv = p.value[tpos[a]];
              const Subspace& loc = rc.plus(a, a);
              piece = mv.action(loc.coords(pr.plus)) * mv.action(loc.coords(pr.minus));
            }
            out = out + piece.scaled(pr.coeff);
          }
        }
        y.act[a][b][r] = out;
      }
  if (auto bad = check_functorial(y)) throw FactorizationMismatch("decoded module is not functorial: " + *bad);
  return y;
}

FiberPoint standard_point(const Level& lv, const Rep& v, PointKind kind) {
  const Field F = lv.rc->field();
  FiberPoint p;
  p.base = v;
  for (int x : lv.top) {
    Induced iv = induced(lv, v, x);
    const std::size_t a = iv.ind.dim, c = iv.coind.dim;
    switch (kind) {
      case PointKind::Initial:
        p.value.push_back(iv.ind);
        p.l.push_back(Mat::identity(a, F));
        p.m.push_back(iv.tau);
        break;
      case PointKind::Terminal:
        p.value.push_back(iv.coind);
        p.l.push_back(iv.tau);
        p.m.push_back(Mat::identity(c, F));
        break;
      case PointKind::Mixed:
        p.value.push_back(sum_module(iv.ind, iv.coind));
        p.l.push_back(vstack({Mat::identity(a, F), iv.tau}, a, F));
        p.m.push_back(hstack({Mat(c, a, F), Mat::identity(c, F)}, c, F));
        break;
    }
  }
  return p;
}

Lift pushforward(const Level& lv, const RepMap& u, const Rep& v, const Rep& w, const Rep& y) {
  const ReedyCat& rc = *lv.rc;
  const Field F = rc.field();
  FiberPoint py = fiber_encode(lv, y);
  if (!(py.base == v)) throw std::invalid_argument("pushforward: Y is not in the fiber of V");
  FiberPoint out;
  out.base = w;
  std::vector<Mat> lam;
  for (std::size_t t = 0; t < lv.top.size(); ++t) {
    const int x = lv.top[t];
    Induced iv = induced(lv, v, x), iw = induced(lv, w, x);
    Mat iu = ind_map(lv, iv, iw, u), cu = coind_map(lv, iv, iw, u);
    const AlgModule& my = py.value[t];
    const std::size_t a = iw.ind.dim, d = my.dim;
    // (Ind W + M) / {(Ind u(s), -l(s))}
    Mat rel = vstack({iu, py.l[t].scaled(Scalar(F, -1L))}, iv.ind.dim, F);
    QuotientSpace q(a + d, Subspace::column_span(rel));
    AlgModule pm;
    pm.dim = q.dim();
    for (std::size_t k = 0; k < my.act.size(); ++k)
      pm.act.push_back(q.projection() * direct_sum(iw.ind.act[k], my.act[k]) * q.section());
    out.value.push_back(pm);
    out.l.push_back(q.projection() * vstack({Mat::identity(a, F), Mat(d, a, F)}, a, F));
    out.m.push_back(hstack({iw.tau, cu * py.m[t]}, iw.coind.dim, F) * q.section());
    lam.push_back(q.projection() * vstack({Mat(a, d, F), Mat::identity(d, F)}, d, F));
  }
  Lift res;
  res.rep = fiber_decode(lv, out);
  auto pos = positions(rc.size(), lv.base.objs);
  auto tpos = positions(rc.size(), lv.top);
  for (int o = 0; o < static_cast<int>(rc.size()); ++o) res.map.m.push_back(pos[o] >= 0 ? u.m[pos[o]] : lam[tpos[o]]);
  return res;
}

Lift pullback_star(const Level& lv, const RepMap& u, const Rep& v, const Rep& w, const Rep& z) {
  const ReedyCat& rc = *lv.rc;
  const Field F = rc.field();
  FiberPoint pz = fiber_encode(lv, z);
  if (!(pz.base == w)) throw std::invalid_argument("pullback_star: Z is not in the fiber of W");
  FiberPoint out;
  out.base = v;
  std::vector<Mat> rho;
  for (std::size_t t = 0; t < lv.top.size(); ++t) {
    const int x = lv.top[t];
    Induced iv = induced(lv, v, x), iw = induced(lv, w, x);
    Mat iu = ind_map(lv, iv, iw, u), cu = coind_map(lv, iv, iw, u);
    const AlgModule& mz = pz.value[t];
    const std::size_t d = mz.dim, c = iv.coind.dim;
    // {(m, c) : m_Z(m) = coInd u (c)}
    Mat k = kernel(hstack({pz.m[t], cu.scaled(Scalar(F, -1L))}, iw.coind.dim, F));
    AlgModule qm;
    qm.dim = k.cols();
    for (std::size_t a = 0; a < mz.act.size(); ++a)
      qm.act.push_back(coords_in(k, direct_sum(mz.act[a], iv.coind.act[a]) * k));
    out.value.push_back(qm);
    out.l.push_back(coords_in(k, vstack({pz.l[t] * iu, iv.tau}, iv.ind.dim, F)));
    out.m.push_back(hstack({Mat(c, d, F), Mat::identity(c, F)}, c, F) * k);
    rho.push_back(hstack({Mat::identity(d, F), Mat(d, c, F)}, d, F) * k);
  }
  Lift res;
  res.rep = fiber_decode(lv, out);
  auto pos = positions(rc.size(), lv.base.objs);
  auto tpos = positions(rc.size(), lv.top);
  for (int o = 0; o < static_cast<int>(rc.size()); ++o) res.map.m.push_back(pos[o] >= 0 ? u.m[pos[o]] : rho[tpos[o]]);
  return res;
}

MapSolution solve_maps(const Rep& a, const Rep& b, const std::vector<std::pair<int, Mat>>& fixed,
                       const std::vector<MapConstraint>& eqs) {
  const Field F = a.field();
  auto hs = hom_reps(a, b);
  auto lhs = [&](const RepMap& h) {
    Vec v;
    for (const auto& [o, m] : fixed) {
      Vec f = flatten({h.m[o]});
      v.insert(v.end(), f.begin(), f.end());
    }
    for (const auto& e : eqs) {
      RepMap r = e.pre ? compose(h, *e.pre) : h;
      if (e.post) r = compose(*e.post, r);
      Vec f = flatten(r.m);
      v.insert(v.end(), f.begin(), f.end());
    }
    return v;
  };
  Vec rhs;
  for (const auto& [o, m] : fixed) {
    Vec f = flatten({m});
    rhs.insert(rhs.end(), f.begin(), f.end());
  }
  for (const auto& e : eqs) {
    Vec f = flatten(e.target.m);
    rhs.insert(rhs.end(), f.begin(), f.end());
  }
  MapSolution s;
  RepMap zero = zero_map(a, b);
  if (hs.empty()) {
    if (is_zero(rhs)) s.particular = zero;
    return s;
  }
  if (rhs.empty()) {
    s.particular = zero;
    s.kernel = hs;
    return s;
  }
  std::vector<Vec> cols;
  for (const auto& h : hs) cols.push_back(lhs(h));
  Mat sys = Mat::from_cols(cols, rhs.size(), F);
  auto sol = solve(sys, Mat::from_cols({rhs}, rhs.size(), F));
  if (!sol) return s;
  s.particular = combine(hs, sol->particular.col(0), zero);
  for (std::size_t k = 0; k < sol->kernel.cols(); ++k) s.kernel.push_back(combine(hs, sol->kernel.col(k), zero));
  return s;
}

MapSolution fiber_homs(const Level& lv, const Rep& a, const Rep& b) {
  RepMap id;
  for (std::size_t i = 0; i < lv.base.objs.size(); ++i) {
    const int o = lv.base.objs[i];
    if (a.dims[o] != b.dims[o]) return {};
    id.m.push_back(Mat::identity(a.dims[o], a.field()));
  }
  return solve_maps(a, b, fixed_on_base(lv, id));
}

namespace {

std::vector<Rep> test_objects(const Level& lv, const Rep& base, const Rep& extra) {
  std::vector<Rep> out;
  for (PointKind k : {PointKind::Initial, PointKind::Terminal, PointKind::Mixed})
    out.push_back(fiber_decode(lv, standard_point(lv, base, k)));
  out.push_back(extra);
  return out;
}

RepMap base_identity(const Level& lv, const Rep& y) {
  RepMap id;
  for (int o : lv.base.objs) id.m.push_back(Mat::identity(y.dims[o], y.field()));
  return id;
}

}  // namespace

UniversalityReport check_cocartesian(const Level& lv, const RepMap& u, const Rep& /*v*/, const Rep& w, const Rep& y,
                                     const Lift& lift, std::mt19937_64& rng, std::size_t cones) {
  UniversalityReport rep;
  auto zs = test_objects(lv, w, lift.rep);
  for (std::size_t attempt = 0; rep.cones < cones && attempt < 4 * cones; ++attempt) {
    const Rep& z = zs[attempt % zs.size()];
    auto over = solve_maps(y, z, fixed_on_base(lv, u));
    if (!over.particular) {
      ++rep.skipped;
      continue;
    }
    RepMap g = random_point(over, rng, y.field());
    ++rep.cones;
    auto h = solve_maps(lift.rep, z, fixed_on_base(lv, base_identity(lv, z)), {{lift.map, std::nullopt, g}});
    if (h.particular) ++rep.mediated;
    if (h.particular && h.kernel.empty()) ++rep.unique;
  }
  return rep;
}

UniversalityReport check_cartesian(const Level& lv, const RepMap& u, const Rep& v, const Rep& /*w*/, const Rep& z,
                                   const Lift& lift, std::mt19937_64& rng, std::size_t cones) {
  UniversalityReport rep;
  auto ys = test_objects(lv, v, lift.rep);
  for (std::size_t attempt = 0; rep.cones < cones && attempt < 4 * cones; ++attempt) {
    const Rep& y = ys[attempt % ys.size()];
    auto over = solve_maps(y, z, fixed_on_base(lv, u));
    if (!over.particular) {
      ++rep.skipped;
      continue;
    }
    RepMap g = random_point(over, rng, y.field());
    ++rep.cones;
    auto h = solve_maps(y, lift.rep, fixed_on_base(lv, base_identity(lv, y)), {{std::nullopt, lift.map, g}});
    if (h.particular) ++rep.mediated;
    if (h.particular && h.kernel.empty()) ++rep.unique;
  }
  return rep;
}

AdjunctionReport check_adjunction(const Level& lv, const RepMap& u, const Rep& v, const Rep& w, const Rep& y,
                                  const Rep& z, std::mt19937_64& rng, std::size_t samples) {
  AdjunctionReport rep;
  Lift co = pushforward(lv, u, v, w, y);
  Lift ca = pullback_star(lv, u, v, w, z);
  auto left = fiber_homs(lv, co.rep, z);
  auto right = fiber_homs(lv, y, ca.rep);
  rep.nonempty_left = left.particular.has_value();
  rep.nonempty_right = right.particular.has_value();
  rep.dim_left = left.kernel.size();
  rep.dim_right = right.kernel.size();
  if (!left.particular) return rep;
  const Field F = y.field();
  for (std::size_t s = 0; s < samples; ++s) {
    ++rep.samples;
    RepMap h = random_point(left, rng, F);
    // h |-> k with ca.map k = h co.map, then back.
    auto k = solve_maps(y, ca.rep, fixed_on_base(lv, base_identity(lv, y)),
                        {{std::nullopt, ca.map, compose(h, co.map)}});
    if (!k.particular || !k.kernel.empty()) continue;
    auto back = solve_maps(co.rep, z, fixed_on_base(lv, base_identity(lv, z)),
                           {{co.map, std::nullopt, compose(ca.map, *k.particular)}});
    if (back.particular && back.kernel.empty() && *back.particular == h) ++rep.round_trips;
  }
  return rep;
}

FiberFactorization fiber_factor(const Level& lv, const Rep& y, const Rep& z, const RepMap& f) {
  FiberFactorization out;
  Rep v = restrict_rep(y, lv.base.rc->cat(), lv.base.objs);
  Rep w = restrict_rep(z, lv.base.rc->cat(), lv.base.objs);
  RepMap u = restrict_map(f, lv.base.objs);
  out.co = pushforward(lv, u, v, w, y);
  out.ca = pullback_star(lv, u, v, w, z);
  auto r = solve_maps(out.co.rep, z, fixed_on_base(lv, base_identity(lv, z)), {{out.co.map, std::nullopt, f}});
  auto l = solve_maps(y, out.ca.rep, fixed_on_base(lv, base_identity(lv, y)), {{std::nullopt, out.ca.map, f}});
  if (!r.particular || !l.particular) throw std::logic_error("fiber_factor: no mediating map");
  out.right = *r.particular;
  out.left = *l.particular;
  out.right_freedom = r.kernel.size();
  out.left_freedom = l.kernel.size();
  return out;
}

ModFactorization proj_all_factor(const Algebra& a, const AlgModule& p, const AlgModule& q, const Mat& g) {
  const Field F = a.field;
  const std::size_t n = a.n, dq = q.dim;
  AlgModule free;
  free.dim = n * dq;
  for (std::size_t k = 0; k < n; ++k) {
    Mat m(free.dim, free.dim, F);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& ki = a.mult[k][i];
      for (std::size_t t = 0; t < n; ++t)
        if (!ki[t].is_zero()) m.set_block(t * dq, i * dq, Mat::identity(dq, F).scaled(ki[t]));
    }
    free.act.push_back(m);
  }
  ModFactorization out;
  out.mid = sum_module(p, free);
  out.left = vstack({Mat::identity(p.dim, F), Mat(free.dim, p.dim, F)}, p.dim, F);
  std::vector<Mat> blocks{g};
  for (std::size_t i = 0; i < n; ++i) blocks.push_back(q.act[i]);
  out.right = hstack(blocks, dq, F);
  return out;
}

ModFactorization all_inj_factor(const Algebra& a, const AlgModule& p, const AlgModule& q, const Mat& g) {
  const Field F = a.field;
  const std::size_t n = a.n, dp = p.dim;
  AlgModule co;
  co.dim = n * dp;
  for (std::size_t k = 0; k < n; ++k) {
    // (e_k phi)(e_i) = phi(e_i e_k)
    Mat m(co.dim, co.dim, F);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& ik = a.mult[i][k];
      for (std::size_t t = 0; t < n; ++t)
        if (!ik[t].is_zero()) m.set_block(i * dp, t * dp, Mat::identity(dp, F).scaled(ik[t]));
    }
    co.act.push_back(m);
  }
  std::vector<Mat> iota;
  for (std::size_t i = 0; i < n; ++i) iota.push_back(p.act[i]);
  ModFactorization out;
  out.mid = sum_module(q, co);
  out.left = vstack({g, vstack(iota, dp, F)}, dp, F);
  out.right = hstack({Mat::identity(q.dim, F), Mat(q.dim, co.dim, F)}, q.dim, F);
  return out;
}

ModFactorization all_all_factor(const Algebra& a, const AlgModule& p, const AlgModule& q, const Mat& g) {
  const Field F = a.field;
  ModFactorization out;
  out.mid = sum_module(p, q);
  out.left = vstack({Mat::identity(p.dim, F), g}, p.dim, F);
  out.right = hstack({Mat(q.dim, p.dim, F), Mat::identity(q.dim, F)}, q.dim, F);
  return out;
}

std::string to_string(PairTag t) {
  switch (t) {
    case PairTag::ProjAll: return "PROJ_ALL";
    case PairTag::AllInj: return "ALL_INJ";
    case PairTag::AllAll: return "ALL_ALL";
    case PairTag::User: return "USER";
  }
  return "?";
}

ClassPair proj_all_pair(std::size_t n) {
  return {"PROJ_ALL", PairTag::ProjAll, uniform_family("proj", n, projective_modules()),
          uniform_family("all", n, all_modules()), std::vector<FactorOracle>(n, proj_all_factor)};
}

ClassPair all_inj_pair(std::size_t n) {
  return {"ALL_INJ", PairTag::AllInj, uniform_family("all", n, all_modules()),
          uniform_family("inj", n, injective_modules()), std::vector<FactorOracle>(n, all_inj_factor)};
}

ClassPair all_all_pair(std::size_t n) {
  return {"ALL_ALL", PairTag::AllAll, uniform_family("all", n, all_modules()),
          uniform_family("all", n, all_modules()), std::vector<FactorOracle>(n, all_all_factor)};
}

WfsFactorization glue_factorization(const ReedyCat& rc, const Rep& m, const Rep& n, const RepMap& f,
                                    const ClassPair& pair) {
  if (auto h = projectivity_hypotheses(rc); !h.pass()) {
    std::string why = "HYPOTHESIS_FAILED";
    if (!h.failures.empty()) why += ": " + h.failures.front();
    throw std::domain_error(why);
  }
  for (std::size_t x = 0; x < rc.size(); ++x)
    if (x >= pair.factor.size() || !pair.factor[x])
      throw OracleMissing("ORACLE_MISSING at " + rc.cat()->object(static_cast<int>(x)));

  Rep e;
  RepMap i, p;
  for (int alpha : rc.distinct_degrees()) {
    SubReedy tr = truncate(rc, alpha + 1);
    Level lv = make_level(tr.rc);
    const LinCatPtr& bc = lv.base.rc->cat();
    Rep eb = lv.base.objs.empty() ? zero_rep(bc) : rebind(e, bc);
    Rep mt = restrict_rep(m, tr.rc->cat(), tr.objs), nt = restrict_rep(n, tr.rc->cat(), tr.objs);
    Rep mb = restrict_rep(mt, bc, lv.base.objs), nb = restrict_rep(nt, bc, lv.base.objs);
    RepMap ft = restrict_map(f, tr.objs);

    Lift co = pushforward(lv, i, mb, eb, mt);
    Lift ca = pullback_star(lv, p, eb, nb, nt);
    RepMap id = base_identity(lv, co.rep);
    auto g = solve_maps(co.rep, ca.rep, fixed_on_base(lv, id), {{co.map, ca.map, ft}});
    if (!g.particular) throw std::logic_error("glue_factorization: no fiber map between the lifts");
    FiberPoint pc = fiber_encode(lv, co.rep), qc = fiber_encode(lv, ca.rep);
    FiberPoint mid;
    mid.base = eb;
    std::vector<Mat> lefts, rights;
    for (std::size_t t = 0; t < lv.top.size(); ++t) {
      const int x = lv.top[t];
      const Mat& gx = g.particular->m[x];
      ModFactorization fr = pair.factor[tr.objs[x]](tr.rc->local(x), pc.value[t], qc.value[t], gx);
      if (fr.right * fr.left != gx) throw std::logic_error("glue_factorization: oracle output does not compose");
      mid.value.push_back(fr.mid);
      mid.l.push_back(fr.left * pc.l[t]);
      mid.m.push_back(qc.m[t] * fr.right);
      lefts.push_back(fr.left * co.map.m[x]);
      rights.push_back(ca.map.m[x] * fr.right);
    }
    e = fiber_decode(lv, mid);
    auto pos = positions(tr.objs.size(), lv.base.objs);
    auto tpos = positions(tr.objs.size(), lv.top);
    RepMap ni, np;
    for (int o = 0; o < static_cast<int>(tr.objs.size()); ++o) {
      ni.m.push_back(pos[o] >= 0 ? i.m[pos[o]] : lefts[tpos[o]]);
      np.m.push_back(pos[o] >= 0 ? p.m[pos[o]] : rights[tpos[o]]);
    }
    i = std::move(ni);
    p = std::move(np);
  }

  WfsFactorization out;
  out.mid = rebind(e, rc.cat());
  out.left = i;
  out.right = p;
  out.composite = compose(p, i) == f;
  out.left_mono = is_mono(i);
  out.right_epi = is_epi(n, p);
  out.coker_left = phi_psi_membership(rc, cokernel_rep(out.mid, i).rep, pair.left);
  out.ker_right = phi_psi_membership(rc, kernel_rep(out.mid, p).rep, pair.right);
  return out;
}

Approximations approximations(const ReedyCat& rc, const Rep& m, const ClassPair& pair) {
  Approximations a;
  Rep zero = zero_rep(rc.cat());
  a.precover = glue_factorization(rc, zero, m, zero_map(zero, m), pair);
  a.preenvelope = glue_factorization(rc, m, zero, zero_map(m, zero), pair);
  a.kernel = kernel_rep(a.precover.mid, a.precover.right).rep;
  a.cokernel = cokernel_rep(a.preenvelope.mid, a.preenvelope.left).rep;
  return a;
}

std::vector<Rep> battery(const ReedyCat& rc, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rep> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_rep(rc.cat(), rng, 3));
  return out;
}

AlgModule random_alg_module(const Algebra& a, std::mt19937_64& rng, std::size_t max_dim) {
  const Field F = a.field;
  const std::size_t r = 1 + rng() % 2;
  AlgModule fr = free_alg_module(a, r);
  std::vector<Vec> gens;
  auto add_relation = [&](const Vec& v) {
    for (const Mat& m : fr.act) gens.push_back(m * v);
  };
  for (std::size_t k = rng() % 3; k > 0; --k) add_relation(random_vec(rng, fr.dim, F));
  for (;;) {
    Subspace s = Subspace::span(fr.dim, F, gens);
    // Close under the action.
    for (bool grown = true; grown;) {
      grown = false;
      for (const Vec& b : s.basis())
        for (const Mat& m : fr.act)
          if (!s.contains(m * b)) {
            s = s + Subspace::span(fr.dim, F, {m * b});
            grown = true;
          }
    }
    QuotientSpace q(fr.dim, s);
    if (q.dim() <= max_dim) {
      AlgModule out;
      out.dim = q.dim();
      for (const Mat& m : fr.act) out.act.push_back(q.projection() * m * q.section());
      return out;
    }
    Vec v;
    do v = random_vec(rng, fr.dim, F);
    while (s.contains(v));
    add_relation(v);
  }
}

bool values_in(const ReedyCat& rc, const Rep& y, const ClassFamily& s) {
  for (int x = 0; x < static_cast<int>(rc.size()); ++x)
    if (!s.member[x](rc.local(x), value_module(rc, y, x))) return false;
  return true;
}

namespace {

struct Sequence {
  Rep a, b, c;  // 0 -> a -> b -> c -> 0
};

bool lifts(const Rep& a, const Rep& b, const RepMap& i, const Rep& x, const Rep& y, const RepMap& p,
           std::mt19937_64& rng, bool& tried) {
  const Field F = a.field();
  tried = false;
  auto hs = hom_reps(a, x);
  RepMap top = zero_map(a, x);
  for (const auto& h : hs) top = add(top, scale(random_scalar(rng, F), h));
  auto bottoms = solve_maps(b, y, {}, {{i, std::nullopt, compose(p, top)}});
  if (!bottoms.particular) return true;
  tried = true;
  RepMap bottom = random_point(bottoms, rng, F);
  auto h = solve_maps(b, x, {}, {{i, std::nullopt, top}, {std::nullopt, p, bottom}});
  return h.particular.has_value();
}

}  // namespace

CotorsionReport cotorsion_glue_check(const ReedyCat& rc, const ClassPair& pair, std::size_t battery_size,
                                     std::uint64_t seed) {
  CotorsionReport rep;
  rep.pair = pair.name;
  auto bat = battery(rc, battery_size, seed);
  rep.battery = bat.size();
  std::vector<Approximations> ap(bat.size());
  parallel_for(bat.size(), [&](std::size_t k) { ap[k] = approximations(rc, bat[k], pair); });
  std::vector<Rep> phi, psi;
  for (std::size_t k = 0; k < bat.size(); ++k) {
    for (const auto* w : {&ap[k].precover, &ap[k].preenvelope}) {
      ++rep.factorizations;
      if (w->valid()) {
        ++rep.valid;
      } else {
        std::ostringstream os;
        os << "battery " << k << ": invalid factorization";
        for (const auto& s : w->coker_left.witnesses) os << "; " << s;
        for (const auto& s : w->ker_right.witnesses) os << "; " << s;
        rep.witnesses.push_back(os.str());
      }
    }
    phi.push_back(ap[k].precover.mid);
    phi.push_back(ap[k].cokernel);
    psi.push_back(ap[k].kernel);
    psi.push_back(ap[k].preenvelope.mid);
  }
  std::vector<PhiPsiResult> mem(bat.size());
  parallel_for(bat.size(), [&](std::size_t k) { mem[k] = phi_psi_membership(rc, bat[k], pair.left); });
  std::vector<PhiPsiResult> memr(bat.size());
  parallel_for(bat.size(), [&](std::size_t k) { memr[k] = phi_psi_membership(rc, bat[k], pair.right); });
  for (std::size_t k = 0; k < bat.size(); ++k) {
    rep.in_phi.push_back(mem[k].in_phi);
    rep.in_psi.push_back(memr[k].in_psi);
  }

  std::vector<std::size_t> bad(phi.size(), 0);
  parallel_for(phi.size(), [&](std::size_t a) {
    for (const Rep& b : psi) bad[a] += ext1(phi[a], b).dim != 0;
  });
  rep.ext_pairs = phi.size() * psi.size();
  for (std::size_t a = 0; a < phi.size(); ++a) {
    rep.ext_violations += bad[a];
    if (bad[a]) rep.witnesses.push_back("Ext^1 nonzero from Phi part " + std::to_string(a));
  }

  // Squares: left map of one preenvelope against the right map of the next precover.
  std::mt19937_64 rng(seed ^ 0x5157ULL);
  for (std::size_t k = 0; k + 1 < bat.size(); ++k) {
    const auto& l = ap[k].preenvelope;
    const auto& r = ap[k + 1].precover;
    bool tried = false;
    bool ok = lifts(bat[k], l.mid, l.left, r.mid, bat[k + 1], r.right, rng, tried);
    if (!tried) continue;
    ++rep.squares;
    if (ok) ++rep.lifted;
    else rep.witnesses.push_back("square " + std::to_string(k) + " has no lift");
  }
  return rep;
}

AlgModule plus_tensor(const ReedyCat& rc, int y, int x, const AlgModule& s) {
  const LinCat& l = *rc.cat();
  const Field F = l.field();
  const Subspace& pl = rc.plus(y, x);
  const Algebra &ay = rc.local(y), &ax = rc.local(x);
  std::vector<Mat> right;
  for (std::size_t i = 0; i < ay.n; ++i) {
    const Vec e = rc.plus(y, y).reduced().row(i);
    Mat m(pl.dim(), pl.dim(), F);
    for (std::size_t k = 0; k < pl.dim(); ++k) m.set_col(k, pl.coords(l.compose(y, y, x, pl.reduced().row(k), e)));
    right.push_back(m);
  }
  BalancedTensor t = balanced_tensor(pl.dim(), right, s.dim, s.act, F);
  AlgModule out;
  out.dim = t.dim();
  for (std::size_t i = 0; i < ax.n; ++i) {
    const Vec e = rc.plus(x, x).reduced().row(i);
    Mat m(pl.dim(), pl.dim(), F);
    for (std::size_t k = 0; k < pl.dim(); ++k) m.set_col(k, pl.coords(l.compose(y, x, x, e, pl.reduced().row(k))));
    out.act.push_back(t.quotient.projection() * kron(m, Mat::identity(s.dim, F)) * t.quotient.section());
  }
  return out;
}

AlgModule minus_hom(const ReedyCat& rc, int y, int x, const AlgModule& s) {
  const LinCat& l = *rc.cat();
  const Field F = l.field();
  const Subspace& mi = rc.minus(x, y);
  const Algebra &ay = rc.local(y), &ax = rc.local(x);
  AlgModule nm;
  nm.dim = mi.dim();
  for (std::size_t i = 0; i < ay.n; ++i) {
    const Vec e = rc.plus(y, y).reduced().row(i);
    Mat m(mi.dim(), mi.dim(), F);
    for (std::size_t k = 0; k < mi.dim(); ++k) m.set_col(k, mi.coords(l.compose(x, y, y, e, mi.reduced().row(k))));
    nm.act.push_back(m);
  }
  auto hs = alg_hom(ay, nm, s);
  std::vector<Vec> cols;
  for (const Mat& h : hs) cols.push_back(flatten({h}));
  const std::size_t flat = s.dim * mi.dim();
  Mat basis = Mat::from_cols(cols, flat, F);
  AlgModule out;
  out.dim = hs.size();
  for (std::size_t i = 0; i < ax.n; ++i) {
    const Vec e = rc.plus(x, x).reduced().row(i);
    // (a.phi)(f) = phi(f a)
    Mat ra(mi.dim(), mi.dim(), F);
    for (std::size_t k = 0; k < mi.dim(); ++k) ra.set_col(k, mi.coords(l.compose(x, x, y, mi.reduced().row(k), e)));
    std::vector<Vec> moved;
    for (const Mat& h : hs) moved.push_back(flatten({h * ra}));
    out.act.push_back(coords_in(basis, Mat::from_cols(moved, flat, F)));
  }
  return out;
}

namespace {

std::vector<AlgModule> samples_in(const Algebra& a, const ModClassFn& member, std::mt19937_64& rng) {
  std::vector<AlgModule> cand{zero_module(a), regular_module(a), free_alg_module(a, 2)};
  for (int k = 0; k < 10; ++k) cand.push_back(random_alg_module(a, rng));
  std::vector<AlgModule> out;
  for (auto& m : cand)
    if (member(a, m)) out.push_back(std::move(m));
  return out;
}

CompatReport compat(const ReedyCat& rc, const ClassFamily& s, std::uint64_t seed, bool plus_side) {
  CompatReport rep;
  const LinCat& l = *rc.cat();
  std::mt19937_64 rng(seed);
  const int n = static_cast<int>(rc.size());
  for (int y = 0; y < n; ++y) {
    auto ss = samples_in(rc.local(y), s.member[y], rng);
    for (int x = 0; x < n; ++x) {
      if (x == y) continue;
      if ((plus_side ? rc.plus(y, x) : rc.minus(x, y)).dim() == 0) continue;
      for (const auto& m : ss) {
        ++rep.samples;
        AlgModule t = plus_side ? plus_tensor(rc, y, x, m) : minus_hom(rc, y, x, m);
        if (!s.member[x](rc.local(x), t)) {
          rep.pass = false;
          rep.witnesses.push_back("(" + l.object(y) + ", " + l.object(x) + ", dim S = " + std::to_string(m.dim) + ")");
        }
      }
    }
  }
  return rep;
}

}  // namespace

CompatReport check_cocompatible(const ReedyCat& rc, const ClassFamily& s, std::uint64_t seed) {
  return compat(rc, s, seed, true);
}

CompatReport check_compatible(const ReedyCat& rc, const ClassFamily& s, std::uint64_t seed) {
  return compat(rc, s, seed, false);
}

HoveyTriple stable_triple(std::size_t n) {
  HoveyTriple t;
  t.name = "stable";
  t.q = uniform_family("all", n, all_modules());
  t.w = uniform_family("proj", n, projective_modules());
  t.r = uniform_family("all", n, all_modules());
  t.trivial_cof = proj_all_pair(n);
  t.trivial_fib = all_inj_pair(n);
  t.trivial_fib.right = uniform_family("proj", n, projective_modules());
  t.hereditary = true;
  return t;
}

HoveyTriple trivial_triple(std::size_t n) {
  HoveyTriple t;
  t.name = "trivial";
  t.q = t.w = t.r = uniform_family("all", n, all_modules());
  t.trivial_cof = t.trivial_fib = all_all_pair(n);
  t.hereditary = true;
  return t;
}

HoveyReport hovey_glue_check(const ReedyCat& rc, const HoveyTriple& t, std::size_t battery_size, std::uint64_t seed) {
  HoveyReport rep;
  rep.cocompatible = check_cocompatible(rc, t.trivial_cof.left, seed);
  rep.compatible = check_compatible(rc, t.trivial_fib.right, seed);
  rep.cof = cotorsion_glue_check(rc, t.trivial_cof, battery_size, seed);
  rep.fib = cotorsion_glue_check(rc, t.trivial_fib, battery_size, seed);

  auto bat = battery(rc, battery_size, seed);
  std::vector<Sequence> seqs;
  std::vector<Rep> probes = bat;
  for (const auto* pair : {&t.trivial_cof, &t.trivial_fib})
    for (const Rep& m : bat) {
      Approximations a = approximations(rc, m, *pair);
      seqs.push_back({a.kernel, a.precover.mid, m});
      seqs.push_back({m, a.preenvelope.mid, a.cokernel});
      probes.push_back(a.precover.mid);
      probes.push_back(a.preenvelope.mid);
    }

  for (std::size_t k = 0; k < probes.size(); ++k) {
    const Rep& y = probes[k];
    const bool w = values_in(rc, y, t.w);
    ++rep.probes;
    rep.probes_in_w += w;
    const bool lhs = phi_psi_membership(rc, y, t.trivial_cof.left).in_phi;
    const bool rhs = phi_psi_membership(rc, y, t.q).in_phi && w;
    if (lhs != rhs) {
      rep.phi_identity = false;
      rep.witnesses.push_back("Phi identity fails on probe " + std::to_string(k));
    }
    const bool lhs2 = phi_psi_membership(rc, y, t.trivial_fib.right).in_psi;
    const bool rhs2 = w && phi_psi_membership(rc, y, t.r).in_psi;
    if (lhs2 != rhs2) {
      rep.psi_identity = false;
      rep.witnesses.push_back("Psi identity fails on probe " + std::to_string(k));
    }
  }

  // Two out of three on exact sequences, and summands.
  for (const auto& s : seqs) {
    ++rep.sequences;
    const int in = values_in(rc, s.a, t.w) + values_in(rc, s.b, t.w) + values_in(rc, s.c, t.w);
    if (in == 2) {
      ++rep.thick_violations;
      rep.witnesses.push_back("thickness fails on sequence " + std::to_string(rep.sequences - 1));
    }
  }
  for (std::size_t k = 0; k + 1 < bat.size(); ++k) {
    const bool sum = values_in(rc, direct_sum(bat[k], bat[k + 1]), t.w);
    if (sum != (values_in(rc, bat[k], t.w) && values_in(rc, bat[k + 1], t.w))) {
      ++rep.thick_violations;
      rep.witnesses.push_back("summand closure fails on battery " + std::to_string(k));
    }
  }
  if (t.hereditary) {
    bool ok = true;
    for (const auto& s : seqs)
      if (phi_psi_membership(rc, s.b, t.q).in_phi && phi_psi_membership(rc, s.c, t.q).in_phi &&
          !phi_psi_membership(rc, s.a, t.q).in_phi)
        ok = false;
    rep.hereditary_closure = ok;
  }
  return rep;
}

}  // namespace rlab
