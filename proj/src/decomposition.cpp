#include "reedylab/decomposition.hpp"

#include <random>

namespace rlab {

namespace {

std::string pair_name(const LinCat& l, int x, int y) { return "(" + l.object(x) + ", " + l.object(y) + ")"; }

// References stay valid for up to four conditions.
Condition& add_condition(DecompositionVerdict& v, const std::string& name) {
  v.conditions.reserve(4);
  v.conditions.push_back(Condition{name, true, {}, ""});
  return v.conditions.back();
}

void fail(Condition& c, const std::string& w) {
  c.pass = false;
  c.witnesses.push_back(w);
}

void fill_tables(const ReedyCat& rc, DecompositionVerdict& v) {
  const int n = static_cast<int>(rc.size());
  std::vector<Rep> delta;
  for (int x = 0; x < n; ++x) delta.push_back(standard_module(rc, x, v.dual ? Side::Right : Side::Left));
  v.orthogonality.assign(n, std::vector<std::size_t>(n, 0));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) v.orthogonality[x][y] = hom_dim(delta[x], delta[y]);
    v.end_dims.push_back(v.orthogonality[x][x]);
    v.local_dims.push_back(rc.local(x).n);
    v.delta_projective.push_back(is_projective_rep(delta[x]));
  }
}

// Columns: phi_g for g over the basis of plus(x, y), each of length dim minus(y,x) * dim A_x^0.
struct Pairing {
  std::vector<Mat> per_f;  // dim A_x^0 x dim plus(x,y), one per basis f of minus(y,x)
  Mat stacked;
};

Pairing pairing(const ReedyCat& rc, int x, int y) {
  const LinCat& l = *rc.cat();
  const Field F = l.field();
  QuotientSpace q(l.dim(x, x), rc.ideal(rc.degree(x), x, x));
  const Subspace &p = rc.plus(x, y), &m = rc.minus(y, x);
  Pairing out;
  out.stacked = Mat(m.dim() * q.dim(), p.dim(), F);
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Mat mj(q.dim(), p.dim(), F);
    for (std::size_t i = 0; i < p.dim(); ++i) mj.set_col(i, q.project(l.compose(x, y, x, m.reduced().row(j), p.reduced().row(i))));
    out.stacked.set_block(j * q.dim(), 0, mj);
    out.per_f.push_back(std::move(mj));
  }
  return out;
}

NondegeneracyReport judge(const Pairing& pr, std::size_t dim_src, Field F, bool transpose) {
  NondegeneracyReport r;
  // transpose: the roles of the two arguments are swapped (psi_f instead of phi_g).
  if (!transpose) {
    r.injective_map = rank(pr.stacked) == dim_src;
    Subspace k = Subspace::full(dim_src, F);
    for (const Mat& m : pr.per_f) k = k.intersect(Subspace::column_span(kernel(m)));
    r.pairing_kernel_zero = k.dim() == 0;
  } else {
    // psi_f as the vector (proj(f g_i))_i; f ranges over the per_f index.
    const std::size_t nf = pr.per_f.size();
    if (nf == 0) return r;
    const std::size_t qa = pr.per_f[0].rows(), np = pr.per_f[0].cols();
    Mat psi(qa * np, nf, F);
    for (std::size_t j = 0; j < nf; ++j)
      for (std::size_t i = 0; i < np; ++i)
        for (std::size_t t = 0; t < qa; ++t) psi(i * qa + t, j) = pr.per_f[j](t, i);
    r.injective_map = rank(psi) == nf;
    // f in the left kernel iff sum_j c_j per_f[j] = 0.
    Subspace k = Subspace::full(nf, F);
    for (std::size_t i = 0; i < np; ++i) {
      Mat rows(qa, nf, F);
      for (std::size_t j = 0; j < nf; ++j)
        for (std::size_t t = 0; t < qa; ++t) rows(t, j) = pr.per_f[j](t, i);
      k = k.intersect(Subspace::column_span(kernel(rows)));
    }
    r.pairing_kernel_zero = k.dim() == 0;
  }
  return r;
}

DecompositionVerdict theorem_D(const ReedyCat& rc, bool dual) {
  const LinCat& l = *rc.cat();
  const Field F = l.field();
  const int n = static_cast<int>(rc.size());
  DecompositionVerdict v;
  v.criterion = Criterion::Nondegenerate;
  v.dual = dual;
  add_condition(v, "(a) finite dimensional").route = "by construction";
  Condition& b = add_condition(v, dual ? "(b) plus free, minus projective" : "(b) plus projective, minus free");
  Condition& c = add_condition(v, "(c) dim plus(x,y) = dim minus(y,x)");
  Condition& d = add_condition(v, "(d) nonzero morphisms non-degenerate");
  std::mt19937_64 rng(0x5eedULL);
  bool any_explicit = false;
  for (int x = 0; x < n; ++x) {
    const Algebra& a = rc.local(x);
    const bool maschke = a.known_semisimple();
    Algebra aop = a.opposite();
    for (int y = 0; y < n; ++y) {
      const std::size_t dp = rc.plus(x, y).dim(), dm = rc.minus(y, x).dim();
      if (dp != dm) fail(c, pair_name(l, x, y) + ": " + std::to_string(dp) + " vs " + std::to_string(dm));
      if (!maschke && x != y) {
        any_explicit = true;
        AlgModule pm = rc.plus_module(x, y), mm = rc.minus_module(y, x);
        auto free_ok = [&](const Algebra& alg, const AlgModule& m) {
          return m.dim % alg.n == 0 && find_free_basis(alg, m, rng).has_value();
        };
        if (!dual) {
          if (!is_projective(aop, pm)) fail(b, "plus" + pair_name(l, x, y) + " not right-projective");
          if (!free_ok(a, mm)) fail(b, "minus" + pair_name(l, y, x) + " not free");
        } else {
          if (!free_ok(aop, pm)) fail(b, "plus" + pair_name(l, x, y) + " not free");
          if (!is_projective(a, mm)) fail(b, "minus" + pair_name(l, y, x) + " not left-projective");
        }
      }
      Pairing pr = pairing(rc, x, y);
      NondegeneracyReport nd = judge(pr, dp, F, dual);
      if (nd.injective_map != nd.pairing_kernel_zero) fail(d, "formulations disagree at " + pair_name(l, x, y));
      if (!nd.injective_map) fail(d, "degenerate morphism in " + std::string(dual ? "minus" : "plus") + pair_name(l, x, y));
    }
  }
  b.route = any_explicit ? "explicit" : "group-algebra";
  fill_tables(rc, v);
  return v;
}

}  // namespace

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::CentralIdempotent: return "CENTRAL_IDEMPOTENT";
    case Criterion::Nondegenerate: return "NONDEGENERATE";
    case Criterion::SpanEI: return "SPAN_EI";
  }
  return "";
}

bool DecompositionVerdict::pass() const {
  for (const auto& c : conditions)
    if (!c.pass) return false;
  return true;
}

std::optional<CentralIdempotent> find_central_idempotent(const ReedyCat& rc, int x) {
  const LinCat& l = *rc.cat();
  const Field F = l.field();
  const std::size_t na = l.dim(x, x);
  const Subspace ideal = rc.ideal(rc.degree(x), x, x);
  const std::size_t ni = ideal.dim();
  std::vector<Vec> basis = ideal.basis();
  // Unknowns: coefficients of e in the basis of I_x(x, x).
  std::vector<Vec> rows;
  Vec rhs;
  auto add_eq = [&](const std::function<Vec(const Vec&)>& lin, const Vec& target) {
    std::vector<Vec> imgs;
    for (const Vec& b : basis) imgs.push_back(lin(b));
    for (std::size_t t = 0; t < na; ++t) {
      Vec r(ni);
      for (std::size_t k = 0; k < ni; ++k) r[k] = imgs[k][t];
      rows.push_back(r);
      rhs.push_back(target[t]);
    }
  };
  for (const Vec& b : basis) {
    add_eq([&](const Vec& e) { return l.compose(x, x, x, e, b); }, b);
    add_eq([&](const Vec& e) { return l.compose(x, x, x, b, e); }, b);
  }
  for (std::size_t i = 0; i < na; ++i) {
    Vec a = l.basis_vec(x, x, static_cast<int>(i));
    add_eq([&](const Vec& e) { return sub(l.compose(x, x, x, e, a), l.compose(x, x, x, a, e)); }, zeros(na, F));
  }
  CentralIdempotent ci;
  ci.e = zeros(na, F);
  if (ni > 0) {
    Mat m = Mat::from_rows(rows, ni, F);
    Mat r = Mat::from_cols({rhs}, rhs.size(), F);
    auto s = solve(m, r);
    if (!s) return std::nullopt;
    ci.solution_dim = s->kernel.cols();
    Vec c = s->particular.col(0);
    for (std::size_t k = 0; k < ni; ++k) axpy(ci.e, c[k], basis[k]);
  }
  ci.f = sub(l.identity(x), ci.e);
  std::vector<Vec> corner;
  for (std::size_t i = 0; i < na; ++i)
    corner.push_back(l.compose(x, x, x, l.compose(x, x, x, ci.e, l.basis_vec(x, x, static_cast<int>(i))), ci.e));
  ci.corner_equals_ideal = Subspace::span(na, F, corner) == ideal;
  ci.delta_iso = true;
  for (int y = 0; y < static_cast<int>(l.size()); ++y) {
    Mat cf = l.right_mult(x, x, y, ci.f);  // hom(x,y) -> hom(x,y), h |-> h f
    QuotientSpace q(l.dim(x, y), rc.ideal(rc.degree(x), x, y));
    const std::size_t d = rank(cf);
    if (d != q.dim() || rank(q.projection() * cf) != d) ci.delta_iso = false;
  }
  return ci;
}

DecompositionVerdict check_theorem_C(const ReedyCat& rc) {
  const LinCat& l = *rc.cat();
  const int n = static_cast<int>(rc.size());
  DecompositionVerdict v;
  v.criterion = Criterion::CentralIdempotent;
  Condition& a = add_condition(v, "(a) plus right-projective and minus left-projective");
  Condition& b = add_condition(v, "(b) central idempotents with I_x = e_x A_x e_x");
  Condition& c = add_condition(v, "(c) free summands");
  auto hyp = projectivity_hypotheses(rc);
  for (const auto& f : hyp.failures) fail(a, f);
  for (int x = 0; x < n; ++x) {
    auto e = find_central_idempotent(rc, x);
    if (!e)
      fail(b, "no central unit of I_x at " + l.object(x));
    else if (!e->corner_equals_ideal)
      fail(b, "e A e != I_x at " + l.object(x));
    else if (!e->delta_iso)
      fail(b, "C f_x is not isomorphic to Delta_x at " + l.object(x));
    v.idempotents.push_back(std::move(e));
  }
  std::mt19937_64 rng(0xC0FFEEULL);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || rc.plus(y, x).dim() == 0) continue;
      AlgModule m = rc.minus_module(x, y);
      if (m.dim == 0 || !find_free_summand(rc.local(y), m, rng))
        fail(c, "minus" + pair_name(l, x, y) + " has no free summand found");
    }
  fill_tables(rc, v);
  return v;
}

DecompositionVerdict check_theorem_D(const ReedyCat& rc) { return theorem_D(rc, false); }
DecompositionVerdict check_theorem_D_dual(const ReedyCat& rc) { return theorem_D(rc, true); }

NondegeneracyReport nondegeneracy(const ReedyCat& rc, int x, int y) {
  return judge(pairing(rc, x, y), rc.plus(x, y).dim(), rc.field(), false);
}
NondegeneracyReport nondegeneracy_dual(const ReedyCat& rc, int x, int y) {
  return judge(pairing(rc, x, y), rc.plus(x, y).dim(), rc.field(), true);
}

bool GeneratorReport::diagonal() const {
  for (std::size_t x = 0; x < orthogonality.size(); ++x)
    for (std::size_t y = 0; y < orthogonality.size(); ++y)
      if (x != y && orthogonality[x][y]) return false;
  return true;
}

bool GeneratorReport::pass() const {
  auto all = [](const std::vector<bool>& v) {
    for (bool b : v)
      if (!b) return false;
    return true;
  };
  return diagonal() && all(projective_ext) && all(projective_split) && all(representable_decomposes);
}

GeneratorReport verify_orthogonal_projective_generators(const ReedyCat& rc) {
  const LinCat& l = *rc.cat();
  const int n = static_cast<int>(rc.size());
  GeneratorReport g;
  std::vector<Rep> delta;
  std::vector<RepMap> quot;
  for (int x = 0; x < n; ++x) {
    Rep p = representable(rc.cat(), x, Side::Left);
    std::vector<Subspace> subs;
    for (int y = 0; y < n; ++y) subs.push_back(rc.ideal(rc.degree(x), x, y));
    auto q = quotient_rep(p, subs);
    delta.push_back(q.rep);
    quot.push_back(q.map);
  }
  g.orthogonality.assign(n, std::vector<std::size_t>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g.orthogonality[x][y] = hom_dim(delta[x], delta[y]);
  std::mt19937_64 rng(0xDECAFULL);
  for (int x = 0; x < n; ++x) {
    auto pres = proj_presentation(delta[x]);
    g.projective_ext.push_back(ext1(delta[x], pres.omega).dim == 0);
    auto secs = hom_reps(delta[x], representable(rc.cat(), x, Side::Left));
    std::vector<Vec> cols;
    Vec target;
    auto flat = [](const RepMap& f) {
      Vec v;
      for (const Mat& m : f.m)
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
      return v;
    };
    target = flat(identity_map(delta[x]));
    for (const auto& s : secs) cols.push_back(flat(compose(quot[x], s)));
    bool split = target.empty();
    if (!split && !cols.empty())
      split = solve(Mat::from_cols(cols, target.size(), l.field()), Mat::from_cols({target}, target.size(), l.field()))
                  .has_value();
    g.projective_split.push_back(split);
  }
  for (int y = 0; y < n; ++y) {
    Rep sum = zero_rep(rc.cat(), Side::Left);
    bool first = true;
    for (int z = 0; z < n; ++z) {
      Rep t = standard_tensor(rc, z, rc.minus_module(y, z));
      sum = first ? t : direct_sum(sum, t);
      first = false;
    }
    g.representable_decomposes.push_back(find_iso(representable(rc.cat(), y, Side::Left), sum, rng).has_value());
  }
  return g;
}

MoritaData morita_report(const ReedyCat& rc, const Rep& m, const GeneratorReport* verified) {
  std::optional<GeneratorReport> own;
  if (!verified) {
    own = verify_orthogonal_projective_generators(rc);
    verified = &*own;
  }
  if (!verified->pass()) throw GeneratorsNotVerified("GENERATORS_NOT_VERIFIED");
  if (m.side != Side::Left || m.cat != rc.cat()) throw std::invalid_argument("morita_report: left module over the category expected");
  const LinCat& l = *rc.cat();
  const Field F = l.field();
  const int n = static_cast<int>(rc.size());
  MoritaData out;
  std::vector<StandardTensor> parts;
  for (int x = 0; x < n; ++x) {
    // Hom(Delta_x, M) = elements of M(x) killed by I_x(x, -).
    std::vector<Vec> eqs;
    for (int w = 0; w < n; ++w)
      for (const Vec& b : rc.ideal(rc.degree(x), x, w).basis()) {
        Mat a = m.action(x, w, b);
        for (std::size_t r = 0; r < a.rows(); ++r) eqs.push_back(a.row(r));
      }
    Subspace h = eqs.empty() ? Subspace::full(m.dims[x], F)
                             : Subspace::column_span(kernel(Mat::from_rows(eqs, m.dims[x], F)));
    Mat hb = h.dim() ? h.basis_matrix() : Mat(m.dims[x], 0, F);
    AlgModule fam;
    fam.dim = h.dim();
    for (std::size_t k = 0; k < rc.local(x).n; ++k) {
      Mat act = m.action(x, x, rc.plus(x, x).reduced().row(k)) * hb;
      Mat c(h.dim(), h.dim(), F);
      for (std::size_t j = 0; j < h.dim(); ++j) c.set_col(j, h.coords(act.col(j)));
      fam.act.push_back(c);
    }
    out.family.push_back(fam);
    out.family_basis.push_back(hb);
    parts.push_back(standard_tensor_data(rc, x, fam));
  }
  out.reconstruction = parts[0].rep;
  for (int x = 1; x < n; ++x) out.reconstruction = direct_sum(out.reconstruction, parts[x].rep);
  for (int w = 0; w < n; ++w) {
    Mat ev(m.dims[w], out.reconstruction.dims[w], F);
    std::size_t col = 0;
    for (int x = 0; x < n; ++x) {
      const BalancedTensor& t = parts[x].t[w];
      const Mat& sect = t.quotient.section();
      const Mat& dsec = parts[x].delta_q[w].section();
      for (std::size_t c = 0; c < t.dim(); ++c, ++col) {
        Vec v = zeros(m.dims[w], F);
        for (std::size_t i = 0; i < t.dim_m; ++i)
          for (std::size_t j = 0; j < t.dim_n; ++j) {
            const Scalar& s = sect(i * t.dim_n + j, c);
            if (s.is_zero()) continue;
            axpy(v, s, m.action(x, w, dsec.col(i)) * out.family_basis[x].col(j));
          }
        ev.set_col(col, v);
      }
    }
    out.evaluation.m.push_back(ev);
  }
  out.reconstructed = is_natural(out.reconstruction, m, out.evaluation) && is_iso(out.evaluation);
  return out;
}

bool TheoremEVerdict::pass() const {
  return conditions.conditions() && reedy && reedy->pass() && decomposition && decomposition->pass();
}

TheoremEVerdict check_theorem_E(const EICat& e, Field f) {
  TheoremEVerdict v;
  v.conditions = check_theorem_E_conditions(e, f);
  if (!v.conditions.conditions()) return v;
  auto s = span_category(e);
  v.rc = span_reedy(e, s, f);
  v.reedy = check_reedy(*v.rc);
  auto d = check_theorem_D(*v.rc);
  d.criterion = Criterion::SpanEI;
  v.decomposition = std::move(d);
  return v;
}

}  // namespace rlab
