#include "reedylab/algebra.hpp"

#include <stdexcept>

#include "reedylab/rep.hpp"

namespace rlab {

namespace {

// Index of the single nonzero entry when v is a unit vector.
std::optional<std::size_t> unit_index(const Vec& v) {
  std::optional<std::size_t> at;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (at || !v[i].is_one()) return std::nullopt;
    at = i;
  }
  return at;
}

// Row-major vectorization: vec(A X B) = kron(A, B^T) vec(X).
Mat sandwich(const Mat& a, const Mat& b) { return kron(a, b.transpose()); }

}  // namespace

Vec Algebra::product(const Vec& a, const Vec& b) const {
  Vec out = zeros(n, field);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!b[j].is_zero()) axpy(out, a[i] * b[j], mult[i][j]);
  }
  return out;
}

Mat Algebra::left_regular(std::size_t i) const {
  Mat m(n, n, field);
  for (std::size_t j = 0; j < n; ++j) m.set_col(j, mult[i][j]);
  return m;
}

Mat Algebra::right_regular(std::size_t i) const {
  Mat m(n, n, field);
  for (std::size_t j = 0; j < n; ++j) m.set_col(j, mult[j][i]);
  return m;
}

Algebra Algebra::opposite() const {
  Algebra o = *this;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) o.mult[i][j] = mult[j][i];
  return o;
}

Algebra endo_algebra(const LinCat& l, int x, const Subspace& sub) {
  Algebra a;
  a.field = l.field();
  a.n = sub.dim();
  std::vector<Vec> b;
  for (std::size_t i = 0; i < a.n; ++i) b.push_back(sub.reduced().row(i));
  a.mult.assign(a.n, std::vector<Vec>(a.n));
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j) {
      Vec p = l.compose(x, x, x, b[i], b[j]);
      if (!sub.contains(p)) throw std::invalid_argument("endo_algebra: subspace not closed");
      a.mult[i][j] = sub.coords(p);
    }
  if (!sub.contains(l.identity(x))) throw std::invalid_argument("endo_algebra: identity missing");
  a.one = sub.coords(l.identity(x));

  // Group basis: products and unit are basis elements and each element has an inverse.
  bool group = a.n > 0 && unit_index(a.one).has_value();
  for (std::size_t i = 0; group && i < a.n; ++i) {
    bool has_inv = false;
    for (std::size_t j = 0; j < a.n; ++j) {
      if (!unit_index(a.mult[i][j])) {
        group = false;
        break;
      }
      if (a.mult[i][j] == a.one) has_inv = true;
    }
    if (!has_inv) group = false;
  }
  if (group) a.group_order = a.n;
  return a;
}

Mat AlgModule::action(const Vec& a) const {
  Mat m(dim, dim, a.empty() ? Field{} : a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) m = m + act[i].scaled(a[i]);
  return m;
}

AlgModule regular_module(const Algebra& a) {
  AlgModule m;
  m.dim = a.n;
  for (std::size_t i = 0; i < a.n; ++i) m.act.push_back(a.left_regular(i));
  return m;
}

AlgModule free_alg_module(const Algebra& a, std::size_t r) {
  AlgModule m;
  m.dim = a.n * r;
  for (std::size_t i = 0; i < a.n; ++i) m.act.push_back(kron(Mat::identity(r, a.field), a.left_regular(i)));
  return m;
}

AlgModule dual(const AlgModule& m) {
  AlgModule d = m;
  for (auto& x : d.act) x = x.transpose();
  return d;
}

bool is_alg_module(const Algebra& a, const AlgModule& m) {
  if (m.act.size() != a.n) return false;
  if (!m.action(a.one).is_identity()) return false;
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j)
      if (m.action(a.mult[i][j]) != m.act[i] * m.act[j]) return false;
  return true;
}

std::vector<Mat> alg_hom(const Algebra& a, const AlgModule& m, const AlgModule& n) {
  const Field F = a.field;
  const std::size_t vars = n.dim * m.dim;
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < a.n; ++i)
    blocks.push_back(sandwich(n.act[i], Mat::identity(m.dim, F)) - sandwich(Mat::identity(n.dim, F), m.act[i]));
  Mat sys = vstack(blocks, vars, F);
  Mat K = sys.rows() ? kernel(sys) : Mat::identity(vars, F);
  std::vector<Mat> out;
  for (std::size_t c = 0; c < K.cols(); ++c) {
    Mat t(n.dim, m.dim, F);
    for (std::size_t i = 0; i < n.dim; ++i)
      for (std::size_t j = 0; j < m.dim; ++j) t(i, j) = K(i * m.dim + j, c);
    out.push_back(t);
  }
  return out;
}

bool is_projective(const Algebra& a, const AlgModule& m) {
  if (a.known_semisimple() || m.dim == 0) return true;
  const Field F = a.field;
  const std::size_t d = m.dim, nd = a.n * d;
  // Section S: M -> A (x) M, index k * d + j for e_k (x) m_j.
  Mat mu(d, nd, F);
  for (std::size_t k = 0; k < a.n; ++k) mu.set_block(0, k * d, m.act[k]);
  std::vector<Mat> blocks;
  std::vector<Mat> rhs;
  const std::size_t vars = nd * d;
  for (std::size_t i = 0; i < a.n; ++i) {
    Mat li = kron(a.left_regular(i), Mat::identity(d, F));
    blocks.push_back(sandwich(li, Mat::identity(d, F)) - sandwich(Mat::identity(nd, F), m.act[i]));
    rhs.push_back(Mat(nd * d, 1, F));
  }
  blocks.push_back(sandwich(mu, Mat::identity(d, F)));
  Mat id = Mat::identity(d, F), idv(d * d, 1, F);
  for (std::size_t i = 0; i < d; ++i) idv(i * d + i, 0) = Scalar::one(F);
  rhs.push_back(idv);
  return solve(vstack(blocks, vars, F), vstack(rhs, 1, F)).has_value();
}

bool is_injective(const Algebra& a, const AlgModule& m) { return is_projective(a.opposite(), dual(m)); }

std::optional<FreeWitness> find_free_basis(const Algebra& a, const AlgModule& m, std::mt19937_64& rng, int tries) {
  if (m.dim == 0) return FreeWitness{};
  if (a.n == 0 || m.dim % a.n) return std::nullopt;
  const std::size_t r = m.dim / a.n;
  for (int t = 0; t < tries; ++t) {
    FreeWitness w;
    w.rank = r;
    Mat phi(m.dim, a.n * r, a.field);
    for (std::size_t k = 0; k < r; ++k) {
      Vec v = random_vec(rng, m.dim, a.field);
      for (std::size_t i = 0; i < a.n; ++i) phi.set_col(k * a.n + i, m.act[i] * v);
      w.basis.push_back(std::move(v));
    }
    if (rank(phi) == m.dim) return w;
  }
  return std::nullopt;
}

std::optional<Vec> find_free_summand(const Algebra& a, const AlgModule& m, std::mt19937_64& rng, int tries) {
  if (m.dim < a.n) return std::nullopt;
  auto homs = alg_hom(a, m, regular_module(a));
  if (homs.empty()) return std::nullopt;
  for (int t = 0; t < tries; ++t) {
    Vec v = random_vec(rng, m.dim, a.field);
    Mat phi(m.dim, a.n, a.field);
    for (std::size_t i = 0; i < a.n; ++i) phi.set_col(i, m.act[i] * v);
    if (rank(phi) != a.n) continue;
    std::vector<Vec> cols;
    for (const auto& h : homs) cols.push_back(h * v);
    Mat hv = Mat::from_cols(cols, a.n, a.field);
    Mat one(a.n, 1, a.field);
    one.set_col(0, a.one);
    if (solve(hv, one)) return v;
  }
  return std::nullopt;
}

std::optional<Subspace> radical(const Algebra& a) {
  if (a.known_semisimple()) return Subspace(a.n, a.field);
  if (!a.field.is_rational()) return std::nullopt;
  std::vector<Mat> L;
  for (std::size_t i = 0; i < a.n; ++i) L.push_back(a.left_regular(i));
  Mat g(a.n, a.n, a.field);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j) {
      Mat p = L[i] * L[j];
      Scalar tr = Scalar::zero(a.field);
      for (std::size_t k = 0; k < a.n; ++k) tr += p(k, k);
      g(i, j) = tr;
    }
  Mat k = kernel(g);
  return k.cols() ? Subspace::column_span(k) : Subspace(a.n, a.field);
}

std::optional<std::size_t> semisimple_center_dim(const Algebra& a) {
  auto rad = radical(a);
  if (!rad) return std::nullopt;
  QuotientSpace q(a.n, *rad);
  std::vector<Mat> blocks;
  for (std::size_t j = 0; j < a.n; ++j) {
    Mat c(a.n, a.n, a.field);
    for (std::size_t i = 0; i < a.n; ++i) c.set_col(i, sub(a.mult[i][j], a.mult[j][i]));
    blocks.push_back(q.projection() * c);
  }
  Mat sys = vstack(blocks, a.n, a.field);
  std::size_t ker = a.n - rank(sys);
  return ker - rad->dim();
}

std::optional<std::size_t> conjugacy_classes(const Algebra& a) {
  if (!a.group_order) return std::nullopt;
  const std::size_t n = a.n;
  auto idx = [&](const Vec& v) { return *unit_index(v); };
  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.mult[i][j] == a.one) inv[i] = j;
  std::vector<int> cls(n, -1);
  std::size_t count = 0;
  for (std::size_t g = 0; g < n; ++g) {
    if (cls[g] >= 0) continue;
    for (std::size_t h = 0; h < n; ++h) cls[idx(a.product(a.mult[h][g], unit_vec(n, inv[h], a.field)))] = static_cast<int>(count);
    ++count;
  }
  return count;
}

}  // namespace rlab
