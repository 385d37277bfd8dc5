#include "reedylab/linalg.hpp"

#include <sstream>

namespace rlab {

Vec zeros(std::size_t n, Field f) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(std::size_t n, std::size_t i, Field f) {
  Vec v = zeros(n, f);
  v[i] = Scalar::one(f);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x = s * x;
  return r;
}

void axpy(Vec& a, const Scalar& s, const Vec& b) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

Mat::Mat(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

Mat Mat::identity(std::size_t n, Field f) {
  Mat m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols, Field f) {
  Mat m(rows.size(), cols, f);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, std::size_t rows, Field f) {
  Mat m(rows, cols.size(), f);
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Mat Mat::from_ints(std::size_t rows, std::size_t cols, Field f, const std::vector<long>& v) {
  Mat m(rows, cols, f);
  for (std::size_t i = 0; i < rows * cols && i < v.size(); ++i) m.a_[i] = Scalar(f, v[i]);
  return m;
}

Vec Mat::row(std::size_t i) const {
  return Vec(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

Vec Mat::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Mat::set_col(std::size_t j, const Vec& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Mat::set_row(std::size_t i, const Vec& v) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Mat c(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  return c;
}

Vec Mat::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  Vec r = zeros(rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero() && !v[k].is_zero()) r[i] += a * v[k];
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Mat c = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) c.a_[i] += o.a_[i];
  return c;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Mat c = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) c.a_[i] -= o.a_[i];
  return c;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat c = *this;
  for (auto& x : c.a_)
    if (!x.is_zero()) x = s * x;
  return c;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((i == j) ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
  return true;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Mat b(nr, nc, field_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).str();
  }
  os << "]";
  return os.str();
}

Mat hstack(const std::vector<Mat>& ms, std::size_t rows, Field f) {
  std::size_t cols = 0;
  for (const auto& m : ms) cols += m.cols();
  Mat r(rows, cols, f);
  std::size_t c = 0;
  for (const auto& m : ms) {
    r.set_block(0, c, m);
    c += m.cols();
  }
  return r;
}

Mat vstack(const std::vector<Mat>& ms, std::size_t cols, Field f) {
  std::size_t rows = 0;
  for (const auto& m : ms) rows += m.rows();
  Mat r(rows, cols, f);
  std::size_t c = 0;
  for (const auto& m : ms) {
    r.set_block(c, 0, m);
    c += m.rows();
  }
  return r;
}

Mat direct_sum(const Mat& a, const Mat& b) {
  Mat r(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& s = a(i, j);
      if (s.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
    }
  return r;
}

Rref rref(const Mat& m) {
  Rref out;
  out.r = m;
  Mat& a = out.r;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t row = 0;
  for (std::size_t c = 0; c < C && row < R; ++c) {
    std::size_t p = row;
    while (p < R && a(p, c).is_zero()) ++p;
    if (p == R) continue;
    if (p != row)
      for (std::size_t j = c; j < C; ++j) std::swap(a(p, j), a(row, j));
    Scalar inv = a(row, c).inv();
    for (std::size_t j = c; j < C; ++j)
      if (!a(row, j).is_zero()) a(row, j) = a(row, j) * inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == row || a(i, c).is_zero()) continue;
      Scalar factor = a(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (!a(row, j).is_zero()) a(i, j) -= factor * a(row, j);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rank = row;
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat kernel(const Mat& m) {
  Rref e = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < C; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zeros(C, m.field());
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.r(r, free);
    basis.push_back(std::move(v));
  }
  return Mat::from_cols(basis, C, m.field());
}

std::optional<Solution> solve(const Mat& m, const Mat& rhs) {
  if (m.rows() != rhs.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t C = m.cols();
  Rref e = rref(hstack({m, rhs}, m.rows(), m.field()));
  Solution s{Mat(C, rhs.cols(), m.field()), Mat()};
  for (std::size_t r = 0; r < e.rank; ++r) {
    std::size_t p = e.pivots[r];
    if (p >= C) return std::nullopt;
    for (std::size_t j = 0; j < rhs.cols(); ++j) s.particular(p, j) = e.r(r, C + j);
  }
  s.kernel = kernel(m);
  return s;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto s = solve(m, Mat::identity(m.rows(), m.field()));
  if (!s || s->kernel.cols() != 0) return std::nullopt;
  return s->particular;
}

std::optional<Mat> right_inverse(const Mat& m) {
  auto s = solve(m, Mat::identity(m.rows(), m.field()));
  if (!s) return std::nullopt;
  return s->particular;
}

std::optional<Mat> left_inverse(const Mat& m) {
  auto t = right_inverse(m.transpose());
  if (!t) return std::nullopt;
  return t->transpose();
}

Subspace::Subspace(std::size_t ambient, Field f) : n_(ambient), f_(f), basis_(0, ambient, f) {}

Subspace Subspace::span(std::size_t ambient, Field f, const std::vector<Vec>& vectors) {
  Subspace s(ambient, f);
  s.spanning_ = vectors;
  if (vectors.empty()) return s;
  Rref e = rref(Mat::from_rows(vectors, ambient, f));
  s.basis_ = e.r.block(0, 0, e.rank, ambient);
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::column_span(const Mat& m) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return span(m.rows(), m.field(), cols);
}

Subspace Subspace::full(std::size_t ambient, Field f) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vec(ambient, i, f));
  return span(ambient, f, vs);
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> b;
  for (std::size_t i = 0; i < basis_.rows(); ++i) b.push_back(basis_.row(i));
  return b;
}

Mat Subspace::basis_matrix() const { return basis_.transpose(); }

bool Subspace::contains(const Vec& v) const {
  Vec w = v;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Scalar c = w[pivots_[r]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (!basis_(r, j).is_zero()) w[j] -= c * basis_(r, j);
  }
  return rlab::is_zero(w);
}

bool Subspace::contains(const Subspace& o) const {
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_.row(i))) return false;
  return true;
}

Vec Subspace::coords(const Vec& v) const {
  Vec c;
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

Subspace Subspace::operator+(const Subspace& o) const {
  auto vs = basis();
  auto ws = o.basis();
  vs.insert(vs.end(), ws.begin(), ws.end());
  return span(n_, f_, vs);
}

Subspace Subspace::intersect(const Subspace& o) const {
  // Kernel of [B | -C] gives the coefficient pairs of common vectors.
  Mat b = basis_matrix(), c = o.basis_matrix();
  if (b.cols() == 0 || c.cols() == 0) return Subspace(n_, f_);
  Mat k = kernel(hstack({b, c.scaled(-Scalar::one(f_))}, n_, f_));
  std::vector<Vec> vs;
  for (std::size_t j = 0; j < k.cols(); ++j) {
    Vec kc = k.col(j);
    vs.push_back(b * Vec(kc.begin(), kc.begin() + static_cast<long>(b.cols())));
  }
  return span(n_, f_, vs);
}

bool Subspace::operator==(const Subspace& o) const {
  return n_ == o.n_ && basis_ == o.basis_;
}

QuotientSpace::QuotientSpace(std::size_t ambient, const Subspace& sub) : n_(ambient), sub_(sub) {
  Field f = sub.field();
  std::vector<bool> is_pivot(ambient, false);
  for (auto p : sub.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  std::vector<long> index(ambient, -1);
  for (std::size_t j = 0; j < ambient; ++j)
    if (!is_pivot[j]) {
      index[j] = static_cast<long>(free.size());
      free.push_back(j);
    }
  proj_ = Mat(free.size(), ambient, f);
  sect_ = Mat(ambient, free.size(), f);
  for (std::size_t q = 0; q < free.size(); ++q) {
    proj_(q, free[q]) = Scalar::one(f);
    sect_(free[q], q) = Scalar::one(f);
  }
  const Mat& red = sub.reduced();
  for (std::size_t r = 0; r < sub.pivots().size(); ++r)
    for (std::size_t q = 0; q < free.size(); ++q) proj_(q, sub.pivots()[r]) = -red(r, free[q]);
}

}  // namespace rlab
