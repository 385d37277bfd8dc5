#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reedylab/scalar.hpp"

namespace rlab {

using Vec = std::vector<Scalar>;

Vec zeros(std::size_t n, Field f);
Vec unit_vec(std::size_t n, std::size_t i, Field f);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
// a += s * b
void axpy(Vec& a, const Scalar& s, const Vec& b);

// Dense row-major matrix over one field.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, Field f);

  static Mat zero(std::size_t rows, std::size_t cols, Field f) { return Mat(rows, cols, f); }
  static Mat identity(std::size_t n, Field f);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols, Field f);
  static Mat from_cols(const std::vector<Vec>& cols, std::size_t rows, Field f);
  // Integer entries, row-major.
  static Mat from_ints(std::size_t rows, std::size_t cols, Field f, const std::vector<long>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_col(std::size_t j, const Vec& v);
  void set_row(std::size_t i, const Vec& v);

  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& s) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  // Copy of the block [r0, r0+nr) x [c0, c0+nc).
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_{};
  std::vector<Scalar> a_;
};

Mat hstack(const std::vector<Mat>& ms, std::size_t rows, Field f);
Mat vstack(const std::vector<Mat>& ms, std::size_t cols, Field f);
// Block-diagonal sum.
Mat direct_sum(const Mat& a, const Mat& b);
// Kronecker product a (x) b, index (i, j) -> i * b.dim + j.
Mat kron(const Mat& a, const Mat& b);

struct Rref {
  Mat r;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

Rref rref(const Mat& m);
std::size_t rank(const Mat& m);
// Columns form a basis of {x : m x = 0}.
Mat kernel(const Mat& m);

struct Solution {
  Mat particular;  // m * particular = rhs
  Mat kernel;      // columns span ker m
};
// Solves m X = rhs exactly; nullopt when some column of rhs is outside the column span.
std::optional<Solution> solve(const Mat& m, const Mat& rhs);
std::optional<Mat> inverse(const Mat& m);
// A right inverse of a surjective matrix (columns are preimages of unit vectors).
std::optional<Mat> right_inverse(const Mat& m);
// A left inverse of an injective matrix.
std::optional<Mat> left_inverse(const Mat& m);

// Subspace of k^n with a row-echelon canonical basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, Field f);  // zero subspace
  static Subspace span(std::size_t ambient, Field f, const std::vector<Vec>& vectors);
  static Subspace column_span(const Mat& m);
  static Subspace full(std::size_t ambient, Field f);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  Field field() const { return f_; }
  // Reduced basis as rows.
  const Mat& reduced() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<Vec>& spanning() const { return spanning_; }
  std::vector<Vec> basis() const;
  // Basis as columns of an n x dim matrix.
  Mat basis_matrix() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  // Coordinates of v (assumed inside) in the reduced basis.
  Vec coords(const Vec& v) const;
  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  std::size_t n_ = 0;
  Field f_{};
  std::vector<Vec> spanning_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

// V / S with coordinates on the non-pivot columns of S's reduced basis.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(std::size_t ambient, const Subspace& sub);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return n_ - sub_.dim(); }
  const Subspace& sub() const { return sub_; }
  // dim x ambient; kills exactly sub.
  const Mat& projection() const { return proj_; }
  // ambient x dim; projection * section = 1.
  const Mat& section() const { return sect_; }
  Vec project(const Vec& v) const { return proj_ * v; }

 private:
  std::size_t n_ = 0;
  Subspace sub_;
  Mat proj_, sect_;
};

}  // namespace rlab
