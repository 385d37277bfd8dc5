#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "reedylab/lincat.hpp"

namespace rlab {

enum class Side { Left, Right };

// Finite-dimensional module: one space per object, one matrix per basis morphism f: x -> y.
// Left: act is dim(y) x dim(x).  Right: act is dim(x) x dim(y) (m |-> m.f).
struct Rep {
  LinCatPtr cat;
  Side side = Side::Left;
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::vector<Mat>>> act;  // [x][y][i]

  Field field() const { return cat->field(); }
  std::size_t size() const { return dims.size(); }
  std::size_t total_dim() const;
  // Action of an arbitrary vector of hom(x, y).
  Mat action(int x, int y, const Vec& v) const;
  bool is_zero() const { return total_dim() == 0; }
  bool operator==(const Rep& o) const { return side == o.side && dims == o.dims && act == o.act; }
};

// Matrices per object; source and target are passed alongside.
struct RepMap {
  std::vector<Mat> m;
  bool operator==(const RepMap& o) const { return m == o.m; }
};

class NotASubmodule : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checks functoriality on all basis pairs and identities; returns the first violation.
std::optional<std::string> check_functorial(const Rep& r);
bool is_natural(const Rep& src, const Rep& tgt, const RepMap& f);

Rep zero_rep(LinCatPtr cat, Side side = Side::Left);
Rep representable(LinCatPtr cat, int x, Side side);
// Direct sum of left representables at the listed objects.
Rep free_module(LinCatPtr cat, const std::vector<int>& gens);
Rep direct_sum(const Rep& a, const Rep& b);
struct SumMaps {
  RepMap inl, inr, pl, pr;
};
SumMaps direct_sum_maps(const Rep& a, const Rep& b);

RepMap identity_map(const Rep& r);
RepMap zero_map(const Rep& src, const Rep& tgt);
RepMap compose(const RepMap& g, const RepMap& f);
RepMap add(const RepMap& a, const RepMap& b);
RepMap scale(const Scalar& s, const RepMap& a);
bool is_mono(const RepMap& f);
bool is_epi(const Rep& tgt, const RepMap& f);
bool is_iso(const RepMap& f);
bool is_zero(const RepMap& f);

struct SubQuotient {
  Rep rep;
  RepMap map;  // inclusion (sub) or projection (quotient)
  std::vector<QuotientSpace> quotients;  // quotient only
};
// Sub-representation on action-stable subspaces.
SubQuotient sub_rep(const Rep& m, const std::vector<Subspace>& subs);
SubQuotient quotient_rep(const Rep& m, const std::vector<Subspace>& subs);
SubQuotient kernel_rep(const Rep& src, const RepMap& f);
SubQuotient cokernel_rep(const Rep& tgt, const RepMap& f);
SubQuotient image_rep(const Rep& tgt, const RepMap& f);

// Basis of Hom(M, N), solving naturality on the category generators.
std::vector<RepMap> hom_reps(const Rep& m, const Rep& n);
std::size_t hom_dim(const Rep& m, const Rep& n);
// Some isomorphism M -> N if one exists (searched inside the Hom basis).
std::optional<RepMap> find_iso(const Rep& m, const Rep& n, std::mt19937_64& rng, int tries = 12);

// Right module over C as a left module over C^op, and back.
Rep to_left_over_op(const Rep& r);
Rep to_right_from_op(const Rep& l);
// Linear dual with transposed actions: left over C becomes left over C^op, right over C becomes left over C.
Rep dual(const Rep& r);
// The same data read as a right module over C^op (left) or a left module over C^op (right).
Rep flip_side(const Rep& r);

// Restriction to a full subcategory (objs in the order of the subcategory).
Rep restrict_rep(const Rep& r, LinCatPtr sub, const std::vector<int>& objs);
RepMap restrict_map(const RepMap& f, const std::vector<int>& objs);
// Restriction along a subcategory with embedded hom bases.
Rep restrict_along(const Rep& r, const SubCat& d);

// Right (x)_D left, with D given as a subcategory; relations on D's generators.
struct TensorSpace {
  std::vector<std::size_t> offsets;  // block of object d.objs[i] inside the direct sum
  std::size_t total = 0;
  QuotientSpace q;
  std::size_t dim() const { return q.dim(); }
};
TensorSpace tensor_over(const SubCat& d, const Rep& right, const Rep& left);
// Whole category.
SubCat whole(const LinCatPtr& cat);

Scalar random_scalar(std::mt19937_64& rng, Field f, int spread = 2);
Vec random_vec(std::mt19937_64& rng, std::size_t n, Field f);
Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, Field f);
// Quotient of a free module by randomly generated relations, dims <= max_dim.
Rep random_rep(LinCatPtr cat, std::mt19937_64& rng, std::size_t max_dim = 3, Side side = Side::Left);

// Action maps along the category generators, oriented as maps of spaces: M(from) -> M(to).
struct Edge {
  int from, to;
  Mat a;
};
std::vector<Edge> generator_edges(const Rep& r);
// Submodule generated by elements (object, vector) of m.
std::vector<Subspace> generated_submodule(const Rep& m, const std::vector<std::pair<int, Vec>>& elems);

}  // namespace rlab
