#pragma once

#include <optional>
#include <random>
#include <vector>

#include "reedylab/lincat.hpp"

namespace rlab {

// Finite-dimensional algebra by structure constants on a basis e_0..e_{n-1}.
struct Algebra {
  Field field{};
  std::size_t n = 0;
  std::vector<std::vector<Vec>> mult;  // mult[i][j] = e_i e_j
  Vec one;
  // Set when the basis is a finite group under the product.
  std::optional<std::size_t> group_order;

  Vec product(const Vec& a, const Vec& b) const;
  // Matrix of b |-> e_i b (left) and b |-> b e_i (right).
  Mat left_regular(std::size_t i) const;
  Mat right_regular(std::size_t i) const;
  Algebra opposite() const;
  // Maschke applies: group basis with invertible order.
  bool known_semisimple() const { return group_order && field.invertible(*group_order); }
};

// The subalgebra of l(x, x) spanned by the basis of `sub` (rows of its reduced basis).
Algebra endo_algebra(const LinCat& l, int x, const Subspace& sub);

// Left module over an Algebra: act[i] is the action of e_i.
struct AlgModule {
  std::size_t dim = 0;
  std::vector<Mat> act;
  Mat action(const Vec& a) const;
};

AlgModule regular_module(const Algebra& a);
// Free module A^r.
AlgModule free_alg_module(const Algebra& a, std::size_t r);
// Linear dual of a left A-module as a left A^op-module.
AlgModule dual(const AlgModule& m);
bool is_alg_module(const Algebra& a, const AlgModule& m);
// Basis of Hom_A(M, N) as matrices dim N x dim M.
std::vector<Mat> alg_hom(const Algebra& a, const AlgModule& m, const AlgModule& n);

// Projective iff the multiplication A (x) M -> M has an A-linear section.
bool is_projective(const Algebra& a, const AlgModule& m);
// Injective iff the dual is projective over A^op.
bool is_injective(const Algebra& a, const AlgModule& m);

// A witness basis m_1..m_r with A^r -> M bijective; randomized search.
struct FreeWitness {
  std::size_t rank = 0;
  std::vector<Vec> basis;
};
std::optional<FreeWitness> find_free_basis(const Algebra& a, const AlgModule& m, std::mt19937_64& rng,
                                           int tries = 24);
// A witness m with a |-> a m split injective; randomized search.
std::optional<Vec> find_free_summand(const Algebra& a, const AlgModule& m, std::mt19937_64& rng, int tries = 24);

// Jacobson radical: trace-form kernel in characteristic 0, zero under Maschke.
// nullopt when neither method applies.
std::optional<Subspace> radical(const Algebra& a);
// dim Z(A / rad A); nullopt when the radical is unavailable.
std::optional<std::size_t> semisimple_center_dim(const Algebra& a);
// Number of conjugacy classes when the basis is a group.
std::optional<std::size_t> conjugacy_classes(const Algebra& a);

}  // namespace rlab
