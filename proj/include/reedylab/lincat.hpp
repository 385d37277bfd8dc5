#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reedylab/linalg.hpp"

namespace rlab {

// A finite category given by labels and a total composition table.
// comp(x, y, z)[g * |B(x,y)| + f] is the index of g o f in B(x, z).
class ConcreteCat {
 public:
  using ComposeFn = std::function<int(int x, int y, int z, int g, int f)>;

  ConcreteCat() = default;
  ConcreteCat(std::vector<std::string> objects, std::vector<std::vector<std::vector<std::string>>> labels,
              std::vector<int> identity, const ComposeFn& compose);

  std::size_t size() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& object(int x) const { return objects_[static_cast<std::size_t>(x)]; }
  std::size_t hom_size(int x, int y) const { return labels_[x][y].size(); }
  const std::vector<std::string>& labels(int x, int y) const { return labels_[x][y]; }
  int identity(int x) const { return identity_[x]; }
  int compose(int x, int y, int z, int g, int f) const {
    return comp_[x][y][z][static_cast<std::size_t>(g) * hom_size(x, y) + static_cast<std::size_t>(f)];
  }
  int find_object(const std::string& name) const;

 private:
  std::vector<std::string> objects_;
  std::vector<std::vector<std::vector<std::string>>> labels_;
  std::vector<int> identity_;
  std::vector<std::vector<std::vector<std::vector<int>>>> comp_;
};

struct AxiomReport {
  bool pass = true;
  std::string violation;  // first offending triple, human readable
};

// Associativity, units, and skeletality by full enumeration.
AxiomReport check_concrete_axioms(const ConcreteCat& c);

// Sparse coordinate vector.
using SVec = std::vector<std::pair<int, Scalar>>;

// Finite k-linear category as structure constants on basis-labeled hom spaces.
class LinCat : public std::enable_shared_from_this<LinCat> {
 public:
  LinCat() = default;
  LinCat(Field f, std::vector<std::string> objects, std::vector<std::vector<std::vector<std::string>>> labels);

  Field field() const { return field_; }
  std::size_t size() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& object(int x) const { return objects_[static_cast<std::size_t>(x)]; }
  int find_object(const std::string& name) const;
  std::size_t dim(int x, int y) const { return labels_[x][y].size(); }
  const std::vector<std::string>& labels(int x, int y) const { return labels_[x][y]; }

  // Structure constants: g in B(y,z), f in B(x,y); result in hom(x,z).
  void set_compose(int x, int y, int z, int g, int f, SVec v);
  const SVec& compose_basis(int x, int y, int z, int g, int f) const {
    return comp_[x][y][z][static_cast<std::size_t>(g) * dim(x, y) + static_cast<std::size_t>(f)];
  }
  void set_identity(int x, Vec v) { id_[x] = std::move(v); }
  const Vec& identity(int x) const { return id_[x]; }

  Vec compose(int x, int y, int z, const Vec& g, const Vec& f) const;
  // Matrix of f |-> g o f from hom(x,y) to hom(x,z).
  Mat left_mult(int x, int y, int z, const Vec& g) const;
  // Matrix of g |-> g o f from hom(y,z) to hom(x,z).
  Mat right_mult(int x, int y, int z, const Vec& f) const;

  Vec basis_vec(int x, int y, int i) const { return unit_vec(dim(x, y), static_cast<std::size_t>(i), field_); }

  // A morphism set generating the category under composition and linear span.
  struct Gen {
    int src, dst;
    Vec v;
  };
  const std::vector<Gen>& generators() const;
  // Cached opposite category; op()->op() is this category again when it is shared-owned.
  std::shared_ptr<const LinCat> op() const;

 private:
  Field field_{};
  std::vector<std::string> objects_;
  std::vector<std::vector<std::vector<std::string>>> labels_;
  std::vector<std::vector<std::vector<std::vector<SVec>>>> comp_;
  std::vector<Vec> id_;
  mutable std::shared_ptr<std::vector<Gen>> gens_;
  mutable std::shared_ptr<const LinCat> op_;
  mutable std::weak_ptr<const LinCat> op_back_;
};

using LinCatPtr = std::shared_ptr<const LinCat>;

class AxiomViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Basis = labels, structure constants are the 0/1 vectors of the table.
// Throws AxiomViolation naming the offending triple when c fails its axioms.
LinCatPtr linearize(const ConcreteCat& c, Field f);

// Full bilinear associativity and unit check.
AxiomReport check_category_axioms(const LinCat& l);

LinCatPtr opposite(const LinCat& l);
// Full subcategory on the listed objects (order kept).
LinCatPtr full_subcategory(const LinCat& l, const std::vector<int>& objs);

// Subcategory on `objs` whose hom (i,j) is the given subspace of hom(objs[i], objs[j]).
// Basis vectors are the reduced bases; labels reuse ambient labels for unit vectors.
struct SubCat {
  LinCatPtr cat;
  std::vector<int> objs;
  // embed[i][j]: ambient coordinates of the basis (columns).
  std::vector<std::vector<Mat>> embed;
};
SubCat make_subcategory(const LinCat& l, const std::vector<int>& objs,
                        const std::vector<std::vector<Subspace>>& homs);

// M (x)_A N for a right A-space M and left A-space N.
// Actions are matrices on column vectors: m.a = right[a] * m, a.n = left[a] * n.
struct BalancedTensor {
  std::size_t dim_m = 0, dim_n = 0;
  Subspace balancing;  // inside M (x)_k N, index i * dim_n + j
  QuotientSpace quotient;
  std::size_t dim() const { return quotient.dim(); }
  // Class of e_i (x) e_j.
  Vec pure(std::size_t i, std::size_t j) const { return quotient.projection().col(i * dim_n + j); }
};
BalancedTensor balanced_tensor(std::size_t dim_m, const std::vector<Mat>& right, std::size_t dim_n,
                               const std::vector<Mat>& left, Field f);

}  // namespace rlab
