#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reedylab/algebra.hpp"
#include "reedylab/rep.hpp"

namespace rlab {

struct ReedyStructure {
  std::vector<int> degree;
  std::vector<std::vector<Subspace>> plus, minus;  // [x][y] inside hom(x, y)

  int lambda() const;  // max degree + 1
};

// plus / minus spanned by the basis morphisms accepted by the predicates.
ReedyStructure basis_structure(const LinCat& l, std::vector<int> degree,
                               const std::function<bool(int, int, int)>& is_plus,
                               const std::function<bool(int, int, int)>& is_minus);

class RhoNotIso : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class AntisymmetryViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One z-summand plus(z,y) (x)_{A_z} minus(x,z) of the domain of rho.
struct RhoBlock {
  int z = 0;
  std::size_t offset = 0;
  Mat plus_basis;   // columns in hom(z, y)
  Mat minus_basis;  // columns in hom(x, z)
  BalancedTensor t;
  std::size_t dim() const { return t.dim(); }
};

struct RhoData {
  int x = 0, y = 0;
  Mat rho;  // dim hom(x,y) x domain_dim
  std::vector<RhoBlock> blocks;
  std::size_t domain_dim = 0;
};

// A LinCat with a Reedy structure and lazily cached derived data.
class ReedyCat {
 public:
  ReedyCat(LinCatPtr cat, ReedyStructure r);

  const LinCatPtr& cat() const { return cat_; }
  const ReedyStructure& structure() const { return r_; }
  Field field() const { return cat_->field(); }
  std::size_t size() const { return cat_->size(); }
  int degree(int x) const { return r_.degree[x]; }
  const Subspace& plus(int x, int y) const { return r_.plus[x][y]; }
  const Subspace& minus(int x, int y) const { return r_.minus[x][y]; }
  // Objects sorted by (degree, id).
  const std::vector<int>& order() const { return order_; }
  std::vector<int> objects_below(int alpha) const;
  std::vector<int> objects_of_degree(int alpha) const;
  std::vector<int> distinct_degrees() const;

  // A_x^0 on the reduced basis of plus(x, x).
  const Algebra& local(int x) const;
  // plus(z,y) as a left module over local(z)^op; minus(x,z) as a left module over local(z).
  AlgModule plus_module(int z, int y) const;
  AlgModule minus_module(int x, int z) const;

  const RhoData& rho(int x, int y) const;
  // I_alpha(x, y): image of the blocks with d(z) < alpha.
  Subspace ideal(int alpha, int x, int y) const;

 private:
  LinCatPtr cat_;
  ReedyStructure r_;
  std::vector<int> order_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<RhoData>> rho_;
  mutable std::map<int, std::shared_ptr<Algebra>> local_;
};

using ReedyPtr = std::shared_ptr<const ReedyCat>;

RhoData rho_map(const ReedyCat& rc, int x, int y);

struct ReedyReport {
  bool axiom_a = true, axiom_b = true, axiom_c = true, subcategories = true, axiom_d = true;
  std::vector<std::string> violations;
  struct Pair {
    int x, y;
    std::size_t hom_dim, domain_dim, rank;
    std::vector<std::pair<int, std::size_t>> block_dims;  // (z, dim)
  };
  std::vector<Pair> pairs;
  bool pass() const { return axiom_a && axiom_b && axiom_c && subcategories && axiom_d; }
};
ReedyReport check_reedy(const ReedyCat& rc);

struct FactorTerm {
  int z;
  Vec coords;  // quotient coordinates inside the block
  // sum of coeff * plus o minus
  struct Pure {
    Vec plus, minus;
    Scalar coeff;
  };
  std::vector<Pure> pure;
};
std::vector<FactorTerm> reedy_factorize(const ReedyCat& rc, int x, int y, const Vec& f);
Vec compose_factorization(const ReedyCat& rc, int x, int y, const std::vector<FactorTerm>& terms);

struct PartialOrders {
  // minus_le[y][x]: y <= x (chain of nonzero minus morphisms x -> ... -> y).
  // plus_le[x][y]: x <=' y (chain of nonzero plus morphisms x -> ... -> y).
  std::vector<std::vector<bool>> minus_le, plus_le;
};
PartialOrders partial_orders(const ReedyCat& rc);

struct Ideal {
  std::vector<std::vector<Subspace>> sub;  // [x][y]
};
Ideal ideal_I(const ReedyCat& rc, int alpha);
// I_x(y) = I_{d(x)}(x, y).
std::vector<Subspace> ideal_I_x(const ReedyCat& rc, int x);
// First stability violation, if any.
std::optional<std::string> check_two_sided(const LinCat& l, const Ideal& i);

struct SubReedy {
  ReedyPtr rc;
  std::vector<int> objs;  // ambient ids
};
// Full subcategory on objects of degree < alpha.
SubReedy truncate(const ReedyCat& rc, int alpha);
// C(x,y) / I_alpha(x,y) on objects of degree >= alpha.
SubReedy quotient_cat(const ReedyCat& rc, int alpha);
// Restriction of a Reedy structure to a full subcategory.
SubReedy full_sub_reedy(const ReedyCat& rc, const std::vector<int>& objs);

// Delta_x (left) or Delta^x (right): representable modulo I_{d(x)}.
Rep standard_module(const ReedyCat& rc, int x, Side side);

struct ProjectivityReport {
  bool plus_projective = true, minus_projective = true;
  std::vector<std::string> failures;
  bool pass() const { return plus_projective && minus_projective; }
};
// plus(z,y) right-projective and minus(x,z) left-projective over A_z^0 for all pairs.
ProjectivityReport projectivity_hypotheses(const ReedyCat& rc);

}  // namespace rlab
