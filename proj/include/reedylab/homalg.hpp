#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "reedylab/reedy.hpp"

namespace rlab {

// A greedy generating set (object, element) of a left module.
std::vector<std::pair<int, Vec>> module_generators(const Rep& m);

// Offsets of the summands C(g_j, y) inside (sum_j C1_{g_j})(y).
std::vector<std::size_t> free_offsets(const LinCat& l, const std::vector<int>& gens, int y);
// The map sum_j C1_{g_j} -> target sending the j-th generator to elems[j] in target(g_j).
RepMap free_map(const Rep& free, const std::vector<int>& gens, const std::vector<Vec>& elems, const Rep& target);

// Free resolution P2 -> P1 -> P0 -> M of a left module, truncated at `levels` steps.
struct Resolution {
  Rep m;
  std::vector<std::vector<int>> gens;    // gens[i]: objects of P_i
  std::vector<std::vector<Vec>> images;  // images[0] in M, images[i] in P_{i-1}
  std::vector<Rep> p;
  std::vector<RepMap> d;                 // d[0]: P0 -> M, d[i]: P_i -> P_{i-1}
  std::vector<Rep> syzygy;               // syzygy[i] = ker d[i] as a sub-module of P_i
  std::vector<RepMap> syzygy_incl;
};
Resolution resolve(const Rep& m, int levels = 3);

// P1 -> P0 -> M with the syzygy of M.
struct ProjPresentation {
  std::vector<int> g0, g1;
  Rep p0, p1, omega;
  RepMap epi, d1, omega_incl;
};
ProjPresentation proj_presentation(const Rep& m);

struct ExtResult {
  std::size_t dim = 0;
  std::vector<Vec> classes;  // cocycles in sum_k N(g1_k) spanning a complement of the coboundaries
};
// Ext^1(M, N); right modules are handled through the opposite category.
ExtResult ext1(const Rep& m, const Rep& n);
// Tor_1(M, N) for a right module M and a left module N.
std::size_t tor1(const Rep& m_right, const Rep& n_left);
// dim (M (x)_C N).
std::size_t tensor_dim(const Rep& m_right, const Rep& n_left);

// Split test for P0 -> M (M a summand of a finite sum of representables).
bool is_projective_rep(const Rep& m);
// Injective iff the linear dual is projective.
bool is_injective_rep(const Rep& m);

// The minus subcategory (all objects, hom = minus) and the plus subcategory.
SubCat minus_subcat(const ReedyCat& rc);
SubCat plus_subcat(const ReedyCat& rc);
// C (x)_{C^-} V for a left module V over the minus subcategory.
Rep induce_minus(const ReedyCat& rc, const SubCat& minus, const Rep& v);
// A_x^0 as a module over the minus subcategory, concentrated at x.
Rep local_at(const ReedyCat& rc, const SubCat& minus, int x);

// Delta_z (x)_{A_z^0} N for a left A_z^0-module N; A_z^0 acts on Delta_z by precomposition.
Rep standard_tensor(const ReedyCat& rc, int z, const AlgModule& n);
struct StandardTensor {
  Rep rep;
  std::vector<QuotientSpace> delta_q;  // Delta_z(w) as a quotient of hom(z, w)
  std::vector<BalancedTensor> t;       // Delta_z(w) (x) N
};
StandardTensor standard_tensor_data(const ReedyCat& rc, int z, const AlgModule& n);

struct FiltrationFactor {
  int level;                   // degree alpha
  Rep factor;                  // sum over d(z) = alpha of Delta_z (x)_{A_z} minus(x, z)
  Rep layer;                   // I_{alpha+1}(x, -) / I_alpha(x, -)
};
// Requires the projectivity hypotheses; throws std::domain_error (HYPOTHESIS_FAILED) otherwise.
std::vector<FiltrationFactor> filtration_of_representable(const ReedyCat& rc, int x);

class NotSemisimpleUnsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
struct IrreducibleCount {
  std::vector<std::size_t> per_object;
  std::size_t total = 0;
  std::vector<std::optional<std::size_t>> conjugacy_classes;  // informational, group bases only
};
// idempotents[x] (optional): orthogonal primitive idempotents of A_x^0 in local coordinates.
IrreducibleCount count_irreducibles(const ReedyCat& rc,
                                    const std::vector<std::optional<std::vector<Vec>>>& idempotents = {});

// Latching and matching data of Y at x, over the truncation below d(x).
struct LatchingData {
  int x = 0, alpha = 0;
  SubCat below;        // full subcategory of degree < alpha
  TensorSpace latch;   // 1_x C (x)_{C_alpha} Y
  Mat l;               // latch -> Y(x)
  std::size_t latch_plus_dim = 0;  // 1_x C^+ (x)_{C^+_alpha} Y
  bool latch_routes_iso = true;    // comparison map plus-route -> full route bijective
  std::vector<RepMap> match_basis; // basis of Hom_{C_alpha}(C(x,-)|, Y|)
  Mat m;                           // Y(x) -> match
  std::size_t match_minus_dim = 0;
  bool match_routes_iso = true;
  Mat tau;                         // computed from Res Y alone
  bool tau_consistent = true;      // m l = tau
  Side side = Side::Left;
};
LatchingData latching_matching(const ReedyCat& rc, const Rep& y, int x);
// A_x^0-module structures on coker(l) and ker(m).
AlgModule latching_cokernel(const ReedyCat& rc, const Rep& y, const LatchingData& d);
AlgModule matching_kernel(const ReedyCat& rc, const Rep& y, const LatchingData& d);
// A_x^0-module Y(x).
AlgModule value_module(const ReedyCat& rc, const Rep& y, int x);

// Per-object class of A_x^0-modules.
using ModClassFn = std::function<bool(const Algebra&, const AlgModule&)>;
struct ClassFamily {
  std::string name;
  std::vector<ModClassFn> member;  // indexed by object
};
ClassFamily uniform_family(const std::string& name, std::size_t n, ModClassFn f);
ModClassFn all_modules();
ModClassFn projective_modules();
ModClassFn injective_modules();
ModClassFn zero_modules();

struct PhiPsiResult {
  bool in_phi = true, in_psi = true;
  bool routes_agree = true;  // latching route vs Tor/Ext route
  std::vector<std::string> witnesses;
};
PhiPsiResult phi_psi_membership(const ReedyCat& rc, const Rep& y, const ClassFamily& s);

// End, Hom and Ext^1 properties of the standard modules of one side.
struct StandardSuiteReport {
  Side side = Side::Left;
  bool hypothesis = true;  // plus right-projective (left side) or minus left-projective (right side)
  bool end_dims = true;    // dim End = dim A_x^0
  bool ring_map = true;    // evaluation at 1_x is an anti-isomorphism (left) or isomorphism (right)
  bool hom_vanishing = true, ext_vanishing = true;
  std::vector<std::vector<std::size_t>> hom, ext;
  std::vector<std::string> witnesses;
  bool pass() const { return end_dims && ring_map && hom_vanishing && ext_vanishing; }
};
StandardSuiteReport check_standard_modules(const ReedyCat& rc, Side side);

}  // namespace rlab
