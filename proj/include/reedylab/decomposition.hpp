#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reedylab/homalg.hpp"
#include "reedylab/spans.hpp"

namespace rlab {

enum class Criterion { CentralIdempotent, Nondegenerate, SpanEI };
std::string to_string(Criterion c);

struct Condition {
  std::string name;
  bool pass = true;
  std::vector<std::string> witnesses;
  // Which route decided the condition, e.g. "group-algebra" for the Maschke shortcut.
  std::string route;
};

struct CentralIdempotent {
  Vec e, f;                     // in hom(x, x)
  std::size_t solution_dim = 0; // dimension of the homogeneous solution space
  bool corner_equals_ideal = false;  // e A_x e == I_x(x, x)
  bool delta_iso = false;            // C f_x -> C1_x -> Delta_x bijective
};
// Solves e in I_x(x,x) with e b = b = b e on a basis of I_x(x,x) and e central in A_x = hom(x,x).
std::optional<CentralIdempotent> find_central_idempotent(const ReedyCat& rc, int x);

struct DecompositionVerdict {
  Criterion criterion = Criterion::Nondegenerate;
  bool dual = false;
  std::vector<Condition> conditions;
  std::vector<std::optional<CentralIdempotent>> idempotents;  // Thm C only
  std::vector<std::vector<std::size_t>> orthogonality;        // dim Hom(Delta_x, Delta_y)
  std::vector<std::size_t> end_dims, local_dims;
  std::vector<bool> delta_projective;
  bool pass() const;
};

DecompositionVerdict check_theorem_C(const ReedyCat& rc);
DecompositionVerdict check_theorem_D(const ReedyCat& rc);
DecompositionVerdict check_theorem_D_dual(const ReedyCat& rc);

// phi_g for g in plus(x, y) as a (dim minus(y,x) * dim A_x^0) vector; both formulations of (d).
struct NondegeneracyReport {
  bool injective_map = true, pairing_kernel_zero = true;
};
NondegeneracyReport nondegeneracy(const ReedyCat& rc, int x, int y);
NondegeneracyReport nondegeneracy_dual(const ReedyCat& rc, int x, int y);

struct GeneratorReport {
  std::vector<std::vector<std::size_t>> orthogonality;
  std::vector<bool> projective_ext;    // Ext^1(Delta_x, Omega Delta_x) = 0
  std::vector<bool> projective_split;  // section of C1_x -> Delta_x
  std::vector<bool> representable_decomposes;
  bool diagonal() const;
  bool pass() const;
};
GeneratorReport verify_orthogonal_projective_generators(const ReedyCat& rc);

class GeneratorsNotVerified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MoritaData {
  std::vector<AlgModule> family;  // Hom(Delta_x, M) as A_x^0-modules
  std::vector<Mat> family_basis;  // as subspaces of M(x), by evaluation at the class of 1_x
  Rep reconstruction;             // sum_x Delta_x (x)_{A_x^0} Hom(Delta_x, M)
  RepMap evaluation;              // reconstruction -> M
  bool reconstructed = false;     // evaluation is a natural isomorphism
};
// Pass a verified report to skip re-verification.
MoritaData morita_report(const ReedyCat& rc, const Rep& m, const GeneratorReport* verified = nullptr);

struct TheoremEVerdict {
  TheoremEReport conditions;
  ReedyPtr rc;  // set when the conditions pass
  std::optional<ReedyReport> reedy;
  std::optional<DecompositionVerdict> decomposition;
  bool pass() const;
};
TheoremEVerdict check_theorem_E(const EICat& e, Field f);

}  // namespace rlab
