#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "reedylab/homalg.hpp"

namespace rlab {

class FactorizationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class OracleMissing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// C_{alpha+1} seen over C_alpha: `rc` has maximal degree alpha, `base` is the truncation below it.
struct Level {
  ReedyPtr rc;
  int alpha = 0;
  std::vector<int> top;  // objects of degree alpha
  SubReedy base;         // objs are ids of rc
};
Level make_level(ReedyPtr rc);

// Ind V(x) -> coInd V(x) for a module V over the base, with A_x^0-module structures.
struct Induced {
  int x = 0;
  LatchingData d;  // latch spans Ind V(x); match_basis spans coInd V(x)
  Mat match;       // flattened match basis as columns
  AlgModule ind, coind;
  Mat tau;
};
Induced induced(const Level& lv, const Rep& v, int x);
// Ind u(x) and coInd u(x) for u: V -> W.
Mat ind_map(const Level& lv, const Induced& iv, const Induced& iw, const RepMap& u);
Mat coind_map(const Level& lv, const Induced& iv, const Induced& iw, const RepMap& u);

// A module over C_{alpha+1} as base data plus a factorization of tau at each top object.
struct FiberPoint {
  Rep base;
  std::vector<AlgModule> value;  // indexed like Level::top
  std::vector<Mat> l, m;
  bool operator==(const FiberPoint& o) const;
};
FiberPoint fiber_encode(const Level& lv, const Rep& y);
// Throws FactorizationMismatch when m l != tau or the maps are not A_x^0-linear.
Rep fiber_decode(const Level& lv, const FiberPoint& p);

enum class PointKind { Initial, Terminal, Mixed };
// Ind V(x) with (1, tau), coInd V(x) with (tau, 1), or Ind V(x) + coInd V(x) with ((1, tau), (0, 1)).
FiberPoint standard_point(const Level& lv, const Rep& v, PointKind kind);

// Cocartesian map Y -> u_!(Y) over u, or cartesian map u^*(Z) -> Z over u.
struct Lift {
  Rep rep;
  RepMap map;
};
Lift pushforward(const Level& lv, const RepMap& u, const Rep& v, const Rep& w, const Rep& y);
Lift pullback_star(const Level& lv, const RepMap& u, const Rep& v, const Rep& w, const Rep& z);

// post o h o pre = target; absent pre or post means identity.
struct MapConstraint {
  std::optional<RepMap> pre, post;
  RepMap target;
};
struct MapSolution {
  std::optional<RepMap> particular;
  std::vector<RepMap> kernel;
};
// Natural maps h: A -> B with prescribed components on some objects and the given constraints.
MapSolution solve_maps(const Rep& a, const Rep& b, const std::vector<std::pair<int, Mat>>& fixed,
                       const std::vector<MapConstraint>& eqs = {});
// Maps in the fiber: identity on the base. An affine space; `kernel` spans its directions.
MapSolution fiber_homs(const Level& lv, const Rep& a, const Rep& b);

struct UniversalityReport {
  std::size_t cones = 0, mediated = 0, unique = 0, skipped = 0;
  bool pass() const { return cones > 0 && mediated == cones && unique == cones; }
};
UniversalityReport check_cocartesian(const Level& lv, const RepMap& u, const Rep& v, const Rep& w, const Rep& y,
                                     const Lift& lift, std::mt19937_64& rng, std::size_t cones = 20);
UniversalityReport check_cartesian(const Level& lv, const RepMap& u, const Rep& v, const Rep& w, const Rep& z,
                                   const Lift& lift, std::mt19937_64& rng, std::size_t cones = 20);

struct AdjunctionReport {
  bool nonempty_left = false, nonempty_right = false;
  std::size_t dim_left = 0, dim_right = 0;  // Hom(u_! Y, Z) and Hom(Y, u^* Z)
  std::size_t samples = 0, round_trips = 0;
  bool pass() const {
    return nonempty_left == nonempty_right && dim_left == dim_right && round_trips == samples;
  }
};
AdjunctionReport check_adjunction(const Level& lv, const RepMap& u, const Rep& v, const Rep& w, const Rep& y,
                                  const Rep& z, std::mt19937_64& rng, std::size_t samples = 4);

// f = right o co.map (right in the W-fiber) and f = ca.map o left (left in the V-fiber).
struct FiberFactorization {
  Lift co, ca;
  RepMap right, left;
  std::size_t right_freedom = 0, left_freedom = 0;
};
FiberFactorization fiber_factor(const Level& lv, const Rep& y, const Rep& z, const RepMap& f);

// Per-object factorization g = right o left through `mid`.
struct ModFactorization {
  AlgModule mid;
  Mat left, right;
};
using FactorOracle =
    std::function<ModFactorization(const Algebra&, const AlgModule& p, const AlgModule& q, const Mat& g)>;
// P -> P + (A (x) Q) -> Q.
ModFactorization proj_all_factor(const Algebra& a, const AlgModule& p, const AlgModule& q, const Mat& g);
// P -> Q + Hom_k(A, P) -> Q, with (b.phi)(a) = phi(ab).
ModFactorization all_inj_factor(const Algebra& a, const AlgModule& p, const AlgModule& q, const Mat& g);
// P -> P + Q -> Q.
ModFactorization all_all_factor(const Algebra& a, const AlgModule& p, const AlgModule& q, const Mat& g);

enum class PairTag { ProjAll, AllInj, AllAll, User };
std::string to_string(PairTag t);

// Per-object pairs (C_x, D_x) with factorization oracles, indexed by object.
struct ClassPair {
  std::string name;
  PairTag tag = PairTag::User;
  ClassFamily left, right;
  std::vector<FactorOracle> factor;
};
ClassPair proj_all_pair(std::size_t n);
ClassPair all_inj_pair(std::size_t n);
ClassPair all_all_pair(std::size_t n);

struct WfsFactorization {
  Rep mid;
  RepMap left, right;
  bool composite = false, left_mono = false, right_epi = false;
  PhiPsiResult coker_left, ker_right;  // coker(left) against C, ker(right) against D
  bool valid() const { return composite && left_mono && right_epi && coker_left.in_phi && ker_right.in_psi; }
};
// Level by level: pushforward along the previous left factor, pullback along the previous right factor,
// then the per-object oracles in the fiber. Throws OracleMissing or std::domain_error (HYPOTHESIS_FAILED).
WfsFactorization glue_factorization(const ReedyCat& rc, const Rep& m, const Rep& n, const RepMap& f,
                                    const ClassPair& pair);

// Special precover 0 -> K -> E -> M -> 0 and special preenvelope 0 -> M -> E' -> C' -> 0.
struct Approximations {
  WfsFactorization precover, preenvelope;
  Rep kernel, cokernel;  // K and C'
};
Approximations approximations(const ReedyCat& rc, const Rep& m, const ClassPair& pair);

// Deterministic random modules with dims <= 3.
std::vector<Rep> battery(const ReedyCat& rc, std::size_t count, std::uint64_t seed);
AlgModule random_alg_module(const Algebra& a, std::mt19937_64& rng, std::size_t max_dim = 3);

struct CotorsionReport {
  std::string pair;
  std::size_t battery = 0, factorizations = 0, valid = 0;
  // Ext^1(Phi part, Psi part) over all battery pairs; a sample, not a proof.
  std::size_t ext_pairs = 0, ext_violations = 0;
  std::string orthogonality = "SAMPLED";
  std::size_t squares = 0, lifted = 0;
  std::vector<bool> in_phi, in_psi;  // battery membership in Phi(C) and Psi(D)
  std::vector<std::string> witnesses;
  bool pass() const { return valid == factorizations && ext_violations == 0 && lifted == squares; }
};
CotorsionReport cotorsion_glue_check(const ReedyCat& rc, const ClassPair& pair, std::size_t battery_size,
                                     std::uint64_t seed);

struct CompatReport {
  bool pass = true;
  std::size_t samples = 0;
  std::vector<std::string> witnesses;  // "(y, x, dim S)"
};
// plus(y,x) (x)_{A_y} S stays in the family.
CompatReport check_cocompatible(const ReedyCat& rc, const ClassFamily& s, std::uint64_t seed);
// Hom_{A_y}(minus(x,y), S) stays in the family.
CompatReport check_compatible(const ReedyCat& rc, const ClassFamily& s, std::uint64_t seed);
// The A_x^0-modules above, for y != x.
AlgModule plus_tensor(const ReedyCat& rc, int y, int x, const AlgModule& s);
AlgModule minus_hom(const ReedyCat& rc, int y, int x, const AlgModule& s);

// Per-object Hovey triples with oracles for (Q cap W, R) and (Q, W cap R).
struct HoveyTriple {
  std::string name;
  ClassFamily q, w, r;
  ClassPair trivial_cof, trivial_fib;
  bool hereditary = false;
};
// Q = all, W = projectives, R = all with PROJ_ALL and ALL_INJ oracles; needs self-injective local algebras.
HoveyTriple stable_triple(std::size_t n);
HoveyTriple trivial_triple(std::size_t n);

struct HoveyReport {
  CompatReport cocompatible, compatible;
  CotorsionReport cof, fib;
  bool phi_identity = true, psi_identity = true;
  std::size_t sequences = 0, thick_violations = 0;
  std::size_t probes = 0, probes_in_w = 0;  // values in W on battery and factorization modules
  std::optional<bool> hereditary_closure;
  std::vector<std::string> witnesses;
  bool pass() const {
    return cocompatible.pass && compatible.pass && cof.pass() && fib.pass() && phi_identity && psi_identity &&
           thick_violations == 0 && hereditary_closure.value_or(true);
  }
};
HoveyReport hovey_glue_check(const ReedyCat& rc, const HoveyTriple& t, std::size_t battery_size, std::uint64_t seed);

// Y(x) in S_x for every x.
bool values_in(const ReedyCat& rc, const Rep& y, const ClassFamily& s);

}  // namespace rlab
