#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reedylab/reedy.hpp"

namespace rlab {

class NoPullback : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotInSkeleton : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite EI category. When `carrier` is set, objects are finite sets of the given sizes and
// fn[x][y][i] is the underlying function of morphism i (image of each element).
struct EICat {
  ConcreteCat c;
  std::optional<std::vector<int>> carrier;
  std::vector<std::vector<std::vector<std::vector<int>>>> fn;

  // G_x as label indices of C(x, x).
  std::vector<int> automorphisms(int x) const;
  // le[x][y]: C(x, y) nonempty.
  std::vector<std::vector<bool>> order() const;
};

// Concrete category of set maps between finite sets; morphisms are all maps accepted by `keep`.
EICat set_map_category(const std::vector<std::string>& names, const std::vector<int>& sizes,
                       const std::function<bool(int x, int y, const std::vector<int>& f)>& keep);

struct Cone {
  int apex;
  int left, right;  // left: apex -> z, right: apex -> u
};
// Pullback of f: z -> x and g: u -> x. Fiber product for set carriers, otherwise search.
Cone pullback(const EICat& e, int z, int u, int x, int f, int g);
// Search by enumeration of all cones; nullopt if none is universal.
std::optional<Cone> pullback_search(const EICat& e, int z, int u, int x, int f, int g);
// Verifies the universal property by enumeration.
bool is_pullback(const EICat& e, int z, int u, int x, int f, int g, const Cone& c);

struct SpanLabel {
  int apex, left, right;  // left: apex -> x, right: apex -> y
};

struct SpanCategory {
  ConcreteCat cat;
  std::vector<std::vector<std::vector<SpanLabel>>> spans;  // canonical representatives per hom set
};
SpanCategory span_category(const EICat& e);

// Degree by iterated removal of minimal elements of the hom-nonemptiness order.
std::vector<int> artinian_degree(const EICat& e);
// Linearized span category with plus = C, minus = C^op.
ReedyPtr span_reedy(const EICat& e, const SpanCategory& s, Field f);

bool is_mono(const EICat& e, int x, int y, int f);

struct TheoremEReport {
  bool ei = true, pullbacks = true, locally_finite = true, groups_invertible = true, all_mono = true;
  std::vector<std::string> witnesses;
  std::vector<std::size_t> group_orders;
  // Informational: G_z acts freely on the spans through z.
  bool free_action = true;
  bool conditions() const { return ei && pullbacks && locally_finite && groups_invertible && all_mono; }
};
TheoremEReport check_theorem_E_conditions(const EICat& e, Field f);

}  // namespace rlab
