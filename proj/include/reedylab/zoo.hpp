#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reedylab/reedy.hpp"
#include "reedylab/spans.hpp"

namespace rlab {

class ParamOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class UnknownInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ZooInstance {
  std::string name;  // "family:params"
  ReedyPtr rc;
  std::optional<ConcreteCat> concrete;
  // Set for instances built as a span category; `base` is the EI input.
  std::optional<EICat> base;
  bool direct = false, inverse = false;
};

// Families: fin_all:N, fin_inj:N, fin_surj:N (N <= 3), simplex:N (N <= 3), cyclic:N (1 <= N <= 3),
// vect_fq:q,N (q in {2,3}, N <= 2), poset_chain_meets:n (n <= 3), span_inj:N (N <= 3),
// span_poset:n (n <= 3), quiver_ab, quiver_ab_inverse, dual_numbers:1|2, cyclic_group:n (n <= 6),
// orbit_c2 (A_x = kC_2 with a C_2-fixed morphism into a degree-1 object).
ZooInstance zoo(const std::string& spec, Field f);
std::vector<std::string> zoo_families();

// EI inputs used by the span constructions.
EICat fin_inj_ei(int n);
EICat chain_poset_ei(int n);
EICat fin_all_ei(int n);

// True when plus = all or minus = all.
bool is_direct(const ReedyCat& rc);
bool is_inverse(const ReedyCat& rc);

}  // namespace rlab
