#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arcalg/diagram.hpp"

namespace arcalg {

// Coefficient table for the surgery moves. A move either merges two
// components, splits one in two, or reconnects lines without changing the
// component count. Inputs/outputs are classified as anticlockwise circle
// 'a', clockwise circle 'c' or line 'l'; the table maps
//   (move kind, surgered pair dotted?, in classes, out classes) -> {0,±1}.
// Candidate orientations that change the total degree are discarded before
// the table is consulted, so the table only decides coefficients among
// degree-preserving reorientations. The table is data: alternates can be
// loaded to probe sign conventions; the shipped default passes the whole
// property suite (associativity, cellularity, degree additivity) on every
// test block.
class SurgeryRules {
 public:
  static SurgeryRules defaults();

  int coeff(char kind, bool dotted, const std::string& in, const std::string& out) const;
  void set(char kind, bool dotted, const std::string& in, const std::string& out, int c);

  std::map<std::string, int> entries;  // "M:u:ac>c" -> coefficient

  static std::string key(char kind, bool dotted, const std::string& in, const std::string& out);
};

struct SurgeryStep {
  int lo = 0, hi = 0;     // doubled positions of the surgered cup-cap pair
  bool dotted = false;
  char kind = 'M';        // 'M' merge, 'S' split, 'R' reconnect
  int terms_after = 0;
};

// The result of multiplying two stacked diagrams: the common shape of all
// result terms plus the weight tuples with coefficients.
struct ProductResult {
  ArcDiagram bottom;
  std::vector<ArcDiagram> mids;
  ArcDiagram top;
  // each term: one weight symbol row per surviving level
  std::map<std::vector<std::vector<Sym>>, std::int64_t> terms;
  std::vector<SurgeryStep> trace;
};

// Stacks `upper` on top of `lower` (requires upper.bottom == lower.top
// mirrored), iterates surgery left to right, collapses the middle section.
ProductResult surgery_multiply(const Diagram& lower, const Diagram& upper,
                               const SurgeryRules& rules, bool with_trace = false);

}  // namespace arcalg
