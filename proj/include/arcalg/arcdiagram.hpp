#pragma once

#include <string>
#include <vector>

#include "arcalg/weight.hpp"

namespace arcalg {

// One (possibly dotted) arc on a single number line: a cup opens upward
// (drawn below the line), a cap downward (above the line).
struct Arc {
  int lo = 0, hi = 0;  // doubled endpoint positions, lo < hi
  bool dotted = false;
  bool operator==(const Arc& o) const { return lo == o.lo && hi == o.hi && dotted == o.dotted; }
  bool operator<(const Arc& o) const {
    return std::tie(lo, hi, dotted) < std::tie(o.lo, o.hi, o.dotted);
  }
};

// A ray to the boundary. An undotted ray forces ∨ at its vertex, a dotted
// ray forces ∧ (in type A the flag marks a plain ray sitting at an ∧; it is
// not drawn as a dot there).
struct Ray {
  int pos = 0;
  bool dotted = false;
  bool operator==(const Ray& o) const { return pos == o.pos && dotted == o.dotted; }
  bool operator<(const Ray& o) const { return std::tie(pos, dotted) < std::tie(o.pos, o.dotted); }
};

// A through strand of a crossingless matching, bottom line to top line.
struct Strand {
  int bottom = 0, top = 0;  // doubled positions on the respective lines
  bool dotted = false;
  bool operator==(const Strand& o) const {
    return bottom == o.bottom && top == o.top && dotted == o.dotted;
  }
};

enum class Side { Cup, Cap, Matching };

// A cup diagram, cap diagram or crossingless matching. For cup/cap the two
// lines coincide; a matching has caps with both endpoints on the bottom
// line, cups with both endpoints on the top line, and through strands.
struct ArcDiagram {
  Side side = Side::Cup;
  NumberLine bottom_line;
  NumberLine top_line;  // == bottom_line unless side == Matching

  std::vector<Arc> arcs;      // cup: cups; cap: caps; matching: caps (bottom line)
  std::vector<Arc> top_arcs;  // matching only: cups on the top line
  std::vector<Ray> rays;      // cup/cap only
  std::vector<Strand> strands;  // matching only

  const NumberLine& line() const { return bottom_line; }

  int cup_count() const;  // cu(t) for matchings; #arcs for cup diagrams
  int cap_count() const;  // ca(t) for matchings; #arcs for cap diagrams

  // Horizontal mirror *: swaps cup and cap diagrams; for a matching swaps
  // the two lines (caps <-> cups, strands flipped).
  ArcDiagram mirrored() const;

  bool operator==(const ArcDiagram& o) const;

  // Crossingless, a partition of the non-○/× positions, and every dot
  // admissible (connectable to the left boundary). Throws on violation.
  void validate(const std::vector<int>& ring_cross_pos2) const;

  std::string str() const;
};

// The cup diagram of a weight via the seven construction steps; type-A mode
// runs only the ∨∧ pairing and ray steps, leftover ∧ getting ∧-rays.
ArcDiagram cup_diagram(const Weight& w);
ArcDiagram cap_diagram(const Weight& w);  // mirror of cup_diagram(w)

}  // namespace arcalg
