#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "arcalg/arcdiagram.hpp"
#include "arcalg/weight.hpp"

namespace arcalg {

// The multiplication engine works on "stacks": several number lines drawn
// bottom to top, with arcs below the bottom line, above the top line, and in
// the strips in between. A basis diagram aλb is a one-level stack, a
// bimodule diagram aλtμb a two-level stack, and gluing two diagrams for a
// product concatenates their stacks.

enum class SArcKind : std::uint8_t {
  CupArc,   // both endpoints on `level`, drawn below it
  CapArc,   // both endpoints on `level`, drawn above it
  Through,  // from (level, a) up to (level+1, b)
  RayDown,  // from (level, a) to the lower boundary
  RayUp,    // from (level, a) to the upper boundary
};

struct SArc {
  SArcKind kind;
  int level;
  int a = -1, b = -1;  // slot indices (not positions); see kind
  bool dotted = false;
};

// Orientation labels per level and slot. Ring/Cross slots keep their symbol;
// Diamond stays Diamond in stored labels (its ∨/∧ reading is existential and
// recomputed on demand); all other slots carry Up or Down.
using Labels = std::vector<std::vector<Sym>>;

struct Component {
  std::vector<std::pair<int, int>> vertices;  // (level, slot)
  std::vector<int> arcs;                      // indices into Stack::arcs
  bool closed = false;                        // circle (no rays)
  int cups = 0, caps = 0;                     // counts of CupArc/CapArc members
  bool touches_level(int lv) const {
    for (auto& [l, s] : vertices)
      if (l == lv) return true;
    return false;
  }
};

class Stack {
 public:
  std::vector<NumberLine> lines;      // one per level
  std::vector<std::vector<Sym>> base; // Ring/Cross/Diamond skeleton per level
  std::vector<SArc> arcs;

  int levels() const { return static_cast<int>(lines.size()); }
  int pos(int level, int slot) const { return lines[level].pos2[slot]; }

  // Builds vertex->arc adjacency; every non-○/× vertex must have exactly one
  // arc below and one above (stacks are always closed diagrams here).
  void finalize();

  int arc_below(int level, int slot) const { return below_[level][slot]; }
  int arc_above(int level, int slot) const { return above_[level][slot]; }

  std::vector<Component> components() const;
  Component component_of(int level, int slot) const;

  // All orientations of one component consistent with the arc rules, as
  // stored-label assignments (Diamond kept as Diamond). A circle has 0 or 2,
  // a line 0 or 1. If `fixed` is non-null its Up/Down entries are respected.
  std::vector<std::map<std::pair<int, int>, Sym>> component_orientations(
      const Component& c, const Labels* fixed = nullptr) const;

  // True if the given stored labels orient every component.
  bool is_oriented(const Labels& l) const;

  // Sum of arc degrees: a cup or cap contributes 1 iff its rightmost
  // endpoint is labeled ∨; rays and through strands contribute 0.
  int degree(const Labels& l) const;
  int arc_degree(const SArc& a, const Labels& l) const;
  int component_degree(const Component& c, const Labels& l) const;

  // 'a' anticlockwise circle, 'c' clockwise circle, 'l' line; classification
  // by the label of a rightmost vertex (∨ = clockwise). Throws if rightmost
  // vertices disagree.
  char classify(const Component& c, const Labels& l) const;

 private:
  std::vector<std::vector<int>> below_, above_;
};

}  // namespace arcalg
