#pragma once

#include <vector>

#include "arcalg/arcdiagram.hpp"
#include "arcalg/stack.hpp"
#include "arcalg/weight.hpp"

namespace arcalg {

// A closed diagram: cup diagram, k weights joined by k-1 crossingless
// matchings, cap diagram. k=1 is an (oriented) circle diagram aλb, k=2 a
// ΛΓ-circle diagram aλtμb.
struct Diagram {
  ArcDiagram bottom;               // Side::Cup over weights.front().line
  std::vector<Weight> weights;
  std::vector<ArcDiagram> mids;    // matchings between consecutive lines
  ArcDiagram top;                  // Side::Cap over weights.back().line

  static Diagram circle(const ArcDiagram& a, const Weight& lambda, const ArcDiagram& b);
  static Diagram bimodule(const ArcDiagram& a, const Weight& lambda, const ArcDiagram& t,
                          const Weight& mu, const ArcDiagram& b);

  void check_shapes() const;  // sides/lines compatible; throws
};

// The stack of a diagram together with its stored labels.
struct BuiltStack {
  Stack stack;
  Labels labels;
};
BuiltStack build_stack(const Diagram& d);

bool is_oriented(const Diagram& d);
int degree(const Diagram& d);  // requires is_oriented(d)

// Component census of the glued diagram. Each entry reports circle/line,
// arc counts and (when orientable under d's weights) the orientation class.
struct ComponentInfo {
  bool circle = false;
  int cups = 0, caps = 0;
  int degree = 0;
  char cls = 'l';  // 'a'/'c'/'l'
};
std::vector<ComponentInfo> component_census(const Diagram& d);

}  // namespace arcalg
