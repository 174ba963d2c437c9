#include "arcalg/diagram.hpp"

#include "arcalg/util.hpp"

namespace arcalg {

Diagram Diagram::circle(const ArcDiagram& a, const Weight& lambda, const ArcDiagram& b) {
  Diagram d;
  d.bottom = a;
  d.weights = {lambda};
  d.top = b;
  d.check_shapes();
  return d;
}

Diagram Diagram::bimodule(const ArcDiagram& a, const Weight& lambda, const ArcDiagram& t,
                          const Weight& mu, const ArcDiagram& b) {
  Diagram d;
  d.bottom = a;
  d.weights = {lambda, mu};
  d.mids = {t};
  d.top = b;
  d.check_shapes();
  return d;
}

void Diagram::check_shapes() const {
  if (weights.empty()) throw DomainError("diagram without weights");
  if (mids.size() + 1 != weights.size()) throw DomainError("matching/weight count mismatch");
  if (bottom.side != Side::Cup) throw DomainError("bottom diagram must be a cup diagram");
  if (top.side != Side::Cap) throw DomainError("top diagram must be a cap diagram");
  if (!(bottom.line() == weights.front().line))
    throw DomainError("cup diagram line does not match bottom weight");
  if (!(top.line() == weights.back().line))
    throw DomainError("cap diagram line does not match top weight");
  for (std::size_t i = 0; i < mids.size(); ++i) {
    if (mids[i].side != Side::Matching) throw DomainError("middle diagram must be a matching");
    if (!(mids[i].bottom_line == weights[i].line) || !(mids[i].top_line == weights[i + 1].line))
      throw DomainError("matching lines do not match adjacent weights");
  }
}

BuiltStack build_stack(const Diagram& d) {
  d.check_shapes();
  BuiltStack out;
  Stack& st = out.stack;
  int k = static_cast<int>(d.weights.size());
  for (const Weight& w : d.weights) {
    st.lines.push_back(w.line);
    std::vector<Sym> row = w.sym;
    out.labels.push_back(row);
    for (Sym& s : row)
      if (s == Sym::Up) s = Sym::Down;  // base keeps only vertex/ring/cross/diamond kind
    st.base.push_back(std::move(row));
  }
  auto slot = [&](int level, int p2) {
    return static_cast<int>(st.lines[level].slot_of(p2));
  };
  for (const Arc& a : d.bottom.arcs)
    st.arcs.push_back({SArcKind::CupArc, 0, slot(0, a.lo), slot(0, a.hi), a.dotted});
  for (const Ray& r : d.bottom.rays)
    st.arcs.push_back({SArcKind::RayDown, 0, slot(0, r.pos), -1, r.dotted});
  for (int m = 0; m < k - 1; ++m) {
    const ArcDiagram& t = d.mids[m];
    for (const Arc& a : t.arcs)  // caps of the matching, on the lower line
      st.arcs.push_back({SArcKind::CapArc, m, slot(m, a.lo), slot(m, a.hi), a.dotted});
    for (const Arc& a : t.top_arcs)  // cups of the matching, on the upper line
      st.arcs.push_back({SArcKind::CupArc, m + 1, slot(m + 1, a.lo), slot(m + 1, a.hi), a.dotted});
    for (const Strand& s : t.strands)
      st.arcs.push_back({SArcKind::Through, m, slot(m, s.bottom), slot(m + 1, s.top), s.dotted});
  }
  for (const Arc& a : d.top.arcs)
    st.arcs.push_back({SArcKind::CapArc, k - 1, slot(k - 1, a.lo), slot(k - 1, a.hi), a.dotted});
  for (const Ray& r : d.top.rays)
    st.arcs.push_back({SArcKind::RayUp, k - 1, slot(k - 1, r.pos), -1, r.dotted});
  st.finalize();
  return out;
}

bool is_oriented(const Diagram& d) {
  BuiltStack b = build_stack(d);
  return b.stack.is_oriented(b.labels);
}

int degree(const Diagram& d) {
  BuiltStack b = build_stack(d);
  return b.stack.degree(b.labels);
}

std::vector<ComponentInfo> component_census(const Diagram& d) {
  BuiltStack b = build_stack(d);
  std::vector<ComponentInfo> out;
  for (const Component& c : b.stack.components()) {
    ComponentInfo info;
    info.circle = c.closed;
    info.cups = c.cups;
    info.caps = c.caps;
    info.degree = b.stack.component_degree(c, b.labels);
    info.cls = b.stack.classify(c, b.labels);
    out.push_back(info);
  }
  return out;
}

}  // namespace arcalg
