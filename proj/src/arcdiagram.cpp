#include "arcalg/arcdiagram.hpp"

#include <algorithm>

#include "arcalg/util.hpp"

namespace arcalg {

int ArcDiagram::cup_count() const {
  if (side == Side::Matching) return static_cast<int>(top_arcs.size());
  return side == Side::Cup ? static_cast<int>(arcs.size()) : 0;
}

int ArcDiagram::cap_count() const {
  if (side == Side::Matching) return static_cast<int>(arcs.size());
  return side == Side::Cap ? static_cast<int>(arcs.size()) : 0;
}

ArcDiagram ArcDiagram::mirrored() const {
  ArcDiagram m = *this;
  switch (side) {
    case Side::Cup: m.side = Side::Cap; break;
    case Side::Cap: m.side = Side::Cup; break;
    case Side::Matching:
      m.bottom_line = top_line;
      m.top_line = bottom_line;
      m.arcs = top_arcs;
      m.top_arcs = arcs;
      for (auto& s : m.strands) std::swap(s.bottom, s.top);
      break;
  }
  return m;
}

bool ArcDiagram::operator==(const ArcDiagram& o) const {
  return side == o.side && bottom_line == o.bottom_line && top_line == o.top_line &&
         arcs == o.arcs && top_arcs == o.top_arcs && rays == o.rays && strands == o.strands;
}

namespace {

bool arcs_cross(const Arc& a, const Arc& b) {
  return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) ||
         (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

bool nested_inside_any(const Arc& a, const std::vector<Arc>& all) {
  for (const Arc& b : all) {
    if (&a == &b || (a == b)) continue;
    if (b.lo < a.lo && a.hi < b.hi) return true;
  }
  return false;
}

}  // namespace

void ArcDiagram::validate(const std::vector<int>& ring_cross_pos2) const {
  auto check_line = [&](const NumberLine& ln, const std::vector<Arc>& as,
                        const std::vector<Ray>& rs, bool strands_bottom) {
    std::vector<int> seen;
    auto touch = [&](int p) {
      if (!ln.has_position(p)) throw DomainError("arc endpoint off the number line");
      if (std::find(ring_cross_pos2.begin(), ring_cross_pos2.end(), p) != ring_cross_pos2.end())
        throw DomainError("arc endpoint on a ring/cross position");
      if (std::find(seen.begin(), seen.end(), p) != seen.end())
        throw DomainError("position used by two arcs");
      seen.push_back(p);
    };
    for (const Arc& a : as) {
      if (a.lo >= a.hi) throw DomainError("arc endpoints out of order");
      touch(a.lo);
      touch(a.hi);
    }
    for (const Ray& r : rs) touch(r.pos);
    for (const Strand& s : strands) touch(strands_bottom ? s.bottom : s.top);
    // partition: every non-ring/cross position covered
    for (int p : ln.pos2) {
      bool rc = std::find(ring_cross_pos2.begin(), ring_cross_pos2.end(), p) !=
                ring_cross_pos2.end();
      bool covered = std::find(seen.begin(), seen.end(), p) != seen.end();
      if (rc == covered)
        throw DomainError("positions not partitioned by arcs and rays at " + position_str(p));
    }
    for (std::size_t i = 0; i < as.size(); ++i)
      for (std::size_t j = i + 1; j < as.size(); ++j)
        if (arcs_cross(as[i], as[j])) throw DomainError("crossing arcs");
    // a ray under/over the span of an arc crosses it
    for (const Ray& r : rs)
      for (const Arc& a : as)
        if (a.lo < r.pos && r.pos < a.hi) throw DomainError("ray crosses an arc");
    // dot admissibility: a dotted arc must not be nested inside another arc,
    // a dotted ray must not have a ray to its left
    for (const Arc& a : as)
      if (a.dotted && nested_inside_any(a, as)) throw DomainError("dotted arc is nested");
    for (const Ray& r : rs)
      if (r.dotted)
        for (const Ray& r2 : rs)
          if (r2.pos < r.pos) throw DomainError("dotted ray not connectable to the left");
  };

  if (side == Side::Matching) {
    check_line(bottom_line, arcs, {}, true);
    // strands attach to the top line together with its cups
    std::vector<int> seen_top;
    check_line(top_line, top_arcs, {}, false);
    // strands must be pairwise non-crossing and clear of cap/cup spans
    for (std::size_t i = 0; i < strands.size(); ++i)
      for (std::size_t j = i + 1; j < strands.size(); ++j) {
        bool below = strands[i].bottom < strands[j].bottom;
        bool above = strands[i].top < strands[j].top;
        if (below != above) throw DomainError("crossing strands");
      }
  } else {
    check_line(bottom_line, arcs, rays, true);
  }
}

std::string ArcDiagram::str() const {
  std::string s = side == Side::Cup ? "cup[" : (side == Side::Cap ? "cap[" : "matching[");
  bool first = true;
  auto sep = [&]() {
    if (!first) s += " ";
    first = false;
  };
  for (const Arc& a : arcs) {
    sep();
    s += "(" + position_str(a.lo) + "," + position_str(a.hi) + ")" + (a.dotted ? "*" : "");
  }
  for (const Arc& a : top_arcs) {
    sep();
    s += "top(" + position_str(a.lo) + "," + position_str(a.hi) + ")" + (a.dotted ? "*" : "");
  }
  for (const Ray& r : rays) {
    sep();
    s += "|" + position_str(r.pos) + (r.dotted ? "*" : "");
  }
  for (const Strand& t : strands) {
    sep();
    s += position_str(t.bottom) + "->" + position_str(t.top) + (t.dotted ? "*" : "");
  }
  return s + "]";
}

ArcDiagram cup_diagram(const Weight& w) {
  w.validate_structure();
  const NumberLine& ln = w.line;
  std::size_t n = ln.size();

  ArcDiagram d;
  d.side = Side::Cup;
  d.bottom_line = ln;
  d.top_line = ln;

  std::vector<bool> joined(n, false);

  // (C-1) connect neighbored ∨∧ pairs; ○/× and already joined vertices are
  // transparent. A single left-to-right pass with a stack of open ∨'s equals
  // the iterated pairing, and the result is order independent.
  std::vector<std::size_t> open_down;
  for (std::size_t i = 0; i < n; ++i) {
    if (w.sym[i] == Sym::Ring || w.sym[i] == Sym::Cross) continue;
    if (w.sym[i] == Sym::Down) {
      open_down.push_back(i);
    } else if (w.sym[i] == Sym::Up && !open_down.empty()) {
      std::size_t j = open_down.back();
      open_down.pop_back();
      d.arcs.push_back({ln.pos2[j], ln.pos2[i], false});
      joined[j] = joined[i] = true;
    }
  }

  // (C-2) a vertical ray on each remaining ∨
  for (std::size_t i = 0; i < n; ++i)
    if (w.sym[i] == Sym::Down && !joined[i]) d.rays.push_back({ln.pos2[i], false});

  std::vector<std::size_t> ups;  // remaining ∧'s, ◇ reading as ∧
  for (std::size_t i = 0; i < n; ++i)
    if (!joined[i] && (w.sym[i] == Sym::Up || w.sym[i] == Sym::Diamond)) ups.push_back(i);

  if (ln.calculus == Calculus::TypeA) {
    // no dotted arcs in type A: every leftover ∧ keeps a ray (the flag
    // records that the ray sits at an ∧)
    for (std::size_t i : ups) d.rays.push_back({ln.pos2[i], true});
  } else {
    // (C-3)/(C-5) pair neighbored ∧'s left to right by dotted cups
    std::size_t dots_placed = 0;
    for (std::size_t k = 0; k + 1 < ups.size(); k += 2) {
      d.arcs.push_back({ln.pos2[ups[k]], ln.pos2[ups[k + 1]], true});
      ++dots_placed;
    }
    // (C-4)/(C-5) a single leftover ∧ or ◇ gets a dotted ray
    if (ups.size() % 2 == 1) {
      d.rays.push_back({ln.pos2[ups.back()], true});
      ++dots_placed;
    }
    // (C-6) odd number of dots: erase the dot on the component holding ◇.
    // The ◇, when present, sits at position 0 and was consumed by (C-3) or
    // (C-4), so the component is the arc or ray with endpoint 0.
    bool has_diamond = !w.sym.empty() && ln.pos2[0] == 0 && w.sym[0] == Sym::Diamond;
    if (dots_placed % 2 == 1 && has_diamond) {
      for (Arc& a : d.arcs)
        if (a.lo == 0) a.dotted = false;
      for (Ray& r : d.rays)
        if (r.pos == 0) r.dotted = false;
    }
  }
  // (C-7) labels are forgotten: the diagram stores no symbols

  std::sort(d.arcs.begin(), d.arcs.end());
  std::sort(d.rays.begin(), d.rays.end());
  return d;
}

ArcDiagram cap_diagram(const Weight& w) { return cup_diagram(w).mirrored(); }

}  // namespace arcalg
