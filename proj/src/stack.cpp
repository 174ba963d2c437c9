#include "arcalg/stack.hpp"

#include <algorithm>

#include "arcalg/util.hpp"

namespace arcalg {

namespace {

bool is_vertex_symbol(Sym s) { return s == Sym::Up || s == Sym::Down || s == Sym::Diamond; }

}  // namespace

void Stack::finalize() {
  below_.assign(lines.size(), {});
  above_.assign(lines.size(), {});
  for (std::size_t lv = 0; lv < lines.size(); ++lv) {
    below_[lv].assign(lines[lv].size(), -1);
    above_[lv].assign(lines[lv].size(), -1);
  }
  auto attach = [&](std::vector<std::vector<int>>& side, int lv, int slot, int arc) {
    if (side[lv][slot] != -1) throw DomainError("two arcs on the same side of a vertex");
    side[lv][slot] = arc;
  };
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const SArc& a = arcs[k];
    switch (a.kind) {
      case SArcKind::CupArc:
        attach(below_, a.level, a.a, static_cast<int>(k));
        attach(below_, a.level, a.b, static_cast<int>(k));
        break;
      case SArcKind::CapArc:
        attach(above_, a.level, a.a, static_cast<int>(k));
        attach(above_, a.level, a.b, static_cast<int>(k));
        break;
      case SArcKind::Through:
        attach(above_, a.level, a.a, static_cast<int>(k));
        attach(below_, a.level + 1, a.b, static_cast<int>(k));
        break;
      case SArcKind::RayDown: attach(below_, a.level, a.a, static_cast<int>(k)); break;
      case SArcKind::RayUp: attach(above_, a.level, a.a, static_cast<int>(k)); break;
    }
  }
  for (std::size_t lv = 0; lv < lines.size(); ++lv) {
    for (std::size_t s = 0; s < lines[lv].size(); ++s) {
      bool vertex = is_vertex_symbol(base[lv][s]);
      if (vertex && (below_[lv][s] == -1 || above_[lv][s] == -1))
        throw DomainError("vertex not covered on both sides");
      if (!vertex && (below_[lv][s] != -1 || above_[lv][s] != -1))
        throw DomainError("arc attached to a ring/cross position");
    }
  }
}

namespace {

struct End {
  int level, slot;
};

// The two endpoint vertices of an arc (rays have one).
std::vector<End> arc_ends(const SArc& a) {
  switch (a.kind) {
    case SArcKind::CupArc:
    case SArcKind::CapArc: return {{a.level, a.a}, {a.level, a.b}};
    case SArcKind::Through: return {{a.level, a.a}, {a.level + 1, a.b}};
    case SArcKind::RayDown:
    case SArcKind::RayUp: return {{a.level, a.a}};
  }
  return {};
}

}  // namespace

Component Stack::component_of(int level, int slot) const {
  Component c;
  std::vector<std::pair<int, int>> frontier{{level, slot}};
  std::vector<std::pair<int, int>> seen;
  while (!frontier.empty()) {
    auto v = frontier.back();
    frontier.pop_back();
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
    seen.push_back(v);
    for (int arc : {arc_below(v.first, v.second), arc_above(v.first, v.second)}) {
      if (arc == -1) continue;
      if (std::find(c.arcs.begin(), c.arcs.end(), arc) == c.arcs.end()) {
        c.arcs.push_back(arc);
        for (const End& e : arc_ends(arcs[arc])) frontier.push_back({e.level, e.slot});
      }
    }
  }
  std::sort(seen.begin(), seen.end());
  c.vertices = std::move(seen);
  c.closed = true;
  for (int k : c.arcs) {
    const SArc& a = arcs[k];
    if (a.kind == SArcKind::RayDown || a.kind == SArcKind::RayUp) c.closed = false;
    if (a.kind == SArcKind::CupArc) ++c.cups;
    if (a.kind == SArcKind::CapArc) ++c.caps;
  }
  std::sort(c.arcs.begin(), c.arcs.end());
  return c;
}

std::vector<Component> Stack::components() const {
  std::vector<Component> out;
  std::vector<std::vector<bool>> done(lines.size());
  for (std::size_t lv = 0; lv < lines.size(); ++lv) done[lv].assign(lines[lv].size(), false);
  for (std::size_t lv = 0; lv < lines.size(); ++lv) {
    for (std::size_t s = 0; s < lines[lv].size(); ++s) {
      if (done[lv][s] || !is_vertex_symbol(base[lv][s])) continue;
      Component c = component_of(static_cast<int>(lv), static_cast<int>(s));
      for (auto& [l2, s2] : c.vertices) done[l2][s2] = true;
      out.push_back(std::move(c));
    }
  }
  return out;
}

// Each vertex, including ◇, carries a hidden binary orientation; an arc
// relates its endpoints by "equal" or "opposite":
//   cup/cap: opposite when undotted, equal when dotted;
//   through: equal when undotted, opposite when dotted;
//   rays:    pin the vertex (undotted ∨, dotted ∧).
// We propagate from an arbitrary seed; a circle admits 0 or 2 solutions, a
// line 0 or 1. Stored labels keep ◇ as ◇.
std::vector<std::map<std::pair<int, int>, Sym>> Stack::component_orientations(
    const Component& c, const Labels* fixed) const {
  if (c.vertices.empty()) return {{}};
  std::map<std::pair<int, int>, int> idx;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) idx[c.vertices[i]] = static_cast<int>(i);
  std::size_t n = c.vertices.size();

  std::vector<std::map<std::pair<int, int>, Sym>> out;
  for (int seed_val = 0; seed_val < 2; ++seed_val) {
    // value 0 = Up, 1 = Down
    std::vector<int> val(n, -1);
    val[0] = seed_val;
    bool ok = true;
    std::vector<int> frontier{0};
    while (ok && !frontier.empty()) {
      int v = frontier.back();
      frontier.pop_back();
      auto [lv, slot] = c.vertices[v];
      for (int arc : {arc_below(lv, slot), arc_above(lv, slot)}) {
        if (arc == -1) continue;
        const SArc& a = arcs[arc];
        bool flip;  // do the endpoint labels differ?
        switch (a.kind) {
          case SArcKind::CupArc:
          case SArcKind::CapArc: flip = !a.dotted; break;
          case SArcKind::Through: flip = a.dotted; break;
          case SArcKind::RayDown:
          case SArcKind::RayUp: {
            int want = a.dotted ? 0 : 1;  // dotted ray: ∧, undotted: ∨
            if (val[v] != want) ok = false;
            continue;
          }
        }
        for (const End& e : arc_ends(a)) {
          int u = idx.at({e.level, e.slot});
          if (u == v) continue;
          int want = flip ? 1 - val[v] : val[v];
          if (val[u] == -1) {
            val[u] = want;
            frontier.push_back(u);
          } else if (val[u] != want) {
            ok = false;
          }
        }
      }
    }
    if (!ok) continue;
    // respect pinned labels and the skeleton
    std::map<std::pair<int, int>, Sym> assign;
    for (std::size_t i = 0; i < n && ok; ++i) {
      auto [lv, slot] = c.vertices[i];
      Sym stored = base[lv][slot] == Sym::Diamond ? Sym::Diamond
                                                  : (val[i] == 0 ? Sym::Up : Sym::Down);
      if (fixed && base[lv][slot] != Sym::Diamond) {
        Sym f = (*fixed)[lv][slot];
        if ((f == Sym::Up || f == Sym::Down) && f != stored) ok = false;
      }
      assign[{lv, slot}] = stored;
    }
    if (ok) out.push_back(std::move(assign));
  }
  // circles through a ◇ can give the same stored labeling twice
  if (out.size() == 2 && out[0] == out[1]) out.pop_back();
  return out;
}

bool Stack::is_oriented(const Labels& l) const {
  for (const Component& c : components())
    if (component_orientations(c, &l).empty()) return false;
  return true;
}

int Stack::arc_degree(const SArc& a, const Labels& l) const {
  if (a.kind != SArcKind::CupArc && a.kind != SArcKind::CapArc) return 0;
  int slot = pos(a.level, a.a) > pos(a.level, a.b) ? a.a : a.b;
  Sym s = l[a.level][slot];
  if (s == Sym::Diamond)
    throw DomainError("arc with rightmost endpoint at position 0");
  return s == Sym::Down ? 1 : 0;
}

int Stack::degree(const Labels& l) const {
  int d = 0;
  for (const SArc& a : arcs) d += arc_degree(a, l);
  return d;
}

int Stack::component_degree(const Component& c, const Labels& l) const {
  int d = 0;
  for (int k : c.arcs) d += arc_degree(arcs[k], l);
  return d;
}

char Stack::classify(const Component& c, const Labels& l) const {
  if (!c.closed) return 'l';
  // rightmost vertex of the circle on each number line it touches
  std::map<int, int> rightmost;  // level -> slot
  for (auto& [lv, slot] : c.vertices) {
    auto it = rightmost.find(lv);
    if (it == rightmost.end() || pos(lv, slot) > pos(lv, it->second)) rightmost[lv] = slot;
  }
  int seen = -1;
  for (auto& [lv, slot] : rightmost) {
    Sym s = l[lv][slot];
    if (s == Sym::Diamond) continue;
    int cls = s == Sym::Down ? 1 : 0;
    if (seen == -1) seen = cls;
    else if (seen != cls)
      throw DomainError("rightmost vertices of a circle carry different labels");
  }
  if (seen == -1) throw DomainError("circle with only diamond rightmost vertices");
  return seen == 1 ? 'c' : 'a';
}

}  // namespace arcalg
