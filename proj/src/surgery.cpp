#include "arcalg/surgery.hpp"

#include <algorithm>

#include "arcalg/util.hpp"

namespace arcalg {

std::string SurgeryRules::key(char kind, bool dotted, const std::string& in,
                              const std::string& out) {
  std::string k(1, kind);
  k += dotted ? ":d:" : ":u:";
  k += in;
  k += ">";
  k += out;
  return k;
}

int SurgeryRules::coeff(char kind, bool dotted, const std::string& in,
                        const std::string& out) const {
  auto it = entries.find(key(kind, dotted, in, out));
  return it == entries.end() ? 0 : it->second;
}

void SurgeryRules::set(char kind, bool dotted, const std::string& in, const std::string& out,
                       int c) {
  entries[key(kind, dotted, in, out)] = c;
}

SurgeryRules SurgeryRules::defaults() {
  SurgeryRules r;
  for (bool d : {false, true}) {
    // merge: the Frobenius multiplication; a clockwise circle annihilates
    // a second clockwise circle and any line
    r.set('M', d, "aa", "a", 1);
    r.set('M', d, "ac", "c", 1);
    r.set('M', d, "ca", "c", 1);
    r.set('M', d, "al", "l", 1);
    r.set('M', d, "la", "l", 1);
    // split: the comultiplication; a split-off circle is born clockwise
    // unless its partner circle takes the clockwise orientation
    r.set('S', d, "a", "ac", 1);
    r.set('S', d, "a", "ca", 1);
    r.set('S', d, "c", "cc", 1);
    r.set('S', d, "l", "lc", 1);
    r.set('S', d, "l", "cl", 1);
    // reconnects keep the (forced) line orientations
    r.set('R', d, "l", "l", 1);
    r.set('R', d, "ll", "ll", 1);
  }
  return r;
}

namespace {

ArcDiagram normalized(ArcDiagram d) {
  std::sort(d.arcs.begin(), d.arcs.end());
  std::sort(d.top_arcs.begin(), d.top_arcs.end());
  std::sort(d.rays.begin(), d.rays.end());
  return d;
}

bool same_vertices(const Component& a, const Component& b) { return a.vertices == b.vertices; }

}  // namespace

ProductResult surgery_multiply(const Diagram& lower, const Diagram& upper,
                               const SurgeryRules& rules, bool with_trace) {
  lower.check_shapes();
  upper.check_shapes();

  ProductResult res;
  res.bottom = lower.bottom;
  res.mids = lower.mids;
  res.mids.insert(res.mids.end(), upper.mids.begin(), upper.mids.end());
  res.top = upper.top;

  // the product is zero unless the upper cup diagram is the mirror of the
  // lower cap diagram
  if (!(normalized(upper.bottom) == normalized(lower.top.mirrored()))) return res;

  int kl = static_cast<int>(lower.weights.size());
  int ku = static_cast<int>(upper.weights.size());
  int seam = kl - 1;  // surgeries happen in the strip above this level

  Stack st;
  Labels labels;
  auto add_level = [&](const Weight& w) {
    st.lines.push_back(w.line);
    labels.push_back(w.sym);
    std::vector<Sym> row = w.sym;
    for (Sym& s : row)
      if (s == Sym::Up) s = Sym::Down;
    st.base.push_back(std::move(row));
  };
  for (const Weight& w : lower.weights) add_level(w);
  for (const Weight& w : upper.weights) add_level(w);

  auto slot = [&](int lv, int p2) { return static_cast<int>(st.lines[lv].slot_of(p2)); };
  auto add_matching = [&](const ArcDiagram& t, int lv) {
    for (const Arc& a : t.arcs)
      st.arcs.push_back({SArcKind::CapArc, lv, slot(lv, a.lo), slot(lv, a.hi), a.dotted});
    for (const Arc& a : t.top_arcs)
      st.arcs.push_back(
          {SArcKind::CupArc, lv + 1, slot(lv + 1, a.lo), slot(lv + 1, a.hi), a.dotted});
    for (const Strand& s : t.strands)
      st.arcs.push_back({SArcKind::Through, lv, slot(lv, s.bottom), slot(lv + 1, s.top), s.dotted});
  };

  for (const Arc& a : lower.bottom.arcs)
    st.arcs.push_back({SArcKind::CupArc, 0, slot(0, a.lo), slot(0, a.hi), a.dotted});
  for (const Ray& r : lower.bottom.rays)
    st.arcs.push_back({SArcKind::RayDown, 0, slot(0, r.pos), -1, r.dotted});
  for (int m = 0; m < kl - 1; ++m) add_matching(lower.mids[m], m);

  // the seam: caps of the lower diagram, mirrored cups of the upper one,
  // joined rays becoming plain through strands (their two dots cancel)
  std::vector<std::pair<int, int>> pairs;  // (lo,hi) doubled positions
  for (const Arc& a : lower.top.arcs) {
    st.arcs.push_back({SArcKind::CapArc, seam, slot(seam, a.lo), slot(seam, a.hi), a.dotted});
    pairs.push_back({a.lo, a.hi});
  }
  for (const Arc& a : upper.bottom.arcs)
    st.arcs.push_back({SArcKind::CupArc, seam + 1, slot(seam + 1, a.lo), slot(seam + 1, a.hi),
                       a.dotted});
  for (const Ray& r : lower.top.rays)
    st.arcs.push_back({SArcKind::Through, seam, slot(seam, r.pos), slot(seam + 1, r.pos), false});
  for (int m = 0; m < ku - 1; ++m) add_matching(upper.mids[m], kl + m);
  for (const Arc& a : upper.top.arcs)
    st.arcs.push_back({SArcKind::CapArc, kl + ku - 1, slot(kl + ku - 1, a.lo),
                       slot(kl + ku - 1, a.hi), a.dotted});
  for (const Ray& r : upper.top.rays)
    st.arcs.push_back({SArcKind::RayUp, kl + ku - 1, slot(kl + ku - 1, r.pos), -1, r.dotted});

  st.finalize();
  std::sort(pairs.begin(), pairs.end());

  if (!st.is_oriented(labels)) throw DomainError("stacked diagram is not oriented");

  std::map<Labels, std::int64_t> states;
  states[labels] = 1;

  for (auto& [plo, phi] : pairs) {
    // locate the seam cap and its partner cup in the current stack
    int cap_idx = -1, cup_idx = -1;
    for (std::size_t k = 0; k < st.arcs.size(); ++k) {
      const SArc& a = st.arcs[k];
      if (a.kind == SArcKind::CapArc && a.level == seam && st.pos(seam, a.a) == plo &&
          st.pos(seam, a.b) == phi)
        cap_idx = static_cast<int>(k);
      if (a.kind == SArcKind::CupArc && a.level == seam + 1 && st.pos(seam + 1, a.a) == plo &&
          st.pos(seam + 1, a.b) == phi)
        cup_idx = static_cast<int>(k);
    }
    if (cap_idx < 0 || cup_idx < 0) throw DomainError("seam cup-cap pair not found");
    bool pair_dotted = st.arcs[cap_idx].dotted;
    if (pair_dotted != st.arcs[cup_idx].dotted)
      throw DomainError("mismatched dots on a seam pair");

    int si = slot(seam, plo), sj = slot(seam, phi);
    int ui = slot(seam + 1, plo), uj = slot(seam + 1, phi);

    Component cap_comp = st.component_of(seam, si);
    Component cup_comp = st.component_of(seam + 1, ui);
    bool same = same_vertices(cap_comp, cup_comp);

    // replace the pair by two vertical segments
    Stack ns = st;
    ns.arcs.erase(ns.arcs.begin() + std::max(cap_idx, cup_idx));
    ns.arcs.erase(ns.arcs.begin() + std::min(cap_idx, cup_idx));
    ns.arcs.push_back({SArcKind::Through, seam, si, ui, false});
    ns.arcs.push_back({SArcKind::Through, seam, sj, uj, false});
    ns.finalize();

    Component left_comp = ns.component_of(seam, si);
    std::vector<Component> new_comps{left_comp};
    Component right_comp = ns.component_of(seam, sj);
    bool two_new = !same_vertices(left_comp, right_comp);
    if (two_new) new_comps.push_back(right_comp);

    char kind;
    if (same)
      kind = two_new ? 'S' : 'R';
    else
      kind = two_new ? 'R' : 'M';

    std::map<Labels, std::int64_t> next;
    for (auto& [cur, coeff] : states) {
      std::string in_cls(1, st.classify(cap_comp, cur));
      if (!same) in_cls += st.classify(cup_comp, cur);
      int in_deg = st.component_degree(cap_comp, cur);
      if (!same) in_deg += st.component_degree(cup_comp, cur);

      // candidate orientations of the new components, everything else fixed
      std::vector<std::vector<std::map<std::pair<int, int>, Sym>>> options;
      for (const Component& c : new_comps) options.push_back(ns.component_orientations(c));

      std::vector<std::size_t> pick(options.size(), 0);
      bool any = true;
      for (auto& o : options)
        if (o.empty()) any = false;
      while (any) {
        Labels cand = cur;
        for (std::size_t c = 0; c < options.size(); ++c)
          for (auto& [v, s] : options[c][pick[c]]) cand[v.first][v.second] = s;
        int out_deg = 0;
        std::string out_cls;
        for (const Component& c : new_comps) {
          out_deg += ns.component_degree(c, cand);
          out_cls += ns.classify(c, cand);
        }
        if (out_deg == in_deg) {
          int rc = rules.coeff(kind, pair_dotted, in_cls, out_cls);
          if (rc != 0) {
            auto it = next.emplace(cand, 0).first;
            it->second += rc * coeff;
            if (it->second == 0) next.erase(it);
          }
        }
        // advance the multi-index
        std::size_t c = 0;
        for (; c < options.size(); ++c) {
          if (++pick[c] < options[c].size()) break;
          pick[c] = 0;
        }
        if (c == options.size()) any = false;
      }
    }
    states = std::move(next);
    st = std::move(ns);
    if (with_trace) res.trace.push_back({plo, phi, pair_dotted, kind,
                                         static_cast<int>(states.size())});
    if (states.empty()) break;
  }

  // collapse the seam: labels on its two levels agree position by position
  for (auto& [lab, coeff] : states) {
    if (lab[seam] != lab[seam + 1]) throw DomainError("seam labels disagree at collapse");
    std::vector<std::vector<Sym>> rows;
    for (int lv = 0; lv < kl + ku; ++lv) {
      if (lv == seam + 1) continue;
      rows.push_back(lab[lv]);
    }
    res.terms[rows] += coeff;
  }
  for (auto it = res.terms.begin(); it != res.terms.end();) {
    if (it->second == 0)
      it = res.terms.erase(it);
    else
      ++it;
  }
  return res;
}

}  // namespace arcalg
