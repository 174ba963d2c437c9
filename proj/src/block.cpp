#include "arcalg/block.hpp"

#include <algorithm>

#include "arcalg/util.hpp"

namespace arcalg {

std::string WedgeClass::str() const {
  if (exact) return "count " + std::to_string(value);
  return value == 0 ? "even" : "odd";
}

void BlockSpec::validate() const {
  line.validate();
  for (int p : circles)
    if (!line.has_position(p)) throw DomainError("ring position off the window");
  for (int p : crosses) {
    if (!line.has_position(p)) throw DomainError("cross position off the window");
    if (std::find(circles.begin(), circles.end(), p) != circles.end())
      throw DomainError("position is both ring and cross");
  }
  if (line.calculus == Calculus::TypeB) {
    // |○| - |×| = floor(delta/2); preimages live inside the window
    int want = line.delta >= 0 ? line.delta / 2 : -((-line.delta + 1) / 2);
    int have = static_cast<int>(circles.size()) - static_cast<int>(crosses.size());
    if (have != want)
      throw DomainError("|rings| - |crosses| = " + std::to_string(have) + ", expected " +
                        std::to_string(want) + " for delta " + std::to_string(line.delta));
    if (line.delta % 2 == 0 && (line.pos2.empty() || line.pos2[0] != 0))
      throw DomainError("even-delta type-B window must contain position 0");
    for (int p : crosses)
      if (p == 0) throw DomainError("position 0 cannot carry a cross");
  }
}

BlockSpec BlockSpec::window(int delta, int count, WedgeClass wc, Calculus calc) {
  BlockSpec b;
  b.line = NumberLine::window(delta, count, calc);
  b.wedge = wc;
  if (calc == Calculus::TypeB && delta % 2 == 0) {
    // position 0 must be ○ or ◇; with floor(delta/2) rings required we put
    // them at the leftmost positions
    int rings = delta / 2;
    if (rings < 0) throw DomainError("negative delta window needs explicit crosses");
    for (int i = 0; i < rings; ++i) b.circles.push_back(b.line.pos2.at(i));
  }
  b.validate();
  return b;
}

std::string BlockSpec::key() const {
  std::string s = "d" + std::to_string(line.delta);
  s += line.calculus == Calculus::TypeA ? "A" : "B";
  s += "w";
  for (int p : line.pos2) s += std::to_string(p) + ",";
  s += "o";
  for (int p : circles) s += std::to_string(p) + ",";
  s += "x";
  for (int p : crosses) s += std::to_string(p) + ",";
  s += wedge.exact ? "c" : "p";
  s += std::to_string(wedge.value);
  return s;
}

bool validate_weight(const Weight& w, const BlockSpec& b) {
  if (!(w.line == b.line)) return false;
  if (w.sym.size() != w.line.size()) return false;
  int ups = 0;
  for (std::size_t i = 0; i < w.sym.size(); ++i) {
    int p = w.line.pos2[i];
    bool is_ring = std::find(b.circles.begin(), b.circles.end(), p) != b.circles.end();
    bool is_cross = std::find(b.crosses.begin(), b.crosses.end(), p) != b.crosses.end();
    if (is_ring != (w.sym[i] == Sym::Ring)) return false;
    if (is_cross != (w.sym[i] == Sym::Cross)) return false;
    if (w.sym[i] == Sym::Diamond) {
      if (w.line.calculus == Calculus::TypeA || p != 0) return false;
    }
    if (p == 0 && w.line.calculus == Calculus::TypeB && w.sym[i] != Sym::Ring &&
        w.sym[i] != Sym::Diamond)
      return false;
    if (w.sym[i] == Sym::Up) ++ups;
  }
  return b.wedge.admits(ups);
}

std::vector<Weight> enumerate_block(const BlockSpec& b) {
  b.validate();
  std::vector<std::size_t> free_slots;
  Weight base;
  base.line = b.line;
  base.sym.assign(b.line.size(), Sym::Down);
  for (std::size_t i = 0; i < b.line.size(); ++i) {
    int p = b.line.pos2[i];
    if (std::find(b.circles.begin(), b.circles.end(), p) != b.circles.end())
      base.sym[i] = Sym::Ring;
    else if (std::find(b.crosses.begin(), b.crosses.end(), p) != b.crosses.end())
      base.sym[i] = Sym::Cross;
    else if (p == 0 && b.line.calculus == Calculus::TypeB)
      base.sym[i] = Sym::Diamond;
    else
      free_slots.push_back(i);
  }
  std::vector<Weight> out;
  std::size_t k = free_slots.size();
  if (k > 24) throw DomainError("window too large to enumerate");
  // bit 0 of the counter steers the leftmost free slot; ∧ (=0) sorts first
  for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
    Weight w = base;
    int ups = 0;
    for (std::size_t j = 0; j < k; ++j) {
      bool down = (mask >> (k - 1 - j)) & 1;
      w.sym[free_slots[j]] = down ? Sym::Down : Sym::Up;
      if (!down) ++ups;
    }
    if (b.wedge.admits(ups)) out.push_back(std::move(w));
  }
  return out;
}

std::vector<Weight> bruhat_moves(const Weight& w, const BlockSpec& b) {
  std::vector<Weight> out;
  std::size_t n = w.sym.size();
  bool dotted_moves = b.line.calculus == Calculus::TypeB && !b.wedge.exact;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (w.sym[i] == Sym::Down && w.sym[j] == Sym::Up) {
        Weight m = w;
        m.sym[i] = Sym::Up;
        m.sym[j] = Sym::Down;
        out.push_back(std::move(m));
      } else if (dotted_moves && w.sym[i] == Sym::Up && w.sym[j] == Sym::Up) {
        Weight m = w;
        m.sym[i] = Sym::Down;
        m.sym[j] = Sym::Down;
        out.push_back(std::move(m));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Block::Block(const BlockSpec& spec) : spec_(spec) {
  spec_.validate();
  weights_ = enumerate_block(spec_);
  for (std::size_t i = 0; i < weights_.size(); ++i) index_[weights_[i].sym] = i;
  cups_.reserve(weights_.size());
  caps_.reserve(weights_.size());
  for (const Weight& w : weights_) {
    cups_.push_back(cup_diagram(w));
    caps_.push_back(cap_diagram(w));
  }
  ring_cross_ = spec_.circles;
  ring_cross_.insert(ring_cross_.end(), spec_.crosses.begin(), spec_.crosses.end());
  std::sort(ring_cross_.begin(), ring_cross_.end());
  for (int p : spec_.line.pos2)
    if (std::find(ring_cross_.begin(), ring_cross_.end(), p) == ring_cross_.end())
      free_pos_.push_back(p);

  // reflexive-transitive closure of the Bruhat moves over the block
  std::size_t n = weights_.size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    leq_[i][i] = true;
    std::vector<std::size_t> frontier{i};
    while (!frontier.empty()) {
      std::size_t x = frontier.back();
      frontier.pop_back();
      for (const Weight& m : bruhat_moves(weights_[x], spec_)) {
        auto it = index_.find(m.sym);
        if (it == index_.end()) continue;  // leaves the wedge class (exact mode)
        if (!leq_[i][it->second]) {
          leq_[i][it->second] = true;
          frontier.push_back(it->second);
        }
      }
    }
  }
}

std::optional<std::size_t> Block::find(const Weight& w) const {
  auto it = index_.find(w.sym);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Block::index_of(const Weight& w) const {
  auto i = find(w);
  if (!i) throw DomainError("weight " + w.render() + " not in block");
  return *i;
}

bool bruhat_leq(const Weight& x, const Weight& y, const BlockSpec& b) {
  Block blk(b);
  return blk.leq(x, y);
}

}  // namespace arcalg
