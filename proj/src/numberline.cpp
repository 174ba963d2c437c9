#include "arcalg/numberline.hpp"

#include <algorithm>

#include "arcalg/util.hpp"

namespace arcalg {

NumberLine NumberLine::window(int delta, int count, Calculus calc) {
  NumberLine line;
  line.delta = delta;
  line.calculus = calc;
  // Smallest point of (delta/2 + Z) ∩ R>=0, doubled: delta even -> 0, odd -> 1.
  int start = ((delta % 2) + 2) % 2;
  for (int i = 0; i < count; ++i) line.pos2.push_back(start + 2 * i);
  line.validate();
  return line;
}

bool NumberLine::has_position(int p2) const {
  return std::binary_search(pos2.begin(), pos2.end(), p2);
}

std::size_t NumberLine::slot_of(int p2) const {
  auto it = std::lower_bound(pos2.begin(), pos2.end(), p2);
  if (it == pos2.end() || *it != p2)
    throw DomainError("position " + position_str(p2) + " not on number line");
  return static_cast<std::size_t>(it - pos2.begin());
}

NumberLine NumberLine::without(const std::vector<int>& removed_pos2) const {
  NumberLine out = *this;
  out.pos2.clear();
  for (int p : pos2) {
    if (std::find(removed_pos2.begin(), removed_pos2.end(), p) == removed_pos2.end())
      out.pos2.push_back(p);
  }
  return out;
}

void NumberLine::validate() const {
  int parity = ((delta % 2) + 2) % 2;
  for (std::size_t i = 0; i < pos2.size(); ++i) {
    int p = pos2[i];
    if (p < 0) throw DomainError("negative position on number line");
    if ((p & 1) != parity)
      throw DomainError("position " + position_str(p) + " not in delta/2 + Z for delta " +
                        std::to_string(delta));
    if (i > 0 && pos2[i - 1] >= p) throw DomainError("positions not strictly increasing");
  }
}

std::string NumberLine::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < pos2.size(); ++i) {
    if (i) s += ",";
    s += position_str(pos2[i]);
  }
  return s + "}";
}

std::string position_str(int p2) {
  if (p2 % 2 == 0) return std::to_string(p2 / 2);
  return std::to_string(p2) + "/2";
}

}  // namespace arcalg
