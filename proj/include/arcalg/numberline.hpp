#pragma once

#include <string>
#include <vector>

namespace arcalg {

enum class Calculus { TypeA, TypeB };

// A finite window into the half-integer number line L = (delta/2 + Z) ∩ R>=0.
// Positions are stored doubled so every value is an exact integer: position
// p corresponds to the half-integer p/2. Deleting positions (as crossingless
// matchings do) yields another valid NumberLine.
struct NumberLine {
  int delta = 0;
  Calculus calculus = Calculus::TypeB;
  std::vector<int> pos2;  // doubled positions, strictly increasing, >= 0

  // The first `count` positions of L for the given delta.
  static NumberLine window(int delta, int count, Calculus calc = Calculus::TypeB);

  std::size_t size() const { return pos2.size(); }
  bool has_position(int p2) const;
  std::size_t slot_of(int p2) const;  // index of a position; throws if absent

  // A copy with the given doubled positions removed.
  NumberLine without(const std::vector<int>& removed_pos2) const;

  void validate() const;  // throws DomainError on malformed lines

  bool operator==(const NumberLine& o) const {
    return delta == o.delta && calculus == o.calculus && pos2 == o.pos2;
  }

  std::string str() const;
};

std::string position_str(int p2);  // "3/2", "2", ...

}  // namespace arcalg
