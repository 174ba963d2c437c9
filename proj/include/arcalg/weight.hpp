#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcalg/numberline.hpp"

namespace arcalg {

// Vertex symbols of a weight diagram. The enum order (∧ before ∨) is the
// lexicographic order used for deterministic block enumeration.
enum class Sym : std::uint8_t { Up = 0, Down = 1, Ring = 2, Cross = 3, Diamond = 4 };

char sym_char(Sym s);            // '^', 'v', 'o', 'x', 'd'
Sym sym_from_char(char c);       // throws DomainError on anything else
std::string sym_utf8(Sym s);     // "∧", "∨", "○", "×", "◇"

// A weight diagram restricted to a finite window; beyond the window the
// labeling is the all-∨ tail. Weights index simples/standards/projectives.
struct Weight {
  NumberLine line;
  std::vector<Sym> sym;  // one per window position

  Sym at_pos(int p2) const { return sym[line.slot_of(p2)]; }

  std::string render() const;  // text over {v,^,o,x,d}, round-trips parse_weight
  std::string utf8() const;

  bool operator==(const Weight& o) const { return line == o.line && sym == o.sym; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const { return sym < o.sym; }  // within one line

  // Structural invariants that do not depend on a block: symbol placement at
  // position 0, diamond only at 0, tail finiteness (implicit). Throws.
  void validate_structure() const;
};

// Text over {v,^,o,x,d}, one character per window position, left to right.
Weight parse_weight(const std::string& text, const NumberLine& line);

}  // namespace arcalg
