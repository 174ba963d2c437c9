#include "arcalg/weight.hpp"

#include "arcalg/util.hpp"

namespace arcalg {

char sym_char(Sym s) {
  switch (s) {
    case Sym::Up: return '^';
    case Sym::Down: return 'v';
    case Sym::Ring: return 'o';
    case Sym::Cross: return 'x';
    case Sym::Diamond: return 'd';
  }
  return '?';
}

Sym sym_from_char(char c) {
  switch (c) {
    case '^': return Sym::Up;
    case 'v': return Sym::Down;
    case 'o': return Sym::Ring;
    case 'x': return Sym::Cross;
    case 'd': return Sym::Diamond;
  }
  throw DomainError(std::string("illegal weight symbol '") + c + "'");
}

std::string sym_utf8(Sym s) {
  switch (s) {
    case Sym::Up: return "∧";
    case Sym::Down: return "∨";
    case Sym::Ring: return "○";
    case Sym::Cross: return "×";
    case Sym::Diamond: return "◇";
  }
  return "?";
}

std::string Weight::render() const {
  std::string s;
  s.reserve(sym.size());
  for (Sym x : sym) s += sym_char(x);
  return s;
}

std::string Weight::utf8() const {
  std::string s;
  for (Sym x : sym) s += sym_utf8(x);
  return s;
}

void Weight::validate_structure() const {
  if (sym.size() != line.size()) throw DomainError("weight length does not match window");
  for (std::size_t i = 0; i < sym.size(); ++i) {
    bool at_zero = line.pos2[i] == 0;
    if (sym[i] == Sym::Diamond) {
      if (line.calculus == Calculus::TypeA) throw DomainError("diamond symbol in type-A mode");
      if (!at_zero) throw DomainError("diamond symbol away from position 0");
    }
    if (at_zero && line.calculus == Calculus::TypeB && sym[i] != Sym::Ring &&
        sym[i] != Sym::Diamond)
      throw DomainError("position 0 must carry a ring or a diamond");
  }
}

Weight parse_weight(const std::string& text, const NumberLine& line) {
  if (text.size() != line.size())
    throw DomainError("weight text length " + std::to_string(text.size()) +
                      " does not match window size " + std::to_string(line.size()));
  Weight w;
  w.line = line;
  w.sym.reserve(text.size());
  for (char c : text) w.sym.push_back(sym_from_char(c));
  w.validate_structure();
  return w;
}

}  // namespace arcalg
