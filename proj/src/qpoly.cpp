#include "arcalg/qpoly.hpp"

namespace arcalg {

std::string QPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [d, c] : coeffs_) {
    std::int64_t a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    if (d == 0) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a);
      out += "q";
      if (d != 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

QPoly circle_power(int n) {
  QPoly r(1);
  QPoly circle;
  circle.add(0, 1);
  circle.add(2, 1);
  for (int i = 0; i < n; ++i) r *= circle;
  return r;
}

}  // namespace arcalg
