#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace arcalg {

// Laurent polynomial in q with integer coefficients: graded dimensions,
// decomposition numbers, Cartan entries. Grading shifts act by q^k.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::int64_t constant) {
    if (constant != 0) coeffs_[0] = constant;
  }
  static QPoly monomial(int deg, std::int64_t c = 1) {
    QPoly p;
    if (c != 0) p.coeffs_[deg] = c;
    return p;
  }

  std::int64_t coeff(int deg) const {
    auto it = coeffs_.find(deg);
    return it == coeffs_.end() ? 0 : it->second;
  }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, std::int64_t>& coeffs() const { return coeffs_; }

  void add(int deg, std::int64_t c) {
    if (c == 0) return;
    auto it = coeffs_.emplace(deg, 0).first;
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }

  QPoly& operator+=(const QPoly& o) {
    for (auto& [d, c] : o.coeffs_) add(d, c);
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    for (auto& [d, c] : o.coeffs_) add(d, -c);
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (auto& [da, ca] : a.coeffs_)
      for (auto& [db, cb] : b.coeffs_) r.add(da + db, ca * cb);
    return r;
  }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  // Grading shift <k>: M<k>_j = M_{j-k}, i.e. multiplication by q^k.
  QPoly shifted(int k) const {
    QPoly r;
    for (auto& [d, c] : coeffs_) r.coeffs_[d + k] = c;
    return r;
  }

  std::int64_t eval_at_one() const {
    std::int64_t s = 0;
    for (auto& [d, c] : coeffs_) s += c;
    return s;
  }

  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  // Human form: "1 + q + 2q^2", "q^-1", "0".
  std::string str() const;

 private:
  std::map<int, std::int64_t> coeffs_;  // degree -> coefficient, no zeros
};

// (1 + q^2)^n, the graded dimension of n tensor factors of a small circle.
QPoly circle_power(int n);

}  // namespace arcalg
