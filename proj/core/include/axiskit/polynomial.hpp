#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace axiskit {

// Two-variable polynomial with one monomial family per variable: x^m terms
// count simple axes of length m, y^n terms non-simple axes of length n.
// Only nonzero coefficients are stored.
class AxisPolynomial {
 public:
  using Terms = std::map<int, std::int64_t>;

  void add_x(int exponent, std::int64_t coeff = 1) { add(x_, exponent, coeff); }
  void add_y(int exponent, std::int64_t coeff = 1) { add(y_, exponent, coeff); }

  const Terms& x_terms() const { return x_; }
  const Terms& y_terms() const { return y_; }
  bool is_zero() const { return x_.empty() && y_.empty(); }

  // Exact evaluation; throws std::overflow_error if 64 bits do not suffice.
  std::int64_t eval(std::int64_t x, std::int64_t y) const;
  // d/dx + d/dy at (1, 1).
  std::int64_t weighted_sum() const;

  // "x^2 + x^3 + x^5 + y^10": x-terms then y-terms, exponents ascending.
  std::string to_string() const;
  static AxisPolynomial parse(const std::string& text);

  friend bool operator==(const AxisPolynomial&, const AxisPolynomial&) = default;

 private:
  static void add(Terms& terms, int exponent, std::int64_t coeff);

  Terms x_;
  Terms y_;
};

}  // namespace axiskit
