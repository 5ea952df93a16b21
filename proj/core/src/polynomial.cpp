#include "axiskit/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace axiskit {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("axis polynomial evaluation overflows");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("axis polynomial evaluation overflows");
  return out;
}

std::int64_t power(std::int64_t base, int exponent) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

void render(std::ostringstream& out, bool& first, char var, const AxisPolynomial::Terms& terms) {
  for (const auto& [exponent, coeff] : terms) {
    if (!first) out << " + ";
    first = false;
    if (coeff != 1) out << coeff;
    out << var;
    if (exponent != 1) out << '^' << exponent;
  }
}

}  // namespace

void AxisPolynomial::add(Terms& terms, int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto& slot = terms[exponent];
  slot += coeff;
  if (slot == 0) terms.erase(exponent);
}

std::int64_t AxisPolynomial::eval(std::int64_t x, std::int64_t y) const {
  std::int64_t sum = 0;
  for (const auto& [e, c] : x_) sum = checked_add(sum, checked_mul(c, power(x, e)));
  for (const auto& [e, c] : y_) sum = checked_add(sum, checked_mul(c, power(y, e)));
  return sum;
}

std::int64_t AxisPolynomial::weighted_sum() const {
  std::int64_t sum = 0;
  for (const auto& [e, c] : x_) sum += e * c;
  for (const auto& [e, c] : y_) sum += e * c;
  return sum;
}

std::string AxisPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  render(out, first, 'x', x_);
  render(out, first, 'y', y_);
  return out.str();
}

AxisPolynomial AxisPolynomial::parse(const std::string& text) {
  AxisPolynomial out;
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto integer = [&]() -> std::int64_t {
    const size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (begin == pos) throw std::invalid_argument("expected integer in '" + text + "'");
    return std::stoll(text.substr(begin, pos - begin));
  };
  skip();
  if (text.substr(pos) == "0") return out;
  while (true) {
    skip();
    std::int64_t coeff = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) coeff = integer();
    if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'y')) {
      throw std::invalid_argument("expected x or y in '" + text + "'");
    }
    const char var = text[pos++];
    int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = static_cast<int>(integer());
    }
    (var == 'x' ? out.x_ : out.y_)[exponent] += coeff;
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '+') throw std::invalid_argument("expected '+' in '" + text + "'");
    ++pos;
  }
  return out;
}

}  // namespace axiskit
