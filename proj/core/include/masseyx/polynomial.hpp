#pragma once

// Exact polynomials in the 2^g pattern variables x_0 .. x_{2^g - 1}.
// Variable a stands for the zero/nonzero pattern (a_1, ..., a_g) read as a
// binary number with a_1 most significant, so for g = 4 x_10 is (1,0,1,0).

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace masseyx {

using BigInt = boost::multiprecision::cpp_int;
using Exponents = std::vector<std::uint32_t>;

// Higher total degree first, then lexicographically larger exponent vectors.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

class SparseEnumerator {
 public:
  using TermMap = std::map<Exponents, BigInt, GradedLexGreater>;

  explicit SparseEnumerator(unsigned g = 1);

  unsigned g() const noexcept { return g_; }
  std::size_t variables() const noexcept { return std::size_t{1} << g_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  // Adds c to the coefficient of x^e; zero coefficients are removed.
  void add(const Exponents& e, const BigInt& c);
  BigInt coefficient(const Exponents& e) const;
  // Sum of coefficients, i.e. the value at x_a = 1 for all a.
  BigInt value_at_ones() const;
  // True iff every monomial has total degree `degree`.
  bool homogeneous_of_degree(std::size_t degree) const;

  friend bool operator==(const SparseEnumerator& a, const SparseEnumerator& b) {
    return a.g_ == b.g_ && a.terms_ == b.terms_;
  }

 private:
  unsigned g_;
  TermMap terms_;
};

// 4x_1^3x_2^3 + 12x_0^2x_1x_2x_3^2; exponents above 9 use braces.
std::string pretty(const SparseEnumerator& p);
// Inverse of pretty(); also accepts spaces and x_0^12 without braces.
SparseEnumerator parse_polynomial(std::string_view text, unsigned g);

// {"g": g, "terms": [{"exp": [...], "coef": "..."}]} in graded-lex order.
nlohmann::json to_json(const SparseEnumerator& p);
SparseEnumerator polynomial_from_json(const nlohmann::json& j);

}  // namespace masseyx
