#include "masseyx/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "masseyx/error.hpp"

namespace masseyx {

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const noexcept {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return b < a;
}

SparseEnumerator::SparseEnumerator(unsigned g) : g_(g) {
  if (g > 8) throw std::invalid_argument("fold count above 8 is not supported");
}

void SparseEnumerator::add(const Exponents& e, const BigInt& c) {
  if (e.size() != variables()) throw std::invalid_argument("exponent vector must have 2^g entries");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt SparseEnumerator::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt SparseEnumerator::value_at_ones() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool SparseEnumerator::homogeneous_of_degree(std::size_t degree) const {
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), std::size_t{0}) != degree) return false;
  return true;
}

std::string pretty(const SparseEnumerator& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    BigInt mag = c;
    if (c < 0) {
      os << (first ? "-" : " - ");
      mag = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    const bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    if (mag != 1 || constant) os << mag;
    for (std::size_t a = 0; a < e.size(); ++a) {
      if (e[a] == 0) continue;
      os << "x_" << a;
      if (e[a] > 9)
        os << "^{" << e[a] << '}';
      else if (e[a] > 1)
        os << '^' << e[a];
    }
  }
  return os.str();
}

SparseEnumerator parse_polynomial(std::string_view text, unsigned g) {
  SparseEnumerator p(g);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_uint = [&]() -> std::string {
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    if (digits.empty()) throw ParseError("expected digits in polynomial at offset " + std::to_string(i));
    return digits;
  };
  skip_ws();
  if (text.substr(i) == "0") return p;
  while (i < text.size()) {
    skip_ws();
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    }
    BigInt coef = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) coef = BigInt(read_uint());
    Exponents e(p.variables(), 0);
    skip_ws();
    while (i < text.size() && text[i] == 'x') {
      ++i;
      if (i >= text.size() || text[i] != '_') throw ParseError("expected '_' after 'x'");
      ++i;
      bool braced = i < text.size() && text[i] == '{';
      if (braced) ++i;
      const auto var = std::stoul(read_uint());
      if (braced) {
        if (i >= text.size() || text[i] != '}') throw ParseError("unclosed '{' in variable index");
        ++i;
      }
      if (var >= e.size()) throw ParseError("variable x_" + std::to_string(var) + " outside 2^g variables");
      std::uint32_t power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        braced = i < text.size() && text[i] == '{';
        if (braced) ++i;
        power = static_cast<std::uint32_t>(std::stoul(read_uint()));
        if (braced) {
          if (i >= text.size() || text[i] != '}') throw ParseError("unclosed '{' in exponent");
          ++i;
        }
      }
      e[var] += power;
      skip_ws();
    }
    p.add(e, sign * coef);
    skip_ws();
    if (i < text.size() && text[i] != '+' && text[i] != '-')
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in polynomial");
  }
  return p;
}

nlohmann::json to_json(const SparseEnumerator& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"coef", c.str()}, {"exp", e}});
  return {{"g", p.g()}, {"terms", terms}};
}

SparseEnumerator polynomial_from_json(const nlohmann::json& j) {
  SparseEnumerator p(j.at("g").get<unsigned>());
  for (const auto& t : j.at("terms")) p.add(t.at("exp").get<Exponents>(), BigInt(t.at("coef").get<std::string>()));
  return p;
}

}  // namespace masseyx
