#include "masseyx/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace masseyx {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients over GF(p)

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial m.
Poly poly_mod(Poly f, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  trim(f);
  while (f.size() > dm) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - lead) * m[i]) % p);
    }
    trim(f);
  }
  return f;
}

// Exhaustive search for a monic factor of degree <= deg(m)/2.
bool is_irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t e = m.size() - 1;
  for (std::size_t d = 1; d <= e / 2; ++d) {
    const std::uint64_t count = [&] {
      std::uint64_t c = 1;
      for (std::size_t i = 0; i < d; ++i) c *= p;
      return c;
    }();
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly f(d + 1, 0);
      std::uint64_t rest = code;
      for (std::size_t i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      f[d] = 1;
      if (poly_mod(m, f, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::optional<std::vector<Elem>> default_modulus(std::uint32_t p, std::uint32_t e) {
  if (p == 2 && e == 2) return std::vector<Elem>{1, 1, 1};        // x^2 + x + 1
  if (p == 2 && e == 3) return std::vector<Elem>{1, 1, 0, 1};     // x^3 + x + 1
  if (p == 3 && e == 2) return std::vector<Elem>{2, 2, 1};        // x^2 + 2x + 2
  if (p == 2 && e == 4) return std::vector<Elem>{1, 1, 0, 0, 1};  // x^4 + x + 1
  if (p == 3 && e == 3) return std::vector<Elem>{1, 2, 0, 1};     // x^3 + 2x + 1
  return std::nullopt;
}

Field make_field(std::uint32_t p, std::uint32_t e, std::optional<std::vector<Elem>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw std::invalid_argument("field extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(e) +
                                  " exceeds 2^16");
    }
  }
  std::vector<Elem> m;
  if (e > 1) {
    if (modulus) {
      m = *modulus;
    } else if (auto def = default_modulus(p, e)) {
      m = *def;
    } else {
      throw std::invalid_argument("no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(e) +
                                  "); pass one explicitly");
    }
    if (m.size() != e + 1) throw std::invalid_argument("modulus must have degree " + std::to_string(e));
    if (std::any_of(m.begin(), m.end(), [p](Elem c) { return c >= p; })) {
      throw std::invalid_argument("modulus coefficient out of range [0, p)");
    }
    if (m.back() != 1) throw std::invalid_argument("modulus is not monic");
    if (!is_irreducible(m, p)) throw std::invalid_argument("modulus is reducible over GF(" + std::to_string(p) + ")");
  } else if (modulus && !modulus->empty()) {
    // A degree-1 monic x + c is accepted and ignored; anything else is an error.
    if (modulus->size() != 2 || (*modulus)[1] != 1 || (*modulus)[0] >= p) {
      throw std::invalid_argument("prime-field modulus must be monic of degree 1");
    }
  }
  return Field(new FieldSpec(p, e, std::move(m)));
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t e, std::vector<Elem> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
  if (e_ == 1) return;

  const std::uint32_t order = q_ - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [this](Elem a, std::uint64_t k) {
    Elem r = 1;
    while (k) {
      if (k & 1) r = poly_mul(r, a);
      a = poly_mul(a, a);
      k >>= 1;
    }
    return r;
  };
  Elem generator = 0;
  for (Elem g = 2; g < q_ && generator == 0; ++g) {
    bool primitive = true;
    for (std::uint32_t f : factors) {
      if (slow_pow(g, order / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) generator = g;
  }
  if (generator == 0) throw std::logic_error("no primitive element found");

  exp_.resize(2 * static_cast<std::size_t>(order));
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = x;
    exp_[i + order] = x;
    log_[x] = i;
    x = poly_mul(x, generator);
  }
}

Elem FieldSpec::poly_mul(Elem a, Elem b) const {
  std::vector<std::uint64_t> da(e_), db(e_), prod(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < e_; ++i) {
    for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (std::size_t deg = prod.size() - 1; deg >= e_; --deg) {
    const std::uint64_t lead = prod[deg];
    if (lead == 0) continue;
    for (std::uint32_t i = 0; i <= e_; ++i) {
      auto& slot = prod[deg - e_ + i];
      slot = (slot + (p_ - lead) * modulus_[i]) % p_;
    }
  }
  Elem r = 0;
  for (std::uint32_t i = e_; i-- > 0;) r = static_cast<Elem>(r * p_ + prod[i]);
  return r;
}

Elem FieldSpec::add(Elem a, Elem b) const noexcept {
  if (e_ == 1) {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  Elem r = 0;
  Elem scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Elem FieldSpec::neg(Elem a) const noexcept {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Elem r = 0;
  Elem scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Elem FieldSpec::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem FieldSpec::mul(Elem a, Elem b) const noexcept {
  if (e_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (e_ == 1) return pow(a, p_ - 2);
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

Elem FieldSpec::pow(Elem a, std::uint64_t k) const noexcept {
  Elem r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::string FieldSpec::header() const {
  std::ostringstream os;
  os << "field " << p_ << ' ' << e_;
  for (Elem c : modulus_) os << ' ' << c;
  return os.str();
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw std::invalid_argument("field element without a field");
  if (!field_->contains(value_)) {
    throw std::out_of_range("value " + std::to_string(value_) + " outside GF(" + std::to_string(field_->q()) + ")");
  }
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (!same_field(a.field(), b.field())) throw std::invalid_argument("arithmetic on elements of different fields");
  return a.field();
}
}  // namespace

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->mul(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_->neg(a.value_)}; }

}  // namespace masseyx
