#include "masseyx/code.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace masseyx {

std::size_t Codeword::weight() const noexcept {
  return static_cast<std::size_t>(std::count_if(coords.begin(), coords.end(), [](Elem x) { return x != 0; }));
}

std::vector<std::size_t> Codeword::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) s.push_back(i + 1);
  return s;
}

LinearCode::LinearCode(Field field, Matrix generator) : field_(std::move(field)), gen_(std::move(generator)) {
  if (!field_) throw std::invalid_argument("code without a field");
  if (gen_.rows() < 1) throw std::invalid_argument("code dimension must be >= 1");
  if (gen_.rows() > gen_.cols()) throw std::invalid_argument("code dimension exceeds length");
  for (std::size_t r = 0; r < gen_.rows(); ++r)
    for (Elem x : gen_.row(r))
      if (!field_->contains(x)) throw std::invalid_argument("generator entry " + std::to_string(x) + " outside field");
  if (rank(*field_, gen_) != gen_.rows()) throw std::invalid_argument("generator matrix is not of full row rank");
}

std::uint64_t LinearCode::size() const noexcept { return saturating_pow(field_->q(), dimension()); }

Matrix LinearCode::canonical_generator() const { return rref(*field_, gen_).reduced; }

bool LinearCode::same_rowspace(const LinearCode& other) const {
  return same_field(field_, other.field_) && length() == other.length() &&
         canonical_generator() == other.canonical_generator();
}

bool LinearCode::contains(std::span<const Elem> word) const {
  if (word.size() != length()) return false;
  return solve_left(*field_, gen_, word).has_value();
}

std::vector<Elem> LinearCode::encode(std::span<const Elem> message) const {
  if (message.size() != dimension()) throw std::invalid_argument("message length must equal code dimension");
  return row_times(*field_, message, gen_);
}

SpanWalker::SpanWalker(const FieldSpec& f, const Matrix& basis, std::span<const Elem> offset,
                       std::uint64_t start_index)
    : f_(f), basis_(basis), digits_(basis.rows(), 0), vec_(basis.cols(), 0) {
  if (!offset.empty()) {
    if (offset.size() != basis.cols()) throw std::invalid_argument("offset length mismatch");
    vec_.assign(offset.begin(), offset.end());
  }
  for (std::size_t i = basis.rows(); i-- > 0;) {
    digits_[i] = static_cast<Elem>(start_index % f.q());
    start_index /= f.q();
  }
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    if (digits_[i] == 0) continue;
    const auto row = basis.row(i);
    for (std::size_t j = 0; j < vec_.size(); ++j) vec_[j] = f.add(vec_[j], f.mul(digits_[i], row[j]));
  }
}

bool SpanWalker::advance() {
  for (std::size_t i = digits_.size(); i-- > 0;) {
    const auto row = basis_.row(i);
    for (std::size_t j = 0; j < vec_.size(); ++j) vec_[j] = f_.add(vec_[j], row[j]);
    if (++digits_[i] < f_.q()) return true;
    digits_[i] = 0;
  }
  return false;
}

BinarySpanWalker::BinarySpanWalker(const SupportTable& basis, std::span<const std::uint64_t> offset,
                                   std::uint64_t start_index)
    : basis_(basis), digits_(basis.size(), 0), vec_(basis.words(), 0) {
  if (!offset.empty()) vec_.assign(offset.begin(), offset.end());
  for (std::size_t i = basis.size(); i-- > 0;) {
    digits_[i] = static_cast<std::uint8_t>(start_index & 1);
    start_index >>= 1;
    if (digits_[i]) {
      const auto row = basis[i];
      for (std::size_t w = 0; w < vec_.size(); ++w) vec_[w] ^= row[w];
    }
  }
}

bool BinarySpanWalker::advance() {
  for (std::size_t i = digits_.size(); i-- > 0;) {
    const auto row = basis_[i];
    for (std::size_t w = 0; w < vec_.size(); ++w) vec_[w] ^= row[w];
    digits_[i] ^= 1;
    if (digits_[i]) return true;
  }
  return false;
}

SupportTable row_supports(const Matrix& m) {
  SupportTable t(m.cols());
  std::vector<std::uint64_t> w(t.words());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::fill(w.begin(), w.end(), 0);
    const auto row = m.row(r);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) set_bit(w, j);
    t.push_back(w);
  }
  return t;
}

SupportTable affine_span_supports(const FieldSpec& f, const Matrix& basis, std::span<const Elem> offset,
                                  std::uint64_t cap) {
  const std::uint64_t total = saturating_pow(f.q(), basis.rows());
  if (total > cap) throw CapExceeded("span enumeration", total, cap);
  SupportTable out(basis.cols());
  out.reserve(total);
  if (f.is_binary()) {
    const SupportTable rows = row_supports(basis);
    std::vector<std::uint64_t> off(out.words(), 0);
    for (std::size_t j = 0; j < offset.size(); ++j)
      if (offset[j] != 0) set_bit(off, j);
    BinarySpanWalker walk(rows, off);
    do {
      out.push_back(walk.current());
    } while (walk.advance());
    return out;
  }
  SpanWalker walk(f, basis, offset);
  std::vector<std::uint64_t> w(out.words());
  do {
    std::fill(w.begin(), w.end(), 0);
    const auto& v = walk.current();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) set_bit(w, j);
    out.push_back(w);
  } while (walk.advance());
  return out;
}

Matrix dual_generator(const LinearCode& c) { return right_kernel(c.gf(), c.generator()); }

LinearCode dual(const LinearCode& c) {
  Matrix h = dual_generator(c);
  if (h.rows() == 0) throw std::invalid_argument("dual of the full space is the zero code");
  return LinearCode(c.field(), std::move(h));
}

std::vector<Codeword> enumerate_codewords(const LinearCode& c, std::uint64_t cap) {
  std::vector<Codeword> out;
  for_each_codeword(c, cap, [&](std::span<const Elem> w) { out.push_back({{w.begin(), w.end()}}); });
  return out;
}

SupportTable codeword_supports(const LinearCode& c, std::uint64_t cap) {
  return affine_span_supports(c.gf(), c.generator(), {}, cap);
}

std::size_t min_distance(const LinearCode& c, std::uint64_t cap) {
  const SupportTable words = codeword_supports(c, cap);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 1; i < words.size(); ++i) best = std::min(best, popcount(words[i]));
  return best;
}

std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t k, std::size_t r) {
  if (r > k) return 0;
  // [k, r] = [k-1, r-1] + q^r [k-1, r]; table over k.
  std::vector<std::uint64_t> row(r + 1, 0);
  row[0] = 1;
  for (std::size_t n = 1; n <= k; ++n) {
    for (std::size_t j = std::min(n, r); j >= 1; --j) {
      const std::uint64_t shifted = saturating_mul(saturating_pow(q, j), row[j]);
      row[j] = row[j - 1] > UINT64_MAX - shifted ? UINT64_MAX : row[j - 1] + shifted;
    }
  }
  return row[r];
}

std::size_t generalized_hamming_weight(const LinearCode& c, std::size_t r, std::uint64_t cap) {
  const std::size_t k = c.dimension();
  if (r < 1 || r > k) throw std::out_of_range("subcode dimension must lie in [1, k]");
  const std::uint64_t q = c.gf().q();
  const std::uint64_t subcodes = gaussian_binomial(q, k, r);
  if (subcodes > cap) throw CapExceeded("generalized Hamming weight subcode enumeration", subcodes, cap);
  const SupportTable words = codeword_supports(c, cap);

  std::vector<std::uint64_t> place(k);  // q^(k-1-j): weight of message digit j in the word index
  for (std::size_t j = 0; j < k; ++j) place[j] = saturating_pow(q, k - 1 - j);

  std::size_t best = c.length();
  std::vector<std::size_t> pivots(r);
  for (std::size_t i = 0; i < r; ++i) pivots[i] = i;
  std::vector<std::uint64_t> acc(words.words());
  while (true) {
    // Free cells of a reduced echelon r x k matrix with these pivots.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t col = pivots[i] + 1; col < k; ++col)
        if (!std::binary_search(pivots.begin(), pivots.end(), col)) cells.emplace_back(i, col);
    std::vector<Elem> digit(cells.size(), 0);
    std::vector<std::uint64_t> index(r);
    while (true) {
      for (std::size_t i = 0; i < r; ++i) index[i] = place[pivots[i]];
      for (std::size_t t = 0; t < cells.size(); ++t) index[cells[t].first] += digit[t] * place[cells[t].second];
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i = 0; i < r; ++i) {
        const auto w = words[index[i]];
        for (std::size_t x = 0; x < acc.size(); ++x) acc[x] |= w[x];
      }
      best = std::min(best, popcount(acc));
      bool wrapped = true;
      for (std::size_t t = cells.size(); t-- > 0;) {
        if (++digit[t] < q) {
          wrapped = false;
          break;
        }
        digit[t] = 0;
      }
      if (wrapped) break;
    }
    // Next pivot combination.
    std::size_t i = r;
    while (i > 0 && pivots[i - 1] == k - r + (i - 1)) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return best;
}

LinearCode restrict_support(const LinearCode& c, std::span<const std::size_t> keep) {
  if (keep.empty()) throw std::invalid_argument("restrict_support: empty coordinate set");
  std::vector<std::size_t> cols(keep.begin(), keep.end());
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  for (auto& x : cols) {
    if (x < 1 || x > c.length()) throw std::out_of_range("restrict_support: coordinate outside [1, N]");
    --x;
  }
  auto reduced = rref(c.gf(), c.generator().columns(cols)).reduced;
  if (reduced.rows() == 0) throw std::invalid_argument("restriction is the zero code");
  return LinearCode(c.field(), std::move(reduced));
}

bool is_self_orthogonal(const LinearCode& c) { return rows_orthogonal(c.gf(), c.generator(), c.generator()); }

bool is_self_dual(const LinearCode& c) { return 2 * c.dimension() == c.length() && is_self_orthogonal(c); }

}  // namespace masseyx
