#include "masseyx/enumerator.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "masseyx/access.hpp"
#include "masseyx/parallel.hpp"

namespace masseyx {

namespace {

constexpr std::uint64_t kDenseCounterLimit = std::uint64_t{1} << 22;

// Accumulates how often each vector of pattern counts (n_a)_{a != 0} occurs.
// n_0 is implied by the number of positions.
class PatternCounter {
 public:
  PatternCounter(unsigned g, std::size_t positions)
      : g_(g), positions_(positions), vars_(std::size_t{1} << g), radix_(vars_, 0) {
    std::uint64_t size = 1;
    for (std::size_t a = 1; a < vars_; ++a) {
      radix_[a] = size;
      size = saturating_mul(size, positions_ + 1);
    }
    if (size <= kDenseCounterLimit) dense_.assign(size, 0);
  }

  void add(std::span<const std::uint32_t> counts, std::uint64_t mult) {
    if (!dense_.empty()) {
      std::uint64_t idx = 0;
      for (std::size_t a = 1; a < vars_; ++a) idx += counts[a] * radix_[a];
      dense_[idx] += mult;
      return;
    }
    Exponents e(counts.begin(), counts.end());
    sparse_[e] += mult;
  }

  void merge(const PatternCounter& other) {
    for (std::size_t i = 0; i < dense_.size(); ++i) dense_[i] += other.dense_[i];
    for (const auto& [e, c] : other.sparse_) sparse_[e] += c;
  }

  SparseEnumerator to_polynomial() const {
    SparseEnumerator p(g_);
    Exponents e(vars_, 0);
    for (std::uint64_t idx = 0; idx < dense_.size(); ++idx) {
      if (dense_[idx] == 0) continue;
      std::uint64_t rest = idx;
      std::size_t used = 0;
      for (std::size_t a = 1; a < vars_; ++a) {
        e[a] = static_cast<std::uint32_t>(rest % (positions_ + 1));
        rest /= positions_ + 1;
        used += e[a];
      }
      e[0] = static_cast<std::uint32_t>(positions_ - used);
      p.add(e, BigInt(dense_[idx]));
    }
    for (const auto& [key, c] : sparse_) {
      Exponents full = key;
      std::size_t used = 0;
      for (std::size_t a = 1; a < vars_; ++a) used += full[a];
      full[0] = static_cast<std::uint32_t>(positions_ - used);
      p.add(full, BigInt(c));
    }
    return p;
  }

 private:
  unsigned g_;
  std::size_t positions_;
  std::size_t vars_;
  std::vector<std::uint64_t> radix_;
  std::vector<std::uint64_t> dense_;
  std::map<Exponents, std::uint64_t> sparse_;
};

// counts[a] for a != 0: positions where the nonzero pattern of the g rows is a
// (first row is the most significant bit).
void pattern_counts(std::span<const std::span<const std::uint64_t>> rows, std::size_t words,
                    std::span<std::uint32_t> counts) {
  const std::size_t g = rows.size();
  const std::size_t vars = std::size_t{1} << g;
  std::fill(counts.begin(), counts.end(), 0);
  for (std::size_t x = 0; x < words; ++x) {
    for (std::size_t a = 1; a < vars; ++a) {
      std::uint64_t m = ~std::uint64_t{0};
      for (std::size_t t = 0; t < g; ++t) m &= ((a >> (g - 1 - t)) & 1) ? rows[t][x] : ~rows[t][x];
      counts[a] += static_cast<std::uint32_t>(std::popcount(m));
    }
  }
}

// Runs over the product of the tables and counts patterns on `positions`
// coordinates. The first table is split across threads.
PatternCounter count_tuple_patterns(const std::vector<SupportTable>& tables, std::size_t positions,
                                    unsigned threads) {
  const std::size_t g = tables.size();
  const std::size_t words = words_for(positions);
  auto make = [&] { return PatternCounter(static_cast<unsigned>(g), positions); };
  auto merge = [](PatternCounter& into, const PatternCounter& from) { into.merge(from); };

  if (g == 2) {
    const auto& a = tables[0];
    const auto& b = tables[1];
    auto body = [&](std::uint64_t begin, std::uint64_t end, PatternCounter& acc) {
      std::uint32_t counts[4];
      for (std::uint64_t i = begin; i < end; ++i) {
        const auto u = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
          const auto v = b[j];
          std::uint32_t n01 = 0, n10 = 0, n11 = 0;
          for (std::size_t x = 0; x < words; ++x) {
            n01 += static_cast<std::uint32_t>(std::popcount(~u[x] & v[x]));
            n10 += static_cast<std::uint32_t>(std::popcount(u[x] & ~v[x]));
            n11 += static_cast<std::uint32_t>(std::popcount(u[x] & v[x]));
          }
          counts[0] = 0;
          counts[1] = n01;
          counts[2] = n10;
          counts[3] = n11;
          acc.add(counts, 1);
        }
      }
    };
    return parallel_reduce(a.size(), threads, make, body, merge);
  }

  auto body = [&](std::uint64_t begin, std::uint64_t end, PatternCounter& acc) {
    std::vector<std::span<const std::uint64_t>> rows(g);
    std::vector<std::uint32_t> counts(std::size_t{1} << g);
    auto descend = [&](auto& self, std::size_t depth) -> void {
      if (depth == g) {
        pattern_counts(rows, words, counts);
        acc.add(counts, 1);
        return;
      }
      for (std::size_t i = 0; i < tables[depth].size(); ++i) {
        rows[depth] = tables[depth][i];
        self(self, depth + 1);
      }
    };
    for (std::uint64_t i = begin; i < end; ++i) {
      rows[0] = tables[0][i];
      descend(descend, 1);
    }
  };
  return parallel_reduce(tables[0].size(), threads, make, body, merge);
}

SupportTable drop_prefix(const SupportTable& t, std::size_t l) {
  const std::size_t n = t.length() - l;
  SupportTable out(n);
  out.reserve(t.size());
  std::vector<std::uint64_t> row(out.words());
  for (std::size_t r = 0; r < t.size(); ++r) {
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
      if (test_bit(t[r], l + i)) set_bit(row, i);
    out.push_back(row);
  }
  return out;
}

std::vector<std::vector<Elem>> span_vectors(const FieldSpec& f, const Matrix& basis, std::span<const Elem> offset) {
  std::vector<std::vector<Elem>> out;
  SpanWalker walk(f, basis, offset);
  do {
    out.push_back(walk.current());
  } while (walk.advance());
  return out;
}

}  // namespace

JweArgument JweArgument::code(LinearCode c) { return JweArgument(std::move(c)); }

JweArgument JweArgument::fixed(std::vector<Elem> coords) { return JweArgument(std::move(coords)); }

JweArgument JweArgument::indicator(std::size_t length, std::span<const std::size_t> positions) {
  std::vector<Elem> v(length, 0);
  for (auto p : positions) {
    if (p < 1 || p > length) throw std::out_of_range("indicator position outside [1, N]");
    v[p - 1] = 1;
  }
  return fixed(std::move(v));
}

std::size_t JweArgument::length() const noexcept {
  return std::visit(
      [](const auto& v) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, LinearCode>)
          return v.length();
        else
          return v.size();
      },
      value_);
}

std::uint64_t JweArgument::count() const noexcept {
  if (const auto* c = std::get_if<LinearCode>(&value_)) return c->size();
  return 1;
}

SupportTable JweArgument::supports(std::uint64_t cap) const {
  if (const auto* c = std::get_if<LinearCode>(&value_)) return codeword_supports(*c, cap);
  const auto& v = std::get<std::vector<Elem>>(value_);
  SupportTable t(v.size());
  std::vector<std::uint64_t> row(t.words(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) set_bit(row, i);
  t.push_back(row);
  return t;
}

SparseEnumerator joint_weight_enumerator(std::span<const JweArgument> args, std::uint64_t cap, unsigned threads) {
  if (args.empty()) throw std::invalid_argument("joint weight enumerator needs at least one argument");
  if (args.size() > 8) throw std::invalid_argument("at most 8 arguments are supported");
  const std::size_t n_len = args.front().length();
  std::uint64_t product = 1;
  for (const auto& a : args) {
    if (a.length() != n_len) throw std::invalid_argument("joint weight enumerator arguments differ in length");
    product = saturating_mul(product, a.count());
  }
  if (product > cap) throw CapExceeded("joint weight enumerator tuple enumeration", product, cap);
  std::vector<SupportTable> tables;
  for (const auto& a : args) tables.push_back(a.supports(cap));
  return count_tuple_patterns(tables, n_len, threads).to_polynomial();
}

SparseEnumerator secret_coefficient(const SchemeInstance& s, std::uint64_t cap, unsigned threads) {
  return secret_coefficient(s.gf(), s.dual_generator(), s.secret_length(), cap, threads);
}

SparseEnumerator secret_coefficient(const FieldSpec& f, const Matrix& dual_generator, std::size_t l,
                                    std::uint64_t cap, unsigned threads) {
  if (l < 1 || l > 8) throw std::out_of_range("secret length must lie in [1, 8]");
  const RecoverySpace space = recovery_space(f, dual_generator, l);
  if (space.empty()) return SparseEnumerator(static_cast<unsigned>(l));
  const std::uint64_t tuples = saturating_pow(f.q(), static_cast<std::uint64_t>(l) * space.directions.rows());
  if (tuples > cap) throw CapExceeded("secret coefficient tuple enumeration", tuples, cap);
  std::vector<SupportTable> tables;
  for (std::size_t j = 0; j < l; ++j)
    tables.push_back(drop_prefix(affine_span_supports(f, space.directions, space.offsets[j], cap), l));
  const std::size_t n = dual_generator.cols() - l;
  return count_tuple_patterns(tables, n, threads).to_polynomial();
}

CountBound count_bound(const SparseEnumerator& secret_coeff, std::size_t m, std::size_t d_perp) {
  CountBound out;
  for (const auto& [e, c] : secret_coeff.terms()) {
    const std::size_t nonzero = std::accumulate(e.begin() + 1, e.end(), std::size_t{0});
    if (nonzero == m) out.bound += c;
  }
  out.exact = 2 * m + 2 < 3 * d_perp;
  return out;
}

std::uint64_t ExtensionEnumerator::total() const {
  std::uint64_t t = 0;
  for (const auto& [d, c] : terms) t += c;
  return t;
}

ExtensionEnumerator extension_enumerator(const LinearCode& d, std::uint64_t cap) {
  if (!is_self_orthogonal(d)) throw std::invalid_argument("extension enumerator needs a self-orthogonal code");
  const auto& f = d.gf();
  const std::size_t n_len = d.length();
  const std::size_t k = d.dimension();
  const std::uint64_t cosets = saturating_pow(f.q(), n_len - 2 * k);
  if (cosets > cap) throw CapExceeded("extension enumerator coset enumeration", cosets, cap);

  ExtensionEnumerator out;
  out.zero_coset_degree = min_distance(d, cap);

  // Complement of D inside D^perp.
  const Matrix h = dual_generator(d);
  Matrix stack = d.generator();
  std::size_t r = k;
  Matrix complement(0, n_len);
  for (std::size_t i = 0; i < h.rows() && complement.rows() < n_len - 2 * k; ++i) {
    Matrix trial = stack;
    trial.append_row(h.row(i));
    if (rank(f, trial) > r) {
      ++r;
      stack = std::move(trial);
      complement.append_row(h.row(i));
    }
  }

  auto record = [&](std::size_t index, std::size_t min_weight) {
    if (index == 0) {
      ++out.terms[out.zero_coset_degree];
      return;
    }
    const std::size_t deg = std::min(out.zero_coset_degree, min_weight);
    ++out.terms[deg];
    out.max_nonzero_degree = std::max(out.max_nonzero_degree, deg);
  };

  if (f.is_binary()) {
    const SupportTable words = codeword_supports(d, cap);
    const SupportTable basis = row_supports(complement);
    BinarySpanWalker walk(basis);
    std::size_t index = 0;
    do {
      const auto c = walk.current();
      std::size_t best = n_len + 1;
      for (std::size_t i = 0; i < words.size(); ++i) {
        const auto w = words[i];
        std::size_t wt = 0;
        for (std::size_t x = 0; x < c.size(); ++x) wt += static_cast<std::size_t>(std::popcount(c[x] ^ w[x]));
        best = std::min(best, wt);
      }
      record(index++, best);
    } while (walk.advance());
    return out;
  }

  const auto words = enumerate_codewords(d, cap);
  SpanWalker walk(f, complement);
  std::size_t index = 0;
  do {
    const auto& c = walk.current();
    std::size_t best = n_len + 1;
    for (const auto& w : words) {
      std::size_t wt = 0;
      for (std::size_t x = 0; x < n_len; ++x) wt += f.add(c[x], w.coords[x]) != 0;
      best = std::min(best, wt);
    }
    record(index++, best);
  } while (walk.advance());
  return out;
}

ExactCount verify_exact_count(const SchemeInstance& s, std::size_t m, std::uint64_t cap, unsigned threads) {
  const auto& f = s.gf();
  const std::size_t l = s.secret_length();
  const std::size_t n = s.participants();
  const Matrix& h = s.dual_generator();
  if (!rows_orthogonal(f, h, h))
    throw std::invalid_argument("exact-count certificate needs a self-orthogonal dual code");
  const std::size_t d_perp = min_distance(LinearCode(s.code().field(), h), cap);

  const RecoverySpace space = recovery_space(f, h, l);
  if (space.empty()) return {0, true, 0};
  const std::uint64_t tuples = saturating_pow(f.q(), static_cast<std::uint64_t>(l) * space.directions.rows());
  if (tuples > cap) throw CapExceeded("exact-count tuple enumeration", tuples, cap);

  std::vector<std::vector<std::vector<Elem>>> lists;
  std::vector<SupportTable> masks;
  for (std::size_t j = 0; j < l; ++j) {
    lists.push_back(span_vectors(f, space.directions, space.offsets[j]));
    masks.push_back(drop_prefix(affine_span_supports(f, space.directions, space.offsets[j], cap), l));
  }
  const std::size_t w = words_for(n);

  struct Acc {
    std::vector<std::uint64_t> unions;
    std::uint64_t tuples = 0;
    bool certified = true;
  };
  auto make = [] { return Acc{}; };
  auto body = [&](std::uint64_t begin, std::uint64_t end, Acc& acc) {
    std::vector<std::size_t> pick(l, 0);
    std::vector<std::uint64_t> u(w);
    auto visit = [&] {
      std::fill(u.begin(), u.end(), 0);
      for (std::size_t j = 0; j < l; ++j) {
        const auto mk = masks[j][pick[j]];
        for (std::size_t x = 0; x < w; ++x) u[x] |= mk[x];
      }
      if (popcount(u) != m) return;
      ++acc.tuples;
      acc.unions.insert(acc.unions.end(), u.begin(), u.end());
      if (!acc.certified) return;
      std::vector<std::size_t> keep;
      for (std::size_t j = 0; j < l; ++j) keep.push_back(j);
      for (std::size_t i = 0; i < n; ++i)
        if (test_bit(u, i)) keep.push_back(l + i);
      Matrix rows(0, s.code().length());
      for (std::size_t j = 0; j < l; ++j) rows.append_row(lists[j][pick[j]]);
      const LinearCode dcode(s.code().field(), rows.columns(keep));
      const auto ext = extension_enumerator(dcode, cap);
      if (ext.max_nonzero_degree >= d_perp) acc.certified = false;
    };
    auto descend = [&](auto& self, std::size_t depth) -> void {
      if (depth == l) {
        visit();
        return;
      }
      for (pick[depth] = 0; pick[depth] < lists[depth].size(); ++pick[depth]) self(self, depth + 1);
    };
    for (std::uint64_t i = begin; i < end; ++i) {
      pick[0] = static_cast<std::size_t>(i);
      descend(descend, 1);
    }
  };
  auto merge = [](Acc& into, Acc& from) {
    into.unions.insert(into.unions.end(), from.unions.begin(), from.unions.end());
    into.tuples += from.tuples;
    into.certified = into.certified && from.certified;
  };
  Acc acc = parallel_reduce(lists[0].size(), threads, make, body, merge);

  // Distinct unions.
  std::vector<std::vector<std::uint64_t>> distinct;
  for (std::size_t i = 0; i + w <= acc.unions.size(); i += w)
    distinct.emplace_back(acc.unions.begin() + static_cast<std::ptrdiff_t>(i),
                          acc.unions.begin() + static_cast<std::ptrdiff_t>(i + w));
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  return {distinct.size(), acc.certified, acc.tuples};
}

SparseEnumerator derivative_z(const SparseEnumerator& biweight, std::size_t n_len) {
  if (biweight.g() != 2) throw std::invalid_argument("derivative_z needs a biweight (g = 2) enumerator");
  if (n_len < 2) throw std::invalid_argument("derivative_z needs length >= 2");
  const BigInt denom = BigInt(n_len) * BigInt(n_len - 1);
  SparseEnumerator raw(2);
  for (const auto& [e, c] : biweight.terms()) {
    if (e[1] == 0 || e[2] == 0) continue;
    raw.add({e[0], e[1] - 1, e[2] - 1, e[3]}, c * e[1] * e[2]);
  }
  SparseEnumerator out(2);
  for (const auto& [e, c] : raw.terms()) {
    if (c % denom != 0)
      throw std::domain_error("coefficient " + c.str() + " is not divisible by n(n-1) = " + denom.str() +
                              "; the code is not 2-transitive");
    out.add(e, c / denom);
  }
  return out;
}

SparseEnumerator specialize(const SparseEnumerator& p, std::span<const std::size_t> merge) {
  if (merge.size() != p.variables()) throw std::invalid_argument("merge map must cover every variable");
  for (auto t : merge)
    if (t >= p.variables()) throw std::invalid_argument("merge target outside the variable set");
  SparseEnumerator out(p.g());
  for (const auto& [e, c] : p.terms()) {
    Exponents e2(e.size(), 0);
    for (std::size_t a = 0; a < e.size(); ++a) e2[merge[a]] += e[a];
    out.add(e2, c);
  }
  return out;
}

}  // namespace masseyx
