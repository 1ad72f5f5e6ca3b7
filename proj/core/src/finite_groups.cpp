#include "covol/finite_groups.hpp"

#include <algorithm>
#include <numeric>

namespace covol {

Composition::Composition(std::vector<long> p) : parts(std::move(p)) {
  if (parts.empty()) throw DomainError("empty composition");
  for (long x : parts)
    if (x <= 0) throw DomainError("composition parts must be positive");
}

long Composition::n() const {
  return std::accumulate(parts.begin(), parts.end(), 0L);
}

Composition Composition::reversed() const {
  std::vector<long> p(parts.rbegin(), parts.rend());
  return Composition(std::move(p));
}

Integer order_sl(long n, long q) {
  if (n < 2 || q < 2) throw DomainError("order_sl requires n, q >= 2");
  Integer qn = pow_int(Integer(q), static_cast<unsigned long>(n));
  Integer result(1);
  for (long j = 0; j < n; ++j) {
    result *= qn - pow_int(Integer(q), static_cast<unsigned long>(j));
  }
  return result / Integer(q - 1);
}

namespace {

Integer q_factorial_product(long top, long q) {
  Integer result(1);
  for (long j = 1; j <= top; ++j) {
    result *= pow_int(Integer(q), static_cast<unsigned long>(j)) - 1;
  }
  return result;
}

}  // namespace

Integer parabolic_index(const Composition& c, long q) {
  if (q < 2) throw DomainError("parabolic_index requires q >= 2");
  Integer num = q_factorial_product(c.n(), q);
  Integer den(1);
  for (long part : c.parts) den *= q_factorial_product(part, q);
  return num / den;
}

Integer parabolic_index_lower(const Composition& c, long q) {
  long n = c.n();
  long sum_sq = 0;
  for (long part : c.parts) sum_sq += part * part;
  long exponent = (n * n - sum_sq) / 2;
  return pow_int(Integer(q), static_cast<unsigned long>(exponent));
}

namespace {

bool is_prime(long q) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// A subspace of F_q^n: the row-reduced basis plus the full element set
// (vectors encoded in base q), sorted for membership queries.
struct Subspace {
  std::vector<std::vector<int>> basis;
  std::vector<unsigned> elements;
};

unsigned encode(const std::vector<int>& v, long q) {
  unsigned code = 0;
  for (int c : v) code = code * static_cast<unsigned>(q) + static_cast<unsigned>(c);
  return code;
}

std::vector<unsigned> span_of(const std::vector<std::vector<int>>& basis, long n, long q) {
  const size_t d = basis.size();
  size_t combos = 1;
  for (size_t i = 0; i < d; ++i) combos *= static_cast<size_t>(q);
  std::vector<unsigned> out;
  out.reserve(combos);
  std::vector<int> coeff(d, 0), vec(static_cast<size_t>(n));
  for (size_t idx = 0; idx < combos; ++idx) {
    size_t t = idx;
    for (size_t i = 0; i < d; ++i) {
      coeff[i] = static_cast<int>(t % static_cast<size_t>(q));
      t /= static_cast<size_t>(q);
    }
    std::fill(vec.begin(), vec.end(), 0);
    for (size_t i = 0; i < d; ++i)
      for (long j = 0; j < n; ++j)
        vec[static_cast<size_t>(j)] =
            (vec[static_cast<size_t>(j)] + coeff[i] * basis[i][static_cast<size_t>(j)]) %
            static_cast<int>(q);
    out.push_back(encode(vec, q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All dimension-d subspaces via row-reduced echelon bases: one basis per
// subspace, so no deduplication is needed.
std::vector<Subspace> subspaces_of_dim(long n, long d, long q) {
  std::vector<Subspace> out;
  std::vector<long> pivots(static_cast<size_t>(d));
  std::iota(pivots.begin(), pivots.end(), 0);
  auto advance_pivots = [&]() -> bool {
    long i = d - 1;
    while (i >= 0 && pivots[static_cast<size_t>(i)] == n - d + i) --i;
    if (i < 0) return false;
    ++pivots[static_cast<size_t>(i)];
    for (long j = i + 1; j < d; ++j)
      pivots[static_cast<size_t>(j)] = pivots[static_cast<size_t>(j - 1)] + 1;
    return true;
  };
  do {
    // free entries: (row i, col j) with j > pivots[i] and j not a pivot
    std::vector<std::pair<long, long>> free_pos;
    for (long i = 0; i < d; ++i)
      for (long j = pivots[static_cast<size_t>(i)] + 1; j < n; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
          free_pos.emplace_back(i, j);
    size_t fills = 1;
    for (size_t i = 0; i < free_pos.size(); ++i) fills *= static_cast<size_t>(q);
    for (size_t idx = 0; idx < fills; ++idx) {
      std::vector<std::vector<int>> basis(
          static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(n), 0));
      for (long i = 0; i < d; ++i)
        basis[static_cast<size_t>(i)][static_cast<size_t>(pivots[static_cast<size_t>(i)])] = 1;
      size_t t = idx;
      for (auto [i, j] : free_pos) {
        basis[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            static_cast<int>(t % static_cast<size_t>(q));
        t /= static_cast<size_t>(q);
      }
      Subspace s;
      s.elements = span_of(basis, n, q);
      s.basis = std::move(basis);
      out.push_back(std::move(s));
    }
  } while (advance_pivots());
  return out;
}

bool subspace_contains(const Subspace& big, const Subspace& small, long q) {
  for (const auto& b : small.basis) {
    unsigned code = encode(b, q);
    if (!std::binary_search(big.elements.begin(), big.elements.end(), code))
      return false;
  }
  return true;
}

}  // namespace

Integer brute_force_flag_count(const Composition& c, long q, long max_n, long max_q) {
  long n = c.n();
  if (n > max_n || q > max_q) throw SizeLimitExceeded();
  if (!is_prime(q)) throw DomainError("brute-force oracle requires prime q");

  // dims of the chain 0 < V_1 < ... < V_{k-1} < F_q^n
  std::vector<long> dims;
  long acc = 0;
  for (size_t i = 0; i + 1 < c.parts.size(); ++i) {
    acc += c.parts[i];
    dims.push_back(acc);
  }
  if (dims.empty()) return Integer(1);  // improper composition: the full group

  std::vector<std::vector<Subspace>> levels;
  for (long d : dims) levels.push_back(subspaces_of_dim(n, d, q));

  Integer count(0);
  std::vector<const Subspace*> chain(levels.size(), nullptr);
  auto recurse = [&](auto&& self, size_t level) -> void {
    if (level == levels.size()) {
      count += 1;
      return;
    }
    for (const Subspace& s : levels[level]) {
      if (level > 0 && !subspace_contains(s, *chain[level - 1], q)) continue;
      chain[level] = &s;
      self(self, level + 1);
    }
  };
  recurse(recurse, 0);
  return count;
}

std::vector<Composition> all_compositions(long n) {
  std::vector<Composition> out;
  std::vector<long> cur;
  auto recurse = [&](auto&& self, long remaining) -> void {
    if (remaining == 0) {
      out.push_back(Composition(cur));
      return;
    }
    for (long first = 1; first <= remaining; ++first) {
      cur.push_back(first);
      self(self, remaining - first);
      cur.pop_back();
    }
  };
  recurse(recurse, n);
  return out;
}

}  // namespace covol
