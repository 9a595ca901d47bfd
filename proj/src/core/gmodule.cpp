#include "gmodule.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "errors.hpp"

namespace curveclass::gmodule {

namespace {

constexpr std::size_t kMaxRank = 16;

void check_square(const Matrix& m, std::size_t n) {
  if (m.size() != n) throw Error(ErrorCode::InvalidArgument, "generator has the wrong size");
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "generator is not square");
}

Matrix minus_identity(Matrix g) {
  for (std::size_t i = 0; i < g.size(); ++i) g[i][i] -= 1;
  return g;
}

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

std::size_t rank_mod_p(Matrix a, std::int64_t p) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  for (auto& row : a)
    for (auto& x : row) x = mod(x, p);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    std::int64_t inv = 1;
    for (std::int64_t e = p - 2, b = a[r][c]; e > 0; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (auto& x : a[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t k = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - k * a[r][j], p);
    }
    ++r;
  }
  return r;
}

// Permutation of {0..n-1} as images.
using Perm = std::vector<int>;

int perm_sign(const Perm& s) {
  int sign = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) sign = -sign;
  return sign;
}

}  // namespace

std::vector<Matrix> closure(std::size_t rank, const std::vector<Matrix>& generators, std::size_t cap) {
  for (const auto& g : generators) {
    check_square(g, rank);
    const auto det = smith::determinant(g);
    if (det != 1 && det != -1) throw Error(ErrorCode::NotInvertible, "generator is not invertible over Z");
  }
  std::set<Matrix> seen{smith::identity(rank)};
  std::deque<Matrix> queue{smith::identity(rank)};
  try {
    while (!queue.empty()) {
      const Matrix cur = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : generators) {
        Matrix next = smith::multiply(g, cur);
        if (seen.insert(next).second) {
          if (seen.size() > cap) throw Error(ErrorCode::NotFinite, "group exceeds the closure cap");
          queue.push_back(std::move(next));
        }
      }
    }
  } catch (const std::overflow_error&) {
    throw Error(ErrorCode::NotFinite, "matrix entries grow without bound");
  }
  return {seen.begin(), seen.end()};
}

GModule make_module(std::size_t rank, std::vector<Matrix> generators, std::string label) {
  if (rank == 0 || rank > kMaxRank) throw Error(ErrorCode::InvalidArgument, "rank must be between 1 and 16");
  GModule m;
  m.rank = rank;
  m.elements = closure(rank, generators, 10'000);
  m.generators = std::move(generators);
  m.label = std::move(label);
  return m;
}

Coinvariants coinvariants(const GModule& module) {
  // relations (g - 1)v span the column space of [g_1 - 1 | g_2 - 1 | ...]
  smith::RowLattice lattice(module.rank);
  for (const auto& g : module.elements)
    for (const auto& col : smith::transpose(minus_identity(g))) lattice.insert(col);
  const Matrix basis = smith::transpose(lattice.basis(), module.rank);  // m x r
  const auto snf = smith::smith_normal_form(basis, lattice.rank());
  Coinvariants out;
  out.free_rank = module.rank - snf.rank();
  for (auto d : snf.diagonal)
    if (d > 1) out.invariant_factors.push_back(d);
  return out;
}

std::size_t invariants_rank(const GModule& module) {
  smith::RowLattice lattice(module.rank);
  for (const auto& g : module.elements)
    for (const auto& row : minus_identity(g)) lattice.insert(row);
  return module.rank - lattice.rank();
}

Lemma51 lemma51_check(const GModule& module, std::uint32_t p) {
  const auto c = coinvariants(module);
  Lemma51 r;
  r.lhs = c.free_rank > 0;
  r.rhs = r.lhs || std::any_of(c.invariant_factors.begin(), c.invariant_factors.end(),
                               [&](std::int64_t d) { return d % p == 0; });
  r.equal = r.lhs == r.rhs;
  r.p_divides_order = module.group_order() % p == 0;
  return r;
}

KerCoker invcoinv_dims(const Matrix& phi, std::uint32_t p) {
  const std::size_t n = phi.size();
  for (const auto& row : phi)
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "phi must be square");
  Matrix a(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mod((i == j ? 1 : 0) - phi[i][j], p);
  // kernel from the rows of 1 - phi, cokernel from its columns
  KerCoker out;
  out.dim_ker = n - rank_mod_p(a, p);
  out.dim_coker = n - rank_mod_p(smith::transpose(a, n), p);
  return out;
}

GModule random_module(std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  const int n = 2 + static_cast<int>(rng() % 4);  // S_2 .. S_5
  std::vector<Perm> perms;
  const int count = 1 + static_cast<int>(rng() % 2);
  for (int k = 0; k < count; ++k) {
    Perm s(n);
    std::iota(s.begin(), s.end(), 0);
    std::shuffle(s.begin(), s.end(), rng);
    // occasionally a single cycle of odd length, so odd-order groups show up
    if (rng() % 3 == 0) {
      std::iota(s.begin(), s.end(), 0);
      const int len = (n >= 5 && rng() % 2) ? 5 : 3;
      if (len <= n)
        for (int i = 0; i < len; ++i) s[i] = (i + 1) % len;
    }
    perms.push_back(s);
  }
  enum Block { Natural, SignedNatural, Trivial, Sign };
  std::vector<Block> blocks;
  std::size_t rank = 0;
  const int want = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < want; ++k) {
    const auto b = static_cast<Block>(rng() % 4);
    const std::size_t dim = (b == Natural || b == SignedNatural) ? n : 1;
    if (rank + dim > 8) continue;
    blocks.push_back(b);
    rank += dim;
  }
  if (blocks.empty()) {
    blocks.push_back(Natural);
    rank = n;
  }
  std::vector<Matrix> gens;
  for (const auto& s : perms) {
    Matrix m(rank, std::vector<std::int64_t>(rank, 0));
    std::size_t off = 0;
    const int sg = perm_sign(s);
    for (auto b : blocks) {
      if (b == Trivial || b == Sign) {
        m[off][off] = b == Trivial ? 1 : sg;
        off += 1;
        continue;
      }
      const int tw = b == SignedNatural ? sg : 1;
      for (int i = 0; i < n; ++i) m[off + s[i]][off + i] = tw;
      off += n;
    }
    gens.push_back(std::move(m));
  }
  std::string label = "random-" + std::to_string(seed) + "-" + std::to_string(index);
  return make_module(rank, std::move(gens), std::move(label));
}

}  // namespace curveclass::gmodule
