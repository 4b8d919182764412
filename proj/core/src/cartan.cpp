#include "hyperzeta/cartan.hpp"

#include "hyperzeta/rational.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace hyperzeta {

namespace {

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix chain(int n) {
  IntMatrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

IntMatrix type_matrix(char type, int n) {
  auto bad_rank = [&] {
    return std::invalid_argument(std::string("invalid rank ") + std::to_string(n) + " for type " + type);
  };
  switch (type) {
    case 'A':
      if (n < 1) throw bad_rank();
      return chain(n);
    case 'B': {
      if (n < 2) throw bad_rank();
      auto a = chain(n);
      a[n - 1][n - 2] = -2;  // alpha_n short
      return a;
    }
    case 'C': {
      if (n < 3) throw bad_rank();
      auto a = chain(n);
      a[n - 2][n - 1] = -2;  // alpha_n long
      return a;
    }
    case 'D': {
      if (n < 4) throw bad_rank();
      auto a = chain(n);
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      return a;
    }
    case 'E': {
      if (n < 6 || n > 8) throw bad_rank();
      // Bourbaki: 1-3-4-5-6-(7-8), with 2 attached to 4.
      IntMatrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      return a;
    }
    case 'F': {
      if (n != 4) throw bad_rank();
      auto a = chain(4);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      return a;
    }
    case 'G': {
      if (n != 2) throw bad_rank();
      return {{2, -1}, {-3, 2}};  // alpha_2 long
    }
    default:
      throw std::invalid_argument(std::string("unknown Cartan type '") + type + "'");
  }
}

// Symmetrizers by propagation along the Dynkin graph: d_j = d_i a_ij / a_ji,
// then scaled to the smallest positive integers.
std::vector<int> derive_symmetrizers(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rat> d(n, Rat(0));
  for (std::size_t root = 0; root < n; ++root) {
    if (sgn(d[root]) != 0) continue;
    d[root] = 1;
    std::queue<std::size_t> todo;
    todo.push(root);
    while (!todo.empty()) {
      auto i = todo.front();
      todo.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        if (a[j][i] == 0) throw std::invalid_argument("Cartan matrix is not symmetrizable");
        Rat dj = d[i] * a[i][j] / a[j][i];
        if (sgn(d[j]) == 0) {
          d[j] = dj;
          todo.push(j);
        } else if (d[j] != dj) {
          throw std::invalid_argument("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  BigInt den = 1;
  for (const auto& x : d) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> scaled;
  BigInt g = 0;
  for (const auto& x : d) {
    Rat s = x * Rat(den);
    scaled.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  std::vector<int> out;
  for (auto& s : scaled) out.push_back(static_cast<int>(BigInt(s / g).get_si()));
  return out;
}

bool invertible(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return false;
    std::swap(m[p], m[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return true;
}

// A G2 component is a pair i, j with a_ij * a_ji = 3.
bool has_g2(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j && a[i][j] * a[j][i] == 3) return true;
  return false;
}

}  // namespace

std::shared_ptr<const CartanData> CartanData::from_matrix(IntMatrix a, int ell, std::string name) {
  if (ell < 3 || ell % 2 == 0)
    throw std::invalid_argument("l must be odd and >= 3, got " + std::to_string(ell));
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("Cartan matrix must be nonempty");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("Cartan matrix must be square");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw std::invalid_argument("Cartan matrix needs a_ii = 2");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (a[i][j] > 0 || ((a[i][j] == 0) != (a[j][i] == 0))))
        throw std::invalid_argument("Cartan matrix needs a_ij <= 0 with a_ij = 0 iff a_ji = 0");
  }
  if (!invertible(a)) throw std::invalid_argument("Cartan matrix must be invertible over Q");
  auto d = derive_symmetrizers(a);
  for (int di : d)
    if (di < 1 || di > 3) throw std::invalid_argument("symmetrizers must lie in {1,2,3}");
  const bool g2 = has_g2(a);
  if (g2 && ell % 3 == 0)
    throw std::invalid_argument("l = " + std::to_string(ell) +
                                " is divisible by 3, which is not allowed with a G2 component");
  std::shared_ptr<CartanData> c(new CartanData());
  c->a_ = std::move(a);
  c->d_ = std::move(d);
  c->ell_ = ell;
  c->has_g2_ = g2;
  c->name_ = std::move(name);
  return c;
}

std::shared_ptr<const CartanData> CartanData::of_type(char type, int rank, int ell) {
  return from_matrix(type_matrix(type, rank), ell, std::string(1, type) + std::to_string(rank));
}

std::shared_ptr<const CartanData> CartanData::sl2(int ell) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CartanData>> interned;
  std::lock_guard lock(mutex);
  auto it = interned.find(ell);
  if (it != interned.end()) return it->second;
  auto c = of_type('A', 1, ell);
  interned.emplace(ell, c);
  return c;
}

}  // namespace hyperzeta
