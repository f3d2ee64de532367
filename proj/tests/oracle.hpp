#pragma once

// Independent reference implementations used by the unit tests.

#include <cstdint>
#include <random>
#include <vector>

#include "opcalc/linalg.hpp"

namespace oracle {

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t reduce(const opcalc::Scalar& q) {
  auto to_mod = [](mpz_class z) {
    bool neg = z < 0;
    if (neg) z = -z;
    mpz_class m = z % mpz_class(std::to_string(kPrime));
    std::uint64_t v = std::stoull(m.get_str());
    return neg && v ? kPrime - v : v;
  };
  return mulmod(to_mod(q.get_num()), powmod(to_mod(q.get_den()), kPrime - 2));
}

// Dense Gaussian elimination modulo a 61-bit prime.
inline std::size_t rank_mod_p(const std::vector<opcalc::SparseVector>& rows, std::size_t n) {
  std::vector<std::vector<std::uint64_t>> m;
  for (const auto& r : rows) {
    std::vector<std::uint64_t> d(n, 0);
    for (const auto& [k, c] : r) d[k] = reduce(c);
    m.push_back(std::move(d));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    std::uint64_t inv = powmod(m[rank][col], kPrime - 2);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      std::uint64_t f = mulmod(m[i][col], inv);
      for (std::size_t j = col; j < n; ++j) {
        m[i][j] = (m[i][j] + kPrime - mulmod(f, m[rank][j])) % kPrime;
      }
    }
    ++rank;
  }
  return rank;
}

inline std::vector<opcalc::SparseVector> random_rows(std::mt19937& rng, std::size_t count, std::size_t n,
                                                      double density) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> val(-3, 3);
  std::vector<opcalc::SparseVector> rows;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<opcalc::SparseVector::Entry> e;
    for (std::size_t k = 0; k < n; ++k) {
      if (u(rng) < density) {
        int v = val(rng);
        if (v) e.emplace_back(static_cast<opcalc::Key>(k), opcalc::Scalar(v) / (1 + static_cast<int>(k % 3)));
      }
    }
    rows.push_back(opcalc::SparseVector::from_entries(std::move(e)));
  }
  return rows;
}

}  // namespace oracle
