#pragma once

// Independent machine-integer cyclotomic arithmetic: Phi_n by recursive
// division of x^n - 1, remainders by schoolbook long division.

#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace oracle {

using Poly = std::vector<long long>;  // index = degree

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// remainder of a modulo a monic b
inline Poly rem_monic(Poly a, const Poly& b) {
  trim(a);
  if (b.empty() || b.back() != 1) throw std::logic_error("rem_monic: divisor must be monic");
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const long long lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
    trim(a);
  }
  return a;
}

inline Poly quot_monic(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {};
  Poly q(a.size() - db, 0);
  while (a.size() > db && !a.empty()) {
    const long long lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = lead;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
    trim(a);
  }
  trim(q);
  return q;
}

inline const Poly& phi(long long n) {
  static std::map<long long, Poly> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Poly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (long long d = 1; d < n; ++d) {
    if (n % d == 0) num = quot_monic(num, phi(d));
  }
  return memo.emplace(n, num).first->second;
}

inline Poly compose_power(const Poly& p, long long k) {
  if (p.empty()) return {};
  Poly r((p.size() - 1) * static_cast<std::size_t>(k) + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) r[i * static_cast<std::size_t>(k)] = p[i];
  return r;
}

inline bool divides(const Poly& d, const Poly& p) { return rem_monic(p, d).empty(); }

inline Poly digit_poly(std::span<const std::int64_t> digits) {
  Poly p;
  for (auto a : digits) {
    if (p.size() <= static_cast<std::size_t>(a)) p.resize(static_cast<std::size_t>(a) + 1, 0);
    p[static_cast<std::size_t>(a)] += 1;
  }
  trim(p);
  return p;
}

// sum_{a} e^{2 pi i a p / q} == 0 with p/q in lowest terms, q >= 1
inline bool mask_vanishes(std::span<const std::int64_t> digits, long long p, long long q) {
  if (q == 1) return digits.empty();
  Poly folded(static_cast<std::size_t>(q), 0);
  for (auto a : digits) {
    long long r = ((a % q) * (((p % q) + q) % q)) % q;
    folded[static_cast<std::size_t>(r)] += 1;
  }
  trim(folded);
  return divides(phi(q), folded);
}

}  // namespace oracle
