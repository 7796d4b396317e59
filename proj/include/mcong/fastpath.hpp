#pragma once

// Scheme coefficients by base-m digit recursion.
//
// Reading off the coefficient of q^n in F_i = E + P(q) F_i(q^m):
//   f(n) = e(n) + sum_{k : 0 <= n - m k <= deg P} P[n - m k] f(k),
// and every k on the right is at most n/m, so the recursion peels one base-m
// digit per level and touches a window of about deg(P)/m + 1 indices there.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "mcong/modular.hpp"
#include "mcong/scheme.hpp"

namespace mcong {

class DigitEvaluator {
 public:
  explicit DigitEvaluator(const Scheme& scheme) : scheme_(scheme) {}

  Residue operator()(std::uint64_t n) { return eval(n); }

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  Residue eval(std::uint64_t n) {
    if (n == 0) return scheme_.seed % scheme_.m;
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    const Residue m = scheme_.m;
    Residue acc = scheme_.E.num.empty() ? 0 : ratfun_coeff_mod(scheme_.E, n);
    const std::uint64_t top = n / m;
    for (std::uint64_t k = top + 1; k-- > 0;) {
      const std::uint64_t offset = n - m * k;
      if (offset >= scheme_.P.size()) break;
      const Residue c = scheme_.P[offset];
      if (c == 0) continue;
      acc = mod_add(acc, mod_mul(c, eval(k), m), m);
    }
    memo_.emplace(n, acc);
    return acc;
  }

  const Scheme& scheme_;
  std::unordered_map<std::uint64_t, Residue> memo_;
};

/// f_i(n) mod m.
inline Residue scheme_coeff(const Scheme& scheme, std::uint64_t n) { return DigitEvaluator(scheme)(n); }

/// Residues for n0, ..., n0 + count - 1, sharing one memo table.
inline std::vector<Residue> scheme_coeff_block(const Scheme& scheme, std::uint64_t n0, std::size_t count) {
  if (count == 0) throw InvalidArgument("block size must be positive");
  DigitEvaluator eval(scheme);
  std::vector<Residue> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(eval(n0 + k));
  return out;
}

/// Upper bound on DigitEvaluator::memo_size() after a single query at n.
inline std::uint64_t memo_bound(const Scheme& scheme, std::uint64_t n) {
  std::uint64_t levels = 0;
  for (std::uint64_t v = n; v >= scheme.m; v /= scheme.m) ++levels;  // floor(log_m n)
  const std::uint64_t deg = scheme.P.empty() ? 0 : static_cast<std::uint64_t>(scheme.degree_P());
  return (deg / scheme.m + 2) * (levels + 2);
}

}  // namespace mcong
