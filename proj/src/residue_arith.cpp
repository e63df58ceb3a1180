#include "sbgroups/residue_arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "sbgroups/error.hpp"

namespace sbg::nt {

u64 PrimePower::value() const {
  u64 v = 1;
  for (unsigned i = 0; i < exponent; ++i) v *= prime;
  return v;
}

std::vector<u64> Factorization::primes() const {
  std::vector<u64> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

u64 UnitGroupStructure::order() const {
  u64 total = 1;
  for (const auto& c : local_components) total *= c.cyclic_order;
  return total;
}

Residue::Residue(u64 value, u64 modulus) : value_(value), modulus_(modulus) {
  if (modulus == 0 || value >= modulus) {
    throw std::invalid_argument("residue " + std::to_string(value) + " out of range mod " +
                                std::to_string(modulus));
  }
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

u64 inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  // Extended Euclid on signed 128-bit values.
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) {
    throw Error(ErrorKind::NotAUnit, std::to_string(a) + " is not invertible mod " + std::to_string(m));
  }
  __int128 x = old_s % static_cast<__int128>(m);
  if (x < 0) x += m;
  return static_cast<u64>(x);
}

u64 crt(const std::vector<std::pair<u64, u64>>& residues_and_moduli) {
  u64 x = 0;
  u64 modulus = 1;
  for (const auto& [r, m] : residues_and_moduli) {
    if (m == 1) continue;
    // x' = x + modulus * ((r - x) * modulus^{-1} mod m)
    const u64 inv = inverse_mod(modulus % m, m);
    const u64 diff = (r % m + m - x % m) % m;
    const u64 k = mul_mod(diff, inv, m);
    x = static_cast<u64>(static_cast<u128>(modulus) * k + x);
    modulus *= m;
  }
  return x;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These twelve bases are deterministic for n < 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// Brent's variant of Pollard rho; n must be an odd composite.
u64 find_factor(u64 n) {
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    const u64 m = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1U;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_prime_factors(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 f = find_factor(n);
  collect_prime_factors(f, out);
  collect_prime_factors(n / f, out);
}

}  // namespace

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization result;
  result.n = n;
  std::vector<u64> primes;
  u64 rest = n;
  for (u64 p = 2; p < 1000 && p * p <= rest; ++p) {
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  }
  collect_prime_factors(rest, primes);
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!result.factors.empty() && result.factors.back().prime == p) {
      ++result.factors.back().exponent;
    } else {
      result.factors.push_back({p, 1});
    }
  }
  return result;
}

u64 euler_phi(u64 n) {
  u64 phi = n;
  for (const auto& f : factorize(n).factors) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

u64 carmichael_lambda(u64 n) {
  u64 lambda = 1;
  for (const auto& f : factorize(n).factors) {
    u64 local = f.value() / f.prime * (f.prime - 1);
    if (f.prime == 2 && f.exponent >= 3) local /= 2;
    lambda = std::lcm(lambda, local);
  }
  return lambda;
}

UnitGroupStructure unit_group_structure(u64 n) {
  if (n == 0) throw std::invalid_argument("unit_group_structure: n must be positive");
  if (n % 2 == 0) throw Error(ErrorKind::EvenModulus, "unit group structure of even modulus " + std::to_string(n));
  UnitGroupStructure out;
  out.n = n;
  for (const auto& f : factorize(n).factors) {
    const u64 q = f.value();
    out.local_components.push_back({q, q / f.prime * (f.prime - 1)});
  }
  return out;
}

std::vector<Residue> cube_roots_of_unity_brute_force(u64 n) {
  if (n == 0) throw std::invalid_argument("cube_roots_of_unity: n must be positive");
  if (n == 1) return {Residue(0, 1)};
  std::vector<Residue> out;
  for (u64 d = 1; d < n; ++d) {
    if (mul_mod(mul_mod(d, d, n), d, n) == 1) out.emplace_back(d, n);
  }
  return out;
}

namespace {

std::vector<u64> local_cube_roots(const PrimePower& pp) {
  const u64 q = pp.value();
  if (pp.prime == 3) {
    if (pp.exponent == 1) return {1};
    const u64 step = q / 3;
    return {1, 1 + step, 1 + 2 * step};
  }
  if (pp.prime % 3 != 1) return {1};
  const u64 group_order = q / pp.prime * (pp.prime - 1);
  for (u64 x = 2;; ++x) {
    if (x % pp.prime == 0) continue;
    const u64 y = pow_mod(x, group_order / 3, q);
    if (y != 1) return {1, y, mul_mod(y, y, q)};
  }
}

}  // namespace

std::vector<Residue> cube_roots_of_unity_crt(u64 n) {
  if (n == 0) throw std::invalid_argument("cube_roots_of_unity: n must be positive");
  if (n == 1) return {Residue(0, 1)};
  const auto fac = factorize(n);
  std::vector<u64> combined{0};
  u64 modulus = 1;
  for (const auto& pp : fac.factors) {
    const u64 q = pp.value();
    const auto local = local_cube_roots(pp);
    std::vector<u64> next;
    next.reserve(combined.size() * local.size());
    for (u64 c : combined) {
      for (u64 l : local) next.push_back(crt({{c, modulus}, {l, q}}));
    }
    combined = std::move(next);
    modulus *= q;
  }
  std::sort(combined.begin(), combined.end());
  std::vector<Residue> out;
  out.reserve(combined.size());
  for (u64 d : combined) out.emplace_back(d, n);
  return out;
}

std::vector<Residue> cube_roots_of_unity(u64 n) {
  return n <= kBruteForceLimit ? cube_roots_of_unity_brute_force(n) : cube_roots_of_unity_crt(n);
}

u64 multiplicative_order(u64 d, u64 n) {
  if (n == 0) throw std::invalid_argument("multiplicative_order: n must be positive");
  if (gcd(d % n, n) != 1 && n != 1) {
    throw Error(ErrorKind::NotAUnit, std::to_string(d) + " is not a unit mod " + std::to_string(n));
  }
  if (n == 1) return 1;
  u64 order = carmichael_lambda(n);
  for (const auto& f : factorize(order).factors) {
    for (unsigned i = 0; i < f.exponent; ++i) {
      if (pow_mod(d, order / f.prime, n) != 1) break;
      order /= f.prime;
    }
  }
  return order;
}

std::vector<Residue> fixed_subgroup_of_character(u64 n, u64 d) {
  if (n == 0) throw std::invalid_argument("fixed_subgroup_of_character: n must be positive");
  d %= n;
  if (n > 1 && mul_mod(mul_mod(d, d, n), d, n) != 1) {
    throw Error(ErrorKind::NotACubeRoot, std::to_string(d) + "^3 != 1 mod " + std::to_string(n));
  }
  std::vector<Residue> out;
  if (n <= kBruteForceLimit) {
    for (u64 t = 0; t < n; ++t) {
      if (mul_mod(t, d, n) == t) out.emplace_back(t, n);
    }
    return out;
  }
  // t(d - 1) = 0 mod n  <=>  t is a multiple of n / gcd(d - 1, n).
  const u64 step = n / gcd((d + n - 1) % n, n);
  for (u64 t = 0; t < n; t += step) out.emplace_back(t, n);
  return out;
}

}  // namespace sbg::nt
