// Copyright 2026 The autexcl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "autexcl/arith.h"

namespace autexcl {

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt b(static_cast<unsigned long>(base));
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

std::uint64_t mod_reduce(const BigInt& x, std::uint64_t modulus) {
  BigInt r;
  BigInt m(static_cast<unsigned long>(modulus));
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t()));
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t modulus) {
  if (modulus == 1) return 0;
  std::uint64_t result = 1;
  base %= modulus;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto primes = prime_divisors(n);
  if (primes.size() != 1) return std::nullopt;
  return primes.front();
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base,
                                         std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
    r *= base;
  }
  return r;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace autexcl
