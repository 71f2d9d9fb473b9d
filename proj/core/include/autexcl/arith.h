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

// Integer helpers shared by every module: the arbitrary-precision type used on
// the exact path and word-sized modular arithmetic used on the modular path.

#ifndef AUTEXCL_ARITH_H_
#define AUTEXCL_ARITH_H_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace autexcl {

using BigInt = mpz_class;

BigInt big_pow(std::uint64_t base, std::uint64_t exp);

// Reduces x into [0, modulus - 1].
std::uint64_t mod_reduce(const BigInt& x, std::uint64_t modulus);

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t modulus) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b %
                                    modulus);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t modulus) {
  std::uint64_t s = a + b;
  if (s < a || s >= modulus) s -= modulus;
  return s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t modulus) {
  return a >= b ? a - b : a + (modulus - b);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t modulus);

bool is_prime(std::uint64_t n);

// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// If n = p^k with p prime and k >= 1, returns p.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

// base^exp, or nullopt on uint64 overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base,
                                         std::uint64_t exp);

std::string to_string(const BigInt& x);

}  // namespace autexcl

#endif  // AUTEXCL_ARITH_H_
