// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ellcup
{
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Raised when a precondition of a computation fails or a search budget runs out.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Default cap on extension degrees reached by division-field searches.
inline constexpr int kDefaultDegreeCap = 64;

inline u64 mulmod(u64 a, u64 b, u64 p) noexcept
{
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

u64 powmod(u64 a, u64 e, u64 p) noexcept;
u64 invmod(u64 a, u64 p);
bool is_prime(u64 n) noexcept;

/// Reduces a signed integer into [0, p).
inline u64 reduce_signed(i64 v, u64 p) noexcept
{
    const i64 r = v % static_cast<i64>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(p) : r);
}

/// ell-adic valuation of a nonzero integer.
int valuation(const mpz_class& n, u64 ell);
int valuation(u64 n, u64 ell) noexcept;

u64 ipow(u64 b, int e) noexcept;

/// Distinct prime factors, ascending.
std::vector<u64> prime_factors(u64 n);
std::vector<mpz_class> prime_factors(const mpz_class& n);

/// Deterministic generator seeded from a list of integers.
std::mt19937_64 seeded_rng(const std::vector<u64>& words);

}  // namespace ellcup
