// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ellcup/arith.hpp"

namespace ellcup
{
u64 powmod(u64 a, u64 e, u64 p) noexcept
{
    u64 r = 1 % p;
    a %= p;
    while (e != 0)
    {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p)
{
    i64 t = 0, nt = 1;
    i64 r = static_cast<i64>(p), nr = static_cast<i64>(a % p);
    while (nr != 0)
    {
        const i64 q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1)
        throw Error("element is not invertible");
    return reduce_signed(t, p);
}

bool is_prime(u64 n) noexcept
{
    if (n < 2)
        return false;
    for (const u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    {
        if (n % small == 0)
            return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0)
    {
        d >>= 1;
        ++s;
    }
    // These witnesses are deterministic for all 64-bit inputs.
    for (const u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s && composite; ++i)
        {
            x = mulmod(x, x, n);
            if (x == n - 1)
                composite = false;
        }
        if (composite)
            return false;
    }
    return true;
}

int valuation(const mpz_class& n, u64 ell)
{
    if (n == 0)
        throw Error("valuation of zero");
    mpz_class t = n;
    int v = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), ell))
    {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), ell);
        ++v;
    }
    return v;
}

int valuation(u64 n, u64 ell) noexcept
{
    int v = 0;
    while (n != 0 && n % ell == 0)
    {
        n /= ell;
        ++v;
    }
    return v;
}

u64 ipow(u64 b, int e) noexcept
{
    u64 r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

std::vector<u64> prime_factors(u64 n)
{
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d)
    {
        if (n % d == 0)
        {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::vector<mpz_class> prime_factors(const mpz_class& n)
{
    std::vector<mpz_class> out;
    mpz_class t = n;
    for (unsigned long d = 2; d < 1000000 && mpz_class(d) * d <= t; ++d)
    {
        if (mpz_divisible_ui_p(t.get_mpz_t(), d))
        {
            out.emplace_back(d);
            while (mpz_divisible_ui_p(t.get_mpz_t(), d))
                mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), d);
        }
    }
    if (t > 1)
    {
        if (mpz_probab_prime_p(t.get_mpz_t(), 30) == 0)
            throw Error("cannot factor " + n.get_str());
        out.push_back(t);
    }
    return out;
}

std::mt19937_64 seeded_rng(const std::vector<u64>& words)
{
    std::vector<std::uint32_t> seq;
    seq.reserve(words.size() * 2);
    for (const u64 w : words)
    {
        seq.push_back(static_cast<std::uint32_t>(w));
        seq.push_back(static_cast<std::uint32_t>(w >> 32));
    }
    std::seed_seq ss(seq.begin(), seq.end());
    return std::mt19937_64(ss);
}

}  // namespace ellcup
