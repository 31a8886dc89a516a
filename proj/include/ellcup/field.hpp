// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ellcup/arith.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ellcup
{
/// A finite field F_{p^m} = F_p[x]/(modulus) together with the working prime ell and the
/// canonical ell-th root of unity zeta0 of F_p.
struct FieldCtx
{
    u64 p = 0;
    u64 ell = 0;
    int m = 1;
    /// Monic, least degree first, length m + 1. Empty when m == 1.
    std::vector<u64> modulus;
    /// Least element of {2, 3, ...} that is not an ell-th power in F_p.
    u64 nonresidue = 0;
    u64 zeta0 = 0;
    /// Nonzero coefficients of modulus below x^m, as (degree, coefficient).
    std::vector<std::pair<int, u64>> tail;

    mpz_class order() const;
};

using Field = std::shared_ptr<const FieldCtx>;

/// Builds F_{p^m}. For m > 1 the modulus is the first monic irreducible polynomial of degree m
/// when coefficient sequences (c_0, ..., c_{m-1}) are ordered lexicographically.
Field make_context(u64 p, u64 ell, int m, int degree_cap = kDefaultDegreeCap);

/// Parses "p:<prime>,l:<ell>,m:<degree>".
Field parse_field_spec(const std::string& spec, int degree_cap = kDefaultDegreeCap);

/// Element of F_{p^m} in the polynomial basis.
class FElem
{
public:
    FElem() = default;
    FElem(Field f, std::vector<u64> coeffs);

    static FElem zero(const Field& f);
    static FElem one(const Field& f);
    static FElem from_int(const Field& f, i64 v);

    const Field& field() const noexcept { return f_; }
    const std::vector<u64>& coeffs() const noexcept { return c_; }
    u64 coeff(int i) const noexcept { return c_[static_cast<size_t>(i)]; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// True if the element lies in the prime field.
    bool in_prime_field() const noexcept;

    FElem operator-() const;
    FElem& operator+=(const FElem& o);
    FElem& operator-=(const FElem& o);
    FElem& operator*=(const FElem& o);

    FElem inverse() const;
    FElem pow(const mpz_class& e) const;
    FElem pow(u64 e) const;
    FElem square() const;
    /// The p-th power map.
    FElem frobenius() const;

    bool operator==(const FElem& o) const noexcept { return c_ == o.c_; }
    bool operator!=(const FElem& o) const noexcept { return c_ != o.c_; }
    /// Lexicographic order on (c_0, ..., c_{m-1}).
    bool operator<(const FElem& o) const noexcept { return c_ < o.c_; }

    /// Comma-separated coefficients, least degree first.
    std::string str() const;

private:
    Field f_;
    std::vector<u64> c_;
};

inline FElem operator+(FElem a, const FElem& b) { return a += b; }
inline FElem operator-(FElem a, const FElem& b) { return a -= b; }
inline FElem operator*(FElem a, const FElem& b) { return a *= b; }

bool is_square(const FElem& a);
/// A square root, or nothing. The root returned is the lexicographically smaller one.
std::optional<FElem> sqrt(const FElem& a);

FElem random_element(const Field& f, std::mt19937_64& rng);

/// Enumerates all elements in lexicographic order; only for tiny fields.
std::vector<FElem> all_elements(const Field& f);

/// Root of unity of order ell in F_p, as a field element of f.
FElem canonical_mu_generator(const Field& f);

/// Element of mu_ell written as zeta0^e.
struct MuRoot
{
    u64 e = 0;
    u64 ell = 0;

    MuRoot operator+(const MuRoot& o) const { return {(e + o.e) % ell, ell}; }
    MuRoot operator-() const { return {(ell - e) % ell, ell}; }
    MuRoot scaled(u64 k) const { return {static_cast<u64>((static_cast<unsigned __int128>(e) * k) % ell), ell}; }
    bool trivial() const noexcept { return e == 0; }
    bool operator==(const MuRoot& o) const noexcept { return e == o.e && ell == o.ell; }
};

/// Exponent e with x^{(p-1)/ell} = zeta0^e, for x a nonzero element of F_p.
u64 chi(const Field& f, const FElem& x);
u64 chi(const Field& f, u64 x);

/// Discrete log of an ell-th root of unity against zeta0.
MuRoot mu_log(const FElem& z);

/// Embeds src into dst by sending the generator to the lexicographically least root of
/// src.modulus in dst.
FElem embed(const Field& src, const Field& dst, const FElem& x);

/// Image of the generator of src under embed; exposed so that repeated embeddings can reuse it.
FElem embedding_root(const Field& src, const Field& dst);
FElem embed_with_root(const FElem& root, const Field& dst, const FElem& x);

namespace poly
{
using Poly = std::vector<u64>;  // least degree first, no trailing zeros
void trim(Poly& a);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly mod(Poly a, const Poly& m, u64 p);
Poly gcd(Poly a, Poly b, u64 p);
Poly powmod_x(const mpz_class& e, const Poly& m, u64 p);
bool is_irreducible(const Poly& f, u64 p);
}  // namespace poly

}  // namespace ellcup
