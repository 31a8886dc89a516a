// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ellcup/field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ellcup
{
/// y^2 = x^3 + a x + b over a prime field F_q with q = 1 mod ell. The point at infinity is the
/// base point.
struct Curve
{
    Field base;
    u64 a = 0;
    u64 b = 0;

    u64 q() const noexcept { return base->p; }
    u64 ell() const noexcept { return base->ell; }
    std::string spec() const;
};

Curve curve_new(const Field& ctx, const FElem& a, const FElem& b);
Curve curve_new(const Field& ctx, i64 a, i64 b);

/// Parses "p:<prime>,l:<ell>,a:<int>,b:<int>"; negative coefficients are reduced mod p.
Curve parse_curve_spec(const std::string& spec);

/// Affine point or infinity, over some extension of the base field.
struct CurvePoint
{
    Field field;
    bool inf = true;
    FElem x;
    FElem y;

    static CurvePoint infinity(const Field& f);
    static CurvePoint affine(FElem x, FElem y);

    bool operator==(const CurvePoint& o) const noexcept;
    bool operator!=(const CurvePoint& o) const noexcept { return !(*this == o); }
    /// Infinity first, then lexicographic on (x, y).
    bool operator<(const CurvePoint& o) const noexcept;

    /// "x,y" or "inf"; coordinates over an extension are bracketed coefficient lists.
    std::string str() const;
};

/// Parses "x,y" or "inf" as a point over the base field; checks the curve equation.
CurvePoint parse_point(const Curve& c, const std::string& s);

bool on_curve(const Curve& c, const CurvePoint& P);

CurvePoint negate(const CurvePoint& P);
CurvePoint add(const Curve& c, const CurvePoint& P, const CurvePoint& Q);
CurvePoint dbl(const Curve& c, const CurvePoint& P);
CurvePoint mul(const Curve& c, const CurvePoint& P, const mpz_class& n);
CurvePoint mul(const Curve& c, const CurvePoint& P, i64 n);

/// n P + Q.
CurvePoint group_law(const Curve& c, const CurvePoint& P, const CurvePoint& Q, const mpz_class& n);

/// Coordinate-wise p-th power map.
CurvePoint frobenius(const CurvePoint& P);

/// Moves P into the field f, which must contain the field of definition of P.
CurvePoint lift(const CurvePoint& P, const Field& f);

/// Random affine point of E(F): x is sampled until x^3 + a x + b is a square, then a root is picked.
CurvePoint random_point(const Curve& c, const Field& f, std::mt19937_64& rng);

/// Smallest k with ell^k P = infinity, or -1 if P has no ell-power order within max_k steps.
int ell_order_exponent(const Curve& c, const CurvePoint& P, u64 ell, int max_k = 64);

/// #E(F_q) by enumeration.
mpz_class count_points(const Curve& c);

/// #E(F_{q^m}) from the trace recurrence.
mpz_class order_over_extension(const Curve& c, int m);

/// All points of E(F_q), in the order of operator<.
std::vector<CurvePoint> rational_points(const Curve& c);

struct GroupStructure
{
    u64 m1 = 1;
    u64 m2 = 1;
    CurvePoint G1;
    CurvePoint G2;
};

/// Invariant factors m1 | m2 and generators of E(F_{q^m}), chosen least in point order.
GroupStructure group_structure(const Curve& c, int m = 1, u64 budget = 400000);

/// The ell-primary part of E(F) as Z/ell^a x Z/ell^b with a <= b, found by cofactor sampling.
struct PrimaryPart
{
    u64 ell = 0;
    int a = 0;
    int b = 0;
    CurvePoint S1;  // order ell^a
    CurvePoint S2;  // order ell^b
    mpz_class cofactor;  // group order divided by its ell-part
};

PrimaryPart primary_part(const Curve& c, const Field& f, const mpz_class& order, u64 ell);

/// Coordinates (c1 mod ell^a, c2 mod ell^b) of X = c1 S1 + c2 S2, where S1, S2 are independent of
/// exact orders ell^a <= ell^b. Nothing if X is not in their span.
std::optional<std::pair<u64, u64>> dlog2(const Curve& c, const CurvePoint& X, const CurvePoint& S1, int a,
                                         const CurvePoint& S2, int b, u64 ell);

struct TorsionBasis
{
    int n = 0;
    int m = 0;
    Field field;
    CurvePoint P1;
    CurvePoint P2;
};

/// Basis of E[ell^n] over the smallest F_{q^m} containing it.
TorsionBasis torsion_basis(const Curve& c, int n, int degree_cap = kDefaultDegreeCap);

struct Division
{
    int m = 0;
    Field field;
    CurvePoint Q;
};

/// Least Q with ell^n Q = P over the smallest extension (searched through multiples of the degree of
/// the field of P) where one exists.
Division divide_point(const Curve& c, const CurvePoint& P, int n, int degree_cap = kDefaultDegreeCap);

/// A fixed basis of Pic^0(C)/ell = E(F_q)/ell E(F_q).
struct Pic0Basis
{
    GroupStructure gs;
    mpz_class order;
    mpz_class cofactor;  // prime-to-ell part of the order
    CurvePoint H1, H2;  // cofactor * G1, cofactor * G2
    int e1 = 0, e2 = 0;  // ell-adic valuations of m1, m2
    /// Indices (0 for G1, 1 for G2) of generators whose order is divisible by ell.
    std::vector<int> axes;

    int dim() const noexcept { return static_cast<int>(axes.size()); }
    const CurvePoint& generator(int i) const { return axes[static_cast<size_t>(i)] == 0 ? gs.G1 : gs.G2; }
};

Pic0Basis pic0_basis(const Curve& c);

/// Coordinates of a rational point modulo ell E(F_q).
std::vector<u64> pic0_coordinates(const Curve& c, const Pic0Basis& basis, const CurvePoint& P);
std::vector<u64> pic0_coordinates(const Curve& c, const CurvePoint& P);

/// True iff P lies in n E(F_q).
bool is_divisible(const Curve& c, const CurvePoint& P, u64 n);

/// E(F_q)[ell], sorted.
std::vector<CurvePoint> rational_ell_torsion(const Curve& c);

/// Number of points of E(F_q) killed by 3, via the roots of the 3-division polynomial.
u64 count_three_torsion(const Curve& c);

}  // namespace ellcup
