// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ellcup/curve.hpp"
#include "ellcup/pairing.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ellcup;

namespace
{
Curve make(u64 p, u64 ell, i64 a, i64 b)
{
    return curve_new(make_context(p, ell, 1), a, b);
}

CurvePoint pt(const Curve& c, i64 x, i64 y)
{
    return CurvePoint::affine(FElem::from_int(c.base, x), FElem::from_int(c.base, y));
}

u64 naive_count(u64 p, u64 a, u64 b)
{
    u64 n = 1;
    for (u64 x = 0; x < p; ++x)
        for (u64 y = 0; y < p; ++y)
            n += (y * y % p) == (x * x % p * x + a * x + b) % p;
    return n;
}

// #E(F_49) for p = 7 using F_7[i]/(i^2 + 1), independent of the library's field code.
u64 count_over_f49(u64 a, u64 b)
{
    const u64 p = 7;
    struct C
    {
        u64 r, i;
    };
    auto mul = [&](C u, C v) { return C{(u.r * v.r + p * p - u.i * v.i) % p, (u.r * v.i + u.i * v.r) % p}; };
    auto addc = [&](C u, C v) { return C{(u.r + v.r) % p, (u.i + v.i) % p}; };
    u64 n = 1;
    for (u64 xr = 0; xr < p; ++xr)
        for (u64 xi = 0; xi < p; ++xi)
        {
            const C x{xr, xi};
            const C rhs = addc(addc(mul(mul(x, x), x), mul(C{a, 0}, x)), C{b, 0});
            for (u64 yr = 0; yr < p; ++yr)
                for (u64 yi = 0; yi < p; ++yi)
                {
                    const C y2 = mul(C{yr, yi}, C{yr, yi});
                    n += y2.r == rhs.r && y2.i == rhs.i;
                }
        }
    return n;
}

std::vector<CurvePoint> multiples(const Curve& c, const std::vector<CurvePoint>& pts, u64 n)
{
    std::set<CurvePoint> s;
    for (const auto& P : pts)
        s.insert(mul(c, P, static_cast<i64>(n)));
    return {s.begin(), s.end()};
}

struct Sample
{
    u64 p, ell;
    i64 a, b;
};

const std::vector<Sample> kSmall = {{7, 3, 0, -3}, {7, 3, 0, 9}, {13, 3, 0, 1}, {19, 3, 1, 7},
                                    {31, 5, 2, 3}, {13, 2, 1, 0}, {37, 3, 0, 5}, {41, 5, 3, 1}};
}  // namespace

TEST(Curve, Construction)
{
    const Curve e = make(7, 3, 0, -3);
    EXPECT_EQ(e.b, 4u);
    EXPECT_EQ(e.spec(), "p:7,l:3,a:0,b:4");
    EXPECT_THROW(make(7, 3, 0, 0), Error);
    const Curve parsed = parse_curve_spec("p:7,l:3,a:0,b:-3");
    EXPECT_EQ(parsed.b, 4u);
    EXPECT_THROW(parse_curve_spec("p:7,l:3,a:0"), std::invalid_argument);
    EXPECT_THROW(parse_curve_spec("p:7,l:5,a:0,b:1"), Error);
}

TEST(Curve, PrimeModelOfEPrime)
{
    // (w, y~) -> (-3w, 3y~) maps y~^2 = 1 - 3w^3 onto the affine part of y^2 = x^3 + 9.
    for (u64 q : {7, 13, 19, 31, 37, 43, 439})
    {
        std::set<std::pair<u64, u64>> image;
        for (u64 w = 0; w < q; ++w)
            for (u64 t = 0; t < q; ++t)
            {
                if (t * t % q != (1 + q * q * q - 3 * w % q * w % q * w % q) % q)
                    continue;
                const u64 X = (q - 3 * w % q) % q, Y = 3 * t % q;
                EXPECT_EQ(Y * Y % q, (X * X % q * X + 9) % q);
                image.insert({X, Y});
            }
        EXPECT_EQ(image.size() + 1, naive_count(q, 0, 9)) << q;
    }
    const Curve ep = make(7, 3, 0, 9);
    EXPECT_TRUE(on_curve(ep, pt(ep, 0, 3)));  // image of P1 = (0, 1)
}

TEST(GroupLaw, SmallMultiples)
{
    const Curve ep = make(7, 3, 0, 9);
    const CurvePoint P = pt(ep, 0, 3);
    EXPECT_EQ(mul(ep, P, 2), pt(ep, 0, 4));
    EXPECT_TRUE(mul(ep, P, 3).inf);
    EXPECT_EQ(group_law(ep, P, CurvePoint::infinity(ep.base), 1), P);
    EXPECT_EQ(mul(ep, P, -1), pt(ep, 0, 4));
    EXPECT_EQ(parse_point(ep, "0,3"), P);
    EXPECT_THROW(parse_point(ep, "0,2"), Error);
    EXPECT_THROW(parse_point(ep, "0"), std::invalid_argument);
    EXPECT_EQ(P.str(), "0,3");
}

TEST(GroupLaw, Axioms)
{
    for (const auto& s : kSmall)
    {
        const Curve c = make(s.p, s.ell, s.a, s.b);
        const auto pts = rational_points(c);
        const mpz_class N = count_points(c);
        for (size_t i = 0; i < pts.size(); i += 3)
        {
            EXPECT_TRUE(on_curve(c, pts[i]));
            EXPECT_TRUE(mul(c, pts[i], N).inf);
            EXPECT_TRUE(add(c, pts[i], negate(pts[i])).inf);
            for (size_t j = 0; j < pts.size(); j += 5)
            {
                EXPECT_EQ(add(c, pts[i], pts[j]), add(c, pts[j], pts[i]));
                const auto& R = pts[(i + j) % pts.size()];
                EXPECT_EQ(add(c, add(c, pts[i], pts[j]), R), add(c, pts[i], add(c, pts[j], R)));
            }
        }
    }
}

TEST(GroupLaw, ExtensionAxioms)
{
    const Curve c = make(7, 3, 0, -3);
    const Field f = make_context(7, 3, 5);
    auto rng = seeded_rng({11});
    const mpz_class N = order_over_extension(c, 5);
    for (int i = 0; i < 10; ++i)
    {
        const CurvePoint P = random_point(c, f, rng), Q = random_point(c, f, rng), R = random_point(c, f, rng);
        EXPECT_TRUE(on_curve(c, P));
        EXPECT_TRUE(mul(c, P, N).inf);
        EXPECT_EQ(add(c, add(c, P, Q), R), add(c, P, add(c, Q, R)));
        EXPECT_EQ(frobenius(add(c, P, Q)), add(c, frobenius(P), frobenius(Q)));
    }
}

TEST(Counting, Values)
{
    const Curve e = make(7, 3, 0, -3);
    EXPECT_EQ(count_points(e), 3);
    EXPECT_EQ(order_over_extension(e, 1), 3);
    EXPECT_EQ(order_over_extension(e, 2), 39);
    EXPECT_EQ(count_over_f49(0, 4), 39u);
    EXPECT_EQ(order_over_extension(e, 3), 324);
    EXPECT_EQ(count_points(make(7, 3, 0, 9)), 9);
    EXPECT_EQ(order_over_extension(make(7, 3, 0, 9), 2), mpz_class(static_cast<long>(count_over_f49(0, 2))));
}

TEST(Counting, NaiveAndHasse)
{
    for (const auto& s : kSmall)
    {
        const Curve c = make(s.p, s.ell, s.a, s.b);
        const u64 n = naive_count(s.p, c.a, c.b);
        EXPECT_EQ(count_points(c), mpz_class(static_cast<unsigned long>(n)));
        EXPECT_EQ(rational_points(c).size(), n);
        const i64 t = static_cast<i64>(s.p + 1) - static_cast<i64>(n);
        EXPECT_LE(t * t, static_cast<i64>(4 * s.p));
    }
}

TEST(Counting, ExtensionMatchesEnumeration)
{
    const Curve c = make(7, 3, 1, 3);
    for (int m : {2, 3})
    {
        const Field f = make_context(7, 3, m);
        u64 n = 1;
        for (const auto& x : all_elements(f))
        {
            const FElem r = x * x * x + x + FElem::from_int(f, 3);
            if (r.is_zero())
                n += 1;
            else if (is_square(r))
                n += 2;
        }
        EXPECT_EQ(order_over_extension(c, m), mpz_class(static_cast<unsigned long>(n))) << m;
    }
}

TEST(Structure, Examples)
{
    const auto e = group_structure(make(7, 3, 0, -3));
    EXPECT_EQ(e.m1, 1u);
    EXPECT_EQ(e.m2, 3u);
    const Curve ep = make(7, 3, 0, 9);
    const auto s = group_structure(ep);
    EXPECT_EQ(s.m1, 3u);
    EXPECT_EQ(s.m2, 3u);
    EXPECT_EQ(s.G2, pt(ep, 0, 3));
    // Every affine point of E' has order 3.
    for (const auto& P : rational_points(ep))
        if (!P.inf)
            EXPECT_EQ(dbl(ep, P), negate(P));
}

TEST(Structure, Consistency)
{
    for (const auto& s : kSmall)
    {
        const Curve c = make(s.p, s.ell, s.a, s.b);
        const auto gs = group_structure(c);
        EXPECT_EQ(mpz_class(static_cast<unsigned long>(gs.m1 * gs.m2)), count_points(c));
        EXPECT_EQ(gs.m2 % gs.m1, 0u);
        // G1, G2 generate: the span has m1 * m2 elements.
        std::set<CurvePoint> span;
        CurvePoint row = CurvePoint::infinity(c.base);
        for (u64 i = 0; i < gs.m1; ++i)
        {
            CurvePoint T = row;
            for (u64 j = 0; j < gs.m2; ++j)
            {
                span.insert(T);
                T = add(c, T, gs.G2);
            }
            row = add(c, row, gs.G1);
        }
        EXPECT_EQ(span.size(), gs.m1 * gs.m2);
    }
    const auto g2 = group_structure(make(7, 3, 0, -3), 2);
    EXPECT_EQ(g2.m1 * g2.m2, 39u);
}

TEST(Torsion, Examples)
{
    const Curve ep = make(7, 3, 0, 9);
    const auto tb = torsion_basis(ep, 1);
    EXPECT_EQ(tb.m, 1);
    EXPECT_EQ(tb.P1, pt(ep, 0, 3));
    EXPECT_EQ(tb.P2, pt(ep, 3, 1));
    EXPECT_EQ(torsion_basis(make(7, 3, 0, -3), 1).m, 3);
}

TEST(Torsion, BasisProperties)
{
    for (auto [s, n] : std::vector<std::pair<Sample, int>>{
             {{7, 3, 0, 9}, 2}, {{7, 3, 0, -3}, 1}, {{13, 3, 0, 1}, 1}, {{31, 5, 2, 3}, 1}, {{13, 2, 1, 0}, 2}})
    {
        const Curve c = make(s.p, s.ell, s.a, s.b);
        const auto tb = torsion_basis(c, n);
        const u64 N = ipow(s.ell, n);
        EXPECT_EQ(ell_order_exponent(c, tb.P1, s.ell), n);
        EXPECT_EQ(ell_order_exponent(c, tb.P2, s.ell), n);
        EXPECT_FALSE(weil_value(c, tb.P1, tb.P2, N).pow(N / s.ell).is_one());
        // Minimality: E[ell^n] is not rational over any smaller degree.
        for (int m = 1; m < tb.m; ++m)
        {
            const mpz_class order = order_over_extension(c, m);
            if (valuation(order, s.ell) < 2 * n)
                continue;
            const auto pp = primary_part(c, make_context(s.p, s.ell, m), order, s.ell);
            EXPECT_LT(pp.a, n) << m;
        }
    }
}

TEST(Division, Examples)
{
    const Curve ep = make(7, 3, 0, 9);
    const auto d0 = divide_point(ep, CurvePoint::infinity(ep.base), 2);
    EXPECT_TRUE(d0.Q.inf);
    EXPECT_EQ(d0.m, 1);
    const CurvePoint P = pt(ep, 0, 3);
    const auto d = divide_point(ep, P, 1);
    EXPECT_EQ(mul(ep, d.Q, 3), lift(P, d.field));
    EXPECT_EQ(d.m, torsion_basis(ep, 2).m);
    // Least among the nine solutions.
    const auto tb = torsion_basis(ep, 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
        {
            const CurvePoint T = add(ep, mul(ep, lift(tb.P1, d.field), i), mul(ep, lift(tb.P2, d.field), j));
            EXPECT_FALSE(add(ep, d.Q, T) < d.Q);
        }
}

TEST(Division, DefiningProperty)
{
    const Curve e = make(7, 3, 0, -3);
    const CurvePoint P = rational_ell_torsion(e).back();
    for (int n : {1, 2})
    {
        const auto d = divide_point(e, P, n);
        EXPECT_EQ(mul(e, d.Q, static_cast<i64>(ipow(3, n))), lift(P, d.field));
    }
}

TEST(Pic0, Oracle)
{
    for (const auto& s : kSmall)
    {
        const Curve c = make(s.p, s.ell, s.a, s.b);
        const auto pts = rational_points(c);
        const auto basis = pic0_basis(c);
        const auto ellE = multiples(c, pts, s.ell);
        const std::set<CurvePoint> ellset(ellE.begin(), ellE.end());
        EXPECT_EQ(pts.size() / ellE.size(), ipow(s.ell, basis.dim()));
        for (size_t i = 0; i < pts.size(); ++i)
        {
            const auto ci = pic0_coordinates(c, basis, pts[i]);
            const bool zero = std::all_of(ci.begin(), ci.end(), [](u64 v) { return v == 0; });
            EXPECT_EQ(zero, ellset.count(pts[i]) == 1);
            EXPECT_EQ(zero, is_divisible(c, pts[i], s.ell));
            const auto& Q = pts[(7 * i + 3) % pts.size()];
            const auto cq = pic0_coordinates(c, basis, Q);
            const auto cs = pic0_coordinates(c, basis, add(c, pts[i], Q));
            for (size_t k = 0; k < ci.size(); ++k)
                EXPECT_EQ(cs[k], (ci[k] + cq[k]) % s.ell);
        }
        EXPECT_TRUE(pic0_coordinates(c, basis, CurvePoint::infinity(c.base)) ==
                    std::vector<u64>(static_cast<size_t>(basis.dim()), 0));
        if (basis.dim() > 0)
        {
            auto unit = pic0_coordinates(c, basis, basis.generator(basis.dim() - 1));
            EXPECT_EQ(unit.back(), 1u);
            EXPECT_EQ(std::count(unit.begin(), unit.end(), 0u), basis.dim() - 1);
        }
    }
}

TEST(Pic0, TateCrossCheck)
{
    // The Tate pairing against the rational ell-torsion separates the pic0 classes.
    for (const auto& s : std::vector<Sample>{{7, 3, 0, 9}, {13, 3, 0, 1}, {31, 5, 2, 3}})
    {
        const Curve c = make(s.p, s.ell, s.a, s.b);
        const auto basis = pic0_basis(c);
        const auto tors = rational_ell_torsion(c);
        for (const auto& Q : rational_points(c))
        {
            const auto co = pic0_coordinates(c, basis, Q);
            const bool zero = std::all_of(co.begin(), co.end(), [](u64 v) { return v == 0; });
            bool trivial = true;
            for (const auto& P : tors)
                trivial &= tate_pairing(c, P, Q).trivial();
            EXPECT_EQ(zero, trivial);
        }
    }
}

TEST(Divisibility, Values)
{
    const Curve ep = make(439, 3, 0, 9);
    EXPECT_FALSE(is_divisible(ep, pt(ep, 0, 3), 3));
    EXPECT_FALSE(is_divisible(ep, pt(ep, 0, 439 - 3), 3));
    EXPECT_TRUE(is_divisible(ep, CurvePoint::infinity(ep.base), 3));
    auto rng = seeded_rng({12});
    for (int i = 0; i < 10; ++i)
    {
        const CurvePoint R = random_point(ep, ep.base, rng);
        EXPECT_TRUE(is_divisible(ep, mul(ep, R, 3), 3));
        EXPECT_TRUE(is_divisible(ep, mul(ep, R, 12), 6));
    }
}

TEST(Divisibility, Oracle)
{
    for (const auto& s : kSmall)
    {
        const Curve c = make(s.p, s.ell, s.a, s.b);
        const auto pts = rational_points(c);
        for (u64 n : {2, 3, 4, 6, 9})
        {
            const auto nE = multiples(c, pts, n);
            const std::set<CurvePoint> set(nE.begin(), nE.end());
            for (const auto& P : pts)
                EXPECT_EQ(is_divisible(c, P, n), set.count(P) == 1) << s.p << " " << n;
        }
    }
}

TEST(Torsion, ThreeTorsionCount)
{
    for (u64 q : {7, 13, 19, 31, 37, 43, 439})
        for (i64 b : {-3, 9, 2})
        {
            const Curve c = make(q, q % 3 == 1 ? 3 : 2, 0, b);
            u64 n = 0;
            for (const auto& P : rational_points(c))
                n += mul(c, P, 3).inf;
            EXPECT_EQ(count_three_torsion(c), n) << q << " " << b;
        }
}

TEST(Torsion, RationalEllTorsion)
{
    EXPECT_EQ(rational_ell_torsion(make(7, 3, 0, 9)).size(), 9u);
    EXPECT_EQ(rational_ell_torsion(make(7, 3, 0, -3)).size(), 3u);
}

TEST(Dlog, TwoGenerators)
{
    const Curve ep = make(7, 3, 0, 9);
    const auto tb = torsion_basis(ep, 2);
    for (u64 i = 0; i < 9; i += 2)
        for (u64 j = 0; j < 9; j += 3)
        {
            const CurvePoint X = add(ep, mul(ep, tb.P1, static_cast<i64>(i)), mul(ep, tb.P2, static_cast<i64>(j)));
            const auto co = dlog2(ep, X, tb.P1, 2, tb.P2, 2, 3);
            ASSERT_TRUE(co.has_value());
            EXPECT_EQ(co->first, i);
            EXPECT_EQ(co->second, j);
        }
    // Unequal orders.
    const CurvePoint S1 = mul(ep, tb.P1, 3);
    const auto co = dlog2(ep, add(ep, S1, mul(ep, tb.P2, 5)), S1, 1, tb.P2, 2, 3);
    ASSERT_TRUE(co.has_value());
    EXPECT_EQ(co->first, 1u);
    EXPECT_EQ(co->second, 5u);
    EXPECT_FALSE(dlog2(ep, tb.P1, S1, 1, tb.P2, 2, 3).has_value());
}
