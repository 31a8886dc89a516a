// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ellcup/galois.hpp"
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

struct Sample
{
    u64 p, ell;
    i64 a, b;
};

// Curves whose division fields stay small at precision v + 3.
const std::vector<Sample> kCurves = {{7, 3, 0, -3}, {7, 3, 0, 9},  {13, 3, 0, 1},  {13, 2, 1, 0},
                                     {17, 2, -1, 0}, {31, 3, 0, 2}, {43, 3, 0, 4}, {11, 5, 0, 1}};

u64 rational_killed_by(const Curve& c, u64 n)
{
    u64 k = 0;
    for (const auto& P : rational_points(c))
        k += mul(c, P, static_cast<i64>(n)).inf;
    return k;
}

// Number of x in (Z/ell^k)^2 with (G - I) x = 0 mod ell^k.
u64 fixed_vectors(const Mat2& G, u64 ell, int k)
{
    const u64 mod = ipow(ell, k);
    u64 n = 0;
    for (u64 a = 0; a < mod; ++a)
        for (u64 b = 0; b < mod; ++b)
        {
            const u64 r0 = (G[0][0] * a + G[0][1] * b + mod * mod - a) % mod;
            const u64 r1 = (G[1][0] * a + G[1][1] * b + mod * mod - b) % mod;
            n += r0 == 0 && r1 == 0;
        }
    return n;
}

// dL by exhaustive search: y over (Z/ell^N)^2, then coefficients over (Z/ell)^{dim + 2}.
std::vector<u64> brute_dl(const Curve& c, const LegendreDerivative& dl, const CurvePoint& P)
{
    const FrobData& fd = dl.frob();
    const u64 ell = fd.ell, mod = fd.mod;
    const Mat2& M = fd.M;
    auto art = [&](const CurvePoint& X, int j) {
        const Vec2 v = torsion_coordinates(c, fd, X, j);
        // (I - M) v / ell^j
        Vec2 r;
        for (int i = 0; i < 2; ++i)
        {
            const u64 mv = (M[i][0] * v[0] + M[i][1] * v[1]) % mod;
            r[i] = ((v[i] + mod - mv) % mod) / ipow(ell, j);
        }
        return r;
    };
    const Vec2 x = art(P, 1);
    std::optional<Vec2> y;
    for (u64 a = 0; a < mod && !y; ++a)
        for (u64 b = 0; b < mod && !y; ++b)
        {
            const u64 r0 = (M[0][0] * a + M[0][1] * b + mod - a) % mod;
            const u64 r1 = (M[1][0] * a + M[1][1] * b + mod - b) % mod;
            if (r0 == ell * x[0] % mod && r1 == ell * x[1] % mod)
                y = Vec2{a, b};
        }
    if (!y)
        return {};
    std::vector<Vec2> cols;
    const auto& basis = dl.basis();
    for (size_t i = 0; i < dl.primary_generators().size(); ++i)
        cols.push_back(art(dl.primary_generators()[i], basis.axes[i] == 0 ? basis.e1 : basis.e2));
    cols.push_back({(M[0][0] + ell * ell - 1) % ell, M[1][0] % ell});
    cols.push_back({M[0][1] % ell, (M[1][1] + ell * ell - 1) % ell});
    const size_t n = cols.size();
    std::vector<u64> coef(n, 0);
    while (true)
    {
        u64 s0 = 0, s1 = 0;
        for (size_t i = 0; i < n; ++i)
        {
            s0 += coef[i] * cols[i][0];
            s1 += coef[i] * cols[i][1];
        }
        if (s0 % ell == (*y)[0] % ell && s1 % ell == (*y)[1] % ell)
            return std::vector<u64>(coef.begin(), coef.begin() + basis.dim());
        size_t i = 0;
        while (i < n && ++coef[i] == ell)
            coef[i++] = 0;
        if (i == n)
            return {};
    }
}
}  // namespace

TEST(Linalg, SolveAgainstEnumeration)
{
    auto rng = seeded_rng({21});
    for (auto [ell, k] : std::vector<std::pair<u64, int>>{{2, 3}, {3, 2}, {3, 3}, {5, 2}})
    {
        const u64 mod = ipow(ell, k);
        std::uniform_int_distribution<u64> d(0, mod - 1);
        for (int trial = 0; trial < 40; ++trial)
        {
            linalg::Matrix A{{d(rng) * (trial % 3 == 0 ? ell : 1) % mod, d(rng)}, {d(rng), d(rng) * ell % mod}};
            if (trial % 5 == 0)
                A[1] = {A[0][0] * ell % mod, A[0][1] * ell % mod};
            const std::vector<u64> b{d(rng) * (trial % 2 ? ell : 1) % mod, d(rng) * ell % mod};
            bool solvable = false;
            for (u64 y0 = 0; y0 < mod; ++y0)
                for (u64 y1 = 0; y1 < mod; ++y1)
                    solvable |= (A[0][0] * y0 + A[0][1] * y1) % mod == b[0] && (A[1][0] * y0 + A[1][1] * y1) % mod == b[1];
            const auto y = linalg::solve(A, b, ell, k);
            ASSERT_EQ(y.has_value(), solvable);
            if (y)
            {
                EXPECT_EQ((A[0][0] * (*y)[0] + A[0][1] * (*y)[1]) % mod, b[0]);
                EXPECT_EQ((A[1][0] * (*y)[0] + A[1][1] * (*y)[1]) % mod, b[1]);
            }
        }
    }
}

TEST(Linalg, WideSystem)
{
    // 2 x 4 over F_3.
    const linalg::Matrix A{{1, 0, 2, 0}, {0, 0, 0, 0}};
    EXPECT_TRUE(linalg::solve(A, {2, 0}, 3, 1).has_value());
    EXPECT_FALSE(linalg::solve(A, {0, 1}, 3, 1).has_value());
}

TEST(Frobenius, FullRationalTorsionIsIdentity)
{
    const Curve ep = make(7, 3, 0, 9);
    const FrobData fd = frobenius_data(ep, 1);
    EXPECT_EQ(fd.m, 1);
    EXPECT_EQ(fd.G, (Mat2{Vec2{1, 0}, Vec2{0, 1}}));
    EXPECT_EQ(fd.M, fd.G);
}

TEST(Frobenius, CmCurveFixesALine)
{
    const Curve e = make(7, 3, 0, -3);
    const FrobData fd = frobenius_data(e, 1);
    EXPECT_EQ(fd.m, 3);
    EXPECT_EQ(fixed_vectors(fd.G, 3, 1), 3u);
}

TEST(Frobenius, Invariants)
{
    for (const auto& s : kCurves)
    {
        const Curve c = make(s.p, s.ell, s.a, s.b);
        const int n = 2;
        const FrobData fd = frobenius_data(c, n);
        EXPECT_EQ(linalg::mul(fd.M, fd.G, fd.mod), (Mat2{Vec2{1, 0}, Vec2{0, 1}}));
        // det(I - G) = #E(F_q) mod ell^n.
        const Mat2 d = linalg::minus_identity(fd.G, fd.mod);
        const u64 det = (d[0][0] * d[1][1] + fd.mod * fd.mod - d[0][1] * d[1][0] % fd.mod) % fd.mod;
        EXPECT_EQ(det, mpz_class(count_points(c) % fd.mod).get_ui()) << s.p;
        // det G = q.
        const u64 dg = (fd.G[0][0] * fd.G[1][1] + fd.mod * fd.mod - fd.G[0][1] * fd.G[1][0] % fd.mod) % fd.mod;
        EXPECT_EQ(dg, s.p % fd.mod);
        for (int k = 1; k <= n; ++k)
            EXPECT_EQ(fixed_vectors(fd.G, s.ell, k), rational_killed_by(c, ipow(s.ell, k))) << s.p << " " << k;
    }
}

TEST(Artin, Properties)
{
    for (const auto& s : kCurves)
    {
        const Curve c = make(s.p, s.ell, s.a, s.b);
        const LegendreDerivative dl(c);
        if (dl.basis().dim() == 0)
            continue;
        const FrobData& fd = dl.frob();
        const int k = dl.precision() - dl.valuation();
        auto vec = [&](const CurvePoint& P) {
            const auto a = dl.artin_vector(P);
            return Vec2{a[0], a[1]};
        };
        EXPECT_EQ(vec(CurvePoint::infinity(c.base)), (Vec2{0, 0}));
        // Rational ell-primary points, via the primary generators.
        std::vector<CurvePoint> pts{CurvePoint::infinity(c.base)};
        for (const auto& G : dl.primary_generators())
        {
            std::vector<CurvePoint> next;
            for (const auto& P : pts)
            {
                CurvePoint T = P;
                do
                {
                    next.push_back(T);
                    T = add(c, T, G);
                } while (T != P);
            }
            pts = next;
        }
        for (const auto& P : pts)
            for (const auto& Q : pts)
            {
                const Vec2 p = vec(P), q = vec(Q);
                EXPECT_TRUE(art_congruent(fd, vec(add(c, P, Q)), {p[0] + q[0], p[1] + q[1]}, k));
            }
        // Injective: only the identity maps into (M - I) T + ell^k T.
        for (const auto& P : pts)
            EXPECT_EQ(art_congruent(fd, vec(P), {0, 0}, k), P.inf) << s.p << " " << P.str();
    }
}

TEST(Legendre, CmCurveIsZero)
{
    const Curve e = make(7, 3, 0, -3);
    const LegendreDerivative dl(e);
    for (const auto& P : rational_ell_torsion(e))
        EXPECT_EQ(dl(P), std::vector<u64>{0});
}

TEST(Legendre, EPrimeMatrix)
{
    const Curve ep = make(7, 3, 0, 9);
    const LegendreDerivative dl(ep);
    EXPECT_EQ(dl.precision(), 4);
    const auto& gs = dl.basis().gs;
    const auto c1 = dl(gs.G1), c2 = dl(gs.G2);
    ASSERT_EQ(c1.size(), 2u);
    // Columns dL(G1), dL(G2) in pic0 coordinates.
    EXPECT_EQ(c1, brute_dl(ep, dl, gs.G1));
    EXPECT_EQ(c2, brute_dl(ep, dl, gs.G2));
    EXPECT_EQ(c1, (std::vector<u64>{2, 1}));
    EXPECT_EQ(c2, (std::vector<u64>{0, 2}));
    EXPECT_NE((c1[0] * c2[1] + 9 - c1[1] * c2[0]) % 3, 0u);
}

TEST(Legendre, BruteForceOracle)
{
    for (const auto& s : kCurves)
    {
        const Curve c = make(s.p, s.ell, s.a, s.b);
        const LegendreDerivative dl(c);
        if (dl.basis().dim() == 0)
            continue;
        for (const auto& P : rational_ell_torsion(c))
            EXPECT_EQ(dl(P), brute_dl(c, dl, P)) << s.p << " " << P.str();
    }
}

TEST(Legendre, HomomorphismAndStability)
{
    for (const auto& s : kCurves)
    {
        const Curve c = make(s.p, s.ell, s.a, s.b);
        const LegendreDerivative dl(c);
        const LegendreDerivative deeper(c, {dl.precision() + 1, false, ArtForm::OneMinusPhi, 256});
        const auto tors = rational_ell_torsion(c);
        for (const auto& P : tors)
        {
            EXPECT_EQ(dl(P), deeper(P));
            for (const auto& Q : tors)
            {
                const auto a = dl(P), b = dl(Q), ab = dl(add(c, P, Q));
                for (size_t i = 0; i < a.size(); ++i)
                    EXPECT_EQ(ab[i], (a[i] + b[i]) % s.ell);
            }
        }
    }
}

TEST(Legendre, ConventionSwap)
{
    for (const auto& s : kCurves)
    {
        const Curve c = make(s.p, s.ell, s.a, s.b);
        const LegendreDerivative dl(c);
        const LegendreDerivative art_swapped(c, {0, false, ArtForm::InverseMinusOne, kDefaultDegreeCap});
        const LegendreDerivative art_negated(c, {0, false, ArtForm::PhiMinusOne, kDefaultDegreeCap});
        const LegendreDerivative full(c, {0, true, ArtForm::OneMinusPhi, kDefaultDegreeCap});
        for (const auto& P : rational_ell_torsion(c))
        {
            const auto d = dl(P);
            EXPECT_EQ(art_swapped(P), d);
            EXPECT_EQ(art_negated(P), d);
            // G in place of M throughout negates dL.
            const auto g = full(P);
            for (size_t i = 0; i < d.size(); ++i)
                EXPECT_EQ((g[i] + d[i]) % s.ell, 0u);
        }
    }
}

TEST(Legendre, InvertibleExactlyOnFullTorsion)
{
    for (const auto& s : kCurves)
    {
        const Curve c = make(s.p, s.ell, s.a, s.b);
        const LegendreDerivative dl(c);
        const auto tors = rational_ell_torsion(c);
        std::set<std::vector<u64>> image;
        for (const auto& P : tors)
            image.insert(dl(P));
        const bool full = tors.size() == s.ell * s.ell;
        EXPECT_EQ(image.size() == tors.size() && !tors.empty() && dl.basis().dim() > 0, full) << s.p;
    }
}

TEST(RestrictHom, Properties)
{
    for (const auto& s : kCurves)
    {
        const Curve c = make(s.p, s.ell, s.a, s.b);
        const LegendreDerivative dl(c);
        const int k = dl.basis().dim();
        if (k == 0)
        {
            EXPECT_TRUE(restrict_hom(dl, PicHom{}).inf);
            continue;
        }
        EXPECT_TRUE(restrict_hom(dl, PicHom{0, std::vector<u64>(static_cast<size_t>(k), 0)}).inf);
        const TorsionBasis tb = torsion_basis(c, 1);
        std::vector<CurvePoint> etors;
        for (u64 i = 0; i < s.ell; ++i)
            for (u64 j = 0; j < s.ell; ++j)
                etors.push_back(add(c, mul(c, tb.P1, static_cast<i64>(i)), mul(c, tb.P2, static_cast<i64>(j))));
        std::vector<PicHom> homs;
        for (u64 a = 0; a < s.ell; ++a)
            for (u64 b = 0; b < (k == 2 ? s.ell : 1); ++b)
                homs.push_back(PicHom{a, k == 2 ? std::vector<u64>{a, b} : std::vector<u64>{a}});
        for (const auto& t : homs)
        {
            const CurvePoint S = restrict_hom(dl, t);
            for (const auto& X : etors)
            {
                const auto d = dl.restrict_class(X);
                u64 tbar = 0;
                for (int i = 0; i < k; ++i)
                    tbar += d[static_cast<size_t>(i)] * t.phi[static_cast<size_t>(i)];
                EXPECT_EQ(weil_pairing(c, S, X).e, tbar % s.ell);
            }
            for (const auto& t2 : homs)
            {
                PicHom sum{(t.t0 + t2.t0) % s.ell, t.phi};
                for (int i = 0; i < k; ++i)
                    sum.phi[static_cast<size_t>(i)] = (t.phi[static_cast<size_t>(i)] + t2.phi[static_cast<size_t>(i)]) % s.ell;
                EXPECT_EQ(restrict_hom(dl, sum), add(c, S, restrict_hom(dl, t2)));
            }
        }
    }
}
