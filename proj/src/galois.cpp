// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ellcup/galois.hpp"
#include "ellcup/pairing.hpp"

namespace ellcup
{
namespace linalg
{
namespace
{
u64 sub(u64 a, u64 b, u64 mod)
{
    return (a + mod - b) % mod;
}

// Valuation of x in Z/ell^k, with 0 given valuation k.
int val(u64 x, u64 ell, int k)
{
    if (x == 0)
        return k;
    return std::min(valuation(x, ell), k);
}
}  // namespace

std::optional<std::vector<u64>> solve(const Matrix& A0, const std::vector<u64>& b0, u64 ell, int k)
{
    const u64 mod = ipow(ell, k);
    const size_t r = A0.size();
    const size_t c = r ? A0[0].size() : 0;
    Matrix D = A0;
    for (auto& row : D)
        for (auto& x : row)
            x %= mod;
    std::vector<u64> b = b0;
    for (auto& x : b)
        x %= mod;
    // Track V (column operations); row operations are applied to b directly.
    Matrix V(c, std::vector<u64>(c, 0));
    for (size_t i = 0; i < c; ++i)
        V[i][i] = 1;

    std::vector<int> pivot_val;
    const size_t steps = std::min(r, c);
    for (size_t t = 0; t < steps; ++t)
    {
        int best = k;
        size_t bi = t, bj = t;
        for (size_t i = t; i < r; ++i)
            for (size_t j = t; j < c; ++j)
            {
                const int v = val(D[i][j], ell, k);
                if (v < best)
                {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best == k)
            break;
        std::swap(D[t], D[bi]);
        std::swap(b[t], b[bi]);
        for (size_t i = 0; i < r; ++i)
            std::swap(D[i][t], D[i][bj]);
        for (size_t i = 0; i < c; ++i)
            std::swap(V[i][t], V[i][bj]);
        const u64 lv = ipow(ell, best);
        const u64 u = invmod(D[t][t] / lv, mod);
        for (size_t j = 0; j < c; ++j)
            D[t][j] = mulmod(D[t][j], u, mod);
        b[t] = mulmod(b[t], u, mod);
        for (size_t i = 0; i < r; ++i)
        {
            if (i == t || D[i][t] == 0)
                continue;
            const u64 f = D[i][t] / lv;
            for (size_t j = 0; j < c; ++j)
                D[i][j] = sub(D[i][j], mulmod(f, D[t][j], mod), mod);
            b[i] = sub(b[i], mulmod(f, b[t], mod), mod);
        }
        for (size_t j = 0; j < c; ++j)
        {
            if (j == t || D[t][j] == 0)
                continue;
            const u64 f = D[t][j] / lv;
            for (size_t i = 0; i < r; ++i)
                D[i][j] = sub(D[i][j], mulmod(f, D[i][t], mod), mod);
            for (size_t i = 0; i < c; ++i)
                V[i][j] = sub(V[i][j], mulmod(f, V[i][t], mod), mod);
        }
        pivot_val.push_back(best);
    }
    std::vector<u64> z(c, 0);
    for (size_t i = 0; i < r; ++i)
    {
        if (i < pivot_val.size())
        {
            const u64 lv = ipow(ell, pivot_val[i]);
            if (b[i] % lv != 0)
                return std::nullopt;
            z[i] = b[i] / lv;
        }
        else if (b[i] != 0)
            return std::nullopt;
    }
    std::vector<u64> y(c, 0);
    for (size_t i = 0; i < c; ++i)
        for (size_t j = 0; j < c; ++j)
            y[i] = (y[i] + mulmod(V[i][j], z[j], mod)) % mod;
    return y;
}

Mat2 mul(const Mat2& A, const Mat2& B, u64 mod)
{
    Mat2 C{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            C[i][j] = (mulmod(A[i][0], B[0][j], mod) + mulmod(A[i][1], B[1][j], mod)) % mod;
    return C;
}

Vec2 apply(const Mat2& A, const Vec2& x, u64 mod)
{
    return {(mulmod(A[0][0], x[0], mod) + mulmod(A[0][1], x[1], mod)) % mod,
            (mulmod(A[1][0], x[0], mod) + mulmod(A[1][1], x[1], mod)) % mod};
}

Mat2 inverse(const Mat2& A, u64 mod)
{
    const u64 det = sub(mulmod(A[0][0], A[1][1], mod), mulmod(A[0][1], A[1][0], mod), mod);
    const u64 di = invmod(det, mod);
    return Mat2{Vec2{mulmod(A[1][1], di, mod), mulmod(sub(0, A[0][1], mod), di, mod)},
                Vec2{mulmod(sub(0, A[1][0], mod), di, mod), mulmod(A[0][0], di, mod)}};
}

Mat2 minus_identity(const Mat2& A, u64 mod)
{
    Mat2 B = A;
    B[0][0] = sub(B[0][0], 1, mod);
    B[1][1] = sub(B[1][1], 1, mod);
    return B;
}
}  // namespace linalg

FrobData frobenius_data(const Curve& c, int n, int degree_cap)
{
    const TorsionBasis tb = torsion_basis(c, n, degree_cap);
    FrobData fd;
    fd.ell = c.ell();
    fd.n = n;
    fd.mod = ipow(fd.ell, n);
    fd.m = tb.m;
    fd.field = tb.field;
    fd.P1 = tb.P1;
    fd.P2 = tb.P2;
    const CurvePoint* cols[2] = {&fd.P1, &fd.P2};
    for (int j = 0; j < 2; ++j)
    {
        const auto co = dlog2(c, frobenius(*cols[j]), fd.P1, n, fd.P2, n, fd.ell);
        if (!co)
            throw Error("frobenius_data: Frobenius image outside the torsion span");
        fd.G[0][j] = co->first;
        fd.G[1][j] = co->second;
    }
    const u64 det = (mulmod(fd.G[0][0], fd.G[1][1], fd.mod) + fd.mod -
                     mulmod(fd.G[0][1], fd.G[1][0], fd.mod)) % fd.mod;
    if (det % fd.ell == 0)
        throw Error("frobenius_data: singular Frobenius matrix");
    fd.M = linalg::inverse(fd.G, fd.mod);
    fd.lA = linalg::minus_identity(fd.M, fd.mod);
    return fd;
}

Vec2 torsion_coordinates(const Curve& c, const FrobData& fd, const CurvePoint& X, int j)
{
    if (j < 0 || j > fd.n)
        throw Error("torsion_coordinates: level out of range");
    if (j == 0)
        return {0, 0};
    const i64 scale = static_cast<i64>(ipow(fd.ell, fd.n - j));
    const auto co = dlog2(c, lift(X, fd.field), mul(c, fd.P1, scale), j, mul(c, fd.P2, scale), j, fd.ell);
    if (!co)
        throw Error("torsion_coordinates: point is not in E[ell^j]");
    return {co->first, co->second};
}

bool art_congruent(const FrobData& fd, const Vec2& x, const Vec2& y, int k)
{
    const u64 mod = ipow(fd.ell, k);
    linalg::Matrix A{{fd.lA[0][0] % mod, fd.lA[0][1] % mod}, {fd.lA[1][0] % mod, fd.lA[1][1] % mod}};
    return linalg::solve(A, {(x[0] + mod - y[0] % mod) % mod, (x[1] + mod - y[1] % mod) % mod}, fd.ell, k)
        .has_value();
}

LegendreDerivative::LegendreDerivative(const Curve& c, LegendreOptions opts)
    : c_(c), opts_(opts), basis_(pic0_basis(c))
{
    v_ = basis_.e1 + basis_.e2;
    n_ = opts.precision > 0 ? opts.precision : v_ + 2;
    if (basis_.dim() == 0)
        return;
    if (n_ <= v_)
        throw Error("legendre_derivative: precision must exceed v_ell(#E(F_q))");
    fd_ = frobenius_data(c, n_, opts.degree_cap);

    // Primary parts: u H_i with u c = 1 mod ell^{e2}.
    const u64 ell = c.ell();
    const u64 top = ipow(ell, basis_.e2);
    const mpz_class cof = basis_.cofactor % top;
    const u64 u = invmod(cof.get_ui(), top);
    for (const int ax : basis_.axes)
    {
        const CurvePoint G = mul(c, ax == 0 ? basis_.H1 : basis_.H2, static_cast<i64>(u));
        gens_.push_back(G);
        const Vec2 a = art_raw(G, ax == 0 ? basis_.e1 : basis_.e2);
        gen_art_.push_back({a[0] % ell, a[1] % ell});
    }
}

const FrobData& LegendreDerivative::frob() const
{
    if (!fd_)
        throw Error("legendre_derivative: no Frobenius data for a curve without rational ell-torsion");
    return *fd_;
}

Mat2 LegendreDerivative::phi() const
{
    return opts_.geometric ? fd_->G : fd_->M;
}

Vec2 LegendreDerivative::art_raw(const CurvePoint& P, int j) const
{
    const FrobData& fd = frob();
    const u64 mod = fd.mod;
    if (j >= fd.n)
        throw Error("artin_vector: point order exceeds the working precision");
    const Vec2 x = torsion_coordinates(c_, fd, P, j);
    Mat2 B;
    switch (opts_.art)
    {
    case ArtForm::OneMinusPhi:
    {
        const Mat2 d = linalg::minus_identity(phi(), mod);
        B = Mat2{Vec2{(mod - d[0][0]) % mod, (mod - d[0][1]) % mod}, Vec2{(mod - d[1][0]) % mod, (mod - d[1][1]) % mod}};
        break;
    }
    case ArtForm::PhiMinusOne:
        B = linalg::minus_identity(phi(), mod);
        break;
    case ArtForm::InverseMinusOne:
        B = linalg::minus_identity(linalg::inverse(phi(), mod), mod);
        break;
    }
    const Vec2 y = linalg::apply(B, x, mod);
    const u64 lj = ipow(fd.ell, j);
    if (y[0] % lj != 0 || y[1] % lj != 0)
        throw Error("artin_vector: point is not rational");
    return {y[0] / lj, y[1] / lj};
}

std::vector<u64> LegendreDerivative::artin_vector(const CurvePoint& P) const
{
    const int j = ell_order_exponent(c_, P, c_.ell());
    if (j < 0)
        throw Error("artin_vector: point does not have ell-power order");
    if (j == 0)
        return {0, 0};
    const Vec2 a = art_raw(P, j);
    const u64 mod = ipow(c_.ell(), n_ - j);
    return {a[0] % mod, a[1] % mod};
}

std::vector<u64> LegendreDerivative::to_pic0(const Vec2& residue) const
{
    const u64 ell = c_.ell();
    const Mat2 d = linalg::minus_identity(phi(), fd_->mod);
    linalg::Matrix A(2);
    for (int r = 0; r < 2; ++r)
    {
        for (const auto& a : gen_art_)
            A[static_cast<size_t>(r)].push_back(a[static_cast<size_t>(r)]);
        A[static_cast<size_t>(r)].push_back(d[static_cast<size_t>(r)][0] % ell);
        A[static_cast<size_t>(r)].push_back(d[static_cast<size_t>(r)][1] % ell);
    }
    const auto sol = linalg::solve(A, {residue[0] % ell, residue[1] % ell}, ell, 1);
    if (!sol)
        throw Error("legendre_derivative: Artin images do not span the quotient");
    return std::vector<u64>(sol->begin(), sol->begin() + basis_.dim());
}

std::vector<u64> LegendreDerivative::operator()(const CurvePoint& P) const
{
    if (P.inf || basis_.dim() == 0)
        return std::vector<u64>(static_cast<size_t>(basis_.dim()), 0);
    const u64 ell = c_.ell();
    if (!mul(c_, P, static_cast<i64>(ell)).inf)
        throw Error("legendre_derivative: point is not ell-torsion");
    const FrobData& fd = frob();
    const Vec2 x = art_raw(P, 1);
    const Mat2 d = linalg::minus_identity(phi(), fd.mod);
    linalg::Matrix A{{d[0][0], d[0][1]}, {d[1][0], d[1][1]}};
    const auto y = linalg::solve(A, {mulmod(x[0], ell, fd.mod), mulmod(x[1], ell, fd.mod)}, ell, fd.n);
    if (!y)
        throw Error("legendre_derivative: (Phi - 1) y = ell x has no solution");
    return to_pic0({(*y)[0], (*y)[1]});
}

std::vector<u64> LegendreDerivative::restrict_class(const CurvePoint& X) const
{
    if (basis_.dim() == 0)
        return {};
    return to_pic0(torsion_coordinates(c_, frob(), X, 1));
}

std::vector<u64> legendre_derivative(const Curve& c, const CurvePoint& P, LegendreOptions opts)
{
    return LegendreDerivative(c, opts)(P);
}

CurvePoint restrict_hom(const LegendreDerivative& dl, const PicHom& t)
{
    const Curve& c = dl.curve();
    const u64 ell = c.ell();
    if (dl.basis().dim() == 0)
        return CurvePoint::infinity(c.base);
    const TorsionBasis tb = torsion_basis(c, 1, std::max(dl.frob().m, kDefaultDegreeCap));
    if (t.phi.size() != static_cast<size_t>(dl.basis().dim()))
        throw Error("restrict_hom: functional has the wrong dimension");
    auto tbar = [&](const CurvePoint& X) {
        const auto d = dl.restrict_class(X);
        u64 s = 0;
        for (size_t i = 0; i < d.size(); ++i)
            s = (s + d[i] * (t.phi[i] % ell)) % ell;
        return s;
    };
    const u64 t1 = tbar(tb.P1), t2 = tbar(tb.P2);
    const u64 w = weil_pairing(c, tb.P1, tb.P2).e;
    const u64 wi = invmod(w, ell);
    // e(s1 P1 + s2 P2, P1) = -s2 w and e(s1 P1 + s2 P2, P2) = s1 w.
    const u64 s1 = mulmod(t2, wi, ell);
    const u64 s2 = mulmod((ell - t1) % ell, wi, ell);
    return add(c, mul(c, tb.P1, static_cast<i64>(s1)), mul(c, tb.P2, static_cast<i64>(s2)));
}

CurvePoint restrict_hom(const Curve& c, const PicHom& t)
{
    return restrict_hom(LegendreDerivative(c), t);
}

}  // namespace ellcup
