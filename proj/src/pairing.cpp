// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ellcup/pairing.hpp"

namespace ellcup
{
namespace
{
// Running value of a function at two points, kept as numerators and denominators.
struct Ratio
{
    FElem n1, d1, n2, d2;
};

void absorb(Ratio& r, const FElem& num1, const FElem& den1, const FElem& num2, const FElem& den2)
{
    if (num1.is_zero() || den1.is_zero() || num2.is_zero() || den2.is_zero())
        throw SupportCollision("evaluation point on a Miller line");
    r.n1 *= num1;
    r.d1 *= den1;
    r.n2 *= num2;
    r.d2 *= den2;
}

// Multiplies r by l_{T,S}/v_{T+S} evaluated at Q1 and Q2, and returns T+S.
CurvePoint line_step(const Curve& c, Ratio& r, const CurvePoint& T, const CurvePoint& S, const CurvePoint& Q1,
                     const CurvePoint& Q2)
{
    const Field& f = T.field;
    if (T.inf || S.inf)
        return T.inf ? S : T;
    if (T.x == S.x && (T.y != S.y || T.y.is_zero()))
    {
        // Vertical line; the sum is infinity and the vertical at infinity is 1.
        absorb(r, Q1.x - T.x, FElem::one(f), Q2.x - T.x, FElem::one(f));
        return CurvePoint::infinity(f);
    }
    FElem lambda;
    if (T.x == S.x)
    {
        FElem num = T.x.square();
        num = num + num + num + FElem::from_int(f, static_cast<i64>(c.a));
        lambda = num * (T.y + T.y).inverse();
    }
    else
        lambda = (S.y - T.y) * (S.x - T.x).inverse();
    const FElem x3 = lambda.square() - T.x - S.x;
    const FElem y3 = lambda * (T.x - x3) - T.y;
    auto line = [&](const CurvePoint& Q) { return Q.y - T.y - lambda * (Q.x - T.x); };
    absorb(r, line(Q1), Q1.x - x3, line(Q2), Q2.x - x3);
    return CurvePoint::affine(x3, y3);
}

std::pair<CurvePoint, CurvePoint> common(const CurvePoint& P, const CurvePoint& Q)
{
    if (P.field->m >= Q.field->m)
        return {P, lift(Q, P.field)};
    return {lift(P, Q.field), Q};
}

std::vector<u64> seed_words(const Curve& c, const CurvePoint& P, const CurvePoint& Q, u64 N)
{
    std::vector<u64> w{c.q(), c.a, c.b, N, static_cast<u64>(P.field->m)};
    for (const auto* pt : {&P, &Q})
    {
        w.push_back(pt->inf ? 1 : 0);
        if (!pt->inf)
        {
            w.insert(w.end(), pt->x.coeffs().begin(), pt->x.coeffs().end());
            w.insert(w.end(), pt->y.coeffs().begin(), pt->y.coeffs().end());
        }
    }
    return w;
}

FElem weil_with_shifts(const Curve& c, const CurvePoint& P, const CurvePoint& Q, u64 N, const CurvePoint& R,
                       const CurvePoint& S)
{
    const CurvePoint PR = add(c, P, R);
    const CurvePoint QS = add(c, Q, S);
    if (PR.inf || QS.inf || R.inf || S.inf)
        throw SupportCollision("shift hits infinity");
    const FElem num = miller_eval(c, PR, N, QS, S) * miller_eval(c, R, N, QS, S).inverse();
    const FElem den = miller_eval(c, QS, N, PR, R) * miller_eval(c, S, N, PR, R).inverse();
    return num * den.inverse();
}

// Deterministic shift candidates: the first points in coordinate order with small x.
std::vector<CurvePoint> fallback_shifts(const Curve& c, const Field& f, int count)
{
    std::vector<CurvePoint> out;
    const FElem A = FElem::from_int(f, static_cast<i64>(c.a));
    const FElem B = FElem::from_int(f, static_cast<i64>(c.b));
    std::vector<u64> coeffs(static_cast<size_t>(f->m), 0);
    for (u64 k = 0; static_cast<int>(out.size()) < count && k < 4 * f->p + 64; ++k)
    {
        coeffs[0] = k % f->p;
        if (f->m > 1)
            coeffs[1] = (k / f->p) % f->p;
        else if (k >= f->p)
            break;
        const FElem x(f, coeffs);
        const auto y = sqrt(x * x * x + A * x + B);
        if (!y)
            continue;
        out.push_back(CurvePoint::affine(x, *y));
        if (!y->is_zero())
            out.push_back(CurvePoint::affine(x, -*y));
    }
    return out;
}

FElem weil_in_field(const Curve& c, const CurvePoint& P, const CurvePoint& Q, u64 N, std::mt19937_64& rng)
{
    const Field& f = P.field;
    for (int attempt = 0; attempt < 8; ++attempt)
    {
        const CurvePoint R = random_point(c, f, rng);
        const CurvePoint S = random_point(c, f, rng);
        try
        {
            return weil_with_shifts(c, P, Q, N, R, S);
        }
        catch (const SupportCollision&)
        {
        }
    }
    const auto shifts = fallback_shifts(c, f, 24);
    for (const auto& R : shifts)
        for (const auto& S : shifts)
        {
            try
            {
                return weil_with_shifts(c, P, Q, N, R, S);
            }
            catch (const SupportCollision&)
            {
            }
        }
    throw SupportCollision("no admissible shift over this field");
}
}  // namespace

FElem miller_eval(const Curve& c, const CurvePoint& P, u64 n, const CurvePoint& Q1, const CurvePoint& Q2)
{
    if (n == 0)
        throw Error("miller_eval: n must be positive");
    if (Q1.inf || Q2.inf)
        throw SupportCollision("evaluation at infinity");
    const Field& f = P.field;
    const CurvePoint A = lift(Q1, f);
    const CurvePoint B = lift(Q2, f);
    Ratio r{FElem::one(f), FElem::one(f), FElem::one(f), FElem::one(f)};
    if (P.inf)
        return FElem::one(f);
    CurvePoint T = P;
    int top = 63;
    while (((n >> top) & 1) == 0)
        --top;
    for (int i = top - 1; i >= 0; --i)
    {
        r.n1 = r.n1.square();
        r.d1 = r.d1.square();
        r.n2 = r.n2.square();
        r.d2 = r.d2.square();
        T = line_step(c, r, T, T, A, B);
        if ((n >> i) & 1)
            T = line_step(c, r, T, P, A, B);
    }
    return r.n1 * r.d2 * (r.d1 * r.n2).inverse();
}

FElem weil_value(const Curve& c, const CurvePoint& P0, const CurvePoint& Q0, u64 N)
{
    auto [P, Q] = common(P0, Q0);
    if (!mul(c, P, static_cast<i64>(N)).inf || !mul(c, Q, static_cast<i64>(N)).inf)
        throw Error("weil pairing: points are not N-torsion");
    if (P.inf || Q.inf || P == Q)
        return FElem::one(P.field);
    auto rng = seeded_rng(seed_words(c, P, Q, N));
    try
    {
        return weil_in_field(c, P, Q, N, rng);
    }
    catch (const SupportCollision&)
    {
    }
    // Tiny fields may leave no room for shifts; the value is unchanged over an extension.
    const Field big = make_context(c.q(), c.ell(), 2 * P.field->m, 4 * P.field->m);
    const FElem v = weil_in_field(c, lift(P, big), lift(Q, big), N, rng);
    if (!v.in_prime_field())
        throw Error("weil pairing: value outside the prime field");
    return FElem::from_int(P.field, static_cast<i64>(v.coeff(0)));
}

MuRoot weil_pairing(const Curve& c, const CurvePoint& P, const CurvePoint& Q, int n)
{
    const u64 N = ipow(c.ell(), n);
    const FElem v = weil_value(c, P, Q, N).pow(ipow(c.ell(), n - 1));
    return mu_log(v);
}

MuRoot tate_pairing(const Curve& c, const CurvePoint& P0, const CurvePoint& Q0)
{
    auto [P, Q] = common(P0, Q0);
    if (!mul(c, P, static_cast<i64>(c.ell())).inf)
        throw Error("tate pairing: first argument is not ell-torsion");
    if (P.inf)
        return {0, c.ell()};
    const mpz_class e = (P.field->order() - 1) / c.ell();
    auto rng = seeded_rng(seed_words(c, P, Q, c.ell() + 0x7a7e));
    auto try_shift = [&](const CurvePoint& S) -> std::optional<MuRoot> {
        const CurvePoint QS = add(c, Q, S);
        if (S.inf || QS.inf)
            return std::nullopt;
        try
        {
            return mu_log(miller_eval(c, P, c.ell(), QS, S).pow(e));
        }
        catch (const SupportCollision&)
        {
            return std::nullopt;
        }
    };
    for (int attempt = 0; attempt < 8; ++attempt)
    {
        if (auto r = try_shift(random_point(c, P.field, rng)))
            return *r;
    }
    for (const auto& S : fallback_shifts(c, P.field, 64))
    {
        if (auto r = try_shift(S))
            return *r;
    }
    throw SupportCollision("tate pairing: no admissible shift");
}

}  // namespace ellcup
