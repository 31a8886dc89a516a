// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ellcup/curve.hpp"
#include "ellcup/pairing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ellcup
{
namespace
{
FElem coeff_a(const Curve& c, const Field& f)
{
    return FElem::from_int(f, static_cast<i64>(c.a));
}

FElem rhs(const Curve& c, const FElem& x)
{
    const Field& f = x.field();
    return (x.square() + coeff_a(c, f)) * x + FElem::from_int(f, static_cast<i64>(c.b));
}

u64 rhs_mod(const Curve& c, u64 x)
{
    const u64 q = c.q();
    return (mulmod(mulmod(x, x, q) + c.a, x, q) + c.b) % q;
}

// root[v] is the least y with y^2 = v, or q when v is not a square.
std::vector<u64> sqrt_table(u64 q)
{
    std::vector<u64> root(q, q);
    for (u64 y = q; y-- > 0;)
        root[mulmod(y, y, q)] = y;
    return root;
}

mpz_class element_order(const Curve& c, const CurvePoint& P, const mpz_class& N,
                        const std::vector<mpz_class>& primes)
{
    mpz_class ord = N;
    for (const auto& r : primes)
    {
        while (ord % r == 0 && mul(c, P, ord / r).inf)
            ord /= r;
    }
    return ord;
}

// k with X = k S for S of order ell^b, or nothing.
std::optional<u64> dlog1(const Curve& c, const CurvePoint& X, const CurvePoint& S, int b, u64 ell)
{
    if (b == 0)
        return X.inf ? std::optional<u64>(0) : std::nullopt;
    const CurvePoint top = mul(c, S, static_cast<i64>(ipow(ell, b - 1)));
    std::vector<CurvePoint> table{CurvePoint::infinity(S.field)};
    for (u64 d = 1; d < ell; ++d)
        table.push_back(add(c, table.back(), top));
    u64 k = 0;
    for (int s = 0; s < b; ++s)
    {
        const CurvePoint Y = group_law(c, S, X, -mpz_class(static_cast<unsigned long>(k)));
        const CurvePoint Z = mul(c, Y, static_cast<i64>(ipow(ell, b - 1 - s)));
        const auto it = std::find(table.begin(), table.end(), Z);
        if (it == table.end())
            return std::nullopt;
        k += static_cast<u64>(it - table.begin()) * ipow(ell, s);
    }
    if (mul(c, S, static_cast<i64>(k)) != X)
        return std::nullopt;
    return k;
}

// Whether x in Z/ell^a lies in ell^n (Z/ell^a).
bool divisible_in(u64 x, int a, int n, u64 ell)
{
    return x % ipow(ell, std::min(a, n)) == 0;
}

std::vector<CurvePoint> affine_points_over(const Curve& c, const Field& f)
{
    std::vector<CurvePoint> pts{CurvePoint::infinity(f)};
    for (const auto& x : all_elements(f))
    {
        const auto y = sqrt(rhs(c, x));
        if (!y)
            continue;
        pts.push_back(CurvePoint::affine(x, *y));
        if (!y->is_zero())
            pts.push_back(CurvePoint::affine(x, -*y));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}
}  // namespace

std::string Curve::spec() const
{
    std::ostringstream os;
    os << "p:" << q() << ",l:" << ell() << ",a:" << a << ",b:" << b;
    return os.str();
}

Curve curve_new(const Field& ctx, const FElem& a, const FElem& b)
{
    if (ctx->m != 1)
        throw Error("curves are defined over prime fields only");
    if (ctx->p <= 3)
        throw Error("short Weierstrass form needs p > 3");
    Curve c{ctx, a.coeff(0), b.coeff(0)};
    const u64 p = ctx->p;
    const u64 disc = (4 * mulmod(mulmod(c.a, c.a, p), c.a, p) + 27 * mulmod(c.b, c.b, p)) % p;
    if (disc == 0)
        throw Error("singular curve: 4a^3 + 27b^2 = 0");
    return c;
}

Curve curve_new(const Field& ctx, i64 a, i64 b)
{
    return curve_new(ctx, FElem::from_int(ctx, a), FElem::from_int(ctx, b));
}

Curve parse_curve_spec(const std::string& spec)
{
    std::map<std::string, i64> kv;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("malformed curve spec: " + spec);
        kv[item.substr(0, colon)] = std::stoll(item.substr(colon + 1));
    }
    for (const char* k : {"p", "l", "a", "b"})
        if (!kv.count(k))
            throw std::invalid_argument(std::string("curve spec is missing ") + k + ": " + spec);
    if (kv["p"] <= 0 || kv["l"] <= 0)
        throw std::invalid_argument("curve spec needs positive p and l: " + spec);
    const Field f = make_context(static_cast<u64>(kv["p"]), static_cast<u64>(kv["l"]), 1);
    return curve_new(f, kv["a"], kv["b"]);
}

CurvePoint CurvePoint::infinity(const Field& f)
{
    CurvePoint P;
    P.field = f;
    return P;
}

CurvePoint CurvePoint::affine(FElem x, FElem y)
{
    CurvePoint P;
    P.field = x.field();
    P.inf = false;
    P.x = std::move(x);
    P.y = std::move(y);
    return P;
}

bool CurvePoint::operator==(const CurvePoint& o) const noexcept
{
    if (inf || o.inf)
        return inf == o.inf;
    return x == o.x && y == o.y;
}

bool CurvePoint::operator<(const CurvePoint& o) const noexcept
{
    if (inf || o.inf)
        return inf && !o.inf;
    if (x != o.x)
        return x < o.x;
    return y < o.y;
}

std::string CurvePoint::str() const
{
    if (inf)
        return "inf";
    if (field->m == 1)
        return x.str() + "," + y.str();
    return "[" + x.str() + "],[" + y.str() + "]";
}

CurvePoint parse_point(const Curve& c, const std::string& s)
{
    if (s == "inf")
        return CurvePoint::infinity(c.base);
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("point must be \"x,y\" or \"inf\": " + s);
    size_t used = 0;
    const std::string xs = s.substr(0, comma), ys = s.substr(comma + 1);
    const i64 x = std::stoll(xs, &used);
    if (used != xs.size())
        throw std::invalid_argument("bad x coordinate: " + s);
    const i64 y = std::stoll(ys, &used);
    if (used != ys.size())
        throw std::invalid_argument("bad y coordinate: " + s);
    const CurvePoint P = CurvePoint::affine(FElem::from_int(c.base, x), FElem::from_int(c.base, y));
    if (!on_curve(c, P))
        throw Error("point " + s + " is not on the curve " + c.spec());
    return P;
}

bool on_curve(const Curve& c, const CurvePoint& P)
{
    return P.inf || P.y.square() == rhs(c, P.x);
}

CurvePoint negate(const CurvePoint& P)
{
    if (P.inf)
        return P;
    return CurvePoint::affine(P.x, -P.y);
}

CurvePoint add(const Curve& c, const CurvePoint& P0, const CurvePoint& Q0)
{
    if (P0.field->m != Q0.field->m)
    {
        if (P0.field->m > Q0.field->m)
            return add(c, P0, lift(Q0, P0.field));
        return add(c, lift(P0, Q0.field), Q0);
    }
    if (P0.inf)
        return Q0;
    if (Q0.inf)
        return P0;
    if (P0.x == Q0.x)
    {
        if (P0.y == Q0.y)
            return dbl(c, P0);
        return CurvePoint::infinity(P0.field);
    }
    const FElem lambda = (Q0.y - P0.y) * (Q0.x - P0.x).inverse();
    const FElem x3 = lambda.square() - P0.x - Q0.x;
    return CurvePoint::affine(x3, lambda * (P0.x - x3) - P0.y);
}

CurvePoint dbl(const Curve& c, const CurvePoint& P)
{
    if (P.inf || P.y.is_zero())
        return CurvePoint::infinity(P.field);
    const FElem xx = P.x.square();
    const FElem lambda = (xx + xx + xx + coeff_a(c, P.field)) * (P.y + P.y).inverse();
    const FElem x3 = lambda.square() - P.x - P.x;
    return CurvePoint::affine(x3, lambda * (P.x - x3) - P.y);
}

CurvePoint mul(const Curve& c, const CurvePoint& P, const mpz_class& n)
{
    if (n < 0)
        return mul(c, negate(P), mpz_class(-n));
    CurvePoint R = CurvePoint::infinity(P.field);
    if (P.inf || n == 0)
        return R;
    for (size_t i = mpz_sizeinbase(n.get_mpz_t(), 2); i-- > 0;)
    {
        R = dbl(c, R);
        if (mpz_tstbit(n.get_mpz_t(), i))
            R = add(c, R, P);
    }
    return R;
}

CurvePoint mul(const Curve& c, const CurvePoint& P, i64 n)
{
    return mul(c, P, mpz_class(static_cast<long>(n)));
}

CurvePoint group_law(const Curve& c, const CurvePoint& P, const CurvePoint& Q, const mpz_class& n)
{
    return add(c, mul(c, P, n), Q);
}

CurvePoint frobenius(const CurvePoint& P)
{
    if (P.inf)
        return P;
    return CurvePoint::affine(P.x.frobenius(), P.y.frobenius());
}

CurvePoint lift(const CurvePoint& P, const Field& f)
{
    if (P.inf)
        return CurvePoint::infinity(f);
    if (P.field->m == f->m)
        return CurvePoint::affine(FElem(f, P.x.coeffs()), FElem(f, P.y.coeffs()));
    const FElem root = embedding_root(P.field, f);
    return CurvePoint::affine(embed_with_root(root, f, P.x), embed_with_root(root, f, P.y));
}

CurvePoint random_point(const Curve& c, const Field& f, std::mt19937_64& rng)
{
    for (int attempt = 0; attempt < 10000; ++attempt)
    {
        const FElem x = random_element(f, rng);
        const auto y = sqrt(rhs(c, x));
        if (!y)
            continue;
        return CurvePoint::affine(x, (rng() & 1) ? -*y : *y);
    }
    throw Error("random_point: no point found");
}

int ell_order_exponent(const Curve& c, const CurvePoint& P, u64 ell, int max_k)
{
    CurvePoint T = P;
    for (int k = 0; k <= max_k; ++k)
    {
        if (T.inf)
            return k;
        T = mul(c, T, static_cast<i64>(ell));
    }
    return -1;
}

mpz_class count_points(const Curve& c)
{
    const u64 q = c.q();
    std::vector<u64> roots(q, 0);  // number of square roots of each residue
    for (u64 y = 0; y < q; ++y)
        ++roots[mulmod(y, y, q)];
    u64 n = 1;
    for (u64 x = 0; x < q; ++x)
        n += roots[rhs_mod(c, x)];
    return mpz_class(static_cast<unsigned long>(n));
}

mpz_class order_over_extension(const Curve& c, int m)
{
    if (m < 1)
        throw Error("order_over_extension: degree must be positive");
    const mpz_class q(static_cast<unsigned long>(c.q()));
    const mpz_class t = q + 1 - count_points(c);
    mpz_class s0 = 2, s1 = t, qm = q;
    for (int i = 2; i <= m; ++i)
    {
        const mpz_class s2 = t * s1 - q * s0;
        s0 = s1;
        s1 = s2;
        qm *= q;
    }
    return qm + 1 - s1;
}

std::vector<CurvePoint> rational_points(const Curve& c)
{
    const u64 q = c.q();
    const auto root = sqrt_table(q);
    std::vector<CurvePoint> pts{CurvePoint::infinity(c.base)};
    for (u64 x = 0; x < q; ++x)
    {
        const u64 y = root[rhs_mod(c, x)];
        if (y == q)
            continue;
        const FElem fx = FElem::from_int(c.base, static_cast<i64>(x));
        pts.push_back(CurvePoint::affine(fx, FElem::from_int(c.base, static_cast<i64>(y))));
        if (y != 0)
            pts.push_back(CurvePoint::affine(fx, FElem::from_int(c.base, static_cast<i64>(q - y))));
    }
    return pts;
}

GroupStructure group_structure(const Curve& c, int m, u64 budget)
{
    const mpz_class N = order_over_extension(c, m);
    if (N > budget)
        throw Error("group_structure: group order " + N.get_str() + " exceeds the enumeration budget");
    const Field f = m == 1 ? c.base : make_context(c.q(), c.ell(), m);
    const auto pts = m == 1 ? rational_points(c) : affine_points_over(c, f);
    if (pts.size() != N.get_ui())
        throw Error("group_structure: enumeration disagrees with the point count");
    const auto primes = prime_factors(N);

    std::vector<mpz_class> orders;
    orders.reserve(pts.size());
    mpz_class m2 = 1;
    for (const auto& P : pts)
    {
        orders.push_back(element_order(c, P, N, primes));
        if (orders.back() > m2)
            m2 = orders.back();
    }
    GroupStructure gs;
    gs.m2 = m2.get_ui();
    gs.m1 = mpz_class(N / m2).get_ui();
    size_t i2 = 0;
    while (orders[i2] != m2)
        ++i2;
    gs.G2 = pts[i2];
    gs.G1 = CurvePoint::infinity(f);
    if (gs.m1 == 1)
        return gs;

    std::set<CurvePoint> cyclic;
    CurvePoint T = CurvePoint::infinity(f);
    for (u64 k = 0; k < gs.m2; ++k)
    {
        cyclic.insert(T);
        T = add(c, T, gs.G2);
    }
    const auto r1 = prime_factors(gs.m1);
    for (size_t i = 0; i < pts.size(); ++i)
    {
        if (orders[i] != gs.m1)
            continue;
        bool independent = true;
        for (const u64 r : r1)
            independent &= !cyclic.count(mul(c, pts[i], static_cast<i64>(gs.m1 / r)));
        if (independent)
        {
            gs.G1 = pts[i];
            return gs;
        }
    }
    throw Error("group_structure: no complementary generator found");
}

PrimaryPart primary_part(const Curve& c, const Field& f, const mpz_class& order, u64 ell)
{
    PrimaryPart pp;
    pp.ell = ell;
    const int w = valuation(order, ell);
    pp.cofactor = order;
    for (int i = 0; i < w; ++i)
        pp.cofactor /= ell;
    pp.S1 = pp.S2 = CurvePoint::infinity(f);
    if (w == 0)
        return pp;

    auto rng = seeded_rng({c.q(), c.a, c.b, ell, static_cast<u64>(f->m), 0x7072696d});
    for (int attempt = 0; attempt < 4000; ++attempt)
    {
        const CurvePoint R = mul(c, random_point(c, f, rng), pp.cofactor);
        const int k = ell_order_exponent(c, R, ell, w);
        if (k < 0)
            throw Error("primary_part: group order is wrong for this field");
        if (k > pp.b)
        {
            pp.S2 = R;
            pp.b = k;
            pp.S1 = CurvePoint::infinity(f);
            pp.a = 0;
        }
        else
        {
            // Least j with ell^j R in <S2>; then R minus a preimage has order ell^j and meets <S2> trivially.
            CurvePoint Rj = R;
            for (int j = 0; j <= k; ++j)
            {
                if (const auto d = dlog1(c, Rj, pp.S2, pp.b, ell))
                {
                    if (j > pp.a)
                    {
                        const u64 lj = ipow(ell, j);
                        if (*d % lj != 0)
                            throw Error("primary_part: inconsistent cyclic logarithm");
                        pp.S1 = group_law(c, pp.S2, R, -mpz_class(static_cast<unsigned long>(*d / lj)));
                        pp.a = j;
                    }
                    break;
                }
                Rj = mul(c, Rj, static_cast<i64>(ell));
            }
        }
        if (pp.a + pp.b == w)
            return pp;
    }
    throw Error("primary_part: sampling did not certify the structure");
}

std::optional<std::pair<u64, u64>> dlog2(const Curve& c, const CurvePoint& X, const CurvePoint& S1, int a,
                                         const CurvePoint& S2, int b, u64 ell)
{
    if (a > b)
    {
        auto r = dlog2(c, X, S2, b, S1, a, ell);
        if (!r)
            return r;
        return std::make_pair(r->second, r->first);
    }
    if (b == 0)
        return X.inf ? std::optional<std::pair<u64, u64>>({0, 0}) : std::nullopt;
    const CurvePoint t1 = a > 0 ? mul(c, S1, static_cast<i64>(ipow(ell, a - 1))) : CurvePoint::infinity(X.field);
    const CurvePoint t2 = mul(c, S2, static_cast<i64>(ipow(ell, b - 1)));
    std::map<CurvePoint, std::pair<u64, u64>> table;
    CurvePoint row = CurvePoint::infinity(X.field);
    for (u64 e1 = 0; e1 < (a > 0 ? ell : 1); ++e1)
    {
        CurvePoint T = row;
        for (u64 e2 = 0; e2 < ell; ++e2)
        {
            table.emplace(T, std::make_pair(e1, e2));
            T = add(c, T, t2);
        }
        row = add(c, row, t1);
    }
    u64 c1 = 0, c2 = 0;
    for (int s = 0; s < b; ++s)
    {
        const CurvePoint guess = add(c, mul(c, S1, static_cast<i64>(c1)), mul(c, S2, static_cast<i64>(c2)));
        const CurvePoint Z = mul(c, add(c, X, negate(guess)), static_cast<i64>(ipow(ell, b - 1 - s)));
        const auto it = table.find(Z);
        if (it == table.end())
            return std::nullopt;
        const auto [e1, e2] = it->second;
        if (s < b - a && e1 != 0)
            return std::nullopt;
        c2 += e2 * ipow(ell, s);
        if (s >= b - a)
            c1 += e1 * ipow(ell, s - (b - a));
    }
    const CurvePoint check = add(c, mul(c, S1, static_cast<i64>(c1)), mul(c, S2, static_cast<i64>(c2)));
    if (check != X)
        return std::nullopt;
    return std::make_pair(c1, c2);
}

TorsionBasis torsion_basis(const Curve& c, int n, int degree_cap)
{
    if (n < 1)
        throw Error("torsion_basis: level must be positive");
    const u64 ell = c.ell();
    const u64 N = ipow(ell, n);
    const mpz_class q(static_cast<unsigned long>(c.q()));
    mpz_class qm = 1;
    for (int m = 1; m <= degree_cap; ++m)
    {
        qm *= q;
        if ((qm - 1) % N != 0 || valuation(order_over_extension(c, m), ell) < 2 * n)
            continue;
        TorsionBasis tb;
        tb.n = n;
        tb.m = m;
        auto primitive = [&](const CurvePoint& P, const CurvePoint& Q) {
            return !weil_value(c, P, Q, N).pow(ipow(ell, n - 1)).is_one();
        };
        if (m == 1)
        {
            tb.field = c.base;
            std::vector<CurvePoint> exact;
            for (const auto& P : rational_points(c))
                if (ell_order_exponent(c, P, ell, n) == n)
                    exact.push_back(P);
            if (exact.empty())
                continue;
            tb.P1 = exact.front();
            for (const auto& P : exact)
                if (primitive(tb.P1, P))
                {
                    tb.P2 = P;
                    return tb;
                }
            continue;
        }
        tb.field = make_context(c.q(), ell, m, degree_cap);
        const PrimaryPart pp = primary_part(c, tb.field, order_over_extension(c, m), ell);
        if (pp.a < n)
            continue;
        tb.P1 = mul(c, pp.S1, static_cast<i64>(ipow(ell, pp.a - n)));
        tb.P2 = mul(c, pp.S2, static_cast<i64>(ipow(ell, pp.b - n)));
        if (!primitive(tb.P1, tb.P2))
            throw Error("torsion_basis: basis pairing is not primitive");
        return tb;
    }
    throw Error("torsion_basis: E[" + std::to_string(N) + "] not found within degree cap " +
                std::to_string(degree_cap));
}

Division divide_point(const Curve& c, const CurvePoint& P, int n, int degree_cap)
{
    const u64 ell = c.ell();
    const int d = P.field->m;
    const int k = ell_order_exponent(c, P, ell);
    if (k < 0)
        throw Error("divide_point: point does not have ell-power order");
    for (int m = d; m <= degree_cap; m += d)
    {
        const mpz_class order = order_over_extension(c, m);
        if (valuation(order, ell) < n + k)
            continue;
        const Field f = m == d ? P.field : make_context(c.q(), ell, m, degree_cap);
        const PrimaryPart pp = primary_part(c, f, order, ell);
        const CurvePoint X = lift(P, f);
        const auto co = dlog2(c, X, pp.S1, pp.a, pp.S2, pp.b, ell);
        if (!co)
            throw Error("divide_point: point outside the primary part");
        if (!divisible_in(co->first, pp.a, n, ell) || !divisible_in(co->second, pp.b, n, ell))
            continue;
        const u64 ln = ipow(ell, n);
        const CurvePoint Q0 = add(c, mul(c, pp.S1, static_cast<i64>(co->first / ln)),
                                  mul(c, pp.S2, static_cast<i64>(co->second / ln)));
        // All solutions: Q0 + E(F)[ell^n].
        const int n1 = std::min(n, pp.a), n2 = std::min(n, pp.b);
        const CurvePoint T1 = mul(c, pp.S1, static_cast<i64>(ipow(ell, pp.a - n1)));
        const CurvePoint T2 = mul(c, pp.S2, static_cast<i64>(ipow(ell, pp.b - n2)));
        Division best{m, f, Q0};
        CurvePoint row = Q0;
        for (u64 i = 0; i < ipow(ell, n1); ++i)
        {
            CurvePoint Q = row;
            for (u64 j = 0; j < ipow(ell, n2); ++j)
            {
                if (Q < best.Q)
                    best.Q = Q;
                Q = add(c, Q, T2);
            }
            row = add(c, row, T1);
        }
        return best;
    }
    throw Error("divide_point: no division point within degree cap " + std::to_string(degree_cap));
}

Pic0Basis pic0_basis(const Curve& c)
{
    Pic0Basis pb;
    pb.gs = group_structure(c, 1);
    pb.order = mpz_class(static_cast<unsigned long>(pb.gs.m1)) * pb.gs.m2;
    const u64 ell = c.ell();
    pb.e1 = valuation(pb.gs.m1, ell);
    pb.e2 = valuation(pb.gs.m2, ell);
    pb.cofactor = pb.order;
    for (int i = 0; i < pb.e1 + pb.e2; ++i)
        pb.cofactor /= ell;
    pb.H1 = mul(c, pb.gs.G1, pb.cofactor);
    pb.H2 = mul(c, pb.gs.G2, pb.cofactor);
    if (pb.e1 > 0)
        pb.axes.push_back(0);
    if (pb.e2 > 0)
        pb.axes.push_back(1);
    return pb;
}

std::vector<u64> pic0_coordinates(const Curve& c, const Pic0Basis& basis, const CurvePoint& P)
{
    const u64 ell = c.ell();
    const auto co = dlog2(c, mul(c, P, basis.cofactor), basis.H1, basis.e1, basis.H2, basis.e2, ell);
    if (!co)
        throw Error("pic0_coordinates: point is not rational");
    std::vector<u64> out;
    for (const int ax : basis.axes)
        out.push_back((ax == 0 ? co->first : co->second) % ell);
    return out;
}

std::vector<u64> pic0_coordinates(const Curve& c, const CurvePoint& P)
{
    return pic0_coordinates(c, pic0_basis(c), P);
}

bool is_divisible(const Curve& c, const CurvePoint& P, u64 n)
{
    if (n == 0)
        throw Error("is_divisible: n must be positive");
    if (P.inf || n == 1)
        return true;
    const mpz_class order = count_points(c);
    for (const u64 r : prime_factors(n))
    {
        const int e = valuation(n, r);
        if (order % r != 0)
            continue;
        const PrimaryPart pp = primary_part(c, c.base, order, r);
        const auto co = dlog2(c, mul(c, P, pp.cofactor), pp.S1, pp.a, pp.S2, pp.b, r);
        if (!co)
            throw Error("is_divisible: point is not rational");
        if (!divisible_in(co->first, pp.a, e, r) || !divisible_in(co->second, pp.b, e, r))
            return false;
    }
    return true;
}

std::vector<CurvePoint> rational_ell_torsion(const Curve& c)
{
    const Pic0Basis pb = pic0_basis(c);
    const u64 ell = c.ell();
    const CurvePoint T1 = pb.e1 > 0 ? mul(c, pb.H1, static_cast<i64>(ipow(ell, pb.e1 - 1))) : CurvePoint::infinity(c.base);
    const CurvePoint T2 = pb.e2 > 0 ? mul(c, pb.H2, static_cast<i64>(ipow(ell, pb.e2 - 1))) : CurvePoint::infinity(c.base);
    std::vector<CurvePoint> out;
    CurvePoint row = CurvePoint::infinity(c.base);
    for (u64 i = 0; i < (pb.e1 > 0 ? ell : 1); ++i)
    {
        CurvePoint T = row;
        for (u64 j = 0; j < (pb.e2 > 0 ? ell : 1); ++j)
        {
            out.push_back(T);
            T = add(c, T, T2);
        }
        row = add(c, row, T1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 count_three_torsion(const Curve& c)
{
    const u64 q = c.q();
    u64 count = 1;
    for (u64 x = 0; x < q; ++x)
    {
        // psi_3(x) = 3x^4 + 6a x^2 + 12b x - a^2
        const u64 x2 = mulmod(x, x, q);
        const u64 psi = (mulmod(3, mulmod(x2, x2, q), q) + mulmod(mulmod(6, c.a, q), x2, q) +
                         mulmod(mulmod(12, c.b, q), x, q) + q - mulmod(c.a, c.a, q)) % q;
        if (psi != 0)
            continue;
        const u64 v = rhs_mod(c, x);
        if (v == 0)
            count += 1;
        else if (powmod(v, (q - 1) / 2, q) == 1)
            count += 2;
    }
    return count;
}

}  // namespace ellcup
