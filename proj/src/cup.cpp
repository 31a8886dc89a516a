// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ellcup/cup.hpp"
#include "ellcup/pairing.hpp"

#include <set>
#include <sstream>

namespace ellcup
{
namespace
{
std::string join(const std::vector<u64>& v)
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::vector<u64> parse_list(const std::string& s)
{
    std::vector<u64> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        size_t used = 0;
        const i64 v = std::stoll(item, &used);
        if (used != item.size() || v < 0)
            throw std::invalid_argument("bad list entry: " + item);
        out.push_back(static_cast<u64>(v));
    }
    return out;
}

// "k1=v1;k2=v2" with values free to contain commas.
std::map<std::string, std::string> parse_record(const std::string& s)
{
    std::map<std::string, std::string> kv;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';'))
    {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key=value: " + item);
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

std::vector<u64> axpy(const std::vector<u64>& x, u64 a, const std::vector<u64>& y, u64 ell)
{
    std::vector<u64> r = x;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = (r[i] + a % ell * y[i]) % ell;
    return r;
}
}  // namespace

std::string H1Class::str() const
{
    return "P=" + P.str() + ";c=" + std::to_string(c);
}

bool H2Class::is_zero() const noexcept
{
    return deg == 0 && std::all_of(pic0.begin(), pic0.end(), [](u64 v) { return v == 0; });
}

std::string H2Class::str(u64 zeta0) const
{
    return "deg=" + std::to_string(deg) + ";pic0=" + join(pic0) + ";zeta0=" + std::to_string(zeta0);
}

H2Class add(const H2Class& x, const H2Class& y, u64 ell)
{
    return {(x.deg + y.deg) % ell, axpy(x.pic0, 1, y.pic0, ell)};
}

CupContext::CupContext(const Curve& c, LegendreOptions opts) : dl_(c, opts), torsion_(rational_ell_torsion(c))
{
    const u64 ell = c.ell();
    for (const auto& P : torsion_)
    {
        dl_table_.emplace(P, dl_(P));
        pic0_table_.emplace(P, pic0_coordinates(c, dl_.basis(), P));
    }
    // A basis of E(F_q)[ell]: the first nonzero point, then the first point outside its span.
    CurvePoint T1 = CurvePoint::infinity(c.base), T2 = T1;
    if (torsion_.size() > 1)
        T1 = torsion_[1];
    std::set<CurvePoint> line;
    for (u64 i = 0; i < ell; ++i)
        line.insert(mul(c, T1, static_cast<i64>(i)));
    for (const auto& P : torsion_)
        if (!line.count(P))
        {
            T2 = P;
            break;
        }
    const u64 r2 = T2.inf ? 1 : ell;
    for (u64 i = 0; i < (T1.inf ? 1 : ell); ++i)
        for (u64 j = 0; j < r2; ++j)
            coords_.emplace(add(c, mul(c, T1, static_cast<i64>(i)), mul(c, T2, static_cast<i64>(j))),
                            std::make_pair(i, j));
    if (coords_.size() != torsion_.size())
        throw Error("cup: rational ell-torsion basis is inconsistent");
    if (!T2.inf)
        omega_ = weil_pairing(c, T1, T2).e;
}

const std::vector<u64>& CupContext::dL(const CurvePoint& P) const
{
    const auto it = dl_table_.find(P);
    if (it == dl_table_.end())
        throw Error("dL: point is not rational ell-torsion");
    return it->second;
}

const std::vector<u64>& CupContext::pic0(const CurvePoint& P) const
{
    const auto it = pic0_table_.find(P);
    if (it == pic0_table_.end())
        throw Error("pic0: point is not rational ell-torsion");
    return it->second;
}

const std::pair<u64, u64>& CupContext::coords(const CurvePoint& P) const
{
    const auto it = coords_.find(P);
    if (it == coords_.end())
        throw Error("weil: point is not rational ell-torsion");
    return it->second;
}

u64 CupContext::weil(const CurvePoint& P, const CurvePoint& Q) const
{
    const u64 ell = this->ell();
    const auto [a, b] = coords(P);
    const auto [c, d] = coords(Q);
    const u64 det = (a * d % ell + ell - b * c % ell) % ell;
    return det * omega_ % ell;
}

H1Class CupContext::h1(const CurvePoint& P, i64 c) const
{
    if (P.field->m != 1 || !on_curve(curve(), P))
        throw Error("h1: point must be a rational point of the curve");
    if (!mul(curve(), P, static_cast<i64>(ell())).inf)
        throw Error("h1: point " + P.str() + " is not ell-torsion");
    return H1Class{P, reduce_signed(c, ell())};
}

H2Class cup_product(const CupContext& ctx, const H1Class& a, const H1Class& b)
{
    const u64 ell = ctx.ell();
    const size_t dim = static_cast<size_t>(ctx.dim());
    const u64 w = ctx.weil(a.P, b.P);
    const auto& dla = ctx.dL(a.P);
    const auto& dlb = ctx.dL(b.P);
    H2Class r{w, std::vector<u64>(dim, 0)};
    if (ell > 2)
    {
        // deg = e(P_a, P_b); pic0 = c_a dL(P_b) - c_b dL(P_a).
        r.pic0 = axpy(axpy(r.pic0, a.c, dlb, ell), (ell - b.c) % ell, dla, ell);
        return r;
    }

    // ell = 2. zeta'' and zeta from the case table, written additively.
    u64 zeta2 = 0, zeta = 0;
    const u64 q = ctx.curve().q();
    if (a.P.inf || b.P.inf)
    {
    }
    else if (w == 0)
    {
        zeta = ((q - 1) / 2) % 2;
        zeta2 = 1;
    }
    else
    {
        // dL(P_a) z + dL(P_b) z' = [P_a] - [P_b] over Z/2.
        const auto& pa = ctx.pic0(a.P);
        const auto& pb = ctx.pic0(b.P);
        bool found = false;
        for (u64 z = 0; z < 2 && !found; ++z)
            for (u64 z2 = 0; z2 < 2 && !found; ++z2)
            {
                bool ok = true;
                for (size_t i = 0; i < dim; ++i)
                    ok &= (dla[i] * z + dlb[i] * z2) % 2 == (pa[i] + pb[i]) % 2;
                if (ok)
                {
                    zeta = z;
                    found = true;
                }
            }
        if (!found)
            throw Error("cup: the system for zeta, zeta' has no solution");
    }
    // ([0_C] + [P_b]) w + [P_a] zeta'' + dL(P_b) c_a - dL(P_a) (zeta^{-1} + c_b).
    r.pic0 = axpy(r.pic0, w, ctx.pic0(b.P), 2);
    r.pic0 = axpy(r.pic0, zeta2, ctx.pic0(a.P), 2);
    r.pic0 = axpy(r.pic0, a.c, dlb, 2);
    r.pic0 = axpy(r.pic0, zeta + b.c, dla, 2);
    return r;
}

H2Class cup_with_constant(const CupContext& ctx, u64 c, const H1Class& hb)
{
    if (!hb.normalized() && !hb.constant())
        throw Error("cup_with_constant: class must be normalized or constant");
    const u64 ell = ctx.ell();
    const std::vector<u64> zero(static_cast<size_t>(ctx.dim()), 0);
    return {0, axpy(zero, c % ell, ctx.dL(hb.P), ell)};
}

MuRoot eval_hom(const PicHom& t, const H2Class& h, u64 ell)
{
    if (!t.phi.empty() && t.phi.size() != h.pic0.size())
        throw Error("eval_hom: functional and class have different dimensions");
    u64 e = t.t0 % ell * h.deg % ell;
    for (size_t i = 0; i < t.phi.size(); ++i)
        e = (e + t.phi[i] % ell * h.pic0[i]) % ell;
    return {e, ell};
}

MuRoot triple_product(const CupContext& ctx, const PicHom& t, const H1Class& a, const H1Class& b)
{
    return eval_hom(t, cup_product(ctx, a, b), ctx.ell());
}

int rank_mod(std::vector<std::vector<u64>> rows, u64 ell)
{
    int rank = 0;
    const size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < cols && static_cast<size_t>(rank) < rows.size(); ++col)
    {
        size_t piv = static_cast<size_t>(rank);
        while (piv < rows.size() && rows[piv][col] % ell == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[static_cast<size_t>(rank)]);
        const auto& p = rows[static_cast<size_t>(rank)];
        const u64 inv = invmod(p[col] % ell, ell);
        for (size_t r = 0; r < rows.size(); ++r)
        {
            if (r == static_cast<size_t>(rank) || rows[r][col] % ell == 0)
                continue;
            const u64 f = rows[r][col] % ell * inv % ell;
            for (size_t j = 0; j < cols; ++j)
                rows[r][j] = (rows[r][j] + (ell - f) * (p[j] % ell)) % ell;
        }
        ++rank;
    }
    return rank;
}

SpanReport normalized_cup_span(const CupContext& ctx)
{
    SpanReport rep;
    std::vector<std::vector<u64>> rows;
    for (const auto& P : ctx.torsion())
        for (const auto& Q : ctx.torsion())
        {
            const H2Class h = cup_product(ctx, H1Class{P, 0}, H1Class{Q, 0});
            std::vector<u64> row{h.deg};
            row.insert(row.end(), h.pic0.begin(), h.pic0.end());
            rows.push_back(row);
            rep.condition_ii &= h.deg == ctx.weil(P, Q) &&
                                std::all_of(h.pic0.begin(), h.pic0.end(), [](u64 v) { return v == 0; });
        }
    rep.dimension = rank_mod(rows, ctx.ell());
    return rep;
}

H1Class parse_h1(const CupContext& ctx, const std::string& s)
{
    const auto kv = parse_record(s);
    if (!kv.count("P"))
        throw std::invalid_argument("class needs P=<x,y|inf>: " + s);
    const CurvePoint P = parse_point(ctx.curve(), kv.at("P"));
    i64 c = 0;
    if (kv.count("c"))
    {
        size_t used = 0;
        c = std::stoll(kv.at("c"), &used);
        if (used != kv.at("c").size())
            throw std::invalid_argument("bad constant exponent: " + s);
    }
    return ctx.h1(P, c);
}

PicHom parse_pichom(const std::string& s, int dim, u64 ell)
{
    const auto kv = parse_record(s);
    PicHom t;
    if (kv.count("t0"))
    {
        const auto v = parse_list(kv.at("t0"));
        if (v.size() != 1)
            throw std::invalid_argument("t0 must be one integer: " + s);
        t.t0 = v[0] % ell;
    }
    t.phi = kv.count("phi") ? parse_list(kv.at("phi")) : std::vector<u64>(static_cast<size_t>(dim), 0);
    if (t.phi.size() != static_cast<size_t>(dim))
        throw std::invalid_argument("phi needs " + std::to_string(dim) + " entries: " + s);
    for (auto& x : t.phi)
        x %= ell;
    return t;
}

}  // namespace ellcup
