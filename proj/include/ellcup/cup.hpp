// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ellcup/galois.hpp"

namespace ellcup
{
/// The class [a] [g^c] in H^1(C, mu_ell), where div(a) = ell [P] - ell [0_C] and a is normalized
/// at 0_C. P = infinity gives the constant classes.
struct H1Class
{
    CurvePoint P;
    u64 c = 0;

    bool normalized() const noexcept { return c == 0; }
    bool constant() const noexcept { return P.inf; }
    /// "P=<x,y|inf>;c=<int>".
    std::string str() const;
};

/// deg [0_C] + sum pic0_i [G_i] in Pic(C) (x) mu_ell, with the mu_ell factor written as a power of
/// zeta0.
struct H2Class
{
    u64 deg = 0;
    std::vector<u64> pic0;

    bool operator==(const H2Class& o) const noexcept { return deg == o.deg && pic0 == o.pic0; }
    bool is_zero() const noexcept;
    /// "deg=<int>;pic0=<list>;zeta0=<elem>".
    std::string str(u64 zeta0) const;
};

H2Class add(const H2Class& x, const H2Class& y, u64 ell);

/// Per-curve data shared by all cup products: pic0 basis, dL and the Weil pairing on E(F_q)[ell].
/// Immutable after construction.
class CupContext
{
public:
    explicit CupContext(const Curve& c, LegendreOptions opts = {});

    const Curve& curve() const noexcept { return dl_.curve(); }
    u64 ell() const noexcept { return curve().ell(); }
    const LegendreDerivative& legendre() const noexcept { return dl_; }
    int dim() const noexcept { return dl_.basis().dim(); }

    /// E(F_q)[ell], sorted.
    const std::vector<CurvePoint>& torsion() const noexcept { return torsion_; }

    const std::vector<u64>& dL(const CurvePoint& P) const;
    const std::vector<u64>& pic0(const CurvePoint& P) const;
    /// Exponent of e_ell(P, Q) for P, Q in E(F_q)[ell].
    u64 weil(const CurvePoint& P, const CurvePoint& Q) const;

    /// Validated class; P must be rational ell-torsion.
    H1Class h1(const CurvePoint& P, i64 c) const;

private:
    const std::pair<u64, u64>& coords(const CurvePoint& P) const;

    LegendreDerivative dl_;
    std::vector<CurvePoint> torsion_;
    std::map<CurvePoint, std::vector<u64>> dl_table_;
    std::map<CurvePoint, std::vector<u64>> pic0_table_;
    // Coordinates in a basis (T1, T2) of E(F_q)[ell] and the pairing exponent of the basis.
    std::map<CurvePoint, std::pair<u64, u64>> coords_;
    u64 omega_ = 0;
};

H2Class cup_product(const CupContext& ctx, const H1Class& a, const H1Class& b);

/// [g^c] cup hb.
H2Class cup_with_constant(const CupContext& ctx, u64 c, const H1Class& hb);

MuRoot eval_hom(const PicHom& t, const H2Class& h, u64 ell);

/// t cup a cup b.
MuRoot triple_product(const CupContext& ctx, const PicHom& t, const H1Class& a, const H1Class& b);

struct SpanReport
{
    int dimension = 0;
    bool condition_ii = true;
};

/// Rank of all cups of normalized classes, and whether each equals [0_C] (x) e_ell(P_a, P_b).
SpanReport normalized_cup_span(const CupContext& ctx);

/// Rank over F_ell of a list of vectors.
int rank_mod(std::vector<std::vector<u64>> rows, u64 ell);

H1Class parse_h1(const CupContext& ctx, const std::string& s);
/// "t0=<int>;phi=<list>"; phi must have one entry per pic0 axis.
PicHom parse_pichom(const std::string& s, int dim, u64 ell);

}  // namespace ellcup
