// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ellcup/curve.hpp"

#include <array>
#include <map>

namespace ellcup
{
using Vec2 = std::array<u64, 2>;
/// Row-major 2x2 matrix.
using Mat2 = std::array<Vec2, 2>;

namespace linalg
{
using Matrix = std::vector<std::vector<u64>>;

/// Some y with A y = b over Z/ell^k, or nothing. A is given by rows.
std::optional<std::vector<u64>> solve(const Matrix& A, const std::vector<u64>& b, u64 ell, int k);

Mat2 mul(const Mat2& A, const Mat2& B, u64 mod);
Vec2 apply(const Mat2& A, const Vec2& x, u64 mod);
Mat2 inverse(const Mat2& A, u64 mod);
Mat2 minus_identity(const Mat2& A, u64 mod);
}  // namespace linalg

/// Frobenius on E[ell^n] in a fixed basis. G is the matrix of the coordinate q-power map and
/// M = G^{-1} that of arithmetic Frobenius; columns are images of P1, P2.
struct FrobData
{
    u64 ell = 0;
    int n = 0;
    u64 mod = 0;  // ell^n
    int m = 0;
    Field field;
    CurvePoint P1, P2;
    Mat2 G{}, M{}, lA{};
};

FrobData frobenius_data(const Curve& c, int n, int degree_cap = kDefaultDegreeCap);

/// Coordinates mod ell^j of X in E[ell^j] with respect to ell^{n-j} (P1, P2).
Vec2 torsion_coordinates(const Curve& c, const FrobData& fd, const CurvePoint& X, int j);

/// Whether x - y lies in (M - I) T + ell^k T.
bool art_congruent(const FrobData& fd, const Vec2& x, const Vec2& y, int k);

/// Which matrix turns a lifted torsion vector into an Artin representative. Phi is the Frobenius
/// in use: M, or G when LegendreOptions::geometric is set.
enum class ArtForm
{
    OneMinusPhi,
    PhiMinusOne,
    InverseMinusOne,
};

struct LegendreOptions
{
    int precision = 0;  // 0 picks v_ell(#E(F_q)) + 2
    bool geometric = false;
    ArtForm art = ArtForm::OneMinusPhi;
    int degree_cap = kDefaultDegreeCap;
};

/// An element of Hom(Pic(C), Z/ell): its value on [0_C] and a functional on Pic^0(C)/ell in
/// pic0 coordinates.
struct PicHom
{
    u64 t0 = 0;
    std::vector<u64> phi;
};

/// The Legendre derivative dL: E(F_q)[ell] -> E(F_q)/ell E(F_q) together with the Artin data it
/// is built from. Construction does the expensive torsion and Frobenius work once.
class LegendreDerivative
{
public:
    explicit LegendreDerivative(const Curve& c, LegendreOptions opts = {});

    const Curve& curve() const noexcept { return c_; }
    const Pic0Basis& basis() const noexcept { return basis_; }
    int valuation() const noexcept { return v_; }
    int precision() const noexcept { return n_; }
    /// Frobenius data at the working precision; throws when Pic^0/ell is trivial.
    const FrobData& frob() const;

    /// art(P) for P in E(F_q)[ell^j], as a vector mod ell^{precision - j}.
    std::vector<u64> artin_vector(const CurvePoint& P) const;

    /// dL(P) in pic0 coordinates, for P in E(F_q)[ell].
    std::vector<u64> operator()(const CurvePoint& P) const;

    /// Pic^0/ell coordinates of art^{-1} of the class of X in E[ell] (any field containing it).
    std::vector<u64> restrict_class(const CurvePoint& X) const;

    /// Primary parts of the pic0 generators.
    const std::vector<CurvePoint>& primary_generators() const noexcept { return gens_; }

private:
    Mat2 phi() const;
    Vec2 art_raw(const CurvePoint& P, int j) const;
    std::vector<u64> to_pic0(const Vec2& residue) const;

    Curve c_;
    LegendreOptions opts_;
    Pic0Basis basis_;
    int v_ = 0;
    int n_ = 0;
    std::optional<FrobData> fd_;
    std::vector<CurvePoint> gens_;
    std::vector<Vec2> gen_art_;  // art of each generator, mod ell
};

std::vector<u64> legendre_derivative(const Curve& c, const CurvePoint& P, LegendreOptions opts = {});

/// The point S of E[ell] with e_ell(S, X) = zeta0^{tbar(X)} for all X in E[ell], where
/// tbar(X) = t(art^{-1}(X mod (1 - Phi))). Returned over the E[ell] division field.
CurvePoint restrict_hom(const LegendreDerivative& dl, const PicHom& t);
CurvePoint restrict_hom(const Curve& c, const PicHom& t);

}  // namespace ellcup
