// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ellcup/curve.hpp"

namespace ellcup
{
/// An evaluation point hit the support of a Miller line function.
class SupportCollision : public Error
{
public:
    using Error::Error;
};

/// f_{n,P}(Q1) / f_{n,P}(Q2), where div f_{n,P} = n[P] - [nP] - (n-1)[inf] and f is normalized to
/// leading coefficient 1 in the uniformizer x/y at infinity.
FElem miller_eval(const Curve& c, const CurvePoint& P, u64 n, const CurvePoint& Q1, const CurvePoint& Q2);

/// The Weil pairing e_N(P, Q) = f_{D_P}(D_Q) / f_{D_Q}(D_P) as a field element, with
/// D_P = [P+R] - [R] and D_Q = [Q+S] - [S] for shifts drawn from a generator seeded by the inputs.
FElem weil_value(const Curve& c, const CurvePoint& P, const CurvePoint& Q, u64 N);

/// e_{ell^n}(P, Q)^{ell^{n-1}} written as a power of zeta0.
MuRoot weil_pairing(const Curve& c, const CurvePoint& P, const CurvePoint& Q, int n = 1);

/// f_{ell,P}(D_Q)^{(#F - 1)/ell} for P in E(F)[ell] and Q in E(F).
MuRoot tate_pairing(const Curve& c, const CurvePoint& P, const CurvePoint& Q);

}  // namespace ellcup
