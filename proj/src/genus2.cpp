// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ellcup/genus2.hpp"

namespace ellcup
{
namespace
{
bool is_cube(u64 x, u64 q)
{
    x %= q;
    return x == 0 || (q - 1) % 3 != 0 || powmod(x, (q - 1) / 3, q) == 1;
}

// A primitive cube root of unity mod q, for q = 1 mod 3.
u64 cube_root_of_unity(u64 q)
{
    for (u64 g = 2; g < q; ++g)
    {
        const u64 z = powmod(g, (q - 1) / 3, q);
        if (z != 1)
            return z;
    }
    throw Error("no primitive cube root of unity mod " + std::to_string(q));
}

const char* flag(bool b)
{
    return b ? "1" : "0";
}
}  // namespace

AdmissibilityReport admissible_prime(i64 q)
{
    AdmissibilityReport r;
    r.q = q;
    if (q < 2 || !is_prime(static_cast<u64>(q)))
    {
        r.reason = "not a prime";
        return r;
    }
    r.prime = true;
    const u64 p = static_cast<u64>(q);
    if (p <= 3)
    {
        r.reason = "q <= 3 ramifies";
        return r;
    }
    r.q_mod3_ok = p % 3 == 1;
    r.cube3 = is_cube(3, p);
    r.cube4 = is_cube(4, p);
    if (r.q_mod3_ok)
    {
        const u64 z = cube_root_of_unity(p);
        r.zeta_noncube = !is_cube(z, p);
    }
    if (!r.q_mod3_ok)
        r.reason = "q != 1 mod 3";
    else if (!r.cube3)
        r.reason = "3 is not a cube";
    else if (!r.cube4)
        r.reason = "4 is not a cube";
    else if (!r.zeta_noncube)
        r.reason = "primitive cube root of unity is a cube";
    r.admissible = r.reason.empty();
    return r;
}

CounterexampleReport verify_counterexample(i64 q)
{
    const AdmissibilityReport adm = admissible_prime(q);
    if (!adm.admissible)
        throw Error("genus2: q = " + std::to_string(q) + " is not admissible (" + adm.reason + ")");
    const Field f = make_context(static_cast<u64>(q), 3, 1);
    const Curve E = curve_new(f, 0, -3);
    const Curve Ep = curve_new(f, 0, 9);
    CounterexampleReport r;
    r.q = static_cast<u64>(q);
    r.torsion_E = count_three_torsion(E);
    r.torsion_Eprime = count_three_torsion(Ep);
    const CurvePoint P1 = CurvePoint::affine(FElem::zero(f), FElem::from_int(f, 3));
    r.p1_divisible = is_divisible(Ep, P1, 3);
    r.conclusion = r.torsion_E == 9 && r.torsion_Eprime == 9 && !r.p1_divisible;
    return r;
}

ScanResult scan(u64 q_max, bool verify)
{
    if (q_max < 2)
        throw Error("scan: q_max must be at least 2");
    ScanResult out;
    for (u64 q = 2; q <= q_max; ++q)
    {
        if (!is_prime(q))
            continue;
        ScanRow row{admissible_prime(static_cast<i64>(q)), std::nullopt};
        ++out.primes;
        if (row.adm.admissible)
        {
            ++out.admissible;
            if (verify)
                row.cex = verify_counterexample(static_cast<i64>(q));
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string csv_row(const ScanRow& row)
{
    const auto& a = row.adm;
    std::string s = std::to_string(a.q) + "," + flag(a.prime) + "," + flag(a.q_mod3_ok) + "," + flag(a.cube3) + "," +
                    flag(a.cube4) + "," + flag(a.zeta_noncube) + "," + flag(a.admissible) + ",";
    if (row.cex)
        s += std::to_string(row.cex->torsion_E) + "," + std::to_string(row.cex->torsion_Eprime) + "," +
             flag(row.cex->p1_divisible) + "," + flag(row.cex->conclusion);
    else
        s += ",,,";
    return s;
}

}  // namespace ellcup
