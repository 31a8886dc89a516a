// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ellcup/curve.hpp"

namespace ellcup
{
/// Splitting of q in Q(zeta_3, 4^{1/3}, 3^{1/3}) rendered as cubic-residue tests mod q.
struct AdmissibilityReport
{
    i64 q = 0;
    bool prime = false;
    bool q_mod3_ok = false;  // q = 1 mod 3
    bool cube3 = false;
    bool cube4 = false;
    bool zeta_noncube = false;  // a primitive cube root of unity is not a cube
    bool admissible = false;
    std::string reason;  // first failed condition, empty when admissible
};

AdmissibilityReport admissible_prime(i64 q);

/// Elliptic-quotient checks for the genus-2 curve over F_q: E: y^2 = x^3 - 3 and
/// E': y^2 = x^3 + 9, the model of y~^2 = 1 - 3 w^3 under (w, y~) -> (-3w, 3y~).
struct CounterexampleReport
{
    u64 q = 0;
    u64 torsion_E = 0;
    u64 torsion_Eprime = 0;
    bool p1_divisible = false;  // (0,3) in 3 E'(F_q)
    bool conclusion = false;
};

/// Throws Error unless q is admissible.
CounterexampleReport verify_counterexample(i64 q);

struct ScanRow
{
    AdmissibilityReport adm;
    std::optional<CounterexampleReport> cex;  // admissible primes only
};

struct ScanResult
{
    std::vector<ScanRow> rows;  // one per prime <= q_max, ascending
    u64 primes = 0;
    u64 admissible = 0;

    double density() const noexcept { return primes ? static_cast<double>(admissible) / static_cast<double>(primes) : 0.0; }
};

/// With verify unset only admissibility is computed.
ScanResult scan(u64 q_max, bool verify = true);

inline constexpr const char* kScanHeader =
    "q,prime,q1mod3,cube3,cube4,zeta_noncube,admissible,torsionE,torsionEprime,p1_divisible,conclusion";

std::string csv_row(const ScanRow& row);

}  // namespace ellcup
