// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ellcup/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace ellcup
{
namespace poly
{
void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Poly mul(const Poly& a, const Poly& b, u64 p)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
    {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    }
    Poly r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i)
        r[i] = static_cast<u64>(acc[i] % p);
    trim(r);
    return r;
}

Poly mod(Poly a, const Poly& m, u64 p)
{
    trim(a);
    const size_t dm = m.size() - 1;
    const u64 inv_lead = invmod(m.back(), p);
    while (a.size() > dm)
    {
        const size_t shift = a.size() - 1 - dm;
        const u64 c = mulmod(a.back(), inv_lead, p);
        for (size_t j = 0; j <= dm; ++j)
            a[shift + j] = (a[shift + j] + p - mulmod(c, m[j], p)) % p;
        trim(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b, u64 p)
{
    trim(a);
    trim(b);
    while (!b.empty())
    {
        a = mod(std::move(a), b, p);
        std::swap(a, b);
    }
    if (!a.empty())
    {
        const u64 inv = invmod(a.back(), p);
        for (auto& c : a)
            c = mulmod(c, inv, p);
    }
    return a;
}

namespace
{
Poly powmod(Poly base, const mpz_class& e, const Poly& m, u64 p)
{
    Poly r{1};
    base = mod(std::move(base), m, p);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;)
    {
        r = mod(mul(r, r, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = mod(mul(r, base, p), m, p);
    }
    return r;
}
}  // namespace

Poly powmod_x(const mpz_class& e, const Poly& m, u64 p)
{
    return powmod(Poly{0, 1}, e, m, p);
}

bool is_irreducible(const Poly& f, u64 p)
{
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 0)
        return false;
    if (n == 1)
        return true;
    Poly h{0, 1};
    for (int i = 1; i <= n / 2; ++i)
    {
        h = powmod(h, mpz_class(p), f, p);
        Poly t = h;
        t.resize(std::max<size_t>(t.size(), 2), 0);
        t[1] = (t[1] + p - 1) % p;
        trim(t);
        if (gcd(t, f, p).size() > 1)
            return false;
    }
    return true;
}
}  // namespace poly

namespace
{
std::shared_ptr<FieldCtx> base_context(u64 p, u64 ell)
{
    if (p >= (u64{1} << 32) || !is_prime(p))
        throw Error("field characteristic must be a prime below 2^32");
    if (!is_prime(ell))
        throw Error("ell must be prime");
    if ((p - 1) % ell != 0)
        throw Error("ell does not divide p - 1");
    auto ctx = std::make_shared<FieldCtx>();
    ctx->p = p;
    ctx->ell = ell;
    const u64 e = (p - 1) / ell;
    u64 g = 2;
    while (powmod(g, e, p) == 1)
        ++g;
    ctx->nonresidue = g;
    ctx->zeta0 = powmod(g, e, p);
    return ctx;
}

void set_modulus(FieldCtx& ctx, std::vector<u64> modulus)
{
    ctx.m = static_cast<int>(modulus.size()) - 1;
    ctx.tail.clear();
    for (int i = 0; i < ctx.m; ++i)
    {
        if (modulus[static_cast<size_t>(i)] != 0)
            ctx.tail.emplace_back(i, modulus[static_cast<size_t>(i)]);
    }
    ctx.modulus = std::move(modulus);
    if (ctx.m == 1)
        ctx.modulus.clear();
}

Field context_with_modulus(u64 p, u64 ell, std::vector<u64> modulus)
{
    auto ctx = base_context(p, ell);
    set_modulus(*ctx, std::move(modulus));
    return ctx;
}
}  // namespace

mpz_class FieldCtx::order() const
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(m));
    return r;
}

Field make_context(u64 p, u64 ell, int m, int degree_cap)
{
    if (m < 1)
        throw Error("extension degree must be positive");
    if (m > degree_cap)
        throw Error("extension degree " + std::to_string(m) + " exceeds the cap " +
                    std::to_string(degree_cap));
    auto ctx = base_context(p, ell);
    if (m == 1)
        return ctx;

    // Modulus searches are slow at large degree; contexts are immutable, so share them.
    static std::mutex mu;
    static std::map<std::tuple<u64, u64, int>, Field> memo;
    const auto key = std::make_tuple(p, ell, m);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
    }

    // Candidates ordered lexicographically on (c_0, ..., c_{m-1}); c_0 = 0 is never irreducible.
    std::vector<u64> c(static_cast<size_t>(m), 0);
    c[0] = 1;
    while (true)
    {
        poly::Poly f(c.begin(), c.end());
        f.push_back(1);
        if (poly::is_irreducible(f, p))
        {
            set_modulus(*ctx, std::move(f));
            std::lock_guard<std::mutex> lock(mu);
            memo.emplace(key, ctx);
            return ctx;
        }
        int i = m - 1;
        while (i >= 0 && ++c[static_cast<size_t>(i)] == p)
            c[static_cast<size_t>(i--)] = 0;
        if (i < 0)
            throw Error("no irreducible polynomial found");
    }
}

Field parse_field_spec(const std::string& spec, int degree_cap)
{
    std::map<std::string, i64> kv;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("malformed field spec: " + spec);
        kv[item.substr(0, colon)] = std::stoll(item.substr(colon + 1));
    }
    if (!kv.count("p") || !kv.count("l") || kv["p"] <= 0 || kv["l"] <= 0)
        throw std::invalid_argument("field spec needs p and l: " + spec);
    const i64 m = kv.count("m") ? kv["m"] : 1;
    return make_context(static_cast<u64>(kv["p"]), static_cast<u64>(kv["l"]), static_cast<int>(m),
                        degree_cap);
}

FElem::FElem(Field f, std::vector<u64> coeffs) : f_(std::move(f)), c_(std::move(coeffs))
{
    c_.resize(static_cast<size_t>(f_->m), 0);
    for (auto& x : c_)
        x %= f_->p;
}

FElem FElem::zero(const Field& f)
{
    return FElem(f, std::vector<u64>(static_cast<size_t>(f->m), 0));
}

FElem FElem::one(const Field& f)
{
    return from_int(f, 1);
}

FElem FElem::from_int(const Field& f, i64 v)
{
    std::vector<u64> c(static_cast<size_t>(f->m), 0);
    c[0] = reduce_signed(v, f->p);
    return FElem(f, std::move(c));
}

bool FElem::is_zero() const noexcept
{
    return std::all_of(c_.begin(), c_.end(), [](u64 x) { return x == 0; });
}

bool FElem::is_one() const noexcept
{
    return c_[0] == 1 && in_prime_field();
}

bool FElem::in_prime_field() const noexcept
{
    return std::all_of(c_.begin() + 1, c_.end(), [](u64 x) { return x == 0; });
}

FElem FElem::operator-() const
{
    FElem r = *this;
    for (auto& x : r.c_)
        x = x == 0 ? 0 : f_->p - x;
    return r;
}

FElem& FElem::operator+=(const FElem& o)
{
    const u64 p = f_->p;
    for (size_t i = 0; i < c_.size(); ++i)
    {
        c_[i] += o.c_[i];
        if (c_[i] >= p)
            c_[i] -= p;
    }
    return *this;
}

FElem& FElem::operator-=(const FElem& o)
{
    const u64 p = f_->p;
    for (size_t i = 0; i < c_.size(); ++i)
        c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
    return *this;
}

FElem& FElem::operator*=(const FElem& o)
{
    const u64 p = f_->p;
    const int m = f_->m;
    if (m == 1)
    {
        c_[0] = mulmod(c_[0], o.c_[0], p);
        return *this;
    }
    std::vector<unsigned __int128> acc(static_cast<size_t>(2 * m - 1), 0);
    for (int i = 0; i < m; ++i)
    {
        const u64 a = c_[static_cast<size_t>(i)];
        if (a == 0)
            continue;
        unsigned __int128* row = acc.data() + i;
        for (int j = 0; j < m; ++j)
            row[j] += static_cast<unsigned __int128>(a) * o.c_[static_cast<size_t>(j)];
    }
    std::vector<u64> r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i)
        r[i] = static_cast<u64>(acc[i] % p);
    // x^m = -sum tail, applied from the top down.
    for (int k = 2 * m - 2; k >= m; --k)
    {
        const u64 c = r[static_cast<size_t>(k)];
        if (c == 0)
            continue;
        r[static_cast<size_t>(k)] = 0;
        for (const auto& [deg, coef] : f_->tail)
        {
            auto& t = r[static_cast<size_t>(k - m + deg)];
            t = (t + p - mulmod(c, coef, p)) % p;
        }
    }
    r.resize(static_cast<size_t>(m));
    c_ = std::move(r);
    return *this;
}

FElem FElem::square() const
{
    FElem r = *this;
    r *= *this;
    return r;
}

FElem FElem::inverse() const
{
    if (is_zero())
        throw Error("inverse of zero");
    const u64 p = f_->p;
    if (f_->m == 1)
        return FElem(f_, {invmod(c_[0], p)});
    // Extended Euclid on (modulus, a), tracking the cofactor of a.
    poly::Poly r0 = f_->modulus, r1(c_.begin(), c_.end());
    poly::trim(r1);
    poly::Poly s0{}, s1{1};
    while (r1.size() > 1)
    {
        poly::Poly q(r0.size() - r1.size() + 1, 0);
        const u64 inv_lead = invmod(r1.back(), p);
        while (r0.size() >= r1.size() && !r0.empty())
        {
            const size_t shift = r0.size() - r1.size();
            const u64 c = mulmod(r0.back(), inv_lead, p);
            q[shift] = c;
            for (size_t j = 0; j < r1.size(); ++j)
                r0[shift + j] = (r0[shift + j] + p - mulmod(c, r1[j], p)) % p;
            poly::trim(r0);
        }
        poly::Poly qs = poly::mul(q, s1, p);
        qs.resize(std::max(qs.size(), s0.size()), 0);
        for (size_t i = 0; i < s0.size(); ++i)
            qs[i] = (s0[i] + p - qs[i]) % p;
        for (size_t i = s0.size(); i < qs.size(); ++i)
            qs[i] = (p - qs[i]) % p;
        poly::trim(qs);
        s0 = std::move(s1);
        s1 = std::move(qs);
        std::swap(r0, r1);
    }
    const u64 inv = invmod(r1[0], p);
    for (auto& x : s1)
        x = mulmod(x, inv, p);
    return FElem(f_, std::move(s1));
}

FElem FElem::pow(const mpz_class& e) const
{
    if (e < 0)
        return inverse().pow(mpz_class(-e));
    FElem r = one(f_);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;)
    {
        r *= r;
        if (mpz_tstbit(e.get_mpz_t(), i))
            r *= *this;
    }
    return r;
}

FElem FElem::pow(u64 e) const
{
    FElem r = one(f_);
    FElem b = *this;
    while (e != 0)
    {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

FElem FElem::frobenius() const
{
    return pow(f_->p);
}

std::string FElem::str() const
{
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i)
    {
        if (i)
            s += ',';
        s += std::to_string(c_[i]);
    }
    return s;
}

bool is_square(const FElem& a)
{
    if (a.is_zero())
        return true;
    return a.pow(mpz_class((a.field()->order() - 1) / 2)).is_one();
}

std::optional<FElem> sqrt(const FElem& a)
{
    const Field& f = a.field();
    if (a.is_zero())
        return a;
    const mpz_class q = f->order();
    if (!a.pow(mpz_class((q - 1) / 2)).is_one())
        return std::nullopt;
    mpz_class t = q - 1;
    int s = 0;
    while (mpz_even_p(t.get_mpz_t()))
    {
        t /= 2;
        ++s;
    }
    FElem r;
    if (s == 1)
        r = a.pow(mpz_class((q + 1) / 4));
    else
    {
        // Tonelli-Shanks with the first non-square in lexicographic order.
        FElem z = FElem::from_int(f, 2);
        std::vector<u64> c(static_cast<size_t>(f->m), 0);
        for (u64 k = 2;; ++k)
        {
            if (f->m == 1)
                z = FElem::from_int(f, static_cast<i64>(k));
            else
            {
                c[0] = k % f->p;
                c[1] = 1 + k / f->p;
                z = FElem(f, c);
            }
            if (!is_square(z))
                break;
        }
        int mm = s;
        FElem cc = z.pow(t);
        FElem tt = a.pow(t);
        r = a.pow(mpz_class((t + 1) / 2));
        while (!tt.is_one())
        {
            int i = 0;
            FElem t2 = tt;
            while (!t2.is_one())
            {
                t2 = t2.square();
                ++i;
            }
            FElem b = cc;
            for (int j = 0; j < mm - i - 1; ++j)
                b = b.square();
            mm = i;
            cc = b.square();
            tt *= cc;
            r *= b;
        }
    }
    FElem neg = -r;
    return neg < r ? neg : r;
}

FElem random_element(const Field& f, std::mt19937_64& rng)
{
    std::uniform_int_distribution<u64> d(0, f->p - 1);
    std::vector<u64> c(static_cast<size_t>(f->m));
    for (auto& x : c)
        x = d(rng);
    return FElem(f, std::move(c));
}

std::vector<FElem> all_elements(const Field& f)
{
    const mpz_class n = f->order();
    if (n > 5000000)
        throw Error("field too large to enumerate");
    std::vector<FElem> out;
    out.reserve(n.get_ui());
    std::vector<u64> c(static_cast<size_t>(f->m), 0);
    while (true)
    {
        out.emplace_back(f, c);
        int i = f->m - 1;
        while (i >= 0 && ++c[static_cast<size_t>(i)] == f->p)
            c[static_cast<size_t>(i--)] = 0;
        if (i < 0)
            break;
    }
    return out;
}

FElem canonical_mu_generator(const Field& f)
{
    return FElem::from_int(f, static_cast<i64>(f->zeta0));
}

u64 chi(const Field& f, u64 x)
{
    x %= f->p;
    if (x == 0)
        throw Error("chi of zero");
    const u64 v = powmod(x, (f->p - 1) / f->ell, f->p);
    u64 z = 1;
    for (u64 e = 0; e < f->ell; ++e)
    {
        if (z == v)
            return e;
        z = mulmod(z, f->zeta0, f->p);
    }
    throw Error("chi: value is not a root of unity");
}

u64 chi(const Field& f, const FElem& x)
{
    if (!x.in_prime_field())
        throw Error("chi expects an element of the prime field");
    return chi(f, x.coeff(0));
}

MuRoot mu_log(const FElem& z)
{
    const Field& f = z.field();
    if (!z.in_prime_field())
        throw Error("value is not an ell-th root of unity");
    u64 w = 1;
    for (u64 e = 0; e < f->ell; ++e)
    {
        if (w == z.coeff(0))
            return {e, f->ell};
        w = mulmod(w, f->zeta0, f->p);
    }
    throw Error("value is not an ell-th root of unity");
}

namespace
{
// Polynomials in z with coefficients in a field, least degree first.
using FPoly = std::vector<FElem>;

void ftrim(FPoly& a)
{
    while (!a.empty() && a.back().is_zero())
        a.pop_back();
}

FPoly fmod(FPoly a, const FPoly& m)
{
    ftrim(a);
    const size_t dm = m.size() - 1;
    const FElem inv = m.back().inverse();
    while (a.size() > dm)
    {
        const size_t shift = a.size() - 1 - dm;
        const FElem c = a.back() * inv;
        for (size_t j = 0; j <= dm; ++j)
            a[shift + j] -= c * m[j];
        ftrim(a);
    }
    return a;
}

FPoly fmulmod(const FPoly& a, const FPoly& b, const FPoly& m)
{
    if (a.empty() || b.empty())
        return {};
    FPoly r(a.size() + b.size() - 1, FElem::zero(a[0].field()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return fmod(std::move(r), m);
}

FPoly fgcd(FPoly a, FPoly b)
{
    ftrim(a);
    ftrim(b);
    while (!b.empty())
    {
        a = fmod(std::move(a), b);
        std::swap(a, b);
    }
    const FElem inv = a.back().inverse();
    for (auto& c : a)
        c *= inv;
    return a;
}

// One root of a monic polynomial that splits into distinct linear factors over its
// coefficient field (odd characteristic).
FElem split_root(FPoly h, std::mt19937_64& rng)
{
    const Field& k = h[0].field();
    const mpz_class e = (k->order() - 1) / 2;
    while (h.size() > 2)
    {
        const FElem delta = random_element(k, rng);
        FPoly base{delta, FElem::one(k)};
        FPoly w{FElem::one(k)};
        const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (size_t i = bits; i-- > 0;)
        {
            w = fmulmod(w, w, h);
            if (mpz_tstbit(e.get_mpz_t(), i))
                w = fmulmod(w, base, h);
        }
        if (w.empty())
            continue;
        w[0] -= FElem::one(k);
        ftrim(w);
        if (w.empty())
            continue;
        FPoly g = fgcd(w, h);
        if (g.size() > 1 && g.size() < h.size())
        {
            if (2 * (g.size() - 1) <= h.size() - 1)
                h = std::move(g);
            else
            {
                // Keep the smaller cofactor.
                FPoly q;
                FPoly r = h;
                q.assign(h.size() - g.size() + 1, FElem::zero(k));
                while (r.size() >= g.size())
                {
                    const size_t shift = r.size() - g.size();
                    const FElem c = r.back();
                    q[shift] = c;
                    for (size_t j = 0; j < g.size(); ++j)
                        r[shift + j] -= c * g[j];
                    ftrim(r);
                }
                h = std::move(q);
            }
        }
    }
    return -h[0] * h[1].inverse();
}

// Gaussian elimination over F_p: basis of the kernel of the n x n matrix given by columns.
std::vector<std::vector<u64>> kernel(std::vector<std::vector<u64>> rows, u64 p, size_t ncols)
{
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c)
    {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[r]);
        const u64 inv = invmod(rows[r][c], p);
        for (auto& x : rows[r])
            x = mulmod(x, inv, p);
        for (size_t i = 0; i < rows.size(); ++i)
        {
            if (i == r || rows[i][c] == 0)
                continue;
            const u64 f = rows[i][c];
            for (size_t j = 0; j < ncols; ++j)
                rows[i][j] = (rows[i][j] + p - mulmod(f, rows[r][j], p)) % p;
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col)
        is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<u64>> basis;
    for (size_t free = 0; free < ncols; ++free)
    {
        if (is_pivot[free])
            continue;
        std::vector<u64> v(ncols, 0);
        v[free] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[static_cast<size_t>(pivot_col[i])] = (p - rows[i][free]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

FElem any_root(const Field& src, const Field& dst)
{
    const u64 p = src->p;
    const int d = src->m;
    const int n = dst->m;
    auto eval_src_modulus = [&](const FElem& a) {
        FElem acc = FElem::zero(dst);
        for (size_t i = src->modulus.size(); i-- > 0;)
            acc = acc * a + FElem::from_int(dst, static_cast<i64>(src->modulus[i]));
        return acc;
    };
    if (dst->order() <= 200000)
    {
        for (const auto& a : all_elements(dst))
        {
            if (eval_src_modulus(a).is_zero())
                return a;
        }
        throw Error("embedding: no root found");
    }

    // The subfield of order p^d is the kernel of x -> x^{p^d} - x, an F_p-linear map.
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
    std::vector<u64> gen(static_cast<size_t>(n), 0);
    gen[1] = 1;
    const FElem X = FElem(dst, gen).pow(pd);
    std::vector<std::vector<u64>> rows(static_cast<size_t>(n), std::vector<u64>(static_cast<size_t>(n)));
    FElem xp = FElem::one(dst);
    for (int j = 0; j < n; ++j)
    {
        for (int i = 0; i < n; ++i)
        {
            u64 v = xp.coeff(i);
            if (i == j)
                v = (v + p - 1) % p;
            rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        }
        xp *= X;
    }
    const auto basis = kernel(rows, p, static_cast<size_t>(n));
    if (static_cast<int>(basis.size()) != d)
        throw Error("embedding: subfield dimension mismatch");

    auto rng = seeded_rng({p, static_cast<u64>(d), static_cast<u64>(n), 0x656d626564});
    std::uniform_int_distribution<u64> coef(0, p - 1);
    while (true)
    {
        // A random element of the subfield and its minimal polynomial.
        std::vector<u64> g(static_cast<size_t>(n), 0);
        for (const auto& b : basis)
        {
            const u64 c = coef(rng);
            for (int i = 0; i < n; ++i)
                g[static_cast<size_t>(i)] = (g[static_cast<size_t>(i)] + mulmod(c, b[static_cast<size_t>(i)], p)) % p;
        }
        const FElem gamma(dst, g);
        std::vector<FElem> powers{FElem::one(dst)};
        for (int k = 1; k <= d; ++k)
            powers.push_back(powers.back() * gamma);
        // Solve sum_{k<d} a_k gamma^k = gamma^d; columns are powers.
        std::vector<std::vector<u64>> sys(static_cast<size_t>(n), std::vector<u64>(static_cast<size_t>(d + 1)));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k <= d; ++k)
                sys[static_cast<size_t>(i)][static_cast<size_t>(k)] = powers[static_cast<size_t>(k)].coeff(i);
        const auto ker = kernel(sys, p, static_cast<size_t>(d + 1));
        if (ker.size() != 1 || ker[0][static_cast<size_t>(d)] == 0)
            continue;
        const u64 inv = invmod(ker[0][static_cast<size_t>(d)], p);
        std::vector<u64> minpoly(static_cast<size_t>(d + 1));
        for (int k = 0; k <= d; ++k)
            minpoly[static_cast<size_t>(k)] = mulmod(ker[0][static_cast<size_t>(k)], inv, p);
        if (!poly::is_irreducible(minpoly, p))
            continue;
        const Field k = context_with_modulus(p, dst->ell, minpoly);
        FPoly h;
        for (const u64 c : src->modulus)
            h.push_back(FElem::from_int(k, static_cast<i64>(c)));
        const FElem root_k = split_root(h, rng);
        FElem acc = FElem::zero(dst);
        for (int i = d; i-- > 0;)
            acc = acc * gamma + FElem::from_int(dst, static_cast<i64>(root_k.coeff(i)));
        if (!eval_src_modulus(acc).is_zero())
            throw Error("embedding: root check failed");
        return acc;
    }
}
}  // namespace

FElem embedding_root(const Field& src, const Field& dst)
{
    if (src->p != dst->p)
        throw Error("embed: characteristics differ");
    if (dst->m % src->m != 0)
        throw Error("embed: source degree does not divide target degree");
    if (src->m == 1)
        return FElem::zero(dst);
    static std::mutex mu;
    static std::map<std::tuple<u64, int, int>, std::vector<u64>> memo;
    const auto key = std::make_tuple(src->p, src->m, dst->m);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = memo.find(key); it != memo.end())
            return FElem(dst, it->second);
    }
    FElem r = any_root(src, dst);
    FElem best = r;
    for (int i = 1; i < src->m; ++i)
    {
        r = r.frobenius();
        if (r < best)
            best = r;
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, best.coeffs());
    return best;
}

FElem embed_with_root(const FElem& root, const Field& dst, const FElem& x)
{
    const Field& src = x.field();
    if (src->m == 1)
        return FElem::from_int(dst, static_cast<i64>(x.coeff(0)));
    FElem acc = FElem::zero(dst);
    for (int i = src->m; i-- > 0;)
        acc = acc * root + FElem::from_int(dst, static_cast<i64>(x.coeff(i)));
    return acc;
}

FElem embed(const Field& src, const Field& dst, const FElem& x)
{
    return embed_with_root(embedding_root(src, dst), dst, x);
}

}  // namespace ellcup
