// ellcup: cup products on genus-1 curves over finite fields
// Copyright 2026 The ellcup Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ellcup/cup.hpp"
#include "ellcup/genus2.hpp"
#include "ellcup/pairing.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace ellcup;

namespace
{
struct Args
{
    std::string curve, P, Q, point, a, b, t, output;
    int precision = 0;
    int max_degree = kDefaultDegreeCap;
    bool csv = false;
    i64 q = 0;
    u64 q_max = 0;
};

std::string join(const std::vector<u64>& v)
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

const char* boolstr(bool b)
{
    return b ? "true" : "false";
}

LegendreOptions options(const Args& a)
{
    LegendreOptions o;
    o.precision = a.precision;
    o.degree_cap = a.max_degree;
    return o;
}

std::string run_weil(const Args& a)
{
    const Curve c = parse_curve_spec(a.curve);
    const CurvePoint P = parse_point(c, a.P), Q = parse_point(c, a.Q);
    const MuRoot e = weil_pairing(c, P, Q);
    return "P=" + P.str() + ";Q=" + Q.str() + ";e=" + std::to_string(e.e) + ";zeta0=" + std::to_string(c.base->zeta0);
}

std::string run_cup(const Args& a)
{
    const CupContext ctx(parse_curve_spec(a.curve), options(a));
    const H2Class h = cup_product(ctx, parse_h1(ctx, a.a), parse_h1(ctx, a.b));
    return h.str(ctx.curve().base->zeta0);
}

std::string run_triple(const Args& a)
{
    const CupContext ctx(parse_curve_spec(a.curve), options(a));
    const PicHom t = parse_pichom(a.t, ctx.dim(), ctx.ell());
    const MuRoot e = triple_product(ctx, t, parse_h1(ctx, a.a), parse_h1(ctx, a.b));
    return "e=" + std::to_string(e.e) + ";zeta0=" + std::to_string(ctx.curve().base->zeta0);
}

std::string run_dlegendre(const Args& a)
{
    const Curve c = parse_curve_spec(a.curve);
    const LegendreDerivative dl(c, options(a));
    const CurvePoint P = parse_point(c, a.point);
    return "P=" + P.str() + ";dL=" + join(dl(P)) + ";valuation=" + std::to_string(dl.valuation()) +
           ";precision=" + std::to_string(dl.precision());
}

std::string run_span(const Args& a)
{
    const CupContext ctx(parse_curve_spec(a.curve), options(a));
    const SpanReport r = normalized_cup_span(ctx);
    return "dimension=" + std::to_string(r.dimension) + ";condition_ii=" + boolstr(r.condition_ii);
}

std::string run_verify(const Args& a)
{
    const CounterexampleReport r = verify_counterexample(a.q);
    return "q=" + std::to_string(r.q) + ";torsionE=" + std::to_string(r.torsion_E) +
           ";torsionEprime=" + std::to_string(r.torsion_Eprime) + ";p1_divisible=" + boolstr(r.p1_divisible) +
           ";conclusion=" + boolstr(r.conclusion);
}

std::string run_scan(const Args& a)
{
    const ScanResult r = scan(a.q_max, true);
    std::ostringstream out;
    if (a.csv)
    {
        out << kScanHeader;
        for (const auto& row : r.rows)
            out << '\n' << csv_row(row);
        return out.str();
    }
    bool all = true;
    for (const auto& row : r.rows)
        all &= !row.cex || row.cex->conclusion;
    out << "q_max=" << a.q_max << ";primes=" << r.primes << ";admissible=" << r.admissible << ";density="
        << std::setprecision(6) << r.density() << ";ratio_to_1_27=" << r.density() * 27.0
        << ";all_conclusions=" << boolstr(all);
    return out.str();
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cup products, Weil pairings and the Legendre derivative on genus-1 curves over F_q"};
    app.require_subcommand(1);
    Args a;
    app.add_option("--output", a.output, "Write the result to this file instead of stdout");

    const auto curve_opts = [&](CLI::App* s) {
        s->add_option("--curve", a.curve, "Curve spec p:<prime>,l:<ell>,a:<int>,b:<int>")->required();
        s->add_option("--precision", a.precision, "Frobenius level exponent (0 picks v + 2)")->check(CLI::NonNegativeNumber);
        s->add_option("--max-degree", a.max_degree, "Largest extension degree to build")->check(CLI::PositiveNumber);
    };

    std::function<std::string(const Args&)> action;

    auto* weil = app.add_subcommand("weil", "Weil pairing e_ell(P, Q)");
    curve_opts(weil);
    weil->add_option("--P", a.P, "Point x,y or inf")->required();
    weil->add_option("--Q", a.Q, "Point x,y or inf")->required();
    weil->callback([&] { action = run_weil; });

    auto* cup = app.add_subcommand("cup", "Cup product of two H1 classes");
    curve_opts(cup);
    cup->add_option("--a", a.a, "Class P=<x,y|inf>;c=<int>")->required();
    cup->add_option("--b", a.b, "Class P=<x,y|inf>;c=<int>")->required();
    cup->callback([&] { action = run_cup; });

    auto* triple = app.add_subcommand("triple", "Triple product t cup a cup b");
    curve_opts(triple);
    triple->add_option("--t", a.t, "Functional t0=<int>;phi=<list>")->required();
    triple->add_option("--a", a.a, "Class P=<x,y|inf>;c=<int>")->required();
    triple->add_option("--b", a.b, "Class P=<x,y|inf>;c=<int>")->required();
    triple->callback([&] { action = run_triple; });

    auto* dleg = app.add_subcommand("dlegendre", "Legendre derivative of a rational ell-torsion point");
    curve_opts(dleg);
    dleg->add_option("--point", a.point, "Point x,y or inf")->required();
    dleg->callback([&] { action = run_dlegendre; });

    auto* span = app.add_subcommand("span", "Span of cups of normalized classes");
    curve_opts(span);
    span->callback([&] { action = run_span; });

    auto* g2 = app.add_subcommand("genus2", "Genus-2 counterexample family");
    g2->require_subcommand(1);
    auto* verify = g2->add_subcommand("verify", "Elliptic-quotient checks for one admissible prime");
    verify->add_option("q", a.q, "Prime")->required();
    verify->callback([&] { action = run_verify; });
    auto* sc = g2->add_subcommand("scan", "Admissibility and checks for all primes up to q_max");
    sc->add_option("q_max", a.q_max, "Largest q")->required()->check(CLI::Range(u64{2}, u64{10000000}));
    sc->add_flag("--csv", a.csv, "One CSV row per prime");
    sc->callback([&] { action = run_scan; });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::string result;
    try
    {
        result = action(a);
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    }
    catch (const std::out_of_range& e)
    {
        std::cerr << "usage error: number out of range: " << e.what() << '\n';
        return 1;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    if (a.output.empty())
    {
        std::cout << result << '\n';
        return 0;
    }
    std::ofstream f(a.output);
    if (!(f << result << '\n'))
    {
        std::cerr << "error: cannot write " << a.output << '\n';
        return 2;
    }
    return 0;
}
