#include "exsq/derive.hpp"

#include <algorithm>

#include "exsq/evolve.hpp"
#include "exsq/verify.hpp"

namespace exsq {

namespace {

using O = Orientation;

HomogPoly form(std::initializer_list<long> c) {
    std::vector<BigInt> v;
    for (long x : c) v.emplace_back(x);
    return HomogPoly(std::move(v));
}

/// p1 * f(p1, p2) for an even-degree tuple f.
HomogPoly times_first(const HomogPoly& f) {
    auto c = f.coeffs();
    c.emplace_back(0);
    return HomogPoly(std::move(c));
}

/// p2 * f(p1, p2).
HomogPoly times_second(const HomogPoly& f) {
    auto c = f.coeffs();
    c.insert(c.begin(), BigInt(0));
    return HomogPoly(std::move(c));
}

HomogPoly reversed(const HomogPoly& f) {
    return HomogPoly(std::vector<BigInt>(f.coeffs().rbegin(), f.coeffs().rend()));
}

FormPair q_form(std::initializer_list<long> c) {
    const HomogPoly f = form(c);
    return {times_first(f), times_second(reversed(f))};
}

std::map<std::string, FormPair> build_published() {
    std::map<std::string, FormPair> m;
    m["n5.p"] = {form({0, 4, 0, -4, 0}), form({3, 0, 0, 0, 3})};
    m["n5.r"] = {form({6, -17, 24, -12, -2, 3}), form({3, -2, -12, 24, -17, 6})};
    m["n6.r"] = {form({0, -2, 0, 14, 0, -14, 0, 2, 0}), form({1, 0, 8, 0, -2, 0, 8, 0, 1})};
    m["n6.s"] = {form({0, 2, 0, -2, 0}), form({1, 0, 2, 0, 1})};
    m["n6.q"] = q_form({1, 0, 26, 0, 184, 0, 126, 0, 2105, 0, -2972, 0, 7288, 0, -5284, 0, 2435, 0, -94, 0, 272,
                        0, 6, 0, 3});
    m["n7.r"] = {form({5, 0, 10, 0, 5}), form({0, 8, 0, -8, 0})};
    m["n7.s"] = {form({25, 0, 164, 0, 22, 0, 164, 0, 25}), form({0, 16, 0, -240, 0, 240, 0, -16, 0})};
    m["n7.q"] = q_form({78125, 0, 1399500, 0, 8937610, 0, 23564092, 0, 78166867, 0, 3600152, 0, 182941900, 0,
                        -64814760, 0, 51621283, 0, 17916188, 0, 14166858, 0, 2174060, 0, 248125});
    m["n8.r"] = {form({6, 0, 12, 0, 6}), form({0, 8, 0, -8, 0})};
    m["n8.s"] = {form({9, 0, 52, 0, 22, 0, 52, 0, 9}), form({0, 8, 0, -56, 0, 56, 0, -8, 0})};
    m["n8.q"] = q_form({729, 0, 11916, 0, 68162, 0, 165308, 0, 512615, 0, 324248, 0, 968668, 0, 148568, 0,
                        481719, 0, 168924, 0, 114434, 0, 18668, 0, 2025});
    return m;
}

ProjPoint<RatFunc> as_params(const FormPair& f) {
    return {RatFunc(to_rational(dehomogenize(f.first))), RatFunc(to_rational(dehomogenize(f.second)))};
}

ProjPoint<BigInt> eval_form(const FormPair& f, const BigInt& a, const BigInt& b) {
    return normalize_projective(ProjPoint<BigInt>{f.first(a, b), f.second(a, b)});
}

const FormPair& published(const std::string& key) { return published_forms().at(key); }

void require_coprime(const BigInt& a, const BigInt& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("parameters are both zero");
    if (gcd(a, b) != BigInt(1)) {
        throw DomainError("parameters " + a.to_string() + "," + b.to_string() + " are not coprime");
    }
}

ChainSolution<BigInt> chain_of(const ChainAssignment& a, const ParameterVector<BigInt>& params) {
    ChainSolution<BigInt> sol;
    sol.pairs = assign(a, params);
    sol.s = sol.pairs[0].x * sol.pairs[0].x + sol.pairs[0].y * sol.pairs[0].y;
    return sol;
}

SquareSystem finish(ChainSolution<BigInt> chain, bool apply_transform, const std::string& where) {
    auto rep = validate_chain(chain);
    if (!rep.ok) throw ContractViolation(where + ": assignment does not satisfy the sum condition: " + rep.summary());
    if (apply_transform) chain = reduce(transform(chain));
    for (std::size_t i = 0; i < chain.n(); ++i) {
        if (chain.pairs[i].x.is_zero()) {
            throw DegenerateParameter("x_" + std::to_string(i + 1), where + ": root vanishes");
        }
    }
    auto sys = reduce_system(system_from_chain(chain));
    auto report = validate_system(sys, true);
    if (!report.distinct) {
        const auto [i, j] = report.repeats.front();
        throw DegenerateParameter("x_" + std::to_string(i + 1) + " = x_" + std::to_string(j + 1),
                                  where + ": roots coincide");
    }
    if (!report.ok) throw ContractViolation(where + ": invalid system: " + report.summary());
    return sys;
}

/// Free pair (x : 1) for derivations over Q(x).
ProjPoint<RatFunc> free_point() { return {RatFunc::x(), RatFunc(1)}; }

bool is_free_point(const FormPair& f) { return f == FormPair{form({1, 0}), form({0, 1})}; }

/// Continues a branch from r: s from the residual in s, then q by Vieta from the
/// known root q = p. Appends one branch per usable root in s.
void derive_s_and_q(const ChainAssignment& a, Derivation& d, ParameterVector<RatFunc> params, const Branch& base,
                    bool s_linear) {
    const auto s_form = residual(a, 3, params);
    if (s_linear && !s_form.A.is_zero()) throw ContractViolation("expected the s_1^2 coefficient to vanish");
    const auto s_roots = solve_quadratic(s_form);
    // In the linear case (1 : 0) is the root at infinity.
    for (std::size_t k = s_linear ? 1 : 0; k < 2; ++k) {
        Branch b = base;
        b["s"] = normalize_projective(s_roots[k]);
        auto with_s = params;
        with_s.pairs[3] = as_params(b["s"]);
        const auto q_form = residual(a, 1, with_s);
        FormPair q;
        try {
            q = normalize_projective(vieta_second_root(q_form, free_point()));
        } catch (const DomainError&) {
            continue;
        }
        if (is_free_point(q)) continue;
        b["q"] = q;
        d.branches.push_back(std::move(b));
    }
}

Derivation derive_vanishing(int n, const ChainAssignment& a) {
    Derivation d;
    d.n = n;
    d.free_pair = "p";
    const auto p = free_point();
    ParameterVector<RatFunc> params{{p, p, {RatFunc(1), RatFunc(0)}, {RatFunc(1), RatFunc(0)}}};
    const auto forms = nested_forms(a, 2, 3, params);
    const QuadraticForm<RatFunc> lead_in_r{forms[0][0], forms[0][1], forms[0][2]};
    for (const auto& root : solve_quadratic(lead_in_r)) {
        Branch b{{"r", normalize_projective(root)}};
        auto with_r = params;
        with_r.pairs[2] = as_params(b["r"]);
        derive_s_and_q(a, d, with_r, b, true);
    }
    return d;
}

}  // namespace

ChainAssignment assignment_n5() {
    return {4, {{1, O::PlusAB}, {2, O::PlusAB}, {3, O::PlusAB}, {1, O::MinusAB}, {2, O::MinusAB}}};
}

ChainAssignment assignment_n6() {
    return {8, {{1, O::PlusAB}, {3, O::PlusBA}, {4, O::PlusAB}, {5, O::PlusAB}, {6, O::PlusAB}, {7, O::PlusAB}}};
}

ChainAssignment assignment_n7() {
    return {8,
            {{5, O::PlusAB}, {5, O::MinusAB}, {1, O::PlusAB}, {2, O::PlusAB}, {4, O::PlusAB}, {6, O::PlusAB},
             {7, O::PlusBA}}};
}

ChainAssignment assignment_n8() {
    return {8,
            {{1, O::PlusAB}, {1, O::MinusAB}, {5, O::PlusAB}, {5, O::MinusAB}, {2, O::PlusAB}, {4, O::PlusAB},
             {6, O::PlusAB}, {7, O::PlusBA}}};
}

FormPair normalize_projective(const ProjPoint<RatFunc>& point) {
    Poly u = point.u1.num() * point.u2.den();
    Poly v = point.u2.num() * point.u1.den();
    if (u.is_zero() && v.is_zero()) throw DomainError("projective point (0 : 0)");
    const Poly g = poly_gcd(u, v);
    if (g.degree() > 0) {
        u = divmod(u, g).first;
        v = divmod(v, g).first;
    }
    // One common scale for both entries.
    BigInt lcm(1);
    for (const Poly* p : {&u, &v}) {
        for (const auto& c : p->coeffs()) lcm = divexact(lcm * c.den(), gcd(lcm, c.den()));
    }
    IntPoly iu = *to_integer(u * Rational(lcm));
    IntPoly iv = *to_integer(v * Rational(lcm));
    BigInt cont = gcd(content(iu), content(iv));
    const IntPoly& lead_entry = iu.is_zero() ? iv : iu;
    if (lead_entry.lead().sign() < 0) cont = -cont;
    iu = divexact(iu, cont);
    iv = divexact(iv, cont);
    const int deg = std::max(iu.degree(), iv.degree());
    return {homogenize(iu, std::max(deg, 0)), homogenize(iv, std::max(deg, 0))};
}

ProjPoint<BigInt> normalize_projective(const ProjPoint<BigInt>& point) {
    if (point.u1.is_zero() && point.u2.is_zero()) throw DomainError("projective point (0 : 0)");
    BigInt g = gcd(point.u1, point.u2);
    const BigInt& lead_entry = point.u1.is_zero() ? point.u2 : point.u1;
    if (lead_entry.sign() < 0) g = -g;
    return {divexact(point.u1, g), divexact(point.u2, g)};
}

bool projectively_equal(const FormPair& a, const FormPair& b, int points) {
    const int needed = std::max(points, a.first.degree() + b.first.degree() + 1);
    int checked = 0;
    // Walk coprime (u, v) with u, v >= 1, plus both signs of u.
    for (long sum = 2; checked < needed; ++sum) {
        for (long u = 1; u < sum && checked < needed; ++u) {
            const long v = sum - u;
            if (gcd(BigInt(u), BigInt(v)) != BigInt(1)) continue;
            for (long sign : {1L, -1L}) {
                const BigInt bu(sign * u), bv(v);
                const BigInt a1 = a.first(bu, bv), a2 = a.second(bu, bv);
                const BigInt b1 = b.first(bu, bv), b2 = b.second(bu, bv);
                if (a1 * b2 != a2 * b1) return false;
                ++checked;
            }
        }
    }
    return true;
}

Derivation derive_n5() {
    const auto a = assignment_n5();
    Derivation d;
    d.n = 5;
    d.free_pair = "q";
    const auto q = free_point();
    ParameterVector<RatFunc> params{{{RatFunc(1), RatFunc(0)}, q, {RatFunc(1), RatFunc(0)}}};
    const auto forms = nested_forms(a, 0, 2, params);
    const auto quartic = forms[1] * forms[1] - Polynomial<RatFunc>(RatFunc(4)) * forms[0] * forms[2];
    const auto f = fermat_square(quartic);
    if (f.kind != FermatOutcome<RatFunc>::Kind::Point) throw DomainError("Fermat step failed: " + f.detail);
    const FormPair p = normalize_projective(ProjPoint<RatFunc>{RatFunc(1), f.w});
    params.pairs[0] = as_params(p);
    for (const auto& root : solve_quadratic(residual(a, 2, params))) {
        d.branches.push_back({{"p", p}, {"r", normalize_projective(root)}});
    }
    return d;
}

Derivation derive_n6() {
    const auto a = assignment_n6();
    Derivation d;
    d.n = 6;
    d.free_pair = "p";
    const auto p = free_point();
    ParameterVector<RatFunc> params{{p, p, {RatFunc(1), RatFunc(0)}, {RatFunc(1), RatFunc(0)}}};
    const auto forms = nested_forms(a, 2, 3, params);
    const auto quartic = forms[1] * forms[1] - Polynomial<RatFunc>(RatFunc(4)) * forms[0] * forms[2];
    const auto f = fermat_square(quartic);
    if (f.kind != FermatOutcome<RatFunc>::Kind::Point) throw DomainError("Fermat step failed: " + f.detail);
    const FormPair r = normalize_projective(ProjPoint<RatFunc>{RatFunc(1), f.w});
    params.pairs[2] = as_params(r);
    derive_s_and_q(a, d, params, {{"r", r}}, false);
    return d;
}

std::vector<FormPair> Derivation::candidates(const std::string& pair) const {
    std::vector<FormPair> out;
    for (const auto& b : branches) {
        auto it = b.find(pair);
        if (it == b.end()) continue;
        if (std::find(out.begin(), out.end(), it->second) == out.end()) out.push_back(it->second);
    }
    return out;
}

Derivation derive_n7() { return derive_vanishing(7, assignment_n7()); }
Derivation derive_n8() { return derive_vanishing(8, assignment_n8()); }

Derivation derive(int n) {
    switch (n) {
        case 5: return derive_n5();
        case 6: return derive_n6();
        case 7: return derive_n7();
        case 8: return derive_n8();
        default: throw DomainError("no built-in derivation for n = " + std::to_string(n));
    }
}

const std::map<std::string, FormPair>& published_forms() {
    static const std::map<std::string, FormPair> forms = build_published();
    return forms;
}

ChainSolution<BigInt> method2_chain(int n, const BigInt& a, const BigInt& b) {
    require_coprime(a, b);
    const std::string tag = "n" + std::to_string(n);
    switch (n) {
        case 5: {
            const ProjPoint<BigInt> q{a, b};
            return chain_of(assignment_n5(), {{eval_form(published("n5.p"), a, b), q,
                                                eval_form(published("n5.r"), a, b)}});
        }
        case 6:
        case 7:
        case 8: {
            const ProjPoint<BigInt> p{a, b};
            const ChainAssignment asg = n == 6 ? assignment_n6() : n == 7 ? assignment_n7() : assignment_n8();
            const auto q = eval_form(published(tag + ".q"), a, b);
            if (q == p) throw DegenerateParameter("q = p", "second root coincides with the known one");
            return chain_of(asg, {{p, q, eval_form(published(tag + ".r"), a, b),
                                   eval_form(published(tag + ".s"), a, b)}});
        }
        default: throw DomainError("method 2 is built in for n = 5..8, got " + std::to_string(n));
    }
}

SquareSystem pipeline_n5(const BigInt& a, const BigInt& b) { return finish(method2_chain(5, a, b), true, "n=5"); }
SquareSystem pipeline_n6(const BigInt& a, const BigInt& b) { return finish(method2_chain(6, a, b), false, "n=6"); }
SquareSystem pipeline_n7(const BigInt& a, const BigInt& b) { return finish(method2_chain(7, a, b), true, "n=7"); }
SquareSystem pipeline_n8(const BigInt& a, const BigInt& b) { return finish(method2_chain(8, a, b), true, "n=8"); }

SquareSystem method2(int n, const BigInt& a, const BigInt& b) {
    switch (n) {
        case 5: return pipeline_n5(a, b);
        case 6: return pipeline_n6(a, b);
        case 7: return pipeline_n7(a, b);
        case 8: return pipeline_n8(a, b);
        default: throw DomainError("method 2 is built in for n = 5..8, got " + std::to_string(n));
    }
}

}  // namespace exsq
