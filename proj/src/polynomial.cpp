#include "exsq/polynomial.hpp"

#include <sstream>

namespace exsq {

BigInt content(const IntPoly& p) {
    BigInt g(0);
    for (const auto& c : p.coeffs()) {
        g = gcd(g, c);
        if (g == BigInt(1)) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    if (p.lead().sign() < 0) g = -g;
    return divexact(p, g);
}

IntPoly divexact(const IntPoly& p, const BigInt& d) {
    if (d == BigInt(1)) return p;
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(divexact(c, d));
    return IntPoly(std::move(out));
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.is_zero()) return {};
    const int db = b.degree();
    if (a.degree() < db) throw NotExact("divisor has larger degree than dividend");
    std::vector<BigInt> rem = a.coeffs();
    std::vector<BigInt> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const BigInt& lb = b.lead();
    for (int k = a.degree(); k >= db; --k) {
        const BigInt& top = rem[static_cast<std::size_t>(k)];
        if (top.is_zero()) continue;
        const BigInt factor = divexact(top, lb);
        quo[static_cast<std::size_t>(k - db)] = factor;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    for (int k = 0; k < db; ++k) {
        if (!rem[static_cast<std::size_t>(k)].is_zero()) throw NotExact("nonzero polynomial remainder");
    }
    return IntPoly(std::move(quo));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DomainError("pseudo-remainder by zero polynomial");
    const int db = b.degree();
    if (a.degree() < db) return a;
    std::vector<BigInt> rem = a.coeffs();
    const BigInt& lb = b.lead();
    // Each step scales the running remainder by lc(b) and cancels its top term.
    for (int k = a.degree(); k >= db; --k) {
        const BigInt top = rem[static_cast<std::size_t>(k)];
        for (auto& c : rem) c *= lb;
        if (top.is_zero()) continue;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k - db + j)] -= top * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return IntPoly(std::move(rem));
}

Poly to_rational(const IntPoly& p) {
    std::vector<Rational> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return Poly(std::move(out));
}

std::pair<IntPoly, Rational> clear_denominators(const Poly& p) {
    if (p.is_zero()) return {IntPoly{}, Rational(1)};
    BigInt lcm_den(1);
    for (const auto& c : p.coeffs()) {
        lcm_den = divexact(lcm_den * c.den(), gcd(lcm_den, c.den()));
    }
    std::vector<BigInt> ints;
    ints.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) ints.push_back(c.num() * divexact(lcm_den, c.den()));
    IntPoly q(std::move(ints));
    BigInt g = content(q);
    if (q.lead().sign() < 0) g = -g;
    q = divexact(q, g);
    return {std::move(q), Rational(g, lcm_den)};
}

std::optional<IntPoly> to_integer(const Poly& p) {
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (!c.is_integer()) return std::nullopt;
        out.push_back(c.num());
    }
    return IntPoly(std::move(out));
}

Poly make_monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * p.lead().inverse();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    // Primitive remainder sequence over Z keeps coefficient growth in check.
    IntPoly u = clear_denominators(a).first;
    IntPoly v = clear_denominators(b).first;
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = primitive_part(pseudo_remainder(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    return make_monic(to_rational(u));
}

std::optional<Poly> poly_sqrt(const Poly& p) {
    if (p.is_zero()) return Poly{};
    if (p.degree() % 2 != 0) return std::nullopt;
    auto lead_root = exact_sqrt(p.lead());
    if (!lead_root) return std::nullopt;
    const std::size_t half = static_cast<std::size_t>(p.degree() / 2);
    const std::size_t top = static_cast<std::size_t>(p.degree());
    std::vector<Rational> g(half + 1);
    g[half] = *lead_root;
    const Rational twice_lead = *lead_root * Rational(2);
    // Match coefficients of p from the top down; x^(top-i) fixes g[half-i].
    for (std::size_t i = 1; i <= half; ++i) {
        Rational acc = p[top - i];
        for (std::size_t a = half - i + 1; a < half; ++a) {
            const std::size_t b = top - i - a;
            if (b > half || b < half - i + 1) continue;
            acc -= g[a] * g[b];
        }
        g[half - i] = acc / twice_lead;
    }
    Poly root(std::move(g));
    if (root * root != p) return std::nullopt;
    return root;
}

std::optional<IntPoly> poly_sqrt(const IntPoly& p) {
    auto r = poly_sqrt(to_rational(p));
    if (!r) return std::nullopt;
    return to_integer(*r);
}

namespace {

template <class C>
std::string format_poly(const Polynomial<C>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const C& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == C{}) continue;
        const bool neg = c.sign() < 0;
        const C mag = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == C(1);
        if (!unit || k == 0) os << mag;
        if (k >= 1) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace

std::string to_string(const Poly& p, const std::string& var) { return format_poly(p, var); }
std::string to_string(const IntPoly& p, const std::string& var) { return format_poly(p, var); }

}  // namespace exsq
