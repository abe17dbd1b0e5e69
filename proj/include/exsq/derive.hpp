#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exsq/chain.hpp"
#include "exsq/homog.hpp"
#include "exsq/identities.hpp"
#include "exsq/ratfunc.hpp"

namespace exsq {

/// How a chain pair (a_i, b_i) fills a slot (x_j, y_j).
enum class Orientation { PlusAB, MinusAB, PlusBA, MinusBA };

struct Slot {
    int source;  ///< 1-based index into the chain4 or chain8 output
    Orientation orientation;
};

/// Per-slot choice of representation for building a chain solution from chain4/chain8.
struct ChainAssignment {
    int chain_size;  ///< 4 or 8
    std::vector<Slot> slots;

    std::size_t n() const { return slots.size(); }
};

/// The assignments used by the built-in five- to eight-term pipelines.
ChainAssignment assignment_n5();
ChainAssignment assignment_n6();
ChainAssignment assignment_n7();
ChainAssignment assignment_n8();

/// Builds (x_j, y_j) from the chain evaluated at params (3 pairs for chain4, 4 for chain8).
template <class K>
std::vector<ChainPair<K>> assign(const ChainAssignment& a, const ParameterVector<K>& params) {
    if (a.chain_size != 4 && a.chain_size != 8) throw ContractViolation("chain size must be 4 or 8");
    if (params.pairs.size() != static_cast<std::size_t>(a.chain_size == 4 ? 3 : 4)) {
        throw ContractViolation("parameter count does not match the chain size");
    }
    std::vector<RepresentationPair<K>> reps;
    if (a.chain_size == 4) {
        auto c = chain4(params);
        reps.assign(c.begin(), c.end());
    } else {
        auto c = chain8(params);
        reps.assign(c.begin(), c.end());
    }
    std::vector<ChainPair<K>> out;
    out.reserve(a.slots.size());
    for (const auto& slot : a.slots) {
        if (slot.source < 1 || slot.source > a.chain_size) throw ContractViolation("slot source out of range");
        const auto& r = reps[static_cast<std::size_t>(slot.source - 1)];
        switch (slot.orientation) {
            case Orientation::PlusAB: out.push_back({r.a, r.b}); break;
            case Orientation::MinusAB: out.push_back({-r.a, r.b}); break;
            case Orientation::PlusBA: out.push_back({r.b, r.a}); break;
            case Orientation::MinusBA: out.push_back({-r.b, r.a}); break;
        }
    }
    return out;
}

/// x_1^2 + y_1^2 - sum of x_j^2; zero exactly when the sum condition holds.
template <class K>
K residual_value(const ChainAssignment& a, const ParameterVector<K>& params) {
    const auto pairs = assign(a, params);
    K r = pairs.front().x * pairs.front().x + pairs.front().y * pairs.front().y;
    for (const auto& p : pairs) r -= p.x * p.x;
    return r;
}

/// A u^2 + B u v + C v^2.
template <class K>
struct QuadraticForm {
    K A, B, C;

    K operator()(const K& u, const K& v) const { return A * u * u + B * u * v + C * v * v; }
    bool is_zero() const { return A.is_zero() && B.is_zero() && C.is_zero(); }
};

/// Projective point (u1 : u2).
template <class K>
using ProjPoint = ParamPair<K>;

/// The residual as a quadratic form in parameter pair `unknown` (0-based: p, q, r, s),
/// the other pairs held at params. Throws DomainError when it vanishes identically.
template <class K>
QuadraticForm<K> residual(const ChainAssignment& a, std::size_t unknown, ParameterVector<K> params) {
    if (unknown >= params.pairs.size()) throw ContractViolation("unknown pair index out of range");
    // The residual is a quadratic form in each pair, so three evaluations fix it.
    params.pairs[unknown] = {K(1), K(0)};
    K A = residual_value(a, params);
    params.pairs[unknown] = {K(0), K(1)};
    K C = residual_value(a, params);
    params.pairs[unknown] = {K(1), K(1)};
    K B = residual_value(a, params) - A - C;
    QuadraticForm<K> q{std::move(A), std::move(B), std::move(C)};
    if (q.is_zero()) throw DomainError("residual vanishes identically in the chosen pair");
    return q;
}

/// B^2 - 4AC. Throws DomainError when A = 0 (the linear case has no discriminant).
template <class K>
K discriminant(const QuadraticForm<K>& q) {
    if (q.A.is_zero()) throw DomainError("leading coefficient vanishes; the form is linear");
    return q.B * q.B - K(4) * q.A * q.C;
}

/// Coefficients A, B, C of the residual in pair `inner`, as polynomials in w where
/// pair `outer` is set to (1, w).
template <class K>
std::array<Polynomial<K>, 3> nested_forms(const ChainAssignment& a, std::size_t outer, std::size_t inner,
                                          ParameterVector<K> params) {
    params.pairs[outer] = {K(1), K(0)};
    const auto f10 = residual(a, inner, params);
    params.pairs[outer] = {K(0), K(1)};
    const auto f01 = residual(a, inner, params);
    params.pairs[outer] = {K(1), K(1)};
    const auto f11 = residual(a, inner, params);
    auto as_poly = [](const K& c0, const K& c2, const K& all) {
        return Polynomial<K>(std::vector<K>{c0, all - c0 - c2, c2});
    };
    return {as_poly(f10.A, f01.A, f11.A), as_poly(f10.B, f01.B, f11.B), as_poly(f10.C, f01.C, f11.C)};
}

/// Result of making a quartic in w a square by matching it against a squared quadratic.
template <class K>
struct FermatOutcome {
    enum class Kind { Point, IdenticallySquare, NoSolution, Unsupported };
    Kind kind = Kind::Unsupported;
    /// w with quartic(w) = root^2 (set when kind == Point).
    K w{};
    K root{};
    std::string detail;
};

inline std::optional<Rational> field_sqrt(const Rational& v) { return exact_sqrt(v); }
inline std::optional<RatFunc> field_sqrt(const RatFunc& v) { return exact_sqrt(v); }

/// Writes quartic = (alpha w^2 + beta w + gamma)^2 + (linear remainder) with
/// alpha^2 the leading coefficient, then solves the remainder for w.
template <class K>
FermatOutcome<K> fermat_square(const Polynomial<K>& quartic) {
    using Kind = typename FermatOutcome<K>::Kind;
    FermatOutcome<K> out;
    if (quartic.degree() != 4) {
        out.detail = "not a quartic";
        return out;
    }
    auto alpha = field_sqrt(quartic.lead());
    if (!alpha) {
        out.detail = "leading coefficient is not a square";
        return out;
    }
    const K two(2);
    const K beta = quartic[3] / (two * *alpha);
    const K gamma = (quartic[2] - beta * beta) / (two * *alpha);
    const K lin = quartic[1] - two * beta * gamma;
    const K cst = quartic[0] - gamma * gamma;
    if (lin.is_zero()) {
        out.kind = cst.is_zero() ? Kind::IdenticallySquare : Kind::NoSolution;
        out.detail = cst.is_zero() ? "quartic is a perfect square" : "linear condition is degenerate";
        return out;
    }
    out.kind = Kind::Point;
    out.w = -cst / lin;
    out.root = (*alpha * out.w + beta) * out.w + gamma;
    return out;
}

/// Both roots (u : v) of a quadratic form. A = 0 gives (1 : 0) and (-C : B).
/// Throws DomainError when the discriminant is not a square in K.
template <class K>
std::array<ProjPoint<K>, 2> solve_quadratic(const QuadraticForm<K>& q) {
    if (q.A.is_zero()) {
        if (q.B.is_zero()) return {ProjPoint<K>{K(1), K(0)}, ProjPoint<K>{K(1), K(0)}};
        return {ProjPoint<K>{K(1), K(0)}, ProjPoint<K>{-q.C, q.B}};
    }
    const K d = discriminant(q);
    auto root = field_sqrt(d);
    if (!root) throw DomainError("discriminant is not a square; no rational root");
    const K two_a = K(2) * q.A;
    return {ProjPoint<K>{-q.B + *root, two_a}, ProjPoint<K>{-q.B - *root, two_a}};
}

/// The other root from the product of roots: (C v0 : A u0).
/// Throws ContractViolation when `known` is not a root.
template <class K>
ProjPoint<K> vieta_second_root(const QuadraticForm<K>& q, const ProjPoint<K>& known) {
    if (!q(known.u1, known.u2).is_zero()) throw ContractViolation("known point is not a root of the form");
    ProjPoint<K> r{q.C * known.u2, q.A * known.u1};
    if (r.u1.is_zero() && r.u2.is_zero()) throw DomainError("second root is undetermined");
    return r;
}

/// A projective pair of binary forms in the free parameter pair.
struct FormPair {
    HomogPoly first;
    HomogPoly second;
    friend bool operator==(const FormPair&, const FormPair&) = default;
};

/// Clears denominators, removes the polynomial gcd and integer content, makes the
/// first nonzero entry's leading coefficient positive, and homogenizes both entries
/// to the larger degree.
FormPair normalize_projective(const ProjPoint<RatFunc>& point);

/// Same idea for numbers: divide by the gcd, first nonzero entry positive.
ProjPoint<BigInt> normalize_projective(const ProjPoint<BigInt>& point);

/// True when (a1 : a2) and (b1 : b2) agree at `points` sample values of the free pair.
bool projectively_equal(const FormPair& a, const FormPair& b, int points);

/// One consistent set of parameter values found by a derivation, keyed by pair
/// name ("p", "q", "r", "s"), as forms in the free pair.
using Branch = std::map<std::string, FormPair>;

/// All branches of a derivation. Branches where the Vieta step only returns the
/// known root q = p are dropped.
struct Derivation {
    int n = 0;
    std::string free_pair;
    std::vector<Branch> branches;

    /// Distinct values found for one pair across branches.
    std::vector<FormPair> candidates(const std::string& pair) const;
};

/// Solves the sum condition symbolically for the built-in assignments.
/// Five terms: free pair q; p by the Fermat step on the discriminant, r from the quadratic.
Derivation derive_n5();
/// Six terms: free pair p, q = p; r by Fermat, s from the quadratic, q by Vieta.
Derivation derive_n6();
/// Seven and eight terms: free pair p, q = p; r kills the s_1^2 coefficient, s from the
/// then-linear equation, q by Vieta.
Derivation derive_n7();
Derivation derive_n8();
Derivation derive(int n);

/// Closed forms used by the numeric pipelines, keyed "n5.p", "n5.r", "n6.r", "n6.s",
/// "n6.q", "n7.r", "n7.s", "n7.q", "n8.r", "n8.s", "n8.q".
const std::map<std::string, FormPair>& published_forms();

/// Full numeric pipelines. pipeline_n5 takes (q1, q2); the others take (p1, p2).
/// Throws DomainError for non-coprime or zero parameters and DegenerateParameter
/// when a root vanishes or two roots coincide.
SquareSystem pipeline_n5(const BigInt& a, const BigInt& b);
SquareSystem pipeline_n6(const BigInt& a, const BigInt& b);
SquareSystem pipeline_n7(const BigInt& a, const BigInt& b);
SquareSystem pipeline_n8(const BigInt& a, const BigInt& b);
SquareSystem method2(int n, const BigInt& a, const BigInt& b);

/// The chain built by a pipeline before any transform, for inspection.
ChainSolution<BigInt> method2_chain(int n, const BigInt& a, const BigInt& b);

}  // namespace exsq
