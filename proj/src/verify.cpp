#include "exsq/verify.hpp"

#include <sstream>

namespace exsq {

std::string ChainReport::summary() const {
    if (ok) return "chain ok";
    std::ostringstream os;
    os << "chain invalid:";
    for (auto i : bad_pairs) os << " x_" << (i + 1) << "^2+y_" << (i + 1) << "^2=" << pair_norms[i] << " != s";
    if (!sum_ok) os << " sum of x_i^2=" << sum_of_squares << " != s=" << s;
    return os.str();
}

ChainReport validate_chain(const ChainSolution<BigInt>& sol) {
    ChainReport r;
    r.s = sol.s;
    BigInt sum(0);
    for (std::size_t i = 0; i < sol.pairs.size(); ++i) {
        const auto& p = sol.pairs[i];
        const BigInt x2 = p.x * p.x;
        r.pair_norms.push_back(x2 + p.y * p.y);
        if (r.pair_norms.back() != sol.s) r.bad_pairs.push_back(i);
        sum += x2;
    }
    r.sum_of_squares = sum;
    r.sum_ok = sum == sol.s;
    r.ok = !sol.pairs.empty() && r.sum_ok && r.bad_pairs.empty();
    return r;
}

std::vector<std::string> SystemReport::problems() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        const std::string idx = std::to_string(i + 1);
        if (e.root.is_zero()) out.push_back("root " + idx + " is zero");
        if (!e.is_square) {
            out.push_back("root " + idx + ": sum of the others " + e.exclusion_sum.to_string() +
                          " is not a square (isqrt " + e.isqrt_value.to_string() + ")");
        }
        if (!e.certificate_ok) out.push_back("root " + idx + ": certificate does not square to the sum of the others");
    }
    if (!s_ok) out.push_back("s does not equal the sum of all squares " + total.to_string());
    if (!distinct) {
        // One line per repeated value: the first index of a group plus every later match.
        std::vector<bool> reported(entries.size(), false);
        for (std::size_t k = 0; k < repeats.size(); ++k) {
            const std::size_t i = repeats[k].first;
            if (reported[i]) continue;
            std::string line = "roots " + std::to_string(i + 1);
            for (const auto& [a, b] : repeats) {
                if (a == i && !reported[b]) {
                    reported[b] = true;
                    line += ", " + std::to_string(b + 1);
                }
            }
            reported[i] = true;
            out.push_back(line + " repeat the value " + abs(entries[i].root).to_string());
        }
    }
    if (entries.empty()) out.push_back("empty system");
    return out;
}

std::string SystemReport::summary() const {
    if (ok) return "OK";
    std::ostringstream os;
    os << "FAIL";
    for (const auto& p : problems()) os << "\n  " << p;
    return os.str();
}

SystemReport validate_system(const SquareSystem& sys, bool require_distinct) {
    SystemReport r;
    const std::size_t n = sys.roots.size();
    BigInt total(0);
    for (const auto& x : sys.roots) total += x * x;
    r.total = total;
    r.all_squares = n > 0;
    r.nonzero = n > 0;
    r.certificates_ok = sys.certificates.empty() || sys.certificates.size() == n;
    for (std::size_t i = 0; i < n; ++i) {
        SystemEntry e;
        e.root = sys.roots[i];
        e.exclusion_sum = total - e.root * e.root;
        e.isqrt_value = isqrt(e.exclusion_sum);
        e.is_square = e.isqrt_value * e.isqrt_value == e.exclusion_sum;
        if (sys.certificates.size() == n) {
            e.certificate_ok = sys.certificates[i] * sys.certificates[i] == e.exclusion_sum;
        }
        r.all_squares = r.all_squares && e.is_square;
        r.nonzero = r.nonzero && !e.root.is_zero();
        r.certificates_ok = r.certificates_ok && e.certificate_ok;
        r.entries.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (abs(sys.roots[i]) == abs(sys.roots[j])) r.repeats.emplace_back(i, j);
        }
    }
    r.distinct = r.repeats.empty();
    r.s_ok = sys.s.is_zero() || sys.s == total;
    r.ok = r.all_squares && r.nonzero && r.certificates_ok && r.s_ok && (r.distinct || !require_distinct);
    return r;
}

SquareSystem system_from_chain(const ChainSolution<BigInt>& sol) {
    auto rep = validate_chain(sol);
    if (!rep.ok) throw ContractViolation(rep.summary());
    SquareSystem sys;
    for (const auto& p : sol.pairs) {
        sys.roots.push_back(abs(p.x));
        sys.certificates.push_back(abs(p.y));
    }
    sys.s = sol.s;
    std::vector<BigInt> all = sys.roots;
    all.insert(all.end(), sys.certificates.begin(), sys.certificates.end());
    sys.reduced = vec_gcd(all) == BigInt(1);
    return sys;
}

ChainSolution<BigInt> chain_from_system(const SquareSystem& sys) {
    if (sys.roots.empty()) throw DomainError("empty system");
    BigInt total(0);
    for (const auto& x : sys.roots) total += x * x;
    ChainSolution<BigInt> sol;
    sol.s = total;
    std::string bad;
    for (std::size_t i = 0; i < sys.roots.size(); ++i) {
        const BigInt rest = total - sys.roots[i] * sys.roots[i];
        auto y = exact_sqrt(rest);
        if (!y) {
            bad += (bad.empty() ? "" : ", ") + rest.to_string();
            continue;
        }
        sol.pairs.push_back({sys.roots[i], *y});
    }
    if (!bad.empty()) throw DomainError("exclusion sums are not squares: " + bad);
    return sol;
}

SquareSystem reduce_system(SquareSystem sys) {
    std::vector<BigInt> all = sys.roots;
    all.insert(all.end(), sys.certificates.begin(), sys.certificates.end());
    const BigInt g = vec_gcd(all);
    for (auto& v : sys.roots) v = divexact(abs(v), g);
    for (auto& v : sys.certificates) v = divexact(abs(v), g);
    if (!sys.s.is_zero()) sys.s = divexact(sys.s, g * g);
    sys.reduced = true;
    return sys;
}

}  // namespace exsq
