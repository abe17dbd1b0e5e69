#include "exsq/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "exsq/derive.hpp"
#include "exsq/evolve.hpp"
#include "exsq/verify.hpp"

namespace exsq {

namespace {

std::string trim(std::string_view s) {
    std::size_t i = 0, j = s.size();
    while (i < j && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    while (j > i && std::isspace(static_cast<unsigned char>(s[j - 1]))) --j;
    return std::string(s.substr(i, j - i));
}

FamilyKind parse_kind(const std::string& token, const std::string& where) {
    if (token == "univariate") return FamilyKind::Univariate;
    if (token == "homogeneous") return FamilyKind::Homogeneous;
    if (token == "homogeneous-repeated") return FamilyKind::HomogeneousRepeated;
    throw ParseError(where + ": unknown family kind '" + token + "'");
}

IntPoly as_poly(const HomogPoly& f) { return dehomogenize(f); }

/// Checks the chain identities and fills in missing certificates.
void complete_record(FamilyRecord& rec, const std::string& where) {
    const bool homogeneous = rec.kind != FamilyKind::Univariate;
    for (const auto& f : rec.roots) {
        if (homogeneous ? f.degree() != rec.degree : f.degree() > rec.degree) {
            throw ParseError(where + ": tuple of degree " + std::to_string(f.degree()) + " in a degree " +
                             std::to_string(rec.degree) + " family");
        }
    }
    IntPoly total;
    std::vector<IntPoly> squares;
    for (const auto& f : rec.roots) {
        squares.push_back(pow(as_poly(f), 2));
        total += squares.back();
    }
    if (rec.certificates.empty()) {
        rec.certificates_derived = true;
        for (std::size_t i = 0; i < rec.roots.size(); ++i) {
            auto y = poly_sqrt(total - squares[i]);
            if (!y) {
                throw ParseError(where + ": sum without x_" + std::to_string(i + 1) + " is not a square");
            }
            rec.certificates.push_back(homogenize(*y, homogeneous ? rec.degree : std::max(y->degree(), 0)));
        }
    }
    for (std::size_t i = 0; i < rec.roots.size(); ++i) {
        if (squares[i] + pow(as_poly(rec.certificates[i]), 2) != total) {
            throw ParseError(where + ": x_" + std::to_string(i + 1) + "^2 + y_" + std::to_string(i + 1) +
                             "^2 differs from the sum of all x_j^2");
        }
    }
}

/// Coprime (a, b), a, b >= 1, ordered by a + b then a.
std::vector<std::pair<BigInt, BigInt>> coprime_points(std::size_t count) {
    std::vector<std::pair<BigInt, BigInt>> out;
    for (long sum = 2; out.size() < count; ++sum) {
        for (long a = 1; a < sum && out.size() < count; ++a) {
            if (gcd(BigInt(a), BigInt(sum - a)) == BigInt(1)) out.emplace_back(BigInt(a), BigInt(sum - a));
        }
    }
    return out;
}

std::vector<BigInt> sorted_abs(std::vector<BigInt> v) {
    for (auto& x : v) x = abs(x);
    std::sort(v.begin(), v.end());
    return v;
}

std::string join(const std::vector<BigInt>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x.to_string();
    return s;
}

}  // namespace

std::string CrossCheckReport::summary() const {
    std::ostringstream os;
    if (ok) {
        os << "OK (" << points << " points)";
        return os.str();
    }
    os << "MISMATCH (" << points << " points compared, " << mismatches.size() << " differ)";
    for (const auto& m : mismatches) os << "\n  " << m;
    return os.str();
}

const Catalog& Catalog::builtin() {
    static const Catalog cat = parse(builtin_catalog_text(), "builtin catalog");
    return cat;
}

Catalog Catalog::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open catalog file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

Catalog Catalog::parse(std::string_view text, const std::string& source) {
    Catalog cat;
    std::vector<std::pair<int, std::string>> lines;
    {
        std::size_t start = 0;
        int number = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            ++number;
            std::string_view line = text.substr(start, end - start);
            auto hash = line.find('#');
            if (hash != std::string_view::npos) line = line.substr(0, hash);
            lines.emplace_back(number, trim(line));
            start = end + 1;
        }
    }
    std::size_t i = 0;
    while (i < lines.size()) {
        if (lines[i].second.empty()) {
            ++i;
            continue;
        }
        const std::string where = source + ":" + std::to_string(lines[i].first);
        std::istringstream header(lines[i].second);
        FamilyRecord rec;
        std::string kind, extra;
        if (!(header >> rec.id >> rec.n >> rec.degree >> kind) || (header >> extra)) {
            throw ParseError(where + ": expected header 'id n degree kind'");
        }
        if (rec.n < 3 || rec.degree < 0) throw ParseError(where + ": bad n or degree");
        rec.kind = parse_kind(kind, where);
        std::vector<HomogPoly> tuples;
        for (++i; i < lines.size() && !lines[i].second.empty(); ++i) {
            try {
                tuples.push_back(HomogPoly::parse(lines[i].second));
            } catch (const Error& e) {
                throw ParseError(source + ":" + std::to_string(lines[i].first) + ": " + e.what());
            }
        }
        const auto n = static_cast<std::size_t>(rec.n);
        if (tuples.size() != n && tuples.size() != 2 * n) {
            throw ParseError(where + ": expected " + std::to_string(n) + " or " + std::to_string(2 * n) +
                             " tuples, found " + std::to_string(tuples.size()));
        }
        rec.roots.assign(tuples.begin(), tuples.begin() + static_cast<std::ptrdiff_t>(n));
        rec.certificates.assign(tuples.begin() + static_cast<std::ptrdiff_t>(n), tuples.end());
        complete_record(rec, where);
        for (const auto& r : cat.records_) {
            if (r.id == rec.id) throw ParseError(where + ": duplicate id " + rec.id);
        }
        cat.records_.push_back(std::move(rec));
    }
    std::sort(cat.records_.begin(), cat.records_.end(),
              [](const FamilyRecord& a, const FamilyRecord& b) { return a.id < b.id; });
    return cat;
}

std::vector<std::string> Catalog::list_families() const {
    std::vector<std::string> ids;
    for (const auto& r : records_) ids.push_back(r.id);
    return ids;
}

const FamilyRecord& Catalog::get(const std::string& id) const {
    for (const auto& r : records_) {
        if (r.id == id) return r;
    }
    throw DomainError("unknown family '" + id + "'");
}

SquareSystem Catalog::eval_family(const std::string& id, const BigInt& a, const BigInt& b) const {
    const auto& rec = get(id);
    const bool univariate = rec.kind == FamilyKind::Univariate;
    if (univariate && b != BigInt(1)) throw DomainError(id + " takes a single parameter t");
    if (a.is_zero() && b.is_zero()) throw DomainError("parameters are both zero");
    const BigInt u = a, v = univariate ? BigInt(1) : b;
    SquareSystem sys;
    for (std::size_t i = 0; i < rec.roots.size(); ++i) {
        BigInt x = rec.roots[i](u, v);
        if (x.is_zero()) throw DegenerateParameter("x_" + std::to_string(i + 1), id + ": root vanishes");
        sys.roots.push_back(abs(x));
        sys.certificates.push_back(abs(rec.certificates[i](u, v)));
        sys.s += x * x;
    }
    sys = reduce_system(std::move(sys));
    const bool distinct = rec.kind != FamilyKind::HomogeneousRepeated;
    auto report = validate_system(sys, distinct);
    if (distinct && !report.distinct) {
        const auto [i, j] = report.repeats.front();
        throw DegenerateParameter("x_" + std::to_string(i + 1) + " = x_" + std::to_string(j + 1),
                                  id + ": roots coincide");
    }
    if (!report.ok) throw ContractViolation(id + ": evaluation fails validation: " + report.summary());
    return sys;
}

CrossCheckReport Catalog::cross_check(const std::string& id, int points) const {
    const auto& rec = get(id);
    std::function<SquareSystem(const BigInt&, const BigInt&)> generate;
    if (id == "n5-method1-deg17") {
        generate = [](const BigInt& t, const BigInt&) { return method1(5, t); };
    } else if (id == "n5-method2-deg10") {
        generate = [](const BigInt& a, const BigInt& b) {
            return reduce_system(system_from_chain(method2_chain(5, a, b)));
        };
    } else if (id == "n5-method2-deg30") {
        generate = [](const BigInt& a, const BigInt& b) { return pipeline_n5(a, b); };
    } else if (id == "n6-method2-deg38") {
        generate = [](const BigInt& a, const BigInt& b) { return pipeline_n6(a, b); };
    } else {
        throw DomainError("no generating pipeline for family '" + id + "'");
    }

    CrossCheckReport report;
    report.id = id;
    const std::size_t attempts = static_cast<std::size_t>(std::max(points, 1)) * 10;
    std::vector<std::pair<BigInt, BigInt>> params;
    if (rec.kind == FamilyKind::Univariate) {
        for (std::size_t k = 0; k < attempts; ++k) params.emplace_back(BigInt(static_cast<long>(k) + 2), BigInt(1));
    } else {
        params = coprime_points(attempts);
    }
    for (const auto& [a, b] : params) {
        if (report.points >= points) break;
        const std::string at = rec.kind == FamilyKind::Univariate ? "t=" + a.to_string()
                                                                  : "(" + a.to_string() + "," + b.to_string() + ")";
        SquareSystem from_catalog, from_pipeline;
        try {
            from_catalog = eval_family(id, a, b);
            from_pipeline = generate(a, b);
        } catch (const DegenerateParameter& e) {
            report.skipped.push_back(at + ": " + e.what());
            continue;
        }
        ++report.points;
        const auto cr = sorted_abs(from_catalog.roots), pr = sorted_abs(from_pipeline.roots);
        const auto cc = sorted_abs(from_catalog.certificates), pc = sorted_abs(from_pipeline.certificates);
        if (cr != pr) report.mismatches.push_back(at + ": catalog roots " + join(cr) + " vs pipeline " + join(pr));
        if (cc != pc) {
            report.mismatches.push_back(at + ": catalog certificates " + join(cc) + " vs pipeline " + join(pc));
        }
    }
    report.ok = report.mismatches.empty() && report.points >= points;
    if (report.points < points) {
        report.mismatches.push_back("only " + std::to_string(report.points) + " nondegenerate points found");
    }
    return report;
}

}  // namespace exsq
