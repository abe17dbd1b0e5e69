#include "exsq/homog.hpp"

#include <cctype>
#include <sstream>

namespace exsq {

HomogPoly::HomogPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw DomainError("a form needs at least one coefficient");
}

HomogPoly HomogPoly::parse(std::string_view text) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
        throw ParseError("expected a parenthesized tuple: '" + std::string(text) + "'");
    }
    for (std::size_t i = 0; i < open; ++i) {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            throw ParseError("text before tuple: '" + std::string(text) + "'");
        }
    }
    for (std::size_t i = close + 1; i < text.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            throw ParseError("text after tuple: '" + std::string(text) + "'");
        }
    }
    std::string_view body = text.substr(open + 1, close - open - 1);
    std::vector<BigInt> out;
    std::size_t start = 0;
    for (;;) {
        auto comma = body.find(',', start);
        out.push_back(BigInt::from_string(body.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return HomogPoly(std::move(out));
}

std::string HomogPoly::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (j != 0) os << ", ";
        os << c_[j];
    }
    os << ")";
    return os.str();
}

IntPoly dehomogenize(const HomogPoly& p) {
    std::vector<BigInt> low_first(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPoly(std::move(low_first));
}

HomogPoly homogenize(const IntPoly& p, int n) {
    if (n < 0 || p.degree() > n) {
        throw DomainError("cannot homogenize degree " + std::to_string(p.degree()) + " to " + std::to_string(n));
    }
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= p.degree(); ++k) {
        c[static_cast<std::size_t>(n - k)] = p.coeffs()[static_cast<std::size_t>(k)];
    }
    return HomogPoly(std::move(c));
}

HomogPoly homogenize(const Poly& p, int n) {
    auto ip = to_integer(p);
    if (!ip) throw DomainError("cannot homogenize a polynomial with fractional coefficients");
    return homogenize(*ip, n);
}

}  // namespace exsq
