#include "exsq/io.hpp"

#include <json.hpp>

namespace exsq {

namespace {

using nlohmann::ordered_json;

ordered_json strings(const std::vector<BigInt>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

BigInt integer(const ordered_json& j, const std::string& what) {
    if (j.is_string()) return BigInt::from_string(j.get<std::string>());
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? BigInt(j.get<unsigned long>()) : BigInt(j.get<long long>());
    }
    throw ParseError(what + " must be an integer or a decimal string");
}

std::vector<BigInt> integers(const ordered_json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array");
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer(j[i], what + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

std::string to_json(const SquareSystem& sys) {
    ordered_json j;
    j["n"] = sys.n();
    j["roots"] = strings(sys.roots);
    j["certificates"] = strings(sys.certificates);
    j["s"] = sys.s.to_string();
    j["reduced"] = sys.reduced;
    return j.dump();
}

SquareSystem system_from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("expected a JSON object");
    if (!j.contains("roots")) throw ParseError("missing \"roots\"");
    SquareSystem sys;
    sys.roots = integers(j["roots"], "roots");
    if (j.contains("certificates")) sys.certificates = integers(j["certificates"], "certificates");
    if (j.contains("s")) sys.s = integer(j["s"], "s");
    if (j.contains("reduced")) {
        if (!j["reduced"].is_boolean()) throw ParseError("\"reduced\" must be a boolean");
        sys.reduced = j["reduced"].get<bool>();
    }
    if (j.contains("n")) {
        if (!j["n"].is_number_integer() || j["n"].get<long long>() != static_cast<long long>(sys.roots.size())) {
            throw ParseError("\"n\" does not match the number of roots");
        }
    }
    if (!sys.certificates.empty() && sys.certificates.size() != sys.roots.size()) {
        throw ParseError("certificates and roots differ in length");
    }
    return sys;
}

}  // namespace exsq
