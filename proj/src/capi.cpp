#include "exsq/exsq.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "exsq/catalog.hpp"
#include "exsq/derive.hpp"
#include "exsq/evolve.hpp"
#include "exsq/io.hpp"
#include "exsq/seeds.hpp"
#include "exsq/sweep.hpp"
#include "exsq/verify.hpp"

struct exsq_system {
    exsq::SquareSystem value;
};

struct exsq_catalog {
    exsq::Catalog value;
};

namespace {

thread_local std::string last_error;

/// Runs f, translating exceptions into status codes and the thread's last error.
/// `parse_status` is what a ParseError maps to: bad input for parameters,
/// parse error for documents.
template <class F>
exsq_status guard(F&& f, exsq_status parse_status = EXSQ_PARSE_ERROR) {
    last_error.clear();
    try {
        return f();
    } catch (const exsq::ParseError& e) {
        last_error = e.what();
        return parse_status;
    } catch (const exsq::DegenerateParameter& e) {
        last_error = e.what();
        return EXSQ_BAD_INPUT;
    } catch (const exsq::DomainError& e) {
        last_error = e.what();
        return EXSQ_BAD_INPUT;
    } catch (const exsq::DistinctifyFailure& e) {
        last_error = e.what();
        return EXSQ_BAD_INPUT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return EXSQ_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return EXSQ_INTERNAL;
    }
}

exsq_status null_argument(const char* what) {
    last_error = std::string("null argument: ") + what;
    return EXSQ_BAD_INPUT;
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

exsq::BigInt param(const char* text, const char* name) {
    if (text == nullptr) throw exsq::DomainError(std::string("missing parameter ") + name);
    try {
        return exsq::BigInt::from_string(text);
    } catch (const exsq::ParseError&) {
        throw exsq::DomainError(std::string("parameter ") + name + " is not an integer: '" + text + "'");
    }
}

exsq_status emit(exsq::SquareSystem sys, exsq_system** out) {
    *out = new exsq_system{std::move(sys)};
    return EXSQ_OK;
}

nlohmann::ordered_json form_json(const exsq::FormPair& f, const std::string& key) {
    nlohmann::ordered_json j;
    j["first"] = f.first.to_string();
    j["second"] = f.second.to_string();
    const auto& pub = exsq::published_forms();
    auto it = pub.find(key);
    if (it != pub.end()) j["matches_closed_form"] = exsq::projectively_equal(f, it->second, 30);
    return j;
}

}  // namespace

extern "C" {

const char* exsq_last_error(void) { return last_error.c_str(); }

void exsq_string_free(char* s) { std::free(s); }

exsq_status exsq_generate_method1(int n, const char* t, exsq_system** out) {
    if (out == nullptr) return null_argument("out");
    return guard([&] { return emit(exsq::method1(n, param(t, "t")), out); });
}

exsq_status exsq_generate_method2(int n, const char* a, const char* b, exsq_system** out) {
    if (out == nullptr) return null_argument("out");
    return guard([&] { return emit(exsq::method2(n, param(a, "a"), param(b, "b")), out); });
}

exsq_status exsq_generate_seed(const char* family, int size, const char* t, exsq_system** out) {
    if (out == nullptr) return null_argument("out");
    if (family == nullptr) return null_argument("family");
    return guard([&] {
        const exsq::BigInt tv = param(t, "t");
        const std::string f = family;
        exsq::ChainSolution<exsq::BigInt> chain;
        if (f == "general") {
            chain = exsq::lemma3_general(size, tv);
        } else if (f == "special") {
            chain = exsq::lemma3_special(size, tv);
        } else {
            throw exsq::DomainError("unknown seed family '" + f + "' (expected general or special)");
        }
        return emit(exsq::reduce_system(exsq::system_from_chain(chain)), out);
    });
}

void exsq_system_free(exsq_system* sys) { delete sys; }

size_t exsq_system_size(const exsq_system* sys) { return sys == nullptr ? 0 : sys->value.n(); }

exsq_status exsq_system_root(const exsq_system* sys, size_t i, char** out) {
    if (sys == nullptr || out == nullptr) return null_argument("sys/out");
    return guard([&] {
        if (i >= sys->value.n()) throw exsq::DomainError("root index out of range");
        *out = dup(sys->value.roots[i].to_string());
        return EXSQ_OK;
    });
}

exsq_status exsq_system_certificate(const exsq_system* sys, size_t i, char** out) {
    if (sys == nullptr || out == nullptr) return null_argument("sys/out");
    return guard([&] {
        if (i >= sys->value.certificates.size()) throw exsq::DomainError("certificate index out of range");
        *out = dup(sys->value.certificates[i].to_string());
        return EXSQ_OK;
    });
}

exsq_status exsq_system_s(const exsq_system* sys, char** out) {
    if (sys == nullptr || out == nullptr) return null_argument("sys/out");
    return guard([&] {
        *out = dup(sys->value.s.to_string());
        return EXSQ_OK;
    });
}

exsq_status exsq_system_to_json(const exsq_system* sys, char** out) {
    if (sys == nullptr || out == nullptr) return null_argument("sys/out");
    return guard([&] {
        *out = dup(exsq::to_json(sys->value));
        return EXSQ_OK;
    });
}

exsq_status exsq_system_from_json(const char* json, exsq_system** out) {
    if (json == nullptr || out == nullptr) return null_argument("json/out");
    return guard([&] { return emit(exsq::system_from_json(json), out); });
}

exsq_status exsq_verify(const exsq_system* sys, int require_distinct, char** report) {
    if (sys == nullptr) return null_argument("sys");
    return guard([&] {
        const auto r = exsq::validate_system(sys->value, require_distinct != 0);
        if (report != nullptr) *report = dup(r.summary());
        if (!r.ok) last_error = r.summary();
        return r.ok ? EXSQ_OK : EXSQ_VERIFY_FAILED;
    });
}

exsq_status exsq_catalog_open_builtin(exsq_catalog** out) {
    if (out == nullptr) return null_argument("out");
    return guard([&] {
        *out = new exsq_catalog{exsq::Catalog::builtin()};
        return EXSQ_OK;
    });
}

exsq_status exsq_catalog_open_file(const char* path, exsq_catalog** out) {
    if (path == nullptr || out == nullptr) return null_argument("path/out");
    return guard([&] {
        *out = new exsq_catalog{exsq::Catalog::load_file(path)};
        return EXSQ_OK;
    });
}

void exsq_catalog_free(exsq_catalog* cat) { delete cat; }

exsq_status exsq_catalog_list(const exsq_catalog* cat, char** out) {
    if (cat == nullptr || out == nullptr) return null_argument("cat/out");
    return guard([&] {
        std::string text;
        for (const auto& id : cat->value.list_families()) text += id + "\n";
        *out = dup(text);
        return EXSQ_OK;
    });
}

exsq_status exsq_catalog_eval(const exsq_catalog* cat, const char* id, const char* a, const char* b,
                              exsq_system** out) {
    if (cat == nullptr || id == nullptr || out == nullptr) return null_argument("cat/id/out");
    return guard([&] {
        const exsq::BigInt bv = b == nullptr ? exsq::BigInt(1) : param(b, "b");
        return emit(cat->value.eval_family(id, param(a, "a"), bv), out);
    });
}

exsq_status exsq_catalog_cross_check(const exsq_catalog* cat, const char* id, int points, char** report) {
    if (cat == nullptr || id == nullptr) return null_argument("cat/id");
    return guard([&] {
        const auto r = cat->value.cross_check(id, points);
        if (report != nullptr) *report = dup(r.summary());
        if (!r.ok) last_error = r.summary();
        return r.ok ? EXSQ_OK : EXSQ_VERIFY_FAILED;
    });
}

namespace {

exsq_status run_sweep(int n, int method, const std::vector<exsq::SweepPoint>& points, unsigned threads,
                      exsq_sweep_callback cb, void* user) {
    exsq::sweep(n, method, points, threads, [&](const exsq::SweepItem& item) {
        const std::string point = method == 1 ? item.point.first.to_string()
                                              : item.point.first.to_string() + "," + item.point.second.to_string();
        if (item.system) {
            const std::string json = exsq::to_json(*item.system);
            cb(user, point.c_str(), json.c_str(), nullptr, 0);
        } else {
            cb(user, point.c_str(), nullptr, item.skip_reason.c_str(), item.failed ? 1 : 0);
        }
    });
    return EXSQ_OK;
}

}  // namespace

exsq_status exsq_sweep_method1(int n, const char* t_from, const char* t_to, unsigned threads,
                               exsq_sweep_callback cb, void* user) {
    if (cb == nullptr) return null_argument("cb");
    return guard([&] {
        return run_sweep(n, 1, exsq::method1_points(param(t_from, "from"), param(t_to, "to")), threads, cb, user);
    });
}

exsq_status exsq_sweep_method2(int n, long max_sum, unsigned threads, exsq_sweep_callback cb, void* user) {
    if (cb == nullptr) return null_argument("cb");
    return guard([&] {
        if (n < 5 || n > 8) throw exsq::DomainError("method 2 is built in for n = 5..8");
        return run_sweep(n, 2, exsq::method2_points(max_sum), threads, cb, user);
    });
}

exsq_status exsq_derive(int n, char** out) {
    if (out == nullptr) return null_argument("out");
    return guard([&] {
        const auto d = exsq::derive(n);
        nlohmann::ordered_json j;
        j["n"] = d.n;
        j["free_pair"] = d.free_pair;
        j["branches"] = nlohmann::ordered_json::array();
        for (const auto& branch : d.branches) {
            nlohmann::ordered_json b;
            for (const auto& [name, form] : branch) b[name] = form_json(form, "n" + std::to_string(n) + "." + name);
            j["branches"].push_back(b);
        }
        *out = dup(j.dump(2));
        return EXSQ_OK;
    });
}

}  // extern "C"
