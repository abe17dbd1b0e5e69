#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "exsq/exsq.h"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kParseError = 3 };

int exit_for(exsq_status st) {
    switch (st) {
        case EXSQ_OK: return kOk;
        case EXSQ_VERIFY_FAILED: return kVerifyFailed;
        case EXSQ_BAD_INPUT: return kBadInput;
        case EXSQ_PARSE_ERROR: return kParseError;
        default: return kBadInput;
    }
}

int fail(exsq_status st) {
    std::cerr << "error: " << exsq_last_error() << "\n";
    return exit_for(st);
}

struct CString {
    char* p = nullptr;
    ~CString() { exsq_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

using System = std::unique_ptr<exsq_system, decltype(&exsq_system_free)>;
using Catalog = std::unique_ptr<exsq_catalog, decltype(&exsq_catalog_free)>;

/// Splits "a,b" into two trimmed fields.
bool split_params(const std::string& text, std::string& a, std::string& b) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return false;
    auto trim = [](std::string s) {
        const auto first = s.find_first_not_of(" \t");
        const auto last = s.find_last_not_of(" \t");
        return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
    };
    a = trim(text.substr(0, comma));
    b = trim(text.substr(comma + 1));
    return !a.empty() && !b.empty();
}

int print_system(exsq_system* raw) {
    System sys(raw, exsq_system_free);
    CString json;
    const exsq_status st = exsq_system_to_json(sys.get(), &json.p);
    if (st != EXSQ_OK) return fail(st);
    std::cout << json.str() << "\n";
    return kOk;
}

bool read_input(const std::string& path, std::string& text) {
    if (path.empty() || path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
}

struct SweepState {
    long emitted = 0;
    long skipped = 0;
    long failed = 0;
};

void sweep_line(void* user, const char* point, const char* json, const char* reason, int failed) {
    auto* state = static_cast<SweepState*>(user);
    if (json != nullptr) {
        std::cout << json << "\n";
        ++state->emitted;
    } else if (failed != 0) {
        std::cerr << "FAILED " << point << ": " << (reason ? reason : "") << "\n";
        ++state->failed;
    } else {
        std::cerr << "skipped " << point << ": " << (reason ? reason : "") << "\n";
        ++state->skipped;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exsq: n distinct squares whose sum without any one of them is a square"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a system and print it as JSON");
    int gen_n = 0;
    int gen_method = 1;
    std::string gen_t;
    std::string gen_params;
    gen->add_option("--n", gen_n, "number of squares")->required();
    gen->add_option("--method", gen_method, "1 (seed and transform) or 2 (chain assignment)")
        ->check(CLI::IsMember({1, 2}));
    gen->add_option("--t", gen_t, "method 1 parameter");
    gen->add_option("--params", gen_params, "method 2 parameters a,b");

    // seed
    auto* seed = app.add_subcommand("seed", "Print a seed family system (repeated roots allowed)");
    std::string seed_family = "general";
    int seed_size = 0;
    std::string seed_t;
    seed->add_option("--family", seed_family, "general or special")->check(CLI::IsMember({"general", "special"}));
    seed->add_option("--n,--m", seed_size, "n for the general family, m for the special one")->required();
    seed->add_option("--t", seed_t, "parameter")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Verify a JSON system from a file or stdin");
    std::string verify_path;
    bool allow_repeats = false;
    verify->add_option("file", verify_path, "input file, '-' or omitted for stdin");
    verify->add_flag("--allow-repeats", allow_repeats, "do not require distinct roots");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "Closed-form family catalog");
    std::string catalog_file;
    catalog->add_option("--catalog-file", catalog_file, "load records from this file instead of the built-in data");
    catalog->require_subcommand(1);
    auto* cat_list = catalog->add_subcommand("list", "List family ids");
    auto* cat_eval = catalog->add_subcommand("eval", "Evaluate a family and print the system");
    std::string eval_id;
    std::string eval_params;
    std::string eval_t;
    cat_eval->add_option("id", eval_id)->required();
    cat_eval->add_option("--params", eval_params, "homogeneous parameters a,b");
    cat_eval->add_option("--t", eval_t, "univariate parameter");
    auto* cat_check = catalog->add_subcommand("cross-check", "Compare a family against its generator");
    std::string check_id;
    int check_points = 10;
    cat_check->add_option("id", check_id)->required();
    cat_check->add_option("--points", check_points, "number of parameter points")->check(CLI::PositiveNumber);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Generate and verify systems over a parameter range (JSON lines)");
    int sweep_n = 0;
    int sweep_method = 1;
    std::string t_from = "2";
    std::string t_to = "1";
    long max_sum = 0;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    sweep->add_option("--n", sweep_n)->required();
    sweep->add_option("--method", sweep_method)->check(CLI::IsMember({1, 2}));
    sweep->add_option("--t-from", t_from, "method 1 range start");
    sweep->add_option("--t-to", t_to, "method 1 range end (inclusive)");
    sweep->add_option("--max-sum", max_sum, "method 2: coprime a,b >= 1 with a+b <= max-sum");
    sweep->add_option("--threads", threads)->check(CLI::PositiveNumber);

    // derive
    auto* derive = app.add_subcommand("derive", "Re-derive the method 2 parameter forms (JSON)");
    int derive_n = 0;
    derive->add_option("--n", derive_n)->required()->check(CLI::Range(5, 8));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    if (*gen) {
        exsq_system* out = nullptr;
        exsq_status st;
        if (gen_method == 1) {
            if (gen_t.empty()) {
                std::cerr << "error: --method 1 needs --t\n";
                return kBadInput;
            }
            st = exsq_generate_method1(gen_n, gen_t.c_str(), &out);
        } else {
            std::string a, b;
            if (!split_params(gen_params, a, b)) {
                std::cerr << "error: --method 2 needs --params a,b\n";
                return kBadInput;
            }
            st = exsq_generate_method2(gen_n, a.c_str(), b.c_str(), &out);
        }
        if (st != EXSQ_OK) return fail(st);
        return print_system(out);
    }

    if (*seed) {
        exsq_system* out = nullptr;
        const exsq_status st = exsq_generate_seed(seed_family.c_str(), seed_size, seed_t.c_str(), &out);
        if (st != EXSQ_OK) return fail(st);
        return print_system(out);
    }

    if (*verify) {
        std::string text;
        if (!read_input(verify_path, text)) {
            std::cerr << "error: cannot read " << verify_path << "\n";
            return kParseError;
        }
        exsq_system* raw = nullptr;
        exsq_status st = exsq_system_from_json(text.c_str(), &raw);
        if (st != EXSQ_OK) return fail(st == EXSQ_BAD_INPUT ? EXSQ_PARSE_ERROR : st);
        System sys(raw, exsq_system_free);
        CString report;
        st = exsq_verify(sys.get(), allow_repeats ? 0 : 1, &report.p);
        if (st != EXSQ_OK && st != EXSQ_VERIFY_FAILED) return fail(st);
        std::cout << report.str() << "\n";
        return exit_for(st);
    }

    if (*catalog) {
        exsq_catalog* raw = nullptr;
        exsq_status st = catalog_file.empty() ? exsq_catalog_open_builtin(&raw)
                                              : exsq_catalog_open_file(catalog_file.c_str(), &raw);
        if (st != EXSQ_OK) return fail(st);
        Catalog cat(raw, exsq_catalog_free);
        if (*cat_list) {
            CString text;
            st = exsq_catalog_list(cat.get(), &text.p);
            if (st != EXSQ_OK) return fail(st);
            std::cout << text.str();
            return kOk;
        }
        if (*cat_eval) {
            exsq_system* out = nullptr;
            if (!eval_params.empty()) {
                std::string a, b;
                if (!split_params(eval_params, a, b)) {
                    std::cerr << "error: --params expects a,b\n";
                    return kBadInput;
                }
                st = exsq_catalog_eval(cat.get(), eval_id.c_str(), a.c_str(), b.c_str(), &out);
            } else if (!eval_t.empty()) {
                st = exsq_catalog_eval(cat.get(), eval_id.c_str(), eval_t.c_str(), nullptr, &out);
            } else {
                std::cerr << "error: eval needs --params a,b or --t\n";
                return kBadInput;
            }
            if (st != EXSQ_OK) return fail(st);
            return print_system(out);
        }
        CString report;
        st = exsq_catalog_cross_check(cat.get(), check_id.c_str(), check_points, &report.p);
        if (st != EXSQ_OK && st != EXSQ_VERIFY_FAILED) return fail(st);
        std::cout << report.str() << "\n";
        return exit_for(st);
    }

    if (*sweep) {
        SweepState state;
        exsq_status st = sweep_method == 1
                             ? exsq_sweep_method1(sweep_n, t_from.c_str(), t_to.c_str(), threads, sweep_line, &state)
                             : exsq_sweep_method2(sweep_n, max_sum, threads, sweep_line, &state);
        std::cout.flush();
        if (st != EXSQ_OK) return fail(st);
        std::cerr << "sweep: " << state.emitted << " verified, " << state.skipped << " skipped, " << state.failed
                  << " failed\n";
        return state.failed == 0 ? kOk : kVerifyFailed;
    }

    if (*derive) {
        CString json;
        const exsq_status st = exsq_derive(derive_n, &json.p);
        if (st != EXSQ_OK) return fail(st);
        std::cout << json.str() << "\n";
        return kOk;
    }
    return kBadInput;
}
