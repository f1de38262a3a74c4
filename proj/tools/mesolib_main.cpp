// mesolib -- command-line front end for mesosome avoidance in binary words.
//
// Exit codes: 0 success/affirmative, 1 negative result, 2 invalid input,
// 3 enumeration bound exceeded.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "meso/meso.hpp"

namespace {

constexpr std::string_view kUsage =
    "usage: mesolib <command> [args]\n"
    "\n"
    "commands:\n"
    "  check <word>                     report freeness or the first mesosome factor\n"
    "  classify <word>                  structural form as single-line JSON\n"
    "  find <word>                      all mesosome factors, one \"start half\" per line\n"
    "  count <n> [--method closed|enumerate|runs]\n"
    "                                   number of mesosome-free words of length n\n"
    "  count-table <n_max>              lines \"n<TAB>m(n)\" for n = 0..n_max\n"
    "  oeis <n_max>                     OEIS b-file lines \"n m(n)\" (offset 0)\n"
    "  minimal-forbidden <n> [--verify] all minimal forbidden words of length n\n"
    "  extendable <word>                yes/no: prefix of an infinite free word?\n"
    "  enumerate <n> [--free-only]      all words of length n, one per line\n"
    "\n"
    "MESOLIB_ENUM_CAP bounds every exhaustive enumeration (default 24).\n";

std::size_t enumeration_cap() {
    const char* env = std::getenv("MESOLIB_ENUM_CAP");
    if (env == nullptr) return meso::kDefaultEnumerationCap;
    std::size_t cap = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        return meso::kDefaultEnumerationCap;
    return cap;
}

std::optional<meso::BinaryWord> parse_word(std::string_view text) {
    try {
        return meso::BinaryWord::from_text(text);
    } catch (const meso::InvalidSymbolError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return std::nullopt;
    }
}

std::optional<std::size_t> parse_length(std::string_view text) {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        std::cerr << "error: expected a nonnegative integer, got '" << text << "'\n";
        return std::nullopt;
    }
    return n;
}

int cmd_check(const meso::BinaryWord& w) {
    const auto found = meso::find_mesosomes(w);
    if (found.empty()) {
        std::cout << "free\n";
        return 0;
    }
    std::cout << "mesosome at start=" << found.front().start
              << " half=" << found.front().half_length << "\n";
    return 1;
}

int cmd_classify(const meso::BinaryWord& w) {
    if (w.empty()) {
        // Mesosome-free by vacuity, but there is no structural form to report.
        std::cout << "{\"form\":null}\n";
        return 0;
    }
    const auto form = meso::classify(w);
    if (!form) {
        std::cout << "{\"form\":null}\n";
        return 1;
    }
    std::cout << "{\"form\":\"" << meso::form_label(form->variant) << "\",\"params\":[";
    for (std::size_t i = 0; i < form->parameters.size(); ++i) {
        if (i > 0) std::cout << ",";
        std::cout << form->parameters[i];
    }
    std::cout << "],\"complemented\":" << (form->complemented ? "true" : "false") << "}\n";
    return 0;
}

int cmd_find(const meso::BinaryWord& w) {
    for (const auto& occ : meso::find_mesosomes(w))
        std::cout << occ.start << " " << occ.half_length << "\n";
    return 0;
}

int cmd_count(std::size_t n, std::string_view method) {
    if (method == "closed") {
        std::cout << meso::count_closed_form(n) << "\n";
        return 0;
    }
    if (method == "enumerate") {
        const std::size_t cap = enumeration_cap();
        if (n > cap) {
            std::cerr << "error: length " << n << " exceeds enumeration cap " << cap << "\n";
            return 3;
        }
        std::cout << meso::count_by_enumeration(n, cap) << "\n";
        return 0;
    }
    if (method == "runs") {
        const meso::CountBreakdown b = meso::count_by_runs(n);
        std::cout << "{\"n\":" << b.n << ",\"one_run\":" << b.one_run
                  << ",\"two_runs\":" << b.two_runs << ",\"three_runs\":" << b.three_runs
                  << ",\"four_runs_case_a\":" << b.four_runs_case_a
                  << ",\"four_runs_case_b\":" << b.four_runs_case_b
                  << ",\"five_plus_runs\":" << b.five_plus_runs
                  << ",\"total\":" << b.total << "}\n";
        return 0;
    }
    std::cerr << "error: unknown method '" << method << "'\n";
    return 2;
}

int cmd_count_table(std::size_t n_max) {
    for (std::size_t n = 0; n <= n_max; ++n)
        std::cout << n << "\t" << meso::count_closed_form(n) << "\n";
    return 0;
}

int cmd_oeis(std::size_t n_max) {
    for (std::size_t n = 0; n <= n_max; ++n)
        std::cout << n << " " << meso::count_closed_form(n) << "\n";
    return 0;
}

int cmd_minimal_forbidden(std::size_t n, bool verify) {
    const auto words = meso::generate_minimal_forbidden(n);
    for (const auto& w : words) std::cout << w.to_string() << "\n";
    if (!verify) return 0;

    bool ok = static_cast<long long>(words.size()) == meso::count_minimal_forbidden(n);
    if (!ok)
        std::cerr << "verify: generated " << words.size() << " words, expected "
                  << meso::count_minimal_forbidden(n) << "\n";
    for (const auto& w : words) {
        if (!meso::is_minimal_forbidden(w)) {
            std::cerr << "verify: " << w.to_string() << " fails the definitional check\n";
            ok = false;
        }
    }
    return ok ? 0 : 1;
}

int cmd_extendable(const meso::BinaryWord& w) {
    if (meso::is_infinitely_extendable(w)) {
        std::cout << "yes\n";
        return 0;
    }
    std::cout << "no\n";
    return 1;
}

int cmd_enumerate(std::size_t n, bool free_only) {
    const std::size_t cap = enumeration_cap();
    if (n > cap) {
        std::cerr << "error: length " << n << " exceeds enumeration cap " << cap << "\n";
        return 3;
    }
    for (const meso::BinaryWord& w : meso::enumerate_words(n)) {
        if (free_only && !meso::is_mesosome_free(w)) continue;
        std::cout << w.to_string() << "\n";
    }
    return 0;
}

// Accepts "--flag value" or "--flag=value"; returns the value or nullopt.
std::optional<std::string_view> option_value(const std::vector<std::string_view>& args,
                                             std::size_t& idx, std::string_view flag) {
    const std::string_view arg = args[idx];
    if (arg == flag) {
        if (idx + 1 >= args.size()) return std::nullopt;
        return args[++idx];
    }
    if (arg.size() > flag.size() + 1 && arg.substr(0, flag.size()) == flag &&
        arg[flag.size()] == '=')
        return arg.substr(flag.size() + 1);
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    std::vector<std::string_view> args(argv + 1, argv + argc);

    if (args.empty()) {
        std::cerr << kUsage;
        return 2;
    }
    const std::string_view command = args[0];
    if (command == "--help" || command == "-h" || command == "help") {
        std::cout << kUsage;
        return 0;
    }

    try {
        if (command == "check" || command == "classify" || command == "find" ||
            command == "extendable") {
            if (args.size() != 2) {
                std::cerr << "error: " << command << " takes exactly one word\n";
                return 2;
            }
            const auto word = parse_word(args[1]);
            if (!word) return 2;
            if (command == "check") return cmd_check(*word);
            if (command == "classify") return cmd_classify(*word);
            if (command == "find") return cmd_find(*word);
            return cmd_extendable(*word);
        }

        if (command == "count") {
            if (args.size() < 2) {
                std::cerr << "error: count takes a length\n";
                return 2;
            }
            const auto n = parse_length(args[1]);
            if (!n) return 2;
            std::string_view method = "closed";
            for (std::size_t i = 2; i < args.size(); ++i) {
                const auto value = option_value(args, i, "--method");
                if (!value) {
                    std::cerr << "error: unexpected argument '" << args[i] << "'\n";
                    return 2;
                }
                method = *value;
            }
            return cmd_count(*n, method);
        }

        if (command == "count-table" || command == "oeis") {
            if (args.size() != 2) {
                std::cerr << "error: " << command << " takes a maximum length\n";
                return 2;
            }
            const auto n_max = parse_length(args[1]);
            if (!n_max) return 2;
            return command == "count-table" ? cmd_count_table(*n_max) : cmd_oeis(*n_max);
        }

        if (command == "minimal-forbidden") {
            if (args.size() < 2 || args.size() > 3) {
                std::cerr << "error: minimal-forbidden takes a length and optional --verify\n";
                return 2;
            }
            const auto n = parse_length(args[1]);
            if (!n) return 2;
            bool verify = false;
            if (args.size() == 3) {
                if (args[2] != "--verify") {
                    std::cerr << "error: unexpected argument '" << args[2] << "'\n";
                    return 2;
                }
                verify = true;
            }
            return cmd_minimal_forbidden(*n, verify);
        }

        if (command == "enumerate") {
            if (args.size() < 2 || args.size() > 3) {
                std::cerr << "error: enumerate takes a length and optional --free-only\n";
                return 2;
            }
            const auto n = parse_length(args[1]);
            if (!n) return 2;
            bool free_only = false;
            if (args.size() == 3) {
                if (args[2] != "--free-only") {
                    std::cerr << "error: unexpected argument '" << args[2] << "'\n";
                    return 2;
                }
                free_only = true;
            }
            return cmd_enumerate(*n, free_only);
        }
    } catch (const meso::BoundExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cerr << "error: unknown command '" << command << "'\n" << kUsage;
    return 2;
}
