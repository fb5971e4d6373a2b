// commop: verify and reconstruct a commuting pair of rank-3 operators.
//
// Exit status: 0 all checks pass, 1 some check failed, 2 usage error.

#include "commop/cli.hpp"
#include "commop/opexpr.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RawOptions {
    std::string eps = "symbolic";
    unsigned precision = 60;
    int order = 16;
    std::string window = "-16..28";
    std::string json;
    std::uint64_t seed = commop::cli::kDefaultSeed;
    std::string points = "5";
    bool literal = false;
};

void add_common(CLI::App& cmd, RawOptions& o) {
    cmd.add_option("--eps", o.eps, "symbolic or a rational value for eps")->capture_default_str();
    cmd.add_option("--precision", o.precision, "decimal digits for the numeric checks")->capture_default_str();
    cmd.add_option("--order", o.order, "series truncation order")->capture_default_str();
    cmd.add_option("--window", o.window, "x-exponent window lo..hi for the commutant ansatz")->capture_default_str();
    cmd.add_option("--json", o.json, "write the JSON report to this path ('-' for stdout)");
    cmd.add_option("--seed", o.seed, "seed recorded for reproducible property runs")->capture_default_str();
    cmd.add_option("--points", o.points, "sample count 1..5 or a list such as 1,3/2,2")->capture_default_str();
    cmd.add_flag("--literal", o.literal, "use the printed formulas verbatim where errata are documented");
}

commop::cli::Options resolve(const RawOptions& r) {
    commop::cli::Options o;
    o.eps = commop::cli::parse_eps(r.eps);
    o.precision = r.precision;
    o.order = r.order;
    o.window = commop::cli::parse_window(r.window);
    o.seed = r.seed;
    o.points = commop::cli::parse_points(r.points);
    o.literal = r.literal;
    return o;
}

int emit(const commop::cli::Report& rep, const RawOptions& raw) {
    if (raw.json == "-") {
        std::cout << commop::cli::to_json(rep);
    } else {
        std::cout << commop::cli::to_text(rep);
        if (!raw.json.empty()) {
            std::ofstream f(raw.json);
            if (!f) {
                std::cerr << "commop: cannot write " << raw.json << "\n";
                return kExitUsage;
            }
            f << commop::cli::to_json(rep);
        }
    }
    return rep.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of a commuting pair of rank-3 differential operators"};
    app.require_subcommand(1);
    RawOptions raw;

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite, "all | commute | bc | limit | rank | kn")->required();
    add_common(*verify, raw);

    std::string target;
    std::string out;
    auto* construct = app.add_subcommand("construct", "re-derive an object and write it to a file");
    construct->add_option("target", target, "l1 | l2 | bc")->required();
    construct->add_option("--out", out, "artifact path (default: <target>.op, or bc.txt)");
    add_common(*construct, raw);

    std::string source;
    std::string format = "text";
    auto* print = app.add_subcommand("print", "parse an operator file (or l1, l2, l2mu, calL) and print it");
    print->add_option("source", source, "operator file or built-in name")->required();
    print->add_option("--format", format, "text | json | tex")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) return emit(commop::cli::verify(suite, resolve(raw)), raw);
        if (*construct) {
            if (out.empty()) out = target == "bc" ? "bc.txt" : target + ".op";
            return emit(commop::cli::construct(target, resolve(raw), out), raw);
        }
        if (*print) {
            const auto op = commop::cli::load_operator(source);
            std::cout << commop::print_op(op, commop::parse_format(format)) << "\n";
            return kExitPass;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "commop: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "commop: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "commop: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
