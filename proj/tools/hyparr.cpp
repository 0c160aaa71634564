// Command-line front end: read or generate an arrangement, compute every
// invariant, optionally verify point counts, print a report.
//
// Exit codes: 0 success, 2 input error, 3 verification failure,
// 4 internal consistency failure.

#include <hyparr/hyparr.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kInputError = 2;
constexpr int kVerificationFailure = 3;
constexpr int kInternalFailure = 4;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of rational hyperplane arrangements in projective space"};

    std::string input_path, inline_doc, builtin, format = "text";
    std::vector<std::size_t> params;
    std::size_t cone_k = 0;
    std::vector<std::uint64_t> primes;
    std::uint64_t budget = hyparr::default_budget();
    unsigned threads = 1;

    auto* in_opt = app.add_option("--input", input_path, "JSON file {\"n\": N, \"forms\": [[...]]}");
    auto* inline_opt = app.add_option("--inline", inline_doc, "the same JSON document inline");
    auto* builtin_opt =
        app.add_option("--builtin", builtin, "boolean | generic | pencil | counterexample")
            ->check(CLI::IsMember(hyparr::builtin::names()));
    app.add_option("--params", params, "builtin parameters: boolean N | generic D N | pencil D N")
        ->needs(builtin_opt);
    in_opt->excludes(inline_opt)->excludes(builtin_opt);
    inline_opt->excludes(builtin_opt);
    app.add_option("--cone", cone_k, "cone over the arrangement with K extra coordinates");
    app.add_option("--verify-count", primes, "primes at which to verify point counts");
    app.add_option("--budget", budget, "maximum number of points to enumerate (env HYPARR_BUDGET)");
    app.add_option("--threads", threads, "worker threads for point enumeration")
        ->check(CLI::Range(1u, 256u));
    app.add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        std::optional<hyparr::Arrangement> a;
        if (!input_path.empty())
            a = hyparr::parse_input_file(input_path);
        else if (!inline_doc.empty())
            a = hyparr::parse_input(inline_doc);
        else if (!builtin.empty())
            a = hyparr::builtin::generate(builtin, params);
        else
            throw hyparr::InputError("one of --input, --inline or --builtin is required");
        if (cone_k > 0)
            a = hyparr::cone(*a, cone_k);

        hyparr::ReportOptions opt;
        opt.verify_primes = primes;
        opt.count.budget = budget;
        opt.count.threads = threads;
        for (auto p : primes)
            if (!hyparr::is_prime(p))
                throw hyparr::InputError(std::to_string(p) + " is not prime");

        const hyparr::Report report = hyparr::run_report(*a, opt);
        if (format == "json")
            std::cout << hyparr::to_json(report).dump(2) << '\n';
        else
            std::cout << hyparr::to_text(report);

        if (!report.consistent()) {
            for (const auto& c : report.consistency)
                if (!c.ok)
                    std::cerr << "consistency check failed: " << c.check << '\n';
            return kInternalFailure;
        }
        if (report.verification_failed()) {
            std::cerr << "point-count verification failed\n";
            return kVerificationFailure;
        }
        for (const auto& e : report.point_counts)
            if (e.status != "pass")
                std::cerr << "warning: p = " << e.p << " skipped (" << e.status << ")\n";
        return 0;
    } catch (const hyparr::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const hyparr::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternalFailure;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternalFailure;
    }
}
