// zeta-blocks: block decompositions, MZSV identity certificates and the
// exact oracle suites.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "zeta_blocks/error.hpp"
#include "zeta_blocks/eval.hpp"
#include "zeta_blocks/io.hpp"
#include "zeta_blocks/selftest.hpp"

namespace {

using namespace zb;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct NumericFlags {
    long precision = 0;
    int terms = 0;
    long cutoff = 0;

    void add_to(CLI::App& cmd, const EvalContext& defaults) {
        precision = defaults.precision;
        terms = defaults.series_terms;
        cutoff = defaults.oracle_cutoff;
        cmd.add_option("--precision", precision, "Working precision in bits")->capture_default_str();
        cmd.add_option("--terms", terms, "Series terms per iterated integral")->capture_default_str();
        cmd.add_option("--cutoff", cutoff, "Cutoff of the nested-sum oracle")->capture_default_str();
    }

    EvalContext context() const {
        EvalContext ctx;
        ctx.precision = precision;
        ctx.series_terms = terms;
        ctx.oracle_cutoff = cutoff;
        ctx.validate();
        return ctx;
    }
};

int run_decompose(const std::string& word_text, const std::string& index_text,
                  const std::string& blocks_text, const std::string& format) {
    BinaryWord word;
    if (!word_text.empty()) {
        word = BinaryWord::parse(word_text);
    } else if (!index_text.empty()) {
        word = index_to_word(parse_index(index_text));
    } else {
        word = block_recompose(parse_blocks(blocks_text));
    }
    const BlockLengths blocks = block_decompose(word);
    const bool roundtrip = block_recompose(blocks) == word;
    std::optional<Index> index;
    std::string index_note;
    try {
        index = word_to_index(word);
    } catch (const Error& e) {
        index_note = e.what();
    }

    if (format == "json") {
        json j{{"schema", kSchema},
               {"word", word.str()},
               {"blocks", blocks},
               {"index", index ? json(*index) : json(nullptr)},
               {"roundtrip", roundtrip}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "word      " << word.str() << "\n"
                  << "blocks    " << to_text(blocks) << "\n"
                  << "index     " << (index ? to_text(*index) : "none (" + index_note + ")") << "\n"
                  << "roundtrip " << (roundtrip ? "ok" : "FAILED") << "\n";
    }
    return roundtrip ? 0 : kExitFail;
}

int run_identity(const std::vector<int>& lengths, bool verify, const NumericFlags& numeric,
                 double tolerance, const std::string& format) {
    IdentityCertificate cert = build_certificate(BlockLengths{lengths});
    if (verify) cert = verify_certificate(std::move(cert), numeric.context(), tolerance);
    if (format == "json") {
        json j = cert;
        j["schema"] = kSchema;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_text(cert);
    }
    return (!cert.numeric || cert.numeric->pass) ? 0 : kExitFail;
}

int run_selftest_cmd(const std::string& suite, SelftestOptions options, const NumericFlags& numeric,
                     const std::string& format, bool timing) {
    options.ctx = numeric.context();
    const RunReport report = run_selftest(suite, options);
    if (format == "json") {
        std::cout << report_to_json(report, timing).dump(2) << "\n";
        std::cerr << "wall time " << report.wall_time_seconds << " s\n";
    } else {
        std::cout << report_to_text(report);
    }
    return report.ok() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Block decompositions and MZSV identity certificates"};
    app.require_subcommand(1);

    EvalContext defaults;
    try {
        defaults = EvalContext::from_env();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }

    std::string format = "text";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    auto* decompose = app.add_subcommand("decompose", "Block decomposition of a word, index or block list");
    std::string word_text, index_text, blocks_text;
    auto* word_opt = decompose->add_option("--word", word_text, "Binary word starting with 0");
    auto* index_opt = decompose->add_option("--index", index_text, "MZV index, e.g. 1,3,3,2");
    auto* blocks_opt = decompose->add_option("--blocks", blocks_text, "Block lengths, e.g. 2,2,7,6");
    word_opt->excludes(index_opt)->excludes(blocks_opt);
    index_opt->excludes(blocks_opt);
    add_format(decompose);

    auto* identity = app.add_subcommand("identity", "Generate (and optionally verify) an identity certificate");
    std::vector<int> lengths;
    bool verify = false;
    double tolerance = kDefaultTolerance;
    NumericFlags identity_numeric;
    identity->add_option("blocks", lengths, "Block lengths l_1 ... l_n, each >= 2")->required();
    identity->add_flag("--verify", verify, "Evaluate both sides numerically");
    identity->add_option("--tolerance", tolerance, "Absolute pass tolerance")->capture_default_str();
    identity_numeric.add_to(*identity, defaults);
    add_format(identity);

    auto* selftest = app.add_subcommand("selftest", "Run the oracle suites");
    std::string suite = "all";
    SelftestOptions options;
    NumericFlags selftest_numeric;
    bool timing = false;
    selftest->add_option("suite", suite, "words|partitions|propositions|zhao|eval|all")
        ->check(CLI::IsMember({"words", "partitions", "propositions", "zhao", "eval", "all"}))
        ->capture_default_str();
    selftest->add_option("--max-length", options.max_word_length, "Longest word checked")
        ->check(CLI::Range(1, 24))->capture_default_str();
    selftest->add_option("--max-n", options.max_partition_n, "Largest set-partition ground set")
        ->check(CLI::Range(1, kMaxEnumerate))->capture_default_str();
    selftest->add_option("--max-g", options.max_g_n, "Largest n for g(n) and g(n,x)")
        ->check(CLI::Range(1, kMaxGSum))->capture_default_str();
    selftest->add_option("--max-weight", options.max_weight, "Largest weight for numeric suites")
        ->check(CLI::Range(2, 16))->capture_default_str();
    selftest->add_option("--proposition-n", options.proposition_max_n, "Exhaustive proposition length")
        ->check(CLI::Range(1, kMaxPropositionLength))->capture_default_str();
    selftest->add_option("--random-cases", options.proposition_random_cases, "Random length-5 proposition cases")
        ->capture_default_str();
    selftest->add_option("--eval-cases", options.eval_random_cases, "Random evaluator cross-checks")
        ->capture_default_str();
    selftest->add_option("--seed", options.seed, "Random seed")->capture_default_str();
    selftest->add_flag("--timing", timing, "Include wall time in JSON output");
    selftest_numeric.add_to(*selftest, defaults);
    add_format(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*decompose) {
            if (word_text.empty() && index_text.empty() && blocks_text.empty()) {
                std::cerr << "error: one of --word, --index, --blocks is required\n";
                return kExitError;
            }
            return run_decompose(word_text, index_text, blocks_text, format);
        }
        if (*identity) return run_identity(lengths, verify, identity_numeric, tolerance, format);
        return run_selftest_cmd(suite, options, selftest_numeric, format, timing);
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
