#include "zeta_blocks/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "zeta_blocks/error.hpp"

namespace zb {

int RunReport::passed() const {
    return static_cast<int>(std::count_if(items.begin(), items.end(), [](const auto& i) { return i.pass; }));
}

int RunReport::failed() const { return static_cast<int>(items.size()) - passed(); }

void RunReport::sort_items() {
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
}

json report_to_json(const RunReport& r, bool include_timing) {
    json items = json::array();
    for (const auto& i : r.items) items.push_back(json{{"key", i.key}, {"pass", i.pass}, {"detail", i.detail}});
    json j{{"schema", kSchema},
           {"command", r.command},
           {"items", items},
           {"summary", json{{"passed", r.passed()}, {"failed", r.failed()}}}};
    if (include_timing) j["wall_time_seconds"] = r.wall_time_seconds;
    return j;
}

std::string report_to_text(const RunReport& r) {
    std::ostringstream os;
    os << r.command << "\n";
    for (const auto& i : r.items) {
        os << (i.pass ? "PASS " : "FAIL ") << i.key;
        if (!i.detail.empty()) os << "  " << i.detail;
        os << "\n";
    }
    os << r.passed() << " passed, " << r.failed() << " failed (" << r.wall_time_seconds << " s)\n";
    return os.str();
}

std::vector<Index> two_one_indices(int max_weight) {
    std::vector<Index> out;
    std::vector<int> cur;
    std::function<void(int)> grow = [&](int weight) {
        if (!cur.empty() && cur.back() >= 2) out.push_back(Index{cur});
        for (int e = 1; e <= 3; ++e) {
            if (weight + e > max_weight) break;
            if (e == 1 && !cur.empty() && cur.back() == 1) continue;
            cur.push_back(e);
            grow(weight + e);
            cur.pop_back();
        }
    };
    grow(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Index> inductive_domain(int max_first, int max_depth) {
    std::vector<Index> out;
    std::vector<int> cur;
    std::function<void()> grow = [&] {
        out.push_back(Index{cur});
        if (static_cast<int>(cur.size()) >= max_depth) return;
        for (int e = 1; e <= 3; ++e) {
            if (e == 1 && cur.back() == 1) continue;
            cur.push_back(e);
            grow();
            cur.pop_back();
        }
    };
    for (int first = 1; first <= max_first; ++first) {
        cur = {first};
        grow();
    }
    return out;
}

std::vector<SignedIndex> small_signed_indices(int length) {
    static const std::vector<SignedInteger> alphabet{{1, false}, {2, false}, {3, false},
                                                     {1, true},  {2, true},  {3, true}};
    std::vector<SignedIndex> out;
    std::vector<std::size_t> digits(static_cast<std::size_t>(length), 0);
    while (true) {
        SignedIndex s;
        for (auto d : digits) s.entries.push_back(alphabet[d]);
        out.push_back(std::move(s));
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == alphabet.size()) digits[k++] = 0;
        if (k == digits.size()) break;
    }
    return out;
}

int min_alternating_pieces(const BinaryWord& w) {
    const std::size_t n = w.size();
    std::vector<int> best(n + 1, static_cast<int>(n) + 1);
    best[0] = 0;
    for (std::size_t end = 1; end <= n; ++end) {
        // Try every last piece w[start..end) that alternates.
        for (std::size_t start = end; start-- > 0;) {
            if (start + 1 < end && w.bits[start] == w.bits[start + 1]) break;
            best[end] = std::min(best[end], best[start] + 1);
        }
    }
    return best[n];
}

namespace {

class Suite {
public:
    explicit Suite(RunReport& report) : report_(report) {}

    void check(std::string key, bool pass, std::string detail = {}) {
        report_.items.push_back({std::move(key), pass, std::move(detail)});
    }

    template <class F>
    void guarded(const std::string& key, F body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(key, false, std::string("exception: ") + e.what());
        }
    }

private:
    RunReport& report_;
};

std::string pad(int n, int width = 2) {
    std::string s = std::to_string(n);
    return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), '0') + s;
}

void words_suite(Suite& suite, const SelftestOptions& o) {
    suite.guarded("words/roundtrip", [&] {
        long checked = 0, bad = 0;
        for (int len = 1; len <= o.max_word_length; ++len) {
            for (long mask = 0; mask < (1L << (len - 1)); ++mask) {
                BinaryWord w;
                w.bits.push_back(0);
                for (int i = len - 2; i >= 0; --i) w.bits.push_back(static_cast<std::uint8_t>((mask >> i) & 1));
                const BlockLengths b = block_decompose(w);
                if (block_recompose(b) != w || b.total() != len ||
                    ends_in_one(b) != (w.bits.back() == 1)) {
                    ++bad;
                }
                if (len <= 12 && static_cast<int>(b.size()) != min_alternating_pieces(w)) ++bad;
                ++checked;
            }
        }
        suite.check("words/roundtrip", bad == 0,
                    std::to_string(checked) + " words up to length " + std::to_string(o.max_word_length));
    });
    suite.guarded("words/blocks-roundtrip", [&] {
        long checked = 0, bad = 0;
        // Compositions of every total up to max_word_length.
        for (int total = 1; total <= o.max_word_length; ++total) {
            for (long mask = 0; mask < (1L << (total - 1)); ++mask) {
                BlockLengths b;
                int run = 1;
                for (int i = 0; i < total - 1; ++i) {
                    if ((mask >> i) & 1) {
                        b.lengths.push_back(run);
                        run = 1;
                    } else {
                        ++run;
                    }
                }
                b.lengths.push_back(run);
                if (block_decompose(block_recompose(b)) != b) ++bad;
                ++checked;
            }
        }
        suite.check("words/blocks-roundtrip", bad == 0, std::to_string(checked) + " block tuples");
    });
    suite.guarded("words/index-roundtrip", [&] {
        long checked = 0, bad = 0;
        for (int weight = 1; weight <= 12; ++weight) {
            for (long mask = 0; mask < (1L << (weight - 1)); ++mask) {
                Index k;
                int run = 1;
                for (int i = 0; i < weight - 1; ++i) {
                    if ((mask >> i) & 1) {
                        k.parts.push_back(run);
                        run = 1;
                    } else {
                        ++run;
                    }
                }
                k.parts.push_back(run);
                const BinaryWord w = index_to_word(k);
                if (word_to_index(w) != k || static_cast<int>(w.size()) != weight + 2) ++bad;
                ++checked;
            }
        }
        suite.check("words/index-roundtrip", bad == 0, std::to_string(checked) + " indices");
    });
    suite.guarded("words/worked-example", [&] {
        const BinaryWord w = BinaryWord::parse("01100101010010101");
        const BlockLengths b = block_decompose(w);
        suite.check("words/worked-example",
                    b == BlockLengths{{2, 2, 7, 6}} && block_recompose(b) == w, to_text(b));
    });
}

Integer bell_number(int n) {
    // Bell triangle.
    std::vector<Integer> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Integer> next{row.back()};
        for (const auto& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

void partitions_suite(Suite& suite, const SelftestOptions& o) {
    for (int n = 1; n <= o.max_partition_n; ++n) {
        suite.guarded("partitions/bell/" + pad(n), [&] {
            const auto all = enumerate_set_partitions(n);
            bool canonical = std::all_of(all.begin(), all.end(), [](SetPartition p) {
                const SetPartition before = p;
                p.canonicalize();
                return p == before;
            });
            std::vector<SetPartition> sorted = all;
            std::sort(sorted.begin(), sorted.end());
            const bool unique = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
            suite.check("partitions/bell/" + pad(n),
                        canonical && unique && Integer(all.size()) == bell_number(n),
                        std::to_string(all.size()) + " partitions");
        });
    }
    for (int n = 1; n <= std::min(o.max_partition_n, 7); ++n) {
        suite.guarded("partitions/c_r/" + pad(n), [&] {
            int bad = 0, count = 0;
            for (const SetPartition& r : enumerate_set_partitions(n)) {
                Rational expected = 0;
                if (!r.has_even_part()) {
                    Integer e = Integer(1) << static_cast<unsigned>(r.size());
                    for (const auto& part : r.parts) e *= factorial(static_cast<int>(part.size()) - 1);
                    expected = e;
                }
                if (coefficient_c(r) != expected) ++bad;
                ++count;
            }
            suite.check("partitions/c_r/" + pad(n), bad == 0, std::to_string(count) + " partitions");
        });
    }
    for (int n = 1; n <= o.max_g_n; ++n) {
        suite.guarded("partitions/g/" + pad(n), [&] {
            const Rational expected = n % 2 ? Rational(-2 * factorial(n - 1)) : Rational(0);
            const Rational got = g_bruteforce(n);
            suite.check("partitions/g/" + pad(n), got == expected, "g = " + got.str());
        });
        suite.guarded("partitions/g_poly/" + pad(n), [&] {
            // n!((1+x)^n - 1)/n coefficientwise
            std::vector<Rational> expected(static_cast<std::size_t>(n) + 1);
            for (int k = 1; k <= n; ++k) expected[static_cast<std::size_t>(k)] = Rational(factorial(n - 1) * binomial(n, k));
            const RationalPolynomial g = g_poly(n);
            suite.check("partitions/g_poly/" + pad(n),
                        g == RationalPolynomial(expected) && g.evaluate(-2) == g_bruteforce(n));
        });
    }
    suite.guarded("partitions/ordered-ordered", [&] {
        int bad = 0, count = 0;
        for (int n = 1; n <= o.max_partition_n; ++n)
            for (int i = 1; i <= n; ++i) {
                const auto c = ordered_ordered_count(n, i);
                bad += c.from_partitions != c.from_bars;
                ++count;
            }
        suite.check("partitions/ordered-ordered", bad == 0, std::to_string(count) + " (n,i) pairs");
    });
}

void propositions_suite(Suite& suite, const SelftestOptions& o) {
    for (int n = 1; n <= o.proposition_max_n; ++n) {
        suite.guarded("propositions/exhaustive/" + pad(n), [&] {
            int bad = 0, count = 0;
            std::string first_failure;
            for (const SignedIndex& s : small_signed_indices(n)) {
                const bool ok = verify_sn_proposition(s).holds && verify_oddpart_proposition(s).holds;
                if (!ok && first_failure.empty()) first_failure = to_text(s);
                bad += !ok;
                ++count;
            }
            suite.check("propositions/exhaustive/" + pad(n), bad == 0,
                        std::to_string(count) + " indices" + (bad ? ", first failure " + first_failure : ""));
        });
    }
    if (o.proposition_random_cases > 0) {
        suite.guarded("propositions/random/05", [&] {
            std::mt19937_64 rng(o.seed);
            std::uniform_int_distribution<int> magnitude(1, 6);
            std::uniform_int_distribution<int> coin(0, 1);
            int bad = 0;
            for (int c = 0; c < o.proposition_random_cases; ++c) {
                SignedIndex s;
                for (int i = 0; i < 5; ++i) s.entries.push_back({magnitude(rng), coin(rng) == 1});
                bad += !(verify_sn_proposition(s).holds && verify_oddpart_proposition(s).holds);
            }
            suite.check("propositions/random/05", bad == 0,
                        std::to_string(o.proposition_random_cases) + " random length-5 indices");
        });
    }
}

void zhao_suite(Suite& suite, const SelftestOptions& o) {
    suite.guarded("zhao/s1-equivalence", [&] {
        const auto domain = inductive_domain(6, 7);
        int bad = 0;
        for (const Index& s : domain) bad += s1_from_blocks(s) != s1_inductive(s);
        suite.check("zhao/s1-equivalence", bad == 0, std::to_string(domain.size()) + " indices");
    });
    suite.guarded("zhao/two-one-numeric", [&] {
        Evaluator ev(o.ctx);
        const Real tol(1e-10, o.ctx.precision);
        const auto domain = two_one_indices(o.max_weight);
        int bad = 0;
        std::string worst;
        Real worst_residual(o.ctx.precision);
        for (const Index& s : domain) {
            const Real residual = (ev.mzsv(s).value - ev.formal(zhao_star_expansion(s)).value).abs();
            if (residual > tol) ++bad;
            if (residual > worst_residual) {
                worst_residual = residual;
                worst = to_text(s);
            }
        }
        suite.check("zhao/two-one-numeric", bad == 0,
                    std::to_string(domain.size()) + " indices, max residual " + worst_residual.str(3));
    });
}

SignedIndex random_signed_index(std::mt19937_64& rng, int max_weight, int max_depth) {
    std::uniform_int_distribution<int> depth_dist(1, max_depth);
    std::uniform_int_distribution<int> coin(0, 1);
    while (true) {
        const int depth = depth_dist(rng);
        SignedIndex s;
        int weight = 0;
        for (int i = 0; i < depth; ++i) {
            std::uniform_int_distribution<int> mag(1, 4);
            const int m = mag(rng);
            weight += m;
            s.entries.push_back({m, coin(rng) == 1});
        }
        if (weight <= max_weight && s.convergent()) return s;
    }
}

void eval_suite(Suite& suite, const SelftestOptions& o) {
    suite.guarded("eval/cross-check", [&] {
        std::mt19937_64 rng(o.seed);
        int bad = 0;
        std::string first_failure;
        for (int c = 0; c < o.eval_random_cases; ++c) {
            const SignedIndex s = random_signed_index(rng, o.max_weight, 4);
            const EvalResult a = mzv_eval(s, o.ctx);
            const EvalResult b = dp_oracle(s, o.ctx.oracle_cutoff, o.ctx);
            const bool ok = (a.value - b.value).abs() <= a.error_bound + b.error_bound;
            if (!ok && first_failure.empty()) first_failure = to_text(s);
            bad += !ok;
        }
        suite.check("eval/cross-check", bad == 0,
                    std::to_string(o.eval_random_cases) + " random signed indices" +
                        (bad ? ", first failure " + first_failure : ""));
    });
    suite.guarded("eval/zlobin", [&] {
        Evaluator ev(o.ctx);
        const Real tol(1e-12, o.ctx.precision);
        int bad = 0;
        for (int m = 1; m <= 6; ++m) {
            const Index twos{std::vector<int>(static_cast<std::size_t>(m), 2)};
            bad += (ev.mzsv(twos).value - ev.star_twos(m).value).abs() > tol;
        }
        suite.check("eval/zlobin", bad == 0, "m = 1..6");
    });
}

}  // namespace

RunReport run_selftest(const std::string& suite_name, const SelftestOptions& options) {
    const auto& names = selftest_suites();
    if (suite_name != "all" && std::find(names.begin(), names.end(), suite_name) == names.end()) {
        throw Error(ErrorKind::invalid_input, "unknown selftest suite '" + suite_name + "'");
    }
    RunReport report;
    report.command = "selftest " + suite_name;
    const auto start = std::chrono::steady_clock::now();
    Suite suite(report);
    auto want = [&](const char* name) { return suite_name == "all" || suite_name == name; };
    if (want("words")) words_suite(suite, options);
    if (want("partitions")) partitions_suite(suite, options);
    if (want("propositions")) propositions_suite(suite, options);
    if (want("zhao")) zhao_suite(suite, options);
    if (want("eval")) eval_suite(suite, options);
    report.sort_items();
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace zb
