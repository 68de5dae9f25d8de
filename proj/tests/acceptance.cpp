// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "zeta_blocks/error.hpp"
#include "zeta_blocks/eval.hpp"
#include "zeta_blocks/formal.hpp"
#include "zeta_blocks/partitions.hpp"
#include "zeta_blocks/selftest.hpp"
#include "zeta_blocks/signed_index.hpp"
#include "zeta_blocks/word.hpp"

using namespace zb;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Failures {
public:
    void note(const std::string& what) {
        if (count_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
    }
    int count() const { return count_; }
    Outcome outcome(const std::string& summary) const {
        if (count_ == 0) return {true, summary};
        return {false, summary + ", " + std::to_string(count_) + " failures: " + first_};
    }

private:
    int count_ = 0;
    std::string first_;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

std::string show(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

int failed_criteria = 0;

void run(int number, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        out.pass = false;
        out.detail += ", over time limit of " + fmt(limit_seconds) + " s";
    }
    if (!out.pass) ++failed_criteria;
    std::printf("%s  %2d  %s: %s [%.2f s]\n", out.pass ? "PASS" : "FAIL", number, title, out.detail.c_str(), secs);
    std::fflush(stdout);
}

Outcome words() {
    Failures f;
    long count = 0;
    for (int len = 1; len <= 16; ++len) {
        for (unsigned mask = 0; mask < (1u << (len - 1)); ++mask) {
            BinaryWord w;
            w.bits.reserve(static_cast<std::size_t>(len));
            w.bits.push_back(0);
            for (int i = 0; i < len - 1; ++i) w.bits.push_back((mask >> i) & 1u);
            if (block_recompose(block_decompose(w)) != w) f.note(w.str());
            ++count;
        }
    }
    return f.outcome(std::to_string(count) + " words of length 1..16");
}

Outcome worked_example() {
    const auto w = BinaryWord::parse("01100101010010101");
    const auto bl = block_decompose(w);
    const auto back = block_recompose(BlockLengths{{2, 2, 7, 6}}).str();
    const bool ok = bl.lengths == std::vector<int>{2, 2, 7, 6} && back == "01100101010010101";
    return {ok, "bl = " + show(bl.lengths) + ", inverse " + back};
}

Outcome g_closed_form() {
    Failures f;
    for (int n = 1; n <= 9; ++n) {
        const Rational want = n % 2 ? Rational(-2 * factorial(n - 1)) : Rational(0);
        if (g_bruteforce(n) != want) f.note("n=" + std::to_string(n));
    }
    return f.outcome("g(1..9) = -2(n-1)! or 0");
}

Outcome g_polynomial() {
    Failures f;
    for (int n = 1; n <= 9; ++n) {
        std::vector<Rational> want{0};
        for (int k = 1; k <= n; ++k) want.push_back(Rational(factorial(n - 1) * binomial(n, k)));
        if (g_poly(n) != RationalPolynomial(want)) f.note("g(" + std::to_string(n) + ",x)");
    }
    int pairs = 0;
    for (int n = 1; n <= 8; ++n)
        for (int i = 1; i <= n; ++i, ++pairs) {
            const auto c = ordered_ordered_count(n, i);
            if (c.from_partitions != c.from_bars || c.from_bars != factorial(n) * binomial(n - 1, i - 1))
                f.note("(n,i)=(" + std::to_string(n) + "," + std::to_string(i) + ")");
        }
    return f.outcome("n <= 9 coefficientwise, " + std::to_string(pairs) + " ordered/ordered counts");
}

Outcome coefficients() {
    Failures f;
    long count = 0;
    for (int n = 1; n <= 7; ++n) {
        for_each_set_partition(n, [&](const SetPartition& r) {
            Rational want = 0;
            if (!r.has_even_part()) {
                Integer w = Integer(1) << r.size();
                for (const auto& p : r.parts) w *= factorial(static_cast<int>(p.size()) - 1);
                want = Rational(w);
            }
            const Rational got = coefficient_c(r);
            if (got != want || (got == 0) != r.has_even_part()) f.note("n=" + std::to_string(n));
            ++count;
        });
    }
    return f.outcome(std::to_string(count) + " partitions, ground sets 1..7");
}

Outcome s1_equivalence() {
    Failures f;
    long count = 0;
    for (const Index& s : inductive_domain(6, 7)) {
        if (s1_from_blocks(s) != s1_inductive(s)) f.note(show(s.parts));
        ++count;
    }
    return f.outcome(std::to_string(count) + " indices");
}

Outcome propositions() {
    Failures f;
    long exhaustive = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& s : small_signed_indices(n)) {
            if (!verify_sn_proposition(s).holds) f.note("S_n " + show(s.to_signed()));
            if (!verify_oddpart_proposition(s).holds) f.note("odd " + show(s.to_signed()));
            ++exhaustive;
        }
    }
    std::mt19937_64 rng(20180627);
    std::uniform_int_distribution<int> mag(1, 3), coin(0, 1);
    const int random_cases = 100;
    for (int k = 0; k < random_cases; ++k) {
        std::vector<int> v(5);
        for (int& x : v) x = coin(rng) ? -mag(rng) : mag(rng);
        const auto s = SignedIndex::from_signed(v);
        if (!verify_sn_proposition(s).holds) f.note("S_n " + show(v));
        if (!verify_oddpart_proposition(s).holds) f.note("odd " + show(v));
    }
    return f.outcome(std::to_string(exhaustive) + " exhaustive (n <= 4), " + std::to_string(random_cases) +
                     " random (n = 5)");
}

Outcome zhao(Evaluator& ev) {
    Failures f;
    double worst = 0;
    const auto domain = two_one_indices(8);
    for (const Index& s : domain) {
        const Real lhs = ev.mzsv(s).value;
        const Real rhs = ev.formal(zhao_star_expansion(s)).value;
        const double r = (lhs - rhs).abs().to_double();
        worst = std::max(worst, r);
        if (!(r <= 1e-10)) f.note(show(s.parts) + " residual " + fmt(r));
    }
    return f.outcome(std::to_string(domain.size()) + " indices, max residual " + fmt(worst));
}

Outcome zlobin(Evaluator& ev) {
    Failures f;
    double worst = 0;
    for (int m = 1; m <= 6; ++m) {
        const Real lhs = ev.mzsv(Index{std::vector<int>(static_cast<std::size_t>(m), 2)}).value;
        const Real rhs = ev.star_twos(m).value;
        const double r = (lhs - rhs).abs().to_double();
        worst = std::max(worst, r);
        if (!(r <= 1e-12)) f.note("m=" + std::to_string(m));
    }
    return f.outcome("m = 1..6, max residual " + fmt(worst));
}

struct TheoremRun {
    std::vector<BlockLengths> tuples;
    std::vector<IdentityCertificate> certificates;
};

Outcome theorem(Evaluator& ev, TheoremRun& run) {
    Failures f;
    auto add = [&](std::vector<int> v) { run.tuples.push_back(BlockLengths{std::move(v)}); };
    for (int a = 2; a <= 6; ++a) {
        add({a});
        for (int b = 2; b <= 6; ++b) {
            add({a, b});
            for (int c = 2; c <= 6; ++c) add({a, b, c});
        }
    }
    std::mt19937_64 rng(20180627);
    std::uniform_int_distribution<int> len(2, 5);
    for (int k = 0; k < 25; ++k) add({len(rng), len(rng), len(rng), len(rng)});

    // Paper examples at parameters in {0,1}.
    auto star2 = [](int m) { return make_star_twos(m); };
    auto zeta = [](int m) { return make_single_zeta({m, false}); };
    auto mono = [](std::vector<Atom> atoms) { return Monomial::of(std::move(atoms)); };
    int examples = 0;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 1; ++c) {
                // Example 1, three blocks
                BlockLengths e1{{2 * a + 2, 2 * b + 2, 2 * c + 2}};
                std::vector<int> first(static_cast<std::size_t>(a + 1), 2);
                first.push_back(1);
                first.insert(first.end(), static_cast<std::size_t>(b), 2);
                first.push_back(3);
                first.insert(first.end(), static_cast<std::size_t>(c), 2);
                if (theorem_lhs(e1).front().parts != first) f.note("Example 1 lhs " + show(e1.lengths));
                const auto want1 = FormalSum::term(mono({star2(a + 1), star2(b + 1), star2(c + 1)})) +
                                   FormalSum::atom(star2(a + b + c + 3), 2);
                if (theorem_rhs(e1) != want1) f.note("Example 1 rhs " + show(e1.lengths));
                run.tuples.push_back(e1);
                // Hoffman-star analogue
                BlockLengths h{{2 * a + 3, 2 * b + 3, 2 * c + 2}};
                const auto want_h = FormalSum::term(mono({zeta(2 * a + 3), zeta(2 * b + 3), star2(c + 1)}), 4) +
                                    FormalSum::atom(star2(a + b + c + 4), 2);
                if (theorem_rhs(h) != want_h) f.note("Hoffman rhs " + show(h.lengths));
                run.tuples.push_back(h);
                examples += 2;
                for (int d = 0; d <= 1; ++d) {
                    // Example 1, four blocks
                    BlockLengths e4{{2 * a + 2, 2 * b + 2, 2 * c + 2, 2 * d + 2}};
                    if (build_certificate(e4).circ != Circ::comma) f.note("Example 1 circ " + show(e4.lengths));
                    run.tuples.push_back(e4);
                    ++examples;
                }
            }
    for (int m = 0; m <= 1; ++m) {
        BlockLengths e3{{2, 3, 2 * m + 2}};
        const auto want3 = FormalSum::term(mono({star2(1), zeta(3), star2(m + 1)}), 2) +
                           FormalSum::atom(zeta(2 * m + 7), 4);
        if (theorem_rhs(e3) != want3) f.note("Example 3 rhs " + show(e3.lengths));
        const auto lhs = theorem_lhs(e3);
        std::vector<int> lead{1, 3, 3};
        lead.insert(lead.end(), static_cast<std::size_t>(m), 2);
        if (std::count(lhs.begin(), lhs.end(), Index{lead}) < 1) f.note("Example 3 lhs " + show(e3.lengths));
        run.tuples.push_back(e3);
        ++examples;
    }

    double worst = 0;
    for (const auto& t : run.tuples) {
        auto c = ev.verify(build_certificate(t), 1e-10);
        const double r = Real::parse(c.numeric->residual, ev.context().precision).to_double();
        worst = std::max(worst, r);
        if (!c.numeric->pass || !(r <= 1e-10)) f.note(show(t.lengths) + " residual " + fmt(r));
        run.certificates.push_back(std::move(c));
    }
    return f.outcome(std::to_string(run.tuples.size()) + " certificates (" + std::to_string(examples) +
                     " paper-example instances), max residual " + fmt(worst));
}

Outcome evaluator_independence(Evaluator& ev) {
    Failures f;
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> depth(1, 4), mag(1, 4), coin(0, 1);
    int cases = 0;
    double worst_ratio = 0;
    while (cases < 50) {
        std::vector<int> v(static_cast<std::size_t>(depth(rng)));
        int weight = 0;
        for (int& x : v) {
            x = mag(rng);
            weight += x;
            if (coin(rng)) x = -x;
        }
        const auto s = SignedIndex::from_signed(v);
        if (weight > 8 || !s.convergent()) continue;
        ++cases;
        const auto series = ev.mzv(s);
        const auto oracle = dp_oracle(s, 1000000, ev.context());
        const Real gap = (series.value - oracle.value).abs();
        const Real allowed = series.error_bound + oracle.error_bound;
        worst_ratio = std::max(worst_ratio, (gap / allowed).to_double());
        if (gap > allowed) f.note(show(v) + " gap " + fmt(gap.to_double()));
    }
    return f.outcome(std::to_string(cases) + " random signed indices, worst gap/bound " + fmt(worst_ratio));
}

Outcome even_blocks(const TheoremRun& run) {
    Failures f;
    int count = 0;
    for (const auto& c : run.certificates) {
        bool all_even = true;
        for (int l : c.blocks.lengths) all_even = all_even && l % 2 == 0;
        if (!all_even) continue;
        ++count;
        for (const auto& [mono, coeff] : c.rhs.terms())
            for (const auto& atom : mono.atoms)
                if (!std::holds_alternative<StarTwos>(atom)) f.note(show(c.blocks.lengths));
    }
    return f.outcome(std::to_string(count) + " all-even tuples, rhs built from zeta*({2}^m) only");
}

}  // namespace

int main() {
    const EvalContext ctx = EvalContext::from_env();
    Evaluator ev(ctx);
    TheoremRun theorem_run;

    run(1, "block decomposition roundtrip", 5, words);
    run(2, "worked example", 0, worked_example);
    run(3, "g(n) closed form", 30, g_closed_form);
    run(4, "g(n,x) and ordered/ordered counts", 0, g_polynomial);
    run(5, "coefficient c_r", 60, coefficients);
    run(6, "s1 constructions agree", 60, s1_equivalence);
    run(7, "S_n and odd-partition propositions", 300, propositions);
    run(8, "2-1 expansion numerics", 300, [&] { return zhao(ev); });
    run(9, "zeta*({2}^m) closed form", 0, [&] { return zlobin(ev); });
    run(10, "block-length identity numerics", 900, [&] { return theorem(ev, theorem_run); });
    run(11, "series vs nested-sum evaluators", 0, [&] { return evaluator_independence(ev); });
    run(12, "all-even blocks give powers of pi", 0, [&] { return even_blocks(theorem_run); });

    std::printf("%d of 12 criteria passed\n", 12 - failed_criteria);
    return failed_criteria == 0 ? 0 : 1;
}
