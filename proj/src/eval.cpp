#include "zeta_blocks/eval.hpp"

#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>

#include "zeta_blocks/error.hpp"

namespace zb {

void EvalContext::validate() const {
    if (precision < 64) throw Error(ErrorKind::invalid_input, "precision must be >= 64 bits");
    if (series_terms < 16) throw Error(ErrorKind::invalid_input, "series terms must be >= 16");
    if (oracle_cutoff < 1000) throw Error(ErrorKind::invalid_input, "oracle cutoff must be >= 1000");
}

EvalContext EvalContext::from_env() {
    EvalContext ctx;
    if (const char* env = std::getenv("ZETA_BLOCKS_PRECISION"); env && *env) {
        char* end = nullptr;
        const long bits = std::strtol(env, &end, 10);
        if (*end != '\0') {
            throw Error(ErrorKind::parse_error,
                        "ZETA_BLOCKS_PRECISION is not an integer: '" + std::string(env) + "'");
        }
        ctx.precision = bits;
    }
    return ctx;
}

namespace {

// b_n = B_n / n!, from sum_{j<=n} b_j / (n+1-j)! = 0 for n >= 1.
class BernoulliTable {
public:
    Rational scaled_even(int k) {
        std::lock_guard lock(mutex_);
        const std::size_t need = 2 * static_cast<std::size_t>(k) + 1;
        if (b_.empty()) {
            b_.push_back(1);
            inv_fact_.push_back(1);
        }
        while (b_.size() < need) {
            const std::size_t n = b_.size();
            while (inv_fact_.size() < n + 2) {
                inv_fact_.push_back(inv_fact_.back() / static_cast<long>(inv_fact_.size()));
            }
            Rational acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += b_[j] * inv_fact_[n + 1 - j];
            b_.push_back(-acc);
        }
        return b_[2 * static_cast<std::size_t>(k)];
    }

private:
    std::mutex mutex_;
    std::vector<Rational> b_;
    std::vector<Rational> inv_fact_;  // 1/j!
};

BernoulliTable& bernoulli() {
    static BernoulliTable table;
    return table;
}

Real to_real(const Rational& q, long prec) {
    Real num = Real::parse(boost::multiprecision::numerator(q).str(), prec);
    Real den = Real::parse(boost::multiprecision::denominator(q).str(), prec);
    return num / den;
}

Real ulp_scale(long prec, long count) { return Real::pow2(-prec, prec) * count; }

// zeta(s), integer s >= 2, by Euler-Maclaurin with cutoff N and tail
// corrections B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}.
EvalResult euler_maclaurin_zeta(long s, long prec) {
    const long work = prec + 32;
    const long cutoff = std::max(16L, prec);
    Real sum(work);
    for (long n = 1; n < cutoff; ++n) sum += Real(n, work).inv_pow(s);

    const Real big_n(cutoff, work);
    Real n_pow = big_n.inv_pow(s);  // N^{-s}
    Real tail = n_pow * cutoff;
    tail /= static_cast<unsigned long>(s - 1);
    sum += tail;
    sum += Real(n_pow).scale2(-1);

    const Real threshold = Real::pow2(-prec - 16, work);
    const Real inv_n_sq = Real(1L, work) / (big_n * big_n);
    Real rising(s, work);       // (s)_{2k-1}
    Real n_term = n_pow / big_n; // N^{-s-2k+1} at k = 1
    Real omitted(work);
    const int max_terms = 4000;
    for (int k = 1;; ++k) {
        if (k > max_terms) throw Error(ErrorKind::budget_exceeded, "Euler-Maclaurin did not converge");
        Real term = to_real(bernoulli().scaled_even(k), work) * rising * n_term;
        if (term.abs() < threshold) {
            omitted = term.abs();
            break;
        }
        sum += term;
        rising *= Real(s + 2 * k - 1, work) * Real(s + 2 * k, work);
        n_term *= inv_n_sq;
    }
    Real bound = Real(omitted).scale2(1) + ulp_scale(work, 8 * cutoff);
    return {sum.with_precision(prec), (bound + ulp_scale(prec, 2)).with_precision(prec), Rigor::rigorous};
}

void check_word(const PoleWord& w) {
    for (int b : w) {
        if (b != 0 && b != 1 && b != -1 && b != 2) {
            throw Error(ErrorKind::invalid_input, "iterated integral: pole " + std::to_string(b) +
                                                      " not in {0,1,-1,2}");
        }
    }
    if (!w.empty() && w.front() == 0) {
        throw Error(ErrorKind::divergent, "iterated integral: leading letter 0 diverges at 0");
    }
}

// Values of I(0; w_1..w_k; z) for k = 0..|w|. With every pole of modulus
// >= 1, each series coefficient has modulus <= 1.
std::vector<Real> series_prefixes(const PoleWord& w, const Real& z, int terms, long prec) {
    const std::size_t m = static_cast<std::size_t>(terms);
    const bool half = (z == Real::pow2(-1, prec));
    std::vector<Real> c(m + 1, Real(prec));
    c[0] = Real(1L, prec);
    std::vector<Real> out;
    out.reserve(w.size() + 1);
    out.emplace_back(1L, prec);

    Real running(prec);
    Real acc(prec);
    for (int b : w) {
        if (b == 0) {
            c[0] = Real(prec);
            for (std::size_t n = 1; n <= m; ++n) c[n] /= static_cast<unsigned long>(n);
        } else {
            // d_N = S_N / N with S_N = (S_{N-1} + c_{N-1}) / b.
            running = Real(prec);
            Real previous = c[0];
            c[0] = Real(prec);
            for (std::size_t n = 1; n <= m; ++n) {
                running += previous;
                if (b == -1) {
                    running = -running;
                } else if (b == 2) {
                    running.scale2(-1);
                }
                previous = c[n];
                c[n] = running;
                c[n] /= static_cast<unsigned long>(n);
            }
        }
        // Horner in z, or exact halvings when z = 1/2.
        acc = Real(prec);
        for (std::size_t n = m; n >= 1; --n) {
            acc += c[n];
            if (half) {
                acc.scale2(-1);
            } else {
                acc *= z;
            }
        }
        out.push_back(acc);
    }
    return out;
}

Real series_error(std::size_t letters, const Real& z_abs, int terms, long prec) {
    if (letters == 0) return Real(prec);
    // Tail: sum_{n>M} |z|^n <= 2 |z|^{M+1}; plus a rounding allowance.
    Real tail(1L, prec);
    for (int n = 0; n <= terms; ++n) tail *= z_abs;
    tail.scale2(1);
    const long k = static_cast<long>(letters) + 1;
    return tail + ulp_scale(prec, 16 * k * k);
}

}  // namespace

PoleWord mzv_word(const SignedIndex& s) {
    PoleWord w;
    int eta = 1;
    std::vector<int> etas(s.size());
    for (std::size_t i = s.size(); i-- > 0;) {
        if (s.entries[i].barred) eta = -eta;
        etas[i] = eta;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        w.push_back(etas[i]);
        w.insert(w.end(), static_cast<std::size_t>(s.entries[i].magnitude - 1), 0);
    }
    return w;
}

EvalResult zeta_single(SignedInteger a, const EvalContext& ctx) {
    ctx.validate();
    if (a.magnitude < 1 || (!a.barred && a.magnitude < 2)) {
        throw Error(ErrorKind::divergent, "zeta(" + std::to_string(a.magnitude) + ") diverges");
    }
    const long prec = ctx.precision;
    if (a.barred && a.magnitude == 1) {
        return {-Real::log2(prec), ulp_scale(prec, 2), Rigor::rigorous};
    }
    EvalResult z = euler_maclaurin_zeta(a.magnitude, prec);
    if (!a.barred) return z;
    // zeta(m-bar) = -(1 - 2^{1-m}) zeta(m)
    Real factor = Real(1L, prec) - Real::pow2(1 - a.magnitude, prec);
    return {-(factor * z.value), z.error_bound + ulp_scale(prec, 4), Rigor::rigorous};
}

EvalResult star_twos_value(int m, const EvalContext& ctx) {
    Evaluator ev(ctx);
    return ev.star_twos(m);
}

EvalResult polylog_I(const PoleWord& w, const Real& z, const EvalContext& ctx) {
    ctx.validate();
    check_word(w);
    const long prec = ctx.precision;
    const Real z_abs = z.abs();
    if (z_abs > Real::pow2(-1, prec)) {
        throw Error(ErrorKind::invalid_input, "iterated integral: |z| must be <= 1/2");
    }
    auto values = series_prefixes(w, z, ctx.series_terms, prec);
    return {values.back(), series_error(w.size(), z_abs, ctx.series_terms, prec), Rigor::rigorous};
}

EvalResult mzv_eval(const SignedIndex& s, const EvalContext& ctx) {
    ctx.validate();
    if (!s.convergent()) throw Error(ErrorKind::divergent, "mzv_eval: divergent index");
    const long prec = ctx.precision;
    const int terms = ctx.series_terms;
    const PoleWord w = mzv_word(s);
    const std::size_t len = w.size();

    // I(0;w;1) = sum_{uv=w} (-1)^{#(-1) in v} I(0;u;1/2) I(0;refl(rev v);1/2),
    // refl: 0 -> 1, 1 -> 0, -1 -> 2.
    PoleWord reflected;
    reflected.reserve(len);
    for (std::size_t i = len; i-- > 0;) {
        const int b = w[i];
        reflected.push_back(b == 0 ? 1 : (b == 1 ? 0 : 2));
    }
    const Real half = Real::pow2(-1, prec);
    const auto head = series_prefixes(w, half, terms, prec);
    const auto tail = series_prefixes(reflected, half, terms, prec);

    Real value(prec);
    Real bound(prec);
    int minus_ones_in_v = 0;  // v = w[k..len)
    for (int b : w) minus_ones_in_v += (b == -1);
    for (std::size_t k = 0; k <= len; ++k) {
        const Real& a = head[k];
        const Real& b = tail[len - k];
        const Real ea = series_error(k, half, terms, prec);
        const Real eb = series_error(len - k, half, terms, prec);
        Real product = a * b;
        value += (minus_ones_in_v % 2 == 0) ? product : -product;
        bound += a.abs() * eb + b.abs() * ea + ea * eb;
        if (k < len && w[k] == -1) --minus_ones_in_v;
    }
    bound += ulp_scale(prec, 4 * static_cast<long>(len + 1));
    return {value, bound, Rigor::rigorous};
}

EvalResult mzsv_eval(const Index& s, const EvalContext& ctx) {
    Evaluator ev(ctx);
    return ev.mzsv(s);
}

namespace {

EvalResult nested_sum_oracle(const std::vector<int>& exps, const std::vector<bool>& barred,
                             bool star, long cutoff, const EvalContext& ctx) {
    ctx.validate();
    if (cutoff < 1000 || cutoff > kMaxOracleCutoff) {
        throw Error(ErrorKind::budget_exceeded,
                    "oracle cutoff " + std::to_string(cutoff) + " outside [1000, " +
                        std::to_string(kMaxOracleCutoff) + "]");
    }
    const long big_n = cutoff - cutoff % 4;  // both N and N/2 even
    const long half_n = big_n / 2;
    const std::size_t r = exps.size();

    std::vector<long double> acc(r + 1, 0.0L);
    acc[0] = 1.0L;
    long double at_half = 0.0L;
    long double largest = 1.0L;
    for (long n = 1; n <= big_n; ++n) {
        const long double inv = 1.0L / static_cast<long double>(n);
        auto term = [&](std::size_t k) {
            long double t = 1.0L;
            for (int e = 0; e < exps[k - 1]; ++e) t *= inv;
            return (barred[k - 1] && (n % 2 != 0)) ? -t : t;
        };
        if (star) {
            for (std::size_t k = 1; k <= r; ++k) acc[k] += term(k) * acc[k - 1];
        } else {
            for (std::size_t k = r; k >= 1; --k) acc[k] += term(k) * acc[k - 1];
        }
        for (std::size_t k = 1; k <= r; ++k) largest = std::max(largest, std::fabs(acc[k]));
        if (n == half_n) at_half = acc[r];
    }
    const long double full = acc[r];

    // Tail behaves like N^{-p}: p = s_r - 1 for an unbarred outer entry,
    // p = s_r for a barred one summed over complete pairs.
    const int order = barred.back() ? exps.back() : exps.back() - 1;
    const long double diff = full - at_half;
    const long double extrapolated = full + diff / (std::ldexp(1.0L, order) - 1.0L);
    const long double rounding =
        8.0L * static_cast<long double>(big_n) * static_cast<long double>(r) * LDBL_EPSILON * largest;

    const long prec = ctx.precision;
    Real value(prec);
    Real err(prec);
    mpfr_set_ld(value.raw(), extrapolated, MPFR_RNDN);
    mpfr_set_ld(err.raw(), std::fabs(diff) + rounding, MPFR_RNDU);
    return {value, err, Rigor::heuristic};
}

}  // namespace

EvalResult dp_oracle(const SignedIndex& s, long cutoff, const EvalContext& ctx) {
    if (!s.convergent()) throw Error(ErrorKind::divergent, "dp_oracle: divergent index");
    std::vector<int> exps;
    std::vector<bool> bars;
    for (const auto& e : s.entries) {
        exps.push_back(e.magnitude);
        bars.push_back(e.barred);
    }
    return nested_sum_oracle(exps, bars, false, cutoff, ctx);
}

EvalResult dp_oracle_star(const Index& s, long cutoff, const EvalContext& ctx) {
    s.validate();
    if (!s.convergent()) throw Error(ErrorKind::divergent, "dp_oracle_star: divergent index");
    return nested_sum_oracle(s.parts, std::vector<bool>(s.parts.size(), false), true, cutoff, ctx);
}

EvalResult eval_formal(const FormalSum& f, const EvalContext& ctx) {
    Evaluator ev(ctx);
    return ev.formal(f);
}

IdentityCertificate verify_certificate(IdentityCertificate c, const EvalContext& ctx, double tolerance) {
    Evaluator ev(ctx);
    return ev.verify(std::move(c), tolerance);
}

Evaluator::Evaluator(EvalContext ctx) : ctx_(ctx) { ctx_.validate(); }

EvalResult Evaluator::zeta_single(SignedInteger a) {
    if (auto it = zeta_cache_.find(a); it != zeta_cache_.end()) return it->second;
    EvalResult r = zb::zeta_single(a, ctx_);
    zeta_cache_.emplace(a, r);
    return r;
}

EvalResult Evaluator::star_twos(int m) {
    if (m < 1) throw Error(ErrorKind::invalid_input, "zeta*({2}^m): need m >= 1");
    const long prec = ctx_.precision;
    EvalResult z = zeta_single({2 * m, false});
    Real factor = (Real(1L, prec) - Real::pow2(1 - 2 * m, prec)).scale2(1);
    return {factor * z.value, z.error_bound.scale2(1) + ulp_scale(prec, 8), Rigor::rigorous};
}

EvalResult Evaluator::mzv(const SignedIndex& s) {
    if (auto it = mzv_cache_.find(s); it != mzv_cache_.end()) return it->second;
    EvalResult r = zb::mzv_eval(s, ctx_);
    mzv_cache_.emplace(s, r);
    return r;
}

EvalResult Evaluator::mzsv(const Index& s) {
    s.validate();
    if (!s.convergent()) throw Error(ErrorKind::divergent, "mzsv_eval: divergent index");
    const long prec = ctx_.precision;
    EvalResult out{Real(prec), Real(prec), Rigor::rigorous};
    for (const Index& t : star_expand(s)) {
        SignedIndex signed_t;
        for (int p : t.parts) signed_t.entries.push_back({p, false});
        EvalResult r = mzv(signed_t);
        out.value += r.value;
        out.error_bound += r.error_bound;
    }
    return out;
}

EvalResult Evaluator::atom(const Atom& a) {
    return std::visit(
        [&](const auto& x) -> EvalResult {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, SingleZeta>) {
                return zeta_single(x.arg);
            } else if constexpr (std::is_same_v<T, FormalMzv>) {
                return mzv(x.index);
            } else if constexpr (std::is_same_v<T, FormalMzsv>) {
                return mzsv(x.index);
            } else {
                return star_twos(x.m);
            }
        },
        a);
}

EvalResult Evaluator::formal(const FormalSum& f) {
    const long prec = ctx_.precision;
    EvalResult out{Real(prec), Real(prec), Rigor::rigorous};
    for (const auto& [mono, coeff] : f.terms()) {
        // |prod v_i - prod (v_i + d_i)| <= prod (|v_i| + e_i) - prod |v_i|
        Real product(1L, prec);
        Real magnitude(1L, prec);
        Real inflated(1L, prec);
        for (const Atom& a : mono.atoms) {
            EvalResult r = atom(a);
            if (r.rigor == Rigor::heuristic) out.rigor = Rigor::heuristic;
            product *= r.value;
            magnitude *= r.value.abs();
            inflated *= r.value.abs() + r.error_bound;
        }
        const Real c = to_real(coeff, prec);
        out.value += c * product;
        out.error_bound += c.abs() * (inflated - magnitude) +
                           ulp_scale(prec, 4 * static_cast<long>(mono.atoms.size() + 1)) * c.abs() * magnitude;
    }
    return out;
}

IdentityCertificate Evaluator::verify(IdentityCertificate c, double tolerance) {
    const long prec = ctx_.precision;
    EvalResult lhs{Real(prec), Real(prec), Rigor::rigorous};
    for (const Index& s : c.lhs) {
        EvalResult r = mzsv(s);
        lhs.value += r.value;
        lhs.error_bound += r.error_bound;
        if (r.rigor == Rigor::heuristic) lhs.rigor = Rigor::heuristic;
    }
    EvalResult rhs = formal(c.rhs);

    const Real residual = (lhs.value - rhs.value).abs();
    const Real bound = lhs.error_bound + rhs.error_bound;
    const Real tol(tolerance, prec);
    NumericRecord rec;
    rec.lhs = lhs.value.str();
    rec.rhs = rhs.value.str();
    rec.residual = residual.str();
    rec.bound = bound.str();
    rec.rigorous = lhs.rigor == Rigor::rigorous && rhs.rigor == Rigor::rigorous;
    rec.pass = residual <= max(tol, bound);
    c.numeric = rec;
    return c;
}

}  // namespace zb
