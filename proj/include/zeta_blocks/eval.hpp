#pragma once

// High-precision evaluation of zeta values, alternating MZVs, MZSVs and
// formal sums, plus numeric verification of identity certificates.
//
// Two independent routes are provided:
//  * the series route (zeta_single, polylog_I, mzv_eval, mzsv_eval) splits
//    the iterated integral from 0 to 1 at 1/2 so that every factor is a
//    geometrically convergent power series; its error bounds are rigorous;
//  * the oracle route (dp_oracle, dp_oracle_star) sums the defining nested
//    series up to a cutoff; its error estimate is heuristic.
//
// Signed-index encoding: zeta(s_1,...,s_r) with signs eps_i (eps_i = -1 for
// a barred entry), summing prod eps_i^{n_i} / n_i^{s_i} over 0 < n_1 < ... < n_r,
// equals I(0; eta_1 0^{s_1-1} eta_2 0^{s_2-1} ... eta_r 0^{s_r-1}; 1) with
// eta_i = eps_i eps_{i+1} ... eps_r, letter b standing for dt/(b - t) and
// letter 0 for dt/t, the first letter integrated next to 0.

#include <map>
#include <optional>
#include <vector>

#include "zeta_blocks/formal.hpp"
#include "zeta_blocks/real.hpp"
#include "zeta_blocks/signed_index.hpp"
#include "zeta_blocks/word.hpp"

namespace zb {

struct EvalContext {
    long precision = 256;         // bits
    int series_terms = 256;       // M
    long oracle_cutoff = 1000000; // N

    /// Throws invalid_input if precision < 64, M < 16 or N < 1000.
    void validate() const;
    /// Defaults, with the precision taken from ZETA_BLOCKS_PRECISION when set.
    static EvalContext from_env();
};

enum class Rigor { rigorous, heuristic };

struct EvalResult {
    Real value;
    Real error_bound;
    Rigor rigor = Rigor::rigorous;
};

/// Letters of an iterated-integral word: 0 (dt/t) or a pole b in {1,-1,2}
/// (dt/(b-t)).
using PoleWord = std::vector<int>;

PoleWord mzv_word(const SignedIndex& s);

EvalResult zeta_single(SignedInteger a, const EvalContext& ctx);
/// zeta*({2}^m) = 2 (1 - 2^{1-2m}) zeta(2m).
EvalResult star_twos_value(int m, const EvalContext& ctx);
/// I(0; w; z) by the nested power series truncated after M terms.
EvalResult polylog_I(const PoleWord& w, const Real& z, const EvalContext& ctx);
EvalResult mzv_eval(const SignedIndex& s, const EvalContext& ctx);
EvalResult mzsv_eval(const Index& s, const EvalContext& ctx);

inline constexpr long kMaxOracleCutoff = 200000000;

EvalResult dp_oracle(const SignedIndex& s, long cutoff, const EvalContext& ctx);
EvalResult dp_oracle_star(const Index& s, long cutoff, const EvalContext& ctx);

EvalResult eval_formal(const FormalSum& f, const EvalContext& ctx);

inline constexpr double kDefaultTolerance = 1e-10;

/// Memoising evaluator for runs that revisit the same MZVs (certificates,
/// self-tests). Not safe for concurrent use; give each thread its own.
class Evaluator {
public:
    explicit Evaluator(EvalContext ctx);

    const EvalContext& context() const { return ctx_; }

    EvalResult zeta_single(SignedInteger a);
    EvalResult star_twos(int m);
    EvalResult mzv(const SignedIndex& s);
    EvalResult mzsv(const Index& s);
    EvalResult atom(const Atom& a);
    EvalResult formal(const FormalSum& f);

    IdentityCertificate verify(IdentityCertificate c, double tolerance = kDefaultTolerance);

private:
    EvalContext ctx_;
    std::map<SignedInteger, EvalResult> zeta_cache_;
    std::map<SignedIndex, EvalResult> mzv_cache_;
};

/// Fills the numeric record: lhs = sum of zeta*(lhs), rhs = formal sum value;
/// passes iff |lhs - rhs| <= max(tolerance, combined error bound).
IdentityCertificate verify_certificate(IdentityCertificate c, const EvalContext& ctx,
                                       double tolerance = kDefaultTolerance);

}  // namespace zb
