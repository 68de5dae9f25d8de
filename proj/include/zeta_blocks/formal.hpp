#pragma once

// Exact rational combinations of products of zeta symbols, generation of
// both sides of the block-length MZSV identity, and exact checks of the two
// permutation/partition propositions behind it.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zeta_blocks/numbers.hpp"
#include "zeta_blocks/partitions.hpp"
#include "zeta_blocks/signed_index.hpp"
#include "zeta_blocks/word.hpp"

namespace zb {

/// zeta(m) or zeta(m-bar). Never zeta(1).
struct SingleZeta {
    SignedInteger arg;
    auto operator<=>(const SingleZeta&) const = default;
};

/// Formal (possibly alternating) MZV symbol; convergence is not required.
struct FormalMzv {
    SignedIndex index;
    auto operator<=>(const FormalMzv&) const = default;
};

struct FormalMzsv {
    Index index;
    auto operator<=>(const FormalMzsv&) const = default;
};

/// zeta*({2}^m).
struct StarTwos {
    int m = 1;
    auto operator<=>(const StarTwos&) const = default;
};

using Atom = std::variant<SingleZeta, FormalMzv, FormalMzsv, StarTwos>;

Atom make_single_zeta(SignedInteger arg);
Atom make_mzsv(Index index);
Atom make_star_twos(int m);

/// Commutative product of atoms, kept sorted. The empty monomial is 1.
struct Monomial {
    std::vector<Atom> atoms;

    static Monomial of(std::vector<Atom> atoms);
    static Monomial one() { return {}; }

    auto operator<=>(const Monomial&) const = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

class FormalSum {
public:
    using Terms = std::map<Monomial, Rational>;

    FormalSum() = default;
    static FormalSum term(const Monomial& m, const Rational& coeff = 1);
    static FormalSum atom(const Atom& a, const Rational& coeff = 1);

    void add(const Monomial& m, const Rational& coeff);
    Rational coefficient(const Monomial& m) const;

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    FormalSum& operator+=(const FormalSum& other);
    FormalSum& operator-=(const FormalSum& other);
    FormalSum& operator*=(const Rational& scalar);

    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(FormalSum a, const Rational& s) { return a *= s; }
    friend FormalSum operator*(const FormalSum& a, const FormalSum& b);

    bool operator==(const FormalSum&) const = default;

private:
    Terms terms_;  // no zero coefficients
};

enum class Circ { comma, plus };

char circ_symbol(Circ c);
/// "," if n and total have the same parity, "+" otherwise.
Circ circ_rule(int n, int total);

inline constexpr int kMaxTheoremBlocks = 6;
inline constexpr int kMaxPropositionLength = 5;
inline constexpr int kMaxSymmetricArgs = 8;

/// One MZSV argument string per permutation of the blocks (n! entries,
/// repeats kept), in lexicographic order of the permutation.
std::vector<Index> theorem_lhs(const BlockLengths& blocks);

/// Sum over odd set partitions r of 2^{#r} prod (#r_i - 1)! prod ztilde(sum_{j in r_i} l_j).
FormalSum theorem_rhs(const BlockLengths& blocks);

/// (1, zeta(m)) for odd m, (1/2, zeta*({2}^{m/2})) for even m.
std::pair<Rational, Atom> tilde_zeta(int m);

/// epsilon(s) * sum over p in Pi(s^(1)) of 2^{#p} zeta(p).
FormalSum zhao_star_expansion(const Index& s);

struct PropositionCheck {
    bool holds = false;
    FormalSum lhs;
    FormalSum rhs;
    /// First monomial (in canonical order) whose coefficients differ.
    std::optional<Monomial> witness;
};

PropositionCheck verify_sn_proposition(const SignedIndex& s);

/// Product-of-depth-one expansion of the symmetrised MZV of args:
///   sum over P in Part(t) of (-1)^{t-#P} prod (#P_j - 1)! prod [merge of P_j].
FormalSum symmetric_sum_expand(const std::vector<SignedInteger>& args);

PropositionCheck verify_oddpart_proposition(const SignedIndex& s);

struct NumericRecord {
    std::string lhs;
    std::string rhs;
    std::string residual;
    std::string bound;
    bool rigorous = false;
    bool pass = false;

    bool operator==(const NumericRecord&) const = default;
};

struct IdentityCertificate {
    BlockLengths blocks;
    Circ circ = Circ::comma;
    std::vector<Index> lhs;
    FormalSum rhs;
    std::optional<NumericRecord> numeric;

    bool operator==(const IdentityCertificate&) const = default;
};

IdentityCertificate build_certificate(const BlockLengths& blocks);

}  // namespace zb
