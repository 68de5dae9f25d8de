#include "zeta_blocks/formal.hpp"

#include <algorithm>
#include <numeric>

#include "zeta_blocks/error.hpp"

namespace zb {

Atom make_single_zeta(SignedInteger arg) {
    if (arg.magnitude < 1 || (!arg.barred && arg.magnitude < 2)) {
        throw Error(ErrorKind::divergent, "zeta(" + std::to_string(arg.magnitude) + ") diverges");
    }
    return SingleZeta{arg};
}

Atom make_mzsv(Index index) {
    index.validate();
    if (!index.convergent()) throw Error(ErrorKind::divergent, "zeta*: index must end in an entry >= 2");
    return FormalMzsv{std::move(index)};
}

Atom make_star_twos(int m) {
    if (m < 1) throw Error(ErrorKind::invalid_input, "zeta*({2}^m): need m >= 1");
    return StarTwos{m};
}

Monomial Monomial::of(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end());
    return Monomial{std::move(atoms)};
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.atoms.reserve(a.atoms.size() + b.atoms.size());
    std::merge(a.atoms.begin(), a.atoms.end(), b.atoms.begin(), b.atoms.end(),
               std::back_inserter(out.atoms));
    return out;
}

FormalSum FormalSum::term(const Monomial& m, const Rational& coeff) {
    FormalSum f;
    f.add(m, coeff);
    return f;
}

FormalSum FormalSum::atom(const Atom& a, const Rational& coeff) {
    return term(Monomial{{a}}, coeff);
}

void FormalSum::add(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational FormalSum::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& other) {
    for (const auto& [m, c] : other.terms_) add(m, -c);
    return *this;
}

FormalSum& FormalSum::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

FormalSum operator*(const FormalSum& a, const FormalSum& b) {
    FormalSum out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
    return out;
}

char circ_symbol(Circ c) { return c == Circ::comma ? ',' : '+'; }

Circ circ_rule(int n, int total) {
    return ((n - total) % 2 == 0) ? Circ::comma : Circ::plus;
}

namespace {

void check_theorem_blocks(const BlockLengths& blocks) {
    if (blocks.lengths.empty()) {
        throw Error(ErrorKind::theorem_precondition, "need at least one block length");
    }
    for (int l : blocks.lengths) {
        if (l < 2) {
            throw Error(ErrorKind::theorem_precondition,
                        "every block length must be >= 2, got " + std::to_string(l));
        }
    }
    if (static_cast<int>(blocks.size()) > kMaxTheoremBlocks) {
        throw Error(ErrorKind::budget_exceeded,
                    "at most " + std::to_string(kMaxTheoremBlocks) + " block lengths supported");
    }
}

// (2 o l_1, ..., l_n) -> argument string of the MZSV it encodes.
Index lhs_index(const std::vector<int>& ordered, Circ circ) {
    BlockLengths b;
    if (circ == Circ::comma) {
        b.lengths.push_back(2);
        b.lengths.insert(b.lengths.end(), ordered.begin(), ordered.end());
    } else {
        b.lengths = ordered;
        b.lengths.front() += 2;
    }
    return word_to_index(block_recompose(b));
}

SignedInteger merge_of(const SignedIndex& s, const std::vector<int>& positions) {
    SignedInteger acc = s.entries[static_cast<std::size_t>(positions.front() - 1)];
    for (std::size_t k = 1; k < positions.size(); ++k)
        acc = oplus(acc, s.entries[static_cast<std::size_t>(positions[k] - 1)]);
    return acc;
}

Atom depth_one(SignedInteger a) { return FormalMzv{SignedIndex{{a}}}; }

Integer pow2(std::size_t k) { return Integer(1) << static_cast<unsigned>(k); }

std::optional<Monomial> first_difference(const FormalSum& a, const FormalSum& b) {
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) return ia->first;
        if (ia == a.terms().end() || ib->first < ia->first) return ib->first;
        if (ia->second != ib->second) return ia->first;
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

PropositionCheck compare(FormalSum lhs, FormalSum rhs) {
    PropositionCheck out;
    out.witness = first_difference(lhs, rhs);
    out.holds = !out.witness.has_value();
    out.lhs = std::move(lhs);
    out.rhs = std::move(rhs);
    return out;
}

void check_proposition_length(const SignedIndex& s) {
    if (s.entries.empty()) throw Error(ErrorKind::invalid_input, "proposition: empty index");
    if (static_cast<int>(s.size()) > kMaxPropositionLength) {
        throw Error(ErrorKind::budget_exceeded,
                    "proposition: length " + std::to_string(s.size()) + " exceeds " +
                        std::to_string(kMaxPropositionLength));
    }
}

}  // namespace

std::vector<Index> theorem_lhs(const BlockLengths& blocks) {
    check_theorem_blocks(blocks);
    const int n = static_cast<int>(blocks.size());
    const Circ circ = circ_rule(n, blocks.total());
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<Index> out;
    std::vector<int> ordered(static_cast<std::size_t>(n));
    do {
        for (int i = 0; i < n; ++i) ordered[i] = blocks.lengths[static_cast<std::size_t>(sigma[i])];
        out.push_back(lhs_index(ordered, circ));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::pair<Rational, Atom> tilde_zeta(int m) {
    if (m < 2) throw Error(ErrorKind::invalid_input, "ztilde: argument must be >= 2");
    if (m % 2 != 0) return {Rational(1), make_single_zeta({m, false})};
    return {Rational(1, 2), make_star_twos(m / 2)};
}

FormalSum theorem_rhs(const BlockLengths& blocks) {
    check_theorem_blocks(blocks);
    const int n = static_cast<int>(blocks.size());
    FormalSum out;
    for (const SetPartition& r : enumerate_odd_partitions(n)) {
        Rational coeff = Rational(pow2(r.size()));
        std::vector<Atom> atoms;
        for (const auto& part : r.parts) {
            coeff *= Rational(factorial(static_cast<int>(part.size()) - 1));
            int sum = 0;
            for (int j : part) sum += blocks.lengths[static_cast<std::size_t>(j - 1)];
            auto [c, atom] = tilde_zeta(sum);
            coeff *= c;
            atoms.push_back(std::move(atom));
        }
        out.add(Monomial::of(std::move(atoms)), coeff);
    }
    return out;
}

FormalSum zhao_star_expansion(const Index& s) {
    s.validate();
    if (!s.convergent()) throw Error(ErrorKind::divergent, "zhao_star_expansion: index must be convergent");
    const int eps = epsilon_sign(s);
    FormalSum out;
    for (auto& p : pi_expansion(s1_from_blocks(s))) {
        Rational coeff = Rational(pow2(p.size())) * eps;
        out.add(Monomial{{FormalMzv{std::move(p)}}}, coeff);
    }
    return out;
}

PropositionCheck verify_sn_proposition(const SignedIndex& s) {
    check_proposition_length(s);
    const int n = static_cast<int>(s.size());

    FormalSum lhs;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        SignedIndex permuted;
        for (int i : sigma) permuted.entries.push_back(s.entries[static_cast<std::size_t>(i)]);
        for (auto& p : pi_expansion(permuted)) {
            const Rational coeff(pow2(p.size()));
            lhs.add(Monomial{{FormalMzv{std::move(p)}}}, coeff);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    FormalSum rhs;
    for_each_set_partition(n, [&](const SetPartition& q) {
        Integer coeff = pow2(q.size());
        std::vector<SignedInteger> merged;
        for (const auto& part : q.parts) {
            coeff *= factorial(static_cast<int>(part.size()));
            merged.push_back(merge_of(s, part));
        }
        std::vector<int> tau(merged.size());
        std::iota(tau.begin(), tau.end(), 0);
        do {
            SignedIndex arg;
            for (int k : tau) arg.entries.push_back(merged[static_cast<std::size_t>(k)]);
            rhs.add(Monomial{{FormalMzv{std::move(arg)}}}, Rational(coeff));
        } while (std::next_permutation(tau.begin(), tau.end()));
    });

    return compare(std::move(lhs), std::move(rhs));
}

FormalSum symmetric_sum_expand(const std::vector<SignedInteger>& args) {
    if (args.empty()) throw Error(ErrorKind::invalid_input, "symmetric_sum_expand: no arguments");
    if (static_cast<int>(args.size()) > kMaxSymmetricArgs) {
        throw Error(ErrorKind::budget_exceeded, "symmetric_sum_expand: too many arguments");
    }
    const int t = static_cast<int>(args.size());
    const SignedIndex as_index{args};
    FormalSum out;
    for_each_set_partition(t, [&](const SetPartition& p) {
        Integer coeff = 1;
        std::vector<Atom> atoms;
        for (const auto& part : p.parts) {
            coeff *= factorial(static_cast<int>(part.size()) - 1);
            atoms.push_back(depth_one(merge_of(as_index, part)));
        }
        if ((t - static_cast<int>(p.size())) % 2 != 0) coeff = -coeff;
        out.add(Monomial::of(std::move(atoms)), Rational(coeff));
    });
    return out;
}

PropositionCheck verify_oddpart_proposition(const SignedIndex& s) {
    check_proposition_length(s);
    const int n = static_cast<int>(s.size());

    FormalSum lhs;
    for_each_set_partition(n, [&](const SetPartition& q) {
        Integer coeff = pow2(q.size());
        std::vector<SignedInteger> merged;
        for (const auto& part : q.parts) {
            coeff *= factorial(static_cast<int>(part.size()));
            merged.push_back(merge_of(s, part));
        }
        lhs += symmetric_sum_expand(merged) * Rational(coeff);
    });

    FormalSum rhs;
    for (const SetPartition& r : enumerate_odd_partitions(n)) {
        Integer coeff = pow2(r.size());
        std::vector<Atom> atoms;
        for (const auto& part : r.parts) {
            coeff *= factorial(static_cast<int>(part.size()) - 1);
            atoms.push_back(depth_one(merge_of(s, part)));
        }
        rhs.add(Monomial::of(std::move(atoms)), Rational(coeff));
    }

    return compare(std::move(lhs), std::move(rhs));
}

IdentityCertificate build_certificate(const BlockLengths& blocks) {
    IdentityCertificate c;
    c.blocks = blocks;
    c.lhs = theorem_lhs(blocks);
    c.circ = circ_rule(static_cast<int>(blocks.size()), blocks.total());
    c.rhs = theorem_rhs(blocks);
    return c;
}

}  // namespace zb
