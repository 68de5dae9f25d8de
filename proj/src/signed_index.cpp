#include "zeta_blocks/signed_index.hpp"

#include "zeta_blocks/error.hpp"

namespace zb {

SignedInteger SignedInteger::from_signed(int value) {
    if (value == 0) throw Error(ErrorKind::invalid_input, "signed integer: zero is not allowed");
    return value < 0 ? SignedInteger{-value, true} : SignedInteger{value, false};
}

int SignedIndex::total_magnitude() const {
    int total = 0;
    for (const auto& e : entries) total += e.magnitude;
    return total;
}

bool SignedIndex::bar_parity() const {
    bool parity = false;
    for (const auto& e : entries) parity ^= e.barred;
    return parity;
}

bool SignedIndex::convergent() const {
    if (entries.empty()) return false;
    const auto& last = entries.back();
    return last.barred || last.magnitude >= 2;
}

SignedIndex SignedIndex::from_signed(const std::vector<int>& values) {
    SignedIndex s;
    s.entries.reserve(values.size());
    for (int v : values) s.entries.push_back(SignedInteger::from_signed(v));
    return s;
}

std::vector<int> SignedIndex::to_signed() const {
    std::vector<int> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.to_signed());
    return out;
}

SignedInteger oplus(SignedInteger a, SignedInteger b) {
    return {a.magnitude + b.magnitude, a.barred != b.barred};
}

namespace {

SignedInteger tilde(int length) { return {length, length % 2 == 0}; }

}  // namespace

SignedIndex s1_from_blocks(const Index& s) {
    s.validate();
    const BlockLengths b = block_decompose(index_to_word(s));
    SignedIndex out;
    // The word starts 01, so the first block has length >= 2.
    if (b.lengths.front() == 2) {
        for (std::size_t i = 1; i < b.size(); ++i) out.entries.push_back(tilde(b.lengths[i]));
    } else {
        out.entries.push_back(tilde(b.lengths.front() - 2));
        for (std::size_t i = 1; i < b.size(); ++i) out.entries.push_back(tilde(b.lengths[i]));
    }
    return out;
}

SignedIndex s1_inductive(const Index& s) {
    s.validate();
    SignedIndex out;
    const int first = s.parts.front();
    if (first == 1) {
        out.entries.push_back({1, false});
    } else {
        out.entries.assign(static_cast<std::size_t>(first - 2), SignedInteger{1, false});
        out.entries.push_back({2, true});
    }
    for (std::size_t i = 1; i < s.parts.size(); ++i) {
        auto& last = out.entries.back();
        switch (s.parts[i]) {
        case 1:
            out.entries.push_back({1, false});
            break;
        case 2:
            last = oplus(last, {2, false});
            break;
        case 3:
            last = oplus(last, {1, true});
            out.entries.push_back({2, true});
            break;
        default:
            throw Error(ErrorKind::unsupported_step,
                        "s1_inductive: no step rule for entry " + std::to_string(s.parts[i]) +
                            " at position " + std::to_string(i + 1));
        }
    }
    return out;
}

std::vector<SignedIndex> pi_expansion(const SignedIndex& s) {
    if (s.entries.empty()) throw Error(ErrorKind::invalid_input, "pi_expansion: empty index");
    const std::size_t seps = s.size() - 1;
    if (seps >= 30) throw Error(ErrorKind::budget_exceeded, "pi_expansion: index too long");
    std::vector<SignedIndex> out;
    out.reserve(std::size_t{1} << seps);
    for (std::size_t mask = 0; mask < (std::size_t{1} << seps); ++mask) {
        SignedIndex p;
        p.entries.push_back(s.entries[0]);
        for (std::size_t j = 0; j < seps; ++j) {
            const bool merge = (mask >> (seps - 1 - j)) & 1;
            if (merge) {
                p.entries.back() = oplus(p.entries.back(), s.entries[j + 1]);
            } else {
                p.entries.push_back(s.entries[j + 1]);
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

int epsilon_sign(const Index& s) {
    s.validate();
    return s.parts.front() == 1 ? 1 : -1;
}

std::vector<Index> star_expand(const Index& s) {
    s.validate();
    const std::size_t seps = s.parts.size() - 1;
    if (seps >= 30) throw Error(ErrorKind::budget_exceeded, "star_expand: index too long");
    std::vector<Index> out;
    out.reserve(std::size_t{1} << seps);
    for (std::size_t mask = 0; mask < (std::size_t{1} << seps); ++mask) {
        Index t;
        t.parts.push_back(s.parts[0]);
        for (std::size_t j = 0; j < seps; ++j) {
            if ((mask >> j) & 1) {
                t.parts.back() += s.parts[j + 1];
            } else {
                t.parts.push_back(s.parts[j + 1]);
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace zb
