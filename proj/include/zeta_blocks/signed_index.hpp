#pragma once

// Barred integers, the merge operation, Zhao's s^(1), the Pi-expansion,
// and the expansion of star sums into strict sums.

#include <compare>
#include <string>
#include <vector>

#include "zeta_blocks/word.hpp"

namespace zb {

/// An integer with a bar flag. A barred entry m carries the sign (-1)^n in
/// the corresponding summation variable. Serialised as a signed integer,
/// negative meaning barred.
struct SignedInteger {
    int magnitude = 1;
    bool barred = false;

    static SignedInteger from_signed(int value);
    int to_signed() const { return barred ? -magnitude : magnitude; }

    auto operator<=>(const SignedInteger&) const = default;
};

struct SignedIndex {
    std::vector<SignedInteger> entries;

    std::size_t size() const { return entries.size(); }
    int total_magnitude() const;
    /// XOR of all bars.
    bool bar_parity() const;
    /// Last entry unbarred => magnitude >= 2.
    bool convergent() const;

    static SignedIndex from_signed(const std::vector<int>& values);
    std::vector<int> to_signed() const;

    auto operator<=>(const SignedIndex&) const = default;
};

/// Magnitudes add, bars XOR.
SignedInteger oplus(SignedInteger a, SignedInteger b);

/// s^(1) read off the block decomposition of the word of s: drop the
/// leading block 2 (or subtract 2 from the first block) and bar the even
/// lengths.
SignedIndex s1_from_blocks(const Index& s);

/// s^(1) by the term-by-term construction. Entries after the first must be
/// 1, 2 or 3; anything else throws unsupported_step.
SignedIndex s1_inductive(const Index& s);

/// All 2^{len-1} ways to keep or merge each separator. Separator 0 is the
/// most significant bit of the enumeration counter, a set bit meaning merge.
std::vector<SignedIndex> pi_expansion(const SignedIndex& s);

/// +1 if s_1 = 1, else -1.
int epsilon_sign(const Index& s);

/// zeta*(s) = sum of zeta(t) over the returned t. Separator 0 is the least
/// significant bit of the enumeration counter, a set bit meaning "+".
std::vector<Index> star_expand(const Index& s);

}  // namespace zb
