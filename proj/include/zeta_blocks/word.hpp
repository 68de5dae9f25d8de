#pragma once

// Binary iterated-integral words (bounds included), their block
// decomposition, and the correspondence with MZV argument strings.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zb {

/// A word over {0,1}. Stored with the integration bounds: the word of
/// zeta(k_1,...,k_d) is 0 (1 0^{k_1-1}) ... (1 0^{k_d-1}) 1.
struct BinaryWord {
    std::vector<std::uint8_t> bits;

    static BinaryWord parse(std::string_view text);
    std::string str() const;
    std::size_t size() const { return bits.size(); }

    auto operator<=>(const BinaryWord&) const = default;
};

struct BlockLengths {
    std::vector<int> lengths;

    int total() const;
    std::size_t size() const { return lengths.size(); }

    auto operator<=>(const BlockLengths&) const = default;
};

/// MZV / MZSV argument string (s_1,...,s_r), ascending convention:
/// zeta(s_1,...,s_r) sums over 0 < n_1 < ... < n_r.
struct Index {
    std::vector<int> parts;

    int weight() const;
    int depth() const { return static_cast<int>(parts.size()); }
    /// Last entry >= 2.
    bool convergent() const;
    /// Throws invalid_input unless nonempty with every entry >= 1.
    void validate() const;

    auto operator<=>(const Index&) const = default;
};

BlockLengths block_decompose(const BinaryWord& w);
BinaryWord block_recompose(const BlockLengths& blocks);

BinaryWord index_to_word(const Index& k);
Index word_to_index(const BinaryWord& w);

/// True iff block_recompose(blocks) ends with 1.
bool ends_in_one(const BlockLengths& blocks);

}  // namespace zb
