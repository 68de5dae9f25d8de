#include "zeta_blocks/word.hpp"

#include <numeric>

#include "zeta_blocks/error.hpp"

namespace zb {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::invalid_word: return "invalid-word";
    case ErrorKind::unsupported_step: return "unsupported-step";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::theorem_precondition: return "theorem-precondition";
    case ErrorKind::divergent: return "divergent";
    case ErrorKind::parse_error: return "parse-error";
    }
    return "unknown";
}

BinaryWord BinaryWord::parse(std::string_view text) {
    BinaryWord w;
    w.bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '0' && c != '1') {
            throw Error(ErrorKind::parse_error,
                        "word: unexpected character '" + std::string(1, c) +
                            "' at position " + std::to_string(i));
        }
        w.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (w.bits.empty()) {
        throw Error(ErrorKind::parse_error, "word: empty");
    }
    return w;
}

std::string BinaryWord::str() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

int BlockLengths::total() const {
    return std::accumulate(lengths.begin(), lengths.end(), 0);
}

int Index::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool Index::convergent() const {
    return !parts.empty() && parts.back() >= 2;
}

void Index::validate() const {
    if (parts.empty()) throw Error(ErrorKind::invalid_input, "index: empty");
    for (int p : parts) {
        if (p < 1) {
            throw Error(ErrorKind::invalid_input,
                        "index: entries must be >= 1, got " + std::to_string(p));
        }
    }
}

BlockLengths block_decompose(const BinaryWord& w) {
    if (w.bits.empty()) throw Error(ErrorKind::invalid_input, "block_decompose: empty word");
    if (w.bits.front() != 0) {
        throw Error(ErrorKind::invalid_input, "block_decompose: word must start with 0");
    }
    BlockLengths out;
    int run = 1;
    for (std::size_t i = 1; i < w.bits.size(); ++i) {
        if (w.bits[i] == w.bits[i - 1]) {
            out.lengths.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    out.lengths.push_back(run);
    return out;
}

BinaryWord block_recompose(const BlockLengths& blocks) {
    if (blocks.lengths.empty()) {
        throw Error(ErrorKind::invalid_input, "block_recompose: no blocks");
    }
    BinaryWord w;
    w.bits.reserve(static_cast<std::size_t>(std::max(0, blocks.total())));
    std::uint8_t letter = 0;
    for (int len : blocks.lengths) {
        if (len < 1) {
            throw Error(ErrorKind::invalid_input, "block_recompose: block length must be >= 1");
        }
        // A new block repeats the letter the previous block ended on.
        for (int j = 0; j < len; ++j) {
            w.bits.push_back(letter);
            if (j + 1 < len) letter ^= 1;
        }
    }
    return w;
}

BinaryWord index_to_word(const Index& k) {
    k.validate();
    BinaryWord w;
    w.bits.reserve(static_cast<std::size_t>(k.weight() + 2));
    w.bits.push_back(0);
    for (int s : k.parts) {
        w.bits.push_back(1);
        w.bits.insert(w.bits.end(), static_cast<std::size_t>(s - 1), 0);
    }
    w.bits.push_back(1);
    return w;
}

Index word_to_index(const BinaryWord& w) {
    const auto& b = w.bits;
    if (b.size() < 3 || b[0] != 0 || b[1] != 1 || b.back() != 1) {
        throw Error(ErrorKind::invalid_word,
                    "word_to_index: expected 01...1 of length >= 3, got " + w.str());
    }
    Index k;
    // Interior is b[1 .. size-2]; it starts with 1 so every 1 opens a new entry.
    for (std::size_t i = 1; i + 1 < b.size(); ++i) {
        if (b[i] == 1) {
            k.parts.push_back(1);
        } else {
            ++k.parts.back();
        }
    }
    return k;
}

bool ends_in_one(const BlockLengths& blocks) {
    // Each block of length l flips the letter l-1 times; the word starts with 0.
    long flips = 0;
    for (int l : blocks.lengths) flips += l - 1;
    return flips % 2 != 0;
}

}  // namespace zb
