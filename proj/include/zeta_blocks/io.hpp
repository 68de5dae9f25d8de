#pragma once

// JSON and text forms of the domain types.
//
// JSON: indices and block lengths are arrays of positive integers, signed
// indices arrays of nonzero integers (negative = barred), set partitions
// arrays of arrays. Certificates follow
//   { "blocks": [int], "circ": "," | "+", "lhs": [[int]],
//     "rhs": [ {"coeff": "p/q", "monomial": [atom]} ], "numeric": {...} | null }
// with atom = {"kind":"zeta","arg":int} | {"kind":"mzv","index":[int]}
//           | {"kind":"mzsv","index":[int]} | {"kind":"star2s","m":int}.
//
// Text: barred entries carry a trailing apostrophe, e.g. (1,2').

#include <string>
#include <string_view>

#include <json.hpp>

#include "zeta_blocks/formal.hpp"
#include "zeta_blocks/partitions.hpp"
#include "zeta_blocks/signed_index.hpp"
#include "zeta_blocks/word.hpp"

namespace zb {

using json = nlohmann::json;

inline constexpr const char* kSchema = "zeta-blocks/1";

void to_json(json& j, const Index& k);
void from_json(const json& j, Index& k);
void to_json(json& j, const BlockLengths& b);
void from_json(const json& j, BlockLengths& b);
void to_json(json& j, const SignedIndex& s);
void from_json(const json& j, SignedIndex& s);
void to_json(json& j, const SetPartition& p);
void from_json(const json& j, SetPartition& p);
void to_json(json& j, const Atom& a);
void from_json(const json& j, Atom& a);
void to_json(json& j, const FormalSum& f);
void from_json(const json& j, FormalSum& f);
void to_json(json& j, const NumericRecord& r);
void from_json(const json& j, NumericRecord& r);
void to_json(json& j, const IdentityCertificate& c);
void from_json(const json& j, IdentityCertificate& c);

/// "1,3,3,2" (commas and/or whitespace). Errors report the offending position.
Index parse_index(std::string_view text);
BlockLengths parse_blocks(std::string_view text);
/// Entries as "2'" or "-2" for barred.
SignedIndex parse_signed_index(std::string_view text);

std::string to_text(SignedInteger a);
std::string to_text(const SignedIndex& s);
std::string to_text(const Index& k);
std::string to_text(const BlockLengths& b);
std::string to_text(const SetPartition& p);
std::string to_text(const Atom& a);
std::string to_text(const Monomial& m);
std::string to_text(const FormalSum& f);
std::string to_text(const IdentityCertificate& c);

}  // namespace zb
