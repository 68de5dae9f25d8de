#include "zeta_blocks/io.hpp"

#include <cctype>
#include <sstream>

#include "zeta_blocks/error.hpp"

namespace zb {

namespace {

std::vector<int> positive_ints(const json& j, const char* what) {
    if (!j.is_array()) throw Error(ErrorKind::parse_error, std::string(what) + ": expected an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long>() < 1) {
            throw Error(ErrorKind::parse_error, std::string(what) + ": entries must be positive integers");
        }
        out.push_back(v.get<int>());
    }
    if (out.empty()) throw Error(ErrorKind::parse_error, std::string(what) + ": empty array");
    return out;
}

struct Token {
    std::string text;
    std::size_t position;
};

std::vector<Token> split_list(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) ++i;
        if (i >= text.size()) break;
        const std::size_t start = i;
        while (i < text.size() && text[i] != ',' && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        out.push_back({std::string(text.substr(start, i - start)), start});
    }
    return out;
}

int parse_int_token(const Token& t, bool allow_negative, const char* what) {
    std::size_t i = 0;
    bool negative = false;
    if (allow_negative && i < t.text.size() && t.text[i] == '-') {
        negative = true;
        ++i;
    }
    if (i >= t.text.size()) {
        throw Error(ErrorKind::parse_error,
                    std::string(what) + ": missing number at position " + std::to_string(t.position));
    }
    long value = 0;
    for (; i < t.text.size(); ++i) {
        const char c = t.text[i];
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw Error(ErrorKind::parse_error, std::string(what) + ": unexpected character '" +
                                                    std::string(1, c) + "' at position " +
                                                    std::to_string(t.position + i));
        }
        value = value * 10 + (c - '0');
        if (value > 1000000) {
            throw Error(ErrorKind::parse_error,
                        std::string(what) + ": number too large at position " + std::to_string(t.position));
        }
    }
    if (value == 0) {
        throw Error(ErrorKind::parse_error,
                    std::string(what) + ": zero entry at position " + std::to_string(t.position));
    }
    return static_cast<int>(negative ? -value : value);
}

std::vector<int> parse_positive_list(std::string_view text, const char* what) {
    std::vector<int> out;
    for (const Token& t : split_list(text)) out.push_back(parse_int_token(t, false, what));
    if (out.empty()) throw Error(ErrorKind::parse_error, std::string(what) + ": empty list");
    return out;
}

template <class Seq, class F>
std::string joined(const Seq& seq, F render, const char* sep = ",") {
    std::string out;
    bool first = true;
    for (const auto& x : seq) {
        if (!first) out += sep;
        out += render(x);
        first = false;
    }
    return out;
}

}  // namespace

void to_json(json& j, const Index& k) { j = k.parts; }
void from_json(const json& j, Index& k) { k.parts = positive_ints(j, "index"); }
void to_json(json& j, const BlockLengths& b) { j = b.lengths; }
void from_json(const json& j, BlockLengths& b) { b.lengths = positive_ints(j, "blocks"); }

void to_json(json& j, const SignedIndex& s) { j = s.to_signed(); }

void from_json(const json& j, SignedIndex& s) {
    if (!j.is_array()) throw Error(ErrorKind::parse_error, "signed index: expected an array");
    std::vector<int> values;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long>() == 0) {
            throw Error(ErrorKind::parse_error, "signed index: entries must be nonzero integers");
        }
        values.push_back(v.get<int>());
    }
    s = SignedIndex::from_signed(values);
}

void to_json(json& j, const SetPartition& p) { j = p.parts; }

void from_json(const json& j, SetPartition& p) {
    if (!j.is_array()) throw Error(ErrorKind::parse_error, "set partition: expected an array of arrays");
    p.parts.clear();
    p.n = 0;
    for (const auto& part : j) {
        p.parts.push_back(positive_ints(part, "set partition part"));
        p.n += static_cast<int>(p.parts.back().size());
    }
    p.validate();
    p.canonicalize();
}

void to_json(json& j, const Atom& a) {
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, SingleZeta>) {
                j = json{{"kind", "zeta"}, {"arg", x.arg.to_signed()}};
            } else if constexpr (std::is_same_v<T, FormalMzv>) {
                j = json{{"kind", "mzv"}, {"index", x.index.to_signed()}};
            } else if constexpr (std::is_same_v<T, FormalMzsv>) {
                j = json{{"kind", "mzsv"}, {"index", x.index.parts}};
            } else {
                j = json{{"kind", "star2s"}, {"m", x.m}};
            }
        },
        a);
}

void from_json(const json& j, Atom& a) {
    if (!j.is_object() || !j.contains("kind")) throw Error(ErrorKind::parse_error, "atom: missing kind");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "zeta") {
        a = make_single_zeta(SignedInteger::from_signed(j.at("arg").get<int>()));
    } else if (kind == "mzv") {
        a = FormalMzv{j.at("index").get<SignedIndex>()};
    } else if (kind == "mzsv") {
        a = make_mzsv(j.at("index").get<Index>());
    } else if (kind == "star2s") {
        a = make_star_twos(j.at("m").get<int>());
    } else {
        throw Error(ErrorKind::parse_error, "atom: unknown kind '" + kind + "'");
    }
}

void to_json(json& j, const FormalSum& f) {
    j = json::array();
    for (const auto& [mono, coeff] : f.terms()) {
        json atoms = json::array();
        for (const Atom& a : mono.atoms) atoms.push_back(a);
        j.push_back(json{{"coeff", rational_to_string(coeff)}, {"monomial", atoms}});
    }
}

void from_json(const json& j, FormalSum& f) {
    if (!j.is_array()) throw Error(ErrorKind::parse_error, "formal sum: expected an array");
    f = FormalSum();
    for (const auto& term : j) {
        std::vector<Atom> atoms;
        for (const auto& a : term.at("monomial")) atoms.push_back(a.get<Atom>());
        f.add(Monomial::of(std::move(atoms)), rational_from_string(term.at("coeff").get<std::string>()));
    }
}

void to_json(json& j, const NumericRecord& r) {
    j = json{{"lhs", r.lhs},           {"rhs", r.rhs},   {"residual", r.residual},
             {"bound", r.bound},       {"rigorous", r.rigorous}, {"pass", r.pass}};
}

void from_json(const json& j, NumericRecord& r) {
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    r.residual = j.at("residual").get<std::string>();
    r.bound = j.at("bound").get<std::string>();
    r.rigorous = j.at("rigorous").get<bool>();
    r.pass = j.at("pass").get<bool>();
}

void to_json(json& j, const IdentityCertificate& c) {
    j = json{{"blocks", c.blocks},
             {"circ", std::string(1, circ_symbol(c.circ))},
             {"lhs", c.lhs},
             {"rhs", c.rhs},
             {"numeric", c.numeric ? json(*c.numeric) : json(nullptr)}};
}

void from_json(const json& j, IdentityCertificate& c) {
    c.blocks = j.at("blocks").get<BlockLengths>();
    const std::string circ = j.at("circ").get<std::string>();
    if (circ != "," && circ != "+") throw Error(ErrorKind::parse_error, "certificate: circ must be ',' or '+'");
    c.circ = circ == "," ? Circ::comma : Circ::plus;
    if (c.circ != circ_rule(static_cast<int>(c.blocks.size()), c.blocks.total())) {
        throw Error(ErrorKind::parse_error, "certificate: circ inconsistent with block parity");
    }
    c.lhs.clear();
    for (const auto& k : j.at("lhs")) {
        Index idx = k.get<Index>();
        if (!idx.convergent()) throw Error(ErrorKind::parse_error, "certificate: divergent lhs index");
        c.lhs.push_back(std::move(idx));
    }
    c.rhs = j.at("rhs").get<FormalSum>();
    const json& numeric = j.at("numeric");
    if (numeric.is_null()) {
        c.numeric.reset();
    } else {
        c.numeric = numeric.get<NumericRecord>();
    }
}

Index parse_index(std::string_view text) { return Index{parse_positive_list(text, "index")}; }

BlockLengths parse_blocks(std::string_view text) {
    return BlockLengths{parse_positive_list(text, "blocks")};
}

SignedIndex parse_signed_index(std::string_view text) {
    SignedIndex s;
    for (Token t : split_list(text)) {
        bool barred = false;
        if (!t.text.empty() && t.text.back() == '\'') {
            barred = true;
            t.text.pop_back();
        }
        const int v = parse_int_token(t, !barred, "signed index");
        s.entries.push_back(barred ? SignedInteger{v, true} : SignedInteger::from_signed(v));
    }
    if (s.entries.empty()) throw Error(ErrorKind::parse_error, "signed index: empty list");
    return s;
}

std::string to_text(SignedInteger a) {
    return std::to_string(a.magnitude) + (a.barred ? "'" : "");
}

std::string to_text(const SignedIndex& s) {
    return "(" + joined(s.entries, [](SignedInteger a) { return to_text(a); }) + ")";
}

std::string to_text(const Index& k) {
    return "(" + joined(k.parts, [](int p) { return std::to_string(p); }) + ")";
}

std::string to_text(const BlockLengths& b) {
    return "(" + joined(b.lengths, [](int p) { return std::to_string(p); }) + ")";
}

std::string to_text(const SetPartition& p) {
    return joined(p.parts, [](const std::vector<int>& part) {
        return joined(part, [](int x) { return std::to_string(x); }, " ");
    }, " | ");
}

std::string to_text(const Atom& a) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, SingleZeta>) {
                return "zeta(" + to_text(x.arg) + ")";
            } else if constexpr (std::is_same_v<T, FormalMzv>) {
                return "zeta" + to_text(x.index);
            } else if constexpr (std::is_same_v<T, FormalMzsv>) {
                return "zeta*" + to_text(x.index);
            } else {
                return "zeta*({2}^" + std::to_string(x.m) + ")";
            }
        },
        a);
}

std::string to_text(const Monomial& m) {
    if (m.atoms.empty()) return "1";
    return joined(m.atoms, [](const Atom& a) { return to_text(a); }, "*");
}

std::string to_text(const FormalSum& f) {
    if (f.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : f.terms()) {
        const bool negative = coeff < 0;
        const Rational mag = negative ? Rational(-coeff) : coeff;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string c = boost::multiprecision::denominator(mag) == 1
                            ? boost::multiprecision::numerator(mag).str()
                            : rational_to_string(mag);
        if (mono.atoms.empty()) {
            out += c;
        } else {
            if (c != "1") out += c + "*";
            out += to_text(mono);
        }
    }
    return out;
}

std::string to_text(const IdentityCertificate& c) {
    std::ostringstream os;
    os << "blocks " << to_text(c.blocks) << ", circ '" << circ_symbol(c.circ) << "'\n";
    os << "lhs:";
    bool first = true;
    for (const Index& k : c.lhs) {
        os << (first ? " " : " + ") << "zeta*" << to_text(k);
        first = false;
    }
    os << "\nrhs: " << to_text(c.rhs) << "\n";
    if (c.numeric) {
        const NumericRecord& r = *c.numeric;
        os << "numeric: lhs " << r.lhs << "\n"
           << "         rhs " << r.rhs << "\n"
           << "         residual " << r.residual << " (bound " << r.bound << ", "
           << (r.rigorous ? "rigorous" : "heuristic") << ")\n"
           << "         " << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    return os.str();
}

}  // namespace zb
