#include "zeta_blocks/partitions.hpp"

#include <algorithm>
#include <string>

#include "zeta_blocks/error.hpp"

namespace zb {

Integer factorial(int n) {
    Integer r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

std::string rational_to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

Rational rational_from_string(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::parse_error, "rational: zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw Error(ErrorKind::parse_error, "rational: cannot parse '" + text + "'");
    }
}

bool SetPartition::has_even_part() const {
    return std::any_of(parts.begin(), parts.end(),
                       [](const auto& p) { return p.size() % 2 == 0; });
}

void SetPartition::canonicalize() {
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

void SetPartition::validate() const {
    std::vector<int> seen(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
    int count = 0;
    for (const auto& p : parts) {
        if (p.empty()) throw Error(ErrorKind::invalid_input, "set partition: empty part");
        for (int x : p) {
            if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]++) {
                throw Error(ErrorKind::invalid_input,
                            "set partition: element " + std::to_string(x) +
                                " out of range or repeated");
            }
            ++count;
        }
    }
    if (count != n) throw Error(ErrorKind::invalid_input, "set partition: parts do not cover {1..n}");
}

namespace {

void check_budget(int n, int limit, const char* what) {
    if (n < 1 || n > limit) {
        throw Error(ErrorKind::budget_exceeded,
                    std::string(what) + ": n = " + std::to_string(n) + " outside 1.." +
                        std::to_string(limit));
    }
}

// Restricted growth strings a[0..n): a[0] = 0, a[i] <= 1 + max(a[0..i)).
void visit_rgs(int n, const std::function<void(const SetPartition&)>& visit) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
    SetPartition p;
    p.n = n;
    while (true) {
        const int blocks = prefix_max.back() + 1;
        p.parts.assign(static_cast<std::size_t>(blocks), {});
        for (int i = 0; i < n; ++i) p.parts[static_cast<std::size_t>(a[i])].push_back(i + 1);
        visit(p);

        int i = n - 1;
        while (i > 0 && a[i] > prefix_max[i - 1]) --i;
        if (i == 0) return;
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (int j = i + 1; j < n; ++j) {
            a[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

}  // namespace

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit) {
    check_budget(n, kMaxEnumerate, "set partitions");
    visit_rgs(n, visit);
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

std::vector<SetPartition> enumerate_odd_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_set_partition(n, [&](const SetPartition& p) {
        if (!p.has_even_part()) out.push_back(p);
    });
    return out;
}

SetPartition flatten(const SetPartition& q, const SetPartition& t) {
    q.validate();
    if (t.n != static_cast<int>(q.size())) {
        throw Error(ErrorKind::invalid_input, "flatten: t must partition {1..#q}");
    }
    t.validate();
    SetPartition r;
    r.n = q.n;
    for (const auto& ti : t.parts) {
        std::vector<int> part;
        for (int j : ti) {
            const auto& qj = q.parts[static_cast<std::size_t>(j - 1)];
            part.insert(part.end(), qj.begin(), qj.end());
        }
        r.parts.push_back(std::move(part));
    }
    r.canonicalize();
    return r;
}

Rational coefficient_c(const SetPartition& r) {
    r.validate();
    if (r.n < 1) throw Error(ErrorKind::invalid_input, "coefficient_c: empty ground set");
    if (r.n > kMaxCoefficient) {
        throw Error(ErrorKind::budget_exceeded,
                    "coefficient_c: ground set " + std::to_string(r.n) + " exceeds " +
                        std::to_string(kMaxCoefficient));
    }
    // Refinements of each part r_j are partitions of a set of size #r_j; only
    // the block sizes matter for the weight, so enumerate Part(#r_j).
    std::vector<std::vector<SetPartition>> refinements;
    for (const auto& part : r.parts) {
        refinements.push_back(enumerate_set_partitions(static_cast<int>(part.size())));
    }

    const int t_count = static_cast<int>(r.size());
    Rational total = 0;
    std::vector<std::size_t> choice(refinements.size(), 0);
    while (true) {
        int q_count = 0;
        Integer weight = 1;
        for (std::size_t j = 0; j < refinements.size(); ++j) {
            const SetPartition& tj = refinements[j][choice[j]];
            q_count += static_cast<int>(tj.size());
            for (const auto& block : tj.parts) weight *= factorial(static_cast<int>(block.size()));
            weight *= factorial(static_cast<int>(tj.size()) - 1);
        }
        weight <<= q_count;
        if ((q_count - t_count) % 2 != 0) weight = -weight;
        total += weight;

        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == refinements[k].size()) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return total;
}

Rational g_bruteforce(int n) {
    check_budget(n, kMaxGSum, "g_bruteforce");
    Integer total = 0;
    for_each_set_partition(n, [&](const SetPartition& w) {
        Integer term = factorial(static_cast<int>(w.size()) - 1);
        for (const auto& part : w.parts) term *= factorial(static_cast<int>(part.size()));
        term <<= static_cast<unsigned>(w.size());
        if (w.size() % 2 != 0) term = -term;
        total += term;
    });
    return Rational(total);
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    trim();
}

Rational RationalPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& other) {
    if (coeffs_.empty() || other.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial g_poly(int n) {
    check_budget(n, kMaxGSum, "g_poly");
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for_each_set_partition(n, [&](const SetPartition& w) {
        Integer term = factorial(static_cast<int>(w.size()) - 1);
        for (const auto& part : w.parts) term *= factorial(static_cast<int>(part.size()));
        coeffs[w.size()] += term;
    });
    return RationalPolynomial(std::move(coeffs));
}

OrderedOrderedCount ordered_ordered_count(int n, int i) {
    check_budget(n, kMaxGSum, "ordered_ordered_count");
    if (i < 1 || i > n) {
        throw Error(ErrorKind::invalid_input, "ordered_ordered_count: need 1 <= i <= n");
    }
    OrderedOrderedCount out;
    for_each_set_partition(n, [&](const SetPartition& w) {
        if (static_cast<int>(w.size()) != i) return;
        Integer term = factorial(i);
        for (const auto& part : w.parts) term *= factorial(static_cast<int>(part.size()));
        out.from_partitions += term;
    });
    out.from_bars = factorial(n) * binomial(n - 1, i - 1);
    return out;
}

}  // namespace zb
