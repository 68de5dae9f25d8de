#pragma once

// Set partitions of {1..n} and the exact combinatorial sums built on them.

#include <compare>
#include <functional>
#include <vector>

#include "zeta_blocks/numbers.hpp"

namespace zb {

/// Partition of {1..n}. Canonical form: elements ascending within each part,
/// parts ordered by their minimum element.
struct SetPartition {
    int n = 0;
    std::vector<std::vector<int>> parts;

    std::size_t size() const { return parts.size(); }
    bool has_even_part() const;
    void canonicalize();
    /// Throws invalid_input unless the parts are disjoint, nonempty and cover {1..n}.
    void validate() const;

    auto operator<=>(const SetPartition&) const = default;
};

inline constexpr int kMaxEnumerate = 12;
inline constexpr int kMaxCoefficient = 9;
inline constexpr int kMaxGSum = 10;

/// Visits every partition of {1..n} in canonical form (restricted growth
/// string order) without materialising the list.
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit);

std::vector<SetPartition> enumerate_set_partitions(int n);
std::vector<SetPartition> enumerate_odd_partitions(int n);

/// r_i = union of q_j over j in t_i, where q's parts are numbered 1..#q in
/// canonical order.
SetPartition flatten(const SetPartition& q, const SetPartition& t);

/// c_r = sum over (q,t) flattening to r of
///   2^{#q} (-1)^{#q-#t} prod #q_i! prod (#t_j - 1)!,
/// enumerated as independent refinements of each part of r.
Rational coefficient_c(const SetPartition& r);

/// g(n) = sum over Part(n) of (-2)^{#w} prod #w_l! (#w - 1)!.
Rational g_bruteforce(int n);

/// Dense polynomial with exact rational coefficients; index = degree.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coefficient(int k) const;
    Rational evaluate(const Rational& x) const;

    RationalPolynomial& operator+=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const Rational& scalar);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
    bool operator==(const RationalPolynomial&) const = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// g(n,x) = sum over Part(n) of x^{#w} prod #w_l! (#w - 1)!.
RationalPolynomial g_poly(int n);

struct OrderedOrderedCount {
    Integer from_partitions;  // sum over #w = i of i! prod #w_l!
    Integer from_bars;        // n! C(n-1, i-1)
};

OrderedOrderedCount ordered_ordered_count(int n, int i);

}  // namespace zb
