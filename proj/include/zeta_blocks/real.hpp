#pragma once

// Value-semantics wrapper over an mpfr_t with an explicit bit precision.
// Binary operations produce a result at the larger operand precision.

#include <mpfr.h>

#include <compare>
#include <string>

namespace zb {

class Real {
public:
    explicit Real(long precision = 256);
    Real(long value, long precision);
    Real(double value, long precision);

    static Real parse(const std::string& decimal, long precision);
    static Real pi(long precision);
    static Real log2(long precision);
    /// 2^exponent.
    static Real pow2(long exponent, long precision);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    /// Copy rounded to the given precision.
    Real with_precision(long precision) const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real& operator*=(long k);
    Real& operator/=(unsigned long k);
    /// Multiply by 2^k.
    Real& scale2(long k);

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    friend Real operator*(Real a, long k) { return a *= k; }
    friend Real operator*(long k, Real a) { return a *= k; }
    Real operator-() const;

    friend std::partial_ordering operator<=>(const Real& a, const Real& b);
    friend bool operator==(const Real& a, const Real& b);

    Real abs() const;
    /// this^(-s) for integer s.
    Real inv_pow(long s) const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Scientific decimal string with the given number of significant digits
    /// (0 = enough for the working precision).
    std::string str(int digits = 0) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    void raise_precision(const Real& o);
    mpfr_t v_;
};

Real max(const Real& a, const Real& b);

/// Decimal digits that carry the given bit precision.
int decimal_digits(long precision);

}  // namespace zb
