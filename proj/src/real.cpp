#include "zeta_blocks/real.hpp"

#include <cmath>
#include <memory>

#include "zeta_blocks/error.hpp"

namespace zb {

Real::Real(long precision) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(precision));
    mpfr_set_zero(v_, 1);
}

Real::Real(long value, long precision) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(precision));
    mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(double value, long precision) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(precision));
    mpfr_set_d(v_, value, MPFR_RNDN);
}

Real Real::parse(const std::string& decimal, long precision) {
    Real r(precision);
    if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        throw Error(ErrorKind::parse_error, "not a decimal number: '" + decimal + "'");
    }
    return r;
}

Real Real::pi(long precision) {
    Real r(precision);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::log2(long precision) {
    Real r(precision);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
}

Real Real::pow2(long exponent, long precision) {
    Real r(1L, precision);
    mpfr_mul_2si(r.v_, r.v_, exponent, MPFR_RNDN);
    return r;
}

Real::Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_precision(long precision) const {
    Real r(precision);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

void Real::raise_precision(const Real& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
}

Real& Real::operator+=(const Real& o) {
    raise_precision(o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o) {
    raise_precision(o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o) {
    raise_precision(o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o) {
    raise_precision(o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(long k) {
    mpfr_mul_si(v_, v_, k, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(unsigned long k) {
    mpfr_div_ui(v_, v_, k, MPFR_RNDN);
    return *this;
}

Real& Real::scale2(long k) {
    mpfr_mul_2si(v_, v_, k, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

Real Real::abs() const {
    Real r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real Real::inv_pow(long s) const {
    Real r(precision());
    mpfr_pow_si(r.v_, v_, -s, MPFR_RNDN);
    return r;
}

std::string Real::str(int digits) const {
    if (digits <= 0) digits = decimal_digits(precision());
    if (mpfr_zero_p(v_)) return "0";
    if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
    const auto size = static_cast<std::size_t>(mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_));
    std::string out(size + 1, '\0');
    mpfr_snprintf(out.data(), out.size(), "%.*Re", digits - 1, v_);
    out.resize(size);
    return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

int decimal_digits(long precision) {
    return static_cast<int>(std::ceil(static_cast<double>(precision) * 0.30102999566398120)) + 1;
}

}  // namespace zb
