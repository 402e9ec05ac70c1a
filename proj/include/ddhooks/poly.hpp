#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ddhooks {

/* Dense polynomial over Z in one variable x; coefficient i multiplies x^i. */
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(long c);  // NOLINT(google-explicit-constructor): constants promote freely
    explicit ZPoly(std::vector<mpz_class> coeffs);

    static ZPoly x() { return ZPoly(std::vector<mpz_class>{0, 1}); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    const mpz_class& leading() const { return c_.back(); }

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly& operator*=(const mpz_class& s);
    ZPoly operator-() const;
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(ZPoly a, const mpz_class& s) { return a *= s; }
    friend bool operator==(const ZPoly&, const ZPoly&) = default;

    /* this += s * o * x^shift */
    void add_scaled(const ZPoly& o, const mpz_class& s, std::size_t shift = 0);
    void divexact(const mpz_class& s);

    mpz_class content() const;
    ZPoly primitive_part() const;
    mpq_class eval(const mpq_class& x) const;
    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

/* Pseudo-remainder of a by b (b nonzero), made primitive. */
ZPoly primitive_prem(const ZPoly& a, const ZPoly& b);
/* Greatest common divisor with positive leading coefficient. */
ZPoly gcd(const ZPoly& a, const ZPoly& b);
/* Quotient when b divides a exactly over Z, otherwise nullopt. */
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);

/* num / den in lowest terms; den has positive leading coefficient. */
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(ZPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(ZPoly num, ZPoly den);

    static RationalFunction x() { return RationalFunction(ZPoly::x()); }

    const ZPoly& numerator() const noexcept { return num_; }
    const ZPoly& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction operator-() const;
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    mpq_class eval(const mpq_class& x) const;
    std::string to_string() const;

private:
    void normalize();
    ZPoly num_;
    ZPoly den_;
};

/* Dense polynomial in x with rational coefficients; the extracted coefficient of q^m. */
class XPolynomial {
public:
    XPolynomial() = default;
    explicit XPolynomial(std::vector<mpq_class> coeffs);
    explicit XPolynomial(const std::vector<mpz_class>& coeffs);
    explicit XPolynomial(const ZPoly& p);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
    mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
    mpq_class sum() const;
    mpq_class eval(const mpq_class& x) const;
    bool has_nonnegative_integer_coeffs() const;

    friend bool operator==(const XPolynomial&, const XPolynomial&) = default;

private:
    void trim();
    std::vector<mpq_class> c_;
};

/* "p/q" or "p" for integers. */
std::string rational_string(const mpq_class& q);
mpq_class parse_rational(const std::string& text);

}  // namespace ddhooks
