#include "ddhooks/poly.hpp"

#include <sstream>
#include <utility>

#include "ddhooks/error.hpp"

namespace ddhooks {

ZPoly::ZPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator*=(const mpz_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return ZPoly(std::move(r));
}

void ZPoly::add_scaled(const ZPoly& o, const mpz_class& s, std::size_t shift) {
    if (o.is_zero() || s == 0) return;
    if (o.c_.size() + shift > c_.size()) c_.resize(o.c_.size() + shift);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        mpz_addmul(c_[i + shift].get_mpz_t(), o.c_[i].get_mpz_t(), s.get_mpz_t());
    trim();
}

void ZPoly::divexact(const mpz_class& s) {
    for (auto& c : c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
}

mpz_class ZPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return {};
    ZPoly r = *this;
    mpz_class g = content();
    if (r.leading() < 0) g = -g;
    r.divexact(g);
    return r;
}

mpq_class ZPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + mpq_class(c_[i]);
    return r;
}

std::string ZPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        mpz_class c = c_[i];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (c < 0) c = -c;
        if (i == 0 || c != 1) os << c.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

ZPoly primitive_prem(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw DomainError("pseudo-remainder by zero polynomial");
    ZPoly r = a;
    const mpz_class lb = b.leading();
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const mpz_class lr = r.leading();
        const auto shift = static_cast<std::size_t>(r.degree() - db);
        r *= lb;
        r.add_scaled(b, -lr, shift);
    }
    return r.primitive_part();
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return b.primitive_part() * b.content();
    if (b.is_zero()) return a.primitive_part() * a.content();
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    ZPoly u = a.primitive_part();
    ZPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        ZPoly r = primitive_prem(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    return u.primitive_part() * c;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    if (a.is_zero()) return ZPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<mpz_class> rem = a.coeffs();
    std::vector<mpz_class> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto& bc = b.coeffs();
    const mpz_class& lb = b.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
        mpz_class& top = rem[k + bc.size() - 1];
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j < bc.size(); ++j) mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), bc[j].get_mpz_t());
        quo[k] = std::move(q);
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return ZPoly(std::move(quo));
}

RationalFunction::RationalFunction(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = ZPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        const ZPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *divide_exact(num_, g);
            den_ = *divide_exact(den_, g);
        }
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (den_.leading() < 0) g = -g;
    if (g != 1) {
        num_.divexact(g);
        den_.divexact(g);
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    if (den_.is_one() && o.den_.is_one()) return *this;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw DomainError("division by zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

mpq_class RationalFunction::eval(const mpq_class& x) const {
    const mpq_class d = den_.eval(x);
    if (d == 0) throw DomainError("pole at evaluation point", rational_string(x));
    return num_.eval(x) / d;
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

XPolynomial::XPolynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

XPolynomial::XPolynomial(const std::vector<mpz_class>& coeffs) {
    for (const auto& c : coeffs) c_.emplace_back(c);
    trim();
}

XPolynomial::XPolynomial(const ZPoly& p) : XPolynomial(p.coeffs()) {}

void XPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class XPolynomial::sum() const {
    mpq_class s = 0;
    for (const auto& c : c_) s += c;
    return s;
}

mpq_class XPolynomial::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

bool XPolynomial::has_nonnegative_integer_coeffs() const {
    for (const auto& c : c_)
        if (c < 0 || c.get_den() != 1) return false;
    return true;
}

std::string rational_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    std::string s = text;
    // Accept decimal notation such as 0.9 as the exact fraction 9/10.
    const auto dot = s.find('.');
    if (dot != std::string::npos && s.find('/') == std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const std::size_t scale = s.size() - dot - 1;
        mpz_class den = 1;
        for (std::size_t i = 0; i < scale; ++i) den *= 10;
        mpz_class num;
        if (digits.empty() || num.set_str(digits, 10) != 0) throw InvalidArgument("bad rational", text);
        q = mpq_class(num, den);
        q.canonicalize();
        return q;
    }
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw InvalidArgument("bad rational", text);
    q.canonicalize();
    return q;
}

}  // namespace ddhooks
