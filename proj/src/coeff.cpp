#include "ddhooks/coeff.hpp"

namespace ddhooks {

namespace {
constexpr std::size_t kScaledMargin = 16;
}

std::shared_ptr<const SymbolicRing> symbolic_ring(Radicand kind) {
    return std::make_shared<const SymbolicRing>(RationalFunction::x(), kind);
}

std::shared_ptr<const RationalRing> rational_ring(const mpq_class& x, Radicand kind) {
    return std::make_shared<const RationalRing>(x, kind);
}

std::shared_ptr<const JetRing> jet_ring(Radicand kind) {
    return std::make_shared<const JetRing>(Jet(1, 1, 0), kind);
}

std::shared_ptr<const ScaledRing> scaled_ring(const mpq_class& x, Radicand kind, std::size_t span) {
    return std::make_shared<const ScaledRing>(x, kind, span);
}

ScaledRing::ScaledRing(const mpq_class& x, Radicand kind, std::size_t span) : x_(x), kind_(kind) {
    x_.canonicalize();
    a_ = x_.get_num();
    b_ = x_.get_den();
    D_ = kind == Radicand::OneMinusXSquared ? mpz_class(b_ * b_ - a_ * a_) : mpz_class(b_ * (b_ - a_));
    bpow_.emplace_back(1);
    for (unsigned k = 1; k <= 64; ++k) bpow_.push_back(bpow_.back() * b_);
    mpz_pow_ui(L_.get_mpz_t(), b_.get_mpz_t(), static_cast<unsigned long>(span + kScaledMargin));
}

const mpz_class& ScaledRing::bpow(unsigned k) const {
    if (k >= bpow_.size()) throw DomainError("factor denominator exponent too large", std::to_string(k));
    return bpow_[k];
}

ScaledRing::Factor ScaledRing::f_add(const Factor& p, const Factor& q) const {
    const unsigned d = std::max(p.delta, q.delta);
    const mpz_class& sp = bpow(d - p.delta);
    const mpz_class& sq = bpow(d - q.delta);
    return {p.e * sp + q.e * sq, p.o * sp + q.o * sq, d};
}

ScaledRing::Factor ScaledRing::f_sub(const Factor& p, const Factor& q) const { return f_add(p, f_neg(q)); }

ScaledRing::Factor ScaledRing::f_mul(const Factor& p, const Factor& q) const {
    return {p.e * q.e + p.o * q.o * D_, p.e * q.o + p.o * q.e, p.delta + q.delta};
}

void ScaledRing::divexact_checked(mpz_class& v, const mpz_class& d) const {
    if (d == 1) return;
    if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()))
        throw NonCancellation("scaled coefficient left the exact lattice");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
}

ScaledRing::Elem ScaledRing::from_factor(const Factor& f) const {
    Elem r{f.e * L_, f.o * L_};
    divexact_checked(r.e, bpow(f.delta));
    divexact_checked(r.o, bpow(f.delta));
    return r;
}

ScaledRing::Elem ScaledRing::mul(const Elem& p, const Elem& q) const {
    Elem r{p.e * q.e + p.o * q.o * D_, p.e * q.o + p.o * q.e};
    divexact_checked(r.e, L_);
    divexact_checked(r.o, L_);
    return r;
}

ScaledRing::Elem ScaledRing::scale(const Factor& f, const Elem& v) const {
    Elem r;
    accumulate(r, f, v, false);
    return r;
}

void ScaledRing::accumulate(Elem& dst, const Factor& f, const Elem& src, bool subtract) const {
    if (f.o == 0 && f.delta == 0 && (f.e == 1 || f.e == -1)) {
        const bool sub = subtract != (f.e == -1);
        if (sub) sub_from(dst, src);
        else add_to(dst, src);
        return;
    }
    mpz_class te, to;
    if (f.o == 0) {
        mpz_mul(te.get_mpz_t(), f.e.get_mpz_t(), src.e.get_mpz_t());
        if (src.o != 0) mpz_mul(to.get_mpz_t(), f.e.get_mpz_t(), src.o.get_mpz_t());
    } else {
        te = f.e * src.e + f.o * src.o * D_;
        to = f.e * src.o + f.o * src.e;
    }
    const mpz_class& den = bpow(f.delta);
    divexact_checked(te, den);
    divexact_checked(to, den);
    if (subtract) {
        dst.e -= te;
        dst.o -= to;
    } else {
        dst.e += te;
        dst.o += to;
    }
}

ScaledRing::Elem ScaledRing::div_exact(const Elem& v, const Factor& f) const {
    Elem r;
    mpz_class norm;
    if (f.o == 0) {
        r = {v.e * bpow(f.delta), v.o * bpow(f.delta)};
        norm = f.e;
    } else {
        r = {(v.e * f.e - v.o * f.o * D_) * bpow(f.delta), (v.o * f.e - v.e * f.o) * bpow(f.delta)};
        norm = f.e * f.e - f.o * f.o * D_;
    }
    if (norm == 0) throw DomainError("division by zero factor");
    if (!mpz_divisible_p(r.e.get_mpz_t(), norm.get_mpz_t()) || !mpz_divisible_p(r.o.get_mpz_t(), norm.get_mpz_t()))
        throw NonCancellation("exact division failed at the specialization point");
    mpz_divexact(r.e.get_mpz_t(), r.e.get_mpz_t(), norm.get_mpz_t());
    mpz_divexact(r.o.get_mpz_t(), r.o.get_mpz_t(), norm.get_mpz_t());
    return r;
}

mpq_class ScaledRing::even_value(const Elem& v) const {
    mpq_class r(v.e, L_);
    r.canonicalize();
    return r;
}

mpq_class ScaledRing::odd_value(const Elem& v) const {
    mpq_class r(v.o * b_, L_);
    r.canonicalize();
    return r;
}

}  // namespace ddhooks
