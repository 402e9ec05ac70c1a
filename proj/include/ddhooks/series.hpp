#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ddhooks/coeff.hpp"
#include "ddhooks/error.hpp"

namespace ddhooks {

/*
 * Power series in one variable w truncated above w^order, with coefficients
 * in a ring from coeff.hpp.  The ring object is shared by every series built
 * from it.
 */
template <class Ring>
class TruncatedSeries {
public:
    using Elem = typename Ring::Elem;
    using Factor = typename Ring::Factor;

    TruncatedSeries(std::shared_ptr<const Ring> ring, std::size_t order)
        : ring_(std::move(ring)), c_(order + 1, ring_->zero()) {}

    static TruncatedSeries one(std::shared_ptr<const Ring> ring, std::size_t order) {
        TruncatedSeries s(std::move(ring), order);
        s.c_[0] = s.ring_->one();
        return s;
    }

    std::size_t order() const noexcept { return c_.size() - 1; }
    const Ring& ring() const noexcept { return *ring_; }
    const std::shared_ptr<const Ring>& ring_ptr() const noexcept { return ring_; }
    const Elem& operator[](std::size_t i) const { return c_.at(i); }
    Elem& at(std::size_t i) { return c_.at(i); }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }

    /* *= (1 - a w^e) */
    void mul_binomial(const Factor& a, std::size_t e) {
        if (e == 0) throw InvalidArgument("binomial factor needs a positive exponent");
        if (ring_->f_is_zero(a) || e > order()) return;
        for (std::size_t m = order(); m >= e; --m) ring_->fms(c_[m], a, c_[m - e]);
    }

    /* /= (1 - a w^e) */
    void div_binomial(const Factor& a, std::size_t e) {
        if (e == 0) throw InvalidArgument("binomial factor needs a positive exponent");
        if (ring_->f_is_zero(a) || e > order()) return;
        for (std::size_t m = e; m <= order(); ++m) ring_->fma(c_[m], a, c_[m - e]);
    }

    /* a w^e * this, as a new series. */
    TruncatedSeries shifted(const Factor& a, std::size_t e) const {
        TruncatedSeries r(ring_, order());
        for (std::size_t m = e; m <= order(); ++m) ring_->fma(r.c_[m], a, c_[m - e]);
        return r;
    }

    /* this += a w^e * o */
    void add_shifted(const TruncatedSeries& o, const Factor& a, std::size_t e) {
        check_order(o);
        for (std::size_t m = e; m <= order(); ++m) ring_->fma(c_[m], a, o.c_[m - e]);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t m = 0; m <= order(); ++m) ring_->add_to(c_[m], o.c_[m]);
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t m = 0; m <= order(); ++m) ring_->sub_from(c_[m], o.c_[m]);
        return *this;
    }
    void scale_in_place(const Factor& f) {
        for (auto& c : c_) c = ring_->scale(f, c);
    }
    void div_exact_in_place(const Factor& f) {
        for (auto& c : c_) c = ring_->div_exact(c, f);
    }

    /* Throws NonCancellation unless every y-odd part vanished. */
    void require_even(const std::string& what) const {
        for (std::size_t m = 0; m <= order(); ++m)
            if (!ring_->odd_is_zero(c_[m]))
                throw NonCancellation("y-odd part survived in " + what, "coefficient " + std::to_string(m));
    }

    void check_order(const TruncatedSeries& o) const {
        if (o.order() != order())
            throw OrderMismatch("series orders differ",
                                std::to_string(order()) + " vs " + std::to_string(o.order()));
    }

private:
    std::shared_ptr<const Ring> ring_;
    std::vector<Elem> c_;
};

template <class Ring>
TruncatedSeries<Ring> series_add(const TruncatedSeries<Ring>& a, const TruncatedSeries<Ring>& b) {
    TruncatedSeries<Ring> r = a;
    r += b;
    return r;
}

template <class Ring>
TruncatedSeries<Ring> series_sub(const TruncatedSeries<Ring>& a, const TruncatedSeries<Ring>& b) {
    TruncatedSeries<Ring> r = a;
    r -= b;
    return r;
}

template <class Ring>
TruncatedSeries<Ring> series_scale(const TruncatedSeries<Ring>& a, const typename Ring::Factor& f) {
    TruncatedSeries<Ring> r = a;
    r.scale_in_place(f);
    return r;
}

template <class Ring>
TruncatedSeries<Ring> series_mul(const TruncatedSeries<Ring>& a, const TruncatedSeries<Ring>& b) {
    a.check_order(b);
    const Ring& ring = a.ring();
    TruncatedSeries<Ring> r(a.ring_ptr(), a.order());
    const std::size_t n = a.order();
    for (std::size_t i = 0; i <= n; ++i) {
        if (ring.is_zero(a[i])) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (ring.is_zero(b[j])) continue;
            ring.fma_elem(r.at(i + j), a[i], b[j]);
        }
    }
    return r;
}

}  // namespace ddhooks
