#pragma once

#include <algorithm>

#include <gmpxx.h>

#include "cubiclat/errors.hpp"

namespace cubiclat {

// Closed rational interval [lo, hi].  All operations return enclosures of the
// exact image, so chains of QInterval arithmetic are sound outer bounds.
struct QInterval {
    mpq_class lo;
    mpq_class hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(mpq_class l, mpq_class h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi)
            throw internal_error("QInterval: lo > hi");
    }
    explicit QInterval(const mpq_class& point) : lo(point), hi(point) {}

    mpq_class width() const { return hi - lo; }
    bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }

    friend QInterval operator+(const QInterval& a, const QInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend QInterval operator-(const QInterval& a, const QInterval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend QInterval operator-(const QInterval& a) { return {-a.hi, -a.lo}; }
    friend QInterval operator*(const QInterval& a, const QInterval& b) {
        mpq_class p1 = a.lo * b.lo, p2 = a.lo * b.hi;
        mpq_class p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        mpq_class lo = p1, hi = p1;
        for (const mpq_class* p : {&p2, &p3, &p4}) {
            if (*p < lo) lo = *p;
            if (*p > hi) hi = *p;
        }
        return {lo, hi};
    }
    friend QInterval operator*(const mpq_class& s, const QInterval& a) {
        return QInterval(s) * a;
    }

    // Division requires the divisor interval to exclude zero.
    friend QInterval operator/(const QInterval& a, const QInterval& b) {
        if (b.contains_zero())
            throw internal_error("QInterval division by interval containing zero");
        mpq_class p1 = a.lo / b.lo, p2 = a.lo / b.hi;
        mpq_class p3 = a.hi / b.lo, p4 = a.hi / b.hi;
        mpq_class lo = p1, hi = p1;
        for (const mpq_class* p : {&p2, &p3, &p4}) {
            if (*p < lo) lo = *p;
            if (*p > hi) hi = *p;
        }
        return {lo, hi};
    }
};

inline QInterval square(const QInterval& a) {
    // tighter than a*a: the image of x^2 never dips below 0
    mpq_class l2 = a.lo * a.lo, h2 = a.hi * a.hi;
    if (a.contains_zero())
        return {mpq_class(0), std::max(l2, h2)};
    return {std::min(l2, h2), std::max(l2, h2)};
}

} // namespace cubiclat
