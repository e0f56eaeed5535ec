#include "cubiclat/cubic_order.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace cubiclat {

std::string family_name(Family f) {
    switch (f) {
        case Family::shanks: return "shanks";
        case Family::ennola: return "ennola";
        case Family::family3: return "family3";
    }
    throw internal_error("family_name: bad enum value");
}

Family family_from_name(const std::string& name) {
    if (name == "shanks") return Family::shanks;
    if (name == "ennola") return Family::ennola;
    if (name == "family3") return Family::family3;
    throw parameter_error("unknown family '" + name + "' (expected shanks, ennola or family3)");
}

std::ostream& operator<<(std::ostream& os, const OrderElement& e) {
    return os << "(" << e.x << "," << e.y << "," << e.z << ")";
}

std::ostream& operator<<(std::ostream& os, const FieldVector& v) {
    return os << "(" << v.x << "," << v.y << "," << v.z << ")";
}

namespace {

// ---- generic arithmetic in Z[rho] / K, shared by mpz and mpq paths ----

template <class T>
struct Triple {
    T x, y, z;
};

// product of (x + y r + z r^2)(X + Y r + Z r^2) reduced by
// r^3 = A r^2 + B r + C  (hence r^4 = (A^2+B) r^2 + (AB+C) r + AC)
template <class T>
Triple<T> reduced_mul(const mpz_class& A, const mpz_class& B, const mpz_class& C,
                      const T& x, const T& y, const T& z,
                      const T& X, const T& Y, const T& Z) {
    T p0 = x * X;
    T p1 = x * Y + y * X;
    T p2 = x * Z + y * Y + z * X;
    T p3 = y * Z + z * Y;
    T p4 = z * Z;

    mpz_class r4c2 = A * A + B;
    mpz_class r4c1 = A * B + C;
    mpz_class r4c0 = A * C;

    Triple<T> out;
    out.x = p0 + p3 * C + p4 * r4c0;
    out.y = p1 + p3 * B + p4 * r4c1;
    out.z = p2 + p3 * A + p4 * r4c2;
    return out;
}

// elementary symmetric functions of the conjugates of x + y r + z r^2, read
// off the multiplication-by-element matrix on the basis 1, r, r^2
template <class T>
void sym3(const mpz_class& A, const mpz_class& B, const mpz_class& C,
          const T& x, const T& y, const T& z, T& e1, T& e2, T& e3) {
    // columns: elem*1, elem*r, elem*r^2
    T m00 = x, m10 = y, m20 = z;
    T m01 = z * C, m11 = x + z * B, m21 = y + z * A;
    T m02 = y * C + z * (A * C);
    T m12 = y * B + z * (A * B + C);
    T m22 = x + y * A + z * (A * A + B);

    e1 = m00 + m11 + m22;
    e2 = (m00 * m11 - m01 * m10) + (m00 * m22 - m02 * m20) + (m11 * m22 - m12 * m21);
    e3 = m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) +
         m02 * (m10 * m21 - m11 * m20);
}

// ---- dense univariate rational polynomials, ascending degree ----

using Poly = std::vector<mpq_class>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpq_class poly_eval(const Poly& p, const mpq_class& t) {
    mpq_class acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(mpq_class(long(i)) * p[i]);
    poly_trim(d);
    return d;
}

// remainder of num / den over Q
Poly poly_rem(Poly num, const Poly& den) {
    poly_trim(num);
    if (den.empty()) throw internal_error("poly_rem: zero divisor");
    while (num.size() >= den.size()) {
        mpq_class q = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
        num.pop_back();
        poly_trim(num);
    }
    return num;
}

std::vector<Poly> sturm_chain(const Poly& f) {
    std::vector<Poly> chain;
    chain.push_back(f);
    chain.push_back(poly_derivative(f));
    while (!chain.back().empty() && chain.back().size() > 1) {
        Poly r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const mpq_class& t) {
    int vars = 0, prev = 0;
    for (const Poly& p : chain) {
        int s = sgn(poly_eval(p, t));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

} // namespace

CubicOrder::CubicOrder(Family family, long a) : family_(family), a_(a) {
    if (a < 7)
        throw parameter_error("cubic family parameter a must be >= 7, got " + std::to_string(a));
    mpz_class az(a);
    switch (family) {
        case Family::shanks:  // x^3 - a x^2 - (a+3) x - 1
            c2_ = -az;
            c1_ = -(az + 3);
            c0_ = -1;
            rho_root_index_ = 3;
            break;
        case Family::ennola:  // x^3 + (a-1) x^2 - a x - 1
            c2_ = az - 1;
            c1_ = -az;
            c0_ = -1;
            rho_root_index_ = 1;
            break;
        case Family::family3:  // x^3 - (2a+2) x^2 + a(a+2) x - 1
            c2_ = -(2 * az + 2);
            c1_ = az * (az + 2);
            c0_ = -1;
            rho_root_index_ = 1;
            break;
    }
    isolate_all_roots();
}

int CubicOrder::sign_at(const mpq_class& t) const {
    mpq_class v = ((t + c2_) * t + c1_) * t + c0_;
    return sgn(v);
}

void CubicOrder::isolate_all_roots() {
    Poly f = {mpq_class(c0_), mpq_class(c1_), mpq_class(c2_), mpq_class(1)};
    std::vector<Poly> chain = sturm_chain(f);

    // Cauchy bound for a monic cubic
    mpq_class b2 = abs(mpq_class(c2_)), b1 = abs(mpq_class(c1_)), b0 = abs(mpq_class(c0_));
    mpq_class bound = 1 + std::max({b2, b1, b0});

    auto count_in = [&](const mpq_class& lo, const mpq_class& hi) {
        return sign_variations(chain, lo) - sign_variations(chain, hi);
    };

    if (count_in(-bound, bound) != 3)
        throw internal_error("Sturm count of the minimal polynomial is not 3");

    struct Seg {
        mpq_class lo, hi;
        int count;
    };
    std::vector<Seg> stack{{-bound, bound, 3}};
    std::vector<Seg> isolated;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            isolated.push_back(s);
            continue;
        }
        mpq_class mid = (s.lo + s.hi) / 2;
        int left = count_in(s.lo, mid);
        stack.push_back({s.lo, mid, left});
        stack.push_back({mid, s.hi, s.count - left});
    }
    if (isolated.size() != 3)
        throw internal_error("root isolation did not produce 3 intervals");
    std::sort(isolated.begin(), isolated.end(),
              [](const Seg& a, const Seg& b) { return a.lo < b.lo; });
    for (int i = 0; i < 3; ++i) roots_[i] = {isolated[i].lo, isolated[i].hi, i + 1};
}

IsolatingInterval CubicOrder::refine_root(const IsolatingInterval& iv, const mpq_class& width) const {
    if (sgn(width) <= 0) throw parameter_error("refine_root: width must be positive");
    int slo = sign_at(iv.lo), shi = sign_at(iv.hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw internal_error("refine_root: interval does not bracket a sign change");
    IsolatingInterval out = iv;
    while (out.hi - out.lo > width) {
        mpq_class mid = (out.lo + out.hi) / 2;
        int sm = sign_at(mid);
        if (sm == 0) throw internal_error("refine_root: rational root encountered");
        if (sm == slo)
            out.lo = mid;
        else
            out.hi = mid;
    }
    return out;
}

QInterval CubicOrder::embed_enclosure(const FieldVector& v, const IsolatingInterval& iv,
                                      const mpq_class& width) const {
    if (sgn(width) <= 0) throw parameter_error("embed_enclosure: width must be positive");
    IsolatingInterval t = iv;
    for (int iter = 0; iter < 100000; ++iter) {
        QInterval ti(t.lo, t.hi);
        QInterval enc = QInterval(v.x) + QInterval(v.y) * ti + QInterval(v.z) * square(ti);
        if (enc.width() <= width) return enc;
        t = refine_root(t, (t.hi - t.lo) / 2);
    }
    throw internal_error("embed_enclosure: refinement failed to converge");
}

OrderElement CubicOrder::mul(const OrderElement& a, const OrderElement& b) const {
    auto r = reduced_mul<mpz_class>(-c2_, -c1_, -c0_, a.x, a.y, a.z, b.x, b.y, b.z);
    return {r.x, r.y, r.z};
}

FieldVector CubicOrder::mul(const FieldVector& a, const FieldVector& b) const {
    auto r = reduced_mul<mpq_class>(-c2_, -c1_, -c0_, a.x, a.y, a.z, b.x, b.y, b.z);
    return {r.x, r.y, r.z};
}

SymmetricFunctions CubicOrder::symmetric_functions(const FieldVector& v) const {
    SymmetricFunctions s;
    sym3<mpq_class>(-c2_, -c1_, -c0_, v.x, v.y, v.z, s.e1, s.e2, s.e3);
    return s;
}

mpz_class CubicOrder::trace(const OrderElement& e) const {
    // Tr(1)=3, Tr(rho)=-c2, Tr(rho^2)=c2^2-2c1
    return 3 * e.x - c2_ * e.y + (c2_ * c2_ - 2 * c1_) * e.z;
}

mpz_class CubicOrder::norm(const OrderElement& e) const {
    mpz_class e1, e2, e3;
    sym3<mpz_class>(-c2_, -c1_, -c0_, e.x, e.y, e.z, e1, e2, e3);
    return e3;
}

bool CubicOrder::is_totally_positive(const OrderElement& e) const {
    // all conjugates real, so positivity of all three elementary symmetric
    // functions is equivalent to total positivity
    mpz_class e1, e2, e3;
    sym3<mpz_class>(-c2_, -c1_, -c0_, e.x, e.y, e.z, e1, e2, e3);
    return sgn(e1) > 0 && sgn(e2) > 0 && sgn(e3) > 0;
}

bool CubicOrder::is_totally_positive(const FieldVector& v) const {
    SymmetricFunctions s = symmetric_functions(v);
    return sgn(s.e1) > 0 && sgn(s.e2) > 0 && sgn(s.e3) > 0;
}

FieldVector CubicOrder::invert(const FieldVector& v) const {
    if (v.is_zero()) throw division_by_zero("invert: zero has no inverse");
    SymmetricFunctions s = symmetric_functions(v);
    if (s.e3 == 0) throw internal_error("invert: zero norm for nonzero element");
    // Cayley-Hamilton: v^3 - e1 v^2 + e2 v - e3 = 0, so
    // v^{-1} = (v^2 - e1 v + e2) / e3
    FieldVector v2 = mul(v, v);
    return {(v2.x - s.e1 * v.x + s.e2) / s.e3, (v2.y - s.e1 * v.y) / s.e3,
            (v2.z - s.e1 * v.z) / s.e3};
}

mpz_class CubicOrder::dual_trace_pairing(const OrderElement& alpha, const OrderElement& h) const {
    // Tr(rho^i / f'(rho)) = 0 for i in {0,1} and 1 for i = 2, so the trace of
    // alpha*h/f'(rho) is the rho^2-coordinate of the reduced product.
    return mul(alpha, h).z;
}

bool CubicOrder::is_dual_totally_positive(const OrderElement& h) const {
    if (h.is_zero()) return false;
    FieldVector delta = mul(FieldVector(h), invert(FieldVector(derivative_at_rho())));
    return is_totally_positive(delta);
}

bool shanks_monogenic_heuristic(long a) {
    if (a < 7)
        throw parameter_error("shanks_monogenic_heuristic: a must be >= 7");
    mpz_class n = mpz_class(a) * a + 3 * mpz_class(a) + 9;
    for (mpz_class d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return false;
        }
    }
    return true;
}

} // namespace cubiclat
