#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "cubiclat/errors.hpp"
#include "cubiclat/interval.hpp"

namespace cubiclat {

// The three parametric families of totally real cubic fields handled here.
//   shanks  : x^3 - a x^2 - (a+3) x - 1,        rho = largest root
//   ennola  : x^3 + (a-1) x^2 - a x - 1,        rho = smallest root
//   family3 : x^3 - (2a+2) x^2 + a(a+2) x - 1,  rho = smallest root
enum class Family { shanks, ennola, family3 };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Element of the order Z[rho]: x + y*rho + z*rho^2 with integer coordinates.
struct OrderElement {
    mpz_class x, y, z;

    OrderElement() : x(0), y(0), z(0) {}
    OrderElement(mpz_class x_, mpz_class y_, mpz_class z_)
        : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    bool is_zero() const { return x == 0 && y == 0 && z == 0; }

    friend OrderElement operator+(const OrderElement& a, const OrderElement& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend OrderElement operator-(const OrderElement& a, const OrderElement& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend OrderElement operator-(const OrderElement& a) { return {-a.x, -a.y, -a.z}; }
    friend OrderElement operator*(const mpz_class& s, const OrderElement& a) {
        return {s * a.x, s * a.y, s * a.z};
    }
    friend bool operator==(const OrderElement& a, const OrderElement& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

std::ostream& operator<<(std::ostream& os, const OrderElement& e);

// Element of the field K = Q(rho): rational coordinates in the basis 1, rho, rho^2.
// mpq_class keeps coordinates canonical (coprime, positive denominator).
struct FieldVector {
    mpq_class x, y, z;

    FieldVector() : x(0), y(0), z(0) {}
    FieldVector(mpq_class x_, mpq_class y_, mpq_class z_)
        : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    FieldVector(const OrderElement& e) : x(e.x), y(e.y), z(e.z) {}

    bool is_zero() const { return x == 0 && y == 0 && z == 0; }

    friend FieldVector operator+(const FieldVector& a, const FieldVector& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend FieldVector operator-(const FieldVector& a, const FieldVector& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend FieldVector operator-(const FieldVector& a) { return {-a.x, -a.y, -a.z}; }
    friend bool operator==(const FieldVector& a, const FieldVector& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

std::ostream& operator<<(std::ostream& os, const FieldVector& v);

// Elementary symmetric functions (e1, e2, e3) of the three real conjugates:
// e1 = trace, e3 = norm.
struct SymmetricFunctions {
    mpq_class e1, e2, e3;
};

// Rational interval containing exactly one root of the minimal polynomial.
// root_index numbers the roots in increasing order, 1..3.
struct IsolatingInterval {
    mpq_class lo, hi;
    int root_index = 0;
};

/*
 * One order Z[rho] from the three families, with parameter a >= 7.
 *
 * The minimal polynomial is monic, x^3 + c2 x^2 + c1 x + c0, and has three
 * distinct real roots for every a >= 7; the constructor verifies this by a
 * Sturm count and isolates the roots once.  Which of the three roots rho
 * denotes (largest for shanks, smallest for the other two) is recorded for
 * reporting; conjugate-symmetric quantities (trace, norm, total positivity,
 * the codifferent pairing) do not depend on that choice.
 *
 * Values are immutable after construction; all operations are pure.
 */
class CubicOrder {
public:
    CubicOrder(Family family, long a);

    Family family() const { return family_; }
    long a() const { return a_; }

    // monic cubic, descending degree: {1, c2, c1, c0}
    std::array<mpz_class, 4> minpoly_coeffs() const { return {1, c2_, c1_, c0_}; }
    // f' = 3 x^2 + 2 c2 x + c1, descending degree
    std::array<mpz_class, 3> deriv_coeffs() const { return {3, 2 * c2_, c1_}; }
    // f'(rho) as an element of Z[rho]
    OrderElement derivative_at_rho() const { return {c1_, 2 * c2_, 3}; }
    // 1-based index (in increasing root order) of the root rho denotes
    int rho_root_index() const { return rho_root_index_; }

    // --- exact ring and field arithmetic -------------------------------

    OrderElement mul(const OrderElement& a, const OrderElement& b) const;
    FieldVector mul(const FieldVector& a, const FieldVector& b) const;

    SymmetricFunctions symmetric_functions(const FieldVector& v) const;

    mpz_class trace(const OrderElement& e) const;
    mpz_class norm(const OrderElement& e) const;

    bool is_totally_positive(const FieldVector& v) const;
    bool is_totally_positive(const OrderElement& e) const;

    // multiplicative inverse in K; throws division_by_zero on zero input
    FieldVector invert(const FieldVector& v) const;

    // --- real embeddings ------------------------------------------------

    std::array<IsolatingInterval, 3> isolate_roots() const { return roots_; }

    // shrink an isolating interval by sign bisection to width <= width
    IsolatingInterval refine_root(const IsolatingInterval& iv, const mpq_class& width) const;

    // rational interval of width <= width containing the embedding of v at
    // the root described by iv
    QInterval embed_enclosure(const FieldVector& v, const IsolatingInterval& iv,
                              const mpq_class& width) const;

    // --- codifferent trace pairing --------------------------------------

    // Tr(alpha * h(rho)/f'(rho)); by the dual-basis identity of a monogenic
    // order this is the rho^2-coordinate of the reduced product alpha * h.
    mpz_class dual_trace_pairing(const OrderElement& alpha, const OrderElement& h) const;

    // whether h(rho)/f'(rho) is totally positive
    bool is_dual_totally_positive(const OrderElement& h) const;

    // exact sign of f at a rational point
    int sign_at(const mpq_class& t) const;

private:
    Family family_;
    long a_;
    mpz_class c2_, c1_, c0_;                  // monic f = x^3 + c2 x^2 + c1 x + c0
    std::array<IsolatingInterval, 3> roots_;  // isolated at construction
    int rho_root_index_;

    void isolate_all_roots();
};

// True iff a^2 + 3a + 9 (the square root of the discriminant of the Shanks
// minimal polynomial) is squarefree; trial division.
bool shanks_monogenic_heuristic(long a);

} // namespace cubiclat
