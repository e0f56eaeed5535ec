#include "cubiclat/indecomposables.hpp"

#include <algorithm>

namespace cubiclat {

std::string range_mode_name(RangeMode m) {
    return m == RangeMode::lemma ? "lemma" : "theorem";
}

RangeMode range_mode_from_name(const std::string& name) {
    if (name == "lemma") return RangeMode::lemma;
    if (name == "theorem") return RangeMode::theorem;
    throw parameter_error("unknown range mode '" + name + "' (expected lemma or theorem)");
}

OrderElement candidate_element(const CubicOrder& order, long v, long w) {
    mpz_class vz(v), wz(w), az(order.a());
    switch (order.family()) {
        case Family::shanks: return {-vz, -wz, vz + 1};
        case Family::ennola: return {1, wz, 1};
        case Family::family3: return {-1, (az + 2) * wz + 1, -wz};
    }
    throw internal_error("candidate_element: bad family");
}

std::vector<Candidate> candidates(const CubicOrder& order, RangeMode mode) {
    const long a = order.a();
    std::vector<Candidate> out;
    switch (order.family()) {
        case Family::shanks: {
            long v_max = mode == RangeMode::lemma ? a : (a - 1) / 3;
            long step = mode == RangeMode::lemma ? a + 2 : a + 3;
            for (long v = 0; v <= v_max; ++v) {
                long w_lo = v * step + 1;
                long w_hi = mode == RangeMode::lemma ? (a + 1) * (v + 1) : a * (v + 1);
                for (long w = w_lo; w <= w_hi; ++w)
                    out.push_back({v, w, candidate_element(order, v, w)});
            }
            break;
        }
        case Family::ennola: {
            long w_lo = mode == RangeMode::lemma ? 1 : 3;
            for (long w = w_lo; w <= a - 1; ++w)
                out.push_back({-1, w, candidate_element(order, -1, w)});
            break;
        }
        case Family::family3: {
            for (long w = a; w <= 2 * a - 1; ++w)
                out.push_back({-1, w, candidate_element(order, -1, w)});
            break;
        }
    }
    return out;
}

mpz_class aprime(Family family, long a) {
    if (a < 7) throw parameter_error("aprime: a must be >= 7");
    if (family == Family::shanks) return mpz_class(a + 1) * (a + 2) / 2;
    return mpz_class(a);
}

PositivityReport verify_total_positivity(const CubicOrder& order,
                                         const std::vector<Candidate>& cands) {
    PositivityReport rep;
    rep.totally_positive.reserve(cands.size());
    for (const Candidate& c : cands) {
        bool ok = order.is_totally_positive(c.element);
        rep.totally_positive.push_back(ok ? 1 : 0);
        (ok ? rep.pass_count : rep.fail_count)++;
        rep.all_pass = rep.all_pass && ok;
    }
    return rep;
}

std::optional<Certificate> find_certificate(const CubicOrder& order, const OrderElement& alpha,
                                            long target, long coeff_bound) {
    if (target != 1 && target != 2)
        throw parameter_error("find_certificate: target must be 1 or 2");
    if (coeff_bound < 1)
        throw parameter_error("find_certificate: coeff_bound must be >= 1");

    // pairing is linear in h: t0*h.x + t1*h.y + t2*h.z
    mpz_class t0 = order.dual_trace_pairing(alpha, {1, 0, 0});
    mpz_class t1 = order.dual_trace_pairing(alpha, {0, 1, 0});
    mpz_class t2 = order.dual_trace_pairing(alpha, {0, 0, 1});
    mpz_class tgt(target);

    for (long hx = -coeff_bound; hx <= coeff_bound; ++hx) {
        for (long hy = -coeff_bound; hy <= coeff_bound; ++hy) {
            mpz_class rem = tgt - t0 * hx - t1 * hy;
            if (t2 == 0) {
                if (rem != 0) continue;
                for (long hz = -coeff_bound; hz <= coeff_bound; ++hz) {
                    OrderElement h{hx, hy, hz};
                    if (order.is_dual_totally_positive(h)) return Certificate{h, target};
                }
            } else {
                if (rem % t2 != 0) continue;
                mpz_class hz = rem / t2;
                if (hz < -coeff_bound || hz > coeff_bound) continue;
                OrderElement h{hx, hy, hz};
                if (order.is_dual_totally_positive(h)) return Certificate{h, target};
            }
        }
    }
    return std::nullopt;
}

bool verify_certificate(const CubicOrder& order, const OrderElement& alpha,
                        const Certificate& cert) {
    if (cert.h.is_zero()) return false;
    FieldVector delta =
        order.mul(FieldVector(cert.h), order.invert(FieldVector(order.derivative_at_rho())));
    SymmetricFunctions sd = order.symmetric_functions(delta);
    if (!(sgn(sd.e1) > 0 && sgn(sd.e2) > 0 && sgn(sd.e3) > 0)) return false;
    SymmetricFunctions st = order.symmetric_functions(order.mul(FieldVector(alpha), delta));
    return st.e1 == cert.target;
}

namespace {

mpz_class floor_q(const mpq_class& q) {
    mpz_class num = q.get_num(), den = q.get_den(), f;
    mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return f;
}

mpz_class ceil_q(const mpq_class& q) {
    mpz_class num = q.get_num(), den = q.get_den(), c;
    mpz_cdiv_q(c.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return c;
}

// smallest integer strictly greater than q
mpz_class int_gt(const mpq_class& q) { return floor_q(q) + 1; }

// largest integer strictly less than q
mpz_class int_lt(const mpq_class& q) { return ceil_q(q) - 1; }

} // namespace

std::vector<OrderElement> enumerate_dominated(const CubicOrder& order, const OrderElement& alpha) {
    if (!order.is_totally_positive(alpha))
        throw parameter_error("enumerate_dominated: alpha must be totally positive");

    // refine the root enclosures until pairwise disjoint and narrow
    std::array<IsolatingInterval, 3> rts = order.isolate_roots();
    mpq_class w(1, 1 << 20);
    for (auto& r : rts) r = order.refine_root(r, w);
    while (!(rts[0].hi < rts[1].lo && rts[1].hi < rts[2].lo)) {
        w /= 2;
        for (auto& r : rts) r = order.refine_root(r, w);
    }
    std::array<QInterval, 3> T, T2;
    for (int i = 0; i < 3; ++i) {
        T[i] = QInterval(rts[i].lo, rts[i].hi);
        T2[i] = square(T[i]);
    }

    // embedding enclosures of alpha; any dominated beta has all its
    // embeddings in the open box prod_i (0, sigma_i(alpha))
    std::array<QInterval, 3> S;
    FieldVector av(alpha);
    for (int i = 0; i < 3; ++i) S[i] = order.embed_enclosure(av, rts[i], w);

    // coordinates from embeddings by Lagrange interpolation at the roots:
    //   z = sum_i s_i / D_i,  y = sum_i s_i * (-(t_j + t_k)) / D_i,
    //   x = sum_i s_i * t_j t_k / D_i,   D_i = (t_i - t_j)(t_i - t_k)
    // evaluated over the interval box, giving sound outer coordinate ranges
    QInterval X(0, 0), Y(0, 0), Z(0, 0);
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        QInterval D = (T[i] - T[j]) * (T[i] - T[k]);
        QInterval box(mpq_class(0), S[i].hi < 0 ? mpq_class(0) : S[i].hi);
        X = X + box * ((T[j] * T[k]) / D);
        Y = Y + box * ((-(T[j] + T[k])) / D);
        Z = Z + box * (QInterval(mpq_class(1)) / D);
    }

    std::vector<OrderElement> out;
    mpz_class ylo = ceil_q(Y.lo), yhi = floor_q(Y.hi);
    mpz_class zlo = ceil_q(Z.lo), zhi = floor_q(Z.hi);
    for (mpz_class y = ylo; y <= yhi; ++y) {
        for (mpz_class z = zlo; z <= zhi; ++z) {
            // per-embedding window for x: 0 < x + e_i < sigma_i(alpha),
            // e_i = y t_i + z t_i^2
            mpz_class xlo, xhi;
            bool first = true, empty = false;
            for (int i = 0; i < 3; ++i) {
                QInterval E = mpq_class(y) * T[i] + mpq_class(z) * T2[i];
                mpz_class lo_i = int_gt(-E.hi);
                mpz_class hi_i = int_lt(S[i].hi - E.lo);
                if (first) {
                    xlo = lo_i;
                    xhi = hi_i;
                    first = false;
                } else {
                    xlo = std::max(xlo, lo_i);
                    xhi = std::min(xhi, hi_i);
                }
                if (xlo > xhi) {
                    empty = true;
                    break;
                }
            }
            if (empty) continue;
            for (mpz_class x = xlo; x <= xhi; ++x) {
                OrderElement beta{x, y, z};
                if (order.is_totally_positive(beta) && order.is_totally_positive(alpha - beta))
                    out.push_back(beta);
            }
        }
    }
    return out;
}

bool is_indecomposable(const CubicOrder& order, const OrderElement& alpha) {
    return enumerate_dominated(order, alpha).empty();
}

} // namespace cubiclat
