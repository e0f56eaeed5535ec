// cubiclat command-line front end.
//
// Reports go to standard output, progress and diagnostics to standard error.
// Exit codes: 0 = all checks pass (or every non-pass is precondition-gated),
// 1 = a verified mathematical check failed, 2 = usage or parse error,
// 3 = search exhausted without a verdict.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubiclat/bounds.hpp"
#include "cubiclat/corpus.hpp"
#include "cubiclat/cubic_order.hpp"
#include "cubiclat/gram_io.hpp"
#include "cubiclat/indecomposables.hpp"
#include "cubiclat/lattice.hpp"

using json = nlohmann::ordered_json;
using namespace cubiclat;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExhausted = 3;

// ---------------------------------------------------------------- parsing

mpz_class parse_mpz(const std::string& s) {
    try {
        return mpz_class(s);
    } catch (const std::invalid_argument&) {
        throw parameter_error("invalid integer: '" + s + "'");
    }
}

mpz_class pow10_z(int digits) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, unsigned(digits));
    return p;
}

// Accepts "p/q", plain integers, and decimal literals ("0.25").
mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw parameter_error("invalid rational: empty string");
    if (s.find('/') != std::string::npos) {
        mpq_class q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw parameter_error("invalid rational: '" + s + "'");
        if (q.get_den() == 0) throw parameter_error("invalid rational (zero denominator): '" + s + "'");
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return mpq_class(parse_mpz(s));
    std::string head = s.substr(0, dot), frac = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (neg || (!head.empty() && head[0] == '+')) head = head.substr(1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
        (!head.empty() && head.find_first_not_of("0123456789") != std::string::npos))
        throw parameter_error("invalid rational: '" + s + "'");
    mpz_class num = (head.empty() ? mpz_class(0) : mpz_class(head)) * pow10_z(int(frac.size())) +
                    mpz_class(frac);
    mpq_class q(num, pow10_z(int(frac.size())));
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

// ------------------------------------------------------------- rendering

std::string q_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Fixed-point decimal with `digits` fractional digits; dir < 0 rounds toward
// -inf, dir > 0 toward +inf, so printed enclosures stay enclosures.
std::string dec_dir(const mpq_class& v, int digits, int dir) {
    mpz_class num = v.get_num() * pow10_z(digits);
    mpz_class q;
    if (dir < 0)
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
    else
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
    bool neg = q < 0;
    std::string t = mpz_class(abs(q)).get_str();
    if (int(t.size()) <= digits) t.insert(0, std::size_t(digits + 1) - t.size(), '0');
    t.insert(t.size() - std::size_t(digits), ".");
    return neg ? "-" + t : t;
}

json enclosure_json(const mpq_class& lo, const mpq_class& hi, int digits = 30) {
    json j;
    j["lo"] = json{{"decimal", dec_dir(lo, digits, -1)}, {"rounding", "down"}};
    j["hi"] = json{{"decimal", dec_dir(hi, digits, +1)}, {"rounding", "up"}};
    return j;
}

json bound_json(const BoundValue& b) {
    json j;
    j["exact"] = b.exact;
    if (b.exact) {
        j["value"] = q_str(b.lo);
    } else {
        json e = enclosure_json(b.lo, b.hi);
        j["lo"] = e["lo"];
        j["hi"] = e["hi"];
    }
    return j;
}

json element_json(const OrderElement& e) {
    return json::array({e.x.get_str(), e.y.get_str(), e.z.get_str()});
}

std::string scalar_str(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    return j.dump();
}

void print_table(const json& j, const std::string& key, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) print_table(v, key.empty() ? k : key + "." + k, os);
        return;
    }
    if (j.is_array()) {
        bool flat = true;
        for (const auto& v : j)
            if (v.is_object() || v.is_array()) flat = false;
        if (flat) {
            os << key << ":";
            for (const auto& v : j) os << " " << scalar_str(v);
            os << "\n";
        } else {
            for (std::size_t i = 0; i < j.size(); ++i)
                print_table(j[i], key + "[" + std::to_string(i) + "]", os);
        }
        return;
    }
    os << key << ": " << scalar_str(j) << "\n";
}

struct Report {
    json params = json::object();
    json results = json::object();
    std::string status = "pass";  // pass | fail | indeterminate
    std::vector<std::string> warnings;
};

void emit(const std::string& command, const Report& r, const std::string& mode) {
    json j;
    j["command"] = command;
    j["params"] = r.params;
    j["results"] = r.results;
    j["status"] = r.status;
    j["warnings"] = r.warnings;
    if (mode == "structured")
        std::cout << j.dump(2) << "\n";
    else
        print_table(j, "", std::cout);
}

// ------------------------------------------------------------ cli state

struct CommonOpts {
    std::string output = "table";
};

void add_output_flag(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--output", c.output, "report format")
        ->check(CLI::IsMember({"table", "structured"}))
        ->capture_default_str();
}

Family family_arg(const std::string& name) { return family_from_name(name); }

RangeMode mode_arg(const std::string& name) { return range_mode_from_name(name); }

void check_precision(long bits) {
    if (bits < 16 || bits > (1L << 22))
        throw parameter_error("precision must be between 16 and 2^22 bits");
}

// gram corpus convention shared with the test suite: 20 instances, ranks
// cycling 1..rank_max, seeds counting from 101
GramMatrix corpus_gram(long index, long rank_max) {
    return random_pd_gram(1 + index % rank_max, std::uint64_t(101 + index));
}

// --------------------------------------------------------- subcommands

int run_family_info(Family fam, long a, const CommonOpts& c) {
    CubicOrder ord(fam, a);
    Report r;
    r.params["family"] = family_name(fam);
    r.params["a"] = a;
    auto mp = ord.minpoly_coeffs();
    auto dv = ord.deriv_coeffs();
    r.results["minpoly"] =
        json::array({mp[0].get_str(), mp[1].get_str(), mp[2].get_str(), mp[3].get_str()});
    r.results["derivative"] = json::array({dv[0].get_str(), dv[1].get_str(), dv[2].get_str()});
    r.results["rho_root_index"] = ord.rho_root_index();
    json roots = json::array();
    for (const auto& iv : ord.isolate_roots()) {
        auto ref = ord.refine_root(iv, mpq_class(1, 100000000));
        json e = enclosure_json(ref.lo, ref.hi, 10);
        e["index"] = iv.root_index;
        e["is_rho"] = iv.root_index == ord.rho_root_index();
        roots.push_back(std::move(e));
    }
    r.results["roots"] = std::move(roots);
    r.results["aprime"] = aprime(fam, a).get_str();
    if (fam == Family::shanks) {
        r.results["squarefree_heuristic"] = shanks_monogenic_heuristic(a);
        r.results["squarefree_argument"] = mpz_class(mpz_class(a) * a + 3 * a + 9).get_str();
    }
    emit("family-info", r, c.output);
    return kExitPass;
}

int run_indecomposables(Family fam, long a, RangeMode mode, bool list, bool check,
                        const CommonOpts& c) {
    CubicOrder ord(fam, a);
    auto lemma_c = candidates(ord, RangeMode::lemma);
    auto theorem_c = candidates(ord, RangeMode::theorem);
    const auto& sel = mode == RangeMode::lemma ? lemma_c : theorem_c;
    mpz_class ap = aprime(fam, a);

    Report r;
    r.params["family"] = family_name(fam);
    r.params["a"] = a;
    r.params["range_mode"] = range_mode_name(mode);
    r.results["count"] = long(sel.size());
    r.results["lemma_count"] = long(lemma_c.size());
    r.results["theorem_count"] = long(theorem_c.size());
    r.results["aprime"] = ap.get_str();
    if (lemma_c.size() != theorem_c.size())
        r.warnings.push_back("range-mode discrepancy: lemma range has " +
                             std::to_string(lemma_c.size()) + " candidates, theorem range has " +
                             std::to_string(theorem_c.size()));
    if (ap != long(sel.size()))
        r.warnings.push_back("counting constant a' = " + ap.get_str() +
                             " differs from the enumerated candidate count " +
                             std::to_string(sel.size()) + " (" + range_mode_name(mode) + " range)");
    if (list) {
        json els = json::array();
        for (const auto& cd : sel) {
            json e;
            if (cd.v >= 0) e["v"] = cd.v;
            e["w"] = cd.w;
            e["element"] = element_json(cd.element);
            els.push_back(std::move(e));
        }
        r.results["elements"] = std::move(els);
    }
    int code = kExitPass;
    if (check) {
        auto report = verify_total_positivity(ord, sel);
        json p;
        p["pass_count"] = report.pass_count;
        p["fail_count"] = report.fail_count;
        if (!report.all_pass) {
            json fails = json::array();
            for (std::size_t i = 0; i < sel.size(); ++i)
                if (!report.totally_positive[i]) {
                    json e;
                    if (sel[i].v >= 0) e["v"] = sel[i].v;
                    e["w"] = sel[i].w;
                    fails.push_back(std::move(e));
                }
            p["failures"] = std::move(fails);
        }
        r.results["positivity"] = std::move(p);
        r.status = report.all_pass ? "pass" : "fail";
        code = report.all_pass ? kExitPass : kExitMathFail;
    }
    emit("indecomposables", r, c.output);
    return code;
}

int run_certificate(Family fam, long a, std::optional<long> v, long w, std::optional<long> target,
                    std::optional<long> coeff_bound, const CommonOpts& c) {
    CubicOrder ord(fam, a);
    if (fam == Family::shanks && !v)
        throw parameter_error("certificate: the shanks family needs both --v and --w");
    if (fam != Family::shanks && v)
        throw parameter_error("certificate: --v applies only to the shanks family");
    long vv = v ? *v : -1;
    long tgt = target ? *target : (fam == Family::shanks ? 1 : 2);
    long bound = coeff_bound ? *coeff_bound : 2 * a;
    OrderElement alpha = candidate_element(ord, fam == Family::shanks ? vv : -1, w);

    Report r;
    r.params["family"] = family_name(fam);
    r.params["a"] = a;
    if (v) r.params["v"] = vv;
    r.params["w"] = w;
    r.params["target"] = tgt;
    r.params["coeff_bound"] = bound;
    r.results["candidate"] = element_json(alpha);
    r.results["candidate_totally_positive"] = ord.is_totally_positive(alpha);

    auto cert = find_certificate(ord, alpha, tgt, bound);
    r.results["found"] = bool(cert);
    int code = kExitPass;
    if (cert) {
        bool ok = verify_certificate(ord, alpha, *cert);
        r.results["h"] = element_json(cert->h);
        r.results["verified"] = ok;
        if (!ok) {
            r.status = "fail";
            code = kExitMathFail;
        }
    } else {
        r.status = "indeterminate";
        r.warnings.push_back("certificate search exhausted: no certificate with coefficients in [-" +
                             std::to_string(bound) + ", " + std::to_string(bound) + "]^3");
        code = kExitExhausted;
    }
    emit("certificate", r, c.output);
    return code;
}

int run_short_vectors(const std::string& path, long n, bool list, const CommonOpts& c) {
    if (n < 1) throw parameter_error("short-vectors: --n must be >= 1");
    GramMatrix G = read_gram_file(path);
    auto res = count_short_vectors(G, n, list);
    Report r;
    r.params["gram"] = path;
    r.params["n"] = n;
    r.params["list"] = list;
    r.results["rank"] = G.rank();
    r.results["det"] = G.det().get_str();
    r.results["count"] = res.count.get_str();
    if (list) {
        json vs = json::array();
        for (const auto& v : res.vectors) {
            json row = json::array();
            for (const auto& x : v) row.push_back(x.get_str());
            vs.push_back(std::move(row));
        }
        r.results["vectors"] = std::move(vs);
    }
    emit("short-vectors", r, c.output);
    return kExitPass;
}

int run_bounds(const std::string& kind, long r_arg, long n, std::optional<std::string> det_str,
               long precision, const CommonOpts& c) {
    check_precision(precision);
    Report r;
    r.params["kind"] = kind;
    r.params["r"] = r_arg;
    r.params["n"] = n;
    r.params["precision"] = precision;
    BoundValue b{mpq_class(0), mpq_class(0), true, 0, 0, mpq_class(1)};
    if (kind == "C") {
        mpq_class det = det_str ? parse_rational(*det_str) : mpq_class(1);
        r.params["det"] = q_str(det);
        if (!det_str && n >= 3) r.warnings.push_back("determinant defaulted to 1");
        b = bound_C(r_arg, n, det, precision);
    } else {
        if (det_str)
            throw parameter_error("bounds: --det applies only to kind C (B1/B2 fix det = 1)");
        b = kind == "B1" ? bound_B1(r_arg, n, precision) : bound_B2(r_arg, n, precision);
    }
    r.results = bound_json(b);
    r.results["det_used"] = q_str(b.det_used);
    emit("bounds", r, c.output);
    return kExitPass;
}

int run_trace_lattice(const std::string& path, const std::string& hx, const std::string& hy,
                      const std::string& hz, std::optional<std::string> gram_out,
                      const CommonOpts& c) {
    OKGramMatrix L = read_ok_gram_file(path);
    OrderElement h{parse_mpz(hx), parse_mpz(hy), parse_mpz(hz)};
    auto res = trace_transfer(L, h);
    Report r;
    r.params["okgram"] = path;
    r.params["h"] = element_json(h);
    r.results["family"] = family_name(L.order().family());
    r.results["a"] = L.order().a();
    r.results["input_rank"] = L.rank();
    r.results["output_rank"] = res.gram.rank();
    r.results["delta_totally_positive"] = res.delta_totally_positive;
    r.results["diagonal_totally_positive"] = L.has_totally_positive_diagonal();
    r.results["positive_definite"] = res.positive_definite;
    json rows = json::array();
    for (long i = 0; i < res.gram.rank(); ++i) {
        json row = json::array();
        for (long j = 0; j < res.gram.rank(); ++j) row.push_back(res.gram.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    r.results["gram"] = std::move(rows);
    if (gram_out) {
        std::ofstream out(*gram_out);
        if (!out) throw parameter_error("cannot open output file: " + *gram_out);
        write_gram(out, res.gram);
        r.results["gram_out"] = *gram_out;
    }
    emit("trace-lattice", r, c.output);
    return kExitPass;
}

int run_rank_bound(Family fam, long a, long k, bool classical, long precision,
                   const CommonOpts& c) {
    check_precision(precision);
    RankBoundQuery q{fam, a, k, classical};
    mpz_class bound = rank_lower_bound(q, precision);
    long k_eff = classical ? k : 2 * k;
    Report r;
    r.params["family"] = family_name(fam);
    r.params["a"] = a;
    r.params["k"] = k;
    r.params["classical"] = classical;
    r.params["precision"] = precision;
    r.results["k_eff"] = k_eff;
    r.results["bound_kind"] = fam == Family::shanks ? "B1" : "B2";
    r.results["n"] = fam == Family::shanks ? k_eff : 2 * k_eff;
    r.results["aprime"] = aprime(fam, a).get_str();
    r.results["rank_lower_bound"] = bound.get_str();
    emit("rank-bound", r, c.output);
    return kExitPass;
}

int run_density(Family fam, long X, std::optional<std::string> B_str, std::optional<long> R, long k,
                bool classical, bool check, long precision, const CommonOpts& c) {
    check_precision(precision);
    if (!B_str && !R) throw parameter_error("density: provide --B or --R");
    Report r;
    r.params["family"] = family_name(fam);
    r.params["X"] = X;
    mpq_class B_lo, B_hi;
    if (B_str) {
        B_lo = B_hi = parse_rational(*B_str);
        r.params["B"] = q_str(B_lo);
    } else {
        long k_eff = classical ? k : 2 * k;
        r.params["R"] = *R;
        r.params["k"] = k;
        r.params["classical"] = classical;
        BoundValue b = fam == Family::shanks ? bound_B1(*R, k_eff, precision)
                                             : bound_B2(*R, k_eff, precision);
        B_lo = b.lo;
        B_hi = b.hi;
        r.results["B"] = bound_json(b);
    }
    mpz_class count_lo = density_count(fam, X, B_lo);
    mpz_class count_hi = density_count(fam, X, B_hi);
    int code = kExitPass;
    if (count_lo == count_hi) {
        r.results["count"] = count_lo.get_str();
    } else {
        r.results["count_at_lo"] = count_lo.get_str();
        r.results["count_at_hi"] = count_hi.get_str();
        r.warnings.push_back("bound enclosure is inexact and the count differs across it");
        r.status = "indeterminate";
    }
    if (check) {
        auto rep_lo = verify_counting_lemma(fam, X, B_lo);
        auto rep_hi = verify_counting_lemma(fam, X, B_hi);
        json ck;
        ck["threshold_sq"] = q_str(rep_lo.threshold_sq);
        if (rep_lo.verdict == rep_hi.verdict) {
            ck["verdict"] = lemma_verdict_name(rep_lo.verdict);
            if (rep_lo.verdict == LemmaVerdict::fail) {
                r.status = "fail";
                code = kExitMathFail;
            } else if (rep_lo.verdict == LemmaVerdict::precondition_not_satisfied) {
                r.status = "indeterminate";
                r.warnings.push_back("counting-check precondition on X not satisfied");
            }
        } else {
            ck["verdict"] = "indeterminate";
            r.status = "indeterminate";
            r.warnings.push_back("bound enclosure is inexact and the verdict differs across it");
        }
        r.results["check"] = std::move(ck);
    }
    emit("density", r, c.output);
    return code;
}

int run_exceptional(Family fam, long X, const std::string& eps_str, long k, bool classical,
                    long precision, const CommonOpts& c) {
    check_precision(precision);
    mpq_class eps = parse_rational(eps_str);
    auto rep = exceptional_count(fam, X, eps, k, classical, precision);
    Report r;
    r.params["family"] = family_name(fam);
    r.params["X"] = X;
    r.params["eps"] = q_str(eps);
    r.params["k"] = k;
    r.params["classical"] = classical;
    r.params["precision"] = precision;
    r.results["count"] = rep.count.get_str();
    r.results["budget"] = enclosure_json(rep.budget_lo, rep.budget_hi);
    r.results["pass"] = rep.pass;
    r.status = rep.pass ? "pass" : "fail";
    emit("exceptional", r, c.output);
    return rep.pass ? kExitPass : kExitMathFail;
}

// verification suites; the positivity sweeps stream progress to stderr
int run_verify(const std::string& id, std::optional<long> a_min, std::optional<long> a_max,
               std::optional<long> X, std::optional<std::string> B_str, RangeMode mode, long count,
               long rank_max, long n_max, const CommonOpts& c) {
    Report r;
    r.params["id"] = id;
    json instances = json::array();
    long pass = 0, fail = 0, gated = 0;

    if (id == "2.1") {
        if (count < 1 || rank_max < 1 || n_max < 1)
            throw parameter_error("verify 2.1: --count, --rank-max and --n-max must be >= 1");
        r.params["count"] = count;
        r.params["rank_max"] = rank_max;
        r.params["n_max"] = n_max;
        for (long i = 0; i < count; ++i) {
            GramMatrix G = corpus_gram(i, rank_max);
            bool ok = true;
            for (long n = 1; n <= n_max && ok; ++n) ok = verify_count_bound(G, n);
            json inst;
            inst["rank"] = G.rank();
            inst["seed"] = 101 + i;
            inst["n_max"] = n_max;
            inst["pass"] = ok;
            instances.push_back(std::move(inst));
            (ok ? pass : fail) += 1;
            if ((i + 1) % 5 == 0)
                std::cerr << "progress: " << (i + 1) << "/" << count << " gram matrices\n";
        }
    } else if (id == "3.1" || id == "4.1" || id == "5.2") {
        Family fam = id == "3.1" ? Family::shanks : id == "4.1" ? Family::ennola : Family::family3;
        long lo = a_min ? *a_min : 7;
        long hi = a_max ? *a_max : (fam == Family::shanks ? 50 : 200);
        if (lo < 7 || hi < lo) throw parameter_error("verify: need 7 <= a-min <= a-max");
        r.params["family"] = family_name(fam);
        r.params["a_min"] = lo;
        r.params["a_max"] = hi;
        r.params["range_mode"] = range_mode_name(mode);
        for (long a = lo; a <= hi; ++a) {
            CubicOrder ord(fam, a);
            auto cands = candidates(ord, mode);
            auto rep = verify_total_positivity(ord, cands);
            json inst;
            inst["a"] = a;
            inst["candidates"] = long(cands.size());
            inst["pass"] = rep.all_pass;
            instances.push_back(std::move(inst));
            (rep.all_pass ? pass : fail) += 1;
            if ((a - lo + 1) % 25 == 0 || a == hi)
                std::cerr << "progress: a = " << a << " (" << (a - lo + 1) << "/" << (hi - lo + 1)
                          << ")\n";
        }
    } else if (id == "3.3" || id == "4.3" || id == "5.4") {
        Family fam = id == "3.3" ? Family::shanks : id == "4.3" ? Family::ennola : Family::family3;
        if (!X || !B_str) throw parameter_error("verify " + id + ": --X and --B are required");
        mpq_class B = parse_rational(*B_str);
        r.params["family"] = family_name(fam);
        r.params["X"] = *X;
        r.params["B"] = q_str(B);
        auto rep = verify_counting_lemma(fam, *X, B);
        json inst;
        inst["X"] = *X;
        inst["B"] = q_str(B);
        inst["precondition_ok"] = rep.precondition_ok;
        inst["count"] = rep.count.get_str();
        inst["threshold_sq"] = q_str(rep.threshold_sq);
        inst["verdict"] = lemma_verdict_name(rep.verdict);
        instances.push_back(std::move(inst));
        if (rep.verdict == LemmaVerdict::pass)
            pass += 1;
        else if (rep.verdict == LemmaVerdict::fail)
            fail += 1;
        else
            gated += 1;
    } else {
        throw parameter_error("unknown verification suite id: '" + id +
                              "' (expected one of 2.1, 3.1, 3.3, 4.1, 4.3, 5.2, 5.4)");
    }

    r.results["instances"] = std::move(instances);
    r.results["summary"] = json{{"pass", pass}, {"fail", fail}, {"gated", gated}};
    int code = kExitPass;
    if (fail > 0) {
        r.status = "fail";
        code = kExitMathFail;
    } else if (gated > 0) {
        r.status = "indeterminate";
        r.warnings.push_back("precondition not satisfied for " + std::to_string(gated) +
                             " instance(s)");
    }
    emit("verify", r, c.output);
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubiclat: exact lower-bound machinery for universal quadratic lattices over "
                 "three parametric totally real cubic fields"};
    app.require_subcommand(1);
    int exit_code = kExitPass;

    // family-info ---------------------------------------------------------
    struct {
        CommonOpts c;
        std::string family;
        long a = 7;
    } fi;
    {
        auto* cmd = app.add_subcommand("family-info",
                                       "minimal polynomial, real roots and counting constant");
        cmd->add_option("family,--family", fi.family, "shanks | ennola | family3")->required();
        cmd->add_option("--a", fi.a, "family parameter (>= 7)")->required();
        add_output_flag(cmd, fi.c);
        cmd->callback([&] { exit_code = run_family_info(family_arg(fi.family), fi.a, fi.c); });
    }

    // verify ---------------------------------------------------------------
    struct {
        CommonOpts c;
        std::string id;
        std::optional<long> a_min, a_max, X;
        std::optional<std::string> B;
        std::string mode = "lemma";
        long count = 20, rank_max = 5, n_max = 10;
    } vf;
    {
        auto* cmd = app.add_subcommand(
            "verify",
            "verification suites: 2.1 random-corpus short-vector count bound; 3.1/4.1/5.2 "
            "candidate total positivity sweep (shanks/ennola/family3); 3.3/4.3/5.4 density "
            "counting check (shanks/ennola/family3)");
        cmd->add_option("id", vf.id, "suite id")->required();
        cmd->add_option("--a-min", vf.a_min, "sweep start (positivity suites)");
        cmd->add_option("--a-max", vf.a_max, "sweep end (positivity suites)");
        cmd->add_option("--range-mode", vf.mode, "candidate range variant (positivity suites)")
            ->check(CLI::IsMember({"lemma", "theorem"}))
            ->capture_default_str();
        cmd->add_option("--X", vf.X, "cutoff (counting suites)");
        cmd->add_option("--B", vf.B, "threshold, rational (counting suites)");
        cmd->add_option("--count", vf.count, "corpus size (suite 2.1)")->capture_default_str();
        cmd->add_option("--rank-max", vf.rank_max, "max rank in corpus (suite 2.1)")
            ->capture_default_str();
        cmd->add_option("--n-max", vf.n_max, "check all n up to this (suite 2.1)")
            ->capture_default_str();
        add_output_flag(cmd, vf.c);
        cmd->callback([&] {
            exit_code = run_verify(vf.id, vf.a_min, vf.a_max, vf.X, vf.B, mode_arg(vf.mode),
                                   vf.count, vf.rank_max, vf.n_max, vf.c);
        });
    }

    // indecomposables -------------------------------------------------------
    struct {
        CommonOpts c;
        std::string family;
        long a = 7;
        std::string mode = "lemma";
        bool list = false, check = false;
    } in;
    {
        auto* cmd = app.add_subcommand("indecomposables",
                                       "candidate indecomposables for one family member");
        cmd->add_option("family,--family", in.family, "shanks | ennola | family3")->required();
        cmd->add_option("--a", in.a, "family parameter (>= 7)")->required();
        cmd->add_option("--range-mode", in.mode, "index range variant")
            ->check(CLI::IsMember({"lemma", "theorem"}))
            ->capture_default_str();
        cmd->add_flag("--list", in.list, "include the candidate elements in the report");
        cmd->add_flag("--check-positivity", in.check, "verify every candidate is totally positive");
        add_output_flag(cmd, in.c);
        cmd->callback([&] {
            exit_code = run_indecomposables(family_arg(in.family), in.a, mode_arg(in.mode),
                                            in.list, in.check, in.c);
        });
    }

    // certificate ------------------------------------------------------------
    struct {
        CommonOpts c;
        std::string family;
        long a = 7, w = 0;
        std::optional<long> v, target, coeff_bound;
    } ce;
    {
        auto* cmd = app.add_subcommand(
            "certificate", "search for a trace-pairing certificate for one candidate");
        cmd->add_option("family,--family", ce.family, "shanks | ennola | family3")->required();
        cmd->add_option("--a", ce.a, "family parameter (>= 7)")->required();
        cmd->add_option("--v", ce.v, "first candidate index (shanks only)");
        cmd->add_option("--w", ce.w, "candidate index")->required();
        cmd->add_option("--target", ce.target, "required pairing value (default 1 for shanks, 2 otherwise)");
        cmd->add_option("--coeff-bound", ce.coeff_bound, "search box radius (default 2a)");
        add_output_flag(cmd, ce.c);
        cmd->callback([&] {
            exit_code = run_certificate(family_arg(ce.family), ce.a, ce.v, ce.w, ce.target,
                                        ce.coeff_bound, ce.c);
        });
    }

    // short-vectors -----------------------------------------------------------
    struct {
        CommonOpts c;
        std::string gram;
        long n = 1;
        bool list = false;
    } sv;
    {
        auto* cmd = app.add_subcommand("short-vectors",
                                       "exact count of lattice vectors of a given value");
        cmd->add_option("--gram", sv.gram, "Gram matrix document")->required();
        cmd->add_option("--n", sv.n, "target value (>= 1)")->required();
        cmd->add_flag("--list", sv.list, "include the vectors in the report");
        add_output_flag(cmd, sv.c);
        cmd->callback([&] { exit_code = run_short_vectors(sv.gram, sv.n, sv.list, sv.c); });
    }

    // bounds --------------------------------------------------------------------
    struct {
        CommonOpts c;
        std::string kind;
        long r = 1, n = 1, precision = 128;
        std::optional<std::string> det;
    } bo;
    {
        auto* cmd = app.add_subcommand("bounds", "short-vector count bounds C, B1, B2");
        cmd->add_option("kind", bo.kind, "C | B1 | B2")
            ->required()
            ->check(CLI::IsMember({"C", "B1", "B2"}));
        cmd->add_option("-r,--r,--R", bo.r, "rank argument (R for B1/B2)")->required();
        cmd->add_option("--n", bo.n, "value argument")->required();
        cmd->add_option("--det", bo.det, "determinant, rational (kind C only; default 1)");
        cmd->add_option("--precision", bo.precision, "working precision in bits")
            ->capture_default_str();
        add_output_flag(cmd, bo.c);
        cmd->callback(
            [&] { exit_code = run_bounds(bo.kind, bo.r, bo.n, bo.det, bo.precision, bo.c); });
    }

    // trace-lattice ----------------------------------------------------------------
    struct {
        CommonOpts c;
        std::string okgram, hx, hy, hz;
        std::optional<std::string> gram_out;
    } tl;
    {
        auto* cmd = app.add_subcommand(
            "trace-lattice", "transfer an order-valued Gram matrix to an integer Gram matrix");
        cmd->add_option("--okgram", tl.okgram, "order-valued Gram matrix document")->required();
        cmd->add_option("--hx", tl.hx, "numerator coordinate of 1")->required();
        cmd->add_option("--hy", tl.hy, "numerator coordinate of rho")->required();
        cmd->add_option("--hz", tl.hz, "numerator coordinate of rho^2")->required();
        cmd->add_option("--gram-out", tl.gram_out, "write the transferred Gram matrix here");
        add_output_flag(cmd, tl.c);
        cmd->callback([&] {
            exit_code = run_trace_lattice(tl.okgram, tl.hx, tl.hy, tl.hz, tl.gram_out, tl.c);
        });
    }

    // rank-bound ----------------------------------------------------------------------
    struct {
        CommonOpts c;
        std::string family;
        long a = 7, k = 1, precision = 128;
        bool classical_flag = false, non_classical = false;
    } rb;
    {
        auto* cmd = app.add_subcommand("rank-bound",
                                       "rank lower bound for universal lattices over one field");
        cmd->add_option("family,--family", rb.family, "shanks | ennola | family3")->required();
        cmd->add_option("--a", rb.a, "family parameter (>= 7)")->required();
        cmd->add_option("--k", rb.k, "universality multiplier")->capture_default_str();
        auto* oc = cmd->add_flag("--classical", rb.classical_flag, "classical lattice (default)");
        cmd->add_flag("--non-classical", rb.non_classical, "non-classical lattice")->excludes(oc);
        cmd->add_option("--precision", rb.precision, "working precision in bits")
            ->capture_default_str();
        add_output_flag(cmd, rb.c);
        cmd->callback([&] {
            exit_code = run_rank_bound(family_arg(rb.family), rb.a, rb.k, !rb.non_classical,
                                       rb.precision, rb.c);
        });
    }

    // density ------------------------------------------------------------------------
    struct {
        CommonOpts c;
        std::string family;
        long X = 7, k = 1, precision = 128;
        std::optional<std::string> B;
        std::optional<long> R;
        bool check = false, classical_flag = false, non_classical = false;
    } de;
    {
        auto* cmd = app.add_subcommand(
            "density", "count family members whose counting constant stays under a threshold");
        cmd->add_option("family,--family", de.family, "shanks | ennola | family3")->required();
        cmd->add_option("--X", de.X, "count a in [7, X]")->required();
        auto* ob = cmd->add_option("--B", de.B, "threshold, rational");
        cmd->add_option("--R", de.R, "derive the threshold from the rank-R bound")->excludes(ob);
        cmd->add_option("--k", de.k, "universality multiplier (with --R)")->capture_default_str();
        auto* oc = cmd->add_flag("--classical", de.classical_flag, "classical lattice (default)");
        cmd->add_flag("--non-classical", de.non_classical, "non-classical lattice")->excludes(oc);
        cmd->add_flag("--check", de.check, "also run the counting check against sqrt thresholds");
        cmd->add_option("--precision", de.precision, "working precision in bits")
            ->capture_default_str();
        add_output_flag(cmd, de.c);
        cmd->callback([&] {
            exit_code = run_density(family_arg(de.family), de.X, de.B, de.R, de.k,
                                    !de.non_classical, de.check, de.precision, de.c);
        });
    }

    // exceptional -----------------------------------------------------------------------
    struct {
        CommonOpts c;
        std::string family, eps;
        long X = 7, k = 1, precision = 128;
        bool classical_flag = false, non_classical = false;
    } ex;
    {
        auto* cmd = app.add_subcommand(
            "exceptional", "count family members whose proven rank bound misses the power target");
        cmd->add_option("family,--family", ex.family, "shanks | ennola | family3")->required();
        cmd->add_option("--X", ex.X, "count a in [7, X]")->required();
        cmd->add_option("--eps", ex.eps, "exponent offset, rational in (0,1)")->required();
        cmd->add_option("--k", ex.k, "universality multiplier")->capture_default_str();
        auto* oc = cmd->add_flag("--classical", ex.classical_flag, "classical lattice (default)");
        cmd->add_flag("--non-classical", ex.non_classical, "non-classical lattice")->excludes(oc);
        cmd->add_option("--precision", ex.precision, "working precision in bits")
            ->capture_default_str();
        add_output_flag(cmd, ex.c);
        cmd->callback([&] {
            exit_code = run_exceptional(family_arg(ex.family), ex.X, ex.eps, ex.k,
                                        !ex.non_classical, ex.precision, ex.c);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const division_by_zero& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const definiteness_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
