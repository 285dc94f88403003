#pragma once

// Exact lower bounds on Turan numbers ex(n, H_k^r) and Turan densities
// pi(H_k^r). Every value is an exact rational; decimals are presentation
// only and always rounded down.

#include "daisy/arith.hpp"
#include "daisy/counts.hpp"
#include "daisy/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace daisy {

enum class Formula { C1, C3A, T3, RECURS, CINF, BLOWUP, PAIR, PI_R, CHROM };

inline const char* to_string(Formula f)
{
    switch (f) {
    case Formula::C1: return "C1";
    case Formula::C3A: return "C3A";
    case Formula::T3: return "T3";
    case Formula::RECURS: return "RECURS";
    case Formula::CINF: return "CINF";
    case Formula::BLOWUP: return "BLOWUP";
    case Formula::PAIR: return "PAIR";
    case Formula::PI_R: return "PI_R";
    case Formula::CHROM: return "CHROM";
    }
    return "?";
}

/// True for formulas that bound an edge count ex(n, H) rather than a density.
inline bool bounds_edge_count(Formula f)
{
    return f == Formula::C1 || f == Formula::C3A || f == Formula::T3 || f == Formula::RECURS ||
           f == Formula::CHROM;
}

enum class BoundTag { Certified, Estimate };

inline const char* to_string(BoundTag t)
{
    return t == BoundTag::Certified ? "CERTIFIED" : "ESTIMATE";
}

/// A parameter value: small integers stay integers, everything else is an
/// exact rational.
using ParamValue = std::variant<long long, Integer, Rational>;

inline std::string to_string(const ParamValue& v)
{
    if (auto* i = std::get_if<long long>(&v)) {
        return std::to_string(*i);
    }
    if (auto* z = std::get_if<Integer>(&v)) {
        return z->get_str();
    }
    return to_fraction_string(std::get<Rational>(v));
}

struct BoundReport {
    Formula formula = Formula::C3A;
    std::vector<std::pair<std::string, ParamValue>> params;
    Rational value;
    std::vector<std::string> inputs;  ///< ids of upstream reports
    BoundTag tag = BoundTag::Certified;
    unsigned places = 6;

    /// e.g. "C3A(n=42,r=8)"
    std::string id() const
    {
        std::string out = to_string(formula);
        out += '(';
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += params[i].first + "=" + to_string(params[i].second);
        }
        return out + ')';
    }

    std::string decimal() const { return to_decimal_floor(value, places); }

    /// Smallest integer >= value. Meaningful for edge-count bounds: edge
    /// counts are integral, so any real lower bound lifts to its ceiling.
    Integer ceil() const { return ceil_of(value); }

    const ParamValue* param(const std::string& name) const
    {
        for (const auto& [k, v] : params) {
            if (k == name) {
                return &v;
            }
        }
        return nullptr;
    }
};

namespace detail {

inline void require(bool ok, const std::string& message)
{
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

inline Rational ratio(const Integer& num, const Integer& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Edge-count bounds

/// Averaging bound: (1/n) sum_d N(n, r, k-1, d).
inline BoundReport bound_C1(unsigned n, unsigned r, unsigned k,
                            std::uint64_t budget = default_enumeration_budget, unsigned threads = 1)
{
    detail::require(k >= 3 && k <= r + 1 && r + 1 < n, "bound_C1 needs 3 <= k <= r+1 < n");
    const unsigned t = k - 1;
    CountTable table = t == 2 ? count_table(n, r, 2, CountMethod::Formula)
                              : count_table(n, r, t, CountMethod::Brute, budget, threads);
    BoundReport rep;
    rep.formula = Formula::C1;
    rep.params = {{"n", (long long)n}, {"r", (long long)r}, {"k", (long long)k}};
    rep.value = detail::ratio(table.sum(), Integer(n));
    return rep;
}

/// Closed form for k = 3: C(n,r)/n + (1/r) sum_{d=0}^{floor(n/r)-1} C(n-1-rd, r-1).
inline BoundReport bound_C3a(unsigned n, unsigned r)
{
    detail::require(r >= 2 && n > r, "bound_C3a needs r >= 2 and n > r");
    Integer sum(0);
    for (unsigned d = 0; d < n / r; ++d) {
        sum += binomial_signed(static_cast<long>(n) - 1 - static_cast<long>(r) * d, r - 1);
    }
    BoundReport rep;
    rep.formula = Formula::C3A;
    rep.params = {{"n", (long long)n}, {"r", (long long)r}};
    rep.value = detail::ratio(binomial(n, r), Integer(n)) + detail::ratio(sum, Integer(r));
    rep.value.canonicalize();
    return rep;
}

/// ex(tn) >= t^r ex(n) + C(tn,r)/n - t^r C(n,r)/n - t^{r-1}(t-1) C(n-1,r-2)/2,
/// with t = k - 1.
inline BoundReport bound_T3(const Integer& ex_n, unsigned n, unsigned r, unsigned k,
                            std::vector<std::string> inputs = {})
{
    detail::require(k >= 3 && r >= 2 && n >= r, "bound_T3 needs k >= 3, 2 <= r <= n");
    detail::require(ex_n >= 0, "ex input must be non-negative");
    const unsigned t = k - 1;
    const Integer tr = ipow(Integer(t), r);
    Rational v = Rational(tr * ex_n);
    v += detail::ratio(binomial(static_cast<unsigned long>(t) * n, r), Integer(n));
    v -= detail::ratio(tr * binomial(n, r), Integer(n));
    v -= detail::ratio(ipow(Integer(t), r - 1) * (t - 1) * binomial_signed(static_cast<long>(n) - 1, static_cast<long>(r) - 2),
                       Integer(2));
    v.canonicalize();
    BoundReport rep;
    rep.formula = Formula::T3;
    rep.params = {{"ex", ex_n}, {"n", (long long)n}, {"r", (long long)r}, {"k", (long long)k}};
    rep.value = v;
    rep.inputs = std::move(inputs);
    return rep;
}

/// s-fold iterate of bound_T3, bounding ex(t^s n):
///   t^{sr} ex(n)
///   + (1/n) sum_{i=1}^{s-1} (t-1) t^{sr-ir-i} C(t^i n, r)
///   + (1/n) t^{1-s} C(t^s n, r)
///   - (1/n) t^{sr} C(n, r)
///   - ((r-1)/n) sum_{i=1}^{s} ((t-1)/2) t^{sr-ir+r-i} C(t^{i-1} n, r-1)
inline BoundReport bound_recurs(const Integer& ex_n, unsigned n, unsigned r, unsigned k, unsigned s,
                                std::vector<std::string> inputs = {})
{
    detail::require(k >= 3 && r >= 2 && n >= r && s >= 1, "bound_recurs needs k >= 3, 2 <= r <= n, s >= 1");
    detail::require(ex_n >= 0, "ex input must be non-negative");
    const unsigned long t = k - 1;
    const long lr = r;
    const long sr = static_cast<long>(s) * lr;
    const Rational inv_n = detail::ratio(Integer(1), Integer(n));
    auto scaled_n = [&](long i) { return Integer(ipow(Integer(t), static_cast<unsigned long>(i)) * n); };

    Rational v = Rational(ipow(Integer(t), static_cast<unsigned long>(sr)) * ex_n);
    for (long i = 1; i < static_cast<long>(s); ++i) {
        v += inv_n * Rational(Integer(t - 1) * binomial(scaled_n(i), r)) * rpow(t, sr - i * lr - i);
    }
    v += inv_n * rpow(t, 1 - static_cast<long>(s)) * Rational(binomial(scaled_n(s), r));
    v -= inv_n * Rational(ipow(Integer(t), static_cast<unsigned long>(sr)) * binomial(n, r));
    Rational tail(0);
    for (long i = 1; i <= static_cast<long>(s); ++i) {
        tail += rpow(t, sr - i * lr + lr - i) * Rational(binomial(scaled_n(i - 1), r - 1));
    }
    v -= detail::ratio(Integer(r - 1) * (t - 1), Integer(2) * n) * tail;
    v.canonicalize();

    BoundReport rep;
    rep.formula = Formula::RECURS;
    rep.params = {{"ex", ex_n}, {"n", (long long)n}, {"r", (long long)r}, {"k", (long long)k}, {"s", (long long)s}};
    rep.value = v;
    rep.inputs = std::move(inputs);
    return rep;
}

/// (chi(L(H)) - 1)/n * C(n, r) for an r-graph H with at most 24 edges.
inline BoundReport bound_chrom(unsigned n, unsigned r, const UniformHypergraph& h)
{
    detail::require(h.r() == r, "H must be an r-graph");
    detail::require(n >= 1, "n must be positive");
    if (h.edge_count() > chromatic_vertex_limit) {
        throw LimitExceeded("bound_chrom needs H with at most " + std::to_string(chromatic_vertex_limit) +
                            " edges for an exact chromatic number");
    }
    unsigned chi = chromatic_number(line_graph(h));
    BoundReport rep;
    rep.formula = Formula::CHROM;
    rep.params = {{"n", (long long)n}, {"r", (long long)r}, {"chi", (long long)chi}};
    rep.value = chi == 0 ? Rational(0) : detail::ratio(Integer(chi - 1) * binomial(n, r), Integer(n));
    return rep;
}

// ---------------------------------------------------------------------------
// Density bounds

/// r! ex / n^r: the density certified by blowing up an H-free graph on n
/// vertices (H pair-covering).
inline BoundReport pi_blowup(const Integer& ex_value, unsigned n, unsigned r,
                             std::vector<std::string> inputs = {})
{
    detail::require(ex_value >= 0, "ex value must be non-negative");
    detail::require(n >= 1 && r >= 1, "pi_blowup needs n, r >= 1");
    BoundReport rep;
    rep.formula = Formula::BLOWUP;
    rep.params = {{"ex", ex_value}, {"n", (long long)n}, {"r", (long long)r}};
    rep.value = detail::ratio(factorial(r) * ex_value, ipow(Integer(n), r));
    rep.inputs = std::move(inputs);
    return rep;
}

/// Chains an edge-count report into a density bound on its vertex count.
inline BoundReport pi_blowup(const BoundReport& ex_report, unsigned n, unsigned r)
{
    if (!bounds_edge_count(ex_report.formula)) {
        throw std::invalid_argument(std::string("pi_blowup needs an edge-count bound, got ") +
                                    to_string(ex_report.formula));
    }
    return pi_blowup(ex_report.ceil(), n, r, {ex_report.id()});
}

struct CinfTerms {
    Rational head;       ///< r! ex / n^r - r! C(n,r) / n^{r+1}
    Rational positive;   ///< (t-1)/n * sum_{i<=M} t^{-i} r! C(t^i n, r) / (t^i n)^r
    Rational negative;   ///< C(t,2) (r-1) r / n^2 * sum_{i<=M} t^{-2i} (r-1)! C(t^{i-1} n, r-1) / (t^{i-1} n)^{r-1}
};

namespace detail {

inline Rational cinf_positive_term(unsigned n, unsigned r, unsigned long t, unsigned i)
{
    Integer m = ipow(Integer(t), i) * n;
    Rational q(factorial(r) * binomial(m, r), ipow(Integer(t), i) * ipow(m, r));
    q.canonicalize();
    return q * detail::ratio(Integer(t - 1), Integer(n));
}

inline Rational cinf_negative_term(unsigned n, unsigned r, unsigned long t, unsigned i)
{
    Integer m = ipow(Integer(t), i - 1) * n;
    Rational q(factorial(r - 1) * binomial(m, r - 1), ipow(Integer(t), 2 * i) * ipow(m, r - 1));
    q.canonicalize();
    Integer pairs = Integer(t) * (t - 1) / 2;
    return q * detail::ratio(pairs * (r - 1) * r, Integer(n) * n);
}

}  // namespace detail

inline constexpr unsigned cinf_dominance_window = 64;

/// Density bound from the infinite recursion, both series truncated after M
/// terms. Tagged CERTIFIED only when, for every i in (M, M+64], the i-th
/// positive term dominates the i-th subtracted term and their ratio is
/// increasing; otherwise ESTIMATE.
inline BoundReport pi_Cinf(const Integer& ex_n, unsigned n, unsigned r, unsigned k, unsigned M,
                           std::vector<std::string> inputs = {}, CinfTerms* terms = nullptr)
{
    detail::require(k >= 3 && r >= 2 && n >= r && M >= 1, "pi_Cinf needs k >= 3, 2 <= r <= n, M >= 1");
    const unsigned long t = k - 1;
    CinfTerms parts;
    parts.head = detail::ratio(factorial(r) * ex_n, ipow(Integer(n), r)) -
                 detail::ratio(factorial(r) * binomial(n, r), ipow(Integer(n), r + 1));
    for (unsigned i = 1; i <= M; ++i) {
        parts.positive += detail::cinf_positive_term(n, r, t, i);
        parts.negative += detail::cinf_negative_term(n, r, t, i);
    }

    bool dominated = true;
    std::optional<Rational> prev_ratio;
    for (unsigned i = M + 1; i <= M + cinf_dominance_window && dominated; ++i) {
        Rational a = detail::cinf_positive_term(n, r, t, i);
        Rational b = detail::cinf_negative_term(n, r, t, i);
        if (a < b) {
            dominated = false;
            break;
        }
        if (b > 0) {
            Rational q = a / b;
            if (prev_ratio && q <= *prev_ratio) {
                dominated = false;
            }
            prev_ratio = q;
        }
    }

    BoundReport rep;
    rep.formula = Formula::CINF;
    rep.params = {{"ex", ex_n}, {"n", (long long)n}, {"r", (long long)r}, {"k", (long long)k}, {"M", (long long)M}};
    rep.value = parts.head + parts.positive - parts.negative;
    rep.value.canonicalize();
    rep.tag = dominated ? BoundTag::Certified : BoundTag::Estimate;
    rep.inputs = std::move(inputs);
    if (terms != nullptr) {
        *terms = parts;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// pi_r = max_n r! C(n,r) / n^{r+1}

/// r! C(n,r) / n^{r+1} = n(n-1)...(n-r+1) / n^{r+1}
inline Rational pi_r_objective(unsigned n, unsigned r)
{
    Integer falling(1);
    for (unsigned j = 0; j < r; ++j) {
        if (n < j) {
            return Rational(0);
        }
        falling *= n - j;
    }
    return detail::ratio(falling, ipow(Integer(n), r + 1));
}

struct PiR {
    unsigned r = 0;
    unsigned n_star = 0;
    Rational value;
    unsigned search_limit = 0;
};

/// Exhaustive maximization over n in [r, search_limit] (default 2r^2). Throws
/// std::logic_error if the objective is not decreasing at the right end of
/// the window, i.e. if the window could have cut off the maximum.
inline PiR pi_r(unsigned r, unsigned search_limit = 0)
{
    detail::require(r >= 2, "pi_r needs r >= 2");
    if (search_limit == 0) {
        search_limit = 2 * r * r;
    }
    detail::require(search_limit > r, "search limit must exceed r");
    PiR out{r, r, pi_r_objective(r, r), search_limit};
    Rational prev = out.value;
    Rational last;
    for (unsigned n = r + 1; n <= search_limit; ++n) {
        Rational v = pi_r_objective(n, r);
        if (v > out.value) {
            out.value = v;
            out.n_star = n;
        }
        if (n == search_limit) {
            last = v;
        }
        else {
            prev = v;
        }
    }
    if (!(last < prev) || out.n_star == search_limit) {
        throw std::logic_error("pi_r objective is not decreasing at the end of the search window");
    }
    return out;
}

inline BoundReport pi_r_report(const PiR& p)
{
    BoundReport rep;
    rep.formula = Formula::PI_R;
    rep.params = {{"r", (long long)p.r}, {"n", (long long)p.n_star}};
    rep.value = p.value;
    return rep;
}

/// Rational enclosure [lo, hi] of e from the Taylor series truncated after
/// `terms` terms; the tail is below 1/(terms! * terms).
inline std::pair<Rational, Rational> euler_enclosure(unsigned terms = 30)
{
    Rational lo(0);
    Integer fact(1);
    for (unsigned k = 0; k <= terms; ++k) {
        if (k > 0) {
            fact *= k;
        }
        lo += detail::ratio(Integer(1), fact);
    }
    Rational hi = lo + detail::ratio(Integer(1), fact * terms);
    return {lo, hi};
}

struct Sandwich {
    Rational lower;  ///< 2/(e_lo (r^2+r)), at least 2e^{-1}/(r^2+r)
    Rational upper;  ///< 2/(e_hi (r^2-r)), at most 2e^{-1}/(r^2-r)
    bool lower_holds = false;
    bool upper_holds = false;
};

/// Decides 2e^{-1}/(r^2+r) <= pi_r <= 2e^{-1}/(r^2-r) exactly: since
/// 2/e_hi < 2/e < 2/e_lo, comparing against 2/(e_lo (r^2+r)) and
/// 2/(e_hi (r^2-r)) is sufficient.
inline Sandwich pi_r_sandwich(const PiR& p)
{
    auto [e_lo, e_hi] = euler_enclosure();
    const long r = p.r;
    Sandwich s;
    s.lower = Rational(2) / (e_lo * Rational(r * r + r));
    s.upper = Rational(2) / (e_hi * Rational(r * r - r));
    s.lower_holds = p.value >= s.lower;
    s.upper_holds = p.value <= s.upper;
    return s;
}

/// (k-1) pi_r: density bound for H_k^r from the residue-class construction.
inline BoundReport bound_pair(unsigned r, unsigned k)
{
    detail::require(k >= 3 && k <= r + 1, "bound_pair needs 3 <= k <= r+1");
    PiR p = pi_r(r);
    BoundReport rep;
    rep.formula = Formula::PAIR;
    rep.params = {{"r", (long long)r}, {"k", (long long)k}};
    rep.value = Rational(k - 1) * p.value;
    rep.inputs = {pi_r_report(p).id()};
    return rep;
}

// ---------------------------------------------------------------------------
// Parameter search over n

struct Pipeline {
    enum class Kind { C3aBlowup, C3aT3Blowup, C3aRecursBlowup };
    Kind kind = Kind::C3aBlowup;
    unsigned s = 1;  ///< recursion depth for C3aRecursBlowup

    std::string name() const
    {
        switch (kind) {
        case Kind::C3aBlowup: return "c3a-blowup";
        case Kind::C3aT3Blowup: return "c3a-t3-blowup";
        case Kind::C3aRecursBlowup: return "c3a-recurs" + std::to_string(s) + "-blowup";
        }
        return "?";
    }
};

struct PipelineResult {
    std::vector<BoundReport> chain;  ///< C3A, then T3/RECURS if used, then BLOWUP
    const BoundReport& density() const { return chain.back(); }
};

/// Runs one pipeline at a given n. The C3A value bounds ex(n, H_3^r) and
/// therefore ex(n, H_k^r) for every k >= 3; later stages use t = k - 1.
inline PipelineResult run_pipeline(unsigned r, unsigned k, unsigned n, const Pipeline& p)
{
    PipelineResult out;
    out.chain.push_back(bound_C3a(n, r));
    const unsigned t = k - 1;
    unsigned vertices = n;
    switch (p.kind) {
    case Pipeline::Kind::C3aBlowup:
        break;
    case Pipeline::Kind::C3aT3Blowup:
        out.chain.push_back(bound_T3(out.chain.back().ceil(), n, r, k, {out.chain.back().id()}));
        vertices = t * n;
        break;
    case Pipeline::Kind::C3aRecursBlowup: {
        out.chain.push_back(bound_recurs(out.chain.back().ceil(), n, r, k, p.s, {out.chain.back().id()}));
        unsigned long long scaled = n;
        for (unsigned i = 0; i < p.s; ++i) {
            scaled *= t;
        }
        vertices = static_cast<unsigned>(scaled);
        break;
    }
    }
    out.chain.push_back(pi_blowup(out.chain.back(), vertices, r));
    return out;
}

struct OptimizeResult {
    unsigned r = 0;
    unsigned k = 0;
    Pipeline pipeline;
    unsigned n_star = 0;
    double ratio = 0.0;                  ///< n* / r^2
    PipelineResult best;
    std::vector<std::pair<unsigned, BoundReport>> scan;  ///< (n, density) for every scanned n
};

/// Scans n over [r+1, ceil(1.2 r^2)] and keeps the largest density (ties:
/// smallest n).
inline OptimizeResult optimize_n(unsigned r, unsigned k, const Pipeline& p)
{
    detail::require(r >= 2 && k >= 3 && k <= r + 1, "optimize_n needs r >= 2 and 3 <= k <= r+1");
    const unsigned hi = static_cast<unsigned>((12ULL * r * r + 9) / 10);
    OptimizeResult out;
    out.r = r;
    out.k = k;
    out.pipeline = p;
    for (unsigned n = r + 1; n <= hi; ++n) {
        PipelineResult res = run_pipeline(r, k, n, p);
        out.scan.emplace_back(n, res.density());
        if (out.best.chain.empty() || res.density().value > out.best.density().value) {
            out.best = std::move(res);
            out.n_star = n;
        }
    }
    out.ratio = static_cast<double>(out.n_star) / (static_cast<double>(r) * r);
    return out;
}

/// Literature values quoted for context next to computed bounds; never used
/// as inputs.
struct ReferenceConstant {
    std::string name;
    std::string value;
    std::string kind;  ///< "exact", "lower", "upper" or "conjecture"
};

inline std::vector<ReferenceConstant> reference_constants(unsigned r, unsigned k)
{
    std::vector<ReferenceConstant> out;
    if (k >= 3 && r >= 2) {
        out.push_back({"general upper bound (k-2)/r", to_fraction_string(detail::ratio(Integer(k - 2), Integer(r))), "upper"});
    }
    if (k == 3) {
        if (r == 2) {
            out.push_back({"Mantel", "1/2", "exact"});
        }
        if (r == 3) {
            out.push_back({"Frankl-Furedi conjecture", "2/7", "conjecture"});
        }
        if (r == 4) {
            out.push_back({"Gunderson-Semeraro", "1/4", "exact"});
        }
        if (r == 5 || r == 6) {
            out.push_back({"Gunderson-Semeraro (via link monotonicity for r=5)", "9/64", "lower"});
        }
        if (r == 7) {
            out.push_back({"Gunderson-Semeraro", "35/2048", "lower"});
        }
        if (r == 8) {
            out.push_back({"Gunderson-Semeraro", "315/16384", "lower"});
        }
        if (r >= 2) {
            out.push_back({"Frankl-Furedi 2^{1-r}", "1/" + ipow(Integer(2), r - 1).get_str(), "lower"});
        }
    }
    if (k == 4 && r == 4) {
        out.push_back({"two-copies recursion", "3/7", "lower"});
    }
    if (k == 5 && r == 4) {
        out.push_back({"de Caen / Giraud", "11/16", "lower"});
    }
    if (k == 4 && r == 3) {
        out.push_back({"Sidorenko", "5/9", "lower"});
    }
    return out;
}

}  // namespace daisy
