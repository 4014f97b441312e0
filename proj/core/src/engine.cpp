#include "kps/engine.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "kps/factored.hpp"

namespace kps {

namespace {

void require_complex_args(long g, long r) {
    if (g < 2) throw std::invalid_argument("genus must satisfy g >= 2");
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
}

void require_tau_args(const KleinType& kt, BundleKind tau, long r, long d) {
    BundleType bt{r, d, tau, std::nullopt};
    const std::string why = bundle_violation(kt, bt);
    if (!why.empty()) throw std::invalid_argument(why);
}

// ---- per-case block factors ------------------------------------------------

// numerator polynomial and denominator factors of the classifying-space
// series attached to one filtration block
struct BlockFactor {
    Poly num{{1}, Var::t};
    FactorMap den;
};

FactorMap den_double_tower(long s, long step) {
    // prod_{j=1}^{s-1} (1 - t^{step j}) * prod_{j=1}^{s} (1 - t^{step j})
    FactorMap m;
    for (long j = 1; j <= s - 1; ++j) m[step * j] += 1;
    for (long j = 1; j <= s; ++j) m[step * j] += 1;
    return m;
}

// prod_{j=1}^{s} (1+t^{2j-1})^e over the standard denominator tower; covers
// the complex case (e = 2g) and every n = 0 case (e = g+1)
BlockFactor block_odd_power(long e, long s) {
    BlockFactor b;
    for (long j = 1; j <= s; ++j) b.num = poly_mul(b.num, one_plus_pow(2 * j - 1, e));
    b.den = den_double_tower(s, 2);
    return b;
}

BlockFactor block_real_npos(long g, long n, long s) {
    BlockFactor b;
    for (long j = 1; j <= s; ++j) b.num = poly_mul(b.num, one_plus_pow(2 * j - 1, g - n + 1));
    for (long j = 1; j <= s - 1; ++j) b.num = poly_mul(b.num, one_plus_pow(j, n));
    for (long j = 1; j <= s; ++j) b.num = poly_mul(b.num, one_plus_pow(j, n));
    b.den = den_double_tower(s, 2);
    return b;
}

// block of half-rank s for quaternionic bundles with real points
BlockFactor block_quat_npos(long g, long s) {
    BlockFactor b;
    for (long j = 1; j <= 2 * s; ++j) b.num = poly_mul(b.num, one_plus_pow(2 * j - 1, g));
    b.den = den_double_tower(s, 4);
    return b;
}

RationalFn block_to_rf(const BlockFactor& b) {
    return RationalFn(b.num, factor_map_poly(b.den), 1);
}

// ---- closed-formula assembly ----------------------------------------------

// One composition sum: sum over (r_1..r_l) with sum r_i = comp_rank of
//   (-1)^{l-1} 2^{mult_base (l-1)}
//   * t^{m_scale M(comp; lambda) + pair_coeff sum_{i<j} r_i r_j}
//   / prod_{i<l} (1 - t^{m_scale (r_i + r_{i+1})})
//   * prod_i block(r_i)
struct ClosedParams {
    long comp_rank;
    BigRat lambda;
    long m_scale;
    long pair_coeff;
    long mult_base = 0;
    std::function<BlockFactor(long)> block;
};

RationalFn zagier_sum(const ClosedParams& p) {
    std::vector<FactoredTerm> terms;
    for (const auto& comp : compositions(p.comp_rank)) {
        const long l = static_cast<long>(comp.size());
        FactoredTerm term;
        term.coeff = (l % 2 == 1 ? BigRat(1) : BigRat(-1)) *
                     pow2(static_cast<unsigned long>(p.mult_base * (l - 1)));
        long pair_sum = 0;
        {
            long acc = 0;
            for (long ri : comp) {
                pair_sum += acc * ri;
                acc += ri;
            }
        }
        term.t_expo = BigRat(p.m_scale) * zagier_exponent_m(comp, p.lambda) +
                      BigRat(p.pair_coeff * pair_sum);
        for (long i = 0; i + 1 < l; ++i)
            term.den[p.m_scale * (comp[static_cast<size_t>(i)] + comp[static_cast<size_t>(i) + 1])] += 1;
        for (long ri : comp) {
            BlockFactor b = p.block(ri);
            term.num = poly_mul(term.num, b.num);
            merge_factors(term.den, b.den);
        }
        terms.push_back(std::move(term));
    }
    return factored_sum(terms);
}

// ---- recursion -------------------------------------------------------------

// memoized stratification recursion; codim_weight is 2 for the complex case
// (complex codimension doubled) and 1 for the tau cases
class Recursion {
public:
    Recursion(long order, long g, long codim_weight,
              std::function<RationalFn(long)> q_of_rank,
              std::function<bool(const HnType&)> admissible,
              std::function<long(const HnType&)> multiplicity)
        : order_(order),
          g_(g),
          codim_weight_(codim_weight),
          q_of_rank_(std::move(q_of_rank)),
          admissible_(std::move(admissible)),
          multiplicity_(std::move(multiplicity)) {}

    const ScaledSeries& compute(long r, long d) {
        const auto key = std::make_pair(r, d);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        ScaledSeries acc = rf_to_series(q_of_rank_(r), order_);
        const long max_codim = order_ / codim_weight_;
        for (const auto& mu : enumerate_hn_types(r, d, g_, max_codim)) {
            if (mu.is_semistable()) continue;
            if (!admissible_(mu)) continue;
            const long shift = codim_weight_ * codim_dmu(mu, g_);
            if (shift > order_) continue;
            ScaledSeries prod = ScaledSeries::one(1, order_);
            for (const auto& b : mu.blocks) prod = series_mul(prod, compute(b.r, b.d));
            prod = series_scale(prod, BigRat(multiplicity_(mu)));
            acc = series_sub(acc, series_shift(prod, BigRat(shift)));
        }
        return memo_.emplace(key, std::move(acc)).first->second;
    }

private:
    long order_, g_, codim_weight_;
    std::function<RationalFn(long)> q_of_rank_;
    std::function<bool(const HnType&)> admissible_;
    std::function<long(const HnType&)> multiplicity_;
    std::map<std::pair<long, long>, ScaledSeries> memo_;
};

}  // namespace

// ---- classifying-space series ----------------------------------------------

RationalFn q_complex(long g, long r) {
    require_complex_args(g, r);
    return block_to_rf(block_odd_power(2 * g, r));
}

RationalFn q_tau(const KleinType& kt, BundleKind tau, long r) {
    if (!validate_klein(kt)) throw std::invalid_argument(klein_violation(kt));
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
    if (kt.n == 0) return block_to_rf(block_odd_power(kt.g + 1, r));
    if (tau == BundleKind::Real) return block_to_rf(block_real_npos(kt.g, kt.n, r));
    if (r % 2 != 0) throw std::invalid_argument("quaternionic with n>0 requires even rank");
    return block_to_rf(block_quat_npos(kt.g, r / 2));
}

RationalFn f_tau(const KleinType& kt, BundleKind tau, long r) {
    if (!validate_klein(kt)) throw std::invalid_argument(klein_violation(kt));
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
    Poly num({1}, Var::t);
    FactorMap den;
    if (kt.n == 0) {
        for (long j = 1; j <= r; ++j) num = poly_mul(num, one_plus_pow(2 * j - 1, kt.g + 1));
        for (long j = 1; j <= r; ++j) den[2 * j] += 1;
    } else if (tau == BundleKind::Real) {
        for (long j = 1; j <= r; ++j) num = poly_mul(num, one_plus_pow(2 * j - 1, kt.g - kt.n + 1));
        for (long j = 1; j <= r - 1; ++j) num = poly_mul(num, one_plus_pow(j, kt.n));
        for (long j = 1; j <= r; ++j) num = poly_mul(num, one_plus_pow(j, kt.n));
        for (long j = 1; j <= r; ++j) den[2 * j] += 1;
    } else {
        if (r % 2 != 0) throw std::invalid_argument("quaternionic with n>0 requires even rank");
        for (long j = 1; j <= r; ++j) num = poly_mul(num, one_plus_pow(2 * j - 1, kt.g));
        for (long j = 1; j <= r / 2; ++j) num = poly_mul(num, one_plus_pow(4 * j - 1, 1));
        for (long j = 1; j <= r / 2; ++j) den[4 * j] += 1;
    }
    return RationalFn(std::move(num), factor_map_poly(den), 1);
}

// ---- semi-stable locus series ----------------------------------------------

ScaledSeries p_complex_recursive(long g, long r, long d, long order) {
    require_complex_args(g, r);
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    Recursion rec(
        order, g, /*codim_weight=*/2, [g](long rank) { return q_complex(g, rank); },
        [](const HnType&) { return true; }, [](const HnType&) { return 1L; });
    return rec.compute(r, d);
}

RationalFn p_complex_zagier(long g, long r, long d) {
    require_complex_args(g, r);
    ClosedParams p;
    p.comp_rank = r;
    p.lambda = BigRat(d, r);
    p.m_scale = 2;
    p.pair_coeff = 2 * (g - 1);
    p.block = [g](long s) { return block_odd_power(2 * g, s); };
    return zagier_sum(p);
}

ScaledSeries p_tau_recursive(const KleinType& kt, BundleKind tau, long r, long d, long order) {
    require_tau_args(kt, tau, r, d);
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    Recursion rec(
        order, kt.g, /*codim_weight=*/1,
        [kt, tau](long rank) { return q_tau(kt, tau, rank); },
        [kt, tau](const HnType& mu) { return tau_admissible(mu, kt, tau); },
        [kt, tau](const HnType& mu) { return real_multiplicity(mu, kt, tau); });
    return rec.compute(r, d);
}

RationalFn p_tau_closed(const KleinType& kt, BundleKind tau, long r, long d) {
    require_tau_args(kt, tau, r, d);
    ClosedParams p;
    if (tau == BundleKind::Real && kt.n > 0) {
        p.comp_rank = r;
        p.lambda = BigRat(d, r);
        p.m_scale = 1;
        p.pair_coeff = kt.g - 1;
        p.mult_base = kt.n - 1;
        const long g = kt.g, n = kt.n;
        p.block = [g, n](long s) { return block_real_npos(g, n, s); };
    } else if (kt.n == 0) {
        // real (even degree), quaternionic with odd genus (even degree), or
        // quaternionic with even genus (degree of the form 2d' + r)
        const bool quat_even_g = tau == BundleKind::Quaternionic && kt.g % 2 == 0;
        const long dprime = quat_even_g ? (d - r) / 2 : d / 2;
        p.comp_rank = r;
        p.lambda = BigRat(dprime, r);
        p.m_scale = 2;
        p.pair_coeff = kt.g - 1;
        const long e = kt.g + 1;
        p.block = [e](long s) { return block_odd_power(e, s); };
    } else {
        // quaternionic with real points: even rank and degree, compositions
        // of the half-rank
        p.comp_rank = r / 2;
        p.lambda = BigRat(d / 2, r / 2);
        p.m_scale = 4;
        p.pair_coeff = 4 * (kt.g - 1);
        const long g = kt.g;
        p.block = [g](long s) { return block_quat_npos(g, s); };
    }
    return zagier_sum(p);
}

Poly moduli_poincare(const KleinType& kt, BundleKind tau, long r, long d) {
    if (std::gcd(r, d) != 1)
        throw std::invalid_argument("moduli_poincare: rank and degree must be coprime");
    require_tau_args(kt, tau, r, d);
    RationalFn p = p_tau_closed(kt, tau, r, d);
    RationalFn f = rf_mul(RationalFn(Poly({1, -1}, Var::t), Poly({1}, Var::t), 1), p);
    auto poly = rf_is_polynomial(f);
    if (!poly)
        throw std::domain_error("moduli_poincare: (1-t) P is not a polynomial");
    const long expected = r * r * (kt.g - 1) + 1;
    if (poly->degree() != expected)
        throw std::domain_error("moduli_poincare: unexpected degree " +
                                std::to_string(poly->degree()) + ", expected " +
                                std::to_string(expected));
    return *poly;
}

Poly fixed_determinant_poincare(long g) {
    if (g < 2) throw std::invalid_argument("genus must satisfy g >= 2");
    // (1+t)^{g-1} ((1+t^2)^g - (2t)^g) / (1-t)^2
    Poly diff = poly_sub(poly_pow(Poly({1, 0, 1}, Var::t), g),
                         Poly::monomial(g, pow2(static_cast<unsigned long>(g)), Var::t));
    Poly num = poly_mul(poly_pow(Poly({1, 1}, Var::t), g - 1), diff);
    return poly_divexact(num, Poly({1, -2, 1}, Var::t));
}

// ---- request routing ---------------------------------------------------------

std::string request_violation(const SeriesRequest& req) {
    if (req.order < 1) return "order must be >= 1";
    if (req.family == SeriesCase::Complex) {
        if (req.kt.g < 2) return "genus must satisfy g >= 2";
        if (req.rank < 1) return "rank must be >= 1";
        return {};
    }
    const BundleKind kind =
        req.family == SeriesCase::RealTau ? BundleKind::Real : BundleKind::Quaternionic;
    if (req.method == Method::ProductFormula) {
        // the stack series ignores the degree, so only the Klein type and
        // rank constraints apply
        if (!validate_klein(req.kt)) return "invalid Klein type: " + klein_violation(req.kt);
        if (req.rank < 1) return "rank must be >= 1";
        if (kind == BundleKind::Quaternionic && req.kt.n > 0 && req.rank % 2 != 0)
            return "quaternionic with n>0 requires even rank";
        return {};
    }
    return bundle_violation(req.kt, BundleType{req.rank, req.degree, kind, std::nullopt});
}

SeriesResult compute_series(const SeriesRequest& req) {
    const std::string why = request_violation(req);
    if (!why.empty()) throw std::invalid_argument(why);
    const BundleKind kind =
        req.family == SeriesCase::RealTau ? BundleKind::Real : BundleKind::Quaternionic;
    SeriesResult out;
    switch (req.method) {
        case Method::Recursion:
            out.series = req.family == SeriesCase::Complex
                             ? p_complex_recursive(req.kt.g, req.rank, req.degree, req.order)
                             : p_tau_recursive(req.kt, kind, req.rank, req.degree, req.order);
            return out;
        case Method::Closed:
            out.closed_form = req.family == SeriesCase::Complex
                                  ? p_complex_zagier(req.kt.g, req.rank, req.degree)
                                  : p_tau_closed(req.kt, kind, req.rank, req.degree);
            break;
        case Method::ProductFormula:
            out.closed_form = req.family == SeriesCase::Complex
                                  ? q_complex(req.kt.g, req.rank)
                                  : q_tau(req.kt, kind, req.rank);
            break;
    }
    out.series = rf_to_series(*out.closed_form, req.order);
    return out;
}

}  // namespace kps
