// Acceptance suite: runs every shipped correctness criterion at its stated
// tolerance (always exact) and prints one pass/fail line per criterion.
// Exit status is the number of failing criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "kps/verify.hpp"
#include "oracles.hpp"

using namespace kps;

namespace {

struct Tally {
    long checks = 0;
    std::ostringstream detail;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond) {
            ok = false;
            detail << "\n    " << what;
        }
    }
};

std::vector<KleinType> klein_types(long g, bool positive_n_only) {
    std::vector<KleinType> out;
    for (long n = positive_n_only ? 1 : 0; n <= g + 1; ++n)
        for (long a = 0; a <= 1; ++a)
            if (validate_klein({g, n, a})) out.push_back({g, n, a});
    return out;
}

RationalFn one_minus_t() { return RationalFn(Poly({1, -1}, Var::t), Poly({1}, Var::t), 1); }

// the full identity suite, computed once and shared across criteria
const std::vector<CheckReport>& full_suite() {
    static const std::vector<CheckReport> reports = default_suite();
    return reports;
}

void suite_into(Tally& t, const std::string& filter) {
    long selected = 0;
    for (const auto& rep : full_suite()) {
        if (rep.check_id.find(filter) == std::string::npos) continue;
        ++selected;
        t.expect(rep.pass, rep.check_id + ": " + rep.witness);
    }
    t.expect(selected > 0, "suite filter '" + filter + "' selected nothing");
}

// 1. closed forms equal the transcribed low-rank reference formulas
void criterion_appendix(Tally& t) { suite_into(t, "appendix."); }

// 2. recursion and closed formula agree to order 30 for every case
void criterion_differential(Tally& t) {
    const long order = 30;
    auto agree = [&](const KleinType& kt, BundleKind tau, long r, long d) {
        const auto closed = rf_to_series(p_tau_closed(kt, tau, r, d), order);
        const auto rec = p_tau_recursive(kt, tau, r, d, order);
        std::ostringstream what;
        what << "tau case (" << kt.g << "," << kt.n << "," << kt.a << ") "
             << (tau == BundleKind::Real ? "real" : "quat") << " r=" << r << " d=" << d;
        t.expect(closed == rec, what.str());
    };
    for (long g = 2; g <= 5; ++g) {
        for (long r = 1; r <= 4; ++r) {
            for (long d = 0; d < r; ++d) {
                t.expect(rf_to_series(p_complex_zagier(g, r, d), order) ==
                             p_complex_recursive(g, r, d, order),
                         "complex g=" + std::to_string(g) + " r=" + std::to_string(r) +
                             " d=" + std::to_string(d));
                agree({g, 0, 1}, BundleKind::Real, r, 2 * d);
                if (g % 2 == 1)
                    agree({g, 0, 1}, BundleKind::Quaternionic, r, 2 * d);
                else
                    agree({g, 0, 1}, BundleKind::Quaternionic, r, 2 * d + r);
                for (const auto& kt : klein_types(g, true)) agree(kt, BundleKind::Real, r, d);
            }
            if (r % 2 == 0) {
                for (long dp = 0; dp < r / 2; ++dp)
                    for (const auto& kt : klein_types(g, true))
                        agree(kt, BundleKind::Quaternionic, r, 2 * dp);
            }
        }
    }
}

// 3. every tau case at rank 1 is (1+t)^{g+1}/(1-t^2)
void criterion_rank_one(Tally& t) {
    for (long g = 2; g <= 5; ++g) {
        const RationalFn expect(poly_pow(Poly({1, 1}, Var::t), g + 1), Poly({1, 0, -1}, Var::t), 1);
        for (const auto& kt : klein_types(g, false)) {
            std::vector<std::pair<BundleKind, long>> cases;
            if (kt.n == 0) {
                cases.emplace_back(BundleKind::Real, 0);
                cases.emplace_back(BundleKind::Quaternionic, g % 2 == 1 ? 0 : 1);
            } else {
                cases.emplace_back(BundleKind::Real, 0);
                cases.emplace_back(BundleKind::Real, 1);
                // quaternionic with real points needs even rank: no rank-1 case
            }
            for (const auto& [tau, d] : cases) {
                std::ostringstream what;
                what << "rank-1 (" << kt.g << "," << kt.n << "," << kt.a << ") d=" << d;
                t.expect(p_tau_closed(kt, tau, 1, d) == expect, what.str());
            }
        }
    }
}

// 4. coincidences between real, quaternionic and complex series
void criterion_corollary_equal(Tally& t) { suite_into(t, "corollary-equal."); }

// 5. strange Poincare duality with D = r^2(g-1)+1
void criterion_strange_duality(Tally& t) {
    suite_into(t, "duality.");
    // printed opening of the rank-2 genus-2 quaternionic series
    const auto f = rf_mul(one_minus_t(), p_tau_closed({2, 1, 1}, BundleKind::Quaternionic, 2, 2));
    const auto s = rf_to_series(f, 3);
    t.expect(s.coeff_t(0) == BigRat(1) && s.coeff_t(1) == BigRat(1) &&
                 s.coeff_t(2) == BigRat(-1) && s.coeff_t(3) == BigRat(1),
             "series of (1-t) P does not open 1 + t - t^2 + t^3");
}

// 6. coprime real case gives an honest Poincare polynomial
void criterion_polynomiality(Tally& t) { suite_into(t, "polynomiality."); }

// 7. total Betti numbers and maximality, r up to 6
void criterion_maximality(Tally& t) { suite_into(t, "maximality."); }

// 8. fixed-determinant genus-2 value
void criterion_saveliev_wang(Tally& t) { suite_into(t, "saveliev-wang"); }

// 9. structural relations between Q and f, and reciprocal identities
void criterion_relations(Tally& t) { suite_into(t, "relation."); }

// 10. combinatorial kernels match brute-force oracles
void criterion_oracles(Tally& t) {
    for (long r = 1; r <= 3; ++r)
        for (long d = -3; d <= 3; ++d)
            for (long g : {2L, 3L}) {
                const auto fast = enumerate_hn_types(r, d, g, 12);
                const auto brute = kps_test::brute_force_hn_types(r, d, g, 12);
                std::ostringstream what;
                what << "hn enumeration r=" << r << " d=" << d << " g=" << g << " (" << fast.size()
                     << " vs " << brute.size() << ")";
                bool same = fast.size() == brute.size();
                for (size_t i = 0; same && i < fast.size(); ++i) same = fast[i] == brute[i];
                t.expect(same, what.str());
            }

    std::mt19937_64 rng(123456);
    for (int iter = 0; iter < 1000; ++iter) {
        const BigRat x = kps_test::random_rational(rng);
        const BigRat b = frac_bracket(x);
        t.expect(b > BigRat(0) && b <= BigRat(1) && (x + b).is_integer(),
                 "bracket property fails at " + x.str());
    }

    std::mt19937_64 rng2(31337);
    std::uniform_int_distribution<long> deg(-4, 4);
    std::uniform_int_distribution<long> genus(2, 5);
    int done = 0;
    while (done < 100) {
        const long g = genus(rng2);
        const long r = 2 + static_cast<long>(rng2() % 3);
        const long d = deg(rng2);
        for (const auto& mu : enumerate_hn_types(r, d, g, 10)) {
            const auto got = orientability_obstruction(mu, r, d, g);
            bool same = true;
            for (size_t i = 0; i < mu.blocks.size(); ++i) {
                const long direct = r * mu.blocks[i].d + (d + (r - 1) * (g - 1)) * mu.blocks[i].r;
                if (got[i] != static_cast<int>(((direct % 2) + 2) % 2)) same = false;
            }
            t.expect(same, "orientability mismatch at " + mu.str());
            if (++done >= 100) break;
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        std::string name;
        std::function<void(Tally&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "reference-formula equality (r <= 4)", criterion_appendix},
        {2, "recursion vs closed formula to order 30", criterion_differential},
        {3, "rank-1 anchor (1+t)^{g+1}/(1-t^2)", criterion_rank_one},
        {4, "real/quaternionic/complex coincidences", criterion_corollary_equal},
        {5, "strange Poincare duality", criterion_strange_duality},
        {6, "coprime polynomiality and duality", criterion_polynomiality},
        {7, "total Betti numbers and maximality (r <= 6)", criterion_maximality},
        {8, "fixed-determinant genus-2 value", criterion_saveliev_wang},
        {9, "structural relations for Q and f", criterion_relations},
        {10, "combinatorial oracle equivalence", criterion_oracles},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Tally t;
        const auto t0 = std::chrono::steady_clock::now();
        c.run(t);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        std::cout << (t.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.name
                  << " (" << t.checks << " checks, " << ms << " ms)";
        if (!t.ok) std::cout << t.detail.str();
        std::cout << "\n";
        if (!t.ok) ++failures;
    }
    return failures;
}
