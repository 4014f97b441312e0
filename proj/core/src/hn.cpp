#include "kps/hn.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kps {

bool validate_klein(const KleinType& kt) { return klein_violation(kt).empty(); }

std::string klein_violation(const KleinType& kt) {
    if (kt.g < 2) return "genus must satisfy g >= 2";
    if (kt.a != 0 && kt.a != 1) return "orientability index a must be 0 or 1";
    if (kt.n < 0 || kt.n > kt.g + 1) return "n must satisfy 0 <= n <= g+1";
    if (kt.n == 0 && kt.a != 1) return "n=0 requires a=1";
    if (kt.n == kt.g + 1 && kt.a != 0) return "n=g+1 requires a=0";
    if (kt.a == 0 && (kt.n - (kt.g + 1)) % 2 != 0) return "a=0 requires n == g+1 (mod 2)";
    return {};
}

bool validate_bundle(const KleinType& kt, const BundleType& bt) {
    return bundle_violation(kt, bt).empty();
}

std::string bundle_violation(const KleinType& kt, const BundleType& bt) {
    if (!validate_klein(kt)) return "invalid Klein type: " + klein_violation(kt);
    if (bt.r < 1) return "rank must be >= 1";
    const auto even = [](long x) { return ((x % 2) + 2) % 2 == 0; };
    if (bt.kind == BundleKind::Real) {
        if (kt.n == 0) {
            if (bt.w.has_value()) return "real n=0 admits no Stiefel-Whitney vector";
            if (!even(bt.d)) return "real n=0 requires even degree";
            return {};
        }
        if (bt.w.has_value()) {
            if (static_cast<long>(bt.w->size()) != kt.n)
                return "Stiefel-Whitney vector must have one entry per real circle";
            long sum = 0;
            for (int x : *bt.w) {
                if (x != 0 && x != 1) return "Stiefel-Whitney classes must be 0 or 1";
                sum += x;
            }
            if (!even(sum - bt.d)) return "sum of Stiefel-Whitney classes must equal degree (mod 2)";
        }
        return {};
    }
    // quaternionic
    if (bt.w.has_value()) return "quaternionic bundles carry no Stiefel-Whitney vector";
    if (kt.n > 0 && !even(bt.r)) return "quaternionic with n>0 requires even rank";
    if (!even(bt.d + bt.r * (kt.g - 1)))
        return "quaternionic requires degree + rank*(genus-1) even";
    return {};
}

std::pair<long, long> count_bundle_types(const KleinType& kt, long r, long d) {
    if (!validate_klein(kt)) throw std::invalid_argument("count_bundle_types: " + klein_violation(kt));
    if (r < 1) throw std::invalid_argument("count_bundle_types: rank must be >= 1");
    const auto even = [](long x) { return ((x % 2) + 2) % 2 == 0; };
    long real_count = 0;
    if (kt.n == 0) {
        real_count = even(d) ? 1 : 0;
    } else {
        // w in {0,1}^n with sum w == d (mod 2): parity splits the cube evenly
        real_count = 1L << (kt.n - 1);
    }
    long quat_count = 0;
    if (even(d + r * (kt.g - 1)) && (kt.n == 0 || even(r))) quat_count = 1;
    return {real_count, quat_count};
}

BigRat frac_bracket(const BigRat& x) {
    BigRat b = BigRat(x.floor()) + BigRat(1) - x;
    assert(b > BigRat(0) && b <= BigRat(1));
    assert((x + b).is_integer());
    return b;
}

BigRat zagier_exponent_m(std::span<const long> comp, const BigRat& lambda) {
    if (comp.empty()) throw std::invalid_argument("zagier_exponent_m: empty composition");
    for (long ri : comp)
        if (ri < 1) throw std::invalid_argument("zagier_exponent_m: parts must be >= 1");
    BigRat m(0);
    long partial = 0;
    for (size_t i = 0; i + 1 < comp.size(); ++i) {
        partial += comp[i];
        m += BigRat(comp[i] + comp[i + 1]) * frac_bracket(BigRat(partial) * lambda);
    }
    return m;
}

long HnType::total_rank() const {
    long r = 0;
    for (const auto& b : blocks) r += b.r;
    return r;
}

long HnType::total_degree() const {
    long d = 0;
    for (const auto& b : blocks) d += b.d;
    return d;
}

bool HnType::slopes_strictly_decreasing() const {
    for (size_t i = 0; i + 1 < blocks.size(); ++i) {
        // d_i/r_i > d_{i+1}/r_{i+1}  <=>  d_i r_{i+1} - d_{i+1} r_i > 0
        if (blocks[i].d * blocks[i + 1].r - blocks[i + 1].d * blocks[i].r <= 0) return false;
    }
    return true;
}

std::string HnType::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << ", ";
        os << "(" << blocks[i].r << "," << blocks[i].d << ")";
    }
    os << ")";
    return os.str();
}

long codim_dmu(const HnType& mu, long g) {
    if (mu.blocks.empty()) throw std::invalid_argument("codim_dmu: empty type");
    // sum_{i<j} [ (d_i r_j - d_j r_i) + r_i r_j (g-1) ], integral by construction
    long total = 0;
    const auto& b = mu.blocks;
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j)
            total += (b[i].d * b[j].r - b[j].d * b[i].r) + b[i].r * b[j].r * (g - 1);
    if (mu.length() >= 2 && total <= 0)
        throw std::domain_error("codim_dmu: non-positive codimension for an unstable type");
    return total;
}

std::vector<HnType> enumerate_hn_types(long r, long d, long g, long max_codim) {
    if (r < 1) throw std::invalid_argument("enumerate_hn_types: rank must be >= 1");
    if (max_codim < 0) throw std::invalid_argument("enumerate_hn_types: max_codim must be >= 0");
    std::vector<HnType> out;
    out.push_back(HnType{{HnBlock{r, d}}});  // the semi-stable type

    // For an unstable type, d_mu = dbar + (g-1) sum_{i<j} r_i r_j with
    // dbar = sum_{i<j} (d_i r_j - d_j r_i) >= 1, so every block slope lies
    // within max_codim of d/r: |d_i/r_i - d/r| <= dbar <= max_codim.
    for (const auto& comp : compositions(r)) {
        const long l = static_cast<long>(comp.size());
        if (l < 2) continue;
        long pair_sum = 0;
        {
            long acc = 0;
            for (long ri : comp) {
                pair_sum += acc * ri;
                acc += ri;
            }
        }
        if ((g - 1) * pair_sum + (l * (l - 1)) / 2 > max_codim) continue;
        const long budget = max_codim - (g - 1) * pair_sum;

        std::vector<HnBlock> acc;
        acc.reserve(static_cast<size_t>(l));
        // recursive choice of d_i, slopes strictly decreasing, pruned on the
        // accumulated cross term
        auto rec = [&](auto&& self, long idx, long rem_deg) -> void {
            const long ri = comp[static_cast<size_t>(idx)];
            if (idx == l - 1) {
                const long di = rem_deg;
                if (!acc.empty()) {
                    const auto& prev = acc.back();
                    if (prev.d * ri - di * prev.r <= 0) return;
                }
                acc.push_back({ri, di});
                HnType mu{acc};
                acc.pop_back();
                if (!mu.slopes_strictly_decreasing()) return;
                if (codim_dmu(mu, g) <= max_codim) out.push_back(std::move(mu));
                return;
            }
            // slope window: d_i/r_i in (d/r - budget, d/r + budget]
            const long lo = static_cast<long>((BigRat(d * ri, r) - BigRat(budget * ri)).floor().get_si()) - 1;
            const long hi = static_cast<long>((BigRat(d * ri, r) + BigRat(budget * ri)).floor().get_si()) + 1;
            for (long di = lo; di <= hi; ++di) {
                if (!acc.empty()) {
                    const auto& prev = acc.back();
                    if (prev.d * ri - di * prev.r <= 0) continue;
                }
                acc.push_back({ri, di});
                // partial cross term already decided must stay within budget
                long partial = 0;
                for (size_t i = 0; i < acc.size(); ++i)
                    for (size_t j = i + 1; j < acc.size(); ++j)
                        partial += acc[i].d * acc[j].r - acc[j].d * acc[i].r;
                if (partial <= budget) self(self, idx + 1, rem_deg - di);
                acc.pop_back();
            }
        };
        rec(rec, 0, d);
    }
    std::sort(out.begin(), out.end(), [](const HnType& a, const HnType& b) {
        return a.blocks < b.blocks;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool tau_admissible(const HnType& mu, const KleinType& kt, BundleKind tau) {
    const auto even = [](long x) { return ((x % 2) + 2) % 2 == 0; };
    for (const auto& b : mu.blocks) {
        if (tau == BundleKind::Real) {
            if (kt.n == 0 && !even(b.d)) return false;
        } else {
            if (kt.n == 0) {
                if (!even(b.d + b.r * (kt.g - 1))) return false;
            } else {
                if (!even(b.r) || !even(b.d)) return false;
            }
        }
    }
    return true;
}

long real_multiplicity(const HnType& mu, const KleinType& kt, BundleKind tau) {
    if (!tau_admissible(mu, kt, tau))
        throw std::invalid_argument("real_multiplicity: type not admissible for this (kt, tau)");
    if (tau != BundleKind::Real || kt.n == 0) return 1;
    const long e = (kt.n - 1) * (mu.length() - 1);
    assert(e >= 0 && e < 62);
    return 1L << e;
}

std::vector<std::vector<long>> compositions(long r) {
    if (r < 1) throw std::invalid_argument("compositions: r must be >= 1");
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (long first = 1; first <= rem; ++first) {
            cur.push_back(first);
            self(self, rem - first);
            cur.pop_back();
        }
    };
    rec(rec, r);
    return out;
}

std::vector<int> orientability_obstruction(const HnType& mu, long r, long d, long g) {
    if (mu.total_rank() != r || mu.total_degree() != d)
        throw std::invalid_argument("orientability_obstruction: type does not match (r, d)");
    const auto mod2 = [](long x) { return static_cast<int>(((x % 2) + 2) % 2); };
    std::vector<int> out;
    out.reserve(mu.blocks.size());
    for (const auto& b : mu.blocks) {
        if (r % 2 == 0)
            out.push_back(mod2((d + g - 1) * b.r));
        else
            out.push_back(mod2(b.d + d * b.r));
    }
    return out;
}

}  // namespace kps
