#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kps/rational.hpp"

namespace kps {

/// Topological type (g, n, a) of a Klein surface: genus, number of real
/// circles, orientability index of the quotient.
struct KleinType {
    long g = 2;
    long n = 0;
    long a = 1;
};

/// Checks the classification constraints for g >= 2:
/// 0 <= n <= g+1; n=0 => a=1; n=g+1 => a=0; a=0 => n == g+1 (mod 2).
bool validate_klein(const KleinType& kt);
inline bool validate_klein(long g, long n, long a) { return validate_klein({g, n, a}); }
/// Human-readable reason a Klein type is invalid; empty when valid.
std::string klein_violation(const KleinType& kt);

enum class BundleKind { Real, Quaternionic };

/// Topological type of a real or quaternionic bundle. The Stiefel-Whitney
/// vector w (one class per real circle) applies to real bundles with n > 0;
/// when absent, validation only asks for existence of some admissible w.
struct BundleType {
    long r = 1;
    long d = 0;
    BundleKind kind = BundleKind::Real;
    std::optional<std::vector<int>> w;
};

/// Existence of a bundle with the given invariants over a surface of type kt:
/// real n=0 needs d even; real n>0 needs sum w == d (mod 2) (always solvable
/// when w is unspecified); quaternionic needs d + r(g-1) even, plus even rank
/// when n > 0.
bool validate_bundle(const KleinType& kt, const BundleType& bt);
/// Reason the bundle type is invalid; empty when valid.
std::string bundle_violation(const KleinType& kt, const BundleType& bt);

/// Number of distinct topological types with the given rank and degree:
/// (count of admissible Stiefel-Whitney vectors, 0/1 quaternionic existence).
std::pair<long, long> count_bundle_types(const KleinType& kt, long r, long d);

/// <x> = 1 + floor(x) - x, the unique value in (0, 1] with x + <x> integral.
BigRat frac_bracket(const BigRat& x);

/// M(r_1,...,r_l; lambda) = sum_{i<l} (r_i + r_{i+1}) <(r_1+...+r_i) lambda>.
BigRat zagier_exponent_m(std::span<const long> comp, const BigRat& lambda);

struct HnBlock {
    long r = 1;
    long d = 0;
    friend bool operator==(const HnBlock&, const HnBlock&) = default;
    friend auto operator<=>(const HnBlock&, const HnBlock&) = default;
};

/// Harder-Narasimhan type: blocks (r_i, d_i) with strictly decreasing slopes
/// d_i/r_i. A single block is the semi-stable type.
struct HnType {
    std::vector<HnBlock> blocks;

    long length() const { return static_cast<long>(blocks.size()); }
    bool is_semistable() const { return blocks.size() == 1; }
    BigRat slope(long i) const { return BigRat(blocks[static_cast<size_t>(i)].d, blocks[static_cast<size_t>(i)].r); }
    long total_rank() const;
    long total_degree() const;
    bool slopes_strictly_decreasing() const;

    friend bool operator==(const HnType&, const HnType&) = default;
    std::string str() const;
};

/// Codimension d_mu = sum_{i<j} r_i r_j (mu_i - mu_j + g - 1); always a
/// non-negative integer for a valid type, positive when l >= 2 and g >= 2.
long codim_dmu(const HnType& mu, long g);

/// All types with total (r, d), strictly decreasing slopes and codimension
/// <= max_codim, the semi-stable type included. Deterministic output:
/// sorted lexicographically on the block lists.
std::vector<HnType> enumerate_hn_types(long r, long d, long g, long max_codim);

/// Blockwise existence parity for (kt, tau): real n=0 needs every d_i even;
/// quaternionic n=0 needs d_i + r_i(g-1) even; quaternionic n>0 needs r_i and
/// d_i even; real n>0 is unconstrained.
bool tau_admissible(const HnType& mu, const KleinType& kt, BundleKind tau);

/// Number of tau-types over a holomorphic type: 2^{(n-1)(l-1)} for real
/// bundles with n > 0 (the Stiefel-Whitney choices on filtration quotients),
/// 1 otherwise.
long real_multiplicity(const HnType& mu, const KleinType& kt, BundleKind tau);

/// All 2^{r-1} ordered compositions of r, in lexicographic order.
std::vector<std::vector<long>> compositions(long r);

/// Coefficient vector of the orientability obstruction of the stratum's
/// equivariant normal bundle, one class w_i per block, mod 2:
/// r even -> (d+g-1) r_i; r odd -> d_i + d r_i. The bundle is non-orientable
/// iff the vector is nonzero.
std::vector<int> orientability_obstruction(const HnType& mu, long r, long d, long g);

}  // namespace kps
