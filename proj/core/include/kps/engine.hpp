#pragma once

#include <optional>

#include "kps/hn.hpp"
#include "kps/rational_fn.hpp"
#include "kps/series.hpp"

namespace kps {

/// Default truncation order in t-degrees for series computations.
inline constexpr long kDefaultOrder = 40;

enum class SeriesCase { Complex, RealTau, QuatTau };
enum class Method { Recursion, Closed, ProductFormula };

/// One routed computation: which series, for which topological data, by
/// which method, to which order. The Klein type is ignored in the complex
/// case; the degree is ignored by the product formula (the stack series does
/// not depend on it).
struct SeriesRequest {
    SeriesCase family = SeriesCase::Complex;
    KleinType kt;
    long rank = 1;
    long degree = 0;
    Method method = Method::Closed;
    long order = kDefaultOrder;
};

/// The violated constraint, or empty when the request is well-formed
/// (validation per the Klein/bundle classification; order >= 1).
std::string request_violation(const SeriesRequest& req);

struct SeriesResult {
    ScaledSeries series{1, 0};
    /// Present for the closed-formula and product methods.
    std::optional<RationalFn> closed_form;
};

/// Dispatches a request to the recursion, the closed formula or the
/// classifying-space product formula. Throws std::invalid_argument with the
/// violated constraint named when the request is invalid.
SeriesResult compute_series(const SeriesRequest& req);

/// Rational equivariant Poincare series of the classifying space of the
/// complex gauge group in rank r over a genus-g surface:
///   prod_{j<=r} (1+t^{2j-1})^{2g} / (prod_{j<=r-1} (1-t^{2j}) prod_{j<=r} (1-t^{2j})).
RationalFn q_complex(long g, long r);

/// Mod-2 Poincare series of the classifying space of the real or quaternionic
/// gauge group (equivalently, of the moduli stack of all such bundles).
/// Depends on (g, n, a) and r but not on the degree.
RationalFn q_tau(const KleinType& kt, BundleKind tau, long r);

/// Mod-2 equivariant Poincare series of the holonomy space; relates to q_tau
/// by q = f / prod_{i<=r-1} (1-t^{2i}) in the real and n=0 cases.
RationalFn f_tau(const KleinType& kt, BundleKind tau, long r);

/// Equivariant Poincare series of the semi-stable locus, computed by the
/// stratification recursion P(r,d) = Q(r) - sum over unstable types of
/// t^{2 d_mu} prod_i P(r_i, d_i), truncated at the given order.
ScaledSeries p_complex_recursive(long g, long r, long d, long order = kDefaultOrder);

/// The same series as an exact rational function, by Zagier's resolution of
/// the recursion: a signed sum over compositions of r.
RationalFn p_complex_zagier(long g, long r, long d);

/// Mod-2 equivariant Poincare series of the tau-semi-stable locus by the
/// recursion P(r,d) = Q(r) - sum t^{d_mu} mult(mu) prod_i P(r_i, d_i), where
/// the sum runs over admissible unstable types and mult is the number of
/// tau-types over a holomorphic type.
ScaledSeries p_tau_recursive(const KleinType& kt, BundleKind tau, long r, long d,
                             long order = kDefaultOrder);

/// Closed form of p_tau_recursive: the five-case composition sum, assembled
/// at the minimal scale making every exponent integral and descaled.
RationalFn p_tau_closed(const KleinType& kt, BundleKind tau, long r, long d);

/// Mod-2 Poincare polynomial (1-t) P^tau(r,d) of the moduli space in the
/// coprime case; checked to be a polynomial of degree r^2(g-1)+1.
Poly moduli_poincare(const KleinType& kt, BundleKind tau, long r, long d);

/// Mod-2 Poincare polynomial of the fixed-determinant moduli space of
/// rank-2 odd-degree bundles on a maximal curve:
///   (1+t)^{g-1} ((1+t^2)^g - (2t)^g) / (1-t)^2.
Poly fixed_determinant_poincare(long g);

}  // namespace kps
