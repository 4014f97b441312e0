#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kps/engine.hpp"

namespace kps {

/// Outcome of one identity check. A failing report always carries a witness
/// (first mismatching coefficient or cross-multiplication residue).
struct CheckReport {
    std::string check_id;
    std::string inputs;  // compact JSON object
    bool pass = false;
    std::string witness;
};

/// Compares the engine's closed forms against independently transcribed
/// low-rank reference formulas (r <= 4), by exact cross-multiplication.
/// case_id is one of "complex", "real-n0", "real-npos", "quat-npos",
/// "quat-n0". For "real-n0" and "quat-n0" with odd genus, d is the half
/// degree (the actual degree is 2d); for "quat-n0" with even genus the
/// actual degree is 2d + r; for "quat-npos" d is the actual (even) degree.
CheckReport check_appendix(const std::string& case_id, long r, long g, long d,
                           long n = 0, long a = 1);

/// Checks t^{r^2(g-1)+1} P(1/t) = P(t) for P = (1-t) p_tau_closed under the
/// coprimality hypothesis of the relevant duality statement.
CheckReport check_strange_duality(const KleinType& kt, BundleKind tau, long r, long d);

/// Total mod-2 Betti number of the real moduli space: 2^{n-1} components
/// times the t=1 limit of (1-t) P^{tau_R}(r, d).
BigRat total_betti_real_moduli(const KleinType& kt, long r, long d);

/// Total Betti number of the complex moduli space: t=1 limit of
/// (1-t^2) P_g(r, d); requires gcd(r, d) = 1.
BigRat total_betti_complex_moduli(long g, long r, long d);

/// Equality of the complex total Betti number with 2^g times the real total
/// on the maximal curve (g, g+1, 0).
CheckReport check_maximality(long g, long r, long d);

/// fixed_determinant_poincare(2) = (1+t)^3 and its value 8 at t = 1.
CheckReport check_saveliev_wang();

/// The shipped identity suite: reference-formula comparisons, structural
/// relations, dualities, coprime polynomiality, maximality numbers. Keeps
/// only checks whose id contains `filter` when non-empty.
std::vector<CheckReport> default_suite(const std::string& filter = "");

/// One JSON object per line: {check_id, inputs, verdict, witness?}.
void write_jsonl(std::ostream& os, const std::vector<CheckReport>& reports);

}  // namespace kps
