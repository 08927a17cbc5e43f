#pragma once

#include <optional>
#include <vector>

#include "geom/connection.hpp"
#include "geom/form.hpp"
#include "lie/presentation.hpp"
#include "spinor/spinor.hpp"

namespace ssp {

/// Closed-form reference values for the catalogue, evaluated at the given
/// metric parameters. Everything here is an explicit formula or a frozen
/// coefficient table; nothing is computed through the solver paths.
namespace expected {

/// Complex dimension of the space of invariant spinors.
int spinor_dim(CaseTag tag, int n);

/// Canonical-connection torsion tensor in the frame, exact per case.
Tensor3 canonical_torsion(const ReductiveDecomposition& d);

/// Totally skew projection of the canonical torsion as a 3-form.
Form canonical_torsion_skew(const ReductiveDecomposition& d);

/// Parameter predicate for totally skew canonical torsion (naturally
/// reductive metrics): a=b, a1=..=a4, a=b=c per case.
bool naturally_reductive_params(const MetricSpec& m);

/// Generalized Killing eigenvalues per summand for the labelled invariant
/// spinors of a case; empty if the case has none.
/// Index identifies the spinor: su -> {psi_plus, psi_minus}; sp (n=2),
/// spu1 -> {psi_0, psi_1, ...}; exceptional -> the Killing spinor(s).
std::vector<std::vector<double>> gks_eigenvalues(const ReductiveDecomposition& d);

/// alpha of the compatible invariant alpha-Sasakian structure, when the case
/// admits one at these parameters.
std::optional<double> sasakian_alpha(const ReductiveDecomposition& d);

/// Dimensions of the invariant k-form spaces where the catalogue fixes them:
/// the three 7-sphere tables (degrees 0..3) and the full 15-sphere table
/// (degrees 0..7). Returns an empty list when not tabulated.
std::vector<int> invariant_form_dims(CaseTag tag, int n);

// ---- the 15-sphere reference data ----

Form s15_omega();  // invariant 3-form
Form s15_Psi();    // invariant horizontal 4-form
/// d omega and d Psi, including the 1/sqrt(a/2) normalization and the
/// a/b-dependent horizontal part of d omega.
Form s15_domega(double a, double b);
Form s15_dPsi(double a);
/// The 8-term invariant spinor (unit norm).
Spinor s15_psi(const SpinorSpace& sp);
/// Coefficients (lambda_1..lambda_4) of omega_(7) on the reference 7-form
/// basis and the omega_(4) coefficient on pr_{2,2}(d omega).
double s15_squaring_c4(double a);
std::array<double, 4> s15_squaring_c7(double a, double b);

}  // namespace expected
}  // namespace ssp
