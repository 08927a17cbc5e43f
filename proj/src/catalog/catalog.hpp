#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "catalog/report.hpp"
#include "geom/connection.hpp"
#include "geom/contact.hpp"
#include "lie/presentation.hpp"
#include "spin/lift.hpp"

namespace ssp {

/// Almost contact (3-)structure tensors of the cases that carry one:
/// the special unitary spheres, the quaternionic spheres with contact-pair
/// parameters, and the circle-twisted quaternionic spheres.
struct StructureTensors {
  std::vector<VectorXd> xi;    // Reeb vectors in frame coefficients
  std::vector<MatrixXd> phi;   // endomorphisms of m
  std::vector<Form> Phi;       // fundamental 2-forms g(., phi .)
  std::vector<Form> eta;       // dual 1-forms
};

/// Throws std::domain_error for cases without an invariant (almost) contact
/// structure (so, u, spsp1, g2, spin7, spin9).
StructureTensors structure_tensors(const ReductiveDecomposition& d);

/// The canonical spinor psi_0 = (omega + i y_1)/sqrt2 and the auxiliary
/// spinors psi_r = xi_r . psi_0 on the 7-dimensional quaternionic spheres.
/// The returned list is {psi_0, psi_1, psi_2, psi_3} for the sp case and the
/// sublist matching the invariant spinors otherwise.
std::vector<Spinor> canonical_spinors_7d(const ReductiveDecomposition& d, const SpinorSpace& sp);

/// Basis of invariant k-forms (joint kernel of the isotropy derivations);
/// uses the sparse elimination path on large form spaces.
std::vector<Form> invariant_forms(const ReductiveDecomposition& d, int k, double tol);

/// Distance from a form to the span of a computed family (coefficients
/// relative to their norms).
double form_span_residual(const std::vector<Form>& basis, const Form& target);

/// Full verification pipeline of one case at one parameter point.
CaseReport run_case(CaseTag tag, int n, const MetricSpec& metric, double tol = 1e-9);

/// The dedicated 15-sphere suite (forms, spinor, squaring table, torsion,
/// spinorial equation).
CaseReport s15_report(double a, double b, double tol = 1e-9);

/// Round-metric cross-checks: eigenvalue multiplicities of the invariant
/// generalized Killing spinors on the 3- and 7-dimensional realizations.
CaseReport round_metric_crosscheck(double tol = 1e-9);

/// Recomputed table reports: "table2", "s7forms", "s15forms", "s15squaring",
/// "spnU1forms".
CaseReport table_report(const std::string& which, double tol = 1e-9, uint64_t seed = 1);

/// Markdown rendering that mirrors the catalogue table layouts.
std::string render_table(const std::string& which, const CaseReport& rep);

/// Experimental probe of the deformed Killing equation
///   nabla_X psi = (alpha/2) X.psi + ((alpha-delta)/2) sum_p eta_p(X) Phi_p.psi
/// on the sum E = E_1^- + E_2^- + E_3^- of the Friedrich-Kath spaces of the
/// quaternionic sphere with contact-pair parameters. Returns the worst
/// residual over an orthonormal basis of E and all frame directions.
double deformed_killing_residual(const ReductiveDecomposition& d, double tol = 1e-9);

}  // namespace ssp
