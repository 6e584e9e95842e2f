#pragma once

// Central free extensions S ⊆ R, the Gram-matrix test for Frobenius forms,
// Nakayama automorphisms, reduction at points of Max S, and lifting a graded
// form to a filtered algebra.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobex/algebra.hpp"
#include "frobex/grpdeg.hpp"
#include "frobex/linalg.hpp"

namespace frobex {

class ExtensionDefinitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graded mode only: the form sends two homogeneous inputs to different
/// degree shifts, or a homogeneous input to a non-homogeneous value.
class NonHomogeneousForm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Form = std::function<Element(const Element&)>;

/// R free over a central commutative subalgebra S spanned by basis indices.
struct CentralFreeExtension {
  std::string name;
  BasedAlgebra ambient;
  std::function<bool(const BasisIndex&)> in_subring;
  std::vector<BasisIndex> subring_generators;
  /// Free basis of R over S.
  std::vector<BasisIndex> basis;
  /// y = sum_b coeffs[b] * b with coeffs supported on S.
  std::function<std::vector<Element>(const Element&)> decompose;
  /// Left S-linear map R -> S.
  Form form;
  /// Value at a point of Max S of an S basis index (a character of S).
  std::function<Scalar(const BasisIndex&, std::span<const Scalar>)> evaluate;
  std::size_t point_dimension = 0;
  /// Polynomial degree of evaluate(idx, .) in the point coordinates.
  std::function<int(const BasisIndex&)> point_degree;
  /// Preferred F1 partner for basis element i (optional).
  std::function<std::optional<std::size_t>(std::size_t)> complement;
  /// Generator word w with idx == x_{w0} x_{w1} ... exactly (optional; for
  /// extending Nakayama maps multiplicatively).
  std::function<std::vector<std::size_t>(const BasisIndex&)> word_of;
  /// Exponent total bound used when sampling inputs from ambient.enumerate.
  int sample_total = 4;

  /// sum_b coeffs[b] * b.
  Element reassemble(std::span<const Element> coeffs) const;
  /// Product in R of an S element (given on S indices) with an element.
  Element subring_times(const Element& s, const Element& r) const { return ambient.multiply(s, r); }
  /// S elements of degree 0 are scalars (every S generator has degree > 0).
  bool subring_connected() const;
};

/// Matrix over S.
using SubringMatrix = std::vector<std::vector<Element>>;

enum class Verdict { frobenius, not_frobenius, inconclusive };
/// S is assumed to be a monoid algebra without nontrivial monomial units, so
/// its units are the nonzero scalars; singular covers every non-unit.
enum class GramKind { unit_determinant, singular, probabilistic_unit, inconclusive };

struct GramStatus {
  GramKind kind = GramKind::singular;
  std::string method;
  std::string detail;
  /// Upper bound on the chance that a probabilistic verdict is wrong.
  double failure_bound = 0.0;
  std::optional<Scalar> determinant;
};

struct F1Witness {
  std::size_t basis = 0;
  std::optional<std::size_t> right;  // Phi(b c) != 0
  std::optional<std::size_t> left;   // Phi(c b) != 0
  bool complete() const { return right.has_value() && left.has_value(); }
};

struct Refutation {
  enum class Kind { missing_f1_witness, non_unit_gram, asymmetric_degrees };
  Kind kind;
  std::string detail;
};

struct NakayamaData {
  /// Image of each ambient generator.
  std::vector<Element> images;
  bool trivial = false;
  bool fixes_subring = false;
  std::size_t pairs_checked = 0;
};

struct FrobeniusCertificate {
  Verdict verdict = Verdict::inconclusive;
  std::size_t rank = 0;
  Filtration mode = Filtration::graded;
  std::optional<GroupElement> phi_degree;
  std::optional<GroupElement> symmetry_d;
  DegreeMultiset degrees;
  GramStatus gram_status;
  SubringMatrix gram;
  std::vector<F1Witness> f1_witnesses;
  std::optional<NakayamaData> nakayama;
  std::optional<Refutation> refutation;
};

std::string to_string(Verdict v);
std::string to_string(GramKind k);

struct VerifyOptions {
  /// Treat a graded ambient as filtered (the form need not be homogeneous).
  bool as_filtered = false;
  std::uint64_t seed = 1;
  int determinant_points = 20;
  int random_samples = 30;
  /// Solve for the Nakayama automorphism when the Gram matrix is constant and
  /// the extension can write basis indices as generator words.
  bool compute_nakayama = true;
  std::size_t nakayama_pairs = 200;
};

SubringMatrix gram_matrix(const CentralFreeExtension& E);

/// Unit test for det(M) in S. Paths: generalized permutation; constant
/// entries (exact elimination); graded degree-zero (det homogeneous of
/// degree 0 in a connected S is a scalar, read off at one point);
/// otherwise evaluation at random points of Max S.
GramStatus det_is_unit(const CentralFreeExtension& E, const SubringMatrix& M, std::uint64_t seed = 1,
                       int points = 20, std::optional<GroupElement> form_degree = std::nullopt);

FrobeniusCertificate verify_frobenius(const CentralFreeExtension& E, const VerifyOptions& options = {});

/// Degree multiset of the free basis (filtered degree of each basis element).
DegreeMultiset basis_degrees(const CentralFreeExtension& E);

NakayamaData nakayama_on_generators(const CentralFreeExtension& E, const FrobeniusCertificate& cert,
                                    std::uint64_t seed = 1, std::size_t random_pairs = 200);
/// Extends generator images multiplicatively and linearly.
Element apply_nakayama(const CentralFreeExtension& E, const NakayamaData& nu, const Element& r);

struct ReducedAlgebra {
  BasedAlgebra algebra;
  std::vector<Scalar> point;
  /// Phi reduced at the point, a linear functional on the basis.
  std::vector<Scalar> form_on_basis;
  FpMatrix pairing;
  std::size_t dimension = 0;
  std::size_t pairing_rank = 0;
  bool nondegenerate = false;
};

ReducedAlgebra reduce_at_point(const CentralFreeExtension& E, std::vector<Scalar> point);

/// The finite-dimensional algebra as an extension of the base field, with
/// the given functional (defaults to the reduced form).
CentralFreeExtension as_field_extension(const ReducedAlgebra& reduced,
                                        std::optional<std::vector<Scalar>> functional = std::nullopt);

/// Lifts a form on gr R to R: Phi(y) = sum_b z_b(y) * Phibar(b), reading
/// gr S and S on the same indices. Throws DomainError if gr of the filtered
/// ambient differs from the graded ambient within table_total.
CentralFreeExtension lift_form(CentralFreeExtension filtered, const CentralFreeExtension& graded, int table_total);

struct DualFunctional {
  std::size_t basis = 0;
  GroupElement degree;
};

/// Coordinate functionals phi_i(b_j) = delta_ij, phi_i of degree -deg(b_i).
std::vector<DualFunctional> dual_basis(const CentralFreeExtension& E);
Element apply_dual(const CentralFreeExtension& E, const DualFunctional& phi, const Element& y);

/// Homogeneous components of E.form on a graded ambient, keyed by mapping
/// degree (ascending). The degrees are read off the values on the basis.
std::vector<std::pair<GroupElement, Form>> homogeneous_components(const CentralFreeExtension& E);

}  // namespace frobex
