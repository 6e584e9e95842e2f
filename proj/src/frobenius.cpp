#include "frobex/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <random>
#include <sstream>

namespace frobex {

namespace {

bool is_constant(const CentralFreeExtension& E, const Element& e) {
  if (e.is_zero()) return true;
  return e.size() == 1 && e.terms().begin()->first == E.ambient.unit_index();
}

Scalar constant_value(const CentralFreeExtension& E, const Element& e) {
  return e.coefficient(E.ambient.unit_index());
}

Scalar evaluate_element(const CentralFreeExtension& E, const Element& s, std::span<const Scalar> point) {
  const RootField& F = E.ambient.field();
  Scalar v = 0;
  for (const auto& [idx, c] : s.terms()) v = F.add(v, F.mul(c, E.evaluate(idx, point)));
  return v;
}

std::vector<Scalar> random_point(const CentralFreeExtension& E, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> coord(0, E.ambient.field().p() - 1);
  std::vector<Scalar> point(E.point_dimension);
  for (auto& c : point) c = coord(rng);
  return point;
}

Element random_element(const CentralFreeExtension& E, const std::vector<BasisIndex>& pool, std::mt19937_64& rng,
                       int terms = 3) {
  const RootField& F = E.ambient.field();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<Scalar> coeff(1, F.p() - 1);
  Element out;
  for (int t = 0; t < terms; ++t) out.add_term(F, pool[pick(rng)], coeff(rng));
  return out;
}

bool supported_on_subring(const CentralFreeExtension& E, const Element& e) {
  return std::all_of(e.terms().begin(), e.terms().end(), [&](const auto& t) { return E.in_subring(t.first); });
}

Element checked_form(const CentralFreeExtension& E, const Element& y) {
  Element v = E.form(y);
  if (!supported_on_subring(E, v)) {
    throw ExtensionDefinitionError("form value " + E.ambient.format(v) + " lies outside the subring");
  }
  return v;
}

void require_form(const CentralFreeExtension& E) {
  if (!E.form) throw ExtensionDefinitionError("extension '" + E.name + "' carries no form");
  if (E.basis.empty()) throw ExtensionDefinitionError("extension '" + E.name + "' has an empty basis");
}

void require_commutative_subring(const CentralFreeExtension& E) {
  const auto& gens = E.subring_generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (E.ambient.multiply_basis(gens[i], gens[j]) != E.ambient.multiply_basis(gens[j], gens[i])) {
        throw UnsupportedError("subring generators " + E.ambient.format(gens[i]) + " and " +
                               E.ambient.format(gens[j]) + " do not commute");
      }
    }
  }
}

FpMatrix evaluate_matrix(const CentralFreeExtension& E, const SubringMatrix& M, std::span<const Scalar> point) {
  const std::size_t r = M.size();
  FpMatrix out(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) out(i, j) = evaluate_element(E, M[i][j], point);
  }
  return out;
}

/// Pivot positions if M has at most one nonzero entry per row and column.
std::optional<std::vector<std::optional<std::size_t>>> permutation_pattern(const SubringMatrix& M) {
  const std::size_t r = M.size();
  std::vector<std::optional<std::size_t>> pivot(r);
  std::vector<bool> column_used(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (M[i][j].is_zero()) continue;
      if (pivot[i] || column_used[j]) return std::nullopt;
      pivot[i] = j;
      column_used[j] = true;
    }
  }
  return pivot;
}

Scalar permutation_sign(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2;
}

}  // namespace

Element CentralFreeExtension::reassemble(std::span<const Element> coeffs) const {
  if (coeffs.size() != basis.size()) throw DimensionError("one coefficient per basis element is required");
  Element out;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    out = combine(ambient.field(), out, ambient.multiply(coeffs[k], Element::monomial(basis[k])), 1, 1);
  }
  return out;
}

bool CentralFreeExtension::subring_connected() const {
  const GroupElement zero = GroupElement::zero(ambient.group_rank());
  return std::all_of(subring_generators.begin(), subring_generators.end(),
                     [&](const BasisIndex& s) { return ambient.degree(s) > zero; });
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::frobenius: return "frobenius";
    case Verdict::not_frobenius: return "not-frobenius";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(GramKind k) {
  switch (k) {
    case GramKind::unit_determinant: return "unit-determinant";
    case GramKind::singular: return "singular";
    case GramKind::probabilistic_unit: return "probabilistic-unit";
    case GramKind::inconclusive: return "inconclusive";
  }
  return "?";
}

SubringMatrix gram_matrix(const CentralFreeExtension& E) {
  require_form(E);
  const std::size_t r = E.basis.size();
  SubringMatrix M(r, std::vector<Element>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) M[i][j] = checked_form(E, E.ambient.multiply_basis(E.basis[i], E.basis[j]));
  }
  return M;
}

GramStatus det_is_unit(const CentralFreeExtension& E, const SubringMatrix& M, std::uint64_t seed, int points,
                       std::optional<GroupElement> form_degree) {
  require_commutative_subring(E);
  const RootField& F = E.ambient.field();
  const std::size_t r = M.size();
  for (const auto& row : M) {
    if (row.size() != r) throw DimensionError("Gram matrix must be square");
  }
  GramStatus status;

  for (std::size_t i = 0; i < r; ++i) {
    if (std::all_of(M[i].begin(), M[i].end(), [](const Element& e) { return e.is_zero(); })) {
      status.kind = GramKind::singular;
      status.method = "zero-row";
      status.detail = "row " + std::to_string(i) + " vanishes";
      status.determinant = 0;
      return status;
    }
  }

  if (auto pattern = permutation_pattern(M)) {
    status.method = "generalized-permutation";
    std::vector<std::size_t> perm(r);
    Scalar det = 1;
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t j = *(*pattern)[i];
      perm[i] = j;
      if (!is_constant(E, M[i][j])) {
        status.kind = GramKind::singular;
        status.detail = "pivot (" + std::to_string(i) + "," + std::to_string(j) + ") = " + E.ambient.format(M[i][j]) +
                        " is not a unit of the subring";
        return status;
      }
      det = F.mul(det, constant_value(E, M[i][j]));
    }
    if (permutation_sign(perm) == 1) det = F.neg(det);
    status.kind = GramKind::unit_determinant;
    status.determinant = det;
    status.detail = "product of " + std::to_string(r) + " scalar pivots";
    return status;
  }

  bool all_constant = true;
  for (const auto& row : M) {
    for (const auto& e : row) all_constant = all_constant && is_constant(E, e);
  }
  if (all_constant) {
    FpMatrix A(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) A(i, j) = constant_value(E, M[i][j]);
    }
    const Scalar det = determinant(F, A);
    status.method = "exact-elimination";
    status.determinant = det;
    status.kind = det != 0 ? GramKind::unit_determinant : GramKind::singular;
    status.detail = "constant entries";
    return status;
  }

  std::mt19937_64 rng(seed);
  if (E.ambient.mode() == Filtration::graded && form_degree && E.subring_connected()) {
    GroupElement total = static_cast<std::int64_t>(r) * *form_degree;
    for (const auto& b : E.basis) total += 2 * E.ambient.degree(b);
    status.method = "graded-degree";
    if (!total.is_zero()) {
      status.kind = GramKind::singular;
      status.detail = "determinant is homogeneous of degree " + to_string(total) + ", never a unit";
      return status;
    }
    const auto point = random_point(E, rng);
    const Scalar det = determinant(F, evaluate_matrix(E, M, point));
    status.determinant = det;
    status.kind = det != 0 ? GramKind::unit_determinant : GramKind::singular;
    status.detail = "determinant is homogeneous of degree 0, hence a scalar";
    return status;
  }

  if (!E.evaluate || !E.point_degree) throw UnsupportedError("extension offers no evaluation at points of Max S");
  int max_degree = 0;
  for (const auto& row : M) {
    for (const auto& e : row) {
      for (const auto& [idx, c] : e.terms()) max_degree = std::max(max_degree, E.point_degree(idx));
    }
  }
  status.method = "random-evaluation";
  std::optional<Scalar> first;
  for (int k = 0; k < points; ++k) {
    const auto point = random_point(E, rng);
    const Scalar det = determinant(F, evaluate_matrix(E, M, point));
    if (det == 0 || (first && det != *first)) {
      status.kind = GramKind::singular;
      status.detail = det == 0 ? "determinant vanishes at a point" : "determinant is not constant";
      return status;
    }
    first = det;
  }
  const double ratio = static_cast<double>(r) * max_degree / static_cast<double>(F.p());
  status.failure_bound = std::pow(ratio, points);
  status.determinant = first;
  if (status.failure_bound >= 1.0) {
    status.kind = GramKind::inconclusive;
    status.detail = "field too small for the degree bound";
  } else {
    status.kind = GramKind::probabilistic_unit;
    std::ostringstream out;
    out << "constant at " << points << " random points";
    status.detail = out.str();
  }
  return status;
}

DegreeMultiset basis_degrees(const CentralFreeExtension& E) {
  DegreeMultiset D;
  for (const auto& b : E.basis) D.add(E.ambient.degree(b));
  return D;
}

FrobeniusCertificate verify_frobenius(const CentralFreeExtension& E, const VerifyOptions& options) {
  require_form(E);
  const BasedAlgebra& R = E.ambient;
  const RootField& F = R.field();
  std::mt19937_64 rng(options.seed);

  for (const auto& s : E.subring_generators) {
    if (!E.in_subring(s)) throw ExtensionDefinitionError(R.format(s) + " is not in the subring");
    for (std::size_t g = 0; g < R.generators().size(); ++g) {
      const auto& x = R.generators()[g];
      if (R.multiply_basis(s, x) != R.multiply_basis(x, s)) {
        throw ExtensionDefinitionError(R.format(s) + " does not commute with " + R.format(x));
      }
    }
  }

  const auto pool = R.enumerate(E.sample_total);
  std::vector<Element> samples;
  for (const auto& m : pool) samples.push_back(Element::monomial(m));
  for (int k = 0; k < options.random_samples && !pool.empty(); ++k) samples.push_back(random_element(E, pool, rng));

  for (const auto& y : samples) {
    const auto coeffs = E.decompose(y);
    if (coeffs.size() != E.basis.size()) throw ExtensionDefinitionError("decomposition has the wrong length");
    for (const auto& z : coeffs) {
      if (!supported_on_subring(E, z)) throw ExtensionDefinitionError("decomposition coefficient outside the subring");
    }
    if (E.reassemble(coeffs) != y) throw ExtensionDefinitionError("decomposition of " + R.format(y) + " does not reassemble");
  }

  for (std::size_t k = 0; k < samples.size(); ++k) {
    const Element& y = samples[k];
    const Element value = checked_form(E, y);
    for (const auto& s : E.subring_generators) {
      const Element sm = Element::monomial(s);
      if (checked_form(E, R.multiply(sm, y)) != R.multiply(sm, value)) {
        throw ExtensionDefinitionError("form is not left S-linear at " + R.format(y));
      }
    }
    const Element& z = samples[(k * 7 + 3) % samples.size()];
    if (checked_form(E, combine(F, y, z, 2, 3)) != combine(F, value, checked_form(E, z), 2, 3)) {
      throw ExtensionDefinitionError("form is not additive at " + R.format(y));
    }
  }

  FrobeniusCertificate cert;
  cert.rank = E.basis.size();
  cert.mode = (R.mode() == Filtration::graded && !options.as_filtered) ? Filtration::graded : Filtration::filtered;
  cert.gram = gram_matrix(E);
  const std::size_t r = cert.rank;

  for (std::size_t i = 0; i < r; ++i) {
    F1Witness w{.basis = i};
    if (E.complement) {
      if (auto c = E.complement(i); c && *c < r) {
        if (!cert.gram[i][*c].is_zero()) w.right = *c;
        if (!cert.gram[*c][i].is_zero()) w.left = *c;
      }
    }
    for (std::size_t j = 0; j < r && !w.complete(); ++j) {
      if (!w.right && !cert.gram[i][j].is_zero()) w.right = j;
      if (!w.left && !cert.gram[j][i].is_zero()) w.left = j;
    }
    cert.f1_witnesses.push_back(w);
  }

  // Mapping degree of the form, from monomial inputs and basis products.
  std::vector<std::pair<GroupElement, Element>> observations;
  for (const auto& m : pool) observations.emplace_back(R.degree(m), checked_form(E, Element::monomial(m)));
  if (cert.mode == Filtration::graded) {
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        observations.emplace_back(R.degree(E.basis[i]) + R.degree(E.basis[j]), cert.gram[i][j]);
      }
    }
  }
  for (const auto& [in_degree, value] : observations) {
    if (value.is_zero()) continue;
    if (cert.mode == Filtration::graded) {
      if (!R.is_homogeneous(value)) {
        throw NonHomogeneousForm("form sends a homogeneous input of degree " + to_string(in_degree) +
                                 " to the non-homogeneous " + R.format(value));
      }
      const GroupElement shift = R.filtered_degree(value).value() - in_degree;
      if (cert.phi_degree && *cert.phi_degree != shift) {
        throw NonHomogeneousForm("form shifts degrees by both " + to_string(*cert.phi_degree) + " and " +
                                 to_string(shift));
      }
      cert.phi_degree = shift;
    } else {
      const GroupElement shift = R.filtered_degree(value).value() - in_degree;
      if (!cert.phi_degree || shift > *cert.phi_degree) cert.phi_degree = shift;
    }
  }

  cert.degrees = basis_degrees(E);
  cert.symmetry_d = multiset_symmetry_witness(cert.degrees);
  cert.gram_status = det_is_unit(E, cert.gram, options.seed, options.determinant_points,
                                 cert.mode == Filtration::graded ? cert.phi_degree : std::nullopt);

  auto missing = std::find_if(cert.f1_witnesses.begin(), cert.f1_witnesses.end(),
                              [](const F1Witness& w) { return !w.complete(); });
  if (missing != cert.f1_witnesses.end()) {
    cert.verdict = Verdict::not_frobenius;
    cert.refutation = Refutation{Refutation::Kind::missing_f1_witness,
                                 "no " + std::string(missing->right ? "left" : "right") + " partner for basis element " +
                                     R.format(E.basis[missing->basis])};
  } else if (cert.gram_status.kind == GramKind::singular) {
    cert.verdict = Verdict::not_frobenius;
    cert.refutation = Refutation{Refutation::Kind::non_unit_gram, cert.gram_status.detail};
  } else if (cert.gram_status.kind == GramKind::inconclusive) {
    cert.verdict = Verdict::inconclusive;
  } else {
    if (!cert.symmetry_d) {
      throw InconsistencyError("unit Gram matrix over a basis with asymmetric degree multiset");
    }
    cert.verdict = Verdict::frobenius;
  }

  if (cert.verdict == Verdict::frobenius && options.compute_nakayama && E.word_of) {
    bool constant = true;
    for (const auto& row : cert.gram) {
      for (const auto& e : row) constant = constant && is_constant(E, e);
    }
    if (constant) cert.nakayama = nakayama_on_generators(E, cert, options.seed, options.nakayama_pairs);
  }
  return cert;
}

NakayamaData nakayama_on_generators(const CentralFreeExtension& E, const FrobeniusCertificate& cert,
                                    std::uint64_t seed, std::size_t random_pairs) {
  if (cert.verdict != Verdict::frobenius) throw DomainError("Nakayama automorphism needs a Frobenius form");
  const BasedAlgebra& R = E.ambient;
  const RootField& F = R.field();
  const std::size_t r = E.basis.size();
  FpMatrix M(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (!is_constant(E, cert.gram[i][j])) throw UnsupportedError("Nakayama solve needs a constant Gram matrix");
      M(i, j) = constant_value(E, cert.gram[i][j]);
    }
  }
  const auto Minv = inverse(F, M);
  if (!Minv) throw InconsistencyError("Gram matrix is not invertible over the field");

  // s^T M = v with v_c = Phi(c x_g): s_b = sum_c v_c Minv[c][b].
  NakayamaData nu;
  for (std::size_t g = 0; g < R.generators().size(); ++g) {
    const Element x = R.generator(g);
    std::vector<Element> v(r);
    for (std::size_t c = 0; c < r; ++c) v[c] = checked_form(E, R.multiply(Element::monomial(E.basis[c]), x));
    Element image;
    for (std::size_t b = 0; b < r; ++b) {
      Element s;
      for (std::size_t c = 0; c < r; ++c) s = combine(F, s, v[c], 1, (*Minv)(c, b));
      if (!s.is_zero()) image = combine(F, image, R.multiply(s, Element::monomial(E.basis[b])), 1, 1);
    }
    nu.images.push_back(image);
  }

  auto check = [&](const Element& q, const Element& rr) {
    ++nu.pairs_checked;
    if (checked_form(E, R.multiply(q, rr)) != checked_form(E, R.multiply(apply_nakayama(E, nu, rr), q))) {
      throw InconsistencyError("Nakayama identity fails at q = " + R.format(q) + ", r = " + R.format(rr));
    }
  };
  for (const auto& b : E.basis) {
    for (const auto& c : E.basis) check(Element::monomial(b), Element::monomial(c));
  }
  if (E.word_of) {
    const auto pool = R.enumerate(E.sample_total);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t k = 0; k < random_pairs; ++k) check(random_element(E, pool, rng), random_element(E, pool, rng));
  }

  nu.trivial = true;
  for (std::size_t g = 0; g < R.generators().size(); ++g) nu.trivial = nu.trivial && nu.images[g] == R.generator(g);
  nu.fixes_subring = true;
  for (const auto& s : E.subring_generators) {
    const Element sm = Element::monomial(s);
    nu.fixes_subring = nu.fixes_subring && apply_nakayama(E, nu, sm) == sm;
  }
  return nu;
}

Element apply_nakayama(const CentralFreeExtension& E, const NakayamaData& nu, const Element& r) {
  const BasedAlgebra& R = E.ambient;
  const RootField& F = R.field();
  Element out;
  for (const auto& [idx, c] : r.terms()) {
    Element term = R.one();
    bool done = false;
    if (E.word_of) {
      for (std::size_t g : E.word_of(idx)) term = R.multiply(term, nu.images.at(g));
      done = true;
    } else {
      for (std::size_t g = 0; g < R.generators().size() && !done; ++g) {
        if (R.generators()[g] == idx) {
          term = nu.images[g];
          done = true;
        }
      }
      if (!done && idx == R.unit_index()) done = true;
    }
    if (!done) throw UnsupportedError("no generator word for " + R.format(idx));
    out = combine(F, out, term, 1, c);
  }
  return out;
}

ReducedAlgebra reduce_at_point(const CentralFreeExtension& E, std::vector<Scalar> point) {
  require_form(E);
  if (point.size() != E.point_dimension) throw DimensionError("point has the wrong number of coordinates");
  const BasedAlgebra& R = E.ambient;
  const RootField& F = R.field();
  const std::size_t r = E.basis.size();
  auto position = std::make_shared<std::map<BasisIndex, std::size_t>>();
  for (std::size_t k = 0; k < r; ++k) (*position)[E.basis[k]] = k;
  if (!position->contains(R.unit_index())) throw DomainError("the free basis does not contain the unit");

  auto table = std::make_shared<std::map<std::pair<std::size_t, std::size_t>, Element>>();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const auto coeffs = E.decompose(R.multiply_basis(E.basis[i], E.basis[j]));
      Element reduced;
      for (std::size_t k = 0; k < r; ++k) reduced.add_term(F, E.basis[k], evaluate_element(E, coeffs[k], point));
      (*table)[{i, j}] = reduced;
    }
  }

  const bool at_origin = std::all_of(point.begin(), point.end(), [](Scalar c) { return c == 0; });
  const auto basis = E.basis;
  ReducedAlgebra out{
      .algebra = BasedAlgebra(BasedAlgebra::Definition{
          .name = R.name() + " reduced at a point",
          .field = F,
          .group_rank = R.group_rank(),
          .unit = R.unit_index(),
          .generators = {},
          .mode = (at_origin && R.mode() == Filtration::graded) ? Filtration::graded : Filtration::filtered,
          .degree = [R](const BasisIndex& idx) { return R.degree(idx); },
          .mul =
              [position, table](const BasisIndex& a, const BasisIndex& b) {
                return table->at({position->at(a), position->at(b)});
              },
          .enumerate =
              [basis](int total) {
                std::vector<BasisIndex> out;
                for (const auto& b : basis) {
                  if (b.total() <= total) out.push_back(b);
                }
                return out;
              },
          .namer = [R](const BasisIndex& idx) { return R.format(idx); },
      }),
      .point = point,
      .pairing = FpMatrix(r, r),
      .dimension = r,
  };
  for (const auto& b : E.basis) out.form_on_basis.push_back(evaluate_element(E, checked_form(E, Element::monomial(b)), point));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Scalar v = 0;
      for (const auto& [idx, c] : table->at({i, j}).terms()) v = F.add(v, F.mul(c, out.form_on_basis[position->at(idx)]));
      out.pairing(i, j) = v;
    }
  }
  out.pairing_rank = rank(F, out.pairing);
  out.nondegenerate = out.pairing_rank == r;
  return out;
}

CentralFreeExtension as_field_extension(const ReducedAlgebra& reduced, std::optional<std::vector<Scalar>> functional) {
  const BasedAlgebra& A = reduced.algebra;
  const RootField F = A.field();
  const std::vector<BasisIndex> basis = A.enumerate(std::numeric_limits<int>::max());
  const std::vector<Scalar> f = functional.value_or(reduced.form_on_basis);
  if (f.size() != basis.size()) throw DimensionError("functional needs one value per basis element");
  const BasisIndex unit = A.unit_index();
  int top = 0;
  for (const auto& b : basis) top = std::max(top, b.total());

  CentralFreeExtension E{.name = A.name() + " over the base field",
                         .ambient = A,
                         .in_subring = [unit](const BasisIndex& idx) { return idx == unit; },
                         .subring_generators = {},
                         .basis = basis};
  E.decompose = [basis, unit](const Element& y) {
    std::vector<Element> coeffs;
    for (const auto& b : basis) coeffs.push_back(Element::monomial(unit, y.coefficient(b)));
    return coeffs;
  };
  E.form = [basis, unit, f, F](const Element& y) {
    Scalar v = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) v = F.add(v, F.mul(y.coefficient(basis[k]), f[k]));
    return Element::monomial(unit, v);
  };
  E.evaluate = [](const BasisIndex&, std::span<const Scalar>) { return Scalar{1}; };
  E.point_dimension = 0;
  E.point_degree = [](const BasisIndex&) { return 0; };
  E.sample_total = top;
  return E;
}

CentralFreeExtension lift_form(CentralFreeExtension filtered, const CentralFreeExtension& graded, int table_total) {
  require_form(graded);
  const TableComparison cmp = compare_product_tables(gr_of(filtered.ambient), graded.ambient, table_total);
  if (!cmp.equal) throw DomainError("gr of " + filtered.ambient.name() + " differs from " + graded.ambient.name() + ": " +
                                    cmp.first_mismatch);
  if (filtered.basis != graded.basis) throw DomainError("filtered and graded extensions use different bases");
  std::vector<Element> on_basis;
  for (const auto& b : graded.basis) on_basis.push_back(graded.form(Element::monomial(b)));
  const BasedAlgebra R = filtered.ambient;
  const auto decompose = filtered.decompose;
  filtered.form = [R, decompose, on_basis](const Element& y) {
    const auto coeffs = decompose(y);
    Element out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero() || on_basis[k].is_zero()) continue;
      out = combine(R.field(), out, R.multiply(coeffs[k], on_basis[k]), 1, 1);
    }
    return out;
  };
  filtered.name += " with lifted form";
  return filtered;
}

std::vector<DualFunctional> dual_basis(const CentralFreeExtension& E) {
  std::vector<DualFunctional> out;
  for (std::size_t k = 0; k < E.basis.size(); ++k) out.push_back({k, -E.ambient.degree(E.basis[k])});
  return out;
}

Element apply_dual(const CentralFreeExtension& E, const DualFunctional& phi, const Element& y) {
  return E.decompose(y).at(phi.basis);
}

std::vector<std::pair<GroupElement, Form>> homogeneous_components(const CentralFreeExtension& E) {
  require_form(E);
  const BasedAlgebra& R = E.ambient;
  if (R.mode() != Filtration::graded) throw DomainError("homogeneous components need a graded ambient");
  std::vector<Element> on_basis;
  std::vector<GroupElement> shifts;
  for (const auto& b : E.basis) {
    Element v = checked_form(E, Element::monomial(b));
    for (const auto& [idx, c] : v.terms()) {
      GroupElement s = R.degree(idx) - R.degree(b);
      if (std::find(shifts.begin(), shifts.end(), s) == shifts.end()) shifts.push_back(s);
    }
    on_basis.push_back(std::move(v));
  }
  std::sort(shifts.begin(), shifts.end());
  std::vector<std::pair<GroupElement, Form>> out;
  const auto basis = E.basis;
  const auto decompose = E.decompose;
  const BasedAlgebra A = R;
  for (const auto& shift : shifts) {
    out.emplace_back(shift, [A, basis, decompose, on_basis, shift](const Element& y) {
      const auto coeffs = decompose(y);
      Element result;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        Element part = A.homogeneous_part(on_basis[k], A.degree(basis[k]) + shift);
        if (!part.is_zero()) result = combine(A.field(), result, A.multiply(coeffs[k], part), 1, 1);
      }
      return result;
    });
  }
  return out;
}

}  // namespace frobex
