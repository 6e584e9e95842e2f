#pragma once

// gr O_q[Gr(2,4)] as a straightening-law rewriting algebra on the Plücker
// generators x1=[12], x2=[13], x3=[23], x4=[14], x5=[24], x6=[34], and the
// degree census of its candidate basis over gr Z_0.
//
// Generators are 0-based internally: generator k is x_{k+1}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "frobex/algebra.hpp"
#include "frobex/config.hpp"
#include "frobex/frobenius.hpp"
#include "frobex/rewrite.hpp"

namespace frobex {

/// x_i x_j = q^{s[i][j]} x_j x_i, and x3 x4 = q^t x2 x5.
struct GrassmannianConfig {
  std::string label;
  std::vector<std::vector<std::int64_t>> s;
  std::int64_t t = 0;
};

/// s(i,j) = sum over a in I, b in J of sign(b - a) for Plücker index sets
/// I, J; t = 1.
GrassmannianConfig default_grassmannian_config();
/// Twice the default exponents and t = 2.
GrassmannianConfig alternate_grassmannian_config();

/// deg x1 = deg x3 = deg x5 = deg x6 = 2, deg x2 = deg x4 = 1.
inline constexpr std::array<std::int64_t, 6> kCensusWeights = {2, 1, 2, 1, 2, 2};

class GrGrassmannian {
 public:
  /// Throws AlgebraDefinitionError if the rewriting system is not locally
  /// confluent or the straightening rule is not homogeneous.
  GrGrassmannian(RootField field, GrassmannianConfig config);
  static GrGrassmannian from_presentation(const Presentation& pres, std::uint64_t seed = kDefaultSeed);

  const RootField& field() const { return field_; }
  std::uint64_t ell() const { return field_.ell(); }
  const GrassmannianConfig& config() const { return config_; }
  const RewriteSystem& rewriting() const { return rewriting_; }
  const BasedAlgebra& algebra() const { return algebra_; }

  /// Normal form as a combination of standard monomials (exponent vectors).
  Element normal_form(const Word& w, Strategy strategy = Strategy::leftmost, std::mt19937_64* rng = nullptr) const;
  static Word word_of(const BasisIndex& e);
  /// x1^a x2^b xi^c x5^d x6^e with i in {3, 4}: never both x3 and x4.
  static bool is_standard(const BasisIndex& e);
  static std::int64_t census_degree(const BasisIndex& e);

 private:
  RootField field_;
  GrassmannianConfig config_;
  RewriteSystem rewriting_;
  BasedAlgebra algebra_;
};

/// Exponents k in [0, ell)^5 on x1, x2, xi, x5, x6 (i in {3, 4}) with
/// k2 + ki < ell or ki + k5 < ell, deduplicated.
std::set<BasisIndex> candidate_basis(std::uint64_t ell);

/// Standard monomials of census degree at most cutoff, with exponents all
/// divisible by `step` (step = 1 for every standard monomial).
std::vector<BasisIndex> standard_monomials_up_to(std::int64_t cutoff, int step = 1);

struct FreenessDegree {
  std::int64_t degree = 0;
  std::size_t products = 0;   // pairs (z, b) landing in this degree
  std::size_t standard = 0;   // standard monomials of this degree
  std::size_t images = 0;     // distinct normal forms among the products
};

struct FreenessReport {
  std::uint64_t ell = 0;
  std::int64_t cutoff = 0;
  bool bijective = true;      // explicit matching in every degree
  bool counts_equal = true;   // products == standard in every degree
  std::vector<FreenessDegree> per_degree;
  std::vector<std::string> counterexamples;
};

/// Degree by degree up to the cutoff, matches {z * b : z a standard monomial
/// of gr Z_0, b in the candidate basis} against the standard monomials.
FreenessReport verify_freeness_window(const GrGrassmannian& G, std::int64_t cutoff, std::size_t max_counterexamples = 5);

struct ClaimCheck {
  std::string name;
  std::int64_t expected = 0;
  std::int64_t computed = 0;
  bool agrees() const { return expected == computed; }
};

struct CensusReport {
  std::uint64_t ell = 0;
  std::string config_label;
  std::size_t basis_size = 0;
  std::map<std::int64_t, std::int64_t> counts;
  std::int64_t max_degree = 0;
  std::optional<std::int64_t> symmetry_d;
  Verdict verdict = Verdict::inconclusive;
  std::vector<ClaimCheck> claims;
};

/// Counts the candidate basis by census degree and tests the multiset for a
/// symmetry centre; each basis element is checked to be a normal form of G.
CensusReport degree_census(const GrGrassmannian& G);

std::string render_census(const CensusReport& report);

}  // namespace frobex
