#include "frobex/grassmannian.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace frobex {

namespace {

constexpr std::size_t kGenerators = 6;
constexpr int kX2 = 1, kX3 = 2, kX4 = 3, kX5 = 4;

// Plücker index sets of x1..x6.
constexpr std::array<std::array<int, 2>, 6> kPlucker = {{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}}};

GrassmannianConfig plucker_config(std::string label, std::int64_t scale, std::int64_t t) {
  GrassmannianConfig c{std::move(label), std::vector<std::vector<std::int64_t>>(6, std::vector<std::int64_t>(6, 0)), t};
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::int64_t v = 0;
      for (int a : kPlucker[i]) {
        for (int b : kPlucker[j]) v += (b > a) - (b < a);
      }
      c.s[i][j] = scale * v;
    }
  }
  return c;
}

RewriteSystem build_rewriting(const RootField& F, const GrassmannianConfig& c) {
  if (c.s.size() != kGenerators) throw AlgebraDefinitionError("Grassmannian needs a 6 x 6 exponent matrix");
  for (std::size_t i = 0; i < kGenerators; ++i) {
    if (c.s[i].size() != kGenerators) throw AlgebraDefinitionError("Grassmannian needs a 6 x 6 exponent matrix");
    for (std::size_t j = 0; j < kGenerators; ++j) {
      if (c.s[i][j] != -c.s[j][i]) throw AlgebraDefinitionError("Grassmannian exponents must be antisymmetric");
    }
  }
  RewriteRule straighten{kX3, kX4, {{F.zeta_pow(c.t), Word{kX2, kX5}}}};
  return RewriteSystem::q_commuting(F, c.s, {straighten});
}

Element to_element(const RootField& F, const RewriteSystem::Combination& comb) {
  Element out;
  for (const auto& [w, c] : comb) {
    BasisIndex e(std::vector<int>(kGenerators, 0));
    for (int g : w) ++e.exps[static_cast<std::size_t>(g)];
    out.add_term(F, e, c);
  }
  return out;
}

std::string monomial_name(const BasisIndex& e) {
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < e.exps.size(); ++i) {
    if (e.exps[i] == 0) continue;
    if (any) out << '*';
    any = true;
    out << 'x' << i + 1;
    if (e.exps[i] > 1) out << '^' << e.exps[i];
  }
  return any ? out.str() : "1";
}

}  // namespace

GrassmannianConfig default_grassmannian_config() { return plucker_config("plucker-sign", 1, 1); }
GrassmannianConfig alternate_grassmannian_config() { return plucker_config("plucker-sign-doubled", 2, 2); }

GrGrassmannian::GrGrassmannian(RootField field, GrassmannianConfig config)
    : field_(field),
      config_(std::move(config)),
      rewriting_(build_rewriting(field_, config_)),
      algebra_(BasedAlgebra::Definition{.degree = [](const BasisIndex&) { return GroupElement{}; },
                                        .mul = [](const BasisIndex&, const BasisIndex&) { return Element{}; },
                                        .enumerate = [](int) { return std::vector<BasisIndex>{}; }}) {
  if (kCensusWeights[kX3] + kCensusWeights[kX4] != kCensusWeights[kX2] + kCensusWeights[kX5]) {
    throw AlgebraDefinitionError("straightening relation is not homogeneous");
  }
  if (auto failure = rewriting_.find_critical_pair_failure()) {
    throw AlgebraDefinitionError("Grassmannian rewriting is not confluent: " + *failure);
  }
  const RewriteSystem rw = rewriting_;
  const RootField F = field_;
  algebra_ = BasedAlgebra(BasedAlgebra::Definition{
      .name = "gr O_q[Gr(2,4)]",
      .field = F,
      .group_rank = 1,
      .unit = BasisIndex(std::vector<int>(kGenerators, 0)),
      .generators =
          [] {
            std::vector<BasisIndex> gens;
            for (std::size_t i = 0; i < kGenerators; ++i) {
              BasisIndex e(std::vector<int>(kGenerators, 0));
              e.exps[i] = 1;
              gens.push_back(e);
            }
            return gens;
          }(),
      .mode = Filtration::graded,
      .degree = [](const BasisIndex& e) { return GroupElement{census_degree(e)}; },
      .mul =
          [rw, F](const BasisIndex& a, const BasisIndex& b) {
            Word w = word_of(a);
            const Word wb = word_of(b);
            w.insert(w.end(), wb.begin(), wb.end());
            return to_element(F, rw.normal_form(w));
          },
      .enumerate =
          [](int total) {
            std::vector<BasisIndex> out;
            for (const auto& e : exponent_vectors_up_to(kGenerators, total)) {
              if (is_standard(e)) out.push_back(e);
            }
            return out;
          },
      .namer = monomial_name,
  });
}

GrGrassmannian GrGrassmannian::from_presentation(const Presentation& pres, std::uint64_t seed) {
  if (!pres.ell) throw DomainError("presentation lacks [field] ell");
  if (pres.generators.size() != kGenerators) throw DomainError("Gr(2,4) presentation needs six generators");
  if (pres.straightening.size() != 1) throw DomainError("Gr(2,4) presentation needs exactly one straightening rule");
  const auto& st = pres.straightening.front();
  if (st.left != static_cast<std::size_t>(kX3) || st.right != static_cast<std::size_t>(kX4) ||
      st.out_left != static_cast<std::size_t>(kX2) || st.out_right != static_cast<std::size_t>(kX5)) {
    throw DomainError("straightening rule must read 'x3 x4 -> t x2 x5'");
  }
  const std::uint64_t p = pres.p.value_or(default_prime_for(*pres.ell));
  return GrGrassmannian(RootField::create(p, *pres.ell, seed), GrassmannianConfig{"presentation", pres.commutation, st.exponent});
}

Element GrGrassmannian::normal_form(const Word& w, Strategy strategy, std::mt19937_64* rng) const {
  return to_element(field_, rewriting_.normal_form(w, 1, strategy, rng));
}

Word GrGrassmannian::word_of(const BasisIndex& e) {
  Word w;
  for (std::size_t i = 0; i < e.exps.size(); ++i) w.insert(w.end(), static_cast<std::size_t>(e.exps[i]), static_cast<int>(i));
  return w;
}

bool GrGrassmannian::is_standard(const BasisIndex& e) {
  return e.exps.size() == kGenerators && !(e.exps[kX3] > 0 && e.exps[kX4] > 0);
}

std::int64_t GrGrassmannian::census_degree(const BasisIndex& e) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < kGenerators; ++i) d += kCensusWeights[i] * e.exps[i];
  return d;
}

std::set<BasisIndex> candidate_basis(std::uint64_t ell) {
  if (ell < 2) throw DomainError("candidate basis needs ell >= 2");
  const int L = static_cast<int>(ell);
  std::set<BasisIndex> out;
  for (int i : {kX3, kX4}) {
    std::array<int, 5> k{};
    const std::array<int, 5> slot = {0, kX2, i, kX5, 5};
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == k.size()) {
        if (k[1] + k[2] < L || k[2] + k[3] < L) {
          BasisIndex e(std::vector<int>(kGenerators, 0));
          for (std::size_t j = 0; j < k.size(); ++j) e.exps[static_cast<std::size_t>(slot[j])] = k[j];
          out.insert(e);
        }
        return;
      }
      for (int v = 0; v < L; ++v) {
        k[pos] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  return out;
}

std::vector<BasisIndex> standard_monomials_up_to(std::int64_t cutoff, int step) {
  std::vector<BasisIndex> out;
  BasisIndex e(std::vector<int>(kGenerators, 0));
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == kGenerators) {
      if (GrGrassmannian::is_standard(e)) out.push_back(e);
      return;
    }
    for (int v = 0; v * kCensusWeights[i] <= left; v += step) {
      e.exps[i] = v;
      rec(i + 1, left - v * kCensusWeights[i]);
    }
    e.exps[i] = 0;
  };
  rec(0, cutoff);
  return out;
}

FreenessReport verify_freeness_window(const GrGrassmannian& G, std::int64_t cutoff, std::size_t max_counterexamples) {
  FreenessReport report{.ell = G.ell(), .cutoff = cutoff};
  const auto centre = standard_monomials_up_to(cutoff, static_cast<int>(G.ell()));
  const auto basis = candidate_basis(G.ell());
  const auto targets = standard_monomials_up_to(cutoff);

  std::map<std::int64_t, FreenessDegree> rows;
  for (std::int64_t d = 0; d <= cutoff; ++d) rows[d].degree = d;
  for (const auto& m : targets) ++rows[GrGrassmannian::census_degree(m)].standard;

  std::map<BasisIndex, std::vector<std::pair<BasisIndex, BasisIndex>>> preimages;
  auto note = [&](const std::string& text) {
    if (report.counterexamples.size() < max_counterexamples) report.counterexamples.push_back(text);
  };
  const BasedAlgebra& A = G.algebra();
  for (const auto& z : centre) {
    const std::int64_t dz = GrGrassmannian::census_degree(z);
    for (const auto& b : basis) {
      const std::int64_t d = dz + GrGrassmannian::census_degree(b);
      if (d > cutoff) continue;
      ++rows[d].products;
      const Element product = A.multiply_basis(z, b);
      if (product.size() != 1) {
        report.bijective = false;
        note(A.format(z) + " * " + A.format(b) + " is not a single standard monomial");
        continue;
      }
      preimages[product.terms().begin()->first].emplace_back(z, b);
    }
  }
  for (const auto& [m, pre] : preimages) {
    ++rows[GrGrassmannian::census_degree(m)].images;
    if (pre.size() > 1) {
      report.bijective = false;
      std::string text = A.format(m) + " arises " + std::to_string(pre.size()) + " times:";
      for (const auto& [z, b] : pre) text += " (" + A.format(z) + ")*(" + A.format(b) + ")";
      note(text);
    }
  }
  for (const auto& m : targets) {
    if (!preimages.contains(m)) {
      report.bijective = false;
      note(A.format(m) + " is not reached");
    }
  }
  for (auto& [d, row] : rows) {
    if (row.products != row.standard) report.counts_equal = false;
    if (row.images != row.standard || row.products != row.standard) report.bijective = false;
    report.per_degree.push_back(row);
  }
  return report;
}

CensusReport degree_census(const GrGrassmannian& G) {
  CensusReport report{.ell = G.ell(), .config_label = G.config().label};
  DegreeMultiset D;
  for (const auto& b : candidate_basis(G.ell())) {
    const Element nf = G.normal_form(GrGrassmannian::word_of(b));
    if (nf != Element::monomial(b)) {
      throw InconsistencyError("candidate basis element " + G.algebra().format(b) + " is not a normal form");
    }
    const std::int64_t d = GrGrassmannian::census_degree(b);
    ++report.counts[d];
    D.add(GroupElement{d});
    ++report.basis_size;
  }
  report.max_degree = report.counts.rbegin()->first;
  if (auto w = multiset_symmetry_witness(D)) report.symmetry_d = (*w)[0];
  report.verdict = report.symmetry_d ? Verdict::inconclusive : Verdict::not_frobenius;

  auto count = [&](std::int64_t d) {
    auto it = report.counts.find(d);
    return it == report.counts.end() ? std::int64_t{0} : it->second;
  };
  const auto top = 8 * static_cast<std::int64_t>(G.ell() - 1);
  report.claims = {
      {"count_degree_1", 2, count(1)},
      {"max_degree", top, report.max_degree},
      {"count_degree_max_minus_1", 0, count(top - 1)},
  };
  return report;
}

std::string render_census(const CensusReport& report) {
  std::ostringstream out;
  out << "ell: " << report.ell << '\n';
  out << "scalar_config: " << report.config_label << '\n';
  out << "basis_size: " << report.basis_size << '\n';
  out << "max_degree: " << report.max_degree << '\n';
  out << "symmetry_d: " << (report.symmetry_d ? std::to_string(*report.symmetry_d) : "none") << '\n';
  out << "verdict: " << to_string(report.verdict) << '\n';
  for (const auto& c : report.claims) {
    out << "claim_agreement." << c.name << ": " << (c.agrees() ? "agree" : "disagree") << " (stated " << c.expected
        << ", computed " << c.computed << ")\n";
  }
  out << "[degree_counts]\n";
  for (const auto& [d, n] : report.counts) out << d << ": " << n << '\n';
  return out.str();
}

}  // namespace frobex
