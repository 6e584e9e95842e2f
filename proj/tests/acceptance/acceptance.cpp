// One line per acceptance criterion:
//
//   criterion 1 PASS: ... (0.41 s)
//
// Usage: frobex_acceptance [--criterion N] [--cli PATH]. Exit status is 0
// iff every selected criterion passes.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frobex/frobenius.hpp"
#include "frobex/grassmannian.hpp"
#include "frobex/qas.hpp"
#include "frobex/rees.hpp"
#include "frobex/report.hpp"
#include "../oracles.hpp"

using namespace frobex;

namespace {

// Pinned limits.
constexpr double kQasSeconds = 60.0;
constexpr double kTransferSeconds = 120.0;
constexpr double kCensusSeconds = 60.0;
constexpr std::size_t kNakayamaPairs = 200;
constexpr int kReductionPoints = 10;
constexpr int kStrategies = 50;
constexpr int kWords = 200;
constexpr std::size_t kMaxWordLength = 10;
constexpr int kFixturesPerCell = 2;
constexpr int kCliRepeats = 3;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    pass_ = pass_ && ok;
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }
  Outcome finish() const {
    Outcome out{pass_, std::to_string(checks_) + " checks"};
    if (!notes_.empty()) out.detail += "; " + notes_;
    if (!pass_) out.detail += "; first failure: " + first_failure_;
    return out;
  }

 private:
  bool pass_ = true;
  std::size_t checks_ = 0;
  std::string first_failure_;
  std::string notes_;
};

struct QasFixture {
  std::string label;
  QuantumAffineSpace Q;
};

std::string describe_matrix(const std::vector<std::vector<std::int64_t>>& C) {
  std::ostringstream out;
  for (std::size_t i = 0; i < C.size(); ++i) {
    if (i) out << ';';
    for (std::size_t j = 0; j < C[i].size(); ++j) out << (j ? " " : "") << C[i][j];
  }
  return out.str();
}

/// Random antisymmetric C and random degrees in [0, 3]^2, not all zero.
std::vector<QasFixture> qas_grid() {
  std::vector<std::pair<std::size_t, std::uint64_t>> cells;
  for (std::size_t n : {1, 2, 3})
    for (std::uint64_t ell : {2, 3}) cells.emplace_back(n, ell);
  cells.emplace_back(2, 5);

  std::vector<QasFixture> out;
  std::mt19937_64 rng(kSeed);
  for (const auto& [n, ell] : cells) {
    for (int k = 0; k < kFixturesPerCell; ++k) {
      const auto C = random_antisymmetric(n, ell, rng());
      std::vector<GroupElement> degrees;
      do {
        degrees.clear();
        for (std::size_t i = 0; i < n; ++i)
          degrees.push_back(GroupElement({static_cast<std::int64_t>(rng() % 4), static_cast<std::int64_t>(rng() % 4)}));
      } while (std::all_of(degrees.begin(), degrees.end(), [](const GroupElement& g) { return g.is_zero(); }));
      const RootField F = RootField::create(default_prime_for(ell), ell, rng());
      std::ostringstream label;
      label << "n=" << n << " ell=" << ell << " C=[" << describe_matrix(C) << "] d=";
      for (const auto& d : degrees) label << to_string(d);
      out.push_back({label.str(), QuantumAffineSpace(F, C, degrees)});
    }
  }
  return out;
}

std::size_t ipow(std::uint64_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

GroupElement expected_top(const QuantumAffineSpace& Q) {
  GroupElement top = GroupElement::zero(2);
  for (const auto& d : Q.degrees()) top += static_cast<std::int64_t>(Q.ell() - 1) * d;
  return top;
}

Element random_element(const QuantumAffineSpace& Q, std::mt19937_64& rng) {
  const auto pool = Q.algebra().enumerate(static_cast<int>(2 * Q.ell()));
  Element y;
  for (int t = 0; t < 3; ++t) y.add_term(Q.field(), pool[rng() % pool.size()], 1 + rng() % (Q.field().p() - 1));
  return y;
}

Outcome criterion_qas() {
  Checker c;
  for (const auto& fx : qas_grid()) {
    const auto& Q = fx.Q;
    const FrobeniusCertificate cert = verify_frobenius(Q.extension(), {.seed = kSeed, .compute_nakayama = false});
    c.expect(cert.verdict == Verdict::frobenius, fx.label + ": verdict " + to_string(cert.verdict));
    c.expect(cert.rank == ipow(Q.ell(), Q.n()), fx.label + ": rank " + std::to_string(cert.rank));
    c.expect(cert.phi_degree == -expected_top(Q), fx.label + ": phi degree");
    c.expect(cert.gram_status.kind == GramKind::unit_determinant &&
                 cert.gram_status.method == "generalized-permutation",
             fx.label + ": gram " + cert.gram_status.method);
  }
  return c.finish();
}

Outcome criterion_f1() {
  Checker c;
  for (const auto& fx : qas_grid()) {
    const auto& Q = fx.Q;
    const int L = static_cast<int>(Q.ell());
    for (const auto& a : restricted_monomials(Q.n(), Q.ell())) {
      BasisIndex comp = a;
      for (int& e : comp.exps) e = L - 1 - e;
      const Element xa = Element::monomial(a), xc = Element::monomial(comp);
      const Element right = Q.frobenius_form(Q.algebra().multiply(xa, xc));
      const Element left = Q.frobenius_form(Q.algebra().multiply(xc, xa));
      c.expect(!right.is_zero() && !left.is_zero(), fx.label + ": complement of " + to_string(a));
    }
  }
  return c.finish();
}

Outcome criterion_nakayama() {
  Checker c;
  auto fixtures = qas_grid();
  for (std::size_t n : {1, 2, 3}) {
    const RootField F = RootField::create(103, 3, kSeed);
    std::vector<std::vector<std::int64_t>> zero(n, std::vector<std::int64_t>(n, 0));
    fixtures.push_back({"n=" + std::to_string(n) + " ell=3 C=0",
                        QuantumAffineSpace(F, zero, std::vector<GroupElement>(n, GroupElement({1, 0})))});
  }
  std::mt19937_64 rng(kSeed);
  for (const auto& fx : fixtures) {
    const auto& Q = fx.Q;
    const CentralFreeExtension E = Q.extension();
    const FrobeniusCertificate cert = verify_frobenius(E, {.seed = kSeed, .compute_nakayama = false});
    const NakayamaData nu = nakayama_on_generators(E, cert, kSeed, kNakayamaPairs);
    for (std::size_t k = 0; k < kNakayamaPairs; ++k) {
      const Element q = random_element(Q, rng), r = random_element(Q, rng);
      const Element lhs = Q.frobenius_form(Q.algebra().multiply(q, r));
      const Element rhs = Q.frobenius_form(Q.algebra().multiply(apply_nakayama(E, nu, r), q));
      if (lhs != rhs) {
        c.expect(false, fx.label + ": Phi(qr) != Phi(nu(r) q)");
        break;
      }
    }
    c.expect(true, fx.label);
    bool commutative = true;
    for (const auto& row : Q.exponents())
      for (auto e : row) commutative = commutative && e % static_cast<std::int64_t>(Q.ell()) == 0;
    if (commutative) {
      for (std::size_t g = 0; g < Q.n(); ++g)
        c.expect(nu.images[g] == Q.algebra().generator(g), fx.label + ": nu is not the identity");
    }
    for (const auto& s : E.subring_generators) {
      const Element sm = Element::monomial(s);
      c.expect(apply_nakayama(E, nu, sm) == sm, fx.label + ": nu moves " + Q.algebra().format(s));
    }
  }
  return c.finish();
}

Outcome criterion_transfer() {
  Checker c;
  for (std::uint64_t ell : {2u, 3u}) {
    const RootField F = RootField::create(default_prime_for(ell), ell, kSeed);
    const QweylTransfer T = qweyl_transfer(F, std::nullopt, kSeed);
    const std::string tag = "ell=" + std::to_string(ell) + ": ";
    c.expect(T.gr_table.equal, tag + "gr table " + T.gr_table.first_mismatch);
    c.expect(T.graded.verdict == Verdict::frobenius, tag + "graded plane verdict");
    c.expect(T.filtered.verdict == Verdict::frobenius, tag + "filtered verdict " + to_string(T.filtered.verdict));
    c.expect(T.filtered.rank == ell * ell, tag + "filtered rank");
    c.expect(T.filtered.phi_degree == T.graded.phi_degree, tag + "filtered degree differs from graded");
    c.expect(T.rees.verdict == Verdict::frobenius, tag + "Rees verdict " + to_string(T.rees.verdict));
    c.expect(T.rees.rank == ell * ell, tag + "Rees rank");
    c.expect(T.m0_table.equal, tag + "m0 table " + T.m0_table.first_mismatch);
    c.expect(T.m1_table.equal, tag + "m1 table " + T.m1_table.first_mismatch);
    c.expect(T.m0_hom.ok, tag + "m0 homomorphism " + T.m0_hom.first_failure);
    c.expect(T.m1_hom.ok, tag + "m1 homomorphism " + T.m1_hom.first_failure);
    c.note(tag + "window " + to_string(T.window) + ", gr pairs " + std::to_string(T.gr_table.pairs_checked));
  }
  return c.finish();
}

Outcome criterion_reduction() {
  Checker c;
  std::mt19937_64 rng(kSeed);
  for (const auto& fx : qas_grid()) {
    const CentralFreeExtension E = fx.Q.extension();
    const std::size_t r = ipow(fx.Q.ell(), fx.Q.n());
    for (int k = 0; k < kReductionPoints; ++k) {
      std::vector<Scalar> point(E.point_dimension);
      for (auto& v : point) v = rng() % fx.Q.field().p();
      const ReducedAlgebra red = reduce_at_point(E, point);
      c.expect(red.dimension == r && red.pairing_rank == r,
               fx.label + ": pairing rank " + std::to_string(red.pairing_rank));
    }
  }
  return c.finish();
}

Outcome criterion_multisets() {
  Checker c;
  std::mt19937_64 rng(kSeed);
  for (const auto& fx : qas_grid()) {
    const auto& Q = fx.Q;
    const CentralFreeExtension E = Q.extension();
    const BasedAlgebra& A = Q.algebra();
    const DegreeMultiset D = basis_degrees(E);

    // Unitriangular change of basis: add random multiples of strictly
    // lower-degree basis elements.
    DegreeMultiset changed;
    for (const auto& b : E.basis) {
      Element v = Element::monomial(b);
      for (const auto& lower : E.basis) {
        if (A.degree(lower) < A.degree(b)) v.add_term(A.field(), lower, rng() % A.field().p());
      }
      changed.add(A.filtered_degree(v).value());
    }
    c.expect(changed == D, fx.label + ": multiset changed under a unitriangular basis change");

    const auto d = multiset_symmetry_witness(D);
    c.expect(d && *d == expected_top(Q), fx.label + ": symmetry witness");

    // A truncated multiset can still be symmetric ({0, d, 2d} minus 2d),
    // so on random fixtures the detector is compared with brute force.
    DegreeMultiset truncated = D;
    truncated.remove_one(truncated.max());
    const auto centres = oracle::all_symmetry_centres(truncated);
    const auto found = multiset_symmetry_witness(truncated);
    c.expect(centres.size() <= 1 && found.has_value() == !centres.empty() && (!found || *found == centres.front()),
             fx.label + ": truncated witness disagrees with brute force");
  }

  // The deliberate truncations: quantum planes with unit degrees.
  for (std::uint64_t ell : {2u, 3u, 5u}) {
    const RootField F = RootField::create(default_prime_for(ell), ell, kSeed);
    const QuantumAffineSpace Q(F, {{0, 1}, {-1, 0}}, {GroupElement({1, 0}), GroupElement({1, 0})});
    DegreeMultiset truncated = basis_degrees(Q.extension());
    truncated.remove_one(truncated.max());
    c.expect(!multiset_symmetry_witness(truncated).has_value(),
             "plane ell=" + std::to_string(ell) + ": truncated multiset has a witness");
  }

  // The Weyl fixture: y^a x^b and x^b y^a are both free bases over the centre.
  for (std::uint64_t ell : {2u, 3u}) {
    const RootField F = RootField::create(default_prime_for(ell), ell, kSeed);
    const BasedAlgebra W = qweyl_new(ell, F);
    const CentralFreeExtension E = centre_extension(W, ell, false);
    DegreeMultiset reversed;
    for (const auto& b : E.basis) {
      const Element xb = Element::monomial(BasisIndex{0, b.exps[1]});
      const Element ya = Element::monomial(BasisIndex{b.exps[0], 0});
      reversed.add(W.filtered_degree(W.multiply(xb, ya)).value());
    }
    c.expect(reversed == basis_degrees(E), "Weyl ell=" + std::to_string(ell) + ": reversed PBW multiset");
  }
  return c.finish();
}

Outcome criterion_census() {
  Checker c;
  std::string flags;
  for (std::uint64_t ell : {2u, 3u, 4u, 5u}) {
    const RootField F = RootField::create(default_prime_for(ell), ell, kSeed);
    std::vector<CensusReport> reports;
    for (const auto& cfg : {default_grassmannian_config(), alternate_grassmannian_config()}) {
      const GrGrassmannian G(F, cfg);
      reports.push_back(degree_census(G));
    }
    const std::string tag = "ell=" + std::to_string(ell) + ": ";
    for (const auto& R : reports) {
      const auto one = R.counts.find(1);
      c.expect(one != R.counts.end() && one->second == 2, tag + R.config_label + " count(1)");
      c.expect(R.max_degree == 8 * static_cast<std::int64_t>(ell - 1), tag + R.config_label + " max degree");
      c.expect(!R.symmetry_d.has_value(), tag + R.config_label + " found a symmetry witness");
      c.expect(R.verdict == Verdict::not_frobenius, tag + R.config_label + " verdict");
    }
    c.expect(reports[0].counts == reports[1].counts && reports[0].config_label != reports[1].config_label,
             tag + "censuses differ between configurations");
    for (const auto& claim : reports[0].claims) {
      if (claim.name == "count_degree_max_minus_1") {
        flags += (flags.empty() ? "" : ",") + std::to_string(ell) + ":" + (claim.agrees() ? "agree" : "disagree") +
                 "(" + std::to_string(claim.computed) + ")";
      }
    }
  }
  c.note("no-element-below-top claim per ell " + flags);
  return c.finish();
}

Outcome criterion_freeness() {
  Checker c;
  {
    const GrGrassmannian G(RootField::create(default_prime_for(2), 2, kSeed), default_grassmannian_config());
    const FreenessReport R = verify_freeness_window(G, 8, 1);
    c.note(std::string("ell=2 bijective ") + (R.bijective ? "yes" : "no"));
    c.expect(R.bijective, "ell=2 cutoff 8: " + (R.counterexamples.empty() ? std::string("not bijective")
                                                                           : R.counterexamples.front()));
  }
  {
    const GrGrassmannian G(RootField::create(default_prime_for(3), 3, kSeed), default_grassmannian_config());
    const FreenessReport R = verify_freeness_window(G, 12, 1);
    std::string first;
    for (const auto& row : R.per_degree) {
      if (row.products != row.standard && first.empty()) {
        first = "degree " + std::to_string(row.degree) + ": " + std::to_string(row.products) + " products vs " +
                std::to_string(row.standard) + " standard";
      }
    }
    c.note(std::string("ell=3 counts equal ") + (R.counts_equal ? "yes" : "no, first at " + first));
    c.expect(R.counts_equal, "ell=3 cutoff 12: " + first);
  }
  return c.finish();
}

Outcome criterion_confluence() {
  Checker c;
  for (std::uint64_t ell : {2u, 3u}) {
    const RootField F = RootField::create(default_prime_for(ell), ell, kSeed);
    const GrGrassmannian G(F, default_grassmannian_config());
    std::mt19937_64 words(kSeed + ell);
    std::vector<Word> pool(kWords);
    for (auto& w : pool) {
      w.resize(words() % (kMaxWordLength + 1));
      for (int& g : w) g = static_cast<int>(words() % 6);
    }
    std::vector<Element> reference;
    for (const auto& w : pool) reference.push_back(G.normal_form(w, Strategy::leftmost));
    for (int s = 0; s < kStrategies; ++s) {
      std::mt19937_64 strategy(kSeed * 31 + static_cast<std::uint64_t>(s));
      for (std::size_t k = 0; k < pool.size(); ++k) {
        c.expect(G.normal_form(pool[k], Strategy::random, &strategy) == reference[k],
                 "ell=" + std::to_string(ell) + " strategy " + std::to_string(s) + " word " + to_string(pool[k]));
      }
    }
  }
  return c.finish();
}

std::string run_capture(const std::string& command) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  out += "\n<status " + std::to_string(status) + ">";
  return out;
}

Outcome criterion_determinism(const std::string& cli) {
  Checker c;
  if (cli.empty()) {
    c.expect(false, "no CLI path given (--cli)");
    return c.finish();
  }
  const std::vector<std::string> commands = {
      "qas-verify --n 3 --ell 3 --seed 7",
      "qas-verify --n 2 --ell 2 --degrees \"1 0; 0 1\" --seed 3",
      "nakayama --n 2 --ell 3 --seed 5",
      "qweyl-transfer --ell 2 --seed 9",
      "rees-demo --ell 2 --seed 2",
      "grassmannian-census --ell 3 --seed 4",
      "grassmannian-census --ell 2 --scalars alternate --seed 4",
  };
  for (const auto& args : commands) {
    const std::string cmd = "'" + cli + "' " + args + " 2>&1";
    const std::string first = run_capture(cmd);
    c.expect(first.find("<status 0>") != std::string::npos, args + " did not exit 0");
    for (int k = 1; k < kCliRepeats; ++k) c.expect(run_capture(cmd) == first, args + " differs between runs");
  }
  return c.finish();
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no runtime limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  std::string cli;
  app.add_option("--criterion", selected, "criterion numbers to run (default: all)");
  app.add_option("--cli", cli, "path to the frobex executable");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "quantum affine space is Frobenius", kQasSeconds, criterion_qas},
      {2, "complement F1 witnesses", 0, criterion_f1},
      {3, "Nakayama automorphism", 0, criterion_nakayama},
      {4, "quantum Weyl transfer round trip", kTransferSeconds, criterion_transfer},
      {5, "reduced pairing has full rank", 0, criterion_reduction},
      {6, "degree multiset machinery", 0, criterion_multisets},
      {7, "Gr(2,4) degree census refutes Frobenius", kCensusSeconds, criterion_census},
      {8, "freeness window", 0, criterion_freeness},
      {9, "normal forms are strategy independent", 0, criterion_confluence},
      {10, "CLI reports are deterministic", 0, [&cli] { return criterion_determinism(cli); }},
  };

  bool all = true;
  for (const auto& cr : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), cr.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && secs >= cr.limit_seconds) {
      out.pass = false;
      out.detail += "; exceeded " + std::to_string(static_cast<int>(cr.limit_seconds)) + " s";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << cr.id << ' ' << (out.pass ? "PASS" : "FAIL") << ": " << cr.name << "; " << out.detail
         << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
