#include "frobex/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "frobex/config.hpp"
#include "frobex/grassmannian.hpp"
#include "frobex/qas.hpp"

namespace frobex {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(cur);
  }
  return out;
}

std::string format_matrix(const std::vector<std::vector<std::int64_t>>& C) {
  std::ostringstream out;
  for (std::size_t i = 0; i < C.size(); ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < C[i].size(); ++j) out << (j ? " " : "") << C[i][j];
  }
  return out.str();
}

std::string format_degrees(const std::vector<GroupElement>& D) {
  std::ostringstream out;
  for (std::size_t i = 0; i < D.size(); ++i) out << (i ? " " : "") << to_string(D[i]);
  return out.str();
}

std::string optional_degree(const std::optional<GroupElement>& g) { return g ? to_string(*g) : "none"; }

void fill_defaults(RunConfig& cfg) {
  if (cfg.degrees.empty()) cfg.degrees.assign(cfg.n, GroupElement{1});
  if (cfg.C.empty()) cfg.C = random_antisymmetric(cfg.n, cfg.ell, cfg.seed);
  if (cfg.degrees.size() != cfg.n) throw DimensionError("--degrees lists " + std::to_string(cfg.degrees.size()) +
                                                        " degrees for n = " + std::to_string(cfg.n));
  if (cfg.C.size() != cfg.n) throw DimensionError("--C must be " + std::to_string(cfg.n) + " x " + std::to_string(cfg.n));
}

std::string render_config(const RunConfig& cfg, const std::optional<RootField>& field) {
  std::ostringstream out;
  out << "[config]\n";
  out << "command: " << cfg.command << '\n';
  out << "p: " << (field ? std::to_string(field->p()) : (cfg.p ? std::to_string(*cfg.p) : "default")) << '\n';
  out << "ell: " << cfg.ell << '\n';
  if (field) out << "zeta: " << field->zeta() << '\n';
  out << "seed: " << cfg.seed << '\n';
  if (cfg.command == "qas-verify" || cfg.command == "nakayama") {
    out << "n: " << cfg.n << '\n';
    out << "degrees: " << format_degrees(cfg.degrees) << '\n';
    out << "C: " << format_matrix(cfg.C) << '\n';
  }
  if (cfg.command == "grassmannian-census") out << "scalars: " << cfg.scalars << '\n';
  out << "window: " << (cfg.window ? std::to_string(*cfg.window) : "default") << '\n';
  out << "config_file: " << cfg.config_path.value_or("none") << '\n';
  return out.str();
}

std::string summary_lines(const FrobeniusCertificate& cert) {
  std::ostringstream out;
  out << "verdict: " << to_string(cert.verdict) << '\n';
  out << "rank: " << cert.rank << '\n';
  out << "mode: " << (cert.mode == Filtration::graded ? "graded" : "filtered") << '\n';
  out << "phi_degree: " << optional_degree(cert.phi_degree) << '\n';
  out << "symmetry_d: " << optional_degree(cert.symmetry_d) << '\n';
  if (cert.phi_degree && cert.symmetry_d) {
    out << "degree_relation: symmetry_d + phi_degree = " << to_string(*cert.symmetry_d + *cert.phi_degree) << '\n';
  }
  out << "gram_status: " << to_string(cert.gram_status.kind) << '\n';
  out << "gram_method: " << cert.gram_status.method << '\n';
  out << "gram_detail: " << cert.gram_status.detail << '\n';
  if (cert.gram_status.determinant) out << "gram_determinant: " << *cert.gram_status.determinant << '\n';
  if (cert.gram_status.kind == GramKind::probabilistic_unit) {
    out << "gram_failure_bound: " << cert.gram_status.failure_bound << '\n';
  }
  std::size_t complete = 0;
  for (const auto& w : cert.f1_witnesses) complete += w.complete() ? 1 : 0;
  out << "f1_witnesses: " << complete << "/" << cert.f1_witnesses.size() << '\n';
  out << "nakayama_trivial: " << (cert.nakayama ? (cert.nakayama->trivial ? "true" : "false") : "not-computed") << '\n';
  if (cert.nakayama) {
    out << "nakayama_fixes_subring: " << (cert.nakayama->fixes_subring ? "true" : "false") << '\n';
    out << "nakayama_pairs_checked: " << cert.nakayama->pairs_checked << '\n';
  }
  if (cert.refutation) {
    static const char* kinds[] = {"missing-f1-witness", "non-unit-gram", "asymmetric-degrees"};
    out << "refutation: " << kinds[static_cast<int>(cert.refutation->kind)] << ": " << cert.refutation->detail << '\n';
  } else {
    out << "refutation: none\n";
  }
  out << "[degrees]\n";
  for (const auto& [g, m] : cert.degrees.entries()) out << to_string(g) << ": " << m << '\n';
  return out.str();
}

std::string nakayama_block(const CentralFreeExtension& E, const FrobeniusCertificate& cert) {
  std::ostringstream out;
  out << "[nakayama]\n";
  if (!cert.nakayama) return out.str() + "not-computed\n";
  for (std::size_t g = 0; g < cert.nakayama->images.size(); ++g) {
    out << E.ambient.format(E.ambient.generators()[g]) << " -> " << E.ambient.format(cert.nakayama->images[g]) << '\n';
  }
  return out.str();
}

std::string table_line(const std::string& key, const TableComparison& t) {
  return key + ": " + (t.equal ? "true" : "false") + " (" + std::to_string(t.pairs_checked) + " products" +
         (t.equal ? "" : "; " + t.first_mismatch) + ")\n";
}

std::string hom_line(const std::string& key, const HomomorphismCheck& h) {
  return key + ": " + (h.ok ? "true" : "false") + " (" + std::to_string(h.pairs_checked) + " pairs" +
         (h.ok ? "" : "; " + h.first_failure) + ")\n";
}

RootField make_field(const RunConfig& cfg) {
  return RootField::create(cfg.p.value_or(default_prime_for(cfg.ell)), cfg.ell, cfg.seed);
}

RunResult run_qas(const RunConfig& cfg, bool nakayama) {
  const RootField F = make_field(cfg);
  const QuantumAffineSpace A(F, cfg.C, cfg.degrees);
  const CentralFreeExtension E = A.extension();
  const FrobeniusCertificate cert = verify_frobenius(E, {.seed = cfg.seed});
  std::string report = render_config(cfg, F) + render_certificate(E, cert);
  bool ok = cert.verdict == Verdict::frobenius;
  if (nakayama) {
    report += nakayama_block(E, cert);
    ok = ok && cert.nakayama && cert.nakayama->fixes_subring;
  }
  return {ok ? 0 : 1, report};
}

RunResult run_transfer(const RunConfig& cfg) {
  const RootField F = make_field(cfg);
  std::optional<GroupElement> window;
  if (cfg.window) window = GroupElement{*cfg.window};
  const QweylTransfer T = qweyl_transfer(F, window, cfg.seed);
  std::ostringstream out;
  out << render_config(cfg, F);
  out << "[transfer]\n";
  out << "rees_window: " << to_string(T.window) << '\n';
  out << table_line("gr_equals_quantum_plane", T.gr_table);
  out << "graded_verdict: " << to_string(T.graded.verdict) << '\n';
  out << "filtered_verdict: " << to_string(T.filtered.verdict) << '\n';
  out << "rees_verdict: " << to_string(T.rees.verdict) << '\n';
  out << "ranks: " << T.graded.rank << " " << T.filtered.rank << " " << T.rees.rank << '\n';
  out << "phi_degrees: " << optional_degree(T.graded.phi_degree) << " " << optional_degree(T.filtered.phi_degree) << " "
      << optional_degree(T.rees.phi_degree) << '\n';
  out << table_line("m0_equals_gr", T.m0_table);
  out << table_line("m1_equals_base", T.m1_table);
  out << hom_line("m0_homomorphism", T.m0_hom);
  out << hom_line("m1_homomorphism", T.m1_hom);
  out << "transfer_ok: " << (T.ok() ? "true" : "false") << '\n';
  out << "[filtered]\n" << summary_lines(T.filtered);
  out << "[rees]\n" << summary_lines(T.rees);
  return {T.ok() && T.filtered.verdict == Verdict::frobenius ? 0 : 1, out.str()};
}

RunResult run_rees_demo(const RunConfig& cfg) {
  const RootField F = make_field(cfg);
  const BasedAlgebra W = qweyl_new(cfg.ell, F);
  CentralFreeExtension filtered = lift_form(centre_extension(W, cfg.ell, false),
                                            qweyl_graded_plane(F).extension(), 3 * static_cast<int>(cfg.ell));
  const GroupElement window = cfg.window ? GroupElement{*cfg.window} : default_window(filtered);
  const ReesAlgebra RA(W, window);
  const BasedAlgebra& R = RA.algebra();
  const Element x1 = Element::monomial(RA.index(BasisIndex{0, 1}, GroupElement{1}));
  const Element y1 = Element::monomial(RA.index(BasisIndex{1, 0}, GroupElement{1}));
  const int bound = static_cast<int>(window[0]);
  const auto m0 = compare_product_tables(reduce_canonical(RA, CanonicalIdeal::m0), gr_of(W), bound);
  const auto m1 = compare_product_tables(reduce_canonical(RA, CanonicalIdeal::m1), W, bound);
  const FrobeniusCertificate filtered_cert = verify_frobenius(filtered, {.seed = cfg.seed});
  const CentralFreeExtension E = rees_extension(RA, filtered, filtered_cert.phi_degree.value());
  const FrobeniusCertificate cert = verify_frobenius(E, {.seed = cfg.seed});
  std::ostringstream out;
  out << render_config(cfg, F);
  out << "[rees]\n";
  out << "window: " << to_string(window) << '\n';
  out << "window_basis_size: " << RA.enumerate_window(bound).size() << '\n';
  out << "product (x;1)*(y;1): " << R.format(R.multiply(x1, y1)) << '\n';
  out << table_line("m0_equals_gr", m0);
  out << table_line("m1_equals_base", m1);
  out << render_certificate(E, cert);
  const bool ok = m0.equal && m1.equal && cert.verdict == Verdict::frobenius;
  return {ok ? 0 : 1, out.str()};
}

RunResult run_census(const RunConfig& cfg) {
  const RootField F = make_field(cfg);
  if (cfg.scalars != "default" && cfg.scalars != "alternate") {
    throw DomainError("scalars must be 'default' or 'alternate', not '" + cfg.scalars + "'");
  }
  const GrGrassmannian G(F, cfg.scalars == "default" ? default_grassmannian_config() : alternate_grassmannian_config());
  const CensusReport census = degree_census(G);
  std::string report = render_config(cfg, F) + "[census]\n" + render_census(census);
  if (cfg.window) {
    const FreenessReport fr = verify_freeness_window(G, *cfg.window);
    std::ostringstream out;
    out << "[freeness]\n";
    out << "cutoff: " << fr.cutoff << '\n';
    out << "counts_equal: " << (fr.counts_equal ? "true" : "false") << '\n';
    out << "bijective: " << (fr.bijective ? "true" : "false") << '\n';
    for (const auto& row : fr.per_degree) {
      out << row.degree << ": products " << row.products << ", standard " << row.standard << ", images " << row.images
          << '\n';
    }
    for (const auto& c : fr.counterexamples) out << "counterexample: " << c << '\n';
    report += out.str();
  }
  return {census.verdict == Verdict::not_frobenius ? 0 : 1, report};
}

}  // namespace

std::vector<GroupElement> parse_degree_list(const std::string& text) {
  std::vector<GroupElement> out;
  for (const auto& part : split(text, ';')) out.push_back(parse_group_element(part));
  return out;
}

std::vector<std::vector<std::int64_t>> parse_matrix(const std::string& text) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : split(text, ';')) {
    std::vector<std::int64_t> r;
    const GroupElement g = parse_group_element(row);
    for (auto c : g.coords()) r.push_back(c);
    out.push_back(r);
  }
  return out;
}

void apply_config_file(RunConfig& cfg) {
  if (!cfg.config_path) return;
  const std::string& path = *cfg.config_path;
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "cannot open file");
  const Presentation pres = parse_presentation(in, path);
  if (pres.p) cfg.p = pres.p;
  if (pres.ell) cfg.ell = *pres.ell;
  if (!pres.generators.empty() && cfg.command != "grassmannian-census") {
    cfg.n = pres.generators.size();
    cfg.degrees.clear();
    for (const auto& g : pres.generators) cfg.degrees.push_back(g.degree);
    cfg.C = pres.commutation;
  }
  auto number = [&](const std::string& key, const std::string& value) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw ConfigError(path, pres.run_lines.at(key), "[run] " + key + " expects an integer");
    return v;
  };
  for (const auto& [key, value] : pres.run) {
    if (key == "window") {
      cfg.window = number(key, value);
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(number(key, value));
    } else if (key == "n") {
      cfg.n = static_cast<std::size_t>(number(key, value));
    } else if (key == "scalars") {
      cfg.scalars = value;
    } else if (key == "command") {
      cfg.command = value;
    } else {
      throw ConfigError(path, pres.run_lines.at(key), "unknown [run] key '" + key + "'");
    }
  }
}

void apply_environment(RunConfig& cfg) {
  if (const char* env = std::getenv("FROBEX_SEED")) {
    const std::string text(env);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) throw DomainError("FROBEX_SEED must be a non-negative integer");
    cfg.seed = v;
  }
}

std::vector<std::vector<std::int64_t>> random_antisymmetric(std::size_t n, std::uint64_t ell, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> entry(0, static_cast<std::int64_t>(ell) - 1);
  std::vector<std::vector<std::int64_t>> C(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      C[i][j] = entry(rng);
      C[j][i] = -C[i][j];
    }
  }
  return C;
}

std::string render_certificate(const CentralFreeExtension& E, const FrobeniusCertificate& cert) {
  std::ostringstream out;
  out << "[certificate]\n";
  out << "extension: " << E.name << '\n';
  out << summary_lines(cert);
  out << "[gram]\n";
  for (const auto& row : cert.gram) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " | " : "") << E.ambient.format(row[j]);
    out << '\n';
  }
  return out.str();
}

bool QweylTransfer::ok() const {
  return gr_table.equal && graded.verdict == Verdict::frobenius && filtered.verdict == Verdict::frobenius &&
         rees.verdict == Verdict::frobenius && graded.rank == filtered.rank && filtered.rank == rees.rank &&
         graded.phi_degree == filtered.phi_degree && filtered.phi_degree == rees.phi_degree && m0_table.equal &&
         m1_table.equal && m0_hom.ok && m1_hom.ok;
}

QweylTransfer qweyl_transfer(const RootField& field, std::optional<GroupElement> window, std::uint64_t seed) {
  QweylTransfer T;
  T.ell = field.ell();
  const int ell = static_cast<int>(field.ell());
  const BasedAlgebra W = qweyl_new(field.ell(), field);
  const QuantumAffineSpace plane = qweyl_graded_plane(field);
  T.gr_table = compare_product_tables(gr_of(W), plane.algebra(), 3 * ell);

  const CentralFreeExtension graded = plane.extension();
  T.graded = verify_frobenius(graded, {.seed = seed});
  const CentralFreeExtension filtered = lift_form(centre_extension(W, field.ell(), false), graded, 3 * ell);
  T.filtered = verify_frobenius(filtered, {.seed = seed});

  T.window = window.value_or(default_window(filtered));
  const ReesAlgebra RA(W, T.window);
  const CentralFreeExtension rees = rees_extension(RA, filtered, T.filtered.phi_degree.value());
  T.rees = verify_frobenius(rees, {.seed = seed});

  const int bound = static_cast<int>(T.window[0]);
  T.m0_table = compare_product_tables(reduce_canonical(RA, CanonicalIdeal::m0), gr_of(W), bound);
  T.m1_table = compare_product_tables(reduce_canonical(RA, CanonicalIdeal::m1), W, bound);
  const BasedAlgebra grW = gr_of(W);
  T.m0_hom = check_quotient_homomorphism(
      RA, grW, [&RA](const Element& u) { return quotient_map(RA, CanonicalIdeal::m0, u); }, bound);
  T.m1_hom = check_quotient_homomorphism(
      RA, W, [&RA](const Element& u) { return quotient_map(RA, CanonicalIdeal::m1, u); }, bound);
  return T;
}

RunResult run_command(RunConfig cfg) {
  std::optional<RootField> field;
  try {
    apply_config_file(cfg);
    if (std::find(known_commands().begin(), known_commands().end(), cfg.command) == known_commands().end()) {
      throw DomainError("unknown command '" + cfg.command + "'");
    }
    if (cfg.command == "qas-verify" || cfg.command == "nakayama") fill_defaults(cfg);
    if (cfg.window && *cfg.window < 0) throw DomainError("window must be non-negative");
    field = make_field(cfg);
    if (cfg.command == "qas-verify") return run_qas(cfg, false);
    if (cfg.command == "nakayama") return run_qas(cfg, true);
    if (cfg.command == "qweyl-transfer") return run_transfer(cfg);
    if (cfg.command == "rees-demo") return run_rees_demo(cfg);
    return run_census(cfg);
  } catch (const ConfigError& e) {
    return {2, render_config(cfg, field) + "error: " + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {2, render_config(cfg, field) + "error: " + e.what() + "\n"};
  } catch (const std::domain_error& e) {
    return {2, render_config(cfg, field) + "error: " + e.what() + "\n"};
  } catch (const AlgebraDefinitionError& e) {
    return {2, render_config(cfg, field) + "error: " + e.what() + "\n"};
  }
}

}  // namespace frobex
