#pragma once

// Word rewriting with length-two left-hand sides: q-commutation swaps for
// out-of-order generator pairs plus straightening rules.

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "frobex/algebra.hpp"
#include "frobex/field.hpp"

namespace frobex {

using Word = std::vector<int>;

class RewriteBudgetExceeded : public AlgebraDefinitionError {
 public:
  using AlgebraDefinitionError::AlgebraDefinitionError;
};

struct RewriteTerm {
  Scalar coeff = 1;
  Word word;
};

/// left right -> sum of coeff * word.
struct RewriteRule {
  int left = 0;
  int right = 0;
  std::vector<RewriteTerm> rhs;
};

enum class Strategy { leftmost, rightmost, random };

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

class RewriteSystem {
 public:
  RewriteSystem(RootField field, std::size_t generators, std::vector<RewriteRule> rules,
                std::size_t step_budget = kDefaultStepBudget);

  /// Swap rules x_i x_j -> zeta^{C[i][j]} x_j x_i for every i > j, plus the
  /// given extra rules (which must not target an out-of-order pair).
  static RewriteSystem q_commuting(const RootField& field, const std::vector<std::vector<std::int64_t>>& exponents,
                                   std::vector<RewriteRule> extra = {}, std::size_t step_budget = kDefaultStepBudget);

  const RootField& field() const { return field_; }
  std::size_t generators() const { return generators_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  const RewriteRule* rule_for(int left, int right) const;
  bool is_reducible(const Word& w) const;

  using Combination = std::map<Word, Scalar>;

  /// Irreducible form of coeff * w. Random strategy requires rng.
  Combination normal_form(const Word& w, Scalar coeff = 1, Strategy strategy = Strategy::leftmost,
                          std::mt19937_64* rng = nullptr) const;
  Combination normal_form(const Combination& input, Strategy strategy = Strategy::leftmost,
                          std::mt19937_64* rng = nullptr) const;

  /// First overlap a b c whose two one-step reductions have different
  /// normal forms, if any. With length-two rules this decides local
  /// confluence.
  std::optional<std::string> find_critical_pair_failure() const;

 private:
  RootField field_;
  std::size_t generators_;
  std::vector<RewriteRule> rules_;
  std::size_t step_budget_;
  std::map<std::pair<int, int>, std::size_t> lookup_;
};

std::string to_string(const Word& w);

}  // namespace frobex
