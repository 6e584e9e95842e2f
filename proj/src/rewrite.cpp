#include "frobex/rewrite.hpp"

#include <sstream>

namespace frobex {

RewriteSystem::RewriteSystem(RootField field, std::size_t generators, std::vector<RewriteRule> rules,
                             std::size_t step_budget)
    : field_(field), generators_(generators), rules_(std::move(rules)), step_budget_(step_budget) {
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    const auto& r = rules_[k];
    auto in_range = [&](int g) { return g >= 0 && static_cast<std::size_t>(g) < generators_; };
    if (!in_range(r.left) || !in_range(r.right)) throw AlgebraDefinitionError("rewrite rule uses unknown generator");
    for (const auto& t : r.rhs) {
      for (int g : t.word) {
        if (!in_range(g)) throw AlgebraDefinitionError("rewrite rule produces unknown generator");
      }
    }
    if (!lookup_.emplace(std::pair{r.left, r.right}, k).second) {
      throw AlgebraDefinitionError("two rewrite rules share the left-hand side " + std::to_string(r.left) + " " +
                                   std::to_string(r.right));
    }
  }
}

RewriteSystem RewriteSystem::q_commuting(const RootField& field, const std::vector<std::vector<std::int64_t>>& C,
                                         std::vector<RewriteRule> extra, std::size_t step_budget) {
  const std::size_t n = C.size();
  std::vector<RewriteRule> rules;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      rules.push_back({static_cast<int>(i), static_cast<int>(j),
                       {{field.zeta_pow(C[i][j]), Word{static_cast<int>(j), static_cast<int>(i)}}}});
    }
  }
  for (auto& r : extra) rules.push_back(std::move(r));
  return RewriteSystem(field, n, std::move(rules), step_budget);
}

const RewriteRule* RewriteSystem::rule_for(int left, int right) const {
  auto it = lookup_.find({left, right});
  return it == lookup_.end() ? nullptr : &rules_[it->second];
}

bool RewriteSystem::is_reducible(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (rule_for(w[i], w[i + 1])) return true;
  }
  return false;
}

RewriteSystem::Combination RewriteSystem::normal_form(const Word& w, Scalar coeff, Strategy strategy,
                                                      std::mt19937_64* rng) const {
  Combination input;
  if (coeff % field_.p() != 0) input.emplace(w, coeff % field_.p());
  return normal_form(input, strategy, rng);
}

RewriteSystem::Combination RewriteSystem::normal_form(const Combination& input, Strategy strategy,
                                                      std::mt19937_64* rng) const {
  if (strategy == Strategy::random && rng == nullptr) {
    throw std::invalid_argument("random rewriting strategy needs a generator");
  }
  auto accumulate = [this](Combination& into, const Word& w, Scalar c) {
    if (c == 0) return;
    auto [it, inserted] = into.try_emplace(w, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (it->second == 0) into.erase(it);
    }
  };

  Combination pending = input;
  Combination done;
  std::size_t steps = 0;
  std::vector<std::size_t> positions;
  while (!pending.empty()) {
    auto node = pending.extract(strategy == Strategy::random && rng ? std::next(pending.begin(), (*rng)() % pending.size())
                                                                    : pending.begin());
    const Word& w = node.key();
    const Scalar c = node.mapped();
    positions.clear();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (rule_for(w[i], w[i + 1])) positions.push_back(i);
    }
    if (positions.empty()) {
      accumulate(done, w, c);
      continue;
    }
    if (++steps > step_budget_) {
      throw RewriteBudgetExceeded("rewriting exceeded the step budget of " + std::to_string(step_budget_));
    }
    std::size_t pos = positions.front();
    if (strategy == Strategy::rightmost) pos = positions.back();
    if (strategy == Strategy::random) pos = positions[(*rng)() % positions.size()];
    const RewriteRule& rule = *rule_for(w[pos], w[pos + 1]);
    for (const auto& term : rule.rhs) {
      Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      next.insert(next.end(), term.word.begin(), term.word.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
      accumulate(pending, next, field_.mul(c, term.coeff));
    }
  }
  return done;
}

std::optional<std::string> RewriteSystem::find_critical_pair_failure() const {
  for (const auto& r1 : rules_) {
    for (const auto& r2 : rules_) {
      if (r1.right != r2.left) continue;
      const int a = r1.left, b = r1.right, c = r2.right;
      // Reduce ab first, or bc first, then normalize both.
      Combination via_left, via_right;
      for (const auto& t : r1.rhs) {
        Word w = t.word;
        w.push_back(c);
        for (const auto& [nw, nc] : normal_form(w, t.coeff)) {
          via_left[nw] = field_.add(via_left[nw], nc);
        }
      }
      for (const auto& t : r2.rhs) {
        Word w{a};
        w.insert(w.end(), t.word.begin(), t.word.end());
        for (const auto& [nw, nc] : normal_form(w, t.coeff)) {
          via_right[nw] = field_.add(via_right[nw], nc);
        }
      }
      std::erase_if(via_left, [](const auto& kv) { return kv.second == 0; });
      std::erase_if(via_right, [](const auto& kv) { return kv.second == 0; });
      if (via_left != via_right) {
        return "overlap " + to_string(Word{a, b, c}) + " is not resolvable";
      }
    }
  }
  return std::nullopt;
}

std::string to_string(const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << 'x' << (w[i] + 1);
  }
  return out.str();
}

}  // namespace frobex
