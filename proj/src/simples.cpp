#include "schurlab/simples.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace schurlab {

namespace {

void require_composition(const Weight& lambda, const char* where) {
  if (lambda.size() == 0 || !lambda.is_composition())
    throw std::invalid_argument(std::string(where) + ": " + lambda.to_string() +
                                " is not a composition");
}

}  // namespace

SimpleIndexReport simple_index_set(const Weight& lambda) {
  require_composition(lambda, "simple_index_set");
  const int n = static_cast<int>(lambda.size());
  SimpleIndexReport rep;
  rep.lambda = lambda;
  std::set<Weight> by_kostka, by_dominance;
  const Weight base = sort_dominant(lambda);
  for (const auto& mu : dominant_compositions(n, lambda.degree())) {
    std::size_t k = kostka(mu, lambda);
    if (k != 0) {
      rep.entries.emplace_back(mu, k);
      by_kostka.insert(mu);
    }
    if (dominance_leq(base, mu)) by_dominance.insert(mu);
  }
  rep.dominance_agrees = by_kostka == by_dominance;
  return rep;
}

std::size_t simple_dim_char0(const Weight& lambda, const Weight& mu) {
  require_composition(lambda, "simple_dim_char0");
  if (!mu.is_partition())
    throw std::invalid_argument("simple_dim_char0: " + mu.to_string() + " is not dominant");
  return kostka(mu, lambda);
}

std::size_t kostka_shifted(const Weight& mu, const Weight& lambda) {
  if (mu.size() != lambda.size() || mu.size() == 0)
    throw std::invalid_argument("kostka_shifted: weights of different length");
  if (mu.degree() != lambda.degree()) return 0;
  for (std::size_t i = 0; i + 1 < mu.size(); ++i)
    if (mu[i] < mu[i + 1]) return 0;
  int low = std::min(*std::min_element(mu.begin(), mu.end()),
                     *std::min_element(lambda.begin(), lambda.end()));
  int k = std::max(0, -low);
  Weight ones(std::vector<int>(mu.size(), k));
  return kostka(mu + ones, lambda + ones);
}

SimpleIndexReport udot_simple_index_set(const Weight& lambda, int window) {
  if (lambda.size() == 0) throw std::invalid_argument("udot_simple_index_set: empty weight");
  if (window < 0) throw std::invalid_argument("udot_simple_index_set: window is required");
  const int n = static_cast<int>(lambda.size());
  SimpleIndexReport rep;
  rep.lambda = lambda;
  rep.window = window;
  const Weight base = sort_dominant(lambda);
  std::set<Weight> by_kostka, by_dominance;
  std::vector<int> c(std::max(0, n - 1), 0);
  std::vector<Weight> candidates;
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      std::vector<int> mu(base.begin(), base.end());
      for (int i = 0; i < n - 1; ++i) {
        mu[i] += c[i];
        mu[i + 1] -= c[i];
      }
      Weight w(std::move(mu));
      bool dominant = true;
      for (int i = 0; i + 1 < n; ++i) dominant = dominant && w[i] >= w[i + 1];
      if (dominant) candidates.push_back(w);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      c[pos] = x;
      rec(pos + 1, left - x);
    }
    c[pos] = 0;
  };
  rec(0, window);
  std::sort(candidates.begin(), candidates.end(), std::greater<>());
  for (const auto& mu : candidates) {
    std::size_t k = kostka_shifted(mu, lambda);
    if (k != 0) {
      rep.entries.emplace_back(mu, k);
      by_kostka.insert(mu);
    }
    by_dominance.insert(mu);  // every candidate dominates sort_dominant(lambda)
  }
  rep.dominance_agrees = by_kostka == by_dominance;
  return rep;
}

std::size_t kostka_square_sum(const Weight& lambda) {
  require_composition(lambda, "kostka_square_sum");
  std::size_t total = 0;
  for (const auto& mu : dominant_compositions(static_cast<int>(lambda.size()), lambda.degree())) {
    std::size_t k = kostka(mu, lambda);
    total += k * k;
  }
  return total;
}

}  // namespace schurlab
