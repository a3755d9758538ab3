#pragma once

#include <nsbox/box.hpp>

#include <stdexcept>
#include <vector>

namespace nsbox {

namespace detail {

inline Rational int_pow(long long base, int exp) {
  BigInt v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return Rational(std::move(v));
}

// Fills the box with weight / |{winning a}| on events selected by `wins`,
// checking that every input has the same number of winning outputs.
template <typename Pred>
Box uniform_on_winning(const BellScenario& s, Pred wins, const Rational& weight_per_event) {
  Box b = Box::zero(s);
  for (std::size_t i = 0; i < s.event_count(); ++i) {
    Event e = s.event_at(i);
    if (wins(e)) b.entries[i] = weight_per_event;
  }
  return b;
}

} // namespace detail

/// Generalized PR box on B(n,2,k): weight 1/k^(n-1) on events with
/// sum_i a_i = prod_i x_i (mod k).
inline Box pr_box(int n, int k) {
  if (n < 2 || k < 2) throw std::invalid_argument("pr_box: need n >= 2, k >= 2");
  BellScenario s = make_scenario(n, 2, k);
  Rational w = Rational(1) / detail::int_pow(k, n - 1);
  return detail::uniform_on_winning(s, [&](const Event& e) {
    long long sum = 0, prod = 1;
    for (int i = 0; i < n; ++i) { sum += e.a[i]; prod *= e.x[i]; }
    return sum % k == prod % k;
  }, w);
}

/// Locally correlated box on B(n,2,k): weight 1/k^(n-1) on events with
/// sum_i a_i = 0 (mod k), for every input.
inline Box correlated_box(int n, int k) {
  if (n < 1 || k < 2) throw std::invalid_argument("correlated_box: need n >= 1, k >= 2");
  BellScenario s = make_scenario(n, 2, k);
  Rational w = Rational(1) / detail::int_pow(k, n - 1);
  return detail::uniform_on_winning(s, [&](const Event& e) {
    long long sum = 0;
    for (int i = 0; i < n; ++i) sum += e.a[i];
    return sum % k == 0;
  }, w);
}

/// Completely noisy box on B(n,2,k): every entry 1/k^n.
inline Box noisy_box(int n, int k) {
  if (n < 1 || k < 2) throw std::invalid_argument("noisy_box: need n >= 1, k >= 2");
  BellScenario s = make_scenario(n, 2, k);
  Rational w = Rational(1) / detail::int_pow(k, n);
  return Box(s, std::vector<Rational>(s.event_count(), w));
}

/// Modified PR box on B(p,2,k) used by the extension construction: the
/// winning constraint negates every input factor except the first and last,
/// sum_i a_i = x_1 * (x_2 + 1) * ... * (x_{p-1} + 1) * x_p (mod k).
inline Box modified_pr_box(int parties, int k) {
  if (parties < 2 || k < 2)
    throw std::invalid_argument("modified_pr_box: need parties >= 2, k >= 2");
  BellScenario s = make_scenario(parties, 2, k);
  Rational w = Rational(1) / detail::int_pow(k, parties - 1);
  return detail::uniform_on_winning(s, [&](const Event& e) {
    long long sum = 0;
    for (int i = 0; i < parties; ++i) sum += e.a[i];
    long long prod = static_cast<long long>(e.x.front()) * e.x.back();
    for (int i = 1; i + 1 < parties; ++i) prod *= 1 - e.x[i];
    return sum % k == prod % k;
  }, w);
}

/// Single-party deterministic box with two inputs and k outputs that always
/// outputs 0.
inline Box point_box(int k = 2) {
  if (k < 1) throw std::invalid_argument("point_box: need k >= 1");
  BellScenario s = make_scenario(1, 2, k);
  Box b = Box::zero(s);
  for (int z = 0; z < 2; ++z) b.at(Event{{0}, {z}}) = Rational(1);
  return b;
}

/// Deterministic (local) box: party i answers a_i = f_i(x_i). Each f_i must
/// be total on the party's input set.
inline Box deterministic_box(const BellScenario& s, const std::vector<std::vector<int>>& f) {
  if (static_cast<int>(f.size()) != s.parties())
    throw std::invalid_argument("deterministic_box: need one response table per party");
  for (int i = 0; i < s.parties(); ++i) {
    if (static_cast<int>(f[i].size()) != s.inputs()[i])
      throw std::invalid_argument("deterministic_box: response table for party " +
                                  std::to_string(i + 1) + " is not total");
    for (int v : f[i])
      if (v < 0 || v >= s.outputs()[i])
        throw std::invalid_argument("deterministic_box: output out of range for party " +
                                    std::to_string(i + 1));
  }
  Box b = Box::zero(s);
  std::vector<int> a(s.parties());
  for (std::size_t X = 0; X < s.joint_inputs(); ++X) {
    std::vector<int> x = s.input_at(X);
    for (int i = 0; i < s.parties(); ++i) a[i] = f[i][x[i]];
    b.at(Event{a, x}) = Rational(1);
  }
  return b;
}

/// Isotropic box: eps * PR + (1 - eps) * noise.
inline Box isotropic_box(int n, int k, const Rational& eps) {
  return mix({pr_box(n, k), noisy_box(n, k)}, {eps, Rational(1) - eps});
}

/// The distillation family P_eps: eps * PR + (1 - eps) * correlated.
inline Box pr_correlated_mix(int n, int k, const Rational& eps) {
  return mix({pr_box(n, k), correlated_box(n, k)}, {eps, Rational(1) - eps});
}

} // namespace nsbox
