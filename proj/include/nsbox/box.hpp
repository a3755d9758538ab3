#pragma once

#include <nsbox/rational.hpp>
#include <nsbox/scenario.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nsbox {

/// Conditional-probability table P(a|x) over all events of a scenario,
/// stored as exact rationals in canonical event order. Immutable in spirit:
/// every operation below returns a fresh box.
struct Box {
  BellScenario scenario;
  std::vector<Rational> entries;

  Box(BellScenario s, std::vector<Rational> e)
      : scenario(std::move(s)), entries(std::move(e)) {
    if (entries.size() != scenario.event_count())
      throw std::invalid_argument("box: entry count does not match scenario");
  }

  static Box zero(const BellScenario& s) {
    return Box(s, std::vector<Rational>(s.event_count(), Rational(0)));
  }

  const Rational& at(const Event& e) const { return entries[scenario.event_index(e)]; }
  Rational& at(const Event& e) { return entries[scenario.event_index(e)]; }
  const Rational& operator[](std::size_t i) const { return entries[i]; }
  Rational& operator[](std::size_t i) { return entries[i]; }

  friend bool operator==(const Box& a, const Box& b) {
    return a.scenario == b.scenario && a.entries == b.entries;
  }
  friend bool operator!=(const Box& a, const Box& b) { return !(a == b); }
};

struct ValidationReport {
  // One flag per constraint class, with the first violated constraint
  // spelled out (party, inputs, outputs) when a class fails.
  bool nonnegative = true;
  bool normalized = true;
  bool no_signaling = true;
  std::string nonnegative_issue;
  std::string normalized_issue;
  std::string no_signaling_issue;

  bool ok() const { return nonnegative && normalized && no_signaling; }
};

namespace detail {

inline std::string tuple_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

} // namespace detail

/// Checks the three no-signaling-polytope constraint classes. All three are
/// always evaluated; the report carries the first violation of each class.
inline ValidationReport validate(const Box& b) {
  const BellScenario& s = b.scenario;
  ValidationReport rep;

  for (std::size_t i = 0; i < s.event_count(); ++i) {
    if (b.entries[i].sign() < 0) {
      Event e = s.event_at(i);
      rep.nonnegative = false;
      rep.nonnegative_issue = "P" + detail::tuple_str(e.a) + "|" + detail::tuple_str(e.x) +
                              " = " + b.entries[i].str() + " < 0";
      break;
    }
  }

  for (std::size_t X = 0; X < s.joint_inputs(); ++X) {
    Rational sum(0);
    for (std::size_t A = 0; A < s.joint_outputs(); ++A)
      sum += b.entries[X * s.joint_outputs() + A];
    if (!sum.is_one()) {
      rep.normalized = false;
      rep.normalized_issue = "sum over outputs at x=" + detail::tuple_str(s.input_at(X)) +
                             " is " + sum.str();
      break;
    }
  }

  // No-signaling: for each party i and inputs differing only at i, the
  // marginal over a_i must agree for every fixed (x_{-i}, a_{-i}).
  for (int i = 0; i < s.parties() && rep.no_signaling; ++i) {
    for (std::size_t X = 0; X < s.joint_inputs() && rep.no_signaling; ++X) {
      std::vector<int> x = s.input_at(X);
      if (x[i] != 0) continue; // use x_i = 0 as the reference input
      for (int xi = 1; xi < s.inputs()[i] && rep.no_signaling; ++xi) {
        std::vector<int> x2 = x;
        x2[i] = xi;
        for (std::size_t A = 0; A < s.joint_outputs(); ++A) {
          std::vector<int> a = s.output_at(A);
          if (a[i] != 0) continue;
          Rational m1(0), m2(0);
          for (int ai = 0; ai < s.outputs()[i]; ++ai) {
            a[i] = ai;
            m1 += b.at(Event{a, x});
            m2 += b.at(Event{a, x2});
          }
          a[i] = 0;
          if (m1 != m2) {
            rep.no_signaling = false;
            rep.no_signaling_issue =
                "party " + std::to_string(i + 1) + ": marginal of a=" +
                detail::tuple_str(a) + " differs between x=" + detail::tuple_str(x) +
                " and x=" + detail::tuple_str(x2) + " (" + m1.str() + " vs " + m2.str() + ")";
            break;
          }
        }
      }
    }
  }
  return rep;
}

/// Entrywise convex combination. Weights must be non-negative and sum to 1;
/// all boxes must share one scenario.
inline Box mix(const std::vector<Box>& boxes, const std::vector<Rational>& weights) {
  if (boxes.empty() || boxes.size() != weights.size())
    throw std::invalid_argument("mix: need matching, non-empty box and weight lists");
  Rational total(0);
  for (const Rational& w : weights) {
    if (w.sign() < 0) throw std::invalid_argument("mix: negative weight");
    total += w;
  }
  if (!total.is_one()) throw std::invalid_argument("mix: weights must sum to 1");
  const BellScenario& s = boxes.front().scenario;
  for (const Box& b : boxes)
    if (b.scenario != s) throw std::invalid_argument("mix: scenario mismatch");
  Box out = Box::zero(s);
  for (std::size_t j = 0; j < boxes.size(); ++j) {
    if (weights[j].is_zero()) continue;
    for (std::size_t i = 0; i < out.entries.size(); ++i)
      out.entries[i] += weights[j] * boxes[j].entries[i];
  }
  return out;
}

/// Product box: parties of `a` followed by parties of `b`,
/// P((u,v)|(x,y)) = P_a(u|x) * P_b(v|y).
inline Box tensor(const Box& a, const Box& b) {
  std::vector<int> m = a.scenario.inputs(), k = a.scenario.outputs();
  m.insert(m.end(), b.scenario.inputs().begin(), b.scenario.inputs().end());
  k.insert(k.end(), b.scenario.outputs().begin(), b.scenario.outputs().end());
  BellScenario s(a.scenario.parties() + b.scenario.parties(), std::move(m), std::move(k));
  Box out = Box::zero(s);
  const int na = a.scenario.parties();
  for (std::size_t i = 0; i < s.event_count(); ++i) {
    Event e = s.event_at(i);
    Event ea{{e.a.begin(), e.a.begin() + na}, {e.x.begin(), e.x.begin() + na}};
    Event eb{{e.a.begin() + na, e.a.end()}, {e.x.begin() + na, e.x.end()}};
    out.entries[i] = a.at(ea) * b.at(eb);
  }
  return out;
}

/// Marginal box over `keep` (0-based party indices, any order; output party
/// order is ascending). The marginal is computed once per assignment of the
/// discarded inputs and all assignments are required to agree exactly;
/// disagreement means the input box signals and is reported as an error.
inline Box marginalize(const Box& b, std::vector<int> keep) {
  const BellScenario& s = b.scenario;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw std::invalid_argument("marginalize: must keep at least one party");
  for (int p : keep)
    if (p < 0 || p >= s.parties()) throw std::invalid_argument("marginalize: bad party index");
  std::vector<int> drop;
  for (int p = 0; p < s.parties(); ++p)
    if (!std::binary_search(keep.begin(), keep.end(), p)) drop.push_back(p);
  if (drop.empty()) return b;

  std::vector<int> mk, kk;
  for (int p : keep) { mk.push_back(s.inputs()[p]); kk.push_back(s.outputs()[p]); }
  BellScenario sub(static_cast<int>(keep.size()), std::move(mk), std::move(kk));

  std::size_t drop_inputs = 1, drop_outputs = 1;
  for (int p : drop) {
    drop_inputs *= static_cast<std::size_t>(s.inputs()[p]);
    drop_outputs *= static_cast<std::size_t>(s.outputs()[p]);
  }
  auto unrank = [](std::size_t r, const std::vector<int>& parties,
                   const std::vector<int>& card, std::vector<int>& into) {
    for (auto it = parties.rbegin(); it != parties.rend(); ++it) {
      into[*it] = static_cast<int>(r % card[*it]);
      r /= card[*it];
    }
  };

  Box out = Box::zero(sub);
  std::vector<int> x(s.parties()), a(s.parties());
  for (std::size_t i = 0; i < sub.event_count(); ++i) {
    Event se = sub.event_at(i);
    std::optional<Rational> ref;
    for (std::size_t xr = 0; xr < drop_inputs; ++xr) {
      for (std::size_t j = 0; j < keep.size(); ++j) x[keep[j]] = se.x[j];
      unrank(xr, drop, s.inputs(), x);
      Rational sum(0);
      for (std::size_t ar = 0; ar < drop_outputs; ++ar) {
        for (std::size_t j = 0; j < keep.size(); ++j) a[keep[j]] = se.a[j];
        unrank(ar, drop, s.outputs(), a);
        sum += b.at(Event{a, x});
      }
      if (!ref) {
        ref = sum;
      } else if (*ref != sum) {
        throw std::domain_error(
            "marginalize: box signals across the discarded parties (marginal of a=" +
            detail::tuple_str(se.a) + "|x=" + detail::tuple_str(se.x) +
            " depends on the discarded inputs: " + ref->str() + " vs " + sum.str() + ")");
      }
    }
    out.entries[i] = *ref;
  }
  return out;
}

struct ProductFormResult {
  bool is_product = false;
  std::optional<Box> left;
  std::optional<Box> right;
};

/// Tests whether the box factorizes exactly across the bipartition
/// (cut | complement); on success returns both factor boxes.
inline ProductFormResult check_product_form(const Box& b, std::vector<int> cut) {
  const BellScenario& s = b.scenario;
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  std::vector<int> other;
  for (int p = 0; p < s.parties(); ++p)
    if (!std::binary_search(cut.begin(), cut.end(), p)) other.push_back(p);
  if (cut.empty() || other.empty())
    throw std::invalid_argument("check_product_form: cut must be a proper bipartition");

  Box left = marginalize(b, cut);
  Box right = marginalize(b, other);
  for (std::size_t i = 0; i < s.event_count(); ++i) {
    Event e = s.event_at(i);
    Event el{{}, {}}, er{{}, {}};
    for (int p : cut) { el.a.push_back(e.a[p]); el.x.push_back(e.x[p]); }
    for (int p : other) { er.a.push_back(e.a[p]); er.x.push_back(e.x[p]); }
    if (b.entries[i] != left.at(el) * right.at(er)) return {};
  }
  return ProductFormResult{true, std::move(left), std::move(right)};
}

} // namespace nsbox
