#pragma once

#include <nsbox/box.hpp>
#include <nsbox/errors.hpp>
#include <nsbox/ratmat.hpp>

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace nsbox {

enum class Relation { LessEq, Eq };

struct PositivityTag {
  std::size_t event;
};
struct NormalizationTag {
  std::size_t input; // joint input index
};
struct NoSignalingTag {
  int party;                      // 0-based
  int x_from, x_to;               // ordered input pair on that party
  std::vector<int> other_inputs;  // fixed x_j, j != party (party order, gap removed)
  std::vector<int> other_outputs; // fixed a_j, j != party
};
using ConstraintTag = std::variant<PositivityTag, NormalizationTag, NoSignalingTag>;

/// One row of the polytope description A |P> <= |b>. Coefficients are sparse
/// (event index, small integer); positivity rows are -P_e <= 0, normalization
/// rows sum a joint-input block to 1, no-signaling rows difference two
/// party-i marginals to 0.
struct ConstraintRow {
  std::vector<std::pair<std::size_t, int>> terms;
  int bound = 0;
  Relation relation = Relation::Eq;
  ConstraintTag tag;

  Rational dot(const Box& b) const {
    Rational sum(0);
    for (const auto& [e, c] : terms) {
      if (c == 1)
        sum += b.entries[e];
      else if (c == -1)
        sum -= b.entries[e];
      else
        sum += Rational(c) * b.entries[e];
    }
    return sum;
  }

  bool tight_for(const Box& b) const {
    if (relation == Relation::Eq) return true;
    return dot(b) == Rational(bound);
  }
};

struct ConstraintSystem {
  BellScenario scenario;
  std::vector<ConstraintRow> rows;

  std::size_t positivity_count = 0;
  std::size_t normalization_count = 0;
  std::size_t no_signaling_count = 0;
};

/// Dimension of NS(n,m,k): prod_i [m_i (k_i - 1) + 1] - 1.
inline std::size_t dimension(const BellScenario& s) {
  std::size_t d = 1;
  for (int i = 0; i < s.parties(); ++i)
    d *= static_cast<std::size_t>(s.inputs()[i]) * (s.outputs()[i] - 1) + 1;
  return d - 1;
}

/// Full inequality/equality description of the no-signaling polytope:
/// one positivity row per event, one normalization equality per joint input,
/// and one no-signaling equality per (party, ordered input pair on that
/// party, fixed other inputs, fixed other outputs). Dependent rows are kept;
/// rank computations absorb the redundancy.
inline ConstraintSystem build_constraints(const BellScenario& s) {
  ConstraintSystem sys{s, {}, 0, 0, 0};

  for (std::size_t e = 0; e < s.event_count(); ++e) {
    ConstraintRow row;
    row.terms = {{e, -1}};
    row.bound = 0;
    row.relation = Relation::LessEq;
    row.tag = PositivityTag{e};
    sys.rows.push_back(std::move(row));
  }
  sys.positivity_count = s.event_count();

  for (std::size_t X = 0; X < s.joint_inputs(); ++X) {
    ConstraintRow row;
    for (std::size_t A = 0; A < s.joint_outputs(); ++A)
      row.terms.emplace_back(X * s.joint_outputs() + A, 1);
    row.bound = 1;
    row.relation = Relation::Eq;
    row.tag = NormalizationTag{X};
    sys.rows.push_back(std::move(row));
  }
  sys.normalization_count = s.joint_inputs();

  for (int i = 0; i < s.parties(); ++i) {
    // Enumerate fixed inputs/outputs of the other parties by ranking.
    std::vector<int> op; // other parties
    for (int p = 0; p < s.parties(); ++p)
      if (p != i) op.push_back(p);
    std::size_t oi_count = 1, oo_count = 1;
    for (int p : op) {
      oi_count *= static_cast<std::size_t>(s.inputs()[p]);
      oo_count *= static_cast<std::size_t>(s.outputs()[p]);
    }
    auto unrank = [&](std::size_t r, const std::vector<int>& card_all, std::vector<int>& into) {
      for (auto it = op.rbegin(); it != op.rend(); ++it) {
        into[*it] = static_cast<int>(r % card_all[*it]);
        r /= card_all[*it];
      }
    };
    std::vector<int> x(s.parties()), a(s.parties());
    for (int xf = 0; xf < s.inputs()[i]; ++xf)
      for (int xt = 0; xt < s.inputs()[i]; ++xt) {
        if (xf == xt) continue;
        for (std::size_t oi = 0; oi < oi_count; ++oi) {
          unrank(oi, s.inputs(), x);
          for (std::size_t oo = 0; oo < oo_count; ++oo) {
            unrank(oo, s.outputs(), a);
            ConstraintRow row;
            for (int ai = 0; ai < s.outputs()[i]; ++ai) {
              a[i] = ai;
              x[i] = xf;
              row.terms.emplace_back(s.event_index(Event{a, x}), 1);
              x[i] = xt;
              row.terms.emplace_back(s.event_index(Event{a, x}), -1);
            }
            row.bound = 0;
            row.relation = Relation::Eq;
            NoSignalingTag tag{i, xf, xt, {}, {}};
            for (int p : op) {
              tag.other_inputs.push_back(x[p]);
              tag.other_outputs.push_back(a[p]);
            }
            row.tag = std::move(tag);
            sys.rows.push_back(std::move(row));
            ++sys.no_signaling_count;
          }
        }
      }
  }
  return sys;
}

/// Indices of the rows satisfied with equality at `b`: every equality row,
/// plus each positivity row whose event has probability exactly 0.
inline std::vector<std::size_t> tight_row_indices(const ConstraintSystem& sys, const Box& b) {
  std::vector<std::size_t> idx;
  for (std::size_t r = 0; r < sys.rows.size(); ++r)
    if (sys.rows[r].tight_for(b)) idx.push_back(r);
  return idx;
}

/// Materializes selected rows as a dense rational matrix (the paper's A-tilde).
inline RatMatrix rows_as_matrix(const ConstraintSystem& sys,
                                const std::vector<std::size_t>& row_indices) {
  RatMatrix m(row_indices.size(), sys.scenario.event_count());
  for (std::size_t r = 0; r < row_indices.size(); ++r)
    for (const auto& [e, c] : sys.rows[row_indices[r]].terms)
      m(r, e) = Rational(c);
  return m;
}

inline RatMatrix tight_rows(const ConstraintSystem& sys, const Box& b) {
  return rows_as_matrix(sys, tight_row_indices(sys, b));
}

struct VertexCertificate {
  bool is_vertex = false;
  std::vector<std::size_t> tight_rows;
  std::size_t rank = 0;
  std::size_t required_rank = 0;
};

/// Vertex test: b is extremal iff the tight rows of the polytope description
/// have full column rank (= event count), computed exactly.
inline VertexCertificate certify_vertex(const ConstraintSystem& sys, const Box& b) {
  if (b.scenario != sys.scenario)
    throw std::invalid_argument("certify_vertex: box does not match constraint system");
  ValidationReport rep = validate(b);
  if (!rep.ok())
    throw ValidationError("certify_vertex: box is not a valid no-signaling box: " +
                          (!rep.nonnegative ? rep.nonnegative_issue
                           : !rep.normalized ? rep.normalized_issue
                                             : rep.no_signaling_issue));
  VertexCertificate cert;
  cert.tight_rows = tight_row_indices(sys, b);
  cert.required_rank = sys.scenario.event_count();
  cert.rank = rank_exact(rows_as_matrix(sys, cert.tight_rows));
  cert.is_vertex = (cert.rank == cert.required_rank);
  return cert;
}

inline VertexCertificate certify_vertex(const Box& b) {
  return certify_vertex(build_constraints(b.scenario), b);
}

} // namespace nsbox
