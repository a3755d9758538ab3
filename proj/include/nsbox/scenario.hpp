#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsbox {

/// Joint outputs and inputs of one measurement round: a_i in [0, k_i),
/// x_i in [0, m_i).
struct Event {
  std::vector<int> a;
  std::vector<int> x;

  friend bool operator==(const Event&, const Event&) = default;
};

/// An n-party Bell scenario with per-party input counts m_i and output
/// counts k_i. Events are addressed by a canonical flat index: inputs
/// major, outputs minor, party 1 most significant within each block.
class BellScenario {
public:
  BellScenario(int parties, std::vector<int> inputs, std::vector<int> outputs)
      : parties_(parties), inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
    if (parties_ < 1) throw std::invalid_argument("scenario: need at least one party");
    if (static_cast<int>(inputs_.size()) != parties_ ||
        static_cast<int>(outputs_.size()) != parties_)
      throw std::invalid_argument("scenario: list length must equal party count");
    for (int v : inputs_)
      if (v < 1) throw std::invalid_argument("scenario: input counts must be >= 1");
    for (int v : outputs_)
      if (v < 1) throw std::invalid_argument("scenario: output counts must be >= 1");
    joint_inputs_ = checked_product(inputs_);
    joint_outputs_ = checked_product(outputs_);
    if (joint_inputs_ > kEventCap / joint_outputs_)
      throw std::length_error("scenario: event count exceeds supported size");
    input_strides_.assign(parties_, 1);
    output_strides_.assign(parties_, 1);
    for (int i = parties_ - 2; i >= 0; --i) {
      input_strides_[i] = input_strides_[i + 1] * inputs_[i + 1];
      output_strides_[i] = output_strides_[i + 1] * outputs_[i + 1];
    }
  }

  int parties() const { return parties_; }
  const std::vector<int>& inputs() const { return inputs_; }
  const std::vector<int>& outputs() const { return outputs_; }

  std::size_t joint_inputs() const { return joint_inputs_; }
  std::size_t joint_outputs() const { return joint_outputs_; }
  std::size_t event_count() const { return joint_inputs_ * joint_outputs_; }

  std::size_t input_index(const std::vector<int>& x) const {
    return pack(x, inputs_, input_strides_, "input");
  }
  std::size_t output_index(const std::vector<int>& a) const {
    return pack(a, outputs_, output_strides_, "output");
  }
  std::vector<int> input_at(std::size_t idx) const {
    return unpack(idx, inputs_, input_strides_);
  }
  std::vector<int> output_at(std::size_t idx) const {
    return unpack(idx, outputs_, output_strides_);
  }

  std::size_t event_index(const Event& e) const {
    return input_index(e.x) * joint_outputs_ + output_index(e.a);
  }
  Event event_at(std::size_t idx) const {
    if (idx >= event_count()) throw std::out_of_range("event index out of range");
    return Event{output_at(idx % joint_outputs_), input_at(idx / joint_outputs_)};
  }

  friend bool operator==(const BellScenario& a, const BellScenario& b) {
    return a.parties_ == b.parties_ && a.inputs_ == b.inputs_ && a.outputs_ == b.outputs_;
  }
  friend bool operator!=(const BellScenario& a, const BellScenario& b) { return !(a == b); }

  std::string str() const {
    std::string s = "B(" + std::to_string(parties_) + "; m=";
    for (int i = 0; i < parties_; ++i) s += (i ? "," : "") + std::to_string(inputs_[i]);
    s += "; k=";
    for (int i = 0; i < parties_; ++i) s += (i ? "," : "") + std::to_string(outputs_[i]);
    return s + ")";
  }

private:
  static constexpr std::size_t kEventCap = 100'000'000;

  static std::size_t checked_product(const std::vector<int>& v) {
    std::size_t p = 1;
    for (int c : v) {
      if (p > kEventCap / static_cast<std::size_t>(c))
        throw std::length_error("scenario: event count exceeds supported size");
      p *= static_cast<std::size_t>(c);
    }
    return p;
  }

  std::size_t pack(const std::vector<int>& v, const std::vector<int>& card,
                   const std::vector<std::size_t>& strides, const char* what) const {
    if (static_cast<int>(v.size()) != parties_)
      throw std::invalid_argument(std::string(what) + " tuple has wrong length");
    std::size_t idx = 0;
    for (int i = 0; i < parties_; ++i) {
      if (v[i] < 0 || v[i] >= card[i])
        throw std::out_of_range(std::string(what) + " component out of range for party " +
                                std::to_string(i + 1));
      idx += static_cast<std::size_t>(v[i]) * strides[i];
    }
    return idx;
  }

  std::vector<int> unpack(std::size_t idx, const std::vector<int>& card,
                          const std::vector<std::size_t>& strides) const {
    std::vector<int> v(parties_);
    for (int i = 0; i < parties_; ++i) {
      v[i] = static_cast<int>(idx / strides[i]);
      idx %= strides[i];
      if (v[i] >= card[i]) throw std::out_of_range("tuple index out of range");
    }
    return v;
  }

  int parties_;
  std::vector<int> inputs_;
  std::vector<int> outputs_;
  std::size_t joint_inputs_ = 1;
  std::size_t joint_outputs_ = 1;
  std::vector<std::size_t> input_strides_;
  std::vector<std::size_t> output_strides_;
};

/// Builds a scenario from per-party counts. Scalar overload broadcasts the
/// same input/output count to every party.
inline BellScenario make_scenario(int parties, std::vector<int> inputs,
                                  std::vector<int> outputs) {
  return BellScenario(parties, std::move(inputs), std::move(outputs));
}

inline BellScenario make_scenario(int parties, int inputs, int outputs) {
  if (parties < 1) throw std::invalid_argument("scenario: need at least one party");
  return BellScenario(parties, std::vector<int>(parties, inputs),
                      std::vector<int>(parties, outputs));
}

} // namespace nsbox
