#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "locorl/math/rng.hpp"

namespace locorl::net {

// Fixed-topology fully connected net: tanh hidden layers, identity output.
struct MlpSpec {
  int input_width = 1;
  std::vector<int> hidden_widths{512, 512};
  int output_width = 1;

  int layer_count() const { return static_cast<int>(hidden_widths.size()) + 1; }
  int parameter_count() const;
  // Width of the input to layer l (0-based) / of its output.
  int in_width(int layer) const;
  int out_width(int layer) const;

  bool operator==(const MlpSpec&) const = default;
};

// Cached intermediates of one forward pass (columns = batch samples).
// Valid for backward only while the parameters are unchanged.
struct GradientTape {
  std::vector<Eigen::MatrixXd> activations;  // [0]=input, [l]=tanh output of hidden layer l
  std::uint64_t params_version = 0;
};

// Parameters live in one flat vector: per layer, the weight matrix
// (out x in, row-major) followed by the bias (out). The layout is part of
// the checkpoint contract.
class Mlp {
 public:
  explicit Mlp(MlpSpec spec);

  const MlpSpec& spec() const { return spec_; }
  Eigen::Index parameter_count() const { return params_.size(); }

  const Eigen::VectorXd& params() const { return params_; }
  // Mutable access invalidates existing tapes.
  Eigen::VectorXd& mutable_params() {
    ++version_;
    return params_;
  }
  std::uint64_t params_version() const { return version_; }

  // Scaled-uniform fan-in init; the output layer is shrunk by
  // final_layer_scale so initial heads sit near their neutral point.
  void init(math::RngStream& rng, double final_layer_scale = 0.01);

  // input: (input_width x batch). Returns (output_width x batch).
  Eigen::MatrixXd forward(const Eigen::Ref<const Eigen::MatrixXd>& input,
                          GradientTape* tape = nullptr) const;

  // Gradient of sum_batch <output_grad_col, output_col> w.r.t. the flat
  // parameter vector. Requires a tape from a forward pass on the current
  // parameters.
  Eigen::VectorXd backward(const GradientTape& tape,
                           const Eigen::Ref<const Eigen::MatrixXd>& output_grad) const;

  // Convenience single-sample forward.
  Eigen::VectorXd forward_vec(const Eigen::Ref<const Eigen::VectorXd>& input) const;

  // Views into the flat vector.
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
  weight(int layer) const;
  Eigen::Map<const Eigen::VectorXd> bias(int layer) const;

 private:
  int weight_offset(int layer) const;
  int bias_offset(int layer) const;

  MlpSpec spec_;
  Eigen::VectorXd params_;
  std::uint64_t version_ = 1;
  std::vector<int> offsets_;  // start of each layer's block
};

}  // namespace locorl::net
