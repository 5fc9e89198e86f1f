#include "locorl/net/mlp.hpp"

#include <cmath>
#include <stdexcept>

namespace locorl::net {

using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

int MlpSpec::parameter_count() const {
  int n = 0;
  for (int l = 0; l < layer_count(); ++l) n += (in_width(l) + 1) * out_width(l);
  return n;
}

int MlpSpec::in_width(int layer) const {
  if (layer < 0 || layer >= layer_count()) throw std::invalid_argument("MlpSpec: bad layer index");
  return layer == 0 ? input_width : hidden_widths[layer - 1];
}

int MlpSpec::out_width(int layer) const {
  if (layer < 0 || layer >= layer_count()) throw std::invalid_argument("MlpSpec: bad layer index");
  return layer == layer_count() - 1 ? output_width : hidden_widths[layer];
}

Mlp::Mlp(MlpSpec spec) : spec_(std::move(spec)) {
  if (spec_.input_width < 1 || spec_.output_width < 1)
    throw std::invalid_argument("MlpSpec: widths must be >= 1");
  for (int w : spec_.hidden_widths)
    if (w < 1) throw std::invalid_argument("MlpSpec: widths must be >= 1");

  offsets_.resize(spec_.layer_count());
  int off = 0;
  for (int l = 0; l < spec_.layer_count(); ++l) {
    offsets_[l] = off;
    off += (spec_.in_width(l) + 1) * spec_.out_width(l);
  }
  params_ = Eigen::VectorXd::Zero(off);
}

int Mlp::weight_offset(int layer) const { return offsets_[layer]; }

int Mlp::bias_offset(int layer) const {
  return offsets_[layer] + spec_.in_width(layer) * spec_.out_width(layer);
}

Eigen::Map<const RowMajorMatrix> Mlp::weight(int layer) const {
  return {params_.data() + weight_offset(layer), spec_.out_width(layer), spec_.in_width(layer)};
}

Eigen::Map<const Eigen::VectorXd> Mlp::bias(int layer) const {
  return {params_.data() + bias_offset(layer), spec_.out_width(layer)};
}

void Mlp::init(math::RngStream& rng, double final_layer_scale) {
  for (int l = 0; l < spec_.layer_count(); ++l) {
    const int fan_in = spec_.in_width(l);
    const int fan_out = spec_.out_width(l);
    double s = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    if (l == spec_.layer_count() - 1) s *= final_layer_scale;
    double* w = params_.data() + weight_offset(l);
    for (int i = 0; i < fan_in * fan_out; ++i) w[i] = rng.uniform(-s, s);
    double* b = params_.data() + bias_offset(l);
    for (int i = 0; i < fan_out; ++i) b[i] = 0.0;
  }
  ++version_;
}

Eigen::MatrixXd Mlp::forward(const Eigen::Ref<const Eigen::MatrixXd>& input,
                             GradientTape* tape) const {
  if (input.rows() != spec_.input_width)
    throw std::invalid_argument("Mlp::forward: input width mismatch");

  if (tape) {
    tape->activations.clear();
    tape->activations.reserve(spec_.layer_count());
    tape->activations.push_back(input);
    tape->params_version = version_;
  }

  Eigen::MatrixXd a = input;
  for (int l = 0; l < spec_.layer_count(); ++l) {
    Eigen::MatrixXd z = (weight(l) * a).colwise() + bias(l);
    if (l < spec_.layer_count() - 1) {
      a = z.array().tanh().matrix();
      if (tape) tape->activations.push_back(a);
    } else {
      a = std::move(z);
    }
  }
  return a;
}

Eigen::VectorXd Mlp::forward_vec(const Eigen::Ref<const Eigen::VectorXd>& input) const {
  return forward(input);
}

Eigen::VectorXd Mlp::backward(const GradientTape& tape,
                              const Eigen::Ref<const Eigen::MatrixXd>& output_grad) const {
  if (tape.params_version != version_)
    throw std::logic_error("Mlp::backward: tape is stale (parameters changed since forward)");
  if (static_cast<int>(tape.activations.size()) != spec_.layer_count())
    throw std::logic_error("Mlp::backward: tape does not match this spec");
  if (output_grad.rows() != spec_.output_width ||
      output_grad.cols() != tape.activations[0].cols())
    throw std::invalid_argument("Mlp::backward: output_grad shape mismatch");

  Eigen::VectorXd grad = Eigen::VectorXd::Zero(params_.size());
  Eigen::MatrixXd delta = output_grad;
  for (int l = spec_.layer_count() - 1; l >= 0; --l) {
    const auto& a_in = tape.activations[l];
    Eigen::Map<RowMajorMatrix> dW(grad.data() + weight_offset(l), spec_.out_width(l),
                                  spec_.in_width(l));
    Eigen::Map<Eigen::VectorXd> db(grad.data() + bias_offset(l), spec_.out_width(l));
    dW = delta * a_in.transpose();
    db = delta.rowwise().sum();
    if (l > 0) {
      // tanh'(z) = 1 - a^2 with a the stored activation of the layer below.
      delta = (weight(l).transpose() * delta).cwiseProduct(
          (1.0 - tape.activations[l].array().square()).matrix());
    }
  }
  return grad;
}

}  // namespace locorl::net
