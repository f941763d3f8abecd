#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "adhdx/core/matrix.hpp"
#include "adhdx/core/rng.hpp"
#include "adhdx/core/util.hpp"

namespace adhdx {

enum class Act { Relu, Sigmoid, Tanh, Softmax, Linear };
enum class LayerKind { Dense, SimpleRnn, Lstm, Gru, Dropout, Activation };

std::string act_name(Act a);
Act act_from_name(const std::string& s);
std::string layer_kind_name(LayerKind k);
LayerKind layer_kind_from_name(const std::string& s);

struct LayerSpec {
  LayerKind kind = LayerKind::Dense;
  int units = 0;                    // dense / recurrent width
  Act activation = Act::Linear;     // dense / activation layers
  double rate = 0.0;                // dropout fraction in [0, 1)
  bool return_sequences = false;    // recurrent layers

  static LayerSpec dense(int units, Act act) { return {LayerKind::Dense, units, act, 0.0, false}; }
  static LayerSpec simple_rnn(int units, bool seq = false) {
    return {LayerKind::SimpleRnn, units, Act::Tanh, 0.0, seq};
  }
  static LayerSpec lstm(int units, bool seq = false) {
    return {LayerKind::Lstm, units, Act::Tanh, 0.0, seq};
  }
  static LayerSpec gru(int units, bool seq = false) {
    return {LayerKind::Gru, units, Act::Tanh, 0.0, seq};
  }
  static LayerSpec dropout(double rate) { return {LayerKind::Dropout, 0, Act::Linear, rate, false}; }
  static LayerSpec activation(Act act) { return {LayerKind::Activation, 0, act, 0.0, false}; }

  json to_json() const;
  static LayerSpec from_json(const json& j);
};

// Batches move through the stack as length-T sequences of [batch x dim]
// matrices. Tabular inputs run at T=1; recurrent cells backpropagate
// through however many steps they are given.
using Seq = std::vector<Mat>;

struct ParamTensor {
  std::string name;
  Mat value;
  Mat grad;
};

// Per-layer cache written by a training-mode forward pass and consumed by
// backward. Kept outside the layers so inference is const and thread-safe.
struct LayerState {
  virtual ~LayerState() = default;
};
using StatePtr = std::unique_ptr<LayerState>;

class Layer {
 public:
  virtual ~Layer() = default;
  virtual LayerSpec spec() const = 0;
  virtual int out_dim() const = 0;
  // `state` may be null (pure inference); rng is consulted only by dropout
  // in training mode.
  virtual Seq forward(const Seq& in, bool training, Rng* rng, StatePtr* state) const = 0;
  // Accumulates parameter gradients; returns gradient w.r.t. the input.
  virtual Seq backward(const Seq& dout, const LayerState& state) = 0;
  virtual std::vector<ParamTensor*> params() { return {}; }
};

// Row-stable softmax (max-shift).
void softmax_row(const double* z, double* out, int n);
Vec softmax(const Vec& z);

enum class LossKind { BinaryCe, CategoricalCe };

std::string loss_name(LossKind k);
LossKind loss_from_name(const std::string& s);

struct LossGrad {
  double loss = 0.0;
  Mat dprobs;
};

// Mean cross-entropy over the batch with probabilities clipped to
// [1e-12, 1-1e-12] before the log; dprobs is the gradient w.r.t. the
// (clipped) probabilities.
LossGrad cross_entropy(const Mat& probs, const Mat& targets, LossKind kind);

// Fixed sequential stack. Parameters are owned by the layers; caches live in
// the state vector handed back by forward, so concurrent predict() calls on
// a shared trained network are safe.
class Network {
 public:
  Network() = default;
  Network(const std::vector<LayerSpec>& specs, int input_dim, std::uint64_t init_seed);

  Mat forward(const Mat& batch, bool training, Rng* rng,
              std::vector<StatePtr>* states) const;
  Mat predict(const Mat& batch) const;
  void backward(const Mat& dout, const std::vector<StatePtr>& states);
  void zero_grads();

  std::vector<ParamTensor*> params();
  std::vector<const ParamTensor*> params() const;
  std::int64_t param_count() const;

  int input_dim() const { return input_dim_; }
  int output_dim() const;
  const std::vector<LayerSpec>& specs() const { return specs_; }

  json to_json() const;
  static Network from_json(const json& j);

 private:
  void build(std::uint64_t init_seed, bool init_params);

  std::vector<LayerSpec> specs_;
  std::vector<std::unique_ptr<Layer>> layers_;
  int input_dim_ = 0;
};

}  // namespace adhdx
