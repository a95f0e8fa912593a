#ifndef RNNDCOR_RNN_HPP
#define RNNDCOR_RNN_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rnndcor/matrix.hpp"
#include "rnndcor/pipeline.hpp"
#include "rnndcor/rng.hpp"

namespace rnndcor::rnn {

enum class Activation { ReLU, Tanh };
enum class Optimizer { Sgd, Adam };

/// Initialization of the recurrent matrix. Kaiming draws every entry
/// from N(0, 2/b); with ReLU that makes the per-step recurrent gain
/// exactly 1, so hidden-state energy accumulates linearly over the
/// unroll and early inputs never fade. Orthogonal (a Haar-random
/// rotation, the common recurrent-layer default) keeps the post-ReLU
/// energy retention at 1/2 per step, so old inputs decay geometrically
/// and training stays well-scaled at the default learning rate.
enum class RecurrentInit { Kaiming, Orthogonal };

struct AdamParams {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct RnnConfig {
    std::size_t window = 20;      // T, unroll length
    std::size_t hidden_units = 64; // b
    Activation activation = Activation::ReLU;
    std::size_t horizon = 1; // H
    double learning_rate = 1e-4;
    std::size_t batch_size = 64;
    std::size_t epochs = 35;
    double dropout_final = 0.0; // inverted dropout on a_T, [0, 1)
    std::uint64_t seed = 0;
    Optimizer optimizer = Optimizer::Adam;
    AdamParams adam;
    double grad_clip = 0.0; // global-norm clip, 0 = off
    RecurrentInit recurrent_init = RecurrentInit::Orthogonal;

    void validate() const;
};

void to_json(nlohmann::json &j, const RnnConfig &c);
void from_json(const nlohmann::json &j, RnnConfig &c);

/// Elman cell plus dense head. a_0 = 0 for every sample (windows are
/// independent), a_t = f(w_in x_t + w_rec a_{t-1} + b_h),
/// prediction = w_out a_T + b_out.
struct RnnModel {
    RnnConfig config;
    Matrix w_in;               // b x 1
    Matrix w_rec;              // b x b
    std::vector<double> b_h;   // b
    Matrix w_out;              // H x b
    std::vector<double> b_out; // H
};

/// Kaiming-normal initialization: w_in and w_rec ~ N(0, 2/fan_in) with
/// fan_in 1 and b respectively, w_out ~ N(0, 2/b), biases zero. Weights
/// are drawn column-major from the model's weight stream
/// (derive_seed(config.seed, 0)), in the order w_in, w_rec, w_out.
RnnModel init_kaiming(const RnnConfig &config);

/// Initialization dispatcher used by train(): Kaiming everywhere, with
/// w_rec replaced by a Haar-orthogonal matrix (QR of a seeded Gaussian,
/// sign-fixed) when config.recurrent_init is Orthogonal. Draw order and
/// counts match init_kaiming, so the Kaiming branch is bit-identical to
/// it.
RnnModel init_weights(const RnnConfig &config);

struct ForwardResult {
    Matrix activations;             // b x T, column t-1 holds a_t
    std::vector<double> prediction; // H
};

/// Single-window forward pass with every intermediate checked finite.
ForwardResult forward(const RnnModel &model, std::span<const double> input);

/// Batch inference: X is T x n, result is H x n. Dropout is inactive.
Matrix predict(const RnnModel &model, const Matrix &inputs);

/// Mean over batch and horizon of the squared error.
double loss_mse(const Matrix &predictions, const Matrix &targets);

struct Gradients {
    Matrix w_in;
    Matrix w_rec;
    std::vector<double> b_h;
    Matrix w_out;
    std::vector<double> b_out;
};

/// Exact batch-MSE gradients, unrolled through all T steps. The ReLU
/// subgradient at 0 is 0. dropout_mask, when given, must be b x n with
/// entries 0 or 1/(1-rate) and is applied to a_T exactly as in training.
Gradients bptt_gradients(const RnnModel &model, const Matrix &inputs,
                         const Matrix &targets,
                         const Matrix *dropout_mask = nullptr);

/// Inverted dropout on a final-layer activation vector. Train mode zeroes
/// each unit with probability rate and scales survivors by 1/(1-rate);
/// inference mode is the identity.
std::vector<double> dropout_final(std::span<const double> activation,
                                  double rate, Rng &rng, bool train_mode);

struct TrainReport {
    std::vector<double> epoch_losses; // mean training loss per epoch
    RnnModel model;
    double wall_clock_seconds = 0.0;
    std::uint64_t seed = 0;
};

/// Mini-batch training. Sample order is reshuffled every epoch with the
/// shuffle stream (derive_seed(seed, 1)); dropout masks come from stream
/// 2. The last partial batch is used. Everything is deterministic given
/// (config, data).
TrainReport train(const RnnConfig &config,
                  const pipeline::SampleSet &train_set);

/// Hidden states of every unroll step stacked over samples: layers[t-1]
/// is the b x n matrix A_t.
struct ActivationTensor {
    std::vector<Matrix> layers;
    std::size_t epoch = 0;
    std::string dataset_tag; // "train" or "test"

    std::size_t steps() const noexcept { return layers.size(); }
    std::size_t samples() const noexcept {
        return layers.empty() ? 0 : layers.front().cols();
    }
};

/// Forward the whole sample set (dropout inactive) and keep every A_t.
ActivationTensor capture_activations(const RnnModel &model,
                                     const pipeline::SampleSet &samples,
                                     std::size_t epoch = 0,
                                     const std::string &dataset_tag = "test");

/// JSON checkpoint with config, seed, and all weight arrays; numbers are
/// serialized with shortest-round-trip formatting, so reload is
/// bit-exact.
void save_model(const RnnModel &model, const std::string &path);
RnnModel load_model(const std::string &path);

nlohmann::json model_to_json(const RnnModel &model);
RnnModel model_from_json(const nlohmann::json &doc);

} // namespace rnndcor::rnn

#endif
