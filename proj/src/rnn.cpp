#include "rnndcor/rnn.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "rnndcor/csvio.hpp"
#include "rnndcor/errors.hpp"

namespace rnndcor::rnn {

namespace {

constexpr std::uint64_t kWeightStream = 0;
constexpr std::uint64_t kShuffleStream = 1;
constexpr std::uint64_t kDropoutStream = 2;

void apply_activation(Matrix &z, Activation act) {
    double *p = z.data();
    const std::size_t n = z.size();
    if (act == Activation::ReLU) {
        for (std::size_t i = 0; i < n; ++i) p[i] = p[i] > 0.0 ? p[i] : 0.0;
    } else {
        for (std::size_t i = 0; i < n; ++i) p[i] = std::tanh(p[i]);
    }
}

// Derivative from the stored activation value: ReLU' = 1_{a > 0} (so the
// subgradient at 0 is 0), tanh' = 1 - a^2.
double activation_grad(double a, Activation act) {
    return act == Activation::ReLU ? (a > 0.0 ? 1.0 : 0.0) : 1.0 - a * a;
}

// Scratch space reused across batches; reallocates only when the batch
// width changes (the final partial batch).
struct BatchWork {
    std::vector<Matrix> acts; // T of b x m
    Matrix masked_final;      // b x m
    Matrix pred;              // H x m
    Matrix grad_pred;         // H x m
    Matrix delta;             // b x m
    Matrix delta_prev;        // b x m
    Matrix rec_input;         // b x m

    void resize(std::size_t T, std::size_t b, std::size_t H, std::size_t m) {
        if (acts.size() != T || acts.empty() || acts[0].rows() != b ||
            acts[0].cols() != m) {
            acts.assign(T, Matrix(b, m));
            masked_final = Matrix(b, m);
            pred = Matrix(H, m);
            grad_pred = Matrix(H, m);
            delta = Matrix(b, m);
            delta_prev = Matrix(b, m);
            rec_input = Matrix(b, m);
        }
    }
};

// Forward over a batch, storing every hidden layer. dropout_mask (b x m,
// entries 0 or 1/(1-rate)) is applied to a_T before the dense head.
void batch_forward(const RnnModel &model, const Matrix &inputs,
                   const Matrix *dropout_mask, BatchWork &work) {
    const std::size_t T = model.config.window;
    const std::size_t b = model.config.hidden_units;
    const std::size_t H = model.config.horizon;
    const std::size_t m = inputs.cols();
    work.resize(T, b, H, m);

    for (std::size_t t = 0; t < T; ++t) {
        Matrix &a = work.acts[t];
        if (t == 0) {
            a.fill(0.0); // a_0 = 0
        } else {
            mul_into(model.w_rec, work.acts[t - 1], a);
        }
        const double *win = model.w_in.col(0);
        for (std::size_t j = 0; j < m; ++j) {
            double *aj = a.col(j);
            const double x = inputs(t, j);
            for (std::size_t i = 0; i < b; ++i) {
                aj[i] += win[i] * x + model.b_h[i];
            }
        }
        apply_activation(a, model.config.activation);
    }

    const Matrix *head_input = &work.acts[T - 1];
    if (dropout_mask) {
        const Matrix &last = work.acts[T - 1];
        work.masked_final = last;
        double *p = work.masked_final.data();
        const double *q = dropout_mask->data();
        for (std::size_t i = 0; i < work.masked_final.size(); ++i) p[i] *= q[i];
        head_input = &work.masked_final;
    }

    mul_into(model.w_out, *head_input, work.pred);
    for (std::size_t j = 0; j < m; ++j) {
        double *pj = work.pred.col(j);
        for (std::size_t k = 0; k < H; ++k) pj[k] += model.b_out[k];
    }
}

void zero_gradients(const RnnModel &model, Gradients &g) {
    const std::size_t b = model.config.hidden_units;
    const std::size_t H = model.config.horizon;
    if (g.w_in.rows() != b) {
        g.w_in = Matrix(b, 1);
        g.w_rec = Matrix(b, b);
        g.b_h.assign(b, 0.0);
        g.w_out = Matrix(H, b);
        g.b_out.assign(H, 0.0);
    } else {
        g.w_in.fill(0.0);
        g.w_rec.fill(0.0);
        std::fill(g.b_h.begin(), g.b_h.end(), 0.0);
        g.w_out.fill(0.0);
        std::fill(g.b_out.begin(), g.b_out.end(), 0.0);
    }
}

// Backward pass. Expects work to hold a completed batch_forward with the
// same dropout mask. Gradients are of the batch loss
//   L = mean over (sample, horizon) of squared error.
void batch_backward(const RnnModel &model, const Matrix &inputs,
                    const Matrix &targets, const Matrix *dropout_mask,
                    BatchWork &work, Gradients &grads) {
    const std::size_t T = model.config.window;
    const std::size_t b = model.config.hidden_units;
    const std::size_t H = model.config.horizon;
    const std::size_t m = inputs.cols();
    const Activation act = model.config.activation;
    zero_gradients(model, grads);

    const double scale = 2.0 / (static_cast<double>(m) * static_cast<double>(H));
    for (std::size_t j = 0; j < m; ++j) {
        const double *pj = work.pred.col(j);
        const double *yj = targets.col(j);
        double *gj = work.grad_pred.col(j);
        for (std::size_t k = 0; k < H; ++k) {
            gj[k] = scale * (pj[k] - yj[k]);
        }
    }

    const Matrix &head_input =
        dropout_mask ? work.masked_final : work.acts[T - 1];
    add_outer_products(work.grad_pred, head_input, grads.w_out);
    for (std::size_t j = 0; j < m; ++j) {
        const double *gj = work.grad_pred.col(j);
        for (std::size_t k = 0; k < H; ++k) grads.b_out[k] += gj[k];
    }

    // delta = dL/da_T, through the dropout mask when present.
    mul_transpose_a_into(model.w_out, work.grad_pred, work.delta);
    if (dropout_mask) {
        double *p = work.delta.data();
        const double *q = dropout_mask->data();
        for (std::size_t i = 0; i < work.delta.size(); ++i) p[i] *= q[i];
    }

    for (std::size_t t = T; t >= 1; --t) {
        Matrix &s = work.delta; // becomes dL/dz_t in place
        const Matrix &a = work.acts[t - 1];
        {
            double *sp = s.data();
            const double *ap = a.data();
            for (std::size_t i = 0; i < s.size(); ++i) {
                sp[i] *= activation_grad(ap[i], act);
            }
        }

        for (std::size_t j = 0; j < m; ++j) {
            const double *sj = s.col(j);
            const double x = inputs(t - 1, j);
            double *gin = grads.w_in.col(0);
            for (std::size_t i = 0; i < b; ++i) {
                gin[i] += sj[i] * x;
                grads.b_h[i] += sj[i];
            }
        }
        if (t >= 2) {
            add_outer_products(s, work.acts[t - 2], grads.w_rec);
            mul_transpose_a_into(model.w_rec, s, work.delta_prev);
            std::swap(work.delta, work.delta_prev);
        }
    }
}

double gradient_squared_norm(const Gradients &g) {
    double acc = 0.0;
    auto add = [&acc](const double *p, std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) acc += p[i] * p[i];
    };
    add(g.w_in.data(), g.w_in.size());
    add(g.w_rec.data(), g.w_rec.size());
    add(g.b_h.data(), g.b_h.size());
    add(g.w_out.data(), g.w_out.size());
    add(g.b_out.data(), g.b_out.size());
    return acc;
}

void scale_gradients(Gradients &g, double s) {
    auto mul = [s](double *p, std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) p[i] *= s;
    };
    mul(g.w_in.data(), g.w_in.size());
    mul(g.w_rec.data(), g.w_rec.size());
    mul(g.b_h.data(), g.b_h.size());
    mul(g.w_out.data(), g.w_out.size());
    mul(g.b_out.data(), g.b_out.size());
}

struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
};

class Optimizer_ {
  public:
    Optimizer_(const RnnConfig &config, std::size_t total_params)
        : config_(config) {
        if (config.optimizer == Optimizer::Adam) {
            state_.m.assign(total_params, 0.0);
            state_.v.assign(total_params, 0.0);
        }
    }

    void step(RnnModel &model, Gradients &grads) {
        if (config_.grad_clip > 0.0) {
            const double norm = std::sqrt(gradient_squared_norm(grads));
            if (norm > config_.grad_clip) {
                scale_gradients(grads, config_.grad_clip / norm);
            }
        }
        ++step_count_;
        offset_ = 0;
        update(model.w_in.data(), grads.w_in.data(), grads.w_in.size());
        update(model.w_rec.data(), grads.w_rec.data(), grads.w_rec.size());
        update(model.b_h.data(), grads.b_h.data(), grads.b_h.size());
        update(model.w_out.data(), grads.w_out.data(), grads.w_out.size());
        update(model.b_out.data(), grads.b_out.data(), grads.b_out.size());
    }

  private:
    void update(double *w, const double *g, std::size_t n) {
        const double lr = config_.learning_rate;
        if (config_.optimizer == Optimizer::Sgd) {
            for (std::size_t i = 0; i < n; ++i) w[i] -= lr * g[i];
            return;
        }
        const double b1 = config_.adam.beta1;
        const double b2 = config_.adam.beta2;
        const double eps = config_.adam.eps;
        const double c1 = 1.0 - std::pow(b1, static_cast<double>(step_count_));
        const double c2 = 1.0 - std::pow(b2, static_cast<double>(step_count_));
        double *m = state_.m.data() + offset_;
        double *v = state_.v.data() + offset_;
        for (std::size_t i = 0; i < n; ++i) {
            m[i] = b1 * m[i] + (1.0 - b1) * g[i];
            v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
            const double mhat = m[i] / c1;
            const double vhat = v[i] / c2;
            w[i] -= lr * mhat / (std::sqrt(vhat) + eps);
        }
        offset_ += n;
    }

    const RnnConfig &config_;
    AdamState state_;
    std::size_t step_count_ = 0;
    std::size_t offset_ = 0;
};

} // namespace

void RnnConfig::validate() const {
    if (window == 0 || hidden_units == 0 || horizon == 0 || batch_size == 0 ||
        epochs == 0) {
        throw ConfigError("window, hidden_units, horizon, batch_size and "
                          "epochs must all be positive");
    }
    if (!(learning_rate >= 0.0)) {
        throw ConfigError("learning_rate must be >= 0");
    }
    if (!(dropout_final >= 0.0 && dropout_final < 1.0)) {
        throw ConfigError("dropout_final must lie in [0, 1)");
    }
    if (grad_clip < 0.0) {
        throw ConfigError("grad_clip must be >= 0 (0 disables clipping)");
    }
}

void to_json(nlohmann::json &j, const RnnConfig &c) {
    j = {{"window", c.window},
         {"hidden_units", c.hidden_units},
         {"activation", c.activation == Activation::ReLU ? "relu" : "tanh"},
         {"horizon", c.horizon},
         {"learning_rate", c.learning_rate},
         {"batch_size", c.batch_size},
         {"epochs", c.epochs},
         {"dropout_final", c.dropout_final},
         {"seed", c.seed},
         {"optimizer", c.optimizer == Optimizer::Adam ? "adam" : "sgd"},
         {"adam_beta1", c.adam.beta1},
         {"adam_beta2", c.adam.beta2},
         {"adam_eps", c.adam.eps},
         {"grad_clip", c.grad_clip},
         {"recurrent_init",
          c.recurrent_init == RecurrentInit::Orthogonal ? "orthogonal"
                                                        : "kaiming"}};
}

void from_json(const nlohmann::json &j, RnnConfig &c) {
    c = RnnConfig{};
    c.window = j.value("window", c.window);
    c.hidden_units = j.value("hidden_units", c.hidden_units);
    const std::string act = j.value("activation", std::string("relu"));
    if (act == "relu") {
        c.activation = Activation::ReLU;
    } else if (act == "tanh") {
        c.activation = Activation::Tanh;
    } else {
        throw ConfigError("unknown activation '" + act + "'");
    }
    c.horizon = j.value("horizon", c.horizon);
    c.learning_rate = j.value("learning_rate", c.learning_rate);
    c.batch_size = j.value("batch_size", c.batch_size);
    c.epochs = j.value("epochs", c.epochs);
    c.dropout_final = j.value("dropout_final", c.dropout_final);
    c.seed = j.value("seed", c.seed);
    const std::string opt = j.value("optimizer", std::string("adam"));
    if (opt == "adam") {
        c.optimizer = Optimizer::Adam;
    } else if (opt == "sgd") {
        c.optimizer = Optimizer::Sgd;
    } else {
        throw ConfigError("unknown optimizer '" + opt + "'");
    }
    c.adam.beta1 = j.value("adam_beta1", c.adam.beta1);
    c.adam.beta2 = j.value("adam_beta2", c.adam.beta2);
    c.adam.eps = j.value("adam_eps", c.adam.eps);
    c.grad_clip = j.value("grad_clip", c.grad_clip);
    const std::string rec_init =
        j.value("recurrent_init", std::string("orthogonal"));
    if (rec_init == "orthogonal") {
        c.recurrent_init = RecurrentInit::Orthogonal;
    } else if (rec_init == "kaiming") {
        c.recurrent_init = RecurrentInit::Kaiming;
    } else {
        throw ConfigError("unknown recurrent_init '" + rec_init + "'");
    }
    c.validate();
}

namespace {

// In-place Householder QR; returns Q with the columns sign-fixed so the
// factorization is unique (diagonal of R made positive).
Matrix haar_orthogonal(std::size_t b, Rng &rng) {
    Matrix a(b, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a.data()[i] = rng.next_normal();
    }
    Matrix q(b, b);
    for (std::size_t i = 0; i < b; ++i) q(i, i) = 1.0;

    std::vector<double> v(b);
    for (std::size_t k = 0; k < b; ++k) {
        double norm = 0.0;
        for (std::size_t i = k; i < b; ++i) norm += a(i, k) * a(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        const double alpha = a(k, k) > 0.0 ? -norm : norm;
        double vnorm_sq = 0.0;
        for (std::size_t i = k; i < b; ++i) {
            v[i] = a(i, k) - (i == k ? alpha : 0.0);
            vnorm_sq += v[i] * v[i];
        }
        if (vnorm_sq == 0.0) continue;
        // apply H = I - 2 v v^T / (v^T v) from the left to A and to Q^T
        for (std::size_t j = k; j < b; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < b; ++i) dot += v[i] * a(i, j);
            const double s = 2.0 * dot / vnorm_sq;
            for (std::size_t i = k; i < b; ++i) a(i, j) -= s * v[i];
        }
        for (std::size_t j = 0; j < b; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < b; ++i) dot += v[i] * q(j, i);
            const double s = 2.0 * dot / vnorm_sq;
            for (std::size_t i = k; i < b; ++i) q(j, i) -= s * v[i];
        }
    }
    // Q columns carry the sign of R's diagonal.
    for (std::size_t j = 0; j < b; ++j) {
        if (a(j, j) < 0.0) {
            for (std::size_t i = 0; i < b; ++i) q(i, j) = -q(i, j);
        }
    }
    return q;
}

RnnModel init_model(const RnnConfig &config, bool orthogonal_recurrent) {
    config.validate();
    const std::size_t b = config.hidden_units;
    const std::size_t H = config.horizon;
    Rng rng(derive_seed(config.seed, kWeightStream));

    RnnModel model;
    model.config = config;
    model.w_in = Matrix(b, 1);
    model.w_rec = Matrix(b, b);
    model.b_h.assign(b, 0.0);
    model.w_out = Matrix(H, b);
    model.b_out.assign(H, 0.0);

    const double std_in = std::sqrt(2.0);  // fan_in = 1
    const double std_rec = std::sqrt(2.0 / static_cast<double>(b));
    const double std_out = std::sqrt(2.0 / static_cast<double>(b));
    for (std::size_t i = 0; i < model.w_in.size(); ++i) {
        model.w_in.data()[i] = rng.next_normal(0.0, std_in);
    }
    if (orthogonal_recurrent) {
        model.w_rec = haar_orthogonal(b, rng);
    } else {
        for (std::size_t i = 0; i < model.w_rec.size(); ++i) {
            model.w_rec.data()[i] = rng.next_normal(0.0, std_rec);
        }
    }
    for (std::size_t i = 0; i < model.w_out.size(); ++i) {
        model.w_out.data()[i] = rng.next_normal(0.0, std_out);
    }
    return model;
}

} // namespace

RnnModel init_kaiming(const RnnConfig &config) {
    return init_model(config, false);
}

RnnModel init_weights(const RnnConfig &config) {
    return init_model(config,
                      config.recurrent_init == RecurrentInit::Orthogonal);
}

ForwardResult forward(const RnnModel &model, std::span<const double> input) {
    const std::size_t T = model.config.window;
    if (input.size() != T) {
        throw ConfigError("input length " + std::to_string(input.size()) +
                          " does not match window " + std::to_string(T));
    }
    Matrix x(T, 1);
    for (std::size_t t = 0; t < T; ++t) x(t, 0) = input[t];

    BatchWork work;
    batch_forward(model, x, nullptr, work);

    ForwardResult out;
    out.activations = Matrix(model.config.hidden_units, T);
    for (std::size_t t = 0; t < T; ++t) {
        for (std::size_t i = 0; i < model.config.hidden_units; ++i) {
            out.activations(i, t) = work.acts[t](i, 0);
        }
    }
    if (!out.activations.all_finite()) {
        throw NumericalInstabilityError(
            "non-finite hidden state in forward pass");
    }
    out.prediction.resize(model.config.horizon);
    for (std::size_t k = 0; k < model.config.horizon; ++k) {
        out.prediction[k] = work.pred(k, 0);
        if (!std::isfinite(out.prediction[k])) {
            throw NumericalInstabilityError(
                "non-finite prediction in forward pass");
        }
    }
    return out;
}

Matrix predict(const RnnModel &model, const Matrix &inputs) {
    if (inputs.rows() != model.config.window) {
        throw ConfigError("input rows " + std::to_string(inputs.rows()) +
                          " do not match window " +
                          std::to_string(model.config.window));
    }
    BatchWork work;
    batch_forward(model, inputs, nullptr, work);
    if (!work.pred.all_finite()) {
        throw NumericalInstabilityError("non-finite prediction batch");
    }
    return work.pred;
}

double loss_mse(const Matrix &predictions, const Matrix &targets) {
    if (predictions.rows() != targets.rows() ||
        predictions.cols() != targets.cols()) {
        throw SampleCountMismatchError("MSE shapes differ: " +
                                       std::to_string(predictions.cols()) +
                                       " vs " + std::to_string(targets.cols()) +
                                       " columns");
    }
    const double *p = predictions.data();
    const double *y = targets.data();
    double acc = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const double d = p[i] - y[i];
        acc += d * d;
    }
    return acc / static_cast<double>(predictions.size());
}

Gradients bptt_gradients(const RnnModel &model, const Matrix &inputs,
                         const Matrix &targets, const Matrix *dropout_mask) {
    if (inputs.cols() != targets.cols()) {
        throw SampleCountMismatchError("batch X and Y sample counts differ");
    }
    BatchWork work;
    batch_forward(model, inputs, dropout_mask, work);
    Gradients grads;
    batch_backward(model, inputs, targets, dropout_mask, work, grads);
    if (!grads.w_in.all_finite() || !grads.w_rec.all_finite() ||
        !grads.w_out.all_finite()) {
        throw NumericalInstabilityError("non-finite gradient");
    }
    return grads;
}

std::vector<double> dropout_final(std::span<const double> activation,
                                  double rate, Rng &rng, bool train_mode) {
    if (!(rate >= 0.0 && rate < 1.0)) {
        throw ConfigError("dropout rate must lie in [0, 1)");
    }
    std::vector<double> out(activation.begin(), activation.end());
    if (!train_mode || rate == 0.0) return out;
    const double keep_scale = 1.0 / (1.0 - rate);
    for (double &v : out) {
        v = rng.next_uniform() < rate ? 0.0 : v * keep_scale;
    }
    return out;
}

TrainReport train(const RnnConfig &config,
                  const pipeline::SampleSet &train_set) {
    config.validate();
    if (train_set.n == 0) {
        throw InsufficientDataError("training sample set is empty");
    }
    if (train_set.T != config.window || train_set.H != config.horizon) {
        throw ConfigError("sample set windowing does not match the model "
                          "configuration");
    }
    const auto start = std::chrono::steady_clock::now();

    RnnModel model = init_weights(config);
    const std::size_t b = config.hidden_units;
    const std::size_t n = train_set.n;
    const std::size_t total_params = model.w_in.size() + model.w_rec.size() +
                                     model.b_h.size() + model.w_out.size() +
                                     model.b_out.size();

    Rng shuffle_rng(derive_seed(config.seed, kShuffleStream));
    Rng dropout_rng(derive_seed(config.seed, kDropoutStream));
    Optimizer_ optimizer(config, total_params);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    BatchWork work;
    Gradients grads;
    Matrix batch_x, batch_y, mask;
    const bool use_dropout = config.dropout_final > 0.0;
    const double keep_scale = 1.0 / (1.0 - config.dropout_final);

    TrainReport report;
    report.seed = config.seed;
    report.epoch_losses.reserve(config.epochs);

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        shuffle_rng.shuffle(order);
        double loss_sum = 0.0;
        std::size_t batch_index = 0;
        for (std::size_t begin = 0; begin < n; begin += config.batch_size) {
            const std::size_t m = std::min(config.batch_size, n - begin);
            if (batch_x.rows() != train_set.T || batch_x.cols() != m) {
                batch_x = Matrix(train_set.T, m);
                batch_y = Matrix(train_set.H, m);
            }
            for (std::size_t j = 0; j < m; ++j) {
                const std::size_t src = order[begin + j];
                const double *xs = train_set.X.col(src);
                std::copy(xs, xs + train_set.T, batch_x.col(j));
                const double *ys = train_set.Y.col(src);
                std::copy(ys, ys + train_set.H, batch_y.col(j));
            }

            const Matrix *mask_ptr = nullptr;
            if (use_dropout) {
                if (mask.rows() != b || mask.cols() != m) mask = Matrix(b, m);
                double *mp = mask.data();
                for (std::size_t i = 0; i < mask.size(); ++i) {
                    mp[i] = dropout_rng.next_uniform() < config.dropout_final
                                ? 0.0
                                : keep_scale;
                }
                mask_ptr = &mask;
            }

            batch_forward(model, batch_x, mask_ptr, work);
            const double batch_loss = loss_mse(work.pred, batch_y);
            if (!std::isfinite(batch_loss)) {
                throw TrainingDivergedError(
                    "training loss is not finite at epoch " +
                    std::to_string(epoch + 1) + ", batch " +
                    std::to_string(batch_index + 1));
            }
            loss_sum += batch_loss * static_cast<double>(m);

            batch_backward(model, batch_x, batch_y, mask_ptr, work, grads);
            optimizer.step(model, grads);
            ++batch_index;
        }
        report.epoch_losses.push_back(loss_sum / static_cast<double>(n));
    }

    report.model = std::move(model);
    report.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

ActivationTensor capture_activations(const RnnModel &model,
                                     const pipeline::SampleSet &samples,
                                     std::size_t epoch,
                                     const std::string &dataset_tag) {
    if (samples.T != model.config.window) {
        throw ConfigError("sample window " + std::to_string(samples.T) +
                          " does not match model window " +
                          std::to_string(model.config.window));
    }
    BatchWork work;
    batch_forward(model, samples.X, nullptr, work);

    ActivationTensor tensor;
    tensor.epoch = epoch;
    tensor.dataset_tag = dataset_tag;
    tensor.layers = std::move(work.acts);
    for (const Matrix &layer : tensor.layers) {
        if (!layer.all_finite()) {
            throw NumericalInstabilityError(
                "non-finite activation during capture");
        }
    }
    return tensor;
}

namespace {

nlohmann::json matrix_to_json(const Matrix &m) {
    return {{"rows", m.rows()},
            {"cols", m.cols()},
            {"data", std::vector<double>(m.data(), m.data() + m.size())}};
}

Matrix matrix_from_json(const nlohmann::json &j) {
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const auto data = j.at("data").get<std::vector<double>>();
    if (data.size() != rows * cols) {
        throw ParseError("matrix payload does not match declared shape");
    }
    Matrix m(rows, cols);
    std::copy(data.begin(), data.end(), m.data());
    return m;
}

} // namespace

nlohmann::json model_to_json(const RnnModel &model) {
    return {{"format", "rnndcor-model-v1"},
            {"config", model.config},
            {"w_in", matrix_to_json(model.w_in)},
            {"w_rec", matrix_to_json(model.w_rec)},
            {"b_h", model.b_h},
            {"w_out", matrix_to_json(model.w_out)},
            {"b_out", model.b_out}};
}

RnnModel model_from_json(const nlohmann::json &doc) {
    if (doc.value("format", std::string()) != "rnndcor-model-v1") {
        throw ParseError("not a model checkpoint document");
    }
    RnnModel model;
    model.config = doc.at("config").get<RnnConfig>();
    model.w_in = matrix_from_json(doc.at("w_in"));
    model.w_rec = matrix_from_json(doc.at("w_rec"));
    model.b_h = doc.at("b_h").get<std::vector<double>>();
    model.w_out = matrix_from_json(doc.at("w_out"));
    model.b_out = doc.at("b_out").get<std::vector<double>>();

    const std::size_t b = model.config.hidden_units;
    const std::size_t H = model.config.horizon;
    if (model.w_in.rows() != b || model.w_in.cols() != 1 ||
        model.w_rec.rows() != b || model.w_rec.cols() != b ||
        model.b_h.size() != b || model.w_out.rows() != H ||
        model.w_out.cols() != b || model.b_out.size() != H) {
        throw ParseError("checkpoint weight shapes do not match its config");
    }
    return model;
}

void save_model(const RnnModel &model, const std::string &path) {
    csvio::write_text_file(path, model_to_json(model).dump(2) + "\n");
}

RnnModel load_model(const std::string &path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(csvio::read_text_file(path));
    } catch (const nlohmann::json::exception &e) {
        throw ParseError("invalid checkpoint JSON: " + std::string(e.what()));
    }
    return model_from_json(doc);
}

} // namespace rnndcor::rnn
