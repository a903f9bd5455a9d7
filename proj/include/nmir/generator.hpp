#pragma once

#include <cstdint>
#include <vector>

#include "nmir/expert.hpp"
#include "nmir/optimizer.hpp"
#include "nmir/params.hpp"
#include "nmir/rng.hpp"
#include "nmir/scan.hpp"

namespace nmir {

// One cell of the scan in generation order: pixels row-major from the
// top-left, channels R,G,B within a pixel.
struct Token {
    int pixel = 0;    // row-major pixel index
    int channel = 0;  // 0=R, 1=G, 2=B
    int level = 0;    // intensity in [0, K)
};

std::vector<Token> tokenize(const BrainScan& scan, const ScanConfig& cfg);
BrainScan detokenize(const std::vector<Token>& tokens, const ScanConfig& cfg);

struct GeneratorHyper {
    int embed_dim = 16;
    int context_dim = 32;
    int context_hidden_dim = 64;
    int hidden_dim = 64;
    int batch_size = 32;
    double learning_rate = 1e-3;
    int epochs = 40;
    double heldout_fraction = 0.2;
    // Stop once the reported per-scan NLL drops below this; 0 disables.
    double stop_nll = 0.0;
    std::uint64_t seed = 1;
};

// Conditional autoregressive scan model: a sequence LSTM over the token
// stream with the context vector (an encoding of the previous scan and the
// current observation) concatenated to every step input. The start-of-scan
// marker is a dedicated K+1-th embedding row, never a valid output.
struct GeneratorModel {
    ScanConfig scan_config;
    int obs_dim = 0;
    GeneratorHyper hyper;
    ParamStore params;
};

// Fresh model. The output projection starts at zero, so an untrained model
// is exactly uniform over levels.
GeneratorModel generator_init(const ScanConfig& cfg, int obs_dim, const GeneratorHyper& hyper);

struct Context {
    std::vector<double> values;
};

// Deterministic encoding of (previous scan, current observation); scan
// levels are normalized by K-1.
Context context_encode(const GeneratorModel& model, const BrainScan& prev_scan,
                       const Observation& obs);

// Natural-log probability of `scan` under teacher forcing. Per-token terms
// are returned by the _tokens variant; their sum is the joint.
double log_likelihood(const GeneratorModel& model, const BrainScan& scan, const Context& ctx);
std::vector<double> log_likelihood_tokens(const GeneratorModel& model, const BrainScan& scan,
                                          const Context& ctx);

// Ancestral sampling in tokenize order. Greedy mode takes the argmax per
// token with ties to the lowest level and ignores the rng.
BrainScan sample_scan(const GeneratorModel& model, const Context& ctx, Rng& rng,
                      bool greedy = false);

struct EpochNll {
    int epoch = 0;
    double train_nll = 0.0;    // mean nats per scan
    double heldout_nll = 0.0;  // NaN when there is no held-out split
};

struct GeneratorTrainState {
    GeneratorModel model;
    Adam opt;
    long epochs_done = 0;
};

GeneratorTrainState generator_train_state(const Dataset& data, const GeneratorHyper& hyper);

// Minimizes the mean NLL of scan_next given context_encode(scan_t, obs_t)
// with mini-batch adaptive-moment descent. Continues from
// state.epochs_done (so save/resume reproduces an uninterrupted run
// bit-exactly) and appends one curve row per epoch, with row 0 being the
// pre-training evaluation. Deterministic given the hyper seed.
std::vector<EpochNll> train_generator(GeneratorTrainState& state, const Dataset& data);

// Mean per-scan NLL of the model over the given records (all when empty).
double generator_dataset_nll(const GeneratorModel& model, const Dataset& data,
                             const std::vector<long>& record_indices);

}  // namespace nmir
