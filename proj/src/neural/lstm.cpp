#include "crex/lstm.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "crex/kernels.hpp"

namespace crex {
namespace {

const char* kGateNames[4] = {"i", "f", "o", "g"};

inline real sigmoid(real x) { return real(1) / (real(1) + std::exp(-x)); }

}  // namespace

LstmParams LstmParams::create(ParameterStore& store, const std::string& prefix,
                              std::size_t input_dim, std::size_t hidden,
                              real init_lo, real init_hi) {
  LstmParams p;
  p.input_dim = input_dim;
  p.hidden = hidden;
  for (int k = 0; k < 4; ++k) {
    const std::string g = kGateNames[k];
    p.wx[k] = &store.add(prefix + ".wx_" + g, hidden, input_dim, init_lo, init_hi);
    p.wh[k] = &store.add(prefix + ".wh_" + g, hidden, hidden, init_lo, init_hi);
    p.b[k] = &store.add(prefix + ".b_" + g, hidden, 1);
  }
  p.b[1]->value.fill(real(1));  // forget gate starts open
  return p;
}

LstmParams LstmParams::lookup(ParameterStore& store, const std::string& prefix,
                              std::size_t input_dim, std::size_t hidden) {
  LstmParams p;
  p.input_dim = input_dim;
  p.hidden = hidden;
  for (int k = 0; k < 4; ++k) {
    const std::string g = kGateNames[k];
    p.wx[k] = &store.get(prefix + ".wx_" + g);
    p.wh[k] = &store.get(prefix + ".wh_" + g);
    p.b[k] = &store.get(prefix + ".b_" + g);
  }
  return p;
}

void lstm_forward(const Tensor& inputs, const LstmParams& p, LstmCache& cache) {
  const std::size_t T = inputs.rows();
  const std::size_t H = p.hidden;
  if (T == 0) throw std::invalid_argument("lstm_forward: empty sequence");
  if (inputs.cols() != p.input_dim)
    throw std::invalid_argument("lstm_forward: input dim mismatch");

  cache.steps = T;
  if (cache.gates.rows() < T || cache.gates.cols() != 4 * H) {
    cache.gates = Tensor(T, 4 * H);
    cache.cell = Tensor(T, H);
    cache.tanh_c = Tensor(T, H);
    cache.hidden = Tensor(T, H);
  }

  for (std::size_t t = 0; t < T; ++t) {
    const real* x = inputs.row(t);
    const real* h_prev = t > 0 ? cache.hidden.row(t - 1) : nullptr;
    real* gates = cache.gates.row(t);
    for (int k = 0; k < 4; ++k) {
      real* a = gates + k * H;
      std::memcpy(a, p.b[k]->value.data(), H * sizeof(real));
      kern::gemv<real>(H, p.input_dim, p.wx[k]->value.data(), x, a);
      if (h_prev) kern::gemv<real>(H, H, p.wh[k]->value.data(), h_prev, a);
    }
    real* gi = gates;
    real* gf = gates + H;
    real* go = gates + 2 * H;
    real* gg = gates + 3 * H;
    for (std::size_t j = 0; j < H; ++j) {
      gi[j] = sigmoid(gi[j]);
      gf[j] = sigmoid(gf[j]);
      go[j] = sigmoid(go[j]);
      gg[j] = std::tanh(gg[j]);
    }
    real* c = cache.cell.row(t);
    real* tc = cache.tanh_c.row(t);
    real* h = cache.hidden.row(t);
    const real* c_prev = t > 0 ? cache.cell.row(t - 1) : nullptr;
    for (std::size_t j = 0; j < H; ++j) {
      c[j] = gi[j] * gg[j] + (c_prev ? gf[j] * c_prev[j] : real(0));
      tc[j] = std::tanh(c[j]);
      h[j] = go[j] * tc[j];
    }
  }
}

void lstm_backward(const Tensor& inputs, const LstmParams& p,
                   const LstmCache& cache, const real* d_last_hidden,
                   GradArena& arena, Tensor& d_inputs) {
  const std::size_t T = cache.steps;
  const std::size_t H = p.hidden;
  if (T == 0) throw std::invalid_argument("lstm_backward: empty cache");

  std::vector<real> dh(d_last_hidden, d_last_hidden + H);
  std::vector<real> dc(H, 0), da(4 * H), dh_prev(H);

  for (std::size_t t = T; t-- > 0;) {
    const real* gates = cache.gates.row(t);
    const real* gi = gates;
    const real* gf = gates + H;
    const real* go = gates + 2 * H;
    const real* gg = gates + 3 * H;
    const real* tc = cache.tanh_c.row(t);
    const real* c_prev = t > 0 ? cache.cell.row(t - 1) : nullptr;

    real* dai = da.data();
    real* daf = da.data() + H;
    real* dao = da.data() + 2 * H;
    real* dag = da.data() + 3 * H;
    for (std::size_t j = 0; j < H; ++j) {
      const real d_out = dh[j] * tc[j];                        // dL/do
      const real dct = dh[j] * go[j] * (real(1) - tc[j] * tc[j]) + dc[j];
      const real d_in = dct * gg[j];                           // dL/di
      const real d_gg = dct * gi[j];                           // dL/dg
      const real d_f = c_prev ? dct * c_prev[j] : real(0);     // dL/df
      dc[j] = dct * gf[j];                                     // flows to c_{t-1}
      dai[j] = d_in * gi[j] * (real(1) - gi[j]);
      daf[j] = d_f * gf[j] * (real(1) - gf[j]);
      dao[j] = d_out * go[j] * (real(1) - go[j]);
      dag[j] = d_gg * (real(1) - gg[j] * gg[j]);
    }

    const real* x = inputs.row(t);
    const real* h_prev = t > 0 ? cache.hidden.row(t - 1) : nullptr;
    real* dx = d_inputs.row(t);
    std::memset(dx, 0, p.input_dim * sizeof(real));
    if (h_prev) std::fill(dh_prev.begin(), dh_prev.end(), real(0));
    for (int k = 0; k < 4; ++k) {
      const real* dak = da.data() + k * H;
      kern::ger<real>(H, p.input_dim, real(1), dak, x, arena.of(*p.wx[k]).data());
      kern::axpy<real>(H, real(1), dak, arena.of(*p.b[k]).data());
      kern::gemv_t<real>(H, p.input_dim, p.wx[k]->value.data(), dak, dx);
      if (h_prev) {
        kern::ger<real>(H, H, real(1), dak, h_prev, arena.of(*p.wh[k]).data());
        kern::gemv_t<real>(H, H, p.wh[k]->value.data(), dak, dh_prev.data());
      }
    }
    if (h_prev) dh = dh_prev;
  }
}

}  // namespace crex
