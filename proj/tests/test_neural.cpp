#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "crex/adam.hpp"
#include "crex/gradcheck.hpp"
#include "crex/kernels.hpp"
#include "crex/lstm.hpp"
#include "crex/ops.hpp"
#include "crex/tensor.hpp"

using namespace crex;

namespace {
double sigmoid_ref(double x) { return 1.0 / (1.0 + std::exp(-x)); }
}

TEST_CASE("embed looks up rows verbatim") {
  Tensor table(3, 3);
  for (std::size_t i = 0; i < 3; ++i) table.at(i, i) = 1;  // identity
  const std::int32_t idx[1] = {2};
  Tensor out(1, 3);
  embed(std::span<const std::int32_t>(idx, 1), table, out);
  CHECK(out.at(0, 0) == 0);
  CHECK(out.at(0, 1) == 0);
  CHECK(out.at(0, 2) == 1);

  Rng rng(7);
  Tensor t2(5, 4);
  for (auto& v : t2.flat()) v = rng.uniform(-1, 1);
  const std::int32_t idx2[2] = {0, 3};
  Tensor out2(2, 4);
  embed(std::span<const std::int32_t>(idx2, 2), t2, out2);
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(out2.at(0, j) == t2.at(0, j));
    CHECK(out2.at(1, j) == t2.at(3, j));
  }

  const std::int32_t bad[1] = {5};
  CHECK_THROWS(embed(std::span<const std::int32_t>(bad, 1), t2, out));
}

TEST_CASE("embed backward sums repeated rows and is linear over batches") {
  Tensor d_table(4, 2);
  Tensor d_out(2, 2);
  d_out.at(0, 0) = 1;
  d_out.at(0, 1) = 2;
  d_out.at(1, 0) = 10;
  d_out.at(1, 1) = 20;
  const std::int32_t idx[2] = {1, 1};
  embed_backward(std::span<const std::int32_t>(idx, 2), d_out, d_table);
  CHECK(d_table.at(1, 0) == 11);
  CHECK(d_table.at(1, 1) == 22);
  CHECK(d_table.at(0, 0) == 0);

  // concatenated batch == sum of per-batch gradients
  Rng rng(13);
  std::vector<std::int32_t> all = {0, 2, 3, 2, 1, 0};
  Tensor ups(6, 2);
  for (auto& v : ups.flat()) v = rng.uniform(-1, 1);
  Tensor whole(4, 2), parts(4, 2);
  embed_backward(std::span<const std::int32_t>(all.data(), 6), ups, whole);
  for (std::size_t start : {0u, 3u}) {
    Tensor chunk(3, 2);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 2; ++c) chunk.at(r, c) = ups.at(start + r, c);
    embed_backward(std::span<const std::int32_t>(all.data() + start, 3), chunk, parts);
  }
  for (std::size_t i = 0; i < whole.size(); ++i)
    CHECK(whole[i] == doctest::Approx(parts[i]).epsilon(1e-15));
}

TEST_CASE("dense_softmax values and stability") {
  Tensor W(2, 2), b(2);
  real h[2] = {0, 0};
  real probs[2];
  dense_softmax(W, b, h, probs);
  CHECK(probs[0] == doctest::Approx(0.5));
  CHECK(probs[1] == doctest::Approx(0.5));

  const real logits_big[2] = {1000, 0};
  softmax(2, logits_big, probs);
  CHECK(probs[0] == doctest::Approx(1.0));
  CHECK(probs[1] >= 0);
  CHECK(std::isfinite(probs[1]));

  const real logits[3] = {1, 2, 3};
  real p3[3];
  softmax(3, logits, p3);
  CHECK(p3[0] == doctest::Approx(0.09003).epsilon(1e-4));
  CHECK(p3[1] == doctest::Approx(0.24473).epsilon(1e-4));
  CHECK(p3[2] == doctest::Approx(0.66524).epsilon(1e-4));
}

TEST_CASE("softmax is a strict distribution") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.below(20);
    std::vector<real> logits(n), p(n);
    for (auto& v : logits) v = rng.uniform(-30, 30);
    softmax(n, logits.data(), p.data());
    real s = 0;
    for (real v : p) {
      CHECK(v > 0);
      s += v;
    }
    CHECK(std::abs(s - real(1)) <= real(1e-12));
  }
}

TEST_CASE("cross entropy with probability floor") {
  const real p1[2] = {0, 1};
  CHECK(cross_entropy(std::span<const real>(p1, 2), 1) == 0);
  const real p2[2] = {0.5, 0.5};
  CHECK(cross_entropy(std::span<const real>(p2, 2), 0) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  const real p3[2] = {0, 1};
  CHECK(cross_entropy(std::span<const real>(p3, 2), 0) ==
        doctest::Approx(-std::log(1e-12)));
  CHECK_THROWS(cross_entropy(std::span<const real>(p3, 2), 2));
}

TEST_CASE("dropout modes") {
  Rng rng(5);
  std::vector<std::uint8_t> mask;
  std::vector<real> x(8, 2.0);
  auto orig = x;

  dropout(std::span<real>(x), real(0.5), Mode::infer, rng, mask);
  CHECK(x == orig);

  dropout(std::span<real>(x), real(0), Mode::train, rng, mask);
  CHECK(x == orig);

  // statistical behaviour at rate 0.5
  const std::size_t n = 100000;
  std::vector<real> big(n, 1.0);
  dropout(std::span<real>(big), real(0.5), Mode::train, rng, mask);
  std::size_t kept = 0;
  double mean = 0;
  for (std::size_t i = 0; i < n; ++i) {
    kept += mask[i];
    mean += big[i];
  }
  mean /= n;
  CHECK(std::abs(double(kept) / n - 0.5) < 0.01);
  CHECK(std::abs(mean - 1.0) < 0.02);

  // backward respects the mask
  std::vector<real> d(n, 1.0);
  dropout_backward(std::span<real>(d), real(0.5), mask);
  for (std::size_t i = 0; i < 100; ++i)
    CHECK(d[i] == (mask[i] ? real(2.0) : real(0)));
}

TEST_CASE("lstm zero parameters give zero output") {
  ParameterStore store(1);
  LstmParams p = LstmParams::create(store, "lstm", 3, 4, 0, 0);
  p.b[1]->value.zero();  // drop the forget-bias-1 default for this case
  Tensor inputs(5, 3);
  inputs.fill(real(0.7));
  LstmCache cache;
  lstm_forward(inputs, p, cache);
  for (std::size_t j = 0; j < 4; ++j) CHECK(cache.last_hidden()[j] == 0);

  Tensor empty(0, 3);
  CHECK_THROWS(lstm_forward(empty, p, cache));
}

TEST_CASE("lstm matches a hand-evaluated scalar recurrence") {
  ParameterStore store(1);
  LstmParams p = LstmParams::create(store, "lstm", 1, 1, 0, 0);
  // gate order i, f, o, g
  p.wx[0]->value[0] = 0.5;
  p.wx[1]->value[0] = -0.3;
  p.wx[2]->value[0] = 0.8;
  p.wx[3]->value[0] = 1.2;
  p.wh[0]->value[0] = 0.4;
  p.wh[1]->value[0] = 0.2;
  p.wh[2]->value[0] = -0.5;
  p.wh[3]->value[0] = 0.9;
  p.b[0]->value[0] = 0.1;
  p.b[1]->value[0] = 1.0;
  p.b[2]->value[0] = -0.2;
  p.b[3]->value[0] = 0.3;

  Tensor inputs(2, 1);
  inputs.at(0, 0) = 0.7;
  inputs.at(1, 0) = -0.4;
  LstmCache cache;
  lstm_forward(inputs, p, cache);

  // step 1
  double i1 = sigmoid_ref(0.5 * 0.7 + 0.1);
  double o1 = sigmoid_ref(0.8 * 0.7 - 0.2);
  double g1 = std::tanh(1.2 * 0.7 + 0.3);
  double c1 = i1 * g1;
  double h1 = o1 * std::tanh(c1);
  // step 2
  double i2 = sigmoid_ref(0.5 * -0.4 + 0.4 * h1 + 0.1);
  double f2 = sigmoid_ref(-0.3 * -0.4 + 0.2 * h1 + 1.0);
  double o2 = sigmoid_ref(0.8 * -0.4 - 0.5 * h1 - 0.2);
  double g2 = std::tanh(1.2 * -0.4 + 0.9 * h1 + 0.3);
  double c2 = f2 * c1 + i2 * g2;
  double h2 = o2 * std::tanh(c2);

  CHECK(cache.hidden.at(0, 0) == doctest::Approx(h1).epsilon(1e-14));
  CHECK(cache.last_hidden()[0] == doctest::Approx(h2).epsilon(1e-14));
}

TEST_CASE("lstm gradients pass finite differences") {
  for (std::uint64_t seed : {11u, 22u, 33u}) {
    ParameterStore store(seed);
    const std::size_t d_in = 3, H = 4, T = 5;
    LstmParams p = LstmParams::create(store, "lstm", d_in, H, -0.4, 0.4);
    Parameter& x = store.add("x", T, d_in, -1, 1);
    Rng rng(seed * 31);
    std::vector<real> w(H);
    for (auto& v : w) v = rng.uniform(-1, 1);

    LstmCache cache;
    Tensor d_inputs(T, d_in);
    auto loss_fn = [&](bool accumulate) -> real {
      lstm_forward(x.value, p, cache);
      real loss = 0;
      for (std::size_t j = 0; j < H; ++j) loss += w[j] * cache.last_hidden()[j];
      if (accumulate) {
        GradArena arena(store);
        lstm_backward(x.value, p, cache, w.data(), arena, d_inputs);
        for (std::size_t i = 0; i < d_inputs.size(); ++i)
          arena.of(x)[i] += d_inputs[i];
        arena.add_to(store);
      }
      return loss;
    };
    CHECK(grad_check_max(loss_fn, store) < tol::grad_check);
  }
}

TEST_CASE("adam first step closed form, freezing and zero grads") {
  ParameterStore store(3);
  Parameter& p = store.add("w", 1, 1);
  p.value[0] = 0.25;
  AdamState adam(store);

  p.grad[0] = 0.5;
  adam.step(store);
  const double expected_delta = -0.001 * 0.5 / (std::sqrt(0.25) + 1e-8);
  CHECK(p.value[0] == doctest::Approx(0.25 + expected_delta).epsilon(1e-12));
  CHECK(std::abs(0.25 - p.value[0]) > 0.000999);
  CHECK(std::abs(0.25 - p.value[0]) <= 0.001);
  CHECK(p.grad[0] == 0);  // zeroed after the step

  // zero gradient: parameters unchanged
  ParameterStore s2(4);
  Parameter& q = s2.add("w", 2, 2, -1, 1);
  const Tensor before = q.value;
  AdamState adam2(s2);
  adam2.step(s2);
  for (std::size_t i = 0; i < q.value.size(); ++i) CHECK(q.value[i] == before[i]);

  // frozen parameter with nonzero gradient: unchanged
  ParameterStore s3(5);
  Parameter& r = s3.add("w", 2, 1, -1, 1);
  r.trainable = false;
  const Tensor frozen = r.value;
  AdamState adam3(s3);
  r.grad[0] = 1.0;
  r.grad[1] = -2.0;
  adam3.step(s3);
  for (std::size_t i = 0; i < r.value.size(); ++i) CHECK(r.value[i] == frozen[i]);
}

TEST_CASE("grad_check on a quadratic and a corrupted gradient") {
  ParameterStore store(9);
  Parameter& p = store.add("theta", 3, 1, -1, 1);
  auto quad = [&](bool accumulate) -> real {
    real loss = 0;
    for (std::size_t i = 0; i < 3; ++i) loss += real(0.5) * p.value[i] * p.value[i];
    if (accumulate)
      for (std::size_t i = 0; i < 3; ++i) p.grad[i] += p.value[i];
    return loss;
  };
  CHECK(grad_check_max(quad, store) < 1e-9);

  auto corrupted = [&](bool accumulate) -> real {
    real loss = quad(false);
    if (accumulate)
      for (std::size_t i = 0; i < 3; ++i) p.grad[i] += p.value[i] * real(1.5) + real(0.2);
    return loss;
  };
  CHECK(grad_check_max(corrupted, store) > 1e-2);
}

TEST_CASE("parameter store registers names once and hashes values") {
  ParameterStore store(1);
  store.add("emb.token", 4, 2, -0.05, 0.05);
  CHECK_THROWS(store.add("emb.token", 4, 2));
  CHECK(store.has("emb.token"));
  CHECK_FALSE(store.has("emb.pos"));
  CHECK_THROWS(store.get("emb.pos"));

  const auto h1 = store.value_hash();
  store.get("emb.token").value[0] += 1;
  CHECK(store.value_hash() != h1);

  // same seed, different registration order: identical init per name
  ParameterStore a(42), b(42);
  a.add("first", 2, 2, -1, 1);
  a.add("second", 2, 2, -1, 1);
  b.add("second", 2, 2, -1, 1);
  b.add("first", 2, 2, -1, 1);
  CHECK(a.value_hash() == b.value_hash());
}
