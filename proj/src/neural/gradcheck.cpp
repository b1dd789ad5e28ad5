#include "crex/gradcheck.hpp"

#include <algorithm>
#include <cmath>

namespace crex {

std::map<std::string, real> grad_check(
    const std::function<real(bool)>& loss_fn, ParameterStore& store,
    real epsilon) {
  store.zero_grads();
  loss_fn(true);

  std::map<std::string, real> worst;
  for (Parameter* p : store.sorted()) {
    real worst_err = 0;
    for (std::size_t i = 0; i < p->value.size(); ++i) {
      const real saved = p->value[i];
      p->value[i] = saved + epsilon;
      const real up = loss_fn(false);
      p->value[i] = saved - epsilon;
      const real down = loss_fn(false);
      p->value[i] = saved;

      const real numeric = (up - down) / (2 * epsilon);
      const real analytic = p->grad[i];
      const real denom =
          std::max({std::abs(analytic), std::abs(numeric), real(1e-4)});
      worst_err = std::max(worst_err, std::abs(analytic - numeric) / denom);
    }
    worst[p->name] = worst_err;
  }
  store.zero_grads();
  return worst;
}

real grad_check_max(const std::function<real(bool)>& loss_fn,
                    ParameterStore& store, real epsilon) {
  real m = 0;
  for (const auto& [name, err] : grad_check(loss_fn, store, epsilon))
    m = std::max(m, err);
  return m;
}

}  // namespace crex
