#include <cstdlib>
#include <string>

#include "crex/kernels.hpp"

namespace crex::kern {
namespace {

bool host_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend initial_backend() {
  if (const char* env = std::getenv("CREX_KERNELS")) {
    const std::string name(env);
    if (name == "scalar") return Backend::scalar;
    if (name == "avx2" && host_has_avx2() && avx2_ops<double>()) return Backend::avx2;
    // unknown or unsupported value: ignore and autodetect
  }
  return host_has_avx2() && avx2_ops<double>() ? Backend::avx2 : Backend::scalar;
}

Backend& current() {
  static Backend b = initial_backend();
  return b;
}

}  // namespace

template <>
const Ops<double>& active<double>() {
  return current() == Backend::avx2 ? *avx2_ops<double>() : scalar_ops<double>();
}

template <>
const Ops<float>& active<float>() {
  return current() == Backend::avx2 ? *avx2_ops<float>() : scalar_ops<float>();
}

bool select_backend(Backend b) {
  if (b == Backend::avx2 && !(host_has_avx2() && avx2_ops<double>())) return false;
  current() = b;
  return true;
}

bool select_backend(const std::string& name) {
  if (name == "scalar") return select_backend(Backend::scalar);
  if (name == "avx2") return select_backend(Backend::avx2);
  return false;
}

Backend active_backend() { return current(); }

std::string backend_name() {
  return current() == Backend::avx2 ? "avx2" : "scalar";
}

}  // namespace crex::kern
