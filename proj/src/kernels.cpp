#include "wte/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace wte::kernels {
namespace {

const Backend* select() {
  if (const char* env = std::getenv("WTE_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return &scalar_backend();
#if defined(__x86_64__) || defined(_M_X64)
    if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return &avx2_backend();
#endif
#if defined(__aarch64__)
    if (std::strcmp(env, "neon") == 0) return &neon_backend();
#endif
    return &scalar_backend();
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_supported()) return &avx2_backend();
#endif
#if defined(__aarch64__)
  return &neon_backend();
#endif
  return &scalar_backend();
}

}  // namespace

const Backend& active() {
  static const Backend* backend = select();
  return *backend;
}

}  // namespace wte::kernels
