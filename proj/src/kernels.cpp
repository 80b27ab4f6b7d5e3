// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#include "enclose/kernels.hpp"

#include <cstdlib>

namespace enclose::kern {

std::vector<const KernelSet *> available_kernels() {
  std::vector<const KernelSet *> sets;
  sets.push_back(&scalar_kernels());
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) sets.push_back(&avx2_kernels());
#endif
#if defined(__aarch64__)
  sets.push_back(&neon_kernels());
#endif
  return sets;
}

const KernelSet *kernels_by_name(std::string_view name) {
  for (const KernelSet *s : available_kernels())
    if (name == s->name) return s;
  return nullptr;
}

const KernelSet &active_kernels() {
  static const KernelSet *active = [] {
    if (const char *env = std::getenv("ENCLOSE_KERNEL")) {
      if (const KernelSet *s = kernels_by_name(env)) return s;
    }
    auto sets = available_kernels();
    return sets.back();  // widest supported variant
  }();
  return *active;
}

}  // namespace enclose::kern
