// Copyright 2026 The opgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <cstdlib>
#include <string>

#include "opgraph/kernels.hpp"

namespace opgraph::kernels {

namespace {

const KernelTable kScalar{Isa::scalar, &scalar::cdotc, &scalar::caxpy, &scalar::max_abs_diff};
#if defined(OPGRAPH_HAVE_AVX2)
const KernelTable kAvx2{Isa::avx2, &avx2::cdotc, &avx2::caxpy, &avx2::max_abs_diff};
#endif
#if defined(OPGRAPH_HAVE_NEON)
const KernelTable kNeon{Isa::neon, &neon::cdotc, &neon::caxpy, &neon::max_abs_diff};
#endif

const KernelTable *table_for(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return &kScalar;
        case Isa::avx2:
#if defined(OPGRAPH_HAVE_AVX2)
            return &kAvx2;
#else
            return nullptr;
#endif
        case Isa::neon:
#if defined(OPGRAPH_HAVE_NEON)
            return &kNeon;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

const KernelTable *detect_best() {
    if (const char *env = std::getenv("OPGRAPH_ISA")) {
        std::string want(env);
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
            if (want == isa_name(isa) && isa_supported(isa)) {
                return table_for(isa);
            }
        }
    }
    if (isa_supported(Isa::avx2)) {
        return table_for(Isa::avx2);
    }
    if (isa_supported(Isa::neon)) {
        return table_for(Isa::neon);
    }
    return &kScalar;
}

std::atomic<const KernelTable *> &current() {
    static std::atomic<const KernelTable *> table{detect_best()};
    return table;
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
        case Isa::neon:
            return "neon";
    }
    return "unknown";
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(OPGRAPH_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::neon:
#if defined(OPGRAPH_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

std::vector<KernelTable> available_tables() {
    std::vector<KernelTable> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (isa_supported(isa)) {
            out.push_back(*table_for(isa));
        }
    }
    return out;
}

const KernelTable &active() {
    return *current().load(std::memory_order_acquire);
}

bool select(Isa isa) {
    if (!isa_supported(isa)) {
        return false;
    }
    current().store(table_for(isa), std::memory_order_release);
    return true;
}

void select_best() {
    current().store(detect_best(), std::memory_order_release);
}

}  // namespace opgraph::kernels
