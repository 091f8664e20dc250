#include <cstdlib>
#include <string_view>

#include "srg/oracle/kernels.hpp"

namespace srg::kernels {

#if defined(SRG_KREIN_HAVE_AVX2)
const KernelTable* avx2_table();  // kernels_avx2.cpp
#endif

const KernelTable* avx2() {
#if defined(SRG_KREIN_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() {
    static const KernelTable& chosen = []() -> const KernelTable& {
        const char* env = std::getenv("SRG_KREIN_KERNELS");
        if (env != nullptr && std::string_view(env) == "scalar") return scalar();
        if (const KernelTable* t = avx2()) return *t;
        return scalar();
    }();
    return chosen;
}

}  // namespace srg::kernels
