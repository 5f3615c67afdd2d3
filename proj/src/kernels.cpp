#include "proud/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace proud::kernels {

const Kernels* avx2_table_impl();  // defined in kernels_avx2.cpp

const Kernels* avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    const Kernels* table = avx2_table_impl();
    if (table == nullptr) return nullptr;
#if defined(__GNUC__) || defined(__clang__)
    if (!__builtin_cpu_supports("avx2")) return nullptr;
#endif
    return table;
#else
    return nullptr;
#endif
}

const Kernels& active() {
    static const Kernels* selected = [] {
        const char* pref = std::getenv("PROUD_KERNELS");
        if (pref != nullptr && std::strcmp(pref, "scalar") == 0) return &scalar();
        const Kernels* simd = avx2();
        if (pref != nullptr && std::strcmp(pref, "avx2") == 0 && simd != nullptr) return simd;
        if (pref == nullptr || std::strcmp(pref, "auto") == 0) {
            if (simd != nullptr) return simd;
        }
        return &scalar();
    }();
    return *selected;
}

}  // namespace proud::kernels
