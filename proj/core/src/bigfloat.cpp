#include <qhahn/bigfloat.hpp>

#include <gmpxx.h>

#include <mutex>

namespace qhahn {

void ensure_bigfloat_precision() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        mpf_set_default_prec(static_cast<mp_bitcnt_t>(kBigFloatPrecisionBits));
    });
}

}  // namespace qhahn
