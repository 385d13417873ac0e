#include <new>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gamma3/verify.hpp"

namespace gamma3 {

// Parallel sweep kernel. Each d is an independent unit of work; results land
// in per-d slots and are assembled in ascending order, so the certificate is
// byte-identical to sweep_serial's regardless of scheduling.
Certificate sweep(int d_lo, int d_hi, const VariantConfig& variant, const ColoringRule& rule,
                  const SweepOptions& options) {
    detail::require_range(d_lo, d_hi);
    const int count = d_hi - d_lo + 1;

    std::vector<std::optional<VerificationReport>> slots(static_cast<std::size_t>(count));
    std::vector<std::string> oom(static_cast<std::size_t>(count));
    std::vector<std::string> failed(static_cast<std::size_t>(count));

#ifdef _OPENMP
    int threads = options.workers > 0 ? options.workers : omp_get_max_threads();
    if (threads > count) threads = count;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#else
    (void)options;
#endif
    for (int k = 0; k < count; ++k) {
        const std::size_t slot = static_cast<std::size_t>(k);
        try {
            slots[slot] = verify_construction(d_lo + k, variant, rule);
        } catch (const std::bad_alloc&) {
            oom[slot] = "out of memory while verifying d=" + std::to_string(d_lo + k);
        } catch (const std::exception& e) {
            failed[slot] = e.what();
        }
    }

    std::vector<VerificationReport> reports;
    reports.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const std::size_t slot = static_cast<std::size_t>(k);
        if (!oom[slot].empty()) throw ResourceError(oom[slot]);
        if (!failed[slot].empty()) throw std::runtime_error(failed[slot]);
        reports.push_back(std::move(*slots[slot]));
    }
    return detail::assemble_certificate(d_lo, d_hi, variant, rule, std::move(reports));
}

}  // namespace gamma3
