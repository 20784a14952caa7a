#include "kawahara/fft.hpp"

#include <fftw3.h>

#include <map>
#include <stdexcept>

namespace kawahara {
namespace fft {

namespace {

struct PlanCache {
    std::map<std::pair<int, int>, fftw_plan> plans;  // (size, sign) -> plan
    // FFTW_ESTIMATE does not touch the buffers while planning, so a single
    // scratch array per size is enough; we re-plan in-place on user data via
    // the new-array execute interface instead, which requires alignment we
    // cannot guarantee, so we copy through an fftw-allocated buffer.
    std::map<int, fftw_complex*> buffers;

    ~PlanCache() {
        for (auto& [key, p] : plans) fftw_destroy_plan(p);
        for (auto& [n, b] : buffers) fftw_free(b);
    }

    fftw_complex* buffer(int n) {
        auto it = buffers.find(n);
        if (it != buffers.end()) return it->second;
        fftw_complex* b = fftw_alloc_complex(static_cast<std::size_t>(n));
        if (!b) throw std::bad_alloc();
        buffers.emplace(n, b);
        return b;
    }

    fftw_plan plan(int n, int sign) {
        auto key = std::make_pair(n, sign);
        auto it = plans.find(key);
        if (it != plans.end()) return it->second;
        fftw_complex* b = buffer(n);
        fftw_plan p = fftw_plan_dft_1d(n, b, b, sign, FFTW_ESTIMATE);
        if (!p) throw std::runtime_error("fftw_plan_dft_1d failed");
        plans.emplace(key, p);
        return p;
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void execute(std::vector<std::complex<double>>& a, int sign) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return;
    fftw_plan p = cache().plan(n, sign);
    fftw_complex* b = cache().buffer(n);
    for (int j = 0; j < n; ++j) {
        b[j][0] = a[static_cast<std::size_t>(j)].real();
        b[j][1] = a[static_cast<std::size_t>(j)].imag();
    }
    fftw_execute(p);
    for (int j = 0; j < n; ++j)
        a[static_cast<std::size_t>(j)] = {b[j][0], b[j][1]};
}

}  // namespace

void forward(std::vector<std::complex<double>>& a) { execute(a, FFTW_FORWARD); }
void backward(std::vector<std::complex<double>>& a) { execute(a, FFTW_BACKWARD); }

int good_size(int n) {
    auto smooth = [](int m) {
        for (int p : {2, 3, 5, 7})
            while (m % p == 0) m /= p;
        return m == 1;
    };
    while (!smooth(n)) ++n;
    return n;
}

}  // namespace fft
}  // namespace kawahara
