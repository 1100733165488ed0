#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace muskat::fft {
namespace {

struct PlanPair {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
    ~PlanPair() {
        if (r2c) fftw_destroy_plan(r2c);
        if (c2r) fftw_destroy_plan(c2r);
    }
};

std::mutex plan_mutex;

const PlanPair& plans_for(int n) {
    static std::map<int, std::unique_ptr<PlanPair>> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto pair = std::make_unique<PlanPair>();
    std::vector<double> r(static_cast<std::size_t>(n));
    std::vector<fftw_complex> c(static_cast<std::size_t>(n / 2 + 1));
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    pair->r2c = fftw_plan_dft_r2c_1d(n, r.data(), c.data(), flags);
    pair->c2r = fftw_plan_dft_c2r_1d(n, c.data(), r.data(), flags | FFTW_DESTROY_INPUT);
    return *cache.emplace(n, std::move(pair)).first->second;
}

}  // namespace

void forward(std::span<const double> in, std::span<std::complex<double>> out) {
    const int n = static_cast<int>(in.size());
    const PlanPair& p = plans_for(n);
    std::vector<double> buf(in.begin(), in.end());
    fftw_execute_dft_r2c(p.r2c, buf.data(), reinterpret_cast<fftw_complex*>(out.data()));
}

void backward(std::span<const std::complex<double>> in, std::span<double> out) {
    const int n = static_cast<int>(out.size());
    const PlanPair& p = plans_for(n);
    std::vector<std::complex<double>> buf(in.begin(), in.end());
    fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(buf.data()), out.data());
}

}  // namespace muskat::fft
