#include "fft.hpp"

#include <qsmear/errors.hpp>

#include <fftw3.h>

#include <mutex>

namespace qsmear::detail {

namespace {

// FFTW plan creation is not thread-safe; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

void execute_many(cdouble* data, int n, int howmany, int stride, int dist, int sign) {
    auto* raw = reinterpret_cast<fftw_complex*>(data);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_many_dft(1, &n, howmany, raw, nullptr, stride, dist,
                                  raw, nullptr, stride, dist,
                                  sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                  FFTW_ESTIMATE);
    }
    if (plan == nullptr)
        throw Error("FFTW plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

}  // namespace

void dft(std::vector<cdouble>& data, int sign) {
    execute_many(data.data(), static_cast<int>(data.size()), 1, 1, 1, sign);
}

void dft_axis(std::vector<cdouble>& data, int n0, int n1, int axis, int sign) {
    if (static_cast<int>(data.size()) != n0 * n1)
        throw Error("dft_axis: data size does not match n0 * n1");
    if (axis == 0)
        execute_many(data.data(), n0, n1, n1, 1, sign);
    else
        execute_many(data.data(), n1, n0, 1, n1, sign);
}

void dft_2d(std::vector<cdouble>& data, int n0, int n1, int sign) {
    if (static_cast<int>(data.size()) != n0 * n1)
        throw Error("dft_2d: data size does not match n0 * n1");
    auto* raw = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_2d(n0, n1, raw, raw, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                FFTW_ESTIMATE);
    }
    if (plan == nullptr)
        throw Error("FFTW plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

}  // namespace qsmear::detail
