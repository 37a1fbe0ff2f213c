// Copyright 2026 The swkernel Authors
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

#ifndef SWKERNEL_MONTECARLO_HPP
#define SWKERNEL_MONTECARLO_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <thread>
#include <vector>

#include "swkernel/linalg.hpp"

namespace swk {

// Samples are reduced in fixed-size blocks which are then merged in block
// order. The block layout depends only on the sample count, so the result is
// bit-identical for any number of worker threads.
inline constexpr std::size_t kMonteCarloBlock = 1024;

/// Running mean/variance (Welford), mergeable.
struct ScalarStats {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        count += 1.0;
        const double d = x - mean;
        mean += d / count;
        m2 += d * (x - mean);
    }

    void merge(const ScalarStats& o) {
        if (o.count == 0.0) return;
        if (count == 0.0) {
            *this = o;
            return;
        }
        const double n = count + o.count;
        const double d = o.mean - mean;
        mean += d * o.count / n;
        m2 += o.m2 + d * d * count * o.count / n;
        count = n;
    }

    double variance() const { return count > 1.0 ? std::max(m2, 0.0) / (count - 1.0) : 0.0; }
    double std_error() const { return count > 0.0 ? std::sqrt(variance() / count) : 0.0; }
};

struct ComplexStats {
    ScalarStats re;
    ScalarStats im;

    void add(Complex z) {
        re.add(z.real());
        im.add(z.imag());
    }
    void merge(const ComplexStats& o) {
        re.merge(o.re);
        im.merge(o.im);
    }
    Complex mean() const { return {re.mean, im.mean}; }
};

/// Entrywise mean and standard errors of a random matrix.
struct MatrixStats {
    double count = 0.0;
    Matrix sum;
    RealMatrix sumsq;  // sum of |x_ij|^2

    MatrixStats() = default;
    explicit MatrixStats(int n) : sum(Matrix::Zero(n, n)), sumsq(RealMatrix::Zero(n, n)) {}

    void add(const Matrix& x) {
        count += 1.0;
        sum += x;
        sumsq += x.cwiseAbs2();
    }
    void merge(const MatrixStats& o) {
        count += o.count;
        sum += o.sum;
        sumsq += o.sumsq;
    }
    Matrix mean() const { return sum / count; }

    /// Standard error of every entry of the mean (complex entries: sqrt(var_re + var_im)).
    RealMatrix std_error() const {
        const Matrix m = mean();
        RealMatrix se(m.rows(), m.cols());
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                const double var =
                    count > 1.0 ? std::max(sumsq(i, j) - count * std::norm(m(i, j)), 0.0) / (count - 1.0)
                                : 0.0;
                se(i, j) = std::sqrt(var / count);
            }
        return se;
    }
};

/// Calls fn(k, acc) for k in [0, samples) and merges the block accumulators in order.
/// `zero` is the empty accumulator; threads == 0 picks the hardware concurrency.
template <class Acc, class Fn>
Acc accumulate_samples(std::size_t samples, const Acc& zero, Fn&& fn, unsigned threads = 0) {
    const std::size_t blocks = (samples + kMonteCarloBlock - 1) / kMonteCarloBlock;
    std::vector<Acc> partial(blocks, zero);
    auto run_block = [&](std::size_t b) {
        const std::size_t begin = b * kMonteCarloBlock;
        const std::size_t end = std::min(samples, begin + kMonteCarloBlock);
        for (std::size_t k = begin; k < end; ++k) fn(k, partial[b]);
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(blocks, 1)));
    if (threads <= 1) {
        for (std::size_t b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t b = t; b < blocks; b += threads) run_block(b);
            });
        for (auto& th : pool) th.join();
    }
    Acc total = zero;
    for (const auto& p : partial) total.merge(p);
    return total;
}

}  // namespace swk

#endif  // SWKERNEL_MONTECARLO_HPP
