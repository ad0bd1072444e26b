#pragma once

#include <cstdint>
#include <vector>

#include "pqvrf/rng.hpp"

namespace pqvrf::ring {

/// Tail cut for all discrete Gaussian sampling: support is center +- kTailCut*sigma.
constexpr double kTailCut = 12.0;

/// One draw from the discrete Gaussian D_{Z,sigma,center} via inversion of
/// the cumulative distribution over the tail-cut window.
int64_t sample_discrete_gaussian(double center, double sigma, RandomStream& rng);

/// Cached zero-centered CDT for a fixed sigma; used on hot paths (error
/// sampling, signature masks) where the same width is drawn many times.
class GaussianSampler {
  public:
    explicit GaussianSampler(double sigma);
    int64_t sample(RandomStream& rng) const;  // center 0
    double sigma() const { return sigma_; }

  private:
    double sigma_;
    int64_t lo_;
    std::vector<double> cdf_;
};

}  // namespace pqvrf::ring
