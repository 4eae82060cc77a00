#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "z2n/gmatrix.hpp"
#include "z2n/grassmann.hpp"
#include "z2n/linmap.hpp"
#include "z2n/points.hpp"

namespace z2n {

// Deterministic generator of random test data. All draws depend only on the
// seed and the call sequence.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }
    long rand_int(long lo, long hi);
    bool coin(double p = 0.5);

    Rational small_rational();   // small numerator/denominator, may be zero
    Rational nonzero_rational();

    GElement element(const AlgebraPtr& alg);
    GElement homogeneous(const AlgebraPtr& alg, const Degree& d);
    GElement degree0(const AlgebraPtr& alg);
    GElement invertible_scalar(const AlgebraPtr& alg); // degree 0, nonzero body

    GMatrix matrix(const AlgebraPtr& alg, const GradedShape& rows, const GradedShape& cols,
                   const Degree& deg);
    // Degree-0 square matrix passing the invertibility criterion.
    GMatrix invertible_matrix(const AlgebraPtr& alg, const GradedShape& shape);

    LambdaPoint point(const AlgebraPtr& alg, const GradedShape& shape);

    GradedShape shape(int n, std::size_t max_per_degree);
    AlgebraPtr algebra(int n, unsigned max_cap = 4, std::size_t max_gens = 2);
    // Morphism into `target` (same generators policy not required); target cap
    // must be <= source cap for exact functoriality, which this respects.
    AlgebraMorphism algebra_morphism(const AlgebraPtr& src, const AlgebraPtr& tgt);

    BlockDiagMap blockdiag(const GradedShape& src, const GradedShape& tgt);
    Morphism morphism(const GradedShape& src, const GradedShape& tgt, unsigned cap);

private:
    std::mt19937_64 rng_;
};

} // namespace z2n
