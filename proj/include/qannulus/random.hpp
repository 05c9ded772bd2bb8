#pragma once

#include <cstdint>
#include <random>

#include "qannulus/algebra.hpp"

namespace qannulus {

/// Seeded generator with a platform-independent uniform draw, so that fixtures
/// built from a seed are identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1p-53; }
    /// Uniform integer on [lo, hi].
    long integer(long lo, long hi);
    /// Uniform on the closed unit disk (rejection from the square).
    cplx unit_disk();

private:
    std::mt19937_64 eng_;
};

struct RandomElementShape {
    long max_mode = 3;
    long max_core_width = 8;
    long max_core_offset = 4;
};

CoeffFunction random_coeff(Rng& rng, const RandomElementShape& shape = {});
AlgebraElement random_element(Rng& rng, const RandomElementShape& shape = {});
/// Finitely supported vector on [first, first + width), entries in the unit disk.
TailVector random_finite_vector(Rng& rng, long first, long width);

}  // namespace qannulus
