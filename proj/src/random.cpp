#include "qannulus/random.hpp"

namespace qannulus {

long Rng::integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(static_cast<std::uint64_t>(uniform() * static_cast<double>(span)));
}

cplx Rng::unit_disk() {
    for (;;) {
        const double re = 2.0 * uniform() - 1.0;
        const double im = 2.0 * uniform() - 1.0;
        if (re * re + im * im <= 1.0) return {re, im};
    }
}

CoeffFunction random_coeff(Rng& rng, const RandomElementShape& shape) {
    const long width = rng.integer(1, shape.max_core_width);
    const long first = rng.integer(-shape.max_core_offset, shape.max_core_offset);
    std::vector<cplx> v;
    for (long k = 0; k < width; ++k) v.push_back(rng.unit_disk());
    const cplx left = rng.unit_disk();
    const cplx right = rng.unit_disk();
    return CoeffFunction(first, std::move(v), left, right);
}

AlgebraElement random_element(Rng& rng, const RandomElementShape& shape) {
    AlgebraElement::Modes m;
    const long count = rng.integer(1, 3);
    for (long k = 0; k < count; ++k) {
        const long n = rng.integer(-shape.max_mode, shape.max_mode);
        m.insert_or_assign(n, random_coeff(rng, shape));
    }
    return AlgebraElement(std::move(m));
}

TailVector random_finite_vector(Rng& rng, long first, long width) {
    std::vector<cplx> v;
    for (long k = 0; k < width; ++k) v.push_back(rng.unit_disk());
    return TailVector(first, std::move(v));
}

}  // namespace qannulus
