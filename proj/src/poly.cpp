#include "qannulus/poly.hpp"

#include <algorithm>

namespace qannulus {

Poly::Poly(std::initializer_list<cplx> coeffs) : c_(coeffs) { trim(); }

Poly::Poly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == cplx{}) c_.pop_back();
}

cplx Poly::operator()(double l) const {
    cplx acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * l + *it;
    return acc;
}

Poly Poly::shifted(long m) const {
    if (m == 0 || c_.size() < 2) return *this;
    // Binomial expansion of (l + m)^k, accumulated from the top so that each
    // coefficient is a short sum.
    std::vector<cplx> out(c_.size());
    const double dm = static_cast<double>(m);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        double binom = 1.0;  // C(k, i)
        double mpow = 1.0;   // m^(k-i), built as i decreases
        for (std::size_t i = k + 1; i-- > 0;) {
            out[i] += c_[k] * (binom * mpow);
            // move from i to i-1: C(k, i-1) = C(k, i) * i / (k - i + 1)
            if (i > 0) {
                binom = binom * static_cast<double>(i) / static_cast<double>(k - i + 1);
                mpow *= dm;
            }
        }
    }
    return Poly(std::move(out));
}

Poly Poly::reflected() const {
    std::vector<cplx> out(c_);
    for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
    return Poly(std::move(out));
}

Poly Poly::conj() const {
    std::vector<cplx> out(c_);
    for (auto& c : out) c = std::conj(c);
    return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(cplx s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<cplx> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t k = 0; k < b.c_.size(); ++k) out[i + k] += a.c_[i] * b.c_[k];
    return Poly(std::move(out));
}

}  // namespace qannulus
