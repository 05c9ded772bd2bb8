#pragma once

#include <cmath>
#include <complex>

namespace qannulus {

/// Kahan-Babuska (Neumaier) accumulator. Also tracks sum |x_i| for error
/// bounds.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        abs_ += std::abs(x);
        ++count_;
    }
    double value() const { return sum_ + comp_; }
    double abs_sum() const { return abs_; }
    long count() const { return count_; }

    /// Bound on |value() - exact sum of the added terms|.
    double rounding_bound() const {
        constexpr double eps = 0x1p-53;
        return (2.0 * eps + static_cast<double>(count_) * eps * eps) * abs_;
    }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_ = 0.0;
    long count_ = 0;
};

class CompensatedComplexSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }
    double abs_sum() const { return re_.abs_sum() + im_.abs_sum(); }
    double rounding_bound() const { return re_.rounding_bound() + im_.rounding_bound(); }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

}  // namespace qannulus
