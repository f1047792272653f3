#include "flowforge/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace flowforge {

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of empty sample");
    const std::size_t n = values.size();
    auto mid = values.begin() + n / 2;
    std::nth_element(values.begin(), mid, values.end());
    if (n % 2 == 1) return *mid;
    double upper = *mid;
    double lower = *std::max_element(values.begin(), mid);
    return (lower + upper) / 2.0;
}

double median(std::span<const double> values) {
    return median(std::vector<double>(values.begin(), values.end()));
}

MeanVariance mean_and_sample_variance(std::span<const double> values) {
    MeanVariance mv;
    const std::size_t n = values.size();
    if (n == 0) return mv;
    double sum = 0.0;
    for (double v : values) sum += v;
    mv.mean = sum / static_cast<double>(n);
    if (n < 2) return mv;
    double ss = 0.0;
    for (double v : values) {
        double d = v - mv.mean;
        ss += d * d;
    }
    mv.variance = ss / static_cast<double>(n - 1);
    return mv;
}

WelchResult welch_t_test(std::span<const double> x, std::span<const double> y) {
    const std::size_t nx = x.size(), ny = y.size();
    if (nx < 2 || ny < 2)
        throw std::invalid_argument("welch_t_test requires two observations per sample");

    const auto [mx, vx] = mean_and_sample_variance(x);
    const auto [my, vy] = mean_and_sample_variance(y);

    WelchResult r;
    if (vx == 0.0 && vy == 0.0) {
        r.degenerate = true;
        r.df = static_cast<double>(nx + ny - 2);
        if (mx == my) {
            r.t = 0.0;
            r.p = 1.0;
        } else {
            r.t = std::copysign(std::numeric_limits<double>::infinity(), mx - my);
            r.p = 0.0;
        }
        return r;
    }

    const double sx = vx / static_cast<double>(nx);
    const double sy = vy / static_cast<double>(ny);
    const double se = sx + sy;
    r.t = (mx - my) / std::sqrt(se);
    r.df = se * se / (sx * sx / static_cast<double>(nx - 1) +
                      sy * sy / static_cast<double>(ny - 1));
    boost::math::students_t_distribution<double> dist(r.df);
    r.p = 2.0 * boost::math::cdf(dist, -std::abs(r.t));
    return r;
}

}  // namespace flowforge
