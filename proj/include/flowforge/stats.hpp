#pragma once

#include <span>
#include <vector>

namespace flowforge {

// Standard sample median: mean of the two middle order statistics for
// even n. Throws std::invalid_argument on empty input.
double median(std::vector<double> values);
double median(std::span<const double> values);

struct MeanVariance {
    double mean = 0.0;
    double variance = 0.0;  // sample variance (n-1 denominator); 0 for n == 1
};

MeanVariance mean_and_sample_variance(std::span<const double> values);

struct WelchResult {
    double t = 0.0;
    double df = 0.0;
    double p = 1.0;
    // Both samples had zero variance, so the statistic is a convention
    // (equal means: t=0, p=1; different means: t=+-inf, p=0).
    bool degenerate = false;
};

// Welch's unequal-variance two-sided t-test with Welch-Satterthwaite
// degrees of freedom. Requires at least two observations per sample.
WelchResult welch_t_test(std::span<const double> x, std::span<const double> y);

}  // namespace flowforge
