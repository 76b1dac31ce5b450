#pragma once

#include "sprk/irk.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sprk::test {

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline double uniform(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline State random_state(int dim, double scale = 1.0)
{
    State y(dim);
    for (int i = 0; i < dim; ++i)
        y(i) = uniform(-scale, scale);
    return y;
}

inline double sup_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace sprk::test
