#pragma once

#include <Eigen/Dense>
#include <initializer_list>

namespace cpq {

using Vec = Eigen::VectorXd;

inline Vec make_vec(std::initializer_list<double> values) {
    Vec v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) v[i++] = x;
    return v;
}

} // namespace cpq
