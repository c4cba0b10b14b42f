// Copyright 2026 The clockwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clockwalk/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "clockwalk/errors.hpp"

namespace clockwalk::linalg {

HermitianEigensystem diagonalize(const Eigen::MatrixXcd& h) {
    if (h.rows() != h.cols()) {
        throw ValidationError("eigensolver needs a square matrix");
    }
    HermitianEigensystem out;
    const auto n = static_cast<lapack_int>(h.rows());
    out.vectors = h;
    out.values.resize(n);
    if (n == 0) {
        return out;
    }
    lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                     reinterpret_cast<lapack_complex_double*>(out.vectors.data()), n,
                                     out.values.data());
    if (info != 0) {
        throw InvariantViolation("zheevd failed with info=" + std::to_string(info));
    }
    return out;
}

SymmetricEigensystem diagonalize(const Eigen::MatrixXd& h) {
    if (h.rows() != h.cols()) {
        throw ValidationError("eigensolver needs a square matrix");
    }
    SymmetricEigensystem out;
    const auto n = static_cast<lapack_int>(h.rows());
    out.vectors = h;
    out.values.resize(n);
    if (n == 0) {
        return out;
    }
    lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, out.vectors.data(), n, out.values.data());
    if (info != 0) {
        throw InvariantViolation("dsyevd failed with info=" + std::to_string(info));
    }
    return out;
}

Eigen::VectorXd eigenvalues(const Eigen::MatrixXcd& h) {
    if (h.rows() != h.cols()) {
        throw ValidationError("eigensolver needs a square matrix");
    }
    const auto n = static_cast<lapack_int>(h.rows());
    Eigen::MatrixXcd work = h;
    Eigen::VectorXd values(n);
    if (n == 0) {
        return values;
    }
    lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n,
                                     reinterpret_cast<lapack_complex_double*>(work.data()), n, values.data());
    if (info != 0) {
        throw InvariantViolation("zheevd failed with info=" + std::to_string(info));
    }
    return values;
}

double hermiticity_defect(const Eigen::MatrixXcd& h) {
    if (h.rows() != h.cols()) {
        return INFINITY;
    }
    double worst = 0.0;
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
        for (Eigen::Index i = j; i < h.rows(); ++i) {
            worst = std::max(worst, std::abs(h(i, j) - std::conj(h(j, i))));
        }
    }
    return worst;
}

Clustering cluster_eigenvalues(std::span<const double> sorted_values, double tol) {
    Clustering out;
    out.cluster_of.resize(sorted_values.size());
    std::size_t begin = 0;
    for (std::size_t i = 0; i < sorted_values.size(); ++i) {
        const bool last = i + 1 == sorted_values.size();
        const double gap = last ? INFINITY : sorted_values[i + 1] - sorted_values[i];
        if (!last && gap > tol && gap < 10.0 * tol) {
            out.ambiguous_gaps.push_back(gap);
        }
        if (last || gap > tol) {
            double sum = 0.0;
            for (std::size_t k = begin; k <= i; ++k) {
                sum += sorted_values[k];
                out.cluster_of[k] = out.clusters.size();
            }
            out.clusters.push_back(EigenCluster{begin, i + 1, sum / static_cast<double>(i + 1 - begin)});
            begin = i + 1;
        }
    }
    return out;
}

double default_cluster_tolerance(std::span<const double> values) {
    double norm = 0.0;
    for (double v : values) {
        norm = std::max(norm, std::abs(v));
    }
    return 1e-8 * (norm > 0.0 ? norm : 1.0);
}

double half_trace_norm(const Eigen::MatrixXcd& hermitian) {
    return 0.5 * eigenvalues(hermitian).cwiseAbs().sum();
}

}  // namespace clockwalk::linalg
