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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace clockwalk::linalg {

/// Eigenvalues ascending; column k of `vectors` is the eigenvector of values[k].
struct HermitianEigensystem {
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;
};

struct SymmetricEigensystem {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

/// Dense divide-and-conquer eigensolvers (LAPACK zheevd / dsyevd). Only the
/// lower triangle is read.
HermitianEigensystem diagonalize(const Eigen::MatrixXcd& h);
SymmetricEigensystem diagonalize(const Eigen::MatrixXd& h);
Eigen::VectorXd eigenvalues(const Eigen::MatrixXcd& h);

/// Largest |h_ij - conj(h_ji)|.
double hermiticity_defect(const Eigen::MatrixXcd& h);

/// Half-open range [begin, end) of ascending eigenvalues treated as one
/// eigenspace.
struct EigenCluster {
    std::size_t begin = 0;
    std::size_t end = 0;
    double value = 0.0;  ///< mean of the member eigenvalues

    std::size_t size() const { return end - begin; }
};

struct Clustering {
    std::vector<EigenCluster> clusters;
    std::vector<std::size_t> cluster_of;  ///< eigenvalue index -> cluster index
    std::vector<double> ambiguous_gaps;   ///< gaps in (tol, 10 tol)
};

/// Groups sorted eigenvalues whose consecutive gaps are <= tol. Gaps between
/// tol and 10 tol are reported as ambiguous.
Clustering cluster_eigenvalues(std::span<const double> sorted_values, double tol);

/// 1e-8 * max |lambda| (1e-8 for the zero matrix).
double default_cluster_tolerance(std::span<const double> values);

/// Sum of |eigenvalues| / 2 of a Hermitian matrix.
double half_trace_norm(const Eigen::MatrixXcd& hermitian);

}  // namespace clockwalk::linalg
