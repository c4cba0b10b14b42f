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

#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace clockwalk {

/// Which basis a density matrix is written in.
enum class Basis {
    OrbitFourier,  ///< eigenvectors |k> of F on the orbit, degeneracy-adjacent order
    OrbitState,    ///< orbit states Psi_0 ... Psi_{d-1}
    Full,          ///< full 2^(m+s) computational basis, index = ClockOperator::encode
    Spectral,      ///< normalised eigenspace projections of a pure state
    Qubit,         ///< single-qubit |0>, |1>
};

std::string_view to_string(Basis basis);

inline constexpr double kDensityTolerance = 1e-12;

/// Entries with magnitude at or below this are treated as structural zeros
/// when splitting a matrix into independent blocks.
inline constexpr double kBlockDropTolerance = 1e-14;

/// Hermitian, positive semidefinite, unit-trace matrix. Construction
/// validates all three within kDensityTolerance.
class DensityMatrix {
   public:
    DensityMatrix(Eigen::MatrixXcd entries, Basis basis);

    const Eigen::MatrixXcd& matrix() const { return entries_; }
    Basis basis() const { return basis_; }
    Eigen::Index dimension() const { return entries_.rows(); }
    std::complex<double> operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

    /// Eigenvalues, ascending; computed once at construction.
    const std::vector<double>& spectrum() const { return spectrum_; }

   private:
    Eigen::MatrixXcd entries_;
    Basis basis_;
    std::vector<double> spectrum_;
};

/// Connected components of the sparsity pattern of a Hermitian matrix; each
/// component lists its indices in ascending order.
std::vector<std::vector<Eigen::Index>> sparsity_blocks(const Eigen::MatrixXcd& h,
                                                       double drop = kBlockDropTolerance);

/// Eigenvalues of a Hermitian matrix computed block by block, ascending.
std::vector<double> blockwise_eigenvalues(const Eigen::MatrixXcd& h);

/// (1/2) ||a - b||_1. Both matrices must share basis and dimension.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace clockwalk
