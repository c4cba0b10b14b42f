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

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "clockwalk/clock_operator.hpp"
#include "clockwalk/density.hpp"
#include "clockwalk/kernels.hpp"
#include "clockwalk/linalg.hpp"
#include "clockwalk/orbit.hpp"

namespace clockwalk {

struct FiniteTimeResult {
    double horizon = 0.0;
    DensityMatrix rho_t;
    double deviation = 0.0;  ///< trace distance to the infinite-time limit
};

/// (1/T) int_0^T e^{-iHt} rho e^{iHt} dt, evaluated exactly in the eigenbasis
/// of H: coherences between eigenspaces are multiplied by
/// (1 - e^{-i delta T}) / (i delta T). The result is in rho's basis.
FiniteTimeResult finite_time_average(const Eigen::MatrixXcd& h, const DensityMatrix& rho, double horizon,
                                     double tol = 0.0, kernels::Execution exec = kernels::Execution::Parallel);

/// Component of a pure state in one eigenspace of A.
struct EigenspaceComponent {
    double value = 0.0;   ///< eigenvalue
    double weight = 0.0;  ///< ||P_lambda psi||^2
    Eigen::VectorXd projection;  ///< P_lambda psi in the full basis
};

/// Ground truth for time averages on the full 2^(m+s) space: assembles A
/// densely and diagonalizes it once; initial states are then cheap.
class SpectralOracle {
   public:
    /// Components with weight below this are dropped; each contributes at
    /// most this much to any matrix entry.
    static constexpr double kNegligibleWeight = 1e-24;

    SpectralOracle(const ClockOperator& op, std::uint64_t max_dimension, double tol = 0.0);

    std::uint64_t dimension() const { return dimension_; }
    const linalg::SymmetricEigensystem& eigensystem() const { return eigen_; }
    const linalg::Clustering& clustering() const { return clustering_; }
    double tolerance() const { return tol_; }
    const ClockOperator& op() const { return op_; }

    std::vector<EigenspaceComponent> components(const BasisState& initial) const;

    /// sum_lambda P_lambda |initial><initial| P_lambda in the full basis.
    DensityMatrix time_average(const BasisState& initial) const;

    /// Finite-horizon average of |initial><initial|, expressed in the basis of
    /// normalised components P_lambda psi (Basis::Spectral), where both it
    /// and its limit live.
    FiniteTimeResult finite_time_average(const BasisState& initial, double horizon,
                                         kernels::Execution exec = kernels::Execution::Parallel) const;

   private:
    ClockOperator op_;
    std::uint64_t dimension_;
    linalg::SymmetricEigensystem eigen_;
    double tol_;
    linalg::Clustering clustering_;
};

/// One-shot convenience wrapper.
DensityMatrix spectral_oracle(const ClockOperator& op, const BasisState& initial, std::uint64_t max_dimension);

/// Frobenius norm of the entries of a full-basis matrix outside the orbit block.
double orbit_leakage(const DensityMatrix& full, const ClockOperator& op, const Orbit& orbit);

/// <Psi_i| rho |Psi_j> for the orbit states, as an orbit-state density matrix.
DensityMatrix restrict_to_orbit_states(const DensityMatrix& full, const ClockOperator& op, const Orbit& orbit);

struct ConvergencePoint {
    double horizon = 0.0;
    double deviation = 0.0;
};

struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;  ///< log C in deviation ~ C T^slope
};

/// Least-squares line through (log T, log deviation).
LogLogFit fit_loglog(std::span<const ConvergencePoint> points);

}  // namespace clockwalk
