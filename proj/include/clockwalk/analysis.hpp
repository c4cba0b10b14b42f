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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "clockwalk/clock_operator.hpp"
#include "clockwalk/density.hpp"
#include "clockwalk/kernels.hpp"
#include "clockwalk/orbit.hpp"

namespace clockwalk {

/// Spectrum of A restricted to an orbit of even length d: the cycle C_d with
/// eigenvalues 2 cos(2 pi k / d) and eigenvectors
/// |k> = d^{-1/2} sum_j omega^{-jk} |Psi_j>, omega = exp(2 pi i / d).
struct RestrictedSpectrum {
    struct Level {
        double value = 0.0;
        std::vector<std::size_t> labels;  ///< Fourier labels k sharing the value
    };

    std::size_t d = 0;
    std::vector<double> eigenvalues;  ///< indexed by k
    /// Distinct values in block order: k=0, k=d/2, then (k, d-k) for
    /// k = 1 .. d/2-1.
    std::vector<Level> levels;

    /// Fourier label at each position of the degeneracy-adjacent basis.
    std::vector<std::size_t> block_order() const;
    /// All (k, l) with lambda_k = lambda_l, including k == l.
    kernels::LabelPairs degenerate_pairs() const;
};

/// Throws ValidationError for odd d or d < 2.
RestrictedSpectrum restricted_spectrum(std::size_t d);

/// Time average of |Psi_0><Psi_0| on an orbit of length d, in the
/// degeneracy-adjacent Fourier basis: (1/d) [lambda_k = lambda_l].
DensityMatrix time_average_orbit(std::size_t d);

/// Rewrites an orbit-Fourier density matrix (block order of
/// restricted_spectrum) in the orbit-state basis Psi_0 ... Psi_{d-1}.
DensityMatrix fourier_to_orbit_states(const DensityMatrix& rho);

struct GeneralTimeAverage {
    DensityMatrix rho_bar;
    std::size_t eigenspaces = 0;
    std::vector<double> ambiguous_gaps;  ///< eigenvalue gaps in (tol, 10 tol)
};

/// sum_lambda P_lambda rho P_lambda with eigenspaces found by clustering the
/// eigenvalues of H at `tol` (<= 0 selects 1e-8 ||H||).
GeneralTimeAverage time_average_general(const DensityMatrix& rho, const Eigen::MatrixXcd& h, double tol = 0.0);

/// -sum mu log2 mu over the eigenvalues mu > 1e-14.
double von_neumann_entropy(const DensityMatrix& rho);
double entropy_of_spectrum(const std::vector<double>& spectrum);

/// log2 d - (d - 2)/d.
double closed_form_entropy(std::size_t d);

struct OccupationDistribution {
    std::vector<double> p;                     ///< P(j) = <Psi_j| rho_bar |Psi_j>
    std::vector<std::complex<double>> fourier; ///< P_hat(a) = sum_j P(j) omega^{a j}

    std::size_t d() const { return p.size(); }
};

/// Occupation of the orbit states under the time average of Psi_0, summed
/// over the degenerate label pairs.
OccupationDistribution occupation_distribution(std::size_t d,
                                               kernels::Execution exec = kernels::Execution::Parallel);

/// Wraps an arbitrary probability vector (validated: non-negative, sums to 1).
OccupationDistribution make_distribution(std::vector<double> p,
                                         kernels::Execution exec = kernels::Execution::Parallel);

struct DsBound {
    double tv = 0.0;                      ///< (1/2) sum_j |P(j) - 1/d|
    double bound = 0.0;                   ///< (1/4) sum_{a != 0} |P_hat(a)|^2
    double l1 = 0.0;                      ///< sum_j |P(j) - 1/d| = 2 tv
    double claimed_l1_cap = 0.0;          ///< 1 / sqrt(2 d)
    double claimed_tv_squared_cap = 0.0;  ///< 1 / (8 d)

    bool inequality_holds() const { return tv * tv <= bound * (1.0 + 1e-12) + 1e-15; }
    bool within_claimed_l1_cap() const { return l1 <= claimed_l1_cap; }
};

/// Total variation to uniform and its upper bound (1/4) sum_{a != 0} |P_hat(a)|^2.
DsBound ds_bound(const OccupationDistribution& dist);

/// Largest |P_hat(a)| over even a != 0 and over odd a.
struct FourierParity {
    double even_max = 0.0;
    double odd_max = 0.0;
};
FourierParity fourier_parity(const OccupationDistribution& dist);

/// Reduced time-averaged state of one work wire: diag(1-p, p) with p the
/// occupation summed over orbit states whose wire reads 1.
DensityMatrix reduce_output_qubit(const Orbit& orbit, const OccupationDistribution& dist, Wire wire);

/// [1/2 - 1/sqrt(2d), 1/2 + 1/sqrt(2d)].
std::pair<double, double> occupation_interval(std::size_t d);

struct EigenstateDistance {
    double distance = 0.0;                    ///< min_lambda 2 (1 - w_lambda)
    double geometric_squared_distance = 0.0;  ///< min_lambda 2 (1 - sqrt(w_lambda))
    double max_possible = 0.0;                ///< 2 (1 - 1/D)
    std::size_t distinct_eigenvalues = 0;     ///< D
    std::vector<double> weights;              ///< w_lambda = ||P_lambda phi||^2 per eigenspace
};

/// Distance of a unit vector from the eigenvectors of H, over eigenspaces
/// clustered at `tol` (<= 0 selects 1e-8 ||H||).
EigenstateDistance eigenstate_distance(const Eigen::VectorXcd& phi, const Eigen::MatrixXcd& h, double tol = 0.0);

/// <Psi_i| A |Psi_j> for the orbit states, as a dense real matrix.
Eigen::MatrixXd restrict_to_orbit(const ClockOperator& op, const Orbit& orbit);

}  // namespace clockwalk
