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

#include "clockwalk/oracle.hpp"

#include <cmath>
#include <numeric>

#include "clockwalk/errors.hpp"

namespace clockwalk {

FiniteTimeResult finite_time_average(const Eigen::MatrixXcd& h, const DensityMatrix& rho, double horizon, double tol,
                                     kernels::Execution exec) {
    if (!(horizon > 0.0)) {
        throw ValidationError("averaging horizon must be positive");
    }
    if (h.rows() != rho.dimension() || h.cols() != rho.dimension()) {
        throw ValidationError("state and Hamiltonian dimensions differ");
    }
    if (double defect = linalg::hermiticity_defect(h); defect > 1e-10) {
        throw ValidationError("Hamiltonian is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    const auto eig = linalg::diagonalize(h);
    std::span<const double> values(eig.values.data(), static_cast<std::size_t>(eig.values.size()));
    if (tol <= 0.0) {
        tol = linalg::default_cluster_tolerance(values);
    }
    const auto clustering = linalg::cluster_eigenvalues(values, tol);

    const Eigen::MatrixXcd in_eigenbasis = eig.vectors.adjoint() * rho.matrix() * eig.vectors;
    Eigen::MatrixXcd limit = in_eigenbasis;
    for (Eigen::Index l = 0; l < limit.cols(); ++l) {
        for (Eigen::Index k = 0; k < limit.rows(); ++k) {
            if (clustering.cluster_of[k] != clustering.cluster_of[l]) {
                limit(k, l) = 0.0;
            }
        }
    }
    Eigen::MatrixXcd damped = in_eigenbasis;
    kernels::damp_coherences(damped, values, clustering.cluster_of, horizon, exec);

    const double deviation = linalg::half_trace_norm(damped - limit);
    Eigen::MatrixXcd back = eig.vectors * damped * eig.vectors.adjoint();
    back = (0.5 * (back + back.adjoint())).eval();
    return FiniteTimeResult{horizon, DensityMatrix(std::move(back), rho.basis()), deviation};
}

SpectralOracle::SpectralOracle(const ClockOperator& op, std::uint64_t max_dimension, double tol)
    : op_(op), dimension_(checked_dimension(op, max_dimension)) {
    const SparseIntMatrix a = assemble_matrix(op, OperatorPart::A, max_dimension);
    const auto n = static_cast<Eigen::Index>(dimension_);
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
    for (std::uint64_t r = 0; r < a.dimension; ++r) {
        for (std::uint64_t e = a.row_offsets[r]; e < a.row_offsets[r + 1]; ++e) {
            dense(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(a.columns[e])) = a.values[e];
        }
    }
    eigen_ = linalg::diagonalize(dense);
    std::span<const double> values(eigen_.values.data(), static_cast<std::size_t>(eigen_.values.size()));
    tol_ = tol > 0.0 ? tol : linalg::default_cluster_tolerance(values);
    clustering_ = linalg::cluster_eigenvalues(values, tol_);
}

std::vector<EigenspaceComponent> SpectralOracle::components(const BasisState& initial) const {
    const auto b = static_cast<Eigen::Index>(op_.encode(initial));
    if (static_cast<std::uint64_t>(b) >= dimension_) {
        throw ValidationError("initial state outside the assembled space");
    }
    // <v_k | e_b> = V(b, k) for real orthonormal eigenvectors.
    const Eigen::VectorXd coeffs = eigen_.vectors.row(b).transpose();
    std::vector<EigenspaceComponent> out;
    for (const auto& c : clustering_.clusters) {
        const auto begin = static_cast<Eigen::Index>(c.begin);
        const auto size = static_cast<Eigen::Index>(c.size());
        const double weight = coeffs.segment(begin, size).squaredNorm();
        if (weight <= kNegligibleWeight) {
            continue;
        }
        EigenspaceComponent comp;
        comp.value = c.value;
        comp.projection = eigen_.vectors.middleCols(begin, size) * coeffs.segment(begin, size);
        comp.weight = comp.projection.squaredNorm();
        out.push_back(std::move(comp));
    }
    return out;
}

DensityMatrix SpectralOracle::time_average(const BasisState& initial) const {
    const auto comps = components(initial);
    const auto n = static_cast<Eigen::Index>(dimension_);
    Eigen::MatrixXd w(n, static_cast<Eigen::Index>(comps.size()));
    for (std::size_t i = 0; i < comps.size(); ++i) {
        w.col(static_cast<Eigen::Index>(i)) = comps[i].projection;
    }
    Eigen::MatrixXd rho = w * w.transpose();
    rho = (0.5 * (rho + rho.transpose())).eval();
    return DensityMatrix(rho.cast<std::complex<double>>(), Basis::Full);
}

FiniteTimeResult SpectralOracle::finite_time_average(const BasisState& initial, double horizon,
                                                     kernels::Execution exec) const {
    if (!(horizon > 0.0)) {
        throw ValidationError("averaging horizon must be positive");
    }
    const auto comps = components(initial);
    const auto n = static_cast<Eigen::Index>(comps.size());
    double total = 0.0;
    for (const auto& c : comps) {
        total += c.weight;
    }
    Eigen::VectorXd amp(n);
    std::vector<double> values(comps.size());
    std::vector<std::size_t> cluster_of(comps.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        // Renormalise away the dropped negligible components.
        amp[i] = std::sqrt(comps[static_cast<std::size_t>(i)].weight / total);
        values[static_cast<std::size_t>(i)] = comps[static_cast<std::size_t>(i)].value;
        cluster_of[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    }
    Eigen::MatrixXcd rho = (amp * amp.transpose()).cast<std::complex<double>>();
    Eigen::MatrixXcd limit = Eigen::MatrixXcd::Zero(n, n);
    limit.diagonal() = rho.diagonal();
    kernels::damp_coherences(rho, values, cluster_of, horizon, exec);
    const double deviation = linalg::half_trace_norm(rho - limit);
    return FiniteTimeResult{horizon, DensityMatrix(std::move(rho), Basis::Spectral), deviation};
}

DensityMatrix spectral_oracle(const ClockOperator& op, const BasisState& initial, std::uint64_t max_dimension) {
    return SpectralOracle(op, max_dimension).time_average(initial);
}

double orbit_leakage(const DensityMatrix& full, const ClockOperator& op, const Orbit& orbit) {
    if (full.basis() != Basis::Full) {
        throw ValidationError("orbit leakage needs a full-basis matrix");
    }
    std::vector<char> in_orbit(static_cast<std::size_t>(full.dimension()), 0);
    for (const auto& s : orbit.states()) {
        in_orbit.at(op.encode(s)) = 1;
    }
    double sum = 0.0;
    const auto& m = full.matrix();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!(in_orbit[static_cast<std::size_t>(i)] && in_orbit[static_cast<std::size_t>(j)])) {
                sum += std::norm(m(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

DensityMatrix restrict_to_orbit_states(const DensityMatrix& full, const ClockOperator& op, const Orbit& orbit) {
    if (full.basis() != Basis::Full) {
        throw ValidationError("orbit restriction needs a full-basis matrix");
    }
    const auto d = static_cast<Eigen::Index>(orbit.dimension());
    std::vector<Eigen::Index> idx;
    for (const auto& s : orbit.states()) {
        idx.push_back(static_cast<Eigen::Index>(op.encode(s)));
    }
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            m(i, j) = full(idx[i], idx[j]);
        }
    }
    return DensityMatrix(std::move(m), Basis::OrbitState);
}

LogLogFit fit_loglog(std::span<const ConvergencePoint> points) {
    if (points.size() < 2) {
        throw ValidationError("a log-log fit needs at least two points");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(points.size());
    for (const auto& p : points) {
        if (!(p.horizon > 0.0) || !(p.deviation > 0.0)) {
            throw ValidationError("log-log fit needs positive horizons and deviations");
        }
        const double x = std::log(p.horizon), y = std::log(p.deviation);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    LogLogFit fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

}  // namespace clockwalk
