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

#include "clockwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "clockwalk/errors.hpp"
#include "clockwalk/linalg.hpp"

namespace clockwalk {

namespace {

void require_even_dimension(std::size_t d) {
    if (d < 2) {
        throw ValidationError("orbit dimension must be at least 2, got " + std::to_string(d));
    }
    if (d % 2 != 0) {
        throw ValidationError("odd orbit dimension " + std::to_string(d) + " is not supported");
    }
}

void require_hermitian(const Eigen::MatrixXcd& h) {
    if (double defect = linalg::hermiticity_defect(h); defect > 1e-10) {
        throw ValidationError("Hamiltonian is not Hermitian (defect " + std::to_string(defect) + ")");
    }
}

}  // namespace

std::vector<std::size_t> RestrictedSpectrum::block_order() const {
    std::vector<std::size_t> order;
    order.reserve(d);
    for (const Level& level : levels) {
        order.insert(order.end(), level.labels.begin(), level.labels.end());
    }
    return order;
}

kernels::LabelPairs RestrictedSpectrum::degenerate_pairs() const {
    kernels::LabelPairs pairs;
    pairs.reserve(2 * d);
    for (const Level& level : levels) {
        for (std::size_t k : level.labels) {
            for (std::size_t l : level.labels) {
                pairs.emplace_back(k, l);
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

RestrictedSpectrum restricted_spectrum(std::size_t d) {
    require_even_dimension(d);
    RestrictedSpectrum spec;
    spec.d = d;
    spec.eigenvalues.resize(d);
    for (std::size_t k = 0; k < d; ++k) {
        spec.eigenvalues[k] =
            2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
    }
    // cos(2 pi k/d) = cos(2 pi l/d) iff k = +-l mod d.
    spec.levels.push_back({spec.eigenvalues[0], {0}});
    spec.levels.push_back({spec.eigenvalues[d / 2], {d / 2}});
    for (std::size_t k = 1; k < d / 2; ++k) {
        spec.levels.push_back({spec.eigenvalues[k], {k, d - k}});
    }
    return spec;
}

DensityMatrix time_average_orbit(std::size_t d) {
    const RestrictedSpectrum spec = restricted_spectrum(d);
    const auto n = static_cast<Eigen::Index>(d);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    const double w = 1.0 / static_cast<double>(d);
    Eigen::Index pos = 0;
    for (const auto& level : spec.levels) {
        const auto size = static_cast<Eigen::Index>(level.labels.size());
        m.block(pos, pos, size, size).setConstant(w);
        pos += size;
    }
    return DensityMatrix(std::move(m), Basis::OrbitFourier);
}

DensityMatrix fourier_to_orbit_states(const DensityMatrix& rho) {
    if (rho.basis() != Basis::OrbitFourier) {
        throw ValidationError("expected a density matrix in the orbit-Fourier basis");
    }
    const auto d = static_cast<std::size_t>(rho.dimension());
    const auto order = restricted_spectrum(d).block_order();
    const auto n = static_cast<Eigen::Index>(d);
    // U(i, p) = <Psi_i | k_p> = omega^{-i k_p} / sqrt(d)
    Eigen::MatrixXcd u(n, n);
    for (Eigen::Index p = 0; p < n; ++p) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const std::size_t phase = (static_cast<std::size_t>(i) * order[p]) % d;
            u(i, p) = std::polar(1.0 / std::sqrt(static_cast<double>(d)),
                                 -2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(d));
        }
    }
    Eigen::MatrixXcd out = u * rho.matrix() * u.adjoint();
    // Restore exact Hermitian symmetry lost to rounding in the product.
    out = (0.5 * (out + out.adjoint())).eval();
    return DensityMatrix(std::move(out), Basis::OrbitState);
}

GeneralTimeAverage time_average_general(const DensityMatrix& rho, const Eigen::MatrixXcd& h, double tol) {
    if (h.rows() != rho.dimension() || h.cols() != rho.dimension()) {
        throw ValidationError("state and Hamiltonian dimensions differ");
    }
    require_hermitian(h);
    const auto eig = linalg::diagonalize(h);
    std::span<const double> values(eig.values.data(), static_cast<std::size_t>(eig.values.size()));
    if (tol <= 0.0) {
        tol = linalg::default_cluster_tolerance(values);
    }
    const auto clustering = linalg::cluster_eigenvalues(values, tol);

    Eigen::MatrixXcd in_eigenbasis = eig.vectors.adjoint() * rho.matrix() * eig.vectors;
    for (Eigen::Index l = 0; l < in_eigenbasis.cols(); ++l) {
        for (Eigen::Index k = 0; k < in_eigenbasis.rows(); ++k) {
            if (clustering.cluster_of[k] != clustering.cluster_of[l]) {
                in_eigenbasis(k, l) = 0.0;
            }
        }
    }
    Eigen::MatrixXcd out = eig.vectors * in_eigenbasis * eig.vectors.adjoint();
    out = (0.5 * (out + out.adjoint())).eval();
    return GeneralTimeAverage{DensityMatrix(std::move(out), rho.basis()), clustering.clusters.size(),
                              clustering.ambiguous_gaps};
}

double entropy_of_spectrum(const std::vector<double>& spectrum) {
    double s = 0.0;
    for (double mu : spectrum) {
        if (mu > 1e-14) {
            s -= mu * std::log2(mu);
        }
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho) { return entropy_of_spectrum(rho.spectrum()); }

double closed_form_entropy(std::size_t d) {
    require_even_dimension(d);
    const double dd = static_cast<double>(d);
    return std::log2(dd) - (dd - 2.0) / dd;
}

OccupationDistribution occupation_distribution(std::size_t d, kernels::Execution exec) {
    const RestrictedSpectrum spec = restricted_spectrum(d);
    OccupationDistribution dist;
    dist.p = kernels::occupation(d, spec.degenerate_pairs(), exec);
    dist.fourier = kernels::character_transform(dist.p, exec);
    return dist;
}

OccupationDistribution make_distribution(std::vector<double> p, kernels::Execution exec) {
    if (p.empty()) {
        throw ValidationError("empty distribution");
    }
    double total = 0.0;
    for (double v : p) {
        if (v < 0.0) {
            throw ValidationError("distribution has a negative entry");
        }
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw ValidationError("distribution sums to " + std::to_string(total));
    }
    OccupationDistribution dist;
    dist.p = std::move(p);
    dist.fourier = kernels::character_transform(dist.p, exec);
    return dist;
}

DsBound ds_bound(const OccupationDistribution& dist) {
    const double d = static_cast<double>(dist.d());
    DsBound out;
    for (double v : dist.p) {
        out.l1 += std::abs(v - 1.0 / d);
    }
    out.tv = 0.5 * out.l1;
    for (std::size_t a = 1; a < dist.d(); ++a) {
        out.bound += std::norm(dist.fourier[a]);
    }
    out.bound *= 0.25;
    out.claimed_l1_cap = 1.0 / std::sqrt(2.0 * d);
    out.claimed_tv_squared_cap = 1.0 / (8.0 * d);
    return out;
}

FourierParity fourier_parity(const OccupationDistribution& dist) {
    FourierParity out;
    for (std::size_t a = 1; a < dist.d(); ++a) {
        double mag = std::abs(dist.fourier[a]);
        if (a % 2 == 0) {
            out.even_max = std::max(out.even_max, mag);
        } else {
            out.odd_max = std::max(out.odd_max, mag);
        }
    }
    return out;
}

DensityMatrix reduce_output_qubit(const Orbit& orbit, const OccupationDistribution& dist, Wire wire) {
    if (orbit.dimension() != dist.d()) {
        throw ValidationError("orbit has " + std::to_string(orbit.dimension()) +
                              " states but the distribution has " + std::to_string(dist.d()));
    }
    if (wire >= orbit.work_width()) {
        throw ValidationError("output wire " + std::to_string(wire) + " out of range for " +
                              std::to_string(orbit.work_width()) + " work wires");
    }
    double p = 0.0;
    for (std::size_t j = 0; j < orbit.dimension(); ++j) {
        if (orbit.output_bit(j, wire)) {
            p += dist.p[j];
        }
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = 1.0 - p;
    m(1, 1) = p;
    return DensityMatrix(std::move(m), Basis::Qubit);
}

std::pair<double, double> occupation_interval(std::size_t d) {
    const double half_width = 1.0 / std::sqrt(2.0 * static_cast<double>(d));
    return {0.5 - half_width, 0.5 + half_width};
}

EigenstateDistance eigenstate_distance(const Eigen::VectorXcd& phi, const Eigen::MatrixXcd& h, double tol) {
    if (h.rows() != phi.size() || h.cols() != phi.size()) {
        throw ValidationError("state and Hamiltonian dimensions differ");
    }
    if (std::abs(phi.norm() - 1.0) > 1e-10) {
        throw ValidationError("eigenstate distance needs a unit vector");
    }
    require_hermitian(h);
    const auto eig = linalg::diagonalize(h);
    std::span<const double> values(eig.values.data(), static_cast<std::size_t>(eig.values.size()));
    if (tol <= 0.0) {
        tol = linalg::default_cluster_tolerance(values);
    }
    const auto clustering = linalg::cluster_eigenvalues(values, tol);
    const Eigen::VectorXcd coeffs = eig.vectors.adjoint() * phi;

    EigenstateDistance out;
    out.distinct_eigenvalues = clustering.clusters.size();
    double best = 0.0;
    for (const auto& c : clustering.clusters) {
        double w = 0.0;
        for (std::size_t k = c.begin; k < c.end; ++k) {
            w += std::norm(coeffs[static_cast<Eigen::Index>(k)]);
        }
        out.weights.push_back(w);
        best = std::max(best, w);
    }
    out.distance = 2.0 * (1.0 - best);
    out.geometric_squared_distance = 2.0 * (1.0 - std::sqrt(best));
    out.max_possible = 2.0 * (1.0 - 1.0 / static_cast<double>(out.distinct_eigenvalues));
    return out;
}

Eigen::MatrixXd restrict_to_orbit(const ClockOperator& op, const Orbit& orbit) {
    const auto d = static_cast<Eigen::Index>(orbit.dimension());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        auto add = [&](const BasisState& img) {
            if (auto i = orbit.index_of(img)) {
                m(static_cast<Eigen::Index>(*i), j) += 1.0;
            }
        };
        op.for_each_image(orbit[static_cast<std::size_t>(j)], Direction::Forward, add);
        op.for_each_image(orbit[static_cast<std::size_t>(j)], Direction::Backward, add);
    }
    return m;
}

}  // namespace clockwalk
