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

#include "clockwalk/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "clockwalk/errors.hpp"
#include "clockwalk/linalg.hpp"

namespace clockwalk {

std::string_view to_string(Basis basis) {
    switch (basis) {
        case Basis::OrbitFourier:
            return "orbit-fourier";
        case Basis::OrbitState:
            return "orbit-state";
        case Basis::Full:
            return "full";
        case Basis::Spectral:
            return "spectral";
        case Basis::Qubit:
            return "qubit";
    }
    return "?";
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries, Basis basis) : entries_(std::move(entries)), basis_(basis) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw ValidationError("density matrix must be square and non-empty");
    }
    if (double defect = linalg::hermiticity_defect(entries_); defect > kDensityTolerance) {
        throw ValidationError("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    if (double tr = entries_.trace().real(); std::abs(tr - 1.0) > kDensityTolerance) {
        throw ValidationError("density matrix trace is " + std::to_string(tr) + ", expected 1");
    }
    spectrum_ = blockwise_eigenvalues(entries_);
    if (spectrum_.front() < -kDensityTolerance) {
        throw ValidationError("density matrix has negative eigenvalue " + std::to_string(spectrum_.front()));
    }
}

std::vector<std::vector<Eigen::Index>> sparsity_blocks(const Eigen::MatrixXcd& h, double drop) {
    const Eigen::Index n = h.rows();
    std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), Eigen::Index{0});
    auto find = [&](Eigen::Index x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = j + 1; i < n; ++i) {
            if (std::abs(h(i, j)) > drop) {
                Eigen::Index a = find(i), b = find(j);
                if (a != b) {
                    parent[std::max(a, b)] = std::min(a, b);
                }
            }
        }
    }
    std::vector<std::vector<Eigen::Index>> blocks;
    std::vector<Eigen::Index> block_of(static_cast<std::size_t>(n), -1);
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index root = find(i);
        if (block_of[root] < 0) {
            block_of[root] = static_cast<Eigen::Index>(blocks.size());
            blocks.emplace_back();
        }
        blocks[block_of[root]].push_back(i);
    }
    return blocks;
}

std::vector<double> blockwise_eigenvalues(const Eigen::MatrixXcd& h) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(h.rows()));
    for (const auto& block : sparsity_blocks(h)) {
        if (block.size() == 1) {
            out.push_back(h(block[0], block[0]).real());
            continue;
        }
        const auto b = static_cast<Eigen::Index>(block.size());
        Eigen::MatrixXcd sub(b, b);
        for (Eigen::Index j = 0; j < b; ++j) {
            for (Eigen::Index i = 0; i < b; ++i) {
                sub(i, j) = h(block[i], block[j]);
            }
        }
        Eigen::VectorXd ev = linalg::eigenvalues(sub);
        out.insert(out.end(), ev.data(), ev.data() + ev.size());
    }
    std::sort(out.begin(), out.end());
    return out;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.basis() != b.basis() || a.dimension() != b.dimension()) {
        throw ValidationError("trace distance needs matrices in the same basis and dimension");
    }
    double sum = 0.0;
    for (double v : blockwise_eigenvalues(a.matrix() - b.matrix())) {
        sum += std::abs(v);
    }
    return 0.5 * sum;
}

}  // namespace clockwalk
