/*
 * Copyright 2026 The corpus-lens Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "corpuslens/dtm.hpp"

namespace corpuslens {

enum class NmfInit { Nndsvd, Random };

struct NmfOptions {
    std::size_t k = 10;
    std::uint64_t seed = 42;
    std::size_t max_iter = 200;
    /// Stop when the relative objective decrease in one iteration falls below
    /// this (0 disables early stopping).
    double tol = 1e-4;
    NmfInit init = NmfInit::Nndsvd;
};

/// Nonnegative factor pair for A ~= W * H with A the term-document matrix.
struct NmfModel {
    Eigen::MatrixXd W; // n_terms x k, topic loadings per term
    Eigen::MatrixXd H; // k x n_docs, topic activations per document
    std::size_t k = 0;
    std::uint64_t seed = 0;
    /// ||A - W H||_F after initialization (entry 0) and after each
    /// multiplicative-update sweep. Non-increasing.
    std::vector<double> objective_trace;
    /// Update sweeps actually performed (<= max_iter).
    std::size_t iterations = 0;
};

/// Dense term-by-document copy of a sparse doc-major matrix.
Eigen::MatrixXd term_document_dense(const DocTermMatrix& matrix);

/// NNDSVD initialization: truncated SVD of `A`, each factor pair split into
/// its dominant nonnegative part. Zeros are replaced by 1e-6 * mean(A) so
/// multiplicative updates can reach every entry. Returns (W, H).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> nndsvd_init(const Eigen::MatrixXd& A,
                                                        std::size_t k);

/// Fits A ~= W H (W, H >= 0) by Frobenius multiplicative updates, where A is
/// the term-document transpose of `V`. Deterministic for fixed inputs and
/// options. Throws ValidationError if k is out of [1, min(n_docs, n_terms)].
NmfModel nmf_fit(const DocTermMatrix& V, const NmfOptions& opts = {});

} // namespace corpuslens
