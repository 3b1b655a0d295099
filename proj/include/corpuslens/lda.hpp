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

#include <Eigen/Dense>

#include "corpuslens/dtm.hpp"

namespace corpuslens {

struct LdaOptions {
    std::size_t k = 10;
    /// Dirichlet prior on per-document topic mixtures; <= 0 selects 50 / k.
    double alpha = 0.0;
    /// Prior on per-topic word distributions.
    double beta = 0.01;
    /// Gibbs sweeps over the whole token stream.
    std::size_t iterations = 1000;
    std::uint64_t seed = 42;
};

/// Posterior point estimates from the final Gibbs state, smoothed by the
/// priors. Every row of phi and theta sums to 1.
struct LdaModel {
    Eigen::MatrixXd phi;   // k x n_terms
    Eigen::MatrixXd theta; // n_docs x k
    double alpha = 0.0;    // resolved value actually used
    double beta = 0.0;
    std::size_t k = 0;
    std::size_t iterations = 0;
    std::uint64_t seed = 0;
};

/// Collapsed Gibbs sampling on a raw count matrix. Deterministic for a fixed
/// seed. The sampler's count tables are checked against the corpus token
/// total after every sweep. Throws ValidationError for k < 1, a non-Counts
/// matrix, or a corpus with no tokens.
LdaModel lda_fit(const DocTermMatrix& counts, const LdaOptions& opts = {});

} // namespace corpuslens
