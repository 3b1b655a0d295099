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

#include "corpuslens/nmf.hpp"

#include <cassert>

#include <Eigen/SVD>

#include "corpuslens/errors.hpp"
#include "corpuslens/rng.hpp"

namespace corpuslens {

namespace {

constexpr double kDenomEps = 1e-12; // keeps multiplicative updates away from 0/0
constexpr double kZeroFill = 1e-6;  // NNDSVD zero replacement, scaled by mean(A)

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> random_init(const Eigen::MatrixXd& A,
                                                        std::size_t k,
                                                        std::uint64_t seed) {
    const double mean = A.size() > 0 ? A.mean() : 0.0;
    const double scale = mean > 0.0 ? mean : 1.0;
    std::mt19937_64 rng(seed);
    Eigen::MatrixXd W(A.rows(), static_cast<Eigen::Index>(k));
    Eigen::MatrixXd H(static_cast<Eigen::Index>(k), A.cols());
    for (Eigen::Index i = 0; i < W.rows(); ++i)
        for (Eigen::Index j = 0; j < W.cols(); ++j) W(i, j) = uniform_unit(rng) * scale;
    for (Eigen::Index i = 0; i < H.rows(); ++i)
        for (Eigen::Index j = 0; j < H.cols(); ++j) H(i, j) = uniform_unit(rng) * scale;
    return {std::move(W), std::move(H)};
}

} // namespace

Eigen::MatrixXd term_document_dense(const DocTermMatrix& matrix) {
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(matrix.n_terms),
                                                  static_cast<Eigen::Index>(matrix.n_docs));
    for (std::size_t d = 0; d < matrix.n_docs; ++d)
        for (const auto& [term, value] : matrix.rows[d])
            dense(static_cast<Eigen::Index>(term), static_cast<Eigen::Index>(d)) = value;
    return dense;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> nndsvd_init(const Eigen::MatrixXd& A,
                                                        std::size_t k) {
    const Eigen::Index m = A.rows();
    const Eigen::Index n = A.cols();
    const Eigen::Index rank = static_cast<Eigen::Index>(k);

    Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::MatrixXd& U = svd.matrixU();
    const Eigen::MatrixXd& V = svd.matrixV();
    const Eigen::VectorXd& sigma = svd.singularValues();

    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(m, rank);
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(rank, n);

    if (sigma.size() > 0 && sigma(0) > 0.0) {
        // Leading pair: one-signed up to sign flip for a nonnegative matrix.
        const double root = std::sqrt(sigma(0));
        W.col(0) = root * U.col(0).cwiseAbs();
        H.row(0) = root * V.col(0).cwiseAbs().transpose();
    }

    for (Eigen::Index j = 1; j < rank && j < sigma.size(); ++j) {
        if (sigma(j) <= 0.0) break;
        const Eigen::VectorXd x = U.col(j);
        const Eigen::VectorXd y = V.col(j);
        const Eigen::VectorXd xp = x.cwiseMax(0.0);
        const Eigen::VectorXd xn = (-x).cwiseMax(0.0);
        const Eigen::VectorXd yp = y.cwiseMax(0.0);
        const Eigen::VectorXd yn = (-y).cwiseMax(0.0);

        const double xp_norm = xp.norm();
        const double xn_norm = xn.norm();
        const double yp_norm = yp.norm();
        const double yn_norm = yn.norm();
        const double mu_p = xp_norm * yp_norm;
        const double mu_n = xn_norm * yn_norm;

        if (mu_p >= mu_n && mu_p > 0.0) {
            const double scale = std::sqrt(sigma(j) * mu_p);
            W.col(j) = (scale / xp_norm) * xp;
            H.row(j) = ((scale / yp_norm) * yp).transpose();
        } else if (mu_n > 0.0) {
            const double scale = std::sqrt(sigma(j) * mu_n);
            W.col(j) = (scale / xn_norm) * xn;
            H.row(j) = ((scale / yn_norm) * yn).transpose();
        }
    }

    const double fill = kZeroFill * (A.size() > 0 ? A.mean() : 0.0);
    W = (W.array() <= 0.0).select(fill, W);
    H = (H.array() <= 0.0).select(fill, H);
    return {std::move(W), std::move(H)};
}

NmfModel nmf_fit(const DocTermMatrix& V, const NmfOptions& opts) {
    if (V.kind != MatrixKind::Tfidf && V.kind != MatrixKind::Counts)
        throw ValidationError("nmf_fit expects a Tfidf or Counts matrix");
    const std::size_t max_k = std::min(V.n_docs, V.n_terms);
    if (opts.k < 1 || opts.k > max_k)
        throw ValidationError("nmf k out of range: " + std::to_string(opts.k) +
                              " (valid: 1.." + std::to_string(max_k) + ")");

    const Eigen::MatrixXd A = term_document_dense(V);

    auto [W, H] = opts.init == NmfInit::Nndsvd ? nndsvd_init(A, opts.k)
                                               : random_init(A, opts.k, opts.seed);

    NmfModel model;
    model.k = opts.k;
    model.seed = opts.seed;
    model.objective_trace.reserve(opts.max_iter + 1);
    model.objective_trace.push_back((A - W * H).norm());

    for (std::size_t iter = 0; iter < opts.max_iter; ++iter) {
        // H <- H .* (W'A) ./ (W'W H + eps)
        const Eigen::MatrixXd Wt = W.transpose();
        H = H.cwiseProduct((Wt * A).cwiseQuotient(
            ((Wt * W) * H).array().cwiseMax(0.0).matrix() +
            Eigen::MatrixXd::Constant(H.rows(), H.cols(), kDenomEps)));

        // W <- W .* (A H') ./ (W H H' + eps)
        const Eigen::MatrixXd Ht = H.transpose();
        W = W.cwiseProduct((A * Ht).cwiseQuotient(
            (W * (H * Ht)).array().cwiseMax(0.0).matrix() +
            Eigen::MatrixXd::Constant(W.rows(), W.cols(), kDenomEps)));

        assert((W.array() >= 0.0).all());
        assert((H.array() >= 0.0).all());

        const double residual = (A - W * H).norm();
        const double previous = model.objective_trace.back();
        model.objective_trace.push_back(residual);
        ++model.iterations;

        if (opts.tol > 0.0) {
            if (previous <= 0.0) break;
            if ((previous - residual) / previous < opts.tol) break;
        }
    }

    model.W = std::move(W);
    model.H = std::move(H);
    return model;
}

} // namespace corpuslens
