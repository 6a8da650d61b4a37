#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "crf/core.hpp"

namespace crf::enc {

// Linear reducer: centre, then project onto the leading principal axes.
struct PcaReducer {
    Eigen::VectorXd mean;
    Eigen::MatrixXd components;  // input_dim x output_dim, columns ordered by explained variance

    static PcaReducer fit(const Eigen::MatrixXd& rows, std::size_t out_dim);
    Eigen::VectorXd transform(const Eigen::VectorXd& x) const;
    Eigen::MatrixXd transform_rows(const Eigen::MatrixXd& rows) const;
    std::size_t input_dim() const { return static_cast<std::size_t>(components.rows()); }
    std::size_t output_dim() const { return static_cast<std::size_t>(components.cols()); }
};

Json to_json(const PcaReducer& r);
PcaReducer pca_from_json(const Json& j);

enum class ClusterSelection { eom, leaf };

struct DensityParams {
    std::size_t min_cluster_size = 5;
    std::size_t min_samples = 5;  // neighbourhood size for core distances, point itself included
    ClusterSelection selection = ClusterSelection::eom;
};

struct DensityResult {
    std::vector<int> labels;  // -1 = noise, else 0..n_clusters-1
    std::size_t n_clusters = 0;
};

// Hierarchical density clustering: mutual-reachability minimum spanning tree,
// condensed by min_cluster_size, flat clusters chosen by excess of mass (or
// leaves). O(n^2) time and O(n) extra memory beyond the input.
DensityResult density_cluster(const Eigen::MatrixXd& rows, const DensityParams& params);

}  // namespace crf::enc
