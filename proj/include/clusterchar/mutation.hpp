#pragma once

// Seeds and Fomin-Zelevinsky mutation, used as an independent source of
// cluster variables.

#include <cstddef>
#include <vector>

#include "clusterchar/laurent.hpp"
#include "clusterchar/quiver.hpp"

namespace clusterchar {

/// Extended exchange matrix (2m x m; the lower m rows track principal
/// coefficients) and the current cluster, written in the initial x_i, y_i.
struct Seed {
    std::size_t rank = 0;
    std::vector<std::vector<int>> matrix;  // 2m rows of length m
    std::vector<LaurentPoly> cluster;
    int depth = 0;
    bool principal = false;

    /// Equality of matrix, cluster and coefficient mode; depth is ignored.
    friend bool operator==(const Seed& a, const Seed& b) {
        return a.rank == b.rank && a.principal == b.principal && a.matrix == b.matrix && a.cluster == b.cluster;
    }
};

/// b_ij = #(i -> j) - #(j -> i) on top, identity below; cluster (x_1..x_m).
/// Without `principal` the coefficient rows are still carried but never
/// enter the exchange relation.
Seed initial_seed(const Quiver& q, bool principal);

/// Mutation at k (0-based). Throws NonLaurentResult if the exchange relation
/// does not divide exactly.
Seed mutate(const Seed& s, std::size_t k);

/// Applies the 0-based sequence left to right.
Seed mutate_sequence(Seed s, const std::vector<std::size_t>& sequence);

/// Distinct cluster variables reachable by at most `depth` mutations, in
/// canonical order.
std::vector<LaurentPoly> cluster_variables_up_to(const Quiver& q, int depth, bool principal);

/// All seeds reachable by at most `depth` mutations (no immediate backtracking),
/// breadth-first.
std::vector<Seed> seeds_up_to(const Quiver& q, int depth, bool principal);

/// Distinct products of cluster variables from a common cluster, of total
/// degree between 1 and `max_degree`, over the seeds reachable within `depth`.
std::vector<LaurentPoly> cluster_monomials_up_to(const Quiver& q, int depth, int max_degree, bool principal);

}  // namespace clusterchar
