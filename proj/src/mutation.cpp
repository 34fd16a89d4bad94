#include "clusterchar/mutation.hpp"

#include <cstdlib>
#include <set>

#include "clusterchar/errors.hpp"

namespace clusterchar {

Seed initial_seed(const Quiver& q, bool principal) {
    const std::size_t m = q.vertex_count();
    Seed s;
    s.rank = m;
    s.principal = principal;
    s.matrix.assign(2 * m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) s.matrix[i][j] = q.arrow_count(i, j) - q.arrow_count(j, i);
        s.matrix[m + i][i] = 1;
        s.cluster.push_back(vars::x(static_cast<int>(i + 1)));
    }
    return s;
}

Seed mutate(const Seed& s, std::size_t k) {
    const std::size_t m = s.rank;
    if (k >= m) throw InvalidArgument("mutation index " + std::to_string(k + 1) + " out of range");

    // Exchange relation: x_k x_k' = prod x_i^[b_ik]+ y^[c_k]+ + prod x_i^[-b_ik]+ y^[-c_k]+.
    LaurentPoly plus = 1;
    LaurentPoly minus = 1;
    for (std::size_t i = 0; i < m; ++i) {
        const int b = s.matrix[i][k];
        if (b > 0) plus *= s.cluster[i].pow(static_cast<unsigned>(b));
        if (b < 0) minus *= s.cluster[i].pow(static_cast<unsigned>(-b));
    }
    if (s.principal) {
        for (std::size_t j = 0; j < m; ++j) {
            const int c = s.matrix[m + j][k];
            const auto y = Monomial::variable({Family::y, static_cast<int>(j + 1)}, c > 0 ? c : -c);
            if (c > 0) plus = plus.times(y);
            if (c < 0) minus = minus.times(y);
        }
    }

    Seed out = s;
    try {
        out.cluster[k] = exact_divide(plus + minus, s.cluster[k]);
    } catch (const NotExactlyDivisible&) {
        throw NonLaurentResult("exchange at vertex " + std::to_string(k + 1) + " is not a Laurent polynomial");
    }
    for (std::size_t i = 0; i < 2 * m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const int bij = s.matrix[i][j];
            if (i == k || j == k) {
                out.matrix[i][j] = -bij;
            } else {
                const int bik = s.matrix[i][k];
                const int bkj = s.matrix[k][j];
                out.matrix[i][j] = bij + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
            }
        }
    }
    out.depth = s.depth + 1;
    return out;
}

Seed mutate_sequence(Seed s, const std::vector<std::size_t>& sequence) {
    for (std::size_t k : sequence) s = mutate(s, k);
    return s;
}

std::vector<Seed> seeds_up_to(const Quiver& q, int depth, bool principal) {
    if (depth < 0) throw InvalidArgument("depth must be non-negative");
    struct Node {
        Seed seed;
        std::size_t last;
    };
    const std::size_t none = q.vertex_count();
    std::vector<Seed> out{initial_seed(q, principal)};
    std::vector<Node> frontier{{out.front(), none}};
    for (int d = 0; d < depth; ++d) {
        std::vector<Node> next;
        for (const auto& node : frontier) {
            for (std::size_t k = 0; k < q.vertex_count(); ++k) {
                if (k == node.last) continue;
                Seed s = mutate(node.seed, k);
                out.push_back(s);
                next.push_back({std::move(s), k});
            }
        }
        frontier = std::move(next);
    }
    return out;
}

std::vector<LaurentPoly> cluster_variables_up_to(const Quiver& q, int depth, bool principal) {
    std::set<LaurentPoly, CanonicalPolyLess> found;
    for (const auto& s : seeds_up_to(q, depth, principal)) found.insert(s.cluster.begin(), s.cluster.end());
    return {found.begin(), found.end()};
}

std::vector<LaurentPoly> cluster_monomials_up_to(const Quiver& q, int depth, int max_degree, bool principal) {
    std::set<LaurentPoly, CanonicalPolyLess> found;
    for (const auto& s : seeds_up_to(q, depth, principal)) {
        // Exponent vectors of total degree 1..max_degree over this cluster.
        std::vector<int> exps(s.rank, 0);
        for (;;) {
            std::size_t i = 0;
            for (; i < s.rank; ++i) {
                ++exps[i];
                int total = 0;
                for (int e : exps) total += e;
                if (total <= max_degree) break;
                exps[i] = 0;
            }
            if (i == s.rank) break;
            LaurentPoly m = 1;
            for (std::size_t j = 0; j < s.rank; ++j) m *= s.cluster[j].pow(static_cast<unsigned>(exps[j]));
            found.insert(std::move(m));
        }
    }
    return {found.begin(), found.end()};
}

}  // namespace clusterchar
