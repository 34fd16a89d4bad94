#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "clusterchar/errors.hpp"
#include "clusterchar/grassmannian.hpp"

using namespace clusterchar;

namespace {

using Vec = std::vector<int>;
using Subspace = std::set<Vec>;  // all vectors of the subspace

std::vector<Vec> all_vectors(int d, int p) {
    std::vector<Vec> out{Vec{}};
    for (int i = 0; i < d; ++i) {
        std::vector<Vec> next;
        for (const auto& v : out)
            for (int a = 0; a < p; ++a) {
                Vec w = v;
                w.push_back(a);
                next.push_back(w);
            }
        out = next;
    }
    return out;
}

Subspace span(const std::vector<Vec>& gens, int d, int p) {
    Subspace s{Vec(d, 0)};
    for (const auto& g : gens) {
        Subspace next;
        for (const auto& v : s)
            for (int a = 0; a < p; ++a) {
                Vec w = v;
                for (int i = 0; i < d; ++i) w[i] = (w[i] + a * g[i]) % p;
                next.insert(w);
            }
        s = next;
    }
    return s;
}

// Every subspace of F_p^d of dimension k, as vector sets, by spanning all k-tuples.
std::set<Subspace> subspaces(int d, int k, int p) {
    std::set<Subspace> out;
    const auto vs = all_vectors(d, p);
    std::size_t target = 1;
    for (int i = 0; i < k; ++i) target *= static_cast<std::size_t>(p);
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
        std::vector<Vec> gens;
        for (auto i : idx) gens.push_back(vs[i]);
        Subspace s = span(gens, d, p);
        if (s.size() == target) out.insert(s);
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == vs.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return out;
}

Vec apply(const IntMatrix& m, const Vec& v, int p) {
    Vec out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        long long acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[c];
        out[r] = static_cast<int>(((acc % p) + p) % p);
    }
    return out;
}

// Counts tuples of subspaces closed under every arrow, by brute force.
long long brute_count(const IntRep& rep, const DimVector& e, int p) {
    const Quiver& q = rep.quiver();
    const std::size_t n = q.vertex_count();
    std::vector<std::vector<Subspace>> choices(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto s = subspaces(rep.dim()[i], e[i], p);
        choices[i].assign(s.begin(), s.end());
    }
    long long count = 0;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        bool ok = true;
        for (std::size_t a = 0; a < q.arrows().size() && ok; ++a) {
            const auto& arrow = q.arrows()[a];
            for (const auto& v : choices[arrow.src][idx[arrow.src]]) {
                if (!choices[arrow.tgt][idx[arrow.tgt]].count(apply(rep.matrix(a), v, p))) {
                    ok = false;
                    break;
                }
            }
        }
        count += ok;
        std::size_t pos = 0;
        while (pos < n && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
        if (pos == n) break;
    }
    return count;
}

IntRep kron(int n, std::int64_t lambda) { return catalog_module({FamilyId::kronecker_homogeneous, n, lambda, 1}); }

}  // namespace

TEST(Grassmannian, Primes) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(19));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(21));
    EXPECT_EQ(default_primes().size(), 8U);
    EXPECT_EQ(PrimePolicy::from_list("2,3, 7").primes, (std::vector<std::int64_t>{2, 3, 7}));
    EXPECT_THROW(PrimePolicy::from_list("2,4"), InvalidArgument);
    EXPECT_THROW(PrimePolicy::from_list("two"), InvalidArgument);
}

TEST(Grassmannian, GaussianBinomial) {
    EXPECT_EQ(gaussian_binomial(2, 1, 3), 4);
    EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
    EXPECT_EQ(gaussian_binomial(3, 0, 5), 1);
    EXPECT_EQ(gaussian_binomial(3, 4, 5), 0);
    // Subspace oracle.
    for (int p : {2, 3})
        for (int d = 0; d <= 3; ++d)
            for (int k = 0; k <= d; ++k)
                EXPECT_EQ(gaussian_binomial(d, k, p), static_cast<long>(subspaces(d, k, p).size()));
}

TEST(Grassmannian, CountExamples) {
    for (std::int64_t p : {2, 3, 5, 7}) {
        EXPECT_EQ(count_subreps(kron(1, 1), {1, 0}, p), 0);
        EXPECT_EQ(count_subreps(kron(1, 1), {0, 1}, p), 1);
        EXPECT_EQ(count_subreps(kron(2, 0), {0, 1}, p), p + 1);
    }
}

TEST(Grassmannian, BruteForceOracle) {
    std::vector<IntRep> reps{kron(1, 1), kron(2, 0), kron(2, 1),
                             catalog_module({FamilyId::kronecker_preprojective, 1, 1, 1}),
                             catalog_module({FamilyId::kronecker_preinjective, 2, 1, 1}),
                             catalog_module({FamilyId::affineA21_tube, 2, 1, 1}),
                             catalog_module({FamilyId::affineA21_tube, 3, 1, 2}),
                             catalog_module({FamilyId::affineA21_homogeneous, 1, 1, 1}),
                             direct_sum(kron(1, 1), kron(1, 2))};
    for (const auto& rep : reps) {
        for (const auto& e : dims_below(rep.dim())) {
            for (int p : {2, 3}) {
                EXPECT_EQ(count_subreps(rep, e, p), static_cast<long>(brute_count(rep, e, p))) << rep.dim().to_string() << " e "
                                                                           << e.to_string() << " p " << p;
            }
        }
    }
}

TEST(Grassmannian, CountingPolynomials) {
    const auto a = counting_polynomial(kron(1, 1), {0, 1});
    EXPECT_EQ(a.counting_poly.to_string(), "1");
    const auto b = counting_polynomial(kron(2, 0), {0, 1});
    EXPECT_EQ(b.counting_poly.to_string(), "q + 1");
    EXPECT_EQ(b.chi, 2);
    EXPECT_EQ(b.degree_bound, 1);
    EXPECT_EQ(b.samples.size(), 2U);
    EXPECT_EQ(b.held_out.size(), 2U);
    for (const auto& [p, c] : b.held_out) EXPECT_EQ(c, p + 1);
    const auto c = counting_polynomial(kron(2, 0), {1, 1});
    EXPECT_EQ(c.counting_poly.to_string(), "1");
    EXPECT_EQ(euler_char(kron(2, 0), {0, 1}), 2);
}

TEST(Grassmannian, ProfileInvariants) {
    const auto prof = counting_polynomial(kron(2, 1), {1, 1});
    for (const auto& [p, c] : prof.samples) EXPECT_EQ(prof.counting_poly.evaluate(p), c);
    for (const auto& [p, c] : prof.held_out) EXPECT_EQ(prof.counting_poly.evaluate(p), c);
    EXPECT_EQ(prof.counting_poly.evaluate(1), prof.chi);
}

TEST(Grassmannian, Errors) {
    EXPECT_THROW(count_subreps(kron(1, 1), {2, 0}, 2), DimOutOfRange);
    EXPECT_THROW(count_subreps(kron(1, 1), {1, 0, 0}, 2), DimensionMismatch);
    EXPECT_THROW(count_subreps(kron(1, 1), {1, 0}, 4), InvalidArgument);
    const IntRep ex(Quiver::kronecker(), {1, 1}, {IntMatrix::identity(1), IntMatrix::identity(1)}, {3});
    EXPECT_THROW(count_subreps(ex, {0, 1}, 3), ExcludedPrime);
    EXPECT_EQ(count_subreps(ex, {0, 1}, 5), 1);
    // The exclusion is skipped when sampling.
    EXPECT_EQ(counting_polynomial(ex, {0, 1}).samples.front().first, 2);
    EXPECT_EQ(counting_polynomial(ex, {0, 1}).samples.size() + counting_polynomial(ex, {0, 1}).held_out.size(), 3U);
    PrimePolicy few;
    few.primes = {2, 3};
    few.auto_extend = false;
    EXPECT_THROW(counting_polynomial(kron(2, 0), {0, 1}, few), InsufficientPrimes);
    PrimePolicy extend;
    extend.primes = {2, 3};
    EXPECT_EQ(counting_polynomial(kron(2, 0), {1, 1}, extend).chi, 1);
}

TEST(Grassmannian, NonPolynomialCountDetected) {
    // x^2 = 1 has 2 roots for odd p and 1 for p = 2: not a polynomial in p.
    // Two copies of the Kronecker module with second arrow diag(1,-1)... the eigenlines
    // are stable exactly when 1 != -1, so e = (1,1) counts 2 for odd p and p + 1 for p = 2.
    const IntRep m(Quiver::kronecker(), {2, 2},
                   {IntMatrix::identity(2), IntMatrix::from_rows({{1, 0}, {0, -1}})});
    EXPECT_EQ(count_subreps(m, {1, 1}, 2), 3);
    EXPECT_EQ(count_subreps(m, {1, 1}, 3), 2);
    EXPECT_THROW(counting_polynomial(m, {1, 1}), NonPolynomialCount);
    PrimePolicy odd;
    odd.primes = {3, 5, 7, 11, 13};
    EXPECT_EQ(counting_polynomial(m, {1, 1}, odd).chi, 2);
}

TEST(Grassmannian, EnvironmentOverride) {
    ::setenv("CLUSTERCHAR_PRIMES", "5,7,11", 1);
    const PrimePolicy p = PrimePolicy::from_environment();
    ::unsetenv("CLUSTERCHAR_PRIMES");
    EXPECT_EQ(p.primes, (std::vector<std::int64_t>{5, 7, 11}));
    EXPECT_FALSE(p.auto_extend);
    EXPECT_EQ(PrimePolicy::from_environment().primes, default_primes());
}

TEST(Grassmannian, TrivialStrata) {
    for (auto kind : {QuiverKind::kronecker, QuiverKind::affineA2}) {
        for (const auto& f : catalog_families(kind)) {
            const IntRep rep = catalog_module(f);
            EXPECT_EQ(euler_char(rep, DimVector::zero(rep.dim().size())), 1) << describe(f);
            EXPECT_EQ(euler_char(rep, rep.dim()), 1) << describe(f);
        }
    }
}

TEST(Grassmannian, LambdaIndependence) {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& e : dims_below({n, n})) {
            for (std::int64_t p : {5, 7}) {
                const BigInt base = count_subreps(kron(n, 1), e, p);
                for (std::int64_t lambda = 2; lambda < p && lambda <= 4; ++lambda)
                    EXPECT_EQ(count_subreps(kron(n, lambda), e, p), base) << n << " " << e.to_string();
            }
        }
    }
}

TEST(Grassmannian, RigidModulesHaveNonNegativeChi) {
    for (auto kind : {QuiverKind::kronecker, QuiverKind::affineA2}) {
        for (const auto& f : catalog_families(kind)) {
            if (!is_rigid(f)) continue;
            for (const auto& prof : count_all(catalog_module(f))) EXPECT_GE(prof.chi, 0) << describe(f);
        }
    }
}

TEST(Grassmannian, CountAllOrderIsDeterministic) {
    const IntRep rep = catalog_module({FamilyId::affineA21_tube, 3, 1, 1});
    const auto par = count_all(rep, PrimePolicy{}, true);
    const auto seq = count_all(rep, PrimePolicy{}, false);
    ASSERT_EQ(par.size(), seq.size());
    const auto below = dims_below(rep.dim());
    for (std::size_t i = 0; i < par.size(); ++i) {
        EXPECT_EQ(par[i].e, below[i]);
        EXPECT_EQ(par[i].chi, seq[i].chi);
        EXPECT_EQ(par[i].counting_poly.coefficients, seq[i].counting_poly.coefficients);
    }
}
