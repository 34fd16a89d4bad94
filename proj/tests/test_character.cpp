#include <gtest/gtest.h>

#include "clusterchar/character.hpp"
#include "clusterchar/chebyshev.hpp"
#include "clusterchar/errors.hpp"
#include "clusterchar/verify.hpp"

using namespace clusterchar;

namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }

IntRep kron(int n, std::int64_t lambda = 1) { return catalog_module({FamilyId::kronecker_homogeneous, n, lambda, 1}); }
IntRep tube(int n, int i) { return catalog_module({FamilyId::affineA21_tube, n, 1, i}); }

void expect_all_pass(const CheckList& checks) {
    EXPECT_FALSE(checks.empty());
    for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
}

}  // namespace

TEST(Character, TermExamples) {
    EXPECT_EQ(term_L(kron(1), {0, 0}), P("x1*x2^-1"));
    EXPECT_EQ(term_L(kron(1), {1, 1}), P("y1*y2*x1^-1*x2"));
    EXPECT_EQ(term_L(kron(1), {0, 1}), P("y2*x1^-1*x2^-1"));
    EXPECT_TRUE(term_L(kron(1), {1, 0}).is_zero());
    EXPECT_THROW(term_L(kron(1), {2, 0}), DimOutOfRange);
}

TEST(Character, MonomialByHand) {
    // Exponent of x_i is -<e,S_i> - <S_i,d-e>; for the Kronecker quiver
    // <a,b> = a1 b1 + a2 b2 - 2 a1 b2.
    const Quiver q = Quiver::kronecker();
    for (const auto& d : dims_below({3, 3})) {
        for (const auto& e : dims_below(d)) {
            const int f1 = d[0] - e[0], f2 = d[1] - e[1];
            const int x1 = -(e[0]) - (f1 - 2 * f2);
            const int x2 = -(e[1] - 2 * e[0]) - f2;
            const Monomial expect = Monomial::from_entries({{{Family::x, 1}, x1},
                                                            {{Family::x, 2}, x2},
                                                            {{Family::y, 1}, e[0]},
                                                            {{Family::y, 2}, e[1]}});
            EXPECT_EQ(character_monomial(q, d, e), expect) << d.to_string() << " " << e.to_string();
        }
    }
}

TEST(Character, ClusterCharExamples) {
    EXPECT_EQ(cluster_char(IntRep::zero(Quiver::kronecker())), LaurentPoly(1));
    EXPECT_EQ(cf_cluster_char(IntRep::zero(Quiver::affine_a21())), LaurentPoly(1));
    EXPECT_EQ(cluster_char(kron(1)), P("x1*x2^-1 + y2*x1^-1*x2^-1 + y1*y2*x1^-1*x2"));
    EXPECT_EQ(cf_cluster_char(kron(1)), P("(x1^2+x2^2+1)/(x1*x2)"));
}

TEST(Character, SimpleProjectiveMatchesMutation) {
    // S2 is the simple projective of the Kronecker quiver; on the opposite
    // quiver's seed it is the variable obtained by mutating at vertex 2.
    const IntRep s2 = catalog_module({FamilyId::kronecker_preprojective, 0, 1, 1});
    EXPECT_EQ(s2.dim(), DimVector({0, 1}));
    const LaurentPoly x = cluster_char(s2);
    EXPECT_EQ(x, P("(x1^2 + y2)/x2"));
}

TEST(Character, Multiplicative) {
    const std::vector<std::pair<IntRep, IntRep>> pairs{
        {kron(1, 1), kron(1, 2)},
        {kron(1, 1), catalog_module({FamilyId::kronecker_preinjective, 1, 1, 1})},
        {tube(1, 1), tube(2, 2)},
        {tube(1, 2), catalog_module({FamilyId::affineA21_homogeneous, 1, 1, 1})},
    };
    for (const auto& [a, b] : pairs) {
        EXPECT_EQ(cluster_char(direct_sum(a, b)), cluster_char(a) * cluster_char(b));
        EXPECT_EQ(cf_cluster_char(direct_sum(a, b)), cf_cluster_char(a) * cf_cluster_char(b));
    }
}

TEST(Character, NoNegativeYExponents) {
    for (const auto& f : catalog_families(QuiverKind::affineA2)) {
        const LaurentPoly x = cluster_char(catalog_module(f));
        for (const auto& [m, c] : x.terms()) {
            for (const auto& [v, e] : m.entries())
                if (v.family == Family::y) EXPECT_GE(e, 0);
        }
    }
}

TEST(Character, TableMatchesTerms) {
    const IntRep m = tube(3, 1);
    const CharTermTable t = char_table(m);
    LaurentPoly sum;
    for (const auto& term : t.terms) {
        EXPECT_EQ(term.term, term_L(m, term.e));
        sum += term.term;
    }
    EXPECT_EQ(sum, t.total);
    EXPECT_EQ(t.at({0, 0, 0}).chi, 1);
}

TEST(Character, LemmaKey) {
    const auto r = check_lemma_key(kron(1), kron(1));
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.l_m_zero, P("x1*x2^-1"));
    EXPECT_EQ(r.product, P("y1*y2"));
    EXPECT_EQ(check_lemma_key(tube(1, 1), tube(1, 2)).expected, P("y2"));
    EXPECT_EQ(check_lemma_key(tube(1, 2), tube(1, 1)).expected, P("y1*y3"));
    const IntRep proj = catalog_module({FamilyId::kronecker_preprojective, 1, 1, 1});
    EXPECT_THROW(check_lemma_key(proj, proj), PreconditionViolation);
    EXPECT_THROW(check_lemma_key(kron(1), tube(1, 1)), QuiverMismatch);
    EXPECT_THROW(check_lemma_key(tube(1, 1), tube(1, 1)), IdentityFailed);
}

TEST(Character, LemmaKeyOnCatalog) {
    expect_all_pass(verify_lemma_key(QuiverKind::kronecker));
    expect_all_pass(verify_lemma_key(QuiverKind::affineA2));
}

TEST(Character, ChebyshevExamples) {
    const LaurentPoly xd = cluster_char(kron(1));
    const std::vector<QuasiSimple> one{{{1, 1}, xd}};
    EXPECT_EQ(char_via_chebyshev(one, 1), xd);
    // The coefficient-free route takes coefficient-free quasi-simple characters.
    const std::vector<QuasiSimple> one_cf{{{1, 1}, cf_cluster_char(kron(1))}};
    EXPECT_EQ(char_via_chebyshev(one_cf, 2, true), cf_cluster_char(kron(2)));
    EXPECT_EQ(cf_cluster_char(kron(2)), cf_cluster_char(kron(1)).pow(2) - LaurentPoly(1));
    EXPECT_EQ(char_via_chebyshev(one, 2), cluster_char(kron(2)));
    const std::vector<QuasiSimple> rank2{{{1, 0, 1}, cluster_char(tube(1, 1))}, {{0, 1, 0}, cluster_char(tube(1, 2))}};
    EXPECT_EQ(char_via_chebyshev(rank2, 2), cluster_char(tube(2, 1)));
    const std::vector<QuasiSimple> rank2_cf{{{1, 0, 1}, cf_cluster_char(tube(1, 1))},
                                            {{0, 1, 0}, cf_cluster_char(tube(1, 2))}};
    EXPECT_EQ(char_via_chebyshev(rank2_cf, 2, true), cf_cluster_char(tube(2, 1)));
}

TEST(Character, ChebyshevOnCatalog) {
    expect_all_pass(verify_char_cheb(QuiverKind::affineA2));
    expect_all_pass(verify_char_cheb(QuiverKind::kronecker));
}

TEST(Character, XMTauRewrite) {
    expect_all_pass(verify_xm_tau(QuiverKind::kronecker));
    expect_all_pass(verify_xm_tau(QuiverKind::affineA2));
    const CharTermTable t = char_table(kron(1));
    const TauNuSplit s = tau_nu_split(t);
    EXPECT_EQ(s.tau, P("x1*x2^-1"));
    EXPECT_EQ(s.nu, P("y2*x1^-1*x2^-1"));
    EXPECT_EQ(s.top, P("y1*y2*x1^-1*x2"));
}

TEST(Character, GradedComponentsAreEulerCharacteristics) {
    expect_all_pass(verify_graded_chi(QuiverKind::kronecker));
    expect_all_pass(verify_graded_chi(QuiverKind::affineA2));
}

TEST(Character, Positivity) {
    expect_all_pass(verify_catalog_positivity(QuiverKind::kronecker, 4));
    expect_all_pass(verify_catalog_positivity(QuiverKind::affineA2, 4));
    // Exceptional tube with coefficients, quasi-length <= 3.
    for (int i : {1, 2})
        for (int n = 1; n <= 3; ++n) EXPECT_TRUE(is_subtraction_free(cluster_char(tube(n, i)))) << n << " " << i;
}

TEST(Character, Mutation) { expect_all_pass(verify_char_mutation()); }
