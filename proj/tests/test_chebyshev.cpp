#include <gtest/gtest.h>

#include "clusterchar/chebyshev.hpp"
#include "clusterchar/errors.hpp"

using namespace clusterchar;

namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }

Substitution all_to(Family f, int n, const LaurentPoly& v) {
    Substitution s;
    for (int i = 1; i <= n; ++i) s.emplace(VarId{f, i}, v);
    return s;
}

}  // namespace

TEST(GenCheb, Examples) {
    EXPECT_EQ(gen_cheb({1, 1}), vars::t(1));
    EXPECT_EQ(gen_cheb({1, 2}).to_string(), "t2*t1 - q2");
    EXPECT_EQ(gen_cheb({1, 3}).to_string(), "t3*t2*t1 - t3*q2 - t1*q3");
    EXPECT_EQ(gen_cheb({1, 0}), LaurentPoly(1));
    EXPECT_EQ(gen_cheb({4, -1}), LaurentPoly());
}

TEST(GenCheb, DeterminantOracle) {
    for (int start = -1; start <= 2; ++start) {
        for (int n = 0; n <= 10; ++n) {
            EXPECT_EQ(gen_cheb({start, n}), gen_cheb_det({start, n})) << "start " << start << " n " << n;
        }
    }
}

TEST(GenCheb, DeterminantOracleByHand) {
    // 3x3 cofactor expansion written out: rows (t3,1,0), (q3,t2,1), (0,q2,t1).
    const LaurentPoly t1 = vars::t(1), t2 = vars::t(2), t3 = vars::t(3), q2 = vars::q(2), q3 = vars::q(3);
    const LaurentPoly det = t3 * (t2 * t1 - q2) - LaurentPoly(1) * (q3 * t1);
    EXPECT_EQ(gen_cheb_det({1, 3}), det);
}

TEST(GenCheb, IndependentOfFirstQ) {
    for (int n = 1; n <= 10; ++n) {
        EXPECT_TRUE(partial_derivative(gen_cheb({1, n}), {Family::q, 1}).is_zero()) << n;
    }
}

TEST(GenCheb, LemmaDpSn) {
    for (int n = 1; n <= 8; ++n) {
        const LaurentPoly pn = gen_cheb({1, n});
        for (int i = 1; i <= n; ++i) {
            EXPECT_EQ(partial_derivative(pn, {Family::t, i}), gen_cheb({1, i - 1}) * gen_cheb({i + 1, n - i}))
                << "n=" << n << " i=" << i;
        }
    }
}

TEST(GenCheb, ThreeTermRelationFromTheLeft) {
    for (int i = 3; i <= 9; ++i) {
        EXPECT_EQ(gen_cheb({1, i - 1}), vars::t(1) * gen_cheb({2, i - 2}) - vars::q(2) * gen_cheb({3, i - 3})) << i;
    }
}

TEST(GenCheb, LemmaCC) {
    for (int n = 1; n <= 6; ++n) {
        EXPECT_TRUE(is_subtraction_free(substitute(gen_cheb({1, n}), cc_substitution(n)))) << n;
    }
}

TEST(GenCheb, ForwardShiftIsNotPositive) {
    // With q_i coupling t_{i-1} and t_i, dividing by the next t leaves -q2.
    Substitution forward = shifted_substitution(2, false);
    const LaurentPoly v = substitute(gen_cheb({1, 2}), forward);
    EXPECT_FALSE(is_subtraction_free(v));
    EXPECT_EQ(v.coefficient(Monomial::variable({Family::q, 2})), -1);
}

TEST(GenCheb, LemmaPnpos) {
    for (int n = 1; n <= 5; ++n) {
        EXPECT_TRUE(is_subtraction_free(substitute(gen_cheb({1, n}), pnpos_substitution(n)))) << n;
    }
}

TEST(Delta, Examples) {
    EXPECT_EQ(delta(1, 2), P("t2*t1-q2-q1"));
    EXPECT_EQ(delta(1, 1), vars::t(1));
    EXPECT_THROW(delta(0, 1), InvalidArgument);
    EXPECT_THROW(delta(1, 0), InvalidArgument);
    EXPECT_EQ(delta_cf(1, 2), P("t2*t1-2"));
    EXPECT_EQ(delta_cf(1, 1), vars::t(1));
    for (int n = 1; n <= 3; ++n)
        for (int p = 1; p <= 3; ++p) EXPECT_EQ(delta_cf(n, p), specialize_ones(delta(n, p), Family::q));
}

TEST(Delta, RemarkAnchors) {
    const LaurentPoly periodic = substitute(delta(1, 2), periodic_substitution(2, false));
    EXPECT_EQ(periodic.to_string(), P("(t1^2*t2^2+q1*q2)/(t1*t2)").to_string());
    const LaurentPoly open = substitute(delta(1, 2), shifted_substitution(2, false));
    EXPECT_EQ(open.to_string(), P("(t1*t2^2*t3+q2*(t1*t2-t2*t3)+q1*q2)/(t2*t3)").to_string());
    EXPECT_FALSE(is_subtraction_free(open));
}

TEST(Delta, PeriodicPositivity) {
    for (int l = 1; l <= 6; ++l) {
        for (int p = 1; l * p <= 6; ++p) {
            for (bool u : {false, true}) {
                EXPECT_TRUE(is_subtraction_free(substitute(delta(l, p), periodic_substitution(l * p, u))))
                    << "l=" << l << " p=" << p << " u=" << u;
            }
        }
    }
}

TEST(Delta, DerivativeClaim) {
    for (int l = 1; l <= 6; ++l) {
        for (int p = 1; l * p <= 6; ++p) {
            const int n = l * p;
            const LaurentPoly d = delta(l, p);
            for (int i = 1; i <= n; ++i) {
                // Relabel the window [1, n-1] to the cyclic run i+1, ..., n, 1, ..., i-1.
                Substitution relabel;
                for (int k = 1; k < n; ++k) {
                    const int j = (i - 1 + k) % n + 1;
                    relabel.emplace(VarId{Family::q, k}, vars::q(j));
                    relabel.emplace(VarId{Family::t, k}, vars::t(j));
                }
                EXPECT_EQ(partial_derivative(d, {Family::t, i}), substitute(gen_cheb({1, n - 1}), relabel))
                    << "l=" << l << " p=" << p << " i=" << i;
            }
        }
    }
}

TEST(OneVariable, FirstKind) {
    EXPECT_EQ(cheb_first_kind(0), LaurentPoly(2));
    EXPECT_EQ(cheb_first_kind(2), P("z^2-2"));
    EXPECT_EQ(cheb_first_kind(3), P("z^3-3*z"));
}

TEST(OneVariable, SecondKind) {
    EXPECT_EQ(cheb_second_kind(2), P("z^2-1"));
    EXPECT_EQ(cheb_second_kind(3), P("z^3-2*z"));
    EXPECT_EQ(cheb_second_kind(4), P("z^4-3*z^2+1"));
}

TEST(OneVariable, SecondKindIsSpecializedP) {
    for (int n = 0; n <= 10; ++n) {
        Substitution s = all_to(Family::q, n, 1);
        s.merge(all_to(Family::t, n, vars::z()));
        EXPECT_EQ(substitute(gen_cheb({1, n}), s), cheb_second_kind(n)) << n;
    }
}

TEST(OneVariable, SFromF) {
    EXPECT_EQ(s_from_f(3), (std::vector<FTerm>{{3, 1}, {1, 1}}));
    EXPECT_EQ(s_from_f(4), (std::vector<FTerm>{{4, 1}, {2, 1}, {-1, 1}}));
    EXPECT_EQ(s_from_f(0), (std::vector<FTerm>{{-1, 1}}));
    for (int n = 0; n <= 12; ++n) {
        const auto terms = s_from_f(n);
        EXPECT_EQ(evaluate_f_terms(terms), cheb_second_kind(n)) << n;
        for (const auto& t : terms) EXPECT_GE(t.multiplier, 0);
    }
}

TEST(OneVariable, UncorrectedSumOvershootsByOne) {
    for (int n = 0; n <= 12; n += 2) {
        LaurentPoly literal;
        for (int k = 0; k <= n / 2; ++k) literal += cheb_first_kind(n - 2 * k);
        EXPECT_EQ(literal - cheb_second_kind(n), LaurentPoly(1)) << n;
    }
}
