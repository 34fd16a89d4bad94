#pragma once

#include <span>
#include <vector>

#include "clusterchar/laurent.hpp"

namespace clusterchar {

/// The index interval [start, start + length - 1] of q/t variables.
struct ChebWindow {
    int start = 1;
    int length = 0;

    int last() const { return start + length - 1; }
};

/// Generalized Chebyshev polynomial P_n evaluated at arbitrary arguments:
/// P_n(q_1..q_n, t_1..t_n) with P_0 = 1, P_{-1} = 0 and
/// P_k = t_k P_{k-1} - q_k P_{k-2}. q_1 never enters the result.
LaurentPoly cheb_eval(std::span<const LaurentPoly> q, std::span<const LaurentPoly> t);

/// P_n over a window of q/t variables, by the three-term recurrence.
/// Windows of negative length give 0, the empty window gives 1.
LaurentPoly gen_cheb(ChebWindow w);

/// Same polynomial as gen_cheb, computed as the symbolic determinant of the
/// tridiagonal matrix (diagonal t_last..t_start, superdiagonal 1, subdiagonal
/// q_last..q_{start+1}) by cofactor expansion. Kept as an oracle.
LaurentPoly gen_cheb_det(ChebWindow w);

/// Determinant by Laplace expansion along the first row, skipping zero
/// entries. `m` is square and row-major.
LaurentPoly symbolic_determinant(const std::vector<std::vector<LaurentPoly>>& m);

/// Delta_{l,p} = P_{lp}([1,lp]) - q_1 P_{lp-2}([2,lp-1]).
LaurentPoly delta(int l, int p);

/// delta(l, p) with every q-variable set to 1.
LaurentPoly delta_cf(int l, int p);

/// Normalised first-kind polynomial F_n in the generic variable z:
/// F_0 = 2, F_1 = z, F_{n+1} = z F_n - F_{n-1}.
LaurentPoly cheb_first_kind(int n);

/// Second-kind polynomial S_n in z: S_0 = 1, S_1 = z, S_{n+1} = z S_n - S_{n-1}.
LaurentPoly cheb_second_kind(int n);

/// One term of the S-from-F decomposition. index == -1 is the constant term.
struct FTerm {
    int index = 0;
    int multiplier = 0;

    friend bool operator==(const FTerm&, const FTerm&) = default;
};

/// S_n as a non-negative combination of F_n, F_{n-2}, ...; for even n the
/// trailing F_0 (= 2) of the classical identity is replaced by the constant 1.
std::vector<FTerm> s_from_f(int n);

/// Expands an S-from-F decomposition back into a polynomial in z.
LaurentPoly evaluate_f_terms(std::span<const FTerm> terms);

// In P_n the variable q_i couples t_{i-1} and t_i (P_2 = t2*t1 - q2), so the
// shift that keeps P_n subtraction-free divides by the previous t.

/// t_i -> t_i + q_i / t_{i-1} for i = 1..n (the first image involves t_0).
Substitution cc_substitution(int n);

/// t_i -> t_i + u_i + q_i / t_{i-1} for i = 1..n.
Substitution pnpos_substitution(int n);

/// t_i -> t_i [+ u_i] + q_i / t_{i-1} for i = 1..n with t_0 wrapped to t_n.
/// For n = 2 this coincides with the forward shift t_i -> t_i + q_i / t_{i+1}.
Substitution periodic_substitution(int n, bool with_u);

/// The forward shift t_i -> t_i [+ u_i] + q_i / t_{i+1} without wrap-around;
/// the last image involves t_{n+1}. Not positivity-preserving.
Substitution shifted_substitution(int n, bool with_u);

}  // namespace clusterchar
