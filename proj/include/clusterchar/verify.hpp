#pragma once

// Instance-by-instance checks of the identities and positivity statements,
// shared by the CLI `verify` verb and the test suites.

#include <string>
#include <vector>

#include "clusterchar/bases.hpp"
#include "clusterchar/grassmannian.hpp"
#include "clusterchar/quiver.hpp"

namespace clusterchar {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

using CheckList = std::vector<CheckResult>;

bool all_pass(const CheckList& checks);

/// dP_n/dt_i = P_{i-1}([1,i-1]) P_{n-i}([i+1,n]) for i = 1..n.
CheckList verify_lemma_dpsn(int n);
/// P_k under t_i -> t_i + q_i/t_{i-1} is subtraction-free, k = 1..n.
CheckList verify_lemma_cc(int n);
/// P_k under t_i -> t_i + u_i + q_i/t_{i-1} is subtraction-free, k = 1..n.
CheckList verify_lemma_pnpos(int n);
/// Delta_{l,p} under the periodic substitution (with u) is subtraction-free, lp <= max_lp.
CheckList verify_delta_positivity(int max_lp);
/// dDelta_{l,p}/dt_i = P_{lp-1} over the cyclic window after i, lp <= max_lp.
CheckList verify_delta_claim(int max_lp);
/// The S-from-F decomposition reconstructs S_k with non-negative multipliers, k = 0..n.
CheckList verify_s_from_f(int n);
/// L(M,0) L(tau M, dim tau M) = y^{dim tau M} on every catalog tube module.
CheckList verify_lemma_key(QuiverKind q, const PrimePolicy& policy = PrimePolicy::from_environment());
/// Characters of tube modules against the Chebyshev evaluation at their
/// quasi-simples, with and without coefficients.
CheckList verify_char_cheb(QuiverKind q, const PrimePolicy& policy = PrimePolicy::from_environment());
/// Kronecker cluster variables from mutation against characters of the
/// preprojective/preinjective catalog modules.
CheckList verify_char_mutation(const PrimePolicy& policy = PrimePolicy::from_environment());
/// Subtraction-freeness of every basis element with n <= max_n.
CheckList verify_basis_positivity(QuiverKind q, BasisKind kind, int max_n,
                                  const PrimePolicy& policy = PrimePolicy::from_environment());

/// X_{R_i} = tau_i + nu_i + y^{dim R_i}/tau_{i+1} on the tubes of q, and
/// P_n of the rewritten quasi-simples reproduces the tube characters.
CheckList verify_xm_tau(QuiverKind q, const PrimePolicy& policy = PrimePolicy::from_environment());
/// graded_coefficient(X_M, e) at x = 1 equals chi(Gr_e(M)) for every catalog module.
CheckList verify_graded_chi(QuiverKind q, const PrimePolicy& policy = PrimePolicy::from_environment());
/// cf character subtraction-free for catalog modules with dim entries <= max_entry.
CheckList verify_catalog_positivity(QuiverKind q, int max_entry,
                                    const PrimePolicy& policy = PrimePolicy::from_environment());
/// X_{M^(n)} = S_n(X_M) for the Kronecker homogeneous tube, n <= max_n.
CheckList verify_tame(int max_n, const PrimePolicy& policy = PrimePolicy::from_environment());
/// F_n(X_delta) subtraction-free on the Kronecker quiver, and equal to the
/// coefficient-free Delta_{n,2} at the rank-2 affine quasi-simples, n <= max_n.
CheckList verify_fnpos(int max_n, const PrimePolicy& policy = PrimePolicy::from_environment());
/// Non-negative integer triangularity G -> C and C -> B for n <= max_n.
CheckList verify_triangularity(int max_n);

/// Names accepted by run_check, e.g. "lemma-cc" or "basis-pos".
const std::vector<std::string>& check_names();

/// Dispatches by name. `n` is the size bound (max n, max lp or max entry);
/// `q` and `kind` are used by the checks that need them.
CheckList run_check(const std::string& what, int n, QuiverKind q = QuiverKind::kronecker,
                    BasisKind kind = BasisKind::B);

}  // namespace clusterchar
