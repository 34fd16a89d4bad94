#pragma once

// Cluster characters with principal coefficients,
//   X_M = sum_e chi(Gr_e(M)) y^e prod_i x_i^{-<e,S_i> - <S_i,dim M - e>},
// computed term by term from Grassmannian Euler characteristics.

#include <span>
#include <vector>

#include "clusterchar/grassmannian.hpp"
#include "clusterchar/laurent.hpp"
#include "clusterchar/quiver.hpp"

namespace clusterchar {

/// y^e prod_i x_i^{-<e,S_i> - <S_i,d-e>}: the term L(M,e) without its chi factor.
Monomial character_monomial(const Quiver& q, const DimVector& d, const DimVector& e);

/// L(M,e) = chi(Gr_e(M)) * character_monomial(...).
LaurentPoly term_L(const IntRep& rep, const DimVector& e, const PrimePolicy& policy = PrimePolicy::from_environment());

struct CharTerm {
    DimVector e;
    BigInt chi;
    LaurentPoly term;
};

struct CharTermTable {
    DimVector dim;
    std::vector<CharTerm> terms;  // dims_below order, zero terms included
    LaurentPoly total;

    const CharTerm& at(const DimVector& e) const;
};

CharTermTable char_table(const IntRep& rep, const PrimePolicy& policy = PrimePolicy::from_environment(),
                         bool parallel = true);

LaurentPoly cluster_char(const IntRep& rep, const PrimePolicy& policy = PrimePolicy::from_environment());
/// cluster_char with every y_i set to 1.
LaurentPoly cf_cluster_char(const IntRep& rep, const PrimePolicy& policy = PrimePolicy::from_environment());

struct LemmaKeyReport {
    LaurentPoly l_m_zero;    // L(M,0)
    LaurentPoly l_tau_top;   // L(tau M, dim tau M)
    LaurentPoly product;     // their product
    LaurentPoly expected;    // y^{dim tau M}
    bool holds = false;
};

/// Checks L(M,0) * L(tau M, dim tau M) = y^{dim tau M}. Throws
/// PreconditionViolation when rep has the dimension vector of an
/// indecomposable projective, IdentityFailed when the two sides differ.
LemmaKeyReport check_lemma_key(const IntRep& rep, const IntRep& tau_rep,
                               const PrimePolicy& policy = PrimePolicy::from_environment());

/// Dimension vector and character of one quasi-simple of a tube.
struct QuasiSimple {
    DimVector dim;
    LaurentPoly character;
};

/// P_n(y^{dim R_1}, ..., y^{dim R_n}, X_{R_1}, ..., X_{R_n}). The list is read
/// cyclically, so a tube of rank p may be given by its p quasi-simples.
/// With `coefficient_free` the q-arguments are 1 instead; the characters are
/// then expected to be coefficient-free as well.
LaurentPoly char_via_chebyshev(std::span<const QuasiSimple> quasi_simples, int n, bool coefficient_free = false);

/// The pieces of X_{R} for a quasi-simple R: tau = L(R,0), nu = the terms with
/// 0 < e < dim R, top = L(R, dim R).
struct TauNuSplit {
    LaurentPoly tau;
    LaurentPoly nu;
    LaurentPoly top;
};

TauNuSplit tau_nu_split(const CharTermTable& table);

/// X_{R_i} rewritten as tau_i + nu_i + y^{dim R_i} / tau_{i+1} (indices cyclic).
/// Throws IdentityFailed if the rewrite does not reproduce X_{R_i}.
std::vector<LaurentPoly> xm_tau_rewrite(std::span<const CharTermTable> quasi_simples);

}  // namespace clusterchar
