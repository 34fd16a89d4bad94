#pragma once

// The three affine bases at desk scale: generic (B, via F_n), dual
// semicanonical (C, via S_n) and the power basis (G, via z^n), each element
// being a polynomial in X_delta times the character of a rigid regular module.

#include <optional>
#include <string>
#include <vector>

#include "clusterchar/grassmannian.hpp"
#include "clusterchar/laurent.hpp"
#include "clusterchar/quiver.hpp"

namespace clusterchar {

enum class BasisKind { B, C, G };

BasisKind parse_basis_kind(const std::string& name);
std::string basis_kind_name(BasisKind kind);

/// F_n, S_n or z^n in the generic variable z.
LaurentPoly basis_polynomial(BasisKind kind, int n);

/// Coefficient-free character of the homogeneous quasi-simple at lambda.
LaurentPoly x_delta(QuiverKind q, std::int64_t lambda = 1,
                    const PrimePolicy& policy = PrimePolicy::from_environment());

/// A rigid regular module as a list of catalog summands (empty = zero module).
using RegularPart = std::vector<ModuleFamily>;

std::string describe(const RegularPart& r);

/// Rigid regular modules used for the catalog: none for the Kronecker quiver
/// (all its tubes are homogeneous); R_1, R_2, R_1+R_1, R_2+R_2 for affine A2.
std::vector<RegularPart> catalog_rigid_regular(QuiverKind q);

/// Coefficient-free character of the direct sum of the summands.
LaurentPoly regular_part_char(QuiverKind q, const RegularPart& r,
                              const PrimePolicy& policy = PrimePolicy::from_environment());

struct BasisElement {
    BasisKind kind = BasisKind::B;
    int n = 0;
    RegularPart regular_part;
    LaurentPoly value;
};

BasisElement basis_element(QuiverKind q, BasisKind kind, int n, const RegularPart& r = {},
                           const PrimePolicy& policy = PrimePolicy::from_environment());

struct PositivityEntry {
    std::string label;
    LaurentPoly value;
    bool subtraction_free = true;
    std::vector<std::pair<Monomial, BigInt>> negative;
};

struct PositivityReport {
    std::vector<PositivityEntry> entries;
    bool all_positive() const;
};

/// Every basis element with n <= max_n over the catalog rigid regular parts,
/// plus the n = 0 stratum: the regular parts themselves and the cluster
/// monomials (degree <= 2) of seeds within mutation depth `monomial_depth`.
PositivityReport verify_positivity(QuiverKind q, BasisKind kind, int max_n, int monomial_depth = 4,
                                   const PrimePolicy& policy = PrimePolicy::from_environment());

/// Coefficients c_0..c_n with source_n = sum_k c_k target_k in the z-variable,
/// where the target family is S_k (kind C), z^k (kind G) or F_k with F_0
/// replaced by 1 (kind B). Exact; throws InvalidArgument if some c_k is not an
/// integer.
std::vector<BigInt> change_of_basis(BasisKind source, BasisKind target, int n);

}  // namespace clusterchar
