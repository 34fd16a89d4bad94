#pragma once

// Quiver Grassmannian point counts over prime fields and the Euler
// characteristic read off the interpolated counting polynomial.
//
// Subspaces are visited once each through their reduced row-echelon bases.
// Vertices are processed in topological order: the subspace at a vertex must
// contain the images of the subspaces chosen upstream, so only extensions of
// that image are enumerated and arrow-stability holds by construction. Sinks
// are never enumerated; they contribute a Gaussian binomial.

#include <cstdint>
#include <utility>
#include <vector>

#include "clusterchar/laurent.hpp"
#include "clusterchar/quiver.hpp"

namespace clusterchar {

/// Largest dimension entry the enumeration core accepts.
inline constexpr int kMaxDimEntry = 8;

bool is_prime(std::int64_t n);

/// 2, 3, 5, 7, 11, 13, 17, 19.
std::vector<std::int64_t> default_primes();

/// Which primes to sample. With `auto_extend`, primes beyond the list are
/// appended when the degree bound asks for more samples than it holds.
struct PrimePolicy {
    std::vector<std::int64_t> primes = default_primes();
    bool auto_extend = true;

    /// Default list, or the comma-separated CLUSTERCHAR_PRIMES override
    /// (used as given, without extension).
    static PrimePolicy from_environment();
    /// Parses "2,3,5"; throws InvalidArgument on non-primes.
    static PrimePolicy from_list(const std::string& csv);
};

/// Gaussian binomial [n choose k] at q = p.
BigInt gaussian_binomial(int n, int k, std::int64_t p);

/// Number of subrepresentations N of rep over F_p with dim N = e.
BigInt count_subreps(const IntRep& rep, const DimVector& e, std::int64_t p);

/// sum_i e_i (d_i - e_i): dimension of the ambient product of Grassmannians.
int degree_bound(const DimVector& d, const DimVector& e);

/// Integer polynomial in one variable, coefficients in ascending degree.
struct CountingPolynomial {
    std::vector<BigInt> coefficients;

    BigInt evaluate(const BigInt& x) const;
    std::string to_string() const;  // in the variable q, e.g. "q + 1"
};

struct CountProfile {
    DimVector e;
    int degree_bound = 0;
    std::vector<std::pair<std::int64_t, BigInt>> samples;   ///< used for interpolation
    std::vector<std::pair<std::int64_t, BigInt>> held_out;  ///< verification only
    CountingPolynomial counting_poly;
    BigInt chi;
};

/// Interpolates through the first D+1 admissible primes and checks two more.
/// Throws NonPolynomialCount if a held-out prime disagrees or the interpolant
/// has non-integer coefficients.
CountProfile counting_polynomial(const IntRep& rep, const DimVector& e,
                                 const PrimePolicy& policy = PrimePolicy::from_environment());

/// counting_polynomial evaluated at 1.
BigInt euler_char(const IntRep& rep, const DimVector& e,
                  const PrimePolicy& policy = PrimePolicy::from_environment());

/// Profiles for every 0 <= e <= dim(rep), in dims_below order. Distinct e are
/// counted concurrently when `parallel` is set; the result order is fixed.
std::vector<CountProfile> count_all(const IntRep& rep, const PrimePolicy& policy = PrimePolicy::from_environment(),
                                    bool parallel = true);

}  // namespace clusterchar
