#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace clusterchar {

/// Per-vertex non-negative integers, indexed like Quiver::vertices().
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::vector<int> values);
    DimVector(std::initializer_list<int> values) : DimVector(std::vector<int>(values)) {}

    static DimVector zero(std::size_t m) { return DimVector(std::vector<int>(m, 0)); }
    static DimVector unit(std::size_t m, std::size_t i);

    std::size_t size() const { return values_.size(); }
    int operator[](std::size_t i) const { return values_[i]; }
    const std::vector<int>& values() const { return values_; }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    bool is_zero() const;
    int total() const;
    /// Componentwise <=.
    bool fits_in(const DimVector& bound) const;

    DimVector operator+(const DimVector& other) const;
    /// Componentwise difference; throws DimOutOfRange if an entry goes negative.
    DimVector operator-(const DimVector& other) const;

    /// `(1,0,2)`.
    std::string to_string() const;

    friend auto operator<=>(const DimVector&, const DimVector&) = default;
    friend bool operator==(const DimVector&, const DimVector&) = default;

private:
    std::vector<int> values_;
};

/// Every e with 0 <= e <= d, in lexicographic order.
std::vector<DimVector> dims_below(const DimVector& d);

struct Arrow {
    std::size_t src = 0;
    std::size_t tgt = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite connected acyclic quiver without loops; validated on construction.
class Quiver {
public:
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    /// Arrows given by vertex names.
    static Quiver from_names(std::vector<std::string> vertices,
                             const std::vector<std::pair<std::string, std::string>>& arrows);

    /// 1 => 2 (two parallel arrows).
    static Quiver kronecker();
    /// Arrows a: 1 -> 2, b: 2 -> 3, c: 1 -> 3.
    static Quiver affine_a21();

    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t index_of(const std::string& name) const;

    /// Number of arrows i -> j.
    int arrow_count(std::size_t i, std::size_t j) const;
    /// Vertices ordered so that every arrow goes forward.
    const std::vector<std::size_t>& topological_order() const { return topo_; }

    Quiver opposite() const;

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::size_t> topo_;
};

/// <d, e> = sum_i d_i e_i - sum_{a: i -> j} d_i e_j.
int euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

/// Dimension vectors of the indecomposable projectives P(i) (paths out of i).
std::vector<DimVector> projective_dims(const Quiver& q);

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols_if_empty = 0);
    static IntMatrix identity(std::size_t n);
    /// n x n Jordan block with eigenvalue lambda (ones on the superdiagonal).
    static IntMatrix jordan(std::size_t n, std::int64_t lambda);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::vector<std::vector<std::int64_t>> to_rows() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// A representation with integer matrices, one per arrow, of shape
/// dim(target) x dim(source). Reducible modulo every prime.
class IntRep {
public:
    IntRep(Quiver quiver, DimVector dim, std::vector<IntMatrix> matrices,
           std::vector<std::int64_t> excluded_primes = {});

    static IntRep zero(const Quiver& q);

    const Quiver& quiver() const { return quiver_; }
    const DimVector& dim() const { return dim_; }
    const std::vector<IntMatrix>& matrices() const { return matrices_; }
    const IntMatrix& matrix(std::size_t arrow) const { return matrices_.at(arrow); }
    /// Primes at which reduction is not meaningful for this representation.
    const std::vector<std::int64_t>& excluded_primes() const { return excluded_; }

    friend bool operator==(const IntRep&, const IntRep&) = default;

private:
    Quiver quiver_;
    DimVector dim_;
    std::vector<IntMatrix> matrices_;
    std::vector<std::int64_t> excluded_;
};

/// Block-diagonal sum; throws QuiverMismatch for different quivers.
IntRep direct_sum(const IntRep& a, const IntRep& b);

// ------------------------------------------------------------------ catalog

enum class QuiverKind { kronecker, affineA2 };

Quiver catalog_quiver(QuiverKind kind);
QuiverKind parse_quiver_kind(const std::string& name);
std::string quiver_kind_name(QuiverKind kind);

enum class FamilyId {
    kronecker_homogeneous,    ///< dim (n,n), arrows (I_n, J_n(lambda))
    kronecker_preprojective,  ///< dim (k,k+1); k = 0,1 are the projectives
    kronecker_preinjective,   ///< dim (k+1,k); k = 0,1 are the injectives
    affineA21_tube,           ///< R_i^(n) in the rank-2 exceptional tube
    affineA21_homogeneous,    ///< dim (n,n,n), arrows (I_n, I_n, J_n(lambda))
};

std::string family_id_name(FamilyId id);
FamilyId parse_family_id(const std::string& name);

/// A catalog module. `n` is the quasi-length for tube families and the
/// index k for preprojective/preinjective families; `index` is the tube
/// index i in {1, 2} (only affineA21_tube uses it).
struct ModuleFamily {
    FamilyId id = FamilyId::kronecker_homogeneous;
    int n = 1;
    std::int64_t lambda = 1;
    int index = 1;

    friend bool operator==(const ModuleFamily&, const ModuleFamily&) = default;
};

std::string describe(const ModuleFamily& f);
QuiverKind quiver_kind_of(FamilyId id);

/// Explicit matrices for a catalog module; throws InvalidParams.
IntRep catalog_module(const ModuleFamily& f);

/// Rank of the tube containing the module: 1 homogeneous, 2 for the
/// exceptional affine tube, 0 for preprojective/preinjective modules.
int tube_rank(FamilyId id);

/// Auslander-Reiten translate from catalog combinatorics; nullopt for
/// projective modules.
std::optional<ModuleFamily> tau(const ModuleFamily& f);

bool is_projective(const ModuleFamily& f);
bool is_rigid(const ModuleFamily& f);

/// Quasi-composition factors M_1 .. M_n of a tube module (M_1 the
/// quasi-socle, tau M_i = M_{i-1}). Empty for non-regular families.
std::vector<ModuleFamily> quasi_composition_factors(const ModuleFamily& f);

/// The fixed desk-scale catalog for a quiver.
std::vector<ModuleFamily> catalog_families(QuiverKind kind);

}  // namespace clusterchar
