#include "clusterchar/bases.hpp"

#include "clusterchar/character.hpp"
#include "clusterchar/chebyshev.hpp"
#include "clusterchar/errors.hpp"
#include "clusterchar/mutation.hpp"

namespace clusterchar {

BasisKind parse_basis_kind(const std::string& name) {
    if (name == "B") return BasisKind::B;
    if (name == "C") return BasisKind::C;
    if (name == "G") return BasisKind::G;
    throw InvalidArgument("unknown basis kind '" + name + "' (expected B, C or G)");
}

std::string basis_kind_name(BasisKind kind) {
    switch (kind) {
        case BasisKind::B: return "B";
        case BasisKind::C: return "C";
        case BasisKind::G: return "G";
    }
    return "?";
}

LaurentPoly basis_polynomial(BasisKind kind, int n) {
    if (n < 0) throw InvalidArgument("basis index must be non-negative");
    switch (kind) {
        case BasisKind::B: return cheb_first_kind(n);
        case BasisKind::C: return cheb_second_kind(n);
        case BasisKind::G: return vars::z().pow(static_cast<unsigned>(n));
    }
    return {};
}

LaurentPoly x_delta(QuiverKind q, std::int64_t lambda, const PrimePolicy& policy) {
    const FamilyId id = q == QuiverKind::kronecker ? FamilyId::kronecker_homogeneous : FamilyId::affineA21_homogeneous;
    return cf_cluster_char(catalog_module({id, 1, lambda, 1}), policy);
}

std::string describe(const RegularPart& r) {
    if (r.empty()) return "0";
    std::string s;
    for (const auto& f : r) s += (s.empty() ? "" : " + ") + describe(f);
    return s;
}

std::vector<RegularPart> catalog_rigid_regular(QuiverKind q) {
    if (q == QuiverKind::kronecker) return {};
    const ModuleFamily r1{FamilyId::affineA21_tube, 1, 1, 1};
    const ModuleFamily r2{FamilyId::affineA21_tube, 1, 1, 2};
    return {{r1}, {r2}, {r1, r1}, {r2, r2}};
}

LaurentPoly regular_part_char(QuiverKind q, const RegularPart& r, const PrimePolicy& policy) {
    if (r.empty()) return 1;
    IntRep sum = IntRep::zero(catalog_quiver(q));
    for (const auto& f : r) {
        if (quiver_kind_of(f.id) != q) throw QuiverMismatch(describe(f) + " does not live on " + quiver_kind_name(q));
        sum = direct_sum(sum, catalog_module(f));
    }
    return cf_cluster_char(sum, policy);
}

BasisElement basis_element(QuiverKind q, BasisKind kind, int n, const RegularPart& r, const PrimePolicy& policy) {
    if (n < 0) throw InvalidArgument("basis index must be non-negative");
    BasisElement el{kind, n, r, {}};
    LaurentPoly head = 1;
    if (n > 0) head = substitute(basis_polynomial(kind, n), {{VarId{Family::generic, 0}, x_delta(q, 1, policy)}});
    el.value = head * regular_part_char(q, r, policy);
    return el;
}

bool PositivityReport::all_positive() const {
    for (const auto& e : entries) {
        if (!e.subtraction_free) return false;
    }
    return true;
}

namespace {

PositivityEntry check_entry(std::string label, LaurentPoly value) {
    PositivityEntry e;
    e.label = std::move(label);
    e.negative = negative_terms(value);
    e.subtraction_free = e.negative.empty();
    e.value = std::move(value);
    return e;
}

}  // namespace

PositivityReport verify_positivity(QuiverKind q, BasisKind kind, int max_n, int monomial_depth,
                                   const PrimePolicy& policy) {
    PositivityReport report;
    std::vector<RegularPart> parts{{}};
    for (auto& r : catalog_rigid_regular(q)) parts.push_back(std::move(r));

    const LaurentPoly xd = x_delta(q, 1, policy);
    std::vector<LaurentPoly> regular_chars;
    for (const auto& r : parts) regular_chars.push_back(regular_part_char(q, r, policy));

    for (int n = 0; n <= max_n; ++n) {
        const LaurentPoly head =
            n == 0 ? LaurentPoly(1) : substitute(basis_polynomial(kind, n), {{VarId{Family::generic, 0}, xd}});
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (n == 0 && parts[k].empty()) continue;
            report.entries.push_back(check_entry(
                basis_kind_name(kind) + " n=" + std::to_string(n) + " R=" + describe(parts[k]), head * regular_chars[k]));
        }
    }
    std::size_t idx = 0;
    for (auto& m : cluster_monomials_up_to(catalog_quiver(q), monomial_depth, 2, false)) {
        report.entries.push_back(check_entry("cluster monomial #" + std::to_string(++idx), std::move(m)));
    }
    return report;
}

std::vector<BigInt> change_of_basis(BasisKind source, BasisKind target, int n) {
    if (n < 0) throw InvalidArgument("basis index must be non-negative");
    auto target_poly = [&](int k) { return k == 0 ? LaurentPoly(1) : basis_polynomial(target, k); };
    LaurentPoly rem = source == BasisKind::B && n == 0 ? LaurentPoly(1) : basis_polynomial(source, n);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
    for (int k = n; k >= 0; --k) {
        const Monomial zk = k == 0 ? Monomial{} : Monomial::variable({Family::generic, 0}, k);
        const BigInt c = rem.coefficient(zk);
        coeffs[static_cast<std::size_t>(k)] = c;
        if (c != 0) rem -= target_poly(k) * LaurentPoly(c);
    }
    if (!rem.is_zero()) throw InvalidArgument("change of basis left remainder " + rem.to_string());
    return coeffs;
}

}  // namespace clusterchar
