#include "clusterchar/character.hpp"

#include <algorithm>

#include "clusterchar/chebyshev.hpp"
#include "clusterchar/errors.hpp"

namespace clusterchar {

namespace {

Monomial y_power(const DimVector& d) {
    std::vector<Monomial::Entry> entries;
    for (std::size_t i = 0; i < d.size(); ++i) entries.emplace_back(VarId{Family::y, static_cast<int>(i + 1)}, d[i]);
    return Monomial::from_entries(std::move(entries));
}

Monomial inverse_of_unit_monomial(const LaurentPoly& p, const char* what) {
    auto m = p.as_monomial();
    if (!m || m->second != 1) throw IdentityFailed(std::string(what) + " is not a monomial: " + p.to_string());
    return m->first.inverse();
}

}  // namespace

Monomial character_monomial(const Quiver& q, const DimVector& d, const DimVector& e) {
    const std::size_t m = q.vertex_count();
    if (d.size() != m || e.size() != m) throw DimensionMismatch("dimension vectors do not match the quiver");
    const DimVector rest = d - e;
    std::vector<Monomial::Entry> entries;
    for (std::size_t i = 0; i < m; ++i) {
        const DimVector s = DimVector::unit(m, i);
        entries.emplace_back(VarId{Family::y, static_cast<int>(i + 1)}, e[i]);
        entries.emplace_back(VarId{Family::x, static_cast<int>(i + 1)}, -euler_form(q, e, s) - euler_form(q, s, rest));
    }
    return Monomial::from_entries(std::move(entries));
}

LaurentPoly term_L(const IntRep& rep, const DimVector& e, const PrimePolicy& policy) {
    const BigInt chi = euler_char(rep, e, policy);
    if (chi == 0) return {};
    return LaurentPoly::monomial(character_monomial(rep.quiver(), rep.dim(), e), chi);
}

const CharTerm& CharTermTable::at(const DimVector& e) const {
    for (const auto& t : terms) {
        if (t.e == e) return t;
    }
    throw DimOutOfRange("no term for e = " + e.to_string());
}

CharTermTable char_table(const IntRep& rep, const PrimePolicy& policy, bool parallel) {
    CharTermTable table;
    table.dim = rep.dim();
    for (auto& prof : count_all(rep, policy, parallel)) {
        CharTerm t{prof.e, prof.chi, {}};
        if (prof.chi != 0) t.term = LaurentPoly::monomial(character_monomial(rep.quiver(), rep.dim(), prof.e), prof.chi);
        table.total += t.term;
        table.terms.push_back(std::move(t));
    }
    return table;
}

LaurentPoly cluster_char(const IntRep& rep, const PrimePolicy& policy) { return char_table(rep, policy).total; }

LaurentPoly cf_cluster_char(const IntRep& rep, const PrimePolicy& policy) {
    return specialize_ones(cluster_char(rep, policy), Family::y);
}

LemmaKeyReport check_lemma_key(const IntRep& rep, const IntRep& tau_rep, const PrimePolicy& policy) {
    if (!(rep.quiver() == tau_rep.quiver())) throw QuiverMismatch("M and tau M live on different quivers");
    const auto proj = projective_dims(rep.quiver());
    if (std::find(proj.begin(), proj.end(), rep.dim()) != proj.end())
        throw PreconditionViolation("module of dimension " + rep.dim().to_string()
                                    + " is projective; tau M is not defined");
    LemmaKeyReport r;
    r.l_m_zero = term_L(rep, DimVector::zero(rep.dim().size()), policy);
    r.l_tau_top = term_L(tau_rep, tau_rep.dim(), policy);
    r.product = r.l_m_zero * r.l_tau_top;
    r.expected = LaurentPoly::monomial(y_power(tau_rep.dim()));
    r.holds = r.product == r.expected;
    if (!r.holds)
        throw IdentityFailed("L(M,0) = " + r.l_m_zero.to_string() + ", L(tau M, dim tau M) = " + r.l_tau_top.to_string()
                             + ": product " + r.product.to_string() + " differs from " + r.expected.to_string());
    return r;
}

LaurentPoly char_via_chebyshev(std::span<const QuasiSimple> quasi_simples, int n, bool coefficient_free) {
    if (n < 0) throw InvalidArgument("quasi-length must be non-negative");
    if (n == 0) return 1;
    if (quasi_simples.empty()) throw InvalidArgument("no quasi-simples supplied");
    Substitution sigma;
    for (int i = 1; i <= n; ++i) {
        const auto& r = quasi_simples[static_cast<std::size_t>(i - 1) % quasi_simples.size()];
        sigma.emplace(VarId{Family::t, i}, r.character);
        sigma.emplace(VarId{Family::q, i}, coefficient_free ? LaurentPoly(1) : LaurentPoly::monomial(y_power(r.dim)));
    }
    return substitute(gen_cheb({1, n}), sigma);
}

TauNuSplit tau_nu_split(const CharTermTable& table) {
    TauNuSplit s;
    const DimVector zero = DimVector::zero(table.dim.size());
    for (const auto& t : table.terms) {
        if (t.e == zero) {
            s.tau += t.term;
        } else if (t.e == table.dim) {
            s.top += t.term;
        } else {
            s.nu += t.term;
        }
    }
    return s;
}

std::vector<LaurentPoly> xm_tau_rewrite(std::span<const CharTermTable> quasi_simples) {
    const std::size_t p = quasi_simples.size();
    std::vector<TauNuSplit> split;
    for (const auto& t : quasi_simples) split.push_back(tau_nu_split(t));
    std::vector<LaurentPoly> out;
    for (std::size_t i = 0; i < p; ++i) {
        const auto& next = split[(i + 1) % p];
        const Monomial top = y_power(quasi_simples[i].dim) * inverse_of_unit_monomial(next.tau, "tau");
        LaurentPoly rewritten = split[i].tau + split[i].nu + LaurentPoly::monomial(top);
        if (!(rewritten == quasi_simples[i].total))
            throw IdentityFailed("rewrite of quasi-simple " + std::to_string(i + 1) + " gives " + rewritten.to_string()
                                 + " instead of " + quasi_simples[i].total.to_string());
        out.push_back(std::move(rewritten));
    }
    return out;
}

}  // namespace clusterchar
