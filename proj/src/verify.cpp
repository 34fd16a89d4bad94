#include "clusterchar/verify.hpp"

#include <algorithm>

#include "clusterchar/character.hpp"
#include "clusterchar/chebyshev.hpp"
#include "clusterchar/errors.hpp"
#include "clusterchar/mutation.hpp"

namespace clusterchar {

bool all_pass(const CheckList& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::string first_negative(const LaurentPoly& p) {
    auto neg = negative_terms(p);
    if (neg.empty()) return {};
    return "negative coefficient " + neg.front().second.get_str() + " at " + neg.front().first.to_string();
}

CheckResult positivity(std::string name, const LaurentPoly& p) {
    std::string neg = first_negative(p);
    return {std::move(name), neg.empty(), neg.empty() ? std::to_string(p.size()) + " terms" : neg};
}

CheckResult equality(std::string name, const LaurentPoly& lhs, const LaurentPoly& rhs) {
    if (lhs == rhs) return {std::move(name), true, ""};
    return {std::move(name), false, lhs.to_string() + " != " + rhs.to_string()};
}

std::vector<ModuleFamily> tube_families(QuiverKind q) {
    std::vector<ModuleFamily> out;
    for (const auto& f : catalog_families(q)) {
        if (tube_rank(f.id) > 0) out.push_back(f);
    }
    return out;
}

LaurentPoly at_z(const LaurentPoly& p, const LaurentPoly& value) {
    return substitute(p, {{VarId{Family::generic, 0}, value}});
}

}  // namespace

CheckList verify_lemma_dpsn(int n) {
    if (n < 1) throw InvalidArgument("lemma-dpsn needs n >= 1");
    CheckList out;
    const LaurentPoly pn = gen_cheb({1, n});
    for (int i = 1; i <= n; ++i) {
        const LaurentPoly lhs = partial_derivative(pn, {Family::t, i});
        const LaurentPoly rhs = gen_cheb({1, i - 1}) * gen_cheb({i + 1, n - i});
        out.push_back(equality("dP_" + std::to_string(n) + "/dt_" + std::to_string(i), lhs, rhs));
    }
    return out;
}

CheckList verify_lemma_cc(int n) {
    CheckList out;
    for (int k = 1; k <= n; ++k)
        out.push_back(positivity("P_" + std::to_string(k) + " shifted", substitute(gen_cheb({1, k}), cc_substitution(k))));
    return out;
}

CheckList verify_lemma_pnpos(int n) {
    CheckList out;
    for (int k = 1; k <= n; ++k)
        out.push_back(
            positivity("P_" + std::to_string(k) + " shifted with u", substitute(gen_cheb({1, k}), pnpos_substitution(k))));
    return out;
}

CheckList verify_delta_positivity(int max_lp) {
    CheckList out;
    for (int l = 1; l <= max_lp; ++l) {
        for (int p = 1; l * p <= max_lp; ++p) {
            const LaurentPoly v = substitute(delta(l, p), periodic_substitution(l * p, true));
            out.push_back(positivity("Delta_{" + std::to_string(l) + "," + std::to_string(p) + "} periodic", v));
        }
    }
    return out;
}

CheckList verify_delta_claim(int max_lp) {
    CheckList out;
    for (int l = 1; l <= max_lp; ++l) {
        for (int p = 1; l * p <= max_lp; ++p) {
            const int n = l * p;
            const LaurentPoly d = delta(l, p);
            for (int i = 1; i <= n; ++i) {
                std::vector<LaurentPoly> qs;
                std::vector<LaurentPoly> ts;
                for (int k = 1; k < n; ++k) {
                    const int j = (i - 1 + k) % n + 1;
                    qs.push_back(vars::q(j));
                    ts.push_back(vars::t(j));
                }
                out.push_back(equality("dDelta_{" + std::to_string(l) + "," + std::to_string(p) + "}/dt_"
                                           + std::to_string(i),
                                       partial_derivative(d, {Family::t, i}), cheb_eval(qs, ts)));
            }
        }
    }
    return out;
}

CheckList verify_s_from_f(int n) {
    CheckList out;
    for (int k = 0; k <= n; ++k) {
        const auto terms = s_from_f(k);
        CheckResult r = equality("S_" + std::to_string(k), evaluate_f_terms(terms), cheb_second_kind(k));
        for (const auto& t : terms) {
            if (t.multiplier < 0) {
                r.pass = false;
                r.detail = "negative multiplier";
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

CheckList verify_lemma_key(QuiverKind q, const PrimePolicy& policy) {
    CheckList out;
    for (const auto& f : tube_families(q)) {
        const auto t = tau(f);
        try {
            auto rep = check_lemma_key(catalog_module(f), catalog_module(*t), policy);
            out.push_back({describe(f), true, rep.l_m_zero.to_string() + " * " + rep.l_tau_top.to_string()});
        } catch (const IdentityFailed& e) {
            out.push_back({describe(f), false, e.what()});
        }
    }
    return out;
}

CheckList verify_char_cheb(QuiverKind q, const PrimePolicy& policy) {
    CheckList out;
    for (const auto& f : tube_families(q)) {
        std::vector<QuasiSimple> qs;
        for (const auto& r : quasi_composition_factors(f)) {
            const IntRep rep = catalog_module(r);
            qs.push_back({rep.dim(), cluster_char(rep, policy)});
        }
        const LaurentPoly direct = cluster_char(catalog_module(f), policy);
        out.push_back(equality(describe(f), direct, char_via_chebyshev(qs, f.n)));
        for (auto& r : qs) r.character = specialize_ones(r.character, Family::y);
        out.push_back(equality(describe(f) + " coefficient-free", specialize_ones(direct, Family::y),
                               char_via_chebyshev(qs, f.n, true)));
    }
    return out;
}

CheckList verify_char_mutation(const PrimePolicy& policy) {
    // The representation convention matches seeds of the opposite quiver.
    const Quiver qop = Quiver::kronecker().opposite();
    CheckList out;
    for (bool principal : {false, true}) {
        const int steps = principal ? 2 : 3;
        for (std::size_t start : {std::size_t{0}, std::size_t{1}}) {
            Seed s = initial_seed(qop, principal);
            std::size_t k = start;
            for (int step = 0; step < steps; ++step) {
                s = mutate(s, k);
                const FamilyId id = start == 0 ? FamilyId::kronecker_preinjective : FamilyId::kronecker_preprojective;
                const ModuleFamily f{id, step, 1, 1};
                const IntRep rep = catalog_module(f);
                const LaurentPoly ch = principal ? cluster_char(rep, policy) : cf_cluster_char(rep, policy);
                out.push_back(equality(describe(f) + (principal ? " principal" : " coefficient-free"), s.cluster[k], ch));
                k = 1 - k;
            }
        }
    }
    return out;
}

CheckList verify_basis_positivity(QuiverKind q, BasisKind kind, int max_n, const PrimePolicy& policy) {
    CheckList out;
    for (const auto& e : verify_positivity(q, kind, max_n, 4, policy).entries)
        out.push_back(positivity(quiver_kind_name(q) + " " + e.label, e.value));
    return out;
}

CheckList verify_xm_tau(QuiverKind q, const PrimePolicy& policy) {
    CheckList out;
    std::vector<std::vector<ModuleFamily>> tubes;
    if (q == QuiverKind::kronecker) {
        tubes.push_back({{FamilyId::kronecker_homogeneous, 1, 1, 1}});
    } else {
        tubes.push_back({{FamilyId::affineA21_tube, 1, 1, 1}, {FamilyId::affineA21_tube, 1, 1, 2}});
        tubes.push_back({{FamilyId::affineA21_homogeneous, 1, 1, 1}});
    }
    for (const auto& tube : tubes) {
        std::vector<CharTermTable> tables;
        for (const auto& r : tube) tables.push_back(char_table(catalog_module(r), policy));
        std::vector<LaurentPoly> rewritten;
        try {
            rewritten = xm_tau_rewrite(tables);
        } catch (const IdentityFailed& e) {
            out.push_back({"rewrite " + describe(tube.front()), false, e.what()});
            continue;
        }
        out.push_back({"rewrite " + describe(tube.front()), true, ""});
        for (std::size_t start = 0; start < tube.size(); ++start) {
            std::vector<QuasiSimple> qs;
            for (std::size_t k = 0; k < tube.size(); ++k) {
                const std::size_t idx = (start + k) % tube.size();
                qs.push_back({tables[idx].dim, rewritten[idx]});
            }
            for (int n = 1; n <= 3; ++n) {
                ModuleFamily m = tube[start];
                m.n = n;
                out.push_back(equality("P_" + std::to_string(n) + " at " + describe(m), char_via_chebyshev(qs, n),
                                       cluster_char(catalog_module(m), policy)));
            }
        }
    }
    return out;
}

CheckList verify_graded_chi(QuiverKind q, const PrimePolicy& policy) {
    CheckList out;
    for (const auto& f : catalog_families(q)) {
        const IntRep rep = catalog_module(f);
        const CharTermTable table = char_table(rep, policy);
        CheckResult r{describe(f), true, ""};
        for (const auto& t : table.terms) {
            const LaurentPoly g = specialize_ones(graded_coefficient(table.total, t.e.values()), Family::x);
            if (!(g == LaurentPoly(t.chi))) {
                r.pass = false;
                r.detail = "e = " + t.e.to_string() + ": graded coefficient " + g.to_string() + ", chi " + t.chi.get_str();
                break;
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

CheckList verify_catalog_positivity(QuiverKind q, int max_entry, const PrimePolicy& policy) {
    CheckList out;
    for (const auto& f : catalog_families(q)) {
        const IntRep rep = catalog_module(f);
        if (*std::max_element(rep.dim().begin(), rep.dim().end()) > max_entry) continue;
        out.push_back(positivity(describe(f), cf_cluster_char(rep, policy)));
    }
    return out;
}

CheckList verify_tame(int max_n, const PrimePolicy& policy) {
    CheckList out;
    const LaurentPoly xd = x_delta(QuiverKind::kronecker, 1, policy);
    for (int n = 1; n <= max_n; ++n) {
        const ModuleFamily f{FamilyId::kronecker_homogeneous, n, 1, 1};
        out.push_back(equality(describe(f), cf_cluster_char(catalog_module(f), policy),
                               at_z(cheb_second_kind(n), xd)));
    }
    return out;
}

CheckList verify_fnpos(int max_n, const PrimePolicy& policy) {
    CheckList out;
    const LaurentPoly xk = x_delta(QuiverKind::kronecker, 1, policy);
    const LaurentPoly xa = x_delta(QuiverKind::affineA2, 1, policy);
    const LaurentPoly r1 = cf_cluster_char(catalog_module({FamilyId::affineA21_tube, 1, 1, 1}), policy);
    const LaurentPoly r2 = cf_cluster_char(catalog_module({FamilyId::affineA21_tube, 1, 1, 2}), policy);
    for (int n = 1; n <= max_n; ++n) {
        const LaurentPoly fk = at_z(cheb_first_kind(n), xk);
        out.push_back(positivity("F_" + std::to_string(n) + "(X_delta) kronecker", fk));
        Substitution sigma;
        for (int j = 1; j <= 2 * n; ++j) sigma.emplace(VarId{Family::t, j}, j % 2 == 1 ? r1 : r2);
        const LaurentPoly via_delta = substitute(delta_cf(n, 2), sigma);
        const LaurentPoly fa = at_z(cheb_first_kind(n), xa);
        out.push_back(equality("F_" + std::to_string(n) + "(X_delta) = Delta_{" + std::to_string(n) + ",2} affineA2",
                               fa, via_delta));
        out.push_back(positivity("F_" + std::to_string(n) + "(X_delta) affineA2", fa));
    }
    return out;
}

CheckList verify_triangularity(int max_n) {
    CheckList out;
    auto check = [&](BasisKind from, BasisKind to, int n) {
        const auto c = change_of_basis(from, to, n);
        CheckResult r{basis_kind_name(from) + "_" + std::to_string(n) + " in " + basis_kind_name(to), true, ""};
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] < 0) {
                r.pass = false;
                r.detail = "coefficient " + c[k].get_str() + " at index " + std::to_string(k);
            }
        }
        out.push_back(std::move(r));
    };
    for (int n = 0; n <= max_n; ++n) {
        check(BasisKind::G, BasisKind::C, n);
        check(BasisKind::C, BasisKind::B, n);
    }
    return out;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "lemma-dpsn", "lemma-cc",      "lemma-pnpos", "delta-pos",  "delta-claim", "s-from-f",
        "lemma-key",  "char-cheb",     "char-mutation", "basis-pos", "xm-tau",     "graded-chi",
        "catalog-pos", "tame",         "fnpos",       "triangularity"};
    return names;
}

CheckList run_check(const std::string& what, int n, QuiverKind q, BasisKind kind) {
    if (what == "lemma-dpsn") return verify_lemma_dpsn(n);
    if (what == "lemma-cc") return verify_lemma_cc(n);
    if (what == "lemma-pnpos") return verify_lemma_pnpos(n);
    if (what == "delta-pos") return verify_delta_positivity(n);
    if (what == "delta-claim") return verify_delta_claim(n);
    if (what == "s-from-f") return verify_s_from_f(n);
    if (what == "lemma-key") return verify_lemma_key(q);
    if (what == "char-cheb") return verify_char_cheb(q);
    if (what == "char-mutation") return verify_char_mutation();
    if (what == "basis-pos") return verify_basis_positivity(q, kind, n);
    if (what == "xm-tau") return verify_xm_tau(q);
    if (what == "graded-chi") return verify_graded_chi(q);
    if (what == "catalog-pos") return verify_catalog_positivity(q, n);
    if (what == "tame") return verify_tame(n);
    if (what == "fnpos") return verify_fnpos(n);
    if (what == "triangularity") return verify_triangularity(n);
    throw InvalidArgument("unknown check '" + what + "'");
}

}  // namespace clusterchar
