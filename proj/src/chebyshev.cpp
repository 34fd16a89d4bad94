#include "clusterchar/chebyshev.hpp"

#include <string>

#include "clusterchar/errors.hpp"

namespace clusterchar {

LaurentPoly cheb_eval(std::span<const LaurentPoly> q, std::span<const LaurentPoly> t) {
    if (q.size() != t.size()) throw InvalidArgument("cheb_eval: q and t must have the same length");
    LaurentPoly prev2 = 0;  // P_{-1}
    LaurentPoly prev = 1;   // P_0
    for (std::size_t k = 0; k < t.size(); ++k) {
        LaurentPoly next = t[k] * prev;
        if (k > 0) next -= q[k] * prev2;
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

LaurentPoly gen_cheb(ChebWindow w) {
    if (w.length < 0) return 0;
    std::vector<LaurentPoly> q;
    std::vector<LaurentPoly> t;
    for (int i = w.start; i <= w.last(); ++i) {
        q.push_back(vars::q(i));
        t.push_back(vars::t(i));
    }
    return cheb_eval(q, t);
}

namespace {

LaurentPoly laplace(const std::vector<std::vector<LaurentPoly>>& m, std::size_t row,
                    std::vector<std::size_t>& cols) {
    if (row == m.size()) return 1;
    LaurentPoly acc;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const LaurentPoly& entry = m[row][cols[k]];
        if (entry.is_zero()) continue;
        std::size_t col = cols[k];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        LaurentPoly minor = laplace(m, row + 1, cols);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
        if (minor.is_zero()) continue;
        if (k % 2 == 0) {
            acc += entry * minor;
        } else {
            acc -= entry * minor;
        }
    }
    return acc;
}

}  // namespace

LaurentPoly symbolic_determinant(const std::vector<std::vector<LaurentPoly>>& m) {
    for (const auto& row : m) {
        if (row.size() != m.size()) throw InvalidArgument("symbolic_determinant: matrix is not square");
    }
    std::vector<std::size_t> cols(m.size());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return laplace(m, 0, cols);
}

LaurentPoly gen_cheb_det(ChebWindow w) {
    if (w.length < 0) return 0;
    const auto n = static_cast<std::size_t>(w.length);
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    // Row r carries t_{last - r} on the diagonal and q_{last - r + 1} to its left.
    for (std::size_t r = 0; r < n; ++r) {
        const int idx = w.last() - static_cast<int>(r);
        m[r][r] = vars::t(idx);
        if (r + 1 < n) m[r][r + 1] = 1;
        if (r > 0) m[r][r - 1] = vars::q(idx + 1);
    }
    return symbolic_determinant(m);
}

LaurentPoly delta(int l, int p) {
    if (l < 1 || p < 1)
        throw InvalidArgument("delta requires l >= 1 and p >= 1 (got l=" + std::to_string(l)
                              + ", p=" + std::to_string(p) + ")");
    const int n = l * p;
    return gen_cheb({1, n}) - vars::q(1) * gen_cheb({2, n - 2});
}

LaurentPoly delta_cf(int l, int p) { return specialize_ones(delta(l, p), Family::q); }

namespace {

LaurentPoly one_variable_recurrence(int n, const LaurentPoly& at0) {
    if (n < 0) throw InvalidArgument("Chebyshev index must be non-negative");
    const LaurentPoly z = vars::z();
    LaurentPoly prev = at0;
    if (n == 0) return prev;
    LaurentPoly cur = z;
    for (int k = 1; k < n; ++k) {
        LaurentPoly next = z * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

LaurentPoly cheb_first_kind(int n) { return one_variable_recurrence(n, 2); }

LaurentPoly cheb_second_kind(int n) { return one_variable_recurrence(n, 1); }

std::vector<FTerm> s_from_f(int n) {
    if (n < 0) throw InvalidArgument("s_from_f requires n >= 0");
    std::vector<FTerm> out;
    for (int k = n; k >= 1; k -= 2) out.push_back({k, 1});
    if (n % 2 == 0) out.push_back({-1, 1});
    return out;
}

LaurentPoly evaluate_f_terms(std::span<const FTerm> terms) {
    LaurentPoly acc;
    for (const auto& term : terms) {
        LaurentPoly f = term.index < 0 ? LaurentPoly(1) : cheb_first_kind(term.index);
        acc += f * LaurentPoly(term.multiplier);
    }
    return acc;
}

namespace {

// t_i -> t_i [+ u_i] + q_i / t_{i+step}. P_n joins t_{i-1} and t_i through
// q_i, so the positive direction is step = -1.
Substitution shift_substitution(int n, bool with_u, bool periodic, int step) {
    Substitution sigma;
    for (int i = 1; i <= n; ++i) {
        int nb = i + step;
        if (periodic) nb = (nb - 1 + n) % n + 1;
        LaurentPoly image = vars::t(i) + vars::q(i) * LaurentPoly::monomial(Monomial::variable({Family::t, nb}, -1));
        if (with_u) image += vars::u(i);
        sigma.emplace(VarId{Family::t, i}, std::move(image));
    }
    return sigma;
}

}  // namespace

Substitution cc_substitution(int n) { return shift_substitution(n, false, false, -1); }

Substitution pnpos_substitution(int n) { return shift_substitution(n, true, false, -1); }

Substitution periodic_substitution(int n, bool with_u) { return shift_substitution(n, with_u, true, -1); }

Substitution shifted_substitution(int n, bool with_u) { return shift_substitution(n, with_u, false, +1); }

}  // namespace clusterchar
