#include "clusterchar/grassmannian.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "clusterchar/errors.hpp"

namespace clusterchar {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t k = 2; k * k <= n; ++k) {
        if (n % k == 0) return false;
    }
    return true;
}

std::vector<std::int64_t> default_primes() { return {2, 3, 5, 7, 11, 13, 17, 19}; }

PrimePolicy PrimePolicy::from_list(const std::string& csv) {
    PrimePolicy policy;
    policy.primes.clear();
    policy.auto_extend = false;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::int64_t p = 0;
        try {
            std::size_t used = 0;
            p = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidArgument("prime list entry '" + item + "' is not an integer");
        }
        if (!is_prime(p)) throw InvalidArgument("prime list entry " + item + " is not prime");
        policy.primes.push_back(p);
    }
    if (policy.primes.empty()) throw InvalidArgument("empty prime list");
    return policy;
}

PrimePolicy PrimePolicy::from_environment() {
    const char* env = std::getenv("CLUSTERCHAR_PRIMES");
    if (env == nullptr || *env == '\0') return {};
    return from_list(env);
}

BigInt gaussian_binomial(int n, int k, std::int64_t p) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1;
    BigInt den = 1;
    BigInt pp;
    for (int i = 0; i < k; ++i) {
        mpz_ui_pow_ui(pp.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n - i));
        num *= pp - 1;
        mpz_ui_pow_ui(pp.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(i + 1));
        den *= pp - 1;
    }
    return num / den;
}

int degree_bound(const DimVector& d, const DimVector& e) {
    int s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) s += e[i] * (d[i] - e[i]);
    return s;
}

namespace {

using Vec = std::array<std::int64_t, kMaxDimEntry>;

struct Basis {
    std::array<Vec, kMaxDimEntry> rows{};
    int size = 0;
};

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1;
    std::int64_t base = a % p;
    for (std::int64_t k = p - 2; k > 0; k >>= 1) {
        if (k & 1) r = r * base % p;
        base = base * base % p;
    }
    return r;
}

// Row-reduces `rows` (first `width` entries significant) to reduced echelon
// form; the nonzero rows are moved to the front. Returns the rank.
int rref(std::vector<Vec>& rows, int width, std::int64_t p, std::array<int, kMaxDimEntry>& pivots) {
    int rank = 0;
    const int n = static_cast<int>(rows.size());
    for (int col = 0; col < width && rank < n; ++col) {
        int sel = -1;
        for (int r = rank; r < n; ++r) {
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(rows[static_cast<std::size_t>(sel)], rows[static_cast<std::size_t>(rank)]);
        Vec& pr = rows[static_cast<std::size_t>(rank)];
        const std::int64_t inv = inverse_mod(pr[static_cast<std::size_t>(col)], p);
        for (int c = 0; c < width; ++c) pr[static_cast<std::size_t>(c)] = pr[static_cast<std::size_t>(c)] * inv % p;
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            Vec& row = rows[static_cast<std::size_t>(r)];
            const std::int64_t f = row[static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int c = 0; c < width; ++c) {
                row[static_cast<std::size_t>(c)] =
                    ((row[static_cast<std::size_t>(c)] - f * pr[static_cast<std::size_t>(c)]) % p + p) % p;
            }
        }
        pivots[static_cast<std::size_t>(rank)] = col;
        ++rank;
    }
    return rank;
}

// Calls fn(basis) for every k-dimensional subspace of F_p^m, each given by
// its reduced row-echelon basis.
template <class Fn>
void for_each_subspace(int m, int k, std::int64_t p, Fn&& fn) {
    if (k < 0 || k > m) return;
    Basis b;
    b.size = k;
    std::array<int, kMaxDimEntry> piv{};
    for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;
    for (;;) {
        // Free positions: row i, non-pivot column j > piv[i].
        std::vector<std::pair<int, int>> free;
        std::array<bool, kMaxDimEntry> is_pivot{};
        for (int i = 0; i < k; ++i) is_pivot[static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = true;
        for (int i = 0; i < k; ++i) {
            Vec& row = b.rows[static_cast<std::size_t>(i)];
            row.fill(0);
            row[static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = 1;
            for (int j = piv[static_cast<std::size_t>(i)] + 1; j < m; ++j) {
                if (!is_pivot[static_cast<std::size_t>(j)]) free.emplace_back(i, j);
            }
        }
        for (;;) {
            fn(static_cast<const Basis&>(b));
            std::size_t f = 0;
            for (; f < free.size(); ++f) {
                auto& entry = b.rows[static_cast<std::size_t>(free[f].first)][static_cast<std::size_t>(free[f].second)];
                if (++entry < p) break;
                entry = 0;
            }
            if (f == free.size()) break;
        }
        // Next pivot combination.
        int i = k - 1;
        while (i >= 0 && piv[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) return;
        ++piv[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
    }
}

class SubrepCounter {
public:
    SubrepCounter(const IntRep& rep, const DimVector& e, std::int64_t p) : rep_(rep), e_(e), p_(p) {
        const Quiver& q = rep.quiver();
        for (const auto& m : rep.matrices()) {
            IntMatrix r(m.rows(), m.cols());
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = ((m.at(i, j) % p) + p) % p;
            mats_.push_back(std::move(r));
        }
        std::vector<bool> has_out(q.vertex_count(), false);
        for (const auto& a : q.arrows()) has_out[a.src] = true;
        for (std::size_t v : q.topological_order()) (has_out[v] ? inner_ : sinks_).push_back(v);
        chosen_.resize(q.vertex_count());
    }

    BigInt run() {
        descend(0);
        BigInt total = 0;
        for (const auto& [key, mult] : histogram_) {
            BigInt term = static_cast<unsigned long>(mult);
            for (std::size_t s = 0; s < sinks_.size(); ++s) {
                const int r = static_cast<int>((key >> (4 * s)) & 0xF);
                const std::size_t v = sinks_[s];
                term *= gaussian_binomial(rep_.dim()[v] - r, e_[v] - r, p_);
            }
            total += term;
        }
        return total;
    }

private:
    // Span of the images of the already chosen subspaces under arrows into v.
    int required(std::size_t v, std::vector<Vec>& rows, std::array<int, kMaxDimEntry>& pivots) const {
        rows.clear();
        const auto& arrows = rep_.quiver().arrows();
        for (std::size_t a = 0; a < arrows.size(); ++a) {
            if (arrows[a].tgt != v) continue;
            const IntMatrix& m = mats_[a];
            const Basis& src = chosen_[arrows[a].src];
            for (int k = 0; k < src.size; ++k) {
                Vec img{};
                bool nonzero = false;
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    std::int64_t acc = 0;
                    for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * src.rows[static_cast<std::size_t>(k)][j];
                    img[i] = acc % p_;
                    nonzero = nonzero || img[i] != 0;
                }
                if (nonzero) rows.push_back(img);
            }
        }
        return rref(rows, rep_.dim()[v], p_, pivots);
    }

    void descend(std::size_t idx) {
        if (idx == inner_.size()) {
            record_leaf();
            return;
        }
        const std::size_t v = inner_[idx];
        const int d = rep_.dim()[v];
        const int target = e_[v];
        std::vector<Vec> rows;
        std::array<int, kMaxDimEntry> pivots{};
        const int r = required(v, rows, pivots);
        if (r > target) return;
        std::array<int, kMaxDimEntry> complement{};
        int nc = 0;
        {
            std::array<bool, kMaxDimEntry> piv{};
            for (int i = 0; i < r; ++i) piv[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = true;
            for (int c = 0; c < d; ++c) {
                if (!piv[static_cast<std::size_t>(c)]) complement[static_cast<std::size_t>(nc++)] = c;
            }
        }
        Basis& slot = chosen_[v];
        for_each_subspace(nc, target - r, p_, [&](const Basis& w) {
            slot.size = 0;
            for (int i = 0; i < r; ++i) slot.rows[static_cast<std::size_t>(slot.size++)] = rows[static_cast<std::size_t>(i)];
            for (int i = 0; i < w.size; ++i) {
                Vec lifted{};
                for (int j = 0; j < nc; ++j)
                    lifted[static_cast<std::size_t>(complement[static_cast<std::size_t>(j)])] =
                        w.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                slot.rows[static_cast<std::size_t>(slot.size++)] = lifted;
            }
            descend(idx + 1);
        });
        slot.size = 0;
    }

    void record_leaf() {
        std::uint64_t key = 0;
        std::vector<Vec> rows;
        std::array<int, kMaxDimEntry> pivots{};
        for (std::size_t s = 0; s < sinks_.size(); ++s) {
            const int r = required(sinks_[s], rows, pivots);
            if (r > e_[sinks_[s]]) return;
            key |= static_cast<std::uint64_t>(r) << (4 * s);
        }
        ++histogram_[key];
    }

    const IntRep& rep_;
    const DimVector& e_;
    std::int64_t p_;
    std::vector<IntMatrix> mats_;
    std::vector<std::size_t> inner_;
    std::vector<std::size_t> sinks_;
    std::vector<Basis> chosen_;
    std::unordered_map<std::uint64_t, std::uint64_t> histogram_;
};

void validate(const IntRep& rep, const DimVector& e) {
    if (e.size() != rep.quiver().vertex_count())
        throw DimensionMismatch("dimension vector " + e.to_string() + " does not match the quiver");
    if (!e.fits_in(rep.dim()))
        throw DimOutOfRange("e = " + e.to_string() + " is not below dim = " + rep.dim().to_string());
    for (int d : rep.dim()) {
        if (d > kMaxDimEntry)
            throw DimOutOfRange("dimension entry " + std::to_string(d) + " exceeds the enumeration limit "
                                + std::to_string(kMaxDimEntry));
    }
    if (rep.quiver().vertex_count() > 16) throw DimOutOfRange("too many sink vertices for the enumeration core");
}

}  // namespace

BigInt count_subreps(const IntRep& rep, const DimVector& e, std::int64_t p) {
    validate(rep, e);
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    const auto& ex = rep.excluded_primes();
    if (std::find(ex.begin(), ex.end(), p) != ex.end())
        throw ExcludedPrime("prime " + std::to_string(p) + " is excluded for this representation");
    return SubrepCounter(rep, e, p).run();
}

BigInt CountingPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string CountingPolynomial::to_string() const {
    LaurentPoly p;
    for (std::size_t k = 0; k < coefficients.size(); ++k)
        p.add_term(Monomial::variable({Family::q, 0}, static_cast<int>(k)), coefficients[k]);
    std::string s = p.to_string();
    // The single counting variable is printed as bare `q`.
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'q' && i + 1 < s.size() && s[i + 1] == '0') {
            out += 'q';
            ++i;
        } else {
            out += s[i];
        }
    }
    return out;
}

namespace {

std::vector<std::int64_t> admissible_primes(const IntRep& rep, const PrimePolicy& policy, std::size_t needed) {
    std::vector<std::int64_t> out;
    const auto& ex = rep.excluded_primes();
    auto admissible = [&](std::int64_t p) { return std::find(ex.begin(), ex.end(), p) == ex.end(); };
    for (std::int64_t p : policy.primes) {
        if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
        if (admissible(p) && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        if (out.size() == needed) return out;
    }
    if (policy.auto_extend) {
        std::int64_t p = policy.primes.empty() ? 1 : *std::max_element(policy.primes.begin(), policy.primes.end());
        while (out.size() < needed) {
            ++p;
            if (is_prime(p) && admissible(p)) out.push_back(p);
        }
        return out;
    }
    throw InsufficientPrimes("need " + std::to_string(needed) + " admissible primes, the prime list provides "
                             + std::to_string(out.size()));
}

CountingPolynomial interpolate(const std::vector<std::pair<std::int64_t, BigInt>>& samples) {
    const std::size_t n = samples.size();
    std::vector<mpq_class> coef(n);
    for (std::size_t i = 0; i < n; ++i) coef[i] = mpq_class(samples[i].second);
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / mpq_class(samples[i].first - samples[i - j].first);
            coef[i].canonicalize();
        }
    }
    // Newton form to monomial basis.
    std::vector<mpq_class> poly{coef[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
        const mpq_class xi(samples[i].first);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * xi;
        }
        next[0] += coef[i];
        poly = std::move(next);
    }
    CountingPolynomial out;
    for (auto& c : poly) {
        c.canonicalize();
        if (c.get_den() != 1) throw NonPolynomialCount("interpolated counting polynomial has non-integer coefficients");
        out.coefficients.push_back(c.get_num());
    }
    while (!out.coefficients.empty() && out.coefficients.back() == 0) out.coefficients.pop_back();
    return out;
}

}  // namespace

CountProfile counting_polynomial(const IntRep& rep, const DimVector& e, const PrimePolicy& policy) {
    validate(rep, e);
    CountProfile prof;
    prof.e = e;
    prof.degree_bound = degree_bound(rep.dim(), e);
    const auto needed = static_cast<std::size_t>(prof.degree_bound) + 3;
    const auto primes = admissible_primes(rep, policy, needed);
    for (std::size_t k = 0; k < primes.size(); ++k) {
        auto sample = std::make_pair(primes[k], count_subreps(rep, e, primes[k]));
        (k + 2 < primes.size() ? prof.samples : prof.held_out).push_back(std::move(sample));
    }
    prof.counting_poly = interpolate(prof.samples);
    for (const auto& [p, count] : prof.held_out) {
        BigInt predicted = prof.counting_poly.evaluate(p);
        if (predicted != count)
            throw NonPolynomialCount("e = " + e.to_string() + ": held-out prime " + std::to_string(p) + " counts "
                                     + count.get_str() + " but the interpolant predicts " + predicted.get_str());
    }
    prof.chi = prof.counting_poly.evaluate(1);
    return prof;
}

BigInt euler_char(const IntRep& rep, const DimVector& e, const PrimePolicy& policy) {
    return counting_polynomial(rep, e, policy).chi;
}

std::vector<CountProfile> count_all(const IntRep& rep, const PrimePolicy& policy, bool parallel) {
    const auto es = dims_below(rep.dim());
    std::vector<CountProfile> out(es.size());
    std::vector<std::exception_ptr> errors(es.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < es.size(); i = next++) {
            try {
                out[i] = counting_polynomial(rep, es[i], policy);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    const unsigned n_threads = parallel ? std::min<unsigned>(hw, static_cast<unsigned>(es.size())) : 1U;
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < n_threads; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
    return out;
}

}  // namespace clusterchar
