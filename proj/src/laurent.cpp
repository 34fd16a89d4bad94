#include "clusterchar/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <ostream>
#include <sstream>

#include "clusterchar/errors.hpp"

namespace clusterchar {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::x: return "x";
        case Family::y: return "y";
        case Family::q: return "q";
        case Family::t: return "t";
        case Family::u: return "u";
        case Family::generic: return "z";
    }
    return "?";
}

std::string VarId::name() const {
    if (family == Family::generic && index == 0) return "z";
    return std::string(family_name(family)) + std::to_string(index);
}

VarId parse_var(std::string_view name) {
    if (name.empty()) throw ParseError("empty variable name");
    Family f{};
    switch (name.front()) {
        case 'x': f = Family::x; break;
        case 'y': f = Family::y; break;
        case 'q': f = Family::q; break;
        case 't': f = Family::t; break;
        case 'u': f = Family::u; break;
        case 'z': f = Family::generic; break;
        default: throw ParseError("unknown variable '" + std::string(name) + "'");
    }
    auto digits = name.substr(1);
    if (digits.empty()) {
        if (f == Family::generic) return {f, 0};
        throw ParseError("variable '" + std::string(name) + "' needs an index");
    }
    long idx = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad variable index in '" + std::string(name) + "'");
        idx = idx * 10 + (c - '0');
        if (idx > INT32_MAX) throw ParseError("variable index too large");
    }
    return {f, static_cast<std::int32_t>(idx)};
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : entries) {
        if (!m.entries_.empty() && m.entries_.back().first == v) {
            m.entries_.back().second += e;
        } else {
            m.entries_.emplace_back(v, e);
        }
    }
    std::erase_if(m.entries_, [](const Entry& en) { return en.second == 0; });
    for (const auto& en : m.entries_) m.degree_ += en.second;
    return m;
}

Monomial Monomial::variable(VarId v, int exponent) {
    Monomial m;
    if (exponent != 0) {
        m.entries_.emplace_back(v, exponent);
        m.degree_ = exponent;
    }
    return m;
}

int Monomial::exponent(VarId v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& en, VarId key) { return en.first < key; });
    return (it != entries_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    r.entries_.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            r.entries_.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            r.entries_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) r.entries_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    r.degree_ = degree_ + other.degree_;
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto& en : r.entries_) en.second = -en.second;
    r.degree_ = -degree_;
    return r;
}

Monomial Monomial::pow(int k) const {
    if (k == 0) return {};
    Monomial r = *this;
    for (auto& en : r.entries_) en.second *= k;
    r.degree_ = degree_ * k;
    return r;
}

Monomial Monomial::without(Family f) const {
    Monomial r;
    for (const auto& en : entries_) {
        if (en.first.family != f) {
            r.entries_.push_back(en);
            r.degree_ += en.second;
        }
    }
    return r;
}

Monomial Monomial::only(Family f) const {
    Monomial r;
    for (const auto& en : entries_) {
        if (en.first.family == f) {
            r.entries_.push_back(en);
            r.degree_ += en.second;
        }
    }
    return r;
}

std::string Monomial::to_string() const {
    if (entries_.empty()) return "1";
    std::string s;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (!s.empty()) s += '*';
        s += it->first.name();
        if (it->second != 1) s += '^' + std::to_string(it->second);
    }
    return s;
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
    auto ea = a.entries();
    auto eb = b.entries();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ea.size() || j < eb.size()) {
        if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
            return ea[i].second > 0;
        }
        if (i == ea.size() || eb[j].first < ea[i].first) {
            return eb[j].second < 0;
        }
        if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second;
        ++i;
        ++j;
    }
    return false;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0) terms_.emplace(Monomial{}, BigInt(constant));
}

LaurentPoly::LaurentPoly(const BigInt& constant) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

LaurentPoly LaurentPoly::variable(VarId v) { return monomial(Monomial::variable(v)); }

LaurentPoly LaurentPoly::monomial(const Monomial& m, const BigInt& coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
}

std::optional<std::pair<Monomial, BigInt>> LaurentPoly::as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    return *terms_.begin();
}

BigInt LaurentPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    BigInt prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            r.add_term(ma * mb, prod);
        }
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::times(const Monomial& m, const BigInt& coeff) const {
    LaurentPoly r;
    if (coeff == 0) return r;
    for (const auto& [tm, tc] : terms_) r.terms_.emplace_hint(r.terms_.end(), tm * m, tc * coeff);
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        BigInt mag = abs(c);
        if (first) {
            if (negative) s += '-';
        } else {
            s += negative ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            s += mag.get_str();
        } else {
            if (mag != 1) s += mag.get_str() + '*';
            s += m.to_string();
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

bool canonical_less(const LaurentPoly& a, const LaurentPoly& b) {
    CanonicalOrder before;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (before(ia->first, ib->first)) return true;
        if (before(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms().end() && ib != b.terms().end();
}

// -------------------------------------------------------------- operations

namespace {

LaurentPoly invert_monomial_image(const LaurentPoly& image, VarId v) {
    auto mono = image.as_monomial();
    if (!mono || (mono->second != 1 && mono->second != -1)) {
        throw NonInvertibleImage("variable " + v.name() + " occurs with a negative exponent but maps to "
                                 + image.to_string() + ", which is not an invertible monomial");
    }
    return LaurentPoly::monomial(mono->first.inverse(), mono->second);
}

}  // namespace

LaurentPoly substitute(const LaurentPoly& p, const Substitution& sigma) {
    std::map<std::pair<VarId, int>, LaurentPoly> power_cache;
    auto image_power = [&](VarId v, const LaurentPoly& image, int e) -> const LaurentPoly& {
        auto key = std::make_pair(v, e);
        auto it = power_cache.find(key);
        if (it != power_cache.end()) return it->second;
        LaurentPoly base = e < 0 ? invert_monomial_image(image, v) : image;
        return power_cache.emplace(key, base.pow(static_cast<unsigned>(e < 0 ? -e : e))).first->second;
    };

    LaurentPoly result;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> fixed;
        LaurentPoly term = 1;
        for (const auto& [v, e] : m.entries()) {
            auto it = sigma.find(v);
            if (it == sigma.end()) {
                fixed.emplace_back(v, e);
            } else {
                term *= image_power(v, it->second, e);
            }
        }
        result += term.times(Monomial::from_entries(std::move(fixed)), c);
    }
    return result;
}

LaurentPoly partial_derivative(const LaurentPoly& p, VarId v) {
    LaurentPoly r;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        if (e == 0) continue;
        r.add_term(m * Monomial::variable(v, -1), c * e);
    }
    return r;
}

bool is_subtraction_free(const LaurentPoly& p) {
    return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& term) { return term.second > 0; });
}

std::vector<std::pair<Monomial, BigInt>> negative_terms(const LaurentPoly& p) {
    std::vector<std::pair<Monomial, BigInt>> out;
    for (const auto& [m, c] : p.terms())
        if (c < 0) out.emplace_back(m, c);
    return out;
}

LaurentPoly specialize_ones(const LaurentPoly& p, Family f) {
    LaurentPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term(m.without(f), c);
    return r;
}

LaurentPoly graded_coefficient(const LaurentPoly& p, std::span<const int> e) {
    std::vector<Monomial::Entry> want;
    for (std::size_t i = 0; i < e.size(); ++i)
        want.emplace_back(VarId{Family::y, static_cast<std::int32_t>(i + 1)}, e[i]);
    const Monomial target = Monomial::from_entries(std::move(want));
    LaurentPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (m.only(Family::y) == target) r.add_term(m.without(Family::y), c);
    }
    return r;
}

std::vector<std::vector<int>> y_support(const LaurentPoly& p, int m) {
    std::vector<std::vector<int>> out;
    for (const auto& [mono, c] : p.terms()) {
        std::vector<int> e(static_cast<std::size_t>(m), 0);
        for (const auto& [v, k] : mono.entries()) {
            if (v.family != Family::y) continue;
            if (v.index < 1 || v.index > m)
                throw InvalidArgument("y-variable " + v.name() + " outside 1.." + std::to_string(m));
            e[static_cast<std::size_t>(v.index - 1)] = k;
        }
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw NotExactlyDivisible("division by the zero polynomial");
    if (a.is_zero()) return {};

    // The Newton polytope of a is the Minkowski sum of those of q and b, so
    // every exponent of an exact quotient lies in a computable box.
    auto ranges = [](const LaurentPoly& p) {
        std::map<VarId, std::pair<int, int>> r;
        for (const auto& [m, c] : p.terms()) {
            for (const auto& [v, e] : m.entries()) r.try_emplace(v, std::make_pair(0, 0));
        }
        for (auto& [v, range] : r) {
            bool first = true;
            for (const auto& [m, c] : p.terms()) {
                int e = m.exponent(v);
                if (first) {
                    range = {e, e};
                    first = false;
                } else {
                    range.first = std::min(range.first, e);
                    range.second = std::max(range.second, e);
                }
            }
        }
        return r;
    };
    const auto ra = ranges(a);
    const auto rb = ranges(b);
    auto in_box = [&](const Monomial& m) {
        std::map<VarId, std::pair<int, int>> box;
        for (const auto& [v, r] : ra) box[v] = r;
        for (const auto& [v, r] : rb) {
            auto& slot = box.try_emplace(v, std::make_pair(0, 0)).first->second;
            slot.first -= r.first;
            slot.second -= r.second;
        }
        for (const auto& [v, r] : box) {
            int e = m.exponent(v);
            if (e < r.first || e > r.second) return false;
        }
        for (const auto& [v, e] : m.entries()) {
            if (!box.contains(v)) return false;
        }
        return true;
    };

    const auto& [lead_m, lead_c] = *b.terms().begin();
    const Monomial lead_inv = lead_m.inverse();
    LaurentPoly quotient;
    LaurentPoly rest = a;
    while (!rest.is_zero()) {
        const auto& [rm, rc] = *rest.terms().begin();
        if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()))
            throw NotExactlyDivisible(b.to_string() + " does not divide " + a.to_string());
        Monomial qm = rm * lead_inv;
        if (!in_box(qm)) throw NotExactlyDivisible(b.to_string() + " does not divide " + a.to_string());
        BigInt qc = rc / lead_c;
        quotient.add_term(qm, qc);
        rest -= b.times(qm, qc);
    }
    return quotient;
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    LaurentPoly parse() {
        LaurentPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("at column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    LaurentPoly expr() {
        LaurentPoly acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    LaurentPoly term() {
        LaurentPoly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                LaurentPoly d = factor();
                try {
                    acc = exact_divide(acc, d);
                } catch (const NotExactlyDivisible& e) {
                    fail(e.what());
                }
            } else {
                return acc;
            }
        }
    }

    LaurentPoly factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        LaurentPoly base = primary();
        if (accept('^')) {
            skip_ws();
            bool neg = false;
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
                neg = text_[pos_] == '-';
                ++pos_;
            }
            long e = integer();
            if (neg) {
                auto mono = base.as_monomial();
                if (!mono || (mono->second != 1 && mono->second != -1))
                    fail("negative power of a non-monomial");
                return LaurentPoly::monomial(mono->first.inverse().pow(static_cast<int>(e)),
                                             (e % 2 == 0) ? BigInt(1) : mono->second);
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 6) fail("exponent too large");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    LaurentPoly primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return LaurentPoly(BigInt(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            try {
                return LaurentPoly::variable(parse_var(text_.substr(start, pos_ - start)));
            } catch (const ParseError& e) {
                pos_ = start;
                fail(e.what());
            }
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return Parser(text).parse(); }

}  // namespace clusterchar
