#include "clusterchar/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "clusterchar/errors.hpp"

namespace clusterchar {

// --------------------------------------------------------------- DimVector

DimVector::DimVector(std::vector<int> values) : values_(std::move(values)) {
    for (int v : values_) {
        if (v < 0) throw DimOutOfRange("dimension vectors have non-negative entries");
    }
}

DimVector DimVector::unit(std::size_t m, std::size_t i) {
    std::vector<int> v(m, 0);
    v.at(i) = 1;
    return DimVector(std::move(v));
}

bool DimVector::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](int v) { return v == 0; });
}

int DimVector::total() const { return std::accumulate(values_.begin(), values_.end(), 0); }

bool DimVector::fits_in(const DimVector& bound) const {
    if (bound.size() != size()) throw DimensionMismatch("dimension vectors of different length");
    for (std::size_t i = 0; i < size(); ++i) {
        if (values_[i] > bound.values_[i]) return false;
    }
    return true;
}

DimVector DimVector::operator+(const DimVector& other) const {
    if (other.size() != size()) throw DimensionMismatch("dimension vectors of different length");
    std::vector<int> r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = values_[i] + other.values_[i];
    return DimVector(std::move(r));
}

DimVector DimVector::operator-(const DimVector& other) const {
    if (other.size() != size()) throw DimensionMismatch("dimension vectors of different length");
    std::vector<int> r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = values_[i] - other.values_[i];
    return DimVector(std::move(r));
}

std::string DimVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(values_[i]);
    }
    return s + ")";
}

std::vector<DimVector> dims_below(const DimVector& d) {
    std::vector<DimVector> out;
    std::vector<int> cur(d.size(), 0);
    for (;;) {
        out.emplace_back(cur);
        std::size_t i = d.size();
        while (i > 0 && cur[i - 1] == d[i - 1]) {
            cur[i - 1] = 0;
            --i;
        }
        if (i == 0) return out;
        ++cur[i - 1];
    }
}

// ------------------------------------------------------------------ Quiver

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    const std::size_t m = vertices_.size();
    if (m == 0) throw InvalidQuiver("a quiver needs at least one vertex");
    {
        auto sorted = vertices_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidQuiver("duplicate vertex id");
    }
    std::vector<std::vector<std::size_t>> out(m);
    std::vector<std::size_t> indegree(m, 0);
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& a : arrows_) {
        if (a.src >= m || a.tgt >= m) throw InvalidQuiver("arrow endpoint out of range");
        if (a.src == a.tgt) throw InvalidQuiver("loop at vertex " + vertices_[a.src]);
        out[a.src].push_back(a.tgt);
        ++indegree[a.tgt];
        parent[find(a.src)] = find(a.tgt);
    }
    for (std::size_t v = 1; v < m; ++v) {
        if (find(v) != find(0)) throw InvalidQuiver("quiver is not connected");
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < m; ++v) {
        if (indegree[v] == 0) ready.push(v);
    }
    while (!ready.empty()) {
        std::size_t v = ready.top();
        ready.pop();
        topo_.push_back(v);
        for (std::size_t w : out[v]) {
            if (--indegree[w] == 0) ready.push(w);
        }
    }
    if (topo_.size() != m) throw InvalidQuiver("quiver has an oriented cycle");
}

Quiver Quiver::from_names(std::vector<std::string> vertices,
                          const std::vector<std::pair<std::string, std::string>>& arrows) {
    auto index = [&](const std::string& name) {
        auto it = std::find(vertices.begin(), vertices.end(), name);
        if (it == vertices.end()) throw InvalidQuiver("unknown vertex '" + name + "'");
        return static_cast<std::size_t>(it - vertices.begin());
    };
    std::vector<Arrow> as;
    for (const auto& [s, t] : arrows) as.push_back({index(s), index(t)});
    return {std::move(vertices), std::move(as)};
}

Quiver Quiver::kronecker() { return Quiver({"1", "2"}, {{0, 1}, {0, 1}}); }

Quiver Quiver::affine_a21() { return Quiver({"1", "2", "3"}, {{0, 1}, {1, 2}, {0, 2}}); }

std::size_t Quiver::index_of(const std::string& name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) throw InvalidQuiver("unknown vertex '" + name + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
}

int Quiver::arrow_count(std::size_t i, std::size_t j) const {
    return static_cast<int>(
        std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.src == i && a.tgt == j; }));
}

Quiver Quiver::opposite() const {
    std::vector<Arrow> rev;
    for (const auto& a : arrows_) rev.push_back({a.tgt, a.src});
    return {vertices_, std::move(rev)};
}

int euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    if (d.size() != q.vertex_count() || e.size() != q.vertex_count())
        throw DimensionMismatch("dimension vector length does not match the quiver (" + d.to_string() + ", "
                                + e.to_string() + ")");
    int s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) s += d[i] * e[i];
    for (const auto& a : q.arrows()) s -= d[a.src] * e[a.tgt];
    return s;
}

std::vector<DimVector> projective_dims(const Quiver& q) {
    const std::size_t m = q.vertex_count();
    const auto& topo = q.topological_order();
    std::vector<DimVector> out;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<int> paths(m, 0);
        paths[i] = 1;
        for (std::size_t v : topo) {
            for (const auto& a : q.arrows()) {
                if (a.src == v) paths[a.tgt] += paths[v];
            }
        }
        out.emplace_back(std::move(paths));
    }
    return out;
}

// --------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols_if_empty) {
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::jordan(std::size_t n, std::int64_t lambda) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = lambda;
        if (i + 1 < n) m.at(i, i + 1) = 1;
    }
    return m;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c);
    }
    return out;
}

// ------------------------------------------------------------------ IntRep

IntRep::IntRep(Quiver quiver, DimVector dim, std::vector<IntMatrix> matrices, std::vector<std::int64_t> excluded_primes)
    : quiver_(std::move(quiver)), dim_(std::move(dim)), matrices_(std::move(matrices)),
      excluded_(std::move(excluded_primes)) {
    if (dim_.size() != quiver_.vertex_count())
        throw DimensionMismatch("dimension vector " + dim_.to_string() + " does not match the quiver");
    if (matrices_.size() != quiver_.arrows().size())
        throw DimensionMismatch("expected one matrix per arrow (" + std::to_string(quiver_.arrows().size())
                                + "), got " + std::to_string(matrices_.size()));
    for (std::size_t a = 0; a < matrices_.size(); ++a) {
        const auto& arrow = quiver_.arrows()[a];
        const auto rows = static_cast<std::size_t>(dim_[arrow.tgt]);
        const auto cols = static_cast<std::size_t>(dim_[arrow.src]);
        if (matrices_[a].rows() != rows || matrices_[a].cols() != cols)
            throw DimensionMismatch("matrix of arrow " + std::to_string(a) + " has shape "
                                    + std::to_string(matrices_[a].rows()) + "x" + std::to_string(matrices_[a].cols())
                                    + ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    std::sort(excluded_.begin(), excluded_.end());
    excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
}

IntRep IntRep::zero(const Quiver& q) {
    std::vector<IntMatrix> ms(q.arrows().size());
    return {q, DimVector::zero(q.vertex_count()), std::move(ms)};
}

IntRep direct_sum(const IntRep& a, const IntRep& b) {
    if (!(a.quiver() == b.quiver())) throw QuiverMismatch("direct_sum of representations of different quivers");
    const auto& q = a.quiver();
    std::vector<IntMatrix> ms;
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
        const auto& ma = a.matrix(k);
        const auto& mb = b.matrix(k);
        IntMatrix m(ma.rows() + mb.rows(), ma.cols() + mb.cols());
        for (std::size_t r = 0; r < ma.rows(); ++r)
            for (std::size_t c = 0; c < ma.cols(); ++c) m.at(r, c) = ma.at(r, c);
        for (std::size_t r = 0; r < mb.rows(); ++r)
            for (std::size_t c = 0; c < mb.cols(); ++c) m.at(ma.rows() + r, ma.cols() + c) = mb.at(r, c);
        ms.push_back(std::move(m));
    }
    std::vector<std::int64_t> excluded = a.excluded_primes();
    excluded.insert(excluded.end(), b.excluded_primes().begin(), b.excluded_primes().end());
    return {q, a.dim() + b.dim(), std::move(ms), std::move(excluded)};
}

// ----------------------------------------------------------------- catalog

Quiver catalog_quiver(QuiverKind kind) {
    return kind == QuiverKind::kronecker ? Quiver::kronecker() : Quiver::affine_a21();
}

QuiverKind parse_quiver_kind(const std::string& name) {
    if (name == "kronecker") return QuiverKind::kronecker;
    if (name == "affineA2" || name == "affineA21") return QuiverKind::affineA2;
    throw UnsupportedQuiver("unknown catalog quiver '" + name + "' (expected kronecker or affineA2)");
}

std::string quiver_kind_name(QuiverKind kind) { return kind == QuiverKind::kronecker ? "kronecker" : "affineA2"; }

std::string family_id_name(FamilyId id) {
    switch (id) {
        case FamilyId::kronecker_homogeneous: return "kronecker_homogeneous";
        case FamilyId::kronecker_preprojective: return "kronecker_preprojective";
        case FamilyId::kronecker_preinjective: return "kronecker_preinjective";
        case FamilyId::affineA21_tube: return "affineA21_tube";
        case FamilyId::affineA21_homogeneous: return "affineA21_homogeneous";
    }
    return "?";
}

FamilyId parse_family_id(const std::string& name) {
    for (auto id : {FamilyId::kronecker_homogeneous, FamilyId::kronecker_preprojective,
                    FamilyId::kronecker_preinjective, FamilyId::affineA21_tube, FamilyId::affineA21_homogeneous}) {
        if (family_id_name(id) == name) return id;
    }
    throw InvalidParams("unknown module family '" + name + "'");
}

QuiverKind quiver_kind_of(FamilyId id) {
    switch (id) {
        case FamilyId::kronecker_homogeneous:
        case FamilyId::kronecker_preprojective:
        case FamilyId::kronecker_preinjective: return QuiverKind::kronecker;
        default: return QuiverKind::affineA2;
    }
}

std::string describe(const ModuleFamily& f) {
    std::string s = family_id_name(f.id) + "(";
    switch (f.id) {
        case FamilyId::kronecker_homogeneous:
        case FamilyId::affineA21_homogeneous:
            s += "n=" + std::to_string(f.n) + ",lambda=" + std::to_string(f.lambda);
            break;
        case FamilyId::kronecker_preprojective:
        case FamilyId::kronecker_preinjective: s += "k=" + std::to_string(f.n); break;
        case FamilyId::affineA21_tube: s += "i=" + std::to_string(f.index) + ",n=" + std::to_string(f.n); break;
    }
    return s + ")";
}

namespace {

void check_params(const ModuleFamily& f) {
    switch (f.id) {
        case FamilyId::kronecker_homogeneous:
        case FamilyId::affineA21_homogeneous:
            if (f.n < 1) throw InvalidParams(describe(f) + ": quasi-length must be >= 1");
            break;
        case FamilyId::kronecker_preprojective:
        case FamilyId::kronecker_preinjective:
            if (f.n < 0) throw InvalidParams(describe(f) + ": index must be >= 0");
            break;
        case FamilyId::affineA21_tube:
            if (f.n < 1) throw InvalidParams(describe(f) + ": quasi-length must be >= 1");
            if (f.index != 1 && f.index != 2) throw InvalidParams(describe(f) + ": tube index must be 1 or 2");
            break;
    }
}

// One step of the periodic walk around the affine A2 cycle that realises the
// rank-2 tube: the vertex at this phase, the arrow joining it to the next
// position, and whether that arrow points from this position to the next.
struct WalkStep {
    std::size_t vertex;
    std::size_t arrow;
    bool forward;
};

// a = 0 (1->2), b = 1 (2->3), c = 2 (1->3); vertices 0,1,2 are "1","2","3".
constexpr WalkStep kTubeWalk[3] = {
    {0, 2, true},   // 1 --c--> 3
    {2, 1, false},  // 3 <--b-- 2
    {1, 0, false},  // 2 <--a-- 1
};

IntRep string_module(const Quiver& q, std::size_t start_phase, std::size_t length) {
    std::vector<std::size_t> vertex_of(length);
    std::vector<std::size_t> slot(length);
    std::vector<int> dim(q.vertex_count(), 0);
    for (std::size_t k = 0; k < length; ++k) {
        vertex_of[k] = kTubeWalk[(start_phase + k) % 3].vertex;
        slot[k] = static_cast<std::size_t>(dim[vertex_of[k]]++);
    }
    std::vector<IntMatrix> ms;
    for (const auto& a : q.arrows()) {
        ms.emplace_back(static_cast<std::size_t>(dim[a.tgt]), static_cast<std::size_t>(dim[a.src]));
    }
    for (std::size_t k = 0; k + 1 < length; ++k) {
        const auto& step = kTubeWalk[(start_phase + k) % 3];
        const std::size_t from = step.forward ? k : k + 1;
        const std::size_t to = step.forward ? k + 1 : k;
        ms[step.arrow].at(slot[to], slot[from]) = 1;
    }
    return {q, DimVector(dim), std::move(ms)};
}

// Number of walk positions covered by the factors R_i, R_{i+1}, ... (n of them):
// R_1 occupies two positions (vertices 1 and 3), R_2 one (vertex 2).
std::size_t tube_string_length(int index, int n) {
    std::size_t len = 0;
    int cur = index;
    for (int k = 0; k < n; ++k) {
        len += cur == 1 ? 2 : 1;
        cur = cur == 1 ? 2 : 1;
    }
    return len;
}

}  // namespace

IntRep catalog_module(const ModuleFamily& f) {
    check_params(f);
    const auto n = static_cast<std::size_t>(f.n);
    switch (f.id) {
        case FamilyId::kronecker_homogeneous:
            return {Quiver::kronecker(), DimVector{f.n, f.n}, {IntMatrix::identity(n), IntMatrix::jordan(n, f.lambda)}};
        case FamilyId::kronecker_preprojective: {
            // k -> k+1 : A = [I_k; 0], B = [0; I_k]
            IntMatrix a(n + 1, n);
            IntMatrix b(n + 1, n);
            for (std::size_t i = 0; i < n; ++i) {
                a.at(i, i) = 1;
                b.at(i + 1, i) = 1;
            }
            return {Quiver::kronecker(), DimVector{f.n, f.n + 1}, {a, b}};
        }
        case FamilyId::kronecker_preinjective: {
            // k+1 -> k : A = [I_k | 0], B = [0 | I_k]
            IntMatrix a(n, n + 1);
            IntMatrix b(n, n + 1);
            for (std::size_t i = 0; i < n; ++i) {
                a.at(i, i) = 1;
                b.at(i, i + 1) = 1;
            }
            return {Quiver::kronecker(), DimVector{f.n + 1, f.n}, {a, b}};
        }
        case FamilyId::affineA21_tube:
            return string_module(Quiver::affine_a21(), f.index == 1 ? 0 : 2, tube_string_length(f.index, f.n));
        case FamilyId::affineA21_homogeneous:
            return {Quiver::affine_a21(), DimVector{f.n, f.n, f.n},
                    {IntMatrix::identity(n), IntMatrix::identity(n), IntMatrix::jordan(n, f.lambda)}};
    }
    throw InvalidParams("unknown family");
}

int tube_rank(FamilyId id) {
    switch (id) {
        case FamilyId::kronecker_homogeneous:
        case FamilyId::affineA21_homogeneous: return 1;
        case FamilyId::affineA21_tube: return 2;
        default: return 0;
    }
}

std::optional<ModuleFamily> tau(const ModuleFamily& f) {
    check_params(f);
    ModuleFamily r = f;
    switch (f.id) {
        case FamilyId::kronecker_homogeneous:
        case FamilyId::affineA21_homogeneous: return r;
        case FamilyId::affineA21_tube:
            r.index = f.index == 1 ? 2 : 1;
            return r;
        case FamilyId::kronecker_preprojective:
            if (f.n < 2) return std::nullopt;
            r.n = f.n - 2;
            return r;
        case FamilyId::kronecker_preinjective:
            r.n = f.n + 2;
            return r;
    }
    return std::nullopt;
}

bool is_projective(const ModuleFamily& f) { return !tau(f).has_value(); }

bool is_rigid(const ModuleFamily& f) {
    switch (f.id) {
        case FamilyId::kronecker_preprojective:
        case FamilyId::kronecker_preinjective: return true;
        case FamilyId::affineA21_tube: return f.n < 2;
        default: return false;
    }
}

std::vector<ModuleFamily> quasi_composition_factors(const ModuleFamily& f) {
    check_params(f);
    std::vector<ModuleFamily> out;
    switch (f.id) {
        case FamilyId::kronecker_homogeneous:
        case FamilyId::affineA21_homogeneous:
            for (int k = 0; k < f.n; ++k) out.push_back({f.id, 1, f.lambda, 1});
            break;
        case FamilyId::affineA21_tube: {
            int cur = f.index;
            for (int k = 0; k < f.n; ++k) {
                out.push_back({f.id, 1, 1, cur});
                cur = cur == 1 ? 2 : 1;
            }
            break;
        }
        default: break;
    }
    return out;
}

std::vector<ModuleFamily> catalog_families(QuiverKind kind) {
    std::vector<ModuleFamily> out;
    if (kind == QuiverKind::kronecker) {
        for (int n = 1; n <= 4; ++n) out.push_back({FamilyId::kronecker_homogeneous, n, 1, 1});
        for (int k = 0; k <= 3; ++k) out.push_back({FamilyId::kronecker_preprojective, k, 1, 1});
        for (int k = 0; k <= 3; ++k) out.push_back({FamilyId::kronecker_preinjective, k, 1, 1});
    } else {
        for (int i = 1; i <= 2; ++i)
            for (int n = 1; n <= 6; ++n) out.push_back({FamilyId::affineA21_tube, n, 1, i});
        for (int n = 1; n <= 3; ++n) out.push_back({FamilyId::affineA21_homogeneous, n, 1, 1});
    }
    return out;
}

}  // namespace clusterchar
