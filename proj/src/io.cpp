#include "clusterchar/io.hpp"

#include <fstream>
#include <sstream>

#include "clusterchar/errors.hpp"

namespace clusterchar {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError((path.empty() ? std::string("<root>") : path) + ": " + what);
}

const json& member(const json& j, const std::string& path, const char* key) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

std::int64_t as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<std::int64_t>();
}

const std::string& as_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get_ref<const std::string&>();
}

int int_param(const json& params, const std::string& path, const char* key, int fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    return static_cast<int>(as_int(*it, join(path, key)));
}

}  // namespace

json to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::object();
        for (const auto& [v, e] : m.entries()) exps[v.name()] = e;
        out.push_back({{"exponents", exps}, {"coeff", c.get_str()}});
    }
    return out;
}

LaurentPoly laurent_from_json(const json& j) {
    if (!j.is_array()) fail("", "expected an array of terms");
    LaurentPoly p;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string path = "[" + std::to_string(i) + "]";
        const json& exps = member(j[i], path, "exponents");
        if (!exps.is_object()) fail(join(path, "exponents"), "expected an object");
        std::vector<Monomial::Entry> entries;
        for (auto it = exps.begin(); it != exps.end(); ++it) {
            VarId v;
            try {
                v = parse_var(it.key());
            } catch (const ParseError& e) {
                fail(join(path, "exponents." + it.key()), e.what());
            }
            entries.emplace_back(v, static_cast<int>(as_int(it.value(), join(path, "exponents." + it.key()))));
        }
        const std::string& cs = as_string(member(j[i], path, "coeff"), join(path, "coeff"));
        BigInt c;
        if (cs.empty() || c.set_str(cs, 10) != 0) fail(join(path, "coeff"), "'" + cs + "' is not a decimal integer");
        p.add_term(Monomial::from_entries(std::move(entries)), c);
    }
    return p;
}

json to_json(const Quiver& q) {
    json arrows = json::array();
    for (const auto& a : q.arrows()) arrows.push_back({{"src", q.vertices()[a.src]}, {"tgt", q.vertices()[a.tgt]}});
    return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
    if (j.is_string()) {
        try {
            return catalog_quiver(parse_quiver_kind(j.get<std::string>()));
        } catch (const UnsupportedQuiver& e) {
            fail("quiver", e.what());
        }
    }
    const json& vs = member(j, "", "vertices");
    if (!vs.is_array()) fail("vertices", "expected an array");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vs.size(); ++i) names.push_back(as_string(vs[i], "vertices[" + std::to_string(i) + "]"));
    const json& as = member(j, "", "arrows");
    if (!as.is_array()) fail("arrows", "expected an array");
    std::vector<std::pair<std::string, std::string>> arrows;
    for (std::size_t i = 0; i < as.size(); ++i) {
        const std::string path = "arrows[" + std::to_string(i) + "]";
        const std::string& src = as_string(member(as[i], path, "src"), path + ".src");
        const std::string& tgt = as_string(member(as[i], path, "tgt"), path + ".tgt");
        arrows.emplace_back(src, tgt);
    }
    try {
        return Quiver::from_names(std::move(names), arrows);
    } catch (const Error& e) {
        fail("", e.what());
    }
}

json to_json(const IntRep& rep) {
    json dim = json::object();
    for (std::size_t i = 0; i < rep.dim().size(); ++i) dim[rep.quiver().vertices()[i]] = rep.dim()[i];
    json ms = json::object();
    for (std::size_t a = 0; a < rep.matrices().size(); ++a) ms[std::to_string(a)] = rep.matrix(a).to_rows();
    return {{"dim", dim}, {"matrices", ms}};
}

json to_json(const ModuleFamily& f) {
    json params = json::object();
    switch (f.id) {
        case FamilyId::kronecker_homogeneous:
        case FamilyId::affineA21_homogeneous:
            params["n"] = f.n;
            params["lambda"] = f.lambda;
            break;
        case FamilyId::kronecker_preprojective:
        case FamilyId::kronecker_preinjective: params["k"] = f.n; break;
        case FamilyId::affineA21_tube:
            params["i"] = f.index;
            params["n"] = f.n;
            break;
    }
    return {{"family", family_id_name(f.id)}, {"params", params}};
}

ModuleFamily family_from_json(const json& j) {
    ModuleFamily f;
    const std::string& name = as_string(member(j, "", "family"), "family");
    try {
        f.id = parse_family_id(name);
    } catch (const InvalidParams& e) {
        fail("family", e.what());
    }
    json params = json::object();
    if (auto it = j.find("params"); it != j.end()) {
        if (!it->is_object()) fail("params", "expected an object");
        params = *it;
    }
    f.n = int_param(params, "params", "n", 1);
    if (f.id == FamilyId::kronecker_preprojective || f.id == FamilyId::kronecker_preinjective)
        f.n = int_param(params, "params", "k", int_param(params, "params", "n", 0));
    f.lambda = int_param(params, "params", "lambda", 1);
    f.index = int_param(params, "params", "i", 1);
    return f;
}

IntRep module_from_json(const json& j, const Quiver* fallback) {
    if (!j.is_object()) fail("", "expected a module object");
    if (j.contains("family")) {
        const ModuleFamily f = family_from_json(j);
        try {
            return catalog_module(f);
        } catch (const InvalidParams& e) {
            fail("params", e.what());
        }
    }
    std::optional<Quiver> q;
    if (auto it = j.find("quiver"); it != j.end()) {
        q = quiver_from_json(*it);
    } else if (fallback != nullptr) {
        q = *fallback;
    } else {
        fail("quiver", "explicit module needs a quiver");
    }
    const json& dj = member(j, "", "dim");
    if (!dj.is_object()) fail("dim", "expected an object keyed by vertex");
    std::vector<int> dim(q->vertex_count(), 0);
    for (auto it = dj.begin(); it != dj.end(); ++it) {
        std::size_t v = 0;
        try {
            v = q->index_of(it.key());
        } catch (const Error&) {
            fail("dim." + it.key(), "unknown vertex");
        }
        const auto d = as_int(it.value(), "dim." + it.key());
        if (d < 0) fail("dim." + it.key(), "dimension must be non-negative");
        dim[v] = static_cast<int>(d);
    }
    const json& mj = member(j, "", "matrices");
    if (!mj.is_object()) fail("matrices", "expected an object keyed by arrow index");
    std::vector<IntMatrix> ms;
    for (std::size_t a = 0; a < q->arrows().size(); ++a) {
        const auto rows = static_cast<std::size_t>(dim[q->arrows()[a].tgt]);
        const auto cols = static_cast<std::size_t>(dim[q->arrows()[a].src]);
        const std::string path = "matrices." + std::to_string(a);
        auto it = mj.find(std::to_string(a));
        if (it == mj.end()) {
            if (rows != 0 && cols != 0) fail(path, "missing matrix for arrow " + std::to_string(a));
            ms.emplace_back(rows, cols);
            continue;
        }
        if (!it->is_array() || it->size() != rows)
            fail(path, "expected " + std::to_string(rows) + " rows (dim of the arrow's target)");
        IntMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            const json& row = (*it)[r];
            const std::string rp = path + "[" + std::to_string(r) + "]";
            if (!row.is_array() || row.size() != cols)
                fail(rp, "expected " + std::to_string(cols) + " entries (dim of the arrow's source)");
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = as_int(row[c], rp + "[" + std::to_string(c) + "]");
        }
        ms.push_back(std::move(m));
    }
    for (auto it = mj.begin(); it != mj.end(); ++it) {
        bool known = false;
        for (std::size_t a = 0; a < q->arrows().size(); ++a) known = known || it.key() == std::to_string(a);
        if (!known) fail("matrices." + it.key(), "no such arrow index");
    }
    std::vector<std::int64_t> excluded;
    if (auto it = j.find("excluded_primes"); it != j.end()) {
        if (!it->is_array()) fail("excluded_primes", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i)
            excluded.push_back(as_int((*it)[i], "excluded_primes[" + std::to_string(i) + "]"));
    }
    return {*q, DimVector(dim), std::move(ms), std::move(excluded)};
}

json to_json(const CountProfile& prof) {
    auto samples = [](const auto& list) {
        json out = json::array();
        for (const auto& [p, c] : list) out.push_back({{"prime", p}, {"count", c.get_str()}});
        return out;
    };
    json coeffs = json::array();
    for (const auto& c : prof.counting_poly.coefficients) coeffs.push_back(c.get_str());
    return {{"e", prof.e.values()},
            {"degree_bound", prof.degree_bound},
            {"samples", samples(prof.samples)},
            {"held_out", samples(prof.held_out)},
            {"counting_polynomial", prof.counting_poly.to_string()},
            {"coefficients", coeffs},
            {"chi", prof.chi.get_str()}};
}

json to_json(const CharTermTable& table) {
    json terms = json::array();
    for (const auto& t : table.terms)
        terms.push_back({{"e", t.e.values()}, {"chi", t.chi.get_str()}, {"term", t.term.to_string()}});
    return {{"dim", table.dim.values()},
            {"terms", terms},
            {"character", table.total.to_string()},
            {"character_terms", to_json(table.total)}};
}

json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

}  // namespace clusterchar
