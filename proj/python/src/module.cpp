// Python bindings: clusterchar._core

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clusterchar/bases.hpp"
#include "clusterchar/character.hpp"
#include "clusterchar/chebyshev.hpp"
#include "clusterchar/errors.hpp"
#include "clusterchar/grassmannian.hpp"
#include "clusterchar/io.hpp"
#include "clusterchar/mutation.hpp"
#include "clusterchar/verify.hpp"

namespace py = pybind11;
using namespace clusterchar;

namespace {

// Big integers cross the boundary as Python ints via their decimal text.
py::int_ to_py(const BigInt& v) {
    const std::string text = v.get_str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

Substitution to_substitution(const std::map<std::string, LaurentPoly>& sigma) {
    Substitution out;
    for (const auto& [name, image] : sigma) out.emplace(parse_var(name), image);
    return out;
}

PrimePolicy policy_arg(const std::optional<std::vector<std::int64_t>>& primes) {
    if (!primes) return PrimePolicy::from_environment();
    PrimePolicy p;
    p.primes = *primes;
    p.auto_extend = false;
    return p;
}

ModuleFamily make_family(const std::string& family, int n, std::int64_t lambda, int i, int k) {
    ModuleFamily f;
    f.id = parse_family_id(family);
    f.n = (f.id == FamilyId::kronecker_preprojective || f.id == FamilyId::kronecker_preinjective) ? k : n;
    f.lambda = lambda;
    f.index = i;
    return f;
}

py::list checks_to_py(const CheckList& checks) {
    py::list out;
    for (const auto& c : checks) out.append(py::make_tuple(c.name, c.pass, c.detail));
    return out;
}

py::dict profile_to_py(const CountProfile& prof) {
    py::dict d;
    d["e"] = prof.e.values();
    d["degree_bound"] = prof.degree_bound;
    py::list samples;
    for (const auto& [p, c] : prof.samples) samples.append(py::make_tuple(p, to_py(c)));
    d["samples"] = samples;
    py::list held;
    for (const auto& [p, c] : prof.held_out) held.append(py::make_tuple(p, to_py(c)));
    d["held_out"] = held;
    py::list coeffs;
    for (const auto& c : prof.counting_poly.coefficients) coeffs.append(to_py(c));
    d["coefficients"] = coeffs;
    d["polynomial"] = prof.counting_poly.to_string();
    d["chi"] = to_py(prof.chi);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cluster characters, generalized Chebyshev polynomials and positivity checks";

    static py::exception<Error> base(m, "ClusterCharError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def(py::init<>())
        .def(py::init([](long c) { return LaurentPoly(c); }))
        .def_static("parse", [](const std::string& s) { return parse_laurent(s); })
        .def_static("var", [](const std::string& name) { return LaurentPoly::variable(parse_var(name)); })
        .def("__str__", &LaurentPoly::to_string)
        .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + p.to_string() + "')"; })
        .def("__len__", &LaurentPoly::size)
        .def("__hash__", [](const LaurentPoly& p) { return py::hash(py::str(p.to_string())); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const LaurentPoly& p, unsigned k) { return p.pow(k); })
        .def("is_zero", &LaurentPoly::is_zero)
        .def("is_subtraction_free", [](const LaurentPoly& p) { return is_subtraction_free(p); })
        .def("terms",
             [](const LaurentPoly& p) {
                 py::list out;
                 for (const auto& [mono, c] : p.terms()) {
                     py::dict exps;
                     for (const auto& [v, e] : mono.entries()) exps[py::str(v.name())] = e;
                     out.append(py::make_tuple(exps, to_py(c)));
                 }
                 return out;
             })
        .def("to_json", [](const LaurentPoly& p) { return to_json(p).dump(); });

    m.def("substitute", [](const LaurentPoly& p, const std::map<std::string, LaurentPoly>& sigma) {
        return substitute(p, to_substitution(sigma));
    });
    m.def("partial_derivative", [](const LaurentPoly& p, const std::string& v) { return partial_derivative(p, parse_var(v)); });
    m.def("specialize_ones", [](const LaurentPoly& p, const std::string& family) {
        const VarId v = parse_var(family + "1");
        return specialize_ones(p, v.family);
    });
    m.def("graded_coefficient", [](const LaurentPoly& p, const std::vector<int>& e) { return graded_coefficient(p, e); });
    m.def("exact_divide", &exact_divide);

    // chebyshev
    m.def("gen_cheb", [](int n, int start) { return gen_cheb({start, n}); }, py::arg("n"), py::arg("start") = 1);
    m.def("gen_cheb_det", [](int n, int start) { return gen_cheb_det({start, n}); }, py::arg("n"), py::arg("start") = 1);
    m.def("delta", &delta, py::arg("l"), py::arg("p"));
    m.def("delta_cf", &delta_cf, py::arg("l"), py::arg("p"));
    m.def("cheb_first_kind", &cheb_first_kind);
    m.def("cheb_second_kind", &cheb_second_kind);
    m.def("s_from_f", [](int n) {
        py::list out;
        for (const auto& t : s_from_f(n)) out.append(py::make_tuple(t.index, t.multiplier));
        return out;
    });
    m.def("substitute_periodic", [](const LaurentPoly& p, int n, bool with_u) {
        return substitute(p, periodic_substitution(n, with_u));
    }, py::arg("p"), py::arg("n"), py::arg("with_u") = false);
    m.def("substitute_shifted", [](const LaurentPoly& p, int n, bool with_u) {
        return substitute(p, shifted_substitution(n, with_u));
    }, py::arg("p"), py::arg("n"), py::arg("with_u") = false);

    // quiver
    py::class_<Quiver>(m, "Quiver")
        .def_static("kronecker", &Quiver::kronecker)
        .def_static("affine_a21", &Quiver::affine_a21)
        .def_static("from_json", [](const std::string& text) { return quiver_from_json(parse_json_text(text, "quiver")); })
        .def_property_readonly("vertices", &Quiver::vertices)
        .def("arrows",
             [](const Quiver& q) {
                 py::list out;
                 for (const auto& a : q.arrows()) out.append(py::make_tuple(q.vertices()[a.src], q.vertices()[a.tgt]));
                 return out;
             })
        .def("opposite", &Quiver::opposite)
        .def("to_json", [](const Quiver& q) { return to_json(q).dump(); });

    m.def("euler_form", [](const Quiver& q, const std::vector<int>& d, const std::vector<int>& e) {
        return euler_form(q, DimVector(d), DimVector(e));
    });

    py::class_<IntRep>(m, "IntRep")
        .def_static("from_json", [](const std::string& text) { return module_from_json(parse_json_text(text, "module")); })
        .def_property_readonly("dim", [](const IntRep& r) { return r.dim().values(); })
        .def_property_readonly("quiver", &IntRep::quiver)
        .def("matrices",
             [](const IntRep& r) {
                 std::vector<std::vector<std::vector<std::int64_t>>> out;
                 for (const auto& mat : r.matrices()) out.push_back(mat.to_rows());
                 return out;
             })
        .def("to_json", [](const IntRep& r) { return to_json(r).dump(); });

    m.def("catalog_module",
          [](const std::string& family, int n, std::int64_t lambda, int i, int k) {
              return catalog_module(make_family(family, n, lambda, i, k));
          },
          py::arg("family"), py::arg("n") = 1, py::arg("lambda_") = 1, py::arg("i") = 1, py::arg("k") = 0);
    m.def("direct_sum", &direct_sum);

    // grassmannian
    m.def("count_subreps", [](const IntRep& r, const std::vector<int>& e, std::int64_t p) {
        return to_py(count_subreps(r, DimVector(e), p));
    });
    m.def("counting_polynomial",
          [](const IntRep& r, const std::vector<int>& e, std::optional<std::vector<std::int64_t>> primes) {
              return profile_to_py(counting_polynomial(r, DimVector(e), policy_arg(primes)));
          },
          py::arg("rep"), py::arg("e"), py::arg("primes") = py::none());
    m.def("euler_char", [](const IntRep& r, const std::vector<int>& e) { return to_py(euler_char(r, DimVector(e))); });

    // character
    m.def("term_L", [](const IntRep& r, const std::vector<int>& e) { return term_L(r, DimVector(e)); });
    m.def("cluster_char", [](const IntRep& r) { return cluster_char(r); });
    m.def("cf_cluster_char", [](const IntRep& r) { return cf_cluster_char(r); });
    m.def("check_lemma_key", [](const IntRep& r, const IntRep& t) {
        const auto rep = check_lemma_key(r, t);
        return py::make_tuple(rep.l_m_zero, rep.l_tau_top, rep.holds);
    });
    m.def("char_via_chebyshev",
          [](const std::vector<std::pair<std::vector<int>, LaurentPoly>>& qs, int n, bool cf) {
              std::vector<QuasiSimple> list;
              for (const auto& [d, x] : qs) list.push_back({DimVector(d), x});
              return char_via_chebyshev(list, n, cf);
          },
          py::arg("quasi_simples"), py::arg("n"), py::arg("coefficient_free") = false);

    // mutation
    py::class_<Seed>(m, "Seed")
        .def_readonly("matrix", &Seed::matrix)
        .def_readonly("cluster", &Seed::cluster)
        .def_readonly("depth", &Seed::depth)
        .def(py::self == py::self);
    m.def("initial_seed", &initial_seed, py::arg("quiver"), py::arg("principal") = false);
    m.def("mutate", [](const Seed& s, std::size_t k) {
        if (k < 1) throw InvalidArgument("vertices are 1-based");
        return mutate(s, k - 1);
    });
    m.def("cluster_variables_up_to", &cluster_variables_up_to, py::arg("quiver"), py::arg("depth"),
          py::arg("principal") = false);

    // bases
    m.def("x_delta", [](const std::string& q, std::int64_t lambda) { return x_delta(parse_quiver_kind(q), lambda); },
          py::arg("quiver"), py::arg("lambda_") = 1);
    m.def("basis_element", [](const std::string& q, const std::string& kind, int n) {
        return basis_element(parse_quiver_kind(q), parse_basis_kind(kind), n).value;
    });

    // verification
    m.def("check_names", &check_names);
    m.def("verify", [](const std::string& what, int n, const std::string& quiver, const std::string& kind) {
        return checks_to_py(run_check(what, n, parse_quiver_kind(quiver), parse_basis_kind(kind)));
    }, py::arg("what"), py::arg("n") = 6, py::arg("quiver") = "kronecker", py::arg("kind") = "B");
}
