// clusterchar: command-line front end.
//
// Exit codes: 0 success, 1 a verified violation (a FAIL line or a
// non-subtraction-free result where positivity was asked for), 2 usage or
// input errors.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "clusterchar/bases.hpp"
#include "clusterchar/character.hpp"
#include "clusterchar/chebyshev.hpp"
#include "clusterchar/errors.hpp"
#include "clusterchar/grassmannian.hpp"
#include "clusterchar/io.hpp"
#include "clusterchar/mutation.hpp"
#include "clusterchar/verify.hpp"

using namespace clusterchar;

namespace {

struct ModuleArgs {
    std::string module_file;
    std::string family;
    std::string quiver;
    int n = 1;
    int k = 0;
    int i = 1;
    std::int64_t lambda = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--module", module_file, "module JSON file (family or explicit form)");
        cmd->add_option("--family", family, "catalog family id");
        cmd->add_option("--n", n, "quasi-length");
        cmd->add_option("--k", k, "preprojective/preinjective index");
        cmd->add_option("--i", i, "tube index (affineA21_tube)");
        cmd->add_option("--lambda", lambda, "point of a homogeneous tube");
        cmd->add_option("--quiver", quiver, "quiver for an explicit module: catalog name or JSON file");
    }

    IntRep resolve() const {
        if (!module_file.empty() && !family.empty()) throw InvalidArgument("use either --module or --family");
        if (!module_file.empty()) {
            std::optional<Quiver> q;
            if (!quiver.empty()) q = load_quiver(quiver);
            return module_from_json(read_json_file(module_file), q ? &*q : nullptr);
        }
        if (family.empty()) throw InvalidArgument("a module is required: --module FILE or --family NAME");
        ModuleFamily f;
        f.id = parse_family_id(family);
        f.n = (f.id == FamilyId::kronecker_preprojective || f.id == FamilyId::kronecker_preinjective) ? k : n;
        f.lambda = lambda;
        f.index = i;
        return catalog_module(f);
    }

    static Quiver load_quiver(const std::string& spec) {
        if (spec == "kronecker" || spec == "affineA2" || spec == "affineA21") return catalog_quiver(parse_quiver_kind(spec));
        return quiver_from_json(read_json_file(spec));
    }
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidArgument(std::string(what) + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

PrimePolicy policy_from(const std::string& primes) {
    return primes.empty() ? PrimePolicy::from_environment() : PrimePolicy::from_list(primes);
}

void print_poly(const LaurentPoly& p, bool as_json) {
    if (as_json) {
        std::cout << json{{"text", p.to_string()}, {"terms", to_json(p)}}.dump(2) << "\n";
    } else {
        std::cout << p.to_string() << "\n";
    }
}

int print_checks(const std::string& verb, const CheckList& checks, bool as_json) {
    if (as_json) {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        std::cout << json{{"verify", verb}, {"pass", all_pass(checks)}, {"instances", arr}}.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
            if (!c.pass && !c.detail.empty()) std::cout << ": " << c.detail;
            std::cout << "\n";
        }
    }
    return all_pass(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster characters, generalized Chebyshev polynomials and positivity checks"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    int exit_code = 0;

    // gencheb
    auto* gencheb = app.add_subcommand("gencheb", "generalized Chebyshev polynomial P_n");
    int g_n = 0;
    int g_start = 1;
    bool g_det = false;
    gencheb->add_option("--n", g_n, "length of the window")->required()->check(CLI::NonNegativeNumber);
    gencheb->add_option("--start", g_start, "first index of the window");
    gencheb->add_flag("--det", g_det, "compute via the determinant instead of the recurrence");
    gencheb->callback([&] {
        const ChebWindow w{g_start, g_n};
        print_poly(g_det ? gen_cheb_det(w) : gen_cheb(w), as_json);
    });

    // delta
    auto* delta_cmd = app.add_subcommand("delta", "Delta_{l,p}, optionally after the shift substitution");
    int d_l = 1;
    int d_p = 1;
    std::string d_sub = "none";
    bool d_u = false;
    bool d_cf = false;
    delta_cmd->add_option("--l", d_l)->required();
    delta_cmd->add_option("--p", d_p)->required();
    delta_cmd->add_option("--substitute", d_sub, "none | periodic | nonperiodic")
        ->check(CLI::IsMember({"none", "periodic", "nonperiodic"}));
    delta_cmd->add_flag("--with-u", d_u, "include the u_i terms in the substitution");
    delta_cmd->add_flag("--coefficient-free", d_cf, "set every q_i to 1");
    delta_cmd->callback([&] {
        LaurentPoly v = d_cf ? delta_cf(d_l, d_p) : delta(d_l, d_p);
        const int n = d_l * d_p;
        if (d_sub == "periodic") v = substitute(v, periodic_substitution(n, d_u));
        if (d_sub == "nonperiodic") v = substitute(v, shifted_substitution(n, d_u));
        print_poly(v, as_json);
        if (d_sub != "none" && !is_subtraction_free(v)) exit_code = 1;
    });

    // cheb
    auto* cheb = app.add_subcommand("cheb", "one-variable Chebyshev polynomials F_n, S_n");
    std::string c_kind = "second";
    int c_n = 0;
    bool c_sf = false;
    cheb->add_option("--kind", c_kind, "first | second")->check(CLI::IsMember({"first", "second"}));
    cheb->add_option("--n", c_n)->required()->check(CLI::NonNegativeNumber);
    cheb->add_flag("--s-from-f", c_sf, "print the decomposition of S_n into F-terms");
    cheb->callback([&] {
        if (c_sf) {
            const auto terms = s_from_f(c_n);
            if (as_json) {
                json arr = json::array();
                for (const auto& t : terms) arr.push_back({{"index", t.index}, {"multiplier", t.multiplier}});
                std::cout << json{{"n", c_n}, {"terms", arr}}.dump(2) << "\n";
            } else {
                std::string s;
                for (const auto& t : terms)
                    s += (s.empty() ? "" : " + ") + (t.index < 0 ? std::string("1") : "F" + std::to_string(t.index));
                std::cout << "S" << c_n << " = " << s << "\n";
            }
            return;
        }
        print_poly(c_kind == "first" ? cheb_first_kind(c_n) : cheb_second_kind(c_n), as_json);
    });

    // char
    auto* char_cmd = app.add_subcommand("char", "cluster character of a module");
    ModuleArgs ch_mod;
    ch_mod.attach(char_cmd);
    bool ch_cf = false;
    std::string ch_primes;
    char_cmd->add_flag("--coefficient-free", ch_cf, "specialize every y_i to 1");
    char_cmd->add_option("--primes", ch_primes, "comma-separated primes to sample");
    char_cmd->callback([&] {
        const IntRep rep = ch_mod.resolve();
        const CharTermTable table = char_table(rep, policy_from(ch_primes));
        const LaurentPoly value = ch_cf ? specialize_ones(table.total, Family::y) : table.total;
        if (as_json) {
            json j = to_json(table);
            j["coefficient_free"] = ch_cf;
            j["value"] = value.to_string();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << value.to_string() << "\n";
        }
    });

    // grass
    auto* grass = app.add_subcommand("grass", "quiver Grassmannian counts and Euler characteristics");
    ModuleArgs gr_mod;
    gr_mod.attach(grass);
    std::string gr_primes;
    std::string gr_e;
    grass->add_option("--primes", gr_primes, "comma-separated primes to sample");
    grass->add_option("--e", gr_e, "one dimension vector, e.g. 1,0 (default: all)");
    grass->callback([&] {
        const IntRep rep = gr_mod.resolve();
        const PrimePolicy policy = policy_from(gr_primes);
        std::vector<CountProfile> profiles;
        if (gr_e.empty()) {
            profiles = count_all(rep, policy);
        } else {
            profiles.push_back(counting_polynomial(rep, DimVector(parse_int_list(gr_e, "--e")), policy));
        }
        if (as_json) {
            json arr = json::array();
            for (const auto& p : profiles) arr.push_back(to_json(p));
            std::cout << json{{"dim", rep.dim().values()}, {"profiles", arr}}.dump(2) << "\n";
        } else {
            for (const auto& p : profiles)
                std::cout << "e=" << p.e.to_string() << " poly=" << p.counting_poly.to_string() << " chi=" << p.chi.get_str()
                          << "\n";
        }
    });

    // mutate
    auto* mutate_cmd = app.add_subcommand("mutate", "apply a mutation sequence to the initial seed");
    std::string m_quiver = "kronecker";
    std::string m_seq;
    bool m_principal = false;
    mutate_cmd->add_option("--quiver", m_quiver, "catalog name or quiver JSON file");
    mutate_cmd->add_option("--sequence", m_seq, "1-based vertices, e.g. 1,2,1")->required();
    mutate_cmd->add_flag("--principal", m_principal, "principal coefficients");
    mutate_cmd->callback([&] {
        const Quiver q = ModuleArgs::load_quiver(m_quiver);
        std::vector<std::size_t> seq;
        for (int k : parse_int_list(m_seq, "--sequence")) {
            if (k < 1 || static_cast<std::size_t>(k) > q.vertex_count())
                throw InvalidArgument("--sequence: vertex " + std::to_string(k) + " out of range");
            seq.push_back(static_cast<std::size_t>(k - 1));
        }
        const Seed s = mutate_sequence(initial_seed(q, m_principal), seq);
        if (as_json) {
            json cl = json::array();
            for (const auto& x : s.cluster) cl.push_back(x.to_string());
            std::cout << json{{"depth", s.depth}, {"matrix", s.matrix}, {"cluster", cl}}.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < s.cluster.size(); ++i)
                std::cout << "x" << i + 1 << "' = " << s.cluster[i].to_string() << "\n";
        }
    });

    // variables
    auto* variables = app.add_subcommand("variables", "cluster variables reachable within a depth");
    std::string v_quiver = "kronecker";
    int v_depth = 1;
    bool v_principal = false;
    variables->add_option("--quiver", v_quiver, "catalog name or quiver JSON file");
    variables->add_option("--depth", v_depth)->check(CLI::NonNegativeNumber);
    variables->add_flag("--principal", v_principal, "principal coefficients");
    variables->callback([&] {
        const auto vs = cluster_variables_up_to(ModuleArgs::load_quiver(v_quiver), v_depth, v_principal);
        if (as_json) {
            json arr = json::array();
            for (const auto& v : vs) arr.push_back(v.to_string());
            std::cout << json{{"depth", v_depth}, {"variables", arr}}.dump(2) << "\n";
        } else {
            for (const auto& v : vs) std::cout << v.to_string() << "\n";
        }
    });

    // basis
    auto* basis = app.add_subcommand("basis", "basis elements and their positivity");
    std::string b_kind = "B";
    std::string b_quiver = "kronecker";
    int b_max = 4;
    basis->add_option("--kind", b_kind, "B | C | G")->check(CLI::IsMember({"B", "C", "G"}));
    basis->add_option("--max-n", b_max)->check(CLI::NonNegativeNumber);
    basis->add_option("--quiver", b_quiver, "kronecker | affineA2");
    basis->callback([&] {
        const auto report =
            verify_positivity(parse_quiver_kind(b_quiver), parse_basis_kind(b_kind), b_max, 4, PrimePolicy::from_environment());
        if (as_json) {
            json arr = json::array();
            for (const auto& e : report.entries)
                arr.push_back({{"element", e.label}, {"value", e.value.to_string()}, {"subtraction_free", e.subtraction_free}});
            std::cout << json{{"kind", b_kind}, {"quiver", b_quiver}, {"elements", arr}}.dump(2) << "\n";
        } else {
            for (const auto& e : report.entries)
                std::cout << (e.subtraction_free ? "+ " : "- ") << e.label << " : " << e.value.to_string() << "\n";
        }
        if (!report.all_positive()) exit_code = 1;
    });

    // verify
    auto* verify = app.add_subcommand("verify", "check an identity instance by instance");
    std::string what;
    int v_n = 6;
    std::string vq = "kronecker";
    std::string vk = "B";
    verify->add_option("what", what)
        ->required()
        ->check(CLI::IsMember(check_names()));
    verify->add_option("--n", v_n, "size bound (n, lp, or the dim entry bound for catalog-pos)");
    verify->add_option("--quiver", vq, "kronecker | affineA2");
    verify->add_option("--kind", vk, "basis kind for basis-pos");
    verify->callback([&] {
        const CheckList checks = run_check(what, v_n, parse_quiver_kind(vq), parse_basis_kind(vk));
        exit_code = print_checks(what, checks, as_json);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
