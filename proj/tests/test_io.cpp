#include <gtest/gtest.h>

#include <random>

#include "clusterchar/errors.hpp"
#include "clusterchar/io.hpp"

using namespace clusterchar;

namespace {

// Runs f and returns the ParseError message, or "" if nothing was thrown.
template <class F>
std::string parse_error(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Io, LaurentRoundTrip) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> ex(-3, 3);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly p;
        for (int k = 0; k < 4; ++k)
            p.add_term(Monomial::from_entries({{{Family::x, 1}, ex(rng)}, {{Family::y, 2}, ex(rng) + 3}}), ex(rng));
        EXPECT_EQ(laurent_from_json(json::parse(to_json(p).dump())), p);
    }
    const LaurentPoly big = parse_laurent("123456789012345678901234567890*x1");
    EXPECT_EQ(to_json(big)[0]["coeff"], "123456789012345678901234567890");
    EXPECT_EQ(laurent_from_json(to_json(big)), big);
}

TEST(Io, LaurentErrors) {
    EXPECT_NE(parse_error([] { laurent_from_json(json::parse(R"([{"exponents":{"x1":1},"coeff":"1x"}])")); })
                  .find("[0].coeff"),
              std::string::npos);
    EXPECT_NE(parse_error([] { laurent_from_json(json::parse(R"([{"exponents":{"w1":1},"coeff":"1"}])")); })
                  .find("[0].exponents.w1"),
              std::string::npos);
    EXPECT_NE(parse_error([] { laurent_from_json(json::parse(R"({})")); }), "");
}

TEST(Io, QuiverRoundTrip) {
    for (const Quiver& q : {Quiver::kronecker(), Quiver::affine_a21()}) {
        const Quiver back = quiver_from_json(json::parse(to_json(q).dump()));
        EXPECT_EQ(back.vertices(), q.vertices());
        EXPECT_EQ(to_json(back), to_json(q));
    }
    EXPECT_EQ(to_json(quiver_from_json("kronecker")), to_json(Quiver::kronecker()));
    EXPECT_EQ(to_json(Quiver::kronecker()).dump(),
              R"({"vertices":["1","2"],"arrows":[{"src":"1","tgt":"2"},{"src":"1","tgt":"2"}]})");
}

TEST(Io, QuiverErrors) {
    EXPECT_NE(parse_error([] { quiver_from_json(json::parse(R"({"vertices":["1","2"],"arrows":[{"src":1,"tgt":"2"}]})")); })
                  .find("arrows[0].src"),
              std::string::npos);
    EXPECT_NE(parse_error([] { quiver_from_json(json::parse(R"({"vertices":["1","2"],"arrows":[{"src":"1","tgt":"2"},{"src":"2","tgt":"1"}]})")); }),
              "");
    EXPECT_NE(parse_error([] { quiver_from_json("wild"); }), "");
}

TEST(Io, ModuleForms) {
    const IntRep a = module_from_json(json::parse(R"({"family":"kronecker_homogeneous","params":{"n":2,"lambda":0}})"));
    EXPECT_EQ(a, catalog_module({FamilyId::kronecker_homogeneous, 2, 0, 1}));
    const IntRep b = module_from_json(json::parse(
        R"({"quiver":"kronecker","dim":{"1":2,"2":2},"matrices":{"0":[[1,0],[0,1]],"1":[[0,1],[0,0]]}})"));
    EXPECT_EQ(b, a);
    const Quiver k = Quiver::kronecker();
    EXPECT_EQ(module_from_json(json::parse(to_json(a).dump()), &k), a);
    const IntRep c = module_from_json(json::parse(R"({"family":"kronecker_preinjective","params":{"k":1}})"));
    EXPECT_EQ(c.dim(), DimVector({2, 1}));
    EXPECT_EQ(family_from_json(to_json(ModuleFamily{FamilyId::affineA21_tube, 3, 1, 2})),
              (ModuleFamily{FamilyId::affineA21_tube, 3, 1, 2}));
    const IntRep ex = module_from_json(
        json::parse(R"({"quiver":"kronecker","dim":{"2":1},"matrices":{},"excluded_primes":[5]})"));
    EXPECT_EQ(ex.dim(), DimVector({0, 1}));
    EXPECT_EQ(ex.excluded_primes(), (std::vector<std::int64_t>{5}));
}

TEST(Io, ModuleErrorsCarryFieldPath) {
    const auto err = [](const char* text) {
        return parse_error([&] { module_from_json(json::parse(text)); });
    };
    EXPECT_NE(err(R"({"quiver":"kronecker","dim":{"1":1,"2":1},"matrices":{"0":[[1]],"1":[["a"]]}})")
                  .find("matrices.1[0][0]: expected an integer"),
              std::string::npos);
    EXPECT_NE(err(R"({"quiver":"kronecker","dim":{"1":1,"2":1},"matrices":{"0":[[1,1]],"1":[[1]]}})")
                  .find("matrices.0[0]"),
              std::string::npos);
    EXPECT_NE(err(R"({"quiver":"kronecker","dim":{"3":1},"matrices":{}})").find("dim.3"), std::string::npos);
    EXPECT_NE(err(R"({"quiver":"kronecker","dim":{"1":1,"2":1},"matrices":{"0":[[1]]}})").find("matrices.1"),
              std::string::npos);
    EXPECT_NE(err(R"({"dim":{"1":1},"matrices":{}})").find("quiver"), std::string::npos);
    EXPECT_NE(err(R"({"family":"nope"})").find("family"), std::string::npos);
    EXPECT_NE(err(R"({"family":"kronecker_homogeneous","params":{"n":"2"}})").find("params.n"), std::string::npos);
    EXPECT_NE(err(R"({"family":"kronecker_homogeneous","params":{"n":0}})").find("params"), std::string::npos);
}

TEST(Io, TextDiagnostics) {
    const std::string msg = parse_error([] { parse_json_text("{\n  \"a\": ,\n}", "input"); });
    EXPECT_NE(msg.find("input"), std::string::npos);
    EXPECT_NE(msg.find("line 2"), std::string::npos);
    EXPECT_NE(parse_error([] { read_json_file("/nonexistent/file.json"); }), "");
}
