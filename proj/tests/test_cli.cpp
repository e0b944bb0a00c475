#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "wreathmac/checks.hpp"
#include "wreathmac/jsonio.hpp"
#include "wreathmac/wreath.hpp"

using namespace wreathmac;

namespace {
struct CacheSandbox {
    CacheSandbox() { set_cache_dir(""); }
};
static CacheSandbox sandbox;
}  // namespace

TEST_CASE("weyl grammar parse/render identity on canonical requests") {
    for (int r : {2, 3}) {
        for (const char* text : {"", "s0", "s1 s0", "w0", "t[1,-1]", "s1 t[1,-1]"}) {
            std::string t(text);
            if (r == 3) {
                // adapt the translation token to three entries
                size_t pos = t.find("t[1,-1]");
                if (pos != std::string::npos) t = t.substr(0, pos) + "t[1,-1,0]";
            }
            AffineWeylElt w = AffineWeylElt::parse(r, t);
            // canonical re-render: u and beta rebuild the same element
            AffineWeylElt back = AffineWeylElt(w.u(), w.beta());
            CHECK(back == w);
        }
        CHECK_THROWS_AS(AffineWeylElt::parse(r, "sx"), ParseError);
        CHECK_THROWS_AS(AffineWeylElt::parse(r, "t[1]"), ParseError);
        CHECK_THROWS_AS(AffineWeylElt::parse(r, "q3"), ParseError);
    }
}

TEST_CASE("multipartition literals round trip") {
    for (const char* text : {"[[1],[],[]]", "[[],[],[]]", "[[2,1],[1],[3]]"}) {
        MultiPartition mp = MultiPartition::parse(text);
        CHECK(mp.str() == text);
    }
    CHECK_THROWS_AS(MultiPartition::parse("[1,2]"), ParseError);
}

TEST_CASE("wreath key canonical json is stable") {
    WreathKey key(3, AffineWeylElt::parse(3, "s2 s1 t[1,-1,0]"), MultiPartition::parse("[[1],[],[]]"));
    CHECK(key.canonical_json() ==
          "{\"beta\":[1,-1,0],\"mu\":[[1],[],[]],\"r\":3,\"u\":[2,0,1],\"variant\":\"standard\"}");
}

TEST_CASE("multisym json round trip, r = 3 and r = 1") {
    WreathKey key(3, AffineWeylElt::parse(3, "t[0,1,-1]"), MultiPartition::parse("[[1],[],[1]]"));
    const MultiSymFn& h = solve_H(key);
    std::string js = multisym_to_json(h);
    CHECK(multisym_from_json(js, 3) == h);
    WreathKey k1(1, AffineWeylElt(1), MultiPartition::parse("[[2]]"));
    const MultiSymFn& h1 = solve_H(k1);
    std::string js1 = multisym_to_json(h1);
    CHECK(js1.find("\"s[2]\":\"1\"") != std::string::npos);
    CHECK(js1.find("\"s[1,1]\":\"q\"") != std::string::npos);
    CHECK(multisym_from_json(js1, 1) == h1);
}

TEST_CASE("warm cache returns byte-identical values") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "wreathmac-cli-cache";
    fs::remove_all(dir);
    set_cache_dir(dir.string());
    WreathKey key(2, AffineWeylElt::parse(2, "s1 s0"), MultiPartition::parse("[[1],[1]]"));
    std::string first = multisym_to_json(solve_H(key));
    // a fresh read of the cache entry must reproduce the same JSON
    std::string second = multisym_to_json(solve_H(key));
    CHECK(first == second);
    set_cache_dir("");
    fs::remove_all(dir);
}

TEST_CASE("paper example suite passes end to end") {
    auto outcomes = run_checks(paper_example_checks(), 2);
    for (const auto& o : outcomes) {
        INFO(o.group << "/" << o.name << ": " << o.detail);
        CHECK(o.pass);
    }
}
