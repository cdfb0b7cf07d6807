#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

std::string quote(const std::string &s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

Run run(std::initializer_list<std::string> args, bool with_stderr = false) {
    std::string cmd = quote(SEPGROID_CLI);
    for (const std::string &a : args) cmd += " " + quote(a);
    cmd += with_stderr ? " 2>&1" : " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fx(const std::string &name) { return std::string(SEPGROID_FIXTURES) + "/" + name + ".sg"; }

} // namespace

TEST_CASE("normalize") {
    const Run r = run({"normalize", fx("g3"), "a:p.1* a:p.1"});
    CHECK(r.code == 0);
    CHECK(r.out == "v:p\n");
}

TEST_CASE("monoid-eq with a one-step path") {
    const Run r = run({"monoid-eq", fx("g1"), "a:p", "a:p + a:q1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("Yes (1 step)", 0) == 0);
    const Run j = run({"--json", "monoid-eq", fx("g1"), "a:p", "a:p + a:q1"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["result"]["verdict"] == "Yes");
    CHECK(doc["result"]["path"].size() == 1);
    CHECK(doc["budget_exhausted"] == false);
}

TEST_CASE("equidecompose prints the certificate") {
    const Run r = run({"equidecompose", fx("g3"), "Z(v:p)", "Z(a:p.1 a:p.1*)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[a:p.1] ;") != std::string::npos);
    const Run j = run({"--json", "equidecompose", fx("g3"), "Z(v:p)", "Z(a:p.1 a:p.1*)"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["result"]["certificate"]["elements"] == nlohmann::json::array({"a:p.1"}));
}

TEST_CASE("exit codes") {
    CHECK(run({"monoid-eq", fx("g1"), "a:q1", "a:q2"}).code == 1);
    CHECK(run({"--max-steps", "3", "monoid-eq", fx("g2"), "a:w", "6*a:w"}).code == 2);
    CHECK(run({"cylinders", fx("g2"), "empty", "Z(e:f1 e:f1*) & Z(e:f2 e:f2*)"}).code == 0);
    CHECK(run({"cylinders", fx("g2"), "empty", "Z(v:w)"}).code == 1);
    CHECK(run({"validate", fx("g3")}).code == 0);
    CHECK(run({}).code == 64);
    CHECK(run({"frobnicate", fx("g3")}).code == 64);
    CHECK(run({"normalize", fx("g3")}).code == 64);
    CHECK(run({"normalize", "/nonexistent/graph.sg", "v:p"}).code == 66);
}

TEST_CASE("parse errors name the grammar") {
    const Run r = run({"normalize", fx("g3"), "a:p.1 q"}, true);
    CHECK(r.code == 65);
    CHECK(r.out.find("expected word:") != std::string::npos);
    const Run s = run({"typ", fx("g3"), "Z(v:p) +"}, true);
    CHECK(s.code == 65);
    CHECK(s.out.find("expected set:") != std::string::npos);
    const Run j = run({"--json", "monoid-eq", fx("g1"), "a:p +", "a:p"});
    CHECK(j.code == 65);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["error"]["kind"] == "parse");
    CHECK(doc["error"]["grammar"].get<std::string>().rfind("monoid element:", 0) == 0);
}

TEST_CASE("commands are deterministic") {
    for (int i = 0; i < 2; ++i) {
        const Run a = run({"--json", "idempotents", fx("g3"), "--max-exp", "2", "--max-len", "2"});
        const Run b = run({"--json", "idempotents", fx("g3"), "--max-exp", "2", "--max-len", "2"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("selftest passes on the fixtures") {
    const Run r = run({"selftest", fx("g0"), fx("g1"), fx("g2"), fx("g3")});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
