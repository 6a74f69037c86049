// End-to-end checks of the installed binary: determinism, cache
// behaviour, and exit codes. The binary path comes from HECKE_CLI_BIN
// (set by CMake at test registration time).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* p = std::getenv("HECKE_CLI_BIN");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("hecke-cli-test-" + std::to_string(static_cast<unsigned long>(::getpid())) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

}  // namespace

TEST_CASE("repeated runs are byte-identical") {
    RunResult first = run("genfun --N 2 --mode exact");
    RunResult second = run("genfun --N 2 --mode exact");
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("\"version\"") != std::string::npos);

    RunResult t1 = run("genfun --N 3 --mode series --max-weight 8");
    RunResult t2 = run("genfun --N 3 --mode series --max-weight 8");
    CHECK(t1.code == 0);
    CHECK(t1.out == t2.out);
}

TEST_CASE("cache is transparent") {
    TempDir dir;
    std::string cache = " --cache-dir " + dir.path.string();
    RunResult cold = run("genfun --N 2 --mode series --max-weight 12" + cache);
    CHECK(cold.code == 0);
    bool wrote = false;
    for (const auto& e : fs::directory_iterator(dir.path)) {
        (void)e;
        wrote = true;
    }
    CHECK(wrote);
    RunResult warm = run("genfun --N 2 --mode series --max-weight 12" + cache);
    CHECK(warm.code == 0);
    CHECK(warm.out == cold.out);

    RunResult verified = run("verify --N 2 --max-weight 12" + cache);
    CHECK(verified.code == 0);
}

TEST_CASE("a corrupted cache entry fails verification") {
    TempDir dir;
    std::string cache = " --cache-dir " + dir.path.string();
    REQUIRE(run("genfun --N 2 --mode series --max-weight 12" + cache).code == 0);

    // flip one coefficient digit inside the cached table
    for (const auto& e : fs::directory_iterator(dir.path)) {
        std::ifstream in(e.path());
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        auto pos = text.find("\"num\": \"9\"");
        REQUIRE(pos != std::string::npos);  // the a -> 9a entry
        text.replace(pos, 10, "\"num\": \"8\"");
        std::ofstream out(e.path());
        out << text;
    }
    RunResult bad = run("verify --N 2 --max-weight 12" + cache);
    CHECK(bad.code == 1);
    CHECK(bad.out.find("mismatch") != std::string::npos);
}

TEST_CASE("qexp output") {
    RunResult r = run("qexp --form e --terms 3 --format text");
    CHECK(r.code == 0);
    CHECK(r.out == "-2/3, -16, -16\n");
}

TEST_CASE("trace output") {
    RunResult r = run("trace --N 2 --weight 12 --format text");
    CHECK(r.code == 0);
    CHECK(r.out == "2025\n");
}

TEST_CASE("exit codes") {
    CHECK(run("genfun --N 4").code == 2);        // unsupported level
    CHECK(run("frobnicate").code == 2);          // unknown subcommand
    CHECK(run("").code == 2);                    // missing subcommand
    CHECK(run("genfun --N 7 --mode exact").code == 3);
    CHECK(run("genfun --N 5 --basis power --mode exact").code == 3);
    CHECK(run("genfun --N 5 --basis symmetric --mode exact").code == 0);
}
