#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gfq/cache.hpp"
#include "gfq/operators.hpp"

using namespace gfq;
namespace fs = std::filesystem;

namespace {

// fresh store rooted under the system temp dir, removed on destruction
struct TempCache {
    fs::path root;
    Cache cache;

    TempCache() {
        root = fs::temp_directory_path() /
               ("gfq-cache-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(root);
        cache.dir = root;
    }
    ~TempCache() {
        std::error_code ec;
        fs::remove_all(root, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void dump(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << text;
}

}  // namespace

TEST_CASE("disabled cache ignores stores and misses loads") {
    Cache cache;  // empty dir
    CHECK(!cache.enabled());
    const Cache::Key key{2, 4, 1, 1, "basis"};
    CHECK(!cache.store_report(key, "{}\n"));
    CHECK(!cache.load_report(key).has_value());
}

TEST_CASE("sector state lists round-trip") {
    TempCache tmp;
    const auto basis = enumerate_sector(make_spec(2, 4), 1, 2);
    const Cache::Key key{2, 4, 1, 2, "basis"};
    REQUIRE(tmp.cache.store_sector(key, basis->states));
    const auto back = tmp.cache.load_sector(key, basis->layout.mode_count());
    REQUIRE(back.has_value());
    CHECK(*back == basis->states);
}

TEST_CASE("operator matrices round-trip exactly") {
    TempCache tmp;
    OperatorAlgebra ops(std::make_shared<FockContext>(make_spec(2, 4), 1));
    const auto& op = ops.E(1, 3, 2);
    const Cache::Key key{2, 4, 1, 2, "E_1_3"};
    REQUIRE(tmp.cache.store_operator(key, op));
    const auto back = tmp.cache.load_operator(key, ops.sector(2), ops.sector(2));
    REQUIRE(back.has_value());
    CHECK(back->equals(op));
    CHECK(back->parity() == op.parity());
}

TEST_CASE("reports round-trip byte for byte") {
    TempCache tmp;
    const Cache::Key key{2, 4, 2, 3, "branch_1_1"};
    const std::string payload = "{\n  \"x\": \"7/2\"\n}\n";
    REQUIRE(tmp.cache.store_report(key, payload));
    const auto back = tmp.cache.load_report(key);
    REQUIRE(back.has_value());
    CHECK(*back == payload);
}

TEST_CASE("conventions version bump invalidates entries") {
    TempCache tmp;
    const Cache::Key key{2, 4, 1, 1, "report"};
    REQUIRE(tmp.cache.store_report(key, "content\n"));
    const auto p = tmp.cache.path_for("report", key);
    REQUIRE(fs::exists(p));
    auto text = slurp(p);
    const auto pos = text.find("conventions ");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, text.find('\n', pos) - pos, "conventions 0");
    dump(p, text);
    CHECK(!tmp.cache.load_report(key).has_value());
}

TEST_CASE("corrupt payload is a miss not an exception") {
    TempCache tmp;
    const auto basis = enumerate_sector(make_spec(1, 4), 1, 1);
    const Cache::Key key{1, 4, 1, 1, "basis"};
    REQUIRE(tmp.cache.store_sector(key, basis->states));
    const auto p = tmp.cache.path_for("sector", key);
    REQUIRE(fs::exists(p));
    const auto text = slurp(p);
    dump(p, text.substr(0, text.size() / 2) + "garbage");
    const auto back = tmp.cache.load_sector(key, basis->layout.mode_count());
    CHECK(!back.has_value());
}

TEST_CASE("key mismatch under a forged path is rejected") {
    TempCache tmp;
    const Cache::Key key{2, 4, 1, 1, "report"};
    const Cache::Key other{2, 4, 1, 2, "report"};
    REQUIRE(tmp.cache.store_report(key, "content\n"));
    const auto from = tmp.cache.path_for("report", key);
    const auto to = tmp.cache.path_for("report", other);
    fs::create_directories(to.parent_path());
    fs::copy_file(from, to, fs::copy_options::overwrite_existing);
    CHECK(!tmp.cache.load_report(other).has_value());
}

TEST_CASE("wrong mode count is rejected on sector load") {
    TempCache tmp;
    const auto basis = enumerate_sector(make_spec(2, 4), 1, 1);
    const Cache::Key key{2, 4, 1, 1, "basis"};
    REQUIRE(tmp.cache.store_sector(key, basis->states));
    CHECK(!tmp.cache.load_sector(key, basis->layout.mode_count() + 1).has_value());
}
