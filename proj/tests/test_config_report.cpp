#include <doctest.h>

#include <sstream>
#include <string>

#include "qannulus/config.hpp"
#include "qannulus/errors.hpp"
#include "qannulus/report.hpp"

using namespace qannulus;

TEST_CASE("config parsing") {
    const RunConfig c = parse_config("# run\n[params]\na = 2.5\nb=1\ngamma = 4\n\n[run]\nseed = 11\n[spectrum]\nwindows = 10, 20\n");
    CHECK(c.params.a == 2.5);
    CHECK(c.params.gamma == 4.0);
    CHECK(c.seed == 11);
    CHECK(c.spectrum_windows == std::vector<long>{10, 20});
    CHECK(c.n_min == -25);
}

TEST_CASE("config errors name the field and line") {
    try {
        (void)parse_config("[params]\na = 2\nzeta = 1\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.field == "params.zeta");
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(parse_config("[params]\na = two\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[params]\na = 1\na = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[beta]\nvariant = table\n"), ConfigError);
}

TEST_CASE("table paths resolve against the config file") {
    const RunConfig c = parse_config("[beta]\nvariant = table\ntable = t.csv\n", "/some/dir");
    CHECK(c.beta_table == std::filesystem::path("/some/dir/t.csv"));
}

TEST_CASE("csv format") {
    CsvTable t({"k", "x", "s"});
    t.add({1L, 0.1, std::string("ok")});
    t.add({2L, 1.0 / 3.0, std::string("b")});
    std::ostringstream os;
    t.write(os);
    CHECK(os.str() == "k,x,s\n1,0.10000000000000001,ok\n2,0.33333333333333331,b\n");
    CHECK(format_real(2.0) == "2");
}

TEST_CASE("shipped configs load") {
    const std::filesystem::path dir = std::filesystem::path(QANNULUS_SOURCE_DIR) / "configs";
    const RunConfig d = load_config(dir / "default.conf");
    CHECK(d.params.a == 2.0);
    CHECK(d.window == 0);
    CHECK(d.out_dir.lexically_normal() == (dir / "../out").lexically_normal());
    const RunConfig s = load_config(dir / "sine.conf");
    CHECK(s.beta_variant == "sine");
    CHECK_FALSE(s.beta().is_canonical());
}
