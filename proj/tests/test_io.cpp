#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>

#include "greedy/dictionary.hpp"
#include "greedy/errors.hpp"
#include "greedy/io.hpp"

using namespace greedy;

TEST_CASE("g17 formatting round-trips doubles") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 7.25, -0.0, 123456789.123456789}) {
        const std::string s = fmt_g17(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(fmt_g17(0.5) == "0.5");
    CHECK(fmt_g17(0.0) == "0");
    CHECK(fmt_g17(2.0) == "2");
}

TEST_CASE("csv dictionary load normalizes and labels") {
    const Dictionary d = load_dictionary_text("3,4\n0,2\n", DictFormat::Csv);
    CHECK(d.size() == 2);
    CHECK(d.dim() == 2);
    CHECK(d.atom(0)[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(d.atom(0)[1] == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(d.atom(1)[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d.label() == "csv");
}

TEST_CASE("csv dictionary rejects malformed input") {
    CHECK_THROWS_AS(load_dictionary_text("", DictFormat::Csv), ParseError);
    CHECK_THROWS_AS(load_dictionary_text("\n \n", DictFormat::Csv), ParseError);
    CHECK_THROWS_AS(load_dictionary_text("1,0\n1\n", DictFormat::Csv),
                    InconsistentRowError);
    CHECK_THROWS_AS(load_dictionary_text("1,apple\n", DictFormat::Csv), ParseError);
    CHECK_THROWS_AS(load_dictionary_text("1,,2\n", DictFormat::Csv), ParseError);
    CHECK_THROWS_AS(load_dictionary_text("0,0\n", DictFormat::Csv), ZeroAtomError);
}

TEST_CASE("csv rows tolerate surrounding whitespace and blank lines") {
    const Dictionary d =
        load_dictionary_text("\n 1 , 0 \n\n0,1\r\n", DictFormat::Csv);
    CHECK(d.size() == 2);
    CHECK(d.atom(0)[0] == 1.0);
    CHECK(d.atom(1)[1] == 1.0);
}

TEST_CASE("json dictionary load and failure modes") {
    const Dictionary d = load_dictionary_text(
        R"({"dim": 2, "atoms": [[3, 4], [0, 1]]})", DictFormat::Json);
    CHECK(d.size() == 2);
    CHECK(d.atom(0)[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(d.label() == "json");

    CHECK_THROWS_AS(load_dictionary_text("{", DictFormat::Json), ParseError);
    CHECK_THROWS_AS(load_dictionary_text("[]", DictFormat::Json), ParseError);
    CHECK_THROWS_AS(load_dictionary_text(R"({"dim": 2})", DictFormat::Json),
                    ParseError);
    CHECK_THROWS_AS(
        load_dictionary_text(R"({"dim": 0, "atoms": [[1]]})", DictFormat::Json),
        ParseError);
    CHECK_THROWS_AS(
        load_dictionary_text(R"({"dim": 2, "atoms": [[1, 0], [1]]})",
                             DictFormat::Json),
        InconsistentRowError);
    CHECK_THROWS_AS(
        load_dictionary_text(R"({"dim": 1, "atoms": [["x"]]})", DictFormat::Json),
        ParseError);
    CHECK_THROWS_AS(
        load_dictionary_text(R"({"dim": 2, "atoms": []})", DictFormat::Json),
        ParseError);
}

TEST_CASE("signal rows") {
    std::istringstream one("0.5,0.25,-1\n");
    const Vector v = load_signal_csv(one);
    REQUIRE(v.dim() == 3);
    CHECK(v[0] == 0.5);
    CHECK(v[2] == -1.0);

    std::istringstream empty("\n\n");
    CHECK_THROWS_AS(load_signal_csv(empty), ParseError);
    std::istringstream two("1,2\n3,4\n");
    CHECK_THROWS_AS(load_signal_csv(two), ParseError);
}

TEST_CASE("value lists accept commas and newlines") {
    std::istringstream in("1, 0.75\n0.5\n\n0.25,0.125\n");
    const std::vector<double> v = load_values(in);
    REQUIRE(v.size() == 5);
    CHECK(v[0] == 1.0);
    CHECK(v[1] == 0.75);
    CHECK(v[2] == 0.5);
    CHECK(v[4] == 0.125);

    std::istringstream nothing(" \n");
    CHECK_THROWS_AS(load_values(nothing), ParseError);
}

TEST_CASE("dictionary csv round-trip preserves every coordinate") {
    // %.17g round-trips the text exactly; the reload renormalizes, which can
    // move a coordinate by an ulp when the stored norm is not exactly 1.0.
    const Dictionary d = make_random_unit_dictionary(6, 15, 44);
    const std::string csv = dictionary_to_csv(d);
    const Dictionary back = load_dictionary_text(csv, DictFormat::Csv);
    REQUIRE(back.size() == d.size());
    REQUIRE(back.dim() == d.dim());
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t k = 0; k < d.dim(); ++k) {
            CHECK(back.atom(i)[k] == doctest::Approx(d.atom(i)[k]).epsilon(1e-15));
        }
    }

    // exact-norm atoms survive bitwise
    const Dictionary id = make_orthonormal_dictionary(5, 5);
    const Dictionary id_back =
        load_dictionary_text(dictionary_to_csv(id), DictFormat::Csv);
    for (std::size_t i = 0; i < id.size(); ++i) {
        CHECK(id_back.atom(i).coords() == id.atom(i).coords());
    }
}

TEST_CASE("file write and read round-trip") {
    const auto dir = std::filesystem::temp_directory_path() / "greedy-io-test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "blob.txt").string();
    const std::string content = "alpha\nbeta,gamma\n";
    write_file(path, content);
    CHECK(read_file(path) == content);
    std::filesystem::remove_all(dir);
}

TEST_CASE("missing files raise io errors") {
    CHECK_THROWS_AS(load_dictionary_file("/nonexistent/dict.csv"), IoError);
    CHECK_THROWS_AS(load_signal_file("/nonexistent/signal.csv"), IoError);
    CHECK_THROWS_AS(load_values_file("/nonexistent/values.csv"), IoError);
    CHECK_THROWS_AS(read_file("/nonexistent/blob"), IoError);
    CHECK_THROWS_AS(write_file("/nonexistent/dir/out.csv", "x"), IoError);
}

TEST_CASE("extension dispatch picks the json parser") {
    const auto dir = std::filesystem::temp_directory_path() / "greedy-io-ext";
    std::filesystem::create_directories(dir);
    const std::string jpath = (dir / "d.json").string();
    write_file(jpath, R"({"dim": 2, "atoms": [[1, 0], [0, 1]]})");
    const Dictionary dj = load_dictionary_file(jpath);
    CHECK(dj.size() == 2);
    CHECK(dj.label() == "json");

    const std::string cpath = (dir / "d.csv").string();
    write_file(cpath, "1,0\n0,1\n");
    const Dictionary dc = load_dictionary_file(cpath);
    CHECK(dc.label() == "csv");
    std::filesystem::remove_all(dir);
}
