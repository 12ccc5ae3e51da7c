#include <doctest.h>

#include "grwscmf/matrix_io.hpp"
#include "test_util.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace grwscmf;

namespace {

std::filesystem::path tmp_file(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "grwscmf_io_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

}  // namespace

TEST_SUITE("matrix_io") {

TEST_CASE("round trip preserves every value exactly") {
    Matrix m = testutil::random_matrix(7, 5, 99, -3.0, 3.0);
    m(0, 0) = 1.0 / 3.0;
    m(1, 1) = 1e-17;
    m(2, 2) = 12345678.98765432;
    m(3, 3) = -0.1;

    const auto path = tmp_file("roundtrip.csv");
    write_csv_matrix(path.string(), m);
    const Matrix back = read_csv_matrix(path.string());
    REQUIRE(back.rows() == m.rows());
    REQUIRE(back.cols() == m.cols());
    CHECK(back == m);  // bitwise, via full-precision formatting
}

TEST_CASE("ragged row reports the offending line") {
    const auto path = tmp_file("ragged.csv");
    write_text(path, "1,2\n3,4\n5,6,7\n");
    CHECK_THROWS_WITH_AS(read_csv_matrix(path.string()),
                         doctest::Contains(":3"), std::runtime_error);
}

TEST_CASE("unparsable and non-finite cells are rejected") {
    const auto bad = tmp_file("bad_cell.csv");
    write_text(bad, "1,2\n3,oops\n");
    CHECK_THROWS_WITH_AS(read_csv_matrix(bad.string()),
                         doctest::Contains(":2"), std::runtime_error);

    const auto inf = tmp_file("inf_cell.csv");
    write_text(inf, "1,inf\n");
    CHECK_THROWS_AS(read_csv_matrix(inf.string()), std::runtime_error);
}

TEST_CASE("comments, blank lines, and CRLF are tolerated") {
    const auto path = tmp_file("comments.csv");
    write_text(path, "# a comment\n\n1,2\r\n3,4\n");
    const Matrix m = read_csv_matrix(path.string());
    REQUIRE(m.rows() == 2);
    CHECK(m(1, 1) == 4.0);
}

TEST_CASE("tab-separated files are detected") {
    const auto path = tmp_file("tabs.tsv");
    write_text(path, "1\t2\t3\n4\t5\t6\n");
    const Matrix m = read_csv_matrix(path.string());
    REQUIRE(m.cols() == 3);
    CHECK(m(1, 0) == 4.0);
}

TEST_CASE("manifest parsing") {
    const auto path = tmp_file("good.manifest");
    write_text(path, "# dataset manifest\nlabel_count=6\n");
    CHECK(read_label_count_manifest(path.string()) == 6);

    const auto missing = tmp_file("empty.manifest");
    write_text(missing, "# nothing here\n");
    CHECK_THROWS_AS(read_label_count_manifest(missing.string()),
                    std::runtime_error);
}

}  // TEST_SUITE
