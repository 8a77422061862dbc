#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <sstream>
#include <stdexcept>

#include "satopt/csv.hpp"

using namespace satopt;

TEST_CASE("value formatting is scientific with nine significant digits") {
    CHECK(csv::format_value(1.0) == "1.00000000e+00");
    CHECK(csv::format_value(0.0) == "0.00000000e+00");
    CHECK(csv::format_value(-3.14159265358979) == "-3.14159265e+00");
    CHECK(csv::format_value(1.23456789e-12) == "1.23456789e-12");
    CHECK(csv::format_value(9.999999994e+20) == "9.99999999e+20");
}

TEST_CASE("writer emits header plus rows with LF endings") {
    csv::SweepResult r;
    r.columns = {"x", "y"};
    r.rows = {{1.0, 2.0}, {2.0, 4.0}};
    std::ostringstream out;
    csv::write_csv(out, r);
    CHECK(out.str() ==
          "x,y\n"
          "1.00000000e+00,2.00000000e+00\n"
          "2.00000000e+00,4.00000000e+00\n");
}

TEST_CASE("writer rejects malformed sweeps") {
    csv::SweepResult r;
    std::ostringstream out;
    CHECK_THROWS_AS(csv::write_csv(out, r), std::invalid_argument);

    r.columns = {"x", "y"};
    r.rows = {{1.0, 2.0}, {1.0, 3.0}}; // non-increasing abscissa
    CHECK_THROWS_AS(csv::write_csv(out, r), std::invalid_argument);

    r.rows = {{1.0, 2.0}, {2.0}}; // width mismatch
    CHECK_THROWS_AS(csv::write_csv(out, r), std::invalid_argument);

    r.rows = {{1.0, std::numeric_limits<double>::quiet_NaN()}};
    CHECK_THROWS_AS(csv::write_csv(out, r), std::invalid_argument);
    r.rows = {{1.0, std::numeric_limits<double>::infinity()}};
    CHECK_THROWS_AS(csv::write_csv(out, r), std::invalid_argument);
}

TEST_CASE("negative abscissas are fine as long as they increase") {
    csv::SweepResult r;
    r.columns = {"x"};
    r.rows = {{-5.0}, {-1.0}, {0.0}, {2.5}};
    std::ostringstream out;
    CHECK_NOTHROW(csv::write_csv(out, r));
}

TEST_CASE("file writer reports unwritable paths") {
    csv::SweepResult r;
    r.columns = {"x"};
    r.rows = {{1.0}};
    CHECK_THROWS_AS(csv::write_csv_file("/nonexistent-dir/out.csv", r),
                    std::runtime_error);
}
