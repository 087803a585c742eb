#pragma once

#include <string>
#include <vector>

#include "stark/unitary.hpp"

namespace stark::cli {

struct TableRow {
    double half_width;
    double field;
    std::vector<double> values;
};

struct TableFixture {
    int id;
    Preset bc;
    double tolerance;
    std::vector<TableRow> rows;
};

/// Reads data/table<id>.csv (reference eigenvalues shipped with the repo).
/// data_dir empty selects the built-in default location.
TableFixture load_table_fixture(int id, const std::string& data_dir);

std::string default_data_dir();

}  // namespace stark::cli
