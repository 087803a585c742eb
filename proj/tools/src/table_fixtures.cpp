#include "table_fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stark::cli {

std::string default_data_dir() {
    if (const char* env = std::getenv("STARKWELL_DATA")) return env;
#ifdef STARKWELL_DEFAULT_DATA_DIR
    return STARKWELL_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

TableFixture load_table_fixture(int id, const std::string& data_dir) {
    if (id < 1 || id > 4) {
        throw std::invalid_argument("table id must be 1..4");
    }
    TableFixture fx;
    fx.id = id;
    switch (id) {
        case 1: fx.bc = Preset::dirichlet; break;
        case 2: fx.bc = Preset::neumann; break;
        case 3: fx.bc = Preset::mixed; break;
        case 4: fx.bc = Preset::periodic; break;
    }
    fx.tolerance = id == 4 ? 5e-3 : 5e-4;

    const std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
    const std::string path = dir + "/table" + std::to_string(id) + ".csv";
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open reference fixture " + path);
    }
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        TableRow row;
        int col = 0;
        while (std::getline(ss, cell, ',')) {
            const double v = std::stod(cell);
            if (col == 0) row.half_width = v;
            else if (col == 1) row.field = v;
            else row.values.push_back(v);
            ++col;
        }
        fx.rows.push_back(std::move(row));
    }
    if (fx.rows.empty()) {
        throw std::invalid_argument("fixture " + path + " has no rows");
    }
    return fx;
}

}  // namespace stark::cli
