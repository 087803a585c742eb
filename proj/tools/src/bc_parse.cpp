#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "commands.hpp"

namespace stark::cli {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

// Entry grammar: "a", "bi", "i", "-i", "a+bi", "a-bi" with a, b plain
// floating-point literals.
cplx parse_complex_entry(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty matrix entry");

    const auto bad = [&]() {
        return std::invalid_argument("cannot parse complex entry '" + text + "'");
    };

    if (text.back() != 'i' && text.back() != 'I') {
        size_t used = 0;
        double v;
        try {
            v = std::stod(text, &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != text.size()) throw bad();
        return {v, 0.0};
    }

    // imaginary tail present; find the split between real and imaginary parts:
    // the last '+'/'-' that is not the leading sign and not an exponent sign
    std::string body = text.substr(0, text.size() - 1);  // drop trailing 'i'
    size_t splitpos = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        const char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            splitpos = k;
            break;
        }
    }
    std::string re_part, im_part;
    if (splitpos == std::string::npos) {
        re_part = "0";
        im_part = body;
    } else {
        re_part = body.substr(0, splitpos);
        im_part = body.substr(splitpos);
    }
    if (im_part.empty() || im_part == "+") im_part = "1";
    else if (im_part == "-") im_part = "-1";

    try {
        size_t u1 = 0, u2 = 0;
        const double re = std::stod(re_part, &u1);
        const double im = std::stod(im_part, &u2);
        if (u1 != re_part.size() || u2 != im_part.size()) throw bad();
        return {re, im};
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

BcChoice parse_bc(const std::string& spec) {
    if (spec.find(';') == std::string::npos && spec.find(',') == std::string::npos) {
        const Preset w = preset_from_name(spec);
        return {w, preset(w)};
    }
    const auto rows = split(spec, ';');
    if (rows.size() != 2) {
        throw std::invalid_argument("--bc matrix needs 2 rows separated by ';'");
    }
    const auto r0 = split(rows[0], ',');
    const auto r1 = split(rows[1], ',');
    if (r0.size() != 2 || r1.size() != 2) {
        throw std::invalid_argument("--bc matrix rows need 2 comma-separated entries");
    }
    Mat2 m{parse_complex_entry(r0[0]), parse_complex_entry(r0[1]),
           parse_complex_entry(r1[0]), parse_complex_entry(r1[1])};
    const double defect = unitarity_defect(m);
    if (!(defect <= 1e-10)) throw NonUnitaryMatrix(defect);
    return {std::nullopt, UnitaryBC{m}};
}

Format format_from_name(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "text") return Format::text;
    throw std::invalid_argument("unknown format: " + name);
}

}  // namespace stark::cli
