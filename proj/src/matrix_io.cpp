#include "pmul/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pmul {

using nlohmann::ordered_json;

namespace {

ordered_json header(Index rows, Index cols, Domain d, bool complex) {
    ordered_json j;
    j["rows"] = rows;
    j["cols"] = cols;
    j["domain"] = domain_name(d);
    j["complex"] = complex;
    return j;
}

std::string dump(const ordered_json& j) {
    return j.dump(2) + "\n";
}

} // namespace

std::string serialize_matrix(const Matrix& m) {
    ordered_json j = header(m.rows(), m.cols(), m.domain(), false);
    ordered_json data = ordered_json::array();
    for (const auto& v : m.data()) data.push_back(v.str());
    j["data"] = std::move(data);
    return dump(j);
}

std::string serialize_matrix(const CMatrix& m) {
    ordered_json j = header(m.rows(), m.cols(), m.domain(), true);
    ordered_json data = ordered_json::array();
    for (const auto& v : m.data()) data.push_back(ordered_json::array({v.re.str(), v.im.str()}));
    j["data"] = std::move(data);
    return dump(j);
}

Scalar parse_scalar(const std::string& text, Domain d) {
    if (text.empty()) throw FormatError("empty numeric literal");
    if (d == Domain::ExactInt) {
        try {
            return Scalar(BigInt(text));
        } catch (const std::exception&) {
            throw FormatError("bad integer literal '" + text + "'");
        }
    }
    double v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw FormatError("bad float literal '" + text + "'");
    return Scalar::real(v);
}

namespace {

MatrixFile parse_checked(const ordered_json& j) {
    const Index rows = j["rows"].get<Index>();
    const Index cols = j["cols"].get<Index>();
    const std::string dom_str = j["domain"].get<std::string>();
    Domain d;
    if (dom_str == "int")
        d = Domain::ExactInt;
    else if (dom_str == "float")
        d = Domain::Float;
    else
        throw FormatError("unknown domain '" + dom_str + "'");
    const bool complex = j["complex"].get<bool>();
    const auto& data = j["data"];
    if (!data.is_array()) throw FormatError("'data' must be an array");
    if (rows == 0 || cols == 0) throw FormatError("matrix dimensions must be positive");
    if (data.size() != rows * cols)
        throw FormatError("declared shape " + std::to_string(rows) + "x" + std::to_string(cols) +
                          " does not match payload length " + std::to_string(data.size()));

    MatrixFile out;
    if (complex) {
        std::vector<CScalar> vals;
        vals.reserve(data.size());
        for (const auto& e : data) {
            if (!e.is_array() || e.size() != 2)
                throw FormatError("complex entries must be [re, im] pairs");
            vals.emplace_back(parse_scalar(e[0].get<std::string>(), d),
                              parse_scalar(e[1].get<std::string>(), d));
        }
        out.cmat = CMatrix(rows, cols, std::move(vals));
    } else {
        std::vector<Scalar> vals;
        vals.reserve(data.size());
        for (const auto& e : data) vals.push_back(parse_scalar(e.get<std::string>(), d));
        out.real = Matrix(rows, cols, std::move(vals));
    }
    return out;
}

} // namespace

MatrixFile parse_matrix_file(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw FormatError(std::string("matrix file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("matrix file root must be an object");
    for (const char* key : {"rows", "cols", "domain", "complex", "data"})
        if (!j.contains(key)) throw FormatError(std::string("matrix file missing '") + key + "'");

    try {
        return parse_checked(j);
    } catch (const ordered_json::exception& e) {
        throw FormatError(std::string("malformed matrix file: ") + e.what());
    }
}

MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_file(buf.str());
}

namespace {
void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << text;
}
} // namespace

void write_matrix_file(const std::string& path, const Matrix& m) {
    write_text(path, serialize_matrix(m));
}

void write_matrix_file(const std::string& path, const CMatrix& m) {
    write_text(path, serialize_matrix(m));
}

} // namespace pmul
