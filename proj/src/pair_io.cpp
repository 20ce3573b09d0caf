#include "rghw/pair_io.hpp"

#include <fstream>

namespace rghw {

using nlohmann::json;

json field_to_json(const Field& f) {
    json j;
    j["p"] = f.p();
    j["m"] = f.m();
    if (f.m() > 1) {
        json mod = json::array();
        for (felt c : f.modulus()) mod.push_back(c);
        j["modulus"] = mod;
    }
    return j;
}

FieldPtr field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("m"))
        throw IoError("field object needs integer members p and m");
    const std::uint64_t p = j.at("p").get<std::uint64_t>();
    const std::uint64_t m = j.at("m").get<std::uint64_t>();
    if (m < 1 || m > 32) throw IoError("field extension degree out of range");
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (q > kMaxFieldOrder / p) throw DomainError("field order exceeds configured cap 2^16");
        q *= p;
    }
    FieldPtr f = Field::make(q);
    if (j.contains("modulus")) {
        std::vector<felt> mod = j.at("modulus").get<std::vector<felt>>();
        // Fields are canonical artifacts: a pair file must carry the same
        // modulus field_new would pick, or shares stop being reproducible.
        if (mod != f->modulus())
            throw InvalidParams("modulus differs from the canonical one for this field order");
    } else if (m > 1) {
        throw IoError("extension field requires a modulus");
    }
    return f;
}

namespace {

MatrixFq matrix_from_json(const json& rows, const FieldPtr& f, int n, const char* name) {
    if (!rows.is_array()) throw IoError(std::string(name) + " must be an array of rows");
    MatrixFq m(f, int(rows.size()), n);
    int r = 0;
    for (const json& row : rows) {
        if (!row.is_array() || int(row.size()) != n)
            throw IoError(std::string(name) + " row width differs from n");
        int c = 0;
        for (const json& v : row) {
            std::uint64_t x = v.get<std::uint64_t>();
            if (x >= f->q()) throw IoError(std::string(name) + " entry outside [0, q)");
            m.at(r, c++) = felt(x);
        }
        ++r;
    }
    return m;
}

json matrix_to_json(const MatrixFq& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        rows.push_back(row);
    }
    return rows;
}

} // namespace

json pair_to_json(const NestedPair& p) {
    json j;
    j["field"] = field_to_json(*p.c1.field);
    j["n"] = p.n();
    j["G1"] = matrix_to_json(p.c1.G);
    j["G2"] = matrix_to_json(p.c2.G);
    return j;
}

NestedPair pair_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("n") || !j.contains("G1") ||
        !j.contains("G2"))
        throw IoError("pair file needs members field, n, G1, G2");
    FieldPtr f = field_from_json(j.at("field"));
    const int n = j.at("n").get<int>();
    if (n < 0 || n > 4096) throw IoError("block length out of range");
    LinearCode c1 = make_code(f, n, matrix_from_json(j.at("G1"), f, n, "G1"));
    LinearCode c2 = make_code(f, n, matrix_from_json(j.at("G2"), f, n, "G2"));
    return nested_pair(std::move(c1), std::move(c2));
}

NestedPair read_pair_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open pair file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw IoError("malformed JSON in " + path + ": " + e.what());
    }
    return pair_from_json(j);
}

void write_pair_file(const std::string& path, const NestedPair& p) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write pair file: " + path);
    out << pair_to_json(p).dump(2) << "\n";
}

} // namespace rghw
