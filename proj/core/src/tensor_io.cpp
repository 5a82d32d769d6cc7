#include "exflat/tensor_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace exflat {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw TensorFileError(origin + ": " + what);
}

int require_dim(const ordered_json& j, const std::string& origin, const char* field) {
    if (!j.contains(field)) fail(origin, std::string("missing field \"") + field + "\"");
    if (!j[field].is_number_integer() || j[field].get<long long>() < 1)
        fail(origin, std::string("field \"") + field + "\" must be a positive integer");
    return j[field].get<int>();
}

}  // namespace

Tensor3 parse_tensor_json(const std::string& text, const std::string& origin) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(origin, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail(origin, "top level must be an object");
    if (!j.contains("version") || j["version"] != 1) fail(origin, "expected \"version\": 1");
    if (!j.contains("symmetric") || !j["symmetric"].is_boolean())
        fail(origin, "missing boolean field \"symmetric\"");
    const bool symmetric = j["symmetric"].get<bool>();

    const int m = require_dim(j, origin, "m");
    const int n = require_dim(j, origin, "n");
    int k = n;
    if (symmetric) {
        if (j.contains("k") && j["k"] != n) fail(origin, "symmetric tensor requires k = n");
    } else {
        k = require_dim(j, origin, "k");
    }

    if (!j.contains("slices") || !j["slices"].is_array() ||
        static_cast<int>(j["slices"].size()) != m)
        fail(origin, "field \"slices\" must be an array of " + std::to_string(m) + " slices");

    std::vector<Rational> entries(static_cast<std::size_t>(m) * n * k);
    for (int i = 0; i < m; ++i) {
        const auto& slice = j["slices"][i];
        if (!slice.is_array() || static_cast<int>(slice.size()) != n)
            fail(origin, "slice " + std::to_string(i + 1) + " must have " + std::to_string(n) +
                             " rows");
        for (int a = 0; a < n; ++a) {
            const auto& row = slice[a];
            if (!row.is_array() || static_cast<int>(row.size()) != k)
                fail(origin, "slice " + std::to_string(i + 1) + ", row " + std::to_string(a + 1) +
                                 " must have " + std::to_string(k) + " entries");
            for (int b = 0; b < k; ++b) {
                const auto& cell = row[b];
                const std::string where = "slice " + std::to_string(i + 1) + ", row " +
                                          std::to_string(a + 1) + ", col " + std::to_string(b + 1);
                if (!cell.is_string()) fail(origin, where + ": entry must be a rational string");
                try {
                    entries[(static_cast<std::size_t>(i) * n + a) * k + b] =
                        parse_rational(cell.get<std::string>());
                } catch (const std::invalid_argument& e) {
                    fail(origin, where + ": " + e.what());
                }
            }
        }
    }

    if (symmetric)
        for (int i = 0; i < m; ++i)
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (entries[(static_cast<std::size_t>(i) * n + a) * k + b] !=
                        entries[(static_cast<std::size_t>(i) * n + b) * k + a])
                        fail(origin, "slice " + std::to_string(i + 1) + " is not symmetric at (" +
                                         std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");

    return Tensor3(m, n, k, symmetric, std::move(entries));
}

Tensor3 read_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TensorFileError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tensor_json(buf.str(), path);
}

std::string tensor_to_json(const Tensor3& x, bool pretty) {
    ordered_json j;
    j["version"] = 1;
    j["m"] = x.m();
    j["n"] = x.n();
    if (!x.symmetric()) j["k"] = x.k();
    j["symmetric"] = x.symmetric();
    ordered_json slices_json = ordered_json::array();
    for (int i = 0; i < x.m(); ++i) {
        ordered_json slice = ordered_json::array();
        for (int a = 0; a < x.n(); ++a) {
            ordered_json row = ordered_json::array();
            for (int b = 0; b < x.k(); ++b) row.push_back(rational_to_string(x.at(i, a, b)));
            slice.push_back(std::move(row));
        }
        slices_json.push_back(std::move(slice));
    }
    j["slices"] = std::move(slices_json);
    return pretty ? j.dump(2) : j.dump();
}

void write_tensor_file(const std::string& path, const Tensor3& x) {
    std::ofstream out(path);
    if (!out) throw TensorFileError(path + ": cannot open file for writing");
    out << tensor_to_json(x, true) << "\n";
}

}  // namespace exflat
