#include "dualpairs/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace dualpairs::json_io {

namespace {

template <class T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("JSON: missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw InputError(std::string("JSON: bad field '") + key + "': " + e.what());
    }
}

double parse_rational_string(const std::string& s) {
    const auto slash = s.find('/');
    auto to_i64 = [&](std::string_view part) {
        std::int64_t v = 0;
        const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
        if (res.ec != std::errc{} || res.ptr != part.data() + part.size()) throw InputError("JSON: bad rational '" + s + "'");
        return v;
    };
    const std::string_view sv(s);
    if (slash == std::string::npos) return static_cast<double>(to_i64(sv));
    const std::int64_t den = to_i64(sv.substr(slash + 1));
    if (den == 0) throw InputError("JSON: zero denominator in '" + s + "'");
    return Rational(to_i64(sv.substr(0, slash)), den).to_double();
}

double real_entry(const Json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_rational_string(v.get<std::string>());
    throw InputError("JSON: matrix entry is not a number");
}

struct Header {
    Index rows;
    Index cols;
    bool complex;
    const Json* data;
};

Header header(const Json& j) {
    Header h{field<Index>(j, "rows"), field<Index>(j, "cols"), j.contains("complex") ? field<bool>(j, "complex") : false,
             nullptr};
    if (h.rows < 0 || h.cols < 0) throw InputError("JSON: negative matrix dimension");
    if (!j.contains("data") || !j.at("data").is_array()) throw InputError("JSON: matrix 'data' must be an array");
    h.data = &j.at("data");
    if (static_cast<Index>(h.data->size()) != h.rows) throw InputError("JSON: matrix row count does not match 'rows'");
    for (const auto& row : *h.data) {
        if (!row.is_array() || static_cast<Index>(row.size()) != h.cols) {
            throw InputError("JSON: matrix row length does not match 'cols'");
        }
    }
    return h;
}

}  // namespace

Json to_json(const RealMat& a) {
    Json data = Json::array();
    for (Index i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
        data.push_back(std::move(row));
    }
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"complex", false}, {"data", std::move(data)}};
}

Json to_json(const ComplexMat& a) {
    Json data = Json::array();
    for (Index i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < a.cols(); ++j) row.push_back(Json::array({a(i, j).real(), a(i, j).imag()}));
        data.push_back(std::move(row));
    }
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"complex", true}, {"data", std::move(data)}};
}

Json to_json(const RationalMat& a) {
    Json data = Json::array();
    for (Index i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < a.cols(); ++j) {
            const Rational& x = a(i, j);
            if (x.is_integer()) {
                row.push_back(x.num());
            } else {
                row.push_back(std::to_string(x.num()) + "/" + std::to_string(x.den()));
            }
        }
        data.push_back(std::move(row));
    }
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"complex", false}, {"data", std::move(data)}};
}

bool is_complex_matrix(const Json& j) { return j.is_object() && j.contains("complex") && j.at("complex") == true; }

RealMat real_matrix(const Json& j) {
    const Header h = header(j);
    if (h.complex) throw InputError("JSON: expected a real matrix, got a complex one");
    RealMat a(h.rows, h.cols);
    for (Index i = 0; i < h.rows; ++i)
        for (Index k = 0; k < h.cols; ++k) a(i, k) = real_entry((*h.data)[i][k]);
    return a;
}

ComplexMat complex_matrix(const Json& j) {
    const Header h = header(j);
    ComplexMat a(h.rows, h.cols);
    for (Index i = 0; i < h.rows; ++i) {
        for (Index k = 0; k < h.cols; ++k) {
            const Json& v = (*h.data)[i][k];
            if (!h.complex) {
                a(i, k) = real_entry(v);
            } else {
                if (!v.is_array() || v.size() != 2) throw InputError("JSON: complex entry must be [re, im]");
                a(i, k) = cplx(real_entry(v[0]), real_entry(v[1]));
            }
        }
    }
    return a;
}

Json to_json(const gl::CotangentPoint& x) { return {{"Q", to_json(x.q)}, {"P", to_json(x.p)}}; }

gl::CotangentPoint cotangent_point(const Json& j) {
    if (!j.is_object() || !j.contains("Q") || !j.contains("P")) throw InputError("JSON: cotangent point needs 'Q' and 'P'");
    gl::CotangentPoint x{real_matrix(j.at("Q")), real_matrix(j.at("P"))};
    try {
        x.validate_shape();
    } catch (const DimensionError& e) {
        throw InputError(e.what());
    }
    return x;
}

Json to_json(const symplectic::OrbitInvariants& inv) {
    return {{"n", inv.n}, {"m", inv.m}, {"p", inv.p}, {"sigmas", inv.sigmas}, {"q", inv.q}, {"r", inv.r}};
}

symplectic::OrbitInvariants orbit_invariants(const Json& j) {
    symplectic::OrbitInvariants inv;
    inv.n = field<Index>(j, "n");
    inv.m = field<Index>(j, "m");
    inv.p = field<Index>(j, "p");
    inv.sigmas = field<std::vector<double>>(j, "sigmas");
    inv.q = field<Index>(j, "q");
    inv.r = field<Index>(j, "r");
    try {
        inv.validate();
    } catch (const std::exception& e) {
        throw InputError(std::string("JSON: invalid orbit invariants: ") + e.what());
    }
    return inv;
}

Json to_json(const gl::JordanData& jd) {
    Json blocks = Json::array();
    for (const auto& b : jd.blocks) blocks.push_back({{"re", b.lambda.real()}, {"im", b.lambda.imag()}, {"size", b.size}});
    return {{"blocks", std::move(blocks)}, {"nilpotent", jd.nilpotent}, {"n", jd.n}, {"m", jd.m}};
}

gl::JordanData jordan_data(const Json& j) {
    gl::JordanData jd;
    jd.n = field<Index>(j, "n");
    jd.m = field<Index>(j, "m");
    jd.nilpotent = field<std::vector<Index>>(j, "nilpotent");
    if (!j.contains("blocks") || !j.at("blocks").is_array()) throw InputError("JSON: 'blocks' must be an array");
    for (const auto& b : j.at("blocks")) {
        jd.blocks.push_back({cplx(field<double>(b, "re"), field<double>(b, "im")), field<Index>(b, "size")});
    }
    try {
        jd.validate();
    } catch (const std::exception& e) {
        throw InputError(std::string("JSON: invalid Jordan data: ") + e.what());
    }
    return jd;
}

Json read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

void write_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << dump(j) << '\n';
    if (!out) throw InputError("write to '" + path.string() + "' failed");
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace dualpairs::json_io
