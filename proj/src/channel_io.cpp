#include "cchol/channel_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cchol {

namespace {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Index c = 0; c < m.cols(); ++c)
            row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

Complex scalar_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
        !j[1].is_number())
        throw ParseError(where + ": complex scalar must be a [re, im] pair");
    const Complex z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw ParseError(where + ": non-finite entry");
    return z;
}

// expected_rows/cols of -1 accept any (positive) extent.
ComplexMatrix matrix_from_json(const json& j, Index expected_rows,
                               Index expected_cols, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ParseError(where + ": matrix must be a nonempty array of rows");
    const Index rows = static_cast<Index>(j.size());
    if (expected_rows >= 0 && rows != expected_rows)
        throw DimensionError(where + ": expected " +
                             std::to_string(expected_rows) + " rows, got " +
                             std::to_string(rows));
    if (!j[0].is_array() || j[0].empty())
        throw ParseError(where + ": matrix rows must be nonempty arrays");
    const Index cols = static_cast<Index>(j[0].size());
    if (expected_cols >= 0 && cols != expected_cols)
        throw DimensionError(where + ": expected " +
                             std::to_string(expected_cols) + " columns, got " +
                             std::to_string(cols));
    ComplexMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            throw DimensionError(where + ": ragged row " + std::to_string(r));
        for (Index c = 0; c < cols; ++c)
            m(r, c) = scalar_from_json(row[static_cast<std::size_t>(c)],
                                       where + "(" + std::to_string(r) + "," +
                                           std::to_string(c) + ")");
    }
    return m;
}

Index positive_index_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("channel file: missing integer field '") +
                         key + "'");
    const auto value = j[key].get<std::int64_t>();
    if (value < 1)
        throw ParseError(std::string("channel file: '") + key +
                         "' must be a positive integer");
    return static_cast<Index>(value);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
    if (!j.is_object())
        throw ParseError("'" + path + "': top-level value must be an object");
    return j;
}

void store_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << j.dump(1) << '\n';
    if (!out)
        throw IoError("write to '" + path + "' failed");
}

} // namespace

ChannelFile make_entries_file(const ChannelSpec& ch) {
    ch.validate_shape();
    ChannelFile f;
    f.dim_in = ch.dim_in;
    f.dim_out = ch.dim_out;
    f.representation = Representation::entries;
    f.channel = ch;
    return f;
}

ChannelFile make_kraus_file(const std::vector<ComplexMatrix>& kraus) {
    ChannelFile f;
    f.representation = Representation::kraus;
    f.kraus = kraus;
    f.channel = from_kraus(kraus).channel;
    f.dim_in = f.channel.dim_in;
    f.dim_out = f.channel.dim_out;
    return f;
}

ChannelFile read_channel_file(const std::string& path) {
    const json j = load_json(path);

    ChannelFile f;
    if (!j.contains("format_version") || !j["format_version"].is_string())
        throw ParseError("channel file: missing string field 'format_version'");
    f.format_version = j["format_version"].get<std::string>();
    if (f.format_version != "1")
        throw ParseError("channel file: unrecognized format_version '" +
                         f.format_version + "'");

    f.dim_in = positive_index_field(j, "dim_in");
    f.dim_out = positive_index_field(j, "dim_out");

    if (!j.contains("representation") || !j["representation"].is_string())
        throw ParseError("channel file: missing string field 'representation'");
    const std::string rep = j["representation"].get<std::string>();
    if (rep == "entries")
        f.representation = Representation::entries;
    else if (rep == "kraus")
        f.representation = Representation::kraus;
    else
        throw ParseError("channel file: unknown representation '" + rep + "'");

    if (!j.contains("data"))
        throw ParseError("channel file: missing field 'data'");
    const json& data = j["data"];

    if (f.representation == Representation::entries) {
        if (!data.is_array() || static_cast<Index>(data.size()) != f.dim_in)
            throw DimensionError("channel file: 'data' must be an array of " +
                                 std::to_string(f.dim_in) + " rows");
        f.channel = ChannelSpec::zero(f.dim_in, f.dim_out);
        for (Index i = 0; i < f.dim_in; ++i) {
            const json& row = data[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<Index>(row.size()) != f.dim_in)
                throw DimensionError("channel file: entry row " +
                                     std::to_string(i) + " must hold " +
                                     std::to_string(f.dim_in) + " matrices");
            for (Index k = 0; k < f.dim_in; ++k)
                f.channel.entry(i, k) = matrix_from_json(
                    row[static_cast<std::size_t>(k)], f.dim_out, f.dim_out,
                    "entry C[" + std::to_string(i) + "][" + std::to_string(k) +
                        "]");
        }
    } else {
        if (!data.is_array() || data.empty())
            throw ParseError("channel file: 'data' must be a nonempty list of "
                             "Kraus operators");
        for (std::size_t k = 0; k < data.size(); ++k)
            f.kraus.push_back(matrix_from_json(data[k], f.dim_out, f.dim_in,
                                               "kraus[" + std::to_string(k) +
                                                   "]"));
        f.channel = from_kraus(f.kraus).channel;
    }
    return f;
}

void write_channel_file(const std::string& path, const ChannelFile& f) {
    json j;
    j["format_version"] = f.format_version;
    j["dim_in"] = f.dim_in;
    j["dim_out"] = f.dim_out;
    if (f.representation == Representation::entries) {
        j["representation"] = "entries";
        json data = json::array();
        for (Index i = 0; i < f.dim_in; ++i) {
            json row = json::array();
            for (Index k = 0; k < f.dim_in; ++k)
                row.push_back(matrix_to_json(f.channel.entry(i, k)));
            data.push_back(std::move(row));
        }
        j["data"] = std::move(data);
    } else {
        j["representation"] = "kraus";
        json data = json::array();
        for (const auto& w : f.kraus) data.push_back(matrix_to_json(w));
        j["data"] = std::move(data);
    }
    store_json(path, j);
}

void write_factors_file(const std::string& path, const CholeskyFactors& f) {
    json j;
    j["format_version"] = "1";
    j["n_blocks"] = f.n_blocks;
    j["block_dim"] = f.block_dim;

    json l = json::array();
    json l_hat = json::array();
    for (Index i = 0; i < f.n_blocks; ++i) {
        json l_row = json::array();
        json lh_row = json::array();
        for (Index k = 0; k < f.n_blocks; ++k) {
            l_row.push_back(matrix_to_json(f.L(i, k)));
            lh_row.push_back(matrix_to_json(f.Lhat(i, k)));
        }
        l.push_back(std::move(l_row));
        l_hat.push_back(std::move(lh_row));
    }
    json d = json::array();
    for (Index i = 0; i < f.n_blocks; ++i) d.push_back(matrix_to_json(f.D(i)));

    j["L"] = std::move(l);
    j["D"] = std::move(d);
    j["L_hat"] = std::move(l_hat);
    store_json(path, j);
}

void write_dilation_file(const std::string& path, const DilationOperator& dil,
                         const HalmosUnitary* unitary) {
    json j;
    j["format_version"] = "1";
    j["dim_in"] = dil.dim_in;
    j["dim_out"] = dil.dim_out;
    j["V"] = matrix_to_json(dil.v);
    if (unitary) j["U"] = matrix_to_json(unitary->u);
    store_json(path, j);
}

} // namespace cchol
