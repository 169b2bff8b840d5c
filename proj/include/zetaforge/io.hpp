#ifndef ZETAFORGE_IO_HPP
#define ZETAFORGE_IO_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "census.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "roots.hpp"
#include "zeta.hpp"

namespace zetaforge {

/// Fixed-width significant digits; "-0" prints as "0" so output is stable.
inline std::string format_double(double x, int digits = 12)
{
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    if (x == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    std::string s = buf;
    if (s == "-0") s = "0";
    return s;
}

// --------------------------------------------------------------- graph files

/// {"nodes": n, "edges": [[i, j], ...], "arrows": [[i, j], ...]}, or
/// {"adjacency": [[...], ...]} decoded as a printed quiver matrix.
inline PartiallyDirectedGraph graph_from_json(const nlohmann::json& j)
{
    try {
        if (!j.is_object()) throw parse_error("graph: expected an object");
        if (j.contains("adjacency")) {
            const auto rows = j.at("adjacency").get<std::vector<std::vector<std::int64_t>>>();
            for (const auto& r : rows)
                if (r.size() != rows.size()) throw parse_error("graph: adjacency matrix must be square");
            return from_adjacency(IntMatrix::from_rows(rows));
        }
        const auto n = j.at("nodes").get<std::size_t>();
        auto pairs = [&](const char* key) {
            std::vector<NodePair> out;
            if (!j.contains(key)) return out;
            for (const auto& p : j.at(key)) {
                if (!p.is_array() || p.size() != 2) throw parse_error(std::string("graph: each of '") + key + "' must be a pair");
                out.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
            }
            return out;
        };
        return PartiallyDirectedGraph(n, pairs("edges"), pairs("arrows"));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("graph: ") + e.what());
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

inline PartiallyDirectedGraph parse_graph(const std::string& text)
{
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw parse_error("graph: empty input");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("graph: ") + e.what());
    }
    return graph_from_json(j);
}

inline PartiallyDirectedGraph load_graph(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("graph: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

inline nlohmann::json graph_to_json(const PartiallyDirectedGraph& g)
{
    nlohmann::json j;
    j["nodes"] = g.node_count();
    auto pairs = [](const std::map<NodePair, unsigned>& m) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& [key, count] : m)
            for (unsigned c = 0; c < count; ++c) a.push_back({key.first, key.second});
        return a;
    };
    j["edges"] = pairs(g.edges());
    j["arrows"] = pairs(g.arrows());
    return j;
}

// ------------------------------------------------------------------- reports

inline nlohmann::json coefficients_json(const PolyZ& p)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.coefficients()) a.push_back(c.str());
    return a;
}

inline nlohmann::json roots_json(const ComplexRootSet& s)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : s.roots) {
        a.push_back({{"re", format_double(r.value.real())},
                     {"im", format_double(r.value.imag())},
                     {"modulus", format_double(std::abs(r.value))},
                     {"multiplicity", r.multiplicity}});
    }
    return a;
}

inline nlohmann::json report_json(const ZetaReport& r)
{
    nlohmann::json j;
    j["zeta_inverse"] = coefficients_json(r.zeta_inverse);
    j["poles"] = roots_json(r.poles);
    j["R_G"] = format_double(r.radius);
    j["q"] = r.q;
    j["p"] = r.p;
    j["classification"] = std::string(1, rh_letter(r.classification));
    j["kotani_sunada_ok"] = r.kotani_sunada_ok;
    j["ramanujan"] = r.ramanujan ? nlohmann::json(*r.ramanujan) : nlohmann::json(nullptr);
    j["xi_functional_ok"] = r.xi_functional_ok ? nlohmann::json(*r.xi_functional_ok) : nlohmann::json(nullptr);
    return j;
}

struct CensusRow {
    std::size_t m = 0;
    BigInt closed;
    BigInt primes;
    std::optional<double> ratio;
};

/// One row per length: N_m, pi(m) and the PNT ratio where delta divides m.
inline std::vector<CensusRow> census_table(const PrimeCensus& c, double radius)
{
    std::vector<CensusRow> rows;
    for (std::size_t m = 1; m <= c.horizon; ++m) rows.push_back({m, c.closed.at(m), c.pi[m - 1], std::nullopt});
    if (c.delta > 0 && std::isfinite(radius)) {
        for (const auto& [m, ratio] : pnt_ratios(c, radius)) rows[m - 1].ratio = ratio;
    }
    return rows;
}

inline nlohmann::json census_json(const PrimeCensus& c, double radius)
{
    nlohmann::json j;
    j["horizon"] = c.horizon;
    j["delta"] = c.delta;
    j["R_G"] = format_double(radius);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : census_table(c, radius)) {
        rows.push_back({{"m", r.m},
                        {"N", r.closed.str()},
                        {"pi", r.primes.str()},
                        {"ratio", r.ratio ? nlohmann::json(format_double(*r.ratio)) : nlohmann::json(nullptr)}});
    }
    j["rows"] = rows;
    return j;
}

// ----------------------------------------------------------------- plot data

/// "re,im,kind" lines, one per root counted once; kind is pole or eigenvalue.
inline std::string plot_csv_rows(const ComplexRootSet& s, const std::string& kind, const std::string& label = {})
{
    std::string out;
    for (const auto& r : s.roots) {
        out += format_double(r.value.real()) + "," + format_double(r.value.imag()) + "," + kind;
        if (!label.empty()) out += "," + label;
        out += "\n";
    }
    return out;
}

} // namespace zetaforge

#endif // ZETAFORGE_IO_HPP
