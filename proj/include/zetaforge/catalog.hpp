#ifndef ZETAFORGE_CATALOG_HPP
#define ZETAFORGE_CATALOG_HPP

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "graph.hpp"
#include "polynomial.hpp"
#include "zeta.hpp"

#ifndef ZETAFORGE_DEFAULT_CATALOG
#define ZETAFORGE_DEFAULT_CATALOG "data/brane_tilings.json"
#endif

namespace zetaforge {

// ---------------------------------------------------------------- generators

/// Cycle on n nodes. One node is a single loop, two nodes a single edge.
inline PartiallyDirectedGraph cycle_graph(std::size_t n)
{
    PartiallyDirectedGraph g(n);
    if (n == 1) return g.add_edge(0, 0);
    if (n == 2) return g.add_edge(0, 1);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

struct AdeSpec {
    char family = 'A';  // 'A', 'D' or 'E'
    unsigned index = 0;
    bool with_loops = false;

    std::string name() const { return std::string(1, family) + std::to_string(index); }
};

/// "A2", "D5", "e8" and so on.
inline AdeSpec parse_ade(const std::string& text, bool with_loops = false)
{
    if (text.size() < 2) throw precondition_error("ade: expected a family letter and an index, got '" + text + "'");
    AdeSpec s;
    s.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    const std::string digits = text.substr(1);
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw precondition_error("ade: bad index in '" + text + "'");
    s.index = static_cast<unsigned>(std::stoul(digits));
    s.with_loops = with_loops;
    return s;
}

/// Affine Dynkin diagram as an undirected graph, optionally with two extra
/// loops on every node.
///
/// A_0 is one node with a loop. A_1 is a single edge, or the doubled affine
/// edge once loops are added. A_n (n >= 2) is the (n+1)-cycle. D_k (k >= 4)
/// has k+1 nodes; E_6, E_7, E_8 have 7, 8, 9.
inline PartiallyDirectedGraph ade_graph(const AdeSpec& spec)
{
    std::size_t n = 0;
    std::vector<NodePair> edges;
    switch (spec.family) {
    case 'A':
        if (spec.index == 0) {
            n = 1;
            edges = {{0, 0}};
        } else if (spec.index == 1) {
            n = 2;
            edges = {{0, 1}};
            if (spec.with_loops) edges.push_back({0, 1});
        } else {
            n = spec.index + 1;
            for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
        }
        break;
    case 'D':
        if (spec.index < 4) throw precondition_error("ade: D index must be >= 4, got " + std::to_string(spec.index));
        n = spec.index + 1;
        if (spec.index == 4) {
            edges = {{0, 4}, {1, 4}, {2, 4}, {3, 4}};
        } else {
            // chain of k-3 nodes with two leaves at each end
            const std::size_t chain = spec.index - 3;
            for (std::size_t i = 0; i + 1 < chain; ++i) edges.push_back({i, i + 1});
            edges.push_back({chain, 0});
            edges.push_back({chain + 1, 0});
            edges.push_back({chain + 2, chain - 1});
            edges.push_back({chain + 3, chain - 1});
        }
        break;
    case 'E':
        if (spec.index == 6) {
            n = 7;
            edges = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
        } else if (spec.index == 7) {
            n = 8;
            for (std::size_t i = 0; i < 6; ++i) edges.push_back({i, i + 1});
            edges.push_back({3, 7});
        } else if (spec.index == 8) {
            n = 9;
            for (std::size_t i = 0; i < 7; ++i) edges.push_back({i, i + 1});
            edges.push_back({2, 8});
        } else {
            throw precondition_error("ade: E index must be 6, 7 or 8, got " + std::to_string(spec.index));
        }
        break;
    default:
        throw precondition_error(std::string("ade: unknown family '") + spec.family + "'");
    }
    PartiallyDirectedGraph g(n, edges, {});
    if (spec.with_loops)
        for (std::size_t i = 0; i < n; ++i) g.add_edge(i, i, 2);
    return g;
}

struct DimerSpec {
    std::vector<unsigned> valencies;
};

namespace detail {
inline void check_dimer(const DimerSpec& spec)
{
    if (spec.valencies.empty()) throw precondition_error("dimer: need at least one valency");
    for (auto r : spec.valencies)
        if (r < 1) throw precondition_error("dimer: valencies must be positive");
}
} // namespace detail

/// "3,4,4" -> {3, 4, 4}
inline DimerSpec parse_dimer(const std::string& text)
{
    DimerSpec s;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw precondition_error("dimer: bad valency list '" + text + "'");
        s.valencies.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    detail::check_dimer(s);
    return s;
}

/// Black node 2i joined to white node 2i+1 by r_i parallel edges.
inline PartiallyDirectedGraph dimer_graph(const DimerSpec& spec)
{
    detail::check_dimer(spec);
    PartiallyDirectedGraph g(2 * spec.valencies.size());
    for (std::size_t i = 0; i < spec.valencies.size(); ++i) g.add_edge(2 * i, 2 * i + 1, spec.valencies[i]);
    return g;
}

/// (1 - z^2)^{sum r - 2n} prod_i [(1 + (r_i - 1) z^2)^2 - r_i^2 z^2]
inline PolyZ dimer_zeta_closed(const DimerSpec& spec)
{
    detail::check_dimer(spec);
    PolyZ prod{1};
    long long total = 0;
    for (auto r : spec.valencies) {
        const long long rr = r;
        prod = prod * (PolyZ{1, 0, rr - 1}.pow(2) - PolyZ{0, 0, rr * rr});
        total += rr;
    }
    const long long e = total - 2 * static_cast<long long>(spec.valencies.size());
    if (e >= 0) return prod * one_minus_z2_pow(static_cast<unsigned>(e));
    return exact_div(prod, one_minus_z2_pow(static_cast<unsigned>(-e)));
}

/// Strong RH for the dimer: r^2 - 2r + 2 <= r_max for every valency. The
/// boundary case puts a pole exactly at sqrt(R_G), outside the open annulus.
inline bool dimer_rh(const DimerSpec& spec)
{
    detail::check_dimer(spec);
    unsigned rmax = 0;
    for (auto r : spec.valencies) rmax = std::max(rmax, r);
    for (auto r : spec.valencies) {
        const long long rr = r;
        if (r < rmax && rr * rr - 2 * rr + 2 > rmax) return false;
    }
    return true;
}

// ------------------------------------------------------------------ catalog

struct CatalogRecord {
    int id = 0;
    IntMatrix quiver;
    DimerSpec valencies;
    PolyZ expected_dimer_zeta;
    PolyZ expected_quiver_zeta;
    char expected_dimer_flag = '?';
    char expected_quiver_flag = '?';
    std::map<std::string, std::string> errata;  // field -> corrected value

    PartiallyDirectedGraph quiver_graph() const { return from_adjacency(quiver); }
    PartiallyDirectedGraph dimer() const { return dimer_graph(valencies); }
};

namespace detail {

inline PolyZ parse_coefficients(const nlohmann::json& j)
{
    if (!j.is_array() || j.empty()) throw parse_error("expected a non-empty coefficient list");
    std::vector<BigInt> c;
    for (const auto& v : j) {
        if (v.is_number_integer()) {
            c.emplace_back(v.get<long long>());
        } else if (v.is_string()) {
            c.emplace_back(BigInt(v.get<std::string>()));
        } else {
            throw parse_error("coefficient is not an integer");
        }
    }
    return PolyZ(std::move(c));
}

inline char parse_flag(const nlohmann::json& j)
{
    const auto s = j.get<std::string>();
    if (s != "S" && s != "W" && s != "N") throw parse_error("flag must be S, W or N, got '" + s + "'");
    return s[0];
}

inline CatalogRecord parse_record(const nlohmann::json& j)
{
    CatalogRecord r;
    r.id = j.at("id").get<int>();
    const auto rows = j.at("quiver").get<std::vector<std::vector<std::int64_t>>>();
    r.quiver = IntMatrix::from_rows(rows);
    if (!r.quiver.is_square() || r.quiver.rows() == 0) throw parse_error("quiver must be a non-empty square matrix");
    r.valencies.valencies = j.at("valencies").get<std::vector<unsigned>>();
    check_dimer(r.valencies);
    r.expected_dimer_zeta = parse_coefficients(j.at("dimer_zeta"));
    r.expected_quiver_zeta = parse_coefficients(j.at("quiver_zeta"));
    r.expected_dimer_flag = parse_flag(j.at("dimer_flag"));
    r.expected_quiver_flag = parse_flag(j.at("quiver_flag"));
    if (j.contains("errata")) r.errata = j.at("errata").get<std::map<std::string, std::string>>();
    return r;
}

// Id of the last record opened before byte offset pos, for error messages.
inline std::string row_near(const std::string& text, std::size_t pos)
{
    const auto at = text.rfind("\"id\"", std::min(pos, text.size()));
    if (at == std::string::npos) return "before the first row";
    const auto colon = text.find(':', at);
    std::size_t k = colon == std::string::npos ? text.size() : colon + 1;
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    std::string id;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) id += text[k++];
    return id.empty() ? "at an unnamed row" : "in row " + id;
}

} // namespace detail

inline std::vector<CatalogRecord> parse_catalog(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("catalog: malformed document " + detail::row_near(text, e.byte) + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("records") || !doc["records"].is_array())
        throw parse_error("catalog: missing 'records' array");
    std::vector<CatalogRecord> out;
    std::size_t index = 0;
    for (const auto& j : doc["records"]) {
        ++index;
        std::string label = "record " + std::to_string(index);
        if (j.is_object() && j.contains("id") && j["id"].is_number_integer())
            label = "row " + std::to_string(j["id"].get<int>());
        try {
            out.push_back(detail::parse_record(j));
        } catch (const std::exception& e) {
            throw parse_error("catalog: " + label + ": " + e.what());
        }
    }
    return out;
}

/// Catalog location: $ZETAFORGE_CATALOG if set, else the bundled file.
inline std::string default_catalog_path()
{
    if (const char* env = std::getenv("ZETAFORGE_CATALOG"); env && *env) return env;
    return ZETAFORGE_DEFAULT_CATALOG;
}

inline std::vector<CatalogRecord> load_catalog(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("catalog: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

struct FieldCheck {
    std::string field;
    std::string expected;
    std::string actual;
    bool match = false;
    bool erratum = false;  // mismatch explained by a recorded erratum
};

struct RowVerification {
    int id = 0;
    std::vector<FieldCheck> checks;

    bool clean() const
    {
        for (const auto& c : checks)
            if (!c.match && !c.erratum) return false;
        return true;
    }
};

struct CatalogVerification {
    std::vector<RowVerification> rows;

    /// Mismatches not covered by an erratum.
    std::vector<std::pair<int, FieldCheck>> failures() const
    {
        std::vector<std::pair<int, FieldCheck>> out;
        for (const auto& r : rows)
            for (const auto& c : r.checks)
                if (!c.match && !c.erratum) out.emplace_back(r.id, c);
        return out;
    }
    std::vector<std::pair<int, FieldCheck>> errata() const
    {
        std::vector<std::pair<int, FieldCheck>> out;
        for (const auto& r : rows)
            for (const auto& c : r.checks)
                if (c.erratum) out.emplace_back(r.id, c);
        return out;
    }
    bool passed() const { return failures().empty(); }
};

/// Recompute both zeta functions and both flags for every row.
inline CatalogVerification verify_catalog(const std::vector<CatalogRecord>& records, const RootOptions& opt = {})
{
    CatalogVerification report;
    for (const auto& rec : records) {
        RowVerification row;
        row.id = rec.id;
        auto add = [&](const std::string& field, const std::string& expected, const std::string& actual) {
            FieldCheck c{field, expected, actual, expected == actual, false};
            if (!c.match) {
                auto it = rec.errata.find(field);
                c.erratum = it != rec.errata.end() && it->second == actual;
            }
            row.checks.push_back(std::move(c));
        };

        const auto dimer = rec.dimer();
        const auto dimer_rep = analyze(dimer, opt);
        add("dimer_zeta", rec.expected_dimer_zeta.to_coefficient_string(),
            dimer_rep.zeta_inverse.to_coefficient_string());
        add("dimer_zeta_closed", rec.expected_dimer_zeta.to_coefficient_string(),
            dimer_zeta_closed(rec.valencies).to_coefficient_string());
        add("dimer_flag", std::string(1, rec.expected_dimer_flag),
            std::string(1, rh_letter(dimer_rep.classification)));
        // the valency inequality only decides strong versus not
        const char rh = dimer_rh(rec.valencies) ? 'S' : 'N';
        const char printed = rec.expected_dimer_flag == 'S' ? 'S' : 'N';
        FieldCheck ineq{"dimer_rh", std::string(1, printed), std::string(1, rh), printed == rh, false};
        if (!ineq.match) {
            auto it = rec.errata.find("dimer_flag");
            ineq.erratum = it != rec.errata.end() && it->second == ineq.actual;
        }
        row.checks.push_back(ineq);

        const auto quiver_rep = analyze(rec.quiver_graph(), opt);
        add("quiver_zeta", rec.expected_quiver_zeta.to_coefficient_string(),
            quiver_rep.zeta_inverse.to_coefficient_string());
        add("quiver_flag", std::string(1, rec.expected_quiver_flag),
            std::string(1, rh_letter(quiver_rep.classification)));
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace zetaforge

#endif // ZETAFORGE_CATALOG_HPP
