#include "superwig/io.hpp"
#include "superwig/errors.hpp"

#include <sstream>

namespace sw {

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const CoefficientValue& v) {
    Json j;
    j["sign"] = v.sign();
    j["radicand"] = v.radicand().str();
    return j;
}

Json to_json(const Weight& w) {
    Json j;
    j["m"] = w.shape.m;
    j["n"] = w.shape.n;
    j["labels"] = w.labels;
    return j;
}

Json to_json(const GTPattern& p) {
    Json rows = Json::array();
    for (const auto& r : p.rows) rows.push_back(r.labels);
    Json j;
    j["rows"] = rows;
    return j;
}

Json to_json(const EtaReport& r) {
    Json j;
    j["Lambda"] = to_json(r.Lambda);
    j["r"] = r.r;
    j["eta_sq_measured"] = r.eta_sq_measured.str();
    Json c = Json::object();
    for (auto& [k, v] : r.candidates) c[k] = v.str();
    j["candidates"] = c;
    j["matches"] = r.matches;
    return j;
}

Json to_json(const RepModule& M) {
    Json j;
    j["m"] = M.shape.m;
    j["n"] = M.shape.n;
    j["dimension"] = M.dim;
    j["weights"] = M.weights;
    j["parities"] = M.parities;
    Json form = Json::array();
    for (auto& f : M.form) form.push_back(f.str());
    j["form"] = form;
    Json gens = Json::array();
    const int N = M.shape.size();
    for (int p = 1; p <= N; ++p)
        for (int q = 1; q <= N; ++q) {
            Json entries = Json::array();
            const SparseQ& E = M.E(p, q);
            for (int k = 0; k < E.outerSize(); ++k)
                for (SparseQ::InnerIterator it(E, k); it; ++it)
                    entries.push_back(Json::array({it.row(), it.col(), it.value().str()}));
            Json g;
            g["p"] = p;
            g["q"] = q;
            g["entries"] = entries;
            gens.push_back(g);
        }
    j["generators"] = gens;
    if (!M.patterns.empty()) {
        Json pats = Json::array();
        for (auto& p : M.patterns) pats.push_back(to_json(p));
        j["patterns"] = pats;
    }
    return j;
}

std::vector<long> parse_labels(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw DomainError("bad label '" + item + "' in '" + text + "'", "UsageError");
        out.push_back(v);
    }
    return out;
}

Weight parse_weight(const Shape& s, const std::string& text) {
    auto labels = parse_labels(text);
    if (static_cast<int>(labels.size()) != s.size())
        throw DomainError("expected " + std::to_string(s.size()) + " labels in '" + text + "'", "UsageError");
    return Weight(s, labels);
}

GTPattern parse_pattern(const Shape& s, const std::string& text) {
    GTPattern p;
    std::stringstream ss(text);
    std::string row;
    int K = s.size();
    while (std::getline(ss, row, ';')) {
        if (K < 1) throw DomainError("too many rows in '" + text + "'", "UsageError");
        p.rows.push_back(parse_weight(level_shape(s.m, K), row));
        --K;
    }
    if (K != 0) throw DomainError("expected " + std::to_string(s.size()) + " rows in '" + text + "'", "UsageError");
    return p;
}

std::string direction_name(Direction d) { return d == Direction::covariant ? "covariant" : "contravariant"; }

Direction parse_direction(const std::string& s) {
    if (s == "covariant") return Direction::covariant;
    if (s == "contravariant") return Direction::contravariant;
    throw DomainError("unknown direction '" + s + "'", "UsageError");
}

} // namespace sw
