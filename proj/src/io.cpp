#include "pclass/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pclass/errors.hpp"

namespace pclass {

using ordered_json = nlohmann::ordered_json;

SimplicialComplex parse_facet_text(const std::string& text) {
    std::vector<Simplex> facets;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        std::vector<Vertex> verts;
        std::string tok;
        while (fields >> tok) {
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size() || v <= 0)
                    throw std::invalid_argument(tok);
                verts.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("facet list line " + std::to_string(lineno) +
                                 ": bad vertex token '" + tok + "'");
            }
        }
        try {
            facets.emplace_back(std::move(verts));
        } catch (const std::invalid_argument& e) {
            throw ParseError("facet list line " + std::to_string(lineno) +
                             ": " + e.what());
        }
    }
    if (facets.empty()) throw ParseError("facet list: no facets");
    try {
        return SimplicialComplex::from_facets(std::move(facets));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("facet list: ") + e.what());
    }
}

SimplicialComplex read_facet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    // Accept either format; the structured one starts with '{'.
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '{')
        return parse_structured_text(text);
    return parse_facet_text(text);
}

std::string write_facet_text(const SimplicialComplex& cx) {
    std::ostringstream os;
    for (const Simplex& f : cx.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) os << ' ';
            os << f[i];
        }
        os << '\n';
    }
    return os.str();
}

std::string write_structured_text(const SimplicialComplex& cx) {
    ordered_json doc;
    doc["dimension"] = cx.dim();
    doc["vertices"] = cx.vertices();
    ordered_json facets = ordered_json::array();
    for (const Simplex& f : cx.facets())
        facets.push_back(f.vertices());
    doc["facets"] = std::move(facets);
    return doc.dump(2) + "\n";
}

SimplicialComplex parse_structured_text(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("structured complex: ") + e.what());
    }
    if (!doc.contains("facets") || !doc["facets"].is_array())
        throw ParseError("structured complex: missing facets array");
    std::vector<Simplex> facets;
    for (const auto& row : doc["facets"]) {
        std::vector<Vertex> verts;
        for (const auto& v : row) verts.push_back(v.get<int>());
        facets.emplace_back(std::move(verts));
    }
    SimplicialComplex cx = SimplicialComplex::from_facets(std::move(facets));
    if (doc.contains("dimension") && doc["dimension"].get<int>() != cx.dim())
        throw ParseError("structured complex: dimension field mismatch");
    return cx;
}

std::string content_hash(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace pclass
