#include <diamcrit/graph_io.hpp>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include <diamcrit/errors.hpp>

namespace diamcrit {

namespace {

void append_bits(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int group = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            group <<= 1;
            if (i + j < bits.size() && bits[i + j]) group |= 1;
        }
        out.push_back(static_cast<char>(group + 63));
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    append_bits(out, bits);
    return out;
}

Graph from_graph6(std::string_view bytes) {
    std::size_t pos = 0;
    const std::string_view header = ">>graph6<<";
    if (bytes.substr(0, header.size()) == header) pos = header.size();
    // Strip one trailing newline.
    std::size_t end = bytes.size();
    while (end > pos && (bytes[end - 1] == '\n' || bytes[end - 1] == '\r')) --end;

    auto need = [&](std::size_t count) {
        if (end - pos < count)
            throw ParseError("graph6 data truncated", end);
    };
    auto byte_at = [&](std::size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(bytes[i]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", i);
        return c - 63;
    };

    need(1);
    long long n;
    if (static_cast<unsigned char>(bytes[pos]) != 126) {
        n = byte_at(pos);
        pos += 1;
    } else {
        need(2);
        if (static_cast<unsigned char>(bytes[pos + 1]) != 126) {
            need(4);
            n = (static_cast<long long>(byte_at(pos + 1)) << 12) |
                (static_cast<long long>(byte_at(pos + 2)) << 6) |
                static_cast<long long>(byte_at(pos + 3));
            pos += 4;
        } else {
            need(8);
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | byte_at(pos + 2 + i);
            pos += 8;
        }
    }
    if (n > 1000000) throw ParseError("graph6 vertex count implausibly large", pos);

    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (end - pos != nbytes)
        throw ParseError("graph6 payload length mismatch", end);

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (std::size_t k = 0; k < nbytes; ++k) {
        int group = byte_at(pos + k);
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = (group >> b) & 1;
            if (bit >= nbits) {
                if (set) throw ParseError("graph6 nonzero padding", pos + k);
                continue;
            }
            if (set) {
                // Invert column-major upper-triangle position.
                long long lo = 0, hi = n;  // find j with j(j-1)/2 <= bit
                while (lo + 1 < hi) {
                    long long mid = (lo + hi) / 2;
                    if (mid * (mid - 1) / 2 <= bit) lo = mid; else hi = mid;
                }
                int j = static_cast<int>(lo);
                int i = static_cast<int>(bit - static_cast<long long>(j) * (j - 1) / 2);
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph::build(static_cast<int>(n), edges);
}

std::string to_json_graph(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    auto arr = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) arr.push_back({e.u, e.v});
    j["edges"] = std::move(arr);
    return j.dump();
}

Graph from_json_graph(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON must be {\"n\":..., \"edges\":[...]}", 0);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("graph JSON edge must be a pair", 0);
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::build(j["n"].get<int>(), edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string data = ss.str();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return from_json_graph(data);
    // graph6: first non-empty line
    std::size_t start = data.find_first_not_of("\r\n");
    if (start == std::string::npos) throw ParseError("empty graph file", 0);
    std::size_t stop = data.find('\n', start);
    return from_graph6(std::string_view(data).substr(start, stop == std::string::npos
                                                                 ? std::string::npos
                                                                 : stop - start));
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open " + path + " for writing");
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        out << to_json_graph(g) << '\n';
    else
        out << to_graph6(g) << '\n';
}

}  // namespace diamcrit
