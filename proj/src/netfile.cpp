#include "hmrnet/netfile.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "hmrnet/error.hpp"

namespace hmrnet {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        if (pos >= line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
        tokens.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return tokens;
}

Index parse_index(std::string_view token, std::size_t line) {
    Index value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

struct TruthBuilder {
    std::vector<Index> labels;
    std::vector<bool> seen;
    std::size_t count = 0;

    void assign(Index node, Index community, std::size_t line) {
        if (seen[node]) throw ParseError(line, "duplicate truth entry for node " + std::to_string(node));
        seen[node] = true;
        labels[node] = community;
        ++count;
    }
};

}  // namespace

NetworkFile parse_network(std::istream& in) {
    std::optional<std::size_t> nx, ny;
    std::vector<Edge> ex, ey, eh;
    std::optional<TruthBuilder> tx, ty;

    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view text(raw);
        if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        const auto tok = tokenize(text);
        if (tok.empty()) continue;

        const std::string_view kind = tok[0];
        auto expect_args = [&](std::size_t n) {
            if (tok.size() != n + 1)
                throw ParseError(line, "'" + std::string(kind) + "' takes " + std::to_string(n) + " argument(s)");
        };
        auto require = [&](const std::optional<std::size_t>& count, const char* name) {
            if (!count) throw ParseError(line, std::string(name) + " must be declared before this record");
            return *count;
        };
        auto check_node = [&](Index v, std::size_t n) {
            if (v >= n) throw ParseError(line, "node index " + std::to_string(v) + " out of range");
        };

        if (kind == "NX" || kind == "NY") {
            expect_args(1);
            auto& slot = kind == "NX" ? nx : ny;
            if (slot) throw ParseError(line, "duplicate " + std::string(kind) + " declaration");
            const Index n = parse_index(tok[1], line);
            if (n == 0) throw ParseError(line, "layer must contain at least one node");
            slot = n;
        } else if (kind == "X" || kind == "Y") {
            expect_args(2);
            const std::size_t n = require(kind == "X" ? nx : ny, kind == "X" ? "NX" : "NY");
            const Index u = parse_index(tok[1], line);
            const Index v = parse_index(tok[2], line);
            check_node(u, n);
            check_node(v, n);
            if (u == v) throw ParseError(line, "self-loop on node " + std::to_string(u));
            (kind == "X" ? ex : ey).emplace_back(u, v);
        } else if (kind == "H") {
            expect_args(2);
            const std::size_t n1 = require(nx, "NX");
            const std::size_t n2 = require(ny, "NY");
            const Index x = parse_index(tok[1], line);
            const Index y = parse_index(tok[2], line);
            check_node(x, n1);
            check_node(y, n2);
            eh.emplace_back(x, y);
        } else if (kind == "TX" || kind == "TY") {
            expect_args(2);
            const std::size_t n = require(kind == "TX" ? nx : ny, kind == "TX" ? "NX" : "NY");
            auto& truth = kind == "TX" ? tx : ty;
            if (!truth) truth = TruthBuilder{std::vector<Index>(n, 0), std::vector<bool>(n, false), 0};
            const Index v = parse_index(tok[1], line);
            check_node(v, n);
            truth->assign(v, parse_index(tok[2], line), line);
        } else {
            throw ParseError(line, "unknown record type '" + std::string(kind) + "'");
        }
    }

    if (!nx || !ny) throw ParseError(line + 1, "missing NX or NY declaration");
    auto finish_truth = [&](const std::optional<TruthBuilder>& t, const char* name) -> std::optional<Partition> {
        if (!t) return std::nullopt;
        if (t->count != t->labels.size())
            throw ParseError(line + 1, std::string(name) + " truth does not cover every node");
        return Partition::from_labels(t->labels);
    };

    NetworkFile file;
    file.net = HMRNet(HomogeneousLayer(*nx, ex), HomogeneousLayer(*ny, ey), HeteroLinkSet(*nx, *ny, eh));
    file.truth_x = finish_truth(tx, "TX");
    file.truth_y = finish_truth(ty, "TY");
    return file;
}

NetworkFile parse_network_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open network file " + path.string());
    return parse_network(in);
}

void write_network(std::ostream& out, const NetworkFile& file, std::span<const Biclique> planted) {
    const auto& net = file.net;
    out << "NX " << net.layer_x.node_count() << '\n';
    out << "NY " << net.layer_y.node_count() << '\n';
    for (auto [u, v] : net.layer_x.edges()) out << "X " << u << ' ' << v << '\n';
    for (auto [u, v] : net.layer_y.edges()) out << "Y " << u << ' ' << v << '\n';
    for (auto [x, y] : net.hetero.edges()) out << "H " << x << ' ' << y << '\n';
    if (file.truth_x)
        for (std::size_t v = 0; v < file.truth_x->size(); ++v) out << "TX " << v << ' ' << file.truth_x->community_of[v] << '\n';
    if (file.truth_y)
        for (std::size_t v = 0; v < file.truth_y->size(); ++v) out << "TY " << v << ' ' << file.truth_y->community_of[v] << '\n';
    for (const auto& b : planted) {
        out << "# biclique x:";
        for (auto x : b.x_members) out << ' ' << x;
        out << " y:";
        for (auto y : b.y_members) out << ' ' << y;
        out << '\n';
    }
}

}  // namespace hmrnet
