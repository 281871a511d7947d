#include "cutfacet/io.hpp"

#include "cutfacet/error.hpp"
#include "cutfacet/families.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace cutfacet {

namespace {

struct Line {
    int number = 0;
    std::string key;
    std::vector<std::int64_t> args;
};

[[noreturn]] void parse_fail(int line, const std::string& msg)
{
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream words(raw);
        Line line;
        line.number = number;
        if (!(words >> line.key))
            continue;
        std::string word;
        while (words >> word) {
            std::int64_t value = 0;
            const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (ec != std::errc{} || ptr != word.data() + word.size())
                parse_fail(number, "expected an integer, got '" + word + "'");
            line.args.push_back(value);
        }
        out.push_back(std::move(line));
    }
    return out;
}

void expect_args(const Line& line, std::size_t count)
{
    if (line.args.size() != count)
        parse_fail(line.number, "'" + line.key + "' takes " + std::to_string(count) + " arguments");
}

int as_node_count(const Line& line, std::int64_t value)
{
    if (value < 1 || value > 62)
        parse_fail(line.number, "node count out of range: " + std::to_string(value));
    return static_cast<int>(value);
}

Node as_node(const Line& line, std::int64_t value, int n)
{
    if (value < 1 || value > n)
        parse_fail(line.number, "node out of range: " + std::to_string(value));
    return static_cast<Node>(value);
}

/// Re-throws library errors as ParseError tagged with the line.
template <typename F>
void at_line(const Line& line, F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        parse_fail(line.number, e.what());
    }
}

std::optional<int> bipartite_split(const Graph& g)
{
    const int n = g.node_count();
    for (int left = 1; left < n; ++left)
        if (static_cast<std::size_t>(left * (n - left)) == g.edge_count() && g == complete_bipartite(left, n - left))
            return left;
    return std::nullopt;
}

} // namespace

LinearInequality parse_inequality(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty())
        fail(ErrorCode::ParseError, "empty inequality file");

    const Line& head = lines.front();
    enum class Header { Cut, CorBipartite, CorGraph } header;
    int n = 0;
    if (head.key == "cutform") {
        header = Header::Cut;
        expect_args(head, 1);
        n = as_node_count(head, head.args[0]);
    } else if (head.key == "corform") {
        header = Header::CorBipartite;
        expect_args(head, 2);
        const int left = as_node_count(head, head.args[0]);
        const int right = as_node_count(head, head.args[1]);
        n = as_node_count(head, left + right);
    } else if (head.key == "corgraph") {
        header = Header::CorGraph;
        expect_args(head, 1);
        n = as_node_count(head, head.args[0]);
    } else {
        parse_fail(head.number, "expected 'cutform', 'corform' or 'corgraph', got '" + head.key + "'");
    }

    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.key != "edge")
            continue;
        if (header == Header::CorBipartite)
            parse_fail(line.number, "'edge' lines are not allowed after 'corform'");
        expect_args(line, 2);
        at_line(line, [&] { edges.push_back(make_edge(as_node(line, line.args[0], n), as_node(line, line.args[1], n))); });
    }

    LinearInequality ineq;
    at_line(head, [&] {
        switch (header) {
        case Header::Cut:
            ineq = edges.empty() ? LinearInequality::cut_form(n) : LinearInequality::cut_form(Graph(n, edges));
            break;
        case Header::CorBipartite:
            ineq = LinearInequality::correlation_form(
                complete_bipartite(static_cast<int>(head.args[0]), static_cast<int>(head.args[1])));
            break;
        case Header::CorGraph:
            ineq = LinearInequality::correlation_form(Graph(n, edges));
            break;
        }
    });

    bool seen_rhs = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.key == "edge")
            continue;
        if (line.key == "rhs") {
            expect_args(line, 1);
            if (seen_rhs)
                parse_fail(line.number, "duplicate 'rhs'");
            seen_rhs = true;
            ineq.set_rhs(line.args[0]);
        } else if (line.key == "term") {
            expect_args(line, 3);
            const Node u = as_node(line, line.args[0], n);
            const Node v = as_node(line, line.args[1], n);
            at_line(line, [&] {
                if (ineq.edge_coeff(u, v) != 0)
                    parse_fail(line.number, "duplicate term " + to_string(make_edge(u, v)));
                if (!ineq.graph().has_edge(u, v))
                    fail(ErrorCode::UnsupportedCoefficient, to_string(make_edge(u, v)) + " is not an edge of the ambient graph");
                ineq.set_edge_coeff(u, v, line.args[2]);
            });
        } else if (line.key == "nterm") {
            expect_args(line, 2);
            const Node u = as_node(line, line.args[0], n);
            at_line(line, [&] {
                if (ineq.form() == Form::Correlation && ineq.node_coeff(u) != 0)
                    parse_fail(line.number, "duplicate nterm " + std::to_string(u));
                ineq.set_node_coeff(u, line.args[1]);
            });
        } else {
            parse_fail(line.number, "unknown key '" + line.key + "'");
        }
    }
    return ineq;
}

std::string serialize_inequality(const LinearInequality& ineq)
{
    std::ostringstream out;
    const Graph& g = ineq.graph();
    bool list_edges = false;
    if (ineq.form() == Form::Cut) {
        out << "cutform " << g.node_count() << '\n';
        list_edges = !g.is_complete();
    } else if (const auto left = bipartite_split(g)) {
        out << "corform " << *left << ' ' << g.node_count() - *left << '\n';
    } else {
        out << "corgraph " << g.node_count() << '\n';
        list_edges = true;
    }
    if (list_edges)
        for (const auto& e : g.edges())
            out << "edge " << e.u << ' ' << e.v << '\n';
    out << "rhs " << ineq.rhs() << '\n';
    if (ineq.form() == Form::Correlation)
        for (Node x = 1; x <= g.node_count(); ++x)
            if (const Coeff c = ineq.node_coeff(x); c != 0)
                out << "nterm " << x << ' ' << c << '\n';
    const auto coeffs = ineq.edge_coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0)
            out << "term " << g.edges()[i].u << ' ' << g.edges()[i].v << ' ' << coeffs[i] << '\n';
    return out.str();
}

Instance parse_instance(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty() || lines.front().key != "nodes")
        fail(ErrorCode::ParseError, "instance file must start with 'nodes N'");
    const Line& head = lines.front();
    expect_args(head, 1);
    const int n = as_node_count(head, head.args[0]);

    std::vector<Edge> g_edges;
    std::vector<Edge> h_edges;
    std::optional<std::array<Node, 4>> cycle_nodes;
    int cycle_line = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.key == "gedge" || line.key == "hedge") {
            expect_args(line, 2);
            auto& target = line.key == "gedge" ? g_edges : h_edges;
            at_line(line, [&] { target.push_back(make_edge(as_node(line, line.args[0], n), as_node(line, line.args[1], n))); });
        } else if (line.key == "cycle") {
            expect_args(line, 4);
            if (cycle_nodes)
                parse_fail(line.number, "duplicate 'cycle'");
            cycle_nodes = std::array<Node, 4>{};
            for (std::size_t j = 0; j < 4; ++j)
                (*cycle_nodes)[j] = as_node(line, line.args[j], n);
            cycle_line = line.number;
        } else {
            parse_fail(line.number, "unknown key '" + line.key + "'");
        }
    }

    Graph g;
    Graph h;
    at_line(head, [&] {
        g = Graph(n, g_edges);
        h = Graph(n, h_edges);
    });
    Instance out{validate_gh(g, h), std::nullopt};
    if (cycle_nodes)
        at_line(Line{cycle_line, "cycle", {}}, [&] { out.cycle = Cycle4(out.pair, *cycle_nodes); });
    return out;
}

std::string serialize_instance(const Instance& instance)
{
    std::ostringstream out;
    out << "nodes " << instance.pair.n() << '\n';
    for (const auto& e : instance.pair.g().edges())
        out << "gedge " << e.u << ' ' << e.v << '\n';
    for (const auto& e : instance.pair.h().edges())
        out << "hedge " << e.u << ' ' << e.v << '\n';
    if (instance.cycle) {
        const auto& c = instance.cycle->nodes();
        out << "cycle " << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << c[3] << '\n';
    }
    return out.str();
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorCode::InvalidArgument, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(ErrorCode::InvalidArgument, "cannot write " + path.string());
    out << text;
}

} // namespace cutfacet
