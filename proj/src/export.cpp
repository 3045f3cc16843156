#include "pwnet/export.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

#include <json.hpp>

#include "pwnet/errors.hpp"

namespace pwnet {

using ordered_json = nlohmann::ordered_json;

namespace {

// Passwords are raw bytes; invalid UTF-8 is replaced rather than thrown on.
std::string dump_json(const ordered_json& j) {
    return j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace);
}

}  // namespace

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

namespace {

// Reports round floats to 6 significant digits once, so JSON values
// parse back to exactly the emitted number.
double round6(double value) { return std::strtod(format_real(value).c_str(), nullptr); }

void check_sink(std::ostream& out) {
    if (!out) throw DataError("export: write to sink failed");
}

}  // namespace

std::string csv_field(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string xml_escape(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (const unsigned char c : raw) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default:
                if (c == '\t' || c == '\n' || c == '\r' || (c >= 0x20 && c < 0x7f)) {
                    out += static_cast<char>(c);
                } else if (c < 0x20 || c == 0x7f) {
                    char buf[16];
                    std::snprintf(buf, sizeof(buf), "&#x%02X;", c);
                    out += buf;
                } else {
                    // Latin-1 transcode keeps arbitrary high bytes representable.
                    out += static_cast<char>(0xC0 | (c >> 6));
                    out += static_cast<char>(0x80 | (c & 0x3F));
                }
        }
    }
    return out;
}

namespace {

std::string node_label(const ThresholdView& view, NodeId v, const ExportOptions& opts) {
    return opts.redact ? std::to_string(v) : view.graph().password(v);
}

void write_gexf(const ThresholdView& view, const CommunityAssignment* communities,
                std::ostream& out, const ExportOptions& opts) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n"
        << "  <graph defaultedgetype=\"undirected\" mode=\"static\">\n"
        << "    <attributes class=\"node\">\n"
        << "      <attribute id=\"0\" title=\"frequency\" type=\"long\"/>\n"
        << "      <attribute id=\"1\" title=\"degree\" type=\"long\"/>\n";
    if (communities)
        out << "      <attribute id=\"2\" title=\"community\" type=\"long\"/>\n";
    out << "    </attributes>\n"
        << "    <attributes class=\"edge\">\n"
        << "      <attribute id=\"d\" title=\"distance\" type=\"integer\"/>\n"
        << "    </attributes>\n";

    const std::size_t n = view.node_count();
    out << "    <nodes count=\"" << n << "\">\n";
    for (NodeId v = 0; v < n; ++v) {
        out << "      <node id=\"" << v << "\" label=\""
            << xml_escape(node_label(view, v, opts)) << "\">\n"
            << "        <attvalues>\n"
            << "          <attvalue for=\"0\" value=\"" << view.graph().frequency(v)
            << "\"/>\n"
            << "          <attvalue for=\"1\" value=\"" << view.degree(v) << "\"/>\n";
        if (communities)
            out << "          <attvalue for=\"2\" value=\"" << communities->labels[v]
                << "\"/>\n";
        out << "        </attvalues>\n"
            << "      </node>\n";
    }
    out << "    </nodes>\n";

    const std::vector<Edge> edges = view.edges();
    out << "    <edges count=\"" << edges.size() << "\">\n";
    std::size_t edge_id = 0;
    for (const Edge& e : edges) {
        out << "      <edge id=\"" << edge_id++ << "\" source=\"" << e.source
            << "\" target=\"" << e.target << "\">\n"
            << "        <attvalues><attvalue for=\"d\" value=\""
            << static_cast<int>(e.distance) << "\"/></attvalues>\n"
            << "      </edge>\n";
    }
    out << "    </edges>\n"
        << "  </graph>\n"
        << "</gexf>\n";
}

void write_graphml(const ThresholdView& view, const CommunityAssignment* communities,
                   std::ostream& out, const ExportOptions& opts) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
        << "  <key id=\"frequency\" for=\"node\" attr.name=\"frequency\" attr.type=\"long\"/>\n"
        << "  <key id=\"degree\" for=\"node\" attr.name=\"degree\" attr.type=\"long\"/>\n";
    if (communities)
        out << "  <key id=\"community\" for=\"node\" attr.name=\"community\" attr.type=\"long\"/>\n";
    out << "  <key id=\"distance\" for=\"edge\" attr.name=\"distance\" attr.type=\"int\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"undirected\">\n";

    const std::size_t n = view.node_count();
    for (NodeId v = 0; v < n; ++v) {
        out << "    <node id=\"n" << v << "\">\n"
            << "      <data key=\"label\">" << xml_escape(node_label(view, v, opts))
            << "</data>\n"
            << "      <data key=\"frequency\">" << view.graph().frequency(v) << "</data>\n"
            << "      <data key=\"degree\">" << view.degree(v) << "</data>\n";
        if (communities)
            out << "      <data key=\"community\">" << communities->labels[v] << "</data>\n";
        out << "    </node>\n";
    }
    std::size_t edge_id = 0;
    for (const Edge& e : view.edges()) {
        out << "    <edge id=\"e" << edge_id++ << "\" source=\"n" << e.source
            << "\" target=\"n" << e.target << "\">"
            << "<data key=\"distance\">" << static_cast<int>(e.distance)
            << "</data></edge>\n";
    }
    out << "  </graph>\n"
        << "</graphml>\n";
}

void write_edgecsv(const ThresholdView& view, std::ostream& out,
                   const ExportOptions& opts) {
    out << "source,target,distance\n";
    for (const Edge& e : view.edges()) {
        out << csv_field(node_label(view, e.source, opts)) << ','
            << csv_field(node_label(view, e.target, opts)) << ','
            << static_cast<int>(e.distance) << '\n';
    }
}

std::string dot_escape(std::string_view raw) {
    std::string out;
    for (const char c : raw) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

void write_dot(const ThresholdView& view, const CommunityAssignment* communities,
               std::ostream& out, const ExportOptions& opts) {
    out << "graph passwords {\n";
    const std::size_t n = view.node_count();
    for (NodeId v = 0; v < n; ++v) {
        out << "  n" << v << " [label=\"" << dot_escape(node_label(view, v, opts))
            << "\" frequency=" << view.graph().frequency(v);
        if (communities) out << " community=" << communities->labels[v];
        out << "];\n";
    }
    for (const Edge& e : view.edges())
        out << "  n" << e.source << " -- n" << e.target << " [label="
            << static_cast<int>(e.distance) << "];\n";
    out << "}\n";
}

}  // namespace

void export_graph(const ThresholdView& view, const CommunityAssignment* communities,
                  GraphFormat format, std::ostream& out, ExportOptions opts) {
    if (communities && communities->labels.size() != view.node_count())
        throw ArgumentError("export_graph: community labels do not cover the graph");
    switch (format) {
        case GraphFormat::gexf: write_gexf(view, communities, out, opts); break;
        case GraphFormat::graphml: write_graphml(view, communities, out, opts); break;
        case GraphFormat::edgecsv: write_edgecsv(view, out, opts); break;
        case GraphFormat::dot: write_dot(view, communities, out, opts); break;
    }
    check_sink(out);
}

void export_report(const CorpusStats& stats, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::csv) {
        out << "field,value\n";
        out << "unique_count," << stats.unique_count << '\n';
        out << "total_accounts," << stats.total_accounts << '\n';
        out << "empty_password_count," << stats.empty_password_count << '\n';
        for (const auto& [length, count] : stats.length_histogram)
            out << "length_" << length << ',' << count << '\n';
        out << "lowercase_chars," << stats.lowercase_chars << '\n';
        out << "uppercase_chars," << stats.uppercase_chars << '\n';
        out << "digit_chars," << stats.digit_chars << '\n';
        out << "other_chars," << stats.other_chars << '\n';
    } else {
        ordered_json j;
        j["unique_count"] = stats.unique_count;
        j["total_accounts"] = stats.total_accounts;
        j["empty_password_count"] = stats.empty_password_count;
        ordered_json hist = ordered_json::object();
        for (const auto& [length, count] : stats.length_histogram)
            hist[std::to_string(length)] = count;
        j["length_histogram"] = std::move(hist);
        j["charclass_histogram"] = {{"lowercase", stats.lowercase_chars},
                                    {"uppercase", stats.uppercase_chars},
                                    {"digit", stats.digit_chars},
                                    {"other", stats.other_chars}};
        out << dump_json(j) << '\n';
    }
    check_sink(out);
}

void export_report(const PowerLawFit& fit, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::csv) {
        out << "field,value\n";
        out << "exponent," << format_real(fit.exponent) << '\n';
        out << "x_min," << fit.x_min << '\n';
        out << "sample_count," << fit.sample_count << '\n';
        out << "log_likelihood," << format_real(fit.log_likelihood) << '\n';
    } else {
        ordered_json j;
        j["exponent"] = round6(fit.exponent);
        j["x_min"] = fit.x_min;
        j["sample_count"] = fit.sample_count;
        j["log_likelihood"] = round6(fit.log_likelihood);
        out << dump_json(j) << '\n';
    }
    check_sink(out);
}

void export_report(const CrackingCurve& curve, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::csv) {
        out << "size,gmax,ratio\n";
        for (const CurvePoint& p : curve.points)
            out << p.size << ',' << p.gmax << ',' << format_real(p.ratio) << '\n';
    } else {
        ordered_json points = ordered_json::array();
        for (const CurvePoint& p : curve.points)
            points.push_back({{"size", p.size}, {"gmax", p.gmax}, {"ratio", round6(p.ratio)}});
        ordered_json j;
        j["points"] = std::move(points);
        out << dump_json(j) << '\n';
    }
    check_sink(out);
}

void export_report(const DominatingSetResult& result, const PasswordGraph& graph,
                   ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::csv) {
        out << "field,value\n";
        out << "method," << to_string(result.method) << '\n';
        out << "size," << result.size << '\n';
        out << "covered_accounts," << result.covered_accounts << '\n';
        out << "is_dominating," << (result.is_dominating ? "true" : "false") << '\n';
        if (result.arnautov_bound)
            out << "arnautov_bound," << format_real(*result.arnautov_bound) << '\n';
        for (const NodeId v : result.nodes)
            out << "member," << csv_field(graph.password(v)) << '\n';
    } else {
        ordered_json j;
        j["method"] = to_string(result.method);
        j["size"] = result.size;
        j["covered_accounts"] = result.covered_accounts;
        j["is_dominating"] = result.is_dominating;
        if (result.arnautov_bound) j["arnautov_bound"] = round6(*result.arnautov_bound);
        ordered_json members = ordered_json::array();
        for (const NodeId v : result.nodes) members.push_back(graph.password(v));
        j["members"] = std::move(members);
        out << dump_json(j) << '\n';
    }
    check_sink(out);
}

void export_degree_rank(std::span<const RankedDegree> ranks, ReportFormat format,
                        std::ostream& out) {
    if (format == ReportFormat::csv) {
        out << "rank,degree\n";
        for (const RankedDegree& r : ranks) out << r.rank << ',' << r.degree << '\n';
    } else {
        ordered_json points = ordered_json::array();
        for (const RankedDegree& r : ranks)
            points.push_back({{"rank", r.rank}, {"degree", r.degree}});
        ordered_json j;
        j["degree_rank"] = std::move(points);
        out << dump_json(j) << '\n';
    }
    check_sink(out);
}

}  // namespace pwnet
