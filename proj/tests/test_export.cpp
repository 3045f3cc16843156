#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "pwnet/errors.hpp"
#include "pwnet/export.hpp"
#include "pwnet/simjoin.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace pwnet;
using testsupport::make_graph;
using testsupport::scan_elements;

namespace {

PasswordGraph tiny_graph() {
    return make_graph({{"abc", 5}, {"abd", 3}}, {{0, 1}});
}

std::string export_to_string(const ThresholdView& view, GraphFormat format,
                             const CommunityAssignment* communities = nullptr,
                             ExportOptions opts = {}) {
    std::ostringstream out;
    export_graph(view, communities, format, out, opts);
    return out.str();
}

}  // namespace

TEST_CASE("gexf has one element per node and edge") {
    const PasswordGraph g = tiny_graph();
    const std::string xml = export_to_string(ThresholdView(g, 1), GraphFormat::gexf);

    const auto nodes = scan_elements(xml, "node");
    const auto edges = scan_elements(xml, "edge");
    REQUIRE(nodes.size() == 2);
    REQUIRE(edges.size() == 1);
    CHECK(nodes[0].attr("label") == "abc");
    CHECK(nodes[1].attr("label") == "abd");
    CHECK(edges[0].attr("source") == "0");
    CHECK(edges[0].attr("target") == "1");
}

TEST_CASE("gexf edge multiset round-trips through an independent scan") {
    std::mt19937_64 rng(500);
    const PasswordGraph g = testsupport::random_topology(rng, 40, 0.08);
    const ThresholdView view(g, 1);
    const std::string xml = export_to_string(view, GraphFormat::gexf);

    std::vector<Edge> scanned;
    for (const auto& e : scan_elements(xml, "edge")) {
        if (e.attr("source").empty()) continue;
        scanned.push_back(Edge{static_cast<NodeId>(std::stoul(e.attr("source"))),
                               static_cast<NodeId>(std::stoul(e.attr("target"))), 1});
    }
    // distance rides in a nested attvalue; recover it separately
    const auto attvalues = scan_elements(xml, "attvalue");
    CHECK(scanned == view.edges());
    CHECK(scan_elements(xml, "node").size() == view.node_count());
    CHECK(!attvalues.empty());
}

TEST_CASE("graphml mirrors the same structure") {
    const PasswordGraph g = tiny_graph();
    const std::string xml = export_to_string(ThresholdView(g, 1), GraphFormat::graphml);
    CHECK(scan_elements(xml, "node").size() == 2);
    CHECK(scan_elements(xml, "edge").size() == 1);
    CHECK(xml.find("<data key=\"label\">abc</data>") != std::string::npos);
    CHECK(xml.find("<data key=\"distance\">1</data>") != std::string::npos);
}

TEST_CASE("xml labels are escaped") {
    const PasswordGraph g = make_graph({{"a<b>&\"c", 2}, {"normal", 1}}, {});
    const std::string xml = export_to_string(ThresholdView(g, 1), GraphFormat::gexf);
    CHECK(xml.find("a&lt;b&gt;&amp;&quot;c") != std::string::npos);
    CHECK(xml.find("<b>") == std::string::npos);
}

TEST_CASE("xml_escape handles control and high bytes") {
    CHECK(xml_escape("a\x01" "b") == "a&#x01;b");
    CHECK(xml_escape("a\xE9o") == "a\xC3\xA9o");  // Latin-1 e-acute to UTF-8
    CHECK(xml_escape("tab\there") == "tab\there");
}

TEST_CASE("edgecsv quotes passwords that need it") {
    const PasswordGraph g = make_graph({{"with,comma", 5}, {"with\"quote", 3}}, {{0, 1}});
    const std::string csv = export_to_string(ThresholdView(g, 1), GraphFormat::edgecsv);

    const auto rows = testsupport::parse_csv(csv);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"source", "target", "distance"});
    CHECK(rows[1][0] == "with,comma");
    CHECK(rows[1][1] == "with\"quote");
    CHECK(rows[1][2] == "1");
}

TEST_CASE("edgecsv round-trips the edge multiset byte-exactly") {
    std::mt19937_64 rng(501);
    const Corpus corpus = testsupport::random_corpus(rng, 120);
    const PasswordGraph g = pwnet::build_graph(corpus, 2, JoinStrategy::bucketed);
    const ThresholdView view(g, 2);
    const std::string csv = export_to_string(view, GraphFormat::edgecsv);

    const auto rows = testsupport::parse_csv(csv);
    const std::vector<Edge> edges = view.edges();
    REQUIRE(rows.size() == edges.size() + 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        CHECK(rows[i + 1][0] == g.password(edges[i].source));
        CHECK(rows[i + 1][1] == g.password(edges[i].target));
        CHECK(std::stoi(rows[i + 1][2]) == edges[i].distance);
    }
}

TEST_CASE("dot output lists nodes and edges") {
    const PasswordGraph g = tiny_graph();
    const std::string dot = export_to_string(ThresholdView(g, 1), GraphFormat::dot);
    CHECK(dot.find("n0 [label=\"abc\"") != std::string::npos);
    CHECK(dot.find("n0 -- n1 [label=1]") != std::string::npos);
}

TEST_CASE("redaction strips passwords from every format") {
    const PasswordGraph g = tiny_graph();
    const ThresholdView view(g, 1);
    for (const GraphFormat format : {GraphFormat::gexf, GraphFormat::graphml,
                                     GraphFormat::edgecsv, GraphFormat::dot}) {
        const std::string text =
            export_to_string(view, format, nullptr, ExportOptions{.redact = true});
        CHECK(text.find("abc") == std::string::npos);
        CHECK(text.find("abd") == std::string::npos);
    }
}

TEST_CASE("community labels ride along as node attributes") {
    const PasswordGraph g = tiny_graph();
    const ThresholdView view(g, 1);
    const CommunityAssignment communities{{0, 0}, 1, 0.0};
    const std::string xml =
        export_to_string(view, GraphFormat::gexf, &communities);
    CHECK(xml.find("community") != std::string::npos);

    const CommunityAssignment wrong{{0}, 1, 0.0};
    std::ostringstream out;
    CHECK_THROWS_AS(export_graph(view, &wrong, GraphFormat::gexf, out), ArgumentError);
}

TEST_CASE("curve csv has a header plus one line per point") {
    CrackingCurve curve;
    curve.points = {{1, 8, 0.8}, {2, 10, 1.0}, {3, 10, 1.0}};
    std::ostringstream out;
    export_report(curve, ReportFormat::csv, out);
    const auto rows = testsupport::parse_csv(out.str());
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"size", "gmax", "ratio"});
    CHECK(rows[1] == std::vector<std::string>{"1", "8", "0.8"});

    CrackingCurve empty;
    std::ostringstream out2;
    export_report(empty, ReportFormat::csv, out2);
    CHECK(out2.str() == "size,gmax,ratio\n");
}

TEST_CASE("reports round-trip through json") {
    SUBCASE("curve") {
        CrackingCurve curve;
        curve.points = {{1, 8, 0.811111111}, {2, 10, 1.0}};
        std::ostringstream out;
        export_report(curve, ReportFormat::json, out);
        const auto j = nlohmann::json::parse(out.str());
        REQUIRE(j["points"].size() == 2);
        CHECK(j["points"][0]["size"] == 1);
        CHECK(j["points"][0]["gmax"] == 8);
        CHECK(j["points"][0]["ratio"] == 0.811111);  // rounded to 6 significant digits
    }
    SUBCASE("fit") {
        PowerLawFit fit;
        fit.exponent = 2.4987654321;
        fit.x_min = 2;
        fit.sample_count = 99;
        fit.log_likelihood = -1234.56789;
        std::ostringstream out;
        export_report(fit, ReportFormat::json, out);
        const auto j = nlohmann::json::parse(out.str());
        CHECK(j["exponent"] == 2.49877);
        CHECK(j["x_min"] == 2);
        CHECK(j["sample_count"] == 99);
        CHECK(j["log_likelihood"] == -1234.57);
    }
    SUBCASE("corpus stats") {
        std::istringstream in("abc\nabc\nP@1\n");
        const CorpusStats stats = corpus_stats(parse_plain(in));
        std::ostringstream out;
        export_report(stats, ReportFormat::json, out);
        const auto j = nlohmann::json::parse(out.str());
        CHECK(j["unique_count"] == 2);
        CHECK(j["total_accounts"] == 3);
        CHECK(j["length_histogram"]["3"] == 2);
        CHECK(j["charclass_histogram"]["other"] == 1);
    }
    SUBCASE("dominating set") {
        const PasswordGraph g = tiny_graph();
        const DominatingSetResult r = greedy_dominating_set(ThresholdView(g, 1));
        std::ostringstream out;
        export_report(r, g, ReportFormat::json, out);
        const auto j = nlohmann::json::parse(out.str());
        CHECK(j["method"] == "greedy");
        CHECK(j["size"] == 1);
        CHECK(j["is_dominating"] == true);
        CHECK(j["members"][0] == "abc");
    }
}

TEST_CASE("stats csv uses the stable field order") {
    std::istringstream in("abc\nxy\n");
    const CorpusStats stats = corpus_stats(parse_plain(in));
    std::ostringstream out;
    export_report(stats, ReportFormat::csv, out);
    const auto rows = testsupport::parse_csv(out.str());
    CHECK(rows[0] == std::vector<std::string>{"field", "value"});
    CHECK(rows[1] == std::vector<std::string>{"unique_count", "2"});
    CHECK(rows[2] == std::vector<std::string>{"total_accounts", "2"});
}

TEST_CASE("degree rank export") {
    const std::vector<RankedDegree> ranks = {{1, 5}, {2, 3}};
    std::ostringstream csv;
    export_degree_rank(ranks, ReportFormat::csv, csv);
    CHECK(csv.str() == "rank,degree\n1,5\n2,3\n");

    std::ostringstream json;
    export_degree_rank(ranks, ReportFormat::json, json);
    const auto j = nlohmann::json::parse(json.str());
    CHECK(j["degree_rank"][1]["degree"] == 3);
}

TEST_CASE("csv_field quoting rules") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("a\"b") == "\"a\"\"b\"");
    CHECK(csv_field("a\nb") == "\"a\nb\"");
    CHECK(csv_field("") == "");
}

TEST_CASE("format_real keeps six significant digits") {
    CHECK(format_real(0.8) == "0.8");
    CHECK(format_real(1.0) == "1");
    CHECK(format_real(0.123456789) == "0.123457");
    CHECK(format_real(59.6573590279973) == "59.6574");
}
