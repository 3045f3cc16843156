#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "pwnet/attack.hpp"
#include "pwnet/corpus.hpp"
#include "pwnet/graph.hpp"
#include "pwnet/mindict.hpp"
#include "pwnet/netstats.hpp"

namespace pwnet {

enum class GraphFormat { gexf, graphml, edgecsv, dot };
enum class ReportFormat { csv, json };

struct ExportOptions {
    bool redact = false;  // replace password labels with node ids
};

// Writes the view's nodes and edges. Node attributes: label (the password,
// unless redacted), frequency, degree, and community when labels are given.
// Edges carry their exact distance and are emitted once, min id first.
void export_graph(const ThresholdView& view, const CommunityAssignment* communities,
                  GraphFormat format, std::ostream& out, ExportOptions opts = {});

void export_report(const CorpusStats& stats, ReportFormat format, std::ostream& out);
void export_report(const PowerLawFit& fit, ReportFormat format, std::ostream& out);
void export_report(const CrackingCurve& curve, ReportFormat format, std::ostream& out);
void export_report(const DominatingSetResult& result, const PasswordGraph& graph,
                   ReportFormat format, std::ostream& out);
void export_degree_rank(std::span<const RankedDegree> ranks, ReportFormat format,
                        std::ostream& out);

// RFC-4180 field quoting: wraps in quotes when the field contains a comma,
// quote, CR or LF, doubling embedded quotes.
std::string csv_field(std::string_view field);

// Escapes &<>"' and emits control bytes as numeric character references;
// bytes >= 0x80 are transcoded as Latin-1 code points so the document stays
// valid UTF-8.
std::string xml_escape(std::string_view raw);

// Six-significant-digit float formatting shared by all report writers.
std::string format_real(double value);

}  // namespace pwnet
