#include "pwnet/corpus.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_map>
#include <utility>

#include "pwnet/errors.hpp"

namespace pwnet {

bool canonical_less(const PasswordRecord& a, const PasswordRecord& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.password < b.password;
}

Corpus Corpus::from_pairs(std::vector<PasswordRecord> records) {
    std::unordered_map<std::string, std::uint64_t> counts;
    counts.reserve(records.size());
    for (auto& r : records) {
        if (r.frequency == 0) throw ArgumentError("record frequency must be >= 1");
        counts[std::move(r.password)] += r.frequency;
    }
    Corpus c;
    c.records_.reserve(counts.size());
    for (auto& [password, frequency] : counts) {
        c.total_accounts_ += frequency;
        if (password.empty()) c.has_empty_password_ = true;
        c.records_.push_back(PasswordRecord{password, frequency});
    }
    std::sort(c.records_.begin(), c.records_.end(), canonical_less);
    return c;
}

namespace {

// getline that accepts both LF and CRLF endings.
bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

}  // namespace

Corpus parse_plain(std::istream& lines) {
    std::unordered_map<std::string, std::uint64_t> counts;
    std::string line;
    std::uint64_t line_count = 0;
    while (read_line(lines, line)) {
        ++counts[line];
        ++line_count;
    }
    if (lines.bad()) throw DataError("input stream failed while reading");
    if (line_count == 0) throw DataError("empty corpus: input contains no lines");

    std::vector<PasswordRecord> records;
    records.reserve(counts.size());
    for (auto& [password, frequency] : counts)
        records.push_back(PasswordRecord{password, frequency});
    return Corpus::from_pairs(std::move(records));
}

Corpus parse_counted(std::istream& lines, SeparatorPolicy policy) {
    std::vector<PasswordRecord> records;
    std::string line;
    std::uint64_t line_no = 0;
    while (read_line(lines, line)) {
        ++line_no;
        const std::string at_line = "counted format, line " + std::to_string(line_no);

        std::size_t i = 0;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;

        const std::size_t digits_begin = i;
        std::uint64_t count = 0;
        constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
        while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
            const std::uint64_t digit = static_cast<std::uint64_t>(line[i] - '0');
            if (count > (kMax - digit) / 10)
                throw DataError(at_line + ": count overflows");
            count = count * 10 + digit;
            ++i;
        }
        if (i == digits_begin) throw DataError(at_line + ": expected a count");
        if (count == 0) throw DataError(at_line + ": count must be >= 1");

        if (policy == SeparatorPolicy::single_space) {
            if (i >= line.size() || line[i] != ' ')
                throw DataError(at_line + ": expected ' ' after the count");
            ++i;
        } else {
            if (i >= line.size() || (line[i] != ' ' && line[i] != '\t'))
                throw DataError(at_line + ": expected whitespace after the count");
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        }
        records.push_back(PasswordRecord{line.substr(i), count});
    }
    if (lines.bad()) throw DataError("input stream failed while reading");
    if (line_no == 0) throw DataError("empty corpus: input contains no lines");
    return Corpus::from_pairs(std::move(records));
}

void write_counted(const Corpus& corpus, std::ostream& out) {
    for (const auto& r : corpus.records())
        out << r.frequency << ' ' << r.password << '\n';
    if (!out) throw DataError("write failed while emitting counted format");
}

Corpus top_n(const Corpus& corpus, std::size_t n) {
    if (n == 0) throw ArgumentError("top_n: n must be >= 1");
    const std::size_t take = std::min(n, corpus.unique_count());
    std::vector<PasswordRecord> records(corpus.records().begin(),
                                        corpus.records().begin() + static_cast<std::ptrdiff_t>(take));
    return Corpus::from_pairs(std::move(records));
}

CorpusStats corpus_stats(const Corpus& corpus) {
    if (corpus.unique_count() == 0) throw DataError("empty corpus: no statistics to compute");
    CorpusStats s;
    s.unique_count = corpus.unique_count();
    s.total_accounts = corpus.total_accounts();
    for (const auto& r : corpus.records()) {
        ++s.length_histogram[r.password.size()];
        if (r.password.empty()) ++s.empty_password_count;
        for (const unsigned char c : r.password) {
            if (c >= 'a' && c <= 'z') ++s.lowercase_chars;
            else if (c >= 'A' && c <= 'Z') ++s.uppercase_chars;
            else if (c >= '0' && c <= '9') ++s.digit_chars;
            else ++s.other_chars;
        }
    }
    return s;
}

}  // namespace pwnet
