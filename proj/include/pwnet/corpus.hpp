#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace pwnet {

// One unique password with the number of accounts that use it.
// Passwords are raw byte sequences; no encoding is assumed.
struct PasswordRecord {
    std::string password;
    std::uint64_t frequency = 0;

    friend bool operator==(const PasswordRecord&, const PasswordRecord&) = default;
};

// Canonical record order: descending frequency, ties by ascending byte-wise password.
bool canonical_less(const PasswordRecord& a, const PasswordRecord& b);

// Deduplicated password list held in canonical order.
class Corpus {
public:
    Corpus() = default;

    // Aggregates duplicate passwords by summing frequencies, then sorts canonically.
    // Every input frequency must be >= 1.
    static Corpus from_pairs(std::vector<PasswordRecord> records);

    const std::vector<PasswordRecord>& records() const { return records_; }
    const PasswordRecord& record(std::size_t i) const { return records_[i]; }
    std::size_t unique_count() const { return records_.size(); }
    std::uint64_t total_accounts() const { return total_accounts_; }
    bool has_empty_password() const { return has_empty_password_; }

    friend bool operator==(const Corpus&, const Corpus&) = default;

private:
    std::vector<PasswordRecord> records_;
    std::uint64_t total_accounts_ = 0;
    bool has_empty_password_ = false;
};

// How the count and the password are separated in the counted ("withcount") format.
enum class SeparatorPolicy {
    single_space,    // count, exactly one space, password runs to end of line
    any_whitespace,  // count, a run of spaces/tabs, password is the remainder
};

// One password per line; duplicates aggregate. Accepts LF and CRLF endings.
Corpus parse_plain(std::istream& lines);

// Lines of the form `^\s*<count> <password>$`; the password may contain spaces.
Corpus parse_counted(std::istream& lines,
                     SeparatorPolicy policy = SeparatorPolicy::single_space);

// Counted-format writer. Output re-parses to an equal Corpus.
void write_counted(const Corpus& corpus, std::ostream& out);

// First n records in canonical order; the whole corpus if n >= unique_count.
Corpus top_n(const Corpus& corpus, std::size_t n);

struct CorpusStats {
    std::size_t unique_count = 0;
    std::uint64_t total_accounts = 0;
    std::size_t empty_password_count = 0;
    std::map<std::size_t, std::uint64_t> length_histogram;  // length -> unique passwords
    // Character-class counts over the bytes of unique passwords (not frequency weighted).
    std::uint64_t lowercase_chars = 0;
    std::uint64_t uppercase_chars = 0;
    std::uint64_t digit_chars = 0;
    std::uint64_t other_chars = 0;
};

CorpusStats corpus_stats(const Corpus& corpus);

}  // namespace pwnet
