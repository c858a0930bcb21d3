#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "laura/model.hpp"

namespace laura::diffctx {

// --- unified diff structure ---

enum class LineTag { add, del, ctx };

struct DiffLine {
    LineTag tag = LineTag::ctx;
    std::string text;              // without the leading +/-/space
    bool no_newline_marker = false; // followed by "\ No newline at end of file"

    bool operator==(const DiffLine&) const = default;
};

struct Hunk {
    long old_start = 0;
    long old_len = 0;
    long new_start = 0;
    long new_len = 0;
    std::string section;    // trailing text after the closing @@
    std::string raw_header; // exact header line, kept for lossless re-serialization
    std::vector<DiffLine> lines;

    long body_line_count() const { return static_cast<long>(lines.size()); }
    // Last new-file line covered by this hunk; new_start - 1 for pure deletions.
    long new_end() const { return new_start + new_len - 1; }
};

struct FileDiff {
    std::string old_path;
    std::string new_path;
    std::vector<std::string> preamble; // "diff --git", "index", mode lines
    std::string old_header;            // raw "--- ..." line
    std::string new_header;            // raw "+++ ..." line
    std::vector<Hunk> hunks;
};

// Parses unified diff text. Empty input yields an empty list. Hunk line
// counts are checked against the @@ header; the first violation raises
// DiffSyntax with its line/column. Binary patches are rejected.
std::vector<FileDiff> parse_unified_diff(const std::string& text);

// Inverse of parse: re-serializes preserving the captured raw headers, so
// parse-then-serialize reproduces the input modulo trailing whitespace.
std::string to_text(const std::vector<FileDiff>& diffs);
std::string to_text(const FileDiff& diff);

// New-file line numbers a FileDiff modifies: added lines at their new
// positions, deleted lines mapped to the preceding new-file line.
std::vector<long> modified_new_lines(const FileDiff& diff);

// --- source structure outline ---

struct FunctionSpan {
    long start_line = 0; // 1-based, inclusive
    long end_line = 0;
    enum class Kind { function, method } kind = Kind::function;
};

struct ImportLine {
    long line_number = 0;
    std::string text;
};

struct SyntaxOutline {
    std::vector<FunctionSpan> function_spans;
    std::vector<ImportLine> import_lines;
    bool degraded = false; // best-effort outline of a file with syntax errors
};

class Outliner {
public:
    virtual ~Outliner() = default;
    virtual SyntaxOutline outline(const std::string& source) const = 0;
};

// Per-language outliners behind a registry; throws ParserUnavailable when no
// outliner is registered for the language. The shipped outliners are
// structural scanners (brace/indent tracking, string- and comment-aware).
class OutlinerRegistry {
public:
    static OutlinerRegistry with_builtin();

    void register_outliner(model::Language lang, std::shared_ptr<const Outliner> outliner);
    const Outliner& get(model::Language lang) const;

private:
    std::map<model::Language, std::shared_ptr<const Outliner>> outliners_;
};

SyntaxOutline outline_source(const std::string& source, model::Language lang,
                             const OutlinerRegistry& registry = OutlinerRegistry::with_builtin());

// --- context extension ---

struct LineSpan {
    long first = 0;
    long last = 0;
    long length() const { return last >= first ? last - first + 1 : 0; }
};

struct ExtendedDiff {
    std::string annotated_text;
    LineSpan origin_hunk_span;     // new-file span of the original hunks
    LineSpan extension_span;       // new-file span after extension
    std::vector<std::string> hoisted_imports;
    bool fallback_applied = false; // source mismatch: annotation only, no extension
    model::Language language = model::Language::c;
};

// Expands a FileDiff to the enclosing function/method boundary, capped at
// three times the hunk body line count; hoists imports appearing before the
// extended region; annotates every line ("[n]+", "[n] ", "[]-"). When the
// source disagrees with the hunk at any mapped line the fallback annotates
// the unmodified hunks only.
ExtendedDiff extend_diff(const FileDiff& file_diff, const std::string& source, const SyntaxOutline& outline);

// Annotates the new-file region [region.first, region.last] of `source`,
// replaying hunk bodies at their positions. Exposed for the fallback path
// and golden tests; extend_diff builds on it.
std::string annotate_lines(const std::vector<std::string>& source_lines, LineSpan region,
                           const std::vector<Hunk>& hunks);

// Fallback rendering: hunk bodies only, numbered from the @@ headers.
std::string annotate_hunks_only(const std::vector<Hunk>& hunks);

// True iff every line is "[n]+...", "[n] ..." or "[]-...".
bool annotation_well_formed(const std::string& annotated_text);

// --- extended record serialization (".jsonl" with extended_diff field) ---

struct ExtendedSeriesRecord {
    model::DiffCommentInfoSeries series;
    std::string extended_diff;
    bool fallback_applied = false;
};

std::string encode_extended_record(const ExtendedSeriesRecord& record);
ExtendedSeriesRecord decode_extended_record(const std::string& line);

} // namespace laura::diffctx
