#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "laura/timeutil.hpp"

namespace laura::model {

inline constexpr const char* kSchemaVersion = "1";

enum class Language { c, cpp, java, python };
enum class PrState { open, closed, merged };

std::string to_string(Language lang);
std::string to_string(PrState state);
std::optional<Language> language_from_string(std::string_view s);
std::optional<PrState> pr_state_from_string(std::string_view s);

// Maps a path extension onto a language (.c/.h -> C; .cc/.cpp/.hpp/.cxx -> C++;
// .java -> Java; .py -> Python). nullopt for anything else.
std::optional<Language> language_from_path(std::string_view path);

struct ReviewComment {
    std::string body;
    std::string reviewer;
    UtcSeconds timestamp = 0;
    std::string anchor_path;
    long anchor_line = 0; // line in the new file version the comment attaches to

    bool operator==(const ReviewComment&) const = default;
};

// One PR-scoped record binding a diff, its review comments, and the PR
// context the comments were written against. The unit every pipeline stage
// consumes and produces.
struct DiffCommentInfoSeries {
    std::string repo_owner;
    std::string repo_name;
    long pr_number = 0;
    std::string pr_title;
    std::string pr_body;
    PrState pr_state = PrState::open;
    std::string author;
    std::string commit_message;
    std::string file_path;
    std::string diff;
    std::vector<ReviewComment> comments;
    Language language = Language::c;
    UtcSeconds created_at = 0;

    bool operator==(const DiffCommentInfoSeries&) const = default;
};

enum class ExclusionReason { too_few_stars, too_few_prs, language_excluded, tutorial, fork, manual };

std::string to_string(ExclusionReason r);

struct RepositoryRecord {
    std::string owner;
    std::string name;
    long stars = 0;
    long pr_count = 0;
    Language primary_language = Language::c;
    std::optional<ExclusionReason> exclusion;

    std::string key() const { return owner + "/" + name; }
    bool operator==(const RepositoryRecord&) const = default;
};

struct CorpusPartition {
    std::vector<std::string> rag_records;     // record ids, created_at < cutoff
    std::vector<std::string> eval_candidates; // record ids, created_at >= cutoff
    UtcSeconds cutoff = 0;
};

// Commit timeline of one PR; carries what the 10-line rule needs and the
// corpus record schema deliberately does not (per-commit diffs + timestamps).
struct CommitInfo {
    std::string oid;
    std::string message;
    UtcSeconds committed_at = 0;
    std::string diff;

    bool operator==(const CommitInfo&) const = default;
};

struct PrTimeline {
    std::string repo_owner;
    std::string repo_name;
    long pr_number = 0;
    std::vector<CommitInfo> commits;

    bool operator==(const PrTimeline&) const = default;
};

// --- serialization (one record per line, fixed schema, schema_version "1") ---

// Throws MalformedRecord on syntax errors, SchemaViolation for missing,
// unknown or ill-typed fields, InvariantViolation when the decoded record
// breaks a type invariant. Out-of-order comments are repaired (re-sorted),
// not rejected: upstream APIs do not guarantee order.
DiffCommentInfoSeries decode_series(const std::string& line);

// Single line, no raw newlines (JSON string escaping), decode(encode(r)) == r.
std::string encode_series(const DiffCommentInfoSeries& record);

// Returns every violated invariant by name, in a fixed order; empty = valid.
std::vector<std::string> validate_series(const DiffCommentInfoSeries& record);

std::string encode_timeline(const PrTimeline& timeline);
PrTimeline decode_timeline(const std::string& line);

// Stable identity for a series: owner/name#pr:path@fnv64(diff).
std::string record_id(const DiffCommentInfoSeries& record);

// Comment bodies joined in timestamp order with the "\n---\n" delimiter —
// the rendering used when a series' comments travel as one reference text.
std::string merged_comment_text(const DiffCommentInfoSeries& record);

} // namespace laura::model
