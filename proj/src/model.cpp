#include "laura/model.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "laura/errors.hpp"
#include "laura/util.hpp"

namespace laura::model {

using nlohmann::ordered_json;

std::string to_string(Language lang) {
    switch (lang) {
    case Language::c: return "c";
    case Language::cpp: return "cpp";
    case Language::java: return "java";
    case Language::python: return "python";
    }
    return "c";
}

std::string to_string(PrState state) {
    switch (state) {
    case PrState::open: return "open";
    case PrState::closed: return "closed";
    case PrState::merged: return "merged";
    }
    return "open";
}

std::optional<Language> language_from_string(std::string_view s) {
    if (s == "c") return Language::c;
    if (s == "cpp") return Language::cpp;
    if (s == "java") return Language::java;
    if (s == "python") return Language::python;
    return std::nullopt;
}

std::optional<PrState> pr_state_from_string(std::string_view s) {
    if (s == "open") return PrState::open;
    if (s == "closed") return PrState::closed;
    if (s == "merged") return PrState::merged;
    return std::nullopt;
}

std::optional<Language> language_from_path(std::string_view path) {
    auto dot = path.rfind('.');
    if (dot == std::string_view::npos)
        return std::nullopt;
    std::string ext = to_lower(path.substr(dot + 1));
    if (ext == "c" || ext == "h")
        return Language::c;
    if (ext == "cc" || ext == "cpp" || ext == "hpp" || ext == "cxx")
        return Language::cpp;
    if (ext == "java")
        return Language::java;
    if (ext == "py")
        return Language::python;
    return std::nullopt;
}

std::string to_string(ExclusionReason r) {
    switch (r) {
    case ExclusionReason::too_few_stars: return "too_few_stars";
    case ExclusionReason::too_few_prs: return "too_few_prs";
    case ExclusionReason::language_excluded: return "language_excluded";
    case ExclusionReason::tutorial: return "tutorial";
    case ExclusionReason::fork: return "fork";
    case ExclusionReason::manual: return "manual";
    }
    return "manual";
}

namespace {

const std::set<std::string>& series_fields() {
    static const std::set<std::string> fields = {
        "schema_version", "repo_owner", "repo_name", "pr_number", "pr_title", "pr_body",
        "pr_state",       "author",     "commit_message", "file_path", "diff", "comments",
        "language",       "created_at"};
    return fields;
}

const std::set<std::string>& comment_fields() {
    static const std::set<std::string> fields = {"body", "reviewer", "timestamp", "anchor_path", "anchor_line"};
    return fields;
}

std::string require_string(const ordered_json& j, const std::string& field) {
    auto it = j.find(field);
    if (it == j.end())
        throw SchemaViolation(field, "missing");
    if (!it->is_string())
        throw SchemaViolation(field, "expected string");
    return it->get<std::string>();
}

long require_integer(const ordered_json& j, const std::string& field) {
    auto it = j.find(field);
    if (it == j.end())
        throw SchemaViolation(field, "missing");
    if (!it->is_number_integer())
        throw SchemaViolation(field, "expected integer");
    return it->get<long>();
}

UtcSeconds require_timestamp(const ordered_json& j, const std::string& field) {
    auto text = require_string(j, field);
    auto t = parse_rfc3339(text);
    if (!t)
        throw SchemaViolation(field, "not a valid RFC 3339 timestamp: " + text);
    return *t;
}

void reject_unknown_fields(const ordered_json& j, const std::set<std::string>& known, const std::string& where) {
    for (const auto& item : j.items()) {
        if (!known.count(item.key()))
            throw SchemaViolation(where + item.key(), "unknown field");
    }
}

bool diff_has_hunk_header(const std::string& diff) {
    for (const auto& line : split_lines(diff)) {
        if (line.rfind("@@", 0) == 0)
            return true;
    }
    return false;
}

ordered_json comment_to_json(const ReviewComment& c) {
    ordered_json j;
    j["body"] = c.body;
    j["reviewer"] = c.reviewer;
    j["timestamp"] = format_rfc3339(c.timestamp);
    j["anchor_path"] = c.anchor_path;
    j["anchor_line"] = c.anchor_line;
    return j;
}

ReviewComment comment_from_json(const ordered_json& j) {
    if (!j.is_object())
        throw SchemaViolation("comments", "expected object elements");
    reject_unknown_fields(j, comment_fields(), "comments.");
    ReviewComment c;
    c.body = require_string(j, "body");
    c.reviewer = require_string(j, "reviewer");
    c.timestamp = require_timestamp(j, "timestamp");
    c.anchor_path = require_string(j, "anchor_path");
    c.anchor_line = require_integer(j, "anchor_line");
    return c;
}

} // namespace

DiffCommentInfoSeries decode_series(const std::string& line) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded())
        throw MalformedRecord("record is not valid JSON");
    if (!j.is_object())
        throw MalformedRecord("record is not a JSON object");

    reject_unknown_fields(j, series_fields(), "");

    auto version = require_string(j, "schema_version");
    if (version != kSchemaVersion)
        throw SchemaViolation("schema_version", "unsupported version: " + version);

    DiffCommentInfoSeries r;
    r.repo_owner = require_string(j, "repo_owner");
    r.repo_name = require_string(j, "repo_name");
    r.pr_number = require_integer(j, "pr_number");
    r.pr_title = require_string(j, "pr_title");
    r.pr_body = require_string(j, "pr_body");

    auto state = pr_state_from_string(require_string(j, "pr_state"));
    if (!state)
        throw SchemaViolation("pr_state", "expected one of open/closed/merged");
    r.pr_state = *state;

    r.author = require_string(j, "author");
    r.commit_message = require_string(j, "commit_message");
    r.file_path = require_string(j, "file_path");
    r.diff = require_string(j, "diff");

    auto lang = language_from_string(require_string(j, "language"));
    if (!lang)
        throw SchemaViolation("language", "expected one of c/cpp/java/python");
    r.language = *lang;

    r.created_at = require_timestamp(j, "created_at");

    auto comments_it = j.find("comments");
    if (comments_it == j.end())
        throw SchemaViolation("comments", "missing");
    if (!comments_it->is_array())
        throw SchemaViolation("comments", "expected array");
    for (const auto& cj : *comments_it)
        r.comments.push_back(comment_from_json(cj));

    // Repair comment order rather than rejecting it.
    std::stable_sort(r.comments.begin(), r.comments.end(),
                     [](const ReviewComment& a, const ReviewComment& b) { return a.timestamp < b.timestamp; });

    auto violations = validate_series(r);
    if (!violations.empty())
        throw InvariantViolation(violations.front());
    return r;
}

std::string encode_series(const DiffCommentInfoSeries& r) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["repo_owner"] = r.repo_owner;
    j["repo_name"] = r.repo_name;
    j["pr_number"] = r.pr_number;
    j["pr_title"] = r.pr_title;
    j["pr_body"] = r.pr_body;
    j["pr_state"] = to_string(r.pr_state);
    j["author"] = r.author;
    j["commit_message"] = r.commit_message;
    j["file_path"] = r.file_path;
    j["diff"] = r.diff;
    j["language"] = to_string(r.language);
    j["created_at"] = format_rfc3339(r.created_at);
    j["comments"] = ordered_json::array();
    for (const auto& c : r.comments)
        j["comments"].push_back(comment_to_json(c));
    return j.dump();
}

std::vector<std::string> validate_series(const DiffCommentInfoSeries& r) {
    std::vector<std::string> violations;

    if (r.pr_number <= 0)
        violations.push_back("pr_number_positive");
    if (r.diff.empty())
        violations.push_back("diff_non_empty");
    else if (!diff_has_hunk_header(r.diff))
        violations.push_back("diff_has_hunk");
    if (r.comments.empty())
        violations.push_back("comments_nonempty");

    bool body_ok = true, anchor_ok = true, sorted = true, self_review = false;
    for (std::size_t i = 0; i < r.comments.size(); ++i) {
        const auto& c = r.comments[i];
        if (c.body.empty())
            body_ok = false;
        if (c.anchor_line < 1)
            anchor_ok = false;
        if (i > 0 && r.comments[i - 1].timestamp > c.timestamp)
            sorted = false;
        if (!c.reviewer.empty() && c.reviewer == r.author)
            self_review = true;
    }
    if (!body_ok)
        violations.push_back("comment_body_nonempty");
    if (!anchor_ok)
        violations.push_back("comment_anchor_line_positive");
    if (!sorted)
        violations.push_back("comments_sorted");
    if (self_review)
        violations.push_back("self_review");

    auto lang = language_from_path(r.file_path);
    if (!lang || *lang != r.language)
        violations.push_back("language_matches_path");

    return violations;
}

std::string encode_timeline(const PrTimeline& t) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["repo_owner"] = t.repo_owner;
    j["repo_name"] = t.repo_name;
    j["pr_number"] = t.pr_number;
    j["commits"] = ordered_json::array();
    for (const auto& c : t.commits) {
        ordered_json cj;
        cj["oid"] = c.oid;
        cj["message"] = c.message;
        cj["committed_at"] = format_rfc3339(c.committed_at);
        cj["diff"] = c.diff;
        j["commits"].push_back(cj);
    }
    return j.dump();
}

PrTimeline decode_timeline(const std::string& line) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw MalformedRecord("timeline record is not a JSON object");

    auto version = require_string(j, "schema_version");
    if (version != kSchemaVersion)
        throw SchemaViolation("schema_version", "unsupported version: " + version);

    PrTimeline t;
    t.repo_owner = require_string(j, "repo_owner");
    t.repo_name = require_string(j, "repo_name");
    t.pr_number = require_integer(j, "pr_number");

    auto it = j.find("commits");
    if (it == j.end() || !it->is_array())
        throw SchemaViolation("commits", "missing or not an array");
    for (const auto& cj : *it) {
        CommitInfo c;
        c.oid = require_string(cj, "oid");
        c.message = require_string(cj, "message");
        c.committed_at = require_timestamp(cj, "committed_at");
        c.diff = require_string(cj, "diff");
        t.commits.push_back(std::move(c));
    }
    return t;
}

std::string record_id(const DiffCommentInfoSeries& r) {
    return r.repo_owner + "/" + r.repo_name + "#" + std::to_string(r.pr_number) + ":" + r.file_path + "@" +
           to_hex(fnv1a64(r.diff));
}

std::string merged_comment_text(const DiffCommentInfoSeries& r) {
    std::vector<std::string> bodies;
    bodies.reserve(r.comments.size());
    for (const auto& c : r.comments)
        bodies.push_back(c.body);
    return join(bodies, "\n---\n");
}

} // namespace laura::model
