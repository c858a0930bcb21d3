#pragma once

// Shared fixture machinery for the test suites and the acceptance runner.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "laura/diffctx.hpp"
#include "laura/model.hpp"

namespace testsupport {

namespace fs = std::filesystem;

inline std::string random_token(std::mt19937& rng, std::size_t min_len = 3, std::size_t max_len = 10) {
    static const char alphabet[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_";
    std::size_t len = min_len + rng() % (max_len - min_len + 1);
    std::string s;
    for (std::size_t i = 0; i < len; ++i)
        s += alphabet[rng() % (sizeof(alphabet) - 1)];
    return s;
}

inline std::string extension_for(laura::model::Language lang, std::mt19937& rng) {
    using laura::model::Language;
    switch (lang) {
    case Language::c: return rng() % 2 ? ".c" : ".h";
    case Language::cpp: {
        const char* exts[] = {".cc", ".cpp", ".hpp", ".cxx"};
        return exts[rng() % 4];
    }
    case Language::java: return ".java";
    case Language::python: return ".py";
    }
    return ".c";
}

// A small, always-valid series fixture.
inline laura::model::DiffCommentInfoSeries make_series() {
    laura::model::DiffCommentInfoSeries s;
    s.repo_owner = "acme";
    s.repo_name = "widget";
    s.pr_number = 42;
    s.pr_title = "Fix loop bound";
    s.pr_body = "The loop read one element past the end.";
    s.pr_state = laura::model::PrState::merged;
    s.author = "alice";
    s.commit_message = "fix off-by-one in scan loop";
    s.file_path = "src/scan.c";
    s.diff = "--- a/src/scan.c\n+++ b/src/scan.c\n@@ -1,3 +1,3 @@\n int scan(void) {\n-    return n + 1;\n+    return n;\n }\n";
    s.language = laura::model::Language::c;
    s.created_at = *laura::parse_rfc3339("2024-11-02T09:13:00Z");
    s.comments.push_back({"Please add a regression test for the boundary.", "bob",
                          *laura::parse_rfc3339("2024-11-02T10:00:00Z"), "src/scan.c", 2});
    return s;
}

inline laura::model::DiffCommentInfoSeries random_series(std::mt19937& rng) {
    using namespace laura::model;
    DiffCommentInfoSeries s;
    s.repo_owner = random_token(rng);
    s.repo_name = random_token(rng);
    s.pr_number = 1 + rng() % 9999;
    s.pr_title = random_token(rng) + " " + random_token(rng);
    s.pr_body = rng() % 3 == 0 ? "" : random_token(rng) + "\nsecond line\twith tab \"quotes\"";
    s.pr_state = static_cast<PrState>(rng() % 3);
    s.author = random_token(rng);
    s.commit_message = random_token(rng);
    Language lang = static_cast<Language>(rng() % 4);
    s.language = lang;
    s.file_path = "src/" + random_token(rng) + extension_for(lang, rng);
    s.diff = "--- a/" + s.file_path + "\n+++ b/" + s.file_path + "\n@@ -1,1 +1,2 @@\n line one\n+" +
             random_token(rng) + "\n";
    s.created_at = 1700000000 + static_cast<long>(rng() % 40000000);
    int n_comments = 1 + rng() % 3;
    laura::UtcSeconds t = s.created_at + 60;
    for (int i = 0; i < n_comments; ++i) {
        ReviewComment c;
        c.body = random_token(rng) + " needs attention at line " + std::to_string(1 + rng() % 40);
        c.reviewer = s.author + "_r" + std::to_string(i); // never the author
        c.timestamp = t;
        t += 30 + rng() % 600;
        c.anchor_path = s.file_path;
        c.anchor_line = 1 + rng() % 200;
        s.comments.push_back(std::move(c));
    }
    return s;
}

// A random single-hunk FileDiff consistent with a generated source file:
// ctx/add lines agree with the source by construction, del lines are
// synthetic. Returns the source text alongside the diff.
struct DiffFixture {
    std::string source;
    laura::diffctx::FileDiff file_diff;
};

inline DiffFixture random_diff_fixture(std::mt19937& rng, int source_lines = 0) {
    using namespace laura::diffctx;
    DiffFixture fx;

    int n = source_lines > 0 ? source_lines : 20 + static_cast<int>(rng() % 120);
    std::vector<std::string> src;
    src.reserve(n);
    for (int i = 1; i <= n; ++i)
        src.push_back("line_" + std::to_string(i) + "_" + random_token(rng, 3, 6));

    int window = 1 + static_cast<int>(rng() % std::min(n, 12));
    int start = 1 + static_cast<int>(rng() % (n - window + 1));

    Hunk hunk;
    hunk.new_start = start;
    int old_cursor_len = 0;
    for (int k = 0; k < window; ++k) {
        bool add = rng() % 3 == 0;
        DiffLine l;
        l.tag = add ? LineTag::add : LineTag::ctx;
        l.text = src[start - 1 + k];
        if (!add)
            ++old_cursor_len;
        hunk.lines.push_back(l);
        if (rng() % 5 == 0) {
            hunk.lines.push_back({LineTag::del, "removed_" + random_token(rng, 2, 5), false});
            ++old_cursor_len;
        }
    }
    hunk.new_len = window;
    hunk.old_start = start;
    hunk.old_len = old_cursor_len;

    fx.file_diff.old_path = "src/gen.c";
    fx.file_diff.new_path = "src/gen.c";
    fx.file_diff.old_header = "--- a/src/gen.c";
    fx.file_diff.new_header = "+++ b/src/gen.c";
    fx.file_diff.hunks.push_back(std::move(hunk));

    std::string text;
    for (const auto& l : src)
        text += l + "\n";
    fx.source = text;
    return fx;
}

inline std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const fs::path& p, const std::string& content) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << content;
}

class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        path_ = fs::temp_directory_path() / ("laura_" + tag + "_" + std::to_string(std::random_device{}()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

} // namespace testsupport
