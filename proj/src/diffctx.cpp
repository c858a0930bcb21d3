#include "laura/diffctx.hpp"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>
#include <set>

#include "laura/errors.hpp"
#include "laura/util.hpp"

namespace laura::diffctx {

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.substr(0, prefix.size()) == prefix;
}

std::string strip_diff_path(std::string_view raw) {
    // "--- a/path\t2024-01-01 ..." -> "path"; /dev/null stays magic.
    auto tab = raw.find('\t');
    std::string path(raw.substr(0, tab));
    if (path == "/dev/null")
        return path;
    if (starts_with(path, "a/") || starts_with(path, "b/"))
        path = path.substr(2);
    return path;
}

struct HeaderNumbers {
    long old_start, old_len, new_start, new_len;
    std::string section;
};

std::optional<HeaderNumbers> parse_hunk_header(const std::string& line) {
    // @@ -old_start[,old_len] +new_start[,new_len] @@[ section]
    std::size_t pos = 0;
    auto consume = [&](std::string_view lit) {
        if (line.compare(pos, lit.size(), lit) != 0)
            return false;
        pos += lit.size();
        return true;
    };
    auto number = [&](long& out) {
        if (pos >= line.size() || !std::isdigit(static_cast<unsigned char>(line[pos])))
            return false;
        long v = 0;
        while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
            v = v * 10 + (line[pos] - '0');
            ++pos;
        }
        out = v;
        return true;
    };

    HeaderNumbers h{0, 1, 0, 1, ""};
    if (!consume("@@ -"))
        return std::nullopt;
    if (!number(h.old_start))
        return std::nullopt;
    if (consume(",") && !number(h.old_len))
        return std::nullopt;
    if (!consume(" +"))
        return std::nullopt;
    if (!number(h.new_start))
        return std::nullopt;
    if (consume(",") && !number(h.new_len))
        return std::nullopt;
    if (!consume(" @@"))
        return std::nullopt;
    if (pos < line.size()) {
        if (line[pos] == ' ')
            ++pos;
        h.section = line.substr(pos);
    }
    return h;
}

} // namespace

std::vector<FileDiff> parse_unified_diff(const std::string& text) {
    std::vector<FileDiff> files;
    if (trim(text).empty())
        return files;

    auto lines = split_lines(text);
    std::size_t i = 0;

    while (i < lines.size()) {
        FileDiff fd;

        // Preamble: everything up to the "--- " header.
        while (i < lines.size() && !starts_with(lines[i], "--- ")) {
            const std::string& l = lines[i];
            if (starts_with(l, "Binary files") || starts_with(l, "GIT binary patch"))
                throw DiffSyntax(i + 1, 1, "binary patch not supported");
            if (starts_with(l, "@@"))
                throw DiffSyntax(i + 1, 1, "hunk header before file headers");
            fd.preamble.push_back(l);
            ++i;
        }
        if (i >= lines.size()) {
            if (!fd.preamble.empty()) {
                // Trailing blank lines are tolerated; anything else is noise.
                for (std::size_t k = 0; k < fd.preamble.size(); ++k) {
                    if (!trim(fd.preamble[k]).empty())
                        throw DiffSyntax(i - fd.preamble.size() + k + 1, 1, "expected '---' file header");
                }
            }
            break;
        }

        fd.old_header = lines[i];
        fd.old_path = strip_diff_path(std::string_view(lines[i]).substr(4));
        ++i;
        if (i >= lines.size() || !starts_with(lines[i], "+++ "))
            throw DiffSyntax(i + 1, 1, "expected '+++' file header");
        fd.new_header = lines[i];
        fd.new_path = strip_diff_path(std::string_view(lines[i]).substr(4));
        ++i;

        while (i < lines.size() && starts_with(lines[i], "@@")) {
            auto header = parse_hunk_header(lines[i]);
            if (!header)
                throw DiffSyntax(i + 1, 1, "malformed hunk header");
            Hunk hunk;
            hunk.old_start = header->old_start;
            hunk.old_len = header->old_len;
            hunk.new_start = header->new_start;
            hunk.new_len = header->new_len;
            hunk.section = header->section;
            hunk.raw_header = lines[i];
            ++i;

            long old_rem = hunk.old_len;
            long new_rem = hunk.new_len;
            while (old_rem > 0 || new_rem > 0) {
                if (i >= lines.size())
                    throw DiffSyntax(i, 1, "unexpected end of input inside hunk");
                const std::string& l = lines[i];
                char tag = l.empty() ? ' ' : l[0];
                std::string body = l.empty() ? std::string() : l.substr(1);
                switch (tag) {
                case ' ':
                    --old_rem;
                    --new_rem;
                    hunk.lines.push_back({LineTag::ctx, body, false});
                    break;
                case '+':
                    --new_rem;
                    hunk.lines.push_back({LineTag::add, body, false});
                    break;
                case '-':
                    --old_rem;
                    hunk.lines.push_back({LineTag::del, body, false});
                    break;
                case '\\':
                    if (hunk.lines.empty())
                        throw DiffSyntax(i + 1, 1, "no-newline marker before any hunk line");
                    hunk.lines.back().no_newline_marker = true;
                    ++i;
                    continue;
                default:
                    throw DiffSyntax(i + 1, 1, "unexpected line inside hunk");
                }
                if (old_rem < 0 || new_rem < 0)
                    throw DiffSyntax(i + 1, 1, "hunk body exceeds header counts");
                ++i;
            }
            // Trailing marker for the last line of the hunk.
            if (i < lines.size() && starts_with(lines[i], "\\")) {
                if (!hunk.lines.empty())
                    hunk.lines.back().no_newline_marker = true;
                ++i;
            }
            fd.hunks.push_back(std::move(hunk));
        }

        if (fd.hunks.empty())
            throw DiffSyntax(i, 1, "file entry has no hunks");
        files.push_back(std::move(fd));
    }
    return files;
}

std::string to_text(const FileDiff& fd) {
    std::string out;
    auto emit = [&](const std::string& line) {
        out += line;
        out += '\n';
    };
    for (const auto& l : fd.preamble)
        emit(l);
    emit(fd.old_header);
    emit(fd.new_header);
    for (const auto& h : fd.hunks) {
        if (!h.raw_header.empty()) {
            emit(h.raw_header);
        } else {
            std::string header = "@@ -" + std::to_string(h.old_start) + "," + std::to_string(h.old_len) + " +" +
                                 std::to_string(h.new_start) + "," + std::to_string(h.new_len) + " @@";
            if (!h.section.empty())
                header += " " + h.section;
            emit(header);
        }
        for (const auto& l : h.lines) {
            char tag = l.tag == LineTag::add ? '+' : l.tag == LineTag::del ? '-' : ' ';
            emit(tag + l.text);
            if (l.no_newline_marker)
                emit("\\ No newline at end of file");
        }
    }
    return out;
}

std::string to_text(const std::vector<FileDiff>& diffs) {
    std::string out;
    for (const auto& fd : diffs)
        out += to_text(fd);
    return out;
}

std::vector<long> modified_new_lines(const FileDiff& fd) {
    std::vector<long> result;
    for (const auto& h : fd.hunks) {
        long cursor = h.new_len == 0 ? h.new_start + 1 : h.new_start;
        for (const auto& l : h.lines) {
            switch (l.tag) {
            case LineTag::ctx:
                ++cursor;
                break;
            case LineTag::add:
                result.push_back(cursor);
                ++cursor;
                break;
            case LineTag::del:
                result.push_back(std::max(cursor - 1, 0L));
                break;
            }
        }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

// --- outliners ---

namespace {

long leading_indent(const std::string& line) {
    long indent = 0;
    for (char c : line) {
        if (c == ' ')
            ++indent;
        else if (c == '\t')
            indent += 8;
        else
            break;
    }
    return indent;
}

class PythonOutliner final : public Outliner {
public:
    SyntaxOutline outline(const std::string& source) const override {
        SyntaxOutline out;
        auto lines = split_lines(source);

        struct Block {
            long indent;
            long start_line;
            bool is_class;
            bool is_def;
            FunctionSpan::Kind kind;
        };
        std::vector<Block> stack;
        long last_code_line = 0;
        bool in_triple = false;
        std::string triple_quote;

        auto close_to_indent = [&](long indent) {
            while (!stack.empty() && indent <= stack.back().indent) {
                Block b = stack.back();
                stack.pop_back();
                if (b.is_def)
                    out.function_spans.push_back({b.start_line, last_code_line, b.kind});
            }
        };

        for (std::size_t idx = 0; idx < lines.size(); ++idx) {
            const std::string& raw = lines[idx];
            long lineno = static_cast<long>(idx) + 1;
            std::string stripped = trim(raw);

            if (in_triple) {
                if (stripped.find(triple_quote) != std::string::npos)
                    in_triple = false;
                last_code_line = lineno;
                continue;
            }
            if (stripped.empty() || stripped[0] == '#')
                continue;

            long indent = leading_indent(raw);
            close_to_indent(indent);

            bool is_def = starts_with(stripped, "def ") || starts_with(stripped, "async def ");
            bool is_class = starts_with(stripped, "class ");
            if (is_def) {
                bool in_class = !stack.empty() && stack.back().is_class;
                stack.push_back({indent, lineno, false, true,
                                 in_class ? FunctionSpan::Kind::method : FunctionSpan::Kind::function});
            } else if (is_class) {
                stack.push_back({indent, lineno, true, false, FunctionSpan::Kind::function});
            } else if (starts_with(stripped, "import ") ||
                       (starts_with(stripped, "from ") && stripped.find(" import") != std::string::npos)) {
                out.import_lines.push_back({lineno, raw});
            }

            // Naive triple-quote tracking: an odd number of openers leaves us inside.
            for (const char* q : {"\"\"\"", "'''"}) {
                std::size_t count = 0, pos = 0;
                while ((pos = stripped.find(q, pos)) != std::string::npos) {
                    ++count;
                    pos += 3;
                }
                if (count % 2 == 1) {
                    in_triple = true;
                    triple_quote = q;
                }
            }
            last_code_line = lineno;
        }
        close_to_indent(-1);
        if (in_triple)
            out.degraded = true;

        std::sort(out.function_spans.begin(), out.function_spans.end(),
                  [](const FunctionSpan& a, const FunctionSpan& b) { return a.start_line < b.start_line; });
        return out;
    }
};

// Brace scanner shared by C, C++ and Java. Tracks strings, chars, comments,
// preprocessor lines and raw strings; classifies each '{' by the statement
// head that precedes it.
class BraceOutliner final : public Outliner {
public:
    explicit BraceOutliner(bool java) : java_(java) {}

    SyntaxOutline outline(const std::string& source) const override {
        SyntaxOutline out;

        struct Context {
            enum class Kind { function, type, other } kind;
            long start_line;
            FunctionSpan::Kind fn_kind;
        };
        std::vector<Context> stack;

        std::string head;
        long head_start_line = 0;
        long line = 1;
        long last_line = 1;
        std::size_t i = 0;
        const std::size_t n = source.size();
        bool unterminated = false;

        auto head_first_token = [](const std::string& h) {
            std::size_t b = 0;
            while (b < h.size() && std::isspace(static_cast<unsigned char>(h[b])))
                ++b;
            std::size_t e = b;
            while (e < h.size() && (std::isalnum(static_cast<unsigned char>(h[e])) || h[e] == '_'))
                ++e;
            return h.substr(b, e - b);
        };

        auto classify = [&](const std::string& h) -> Context::Kind {
            std::string t = trim(h);
            if (t.empty())
                return Context::Kind::other;
            std::string first = head_first_token(t);
            static const std::set<std::string> control = {"if", "for", "while", "switch", "catch",
                                                          "do", "else", "try", "return"};
            if (control.count(first))
                return Context::Kind::other;
            if (first == "namespace" || first == "extern")
                return Context::Kind::other;
            static const std::set<std::string> type_kw = {"class", "struct", "union", "enum", "interface"};
            if (type_kw.count(first))
                return Context::Kind::type;
            // "template <...> class X" and access-specifier-prefixed type heads.
            for (const auto& kw : type_kw) {
                auto pos = t.find(kw + " ");
                if (pos != std::string::npos && t.find('(') == std::string::npos)
                    return Context::Kind::type;
            }
            if (t.find("new ") != std::string::npos) // Java anonymous class
                return Context::Kind::type;
            auto open = t.find('(');
            if (open == std::string::npos)
                return Context::Kind::other;
            // An '=' before the parameter list means initializer or lambda.
            auto eq = t.find('=');
            if (eq != std::string::npos && eq < open)
                return Context::Kind::other;
            // Head must end at/after the closing paren, allowing trailing
            // qualifiers (const, noexcept, override, throws X, -> T, : init()).
            auto close = t.rfind(')');
            if (close == std::string::npos)
                return Context::Kind::other;
            return Context::Kind::function;
        };

        auto begin_head_char = [&](char c) {
            if (head.empty()) {
                if (std::isspace(static_cast<unsigned char>(c)))
                    return; // drop leading whitespace so head start is exact
                head_start_line = line;
            }
            head += c;
        };

        while (i < n) {
            char c = source[i];
            char next = i + 1 < n ? source[i + 1] : '\0';

            if (c == '\n') {
                ++line;
                if (!head.empty())
                    head += ' ';
                ++i;
                continue;
            }
            // Comments.
            if (c == '/' && next == '/') {
                while (i < n && source[i] != '\n')
                    ++i;
                continue;
            }
            if (c == '/' && next == '*') {
                i += 2;
                bool closed = false;
                while (i < n) {
                    if (source[i] == '\n')
                        ++line;
                    if (source[i] == '*' && i + 1 < n && source[i + 1] == '/') {
                        i += 2;
                        closed = true;
                        break;
                    }
                    ++i;
                }
                if (!closed)
                    unterminated = true;
                continue;
            }
            // Preprocessor line (C/C++): consumed whole, #include captured.
            if (!java_ && c == '#' && trim(head).empty()) {
                std::size_t start = i;
                long pp_line = line;
                while (i < n && source[i] != '\n') {
                    if (source[i] == '\\' && i + 1 < n && source[i + 1] == '\n') {
                        ++line;
                        i += 2;
                        continue;
                    }
                    ++i;
                }
                std::string pp = source.substr(start, i - start);
                if (trim(pp).rfind("#include", 0) == 0 || trim(pp).rfind("# include", 0) == 0)
                    out.import_lines.push_back({pp_line, pp});
                head.clear();
                continue;
            }
            // Raw string R"delim( ... )delim" (C++).
            if (!java_ && c == 'R' && next == '"') {
                std::size_t p = i + 2;
                std::string delim;
                while (p < n && source[p] != '(')
                    delim += source[p++];
                std::string closer = ")" + delim + "\"";
                auto end = source.find(closer, p);
                if (end == std::string::npos) {
                    unterminated = true;
                    i = n;
                    continue;
                }
                for (std::size_t k = i; k < end + closer.size(); ++k)
                    if (source[k] == '\n')
                        ++line;
                begin_head_char('"');
                i = end + closer.size();
                continue;
            }
            if (c == '"' || c == '\'') {
                char quote = c;
                begin_head_char(quote);
                ++i;
                while (i < n) {
                    if (source[i] == '\\') {
                        i += 2;
                        continue;
                    }
                    if (source[i] == '\n') {
                        ++line;
                        ++i;
                        continue;
                    }
                    if (source[i] == quote) {
                        ++i;
                        break;
                    }
                    ++i;
                }
                continue;
            }

            if (c == '{') {
                Context ctx;
                ctx.kind = classify(head);
                ctx.start_line = head.empty() ? line : head_start_line;
                bool in_type = false;
                for (const auto& s : stack)
                    if (s.kind == Context::Kind::type)
                        in_type = true;
                bool scoped_name = trim(head).find("::") != std::string::npos;
                ctx.fn_kind = (in_type || scoped_name) ? FunctionSpan::Kind::method : FunctionSpan::Kind::function;
                stack.push_back(ctx);
                head.clear();
                ++i;
                continue;
            }
            if (c == '}') {
                if (!stack.empty()) {
                    Context ctx = stack.back();
                    stack.pop_back();
                    if (ctx.kind == Context::Kind::function)
                        out.function_spans.push_back({ctx.start_line, line, ctx.fn_kind});
                }
                head.clear();
                ++i;
                continue;
            }
            if (c == ';') {
                // Java imports are statements, not preprocessor lines.
                if (java_) {
                    std::string t = trim(head);
                    if (starts_with(t, "import ") && stack.empty())
                        out.import_lines.push_back({head_start_line, t + ";"});
                }
                head.clear();
                ++i;
                continue;
            }

            begin_head_char(c);
            last_line = line;
            ++i;
        }

        (void)last_line;
        if (!stack.empty() || unterminated) {
            out.degraded = true;
            // Close dangling functions at the final line.
            while (!stack.empty()) {
                Context ctx = stack.back();
                stack.pop_back();
                if (ctx.kind == Context::Kind::function)
                    out.function_spans.push_back({ctx.start_line, line, ctx.fn_kind});
            }
        }

        std::sort(out.function_spans.begin(), out.function_spans.end(),
                  [](const FunctionSpan& a, const FunctionSpan& b) { return a.start_line < b.start_line; });
        std::sort(out.import_lines.begin(), out.import_lines.end(),
                  [](const ImportLine& a, const ImportLine& b) { return a.line_number < b.line_number; });
        return out;
    }

private:
    bool java_;
};

} // namespace

OutlinerRegistry OutlinerRegistry::with_builtin() {
    OutlinerRegistry reg;
    auto brace = std::make_shared<const BraceOutliner>(false);
    reg.register_outliner(model::Language::c, brace);
    reg.register_outliner(model::Language::cpp, brace);
    reg.register_outliner(model::Language::java, std::make_shared<const BraceOutliner>(true));
    reg.register_outliner(model::Language::python, std::make_shared<const PythonOutliner>());
    return reg;
}

void OutlinerRegistry::register_outliner(model::Language lang, std::shared_ptr<const Outliner> outliner) {
    outliners_[lang] = std::move(outliner);
}

const Outliner& OutlinerRegistry::get(model::Language lang) const {
    auto it = outliners_.find(lang);
    if (it == outliners_.end())
        throw ParserUnavailable("no outliner registered for language: " + model::to_string(lang));
    return *it->second;
}

SyntaxOutline outline_source(const std::string& source, model::Language lang, const OutlinerRegistry& registry) {
    return registry.get(lang).outline(source);
}

// --- context extension ---

namespace {

LineSpan origin_span_of(const std::vector<Hunk>& hunks) {
    LineSpan span{0, -1};
    bool first = true;
    for (const auto& h : hunks) {
        long s = h.new_len == 0 ? std::max(h.new_start, 1L) : h.new_start;
        long e = h.new_len == 0 ? h.new_start : h.new_end();
        if (first) {
            span = {s, e};
            first = false;
        } else {
            span.first = std::min(span.first, s);
            span.last = std::max(span.last, e);
        }
    }
    return span;
}

bool hunks_match_source(const std::vector<Hunk>& hunks, const std::vector<std::string>& src) {
    const long n = static_cast<long>(src.size());
    for (const auto& h : hunks) {
        long cursor = h.new_start;
        for (const auto& l : h.lines) {
            if (l.tag == LineTag::del)
                continue;
            if (cursor < 1 || cursor > n || src[cursor - 1] != l.text)
                return false;
            ++cursor;
        }
    }
    return true;
}

} // namespace

std::string annotate_hunks_only(const std::vector<Hunk>& hunks) {
    std::vector<std::string> out;
    for (const auto& h : hunks) {
        long cursor = h.new_len == 0 ? h.new_start + 1 : h.new_start;
        for (const auto& l : h.lines) {
            switch (l.tag) {
            case LineTag::ctx:
                out.push_back("[" + std::to_string(cursor) + "] " + l.text);
                ++cursor;
                break;
            case LineTag::add:
                out.push_back("[" + std::to_string(cursor) + "]+" + l.text);
                ++cursor;
                break;
            case LineTag::del:
                out.push_back("[]-" + l.text);
                break;
            }
        }
    }
    return join(out, "\n");
}

std::string annotate_lines(const std::vector<std::string>& src, LineSpan region, const std::vector<Hunk>& hunks) {
    std::vector<const Hunk*> ordered;
    ordered.reserve(hunks.size());
    for (const auto& h : hunks)
        ordered.push_back(&h);
    std::sort(ordered.begin(), ordered.end(),
              [](const Hunk* a, const Hunk* b) { return a->new_start < b->new_start; });

    std::vector<std::string> out;
    const long n = static_cast<long>(src.size());
    long cursor = region.first;
    auto ctx_upto = [&](long limit) {
        while (cursor <= limit && cursor <= region.last && cursor <= n) {
            out.push_back("[" + std::to_string(cursor) + "] " + src[cursor - 1]);
            ++cursor;
        }
    };

    for (const Hunk* h : ordered) {
        if (h->new_len == 0) {
            // Deletion anchored after new-file line new_start.
            ctx_upto(h->new_start);
            for (const auto& l : h->lines)
                if (l.tag == LineTag::del)
                    out.push_back("[]-" + l.text);
            continue;
        }
        ctx_upto(h->new_start - 1);
        for (const auto& l : h->lines) {
            switch (l.tag) {
            case LineTag::ctx:
                out.push_back("[" + std::to_string(cursor) + "] " + l.text);
                ++cursor;
                break;
            case LineTag::add:
                out.push_back("[" + std::to_string(cursor) + "]+" + l.text);
                ++cursor;
                break;
            case LineTag::del:
                out.push_back("[]-" + l.text);
                break;
            }
        }
    }
    ctx_upto(region.last);
    return join(out, "\n");
}

bool annotation_well_formed(const std::string& annotated_text) {
    if (annotated_text.empty())
        return true;
    for (const auto& line : split_lines(annotated_text)) {
        if (starts_with(line, "[]-"))
            continue;
        if (line.size() < 2 || line[0] != '[')
            return false;
        std::size_t p = 1;
        while (p < line.size() && std::isdigit(static_cast<unsigned char>(line[p])))
            ++p;
        if (p == 1 || p >= line.size() || line[p] != ']')
            return false;
        ++p;
        if (p >= line.size() || (line[p] != '+' && line[p] != ' '))
            return false;
    }
    return true;
}

ExtendedDiff extend_diff(const FileDiff& fd, const std::string& source, const SyntaxOutline& outline) {
    ExtendedDiff result;
    result.language = model::language_from_path(fd.new_path).value_or(model::Language::c);

    auto src = split_lines(source);
    const long n = static_cast<long>(src.size());
    LineSpan origin = origin_span_of(fd.hunks);
    result.origin_hunk_span = origin;

    if (!hunks_match_source(fd.hunks, src)) {
        result.fallback_applied = true;
        result.extension_span = origin;
        result.annotated_text = annotate_hunks_only(fd.hunks);
        return result;
    }

    long body_len = 0;
    for (const auto& h : fd.hunks)
        body_len += h.body_line_count();
    const long cap = 3 * body_len;
    const long origin_len = origin.length();

    LineSpan target = origin;
    if (origin_len <= cap) {
        long b_first = 0, b_last = -1;
        bool found = false;
        for (const auto& span : outline.function_spans) {
            if (span.start_line <= origin.last && span.end_line >= origin.first) {
                if (!found) {
                    b_first = span.start_line;
                    b_last = span.end_line;
                    found = true;
                } else {
                    b_first = std::min(b_first, span.start_line);
                    b_last = std::max(b_last, span.end_line);
                }
            }
        }
        if (found) {
            b_first = std::min(b_first, origin.first);
            b_last = std::max(b_last, origin.last);
        }
        if (found && (b_last - b_first + 1) <= cap) {
            target = {b_first, b_last};
        } else {
            // Symmetric extension to exactly the cap, odd remainder after.
            long budget = cap - origin_len;
            long before = budget / 2;
            long after = budget - before;
            target = {origin.first - before, origin.last + after};
            if (target.first < 1) {
                target.last += 1 - target.first;
                target.first = 1;
            }
            if (target.last > n) {
                target.first -= target.last - n;
                target.last = n;
                if (target.first < 1)
                    target.first = 1;
            }
        }
    }
    target.first = std::max(target.first, 1L);
    target.last = std::min(target.last, n);
    if (target.last < target.first)
        target = origin;
    result.extension_span = target;

    // Imports before the extended region, skipping any text already visible.
    std::set<std::string> region_texts;
    for (long ln = target.first; ln <= std::min(target.last, n); ++ln)
        region_texts.insert(src[ln - 1]);
    std::set<std::string> hoisted_seen;
    std::vector<std::string> hoist_rendered;
    for (const auto& imp : outline.import_lines) {
        if (imp.line_number < 1 || imp.line_number >= target.first)
            continue;
        if (region_texts.count(imp.text) || hoisted_seen.count(imp.text))
            continue;
        hoisted_seen.insert(imp.text);
        result.hoisted_imports.push_back(imp.text);
        hoist_rendered.push_back("[" + std::to_string(imp.line_number) + "] " + imp.text);
    }

    std::string body = annotate_lines(src, target, fd.hunks);
    if (!hoist_rendered.empty())
        result.annotated_text = join(hoist_rendered, "\n") + (body.empty() ? "" : "\n" + body);
    else
        result.annotated_text = body;
    return result;
}

// --- extended record serialization ---

std::string encode_extended_record(const ExtendedSeriesRecord& record) {
    auto j = nlohmann::ordered_json::parse(model::encode_series(record.series));
    j["extended_diff"] = record.extended_diff;
    j["fallback_applied"] = record.fallback_applied;
    return j.dump();
}

ExtendedSeriesRecord decode_extended_record(const std::string& line) {
    auto j = nlohmann::ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw MalformedRecord("extended record is not a JSON object");
    ExtendedSeriesRecord rec;
    if (auto it = j.find("extended_diff"); it != j.end()) {
        rec.extended_diff = it->get<std::string>();
        j.erase(it);
    } else {
        throw SchemaViolation("extended_diff", "missing");
    }
    if (auto it = j.find("fallback_applied"); it != j.end()) {
        rec.fallback_applied = it->get<bool>();
        j.erase(it);
    } else {
        throw SchemaViolation("fallback_applied", "missing");
    }
    rec.series = model::decode_series(j.dump());
    return rec;
}

} // namespace laura::diffctx
