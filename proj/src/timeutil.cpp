#include "laura/timeutil.hpp"

#include <cctype>
#include <cstdio>

namespace laura {

namespace {

bool read_digits(std::string_view s, std::size_t& pos, int count, long& out) {
    long v = 0;
    for (int i = 0; i < count; ++i) {
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            return false;
        v = v * 10 + (s[pos] - '0');
        ++pos;
    }
    out = v;
    return true;
}

// Days since 1970-01-01 for a civil date (Howard Hinnant's algorithm).
std::int64_t days_from_civil(long y, long m, long d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, long& y, long& m, long& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<long>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<long>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<long>(mp + (mp < 10 ? 3 : -9));
    y += m <= 2;
}

bool valid_date(long y, long m, long d) {
    if (m < 1 || m > 12 || d < 1)
        return false;
    static const int mdays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int max_d = mdays[m - 1];
    bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    if (m == 2 && leap)
        max_d = 29;
    return d <= max_d;
}

} // namespace

std::optional<UtcSeconds> parse_rfc3339(std::string_view s) {
    std::size_t pos = 0;
    long y, mo, d, h, mi, se;
    if (!read_digits(s, pos, 4, y))
        return std::nullopt;
    if (pos >= s.size() || s[pos++] != '-')
        return std::nullopt;
    if (!read_digits(s, pos, 2, mo))
        return std::nullopt;
    if (pos >= s.size() || s[pos++] != '-')
        return std::nullopt;
    if (!read_digits(s, pos, 2, d))
        return std::nullopt;
    if (pos >= s.size() || (s[pos] != 'T' && s[pos] != 't' && s[pos] != ' '))
        return std::nullopt;
    ++pos;
    if (!read_digits(s, pos, 2, h))
        return std::nullopt;
    if (pos >= s.size() || s[pos++] != ':')
        return std::nullopt;
    if (!read_digits(s, pos, 2, mi))
        return std::nullopt;
    if (pos >= s.size() || s[pos++] != ':')
        return std::nullopt;
    if (!read_digits(s, pos, 2, se))
        return std::nullopt;
    if (!valid_date(y, mo, d) || h > 23 || mi > 59 || se > 60)
        return std::nullopt;
    if (se == 60) // leap second: clamp
        se = 59;

    // Fractional seconds: truncated.
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            return std::nullopt;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    long offset_seconds = 0;
    if (pos >= s.size())
        return std::nullopt;
    char c = s[pos];
    if (c == 'Z' || c == 'z') {
        ++pos;
    } else if (c == '+' || c == '-') {
        ++pos;
        long oh, om;
        if (!read_digits(s, pos, 2, oh))
            return std::nullopt;
        if (pos >= s.size() || s[pos++] != ':')
            return std::nullopt;
        if (!read_digits(s, pos, 2, om))
            return std::nullopt;
        if (oh > 23 || om > 59)
            return std::nullopt;
        offset_seconds = (oh * 3600 + om * 60) * (c == '+' ? 1 : -1);
    } else {
        return std::nullopt;
    }
    if (pos != s.size())
        return std::nullopt;

    std::int64_t days = days_from_civil(y, mo, d);
    return days * 86400 + h * 3600 + mi * 60 + se - offset_seconds;
}

std::optional<UtcSeconds> parse_utc_date(std::string_view s) {
    std::size_t pos = 0;
    long y, mo, d;
    if (!read_digits(s, pos, 4, y))
        return std::nullopt;
    if (pos >= s.size() || s[pos++] != '-')
        return std::nullopt;
    if (!read_digits(s, pos, 2, mo))
        return std::nullopt;
    if (pos >= s.size() || s[pos++] != '-')
        return std::nullopt;
    if (!read_digits(s, pos, 2, d))
        return std::nullopt;
    if (pos != s.size() || !valid_date(y, mo, d))
        return std::nullopt;
    return days_from_civil(y, mo, d) * 86400;
}

std::string format_rfc3339(UtcSeconds t) {
    std::int64_t days = t / 86400;
    std::int64_t rem = t % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    long y, m, d;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04ld-%02ld-%02ldT%02lld:%02lld:%02lldZ", y, m, d,
                  static_cast<long long>(rem / 3600), static_cast<long long>((rem / 60) % 60),
                  static_cast<long long>(rem % 60));
    return buf;
}

} // namespace laura
