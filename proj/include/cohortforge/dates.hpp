#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace cohortforge {

/// Calendar date, day granularity. All dates in the pipeline are ISO-8601
/// "YYYY-MM-DD" strings on disk and this struct in memory.
struct Date {
    int year = 0;
    int month = 0;  // 1..12
    int day = 0;    // 1..31

    auto operator<=>(const Date&) const = default;

    bool valid() const;

    /// Days since 1970-01-01 (can be negative).
    std::int64_t serial() const;

    static Date from_serial(std::int64_t days);

    Date plus_days(std::int64_t n) const { return from_serial(serial() + n); }

    std::string to_string() const;

    /// Strict "YYYY-MM-DD" parse; nullopt on any malformed or invalid date.
    static std::optional<Date> parse(const std::string& text);
};

/// Signed day count b - a.
inline std::int64_t days_between(const Date& a, const Date& b) {
    return b.serial() - a.serial();
}

/// Completed years of age at index_date, birthday-exact: the birthday itself
/// counts as completed. Throws ValidationError("FutureBirthDate") if
/// birth_date > index_date.
int age_at(const Date& birth_date, const Date& index_date);

}  // namespace cohortforge
