#include <demon/label_order.hpp>

#include <algorithm>

namespace demon {

namespace {

bool all_digits(std::string_view s) noexcept {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_zeros(std::string_view s) noexcept {
    const auto first = s.find_first_not_of('0');
    return first == std::string_view::npos ? std::string_view{} : s.substr(first);
}

} // namespace

bool label_less(std::string_view a, std::string_view b) noexcept {
    const bool na = all_digits(a);
    const bool nb = all_digits(b);
    if (na != nb)
        return na;
    if (na) {
        const auto sa = strip_zeros(a);
        const auto sb = strip_zeros(b);
        if (sa.size() != sb.size())
            return sa.size() < sb.size();
        if (sa != sb)
            return sa < sb;
        // "01" vs "1": equal value, fall through to bytewise
    }
    return a < b;
}

} // namespace demon
